#include "blowup/dimacs.hpp"

#include "blowup/error.hpp"

#include <fstream>
#include <optional>
#include <sstream>
#include <string>

namespace blowup::dimacs {

namespace {

[[noreturn]] void fail(std::size_t line, const std::string& what)
{
    throw ParseError("line " + std::to_string(line) + ": " + what, line);
}

} // namespace

Graph read(std::istream& in)
{
    std::optional<GraphBuilder> builder;
    std::size_t n = 0;
    std::size_t line_no = 0;
    for (std::string line; std::getline(in, line);) {
        ++line_no;
        std::istringstream iss(line);
        std::string kind;
        if (!(iss >> kind) || kind == "c")
            continue;
        if (kind == "p") {
            std::string format;
            long long nv = -1;
            long long ne = -1;
            if (!(iss >> format >> nv >> ne) || (format != "edge" && format != "col"))
                fail(line_no, "malformed header, expected 'p edge <n> <m>'");
            if (nv < 0 || ne < 0)
                fail(line_no, "negative count in header");
            std::string extra;
            if (iss >> extra)
                fail(line_no, "trailing token '" + extra + "' in header");
            if (builder)
                fail(line_no, "duplicate 'p' header");
            n = static_cast<std::size_t>(nv);
            builder.emplace(n);
        } else if (kind == "e") {
            if (!builder)
                fail(line_no, "edge line before 'p' header");
            long long u = 0;
            long long v = 0;
            if (!(iss >> u >> v))
                fail(line_no, "malformed edge line, expected 'e <u> <v>'");
            std::string extra;
            if (iss >> extra)
                fail(line_no, "trailing token '" + extra + "' in edge line");
            const auto in_range = [n](long long x) { return x >= 1 && static_cast<unsigned long long>(x) <= n; };
            if (!in_range(u) || !in_range(v))
                fail(line_no, "vertex index out of range [1, " + std::to_string(n) + "]");
            if (u == v)
                fail(line_no, "self-loop on vertex " + std::to_string(u));
            builder->add_edge(static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1));
        } else {
            fail(line_no, "unknown line type '" + kind + "'");
        }
    }
    if (!builder)
        fail(line_no, "missing 'p edge <n> <m>' header");
    return std::move(*builder).build();
}

Graph read_file(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open graph file '" + path.string() + "'", 0);
    return read(in);
}

void write(std::ostream& out, const Graph& g)
{
    out << "p edge " << g.order() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges())
        out << "e " << u + 1 << ' ' << v + 1 << '\n';
}

void write_file(const std::filesystem::path& path, const Graph& g)
{
    std::ofstream out(path);
    if (!out)
        throw InvalidParameter("cannot open '" + path.string() + "' for writing");
    write(out, g);
}

} // namespace blowup::dimacs
