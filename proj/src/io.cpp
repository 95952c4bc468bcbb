#include "blowup/io.hpp"

#include "blowup/error.hpp"

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <limits>
#include <sstream>

namespace blowup::io {

namespace {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

[[noreturn]] void bad(const std::string& field, const std::string& what)
{
    throw ParseError("field '" + field + "': " + what, 0, field);
}

json parse_object(std::string_view text)
{
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what(), 0);
    }
    return j;
}

const json& member(const json& obj, const std::string& field)
{
    if (!obj.is_object())
        bad(field, "enclosing value is not an object");
    const auto it = obj.find(field);
    if (it == obj.end())
        bad(field, "missing");
    return *it;
}

long long integer(const json& j, const std::string& field)
{
    if (!j.is_number_integer())
        bad(field, "expected an integer");
    return j.get<long long>();
}

std::size_t count(const json& obj, const std::string& field)
{
    const long long v = integer(member(obj, field), field);
    if (v < 0)
        bad(field, "must be non-negative");
    return static_cast<std::size_t>(v);
}

std::vector<Color> color_array(const json& j, const std::string& field)
{
    if (!j.is_array())
        bad(field, "expected an array");
    std::vector<Color> out;
    out.reserve(j.size());
    for (std::size_t i = 0; i < j.size(); ++i) {
        const std::string at = field + "[" + std::to_string(i) + "]";
        const long long v = integer(j[i], at);
        if (v < 0 || v > std::numeric_limits<Color>::max())
            bad(at, "color out of range");
        out.push_back(static_cast<Color>(v));
    }
    return out;
}

std::vector<std::vector<Color>> list_array(const json& j, std::size_t n, const std::string& field)
{
    if (!j.is_array())
        bad(field, "expected an array");
    if (j.size() != n)
        bad(field, "has " + std::to_string(j.size()) + " entries, expected n = " + std::to_string(n));
    std::vector<std::vector<Color>> lists;
    lists.reserve(n);
    for (std::size_t v = 0; v < n; ++v) {
        const std::string at = field + "[" + std::to_string(v) + "]";
        auto l = color_array(j[v], at);
        std::vector<Color> sorted = l;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            bad(at, "duplicate color in list");
        lists.push_back(std::move(l));
    }
    return lists;
}

std::string finish(const ordered_json& j) { return j.dump() + "\n"; }

} // namespace

Coloring parse_coloring(std::string_view text)
{
    const json j = parse_object(text);
    const std::size_t n = count(j, "n");
    auto colors = color_array(member(j, "colors"), "colors");
    if (colors.size() != n)
        bad("colors", "has " + std::to_string(colors.size()) + " entries, expected n = " + std::to_string(n));
    return Coloring(std::move(colors));
}

std::string format_coloring(const Coloring& c)
{
    ordered_json j;
    j["n"] = c.size();
    j["colors"] = c.colors();
    return finish(j);
}

ListAssignment parse_lists(std::string_view text)
{
    const json j = parse_object(text);
    const std::size_t n = count(j, "n");
    return ListAssignment(list_array(member(j, "lists"), n, "lists"));
}

std::string format_lists(const ListAssignment& lists)
{
    ordered_json j;
    j["n"] = lists.size();
    j["lists"] = lists.lists();
    return finish(j);
}

Witness parse_witness(std::string_view text)
{
    const json j = parse_object(text);
    const std::size_t d = count(j, "d");
    const json& f = member(j, "F");
    const std::size_t n = count(f, "n");
    const json& edges = member(f, "edges");
    if (!edges.is_array())
        bad("F.edges", "expected an array");
    GraphBuilder b(n);
    for (std::size_t e = 0; e < edges.size(); ++e) {
        const std::string at = "F.edges[" + std::to_string(e) + "]";
        if (!edges[e].is_array() || edges[e].size() != 2)
            bad(at, "expected a pair [u, v]");
        const long long u = integer(edges[e][0], at);
        const long long v = integer(edges[e][1], at);
        if (u < 0 || v < 0 || static_cast<std::size_t>(u) >= n || static_cast<std::size_t>(v) >= n)
            bad(at, "endpoint outside [0, " + std::to_string(n) + ")");
        if (u == v)
            bad(at, "self-loop");
        b.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
    }
    auto lists = list_array(member(j, "lists"), n, "lists");
    return Witness::make(std::move(b).build(), ListAssignment(std::move(lists)), d);
}

std::string format_witness(const Witness& w)
{
    ordered_json j;
    j["d"] = w.d;
    ordered_json f;
    f["n"] = w.F.order();
    ordered_json edges = ordered_json::array();
    for (auto [u, v] : w.F.edges())
        edges.push_back({u, v});
    f["edges"] = std::move(edges);
    j["F"] = std::move(f);
    j["lists"] = w.lists.lists();
    return finish(j);
}

VertexPartition parse_partition(std::string_view text)
{
    const json j = parse_object(text);
    const json& parts = member(j, "parts");
    if (!parts.is_array())
        bad("parts", "expected an array");
    std::vector<std::vector<Vertex>> out;
    std::size_t total = 0;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        const std::string at = "parts[" + std::to_string(i) + "]";
        auto members = color_array(parts[i], at);
        total += members.size();
        out.emplace_back(members.begin(), members.end());
    }
    try {
        return VertexPartition(total, std::move(out));
    } catch (const InvalidParameter& e) {
        bad("parts", e.what());
    }
}

std::string format_transversal(const std::vector<Vertex>& vertices)
{
    return ordered_json(vertices).dump() + "\n";
}

std::string read_text(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ParseError("cannot open '" + path.string() + "'", 0);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text(const std::filesystem::path& path, std::string_view text)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw InvalidParameter("cannot open '" + path.string() + "' for writing");
    out << text;
}

} // namespace blowup::io
