// blowup: command-line front end for the clique-blowup coloring toolkit.
//
// Exit codes: 0 success, 1 verification failure, 2 parse or parameter error,
// 3 budget exhausted. Diagnostics go to stderr, results to stdout or --out.

#include "blowup/canonical.hpp"
#include "blowup/coloring.hpp"
#include "blowup/constructions.hpp"
#include "blowup/dimacs.hpp"
#include "blowup/error.hpp"
#include "blowup/io.hpp"
#include "blowup/scan.hpp"
#include "blowup/solvers.hpp"
#include "blowup/spectral.hpp"
#include "blowup/witness_report.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

using namespace blowup;

namespace {

enum Exit : int { ok = 0, verification_failed = 1, bad_input = 2, timed_out = 3 };

struct Common {
    std::uint64_t budget_nodes = Budget{}.max_nodes;
    double budget_seconds = 0.0;
    std::string out;
    std::string format = "text";

    Budget budget() const
    {
        Budget b;
        b.max_nodes = budget_nodes;
        if (budget_seconds > 0.0)
            b.max_seconds = budget_seconds;
        return b;
    }
};

void add_budget(CLI::App* cmd, Common& c)
{
    cmd->add_option("--budget-nodes", c.budget_nodes, "Search node limit");
    cmd->add_option("--budget-seconds", c.budget_seconds, "Wall-clock limit in seconds (0 = none)");
}

void add_format(CLI::App* cmd, Common& c)
{
    cmd->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"text", "csv", "json"}));
}

/// Writes to --out when given, otherwise to stdout.
void emit(const Common& c, const std::string& text)
{
    if (c.out.empty())
        std::cout << text;
    else
        io::write_text(c.out, text);
}

std::string dimacs_text(const Graph& g)
{
    std::ostringstream ss;
    dimacs::write(ss, g);
    return ss.str();
}

std::string fixed(double x, int digits)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", digits, x);
    return buf;
}

int report_count(const Common& c, const char* what, const CountResult& r, bool verified)
{
    if (r.timed_out) {
        std::cerr << what << ": budget exhausted after " << r.nodes_explored << " nodes\n";
        return timed_out;
    }
    if (!verified) {
        std::cerr << what << ": certificate failed verification\n";
        return verification_failed;
    }
    if (c.format == "json") {
        nlohmann::ordered_json j;
        j["value"] = *r.value;
        j["nodes"] = r.nodes_explored;
        j["colors"] = r.certificate->colors();
        std::cout << j.dump() << '\n';
    } else {
        std::cout << *r.value << '\n';
    }
    if (!c.out.empty())
        io::write_text(c.out, io::format_coloring(*r.certificate));
    return ok;
}

int cmd_chi(const Common& c, const std::string& graph_path)
{
    const Graph g = dimacs::read_file(graph_path);
    const auto r = chromatic_number(g, c.budget());
    const bool verified = r.timed_out || (is_proper(g, *r.certificate) && r.certificate->palette_size() == *r.value);
    return report_count(c, "chi", r, verified);
}

int cmd_chi_defective(const Common& c, const std::string& graph_path, std::size_t d)
{
    const Graph g = dimacs::read_file(graph_path);
    const auto r = defective_chromatic_number(g, d, c.budget());
    const bool verified =
        r.timed_out || (is_d_defective(g, *r.certificate, d) && r.certificate->palette_size() == *r.value);
    return report_count(c, "chi-defective", r, verified);
}

int cmd_product(const Common& c, const std::string& graph_path, std::size_t t)
{
    const Graph g = dimacs::read_file(graph_path);
    emit(c, dimacs_text(strong_product(g, t).product()));
    return ok;
}

int cmd_lift(const Common& c, const std::string& graph_path, const std::string& coloring_path, std::size_t t)
{
    const Graph g = dimacs::read_file(graph_path);
    const Coloring col = io::parse_coloring(io::read_text(coloring_path));
    const Coloring lifted = lift_proper_to_defective(g, col, t);
    const std::size_t def = defect(strong_product(g, t).product(), lifted);
    std::cerr << "lifted " << col.palette_size() << " colors to G x K_" << t << ", defect " << def << '\n';
    emit(c, io::format_coloring(lifted));
    return def + 1 <= t || g.order() == 0 ? ok : verification_failed;
}

int cmd_extract(const Common& c, const std::string& graph_path, const std::string& coloring_path, std::size_t d)
{
    const Graph g = dimacs::read_file(graph_path);
    const Coloring col = io::parse_coloring(io::read_text(coloring_path));
    const auto x = extract_proper_from_defective(g, d, col, c.budget());
    const bool proper = is_proper(g, x.coloring);
    const bool within = x.coloring.palette_size() <= 2 * col.palette_size();
    std::cerr << "auxiliary graph: " << x.auxiliary.order() << " vertices, max degree " << x.auxiliary_max_degree
              << "; extracted " << x.coloring.palette_size() << " colors from k = " << col.palette_size() << '\n';
    if (c.format == "json") {
        nlohmann::ordered_json j;
        j["colors_used"] = x.coloring.palette_size();
        j["k"] = col.palette_size();
        j["proper"] = proper;
        j["transversal"] = x.transversal;
        std::cout << j.dump() << '\n';
    } else {
        std::cout << x.coloring.palette_size() << '\n';
    }
    if (!c.out.empty())
        io::write_text(c.out, io::format_coloring(x.coloring));
    return proper && within ? ok : verification_failed;
}

int cmd_join_lift(const Common& c, const std::string& graph_path, const std::string& coloring_path,
                  std::size_t delta, std::size_t m, std::size_t d, const std::string& graph_out)
{
    const Graph g0 = dimacs::read_file(graph_path);
    const Coloring c0 = io::parse_coloring(io::read_text(coloring_path));
    const auto jl = corollary_join_lift(g0, c0, delta, m, d);
    const std::size_t def = defect(strong_product(jl.joined, d + 1).product(), jl.coloring);
    std::cerr << "join of " << m << " copies: " << jl.joined.order() << " vertices, " << jl.coloring.palette_size()
              << " colors (r = " << jl.block_width << "), defect " << def << " on the K_" << d + 1 << " blowup\n";
    if (!graph_out.empty())
        dimacs::write_file(graph_out, jl.joined);
    emit(c, io::format_coloring(jl.coloring));
    return def <= d ? ok : verification_failed;
}

int cmd_construct(const Common& c, const std::string& witness_path, const std::string& cd_out)
{
    const Witness raw = io::parse_witness(io::read_text(witness_path));
    const Witness w = normalize_witness(raw);
    const auto b = build_counterexample(w);
    const Coloring cd = defective_coloring_cd(w, b);
    const std::size_t def = defect(strong_product(b.G, w.d + 1).product(), cd);
    const std::size_t mcd = max_color_degree(w.F, w.lists);
    std::cerr << "G: " << b.G.order() << " vertices (" << b.f_order << " from F, clique of " << b.k << "), "
              << b.G.edge_count() << " edges; c^d uses " << cd.palette_size() << " colors with defect " << def
              << " (d = " << w.d << ", max color degree " << mcd << ")\n";
    emit(c, dimacs_text(b.G));
    if (!cd_out.empty())
        io::write_text(cd_out, io::format_coloring(cd));
    return def <= w.d ? ok : verification_failed;
}

int cmd_validate_witness(const Common& c, const std::string& witness_path)
{
    const Witness w = io::parse_witness(io::read_text(witness_path));
    const auto r = validate_witness(w, c.budget());
    if (c.format == "json") {
        nlohmann::ordered_json j;
        j["d"] = r.d;
        j["k"] = r.k;
        j["list_sizes"] = std::string(to_string(r.list_sizes));
        j["min_list_size"] = r.min_list_size;
        j["color_degrees"] = std::string(to_string(r.color_degrees));
        j["max_color_degree"] = r.max_color_degree;
        j["no_list_coloring"] = std::string(to_string(r.no_list_coloring));
        j["formula_k"] = r.formula_k;
        j["palette_matches_formula"] = r.palette_matches_formula;
        std::cout << j.dump() << '\n';
    } else {
        std::cout << "list sizes >= d+1:     " << to_string(r.list_sizes) << " (min " << r.min_list_size
                  << ", d+1 = " << r.d + 1 << ")\n"
                  << "color degrees <= d:    " << to_string(r.color_degrees) << " (max " << r.max_color_degree
                  << ")\n"
                  << "no L-coloring:         " << to_string(r.no_list_coloring) << '\n'
                  << "palette size:          " << (r.palette_matches_formula ? "matches" : "differs")
                  << " (k = " << r.k << ", 2d^3+2d^2+d+3 = " << r.formula_k << "; informational)\n";
    }
    if (r.list_sizes == CheckStatus::fail || r.color_degrees == CheckStatus::fail ||
        r.no_list_coloring == CheckStatus::fail)
        return verification_failed;
    return r.no_list_coloring == CheckStatus::unverified ? timed_out : ok;
}

int cmd_hoffman(const Common& c, const std::string& graph_path)
{
    const Graph g = dimacs::read_file(graph_path);
    const auto h = hoffman_bound(g);
    if (h.edgeless)
        std::cerr << "edgeless graph: bound reported as 1 by convention\n";
    if (c.format == "json") {
        nlohmann::ordered_json j;
        j["lambda_max"] = h.lambda_max;
        j["lambda_min"] = h.lambda_min;
        j["bound"] = h.value;
        j["edgeless"] = h.edgeless;
        std::cout << j.dump() << '\n';
    } else {
        std::cout << fixed(h.value, 12) << '\n';
    }
    return ok;
}

int cmd_scan(const Common& c, ScanOptions options)
{
    options.budget = c.budget();
    const auto s = scan(options);
    for (const auto& skip : s.skipped)
        std::cerr << "skip " << skip.id << " n=" << skip.n << ": " << skip.reason << '\n';

    std::ostringstream summary;
    summary << "records " << s.records.size() << ", skipped " << s.skipped.size() << ", equality cases "
            << s.equality_count;
    if (s.max_ratio)
        summary << ", max ratio " << s.max_ratio->num << '/' << s.max_ratio->den << " (" << fixed(s.max_ratio->value(), 6)
                << ") at " << s.argmax_id;
    summary << "; reference 30/29 = " << fixed(reference_ratio.value(), 6);

    std::ostringstream out;
    if (c.format == "json") {
        nlohmann::ordered_json j;
        j["d"] = options.d;
        auto& recs = j["records"] = nlohmann::ordered_json::array();
        for (const auto& r : s.records)
            recs.push_back({{"id", r.id}, {"n", r.n}, {"m", r.m}, {"d", r.d}, {"chi", r.chi},
                            {"chi_def_blowup", r.chi_def_blowup}, {"ratio_num", r.ratio.num},
                            {"ratio_den", r.ratio.den}, {"ratio", r.ratio.value()}});
        auto& skipped = j["skipped"] = nlohmann::ordered_json::array();
        for (const auto& k : s.skipped)
            skipped.push_back({{"id", k.id}, {"n", k.n}, {"reason", k.reason}});
        j["equality_count"] = s.equality_count;
        if (s.max_ratio) {
            j["max_ratio_num"] = s.max_ratio->num;
            j["max_ratio_den"] = s.max_ratio->den;
            j["argmax_id"] = s.argmax_id;
        }
        out << j.dump() << '\n';
    } else if (c.format == "csv") {
        out << "id,n,m,d,chi,chi_def_blowup,ratio_num,ratio_den,ratio\n";
        for (const auto& r : s.records)
            out << r.id << ',' << r.n << ',' << r.m << ',' << r.d << ',' << r.chi << ',' << r.chi_def_blowup << ','
                << r.ratio.num << ',' << r.ratio.den << ',' << fixed(r.ratio.value(), 6) << '\n';
        std::cerr << summary.str() << '\n';
    } else {
        for (const auto& r : s.records)
            out << r.id << "  n=" << r.n << " m=" << r.m << "  chi=" << r.chi << "  chi^" << r.d
                << "(blowup)=" << r.chi_def_blowup << "  ratio=" << r.ratio.num << '/' << r.ratio.den << '\n';
        out << summary.str() << '\n';
    }
    emit(c, out.str());
    return ok;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Defective colorings of clique blowups: constructions, exact solvers and checks"};
    app.require_subcommand(1);
    Common common;
    std::string input;
    std::string coloring_path;
    std::size_t d = 1;
    std::size_t t = 1;
    std::size_t delta = 1;
    std::size_t m = 1;
    std::string graph_out;
    std::string cd_out;
    ScanOptions scan_options;

    auto* validate = app.add_subcommand("validate-witness", "Check the witness properties of (F, L, d)");
    validate->add_option("witness", input, "Witness JSON file")->required();
    add_budget(validate, common);
    add_format(validate, common);

    auto* construct = app.add_subcommand("construct", "Build G from a witness and its c^d coloring");
    construct->add_option("witness", input, "Witness JSON file")->required();
    construct->add_option("--out", common.out, "Write G (DIMACS) here instead of stdout");
    construct->add_option("--coloring-out", cd_out, "Write c^d on G x K_{d+1} (coloring JSON)");

    auto* product = app.add_subcommand("product", "Strong product G x K_t");
    product->add_option("graph", input, "DIMACS graph")->required();
    product->add_option("--t", t, "Fiber size")->required();
    product->add_option("--out", common.out, "Output DIMACS file");

    auto* chi = app.add_subcommand("chi", "Exact chromatic number");
    chi->add_option("graph", input, "DIMACS graph")->required();
    chi->add_option("--out", common.out, "Write the certificate coloring here");
    add_budget(chi, common);
    add_format(chi, common);

    auto* chi_def = app.add_subcommand("chi-defective", "Exact d-defective chromatic number");
    chi_def->add_option("graph", input, "DIMACS graph")->required();
    chi_def->add_option("--d", d, "Defect")->required();
    chi_def->add_option("--out", common.out, "Write the certificate coloring here");
    add_budget(chi_def, common);
    add_format(chi_def, common);

    auto* extract = app.add_subcommand("extract", "Proper coloring of G from a d-defective coloring of G x K_d");
    extract->add_option("graph", input, "DIMACS graph G")->required();
    extract->add_option("--d", d, "Defect (>= 1)")->required();
    extract->add_option("--coloring", coloring_path, "Coloring JSON on G x K_d")->required();
    extract->add_option("--out", common.out, "Write the extracted coloring here");
    add_budget(extract, common);
    add_format(extract, common);

    auto* join_lift = app.add_subcommand("join-lift", "Join m copies and stretch a base defective coloring");
    join_lift->add_option("graph", input, "DIMACS base graph g0")->required();
    join_lift->add_option("--coloring", coloring_path, "delta-defective coloring JSON on g0 x K_{delta+1}")
        ->required();
    join_lift->add_option("--delta", delta, "Defect of the base coloring")->required();
    join_lift->add_option("--m", m, "Number of copies")->required();
    join_lift->add_option("--d", d, "Target defect; delta + 1 must divide d + 1")->required();
    join_lift->add_option("--graph-out", graph_out, "Write the joined graph (DIMACS)");
    join_lift->add_option("--out", common.out, "Write the coloring here instead of stdout");

    auto* lift = app.add_subcommand("lift", "Lift a proper coloring of G to G x K_t");
    lift->add_option("graph", input, "DIMACS graph")->required();
    lift->add_option("--coloring", coloring_path, "Proper coloring JSON")->required();
    lift->add_option("--t", t, "Fiber size")->required();
    lift->add_option("--out", common.out, "Write the coloring here instead of stdout");

    auto* scan_cmd = app.add_subcommand("scan", "Scan chi(G) / chi^d(G x K_{d+1}) over small graphs");
    scan_cmd->add_option("--n-max", scan_options.n_max, "Largest order")->check(CLI::Range(1, 10));
    scan_cmd->add_option("--d", scan_options.d, "Defect");
    scan_cmd->add_option("--sample", scan_options.sample, "Random samples per order above --exhaustive-max");
    scan_cmd->add_option("--exhaustive-max", scan_options.exhaustive_max, "Enumerate all graphs up to this order")
        ->check(CLI::Range(0, 6));
    scan_cmd->add_option("--seed", scan_options.seed, "Sampling seed");
    scan_cmd->add_option("--p", scan_options.edge_probability, "Edge probability for samples")
        ->check(CLI::Range(0.0, 1.0));
    scan_cmd->add_option("--out", common.out, "Output file");
    add_budget(scan_cmd, common);
    add_format(scan_cmd, common);

    auto* hoffman = app.add_subcommand("hoffman", "Hoffman spectral bound (l1 - ln) / (-ln)");
    hoffman->add_option("graph", input, "DIMACS graph")->required();
    add_format(hoffman, common);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return bad_input;
    }

    try {
        if (validate->parsed())
            return cmd_validate_witness(common, input);
        if (construct->parsed())
            return cmd_construct(common, input, cd_out);
        if (product->parsed())
            return cmd_product(common, input, t);
        if (chi->parsed())
            return cmd_chi(common, input);
        if (chi_def->parsed())
            return cmd_chi_defective(common, input, d);
        if (extract->parsed())
            return cmd_extract(common, input, coloring_path, d);
        if (join_lift->parsed())
            return cmd_join_lift(common, input, coloring_path, delta, m, d, graph_out);
        if (lift->parsed())
            return cmd_lift(common, input, coloring_path, t);
        if (scan_cmd->parsed())
            return cmd_scan(common, scan_options);
        if (hoffman->parsed())
            return cmd_hoffman(common, input);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return bad_input;
    } catch (const InvalidParameter& e) {
        std::cerr << "error: " << e.what() << '\n';
        return bad_input;
    } catch (const InvalidWitness& e) {
        std::cerr << "error: " << e.what() << '\n';
        return bad_input;
    } catch (const InternalError& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return verification_failed;
    }
    return bad_input;
}
