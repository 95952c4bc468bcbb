#include <doctest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace {

struct Run {
    int status;
    std::string out;
};

const std::string data = BLOWUP_TEST_DATA;

/// Runs the CLI with stderr folded into the captured text only when asked.
Run cli(const std::string& args, bool with_stderr = false)
{
    const std::string cmd = std::string("\"") + BLOWUP_CLI_PATH + "\" " + args + (with_stderr ? " 2>&1" : " 2>/dev/null");
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf{};
    std::size_t got;
    while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0)
        out.append(buf.data(), got);
    const int raw = pclose(pipe);
    return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

std::filesystem::path scratch(const std::string& name)
{
    const auto dir = std::filesystem::temp_directory_path() / "blowup_cli_test";
    std::filesystem::create_directories(dir);
    return dir / name;
}

std::string slurp(const std::filesystem::path& p)
{
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

TEST_CASE("chi and chi-defective")
{
    CHECK(cli("chi " + data + "/c5.col").out == "3\n");
    CHECK(cli("chi " + data + "/k33.col").out == "2\n");
    CHECK(cli("chi-defective " + data + "/c5.col --d 1").out == "2\n");
    CHECK(cli("chi-defective " + data + "/c5.col --d 2").out == "1\n");

    const auto cert = scratch("c5_chi.json");
    const auto r = cli("chi " + data + "/c5.col --format json --out " + cert.string());
    CHECK(r.status == 0);
    CHECK(r.out.rfind("{\"value\":3,", 0) == 0);
    CHECK(slurp(cert).rfind("{\"n\":5,\"colors\":[", 0) == 0);
}

TEST_CASE("exit codes for bad input")
{
    const auto bad = scratch("bad.col");
    std::ofstream(bad) << "p edge 2 1\ne 1 3\n";
    const auto r = cli("chi " + bad.string(), true);
    CHECK(r.status == 2);
    CHECK(r.out.find("line 2") != std::string::npos);

    CHECK(cli("chi").status == 2);
    CHECK(cli("no-such-verb").status == 2);
    CHECK(cli("chi " + data + "/missing.col").status == 2);
    CHECK(cli("chi-defective " + data + "/c5.col --d -1").status == 2);
    CHECK(cli("scan --format xml").status == 2);
    CHECK(cli("--help").status == 0);
}

TEST_CASE("timeout exit code")
{
    // A tiny node budget cannot settle chi of the Petersen blowup.
    const auto g = scratch("pet.col");
    CHECK(cli("product " + data + "/c5.col --t 4 --out " + g.string()).status == 0);
    const auto r = cli("chi-defective " + g.string() + " --d 1 --budget-nodes 3", true);
    CHECK(r.status == 3);
    CHECK(r.out.find("budget") != std::string::npos);
}

TEST_CASE("product writes DIMACS")
{
    const auto r = cli("product " + data + "/k2.col --t 2");
    CHECK(r.status == 0);
    CHECK(r.out == "p edge 4 6\ne 1 2\ne 1 3\ne 1 4\ne 2 3\ne 2 4\ne 3 4\n");
}

TEST_CASE("hoffman")
{
    CHECK(cli("hoffman " + data + "/k33.col").out == "2.000000000000\n");
    CHECK(cli("hoffman " + data + "/k2.col").out == "2.000000000000\n");
    CHECK(cli("hoffman " + data + "/c5.col").out == "2.236067977500\n");
}

TEST_CASE("validate-witness")
{
    auto r = cli("validate-witness " + data + "/witness_k3.json");
    CHECK(r.status == 1);
    CHECK(r.out.find("color degrees <= d:    FAIL (max 2)") != std::string::npos);
    CHECK(r.out.find("no L-coloring:         pass") != std::string::npos);

    r = cli("validate-witness " + data + "/witness_p3.json --format json");
    CHECK(r.status == 1);
    CHECK(r.out.find("\"no_list_coloring\":\"FAIL\"") != std::string::npos);
    CHECK(r.out.find("\"formula_k\":8") != std::string::npos);
}

TEST_CASE("construct")
{
    auto r = cli("construct " + data + "/witness_short.json", true);
    CHECK(r.status == 2);
    CHECK(r.out.find("vertex 1") != std::string::npos);

    const auto g = scratch("g.col");
    const auto cd = scratch("cd.json");
    // The middle vertex of P3 sees color 0 twice, so c^d cannot be 1-defective.
    r = cli("construct " + data + "/witness_p3.json", true);
    CHECK(r.status == 1);
    CHECK(r.out.find("max color degree 2") != std::string::npos);

    r = cli("construct " + data + "/witness_edge.json --out " + g.string() + " --coloring-out " + cd.string());
    CHECK(r.status == 0);
    // F = K2 plus a clique on k = 2 vertices.
    CHECK(slurp(g).rfind("p edge 4 ", 0) == 0);
    CHECK(slurp(cd).rfind("{\"n\":8,", 0) == 0);
}

TEST_CASE("lift, extract and join-lift pipeline")
{
    const auto c5 = data + "/c5.col";
    const auto chi_cert = scratch("c5_proper.json");
    REQUIRE(cli("chi " + c5 + " --out " + chi_cert.string()).status == 0);

    const auto lifted = scratch("c5_lifted.json");
    CHECK(cli("lift " + c5 + " --coloring " + chi_cert.string() + " --t 2 --out " + lifted.string()).status == 0);

    const auto blowup = scratch("c5x2.col");
    REQUIRE(cli("product " + c5 + " --t 2 --out " + blowup.string()).status == 0);
    const auto def = scratch("c5x2_def.json");
    REQUIRE(cli("chi-defective " + blowup.string() + " --d 2 --out " + def.string()).status == 0);

    const auto extracted = scratch("c5_extracted.json");
    const auto r = cli("extract " + c5 + " --d 2 --coloring " + def.string() + " --out " + extracted.string());
    CHECK(r.status == 0);
    CHECK(std::stoi(r.out) <= 4);
    CHECK(slurp(extracted).rfind("{\"n\":5,", 0) == 0);

    // A 1-defective coloring of C5 x K2 drives a join lift to d = 3.
    const auto base = scratch("c5x2_d1.json");
    REQUIRE(cli("chi-defective " + blowup.string() + " --d 1 --out " + base.string()).status == 0);
    const auto joined = scratch("joined.col");
    const auto jl = cli("join-lift " + c5 + " --coloring " + base.string() + " --delta 1 --m 2 --d 3 --graph-out " +
                        joined.string());
    CHECK(jl.status == 0);
    CHECK(jl.out.rfind("{\"n\":40,", 0) == 0);
    CHECK(slurp(joined).rfind("p edge 10 35\n", 0) == 0);

    CHECK(cli("join-lift " + c5 + " --coloring " + base.string() + " --delta 1 --m 2 --d 4").status == 2);
}

TEST_CASE("scan formats")
{
    auto r = cli("scan --n-max 3 --d 1 --format csv");
    CHECK(r.status == 0);
    std::istringstream lines(r.out);
    std::string line;
    std::getline(lines, line);
    CHECK(line == "id,n,m,d,chi,chi_def_blowup,ratio_num,ratio_den,ratio");
    int rows = 0;
    while (std::getline(lines, line)) {
        ++rows;
        CHECK(line.find(",1,1,1.000000") != std::string::npos);
    }
    CHECK(rows == 1 + 2 + 4);

    r = cli("scan --n-max 3 --d 1 --format json");
    CHECK(r.out.find("\"equality_count\":7") != std::string::npos);

    CHECK(cli("scan --n-max 4 --d 1 --seed 5").out == cli("scan --n-max 4 --d 1 --seed 5").out);
}
