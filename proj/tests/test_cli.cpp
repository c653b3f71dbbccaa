#include <catch_amalgamated.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "helpers.hpp"
#include "simplexion/cli.hpp"
#include "simplexion/io.hpp"

using namespace simplexion;
namespace fs = std::filesystem;

namespace {

struct Run {
    int code = 0;
    std::string out, err;
};

Run run(std::vector<std::string> args) {
    args.insert(args.begin(), "simplexion");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    Run r;
    r.code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

fs::path workdir() {
    const fs::path p = fs::temp_directory_path() / "simplexion_cli_test";
    fs::create_directories(p);
    return p;
}

std::string write(const std::string& name, const Json& j) {
    const fs::path p = workdir() / name;
    std::ofstream(p) << j.dump();
    return p.string();
}

const CheckResult* find(const VerificationReport& r, const std::string& name) {
    for (const auto& c : r.checks)
        if (c.name == name) return &c;
    return nullptr;
}

}  // namespace

TEST_CASE("generate writes canonical complexes", "[cli]") {
    const Run oct = run({"generate", "cross-polytope", "--dim", "2"});
    REQUIRE(oct.code == 0);
    const Complex g = complex_from_json(Json::parse(oct.out));
    CHECK(f_vector(g) == FVector{6, 12, 8});
    const Run a = run({"generate", "erdos-renyi", "--n", "6", "--p", "0.5", "--seed", "7"});
    const Run b = run({"generate", "erdos-renyi", "--n", "6", "--p", "0.5", "--seed", "7"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    const std::string oct_file = write("oct.json", complex_to_json(cross_polytope(2)));
    const Run r = run({"generate", "refine", "-i", oct_file});
    REQUIRE(r.code == 0);
    CHECK(f_vector(complex_from_json(Json::parse(r.out))) == FVector{26, 72, 48});
    const std::string p2 = write("p2.json", complex_to_json(points(2)));
    const Run j = run({"generate", "join", "-i", p2, "--input2", p2});
    CHECK(f_vector(complex_from_json(Json::parse(j.out))) == FVector{4, 4});
    const std::string graph = write("tri.json", Json::parse(R"({"n": 3, "edges": [[0,1],[1,2],[0,2]]})"));
    const Run w = run({"generate", "whitney", "-i", graph});
    CHECK(f_vector(complex_from_json(Json::parse(w.out))) == FVector{3, 3, 1});
}

TEST_CASE("usage errors exit with code 2", "[cli]") {
    CHECK(run({}).code == 2);
    CHECK(run({"generate", "moebius"}).code == 2);
    CHECK(run({"generate", "cycle", "--n", "2"}).code == 2);
    CHECK(run({"verify", "-i", "/nonexistent/file.json"}).code == 2);
    CHECK(run({"verify", "-i", write("c4.json", complex_to_json(cycle(4))), "--suite", "nonsense"}).code == 2);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("resource caps exit with code 3", "[cli]") {
    const std::string oct = write("oct3.json", complex_to_json(cross_polytope(3)));
    CHECK(run({"analyze", "-i", oct, "--cap-simplices", "10"}).code == 3);
    CHECK(run({"matrix", "-i", oct, "--cap-simplices", "10"}).code == 3);
}

TEST_CASE("verify reports per-check status", "[cli]") {
    VerifyOptions opt;
    opt.trials = 5;
    const VerificationReport oct = run_verify(cross_polytope(2), "oct", parse_suite("all"), opt);
    CHECK(oct.checks.size() == suite_names().size());
    CHECK(oct.passed());
    for (const auto& c : oct.checks) CHECK(c.status != "fail");
    REQUIRE(find(oct, "hydrogen") != nullptr);
    CHECK(find(oct, "hydrogen")->status.rfind("skipped:", 0) == 0);
    const VerificationReport k2 = run_verify(complete(2), "k2", parse_suite("hydrogen"), opt);
    REQUIRE(k2.checks.size() == 1);
    CHECK(k2.checks[0].status == "pass");
    const VerificationReport c5 = run_verify(cycle(5), "c5", parse_suite("all"), opt);
    CHECK(c5.passed());
    CHECK(find(c5, "zeta-symmetry")->status == "pass");
    CHECK(parse_suite("energy,trees") == std::vector<std::string>{"energy", "trees"});
}

TEST_CASE("verify through the command line", "[cli]") {
    const std::string k2 = write("k2.json", complex_to_json(complete(2)));
    const Run r = run({"verify", "-i", k2, "--suite", "hydrogen", "--no-meta"});
    CHECK(r.code == 0);
    const Json j = Json::parse(r.out);
    CHECK(j["checks"][0]["status"] == "pass");
    CHECK(j["passed"] == true);
    CHECK(!j.contains("meta"));
    const Run again = run({"verify", "-i", k2, "--suite", "hydrogen", "--no-meta"});
    CHECK(again.out == r.out);
    const Run oct = run({"verify", "-i", write("oct2.json", complex_to_json(cross_polytope(2))), "--suite", "hydrogen", "--no-meta"});
    CHECK(Json::parse(oct.out)["checks"][0]["status"].get<std::string>().rfind("skipped:", 0) == 0);
    const Run table = run({"verify", "-i", k2, "--suite", "energy", "--format", "table"});
    CHECK(table.code == 0);
    CHECK(table.out.find("energy") != std::string::npos);
}

TEST_CASE("analyze", "[cli]") {
    const std::string c4 = write("c4a.json", complex_to_json(cycle(4)));
    const Run r = run({"analyze", "-i", c4, "--betti", "--wu", "--interaction", "--curvature", "--morse", "--no-meta"});
    REQUIRE(r.code == 0);
    const Json j = Json::parse(r.out);
    CHECK(j["betti"]["betti"] == Json::array({1, 1}));
    CHECK(j["wu"] == "0");
    CHECK(j["curvature"]["sum"] == "0");
    const std::string f = write("f.json", Json::parse(R"({"values": {"0": 0, "1": 1, "2": 2, "3": 3}})"));
    const Run lv = run({"analyze", "-i", c4, "--level", f, "1.5", "--no-meta"});
    REQUIRE(lv.code == 0);
    CHECK(Json::parse(lv.out)["level"]["euler"] == 2);
}

TEST_CASE("spectra and matrix commands", "[cli]") {
    const std::string c4 = write("c4s.json", complex_to_json(cycle(4)));
    const Run s = run({"spectra", "-i", c4, "--operator", "kirchhoff", "--no-meta"});
    REQUIRE(s.code == 0);
    const auto ev = Json::parse(s.out)["eigenvalues"].get<std::vector<double>>();
    REQUIRE(ev.size() == 4);
    CHECK(ev[3] == Catch::Approx(4.0));
    const Run csv = run({"spectra", "-i", c4, "--operator", "kirchhoff", "--format", "csv"});
    CHECK(csv.out.rfind("index,eigenvalue\n", 0) == 0);
    const Run lim = run({"spectra", "-i", c4, "--limit-levels", "2", "--no-meta"});
    CHECK(Json::parse(lim.out)["limit"]["monotone"] == true);
    const Run m = run({"matrix", "-i", write("k2m.json", complex_to_json(complete(2))), "--kind", "green"});
    REQUIRE(m.code == 0);
    ExactMatrix expect(3, 3);
    const int vals[3][3] = {{0, -1, 1}, {-1, 0, 1}, {1, 1, -1}};
    for (int i = 0; i < 3; ++i)
        for (int k = 0; k < 3; ++k) expect(i, k) = vals[i][k];
    CHECK(matrix_from_json(Json::parse(m.out)) == expect);
}

TEST_CASE("random statistics", "[cli]") {
    const Json two = random_statistics(2, 0.3, 2000, 5);
    CHECK(two["chi"]["formula"].get<double>() == Catch::Approx(1.7));
    const Json zero = random_statistics(6, 0.0, 100, 1);
    CHECK(zero["dim"]["mean"].get<double>() == 0.0);
    CHECK(zero["chi"]["mean"].get<double>() == 6.0);
    const Json big = random_statistics(8, 0.5, 20000, 3);
    CHECK(std::abs(big["dim"]["z"].get<double>()) < 4);
    CHECK(std::abs(big["chi"]["z"].get<double>()) < 4);
    const Run r = run({"random", "--n", "5", "--p", "0.5", "--trials", "200", "--no-meta"});
    CHECK(r.code == 0);
    CHECK(r.out == run({"random", "--n", "5", "--p", "0.5", "--trials", "200", "--no-meta"}).out);
    CHECK(run({"random", "--n", "11", "--p", "0.5"}).code == 2);
}

TEST_CASE("environment cap", "[cli]") {
    setenv("SIMPLEXION_CAP", "5", 1);
    CHECK(default_cap() == 5);
    CHECK(run({"analyze", "-i", write("c4e.json", complex_to_json(cycle(4)))}).code == 3);
    unsetenv("SIMPLEXION_CAP");
    CHECK(default_cap() == 3000);
}
