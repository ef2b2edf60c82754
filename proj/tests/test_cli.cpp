#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <initializer_list>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "cli.hpp"
#include "negcurv/eigen.hpp"
#include "negcurv/matrix_io.hpp"

namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run cli(std::initializer_list<std::string> args) {
    std::vector<std::string> owned{"negcurv"};
    owned.insert(owned.end(), args);
    std::vector<const char*> argv;
    for (const auto& s : owned) argv.push_back(s.c_str());
    std::ostringstream out, err;
    const int code = negcurv::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
    const auto dir = fs::temp_directory_path() / ("negcurv-cli-" + name);
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

std::string write(const fs::path& p, const std::string& text) {
    std::ofstream(p) << text;
    return p.string();
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    return {std::istreambuf_iterator<char>(in), {}};
}

}  // namespace

TEST_CASE("detect exit codes") {
    const auto dir = scratch("detect");
    const auto neg = write(dir / "neg.txt", "2\n1 0\n0 -5\n");
    const auto id = write(dir / "id.txt", "3\n1 0 0\n0 1 0\n0 0 1\n");
    const auto mild = write(dir / "mild.txt", "2\n1 -1.2\n-1.2 1\n");

    auto r = cli({"detect", "--matrix", neg});
    CHECK(r.code == 0);
    CHECK(r.out.find("lambda=-5, iterations=0") != std::string::npos);

    r = cli({"detect", "--matrix", id, "--json"});
    CHECK(r.code == 1);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["iterations"] == 3);
    CHECK(j["status"] == "exhausted");
    CHECK(j["certificate"].is_null());

    CHECK(cli({"detect", "--matrix", mild, "--epsilon", "0.5"}).code == 1);
    CHECK(cli({"detect", "--matrix", mild}).code == 0);
    CHECK(cli({"detect", "--matrix", (dir / "missing.txt").string()}).code == 2);
    CHECK(cli({"detect", "--matrix", id, "--heuristic", "nope"}).code == 2);
    CHECK(cli({}).code == 2);
}

TEST_CASE("detect-fd") {
    const auto dir = scratch("fd");
    const auto q = write(dir / "q.txt", "2\n1 -2\n-2 1\n");
    auto r = cli({"detect-fd", "--function", "quadratic:" + q, "--h", "1e-3", "--json"});
    CHECK(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(std::abs(j["lambda"].get<double>() + 1.0) <= 1e-6);
    CHECK(j["oracle_cost"] == 5);
    CHECK(cli({"detect-fd", "--function", "quadratic:" + q, "--h", "1e-3", "--json"}).out == r.out);

    CHECK(cli({"detect-fd", "--function", "sum-of-squares", "--point", "0.1,0.2,0.3"}).code == 1);
    CHECK(cli({"detect-fd", "--function", "no-such-function", "--point", "0,0"}).code == 2);
    CHECK(cli({"detect-fd", "--function", "quadratic:" + q, "--point", "0,0,0"}).code == 2);

    r = cli({"detect-fd", "--function", "sum-of-cubes", "--point", "-1,0.5", "--lipschitz", "6", "--json"});
    CHECK(r.code == 0);
    CHECK(nlohmann::json::parse(r.out).contains("certified_upper_bound"));
}

TEST_CASE("bench") {
    const auto dir = scratch("bench");
    fs::create_directories(dir / "suite");
    write(dir / "suite" / "a.txt", "3\n2 1 0\n1 2 3\n0 3 2\n");
    const auto out1 = (dir / "out1").string(), out2 = (dir / "out2").string();

    auto r = cli({"bench", "--suite", (dir / "suite").string(), "--out", out1});
    CHECK(r.code == 0);
    const auto csv = slurp(fs::path(out1) / "records.csv");
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 9);

    for (const auto& o : {out1, out2}) {
        CHECK(cli({"bench", "--generate", "count=5,n=4-6", "--seed", "7", "--transform", "permute,orthogonal",
                   "--h", "1e-2,1e-4,1e-6", "--out", o})
                  .code == 0);
    }
    CHECK(slurp(fs::path(out1) / "records.csv") == slurp(fs::path(out2) / "records.csv"));
    CHECK(slurp(fs::path(out1) / "summary.json") == slurp(fs::path(out2) / "summary.json"));
    const auto summary = nlohmann::json::parse(slurp(fs::path(out1) / "summary.json"));
    CHECK(summary["groups"].size() == 8);

    fs::create_directories(dir / "empty");
    CHECK(cli({"bench", "--suite", (dir / "empty").string(), "--out", out1}).code == 2);
    CHECK(cli({"bench", "--suite", (dir / "suite").string(), "--generate", "count=1", "--out", out1}).code == 2);
}

TEST_CASE("exhaustive") {
    const auto dir = scratch("exhaustive");
    const auto two = write(dir / "two.txt", "2\n1 -2\n-2 1\n");
    const auto four = write(dir / "four.txt", "4\n1 0 0 0\n0 1 0 0\n0 0 1 -2\n0 0 -2 1\n");
    const auto five = write(dir / "five.txt", "5\n1 0 0 0 0\n0 1 0 0 0\n0 0 1 0 0\n0 0 0 1 0\n0 0 0 0 1\n");

    auto r = cli({"exhaustive", "--matrix", two, "--json"});
    CHECK(r.code == 0);
    CHECK(nlohmann::json::parse(r.out)["gap"] == 0);

    r = cli({"exhaustive", "--matrix", four, "--mode", "all-pairs", "--baseline", "build1", "--json"});
    CHECK(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["orders_evaluated"] == 720);
    CHECK(j["gap"] == 5);
    CHECK(j["best_order"][0] == nlohmann::json::array({4, 3}));

    r = cli({"exhaustive", "--matrix", five, "--mode", "all-pairs"});
    CHECK(r.code == 2);
    CHECK(r.err.find("3628800") != std::string::npos);
}

TEST_CASE("gen") {
    const auto dir = scratch("gen");
    const auto a = (dir / "a.mtx").string(), b = (dir / "b.mtx").string();
    CHECK(cli({"gen", "--n", "4", "--neg", "1", "--seed", "3", "--out", a}).code == 0);
    CHECK(cli({"gen", "--n", "4", "--neg", "1", "--seed", "3", "--out", b}).code == 0);
    CHECK(slurp(a) == slurp(b));
    const auto m = negcurv::load_matrix(a, negcurv::MatrixFormat::MatrixMarket);
    const auto ev = negcurv::eigenvalues(m);
    CHECK(std::count_if(ev.begin(), ev.end(), [](double x) { return x < 0; }) == 1);
    for (double d : m.diag()) CHECK(d > 0);

    CHECK(cli({"gen", "--n", "5", "--neg", "0", "--seed", "1", "--out", a}).code == 0);
    CHECK(negcurv::min_eigenvalue(negcurv::load_matrix(a, negcurv::MatrixFormat::Auto)) > 0);

    const auto r = cli({"gen", "--n", "3", "--neg", "3", "--max-attempts", "5", "--out", a});
    CHECK(r.code == 2);
    CHECK(r.err.find("5") != std::string::npos);
}
