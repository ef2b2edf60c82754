#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "negcurv/bench.hpp"
#include "negcurv/matrix_io.hpp"
#include "negcurv/random.hpp"
#include "support/convert.hpp"
#include "support/oracles.hpp"

using namespace negcurv;
namespace fs = std::filesystem;

namespace {

fs::path scratch_dir(const std::string& name) {
    const auto dir = fs::temp_directory_path() / ("negcurv-test-" + name);
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

std::vector<double> sorted_spectrum(const SymMatrix& a) {
    auto ev = eigenvalues(a);
    std::vector<double> v(ev.data(), ev.data() + ev.size());
    std::sort(v.begin(), v.end());
    return v;
}

// One case with the given iteration count per variant, in all_variants() order.
void add_case(std::vector<BenchRecord>& out, const std::string& id, const std::vector<std::size_t>& iters) {
    const auto vs = all_variants();
    for (std::size_t k = 0; k < vs.size(); ++k) {
        BenchRecord r;
        r.case_id = id;
        r.variant = vs[k];
        r.n = 4;
        r.status = SeekStatus::NegativeFound;
        r.iterations = iters[k];
        out.push_back(r);
    }
}

MatrixCase make_case(std::string id, SymMatrix a) {
    MatrixCase c;
    c.id = std::move(id);
    c.source = "test";
    c.matrix = std::move(a);
    return c;
}

SymMatrix arrowhead() {
    SymMatrix a = SymMatrix::identity(4);
    a.set(3, 2, -2.0);
    return a;
}

}  // namespace

TEST_CASE("load_matrix: dense text and Matrix Market agree") {
    const auto dir = scratch_dir("load");
    {
        std::ofstream(dir / "a.txt") << "2\n1 2\n2 3\n";
        std::ofstream(dir / "a.mtx") << "%%MatrixMarket matrix coordinate real symmetric\n% comment\n2 2 3\n1 1 1\n2 1 2\n2 2 3\n";
        std::ofstream(dir / "bad.txt") << "2\n1 2\n2.000001 3\n";
        std::ofstream(dir / "rect.txt") << "2\n1 2 3\n2 3\n";
    }
    const auto dense = load_matrix(dir / "a.txt", MatrixFormat::DenseText);
    CHECK(dense == SymMatrix::from_rows({{1, 2}, {2, 3}}));
    CHECK(load_matrix(dir / "a.mtx", MatrixFormat::MatrixMarket) == dense);
    CHECK(load_matrix(dir / "a.mtx", MatrixFormat::Auto) == dense);
    CHECK(load_matrix(dir / "a.txt", MatrixFormat::Auto) == dense);
    CHECK_THROWS_AS(load_matrix(dir / "bad.txt", MatrixFormat::DenseText), InvalidInput);
    CHECK_THROWS_AS(load_matrix(dir / "rect.txt", MatrixFormat::DenseText), InvalidInput);
    CHECK_THROWS_AS(load_matrix(dir / "missing.txt", MatrixFormat::DenseText), InvalidInput);
}

TEST_CASE("Matrix Market round trip is exact") {
    std::mt19937_64 rng(5);
    const auto a = from_dense(oracle::random_symmetric(7, rng, 0.0));
    std::stringstream ss;
    write_matrix_market(ss, a);
    CHECK(read_matrix(ss, MatrixFormat::Auto) == a);
}

TEST_CASE("filter_negative_diagonal") {
    std::vector<MatrixCase> cases{
        make_case("neg", SymMatrix::from_rows({{1, 0}, {0, -5}})),
        make_case("id", SymMatrix::identity(3)),
        make_case("zero", SymMatrix::from_rows({{0, 0}, {0, 1}})),
    };
    const auto [kept, discarded] = filter_negative_diagonal(cases);
    REQUIRE(kept.size() == 2);
    CHECK(kept[0].id == "id");
    CHECK(kept[1].id == "zero");
    REQUIRE(discarded.size() == 1);
    CHECK(discarded[0].id == "neg");
}

TEST_CASE("permutation transform") {
    CHECK(random_permutation_transform(SymMatrix::from_rows({{3}}), 1) == SymMatrix::from_rows({{3}}));
    std::mt19937_64 rng(8);
    for (int t = 0; t < 20; ++t) {
        const auto a = from_dense(oracle::random_symmetric(2 + t % 9, rng, 0.0));
        const auto b = random_permutation_transform(a, 100 + t);
        const auto sa = sorted_spectrum(a), sb = sorted_spectrum(b);
        for (std::size_t k = 0; k < sa.size(); ++k) CHECK(std::abs(sa[k] - sb[k]) <= 1e-10);
        CHECK(random_permutation_transform(a, 100 + t) == b);
        auto d = b.diag(), da = a.diag();
        std::sort(d.begin(), d.end());
        std::sort(da.begin(), da.end());
        CHECK(d == da);
    }
}

TEST_CASE("orthogonal transform") {
    Rng rng(3);
    for (std::size_t n : {1, 2, 5, 10}) {
        const Eigen::MatrixXd q = haar_orthogonal(n, rng);
        CHECK((q.transpose() * q - Eigen::MatrixXd::Identity(n, n)).norm() <= 1e-10);
    }
    auto ci = SymMatrix::identity(6);
    for (std::size_t i = 0; i < 6; ++i) ci.set(i, i, 2.5);
    const auto t = random_orthogonal_transform(ci, 4);
    CHECK((t.dense() - ci.dense()).cwiseAbs().maxCoeff() <= 1e-10);

    std::mt19937_64 g(9);
    for (int k = 0; k < 20; ++k) {
        const auto a = from_dense(oracle::random_symmetric(2 + k % 9, g, 0.0));
        const auto b = random_orthogonal_transform(a, k);
        const auto sa = sorted_spectrum(a), sb = sorted_spectrum(b);
        for (std::size_t m = 0; m < sa.size(); ++m) CHECK(std::abs(sa[m] - sb[m]) <= 1e-9);
        CHECK(random_orthogonal_transform(a, k) == b);
    }
}

TEST_CASE("orthogonal transform can turn a positive diagonal negative") {
    Rng rng = case_rng(1, "sign");
    bool seen = false;
    for (int k = 0; k < 50 && !seen; ++k) {
        const auto a = generate_synthetic({6, 2}, rng);
        const auto d = random_orthogonal_transform(a, k).diag();
        seen = std::any_of(d.begin(), d.end(), [](double x) { return x < 0; });
    }
    CHECK(seen);
}

TEST_CASE("synthetic generator") {
    Rng rng = case_rng(42, "gen");
    for (std::size_t neg = 0; neg <= 3; ++neg) {
        const auto a = generate_synthetic({6, neg}, rng);
        const auto ev = oracle::jacobi_eigenvalues(to_dense(a));
        CHECK(std::count_if(ev.begin(), ev.end(), [](double x) { return x < 0; }) == static_cast<long>(neg));
        for (double d : a.diag()) CHECK(d > 0);
    }
    Rng r1 = case_rng(7, "x"), r2 = case_rng(7, "x");
    CHECK(generate_synthetic({5, 1}, r1) == generate_synthetic({5, 1}, r2));
    Rng r3 = case_rng(7, "x");
    CHECK_THROWS_AS(generate_synthetic({3, 3}, r3), InvalidInput);
}

TEST_CASE("synthetic suite spec") {
    const auto s = SyntheticSuiteSpec::parse("count=5,n=4-6,neg=2");
    CHECK(s.count == 5);
    CHECK(s.min_n == 4);
    CHECK(s.max_n == 6);
    CHECK(s.min_neg == 2);
    CHECK(s.max_neg == 2);
    CHECK_THROWS_AS(SyntheticSuiteSpec::parse("n=6-4"), InvalidInput);
    CHECK_THROWS_AS(SyntheticSuiteSpec::parse("bogus=1"), InvalidInput);
    const auto suite = synthetic_suite(s, 11);
    REQUIRE(suite.size() == 5);
    CHECK(suite[0].id == "syn-000");
    for (const auto& c : suite) CHECK((c.matrix.dim() >= 4 && c.matrix.dim() <= 6));
}

TEST_CASE("run_grid examples") {
    const auto vs = all_variants();
    const auto one = run_grid({make_case("two", SymMatrix::from_rows({{1, -2}, {-2, 1}}))}, vs);
    REQUIRE(one.size() == 8);
    for (const auto& r : one) {
        CHECK(r.ok());
        CHECK(r.iterations == 1);
        CHECK(r.lambda == doctest::Approx(-1.0));
    }
    const auto id = run_grid({make_case("id", SymMatrix::identity(4))}, vs);
    for (const auto& r : id) CHECK(r.status == SeekStatus::Exhausted);
}

TEST_CASE("run_grid records failures without aborting") {
    auto bad = SymMatrix::identity(3);
    bad.set(1, 0, std::numeric_limits<double>::quiet_NaN());
    const auto recs = run_grid({make_case("bad", bad), make_case("ok", SymMatrix::identity(2))}, all_variants());
    REQUIRE(recs.size() == 16);
    CHECK_FALSE(recs[0].ok());
    CHECK_FALSE(recs[0].error.empty());
    CHECK(recs[8].ok());
    const auto t = winner_table(recs);
    CHECK(t.cases == 1);
    CHECK(t.excluded == 1);
}

TEST_CASE("run_grid is independent of thread count") {
    auto cases = synthetic_suite(SyntheticSuiteSpec::parse("count=12,n=3-8"), 2);
    GridConfig one{{}, 1}, many{{}, 4};
    const auto a = run_grid(cases, all_variants(), one);
    const auto b = run_grid(cases, all_variants(), many);
    std::ostringstream sa, sb;
    write_csv(sa, a);
    write_csv(sb, b);
    CHECK(sa.str() == sb.str());
}

TEST_CASE("FD grid cases reproduce exact iterations on quadratics") {
    auto cases = synthetic_suite(SyntheticSuiteSpec::parse("count=6,n=4-6"), 3);
    const auto fd = with_fd_steps(cases, {1e-2});
    CHECK(fd[0].id == "syn-000@h=0.01");
    const auto e = run_grid(cases, all_variants());
    const auto f = run_grid(fd, all_variants());
    REQUIRE(e.size() == f.size());
    for (std::size_t k = 0; k < e.size(); ++k) {
        CHECK(e[k].iterations == f[k].iterations);
        CHECK(f[k].oracle_cost == 2 * f[k].n + f[k].iterations);
    }
}

TEST_CASE("winner_table examples") {
    const auto vs = all_variants();
    const VariantSpec v = vs[2];
    SUBCASE("strict dominance on two cases") {
        std::vector<BenchRecord> recs;
        add_case(recs, "a", {5, 5, 1, 5, 5, 5, 5, 5});
        add_case(recs, "b", {4, 6, 2, 3, 3, 9, 3, 3});
        const auto t = winner_table(recs);
        CHECK(t.cases == 2);
        CHECK(t.percent_of(v) == 100.0);
        CHECK(format_percent(t.percent_of(v)) == "100.0");
        CHECK(t.percent_of(vs[0]) == 0.0);
    }
    SUBCASE("all tied") {
        std::vector<BenchRecord> recs;
        add_case(recs, "a", {3, 3, 3, 3, 3, 3, 3, 3});
        const auto t = winner_table(recs);
        for (const auto& x : vs) CHECK(t.percent_of(x) == 100.0);
    }
    SUBCASE("fastest once, tied once") {
        std::vector<BenchRecord> recs;
        add_case(recs, "a", {4, 5, 1, 5, 5, 5, 5, 5});
        add_case(recs, "b", {2, 5, 2, 5, 5, 5, 5, 5});
        const auto t = winner_table(recs);
        CHECK(t.percent_of(v) == 100.0);
        CHECK(t.percent_of(vs[0]) == 50.0);
        CHECK(format_percent(t.percent_of(vs[0])) == "50.0");
        CHECK(t.wins[0] == 1);
    }
    SUBCASE("incomplete grid") {
        std::vector<BenchRecord> recs;
        add_case(recs, "a", {1, 1, 1, 1, 1, 1, 1, 1});
        add_case(recs, "b", {1, 1, 1, 1, 1, 1, 1, 1});
        recs.pop_back();
        CHECK_THROWS_AS(winner_table(recs), InvalidInput);
        recs.push_back(recs.front());
        CHECK_THROWS_AS(winner_table(recs), InvalidInput);
    }
}

TEST_CASE("format_percent") {
    CHECK(format_percent(100.0 * 2 / 3) == "66.7");
    CHECK(format_percent(59.8) == "59.8");
    CHECK(format_percent(0.0) == "0.0");
}

TEST_CASE("exhaustive comparison") {
    SUBCASE("n=2 has gap 0") {
        for (auto mode : {EnumerationMode::PermTimesBuild, EnumerationMode::AllPairOrders}) {
            const auto r = exhaustive_compare(SymMatrix::from_rows({{1, -2}, {-2, 1}}), mode);
            CHECK(r.gap == 0);
            CHECK(r.best_iterations == 1);
        }
    }
    SUBCASE("arrowhead with the negative block on the last pair") {
        const auto a = arrowhead();
        const auto b1 = exhaustive_compare(a, EnumerationMode::AllPairOrders, OrderedBaseline::Build1);
        CHECK(b1.ordered_iterations == 6);
        CHECK(b1.best_iterations == 1);
        CHECK(b1.gap == 5);
        CHECK(b1.orders_evaluated == 720);
        const auto better = exhaustive_compare(a, EnumerationMode::AllPairOrders, OrderedBaseline::BetterOfBoth);
        CHECK(better.ordered_iterations == 4);
        CHECK(better.gap == 3);
        REQUIRE(better.best_order.size() > 0);
        CHECK(better.best_order[0] == Pair::of(3, 2));
    }
    SUBCASE("ordered is optimal") {
        auto a = SymMatrix::identity(4);
        a.set(1, 0, -2.0);
        CHECK(exhaustive_compare(a, EnumerationMode::PermTimesBuild).gap == 0);
    }
    SUBCASE("infeasible dimension") {
        CHECK_THROWS_AS(exhaustive_compare(SymMatrix::identity(5), EnumerationMode::AllPairOrders), InvalidInput);
    }
    SUBCASE("histogram") {
        const auto h = ordered_vs_best({make_case("a", arrowhead()), make_case("b", SymMatrix::from_rows({{1, -2}, {-2, 1}}))},
                                       EnumerationMode::AllPairOrders, OrderedBaseline::Build1);
        CHECK(h.counts.at(5) == 1);
        CHECK(h.counts.at(0) == 1);
    }
}

TEST_CASE("exhaustive gaps agree with brute force") {
    Rng rng = case_rng(5, "exhaustive");
    for (int k = 0; k < 5; ++k) {
        const auto a = generate_synthetic({4, 1}, rng);
        const auto r = exhaustive_compare(a, EnumerationMode::AllPairOrders);
        std::vector<std::pair<std::size_t, std::size_t>> pairs;
        for (std::size_t i = 1; i < 4; ++i)
            for (std::size_t j = 0; j < i; ++j) pairs.push_back({i, j});
        std::sort(pairs.begin(), pairs.end());
        std::size_t best = 99;
        do {
            best = std::min(best, oracle::brute_seek_iterations(to_dense(a), pairs, 0.0));
        } while (std::next_permutation(pairs.begin(), pairs.end()));
        CHECK(r.best_iterations == best);
    }
}

TEST_CASE("CSV and summary") {
    const auto recs = run_grid({make_case("id", SymMatrix::identity(2))}, {VariantSpec::parse("ordered/build1")});
    std::ostringstream out;
    write_csv(out, recs);
    CHECK(out.str() ==
          "case_id,variant,status,iterations,lambda,oracle_cost,n,transform,h\n"
          "id,ordered/build1,exhausted,1,1,3,2,none,\n");
    const auto s = bench_summary(run_grid({make_case("id", SymMatrix::identity(2))}, all_variants()));
    CHECK(s.dump().find("ordered/build1") != std::string::npos);
}
