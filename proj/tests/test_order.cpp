#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "negcurv/error.hpp"
#include "negcurv/order.hpp"

using namespace negcurv;

namespace {

std::vector<std::size_t> one_based(const Permutation& p) {
    std::vector<std::size_t> v;
    for (auto x : p.values()) v.push_back(x + 1);
    return v;
}

// Pairs as 1-based {min,max} for comparing against hand-written sequences.
std::vector<std::pair<std::size_t, std::size_t>> pairs1(const SelectionOrder& o) {
    std::vector<std::pair<std::size_t, std::size_t>> v;
    for (const auto& p : o) v.emplace_back(p.j + 1, p.i + 1);
    return v;
}

bool covers_all_pairs(const SelectionOrder& o) {
    std::set<Pair> seen(o.begin(), o.end());
    const std::size_t n = o.dim();
    return seen.size() == n * (n - 1) / 2 && o.size() == seen.size();
}

}  // namespace

TEST_CASE("heuristic permutations") {
    const std::vector<double> d{3, 1, 2};
    CHECK(one_based(heuristic_permutation(d, Heuristic::S2Lde)) == std::vector<std::size_t>{2, 3, 1});
    CHECK(one_based(heuristic_permutation(d, Heuristic::L2Sde)) == std::vector<std::size_t>{1, 3, 2});
    CHECK(one_based(heuristic_permutation(d, Heuristic::Ide)) == std::vector<std::size_t>{2, 1, 3});
    CHECK(one_based(heuristic_permutation(d, Heuristic::Ordered)) == std::vector<std::size_t>{1, 2, 3});

    // Ide on 5 elements: [t1, t5, t2, t4, t3]
    const std::vector<double> e{50, 10, 40, 20, 30};
    CHECK(one_based(heuristic_permutation(e, Heuristic::Ide)) == std::vector<std::size_t>{2, 1, 4, 3, 5});
    CHECK_THROWS_AS(heuristic_permutation(std::vector<double>{}, Heuristic::Ordered), InvalidInput);
}

TEST_CASE("ties keep the smaller index first") {
    const std::vector<double> d{1, 0, 1, 0};
    CHECK(one_based(heuristic_permutation(d, Heuristic::S2Lde)) == std::vector<std::size_t>{2, 4, 1, 3});
    CHECK(one_based(heuristic_permutation(d, Heuristic::L2Sde)) == std::vector<std::size_t>{1, 3, 2, 4});
}

TEST_CASE("heuristic permutations are bijections; S2Lde reverses L2Sde without ties") {
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> u(-5, 5);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<double> d(1 + trial % 15);
        for (auto& v : d) v = u(rng);
        for (auto h : {Heuristic::Ordered, Heuristic::S2Lde, Heuristic::L2Sde, Heuristic::Ide}) {
            CHECK_NOTHROW(Permutation(heuristic_permutation(d, h).values()));
        }
        auto s = heuristic_permutation(d, Heuristic::S2Lde).values();
        std::reverse(s.begin(), s.end());
        CHECK(s == heuristic_permutation(d, Heuristic::L2Sde).values());
    }
}

TEST_CASE("build1 examples") {
    using V = std::vector<std::pair<std::size_t, std::size_t>>;
    CHECK(pairs1(build1_order(Permutation::identity(4))) == V{{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}});
    CHECK(pairs1(build1_order(Permutation::identity(2))) == V{{1, 2}});
    CHECK(pairs1(build1_order(Permutation({1, 0, 2}))) == V{{1, 2}, {2, 3}, {1, 3}});
}

TEST_CASE("build2 examples") {
    using V = std::vector<std::pair<std::size_t, std::size_t>>;
    CHECK(pairs1(build2_order(Permutation::identity(4))) == V{{1, 2}, {2, 3}, {1, 3}, {3, 4}, {2, 4}, {1, 4}});
    CHECK(pairs1(build2_order(Permutation::identity(2))) == V{{1, 2}});
    CHECK(pairs1(build2_order(Permutation({2, 0, 1}))) == V{{1, 3}, {1, 2}, {2, 3}});
}

TEST_CASE("every build of every heuristic covers all pairs") {
    std::mt19937_64 rng(4);
    std::uniform_real_distribution<double> u(0, 1);
    for (std::size_t n = 1; n <= 12; ++n) {
        std::vector<double> d(n);
        for (auto& v : d) v = u(rng);
        for (const auto& v : all_variants()) CHECK(covers_all_pairs(variant_order(d, v)));
    }
}

TEST_CASE("selection order validation") {
    CHECK_THROWS_AS(SelectionOrder(3, {{1, 0}, {2, 0}}), InvalidInput);
    CHECK_THROWS_AS(SelectionOrder(3, {{1, 0}, {1, 0}, {2, 1}}), InvalidInput);
    CHECK_THROWS_AS(SelectionOrder(3, {{0, 1}, {2, 0}, {2, 1}}), InvalidInput);
    CHECK_THROWS_AS(Pair::of(2, 2), InvalidInput);
    CHECK_THROWS_AS(Permutation({0, 0}), InvalidInput);
}

TEST_CASE("names round-trip") {
    for (const auto& v : all_variants()) CHECK(VariantSpec::parse(v.name()) == v);
    CHECK(all_variants().size() == 8);
    CHECK(VariantSpec{Heuristic::S2Lde, Build::Build2}.name() == "s2lde/build2");
    CHECK_THROWS_AS(parse_heuristic("random"), InvalidInput);
    CHECK_THROWS_AS(VariantSpec::parse("ordered"), InvalidInput);
}

namespace {

std::size_t count_orders(std::size_t n, EnumerationMode m, std::set<SelectionOrder>* uniq = nullptr) {
    OrderStream s(n, m);
    std::size_t k = 0;
    while (auto o = s.next()) {
        CHECK(covers_all_pairs(*o));
        if (uniq) uniq->insert(*o);
        ++k;
    }
    return k;
}

}  // namespace

TEST_CASE("enumerate_orders counts") {
    CHECK(count_orders(2, EnumerationMode::PermTimesBuild) == 1);
    CHECK(count_orders(2, EnumerationMode::AllPairOrders) == 1);
    CHECK(count_orders(3, EnumerationMode::AllPairOrders) == 6);
    CHECK(count_orders(3, EnumerationMode::PermTimesBuild) == 6);
    CHECK(count_orders(4, EnumerationMode::AllPairOrders) == 720);
    for (std::size_t n = 4; n <= 6; ++n) {
        std::set<SelectionOrder> uniq;
        const std::size_t total = count_orders(n, EnumerationMode::PermTimesBuild, &uniq);
        std::size_t fact = 1;
        for (std::size_t k = 2; k <= n; ++k) fact *= k;
        CHECK(total == 2 * fact);
        CHECK(uniq.size() == total);
    }
}

TEST_CASE("infeasible enumerations report the required count") {
    try {
        OrderStream s(5, EnumerationMode::AllPairOrders);
        FAIL("expected rejection");
    } catch (const InvalidInput& e) {
        CHECK(std::string(e.what()).find("3628800") != std::string::npos);
    }
    CHECK_THROWS_AS(OrderStream(11, EnumerationMode::PermTimesBuild), InvalidInput);
    CHECK(enumeration_size(8, EnumerationMode::AllPairOrders).find("e29") != std::string::npos);
}
