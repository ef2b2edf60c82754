#include "negcurv/order.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <fmt/format.h>

#include "negcurv/error.hpp"

namespace negcurv {

Pair Pair::of(std::size_t a, std::size_t b) {
    if (a == b) throw InvalidInput("a coordinate pair needs two distinct indices");
    return a > b ? Pair{a, b} : Pair{b, a};
}

Permutation::Permutation(std::vector<std::size_t> p) : p_(std::move(p)) {
    std::vector<bool> hit(p_.size(), false);
    for (std::size_t v : p_) {
        if (v >= p_.size() || hit[v]) throw InvalidInput("not a permutation");
        hit[v] = true;
    }
}

Permutation Permutation::identity(std::size_t n) {
    std::vector<std::size_t> p(n);
    std::iota(p.begin(), p.end(), std::size_t{0});
    return Permutation(std::move(p));
}

SelectionOrder::SelectionOrder(std::size_t n, std::vector<Pair> pairs)
    : n_(n), pairs_(std::move(pairs)) {
    const std::size_t m = n * (n - (n > 0 ? 1 : 0)) / 2;
    if (pairs_.size() != m) {
        throw InvalidInput(fmt::format("selection order for n={} needs {} pairs, got {}", n, m,
                                       pairs_.size()));
    }
    std::vector<bool> hit(n * n, false);
    for (const auto& pr : pairs_) {
        if (pr.i >= n || !(pr.i > pr.j)) {
            throw InvalidInput(fmt::format("invalid pair ({},{})", pr.i + 1, pr.j + 1));
        }
        if (hit[pr.i * n + pr.j]) {
            throw InvalidInput(fmt::format("pair ({},{}) repeated", pr.i + 1, pr.j + 1));
        }
        hit[pr.i * n + pr.j] = true;
    }
}

std::string_view to_string(Heuristic h) {
    switch (h) {
        case Heuristic::Ordered: return "ordered";
        case Heuristic::S2Lde: return "s2lde";
        case Heuristic::L2Sde: return "l2sde";
        case Heuristic::Ide: return "ide";
    }
    return "?";
}

std::string_view to_string(Build b) { return b == Build::Build1 ? "build1" : "build2"; }

Heuristic parse_heuristic(std::string_view name) {
    for (auto h : {Heuristic::Ordered, Heuristic::S2Lde, Heuristic::L2Sde, Heuristic::Ide}) {
        if (name == to_string(h)) return h;
    }
    throw InvalidInput("unknown heuristic '" + std::string(name) + "'");
}

Build parse_build(std::string_view name) {
    if (name == "build1") return Build::Build1;
    if (name == "build2") return Build::Build2;
    throw InvalidInput("unknown build '" + std::string(name) + "'");
}

std::string VariantSpec::name() const {
    return fmt::format("{}/{}", to_string(heuristic), to_string(build));
}

VariantSpec VariantSpec::parse(std::string_view name) {
    const auto slash = name.find('/');
    if (slash == std::string_view::npos) {
        throw InvalidInput("variant must look like heuristic/build, got '" + std::string(name) + "'");
    }
    return {parse_heuristic(name.substr(0, slash)), parse_build(name.substr(slash + 1))};
}

std::vector<VariantSpec> all_variants() {
    std::vector<VariantSpec> v;
    for (auto b : {Build::Build1, Build::Build2}) {
        for (auto h : {Heuristic::Ordered, Heuristic::S2Lde, Heuristic::L2Sde, Heuristic::Ide}) {
            v.push_back({h, b});
        }
    }
    return v;
}

Permutation heuristic_permutation(std::span<const double> diag, Heuristic h) {
    const std::size_t n = diag.size();
    if (n == 0) throw InvalidInput("diagonal must be nonempty");
    std::vector<std::size_t> p(n);
    std::iota(p.begin(), p.end(), std::size_t{0});
    switch (h) {
        case Heuristic::Ordered: break;
        case Heuristic::S2Lde:
            std::stable_sort(p.begin(), p.end(),
                             [&](std::size_t a, std::size_t b) { return diag[a] < diag[b]; });
            break;
        case Heuristic::L2Sde:
            std::stable_sort(p.begin(), p.end(),
                             [&](std::size_t a, std::size_t b) { return diag[a] > diag[b]; });
            break;
        case Heuristic::Ide: {
            const auto tmp = heuristic_permutation(diag, Heuristic::S2Lde).values();
            std::size_t lo = 0;
            std::size_t hi = n - 1;
            for (std::size_t k = 0; k < n; ++k) p[k] = (k % 2 == 0) ? tmp[lo++] : tmp[hi--];
            break;
        }
    }
    return Permutation(std::move(p));
}

SelectionOrder build1_order(const Permutation& p) {
    const std::size_t n = p.size();
    std::vector<Pair> pairs;
    pairs.reserve(n * (n - 1) / 2);
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = a + 1; b < n; ++b) pairs.push_back(Pair::of(p[a], p[b]));
    }
    return SelectionOrder(n, std::move(pairs));
}

SelectionOrder build2_order(const Permutation& p) {
    const std::size_t n = p.size();
    std::vector<Pair> pairs;
    pairs.reserve(n * (n - 1) / 2);
    for (std::size_t a = 1; a < n; ++a) {
        for (std::size_t b = a; b-- > 0;) pairs.push_back(Pair::of(p[a], p[b]));
    }
    return SelectionOrder(n, std::move(pairs));
}

SelectionOrder build_order(const Permutation& p, Build b) {
    return b == Build::Build1 ? build1_order(p) : build2_order(p);
}

SelectionOrder variant_order(std::span<const double> diag, const VariantSpec& v) {
    return build_order(heuristic_permutation(diag, v.heuristic), v.build);
}

std::string_view to_string(EnumerationMode m) {
    return m == EnumerationMode::PermTimesBuild ? "perm-build" : "all-pairs";
}

EnumerationMode parse_enumeration_mode(std::string_view name) {
    if (name == "perm-build" || name == "perm_x_build") return EnumerationMode::PermTimesBuild;
    if (name == "all-pairs" || name == "all_pair_orders") return EnumerationMode::AllPairOrders;
    throw InvalidInput("unknown enumeration mode '" + std::string(name) + "'");
}

std::string enumeration_size(std::size_t n, EnumerationMode mode) {
    const std::size_t m = mode == EnumerationMode::PermTimesBuild ? n : n * (n - 1) / 2;
    // log10(m!) via lgamma to stay readable for huge counts.
    const double log10_fact = std::lgamma(static_cast<double>(m) + 1.0) / std::log(10.0);
    const double factor = mode == EnumerationMode::PermTimesBuild ? 2.0 : 1.0;
    if (log10_fact < 15.0) {
        return fmt::format("{:.0f}", factor * std::round(std::exp(std::lgamma(m + 1.0))));
    }
    const double exponent = std::floor(log10_fact + std::log10(factor));
    const double mantissa = std::pow(10.0, log10_fact + std::log10(factor) - exponent);
    return fmt::format("{:.2f}e{:.0f}", mantissa, exponent);
}

OrderStream::OrderStream(std::size_t n, EnumerationMode mode) : n_(n), mode_(mode) {
    if (n < 2) throw InvalidInput("exhaustive enumeration needs dimension >= 2");
    const std::size_t limit =
        mode == EnumerationMode::PermTimesBuild ? kMaxPermTimesBuildDim : kMaxAllPairOrdersDim;
    if (n > limit) {
        throw InvalidInput(fmt::format(
            "{} enumeration is infeasible for n={}: it would require {} orders (limit n<={})",
            to_string(mode), n, enumeration_size(n, mode), limit));
    }
    if (mode == EnumerationMode::PermTimesBuild) {
        perm_ = Permutation::identity(n).values();
    } else {
        // Lexicographically smallest arrangement; next_permutation walks the rest.
        pairs_ = build1_order(Permutation::identity(n)).pairs();
        std::sort(pairs_.begin(), pairs_.end());
    }
}

std::optional<SelectionOrder> OrderStream::next() {
    if (mode_ == EnumerationMode::AllPairOrders) {
        if (done_) return std::nullopt;
        SelectionOrder out(n_, pairs_);
        done_ = !std::next_permutation(pairs_.begin(), pairs_.end());
        return out;
    }

    // For n >= 4 the orders are pairwise distinct: a Build 1 order starts with
    // three pairs sharing p1, a Build 2 order with a triangle, and either
    // prefix pins down P. Only n <= 3 needs the dedupe set.
    const bool dedupe = n_ <= 3;
    while (true) {
        if (pending_) {
            auto out = std::move(*pending_);
            pending_.reset();
            if (!dedupe || seen_.insert(out).second) return out;
            continue;
        }
        if (done_) return std::nullopt;
        const Permutation p(perm_);
        done_ = !std::next_permutation(perm_.begin(), perm_.end());
        pending_ = build2_order(p);
        auto out = build1_order(p);
        if (!dedupe || seen_.insert(out).second) return out;
    }
}

}  // namespace negcurv
