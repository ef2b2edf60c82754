#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace negcurv {

/// Off-diagonal coordinate (i, j) with i > j, 0-based.
struct Pair {
    std::size_t i = 0;
    std::size_t j = 0;

    /// Normalizes to i > j. Requires a != b.
    static Pair of(std::size_t a, std::size_t b);

    friend auto operator<=>(const Pair&, const Pair&) = default;
};

/// Bijection of {0, ..., n-1}.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<std::size_t> p);
    static Permutation identity(std::size_t n);

    std::size_t size() const noexcept { return p_.size(); }
    std::size_t operator[](std::size_t k) const { return p_[k]; }
    const std::vector<std::size_t>& values() const noexcept { return p_; }

    friend bool operator==(const Permutation&, const Permutation&) = default;

private:
    std::vector<std::size_t> p_;
};

/// Sequence in which off-diagonal coordinates are revealed. Covers every
/// unordered pair of {0..n-1} exactly once.
class SelectionOrder {
public:
    SelectionOrder() = default;
    /// Validates coverage.
    SelectionOrder(std::size_t n, std::vector<Pair> pairs);

    std::size_t dim() const noexcept { return n_; }
    std::size_t size() const noexcept { return pairs_.size(); }
    const Pair& operator[](std::size_t k) const { return pairs_[k]; }
    const std::vector<Pair>& pairs() const noexcept { return pairs_; }
    auto begin() const noexcept { return pairs_.begin(); }
    auto end() const noexcept { return pairs_.end(); }

    friend auto operator<=>(const SelectionOrder&, const SelectionOrder&) = default;

private:
    std::size_t n_ = 0;
    std::vector<Pair> pairs_;
};

enum class Heuristic { Ordered, S2Lde, L2Sde, Ide };
enum class Build { Build1, Build2 };

std::string_view to_string(Heuristic h);
std::string_view to_string(Build b);
Heuristic parse_heuristic(std::string_view name);
Build parse_build(std::string_view name);

struct VariantSpec {
    Heuristic heuristic = Heuristic::Ordered;
    Build build = Build::Build1;

    /// "<heuristic>/<build>", e.g. "s2lde/build2".
    std::string name() const;
    static VariantSpec parse(std::string_view name);

    friend auto operator<=>(const VariantSpec&, const VariantSpec&) = default;
};

/// The 8 heuristic x build combinations, build-major.
std::vector<VariantSpec> all_variants();

/// Index ordering driven by the diagonal. Ties keep the smaller index first.
Permutation heuristic_permutation(std::span<const double> diag, Heuristic h);

/// Row by row: (p1,p2), (p1,p3), ..., (p1,pn), (p2,p3), ..., (p(n-1),pn).
SelectionOrder build1_order(const Permutation& p);
/// Outward from the diagonal: (p2,p1), (p3,p2), (p3,p1), (p4,p3), ..., (pn,p1).
SelectionOrder build2_order(const Permutation& p);
SelectionOrder build_order(const Permutation& p, Build b);

/// heuristic_permutation followed by the build strategy.
SelectionOrder variant_order(std::span<const double> diag, const VariantSpec& v);

enum class EnumerationMode {
    PermTimesBuild,  // build1/build2 of every permutation, deduplicated
    AllPairOrders,   // every permutation of the n(n-1)/2 pairs
};

std::string_view to_string(EnumerationMode m);
EnumerationMode parse_enumeration_mode(std::string_view name);

inline constexpr std::size_t kMaxPermTimesBuildDim = 10;
inline constexpr std::size_t kMaxAllPairOrdersDim = 4;

/// Lazily yields the selection orders of an exhaustive mode. Single consumer.
class OrderStream {
public:
    /// Throws InvalidInput (naming the required order count) when the
    /// dimension is beyond the mode's limit.
    OrderStream(std::size_t n, EnumerationMode mode);

    std::optional<SelectionOrder> next();

private:
    std::size_t n_;
    EnumerationMode mode_;
    bool done_ = false;
    // PermTimesBuild state
    std::vector<std::size_t> perm_;
    std::optional<SelectionOrder> pending_;
    std::set<SelectionOrder> seen_;
    // AllPairOrders state
    std::vector<Pair> pairs_;
};

/// Number of orders a mode would enumerate before deduplication, as text
/// (may exceed 64 bits).
std::string enumeration_size(std::size_t n, EnumerationMode mode);

}  // namespace negcurv
