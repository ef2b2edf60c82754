#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "negcurv/order.hpp"
#include "negcurv/seeker.hpp"
#include "negcurv/sym_matrix.hpp"

namespace negcurv {

enum class Transform { None, Permute, Orthogonal };

std::string_view to_string(Transform t);
Transform parse_transform(std::string_view name);

/// One benchmark instance. With `h` set, the seeker sees the matrix through
/// finite differences of the quadratic 1/2 x^T A x at x = 0 with step h.
struct MatrixCase {
    std::string id;
    std::string source;
    SymMatrix matrix;
    Transform transform = Transform::None;
    std::optional<double> h;
};

/// Matrix files (*.mtx, *.mm, *.txt, *.dat) in `dir`, sorted by name; id = file stem.
std::vector<MatrixCase> load_suite(const std::filesystem::path& dir);

struct SyntheticSuiteSpec {
    std::size_t count = 100;
    std::size_t min_n = 4;
    std::size_t max_n = 10;
    std::size_t min_neg = 1;
    std::size_t max_neg = 2;

    /// "count=100,n=4-10,neg=1-2" (any subset of keys; single values allowed).
    static SyntheticSuiteSpec parse(std::string_view text);
};

/// Cases "syn-000", "syn-001", ... each drawn from its own case stream.
std::vector<MatrixCase> synthetic_suite(const SyntheticSuiteSpec& spec, std::uint64_t seed);

/// Returns (kept, discarded); discarded cases have a diagonal entry < 0.
std::pair<std::vector<MatrixCase>, std::vector<MatrixCase>> filter_negative_diagonal(
    std::vector<MatrixCase> cases);

/// Applies `t` to every case (id gains "@permute"/"@orthogonal"); the
/// transform seed is derived from `seed` and the case id.
std::vector<MatrixCase> apply_transform(const std::vector<MatrixCase>& cases, Transform t,
                                        std::uint64_t seed);

/// One finite-difference copy of every case per step (id gains "@h=<h>").
std::vector<MatrixCase> with_fd_steps(const std::vector<MatrixCase>& cases,
                                      const std::vector<double>& steps);

struct BenchRecord {
    std::string case_id;
    VariantSpec variant;
    std::size_t n = 0;
    Transform transform = Transform::None;
    std::optional<double> h;
    std::optional<SeekStatus> status;  // empty when the run failed
    std::size_t iterations = 0;
    double lambda = 0.0;
    std::size_t oracle_cost = 0;
    std::string error;

    bool ok() const noexcept { return status.has_value(); }
};

struct GridConfig {
    SeekerConfig seeker;
    /// 0 = hardware concurrency.
    unsigned threads = 0;
};

/// Runs one case under one variant: the permutation heuristic reads the
/// oracle's diagonal, the build turns it into an order, then seek().
SeekerResult run_variant(const MatrixCase& c, const VariantSpec& v, const SeekerConfig& config);

/// Every (case, variant) combination, in case-major order. Failures are
/// recorded in the record, not thrown.
std::vector<BenchRecord> run_grid(const std::vector<MatrixCase>& cases,
                                  const std::vector<VariantSpec>& variants,
                                  const GridConfig& config = {});

struct WinnerTable {
    std::vector<VariantSpec> variants;
    std::vector<std::size_t> wins;
    std::vector<double> percent;
    std::size_t cases = 0;
    /// Cases left out because some variant failed on them.
    std::size_t excluded = 0;

    double percent_of(const VariantSpec& v) const;
};

/// A case is won by every variant reaching its minimal iteration count,
/// so rows can sum above 100. Throws InvalidInput if the records do not
/// form a full grid.
WinnerTable winner_table(const std::vector<BenchRecord>& records);

/// One decimal, as in "59.8".
std::string format_percent(double p);

/// Plain-text 2 x 4 table (builds by heuristics).
std::string render_winner_table(const WinnerTable& t);

enum class OrderedBaseline {
    Build1,
    Build2,
    BetterOfBoth,  // min over Build 1 and Build 2 with P = identity
};

std::string_view to_string(OrderedBaseline b);
OrderedBaseline parse_ordered_baseline(std::string_view name);

struct ExhaustiveResult {
    std::size_t best_iterations = 0;
    SelectionOrder best_order;  // first order achieving the minimum
    std::size_t ordered_iterations = 0;
    std::size_t gap = 0;
    std::size_t orders_evaluated = 0;
};

/// Runs the exact seeker over every order of `mode` and compares the best
/// iteration count with the Ordered baseline.
ExhaustiveResult exhaustive_compare(const SymMatrix& a, EnumerationMode mode,
                                    OrderedBaseline baseline = OrderedBaseline::BetterOfBoth,
                                    const SeekerConfig& config = {});

struct GapHistogram {
    std::map<std::size_t, std::size_t> counts;  // gap -> number of cases
    std::vector<ExhaustiveResult> per_case;
};

GapHistogram ordered_vs_best(const std::vector<MatrixCase>& cases, EnumerationMode mode,
                             OrderedBaseline baseline = OrderedBaseline::BetterOfBoth,
                             const SeekerConfig& config = {});

/// CSV header plus one row per record:
/// case_id,variant,status,iterations,lambda,oracle_cost,n,transform,h
void write_csv(std::ostream& out, const std::vector<BenchRecord>& records);

/// Winner tables grouped by transform and step h, for all dimensions and
/// for n >= 4, plus failure counts.
nlohmann::json bench_summary(const std::vector<BenchRecord>& records);

}  // namespace negcurv
