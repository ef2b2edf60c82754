#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "negcurv/sym_matrix.hpp"

namespace negcurv {

/// Coefficient-wise access to a symmetric (Hessian) matrix. Indices are
/// 0-based. Repeated queries of a coordinate return the identical value
/// and cost nothing extra.
class HessianOracle {
public:
    virtual ~HessianOracle() = default;

    virtual std::size_t dim() const = 0;
    virtual double diagonal(std::size_t i) = 0;
    /// Requires i > j.
    virtual double offdiagonal(std::size_t i, std::size_t j) = 0;
    /// Evaluation count in the oracle's cost currency.
    virtual std::size_t cost() const = 0;
};

/// Reads coefficients from a stored matrix; cost is the number of distinct
/// coordinates revealed.
class ExactOracle final : public HessianOracle {
public:
    explicit ExactOracle(SymMatrix a);

    std::size_t dim() const override { return a_.dim(); }
    double diagonal(std::size_t i) override;
    double offdiagonal(std::size_t i, std::size_t j) override;
    std::size_t cost() const override { return cost_; }

    const SymMatrix& matrix() const noexcept { return a_; }

private:
    void touch(std::size_t i, std::size_t j);

    SymMatrix a_;
    std::vector<bool> seen_;  // packed lower triangle
    std::size_t cost_ = 0;
};

/// Objective function known only through point evaluations.
/// Implementations must be deterministic and reentrant.
class BlackboxFunction {
public:
    virtual ~BlackboxFunction() = default;
    virtual std::size_t dim() const = 0;
    virtual double eval(std::span<const double> x) const = 0;
};

/// Symbolic name of an evaluation point relative to the base point x:
/// x, x + h e_i, x - h e_i, or x + h e_i + h e_j (i > j).
struct OffsetKey {
    enum class Kind : std::uint8_t { Base, Plus, Minus, PlusPair };

    Kind kind = Kind::Base;
    std::uint32_t i = 0;
    std::uint32_t j = 0;

    static constexpr OffsetKey base() { return {}; }
    static constexpr OffsetKey plus(std::uint32_t i) { return {Kind::Plus, i, 0}; }
    static constexpr OffsetKey minus(std::uint32_t i) { return {Kind::Minus, i, 0}; }
    static constexpr OffsetKey plus_pair(std::uint32_t i, std::uint32_t j) {
        return {Kind::PlusPair, i, j};
    }

    friend constexpr auto operator<=>(const OffsetKey&, const OffsetKey&) = default;
};

/// Finite-difference Hessian oracle over a blackbox function:
///
///   H(i,i) = (f(x + h e_i) - 2 f(x) + f(x - h e_i)) / h^2
///   H(i,j) = (f(x + h e_i + h e_j) - f(x + h e_i) - f(x + h e_j) + f(x)) / h^2
///
/// Function values are cached by symbolic offset, never by coordinates.
/// cost() excludes f(x) itself, so a full sweep costs 2n + n(n-1)/2.
/// The function must outlive the oracle.
class FDOracle final : public HessianOracle {
public:
    FDOracle(const BlackboxFunction& f, std::vector<double> x, double h);

    std::size_t dim() const override { return x_.size(); }
    double diagonal(std::size_t i) override;
    double offdiagonal(std::size_t i, std::size_t j) override;
    std::size_t cost() const override;

    /// Distinct evaluations including f(x).
    std::size_t total_evaluations() const noexcept { return cache_.size(); }
    bool base_evaluated() const noexcept { return cache_.contains(OffsetKey::base()); }
    double step() const noexcept { return h_; }
    std::span<const double> point() const noexcept { return x_; }

    /// Evaluate (or fetch) f at the named offset.
    double value(OffsetKey key);

private:
    const BlackboxFunction* f_;
    std::vector<double> x_;
    double h_;
    std::map<OffsetKey, double> cache_;
    std::vector<double> scratch_;
};

double fd_diagonal(const BlackboxFunction& f, std::span<const double> x, double h,
                   std::size_t i);
/// Requires i > j.
double fd_offdiagonal(const BlackboxFunction& f, std::span<const double> x, double h,
                      std::size_t i, std::size_t j);

struct FDHessian {
    SymMatrix matrix;
    std::size_t evaluations = 0;  // including f(x)
};

/// Every coefficient of the finite-difference Hessian, from a cold cache.
FDHessian fd_full_hessian(const BlackboxFunction& f, std::span<const double> x, double h);

/// (5/3) sqrt(n) L h: spectral-norm bound on the finite-difference Hessian
/// error (and on the min-eigenvalue error) when the true Hessian is
/// L-Lipschitz on the ball of radius h around x.
double error_bound(std::size_t n, double lipschitz, double h);

}  // namespace negcurv
