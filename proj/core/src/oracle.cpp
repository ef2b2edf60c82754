#include "negcurv/oracle.hpp"

#include <cmath>
#include <string>

#include "negcurv/error.hpp"

namespace negcurv {
namespace {

void check_index(std::size_t i, std::size_t n) {
    if (i >= n) {
        throw InvalidInput("index " + std::to_string(i + 1) + " out of range for dimension " +
                           std::to_string(n));
    }
}

void check_pair(std::size_t i, std::size_t j, std::size_t n) {
    check_index(i, n);
    if (!(i > j)) throw InvalidInput("off-diagonal coordinate requires i > j");
}

std::string describe(const OffsetKey& k) {
    switch (k.kind) {
        case OffsetKey::Kind::Base: return "x";
        case OffsetKey::Kind::Plus: return "x+h*e" + std::to_string(k.i + 1);
        case OffsetKey::Kind::Minus: return "x-h*e" + std::to_string(k.i + 1);
        case OffsetKey::Kind::PlusPair:
            return "x+h*e" + std::to_string(k.i + 1) + "+h*e" + std::to_string(k.j + 1);
    }
    return "?";
}

}  // namespace

ExactOracle::ExactOracle(SymMatrix a)
    : a_(std::move(a)), seen_(a_.dim() * (a_.dim() + 1) / 2, false) {}

void ExactOracle::touch(std::size_t i, std::size_t j) {
    const std::size_t slot = i * (i + 1) / 2 + j;
    if (!seen_[slot]) {
        seen_[slot] = true;
        ++cost_;
    }
}

double ExactOracle::diagonal(std::size_t i) {
    check_index(i, dim());
    touch(i, i);
    return a_(i, i);
}

double ExactOracle::offdiagonal(std::size_t i, std::size_t j) {
    check_pair(i, j, dim());
    touch(i, j);
    return a_(i, j);
}

FDOracle::FDOracle(const BlackboxFunction& f, std::vector<double> x, double h)
    : f_(&f), x_(std::move(x)), h_(h), scratch_(x_) {
    if (!(h_ > 0.0) || !std::isfinite(h_)) throw InvalidInput("finite-difference step must be positive");
    if (x_.empty()) throw InvalidInput("base point must have dimension >= 1");
    if (x_.size() != f.dim()) {
        throw InvalidInput("base point has dimension " + std::to_string(x_.size()) +
                           " but function expects " + std::to_string(f.dim()));
    }
}

std::size_t FDOracle::cost() const {
    return cache_.size() - (base_evaluated() ? 1 : 0);
}

double FDOracle::value(OffsetKey key) {
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;

    scratch_ = x_;
    switch (key.kind) {
        case OffsetKey::Kind::Base: break;
        case OffsetKey::Kind::Plus: scratch_[key.i] += h_; break;
        case OffsetKey::Kind::Minus: scratch_[key.i] -= h_; break;
        case OffsetKey::Kind::PlusPair:
            scratch_[key.i] += h_;
            scratch_[key.j] += h_;
            break;
    }
    const double v = f_->eval(scratch_);
    if (!std::isfinite(v)) {
        throw EvaluationError("non-finite function value at " + describe(key));
    }
    cache_.emplace(key, v);
    return v;
}

double FDOracle::diagonal(std::size_t i) {
    check_index(i, dim());
    const auto k = static_cast<std::uint32_t>(i);
    const double fp = value(OffsetKey::plus(k));
    const double f0 = value(OffsetKey::base());
    const double fm = value(OffsetKey::minus(k));
    return (fp - 2.0 * f0 + fm) / (h_ * h_);
}

double FDOracle::offdiagonal(std::size_t i, std::size_t j) {
    check_pair(i, j, dim());
    const auto a = static_cast<std::uint32_t>(i);
    const auto b = static_cast<std::uint32_t>(j);
    const double fij = value(OffsetKey::plus_pair(a, b));
    const double fi = value(OffsetKey::plus(a));
    const double fj = value(OffsetKey::plus(b));
    const double f0 = value(OffsetKey::base());
    return (fij - fi - fj + f0) / (h_ * h_);
}

double fd_diagonal(const BlackboxFunction& f, std::span<const double> x, double h,
                   std::size_t i) {
    FDOracle oracle(f, {x.begin(), x.end()}, h);
    return oracle.diagonal(i);
}

double fd_offdiagonal(const BlackboxFunction& f, std::span<const double> x, double h,
                      std::size_t i, std::size_t j) {
    FDOracle oracle(f, {x.begin(), x.end()}, h);
    return oracle.offdiagonal(i, j);
}

FDHessian fd_full_hessian(const BlackboxFunction& f, std::span<const double> x, double h) {
    FDOracle oracle(f, {x.begin(), x.end()}, h);
    const std::size_t n = oracle.dim();
    SymMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, oracle.diagonal(i));
    for (std::size_t i = 1; i < n; ++i) {
        for (std::size_t j = 0; j < i; ++j) m.set(i, j, oracle.offdiagonal(i, j));
    }
    return {std::move(m), oracle.total_evaluations()};
}

double error_bound(std::size_t n, double lipschitz, double h) {
    if (n < 1) throw InvalidInput("dimension must be >= 1");
    if (!(lipschitz >= 0.0)) throw InvalidInput("Lipschitz constant must be nonnegative");
    if (!(h >= 0.0)) throw InvalidInput("finite-difference step must be nonnegative");
    return 5.0 / 3.0 * std::sqrt(static_cast<double>(n)) * lipschitz * h;
}

}  // namespace negcurv
