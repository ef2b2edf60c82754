#pragma once

#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "negcurv/oracle.hpp"
#include "negcurv/sym_matrix.hpp"

namespace negcurv {

/// Blackbox function with a closed-form Hessian, used to validate the
/// finite-difference path.
class AnalyticFunction : public BlackboxFunction {
public:
    virtual std::string name() const = 0;
    virtual SymMatrix hessian(std::span<const double> x) const = 0;
};

/// f(x) = sum x_k^2
class SumOfSquares final : public AnalyticFunction {
public:
    explicit SumOfSquares(std::size_t n) : n_(n) {}
    std::size_t dim() const override { return n_; }
    double eval(std::span<const double> x) const override;
    std::string name() const override { return "sum-of-squares"; }
    SymMatrix hessian(std::span<const double> x) const override;

private:
    std::size_t n_;
};

/// f(x) = sum x_k^3. Hessian diag(6 x_k) is 6-Lipschitz in the 2-norm.
class SumOfCubes final : public AnalyticFunction {
public:
    explicit SumOfCubes(std::size_t n) : n_(n) {}
    std::size_t dim() const override { return n_; }
    double eval(std::span<const double> x) const override;
    std::string name() const override { return "sum-of-cubes"; }
    SymMatrix hessian(std::span<const double> x) const override;

    static constexpr double kLipschitz = 6.0;

private:
    std::size_t n_;
};

/// f(x) = sum_{i<j} x_i x_j. Constant Hessian 11^T - I, indefinite for n >= 2.
class ProductCoupling final : public AnalyticFunction {
public:
    explicit ProductCoupling(std::size_t n) : n_(n) {}
    std::size_t dim() const override { return n_; }
    double eval(std::span<const double> x) const override;
    std::string name() const override { return "product-coupling"; }
    SymMatrix hessian(std::span<const double> x) const override;

private:
    std::size_t n_;
};

/// f(x) = exp(sum x_k). Hessian exp(sum x_k) 11^T (positive semidefinite).
class ExpCoupling final : public AnalyticFunction {
public:
    explicit ExpCoupling(std::size_t n) : n_(n) {}
    std::size_t dim() const override { return n_; }
    double eval(std::span<const double> x) const override;
    std::string name() const override { return "exp-coupling"; }
    SymMatrix hessian(std::span<const double> x) const override;

private:
    std::size_t n_;
};

/// f(x) = 1/2 x^T Q x + b^T x
class QuadraticFunction final : public AnalyticFunction {
public:
    explicit QuadraticFunction(SymMatrix q, std::vector<double> b = {});
    std::size_t dim() const override { return q_.dim(); }
    double eval(std::span<const double> x) const override;
    std::string name() const override { return "quadratic"; }
    SymMatrix hessian(std::span<const double>) const override { return q_; }

private:
    SymMatrix q_;
    std::vector<double> b_;
};

/// Registry lookup. Recognized names: sum-of-squares, sum-of-cubes,
/// product-coupling, exp-coupling (all of dimension `dim`) and
/// quadratic:PATH (dimension taken from the matrix file).
/// Throws InvalidInput on unknown names.
std::unique_ptr<AnalyticFunction> make_function(std::string_view spec, std::size_t dim);

std::vector<std::string> registered_function_names();

}  // namespace negcurv
