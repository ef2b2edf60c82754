#include "negcurv/functions.hpp"

#include <cmath>
#include <numeric>

#include "negcurv/error.hpp"
#include "negcurv/matrix_io.hpp"

namespace negcurv {
namespace {

void check_dim(std::span<const double> x, std::size_t n) {
    if (x.size() != n) {
        throw InvalidInput("point has dimension " + std::to_string(x.size()) + ", expected " +
                           std::to_string(n));
    }
}

}  // namespace

double SumOfSquares::eval(std::span<const double> x) const {
    check_dim(x, n_);
    double s = 0.0;
    for (double v : x) s += v * v;
    return s;
}

SymMatrix SumOfSquares::hessian(std::span<const double> x) const {
    check_dim(x, n_);
    SymMatrix h(n_);
    for (std::size_t i = 0; i < n_; ++i) h.set(i, i, 2.0);
    return h;
}

double SumOfCubes::eval(std::span<const double> x) const {
    check_dim(x, n_);
    double s = 0.0;
    for (double v : x) s += v * v * v;
    return s;
}

SymMatrix SumOfCubes::hessian(std::span<const double> x) const {
    check_dim(x, n_);
    SymMatrix h(n_);
    for (std::size_t i = 0; i < n_; ++i) h.set(i, i, 6.0 * x[i]);
    return h;
}

double ProductCoupling::eval(std::span<const double> x) const {
    check_dim(x, n_);
    double s = 0.0;
    for (std::size_t i = 1; i < n_; ++i) {
        for (std::size_t j = 0; j < i; ++j) s += x[i] * x[j];
    }
    return s;
}

SymMatrix ProductCoupling::hessian(std::span<const double> x) const {
    check_dim(x, n_);
    SymMatrix h(n_);
    for (std::size_t i = 1; i < n_; ++i) {
        for (std::size_t j = 0; j < i; ++j) h.set(i, j, 1.0);
    }
    return h;
}

double ExpCoupling::eval(std::span<const double> x) const {
    check_dim(x, n_);
    return std::exp(std::accumulate(x.begin(), x.end(), 0.0));
}

SymMatrix ExpCoupling::hessian(std::span<const double> x) const {
    check_dim(x, n_);
    const double e = eval(x);
    SymMatrix h(n_);
    for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t j = 0; j <= i; ++j) h.set(i, j, e);
    }
    return h;
}

QuadraticFunction::QuadraticFunction(SymMatrix q, std::vector<double> b)
    : q_(std::move(q)), b_(std::move(b)) {
    if (b_.empty()) b_.assign(q_.dim(), 0.0);
    if (b_.size() != q_.dim()) throw InvalidInput("linear term dimension mismatch");
}

double QuadraticFunction::eval(std::span<const double> x) const {
    const std::size_t n = q_.dim();
    check_dim(x, n);
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double row = 0.5 * q_(i, i) * x[i];
        for (std::size_t j = 0; j < i; ++j) row += q_(i, j) * x[j];
        s += x[i] * row + b_[i] * x[i];
    }
    return s;
}

std::unique_ptr<AnalyticFunction> make_function(std::string_view spec, std::size_t dim) {
    constexpr std::string_view quad_prefix = "quadratic:";
    if (spec.starts_with(quad_prefix)) {
        const std::string path(spec.substr(quad_prefix.size()));
        if (path.empty()) throw InvalidInput("quadratic:PATH requires a matrix file path");
        return std::make_unique<QuadraticFunction>(load_matrix(path, MatrixFormat::Auto));
    }
    if (dim < 1) throw InvalidInput("function dimension must be >= 1");
    if (spec == "sum-of-squares") return std::make_unique<SumOfSquares>(dim);
    if (spec == "sum-of-cubes") return std::make_unique<SumOfCubes>(dim);
    if (spec == "product-coupling") return std::make_unique<ProductCoupling>(dim);
    if (spec == "exp-coupling") return std::make_unique<ExpCoupling>(dim);
    throw InvalidInput("unknown function '" + std::string(spec) + "'");
}

std::vector<std::string> registered_function_names() {
    return {"sum-of-squares", "sum-of-cubes", "product-coupling", "exp-coupling",
            "quadratic:PATH"};
}

}  // namespace negcurv
