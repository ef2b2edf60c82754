#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include <Eigen/Dense>
#include <nlohmann/json_fwd.hpp>

#include "negcurv/eigen.hpp"
#include "negcurv/error.hpp"
#include "negcurv/oracle.hpp"
#include "negcurv/order.hpp"
#include "negcurv/partial.hpp"

namespace negcurv {

enum class SeekStatus {
    NegativeFound,     // stopped early on a submatrix with lambda < -epsilon
    DiagonalNegative,  // some diagonal entry < -epsilon; no off-diagonal revealed
    Exhausted,         // every coordinate revealed; lambda is lambda_min of the whole matrix
};

std::string_view to_string(SeekStatus s);
SeekStatus parse_seek_status(std::string_view name);

/// Index set of a fully revealed principal submatrix plus a unit
/// eigenvector of that submatrix for its smallest eigenvalue.
struct Certificate {
    IndexSet indices;
    Eigen::VectorXd vector;
};

struct SeekerConfig {
    double epsilon = 0.0;
    double eig_tol = kDefaultEigTol;
    /// Also report the minimum of lambda over all iterations.
    bool track_global_min = false;
};

struct SeekerResult {
    double lambda = 0.0;
    PartialHessian partial;
    std::size_t iterations = 0;
    SeekStatus status = SeekStatus::Exhausted;
    /// Present whenever lambda < -epsilon.
    std::optional<Certificate> certificate;
    std::size_t oracle_cost = 0;
    double epsilon = 0.0;
    std::optional<double> global_min;

    bool negative() const noexcept { return lambda < -epsilon; }
};

/// Oracle failure during a run, carrying the state reached so far.
class SeekError : public EvaluationError {
public:
    SeekError(const std::string& what, PartialHessian partial, std::size_t iterations)
        : EvaluationError(what), partial_(std::move(partial)), iterations_(iterations) {}

    const PartialHessian& partial() const noexcept { return partial_; }
    std::size_t iterations() const noexcept { return iterations_; }

private:
    PartialHessian partial_;
    std::size_t iterations_;
};

/// Reveals the diagonal, then off-diagonal coefficients in `order`. After
/// each reveal (i,j), lambda is the smallest eigenvalue over the largest
/// fully revealed principal submatrices containing (i,j); the loop stops
/// once lambda < -epsilon or every coordinate is known. lambda is never
/// below lambda_min of the underlying matrix.
SeekerResult seek(HessianOracle& oracle, const SelectionOrder& order, const SeekerConfig& config = {});

/// Certificate eigenvector zero-padded to dimension n: d^T H d = lambda |d|^2.
Eigen::VectorXd descent_direction(std::size_t n, const Certificate& certificate);
Eigen::VectorXd descent_direction(const PartialHessian& partial, const Certificate& certificate);

/// lambda + error_bound(n, L, h); an upper bound on lambda_min of the true
/// Hessian when it is L-Lipschitz on the h-ball. L = 0 or h = 0 gives the
/// exact-oracle bound lambda.
double certified_upper_bound(const SeekerResult& result, std::size_t n, double lipschitz, double h);

/// Structured record: lambda, iterations, status, certificate (1-based
/// indices and eigenvector), oracle_cost, n, epsilon, and `variant` when given.
nlohmann::json to_json(const SeekerResult& result, std::string_view variant = {});

}  // namespace negcurv
