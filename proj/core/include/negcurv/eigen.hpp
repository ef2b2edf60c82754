#pragma once

#include <vector>

#include <Eigen/Dense>

#include "negcurv/sym_matrix.hpp"

namespace negcurv {

inline constexpr double kDefaultEigTol = 1e-10;

struct EigenPair {
    double value = 0.0;
    Eigen::VectorXd vector;  // unit norm
};

/// Smallest eigenvalue of a dense symmetric matrix. `tol` is the accepted
/// error relative to the spectral norm and must be positive.
double min_eigenvalue(const SymMatrix& a, double tol = kDefaultEigTol);

/// Smallest eigenvalue together with a unit eigenvector.
EigenPair min_eigenpair(const SymMatrix& a, double tol = kDefaultEigTol);

/// Full spectrum in ascending order.
std::vector<double> eigenvalues(const SymMatrix& a, double tol = kDefaultEigTol);

/// True iff the spectrum of principal_submatrix(a, s) interlaces the
/// spectrum of `a`: lambda_k <= beta_k <= lambda_{k+n-m}, with `slack`
/// absolute tolerance on every inequality.
bool interlacing_check(const SymMatrix& a, const IndexSet& s, double slack = 1e-8);

}  // namespace negcurv
