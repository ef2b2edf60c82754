#include "negcurv/eigen.hpp"

#include <cmath>

#include "negcurv/error.hpp"

namespace negcurv {
namespace {

void check_input(const SymMatrix& a, double tol) {
    if (!(tol > 0.0)) throw InvalidInput("eigensolver tolerance must be positive");
    if (a.dim() == 0) throw InvalidInput("matrix must have dimension >= 1");
    if (!a.all_finite()) throw InvalidInput("matrix has non-finite entries");
}

}  // namespace

// Eigen's self-adjoint solver (Householder tridiagonalization followed by
// implicit symmetric QR) converges to a backward error of order
// eps * ||A||, well inside any positive `tol` the callers use.
double min_eigenvalue(const SymMatrix& a, double tol) {
    check_input(a, tol);
    if (a.dim() == 1) return a(0, 0);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a.dense(), Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) throw InvalidInput("eigensolver failed to converge");
    return solver.eigenvalues()(0);
}

EigenPair min_eigenpair(const SymMatrix& a, double tol) {
    check_input(a, tol);
    if (a.dim() == 1) return {a(0, 0), Eigen::VectorXd::Ones(1)};
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a.dense(), Eigen::ComputeEigenvectors);
    if (solver.info() != Eigen::Success) throw InvalidInput("eigensolver failed to converge");
    Eigen::VectorXd v = solver.eigenvectors().col(0);
    // Fix the sign so results are reproducible: largest-magnitude entry positive.
    Eigen::Index k = 0;
    v.cwiseAbs().maxCoeff(&k);
    if (v(k) < 0) v = -v;
    return {solver.eigenvalues()(0), v.normalized()};
}

std::vector<double> eigenvalues(const SymMatrix& a, double tol) {
    check_input(a, tol);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a.dense(), Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) throw InvalidInput("eigensolver failed to converge");
    const Eigen::VectorXd& ev = solver.eigenvalues();
    return {ev.data(), ev.data() + ev.size()};
}

bool interlacing_check(const SymMatrix& a, const IndexSet& s, double slack) {
    const SymMatrix b = principal_submatrix(a, s);
    const auto lam = eigenvalues(a);
    const auto beta = eigenvalues(b);
    const std::size_t n = lam.size();
    const std::size_t m = beta.size();
    for (std::size_t k = 0; k < m; ++k) {
        if (lam[k] > beta[k] + slack) return false;
        if (beta[k] > lam[k + n - m] + slack) return false;
    }
    return true;
}

}  // namespace negcurv
