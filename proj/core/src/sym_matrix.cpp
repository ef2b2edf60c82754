#include "negcurv/sym_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "negcurv/eigen.hpp"
#include "negcurv/error.hpp"

namespace negcurv {

IndexSet::IndexSet(std::vector<std::size_t> indices) : idx_(std::move(indices)) {
    if (idx_.empty()) throw InvalidInput("index set must be nonempty");
    for (std::size_t k = 1; k < idx_.size(); ++k) {
        if (idx_[k] <= idx_[k - 1]) {
            throw InvalidInput("index set must be strictly increasing");
        }
    }
}

IndexSet::IndexSet(std::initializer_list<std::size_t> indices)
    : IndexSet(std::vector<std::size_t>(indices)) {}

IndexSet IndexSet::all(std::size_t n) {
    std::vector<std::size_t> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = i;
    return IndexSet(std::move(v));
}

bool IndexSet::contains(std::size_t i) const {
    return std::binary_search(idx_.begin(), idx_.end(), i);
}

SymMatrix::SymMatrix(std::size_t n) : n_(n), data_(n * (n + 1) / 2, 0.0) {}

SymMatrix SymMatrix::identity(std::size_t n) {
    SymMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1.0);
    return m;
}

SymMatrix SymMatrix::diagonal(std::span<const double> diag) {
    SymMatrix m(diag.size());
    for (std::size_t i = 0; i < diag.size(); ++i) m.set(i, i, diag[i]);
    return m;
}

SymMatrix SymMatrix::from_rows(std::initializer_list<std::initializer_list<double>> rows) {
    const std::size_t n = rows.size();
    Eigen::MatrixXd m(n, n);
    std::size_t i = 0;
    for (const auto& row : rows) {
        if (row.size() != n) throw InvalidInput("matrix must be square");
        std::size_t j = 0;
        for (double v : row) m(i, j++) = v;
        ++i;
    }
    return from_dense(m);
}

SymMatrix SymMatrix::from_dense(const Eigen::MatrixXd& m) {
    if (m.rows() != m.cols()) throw InvalidInput("matrix must be square");
    const auto n = static_cast<std::size_t>(m.rows());
    SymMatrix out(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j <= i; ++j) {
            const double a = m(i, j);
            const double b = m(j, i);
            if (a != b && !(std::isnan(a) && std::isnan(b))) {
                throw InvalidInput("matrix is not symmetric at (" + std::to_string(i + 1) +
                                   "," + std::to_string(j + 1) + ")");
            }
            out.set(i, j, a);
        }
    }
    return out;
}

SymMatrix SymMatrix::symmetrized(const Eigen::MatrixXd& m) {
    if (m.rows() != m.cols()) throw InvalidInput("matrix must be square");
    const auto n = static_cast<std::size_t>(m.rows());
    SymMatrix out(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j <= i; ++j) out.set(i, j, 0.5 * (m(i, j) + m(j, i)));
    }
    return out;
}

std::size_t SymMatrix::slot(std::size_t i, std::size_t j) const {
    if (i >= n_ || j >= n_) {
        throw InvalidInput("index (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                           ") out of range for dimension " + std::to_string(n_));
    }
    if (i < j) std::swap(i, j);
    return i * (i + 1) / 2 + j;
}

void SymMatrix::set(std::size_t i, std::size_t j, double v) { data_[slot(i, j)] = v; }

std::vector<double> SymMatrix::diag() const {
    std::vector<double> d(n_);
    for (std::size_t i = 0; i < n_; ++i) d[i] = (*this)(i, i);
    return d;
}

Eigen::MatrixXd SymMatrix::dense() const {
    const auto n = static_cast<Eigen::Index>(n_);
    Eigen::MatrixXd m(n, n);
    for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t j = 0; j <= i; ++j) {
            const double v = data_[i * (i + 1) / 2 + j];
            m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = v;
            m(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(i)) = v;
        }
    }
    return m;
}

double SymMatrix::max_abs() const noexcept {
    double m = 0.0;
    for (double v : data_) m = std::max(m, std::abs(v));
    return m;
}

double SymMatrix::spectral_norm() const {
    if (n_ == 0) return 0.0;
    const auto ev = eigenvalues(*this);
    return std::max(std::abs(ev.front()), std::abs(ev.back()));
}

bool SymMatrix::all_finite() const noexcept {
    return std::all_of(data_.begin(), data_.end(), [](double v) { return std::isfinite(v); });
}

SymMatrix principal_submatrix(const SymMatrix& a, const IndexSet& s) {
    if (s.empty()) throw InvalidInput("index set must be nonempty");
    if (s.back() >= a.dim()) {
        throw InvalidInput("index " + std::to_string(s.back() + 1) +
                           " out of range for dimension " + std::to_string(a.dim()));
    }
    if (s.size() == a.dim()) return a;
    SymMatrix b(s.size());
    for (std::size_t p = 0; p < s.size(); ++p) {
        for (std::size_t q = 0; q <= p; ++q) b.set(p, q, a(s[p], s[q]));
    }
    return b;
}

}  // namespace negcurv
