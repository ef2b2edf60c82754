#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace negcurv {

/// Strictly increasing, nonempty list of 0-based matrix indices.
class IndexSet {
public:
    IndexSet() = default;
    explicit IndexSet(std::vector<std::size_t> indices);
    IndexSet(std::initializer_list<std::size_t> indices);

    /// {0, 1, ..., n-1}
    static IndexSet all(std::size_t n);

    std::size_t size() const noexcept { return idx_.size(); }
    bool empty() const noexcept { return idx_.empty(); }
    std::size_t operator[](std::size_t k) const { return idx_[k]; }
    std::size_t back() const { return idx_.back(); }
    bool contains(std::size_t i) const;

    const std::vector<std::size_t>& indices() const noexcept { return idx_; }
    auto begin() const noexcept { return idx_.begin(); }
    auto end() const noexcept { return idx_.end(); }

    friend bool operator==(const IndexSet&, const IndexSet&) = default;
    friend auto operator<=>(const IndexSet&, const IndexSet&) = default;

private:
    std::vector<std::size_t> idx_;
};

/// Dense real symmetric matrix. One physical slot per unordered pair
/// (packed lower triangle), so (i,j) and (j,i) can never disagree.
class SymMatrix {
public:
    SymMatrix() = default;
    /// n x n zero matrix.
    explicit SymMatrix(std::size_t n);

    static SymMatrix identity(std::size_t n);
    static SymMatrix diagonal(std::span<const double> diag);
    /// Row-major nested initializer; rejects asymmetric or non-square input.
    static SymMatrix from_rows(std::initializer_list<std::initializer_list<double>> rows);
    /// Requires exact symmetry of `m`.
    static SymMatrix from_dense(const Eigen::MatrixXd& m);
    /// Averages (m + m^T)/2; no symmetry check.
    static SymMatrix symmetrized(const Eigen::MatrixXd& m);

    std::size_t dim() const noexcept { return n_; }

    double operator()(std::size_t i, std::size_t j) const { return data_[slot(i, j)]; }
    void set(std::size_t i, std::size_t j, double v);

    std::vector<double> diag() const;
    Eigen::MatrixXd dense() const;

    /// Largest absolute entry (0 for the empty matrix).
    double max_abs() const noexcept;
    /// Spectral norm, i.e. the largest absolute eigenvalue.
    double spectral_norm() const;
    bool all_finite() const noexcept;

    friend bool operator==(const SymMatrix&, const SymMatrix&) = default;

private:
    std::size_t slot(std::size_t i, std::size_t j) const;

    std::size_t n_ = 0;
    std::vector<double> data_;
};

/// |S| x |S| matrix with entry (a,b) = A(S[a], S[b]).
SymMatrix principal_submatrix(const SymMatrix& a, const IndexSet& s);

}  // namespace negcurv
