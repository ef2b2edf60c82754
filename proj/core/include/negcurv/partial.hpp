#pragma once

#include <cstddef>
#include <vector>

#include "negcurv/order.hpp"
#include "negcurv/sym_matrix.hpp"

namespace negcurv {

/// Undirected graph on matrix indices; an edge {i,j} means coefficient
/// (i,j) has been revealed. Cliques index fully known principal submatrices.
class FillGraph {
public:
    FillGraph() = default;
    explicit FillGraph(std::size_t n);

    std::size_t size() const noexcept { return n_; }
    std::size_t edge_count() const noexcept { return edges_; }
    bool has_edge(std::size_t i, std::size_t j) const;
    /// Returns false if the edge was already present.
    bool add_edge(std::size_t i, std::size_t j);
    /// Ascending neighbor list of v.
    const std::vector<std::size_t>& neighbors(std::size_t v) const { return adj_.at(v); }
    bool is_clique(const IndexSet& s) const;

private:
    std::size_t n_ = 0;
    std::size_t edges_ = 0;
    std::vector<char> matrix_;
    std::vector<std::vector<std::size_t>> adj_;
};

/// The partially revealed matrix: full diagonal plus the off-diagonal
/// coefficients revealed so far. Unrevealed entries read as zero.
class PartialHessian {
public:
    PartialHessian() = default;
    PartialHessian(std::vector<double> diag);

    std::size_t dim() const noexcept { return diag_.size(); }
    double diagonal(std::size_t i) const { return diag_.at(i); }
    bool revealed(std::size_t i, std::size_t j) const { return graph_.has_edge(i, j); }
    /// 0 when unrevealed.
    double operator()(std::size_t i, std::size_t j) const;
    /// Rejects re-revealing a coordinate.
    void reveal(Pair p, double value);

    std::size_t revealed_count() const noexcept { return graph_.edge_count(); }
    bool complete() const noexcept;
    const FillGraph& graph() const noexcept { return graph_; }

    /// Principal submatrix on a clique of the fill graph.
    SymMatrix submatrix(const IndexSet& s) const;
    /// Whole matrix with unrevealed entries as zero.
    SymMatrix matrix() const;

private:
    std::vector<double> diag_;
    SymMatrix values_;
    FillGraph graph_;
};

/// All maximal cliques of `g` containing both i and j, each as a sorted
/// index set. Equivalently {i,j} united with every maximal clique of the
/// subgraph induced on the common neighbors of i and j.
/// Throws InvalidInput if the edge {i,j} is absent.
std::vector<IndexSet> maximal_cliques_with_edge(const FillGraph& g, std::size_t i, std::size_t j);

}  // namespace negcurv
