#include "negcurv/partial.hpp"

#include <algorithm>
#include <iterator>

#include <fmt/format.h>

#include "negcurv/error.hpp"

namespace negcurv {

FillGraph::FillGraph(std::size_t n) : n_(n), matrix_(n * n, 0), adj_(n) {}

bool FillGraph::has_edge(std::size_t i, std::size_t j) const {
    if (i >= n_ || j >= n_) throw InvalidInput("vertex out of range");
    return i != j && matrix_[i * n_ + j] != 0;
}

bool FillGraph::add_edge(std::size_t i, std::size_t j) {
    if (i >= n_ || j >= n_ || i == j) throw InvalidInput("invalid edge");
    if (matrix_[i * n_ + j]) return false;
    matrix_[i * n_ + j] = matrix_[j * n_ + i] = 1;
    adj_[i].insert(std::lower_bound(adj_[i].begin(), adj_[i].end(), j), j);
    adj_[j].insert(std::lower_bound(adj_[j].begin(), adj_[j].end(), i), i);
    ++edges_;
    return true;
}

bool FillGraph::is_clique(const IndexSet& s) const {
    for (std::size_t a = 0; a < s.size(); ++a) {
        for (std::size_t b = 0; b < a; ++b) {
            if (!has_edge(s[a], s[b])) return false;
        }
    }
    return true;
}

PartialHessian::PartialHessian(std::vector<double> diag)
    : diag_(std::move(diag)), values_(diag_.size()), graph_(diag_.size()) {
    for (std::size_t i = 0; i < diag_.size(); ++i) values_.set(i, i, diag_[i]);
}

double PartialHessian::operator()(std::size_t i, std::size_t j) const {
    if (i == j) return diagonal(i);
    return graph_.has_edge(i, j) ? values_(i, j) : 0.0;
}

void PartialHessian::reveal(Pair p, double value) {
    if (!graph_.add_edge(p.i, p.j)) {
        throw InvalidInput(fmt::format("coordinate ({},{}) already revealed", p.i + 1, p.j + 1));
    }
    values_.set(p.i, p.j, value);
}

bool PartialHessian::complete() const noexcept {
    const std::size_t n = dim();
    return graph_.edge_count() == n * (n - (n > 0 ? 1 : 0)) / 2;
}

SymMatrix PartialHessian::submatrix(const IndexSet& s) const {
    if (!graph_.is_clique(s)) throw InvalidInput("index set is not fully revealed");
    return principal_submatrix(values_, s);
}

SymMatrix PartialHessian::matrix() const { return values_; }

namespace {

using Set = std::vector<std::size_t>;  // sorted

Set intersect(const Set& a, const Set& b) {
    Set out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

// Bron-Kerbosch with Tomita pivoting.
void bron_kerbosch(const FillGraph& g, Set& r, Set p, Set x, std::vector<Set>& out) {
    if (p.empty() && x.empty()) {
        out.push_back(r);
        return;
    }
    std::size_t pivot = p.empty() ? x.front() : p.front();
    std::size_t best = 0;
    for (const Set* s : {&p, &x}) {
        for (std::size_t u : *s) {
            const std::size_t c = intersect(p, g.neighbors(u)).size();
            if (c >= best) {
                best = c;
                pivot = u;
            }
        }
    }
    Set candidates;
    std::set_difference(p.begin(), p.end(), g.neighbors(pivot).begin(), g.neighbors(pivot).end(),
                        std::back_inserter(candidates));
    for (std::size_t v : candidates) {
        const auto& nv = g.neighbors(v);
        r.insert(std::lower_bound(r.begin(), r.end(), v), v);
        bron_kerbosch(g, r, intersect(p, nv), intersect(x, nv), out);
        r.erase(std::lower_bound(r.begin(), r.end(), v));
        p.erase(std::lower_bound(p.begin(), p.end(), v));
        x.insert(std::lower_bound(x.begin(), x.end(), v), v);
    }
}

}  // namespace

std::vector<IndexSet> maximal_cliques_with_edge(const FillGraph& g, std::size_t i, std::size_t j) {
    if (!g.has_edge(i, j)) {
        throw InvalidInput(fmt::format("edge ({},{}) is not in the fill graph", i + 1, j + 1));
    }
    const Set common = intersect(g.neighbors(i), g.neighbors(j));
    std::vector<Set> cliques;
    Set r;
    bron_kerbosch(g, r, common, {}, cliques);

    std::vector<IndexSet> out;
    out.reserve(cliques.size());
    for (auto& k : cliques) {
        k.push_back(i);
        k.push_back(j);
        std::sort(k.begin(), k.end());
        out.emplace_back(std::move(k));
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace negcurv
