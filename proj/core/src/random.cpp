#include "negcurv/random.hpp"

#include <algorithm>
#include <numeric>

#include <fmt/format.h>

#include "negcurv/error.hpp"

namespace negcurv {

Rng case_rng(std::uint64_t seed, std::string_view case_id) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : case_id) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(h), static_cast<std::uint32_t>(h >> 32)};
    return Rng(seq);
}

Permutation random_permutation(std::size_t n, Rng& rng) {
    std::vector<std::size_t> p(n);
    std::iota(p.begin(), p.end(), std::size_t{0});
    for (std::size_t k = n; k > 1; --k) {
        std::uniform_int_distribution<std::size_t> pick(0, k - 1);
        std::swap(p[k - 1], p[pick(rng)]);
    }
    return Permutation(std::move(p));
}

SymMatrix random_permutation_transform(const SymMatrix& a, std::uint64_t seed) {
    Rng rng(seed);
    const Permutation p = random_permutation(a.dim(), rng);
    // (P^T A P)(r, c) = A(p[r], p[c]) where column r of P is e_{p[r]}.
    SymMatrix out(a.dim());
    for (std::size_t r = 0; r < a.dim(); ++r) {
        for (std::size_t c = 0; c <= r; ++c) out.set(r, c, a(p[r], p[c]));
    }
    return out;
}

Eigen::MatrixXd haar_orthogonal(std::size_t n, Rng& rng) {
    const auto m = static_cast<Eigen::Index>(n);
    std::normal_distribution<double> gauss(0.0, 1.0);
    Eigen::MatrixXd g(m, m);
    for (Eigen::Index j = 0; j < m; ++j) {
        for (Eigen::Index i = 0; i < m; ++i) g(i, j) = gauss(rng);
    }
    Eigen::HouseholderQR<Eigen::MatrixXd> qr(g);
    Eigen::MatrixXd q = qr.householderQ() * Eigen::MatrixXd::Identity(m, m);
    const Eigen::MatrixXd& r = qr.matrixQR();
    for (Eigen::Index k = 0; k < m; ++k) {
        if (r(k, k) < 0) q.col(k) = -q.col(k);
    }
    return q;
}

SymMatrix random_orthogonal_transform(const SymMatrix& a, std::uint64_t seed) {
    Rng rng(seed);
    const Eigen::MatrixXd q = haar_orthogonal(a.dim(), rng);
    return SymMatrix::symmetrized(q.transpose() * a.dense() * q);
}

SymMatrix generate_synthetic(const SyntheticSpec& spec, Rng& rng) {
    if (spec.n < 1) throw InvalidInput("synthetic matrix needs n >= 1");
    if (spec.negatives > spec.n) {
        throw InvalidInput(fmt::format("cannot place {} negative eigenvalues in dimension {}",
                                       spec.negatives, spec.n));
    }
    std::uniform_real_distribution<double> neg(-1.0, -0.05);
    std::uniform_real_distribution<double> pos(0.5, 2.0);
    const auto n = static_cast<Eigen::Index>(spec.n);
    for (std::size_t attempt = 0; attempt < spec.max_attempts; ++attempt) {
        Eigen::VectorXd lam(n);
        for (Eigen::Index k = 0; k < n; ++k) {
            lam(k) = static_cast<std::size_t>(k) < spec.negatives ? neg(rng) : pos(rng);
        }
        const Eigen::MatrixXd q = haar_orthogonal(spec.n, rng);
        const Eigen::MatrixXd m = q.transpose() * lam.asDiagonal() * q;
        if ((m.diagonal().array() > 0.0).all()) return SymMatrix::symmetrized(m);
    }
    throw InvalidInput(fmt::format(
        "could not draw a {}x{} matrix with {} negative eigenvalues and positive diagonal in {} attempts",
        spec.n, spec.n, spec.negatives, spec.max_attempts));
}

}  // namespace negcurv
