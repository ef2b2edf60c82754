#pragma once

#include <cstdint>
#include <random>
#include <string_view>

#include <Eigen/Dense>

#include "negcurv/order.hpp"
#include "negcurv/sym_matrix.hpp"

namespace negcurv {

using Rng = std::mt19937_64;

/// Independent deterministic stream for one named case (FNV-1a of the id
/// mixed with the base seed), so results do not depend on scheduling.
Rng case_rng(std::uint64_t seed, std::string_view case_id);

/// Uniformly random permutation (Fisher-Yates).
Permutation random_permutation(std::size_t n, Rng& rng);

/// P^T A P for a uniformly random permutation matrix P.
SymMatrix random_permutation_transform(const SymMatrix& a, std::uint64_t seed);

/// Haar-distributed orthogonal matrix: QR of a standard Gaussian matrix
/// with the signs of R's diagonal folded into Q.
Eigen::MatrixXd haar_orthogonal(std::size_t n, Rng& rng);

/// Q^T A Q for a Haar-distributed Q. The diagonal's signs are not preserved.
SymMatrix random_orthogonal_transform(const SymMatrix& a, std::uint64_t seed);

struct SyntheticSpec {
    std::size_t n = 4;
    std::size_t negatives = 1;
    /// Rejection budget for the all-positive-diagonal requirement.
    std::size_t max_attempts = 1000;
};

/// Q^T diag(lambda) Q with exactly `negatives` eigenvalues drawn from
/// [-1, -0.05] and the rest from [0.5, 2], redrawn until every diagonal
/// entry is positive. Throws InvalidInput when the budget runs out.
SymMatrix generate_synthetic(const SyntheticSpec& spec, Rng& rng);

}  // namespace negcurv
