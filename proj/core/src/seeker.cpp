#include "negcurv/seeker.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <fmt/format.h>
#include <nlohmann/json.hpp>

namespace negcurv {

std::string_view to_string(SeekStatus s) {
    switch (s) {
        case SeekStatus::NegativeFound: return "negative_found";
        case SeekStatus::DiagonalNegative: return "diagonal_negative";
        case SeekStatus::Exhausted: return "exhausted";
    }
    return "?";
}

SeekStatus parse_seek_status(std::string_view name) {
    for (auto s : {SeekStatus::NegativeFound, SeekStatus::DiagonalNegative, SeekStatus::Exhausted}) {
        if (name == to_string(s)) return s;
    }
    throw InvalidInput("unknown status '" + std::string(name) + "'");
}

SeekerResult seek(HessianOracle& oracle, const SelectionOrder& order, const SeekerConfig& config) {
    if (!(config.epsilon >= 0.0)) throw InvalidInput("epsilon must be nonnegative");
    const std::size_t n = oracle.dim();
    if (n == 0) throw InvalidInput("oracle has dimension 0");
    if (order.dim() != n) {
        throw InvalidInput(fmt::format("selection order has dimension {} but oracle has {}",
                                       order.dim(), n));
    }

    SeekerResult res;
    res.epsilon = config.epsilon;

    std::vector<double> diag(n);
    try {
        for (std::size_t i = 0; i < n; ++i) diag[i] = oracle.diagonal(i);
    } catch (const EvaluationError& e) {
        throw SeekError(e.what(), PartialHessian(std::vector<double>(n, 0.0)), 0);
    }
    res.partial = PartialHessian(diag);

    const auto argmin = static_cast<std::size_t>(
        std::min_element(diag.begin(), diag.end()) - diag.begin());
    res.lambda = diag[argmin];
    Certificate best{IndexSet{argmin}, Eigen::VectorXd::Ones(1)};
    double global = res.lambda;

    if (res.lambda < -config.epsilon) {
        res.status = SeekStatus::DiagonalNegative;
        res.certificate = std::move(best);
        res.oracle_cost = oracle.cost();
        if (config.track_global_min) res.global_min = global;
        return res;
    }

    for (const Pair& p : order) {
        if (res.lambda < -config.epsilon) break;
        double value = 0.0;
        try {
            value = oracle.offdiagonal(p.i, p.j);
        } catch (const EvaluationError& e) {
            throw SeekError(e.what(), res.partial, res.iterations);
        }
        res.partial.reveal(p, value);
        ++res.iterations;

        double lam = std::numeric_limits<double>::infinity();
        for (auto& clique : maximal_cliques_with_edge(res.partial.graph(), p.i, p.j)) {
            EigenPair ep = min_eigenpair(res.partial.submatrix(clique), config.eig_tol);
            if (ep.value < lam) {
                lam = ep.value;
                best = Certificate{std::move(clique), std::move(ep.vector)};
            }
        }
        res.lambda = lam;
        global = std::min(global, lam);
    }

    res.status = res.partial.complete() ? SeekStatus::Exhausted : SeekStatus::NegativeFound;
    if (res.negative()) res.certificate = std::move(best);
    res.oracle_cost = oracle.cost();
    if (config.track_global_min) res.global_min = global;
    return res;
}

Eigen::VectorXd descent_direction(std::size_t n, const Certificate& certificate) {
    const IndexSet& s = certificate.indices;
    if (s.empty() || static_cast<Eigen::Index>(s.size()) != certificate.vector.size()) {
        throw InvalidInput("certificate index set and eigenvector sizes differ");
    }
    if (s.back() >= n) throw InvalidInput("certificate index out of range");
    Eigen::VectorXd d = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(n));
    for (std::size_t k = 0; k < s.size(); ++k) {
        d(static_cast<Eigen::Index>(s[k])) = certificate.vector(static_cast<Eigen::Index>(k));
    }
    return d;
}

Eigen::VectorXd descent_direction(const PartialHessian& partial, const Certificate& certificate) {
    if (!partial.graph().is_clique(certificate.indices)) {
        throw InvalidInput("certificate index set is not fully revealed");
    }
    return descent_direction(partial.dim(), certificate);
}

double certified_upper_bound(const SeekerResult& result, std::size_t n, double lipschitz, double h) {
    if (lipschitz == 0.0 || h == 0.0) return result.lambda;
    return result.lambda + error_bound(n, lipschitz, h);
}

nlohmann::json to_json(const SeekerResult& result, std::string_view variant) {
    nlohmann::json j;
    if (!variant.empty()) j["variant"] = variant;
    j["n"] = result.partial.dim();
    j["lambda"] = result.lambda;
    j["iterations"] = result.iterations;
    j["status"] = to_string(result.status);
    j["epsilon"] = result.epsilon;
    j["oracle_cost"] = result.oracle_cost;
    if (result.certificate) {
        std::vector<std::size_t> idx;
        for (std::size_t i : result.certificate->indices) idx.push_back(i + 1);
        const auto& v = result.certificate->vector;
        j["certificate"] = {{"indices", idx},
                            {"vector", std::vector<double>(v.data(), v.data() + v.size())}};
    } else {
        j["certificate"] = nullptr;
    }
    if (result.global_min) j["global_min"] = *result.global_min;
    return j;
}

}  // namespace negcurv
