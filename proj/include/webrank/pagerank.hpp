#pragma once

#include <webrank/graph.hpp>
#include <webrank/structure.hpp>

#include <cstddef>
#include <span>
#include <vector>

namespace webrank {

struct PageRankVector {
    std::vector<double> values;
    double damping = 0.0;
    double residual = 0.0;     // L1 change of the last iteration
    std::size_t iterations = 0;
};

constexpr double DEFAULT_TOL = 1e-12;

/// 10 * ceil(log(tol) / log(c)), but never below 1000.
std::size_t defaultMaxIterations(double c, double tolerance = DEFAULT_TOL);

/**
 * Power iteration on G from the uniform vector until the L1 change is at most
 * @a tolerance. Throws DomainError for c outside [0,1) and ConvergenceError
 * when @a maxIterations is exhausted.
 */
PageRankVector pagerank(const TransitionOperator &op, double tolerance = DEFAULT_TOL,
                        std::size_t maxIterations = 0);

/// (1-c)/n 1^T [I - cP]^{-1} by a dense LU solve. For small graphs only.
PageRankVector pagerankResolvent(const WebGraph &graph, double c);

/**
 * Coefficients a_k = u_T T^k 1 of the escc mass series, where T is P
 * restricted to the escc and u_T is uniform on it.
 */
struct MassCurve {
    double alpha = 1.0;
    std::vector<double> coefficients; // a_0 = 1, a_1, ..., a_K
};

/// Series value and the bound on what the truncated tail can add.
struct MassValue {
    double value = 0.0;
    double truncationBound = 0.0;
};

constexpr std::size_t DEFAULT_TERMS = 5000;
constexpr double DEFAULT_TAIL_TOL = 1e-13;

// The ratio sequence a_k / a_{k-1} counts as settled after this many
// consecutive steps moving less than RATIO_SETTLE_TOL.
constexpr double RATIO_SETTLE_TOL = 1e-12;
constexpr std::size_t RATIO_SETTLE_RUN = 5;

/**
 * Runs the power iteration x <- xT from u_T, recording a_k = x 1. Stops at
 * k = @a maxTerms, when a_k is exactly zero, or once a_k < @a tailTol and the
 * ratios a_k / a_{k-1} have settled (so the spectral estimates stay usable).
 */
MassCurve esccMassCurve(const WebGraph &graph, const StructureDecomposition &dec,
                        std::size_t maxTerms = DEFAULT_TERMS, double tailTol = DEFAULT_TAIL_TOL);

/**
 * (1-c) alpha sum_k c^k a_k. The true escc mass lies in
 * [value, value + truncationBound]; c = 1 returns the exact limit 0.
 */
MassValue evaluateMass(const MassCurve &curve, double c);

/// sum_{k<=K} c^k a_k by Horner's rule, for c in [0, 1].
double massSeries(const MassCurve &curve, double c);

struct MassShare {
    double mass = 0.0;
    double ratio = 0.0; // mass / (|set| / n)
};

MassShare massOf(std::span<const node> set, const PageRankVector &pr);

} // namespace webrank
