#pragma once

#include <webrank/graph.hpp>
#include <webrank/pagerank.hpp>
#include <webrank/structure.hpp>

#include <cstddef>
#include <vector>

namespace webrank {

/**
 * Perron-Frobenius summary of the escc block T read off the mass curve.
 *
 * lambdaSeq[k-1] = a_k / a_{k-1} for k = 1..K. pInf and pSup are the inf and
 * sup of a_k^{1/k} over the computed range 1..terms only.
 */
struct SpectralSummary {
    double lambda1 = 0.0;
    double p1 = 0.0;
    std::vector<double> lambdaSeq;
    double pSup = 0.0;
    double pInf = 0.0;
    std::size_t terms = 0;      // largest k used
    bool monotone = false;      // lambdaSeq non-decreasing
    bool converged = false;     // ratios settled
    bool degenerate = false;    // hit a_k = 0
};

/**
 * Builds the summary from a curve with at least two coefficients.
 *
 * When the ratios never settle (periodic T), lambda1 falls back to the
 * geometric mean rate over the second half of the sequence.
 */
SpectralSummary lambdaSequence(const MassCurve &curve);

/// Probability-normed left Perron vector of T.
struct QuasiStationary {
    std::vector<double> distribution; // over escc, in ascending node order
    double eigenvalue = 0.0;
    double residual = 0.0;            // || xT - lambda x ||_1
    std::size_t iterations = 0;
};

/**
 * Power iteration x <- xT / |xT| from u_T. If the L1 change stops shrinking
 * for 10 steps the iteration switches to the lazy update x <- (x + xT/|xT|)/2,
 * which has the same fixed point but no periodic oscillation.
 */
QuasiStationary quasiStationary(const WebGraph &graph, const StructureDecomposition &dec,
                                double tolerance = 1e-13, std::size_t maxIterations = 10'000'000);

/// p_1 = u_T T 1, computed exactly as a_1 of the mass curve.
double oneStepRetention(const WebGraph &graph, const StructureDecomposition &dec);

} // namespace webrank
