#pragma once

#include <webrank/graph.hpp>
#include <webrank/pagerank.hpp>
#include <webrank/spectral.hpp>
#include <webrank/structure.hpp>

#include <optional>
#include <string>
#include <vector>

namespace webrank {

enum class Tristate { False, True, Indeterminate };

/// Hypotheses under which the p_1 / lambda_1 bounds on the escc mass hold.
struct BoundHypotheses {
    bool upper = false;                      // (i)  p_1 < lambda_1
    Tristate lower = Tristate::Indeterminate; // (ii) 1/(1-p_1) < u_T [I-T]^{-1} 1
    double resolventSum = 0.0;               // sum of computed a_k (a lower bound of the series)
    double resolventTail = 0.0;              // estimated remainder

    bool hold() const noexcept { return upper && lower == Tristate::True; }
};

/**
 * Condition (ii) compares against sum_k a_k, known only up to the tail
 * a_K lambda_1 / (1 - lambda_1); the flag is Indeterminate when the threshold
 * falls inside that window.
 */
BoundHypotheses checkBoundHypotheses(const SpectralSummary &spec, const MassCurve &curve);

struct MassBounds {
    double lower = 0.0; // alpha (1-c) / (1 - c p_1)
    double upper = 0.0; // alpha (1-c) / (1 - c lambda_1)
};

MassBounds massBounds(double alpha, double p1, double lambda1, double c);

/// r(c): the escc mass at which the normalized-PageRank criterion is met.
double pagerankCriterion(double alpha, double c);

/// Closed-form brackets of c* for each choice of v; no graph needed.
struct DampingBounds {
    double c1 = 0.0; // (1 - lambda_1) / (1 - lambda_1 p_1)
    double c2 = 0.0; // 1 / (1 + lambda_1)
    double c3 = 0.0; // 1 / (1 + p_1)
    double c4 = 0.0; // (1 - p_1) / (1 - lambda_1 p_1)
};

DampingBounds dampingBounds(double p1, double lambda1);

enum class Reference { QuasiStationary, Uniform, NormalizedPagerank };

std::string toString(Reference v);

struct DampingReport {
    Reference choice = Reference::Uniform;
    std::optional<double> gamma; // absent for NormalizedPagerank
    double cStar = 0.0;
    double lowerBound = 0.0;
    double upperBound = 0.0;
    std::string lowerName;
    std::string upperName;
    BoundHypotheses hypotheses;
    double truncationBound = 0.0; // mass-series uncertainty at c*
    bool degenerate = false;      // lambda_1 = 1: the target equals alpha, c* = 0
};

constexpr double CSTAR_TOL = 1e-6;

/// c* with ||pi_T(c*)|| = alpha lambda_1, bracketed by (c1, c2).
DampingReport solveCstarQuasi(const SpectralSummary &spec, const MassCurve &curve);

/// c* with ||pi_T(c*)|| = alpha p_1, bracketed by (c3, c4).
DampingReport solveCstarUniform(const SpectralSummary &spec, const MassCurve &curve);

/// Crossing of ||pi_T(c)|| with r(c) on (1/2, 1), bracketed by (1/(1+lambda_1), 1/(1+p_1)).
DampingReport solveCstarPagerank(const SpectralSummary &spec, const MassCurve &curve);

struct FairnessRow {
    std::string set; // "ESCC", "PureOUT", "Q<k>"
    count size = 0;
    double mass = 0.0;
    double ratio = 0.0;
};

/// PageRank mass over node share for escc, Pure OUT and every ergodic class.
std::vector<FairnessRow> fairnessAt(const WebGraph &graph, const StructureDecomposition &dec,
                                    double c, double tolerance = DEFAULT_TOL);

} // namespace webrank
