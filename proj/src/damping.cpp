#include <webrank/damping.hpp>

#include <webrank/errors.hpp>

#include <cassert>
#include <cmath>
#include <numeric>

namespace webrank {

BoundHypotheses checkBoundHypotheses(const SpectralSummary &spec, const MassCurve &curve) {
    BoundHypotheses h;
    // differences below the ratio resolution are rounding, not a gap
    h.upper = spec.lambda1 - spec.p1 > RATIO_SETTLE_TOL;

    const auto &a = curve.coefficients;
    h.resolventSum = std::accumulate(a.begin(), a.end(), 0.0);
    if (spec.lambda1 < 1.0)
        h.resolventTail = a.back() * spec.lambda1 / (1.0 - spec.lambda1);
    else
        h.resolventTail = a.back() > 0.0 ? INFINITY : 0.0;

    if (spec.p1 >= 1.0) {
        h.lower = Tristate::False; // 1/(1-p_1) is infinite
        return h;
    }
    const double threshold = 1.0 / (1.0 - spec.p1);
    if (threshold < h.resolventSum)
        h.lower = Tristate::True;
    else if (threshold >= h.resolventSum + h.resolventTail)
        h.lower = Tristate::False;
    else
        h.lower = Tristate::Indeterminate;
    return h;
}

MassBounds massBounds(double alpha, double p1, double lambda1, double c) {
    if (!(c >= 0.0 && c <= 1.0))
        throw DomainError("c must lie in [0, 1]");
    if (c == 1.0)
        return {0.0, 0.0};
    return {alpha * (1.0 - c) / (1.0 - c * p1), alpha * (1.0 - c) / (1.0 - c * lambda1)};
}

double pagerankCriterion(double alpha, double c) {
    // both branches equal alpha at c = 1/2
    assert(std::abs(alpha * (1.0 - 0.5) / 0.5 - alpha) <= 1e-15 * std::abs(alpha));
    if (c <= 0.5)
        return alpha;
    return alpha * (1.0 - c) / c;
}

DampingBounds dampingBounds(double p1, double lambda1) {
    DampingBounds b;
    const double cross = 1.0 - lambda1 * p1;
    b.c1 = (1.0 - lambda1) / cross;
    b.c2 = 1.0 / (1.0 + lambda1);
    b.c3 = 1.0 / (1.0 + p1);
    b.c4 = (1.0 - p1) / cross;
    return b;
}

std::string toString(Reference v) {
    switch (v) {
    case Reference::QuasiStationary:
        return "quasi_stationary";
    case Reference::Uniform:
        return "uniform";
    case Reference::NormalizedPagerank:
        return "normalized_pagerank";
    }
    return "?";
}

namespace {

struct Root {
    double c = 0.0;
    double truncation = 0.0;
};

// Root of the decreasing escc mass against a fixed target on (0, 1). The
// bisection also stops once the target lies inside the truncation window.
Root massRoot(const MassCurve &curve, double target) {
    double lo = 0.0, hi = 1.0;
    while (hi - lo > CSTAR_TOL) {
        const double mid = 0.5 * (lo + hi);
        const MassValue m = evaluateMass(curve, mid);
        if (m.value <= target && target <= m.value + m.truncationBound && m.truncationBound > 0.0)
            return {mid, m.truncationBound};
        if (m.value > target)
            lo = mid;
        else
            hi = mid;
    }
    const double c = 0.5 * (lo + hi);
    return {c, evaluateMass(curve, c).truncationBound};
}

DampingReport fixedTargetReport(Reference choice, double gamma, const SpectralSummary &spec,
                                const MassCurve &curve) {
    DampingReport r;
    r.choice = choice;
    r.gamma = gamma;
    r.hypotheses = checkBoundHypotheses(spec, curve);
    if (gamma >= 1.0) {
        r.degenerate = true;
        r.cStar = 0.0;
        return r;
    }
    const Root root = massRoot(curve, curve.alpha * gamma);
    r.cStar = root.c;
    r.truncationBound = root.truncation;
    return r;
}

} // namespace

DampingReport solveCstarQuasi(const SpectralSummary &spec, const MassCurve &curve) {
    DampingReport r = fixedTargetReport(Reference::QuasiStationary, spec.lambda1, spec, curve);
    const DampingBounds b = dampingBounds(spec.p1, spec.lambda1);
    r.lowerBound = b.c1;
    r.upperBound = b.c2;
    r.lowerName = "c1";
    r.upperName = "c2";
    return r;
}

DampingReport solveCstarUniform(const SpectralSummary &spec, const MassCurve &curve) {
    DampingReport r = fixedTargetReport(Reference::Uniform, spec.p1, spec, curve);
    const DampingBounds b = dampingBounds(spec.p1, spec.lambda1);
    r.lowerBound = b.c3;
    r.upperBound = b.c4;
    r.lowerName = "c3";
    r.upperName = "c4";
    return r;
}

DampingReport solveCstarPagerank(const SpectralSummary &spec, const MassCurve &curve) {
    DampingReport r;
    r.choice = Reference::NormalizedPagerank;
    r.hypotheses = checkBoundHypotheses(spec, curve);
    r.lowerBound = 1.0 / (1.0 + spec.lambda1);
    r.upperBound = 1.0 / (1.0 + spec.p1);
    r.lowerName = "1/(1+lambda1)";
    r.upperName = "1/(1+p1)";

    // mass(c) = r(c) for c > 1/2  <=>  sum_k c^k a_k = 1/c, after dividing by alpha (1-c)
    auto gap = [&](double c) { return massSeries(curve, c) - 1.0 / c; };
    if (!(gap(0.5) < 0.0))
        throw DegenerateStructure("escc mass does not drop below alpha; no crossing with r(c)");
    if (!(gap(1.0) > 0.0))
        throw DegenerateStructure("escc is left immediately; no crossing with r(c)");

    double lo = 0.5, hi = 1.0;
    while (hi - lo > CSTAR_TOL) {
        const double mid = 0.5 * (lo + hi);
        if (gap(mid) < 0.0)
            lo = mid;
        else
            hi = mid;
    }
    r.cStar = 0.5 * (lo + hi);
    r.truncationBound = evaluateMass(curve, r.cStar).truncationBound;
    return r;
}

std::vector<FairnessRow> fairnessAt(const WebGraph &graph, const StructureDecomposition &dec,
                                    double c, double tolerance) {
    const PageRankVector pr = pagerank(TransitionOperator(graph, c), tolerance);
    std::vector<FairnessRow> rows;
    auto add = [&](std::string name, const std::vector<node> &set) {
        const MassShare share = massOf(set, pr);
        rows.push_back({std::move(name), set.size(), share.mass, share.ratio});
    };
    add("ESCC", dec.escc);
    add("PureOUT", dec.pureOut());
    for (std::size_t i = 0; i < dec.ergodicClasses.size(); ++i)
        add("Q" + std::to_string(i + 1), dec.ergodicClasses[i]);
    return rows;
}

} // namespace webrank
