#include <webrank/pagerank.hpp>

#include <webrank/errors.hpp>
#include <webrank/restricted_walk.hpp>

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <numeric>

namespace webrank {

std::size_t defaultMaxIterations(double c, double tolerance) {
    if (c <= 0.0)
        return 1000;
    const double steps = std::ceil(std::log(tolerance) / std::log(c));
    if (!std::isfinite(steps) || steps > 1e9)
        return 10'000'000'000ULL;
    return std::max<std::size_t>(1000, 10 * static_cast<std::size_t>(steps));
}

PageRankVector pagerank(const TransitionOperator &op, double tolerance, std::size_t maxIterations) {
    const double c = op.damping();
    if (!(c >= 0.0 && c < 1.0))
        throw DomainError("power iteration needs 0 <= c < 1");
    if (!(tolerance > 0.0))
        throw DomainError("tolerance must be positive");
    if (maxIterations == 0)
        maxIterations = defaultMaxIterations(c, tolerance);

    const count n = op.graph().numberOfNodes();
    PageRankVector pr;
    pr.damping = c;
    pr.values.assign(n, 1.0 / static_cast<double>(n));

    for (std::size_t it = 1; it <= maxIterations; ++it) {
        std::vector<double> next = op.apply(pr.values);
        const double sum = std::accumulate(next.begin(), next.end(), 0.0);
        double residual = 0.0;
        for (count i = 0; i < n; ++i) {
            next[i] /= sum;
            residual += std::abs(next[i] - pr.values[i]);
        }
        pr.values = std::move(next);
        pr.residual = residual;
        pr.iterations = it;
        if (residual <= tolerance)
            return pr;
    }
    throw ConvergenceError("PageRank power iteration did not converge", pr.residual,
                           pr.iterations);
}

PageRankVector pagerankResolvent(const WebGraph &graph, double c) {
    if (!(c >= 0.0 && c < 1.0))
        throw DomainError("I - cP is singular at c = 1");
    const auto n = static_cast<Eigen::Index>(graph.numberOfNodes());
    const double inv = 1.0 / static_cast<double>(n);

    // (I - cP)^T pi^T = (1-c)/n 1
    Eigen::MatrixXd a = Eigen::MatrixXd::Identity(n, n);
    for (node u = 0; u < graph.numberOfNodes(); ++u) {
        const auto succ = graph.successors(u);
        if (succ.empty()) {
            a.col(u).array() -= c * inv;
        } else {
            const double w = c / static_cast<double>(succ.size());
            for (node v : succ)
                a(v, u) -= w;
        }
    }
    const Eigen::VectorXd rhs = Eigen::VectorXd::Constant(n, (1.0 - c) * inv);
    const Eigen::VectorXd pi = a.partialPivLu().solve(rhs);

    PageRankVector pr;
    pr.damping = c;
    pr.values.assign(pi.data(), pi.data() + n);
    return pr;
}

MassCurve esccMassCurve(const WebGraph &graph, const StructureDecomposition &dec,
                        std::size_t maxTerms, double tailTol) {
    if (dec.escc.empty())
        throw DegenerateStructure("empty escc");
    const RestrictedWalk walk(graph, dec.escc);

    MassCurve curve;
    curve.alpha = dec.alpha();
    curve.coefficients.reserve(std::min<std::size_t>(maxTerms + 1, 1 << 16));
    curve.coefficients.push_back(1.0);

    std::vector<double> x(walk.size(), 1.0 / static_cast<double>(walk.size()));
    double prevRatio = -1.0;
    std::size_t settled = 0;
    for (std::size_t k = 1; k <= maxTerms; ++k) {
        x = walk.applyRow(x);
        const double a = std::accumulate(x.begin(), x.end(), 0.0);
        curve.coefficients.push_back(a);
        if (a == 0.0)
            break;
        const double ratio = a / curve.coefficients[k - 1];
        settled = std::abs(ratio - prevRatio) < RATIO_SETTLE_TOL ? settled + 1 : 0;
        prevRatio = ratio;
        if (a < tailTol && settled >= RATIO_SETTLE_RUN)
            break;
    }
    return curve;
}

double massSeries(const MassCurve &curve, double c) {
    double s = 0.0;
    for (auto it = curve.coefficients.rbegin(); it != curve.coefficients.rend(); ++it)
        s = s * c + *it;
    return s;
}

MassValue evaluateMass(const MassCurve &curve, double c) {
    if (!(c >= 0.0 && c <= 1.0))
        throw DomainError("c must lie in [0, 1]");
    if (c == 1.0)
        return {0.0, 0.0};
    const auto &a = curve.coefficients;
    const double s = massSeries(curve, c);
    MassValue m;
    m.value = (1.0 - c) * curve.alpha * s;
    // a_k is non-increasing, so the tail is at most a_K c^{K+1} / (1-c)
    m.truncationBound = curve.alpha * a.back() * std::pow(c, static_cast<double>(a.size()));
    return m;
}

MassShare massOf(std::span<const node> set, const PageRankVector &pr) {
    MassShare share;
    for (node u : set) {
        if (u >= pr.values.size())
            throw RangeError("node outside the PageRank vector");
        share.mass += pr.values[u];
    }
    if (!set.empty())
        share.ratio = share.mass
                      / (static_cast<double>(set.size()) / static_cast<double>(pr.values.size()));
    return share;
}

} // namespace webrank
