#include <webrank/spectral.hpp>

#include <webrank/errors.hpp>
#include <webrank/restricted_walk.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace webrank {

namespace {

// Ratios may wobble at rounding level once they have converged.
constexpr double monotoneSlack = 1e-13;

} // namespace

SpectralSummary lambdaSequence(const MassCurve &curve) {
    const auto &a = curve.coefficients;
    if (a.size() < 2)
        throw DimensionError("lambda sequence needs at least two coefficients");

    SpectralSummary s;
    s.p1 = a[1];
    s.pSup = 0.0;
    s.pInf = std::numeric_limits<double>::infinity();
    s.monotone = true;
    std::size_t settled = 0;
    for (std::size_t k = 1; k < a.size(); ++k) {
        if (a[k - 1] == 0.0 || a[k] == 0.0) {
            s.degenerate = true;
            break;
        }
        const double ratio = a[k] / a[k - 1];
        if (!s.lambdaSeq.empty()) {
            if (ratio < s.lambdaSeq.back() - monotoneSlack)
                s.monotone = false;
            settled = std::abs(ratio - s.lambdaSeq.back()) < RATIO_SETTLE_TOL ? settled + 1 : 0;
        }
        s.lambdaSeq.push_back(ratio);
        const double root = std::pow(a[k], 1.0 / static_cast<double>(k));
        s.pSup = std::max(s.pSup, root);
        s.pInf = std::min(s.pInf, root);
        s.terms = k;
    }

    if (s.lambdaSeq.empty()) {
        // a_1 = 0: T never keeps the walk for a step
        s.lambda1 = 0.0;
        s.pInf = s.pSup = 0.0;
        s.monotone = false;
        return s;
    }

    s.converged = settled >= RATIO_SETTLE_RUN;
    if (s.converged || s.degenerate) {
        s.lambda1 = s.lambdaSeq.back();
    } else {
        const std::size_t last = s.terms;
        const std::size_t first = std::max<std::size_t>(1, last / 2);
        if (last > first)
            s.lambda1 = std::pow(a[last] / a[first], 1.0 / static_cast<double>(last - first));
        else
            s.lambda1 = s.lambdaSeq.back();
    }
    if (s.monotone) {
        s.pInf = s.p1;
        s.pSup = s.lambda1;
    }
    return s;
}

QuasiStationary quasiStationary(const WebGraph &graph, const StructureDecomposition &dec,
                                double tolerance, std::size_t maxIterations) {
    if (dec.escc.empty())
        throw DegenerateStructure("empty escc");
    const RestrictedWalk walk(graph, dec.escc);
    const std::size_t m = walk.size();

    QuasiStationary qs;
    std::vector<double> x(m, 1.0 / static_cast<double>(m));
    bool lazy = false;
    double bestChange = std::numeric_limits<double>::infinity();
    std::size_t stalled = 0;

    for (std::size_t it = 1; it <= maxIterations; ++it) {
        std::vector<double> y = walk.applyRow(x);
        const double norm = std::accumulate(y.begin(), y.end(), 0.0);
        if (norm == 0.0)
            throw DegenerateStructure("escc block annihilates the quasi-stationary iterate");
        double change = 0.0;
        for (std::size_t i = 0; i < m; ++i) {
            y[i] /= norm;
            if (lazy)
                y[i] = 0.5 * (x[i] + y[i]);
            change += std::abs(y[i] - x[i]);
        }
        x = std::move(y);
        qs.iterations = it;

        if (change < tolerance)
            break;
        if (!lazy) {
            if (change < bestChange) {
                bestChange = change;
                stalled = 0;
            } else if (++stalled >= 10) {
                lazy = true;
            }
        }
        if (it == maxIterations)
            throw ConvergenceError("quasi-stationary iteration did not converge", change, it);
    }

    const std::vector<double> xt = walk.applyRow(x);
    qs.eigenvalue = std::accumulate(xt.begin(), xt.end(), 0.0);
    double residual = 0.0;
    for (std::size_t i = 0; i < m; ++i)
        residual += std::abs(xt[i] - qs.eigenvalue * x[i]);
    qs.residual = residual;
    qs.distribution = std::move(x);
    return qs;
}

double oneStepRetention(const WebGraph &graph, const StructureDecomposition &dec) {
    return esccMassCurve(graph, dec, 1).coefficients[1];
}

} // namespace webrank
