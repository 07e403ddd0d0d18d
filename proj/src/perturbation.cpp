#include <webrank/perturbation.hpp>

#include <webrank/errors.hpp>
#include <webrank/restricted_walk.hpp>

#include <cmath>
#include <numeric>
#include <string>

namespace webrank {

namespace {

constexpr double neumannTol = 1e-12;
constexpr std::size_t neumannCap = 50'000'000;
constexpr double stationaryTol = 1e-13;
constexpr std::size_t stationaryCap = 10'000'000;

double l1(const std::vector<double> &v) {
    double s = 0.0;
    for (double x : v)
        s += std::abs(x);
    return s;
}

void requireLimitStructure(const WebGraph &graph, const StructureDecomposition &dec) {
    if (dec.ergodicClasses.empty())
        throw DegenerateStructure(
            "no ergodic Pure-OUT classes; limit is the unperturbed ESCC problem");
    if (dec.esccClosed(graph))
        throw DegenerateStructure("escc is closed under P; it is itself an ergodic class");
}

// sum_k b B^k (row) or sum_k B^k b (column) until the geometric tail
// estimate drops below neumannTol relative to the accumulated sum.
template <class Apply>
std::vector<double> neumann(Apply apply, std::vector<double> term) {
    std::vector<double> sum(term.size(), 0.0);
    double prevNorm = l1(term);
    for (std::size_t k = 0; k < neumannCap; ++k) {
        for (std::size_t i = 0; i < sum.size(); ++i)
            sum[i] += term[i];
        term = apply(term);
        const double norm = l1(term);
        if (norm == 0.0)
            return sum;
        const double rate = norm / prevNorm;
        prevNorm = norm;
        if (rate < 1.0 && norm / (1.0 - rate) <= neumannTol * l1(sum))
            return sum;
    }
    throw ConvergenceError("Neumann series for [I - T~]^{-1} did not converge", prevNorm,
                           neumannCap);
}

// R~_i 1 over the transient block: one-step probability of entering class i.
std::vector<double> entryProbability(const WebGraph &graph, const RestrictedWalk &transient,
                                     const std::vector<node> &cls) {
    const count n = graph.numberOfNodes();
    std::vector<char> inClass(n, 0);
    for (node u : cls)
        inClass[u] = 1;
    const auto members = transient.members();
    std::vector<double> b(members.size(), 0.0);
    for (std::size_t j = 0; j < members.size(); ++j) {
        const auto succ = graph.successors(members[j]);
        if (succ.empty()) {
            b[j] = static_cast<double>(cls.size()) / static_cast<double>(n);
            continue;
        }
        std::size_t hits = 0;
        for (node v : succ)
            hits += inClass[v];
        b[j] = static_cast<double>(hits) / static_cast<double>(succ.size());
    }
    return b;
}

} // namespace

std::vector<double> classStationary(const WebGraph &graph, const StructureDecomposition &dec,
                                    std::size_t i) {
    if (i >= dec.ergodicClasses.size())
        throw RangeError("no ergodic class " + std::to_string(i));
    const RestrictedWalk walk(graph, dec.ergodicClasses[i]);
    const std::size_t m = walk.size();
    std::vector<double> x(m, 1.0 / static_cast<double>(m));
    for (std::size_t it = 0; it < stationaryCap; ++it) {
        std::vector<double> y = walk.applyRow(x);
        double residual = 0.0;
        for (std::size_t j = 0; j < m; ++j)
            residual += std::abs(y[j] - x[j]);
        if (residual <= stationaryTol)
            return x;
        for (std::size_t j = 0; j < m; ++j)
            x[j] = 0.5 * (x[j] + y[j]);
        const double s = std::accumulate(x.begin(), x.end(), 0.0);
        for (double &v : x)
            v /= s;
    }
    throw ConvergenceError("class stationary iteration did not converge", 0.0, stationaryCap);
}

Absorption absorptionMass(const WebGraph &graph, const StructureDecomposition &dec, std::size_t i) {
    requireLimitStructure(graph, dec);
    if (i >= dec.ergodicClasses.size())
        throw RangeError("no ergodic class " + std::to_string(i));
    const RestrictedWalk transient(graph, dec.transientBlock());
    const auto &cls = dec.ergodicClasses[i];

    Absorption a;
    a.probability = neumann([&](const std::vector<double> &v) { return transient.applyColumn(v); },
                            entryProbability(graph, transient, cls));
    const double visits = std::accumulate(a.probability.begin(), a.probability.end(), 0.0);
    a.classMass = (static_cast<double>(cls.size()) + visits)
                  / static_cast<double>(graph.numberOfNodes());
    return a;
}

std::vector<double> expectedVisits(const WebGraph &graph, const StructureDecomposition &dec) {
    requireLimitStructure(graph, dec);
    const RestrictedWalk transient(graph, dec.transientBlock());
    return neumann([&](const std::vector<double> &v) { return transient.applyRow(v); },
                   std::vector<double>(transient.size(), 1.0));
}

namespace {

std::vector<double> rowFormulaMasses(const WebGraph &graph, const StructureDecomposition &dec) {
    const RestrictedWalk transient(graph, dec.transientBlock());
    const std::vector<double> visits = expectedVisits(graph, dec);
    const double n = static_cast<double>(graph.numberOfNodes());
    std::vector<double> nu;
    nu.reserve(dec.ergodicClasses.size());
    for (const auto &cls : dec.ergodicClasses) {
        const auto b = entryProbability(graph, transient, cls);
        const double inflow = std::inner_product(visits.begin(), visits.end(), b.begin(), 0.0);
        nu.push_back((static_cast<double>(cls.size()) + inflow) / n);
    }
    return nu;
}

} // namespace

LimitVector limitPagerank(const WebGraph &graph, const StructureDecomposition &dec) {
    requireLimitStructure(graph, dec);
    LimitVector lv;
    lv.perClassMass = rowFormulaMasses(graph, dec);
    lv.values.assign(graph.numberOfNodes(), 0.0);
    for (std::size_t i = 0; i < dec.ergodicClasses.size(); ++i) {
        const auto mu = classStationary(graph, dec, i);
        const auto &cls = dec.ergodicClasses[i];
        for (std::size_t j = 0; j < cls.size(); ++j)
            lv.values[cls[j]] = lv.perClassMass[i] * mu[j];
    }
    return lv;
}

AggregatedChain aggregatedGenerator(const WebGraph &graph, const StructureDecomposition &dec) {
    requireLimitStructure(graph, dec);
    const std::size_t m = dec.ergodicClasses.size();
    const count n = graph.numberOfNodes();
    const std::vector<node> transientNodes = dec.transientBlock();

    AggregatedChain chain;
    chain.aggregatedStationary = rowFormulaMasses(graph, dec);
    for (std::size_t i = 0; i < m; ++i) {
        chain.classDistributions.push_back(classStationary(graph, dec, i));
        chain.absorptionVectors.push_back(absorptionMass(graph, dec, i).probability);
    }

    // column sums of Q: 1^T Q e_j = n_j + 1^T phi_j
    std::vector<double> qColumnSum(m);
    for (std::size_t j = 0; j < m; ++j)
        qColumnSum[j] = static_cast<double>(dec.ergodicClasses[j].size())
                        + std::accumulate(chain.absorptionVectors[j].begin(),
                                          chain.absorptionVectors[j].end(), 0.0);

    chain.generator.assign(m, std::vector<double>(m, 0.0));
    for (std::size_t i = 0; i < m; ++i) {
        std::vector<double> row(n, 0.0);
        const auto &cls = dec.ergodicClasses[i];
        const auto &mu = chain.classDistributions[i];
        for (std::size_t k = 0; k < cls.size(); ++k)
            row[cls[k]] = mu[k];
        const double muMass = std::accumulate(mu.begin(), mu.end(), 0.0);
        const std::vector<double> muP = applyP(graph, row);
        for (std::size_t j = 0; j < m; ++j) {
            double muPQ = 0.0;
            for (node u : dec.ergodicClasses[j])
                muPQ += muP[u];
            const auto &phi = chain.absorptionVectors[j];
            for (std::size_t t = 0; t < transientNodes.size(); ++t)
                muPQ += muP[transientNodes[t]] * phi[t];
            chain.generator[i][j] = muMass * qColumnSum[j] / static_cast<double>(n) - muPQ;
        }
    }
    return chain;
}

} // namespace webrank
