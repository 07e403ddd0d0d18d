#include <webrank/errors.hpp>
#include <webrank/pagerank.hpp>
#include <webrank/perturbation.hpp>

#include "oracle.hpp"

#include <gtest/gtest.h>

#include <numeric>
#include <random>
#include <sstream>

using namespace webrank;
using webrank::testing::block;
using webrank::testing::denseP;
using webrank::testing::loadFixture;

namespace {

WebGraph parse(const std::string &text) {
    std::istringstream in(text);
    return readEdgeList(in);
}

double l1Distance(const std::vector<double> &a, const Eigen::RowVectorXd &b) {
    double d = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i)
        d += std::abs(a[i] - b(static_cast<Eigen::Index>(i)));
    return d;
}

/// Class masses from a dense solve of [I - T~] phi_i = R~_i 1.
std::vector<double> denseClassMasses(const WebGraph &g, const StructureDecomposition &dec) {
    const Eigen::MatrixXd p = denseP(g);
    const std::vector<node> tr = dec.transientBlock();
    const Eigen::MatrixXd t = block(p, tr, tr);
    const auto k = static_cast<Eigen::Index>(tr.size());
    const Eigen::MatrixXd inv = (Eigen::MatrixXd::Identity(k, k) - t).inverse();
    std::vector<double> masses;
    for (const auto &cls : dec.ergodicClasses) {
        const Eigen::VectorXd r = block(p, tr, cls).rowwise().sum();
        masses.push_back((static_cast<double>(cls.size()) + (inv * r).sum())
                         / static_cast<double>(g.numberOfNodes()));
    }
    return masses;
}

std::vector<WebGraph> randomInstances(std::uint64_t seed, int count_, int maxN) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> size(8, maxN);
    std::vector<WebGraph> out;
    for (int t = 0; t < count_; ++t) {
        webrank::testing::RandomGraphSpec spec;
        spec.n = static_cast<count>(size(rng));
        spec.sinkGroups = 1 + static_cast<std::size_t>(t % 4);
        out.push_back(webrank::testing::randomWebGraph(rng, spec));
    }
    return out;
}

} // namespace

TEST(ClassStationaryTest, TwoCycleIsHalfHalf) {
    const WebGraph g = parse("3\n0 1\n0 2\n1 2\n2 1\n");
    const StructureDecomposition dec = decompose(g);
    ASSERT_EQ(dec.ergodicClasses.size(), 1u);
    const auto mu = classStationary(g, dec, 0);
    ASSERT_EQ(mu.size(), 2u);
    EXPECT_NEAR(mu[0], 0.5, 1e-13);
    EXPECT_NEAR(mu[1], 0.5, 1e-13);
}

TEST(ClassStationaryTest, SelfLoopClass) {
    const WebGraph g = parse("2\n0 1\n1 1\n");
    const StructureDecomposition dec = decompose(g);
    ASSERT_EQ(dec.ergodicClasses.size(), 1u);
    EXPECT_EQ(classStationary(g, dec, 0), std::vector<double>{1.0});
}

TEST(ClassStationaryTest, OutOfRangeClass) {
    const WebGraph g = parse("2\n0 1\n1 1\n");
    EXPECT_THROW(classStationary(g, decompose(g), 1), RangeError);
}

TEST(ClassStationaryTest, FixtureMatchesDenseStationary) {
    const WebGraph g = loadFixture();
    const StructureDecomposition dec = decompose(g);
    const Eigen::MatrixXd p = denseP(g);
    for (std::size_t i = 0; i < dec.ergodicClasses.size(); ++i) {
        const auto mu = classStationary(g, dec, i);
        const auto &cls = dec.ergodicClasses[i];
        const Eigen::RowVectorXd expected = webrank::testing::denseStationary(block(p, cls, cls));
        EXPECT_LE(l1Distance(mu, expected), 1e-11) << "class " << i;
    }
}

TEST(AbsorptionTest, MassesMatchDenseSolveAndSumToOne) {
    auto graphs = randomInstances(5, 30, 80);
    graphs.push_back(loadFixture());
    for (const WebGraph &g : graphs) {
        const StructureDecomposition dec = decompose(g);
        const auto expected = denseClassMasses(g, dec);
        double total = 0.0;
        std::vector<double> phiSum(dec.transientBlock().size(), 0.0);
        for (std::size_t i = 0; i < dec.ergodicClasses.size(); ++i) {
            const Absorption a = absorptionMass(g, dec, i);
            EXPECT_NEAR(a.classMass, expected[i], 1e-10);
            total += a.classMass;
            for (std::size_t t = 0; t < phiSum.size(); ++t) {
                EXPECT_GE(a.probability[t], 0.0);
                phiSum[t] += a.probability[t];
            }
        }
        EXPECT_NEAR(total, 1.0, 1e-10);
        // every transient walk is absorbed somewhere
        for (double s : phiSum)
            EXPECT_NEAR(s, 1.0, 1e-10);
    }
}

TEST(AbsorptionTest, SingleClassTakesAllMass) {
    const WebGraph g = parse("4\n0 1\n1 2\n1 3\n3 3\n");
    const StructureDecomposition dec = decompose(g);
    ASSERT_EQ(dec.ergodicClasses.size(), 1u);
    EXPECT_NEAR(absorptionMass(g, dec, 0).classMass, 1.0, 1e-12);
}

TEST(AbsorptionTest, ExpectedVisitsMatchDenseInverse) {
    const WebGraph g = loadFixture();
    const StructureDecomposition dec = decompose(g);
    const std::vector<node> tr = dec.transientBlock();
    const Eigen::MatrixXd t = block(denseP(g), tr, tr);
    const auto k = static_cast<Eigen::Index>(tr.size());
    const Eigen::RowVectorXd y =
        Eigen::RowVectorXd::Ones(k) * (Eigen::MatrixXd::Identity(k, k) - t).inverse();
    EXPECT_LE(l1Distance(expectedVisits(g, dec), y), 1e-10);
}

TEST(LimitPagerankTest, SingleAbsorbingNode) {
    const WebGraph g = parse("4\n0 1\n1 2\n2 0\n2 3\n1 3\n3 3\n0 0\n");
    const StructureDecomposition dec = decompose(g);
    ASSERT_EQ(dec.ergodicClasses, (std::vector<std::vector<node>>{{3}}));
    // not a dangling graph, so the escc here is the source SCC {0,1,2}
    const LimitVector lv = limitPagerank(g, dec);
    EXPECT_NEAR(lv.values[3], 1.0, 1e-12);
    for (node u = 0; u < 3; ++u)
        EXPECT_NEAR(lv.values[u], 0.0, 1e-15);
}

TEST(LimitPagerankTest, FixtureMatchesNearUnitDamping) {
    const WebGraph g = loadFixture();
    const StructureDecomposition dec = decompose(g);
    const LimitVector lv = limitPagerank(g, dec);
    // pi(c) is rational in c, so pi(1 - eps) = limit + O(eps)
    EXPECT_LE(l1Distance(lv.values, webrank::testing::densePagerank(g, 1.0 - 1e-7)), 1e-5);
    EXPECT_NEAR(std::accumulate(lv.values.begin(), lv.values.end(), 0.0), 1.0, 1e-12);
    for (node u : dec.escc)
        EXPECT_EQ(lv.values[u], 0.0);
    for (node u : dec.transientOut)
        EXPECT_EQ(lv.values[u], 0.0);
}

TEST(LimitPagerankTest, ApproachedMonotonicallyOnRandomGraphs) {
    for (const WebGraph &g : randomInstances(17, 25, 60)) {
        const StructureDecomposition dec = decompose(g);
        const LimitVector lv = limitPagerank(g, dec);
        double prev = 2.0;
        for (double c : {0.99, 0.999, 0.9999}) {
            const double d = l1Distance(lv.values, webrank::testing::densePagerank(g, c));
            EXPECT_LT(d, prev) << "c = " << c;
            prev = d;
        }
        // the gap closes at rate 1 - c
        EXPECT_LE(l1Distance(lv.values, webrank::testing::densePagerank(g, 1.0 - 1e-7)),
                  2e-3 * prev);
        double esccMass = 0.0;
        for (node u : dec.escc)
            esccMass += lv.values[u];
        EXPECT_LE(esccMass, 1e-6);
    }
}

TEST(AggregatedChainTest, RowFormulaAgreesWithNullSpaceSolve) {
    auto graphs = randomInstances(29, 30, 60);
    graphs.push_back(loadFixture());
    for (const WebGraph &g : graphs) {
        const StructureDecomposition dec = decompose(g);
        const AggregatedChain chain = aggregatedGenerator(g, dec);
        const std::size_t m = dec.ergodicClasses.size();
        Eigen::MatrixXd d(m, m);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j)
                d(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = chain.generator[i][j];

        // nu D = 0, nu 1 = 1, stacked as an overdetermined system
        Eigen::MatrixXd a(m + 1, m);
        a.topRows(m) = d.transpose();
        a.row(static_cast<Eigen::Index>(m)).setOnes();
        Eigen::VectorXd rhs = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(m + 1));
        rhs(static_cast<Eigen::Index>(m)) = 1.0;
        const Eigen::VectorXd nu = a.colPivHouseholderQr().solve(rhs);
        for (std::size_t i = 0; i < m; ++i)
            EXPECT_NEAR(chain.aggregatedStationary[i], nu(static_cast<Eigen::Index>(i)), 1e-10);

        // column path agrees with row path
        for (std::size_t i = 0; i < m; ++i)
            EXPECT_NEAR(absorptionMass(g, dec, i).classMass, chain.aggregatedStationary[i], 1e-10);

        const Eigen::MatrixXd dI = d + Eigen::MatrixXd::Identity(m, m);
        for (std::size_t i = 1; i < m; ++i)
            EXPECT_LE((dI.row(static_cast<Eigen::Index>(i)) - dI.row(0)).cwiseAbs().maxCoeff(), 1e-10);

        // generator rows sum to zero
        for (std::size_t i = 0; i < m; ++i)
            EXPECT_NEAR(d.row(static_cast<Eigen::Index>(i)).sum(), 0.0, 1e-10);
    }
}

TEST(AggregatedChainTest, DegenerateStructures) {
    // no dangling node, single closed SCC: no Pure-OUT class at all
    const WebGraph cycle = parse("3\n0 1\n1 2\n2 0\n");
    EXPECT_THROW(limitPagerank(cycle, decompose(cycle)), DegenerateStructure);
    EXPECT_THROW(aggregatedGenerator(cycle, decompose(cycle)), DegenerateStructure);
    EXPECT_THROW(absorptionMass(cycle, decompose(cycle), 0), DegenerateStructure);

    // closed escc beside a separate sink: escc is itself an ergodic class
    const WebGraph split = parse("4\n0 1\n1 0\n2 3\n3 3\n");
    const StructureDecomposition dec = decompose(split);
    ASSERT_EQ(dec.escc, (std::vector<node>{0, 1}));
    EXPECT_TRUE(dec.esccClosed(split));
    EXPECT_THROW(limitPagerank(split, dec), DegenerateStructure);
    EXPECT_THROW(limitPagerank(cycle, decompose(cycle)), DomainError);
}
