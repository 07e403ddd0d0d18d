#pragma once

#include <webrank/graph.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace webrank {

/**
 * Component labels of an SCC computation. Components are numbered in the
 * order Tarjan's algorithm closes them, which is a reverse topological order
 * of the condensation (sinks first).
 */
struct SccPartition {
    std::vector<std::uint32_t> label; // per node
    std::uint32_t components = 0;
};

/**
 * Iterative Tarjan. With @a augmented set, every dangling node behaves as if
 * it linked to all nodes; this is simulated through one virtual hub, so the
 * cost stays linear in nodes + edges.
 */
SccPartition sccPartition(const WebGraph &graph, bool augmented);

/// Node sets of sccPartition, each sorted, in the same (reverse topological) order.
std::vector<std::vector<node>> stronglyConnectedComponents(const WebGraph &graph, bool augmented);

/// Classic bow-tie around the giant SCC of the original graph.
struct BowTie {
    std::vector<node> giantScc;
    std::vector<node> in;
    std::vector<node> out;
    std::vector<node> other;
};

/// Giant SCC ties are broken by smaller minimum node id.
BowTie bowTie(const WebGraph &graph);

/**
 * Ergodic structure of the walk P.
 *
 * escc is the source component of the augmented condensation (the component
 * holding every dangling node, when there are any). The rest, Pure OUT, splits
 * into sink components (ergodic classes) and the transient remainder.
 */
struct StructureDecomposition {
    std::vector<node> escc;
    std::vector<std::vector<node>> ergodicClasses; // by size desc, then min id asc
    std::vector<node> transientOut;
    std::vector<node> ordering; // Q_1..Q_m, transientOut, escc

    count numberOfNodes() const noexcept {
        count total = escc.size() + transientOut.size();
        for (const auto &q : ergodicClasses)
            total += q.size();
        return total;
    }
    /// Pure OUT = ergodic classes and transient remainder, sorted.
    std::vector<node> pureOut() const;
    /// escc followed by transientOut, sorted: the transient block of the c = 1 chain.
    std::vector<node> transientBlock() const;
    double alpha() const noexcept {
        return static_cast<double>(escc.size()) / static_cast<double>(numberOfNodes());
    }
    /// True if the escc has no way out: P restricted to it is stochastic.
    bool esccClosed(const WebGraph &graph) const;
};

StructureDecomposition decompose(const WebGraph &graph);

/// The eight rows of the component census.
struct Census {
    count total = 0;
    count scc = 0;
    count in = 0;
    count out = 0;
    count escc = 0;
    count pureOut = 0;
    count sccsInOut = 0;
    count sccsInPureOut = 0;
};

Census census(const WebGraph &graph);

/// One row per SCC inside Pure OUT: (min node id, size), sorted by size desc then id.
std::vector<std::pair<node, count>> pureOutSccSizes(const WebGraph &graph,
                                                    const StructureDecomposition &dec);

/// Block label per node: "ESCC", "S", or "Q<k>" with k 1-based.
std::vector<std::string> blockLabels(const StructureDecomposition &dec);

} // namespace webrank
