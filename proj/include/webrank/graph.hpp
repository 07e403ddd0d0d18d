#pragma once

#include <cstdint>
#include <istream>
#include <span>
#include <utility>
#include <vector>

namespace webrank {

using node = std::uint32_t;
using count = std::uint64_t;

/**
 * Immutable directed graph in CSR form.
 *
 * Parallel edges are collapsed, successor lists are sorted, self-loops are
 * kept. A node is dangling iff its successor list is empty.
 */
class WebGraph {
public:
    WebGraph() = default;

    /// Builds a graph on @a n nodes. Throws RangeError for endpoints >= n.
    static WebGraph fromEdges(count n, std::vector<std::pair<node, node>> edges);

    count numberOfNodes() const noexcept { return n; }
    count numberOfEdges() const noexcept { return targets.size(); }

    std::span<const node> successors(node u) const noexcept {
        return {targets.data() + offsets[u], targets.data() + offsets[u + 1]};
    }

    count outDegree(node u) const noexcept { return offsets[u + 1] - offsets[u]; }
    bool isDangling(node u) const noexcept { return offsets[u + 1] == offsets[u]; }

    /// Dangling nodes in ascending order.
    std::span<const node> danglingNodes() const noexcept { return dangling; }

    /// Predecessor lists (transpose), built on demand.
    WebGraph transpose() const;

private:
    count n = 0;
    std::vector<count> offsets{0};
    std::vector<node> targets;
    std::vector<node> dangling;
};

/// Reads the edge-list text format: header line with n, then "src dst" lines, '#' comments.
WebGraph readEdgeList(std::istream &in);

/// Returns xP with dangling rows spread uniformly. Throws DimensionError on length mismatch.
std::vector<double> applyP(const WebGraph &graph, std::span<const double> x);

/// G = cP + (1-c)(1/n)E for a fixed graph, applied as a rank-one correction.
class TransitionOperator {
public:
    /// Throws DomainError unless 0 <= c <= 1.
    TransitionOperator(const WebGraph &graph, double damping);

    const WebGraph &graph() const noexcept { return *graph_; }
    double damping() const noexcept { return c; }

    /// Returns c(xP) + (1-c)/n for x a probability vector.
    std::vector<double> apply(std::span<const double> x) const;

private:
    const WebGraph *graph_;
    double c;
};

} // namespace webrank
