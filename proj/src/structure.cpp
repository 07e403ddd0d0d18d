#include <webrank/structure.hpp>

#include <algorithm>
#include <limits>
#include <numeric>

namespace webrank {

namespace {

constexpr std::uint32_t unvisited = std::numeric_limits<std::uint32_t>::max();

// Successor view of the (optionally augmented) graph. The hub, when present,
// has id n; dangling nodes link only to it and it links to every real node.
struct AugmentedView {
    const WebGraph &g;
    bool hub;

    std::size_t size() const { return g.numberOfNodes() + (hub ? 1 : 0); }

    std::size_t degree(std::size_t u) const {
        const count n = g.numberOfNodes();
        if (u == n)
            return n;
        if (hub && g.isDangling(static_cast<node>(u)))
            return 1;
        return g.outDegree(static_cast<node>(u));
    }

    std::size_t successor(std::size_t u, std::size_t k) const {
        const count n = g.numberOfNodes();
        if (u == n)
            return k;
        if (hub && g.isDangling(static_cast<node>(u)))
            return n;
        return g.successors(static_cast<node>(u))[k];
    }
};

std::vector<std::vector<node>> groupByLabel(const SccPartition &p) {
    std::vector<std::vector<node>> groups(p.components);
    for (node u = 0; u < p.label.size(); ++u)
        groups[p.label[u]].push_back(u);
    return groups;
}

// Marks every node reachable from the seeds.
std::vector<char> reach(const WebGraph &g, const std::vector<node> &seeds) {
    std::vector<char> seen(g.numberOfNodes(), 0);
    std::vector<node> frontier(seeds);
    for (node s : seeds)
        seen[s] = 1;
    while (!frontier.empty()) {
        const node u = frontier.back();
        frontier.pop_back();
        for (node v : g.successors(u))
            if (!seen[v]) {
                seen[v] = 1;
                frontier.push_back(v);
            }
    }
    return seen;
}

bool betterComponent(std::size_t sizeA, node minA, std::size_t sizeB, node minB) {
    return sizeA > sizeB || (sizeA == sizeB && minA < minB);
}

} // namespace

SccPartition sccPartition(const WebGraph &graph, bool augmented) {
    const AugmentedView view{graph, augmented && !graph.danglingNodes().empty()};
    const std::size_t total = view.size();

    std::vector<std::uint32_t> index(total, unvisited);
    std::vector<std::uint32_t> low(total, 0);
    std::vector<std::size_t> cursor(total, 0);
    std::vector<char> onStack(total, 0);
    std::vector<std::uint32_t> sccLabel(total, unvisited);
    std::vector<std::size_t> stack;
    std::vector<std::size_t> callStack;
    std::uint32_t counter = 0;
    std::uint32_t components = 0;

    for (std::size_t root = 0; root < total; ++root) {
        if (index[root] != unvisited)
            continue;
        index[root] = low[root] = counter++;
        stack.push_back(root);
        onStack[root] = 1;
        callStack.push_back(root);

        while (!callStack.empty()) {
            const std::size_t u = callStack.back();
            if (cursor[u] < view.degree(u)) {
                const std::size_t v = view.successor(u, cursor[u]++);
                if (index[v] == unvisited) {
                    index[v] = low[v] = counter++;
                    stack.push_back(v);
                    onStack[v] = 1;
                    callStack.push_back(v);
                } else if (onStack[v]) {
                    low[u] = std::min(low[u], index[v]);
                }
                continue;
            }
            callStack.pop_back();
            if (low[u] == index[u]) {
                std::size_t w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    onStack[w] = 0;
                    sccLabel[w] = components;
                } while (w != u);
                ++components;
            }
            if (!callStack.empty()) {
                const std::size_t parent = callStack.back();
                low[parent] = std::min(low[parent], low[u]);
            }
        }
    }

    SccPartition p;
    p.label.assign(sccLabel.begin(), sccLabel.begin() + static_cast<std::ptrdiff_t>(graph.numberOfNodes()));
    p.components = components;
    // the hub never forms a component of its own: it sits on a cycle through any dangling node
    return p;
}

std::vector<std::vector<node>> stronglyConnectedComponents(const WebGraph &graph, bool augmented) {
    return groupByLabel(sccPartition(graph, augmented));
}

BowTie bowTie(const WebGraph &graph) {
    const auto comps = stronglyConnectedComponents(graph, false);
    std::size_t giant = 0;
    for (std::size_t c = 1; c < comps.size(); ++c)
        if (betterComponent(comps[c].size(), comps[c].front(), comps[giant].size(),
                            comps[giant].front()))
            giant = c;

    BowTie bt;
    bt.giantScc = comps[giant];
    const auto forward = reach(graph, bt.giantScc);
    const auto backward = reach(graph.transpose(), bt.giantScc);
    std::vector<char> inGiant(graph.numberOfNodes(), 0);
    for (node u : bt.giantScc)
        inGiant[u] = 1;
    for (node u = 0; u < graph.numberOfNodes(); ++u) {
        if (inGiant[u])
            continue;
        if (backward[u])
            bt.in.push_back(u);
        else if (forward[u])
            bt.out.push_back(u);
        else
            bt.other.push_back(u);
    }
    return bt;
}

std::vector<node> StructureDecomposition::pureOut() const {
    std::vector<node> nodes(transientOut);
    for (const auto &q : ergodicClasses)
        nodes.insert(nodes.end(), q.begin(), q.end());
    std::sort(nodes.begin(), nodes.end());
    return nodes;
}

std::vector<node> StructureDecomposition::transientBlock() const {
    std::vector<node> nodes(transientOut);
    nodes.insert(nodes.end(), escc.begin(), escc.end());
    std::sort(nodes.begin(), nodes.end());
    return nodes;
}

bool StructureDecomposition::esccClosed(const WebGraph &graph) const {
    std::vector<char> inside(graph.numberOfNodes(), 0);
    for (node u : escc)
        inside[u] = 1;
    for (node u : escc) {
        if (graph.isDangling(u)) {
            if (escc.size() != graph.numberOfNodes())
                return false;
            continue;
        }
        for (node v : graph.successors(u))
            if (!inside[v])
                return false;
    }
    return true;
}

StructureDecomposition decompose(const WebGraph &graph) {
    const SccPartition p = sccPartition(graph, true);
    const auto comps = groupByLabel(p);
    const std::size_t k = comps.size();

    std::vector<char> hasIn(k, 0), hasOut(k, 0);
    for (node u = 0; u < graph.numberOfNodes(); ++u)
        for (node v : graph.successors(u))
            if (p.label[u] != p.label[v]) {
                hasOut[p.label[u]] = 1;
                hasIn[p.label[v]] = 1;
            }
    if (!graph.danglingNodes().empty()) {
        const auto hubComp = p.label[graph.danglingNodes().front()];
        for (std::size_t c = 0; c < k; ++c)
            if (c != hubComp) {
                hasIn[c] = 1;
                hasOut[hubComp] = 1;
            }
    }

    std::size_t escc = k;
    for (std::size_t c = 0; c < k; ++c)
        if (!hasIn[c]
            && (escc == k
                || betterComponent(comps[c].size(), comps[c].front(), comps[escc].size(),
                                   comps[escc].front())))
            escc = c;

    StructureDecomposition dec;
    dec.escc = comps[escc];
    for (std::size_t c = 0; c < k; ++c) {
        if (c == escc)
            continue;
        if (!hasOut[c])
            dec.ergodicClasses.push_back(comps[c]);
        else
            dec.transientOut.insert(dec.transientOut.end(), comps[c].begin(), comps[c].end());
    }
    std::sort(dec.transientOut.begin(), dec.transientOut.end());
    std::sort(dec.ergodicClasses.begin(), dec.ergodicClasses.end(),
              [](const auto &a, const auto &b) {
                  return betterComponent(a.size(), a.front(), b.size(), b.front());
              });

    dec.ordering.reserve(graph.numberOfNodes());
    for (const auto &q : dec.ergodicClasses)
        dec.ordering.insert(dec.ordering.end(), q.begin(), q.end());
    dec.ordering.insert(dec.ordering.end(), dec.transientOut.begin(), dec.transientOut.end());
    dec.ordering.insert(dec.ordering.end(), dec.escc.begin(), dec.escc.end());
    return dec;
}

Census census(const WebGraph &graph) {
    const BowTie bt = bowTie(graph);
    const StructureDecomposition dec = decompose(graph);
    const SccPartition p = sccPartition(graph, false);

    auto distinctLabels = [&](const std::vector<node> &nodes) {
        std::vector<std::uint32_t> labels;
        labels.reserve(nodes.size());
        for (node u : nodes)
            labels.push_back(p.label[u]);
        std::sort(labels.begin(), labels.end());
        return static_cast<count>(std::unique(labels.begin(), labels.end()) - labels.begin());
    };

    Census c;
    c.total = graph.numberOfNodes();
    c.scc = bt.giantScc.size();
    c.in = bt.in.size();
    c.out = bt.out.size();
    c.escc = dec.escc.size();
    c.pureOut = c.total - c.escc;
    c.sccsInOut = distinctLabels(bt.out);
    c.sccsInPureOut = distinctLabels(dec.pureOut());
    return c;
}

std::vector<std::pair<node, count>> pureOutSccSizes(const WebGraph &graph,
                                                    const StructureDecomposition &dec) {
    const SccPartition p = sccPartition(graph, false);
    std::vector<std::pair<node, count>> rows; // (min id, size)
    std::vector<std::int64_t> slot(p.components, -1);
    for (node u : dec.pureOut()) {
        auto &s = slot[p.label[u]];
        if (s < 0) {
            s = static_cast<std::int64_t>(rows.size());
            rows.emplace_back(u, 0); // pureOut() is ascending, so u is the minimum
        }
        ++rows[static_cast<std::size_t>(s)].second;
    }
    std::sort(rows.begin(), rows.end(), [](const auto &a, const auto &b) {
        return betterComponent(a.second, a.first, b.second, b.first);
    });
    return rows;
}

std::vector<std::string> blockLabels(const StructureDecomposition &dec) {
    std::vector<std::string> labels(dec.numberOfNodes());
    for (node u : dec.escc)
        labels[u] = "ESCC";
    for (node u : dec.transientOut)
        labels[u] = "S";
    for (std::size_t i = 0; i < dec.ergodicClasses.size(); ++i)
        for (node u : dec.ergodicClasses[i])
            labels[u] = "Q" + std::to_string(i + 1);
    return labels;
}

} // namespace webrank
