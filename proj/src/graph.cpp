#include <webrank/graph.hpp>

#include <webrank/errors.hpp>

#include <algorithm>
#include <charconv>
#include <limits>
#include <string>
#include <string_view>

namespace webrank {

WebGraph WebGraph::fromEdges(count n, std::vector<std::pair<node, node>> edges) {
    if (n == 0)
        throw FormatError("graph must have at least one node");
    if (n > std::numeric_limits<node>::max())
        throw FormatError("node count " + std::to_string(n) + " exceeds the 32-bit id range");

    WebGraph g;
    g.n = n;
    g.offsets.assign(n + 1, 0);
    for (const auto &[u, v] : edges) {
        if (u >= n || v >= n)
            throw RangeError("edge (" + std::to_string(u) + ", " + std::to_string(v)
                             + ") has an endpoint outside [0, " + std::to_string(n) + ")");
        ++g.offsets[u + 1];
    }
    for (count u = 0; u < n; ++u)
        g.offsets[u + 1] += g.offsets[u];

    std::vector<node> raw(edges.size());
    {
        std::vector<count> cursor(g.offsets.begin(), g.offsets.end() - 1);
        for (const auto &[u, v] : edges)
            raw[cursor[u]++] = v;
    }
    edges.clear();
    edges.shrink_to_fit();

    // sort each row, drop duplicates, compact in place
    g.targets.reserve(raw.size());
    std::vector<count> compact(n + 1, 0);
    for (count u = 0; u < n; ++u) {
        auto first = raw.begin() + static_cast<std::ptrdiff_t>(g.offsets[u]);
        auto last = raw.begin() + static_cast<std::ptrdiff_t>(g.offsets[u + 1]);
        std::sort(first, last);
        last = std::unique(first, last);
        g.targets.insert(g.targets.end(), first, last);
        compact[u + 1] = g.targets.size();
        if (first == last)
            g.dangling.push_back(static_cast<node>(u));
    }
    g.offsets = std::move(compact);
    g.targets.shrink_to_fit();
    return g;
}

WebGraph WebGraph::transpose() const {
    WebGraph t;
    t.n = n;
    t.offsets.assign(n + 1, 0);
    for (node v : targets)
        ++t.offsets[v + 1];
    for (count u = 0; u < n; ++u)
        t.offsets[u + 1] += t.offsets[u];
    t.targets.resize(targets.size());
    std::vector<count> cursor(t.offsets.begin(), t.offsets.end() - 1);
    // rows of the transpose come out sorted because u is visited in order
    for (count u = 0; u < n; ++u)
        for (node v : successors(static_cast<node>(u)))
            t.targets[cursor[v]++] = static_cast<node>(u);
    for (count u = 0; u < n; ++u)
        if (t.offsets[u + 1] == t.offsets[u])
            t.dangling.push_back(static_cast<node>(u));
    return t;
}

namespace {

std::string_view trim(std::string_view s) {
    const auto ws = " \t\r\v\f";
    const auto b = s.find_first_not_of(ws);
    if (b == std::string_view::npos)
        return {};
    const auto e = s.find_last_not_of(ws);
    return s.substr(b, e - b + 1);
}

// Parses whitespace-separated unsigned integers; false on any malformed token.
bool parseFields(std::string_view s, std::vector<count> &out) {
    out.clear();
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t'))
            ++i;
        if (i == s.size())
            break;
        count value = 0;
        auto [ptr, ec] = std::from_chars(s.data() + i, s.data() + s.size(), value);
        if (ec != std::errc())
            return false;
        std::size_t next = static_cast<std::size_t>(ptr - s.data());
        if (next < s.size() && s[next] != ' ' && s[next] != '\t')
            return false;
        out.push_back(value);
        i = next;
    }
    return true;
}

} // namespace

WebGraph readEdgeList(std::istream &in) {
    std::string line;
    std::size_t lineNo = 0;
    std::vector<count> fields;
    bool haveHeader = false;
    count n = 0;
    std::vector<std::pair<node, node>> edges;

    while (std::getline(in, line)) {
        ++lineNo;
        std::string_view s = trim(line);
        if (s.empty() || s.front() == '#')
            continue;
        if (!parseFields(s, fields))
            throw ParseError(lineNo, "expected decimal integers, got '" + std::string(s) + "'");
        if (!haveHeader) {
            if (fields.size() != 1)
                throw ParseError(lineNo, "header must be a single node count");
            n = fields[0];
            if (n == 0)
                throw FormatError("node count must be positive");
            if (n > std::numeric_limits<node>::max())
                throw FormatError("node count exceeds the 32-bit id range");
            haveHeader = true;
            continue;
        }
        if (fields.size() != 2)
            throw ParseError(lineNo, "expected 'src dst'");
        if (fields[0] >= n || fields[1] >= n)
            throw RangeError("line " + std::to_string(lineNo) + ": endpoint outside [0, "
                             + std::to_string(n) + ")");
        edges.emplace_back(static_cast<node>(fields[0]), static_cast<node>(fields[1]));
    }
    if (in.bad())
        throw FormatError("read error after line " + std::to_string(lineNo));
    if (!haveHeader)
        throw FormatError("missing node-count header");
    return WebGraph::fromEdges(n, std::move(edges));
}

std::vector<double> applyP(const WebGraph &graph, std::span<const double> x) {
    const count n = graph.numberOfNodes();
    if (x.size() != n)
        throw DimensionError("vector length " + std::to_string(x.size()) + " != node count "
                             + std::to_string(n));
    std::vector<double> y(n, 0.0);
    double danglingMass = 0.0;
    for (node u = 0; u < n; ++u) {
        const auto succ = graph.successors(u);
        if (succ.empty()) {
            danglingMass += x[u];
            continue;
        }
        const double share = x[u] / static_cast<double>(succ.size());
        for (node v : succ)
            y[v] += share;
    }
    if (danglingMass != 0.0) {
        const double spread = danglingMass / static_cast<double>(n);
        for (double &value : y)
            value += spread;
    }
    return y;
}

TransitionOperator::TransitionOperator(const WebGraph &graph, double damping)
    : graph_(&graph), c(damping) {
    if (!(damping >= 0.0 && damping <= 1.0))
        throw DomainError("damping factor must lie in [0, 1]");
}

std::vector<double> TransitionOperator::apply(std::span<const double> x) const {
    std::vector<double> y = applyP(*graph_, x);
    const double teleport = (1.0 - c) / static_cast<double>(graph_->numberOfNodes());
    for (double &value : y)
        value = c * value + teleport;
    return y;
}

} // namespace webrank
