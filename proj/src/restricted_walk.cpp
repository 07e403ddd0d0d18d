#include <webrank/restricted_walk.hpp>

#include <webrank/errors.hpp>

#include <string>

namespace webrank {

RestrictedWalk::RestrictedWalk(const WebGraph &graph, std::vector<node> members)
    : n(graph.numberOfNodes()), members_(std::move(members)), local(n, -1) {
    for (std::size_t i = 0; i < members_.size(); ++i) {
        if (members_[i] >= n)
            throw RangeError("member " + std::to_string(members_[i]) + " outside the graph");
        if (i > 0 && members_[i] <= members_[i - 1])
            throw DimensionError("member list must be sorted and distinct");
        local[members_[i]] = static_cast<std::int64_t>(i);
    }
    offsets.assign(members_.size() + 1, 0);
    weight.assign(members_.size(), 0.0);
    for (std::size_t i = 0; i < members_.size(); ++i) {
        const node u = members_[i];
        const auto succ = graph.successors(u);
        if (succ.empty()) {
            danglingLocal.push_back(static_cast<std::uint32_t>(i));
        } else {
            weight[i] = 1.0 / static_cast<double>(succ.size());
            for (node v : succ)
                if (local[v] >= 0)
                    targets.push_back(static_cast<std::uint32_t>(local[v]));
        }
        offsets[i + 1] = targets.size();
    }
}

std::int64_t RestrictedWalk::localIndex(node u) const noexcept {
    return u < n ? local[u] : -1;
}

std::vector<double> RestrictedWalk::applyRow(std::span<const double> x) const {
    if (x.size() != members_.size())
        throw DimensionError("restricted vector has wrong length");
    std::vector<double> y(members_.size(), 0.0);
    for (std::size_t i = 0; i < members_.size(); ++i) {
        const double share = x[i] * weight[i];
        for (std::size_t e = offsets[i]; e < offsets[i + 1]; ++e)
            y[targets[e]] += share;
    }
    if (!danglingLocal.empty()) {
        double mass = 0.0;
        for (auto i : danglingLocal)
            mass += x[i];
        const double spread = mass / static_cast<double>(n);
        for (double &value : y)
            value += spread;
    }
    return y;
}

std::vector<double> RestrictedWalk::applyColumn(std::span<const double> v) const {
    if (v.size() != members_.size())
        throw DimensionError("restricted vector has wrong length");
    std::vector<double> y(members_.size(), 0.0);
    double total = 0.0;
    if (!danglingLocal.empty())
        for (double value : v)
            total += value;
    for (std::size_t i = 0; i < members_.size(); ++i) {
        double acc = 0.0;
        for (std::size_t e = offsets[i]; e < offsets[i + 1]; ++e)
            acc += v[targets[e]];
        y[i] = acc * weight[i];
    }
    for (auto i : danglingLocal)
        y[i] = total / static_cast<double>(n);
    return y;
}

std::vector<double> RestrictedWalk::retention() const {
    return applyColumn(std::vector<double>(members_.size(), 1.0));
}

} // namespace webrank
