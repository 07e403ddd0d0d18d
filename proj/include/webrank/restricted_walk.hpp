#pragma once

#include <webrank/graph.hpp>

#include <cstdint>
#include <span>
#include <vector>

namespace webrank {

/**
 * The block of P indexed by a node subset: the random walk killed when it
 * leaves the subset. Dangling rows keep their 1/n spread, so a dangling node
 * puts weight 1/n on every member of the subset.
 *
 * Vectors are indexed locally, in the ascending order of the member list.
 */
class RestrictedWalk {
public:
    /// @a members must be sorted and distinct.
    RestrictedWalk(const WebGraph &graph, std::vector<node> members);

    std::size_t size() const noexcept { return members_.size(); }
    std::span<const node> members() const noexcept { return members_; }

    /// Local index of a global node, or -1 if it is not a member.
    std::int64_t localIndex(node u) const noexcept;

    /// Row action y = xB.
    std::vector<double> applyRow(std::span<const double> x) const;

    /// Column action y = Bv.
    std::vector<double> applyColumn(std::span<const double> v) const;

    /// B1: one-step probability of staying inside, per member.
    std::vector<double> retention() const;

private:
    count n;
    std::vector<node> members_;
    std::vector<std::int64_t> local; // size n, -1 for outsiders
    // internal edges in local CSR, weight 1/d of the source
    std::vector<std::size_t> offsets;
    std::vector<std::uint32_t> targets;
    std::vector<double> weight; // per local source: 1/d, or 0 for dangling
    std::vector<std::uint32_t> danglingLocal;
};

} // namespace webrank
