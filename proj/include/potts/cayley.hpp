#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "potts/errors.hpp"

namespace potts {

/// Rooted regular tree of order k truncated at a finite depth. The root has
/// k+1 direct successors, every other non-leaf vertex has k. Vertex ids are
/// assigned breadth-first (root = 0), which fixes the successor enumeration
/// used by the backward recursion.
class CayleyTree {
public:
    CayleyTree(int order, int depth);

    int order() const { return order_; }
    int depth() const { return depth_; }

    std::int64_t size() const { return offsets_[static_cast<std::size_t>(depth_) + 1]; }
    std::int64_t sphere_size(int level) const;
    std::int64_t ball_size(int level) const { return offsets_[static_cast<std::size_t>(level) + 1]; }
    std::int64_t level_offset(int level) const { return offsets_[static_cast<std::size_t>(level)]; }

    int level_of(std::int64_t vertex) const;
    std::int64_t parent(std::int64_t vertex) const;
    std::vector<std::int64_t> successors(std::int64_t vertex) const;

private:
    int order_;
    int depth_;
    std::vector<std::int64_t> offsets_;  // offsets_[l] = first id at level l
};

/// |V_n| = 1 + (k+1)(k^n - 1)/(k - 1) for k >= 2; the order-1 tree is the
/// two-sided path, |V_n| = 2n + 1.
std::int64_t ball_size(int order, int level);
std::int64_t sphere_size(int order, int level);

/// All parent-child pairs inside the ball V_n, ordered by child id.
std::vector<std::pair<std::int64_t, std::int64_t>> edges(const CayleyTree& tree, int level);

}  // namespace potts
