#include "potts/cayley.hpp"

namespace potts {

CayleyTree::CayleyTree(int order, int depth) : order_(order), depth_(depth) {
    if (order < 1) throw DomainError("tree order must be at least 1");
    if (depth < 0) throw DomainError("tree depth must be nonnegative");
    offsets_.resize(static_cast<std::size_t>(depth) + 2);
    offsets_[0] = 0;
    for (int l = 0; l <= depth; ++l)
        offsets_[static_cast<std::size_t>(l) + 1] =
            offsets_[static_cast<std::size_t>(l)] + potts::sphere_size(order, l);
}

std::int64_t CayleyTree::sphere_size(int level) const { return potts::sphere_size(order_, level); }

int CayleyTree::level_of(std::int64_t vertex) const {
    if (vertex < 0 || vertex >= size()) throw OutOfTree("vertex id outside the tree");
    int l = 0;
    while (vertex >= offsets_[static_cast<std::size_t>(l) + 1]) ++l;
    return l;
}

std::int64_t CayleyTree::parent(std::int64_t vertex) const {
    const int l = level_of(vertex);
    if (l == 0) throw OutOfTree("root has no parent");
    if (l == 1) return 0;
    const std::int64_t j = vertex - level_offset(l);
    return level_offset(l - 1) + j / order_;
}

std::vector<std::int64_t> CayleyTree::successors(std::int64_t vertex) const {
    const int l = level_of(vertex);
    if (l >= depth_) throw OutOfTree("vertex at leaf level has no successors in the tree");
    std::vector<std::int64_t> out;
    if (vertex == 0) {
        out.reserve(static_cast<std::size_t>(order_) + 1);
        for (std::int64_t c = 1; c <= order_ + 1; ++c) out.push_back(c);
        return out;
    }
    const std::int64_t j = vertex - level_offset(l);
    const std::int64_t first = level_offset(l + 1) + j * order_;
    out.reserve(static_cast<std::size_t>(order_));
    for (int c = 0; c < order_; ++c) out.push_back(first + c);
    return out;
}

std::int64_t sphere_size(int order, int level) {
    if (level == 0) return 1;
    std::int64_t s = order + 1;
    for (int l = 2; l <= level; ++l) s *= order;
    return s;
}

std::int64_t ball_size(int order, int level) {
    if (order == 1) return 2 * static_cast<std::int64_t>(level) + 1;
    std::int64_t kn = 1;
    for (int l = 0; l < level; ++l) kn *= order;
    return 1 + static_cast<std::int64_t>(order + 1) * (kn - 1) / (order - 1);
}

std::vector<std::pair<std::int64_t, std::int64_t>> edges(const CayleyTree& tree, int level) {
    if (level > tree.depth()) throw OutOfTree("requested ball exceeds the tree depth");
    std::vector<std::pair<std::int64_t, std::int64_t>> out;
    out.reserve(static_cast<std::size_t>(tree.ball_size(level) - 1));
    for (std::int64_t v = 1; v < tree.ball_size(level); ++v) out.emplace_back(tree.parent(v), v);
    return out;
}

}  // namespace potts
