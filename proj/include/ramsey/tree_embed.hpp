#pragma once

#include <bit>
#include <optional>
#include <stdexcept>
#include <vector>

#include "ramsey/graph.hpp"

namespace ramsey {

/// Order in which vertices of a tree can be peeled off: repeatedly remove the
/// lowest-index leaf other than `root`. The result is a permutation of V(T)
/// ending at root; every prefix removal leaves a subtree containing root.
inline std::vector<int> leaf_elimination_order(const Graph& t, int root) {
    if (!is_tree(t)) throw std::invalid_argument("leaf_elimination_order: input is not a tree");
    if (root < 0 || root >= t.n())
        throw std::invalid_argument("leaf_elimination_order: root out of range");
    std::vector<int> order;
    std::uint64_t alive = t.vertex_mask();
    for (int step = 0; step + 1 < t.n(); ++step) {
        for (int v = 0; v < t.n(); ++v) {
            if (v == root || !((alive >> v) & 1u)) continue;
            if (std::popcount(t.neighbors(v) & alive) == 1) {
                order.push_back(v);
                alive &= ~(std::uint64_t{1} << v);
                break;
            }
        }
    }
    order.push_back(root);
    return order;
}

/// Greedy tree embedding with a prescribed root image. Builds the tree up
/// from the root in reverse elimination order; each new vertex is placed on
/// the lowest-index unused neighbor of its parent's image. When
/// min_degree(G) >= |T|-1 a free neighbor always exists, so the greedy pass
/// cannot fail; below that threshold it may return nullopt.
inline std::optional<Embedding> embed_tree(const Graph& t, int root, const Graph& g,
                                           int target) {
    if (!is_tree(t)) throw std::invalid_argument("embed_tree: input is not a tree");
    if (root < 0 || root >= t.n()) throw std::invalid_argument("embed_tree: root out of range");
    if (target < 0 || target >= g.n())
        throw std::invalid_argument("embed_tree: target out of range");
    if (t.n() > g.n()) return std::nullopt;

    std::vector<int> order = leaf_elimination_order(t, root);
    std::vector<int> image(t.n(), -1);
    std::uint64_t used = 0;
    std::uint64_t placed = 0;
    image[root] = target;
    used |= std::uint64_t{1} << target;
    placed |= std::uint64_t{1} << root;
    for (int i = static_cast<int>(order.size()) - 2; i >= 0; --i) {
        int w = order[i];
        // The placed prefix is a subtree, so w has exactly one placed neighbor.
        int parent = std::countr_zero(t.neighbors(w) & placed);
        std::uint64_t cand = g.neighbors(image[parent]) & ~used;
        if (!cand) return std::nullopt;
        int spot = std::countr_zero(cand);
        image[w] = spot;
        used |= std::uint64_t{1} << spot;
        placed |= std::uint64_t{1} << w;
    }
    return Embedding{image};
}

}  // namespace ramsey
