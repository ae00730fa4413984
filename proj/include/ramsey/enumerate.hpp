#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "ramsey/graph.hpp"
#include "ramsey/named.hpp"

namespace ramsey {

namespace detail {

/// Edge-mask encoding for graphs on n vertices: bit e of the mask is edge
/// (row,col) in the same column-major upper-triangle order graph6 uses.
inline int edge_index(int row, int col) {
    // requires row < col
    return col * (col - 1) / 2 + row;
}

inline Graph graph_from_mask(int n, std::uint64_t mask) {
    Graph g(n);
    for (int col = 1; col < n; ++col)
        for (int row = 0; row < col; ++row)
            if ((mask >> edge_index(row, col)) & 1u) g.add_edge(row, col);
    return g;
}

inline std::uint64_t mask_of_graph(const Graph& g) {
    std::uint64_t mask = 0;
    for (int col = 1; col < g.n(); ++col)
        for (int row = 0; row < col; ++row)
            if (g.has_edge(row, col)) mask |= std::uint64_t{1} << edge_index(row, col);
    return mask;
}

}  // namespace detail

/// All graphs on exactly n vertices (isolated vertices allowed), one
/// representative per isomorphism class. Brute-force canonical form: a graph
/// is kept iff its edge mask is minimal over all vertex permutations.
/// Practical for n <= 7.
inline std::vector<Graph> all_graphs(int n) {
    if (n < 1 || n > 7) throw std::invalid_argument("all_graphs: supported for 1 <= n <= 7");
    int m = n * (n - 1) / 2;

    // Precompute the action of each vertex permutation on edge indices.
    std::vector<std::array<int, 21>> actions;
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        std::array<int, 21> act{};
        for (int col = 1; col < n; ++col)
            for (int row = 0; row < col; ++row) {
                int a = perm[row], b = perm[col];
                if (a > b) std::swap(a, b);
                act[detail::edge_index(row, col)] = detail::edge_index(a, b);
            }
        actions.push_back(act);
    } while (std::next_permutation(perm.begin(), perm.end()));

    std::vector<Graph> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
        bool minimal = true;
        for (const auto& act : actions) {
            std::uint64_t image = 0;
            std::uint64_t rest = mask;
            while (rest) {
                int e = std::countr_zero(rest);
                rest &= rest - 1;
                image |= std::uint64_t{1} << act[e];
            }
            if (image < mask) {
                minimal = false;
                break;
            }
        }
        if (minimal) out.push_back(detail::graph_from_mask(n, mask));
    }
    return out;
}

inline std::vector<Graph> connected_graphs(int n) {
    std::vector<Graph> out;
    for (const Graph& g : all_graphs(n))
        if (is_connected(g)) out.push_back(g);
    return out;
}

/// Forests on exactly n vertices, isolated vertices included.
inline std::vector<Graph> all_forests(int n) {
    std::vector<Graph> out;
    for (const Graph& g : all_graphs(n))
        if (!girth(g).has_value()) out.push_back(g);
    return out;
}

namespace detail {

inline std::string ahu_code(const Graph& t, int v, int parent) {
    std::vector<std::string> children;
    std::uint64_t row = t.neighbors(v);
    while (row) {
        int u = std::countr_zero(row);
        row &= row - 1;
        if (u != parent) children.push_back(ahu_code(t, u, v));
    }
    std::sort(children.begin(), children.end());
    std::string code = "(";
    for (const auto& c : children) code += c;
    code += ")";
    return code;
}

inline std::vector<int> tree_centers(const Graph& t) {
    int n = t.n();
    std::vector<int> deg(n);
    std::uint64_t alive = t.vertex_mask();
    for (int v = 0; v < n; ++v) deg[v] = t.degree(v);
    int remaining = n;
    std::vector<int> layer;
    while (remaining > 2) {
        layer.clear();
        for (int v = 0; v < n; ++v)
            if (((alive >> v) & 1u) && deg[v] <= 1) layer.push_back(v);
        for (int v : layer) {
            alive &= ~(std::uint64_t{1} << v);
            --remaining;
            std::uint64_t row = t.neighbors(v) & alive;
            while (row) {
                int u = std::countr_zero(row);
                row &= row - 1;
                --deg[u];
            }
        }
    }
    std::vector<int> centers;
    for (int v = 0; v < n; ++v)
        if ((alive >> v) & 1u) centers.push_back(v);
    return centers;
}

}  // namespace detail

/// Isomorphism-invariant code for a tree (AHU code rooted at the center,
/// minimum over the one or two centers).
inline std::string tree_code(const Graph& t) {
    if (!is_tree(t)) throw std::invalid_argument("tree_code: input is not a tree");
    std::string best;
    for (int c : detail::tree_centers(t)) {
        std::string code = detail::ahu_code(t, c, -1);
        if (best.empty() || code < best) best = code;
    }
    return best;
}

/// All free trees on exactly n vertices, by growing a leaf onto every vertex
/// of every tree on n-1 vertices and deduplicating with tree_code.
inline std::vector<Graph> all_trees(int n) {
    if (n < 1) throw std::invalid_argument("all_trees: n must be positive");
    std::vector<Graph> level{Graph(1)};
    for (int size = 2; size <= n; ++size) {
        std::map<std::string, Graph> next;
        for (const Graph& t : level)
            for (int attach = 0; attach < t.n(); ++attach) {
                Graph grown = add_pendant(t, attach);
                next.emplace(tree_code(grown), grown);
            }
        level.clear();
        for (auto& [code, t] : next) level.push_back(t);
    }
    return level;
}

}  // namespace ramsey
