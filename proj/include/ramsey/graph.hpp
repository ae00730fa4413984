#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace ramsey {

/// Undirected simple graph on 1..64 vertices. Row v of the adjacency table
/// has bit u set iff uv is an edge, so one machine word holds a whole
/// neighborhood and set operations on neighborhoods are single AND/OR ops.
class Graph {
public:
    Graph() = default;

    explicit Graph(int n) : n_(n) {
        if (n < 1 || n > 64)
            throw std::invalid_argument("Graph: vertex count must be in [1,64], got " +
                                        std::to_string(n));
    }

    int n() const { return n_; }

    std::uint64_t neighbors(int v) const { return adj_[check(v)]; }

    bool has_edge(int u, int v) const {
        return (adj_[check(u)] >> check(v)) & 1u;
    }

    void add_edge(int u, int v) {
        check(u);
        check(v);
        if (u == v) throw std::invalid_argument("Graph: self-loop rejected");
        adj_[u] |= std::uint64_t{1} << v;
        adj_[v] |= std::uint64_t{1} << u;
    }

    void remove_edge(int u, int v) {
        adj_[check(u)] &= ~(std::uint64_t{1} << check(v));
        adj_[v] &= ~(std::uint64_t{1} << u);
    }

    int degree(int v) const { return std::popcount(neighbors(v)); }

    int edge_count() const {
        int total = 0;
        for (int v = 0; v < n_; ++v) total += degree(v);
        return total / 2;
    }

    /// Mask with one bit per vertex.
    std::uint64_t vertex_mask() const {
        return n_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1;
    }

    /// Induced subgraph on the vertices in `keep`, relabeled in ascending
    /// order of their original indices.
    Graph induced(std::uint64_t keep) const {
        keep &= vertex_mask();
        int m = std::popcount(keep);
        if (m == 0) throw std::invalid_argument("Graph::induced: empty vertex set");
        std::array<int, 64> newid{};
        int next = 0;
        for (int v = 0; v < n_; ++v)
            if ((keep >> v) & 1u) newid[v] = next++;
        Graph g(m);
        for (int v = 0; v < n_; ++v) {
            if (!((keep >> v) & 1u)) continue;
            std::uint64_t row = adj_[v] & keep;
            while (row) {
                int u = std::countr_zero(row);
                row &= row - 1;
                if (u > v) g.add_edge(newid[v], newid[u]);
            }
        }
        return g;
    }

    Graph without_vertex(int v) const {
        check(v);
        if (n_ == 1) throw std::invalid_argument("Graph: cannot remove the last vertex");
        return induced(vertex_mask() & ~(std::uint64_t{1} << v));
    }

    friend bool operator==(const Graph& a, const Graph& b) {
        if (a.n_ != b.n_) return false;
        for (int v = 0; v < a.n_; ++v)
            if (a.adj_[v] != b.adj_[v]) return false;
        return true;
    }

private:
    int check(int v) const {
        if (v < 0 || v >= n_)
            throw std::invalid_argument("Graph: vertex " + std::to_string(v) +
                                        " out of range [0," + std::to_string(n_) + ")");
        return v;
    }

    int n_ = 0;
    std::array<std::uint64_t, 64> adj_{};
};

inline Graph complement(const Graph& g) {
    Graph c(g.n());
    for (int v = 0; v < g.n(); ++v)
        for (int u = v + 1; u < g.n(); ++u)
            if (!g.has_edge(u, v)) c.add_edge(u, v);
    return c;
}

inline std::vector<std::pair<int, int>> edge_list(const Graph& g) {
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v < g.n(); ++v)
        for (int u = v + 1; u < g.n(); ++u)
            if (g.has_edge(u, v)) edges.emplace_back(v, u);
    return edges;
}

inline int min_degree(const Graph& g) {
    int d = 64;
    for (int v = 0; v < g.n(); ++v) d = std::min(d, g.degree(v));
    return d;
}

inline int max_degree(const Graph& g) {
    int d = 0;
    for (int v = 0; v < g.n(); ++v) d = std::max(d, g.degree(v));
    return d;
}

inline bool is_connected(const Graph& g) {
    std::uint64_t seen = 1, frontier = 1;
    while (frontier) {
        std::uint64_t next = 0;
        while (frontier) {
            int v = std::countr_zero(frontier);
            frontier &= frontier - 1;
            next |= g.neighbors(v);
        }
        frontier = next & ~seen;
        seen |= next;
    }
    return seen == g.vertex_mask();
}

inline bool is_tree(const Graph& g) {
    return is_connected(g) && g.edge_count() == g.n() - 1;
}

/// Length of a shortest cycle, or nullopt when the graph is a forest.
/// BFS from every root; the minimum over all roots of dist[x]+dist[y]+1 over
/// non-tree edges xy seen during the scan is exact.
inline std::optional<int> girth(const Graph& g) {
    int best = -1;
    for (int root = 0; root < g.n(); ++root) {
        std::array<int, 64> dist{};
        std::array<int, 64> parent{};
        dist.fill(-1);
        parent.fill(-1);
        dist[root] = 0;
        std::array<int, 64> queue{};
        int head = 0, tail = 0;
        queue[tail++] = root;
        while (head < tail) {
            int x = queue[head++];
            std::uint64_t row = g.neighbors(x);
            while (row) {
                int y = std::countr_zero(row);
                row &= row - 1;
                if (dist[y] < 0) {
                    dist[y] = dist[x] + 1;
                    parent[y] = x;
                    queue[tail++] = y;
                } else if (y != parent[x]) {
                    int len = dist[x] + dist[y] + 1;
                    if (best < 0 || len < best) best = len;
                }
            }
        }
    }
    if (best < 0) return std::nullopt;
    return best;
}

/// One shortest cycle as a vertex list, or nullopt for forests. Deterministic:
/// roots and neighbors are scanned in ascending order and only strict
/// improvements are kept.
inline std::optional<std::vector<int>> shortest_cycle(const Graph& g) {
    int best = -1;
    std::vector<int> cycle;
    for (int root = 0; root < g.n(); ++root) {
        std::array<int, 64> dist{};
        std::array<int, 64> parent{};
        dist.fill(-1);
        parent.fill(-1);
        dist[root] = 0;
        std::array<int, 64> queue{};
        int head = 0, tail = 0;
        queue[tail++] = root;
        while (head < tail) {
            int x = queue[head++];
            std::uint64_t row = g.neighbors(x);
            while (row) {
                int y = std::countr_zero(row);
                row &= row - 1;
                if (dist[y] < 0) {
                    dist[y] = dist[x] + 1;
                    parent[y] = x;
                    queue[tail++] = y;
                } else if (y != parent[x]) {
                    int len = dist[x] + dist[y] + 1;
                    if (best >= 0 && len >= best) continue;
                    // Walk both branches back to the root. For the globally
                    // minimal event the two paths share only the root, so this
                    // is a simple cycle of length `len`.
                    std::vector<int> left, right;
                    for (int v = x; v >= 0; v = parent[v]) left.push_back(v);
                    for (int v = y; v >= 0; v = parent[v]) right.push_back(v);
                    std::uint64_t seen = 0;
                    bool simple = true;
                    for (int v : left) seen |= std::uint64_t{1} << v;
                    for (std::size_t i = 0; i + 1 < right.size(); ++i)
                        if ((seen >> right[i]) & 1u) simple = false;
                    if (!simple) continue;
                    best = len;
                    cycle = left;
                    for (std::size_t i = right.size() - 1; i + 1 > 0; --i)
                        if (right[i] != root) cycle.push_back(right[i]);
                }
            }
        }
    }
    if (best < 0) return std::nullopt;
    return cycle;
}

namespace detail {

/// Branch-and-bound maximum clique (Tomita-style greedy coloring bound).
/// Works on adjacency masks; used through the complement for independence.
struct CliqueSolver {
    const Graph& g;
    int best = 0;

    explicit CliqueSolver(const Graph& graph) : g(graph) {}

    void expand(std::uint64_t cand, int size) {
        if (size > best) best = size;
        if (!cand) return;
        // Greedy coloring of the candidate set: vertices in one class are
        // pairwise non-adjacent, so a clique takes at most one per class.
        std::array<int, 64> order{};
        std::array<int, 64> bound{};
        int count = 0;
        std::uint64_t uncolored = cand;
        int color = 0;
        while (uncolored) {
            ++color;
            std::uint64_t available = uncolored;
            while (available) {
                int v = std::countr_zero(available);
                uncolored &= ~(std::uint64_t{1} << v);
                available &= ~(std::uint64_t{1} << v);
                available &= ~g.neighbors(v);
                order[count] = v;
                bound[count] = color;
                ++count;
            }
        }
        std::array<std::uint64_t, 65> prefix{};
        for (int i = 0; i < count; ++i)
            prefix[i + 1] = prefix[i] | (std::uint64_t{1} << order[i]);
        for (int i = count - 1; i >= 0; --i) {
            if (size + bound[i] <= best) return;
            expand(prefix[i] & g.neighbors(order[i]), size + 1);
        }
    }
};

inline int max_clique_size(const Graph& g) {
    CliqueSolver solver(g);
    solver.expand(g.vertex_mask(), 0);
    return solver.best;
}

}  // namespace detail

/// Exact independence number. Refuses graphs above `cutoff` instead of
/// falling back to a heuristic: callers use this as a certificate.
inline int independence_number(const Graph& g, int cutoff = 64) {
    if (g.n() > cutoff)
        throw std::invalid_argument("independence_number: graph on " +
                                    std::to_string(g.n()) +
                                    " vertices exceeds exact-solver cutoff " +
                                    std::to_string(cutoff));
    return detail::max_clique_size(complement(g));
}

/// Injective vertex map H -> G. map[h] is the image of H-vertex h.
struct Embedding {
    std::vector<int> map;
};

/// True iff `e` is injective and carries every H-edge to a G-edge.
inline bool embedding_valid(const Graph& h, const Graph& g, const Embedding& e) {
    if (static_cast<int>(e.map.size()) != h.n()) return false;
    std::uint64_t used = 0;
    for (int v : e.map) {
        if (v < 0 || v >= g.n()) return false;
        if ((used >> v) & 1u) return false;
        used |= std::uint64_t{1} << v;
    }
    for (auto [a, b] : edge_list(h))
        if (!g.has_edge(e.map[a], e.map[b])) return false;
    return true;
}

namespace detail {

/// Vertex order for subgraph search: components in index order, BFS inside
/// each component, so every vertex after the first of its component has a
/// previously-placed neighbor.
inline std::vector<int> subgraph_search_order(const Graph& h) {
    std::vector<int> order;
    std::uint64_t placed = 0;
    for (int start = 0; start < h.n(); ++start) {
        if ((placed >> start) & 1u) continue;
        std::vector<int> queue{start};
        placed |= std::uint64_t{1} << start;
        std::size_t head = 0;
        while (head < queue.size()) {
            int v = queue[head++];
            order.push_back(v);
            std::uint64_t row = h.neighbors(v) & ~placed;
            while (row) {
                int u = std::countr_zero(row);
                row &= row - 1;
                placed |= std::uint64_t{1} << u;
                queue.push_back(u);
            }
        }
    }
    return order;
}

inline bool subgraph_extend(const Graph& g, const Graph& h,
                            const std::vector<int>& order, std::size_t depth,
                            std::array<int, 64>& image, std::uint64_t used) {
    if (depth == order.size()) return true;
    int hv = order[depth];
    std::uint64_t cand = g.vertex_mask() & ~used;
    std::uint64_t row = h.neighbors(hv);
    while (row) {
        int u = std::countr_zero(row);
        row &= row - 1;
        if (image[u] >= 0) cand &= g.neighbors(image[u]);
    }
    while (cand) {
        int gv = std::countr_zero(cand);
        cand &= cand - 1;
        image[hv] = gv;
        if (subgraph_extend(g, h, order, depth + 1, image, used | (std::uint64_t{1} << gv)))
            return true;
        image[hv] = -1;
    }
    return false;
}

}  // namespace detail

/// Subgraph containment (not induced): an embedding of H into G if one
/// exists. Lowest-index candidates are tried first, so the result is
/// deterministic.
inline std::optional<Embedding> contains_subgraph(const Graph& g, const Graph& h) {
    if (h.n() > g.n()) return std::nullopt;
    std::vector<int> order = detail::subgraph_search_order(h);
    std::array<int, 64> image{};
    image.fill(-1);
    if (!detail::subgraph_extend(g, h, order, 0, image, 0)) return std::nullopt;
    Embedding e;
    e.map.assign(image.begin(), image.begin() + h.n());
    return e;
}

/// Result of peeling one pendant edge: the leaf, its unique neighbor (both in
/// the original labeling) and the graph with the leaf removed.
struct PendantDecomposition {
    Graph core;
    int leaf;
    int attach;
};

/// Peels the lowest-index degree-1 vertex. Returns nullopt when no vertex has
/// degree 1.
inline std::optional<PendantDecomposition> pendant_decompose(const Graph& g) {
    if (g.n() < 2) return std::nullopt;
    for (int v = 0; v < g.n(); ++v) {
        if (g.degree(v) == 1) {
            int attach = std::countr_zero(g.neighbors(v));
            return PendantDecomposition{g.without_vertex(v), v, attach};
        }
    }
    return std::nullopt;
}

}  // namespace ramsey
