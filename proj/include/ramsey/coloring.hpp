#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "ramsey/graph.hpp"
#include "ramsey/graph6.hpp"

namespace ramsey {

/// Red/blue assignment to the edges of K_N. `red` holds the red edge set;
/// `decided` marks which pairs have a color at all, so partial search states
/// use the same type. Blue is the decided complement of red.
struct TwoColoring {
    Graph red;
    Graph decided;

    int order() const { return red.n(); }

    bool complete() const { return decided.edge_count() == order() * (order() - 1) / 2; }

    bool is_red(int u, int v) const { return red.has_edge(u, v); }
    bool is_blue(int u, int v) const { return decided.has_edge(u, v) && !red.has_edge(u, v); }

    Graph blue() const {
        Graph b(order());
        for (auto [u, v] : edge_list(decided))
            if (!red.has_edge(u, v)) b.add_edge(u, v);
        return b;
    }
};

/// A complete coloring of K_N from its red edge set.
inline TwoColoring coloring_from_red(const Graph& red) {
    TwoColoring c{red, Graph(red.n())};
    for (int v = 0; v < red.n(); ++v)
        for (int u = v + 1; u < red.n(); ++u) c.decided.add_edge(u, v);
    return c;
}

struct ColoringGood {};
struct RedCopyFound {
    Embedding embedding;
};
struct BlueCliqueFound {
    std::vector<int> clique;
};
using VerifyOutcome = std::variant<ColoringGood, RedCopyFound, BlueCliqueFound>;

namespace detail {

inline bool clique_extend(const Graph& g, std::uint64_t cand, int need,
                          std::vector<int>& clique) {
    if (need == 0) return true;
    while (cand) {
        if (std::popcount(cand) < need) return false;
        int v = std::countr_zero(cand);
        cand &= cand - 1;
        clique.push_back(v);
        if (clique_extend(g, cand & g.neighbors(v), need - 1, clique)) return true;
        clique.pop_back();
    }
    return false;
}

}  // namespace detail

/// First k-clique of g in lowest-index order, or nullopt.
inline std::optional<std::vector<int>> find_clique(const Graph& g, int k) {
    if (k < 1) throw std::invalid_argument("find_clique: k must be positive");
    if (k > g.n()) return std::nullopt;
    std::vector<int> clique;
    if (detail::clique_extend(g, g.vertex_mask(), k, clique)) return clique;
    return std::nullopt;
}

/// Checks a complete coloring against the pair (H, K_p): Good means the red
/// graph has no H-subgraph and the blue graph has no K_p. Otherwise a
/// concrete witness is returned (red copies are reported before blue cliques).
inline VerifyOutcome verify_coloring(const TwoColoring& c, const Graph& h, int p) {
    if (!c.complete())
        throw std::invalid_argument("verify_coloring: coloring is not complete");
    if (p < 2) throw std::invalid_argument("verify_coloring: p must be at least 2");
    if (auto emb = contains_subgraph(c.red, h)) return RedCopyFound{*emb};
    if (auto clique = find_clique(c.blue(), p)) return BlueCliqueFound{*clique};
    return ColoringGood{};
}

inline bool is_good(const VerifyOutcome& v) {
    return std::holds_alternative<ColoringGood>(v);
}

/// Witness file format: the order N, a newline, then the graph6 of the red
/// graph.
inline std::string export_witness(const TwoColoring& c) {
    if (!c.complete())
        throw std::invalid_argument("export_witness: coloring is not complete");
    return std::to_string(c.order()) + "\n" + to_graph6(c.red) + "\n";
}

inline TwoColoring import_witness(std::string_view text) {
    std::size_t eol = text.find('\n');
    if (eol == std::string_view::npos)
        throw std::runtime_error("import_witness: missing newline after order");
    int n = 0;
    for (char ch : text.substr(0, eol)) {
        if (ch < '0' || ch > '9')
            throw std::runtime_error("import_witness: malformed order line");
        n = n * 10 + (ch - '0');
        if (n > 64) throw std::runtime_error("import_witness: order exceeds 64");
    }
    std::string_view body = text.substr(eol + 1);
    while (!body.empty() && (body.back() == '\n' || body.back() == '\r'))
        body.remove_suffix(1);
    Graph red = parse_graph6(body);
    if (red.n() != n)
        throw std::runtime_error("import_witness: order line does not match graph6 body");
    return coloring_from_red(red);
}

}  // namespace ramsey
