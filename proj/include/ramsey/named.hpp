#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "ramsey/graph.hpp"

namespace ramsey {

namespace detail {

inline std::optional<int> parse_param(std::string_view s) {
    if (s.empty() || s.size() > 2) return std::nullopt;
    int v = 0;
    for (char c : s) {
        if (c < '0' || c > '9') return std::nullopt;
        v = v * 10 + (c - '0');
    }
    return v;
}

inline Graph complete_graph(int n) {
    Graph g(n);
    for (int v = 0; v < n; ++v)
        for (int u = v + 1; u < n; ++u) g.add_edge(u, v);
    return g;
}

inline Graph cycle_graph(int n) {
    Graph g(n);
    for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
    return g;
}

inline Graph path_graph(int n) {
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

inline Graph star_graph(int leaves) {
    Graph g(leaves + 1);
    for (int v = 1; v <= leaves; ++v) g.add_edge(0, v);
    return g;
}

inline Graph k4_minus_e() {
    Graph g = complete_graph(4);
    g.remove_edge(2, 3);
    return g;
}

}  // namespace detail

/// Appends a new degree-1 vertex attached to `attach` (default: vertex 0, the
/// convention used by the named pendant chains H1..H7).
inline Graph add_pendant(const Graph& g, int attach = 0) {
    Graph out(g.n() + 1);
    for (auto [a, b] : edge_list(g)) out.add_edge(a, b);
    out.add_edge(attach, g.n());
    return out;
}

/// Factory for the named small graphs: K_n, C_n, P_n, S_n (star with n
/// leaves), K4-e, and the pendant chains H1..H7:
///   H1 = K3+pendant, H2 = H1+pendant, H3 = C4+pendant, H4 = K4+pendant,
///   H5 = H4+pendant, H6 = (K4-e)+pendant, H7 = H6+pendant.
inline Graph named_graph(std::string_view name) {
    auto fail = [&](const std::string& why) -> Graph {
        throw std::invalid_argument("named_graph: " + why + ": '" + std::string(name) + "'");
    };
    if (name == "K4-e") return detail::k4_minus_e();
    if (name.size() >= 2 && name[0] == 'H') {
        auto p = detail::parse_param(name.substr(1));
        if (!p) return fail("unknown name");
        switch (*p) {
            case 1: return add_pendant(detail::complete_graph(3));
            case 2: return add_pendant(add_pendant(detail::complete_graph(3)));
            case 3: return add_pendant(detail::cycle_graph(4));
            case 4: return add_pendant(detail::complete_graph(4));
            case 5: return add_pendant(add_pendant(detail::complete_graph(4)));
            case 6: return add_pendant(detail::k4_minus_e());
            case 7: return add_pendant(add_pendant(detail::k4_minus_e()));
            default: return fail("parameter out of range");
        }
    }
    if (name.size() >= 2) {
        auto p = detail::parse_param(name.substr(1));
        if (p) {
            switch (name[0]) {
                case 'K':
                    if (*p < 1 || *p > 64) return fail("parameter out of range");
                    return detail::complete_graph(*p);
                case 'C':
                    if (*p < 3 || *p > 64) return fail("parameter out of range");
                    return detail::cycle_graph(*p);
                case 'P':
                    if (*p < 1 || *p > 64) return fail("parameter out of range");
                    return detail::path_graph(*p);
                case 'S':
                    if (*p < 1 || *p > 63) return fail("parameter out of range");
                    return detail::star_graph(*p);
                default: break;
            }
        }
    }
    return fail("unknown name");
}

}  // namespace ramsey
