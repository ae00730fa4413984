#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <random>
#include <vector>

#include "ramsey/graph.hpp"

namespace testsupport {

/// Outer 5-cycle 0..4, inner pentagram 5..9, spokes i -- i+5.
inline ramsey::Graph petersen() {
    ramsey::Graph g(10);
    for (int i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);
        g.add_edge(5 + i, 5 + (i + 2) % 5);
        g.add_edge(i, i + 5);
    }
    return g;
}

inline ramsey::Graph random_graph(std::mt19937& rng, int n, double p) {
    ramsey::Graph g(n);
    std::bernoulli_distribution coin(p);
    for (int v = 0; v < n; ++v)
        for (int u = v + 1; u < n; ++u)
            if (coin(rng)) g.add_edge(u, v);
    return g;
}

/// Uniform labeled tree from a random Pruefer sequence.
inline ramsey::Graph random_tree(std::mt19937& rng, int n) {
    ramsey::Graph g(n);
    if (n == 1) return g;
    if (n == 2) {
        g.add_edge(0, 1);
        return g;
    }
    std::uniform_int_distribution<int> pick(0, n - 1);
    std::vector<int> seq(n - 2);
    for (int& s : seq) s = pick(rng);
    std::vector<int> degree(n, 1);
    for (int s : seq) ++degree[s];
    for (int s : seq) {
        for (int leaf = 0; leaf < n; ++leaf) {
            if (degree[leaf] == 1) {
                g.add_edge(leaf, s);
                --degree[leaf];
                --degree[s];
                break;
            }
        }
    }
    int a = -1, b = -1;
    for (int v = 0; v < n; ++v)
        if (degree[v] == 1) (a < 0 ? a : b) = v;
    g.add_edge(a, b);
    return g;
}

/// Exhaustive independence number over all vertex subsets; n <= 24 or so.
inline int brute_independence(const ramsey::Graph& g) {
    int best = 0;
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << g.n()); ++s) {
        bool ok = true;
        for (int v = 0; v < g.n() && ok; ++v)
            if (((s >> v) & 1u) && (g.neighbors(v) & s)) ok = false;
        if (ok) best = std::max(best, std::popcount(s));
    }
    return best;
}

}  // namespace testsupport
