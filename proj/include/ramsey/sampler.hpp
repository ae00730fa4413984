#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ramsey/graph.hpp"

namespace ramsey {

namespace detail {

/// Counter-based splitmix64: one finalizer call per (seed, counter) pair, so
/// sampling is order-independent and reproducible across platforms.
inline std::uint64_t splitmix64_at(std::uint64_t seed, std::uint64_t counter) {
    std::uint64_t z = seed + (counter + 1) * 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

inline double unit_double(std::uint64_t bits) {
    return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

}  // namespace detail

inline constexpr const char* kSamplerRngId = "splitmix64";

/// G(n,r): every pair present independently with probability r, deterministic
/// in the seed. Pair (u,v), u < v, consumes counter value edge_index(u,v).
inline Graph sample_gnp(int n, double r, std::uint64_t seed) {
    if (n < 1 || n > 64) throw std::invalid_argument("sample_gnp: n must be in [1,64]");
    if (!(r >= 0.0 && r <= 1.0))
        throw std::invalid_argument("sample_gnp: probability out of [0,1]");
    Graph g(n);
    std::uint64_t counter = 0;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u, ++counter)
            if (detail::unit_double(detail::splitmix64_at(seed, counter)) < r)
                g.add_edge(u, v);
    return g;
}

/// Vertices to delete so that no cycle of length <= ell survives: repeatedly
/// find a shortest cycle of the remaining graph and drop its lowest-index
/// vertex. Returns the deleted set (original labels).
inline std::vector<int> short_cycle_vertices(const Graph& g, int ell) {
    if (ell < 3) throw std::invalid_argument("short_cycle_vertices: need ell >= 3");
    std::vector<int> deleted;
    std::uint64_t keep = g.vertex_mask();
    std::vector<int> label(g.n());
    for (int v = 0; v < g.n(); ++v) label[v] = v;
    Graph current = g;
    for (;;) {
        auto cycle = shortest_cycle(current);
        if (!cycle || static_cast<int>(cycle->size()) > ell) break;
        int victim = *std::min_element(cycle->begin(), cycle->end());
        deleted.push_back(label[victim]);
        keep &= ~(std::uint64_t{1} << label[victim]);
        label.erase(label.begin() + victim);
        current = current.without_vertex(victim);
    }
    return deleted;
}

/// Eq-style expected-count bound for cycles of length <= ell in G(n, n^{l-1}):
///   2 n^{lambda*ell - 1} / (1 - n^{-lambda}).
inline double eq1_bound(double n, double lambda, int ell) {
    if (ell < 3) throw std::invalid_argument("eq1_bound: need ell >= 3");
    if (n < 2.0) throw std::invalid_argument("eq1_bound: need n >= 2");
    if (!(lambda > 0.0 && lambda < 1.0 / ell))
        throw std::domain_error("eq1_bound: lambda must lie in (0, 1/ell)");
    return 2.0 * std::pow(n, lambda * ell - 1.0) / (1.0 - std::pow(n, -lambda));
}

/// Log-space form of eq1_bound for orders far beyond double range: returns
/// ln of the bound given ln(n).
inline double eq1_bound_ln(double ln_n, double lambda, int ell) {
    if (ell < 3) throw std::invalid_argument("eq1_bound_ln: need ell >= 3");
    if (ln_n < std::log(2.0)) throw std::invalid_argument("eq1_bound_ln: need n >= 2");
    if (!(lambda > 0.0 && lambda < 1.0 / ell))
        throw std::domain_error("eq1_bound_ln: lambda must lie in (0, 1/ell)");
    return std::log(2.0) + (lambda * ell - 1.0) * ln_n - std::log1p(-std::exp(-lambda * ln_n));
}

/// Outcome of one witness construction run. `certified` holds exactly when
/// both conditions were verified on the surviving graph.
struct WitnessResult {
    Graph g_prime;
    int ell = 0;
    long p = 0;        // ceil(3 n^{1-lambda} ln n), natural log
    double lambda = 0;
    std::uint64_t seed = 0;
    std::string rng = kSamplerRngId;
    bool certified = false;
    bool girth_ok = false;
    bool independence_ok = false;
    int deleted = 0;
    int alpha = 0;
    std::optional<int> girth_value;
};

/// Samples G(n, n^{lambda-1}), deletes a vertex of every cycle of length
/// <= ell, and certifies girth(G') > ell and alpha(G') < p exactly, with
/// p = ceil(3 n^{1-lambda} ln n). Default lambda is ell^-2. At small n the
/// asymptotic guarantee does not apply, so certification is per instance and
/// the result reports which condition failed.
inline WitnessResult construct_witness(int n, int ell, std::optional<double> lambda_opt,
                                       std::uint64_t seed) {
    if (n < 2 || n > 64)
        throw std::invalid_argument("construct_witness: n must be in [2,64]");
    if (ell < 3) throw std::invalid_argument("construct_witness: need ell >= 3");
    double lambda = lambda_opt.value_or(1.0 / (static_cast<double>(ell) * ell));
    if (!(lambda > 0.0 && lambda < 1.0 / ell))
        throw std::domain_error("construct_witness: lambda must lie in (0, 1/ell)");

    double r = std::pow(static_cast<double>(n), lambda - 1.0);
    Graph g = sample_gnp(n, r, seed);
    std::vector<int> victims = short_cycle_vertices(g, ell);
    std::uint64_t keep = g.vertex_mask();
    for (int v : victims) keep &= ~(std::uint64_t{1} << v);
    Graph g_prime = g.induced(keep);

    WitnessResult out;
    out.g_prime = g_prime;
    out.ell = ell;
    out.lambda = lambda;
    out.seed = seed;
    out.deleted = static_cast<int>(victims.size());
    out.p = static_cast<long>(
        std::ceil(3.0 * std::pow(static_cast<double>(n), 1.0 - lambda) * std::log(n)));
    out.girth_value = girth(g_prime);
    out.girth_ok = !out.girth_value || *out.girth_value > ell;
    out.alpha = independence_number(g_prime);
    out.independence_ok = out.alpha < out.p;
    out.certified = out.girth_ok && out.independence_ok;
    return out;
}

/// True iff girth(G') > ell and alpha(G') < p. When this holds, coloring
/// K_{|G'|} with G' red and its complement blue defeats every H whose
/// shortest cycle has length ell: the red graph has no cycle that short, and
/// a blue K_p would be a red independent set of size p.
inline bool verify_superlinearity_witness(const Graph& g_prime, int ell, long p) {
    auto gv = girth(g_prime);
    if (gv && *gv <= ell) return false;
    return independence_number(g_prime) < p;
}

}  // namespace ramsey
