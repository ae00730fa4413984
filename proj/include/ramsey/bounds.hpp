#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ramsey/coloring.hpp"
#include "ramsey/graph.hpp"
#include "ramsey/ramsey_value.hpp"

namespace ramsey {

/// (h-1)(p-1)+1: below this order, p-1 disjoint red (h-1)-cliques beat every
/// connected h-vertex graph, so R(H,K_p) is at least this for connected H.
inline long turan_lower_bound(long h, long p) {
    if (h < 2 || p < 2) throw std::invalid_argument("turan_lower_bound: need h >= 2, p >= 2");
    return (h - 1) * (p - 1) + 1;
}

/// The extremal coloring behind the bound: K_{(h-1)(p-1)} with red = p-1
/// vertex-disjoint copies of K_{h-1} and blue = the complete (p-1)-partite
/// remainder. Good for every connected H on h vertices: red components are
/// too small for H and a blue K_p would need two vertices in one part.
inline TwoColoring turan_coloring(int h, int p) {
    if (h < 2 || p < 2) throw std::invalid_argument("turan_coloring: need h >= 2, p >= 2");
    int n = (h - 1) * (p - 1);
    if (n > 64) throw std::invalid_argument("turan_coloring: order exceeds 64");
    Graph red(n);
    for (int block = 0; block < p - 1; ++block) {
        int base = block * (h - 1);
        for (int a = 0; a < h - 1; ++a)
            for (int b = a + 1; b < h - 1; ++b) red.add_edge(base + a, base + b);
    }
    return coloring_from_red(red);
}

enum class PGoodness { Good, NotGood, Unknown };

inline const char* to_string(PGoodness v) {
    switch (v) {
        case PGoodness::Good: return "good";
        case PGoodness::NotGood: return "not-good";
        case PGoodness::Unknown: return "unknown";
    }
    return "?";
}

/// Good iff the value is exactly (h-1)(p-1)+1; NotGood iff it provably
/// exceeds it; Unknown when the interval straddles the bound.
inline PGoodness p_good(long h, long p, const RamseyValue& r) {
    long bound = turan_lower_bound(h, p);
    if (r.is_exact() && r.lo == bound) return PGoodness::Good;
    if (r.lo > bound) return PGoodness::NotGood;
    return PGoodness::Unknown;
}

/// Interval form of the pendant-edge recurrence
///   R(G1,K_p) = max{ R(G,K_p), R(G1,K_{p-1}) + n - 1 }
/// where G1 on n vertices is G plus one pendant edge. Exact whenever the max
/// is decided by exact inputs.
inline RamseyValue pendant_recurrence(const RamseyValue& r_core_p,
                                      const RamseyValue& r_h_prev, int n) {
    if (n < 3) throw std::invalid_argument("pendant_recurrence: need n >= 3");
    long lo = std::max(r_core_p.lo, r_h_prev.lo + n - 1);
    std::optional<long> hi;
    if (r_core_p.hi && r_h_prev.hi) hi = std::max(*r_core_p.hi, *r_h_prev.hi + n - 1);
    return {lo, hi, detail::combine(r_core_p.provenance, r_h_prev.provenance)};
}

/// A forest by component orders: k[i] components of order i, for i = 1..m.
struct ForestSpec {
    std::vector<long> k;  // k[0] unused; size m+1

    int m() const { return static_cast<int>(k.size()) - 1; }

    long order() const {
        long total = 0;
        for (int i = 1; i <= m(); ++i) total += i * k[i];
        return total;
    }

    void validate() const {
        if (k.size() < 2) throw std::invalid_argument("ForestSpec: no components");
        for (long c : k)
            if (c < 0) throw std::invalid_argument("ForestSpec: negative component count");
        if (k.back() < 1)
            throw std::invalid_argument("ForestSpec: largest declared order has count 0");
    }
};

/// Component-order profile of a forest given as a graph.
inline ForestSpec forest_spec_of(const Graph& f) {
    if (girth(f).has_value()) throw std::invalid_argument("forest_spec_of: graph has a cycle");
    std::vector<long> counts(static_cast<std::size_t>(f.n()) + 1, 0);
    std::uint64_t left = f.vertex_mask();
    int largest = 0;
    while (left) {
        int start = std::countr_zero(left);
        std::uint64_t comp = std::uint64_t{1} << start, frontier = comp;
        while (frontier) {
            std::uint64_t next = 0;
            while (frontier) {
                int v = std::countr_zero(frontier);
                frontier &= frontier - 1;
                next |= f.neighbors(v);
            }
            frontier = next & ~comp;
            comp |= next;
        }
        int sz = std::popcount(comp);
        ++counts[sz];
        largest = std::max(largest, sz);
        left &= ~comp;
    }
    ForestSpec spec{std::vector<long>(counts.begin(), counts.begin() + largest + 1)};
    spec.validate();
    return spec;
}

/// Closed form for forests:
///   R(F,K_p) = max_{1 <= j <= m} (j-1)(p-2) + sum_{i=j}^{m} i*k_i.
/// With j ranging over all of 1..m this reduces to (m-1)(p-1)+1 for a single
/// tree of order m.
inline long stahl_forest(const ForestSpec& f, long p) {
    f.validate();
    if (p < 2) throw std::invalid_argument("stahl_forest: need p >= 2");
    int m = f.m();
    long best = 0;
    long suffix = 0;
    for (int j = m; j >= 1; --j) {
        suffix += static_cast<long>(j) * f.k[j];
        best = std::max(best, (j - 1) * (p - 2) + suffix);
    }
    return best;
}

/// Multicolor extension for a tree T on n vertices:
///   R(T, K_{m_1}, ..., K_{m_t}) = (n-1)(R(K_{m_1},...,K_{m_t}) - 1) + 1,
/// with the classical value R(K_{m_1},...,K_{m_t}) supplied by the caller.
/// Note: this identity also circulates in the non-equivalent printed form
/// (n-1)R+1; this library uses the product form, which agrees with the
/// two-color case R(T,K_p) = (n-1)(p-1)+1.
inline long multicolor_tree(long n, long r_complete) {
    if (n < 2) throw std::invalid_argument("multicolor_tree: need |T| >= 2");
    if (r_complete < 1) throw std::invalid_argument("multicolor_tree: invalid base value");
    return (n - 1) * (r_complete - 1) + 1;
}

struct GoodnessFailureThreshold {
    double ln_threshold;                       // ln(36*h*l^4) + 12*h*l^4
    std::optional<std::uint64_t> exact_value;  // present only when it fits in 64 bits
};

/// Threshold p* = 36*h*l^4 * exp(12*h*l^4): p-goodness of a connected graph
/// of order h and girth l fails for every p >= p*. Computed in log space;
/// the plain value overflows every native type for all valid inputs.
inline GoodnessFailureThreshold goodness_failure_threshold(int h, int ell) {
    if (h < 3) throw std::invalid_argument("goodness_failure_threshold: need h >= 3");
    if (ell < 3) throw std::invalid_argument("goodness_failure_threshold: need girth >= 3");
    double l4 = std::pow(static_cast<double>(ell), 4.0);
    double exponent = 12.0 * h * l4;
    double ln_value = std::log(36.0 * h * l4) + exponent;
    std::optional<std::uint64_t> exact;
    if (ln_value < 63.0 * std::log(2.0)) {
        long double v = 36.0L * h * l4 * std::exp(static_cast<long double>(exponent));
        exact = static_cast<std::uint64_t>(v + 0.5L);
    }
    return {ln_value, exact};
}

/// Girth-aware wrapper: trees have no threshold (they stay p-good forever).
inline GoodnessFailureThreshold goodness_failure_threshold(int h, std::optional<int> girth) {
    if (!girth)
        throw std::domain_error(
            "goodness_failure_threshold: trees are p-good for all p; no failure threshold");
    return goodness_failure_threshold(h, *girth);
}

}  // namespace ramsey
