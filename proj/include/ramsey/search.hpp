#pragma once

#include <atomic>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <thread>
#include <vector>

#include "ramsey/bounds.hpp"
#include "ramsey/coloring.hpp"
#include "ramsey/graph.hpp"
#include "ramsey/ramsey_value.hpp"

namespace ramsey {

struct SearchOptions {
    std::uint64_t budget = std::numeric_limits<std::uint64_t>::max();  // search nodes
    int workers = 1;
};

enum class SearchStatus { WitnessFound, Exhausted, Inconclusive };

inline const char* to_string(SearchStatus s) {
    switch (s) {
        case SearchStatus::WitnessFound: return "witness-found";
        case SearchStatus::Exhausted: return "exhausted";
        case SearchStatus::Inconclusive: return "inconclusive";
    }
    return "?";
}

struct SearchResult {
    SearchStatus status = SearchStatus::Inconclusive;
    std::optional<TwoColoring> witness;
    std::uint64_t nodes = 0;
};

namespace detail {

/// Static placement data for detecting red copies of H that use a
/// just-colored edge: one plan per ordered H-edge (a,b); the anchor maps onto
/// the new edge and the remaining vertices are placed in an order where each
/// vertex of a connected piece has an already-placed neighbor.
struct PlacementStep {
    int hv;
    std::uint64_t earlier_neighbors;
};

struct AnchorPlan {
    int a, b;
    std::vector<PlacementStep> steps;
};

struct TargetPlan {
    int hn = 0;
    int hedges = 0;
    std::vector<AnchorPlan> plans;

    static TargetPlan build(const Graph& h) {
        TargetPlan plan;
        plan.hn = h.n();
        plan.hedges = h.edge_count();
        for (auto [a, b] : edge_list(h)) {
            for (auto [x, y] : {std::pair{a, b}, std::pair{b, a}}) {
                AnchorPlan ap{x, y, {}};
                std::uint64_t placed = (std::uint64_t{1} << x) | (std::uint64_t{1} << y);
                for (int step = 0; step < h.n() - 2; ++step) {
                    int pick = -1;
                    for (int v = 0; v < h.n(); ++v) {
                        if ((placed >> v) & 1u) continue;
                        if (h.neighbors(v) & placed) {
                            pick = v;
                            break;
                        }
                    }
                    if (pick < 0)
                        for (int v = 0; v < h.n(); ++v)
                            if (!((placed >> v) & 1u)) {
                                pick = v;
                                break;
                            }
                    ap.steps.push_back({pick, h.neighbors(pick) & placed});
                    placed |= std::uint64_t{1} << pick;
                }
                plan.plans.push_back(std::move(ap));
            }
        }
        return plan;
    }
};

/// Partial-coloring snapshot used to hand subtrees to workers. The state is
/// about to color edge (k,j); eq tracks whether vertex k's color vector so
/// far equals vertex k-1's prefix (the symmetry-breaking comparison).
struct SearchState {
    std::array<std::uint64_t, 64> red{};
    std::array<std::uint64_t, 64> blue{};
    int k = 1;
    int j = 0;
    bool eq = true;
};

struct BranchOutcome {
    bool found = false;
    bool capped = false;
    std::uint64_t nodes = 0;
    std::array<std::uint64_t, 64> witness_red{};
};

/// Depth-first extension over the edges of K_n in vertex-major order: vertex
/// k's edges to 0..k-1 form its color vector. Red is tried before blue. A
/// partial state is abandoned as soon as a red H or blue K_p appears among
/// decided edges, and whenever giving vertex k a lexicographically larger
/// vector prefix than vertex k-1 would make the coloring non-canonical under
/// the adjacent-transposition ordering.
class ColoringDFS {
public:
    ColoringDFS(int n, int p, const TargetPlan& plan, std::uint64_t cap)
        : n_(n), p_(p), plan_(plan), cap_(cap) {
        full_ = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
        check_red_ = plan.hn <= n && plan.hedges > 0;
    }

    SearchState state;
    std::uint64_t nodes = 0;
    bool found = false;
    bool capped = false;
    std::array<std::uint64_t, 64> witness_red{};

    void run() { dfs(state.k, state.j, state.eq); }

    /// Expands like dfs but stops at vertex boundary `limit_k`, collecting
    /// the frontier states instead of recursing into them.
    void generate(int limit_k, std::vector<SearchState>& out) {
        gen(state.k, state.j, state.eq, limit_k, out);
    }

private:
    bool dfs(int k, int j, bool eq) {
        if (k == n_) {
            found = true;
            witness_red = state.red;
            return true;
        }
        int nk = (j + 1 < k) ? k : k + 1;
        int nj = (j + 1 < k) ? j + 1 : 0;
        bool compare = j <= k - 2;
        bool prev_red = compare && ((state.red[k - 1] >> j) & 1u);

        if (!(eq && compare && !prev_red)) {
            if (nodes >= cap_) {
                capped = true;
                return true;
            }
            ++nodes;
            set_red(k, j);
            if (!(check_red_ && red_copy_using(k, j))) {
                bool eq2 = compare ? (eq && prev_red) : eq;
                if (dfs(nk, nj, nk == k ? eq2 : true)) return true;
            }
            unset_red(k, j);
        }

        if (nodes >= cap_) {
            capped = true;
            return true;
        }
        ++nodes;
        set_blue(k, j);
        if (!blue_completes_clique(k, j)) {
            bool eq2 = compare ? (eq && !prev_red) : eq;
            if (dfs(nk, nj, nk == k ? eq2 : true)) return true;
        }
        unset_blue(k, j);
        return false;
    }

    bool gen(int k, int j, bool eq, int limit_k, std::vector<SearchState>& out) {
        if (k >= limit_k || k == n_) {
            SearchState s;
            s.red = state.red;
            s.blue = state.blue;
            s.k = k;
            s.j = j;
            s.eq = eq;
            out.push_back(s);
            return false;
        }
        int nk = (j + 1 < k) ? k : k + 1;
        int nj = (j + 1 < k) ? j + 1 : 0;
        bool compare = j <= k - 2;
        bool prev_red = compare && ((state.red[k - 1] >> j) & 1u);

        if (!(eq && compare && !prev_red)) {
            if (nodes >= cap_) {
                capped = true;
                return true;
            }
            ++nodes;
            set_red(k, j);
            if (!(check_red_ && red_copy_using(k, j))) {
                bool eq2 = compare ? (eq && prev_red) : eq;
                if (gen(nk, nj, nk == k ? eq2 : true, limit_k, out)) return true;
            }
            unset_red(k, j);
        }

        if (nodes >= cap_) {
            capped = true;
            return true;
        }
        ++nodes;
        set_blue(k, j);
        if (!blue_completes_clique(k, j)) {
            bool eq2 = compare ? (eq && !prev_red) : eq;
            if (gen(nk, nj, nk == k ? eq2 : true, limit_k, out)) return true;
        }
        unset_blue(k, j);
        return false;
    }

    void set_red(int u, int v) {
        state.red[u] |= std::uint64_t{1} << v;
        state.red[v] |= std::uint64_t{1} << u;
    }
    void unset_red(int u, int v) {
        state.red[u] &= ~(std::uint64_t{1} << v);
        state.red[v] &= ~(std::uint64_t{1} << u);
    }
    void set_blue(int u, int v) {
        state.blue[u] |= std::uint64_t{1} << v;
        state.blue[v] |= std::uint64_t{1} << u;
    }
    void unset_blue(int u, int v) {
        state.blue[u] &= ~(std::uint64_t{1} << v);
        state.blue[v] &= ~(std::uint64_t{1} << u);
    }

    bool red_copy_using(int u, int v) {
        for (const AnchorPlan& ap : plan_.plans) {
            image_[ap.a] = u;
            image_[ap.b] = v;
            if (place(ap, 0, (std::uint64_t{1} << u) | (std::uint64_t{1} << v))) return true;
        }
        return false;
    }

    bool place(const AnchorPlan& ap, std::size_t depth, std::uint64_t used) {
        if (depth == ap.steps.size()) return true;
        const PlacementStep& st = ap.steps[depth];
        std::uint64_t cand = full_ & ~used;
        std::uint64_t nbrs = st.earlier_neighbors;
        while (nbrs) {
            int hu = std::countr_zero(nbrs);
            nbrs &= nbrs - 1;
            cand &= state.red[image_[hu]];
        }
        while (cand) {
            int gv = std::countr_zero(cand);
            cand &= cand - 1;
            image_[st.hv] = gv;
            if (place(ap, depth + 1, used | (std::uint64_t{1} << gv))) return true;
        }
        return false;
    }

    // A blue K_p exists after coloring (u,v) blue iff the common blue
    // neighborhood of u and v holds a blue K_{p-2}.
    bool blue_completes_clique(int u, int v) const {
        return clique_in(state.blue[u] & state.blue[v], p_ - 2);
    }

    bool clique_in(std::uint64_t cand, int need) const {
        if (need == 0) return true;
        while (std::popcount(cand) >= need) {
            int v = std::countr_zero(cand);
            cand &= cand - 1;
            if (clique_in(cand & state.blue[v], need - 1)) return true;
        }
        return false;
    }

    int n_, p_;
    const TargetPlan& plan_;
    std::uint64_t cap_;
    std::uint64_t full_;
    bool check_red_;
    std::array<int, 64> image_{};
};

}  // namespace detail

/// Decides whether some red/blue coloring of K_n avoids both a red H and a
/// blue K_p. WitnessFound carries a verified Good coloring; Exhausted means
/// the whole symmetry-reduced tree was traversed, proving none exists;
/// Inconclusive means the node budget ran out first.
///
/// The subtree below each assignment of the first few vertices is searched
/// independently (possibly on several workers) and the outcomes are combined
/// by replaying them in deterministic branch order, so the verdict, the
/// witness and the node count do not depend on the worker count.
inline SearchResult exists_good_coloring(int n, const Graph& h, int p,
                                         const SearchOptions& opts = {}) {
    if (n < 1 || n > 64)
        throw std::invalid_argument("exists_good_coloring: order must be in [1,64]");
    if (p < 2) throw std::invalid_argument("exists_good_coloring: p must be at least 2");

    // An edgeless H that fits sits inside the red graph of every coloring.
    if (h.edge_count() == 0 && h.n() <= n) return {SearchStatus::Exhausted, std::nullopt, 0};

    detail::TargetPlan plan = detail::TargetPlan::build(h);

    auto finish_witness = [&](const std::array<std::uint64_t, 64>& rows,
                              std::uint64_t nodes) -> SearchResult {
        Graph red(n);
        for (int v = 0; v < n; ++v)
            for (int u = v + 1; u < n; ++u)
                if ((rows[v] >> u) & 1u) red.add_edge(u, v);
        TwoColoring witness = coloring_from_red(red);
        if (!is_good(verify_coloring(witness, h, p)))
            throw std::logic_error("exists_good_coloring: search produced a bad witness");
        return {SearchStatus::WitnessFound, witness, nodes};
    };

    if (n == 1) {
        // No edges to color; the empty coloring is good (H has edges or does
        // not fit, and a blue K_p needs p >= 2 vertices).
        return finish_witness({}, 0);
    }

    int limit_k = std::min(4, n);
    detail::ColoringDFS generator(n, p, plan, opts.budget);
    std::vector<detail::SearchState> branches;
    generator.generate(limit_k, branches);
    std::uint64_t gen_nodes = generator.nodes;
    if (generator.capped) return {SearchStatus::Inconclusive, std::nullopt, opts.budget};

    std::uint64_t branch_cap = opts.budget - gen_nodes;
    std::vector<detail::BranchOutcome> outcomes(branches.size());
    int workers = std::max(1, std::min<int>(opts.workers, static_cast<int>(branches.size())));
    std::atomic<std::size_t> cursor{0};
    auto drain = [&] {
        for (;;) {
            std::size_t i = cursor.fetch_add(1);
            if (i >= branches.size()) break;
            detail::ColoringDFS search(n, p, plan, branch_cap);
            search.state = branches[i];
            search.run();
            outcomes[i] = {search.found, search.capped, search.nodes, search.witness_red};
        }
    };
    if (workers == 1) {
        drain();
    } else {
        std::vector<std::thread> pool;
        for (int w = 1; w < workers; ++w) pool.emplace_back(drain);
        drain();
        for (auto& t : pool) t.join();
    }

    // Sequential replay: charge each branch against the budget in branch
    // order; the first branch with a witness wins.
    std::uint64_t used = gen_nodes;
    for (std::size_t i = 0; i < outcomes.size(); ++i) {
        const detail::BranchOutcome& b = outcomes[i];
        if (b.capped || b.nodes > opts.budget - used)
            return {SearchStatus::Inconclusive, std::nullopt, opts.budget};
        if (b.found) return finish_witness(b.witness_red, used + b.nodes);
        used += b.nodes;
    }
    return {SearchStatus::Exhausted, std::nullopt, used};
}

struct RamseyComputation {
    RamseyValue value;
    std::uint64_t nodes = 0;
    /// Good coloring on the largest order shown colorable (value-1 vertices
    /// when the value is exact).
    std::optional<TwoColoring> witness;
};

/// Exact R(H,K_p) by upward search from the constructive lower bound: the
/// coloring from turan_coloring proves R > (|H|-1)(p-1); the first order
/// whose search exhausts is the value. If the node budget runs out the
/// result degrades to the interval proved so far.
inline RamseyComputation ramsey_number(const Graph& h, int p, const SearchOptions& opts = {}) {
    if (!is_connected(h)) throw std::invalid_argument("ramsey_number: H must be connected");
    if (h.n() < 2) throw std::invalid_argument("ramsey_number: need |H| >= 2");
    if (p < 2) throw std::invalid_argument("ramsey_number: p must be at least 2");

    long lo = turan_lower_bound(h.n(), p);
    RamseyComputation out;
    out.witness = turan_coloring(h.n(), p);
    if (!is_good(verify_coloring(*out.witness, h, p)))
        throw std::logic_error("ramsey_number: Turan coloring failed verification");

    std::uint64_t remaining = opts.budget;
    for (long n = lo; n <= 64; ++n) {
        SearchResult res = exists_good_coloring(static_cast<int>(n), h, p,
                                                {remaining, opts.workers});
        out.nodes += res.nodes;
        remaining = remaining > res.nodes ? remaining - res.nodes : 0;
        switch (res.status) {
            case SearchStatus::Exhausted:
                out.value = RamseyValue::exact(n, Provenance::SearchProved);
                return out;
            case SearchStatus::WitnessFound:
                out.witness = res.witness;
                break;
            case SearchStatus::Inconclusive:
                out.value = RamseyValue::at_least(n, Provenance::Mixed);
                return out;
        }
    }
    out.value = RamseyValue::at_least(65, Provenance::Mixed);
    return out;
}

}  // namespace ramsey
