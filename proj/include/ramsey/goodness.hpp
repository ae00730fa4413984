#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ramsey/bounds.hpp"
#include "ramsey/catalog.hpp"
#include "ramsey/named.hpp"
#include "ramsey/ramsey_value.hpp"

namespace ramsey {

/// A graph given as a catalog-resolvable base plus a chain of pendant-edge
/// additions, the shape the pendant recurrence understands.
struct PendantChain {
    std::string base;  // named graph or g6: literal
    int pendants = 0;
    std::string name;  // display identifier

    int order() const {
        auto g = detail::resolve_graph_id(base);
        if (!g) throw std::invalid_argument("PendantChain: unresolvable base '" + base + "'");
        return g->n() + pendants;
    }
};

/// Accepts the named chains H1..H7, a bare base graph id, or "<base>+<k>".
inline PendantChain parse_chain(const std::string& spec) {
    static const std::map<std::string, PendantChain> named = {
        {"H1", {"K3", 1, "H1"}},   {"H2", {"K3", 2, "H2"}},   {"H3", {"C4", 1, "H3"}},
        {"H4", {"K4", 1, "H4"}},   {"H5", {"K4", 2, "H5"}},   {"H6", {"K4-e", 1, "H6"}},
        {"H7", {"K4-e", 2, "H7"}},
    };
    if (auto it = named.find(spec); it != named.end()) return it->second;
    auto plus = spec.rfind('+');
    if (plus != std::string::npos) {
        PendantChain chain{spec.substr(0, plus), std::stoi(spec.substr(plus + 1)), spec};
        if (chain.pendants < 0) throw std::invalid_argument("parse_chain: negative pendant count");
        return chain;
    }
    return PendantChain{spec, 0, spec};
}

/// Identifier the catalog uses for a chain prefix: the named H-graphs for the
/// known chains, otherwise "<base>+<k>".
inline std::string chain_id(const PendantChain& chain, int pendants) {
    if (pendants == 0) return chain.base;
    static const std::map<std::pair<std::string, int>, std::string> known = {
        {{"K3", 1}, "H1"},   {{"K3", 2}, "H2"},   {{"C4", 1}, "H3"},  {{"K4", 1}, "H4"},
        {{"K4", 2}, "H5"},   {{"K4-e", 1}, "H6"}, {{"K4-e", 2}, "H7"},
    };
    if (auto it = known.find({chain.base, pendants}); it != known.end()) return it->second;
    return chain.base + "+" + std::to_string(pendants);
}

struct GoodnessCell {
    int p = 0;
    RamseyValue computed;               // recurrence chain value (lookup at p = 3)
    std::optional<RamseyValue> printed; // verbatim catalog entry, shown when present
    bool flagged = false;               // catalog data-quality flag on the printed entry
    PGoodness verdict = PGoodness::Unknown;
    std::optional<long> would_be;       // Turan value, reported when not Good

    const RamseyValue& display() const { return printed ? *printed : computed; }
};

/// Per-p values of R(H,K_p) for a pendant chain together with the goodness of
/// H: the largest p for which the value meets the Turan bound exactly. When
/// no failure is certified within p_max the goodness is a ">= g" lower bound.
struct GoodnessReport {
    std::string graph;
    int order = 0;
    std::vector<GoodnessCell> cells;  // p = 3 .. p_max
    int goodness = 2;                 // every connected graph is 2-good
    bool goodness_exact = false;
    std::optional<int> first_failure_p;
    std::optional<long> first_failure_would_be;
};

namespace detail {

/// R(chain-prefix, K_p) for p = 3..p_max via the pendant recurrence, seeded
/// with the catalog's base row R(., K_3). A chain with no pendants reads its
/// whole column from the catalog.
inline std::vector<RamseyValue> chain_column(const PendantChain& chain, int pendants,
                                             const Catalog& cat, int p_max) {
    std::string id = chain_id(chain, pendants);
    std::vector<RamseyValue> column;  // index p-3
    if (pendants == 0) {
        for (int p = 3; p <= p_max; ++p) {
            auto v = cat.lookup({id, "K" + std::to_string(p)});
            if (!v)
                throw CatalogError("goodness: missing catalog entry (" + id + ",K" +
                                   std::to_string(p) + ")");
            column.push_back(*v);
        }
        return column;
    }
    std::vector<RamseyValue> parent = chain_column(chain, pendants - 1, cat, p_max);
    auto base_g = resolve_graph_id(chain.base);
    int n = base_g->n() + pendants;  // order of this prefix
    auto r3 = cat.lookup({id, "K3"});
    if (!r3) throw CatalogError("goodness: missing catalog entry (" + id + ",K3)");
    column.push_back(*r3);
    for (int p = 4; p <= p_max; ++p)
        column.push_back(pendant_recurrence(parent[p - 3], column[p - 4], n));
    return column;
}

}  // namespace detail

inline GoodnessReport goodness(const PendantChain& chain, const Catalog& cat, int p_max) {
    if (p_max < 3) throw std::invalid_argument("goodness: need p_max >= 3");
    auto base_g = detail::resolve_graph_id(chain.base);
    if (!base_g) throw std::invalid_argument("goodness: unresolvable base '" + chain.base + "'");

    GoodnessReport report;
    report.graph = chain.name.empty() ? chain_id(chain, chain.pendants) : chain.name;
    report.order = base_g->n() + chain.pendants;

    std::vector<RamseyValue> column = detail::chain_column(chain, chain.pendants, cat, p_max);
    std::string id = chain_id(chain, chain.pendants);

    bool scanning = true;
    for (int p = 3; p <= p_max; ++p) {
        GoodnessCell cell;
        cell.p = p;
        cell.computed = column[p - 3];
        if (const CatalogEntry* e = cat.entry({id, "K" + std::to_string(p)})) {
            cell.printed = e->value;
            cell.printed->provenance = Provenance::Catalog;
            cell.flagged = e->data_quality;
        }
        cell.verdict = p_good(report.order, p, cell.computed);
        if (cell.verdict != PGoodness::Good) cell.would_be = turan_lower_bound(report.order, p);

        if (scanning) {
            switch (cell.verdict) {
                case PGoodness::Good:
                    report.goodness = p;
                    if (p == p_max) report.goodness_exact = false;  // ">= p_max"
                    break;
                case PGoodness::NotGood:
                    report.goodness_exact = true;
                    report.first_failure_p = p;
                    report.first_failure_would_be = cell.would_be;
                    scanning = false;
                    break;
                case PGoodness::Unknown:
                    report.goodness_exact = false;  // interval blocks certification
                    scanning = false;
                    break;
            }
        }
        report.cells.push_back(std::move(cell));
    }
    return report;
}

inline GoodnessReport goodness(const std::string& spec, const Catalog& cat, int p_max) {
    return goodness(parse_chain(spec), cat, p_max);
}

}  // namespace ramsey
