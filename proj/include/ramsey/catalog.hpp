#pragma once

#include <algorithm>
#include <fstream>
#include <limits>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "ramsey/bounds.hpp"
#include "ramsey/graph.hpp"
#include "ramsey/graph6.hpp"
#include "ramsey/named.hpp"
#include "ramsey/ramsey_value.hpp"

namespace ramsey {

class CatalogError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace detail {

inline bool is_complete_graph_id(const std::string& id) {
    if (id.size() < 2 || id[0] != 'K') return false;
    for (std::size_t i = 1; i < id.size(); ++i)
        if (id[i] < '0' || id[i] > '9') return false;
    return true;
}

inline long complete_graph_param(const std::string& id) {
    return std::stol(id.substr(1));
}

/// Key normalization: complete-graph arguments sort to the back by parameter;
/// other identifiers keep their order in front.
inline std::vector<std::string> normalize_key(std::vector<std::string> key) {
    std::stable_sort(key.begin(), key.end(), [](const std::string& a, const std::string& b) {
        bool ka = is_complete_graph_id(a), kb = is_complete_graph_id(b);
        if (ka != kb) return !ka;
        if (ka && kb) return complete_graph_param(a) < complete_graph_param(b);
        return false;
    });
    return key;
}

inline std::string key_to_string(const std::vector<std::string>& key) {
    std::string s = "(";
    for (std::size_t i = 0; i < key.size(); ++i) {
        if (i) s += ",";
        s += key[i];
    }
    return s + ")";
}

/// Resolve a graph identifier appearing in a catalog key: either a named
/// graph or an explicit "g6:<graph6>" literal.
inline std::optional<Graph> resolve_graph_id(const std::string& id) {
    if (id.rfind("g6:", 0) == 0) return parse_graph6(std::string_view(id).substr(3));
    try {
        return named_graph(id);
    } catch (const std::invalid_argument&) {
        return std::nullopt;
    }
}

}  // namespace detail

struct CatalogEntry {
    RamseyValue value;
    std::string source;        // paper-table | classical | user
    bool data_quality = false; // stored verbatim, excluded from consistency checks
};

/// Immutable table of known Ramsey numbers keyed by normalized graph tuples.
class Catalog {
public:
    void insert(std::vector<std::string> key, CatalogEntry entry) {
        entries_[detail::normalize_key(std::move(key))] = std::move(entry);
    }

    std::optional<RamseyValue> lookup(std::vector<std::string> key) const {
        auto it = entries_.find(detail::normalize_key(std::move(key)));
        if (it == entries_.end()) return std::nullopt;
        RamseyValue v = it->second.value;
        v.provenance = Provenance::Catalog;
        return v;
    }

    const CatalogEntry* entry(std::vector<std::string> key) const {
        auto it = entries_.find(detail::normalize_key(std::move(key)));
        return it == entries_.end() ? nullptr : &it->second;
    }

    std::size_t size() const { return entries_.size(); }

    const std::map<std::vector<std::string>, CatalogEntry>& entries() const { return entries_; }

private:
    std::map<std::vector<std::string>, CatalogEntry> entries_;
};

namespace detail {

inline RamseyValue value_from_json(const nlohmann::json& v, const std::string& where) {
    if (v.is_number_integer()) return RamseyValue::exact(v.get<long>(), Provenance::Catalog);
    if (v.is_object()) {
        if (v.contains("ge")) return RamseyValue::at_least(v["ge"].get<long>(), Provenance::Catalog);
        if (v.contains("lo") && v.contains("hi")) {
            long lo = v["lo"].get<long>(), hi = v["hi"].get<long>();
            if (lo > hi) throw CatalogError("catalog: lo > hi in entry " + where);
            return RamseyValue::interval(lo, hi, Provenance::Catalog);
        }
    }
    throw CatalogError("catalog: malformed value in entry " + where);
}

inline nlohmann::json value_to_json(const RamseyValue& v) {
    if (v.is_exact()) return v.lo;
    if (v.hi) return nlohmann::json{{"lo", v.lo}, {"hi", *v.hi}};
    return nlohmann::json{{"ge", v.lo}};
}

}  // namespace detail

/// Parses and validates a catalog document. Unflagged (H, K_p) entries whose
/// upper end falls below the Turan lower bound for connected H are rejected
/// with the offending key named.
inline Catalog parse_catalog(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw CatalogError(std::string("catalog: invalid JSON: ") + e.what());
    }
    if (!doc.is_array()) throw CatalogError("catalog: top-level document must be an array");

    Catalog cat;
    for (const auto& item : doc) {
        if (!item.is_object() || !item.contains("graphs") || !item.contains("value"))
            throw CatalogError("catalog: entries need 'graphs' and 'value' fields");
        std::vector<std::string> key;
        for (const auto& g : item["graphs"]) key.push_back(g.get<std::string>());
        if (key.size() < 2) throw CatalogError("catalog: key needs at least two graphs");
        std::string keystr = detail::key_to_string(key);

        CatalogEntry entry;
        entry.value = detail::value_from_json(item["value"], keystr);
        entry.source = item.value("source", std::string("user"));
        entry.data_quality = item.value("flag", std::string()) == "data-quality";

        if (!entry.data_quality && key.size() == 2 &&
            detail::is_complete_graph_id(detail::normalize_key(key)[1])) {
            auto norm = detail::normalize_key(key);
            if (auto h = detail::resolve_graph_id(norm[0]); h && is_connected(*h)) {
                long p = detail::complete_graph_param(norm[1]);
                if (h->n() >= 2 && p >= 2) {
                    long bound = turan_lower_bound(h->n(), p);
                    long hi = entry.value.hi.value_or(std::numeric_limits<long>::max());
                    if (hi < bound)
                        throw CatalogError("catalog: entry " + keystr + " contradicts the Turan bound " +
                                           std::to_string(bound));
                }
            }
        }
        cat.insert(std::move(key), std::move(entry));
    }
    return cat;
}

inline Catalog load_catalog(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw CatalogError("catalog: cannot open file " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_catalog(ss.str());
}

inline std::string serialize_catalog(const Catalog& cat) {
    nlohmann::json doc = nlohmann::json::array();
    for (const auto& [key, entry] : cat.entries()) {
        nlohmann::json item;
        item["graphs"] = key;
        item["value"] = detail::value_to_json(entry.value);
        item["source"] = entry.source;
        if (entry.data_quality) item["flag"] = "data-quality";
        doc.push_back(item);
    }
    return doc.dump(2) + "\n";
}

}  // namespace ramsey
