#pragma once

#include <optional>
#include <stdexcept>
#include <string>

namespace ramsey {

enum class Provenance { SearchProved, Catalog, Formula, Mixed };

inline const char* to_string(Provenance p) {
    switch (p) {
        case Provenance::SearchProved: return "search-proved";
        case Provenance::Catalog: return "catalog";
        case Provenance::Formula: return "formula";
        case Provenance::Mixed: return "mixed";
    }
    return "?";
}

/// An exact Ramsey number or a closed interval [lo,hi] of candidates; hi may
/// be absent when only a lower bound is known.
struct RamseyValue {
    long lo = 0;
    std::optional<long> hi;
    Provenance provenance = Provenance::Formula;

    static RamseyValue exact(long v, Provenance p) { return {v, v, p}; }

    static RamseyValue interval(long lo, long hi, Provenance p) {
        if (lo > hi) throw std::invalid_argument("RamseyValue: lo > hi");
        return {lo, hi, p};
    }

    static RamseyValue at_least(long lo, Provenance p) { return {lo, std::nullopt, p}; }

    bool is_exact() const { return hi.has_value() && *hi == lo; }
};

/// Value equality; provenance is metadata and not compared.
inline bool operator==(const RamseyValue& a, const RamseyValue& b) {
    return a.lo == b.lo && a.hi == b.hi;
}

inline std::string to_string(const RamseyValue& v) {
    if (v.is_exact()) return std::to_string(v.lo);
    if (v.hi) return "[" + std::to_string(v.lo) + "," + std::to_string(*v.hi) + "]";
    return ">=" + std::to_string(v.lo);
}

namespace detail {

inline Provenance combine(Provenance a, Provenance b) {
    return a == b ? a : Provenance::Mixed;
}

}  // namespace detail

}  // namespace ramsey
