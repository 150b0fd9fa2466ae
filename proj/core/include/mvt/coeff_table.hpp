#pragma once

#include <map>
#include <set>
#include <utility>

#include "mvt/multi_index.hpp"
#include "mvt/pi_poly.hpp"

namespace mvt {

enum class Theory { Kontsevich, MasurVeech };

/// Memo table for one theory's coefficient family F_{g,n}[d].
///
/// Invariants maintained by the engines that fill it:
///  - Kontsevich entries are rational (grade 0) and vanish off-dimension;
///  - Masur-Veech entries with total degree D sit on the single grade
///    3g - 3 + n - D.
/// A (g,n) level is flagged complete once every index with total degree up to
/// the dimension has been computed; serialization only writes complete
/// levels so a reloaded table never contains speculative values.
class CoeffTable {
public:
    explicit CoeffTable(Theory t) : theory_(t) {}

    Theory theory() const { return theory_; }

    const PiPoly* find(const MultiIndex& idx) const {
        auto it = entries_.find(idx);
        return it == entries_.end() ? nullptr : &it->second;
    }

    void store(const MultiIndex& idx, PiPoly value) { entries_.emplace(idx, std::move(value)); }

    const std::map<MultiIndex, PiPoly>& entries() const { return entries_; }

    void mark_complete(int g, int n) { complete_.insert({g, n}); }
    bool is_complete(int g, int n) const { return complete_.count({g, n}) > 0; }
    const std::set<std::pair<int, int>>& complete_levels() const { return complete_; }

    size_t size() const { return entries_.size(); }

private:
    Theory theory_;
    std::map<MultiIndex, PiPoly> entries_;
    std::set<std::pair<int, int>> complete_;
};

}  // namespace mvt
