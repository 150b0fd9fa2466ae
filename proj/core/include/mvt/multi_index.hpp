#pragma once

#include <algorithm>
#include <compare>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "mvt/rational.hpp"

namespace mvt {

inline bool is_stable(int g, int n) { return g >= 0 && n >= 0 && 2 * g - 2 + n > 0; }

/// Complex dimension of the moduli space of type (g,n).
inline int dimension(int g, int n) { return 3 * g - 3 + n; }

/// Key (g, n, d_1 >= d_2 >= ... >= d_n) for the symmetric coefficient
/// families F_{g,n}[d]. Exponents are kept sorted descending so that two
/// indices with the same multiset compare equal.
class MultiIndex {
public:
    MultiIndex(int g, int n, std::vector<int> d) : g_(g), n_(n), d_(std::move(d)) {
        if (static_cast<int>(d_.size()) != n_) throw std::invalid_argument("arity mismatch");
        for (int x : d_)
            if (x < 0) throw std::invalid_argument("negative exponent");
        if (!is_stable(g_, n_)) throw std::invalid_argument("unstable type");
        std::sort(d_.begin(), d_.end(), std::greater<int>());
    }

    int g() const { return g_; }
    int n() const { return n_; }
    const std::vector<int>& d() const { return d_; }
    int total_degree() const { return std::accumulate(d_.begin(), d_.end(), 0); }
    int dim() const { return dimension(g_, n_); }

    auto operator<=>(const MultiIndex&) const = default;

private:
    int g_;
    int n_;
    std::vector<int> d_;
};

inline MultiIndex canonical_index(int g, int n, std::vector<int> d) {
    return MultiIndex(g, n, std::move(d));
}

}  // namespace mvt
