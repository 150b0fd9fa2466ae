#include "mvt/even_polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "mvt/combinatorics.hpp"

namespace mvt {

void EvenPolynomial::set(std::vector<int> d, const PiPoly& value) {
    std::sort(d.begin(), d.end(), std::greater<int>());
    if (value.is_zero())
        coeffs_.erase(d);
    else
        coeffs_[std::move(d)] = value;
}

const PiPoly& EvenPolynomial::coeff(std::vector<int> d) const {
    static const PiPoly zero;
    std::sort(d.begin(), d.end(), std::greater<int>());
    auto it = coeffs_.find(d);
    return it == coeffs_.end() ? zero : it->second;
}

std::vector<std::vector<int>> distinct_permutations(std::vector<int> sorted_desc) {
    std::vector<std::vector<int>> out;
    std::sort(sorted_desc.begin(), sorted_desc.end());
    do {
        out.push_back(sorted_desc);
    } while (std::next_permutation(sorted_desc.begin(), sorted_desc.end()));
    return out;
}

PiPoly EvenPolynomial::evaluate(const std::vector<PiPoly>& lengths) const {
    if (static_cast<int>(lengths.size()) != n_) throw std::invalid_argument("arity mismatch");
    // Pre-compute even powers of each length.
    int max_d = 0;
    for (const auto& [d, v] : coeffs_)
        if (!d.empty()) max_d = std::max(max_d, d.front());
    std::vector<std::vector<PiPoly>> pow2(lengths.size());
    for (size_t i = 0; i < lengths.size(); ++i) {
        pow2[i].resize(static_cast<size_t>(max_d) + 1);
        pow2[i][0] = PiPoly(1);
        PiPoly sq = lengths[i] * lengths[i];
        for (int k = 1; k <= max_d; ++k) pow2[i][static_cast<size_t>(k)] = pow2[i][static_cast<size_t>(k - 1)] * sq;
    }
    PiPoly acc;
    for (const auto& [d, v] : coeffs_) {
        for (const auto& perm : distinct_permutations(d)) {
            PiPoly mono = v;
            for (size_t i = 0; i < perm.size(); ++i)
                mono = mono * pow2[i][static_cast<size_t>(perm[i])] / Rational(factorial(2 * perm[i] + 1));
            acc += mono;
        }
    }
    return acc;
}

PiPoly EvenPolynomial::evaluate(const std::vector<Rational>& lengths) const {
    std::vector<PiPoly> ls;
    ls.reserve(lengths.size());
    for (const auto& r : lengths) ls.emplace_back(r);
    return evaluate(ls);
}

EvenPolynomial EvenPolynomial::coefficient_of_half_Lsquared() const {
    if (n_ < 1) throw std::invalid_argument("polynomial has no variable to extract");
    EvenPolynomial out(g_, n_ - 1);
    for (const auto& [d, v] : coeffs_) {
        // Count tuples where the last variable carries exponent 1. With the
        // sorted key, each stored class contributes once per slot holding a 1.
        auto it = std::find(d.begin(), d.end(), 1);
        if (it == d.end()) continue;
        std::vector<int> rest = d;
        rest.erase(rest.begin() + (it - d.begin()));
        out.set(std::move(rest), v / Rational(3));
    }
    return out;
}

std::string EvenPolynomial::str() const {
    // List by ascending total degree, then lexicographically.
    std::vector<std::pair<std::vector<int>, PiPoly>> items(coeffs_.begin(), coeffs_.end());
    std::sort(items.begin(), items.end(), [](const auto& a, const auto& b) {
        int ta = 0, tb = 0;
        for (int x : a.first) ta += x;
        for (int x : b.first) tb += x;
        if (ta != tb) return ta < tb;
        return a.first < b.first;
    });
    std::ostringstream out;
    bool first = true;
    for (const auto& [d, v] : items) {
        if (!first) out << " ; ";
        first = false;
        out << "d=[";
        for (size_t i = 0; i < d.size(); ++i) out << (i ? "," : "") << d[i];
        out << "]: " << v.str();
    }
    if (first) out << "0";
    return out.str();
}

}  // namespace mvt
