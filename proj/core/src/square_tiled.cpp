#include "mvt/square_tiled.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "mvt/combinatorics.hpp"
#include "mvt/stable_graph.hpp"

namespace mvt {

QSeries QSeries::operator+(const QSeries& o) const {
    QSeries r(std::max(order(), o.order()));
    for (int k = 0; k <= order(); ++k) r.coeff(k) += coeff(k);
    for (int k = 0; k <= o.order(); ++k) r.coeff(k) += o.coeff(k);
    return r;
}

QSeries QSeries::operator*(const QSeries& o) const {
    QSeries r(std::min(order(), o.order()));  // truncation order of the product
    for (int i = 0; i <= order(); ++i) {
        if (coeff(i).is_zero()) continue;
        for (int j = 0; i + j <= r.order() && j <= o.order(); ++j)
            r.coeff(i + j) += coeff(i) * o.coeff(j);
    }
    return r;
}

QSeries QSeries::operator*(const Rational& x) const {
    QSeries r(order());
    for (int k = 0; k <= order(); ++k) r.coeff(k) = coeff(k) * x;
    return r;
}

std::string QSeries::str() const {
    std::ostringstream out;
    bool first = true;
    for (int k = 0; k <= order(); ++k) {
        if (coeff(k).is_zero()) continue;
        if (!first) out << " + ";
        first = false;
        out << coeff(k).str();
        if (k == 1) out << "*q";
        if (k > 1) out << "*q^" << k;
    }
    if (first) out << "0";
    return out.str();
}

namespace {

long plus_part(long x) { return x > 0 ? x : 0; }

/// l * B^K(L1, L2, l), times 2*L1 (kept integral; divide once at the end).
long b_kernel_times(long L1, long L2, long l) {
    return l * (plus_part(L1 - L2 - l) - plus_part(L2 - L1 - l) + plus_part(L1 + L2 - l));
}

}  // namespace

Rational NorburyCounter::count(int g, int n, std::vector<long> lengths) {
    if (static_cast<int>(lengths.size()) != n) throw std::invalid_argument("arity mismatch");
    if (!is_stable(g, n)) throw std::invalid_argument("unstable type");
    long total = 0;
    for (long L : lengths) {
        if (L <= 0) throw std::invalid_argument("invalid boundary length");
        total += L;
    }
    if (total % 2 != 0) return Rational();
    std::sort(lengths.begin(), lengths.end(), std::greater<long>());
    auto key = std::make_tuple(g, n, lengths);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    Rational v = compute(g, n, lengths);
    memo_.emplace(std::move(key), v);
    return v;
}

Rational NorburyCounter::compute(int g, int n, const std::vector<long>& L) {
    if (g == 0 && n == 3) return Rational(1);
    if (g == 1 && n == 1) return Rational(L[0] * L[0] - 4, 48);

    long L1 = L[0];
    std::vector<long> rest(L.begin() + 1, L.end());
    Rational acc;

    // B-kernel: merge L1 with one other boundary.
    for (size_t m = 0; m < rest.size(); ++m) {
        std::vector<long> remaining;
        remaining.reserve(rest.size());
        for (size_t i = 0; i < rest.size(); ++i)
            if (i != m) remaining.push_back(rest[i]);
        if (!is_stable(g, n - 1)) continue;
        for (long l = 1; l < L1 + rest[m]; ++l) {
            if ((L1 + rest[m] + l) % 2 != 0) continue;
            long w = b_kernel_times(L1, rest[m], l);
            if (w == 0) continue;
            std::vector<long> child = remaining;
            child.push_back(l);
            acc += count(g, n - 1, std::move(child)) * Rational(w, 2 * L1);
        }
    }

    // C-kernel: split off a pair of pants containing only L1.
    size_t nsub = size_t{1} << rest.size();
    for (long l = 1; l < L1; ++l) {
        for (long lp = 1; l + lp < L1; ++lp) {
            if ((L1 + l + lp) % 2 != 0) continue;
            Rational w(l * lp * (L1 - l - lp), L1);  // l lp C^K(L1,l,lp)
            Rational bracket;
            if (g >= 1 && is_stable(g - 1, n + 1)) {
                std::vector<long> child = rest;
                child.push_back(l);
                child.push_back(lp);
                bracket += count(g - 1, n + 1, std::move(child));
            }
            for (int h = 0; h <= g; ++h) {
                for (size_t mask = 0; mask < nsub; ++mask) {
                    std::vector<long> left{l}, right{lp};
                    for (size_t i = 0; i < rest.size(); ++i)
                        ((mask >> i) & 1 ? left : right).push_back(rest[i]);
                    int n1 = static_cast<int>(left.size()), n2 = static_cast<int>(right.size());
                    if (!is_stable(h, n1) || !is_stable(g - h, n2)) continue;
                    Rational f1 = count(h, n1, std::move(left));
                    if (f1.is_zero()) continue;
                    bracket += f1 * count(g - h, n2, std::move(right));
                }
            }
            if (!bracket.is_zero()) acc += w * bracket / Rational(2);
        }
    }
    return acc;
}

QSeries sts_series(NorburyCounter& counter, int g, int n, const std::vector<long>& lengths, int order) {
    if (order < 0) throw std::invalid_argument("negative truncation order");
    for (long L : lengths)
        if (L <= 0) throw std::invalid_argument("invalid boundary length");
    QSeries out(order);
    long total = std::accumulate(lengths.begin(), lengths.end(), 0L);
    if (total % 2 != 0) return out;

    for (const auto& sg : enumerate_stable_graphs(g, n)) {
        int ne = sg.num_edges();
        std::vector<long> edge_len(static_cast<size_t>(ne), 1);
        std::function<void(int)> rec = [&](int e) {
            if (e == ne) {
                // vertex weights at these edge lengths
                Rational vw(1);
                for (int v = 0; v < sg.num_vertices() && !vw.is_zero(); ++v) {
                    std::vector<long> boundary;
                    for (size_t i = 0; i < lengths.size(); ++i)
                        if (sg.leaf_vertex[i] == v) boundary.push_back(lengths[i]);
                    for (int ee = 0; ee < ne; ++ee) {
                        if (sg.edges[static_cast<size_t>(ee)].first == v) boundary.push_back(edge_len[static_cast<size_t>(ee)]);
                        if (sg.edges[static_cast<size_t>(ee)].second == v) boundary.push_back(edge_len[static_cast<size_t>(ee)]);
                    }
                    vw *= counter.count(sg.genus[static_cast<size_t>(v)], static_cast<int>(boundary.size()), boundary);
                }
                if (vw.is_zero()) return;
                // product of edge factors l q^l/(1-q^l) = sum_k l q^(k l)
                QSeries prod(order);
                prod.coeff(0) = Rational(1);
                for (int ee = 0; ee < ne; ++ee) {
                    long l = edge_len[static_cast<size_t>(ee)];
                    QSeries f(order);
                    for (long kl = l; kl <= order; kl += l) f.coeff(static_cast<int>(kl)) = Rational(l);
                    prod = prod * f;
                }
                out += prod * (vw / Rational(Integer(sg.aut)));
                return;
            }
            for (long l = 1; l <= order; ++l) {
                edge_len[static_cast<size_t>(e)] = l;
                rec(e + 1);
            }
        };
        rec(0);
    }
    return out;
}

AsymptoticDiagnostic norbury_asymptotic_check(Session& s, NorburyCounter& counter, int g, int n,
                                              const std::vector<long>& lengths, long T) {
    if (T <= 0 || T % 2 != 0) throw std::invalid_argument("T must be a positive even integer");
    std::vector<long> scaled;
    scaled.reserve(lengths.size());
    for (long L : lengths) scaled.push_back(T * L);

    Rational p = counter.count(g, n, scaled);
    Integer tpow;
    mpz_ui_pow_ui(tpow.get_mpz_t(), static_cast<unsigned long>(T),
                  static_cast<unsigned long>(6 * g - 6 + 2 * n));
    Rational lhs = p / Rational(tpow);

    std::vector<Rational> Lrat;
    for (long L : lengths) Lrat.emplace_back(L);
    Rational target = s.kontsevich().polynomial(g, n).evaluate(Lrat).coeff(0) /
                      Rational(pow2(std::max(0, 2 * g - 3 + n)));

    AsymptoticDiagnostic diag;
    diag.exact_difference = abs(lhs - target);
    diag.scaled_value = lhs.to_double();
    diag.target = target.to_double();
    diag.deviation = diag.exact_difference.to_double();
    return diag;
}

namespace {

/// sum over l >= 1 of f(l) * l q^l/(1-q^l) for a slowly growing f, float.
double edge_sum(double q, const std::function<double(long)>& f, long hard_cap) {
    double acc = 0;
    int tiny_streak = 0;
    for (long l = 1; l <= hard_cap; ++l) {
        double ql = std::pow(q, static_cast<double>(l));
        double term = f(l) * static_cast<double>(l) * ql / (1.0 - ql);
        acc += term;
        if (std::abs(term) < 1e-13 * (1.0 + std::abs(acc))) {
            if (++tiny_streak > 40) break;
        } else {
            tiny_streak = 0;
        }
    }
    return acc;
}

}  // namespace

AsymptoticDiagnostic mv_scaling_check(Session& s, NorburyCounter& counter, int g, int n,
                                      const std::vector<long>& lengths, long T) {
    if (T <= 0 || T % 2 != 0) throw std::invalid_argument("T must be a positive even integer");
    double q = std::exp(-1.0 / static_cast<double>(T));
    long cap = 400 * T;

    std::vector<long> scaled;
    for (long L : lengths) scaled.push_back(T * L);

    double value = 0;
    for (const auto& sg : enumerate_stable_graphs(g, n)) {
        int ne = sg.num_edges();
        std::vector<long> edge_len(static_cast<size_t>(ne), 0);
        // recursively evaluate nested edge sums
        std::function<double(int)> rec = [&](int e) -> double {
            if (e == ne) {
                Rational vw(1);
                for (int v = 0; v < sg.num_vertices() && !vw.is_zero(); ++v) {
                    std::vector<long> boundary;
                    for (size_t i = 0; i < scaled.size(); ++i)
                        if (sg.leaf_vertex[i] == v) boundary.push_back(scaled[i]);
                    for (int ee = 0; ee < ne; ++ee) {
                        if (sg.edges[static_cast<size_t>(ee)].first == v) boundary.push_back(edge_len[static_cast<size_t>(ee)]);
                        if (sg.edges[static_cast<size_t>(ee)].second == v) boundary.push_back(edge_len[static_cast<size_t>(ee)]);
                    }
                    vw *= counter.count(sg.genus[static_cast<size_t>(v)], static_cast<int>(boundary.size()), boundary);
                }
                return vw.to_double();
            }
            return edge_sum(q, [&](long l) {
                edge_len[static_cast<size_t>(e)] = l;
                return rec(e + 1);
            }, cap);
        };
        value += rec(0) / static_cast<double>(sg.aut);
    }
    value /= std::pow(static_cast<double>(T), 6 * g - 6 + 2 * n);

    std::vector<Rational> Lrat;
    for (long L : lengths) Lrat.emplace_back(L);
    double target = s.mv_polynomial(g, n).evaluate(Lrat).to_double(M_PI) /
                    std::pow(2.0, 2 * g - 3 + n);

    AsymptoticDiagnostic diag;
    diag.scaled_value = value;
    diag.target = target;
    diag.deviation = std::abs(value - target);
    return diag;
}


namespace {

void monomials_up_to(int nvars, int degree, std::vector<int>& cur,
                     std::vector<std::vector<int>>& out) {
    if (static_cast<int>(cur.size()) == nvars) {
        out.push_back(cur);
        return;
    }
    for (int d = 0; d <= degree; ++d) {
        cur.push_back(d);
        monomials_up_to(nvars, degree - d, cur, out);
        cur.pop_back();
    }
}

Rational eval_monomial(const std::vector<int>& expo, const std::vector<long>& L) {
    Rational r(1);
    for (size_t i = 0; i < expo.size(); ++i)
        for (int k = 0; k < expo[i]; ++k) r *= Rational(L[i] * L[i]);
    return r;
}

}  // namespace

QuasiPolynomial QuasiPolynomial::fit(NorburyCounter& counter, int g, int n) {
    if (!is_stable(g, n) || n < 1) throw std::invalid_argument("unstable type");
    QuasiPolynomial qp;
    qp.g_ = g;
    qp.n_ = n;
    int degree = dimension(g, n);

    std::vector<std::vector<int>> basis;
    std::vector<int> cur;
    monomials_up_to(n, degree, cur, basis);

    // every parity pattern with an even number of odd entries
    for (size_t pattern = 0; pattern < (size_t{1} << n); ++pattern) {
        if (__builtin_popcountll(pattern) % 2 != 0) continue;
        std::vector<int> parity(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) parity[static_cast<size_t>(i)] = (pattern >> i) & 1;

        // sample grid L_i = parity_i + 2 t_i, t_i = 1..degree+1
        std::vector<std::vector<long>> samples;
        std::vector<long> point(static_cast<size_t>(n));
        std::function<void(int)> grid = [&](int i) {
            if (i == n) {
                samples.push_back(point);
                return;
            }
            for (long t = 1; t <= degree + 1; ++t) {
                point[static_cast<size_t>(i)] = parity[static_cast<size_t>(i)] + 2 * t;
                grid(i + 1);
            }
        };
        grid(0);

        // exact least-squares-free solve: row-reduce [A | y]
        size_t cols = basis.size();
        std::vector<std::vector<Rational>> m;
        for (const auto& L : samples) {
            std::vector<Rational> row;
            row.reserve(cols + 1);
            for (const auto& e : basis) row.push_back(eval_monomial(e, L));
            row.push_back(counter.count(g, n, L));
            m.push_back(std::move(row));
        }
        size_t rank = 0;
        for (size_t col = 0; col < cols && rank < m.size(); ++col) {
            size_t pivot = rank;
            while (pivot < m.size() && m[pivot][col].is_zero()) ++pivot;
            if (pivot == m.size()) continue;
            std::swap(m[rank], m[pivot]);
            Rational inv = Rational(1) / m[rank][col];
            for (size_t j = col; j <= cols; ++j) m[rank][j] *= inv;
            for (size_t r2 = 0; r2 < m.size(); ++r2) {
                if (r2 == rank || m[r2][col].is_zero()) continue;
                Rational f = m[r2][col];
                for (size_t j = col; j <= cols; ++j) m[r2][j] -= f * m[rank][j];
            }
            ++rank;
        }
        if (rank != cols) throw std::runtime_error("quasi-polynomial fit is underdetermined");
        for (size_t r2 = rank; r2 < m.size(); ++r2)
            if (!m[r2][cols].is_zero()) throw std::runtime_error("lattice counts are not polynomial on the class");

        Poly poly;
        size_t row_i = 0;
        for (size_t col = 0; col < cols; ++col) {
            // after full reduction row row_i has its pivot at col in order
            if (!m[row_i][cols].is_zero()) poly[basis[col]] = m[row_i][cols];
            ++row_i;
        }
        qp.classes_[parity] = std::move(poly);
    }
    return qp;
}

Rational QuasiPolynomial::evaluate(const std::vector<long>& lengths) const {
    if (static_cast<int>(lengths.size()) != n_) throw std::invalid_argument("arity mismatch");
    long total = 0;
    std::vector<int> parity(lengths.size());
    for (size_t i = 0; i < lengths.size(); ++i) {
        total += lengths[i];
        parity[i] = static_cast<int>(lengths[i] % 2);
    }
    if (total % 2 != 0) return Rational();
    Rational acc;
    for (const auto& [e, c] : classes_.at(parity)) acc += c * eval_monomial(e, lengths);
    return acc;
}

const QuasiPolynomial::Poly& QuasiPolynomial::class_polynomial(const std::vector<int>& parity) const {
    return classes_.at(parity);
}

QuasiPolynomial::Poly QuasiPolynomial::top_degree_part(const std::vector<int>& parity) const {
    Poly out;
    int dim = dimension(g_, n_);
    for (const auto& [e, c] : classes_.at(parity)) {
        int total = 0;
        for (int x : e) total += x;
        if (total == dim) out[e] = c;
    }
    return out;
}

}  // namespace mvt
