#pragma once

#include <algorithm>
#include <numeric>
#include <vector>

#include "qident/errors.hpp"
#include "qident/partition.hpp"
#include "qident/qtools.hpp"
#include "qident/rational.hpp"

namespace qident {

// An exact evaluation point: a distinct nonzero alphabet X = {x_1..x_n} and
// a rational q.  All Hall-Littlewood computation in this module is point
// evaluation; identities are certified at exact random points rather than by
// symbolic expansion.
struct PointConfig {
    std::vector<Rational> xs;
    Rational q;

    PointConfig(std::vector<Rational> xs_, Rational q_) : xs(std::move(xs_)), q(std::move(q_)) {
        for (size_t i = 0; i < xs.size(); ++i) {
            if (xs[i].is_zero()) throw precondition_error("PointConfig: zero alphabet point");
            for (size_t j = 0; j < i; ++j)
                if (xs[i] == xs[j])
                    throw precondition_error("PointConfig: repeated alphabet point");
        }
    }
    long n() const { return long(xs.size()); }
};

struct SignSequence {
    std::vector<int> signs; // entries +1 / -1

    explicit SignSequence(std::vector<int> s) : signs(std::move(s)) {
        for (int v : signs)
            if (v != 1 && v != -1) throw precondition_error("SignSequence: entries must be +-1");
    }
    // (-1)^r followed by (+1)^(n-r).
    static SignSequence leading_minuses(long n, long r) {
        std::vector<int> s(size_t(n), 1);
        for (long i = 0; i < r; ++i) s[size_t(i)] = -1;
        return SignSequence(std::move(s));
    }
    long n() const { return long(signs.size()); }
    long minus_count() const { return long(std::count(signs.begin(), signs.end(), -1)); }
};

// X^xi: x_i -> x_i^{xi_i}.  A collision after twisting is a precondition
// error so the verifier can resample instead of silently skipping.
inline PointConfig twist(const PointConfig& pc, const SignSequence& xi) {
    if (xi.n() != pc.n()) throw precondition_error("twist: sign sequence length mismatch");
    std::vector<Rational> ys;
    ys.reserve(pc.xs.size());
    for (size_t i = 0; i < pc.xs.size(); ++i)
        ys.push_back(xi.signs[i] == 1 ? pc.xs[i] : pc.xs[i].inverse());
    return PointConfig(std::move(ys), pc.q); // revalidates distinctness
}

namespace detail {

// v_m(q) = prod_{k=1..m} (1 + q + ... + q^{k-1}), the cancelled form of
// (q)_m / (1-q)^m.  Keeping the cancelled form admits q = 1.
inline Rational v_factor(long m, const Rational& q) {
    Rational acc(1);
    Rational geom(0);
    Rational qpow(1);
    for (long k = 1; k <= m; ++k) {
        geom += qpow; // 1 + q + ... + q^{k-1}
        qpow *= q;
        if (geom.is_zero())
            throw singular_error("hall-littlewood: cancelled normalizer vanishes at this q");
        acc *= geom;
    }
    return acc;
}

} // namespace detail

// P_la(X, q) by the symmetrized-sum definition, normalized so the dominant
// monomial has coefficient 1:
//   P_la = prod_{i>=0} v_{m_i}(q)^{-1} *
//          sum_{w in S_n} w( x^la prod_{i<j} (x_i - q x_j)/(x_i - x_j) )
// with m_0 = n - l(la) zero parts counted in the normalizer.
inline Rational hl_symmetrization(const Partition& la, const PointConfig& pc, long max_n = 7) {
    const long n = pc.n();
    if (n > max_n) throw usage_error("hl_symmetrization: alphabet larger than the configured cap");
    if (la.length() > n) throw precondition_error("hl_symmetrization: l(la) > n");

    Rational norm(1);
    norm *= detail::v_factor(n - la.length(), pc.q);
    for (long v = 1; v <= la.part(1); ++v) norm *= detail::v_factor(la.multiplicity(v), pc.q);

    std::vector<int> idx(static_cast<size_t>(n));
    std::iota(idx.begin(), idx.end(), 0);
    Rational sum(0);
    do {
        Rational term(1);
        for (long t = 0; t < n; ++t) {
            long e = la.part(t + 1);
            if (e != 0) term *= pc.xs[size_t(idx[size_t(t)])].pow(e);
        }
        for (long i = 0; i < n; ++i) {
            const Rational& xi = pc.xs[size_t(idx[size_t(i)])];
            for (long j = i + 1; j < n; ++j) {
                const Rational& xj = pc.xs[size_t(idx[size_t(j)])];
                term *= (xi - pc.q * xj) / (xi - xj);
            }
        }
        sum += term;
    } while (std::next_permutation(idx.begin(), idx.end()));
    return sum / norm;
}

// P_la(X, q) a second way, by the filtration formula
//   P_la = sum_F pi_F prod_i p(F_i \ F_{i-1})^{mu_i}
// summed over chains with |F_i| = r_1 + ... + r_i, where la =
// (mu_1^{r_1} ... mu_k^{r_k}) lists the distinct parts (padded with a
// mu_k = 0 block when l(la) < n) and pi_F orients every cross-block pair.
// Independent of the symmetrized sum; the two must agree.
inline Rational hl_filtration(const Partition& la, const PointConfig& pc, long max_n = 6) {
    const long n = pc.n();
    if (n > max_n) throw usage_error("hl_filtration: alphabet larger than the configured cap");
    if (la.length() > n) throw precondition_error("hl_filtration: l(la) > n");

    std::vector<long> mu;     // distinct part values, decreasing
    std::vector<long> r;      // multiplicities
    for (long i = 1; i <= la.length(); ++i) {
        long p = la.part(i);
        if (mu.empty() || mu.back() != p) {
            mu.push_back(p);
            r.push_back(1);
        } else {
            r.back()++;
        }
    }
    if (la.length() < n) {
        mu.push_back(0);
        r.push_back(n - la.length());
    }
    const long k = long(mu.size());

    std::vector<int> level(size_t(n), -1); // block index per alphabet position
    std::vector<long> remaining = r;
    Rational total(0);

    std::function<void(long)> rec = [&](long pos) {
        if (pos == n) {
            Rational term(1);
            for (long i = 0; i < n; ++i)
                for (long j = i + 1; j < n; ++j) {
                    if (level[size_t(i)] == level[size_t(j)]) continue;
                    long u = i, v = j;
                    if (level[size_t(u)] > level[size_t(v)]) std::swap(u, v);
                    const Rational& xu = pc.xs[size_t(u)];
                    const Rational& xv = pc.xs[size_t(v)];
                    term *= (xu - pc.q * xv) / (xu - xv);
                }
            for (long b = 0; b < k; ++b) {
                if (mu[size_t(b)] == 0) continue;
                Rational p(1);
                for (long i = 0; i < n; ++i)
                    if (level[size_t(i)] == b) p *= pc.xs[size_t(i)];
                term *= p.pow(mu[size_t(b)]);
            }
            total += term;
            return;
        }
        for (long b = 0; b < k; ++b) {
            if (remaining[size_t(b)] == 0) continue;
            remaining[size_t(b)]--;
            level[size_t(pos)] = int(b);
            rec(pos + 1);
            level[size_t(pos)] = -1;
            remaining[size_t(b)]++;
        }
    };
    rec(0);
    return total;
}

// Psi_q(X; alpha) = prod_i (1-x_i)^-1 (1-alpha x_i)^-1 *
//                   prod_{j<k} (1 - q x_j x_k)/(1 - x_j x_k)
inline Rational psi(const PointConfig& pc, const Rational& alpha) {
    Rational acc(1);
    for (size_t i = 0; i < pc.xs.size(); ++i) {
        Rational d1 = Rational(1) - pc.xs[i];
        if (d1.is_zero()) throw pole_error("psi: factor 1 - x_" + std::to_string(i + 1));
        Rational d2 = Rational(1) - alpha * pc.xs[i];
        if (d2.is_zero()) throw pole_error("psi: factor 1 - alpha*x_" + std::to_string(i + 1));
        acc /= d1 * d2;
    }
    for (size_t j = 0; j < pc.xs.size(); ++j)
        for (size_t k = j + 1; k < pc.xs.size(); ++k) {
            Rational den = Rational(1) - pc.xs[j] * pc.xs[k];
            if (den.is_zero())
                throw pole_error("psi: factor 1 - x_" + std::to_string(j + 1) + "*x_" +
                                 std::to_string(k + 1));
            acc *= (Rational(1) - pc.q * pc.xs[j] * pc.xs[k]) / den;
        }
    return acc;
}

// Phi_q(X; alpha, beta) = prod_i (1-alpha x_i)/(1-beta x_i) *
//                         prod_{j<k} (1 - q x_j x_k)/(1 - x_j x_k)
inline Rational phi(const PointConfig& pc, const Rational& alpha, const Rational& beta) {
    Rational acc(1);
    for (size_t i = 0; i < pc.xs.size(); ++i) {
        Rational den = Rational(1) - beta * pc.xs[i];
        if (den.is_zero()) throw pole_error("phi: factor 1 - beta*x_" + std::to_string(i + 1));
        acc *= (Rational(1) - alpha * pc.xs[i]) / den;
    }
    for (size_t j = 0; j < pc.xs.size(); ++j)
        for (size_t k = j + 1; k < pc.xs.size(); ++k) {
            Rational den = Rational(1) - pc.xs[j] * pc.xs[k];
            if (den.is_zero())
                throw pole_error("phi: factor 1 - x_" + std::to_string(j + 1) + "*x_" +
                                 std::to_string(k + 1));
            acc *= (Rational(1) - pc.q * pc.xs[j] * pc.xs[k]) / den;
        }
    return acc;
}

// Elementary symmetric polynomial e_m(X); 0 beyond the alphabet size.
inline Rational elementary_sym(long m, const PointConfig& pc) {
    if (m < 0 || m > pc.n()) return Rational(0);
    // e-polynomial DP: after processing i+1 variables, e[r] holds e_r of them.
    std::vector<Rational> e(size_t(m + 1));
    e[0] = Rational(1);
    for (long i = 0; i < pc.n(); ++i)
        for (long r = std::min(m, i + 1); r >= 1; --r)
            e[size_t(r)] += e[size_t(r - 1)] * pc.xs[size_t(i)];
    return e[size_t(m)];
}

// Pieri rule at a point: P_mu * e_m = sum over vertical m-strips la/mu of
// prod_i [la'_i - la'_{i+1}; la'_i - mu'_i] P_la, skipping la with more rows
// than the alphabet (those P_la vanish identically).
inline bool pieri_check(const Partition& mu, long m, const PointConfig& pc) {
    const long n = pc.n();
    if (mu.length() > n) throw precondition_error("pieri_check: l(mu) > n");
    Rational lhs = hl_symmetrization(mu, pc) * elementary_sym(m, pc);
    Rational rhs(0);
    Partition muc = mu.conjugate();
    for (const Partition& la : strips(mu, m, StripDirection::vertical)) {
        if (la.length() > n) continue;
        Partition lac = la.conjugate();
        Rational coeff(1);
        for (long i = 1; i <= la.part(1); ++i)
            coeff *= qbinom(lac.part(i) - lac.part(i + 1), lac.part(i) - muc.part(i), pc.q);
        rhs += coeff * hl_symmetrization(la, pc);
    }
    return lhs == rhs;
}

struct PrincipalSpecResult {
    bool n_stat_choose2; // convention n(la) = sum C(la_i, 2)
    bool n_stat_row;     // convention n(la) = sum (i-1) la_i
};

// Principal specialization x_i = w q^{i-1} (z = w^2 so every power is
// rational):  P_{la'}(X, q) ?= w^{|la|} q^{n(la)} [n; la].  Both n-statistic
// conventions are evaluated; exactly one should survive across random
// trials, and downstream code uses the surviving one.
inline PrincipalSpecResult principal_spec_check(const Partition& la, long n, const Rational& w,
                                                const Rational& q) {
    if (la.part(1) > n) throw precondition_error("principal_spec_check: la_1 > n");
    std::vector<Rational> xs;
    Rational qp(1);
    for (long i = 0; i < n; ++i) {
        xs.push_back(w * qp);
        qp *= q;
    }
    PointConfig pc(std::move(xs), q);
    Rational lhs = hl_symmetrization(la.conjugate(), pc);
    Rational common = w.pow(la.weight()) * gen_qbinom(n, la, q);
    PrincipalSpecResult res;
    res.n_stat_choose2 = (lhs == q.pow(n_stat(la)) * common);
    res.n_stat_row = (lhs == q.pow(n_stat_row_weighted(la)) * common);
    return res;
}

namespace detail {

inline PointConfig geometric_points(long n, const Rational& base, const Rational& q) {
    std::vector<Rational> xs;
    Rational qp(1);
    for (long i = 0; i < n; ++i) {
        xs.push_back(base * qp);
        qp *= q;
    }
    return PointConfig(std::move(xs), q);
}

} // namespace detail

// The five specialization identities used to collapse the sign-sequence
// sums, checked with both sides computed independently.  xi is always
// (-1)^r (+1)^(n-r).
//
//   29:  Phi(X^xi; 0,0) = Psi(X^xi; -1) prod_i (1 - x_i^{2 xi_i})   (any X)
//   30:  prod (1 - x_i^{2 xi_i}) = (-1)^r z^-r q^-2C(r,2) (z;q^2)_n, x_i = w q^{i-1}, z = w^2
//   31:  Psi(X^xi; -1) = (-1)^r z^r q^{3C(r,2)} [n;r] (1-z q^{2r-1}) / (z q^{r-1}; q)_{n+1}
//   32:  prod (1-q x_i^{xi_i})/(1-x_i^{xi_i}) = q^r (1-z/q)(1-z q^n) / ((1-z q^{r-1})(1-z q^r)),
//        x_i = z q^{i-1}
//   33:  Phi(X^xi; 0,0) = q^C(r,2) [n;r] (1-z^2 q^{2r-1}) (z^2;q^2)_n / (z^2 q^{r-1}; q)_{n+1},
//        x_i = z q^{i-1}
inline bool specialization_identity_check(int which, long n, long r, const Rational& t,
                                          const Rational& q) {
    if (r < 0 || r > n) throw precondition_error("specialization_identity_check: r out of range");
    SignSequence xi = SignSequence::leading_minuses(n, r);
    auto prod_one_minus_sq = [](const PointConfig& tw) {
        Rational p(1);
        for (const Rational& y : tw.xs) p *= Rational(1) - y * y;
        return p;
    };
    switch (which) {
    case 29: {
        PointConfig tw = twist(detail::geometric_points(n, t, q), xi);
        return phi(tw, Rational(0), Rational(0)) ==
               psi(tw, Rational(-1)) * prod_one_minus_sq(tw);
    }
    case 30: {
        Rational z = t * t;
        PointConfig tw = twist(detail::geometric_points(n, t, q), xi);
        Rational rhs = z.pow(-r) * q.pow(-2 * (r * (r - 1) / 2)) * pochhammer(z, n, q * q);
        if (r % 2 == 1) rhs = -rhs;
        return prod_one_minus_sq(tw) == rhs;
    }
    case 31: {
        Rational z = t * t;
        PointConfig tw = twist(detail::geometric_points(n, t, q), xi);
        Rational den = pochhammer(z * q.pow(r - 1), n + 1, q);
        if (den.is_zero()) throw pole_error("spec 31: (z q^{r-1}; q)_{n+1} vanishes");
        Rational rhs = z.pow(r) * q.pow(3 * (r * (r - 1) / 2)) * qbinom(n, r, q) *
                       (Rational(1) - z * q.pow(2 * r - 1)) / den;
        if (r % 2 == 1) rhs = -rhs;
        return psi(tw, Rational(-1)) == rhs;
    }
    case 32: {
        const Rational& z = t;
        PointConfig tw = twist(detail::geometric_points(n, z, q), xi);
        Rational lhs(1);
        for (const Rational& y : tw.xs) {
            Rational den = Rational(1) - y;
            if (den.is_zero()) throw pole_error("spec 32: 1 - x_i^{xi_i} vanishes");
            lhs *= (Rational(1) - q * y) / den;
        }
        Rational d1 = Rational(1) - z * q.pow(r - 1);
        Rational d2 = Rational(1) - z * q.pow(r);
        if (d1.is_zero() || d2.is_zero()) throw pole_error("spec 32: denominator vanishes");
        Rational rhs = q.pow(r) * (Rational(1) - z * q.pow(-1)) * (Rational(1) - z * q.pow(n)) /
                       (d1 * d2);
        return lhs == rhs;
    }
    case 33: {
        const Rational& z = t;
        Rational z2 = z * z;
        PointConfig tw = twist(detail::geometric_points(n, z, q), xi);
        Rational den = pochhammer(z2 * q.pow(r - 1), n + 1, q);
        if (den.is_zero()) throw pole_error("spec 33: (z^2 q^{r-1}; q)_{n+1} vanishes");
        Rational rhs = q.pow(r * (r - 1) / 2) * qbinom(n, r, q) *
                       (Rational(1) - z2 * q.pow(2 * r - 1)) * pochhammer(z2, n, q * q) / den;
        return phi(tw, Rational(0), Rational(0)) == rhs;
    }
    default:
        throw usage_error("specialization_identity_check: which must be 29..33");
    }
}

} // namespace qident
