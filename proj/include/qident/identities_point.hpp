#pragma once

#include <vector>

#include "qident/hall_littlewood.hpp"
#include "qident/identities.hpp"

// Point-strategy evaluators: both sides of the finite summation formulas as
// exact rationals at a sampled configuration, plus the t-graded builders for
// the full-sum formulas (both sides series in t, coefficients exact).

namespace qident::builders {

// ---------------------------------------------------------------------------
// Bounded-sum sides of (3), (4), (7), (8): sum over partitions with bounded
// parts at an exact point.
// ---------------------------------------------------------------------------

inline std::vector<Partition> bounded_partitions(long part_cap, long max_length) {
    return enumerate_bounded(max_length, [](const Partition& la) { return la.part(1); },
                             part_cap);
}

inline bool conjugate_even(const Partition& la) {
    for (long v = 1; v <= la.part(1); ++v)
        if (la.multiplicity(v) % 2 != 0) return false;
    return true;
}

// which: 3 = plain sum, 4 = even partitions, 7 = conjugate-even with c_{la,k},
// 8 = d_{la,k}.  Part bound is k (2k for which = 4).
inline Rational bounded_sum_point(int which, long k, const PointConfig& pc) {
    Rational acc(0);
    switch (which) {
    case 3:
        for (const Partition& la : bounded_partitions(k, pc.n()))
            acc += hl_symmetrization(la, pc);
        return acc;
    case 4:
        for (const Partition& mu : bounded_partitions(k, pc.n()))
            acc += hl_symmetrization(mu.scaled(2), pc);
        return acc;
    case 7:
        for (const Partition& la : bounded_partitions(k, pc.n())) {
            if (!conjugate_even(la)) continue;
            acc += partition_coefficient(la, CoefficientKind::c_k, k, pc.q) *
                   hl_symmetrization(la, pc);
        }
        return acc;
    case 8:
        for (const Partition& la : bounded_partitions(k, pc.n()))
            acc += partition_coefficient(la, CoefficientKind::d_k, k, pc.q) *
                   hl_symmetrization(la, pc);
        return acc;
    default:
        throw usage_error("bounded_sum_point: which must be 3, 4, 7 or 8");
    }
}

// Sign-sequence sides of the same four formulas.
inline Rational sign_sum_point(int which, long k, const PointConfig& pc) {
    const long n = pc.n();
    Rational acc(0);
    for (long mask = 0; mask < (1L << n); ++mask) {
        std::vector<int> signs(size_t(n), 1);
        long minus = 0;
        for (long i = 0; i < n; ++i)
            if (mask & (1L << i)) {
                signs[size_t(i)] = -1;
                ++minus;
            }
        if (which == 7 && minus % 2 != 0) continue;
        PointConfig tw = twist(pc, SignSequence(signs));
        Rational weight(1);
        for (long i = 0; i < n; ++i)
            if (signs[size_t(i)] == -1)
                weight *= pc.xs[size_t(i)].pow(which == 4 ? 2 * k : k);
        Rational f;
        switch (which) {
        case 3: f = psi(tw, Rational(0)); break;
        case 4: f = psi(tw, Rational(-1)); break;
        case 7: f = phi(tw, Rational(0), Rational(0)); break;
        case 8: f = phi(tw, pc.q, Rational(1)); break;
        default: throw usage_error("sign_sum_point: which must be 3, 4, 7 or 8");
        }
        acc += f * weight;
    }
    return acc;
}

// ---------------------------------------------------------------------------
// Full sums (1), (2), (5), (6) graded by t with x_i = c_i t: the series
// carry P_la t^{|la|} on the left and the product forms expanded in t on the
// right.
// ---------------------------------------------------------------------------

namespace detail_graded {

inline PowerSeries lin(const Rational& c, long e, long lo, long hi) {
    // 1 - c t^e claimed on [lo, hi]
    return PowerSeries::monomial('t', Rational(1), 0, lo, hi) -
           PowerSeries::monomial('t', c, e, lo, hi);
}

inline PowerSeries pair_product(const std::vector<Rational>& cs, const Rational& q, long W) {
    PowerSeries acc = PowerSeries::one('t', W);
    for (size_t j = 0; j < cs.size(); ++j)
        for (size_t l = j + 1; l < cs.size(); ++l) {
            Rational cc = cs[j] * cs[l];
            acc = acc * lin(q * cc, 2, 0, W) * lin(cc, 2, 0, W).inverse();
        }
    return acc;
}

} // namespace detail_graded

inline PowerSeries full_sum_graded_lhs(int which, const std::vector<Rational>& cs,
                                       const Rational& q, long tord) {
    PointConfig pc(cs, q);
    const long n = long(cs.size());
    PowerSeries acc = PowerSeries::zero('t', 0, tord);
    auto weight = [](const Partition& la) { return la.weight(); };
    enumerate_bounded_visit(n, weight, tord, [&](const Partition& la) {
        Rational coeff;
        switch (which) {
        case 1:
            coeff = hl_symmetrization(la, pc);
            break;
        case 2: { // even partitions only: la = 2 mu
            bool even = true;
            for (long p : la.parts())
                if (p % 2 != 0) even = false;
            if (!even) return true;
            coeff = hl_symmetrization(la, pc);
            break;
        }
        case 5:
            if (!conjugate_even(la)) return true;
            coeff = partition_coefficient(la, CoefficientKind::c, 0, q) *
                    hl_symmetrization(la, pc);
            break;
        case 6:
            coeff = partition_coefficient(la, CoefficientKind::d, 0, q) *
                    hl_symmetrization(la, pc);
            break;
        default:
            throw usage_error("full_sum_graded_lhs: which must be 1, 2, 5 or 6");
        }
        if (!coeff.is_zero())
            acc += PowerSeries::monomial('t', coeff, la.weight(), 0, tord);
        return true;
    });
    return acc;
}

inline PowerSeries full_sum_graded_rhs(int which, const std::vector<Rational>& cs,
                                       const Rational& q, long tord) {
    using detail_graded::lin;
    PowerSeries acc = detail_graded::pair_product(cs, q, tord);
    for (const Rational& c : cs) {
        switch (which) {
        case 1:
            acc = acc * lin(c, 1, 0, tord).inverse();
            break;
        case 2:
            acc = acc * lin(c, 1, 0, tord).inverse() * lin(-c, 1, 0, tord).inverse();
            break;
        case 5:
            break;
        case 6:
            acc = acc * lin(q * c, 1, 0, tord) * lin(c, 1, 0, tord).inverse();
            break;
        default:
            throw usage_error("full_sum_graded_rhs: which must be 1, 2, 5 or 6");
        }
    }
    return acc;
}

// ---------------------------------------------------------------------------
// Bounded sums (3) and (4) graded by t: the left side is a polynomial of
// degree k*n (2k*n for (4)); each sign-sequence term on the right is a
// Laurent-expanded rational function whose negative parts cancel in the sum.
// ---------------------------------------------------------------------------

inline PowerSeries bounded_sum_graded_lhs(int which, long k, const std::vector<Rational>& cs,
                                          const Rational& q, long tord) {
    PointConfig pc(cs, q);
    PowerSeries acc = PowerSeries::zero('t', 0, tord);
    for (const Partition& la : bounded_partitions(k, pc.n())) {
        Partition use = which == 4 ? la.scaled(2) : la;
        if (use.weight() > tord) continue;
        Rational coeff = hl_symmetrization(use, pc);
        if (!coeff.is_zero())
            acc += PowerSeries::monomial('t', coeff, use.weight(), 0, tord);
    }
    return acc;
}

inline PowerSeries bounded_sum_graded_rhs(int which, long k, const std::vector<Rational>& cs,
                                          const Rational& q, long tord) {
    using detail_graded::lin;
    const long n = long(cs.size());
    const long W = tord + 2 * n + 2; // slack for the Laurent factors
    PowerSeries acc = PowerSeries::zero('t', 0, tord);
    for (long mask = 0; mask < (1L << n); ++mask) {
        std::vector<int> sg(size_t(n), 1);
        long minus = 0;
        for (long i = 0; i < n; ++i)
            if (mask & (1L << i)) {
                sg[size_t(i)] = -1;
                ++minus;
            }
        PowerSeries term = PowerSeries::one('t', W);
        Rational scalar(1);
        // singleton factors of Psi(X^xi; 0) or Psi(X^xi; -1)
        for (long i = 0; i < n; ++i) {
            long e = sg[size_t(i)];
            Rational c = e == 1 ? cs[size_t(i)] : cs[size_t(i)].inverse();
            term = term * lin(c, e, std::min(0L, e), W).inverse();
            if (which == 4) term = term * lin(-c, e, std::min(0L, e), W).inverse();
        }
        // pair factors (1 - q y_i y_j) / (1 - y_i y_j)
        for (long i = 0; i < n; ++i)
            for (long j = i + 1; j < n; ++j) {
                long e = sg[size_t(i)] + sg[size_t(j)];
                Rational c = (sg[size_t(i)] == 1 ? cs[size_t(i)] : cs[size_t(i)].inverse()) *
                             (sg[size_t(j)] == 1 ? cs[size_t(j)] : cs[size_t(j)].inverse());
                if (e == 0) {
                    Rational den = Rational(1) - c;
                    if (den.is_zero()) throw pole_error("graded sign sum: unit cross pair");
                    scalar *= (Rational(1) - q * c) / den;
                } else {
                    term = term * lin(q * c, e, std::min(0L, e), W) *
                           lin(c, e, std::min(0L, e), W).inverse();
                }
            }
        // boundary monomial x_i^{k(1-xi_i)/2} resp. x_i^{k(1-xi_i)}
        long tshift = (which == 4 ? 2 * k : k) * minus;
        for (long i = 0; i < n; ++i)
            if (sg[size_t(i)] == -1) scalar *= cs[size_t(i)].pow(which == 4 ? 2 * k : k);
        term = term.scaled(scalar).shifted(tshift);
        if (term.lo() < 0 || term.hi() < tord)
            throw inconclusive_error("graded sign sum: window slack insufficient", W);
        acc += term.padded_down_to(0).restricted(0, tord);
    }
    return acc;
}

// ---------------------------------------------------------------------------
// Theorem 4 (23)/(24): finite q-binomial sums, exact in (z, q).
// ---------------------------------------------------------------------------

inline Rational t4_lhs_point(int which, long n, long k, const Rational& z, const Rational& q) {
    Rational acc(0);
    auto cap = [&](const Partition& la) { return la.part(1); };
    for (const Partition& la : enumerate_bounded(k, cap, which == 23 ? n / 2 : n)) {
        if (which == 23) {
            Partition la2 = la.scaled(2);
            Rational b = gen_qbinom(n, la2, q);
            if (b.is_zero()) continue;
            acc += partition_coefficient(la2.conjugate(), CoefficientKind::c_k, k, q) *
                   z.pow(la.weight()) * q.pow(n_stat(la2)) * b;
        } else {
            Rational b = gen_qbinom(n, la, q);
            if (b.is_zero()) continue;
            acc += partition_coefficient(la.conjugate(), CoefficientKind::d_k, k, q) *
                   z.pow(la.weight()) * q.pow(n_stat(la)) * b;
        }
    }
    return acc;
}

inline Rational t4_rhs_point(int which, long n, long k, const Rational& z, const Rational& q) {
    Rational acc(0);
    if (which == 23) {
        for (long r = 0; 2 * r <= n; ++r) {
            Rational den = pochhammer(z * q.pow(2 * r - 1), n + 1, q);
            if (den.is_zero()) throw pole_error("t4a: (z q^{2r-1}; q)_{n+1} vanishes");
            Rational t = z.pow(k * r) * q.pow((k + 1) * r * (2 * r - 1)) * qbinom(n, 2 * r, q);
            t *= (Rational(1) - z * q.pow(4 * r - 1)) / den;
            acc += t;
        }
        return pochhammer(z, n, q * q) * acc;
    }
    for (long r = 0; r <= n; ++r) {
        Rational d1 = Rational(1) - z * q.pow(r - 1);
        Rational d2 = Rational(1) - z * q.pow(r);
        Rational d3 = pochhammer(z * z * q.pow(r - 1), n + 1, q);
        if (d1.is_zero() || d2.is_zero() || d3.is_zero())
            throw pole_error("t4b: denominator vanishes");
        Rational t = z.pow(k * r) * q.pow(r + (k + 1) * (r * (r - 1) / 2)) * qbinom(n, r, q);
        t *= (Rational(1) - z * q.pow(-1)) * (Rational(1) - z * z * q.pow(2 * r - 1)) *
             (Rational(1) - z * q.pow(n));
        t /= d1 * d2 * d3;
        acc += t;
    }
    return pochhammer(z * z, n, q * q) * acc;
}

// ---------------------------------------------------------------------------
// Lemma 5: the q-binomial Pieri identity over horizontal strips, exact at a
// rational q.
// ---------------------------------------------------------------------------

inline bool lemma5_check(const Partition& mu, long n, long m, const Rational& q) {
    if (mu.part(1) > n) throw precondition_error("lemma5_check: mu_1 > n");
    Rational lhs = q.pow(m * (m - 1) / 2 + n_stat(mu)) * qbinom(n, m, q) * gen_qbinom(n, mu, q);
    Rational rhs(0);
    for (const Partition& la : strips(mu, m, StripDirection::horizontal)) {
        Rational b = gen_qbinom(n, la, q);
        if (b.is_zero()) continue;
        Rational t = q.pow(n_stat(la)) * b;
        for (long i = 1; i <= la.length(); ++i)
            t *= qbinom(la.part(i) - la.part(i + 1), la.part(i) - mu.part(i), q);
        rhs += t;
    }
    return lhs == rhs;
}

} // namespace qident::builders
