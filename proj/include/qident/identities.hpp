#pragma once

#include <cassert>
#include <functional>
#include <vector>

#include "qident/bailey.hpp"
#include "qident/hall_littlewood.hpp"
#include "qident/partition.hpp"
#include "qident/qtools.hpp"

// Series- and point-side builders for every identity in the catalog.  Series
// builders return windows covering [0, order] in the stated grading
// variable; point builders return exact rationals.  Each side of an identity
// is computed independently of the other.

namespace qident::builders {

// Memoized inverse Pochhammer table: (c v^a; v^M)_j^{-1} on [0, order].
class InvPochTable {
public:
    InvPochTable(char var, Rational c, long a, long M, long order)
        : var_(var), c_(std::move(c)), a_(a), M_(M), order_(order) {}
    const PowerSeries& at(long j) {
        while (long(items_.size()) <= j)
            items_.push_back(poch_mono(var_, c_, a_, M_, long(items_.size()), order_).inverse());
        return items_[size_t(j)];
    }

private:
    char var_;
    Rational c_;
    long a_, M_, order_;
    std::vector<PowerSeries> items_;
};

inline PowerSeries qmono(const Rational& c, long e, long order, char var = 'q') {
    return PowerSeries::monomial(var, c, e, 0, order);
}

// ---------------------------------------------------------------------------
// Rogers-Ramanujan introduction: sum q^{n^2+an}/(q)_n, a in {0, 1}.
// ---------------------------------------------------------------------------

inline PowerSeries rr_intro_lhs(long a, long order) {
    InvPochTable inv_q('q', Rational(1), 1, 1, order);
    PowerSeries acc = PowerSeries::zero('q', 0, order);
    for (long n = 0; n * n + a * n <= order; ++n)
        detail::accumulate(acc, detail::on_window(inv_q.at(n).shifted(n * n + a * n), order));
    return acc;
}

inline PowerSeries rr_intro_rhs(long a, long order) {
    return congruence_product(pm_residues({a + 1}, 5), 5, order);
}

// ---------------------------------------------------------------------------
// The key q-identity (Theorem 2) and its z = q specialization, graded by q
// with exact rational a, b, z.  The Laurent factors (a, b; q^{-2})_{la_1} are
// folded as (ab)^{la_1} q^{-2 la_1 (la_1 - 1)} (1/a, 1/b; q^2)_{la_1}, which
// keeps every window nonnegative; the exactness of that fold is asserted
// against the direct Laurent computation for small la_1 at the test level.
// The per-term valuation bound >= |la| is asserted on every term.
// ---------------------------------------------------------------------------

namespace detail_t2 {

// lowest possible q-exponent of the Theorem-2 term at la
inline long valuation_bound(const Partition& la) {
    long v = la.part(1);
    for (long i = 2; i <= la.length(); ++i) v += la.part(i) * (2 * la.part(i) - 1);
    return v;
}

} // namespace detail_t2

inline PowerSeries t2_lhs(long k, const Rational& a, const Rational& b, const Rational& z,
                          long order) {
    if (a.is_zero() || b.is_zero()) throw usage_error("t2_lhs: a, b must be nonzero");
    InvPochTable inv_q2('q', Rational(1), 2, 2, order); // (q^2;q^2)_j^{-1}
    InvPochTable inv_qodd('q', Rational(1), 1, 2, order); // (q;q^2)_j^{-1}
    std::vector<PowerSeries> numer; // (1/a, 1/b; q^2)_{la_1} cache
    auto numer_at = [&](long j) -> const PowerSeries& {
        while (long(numer.size()) <= j) {
            long m = long(numer.size());
            numer.push_back(poch_mono('q', a.inverse(), 0, 2, m, order) *
                            poch_mono('q', b.inverse(), 0, 2, m, order));
        }
        return numer[size_t(j)];
    };
    Rational ab = a * b;
    PowerSeries acc = PowerSeries::zero('q', 0, order);
    enumerate_bounded_visit(k, detail_t2::valuation_bound, order, [&](const Partition& la) {
        long la1 = la.part(1);
        PowerSeries t = numer_at(la1).shifted(detail_t2::valuation_bound(la));
        t = t * inv_qodd.at(la.part(k));
        for (long i = 1; i <= la.length(); ++i) t = t * inv_q2.at(la.part(i) - la.part(i + 1));
        t = t.scaled(z.pow(la.weight()) * ab.pow(la1));
        if (t.lo() < la.weight())
            throw usage_error("t2_lhs: term valuation below |la|, window bookkeeping broken");
        qident::detail::accumulate(acc, qident::detail::on_window(t, order));
        return true;
    });
    return acc;
}

inline PowerSeries t2_rhs(long k, const Rational& a, const Rational& b, const Rational& z,
                          long order) {
    if (a.is_zero() || b.is_zero() || z.is_zero() || z.is_one())
        throw usage_error("t2_rhs: need a, b, z nonzero and z != 1");
    const Rational ab = a * b;
    // (z; q^2)_inf / (abzq; q^2)_inf
    PowerSeries pre = poch_mono_inf('q', z, 0, 2, order) *
                      poch_mono_inf('q', ab * z, 1, 2, order).inverse();
    PowerSeries sum = PowerSeries::zero('q', 0, order);
    // r = 0: (aqz, bqz; q^2)_inf (1 - z q^{-1}) / (z q^{-1}; q)_inf, the
    // trailing pair computed mechanically with Laurent windows.
    {
        PowerSeries zq1 = poch_mono('q', z, -1, 1, 1, order + 2);  // 1 - z/q
        PowerSeries t = poch_mono_inf('q', a * z, 1, 2, order) *
                        poch_mono_inf('q', b * z, 1, 2, order) * zq1 *
                        poch_mono('q', z, -1, 1, kInfinite, order + 2).inverse();
        qident::detail::accumulate(sum, qident::detail::on_window(t, order));
    }
    for (long r = 1;; ++r) {
        long shift = (k + 1) * r * (2 * r - 1) - 2 * r * (r - 1); // exponent after the fold
        if (shift > order) break;
        PowerSeries t = poch_mono('q', a.inverse(), 0, 2, r, order) *
                        poch_mono('q', b.inverse(), 0, 2, r, order);
        t = t.shifted(shift);
        t = t * poch_mono_inf('q', a * z, 2 * r + 1, 2, order) *
            poch_mono_inf('q', b * z, 2 * r + 1, 2, order);
        t = t * poch_mono('q', z, 4 * r - 1, 1, 1, order); // 1 - z q^{4r-1}
        t = t * poch_mono('q', Rational(1), 1, 1, 2 * r, order).inverse(); // 1/(q)_{2r}
        t = t * poch_mono_inf('q', z, 2 * r - 1, 1, order).inverse();      // 1/(zq^{2r-1})_inf
        t = t.scaled(z.pow(k * r) * ab.pow(r));
        qident::detail::accumulate(sum, qident::detail::on_window(t, order));
    }
    return pre * sum;
}

inline PowerSeries t2zq_lhs(long k, const Rational& a, const Rational& b, long order) {
    if (a.is_zero() || b.is_zero()) throw usage_error("t2zq_lhs: a, b must be nonzero");
    auto functional = [](const Partition& la) {
        return la.weight() + detail_t2::valuation_bound(la);
    };
    InvPochTable inv_q2('q', Rational(1), 2, 2, order);
    InvPochTable inv_qodd('q', Rational(1), 1, 2, order);
    std::vector<PowerSeries> numer;
    auto numer_at = [&](long j) -> const PowerSeries& {
        while (long(numer.size()) <= j) {
            long m = long(numer.size());
            numer.push_back(poch_mono('q', a.inverse(), 0, 2, m, order) *
                            poch_mono('q', b.inverse(), 0, 2, m, order));
        }
        return numer[size_t(j)];
    };
    Rational ab = a * b;
    PowerSeries acc = PowerSeries::zero('q', 0, order);
    enumerate_bounded_visit(k, functional, order, [&](const Partition& la) {
        PowerSeries t = numer_at(la.part(1)).shifted(functional(la));
        t = t * inv_qodd.at(la.part(k));
        for (long i = 1; i <= la.length(); ++i) t = t * inv_q2.at(la.part(i) - la.part(i + 1));
        t = t.scaled(ab.pow(la.part(1)));
        qident::detail::accumulate(acc, qident::detail::on_window(t, order));
        return true;
    });
    return acc;
}

// The z = q specialization of the Theorem-2 right side.  The r = 0 term is
// (aq^2, bq^2; q^2)_inf / ((abq^2; q^2)_inf (q^2; q^2)_inf); the display
// prints a bare 1 there, which only matches when a = b = 0, so the printed
// variant is exposed separately for reporting.
inline PowerSeries t2zq_rhs(long k, const Rational& a, const Rational& b, long order,
                            bool printed_r0_term = false) {
    const Rational ab = a * b;
    PowerSeries denom_inv = (poch_mono_inf('q', ab, 2, 2, order) *
                             poch_mono_inf('q', Rational(1), 2, 2, order))
                                .inverse();
    PowerSeries sum = PowerSeries::zero('q', 0, order);
    if (printed_r0_term) {
        sum += PowerSeries::one('q', order);
    } else {
        PowerSeries t0 = poch_mono_inf('q', a, 2, 2, order) *
                         poch_mono_inf('q', b, 2, 2, order) * denom_inv;
        qident::detail::accumulate(sum, qident::detail::on_window(t0, order));
    }
    for (long r = 1;; ++r) {
        long shift = 2 * k * r * r + r * (2 * r - 1) - 2 * r * (r - 1);
        if (shift > order) break;
        PowerSeries t = poch_mono('q', a.inverse(), 0, 2, r, order) *
                        poch_mono('q', b.inverse(), 0, 2, r, order);
        t = t.shifted(shift);
        t = t * poch_mono_inf('q', a, 2 * r + 2, 2, order) *
            poch_mono_inf('q', b, 2 * r + 2, 2, order);
        t = t * (PowerSeries::one('q', order) + qmono(Rational(1), 2 * r, order));
        t = t * denom_inv;
        t = t.scaled(ab.pow(r));
        qident::detail::accumulate(sum, qident::detail::on_window(t, order));
    }
    return sum;
}

// ---------------------------------------------------------------------------
// Theorem 3 multisums (11)-(16) with their Jacobi-triple-product and printed
// right sides.  The (15) exponent is 2 n2(la) - 2 la_1^2 + la_1: the display
// prints -la_1^2, but the a = -1/q, b = -1 derivation from the z = q
// specialization, the k = 1 reduction (21), and the displayed product side
// all require the -2 la_1^2 form.
// ---------------------------------------------------------------------------

struct T3Shape {
    std::function<long(const Partition&)> expo;
    int numerator; // 0 none, 1 (-q;q^2)_{la1}, 2 (-1;q^2)_{la1}, 3 both
    bool one_minus_q2la1;
    long jtp_x_exp, jtp_base; // J(-q^{x}, q^{base})
    int prefactor;            // 0: 1/(q2)inf; 1: (-q;q2)inf/(q2)inf; 2: (-q2;q2)inf/(q2)inf
                              // 3: 2*(-q2;q2)inf/(q2)inf; 4: (-q)inf/(q)inf
};

inline T3Shape t3_shape(int which, long k) {
    auto n2 = [](const Partition& la) { return 2 * n2_stat(la); };
    switch (which) {
    case 11:
        return {[n2](const Partition& la) { return n2(la); }, 0, false, 2 * k + 1, 4 * k + 4, 0};
    case 12:
        return {[n2](const Partition& la) { return n2(la) - 2 * la.part(1); }, 0, true,
                2 * k - 1, 4 * k + 4, 0};
    case 13:
        return {[n2](const Partition& la) { return n2(la) - la.part(1) * la.part(1); }, 1, false,
                2 * k, 4 * k + 2, 1};
    case 14:
        return {[n2](const Partition& la) {
                    return n2(la) - la.part(1) * la.part(1) - la.part(1);
                },
                2, true, 2 * k - 1, 4 * k + 2, 3};
    case 15:
        return {[n2](const Partition& la) {
                    return n2(la) - 2 * la.part(1) * la.part(1) + la.part(1);
                },
                3, false, 2 * k, 4 * k, 4};
    case 16:
        return {[n2](const Partition& la) {
                    return n2(la) - la.part(1) * la.part(1) + la.part(1);
                },
                2, false, 2 * k + 1, 4 * k + 2, 2};
    default:
        throw usage_error("t3_shape: which must be 11..16");
    }
}

inline PowerSeries t3_lhs(int which, long k, long order) {
    T3Shape shape = t3_shape(which, k);
    InvPochTable inv_q2('q', Rational(1), 2, 2, order);
    InvPochTable inv_qodd('q', Rational(1), 1, 2, order);
    PowerSeries acc = PowerSeries::zero('q', 0, order);
    enumerate_bounded_visit(k, shape.expo, order, [&](const Partition& la) {
        long la1 = la.part(1);
        PowerSeries t = qmono(Rational(1), shape.expo(la), order);
        if (shape.numerator == 1 || shape.numerator == 3)
            t = t * poch_mono('q', Rational(-1), 1, 2, la1, order); // (-q;q^2)_{la1}
        if (shape.numerator == 2 || shape.numerator == 3)
            t = t * poch_mono('q', Rational(-1), 0, 2, la1, order); // (-1;q^2)_{la1}
        if (shape.one_minus_q2la1)
            t = t * poch_mono('q', Rational(1), 2 * la1, 1, 1, order); // 1 - q^{2 la1}
        t = t * inv_qodd.at(la.part(k));
        for (long i = 1; i <= la.length(); ++i) t = t * inv_q2.at(la.part(i) - la.part(i + 1));
        qident::detail::accumulate(acc, qident::detail::on_window(t, order));
        return true;
    });
    return acc;
}

inline PowerSeries t3_prefactor(int kind, long order) {
    switch (kind) {
    case 0:
        return poch_mono_inf('q', Rational(1), 2, 2, order).inverse();
    case 1:
        return poch_mono_inf('q', Rational(-1), 1, 2, order) *
               poch_mono_inf('q', Rational(1), 2, 2, order).inverse();
    case 2:
        return poch_mono_inf('q', Rational(-1), 2, 2, order) *
               poch_mono_inf('q', Rational(1), 2, 2, order).inverse();
    case 3:
        return (poch_mono_inf('q', Rational(-1), 2, 2, order) *
                poch_mono_inf('q', Rational(1), 2, 2, order).inverse())
            .scaled(Rational(2));
    case 4:
        return poch_mono_inf('q', Rational(-1), 1, 1, order) *
               poch_mono_inf('q', Rational(1), 1, 1, order).inverse();
    default:
        throw usage_error("t3_prefactor: bad kind");
    }
}

// Right side as the proofs build it: prefactor times the triple-product sum.
inline PowerSeries t3_rhs_jtp(int which, long k, long order) {
    T3Shape shape = t3_shape(which, k);
    return t3_prefactor(shape.prefactor, order) *
           jacobi_triple_mono('q', Rational(-1), shape.jtp_x_exp, shape.jtp_base, order,
                              JacobiSide::sum);
}

// Right side exactly as displayed (residue lists for 11 and 12, prefactor
// times explicit triple products for 13-16; 14 as printed lacks the factor 2
// its left side carries).
inline PowerSeries t3_rhs_printed(int which, long k, long order) {
    auto triple = [&](long x, long M) {
        return poch_mono_inf('q', Rational(1), M, M, order) *
               poch_mono_inf('q', Rational(-1), x, M, order) *
               poch_mono_inf('q', Rational(-1), M - x, M, order);
    };
    switch (which) {
    case 11: {
        std::vector<long> rs = {2 * k + 1, 2 * k + 3};
        for (long e = 2; e <= 4 * k; e += 2) rs.push_back(e);
        return congruence_product(pm_residues(rs, 8 * k + 8), 8 * k + 8, order);
    }
    case 12: {
        std::vector<long> rs = {2 * k + 5, 4 * k + 2};
        for (long e = 2; e <= 4 * k; e += 2) rs.push_back(e);
        return poch_mono_inf('q', Rational(1), 2 * k - 1, 8 * k + 8, order) *
               poch_mono_inf('q', Rational(1), 6 * k + 9, 8 * k + 8, order) *
               congruence_product(pm_residues(rs, 8 * k + 8), 8 * k + 8, order);
    }
    case 13:
        return t3_prefactor(1, order) * triple(2 * k, 4 * k + 2);
    case 14:
        return t3_prefactor(2, order) * triple(2 * k - 1, 4 * k + 2);
    case 15:
        return t3_prefactor(4, order) * triple(2 * k, 4 * k);
    case 16:
        return t3_prefactor(2, order) * triple(2 * k + 1, 4 * k + 2);
    default:
        throw usage_error("t3_rhs_printed: which must be 11..16");
    }
}

// ---------------------------------------------------------------------------
// The six k = 1 reductions (17)-(22), both sides as displayed.
// ---------------------------------------------------------------------------

inline PowerSeries rr_lhs(int which, long order) {
    InvPochTable inv_q('q', Rational(1), 1, 1, order);
    PowerSeries acc = PowerSeries::zero('q', 0, order);
    auto add = [&](const PowerSeries& t) {
        qident::detail::accumulate(acc, qident::detail::on_window(t, order));
    };
    switch (which) {
    case 17:
        for (long n = 0; 2 * n * n <= order; ++n) add(inv_q.at(2 * n).shifted(2 * n * n));
        break;
    case 18:
        for (long n = 0; 2 * n * n + 2 * n <= order; ++n)
            add(inv_q.at(2 * n + 1).shifted(2 * n * n + 2 * n));
        break;
    case 19:
        for (long n = 0; n * n <= order; ++n)
            add((poch_mono('q', Rational(-1), 1, 2, n, order) * inv_q.at(2 * n)).shifted(n * n));
        break;
    case 20:
        for (long n = 0; n * n + n <= order; ++n)
            add((poch_mono('q', Rational(-1), 2, 2, n, order) * inv_q.at(2 * n + 1))
                    .shifted(n * n + n));
        break;
    case 21:
        add(PowerSeries::one('q', order));
        for (long n = 1; n <= order; ++n)
            add((poch_mono('q', Rational(-1), 1, 1, 2 * n - 1, order) * inv_q.at(2 * n))
                    .shifted(n)
                    .scaled(Rational(2)));
        break;
    case 22:
        add(PowerSeries::one('q', order));
        for (long n = 1; n * n + n <= order; ++n)
            add((poch_mono('q', Rational(-1), 2, 2, n - 1, order) * inv_q.at(2 * n))
                    .shifted(n * n + n)
                    .scaled(Rational(2)));
        break;
    default:
        throw usage_error("rr_lhs: which must be 17..22");
    }
    return acc;
}

inline PowerSeries rr_rhs(int which, long order) {
    auto inv_qinf = [&]() { return poch_mono_inf('q', Rational(1), 1, 1, order).inverse(); };
    switch (which) {
    case 17:
        return congruence_product(pm_residues({2, 3, 4, 5}, 16), 16, order);
    case 18:
        return congruence_product(pm_residues({1, 4, 6, 7}, 16), 16, order);
    case 19:
        return poch_mono_inf('q', Rational(1), 6, 12, order) *
               poch_mono_inf('q', Rational(1), 6, 12, order) *
               poch_mono_inf('q', Rational(1), 12, 12, order) * inv_qinf();
    case 20:
        return poch_mono_inf('q', Rational(1), 3, 12, order) *
               poch_mono_inf('q', Rational(1), 9, 12, order) *
               poch_mono_inf('q', Rational(1), 12, 12, order) * inv_qinf();
    case 21:
        return poch_mono_inf('q', Rational(1), 4, 4, order) *
               poch_mono_inf('q', Rational(-1), 2, 4, order) *
               poch_mono_inf('q', Rational(-1), 2, 4, order) * inv_qinf() *
               poch_mono_inf('q', Rational(1), 1, 2, order).inverse();
    case 22:
        return poch_mono_inf('q', Rational(1), 6, 6, order) *
               poch_mono_inf('q', Rational(-1), 3, 6, order) *
               poch_mono_inf('q', Rational(-1), 3, 6, order) * inv_qinf() *
               poch_mono_inf('q', Rational(-1), 1, 2, order).inverse();
    default:
        throw usage_error("rr_rhs: which must be 17..22");
    }
}

// ---------------------------------------------------------------------------
// Theorem 4 limits and the z = q corollary.
// ---------------------------------------------------------------------------

inline PowerSeries t4lim1_lhs(long k, const Rational& z, long order) {
    auto functional = [](const Partition& la) {
        long f = 0;
        for (long i = 1; i <= la.length(); ++i) f += la.part(i) * (2 * la.part(i) - 1);
        return f; // n(2 la)
    };
    InvPochTable inv_q2('q', Rational(1), 2, 2, order);
    InvPochTable inv_qodd('q', Rational(1), 1, 2, order);
    PowerSeries acc = PowerSeries::zero('q', 0, order);
    enumerate_bounded_visit(k, functional, order, [&](const Partition& la) {
        PowerSeries t = qmono(z.pow(la.weight()), functional(la), order);
        t = t * inv_qodd.at(la.part(k));
        for (long i = 1; i <= la.length(); ++i) t = t * inv_q2.at(la.part(i) - la.part(i + 1));
        qident::detail::accumulate(acc, qident::detail::on_window(t, order));
        return true;
    });
    return acc;
}

inline PowerSeries t4lim1_rhs(long k, const Rational& z, long order) {
    if (z.is_zero() || z.is_one()) throw usage_error("t4lim1_rhs: need z outside {0, 1}");
    PowerSeries pre = poch_mono_inf('q', z, 0, 2, order);
    PowerSeries sum = poch_mono_inf('q', z, 0, 1, order).inverse(); // r = 0 after cancellation
    for (long r = 1;; ++r) {
        long shift = (k + 1) * r * (2 * r - 1);
        if (shift > order) break;
        PowerSeries t = qmono(z.pow(k * r), shift, order);
        t = t * poch_mono('q', z, 4 * r - 1, 1, 1, order);
        t = t * poch_mono('q', Rational(1), 1, 1, 2 * r, order).inverse();
        t = t * poch_mono_inf('q', z, 2 * r - 1, 1, order).inverse();
        qident::detail::accumulate(sum, qident::detail::on_window(t, order));
    }
    return pre * sum;
}

inline PowerSeries t4lim2_lhs(long k, const Rational& z, long order) {
    auto functional = [](const Partition& la) { return n_stat(la); };
    InvPochTable inv_q('q', Rational(1), 1, 1, order);
    InvPochTable inv_q2('q', Rational(1), 2, 2, order);
    PowerSeries acc = PowerSeries::zero('q', 0, order);
    enumerate_bounded_visit(k, functional, order, [&](const Partition& la) {
        PowerSeries t = qmono(z.pow(la.weight()), n_stat(la), order);
        t = t * inv_q.at(la.part(k));
        for (long i = 1; i <= k - 1; ++i)
            t = t * inv_q2.at((la.part(i) - la.part(i + 1)) / 2);
        qident::detail::accumulate(acc, qident::detail::on_window(t, order));
        return true;
    });
    return acc;
}

inline PowerSeries t4lim2_rhs(long k, const Rational& z, long order) {
    if (z.is_zero() || z.is_one() || z == Rational(-1))
        throw usage_error("t4lim2_rhs: need z outside {0, 1, -1}");
    const Rational z2 = z * z;
    PowerSeries pre = poch_mono_inf('q', z2, 0, 2, order);
    PowerSeries sum = PowerSeries::zero('q', 0, order);
    const long W = order + 2; // room for the Laurent factors at r = 0
    for (long r = 0;; ++r) {
        long shift = r + (k + 1) * (r * (r - 1) / 2);
        if (shift - 2 > order) break;
        PowerSeries t = PowerSeries::monomial('q', z.pow(k * r), shift, 0, W);
        t = t * poch_mono('q', z, -1, 1, 1, W);                        // 1 - z/q
        t = t * poch_mono('q', z2, 2 * r - 1, 1, 1, W);                // 1 - z^2 q^{2r-1}
        t = t * poch_mono('q', Rational(1), 1, 1, r, W).inverse();     // 1/(q)_r
        t = t * poch_mono('q', z, r - 1, 1, 1, W).inverse();           // 1/(1 - z q^{r-1})
        t = t * poch_mono('q', z, r, 1, 1, W).inverse();               // 1/(1 - z q^r)
        t = t * poch_mono('q', z2, r - 1, 1, kInfinite, W).inverse();  // 1/(z^2 q^{r-1})_inf
        qident::detail::accumulate(sum, qident::detail::on_window(t, order));
    }
    return pre * sum;
}

inline PowerSeries t4zq_lhs(long k, long order) {
    auto functional = [](const Partition& la) { return la.weight() + n_stat(la); };
    InvPochTable inv_q('q', Rational(1), 1, 1, order);
    InvPochTable inv_q2('q', Rational(1), 2, 2, order);
    PowerSeries acc = PowerSeries::zero('q', 0, order);
    enumerate_bounded_visit(k, functional, order, [&](const Partition& la) {
        PowerSeries t = qmono(Rational(1), functional(la), order);
        t = t * inv_q.at(la.part(k));
        for (long i = 1; i <= k - 1; ++i)
            t = t * inv_q2.at((la.part(i) - la.part(i + 1)) / 2);
        qident::detail::accumulate(acc, qident::detail::on_window(t, order));
        return true;
    });
    return acc;
}

inline PowerSeries t4zq_rhs(long order) {
    return poch_mono_inf('q', Rational(1), 1, 2, order).inverse(); // 1/(q; q^2)_inf
}

// ---------------------------------------------------------------------------
// Lemma 6, z-graded at an exact rational q: (38), (39), (40).
// ---------------------------------------------------------------------------

inline PowerSeries l6_lhs(int which, long n, const Rational& q, long zorder) {
    PowerSeries acc = PowerSeries::zero('z', 0, zorder);
    auto weight = [](const Partition& la) { return la.weight(); };
    enumerate_bounded_visit(zorder, weight, zorder, [&](const Partition& la) {
        Rational c;
        switch (which) {
        case 38:
            if (la.part(1) > n) return true;
            c = q.pow(2 * n_stat(la)) * gen_qbinom(n, la, q);
            break;
        case 39:
            if (la.part(1) > n) return true;
            c = q.pow(n_stat(la)) * gen_qbinom(n, la, q);
            break;
        case 40: {
            Partition la2 = la.scaled(2);
            if (la2.part(1) > n) return true;
            c = pochhammer_lambda(q, la, q * q) * q.pow(n_stat(la2)) * gen_qbinom(n, la2, q);
            break;
        }
        default:
            throw usage_error("l6_lhs: which must be 38..40");
        }
        if (!c.is_zero()) acc += PowerSeries::monomial('z', c, la.weight(), 0, zorder);
        return true;
    });
    return acc;
}

inline PowerSeries l6_rhs(int which, long n, const Rational& q, long zorder) {
    auto zpoch = [&](const Rational& base_coeff, long zdeg, const Rational& step, long count) {
        // prod_{j=0..count-1} (1 - base_coeff step^j z^zdeg)
        PowerSeries acc = PowerSeries::one('z', zorder);
        Rational c = base_coeff;
        for (long j = 0; j < count; ++j) {
            if (zdeg <= zorder)
                acc = acc * (PowerSeries::one('z', zorder) -
                             PowerSeries::monomial('z', c, zdeg, 0, zorder));
            c *= step;
        }
        return acc;
    };
    switch (which) {
    case 38:
        return zpoch(Rational(1), 1, q, n).inverse(); // 1/(z)_n
    case 39:
        return zpoch(Rational(-1), 1, q, n) * zpoch(Rational(1), 2, q, n).inverse();
    case 40:
        return zpoch(Rational(1), 1, q * q, n) * zpoch(Rational(1), 1, q, n).inverse();
    default:
        throw usage_error("l6_rhs: which must be 38..40");
    }
}

// The n -> infinity limits, q-graded along the line z = c q^d (d >= 1 keeps
// every sum and product coefficientwise finite).
inline PowerSeries l6lim_lhs(int which, const Rational& c, long d, long order) {
    auto functional = [which, d](const Partition& la) {
        long base = d * la.weight();
        switch (which) {
        case 1: return base + 2 * n_stat(la);
        case 2: return base + n_stat(la);
        case 3: return base + n_stat(la.scaled(2));
        default: throw usage_error("l6lim_lhs: which must be 1..3");
        }
    };
    InvPochTable inv_q('q', Rational(1), 1, 1, order);
    InvPochTable inv_q2('q', Rational(1), 2, 2, order);
    PowerSeries acc = PowerSeries::zero('q', 0, order);
    enumerate_bounded_visit(order + 1, functional, order, [&](const Partition& la) {
        PowerSeries t = qmono(c.pow(la.weight()), functional(la), order);
        for (long i = 1; i <= la.length(); ++i) {
            long diff = la.part(i) - la.part(i + 1);
            t = t * (which == 3 ? inv_q2.at(diff) : inv_q.at(diff));
        }
        qident::detail::accumulate(acc, qident::detail::on_window(t, order));
        return true;
    });
    return acc;
}

inline PowerSeries l6lim_rhs(int which, const Rational& c, long d, long order) {
    switch (which) {
    case 1:
        return poch_mono_inf('q', c, d, 1, order).inverse();
    case 2:
        return poch_mono_inf('q', -c, d, 1, order) *
               poch_mono_inf('q', c * c, 2 * d, 1, order).inverse();
    case 3:
        return poch_mono_inf('q', c, d + 1, 2, order).inverse();
    default:
        throw usage_error("l6lim_rhs: which must be 1..3");
    }
}

// ---------------------------------------------------------------------------
// q-Gauss sum graded by t = x/(ab) along t = c q^d, and its terminating
// form as an exact rational identity.
// ---------------------------------------------------------------------------

inline PowerSeries qgauss_lhs(const Rational& a, const Rational& b, const Rational& c, long d,
                              long order) {
    const Rational abc = a * b * c;
    PowerSeries acc = PowerSeries::zero('q', 0, order);
    InvPochTable inv_q('q', Rational(1), 1, 1, order);
    for (long n = 0; n * d <= order; ++n) {
        PowerSeries t = qmono(c.pow(n), n * d, order);
        t = t * poch_mono('q', a, 0, 1, n, order) * poch_mono('q', b, 0, 1, n, order);
        t = t * inv_q.at(n);
        t = t * poch_mono('q', abc, d, 1, n, order).inverse();
        qident::detail::accumulate(acc, qident::detail::on_window(t, order));
    }
    return acc;
}

inline PowerSeries qgauss_rhs(const Rational& a, const Rational& b, const Rational& c, long d,
                              long order) {
    return poch_mono_inf('q', b * c, d, 1, order) * poch_mono_inf('q', a * c, d, 1, order) *
           poch_mono_inf('q', a * b * c, d, 1, order).inverse() *
           poch_mono_inf('q', c, d, 1, order).inverse();
}

// Terminating q-Gauss with b = q^{-M}: both sides exact rationals.
inline bool qgauss_terminating_check(long M, const Rational& a, const Rational& x,
                                     const Rational& q) {
    Rational lhs(0);
    Rational qm = q.pow(-M);
    for (long n = 0; n <= M; ++n) {
        Rational den = pochhammer(q, n, q) * pochhammer(x, n, q);
        if (den.is_zero()) throw singular_error("qgauss_terminating: denominator vanishes");
        Rational t = pochhammer(a, n, q) * pochhammer(qm, n, q) / den;
        t *= (x * q.pow(M) / a).pow(n);
        lhs += t;
    }
    Rational den = pochhammer(x, M, q);
    if (den.is_zero()) throw singular_error("qgauss_terminating: (x)_M vanishes");
    Rational rhs = pochhammer(x / a, M, q) / den;
    return lhs == rhs;
}

// ---------------------------------------------------------------------------
// Lemma 7: the unbounded-length multisum with Laurent numerator, q-graded at
// exact rational a, b, z.
// ---------------------------------------------------------------------------

// The partitions here have no length bound (only the valuation functional
// prunes them), so the sum walks the enumeration tree directly, carrying the
// partial product of inverse factors: one multiplication per node instead of
// one per part per partition.
inline PowerSeries l7_lhs(const Rational& a, const Rational& b, const Rational& z, long order) {
    if (a.is_zero() || b.is_zero()) throw usage_error("l7_lhs: a, b must be nonzero");
    InvPochTable inv_q2('q', Rational(1), 2, 2, order);
    Rational ab = a * b;
    PowerSeries acc = PowerSeries::zero('q', 0, order);
    acc += PowerSeries::one('q', order); // empty partition
    // state: last part p, valuation bound f and weight w of the prefix,
    // carried = numer(la_1) * prod inv (q^2;q^2)_{consecutive differences}
    std::function<void(long, long, long, const PowerSeries&)> walk =
        [&](long p, long f, long w, const PowerSeries& carried) {
            PowerSeries closed = (carried * inv_q2.at(p)).shifted(f).scaled(z.pow(w));
            qident::detail::accumulate(acc, qident::detail::on_window(closed, order));
            for (long nxt = 1; nxt <= p; ++nxt) {
                long df = nxt * (2 * nxt - 1);
                if (f + df > order) break;
                walk(nxt, f + df, w + nxt, carried * inv_q2.at(p - nxt));
            }
        };
    for (long m = 1; m <= order; ++m) {
        // first part m contributes valuation m after the Laurent fold
        PowerSeries numer = (poch_mono('q', a.inverse(), 0, 2, m, order) *
                             poch_mono('q', b.inverse(), 0, 2, m, order))
                                .scaled(ab.pow(m));
        walk(m, m, m, numer);
    }
    return acc;
}

inline PowerSeries l7_rhs(const Rational& a, const Rational& b, const Rational& z, long order) {
    return poch_mono_inf('q', a * z, 1, 2, order) * poch_mono_inf('q', b * z, 1, 2, order) *
           poch_mono_inf('q', z, 1, 2, order).inverse() *
           poch_mono_inf('q', a * b * z, 1, 2, order).inverse();
}

// Every exponent functional used to prune a multisum enumeration, keyed by
// the family it drives.  Soundness of the pruning needs each one to be
// non-decreasing under incrementing any single part; that property is
// enforced by tests over random partitions.
inline std::vector<std::pair<std::string, DegreeFn>> pruning_functionals() {
    auto n2x2 = [](const Partition& la) { return 2 * n2_stat(la); };
    return {
        {"T2/L7 valuation bound", detail_t2::valuation_bound},
        {"T2 z=q",
         [](const Partition& la) { return la.weight() + detail_t2::valuation_bound(la); }},
        {"family (11): 2 n2", n2x2},
        {"family (12): 2 n2 - 2 la1",
         [n2x2](const Partition& la) { return n2x2(la) - 2 * la.part(1); }},
        {"family (13): 2 n2 - la1^2",
         [n2x2](const Partition& la) { return n2x2(la) - la.part(1) * la.part(1); }},
        {"family (14): 2 n2 - la1^2 - la1",
         [n2x2](const Partition& la) { return n2x2(la) - la.part(1) * la.part(1) - la.part(1); }},
        {"family (15): 2 n2 - 2 la1^2 + la1",
         [n2x2](const Partition& la) {
             return n2x2(la) - 2 * la.part(1) * la.part(1) + la.part(1);
         }},
        {"family (16): 2 n2 - la1^2 + la1",
         [n2x2](const Partition& la) { return n2x2(la) - la.part(1) * la.part(1) + la.part(1); }},
        {"first limit: n(2 la)",
         [](const Partition& la) {
             long f = 0;
             for (long p : la.parts()) f += p * (2 * p - 1);
             return f;
         }},
        {"second limit: n(la)", [](const Partition& la) { return n_stat(la); }},
        {"z = q corollary: |la| + n(la)",
         [](const Partition& la) { return la.weight() + n_stat(la); }},
        {"chain weight: n2", [](const Partition& la) { return n2_stat(la); }},
        {"derived (56): 2|la| + 2 n2",
         [](const Partition& la) { return 2 * la.weight() + 2 * n2_stat(la); }},
        {"derived (57): |la| + n2",
         [](const Partition& la) { return la.weight() + n2_stat(la); }},
        {"limit line d=1: |la| + 2 n(la)",
         [](const Partition& la) { return la.weight() + 2 * n_stat(la); }},
    };
}

} // namespace qident::builders
