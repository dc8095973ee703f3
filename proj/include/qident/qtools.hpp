#pragma once

#include <set>
#include <vector>

#include "qident/errors.hpp"
#include "qident/partition.hpp"
#include "qident/power_series.hpp"
#include "qident/rational.hpp"

namespace qident {

inline constexpr long kInfinite = -1;

// A q-Pochhammer product specification: (argument; step)_count, count either
// finite or kInfinite.  For the infinite product the step must have strictly
// positive valuation so the factors converge coefficientwise; the argument
// itself may have valuation <= 0 (finitely many non-raising factors are
// multiplied in exactly, convergence is by valuation afterwards).
struct PochSpec {
    PowerSeries argument;
    long count; // >= 0 or kInfinite
    PowerSeries step;
};

namespace detail {

inline long series_lo_valuation(const PowerSeries& s, const char* what) {
    auto v = s.valuation();
    if (!v) throw usage_error(std::string(what) + ": zero series");
    return *v;
}

} // namespace detail

// Evaluates a Pochhammer product with every coefficient of the result exact
// on a window whose top is at least `order` (exactly `order` when the
// argument never dips below valuation 0).
inline PowerSeries poch(const PochSpec& spec, long order) {
    const char var = spec.step.var();
    long step_val = detail::series_lo_valuation(spec.step, "poch step");
    long count = spec.count;
    if (count == kInfinite) {
        if (step_val < 1)
            throw usage_error("poch: infinite product needs step valuation >= 1");
        // Factors beyond this index are 1 on every exponent <= order.
        long t = 0;
        while (spec.argument.lo() + t * step_val <= order) ++t;
        count = t;
    } else if (count < 0) {
        throw usage_error("poch: negative count");
    }
    PowerSeries acc = PowerSeries::one(var, order);
    PowerSeries xq = spec.argument;
    for (long t = 0; t < count; ++t) {
        acc = acc * one_minus(xq);
        if (t + 1 < count) xq = xq * spec.step;
    }
    return acc;
}

// (c * v^a ; v^M)_count in variable `var`, with windows arranged so the
// product is exact on [*, order] even when some exponents a + tM are
// negative.  count = kInfinite for the infinite product (needs M >= 1).
inline PowerSeries poch_mono(char var, const Rational& c, long a, long M, long count,
                             long order) {
    if (count == kInfinite) {
        if (M < 1) throw usage_error("poch_mono: infinite product needs M >= 1");
        count = 0;
        while (a + count * M <= order) ++count;
    }
    if (count < 0) throw usage_error("poch_mono: negative count");
    if (c.is_zero() || count == 0) return PowerSeries::one(var, order);
    long total_neg = 0;
    for (long t = 0; t < count; ++t)
        if (a + t * M < 0) total_neg += -(a + t * M);
    const long relh = order + total_neg;
    PowerSeries acc = PowerSeries::one(var, relh);
    for (long t = 0; t < count; ++t) {
        long e = a + t * M;
        long flo = std::min(0L, e);
        if (e - flo > relh) continue; // factor is 1 on the claimed window
        PowerSeries factor =
            PowerSeries::monomial(var, Rational(1), 0, flo, flo + relh) -
            PowerSeries::monomial(var, c, e, flo, flo + relh);
        acc = acc * factor;
    }
    return acc;
}

inline PowerSeries poch_mono_inf(char var, const Rational& c, long a, long M, long order) {
    return poch_mono(var, c, a, M, kInfinite, order);
}

enum class JacobiSide { sum, product };

// Jacobi triple product J(x, Q) for monomials x = c*v^a, Q = v^M with
// 0 < a < M:
//   sum side      1 + sum_{r>=1} (-1)^r [ x^r Q^C(r,2) + x^-r Q^C(r+1,2) ]
//   product side  (Q, x, Q/x; Q)_infinity
// Both sides converge coefficientwise because x and Q/x have positive
// valuation.
inline PowerSeries jacobi_triple_mono(char var, const Rational& c, long a, long M, long order,
                                      JacobiSide side) {
    if (c.is_zero()) throw usage_error("jacobi_triple: x must be a nonzero monomial");
    if (!(0 < a && a < M))
        throw usage_error("jacobi_triple: need 0 < deg(x) < deg(Q) for convergence");
    if (side == JacobiSide::product) {
        return poch_mono_inf(var, Rational(1), M, M, order) *
               poch_mono_inf(var, c, a, M, order) *
               poch_mono_inf(var, c.inverse(), M - a, M, order);
    }
    PowerSeries acc = PowerSeries::one(var, order);
    Rational sign(1);
    Rational cpow(1);
    for (long r = 1;; ++r) {
        sign = -sign;
        cpow *= c;
        long e1 = r * a + M * (r * (r - 1) / 2); // x^r Q^C(r,2)
        long e2 = -r * a + M * (r * (r + 1) / 2); // x^-r Q^C(r+1,2)
        if (e1 > order && e2 > order) break;
        if (e1 <= order)
            acc += PowerSeries::monomial(var, sign * cpow, e1, 0, order);
        if (e2 <= order)
            acc += PowerSeries::monomial(var, sign * cpow.inverse(), e2, 0, order);
    }
    return acc;
}

// Spec-facing overload: x and Q given as monomial series.
inline PowerSeries jacobi_triple(const PowerSeries& x, const PowerSeries& Q, long order,
                                 JacobiSide side) {
    auto mono = [](const PowerSeries& s, const char* what) {
        auto v = s.valuation();
        if (!v) throw usage_error(std::string(what) + ": zero series is not a monomial");
        for (long j = *v + 1; j <= s.hi(); ++j)
            if (!s.coefficient(j).is_zero())
                throw usage_error(std::string(what) + ": not a monomial");
        return std::make_pair(s.coefficient(*v), *v);
    };
    auto [c, a] = mono(x, "jacobi_triple x");
    auto [cq, M] = mono(Q, "jacobi_triple Q");
    if (!cq.is_one()) throw usage_error("jacobi_triple: Q must be a plain power of the variable");
    if (x.var() != Q.var()) throw usage_error("jacobi_triple: variable mismatch");
    return jacobi_triple_mono(x.var(), c, a, M, order, side);
}

// prod over n >= 1, n == r (mod m) for some r in `residues`, of 1/(1 - q^n),
// truncated at `order`.  The coefficient of q^N counts partitions of N into
// parts from the allowed congruence classes.
inline PowerSeries congruence_product(const std::set<long>& residues, long m, long order,
                                      char var = 'q') {
    if (residues.empty()) throw precondition_error("congruence_product: empty residue set");
    for (long r : residues)
        if (r < 1 || r > m - 1)
            throw precondition_error("congruence_product: residues must lie in 1..m-1");
    PowerSeries acc = PowerSeries::one(var, order);
    for (long n = 1; n <= order; ++n) {
        if (!residues.count(((n % m) + m) % m)) continue;
        PowerSeries geom = PowerSeries::zero(var, 0, order);
        for (long j = 0; j * n <= order; ++j)
            geom += PowerSeries::monomial(var, Rational(1), j * n, 0, order);
        acc = acc * geom;
    }
    return acc;
}

// Normalizes a list of residues to the set {r mod m} with plus/minus closure
// helpers used by the Rogers-Ramanujan catalogs.
inline std::set<long> pm_residues(const std::vector<long>& rs, long m) {
    std::set<long> out;
    for (long r : rs) {
        long a = ((r % m) + m) % m;
        long b = ((-r % m) + m) % m;
        if (a != 0) out.insert(a);
        if (b != 0) out.insert(b);
    }
    return out;
}

// Checks sum_{j=0}^{m} (-1)^j [m; j] = (q; q^2)_{m/2} for even m and 0 for
// odd m, exactly over the given carrier (a polynomial window or an exact
// rational point).
template <class K>
bool alt_qbinom_sum_check(long m, const K& q) {
    K sum = carrier_zero(q);
    for (long j = 0; j <= m; ++j) {
        K t = qbinom(m, j, q);
        if (j % 2 == 1) t = carrier_zero(q) - t;
        sum = sum + t;
    }
    K expected = (m % 2 == 0) ? pochhammer(q, m / 2, q * q) : carrier_zero(q);
    if constexpr (is_series_carrier<K>) {
        return sum.equals_on_shared_window(expected);
    } else {
        return sum == expected;
    }
}

// q-binomial theorem (z)_n = sum_m [n; m] (-1)^m z^m q^C(m,2) at exact
// rational points.
inline bool qbinom_theorem_check(long n, const Rational& z, const Rational& q) {
    Rational lhs = pochhammer(z, n, q);
    Rational rhs(0);
    for (long m = 0; m <= n; ++m) {
        Rational t = qbinom(n, m, q) * z.pow(m) * q.pow(m * (m - 1) / 2);
        if (m % 2 == 1) t = -t;
        rhs += t;
    }
    return lhs == rhs;
}

} // namespace qident
