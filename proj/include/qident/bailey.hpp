#pragma once

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <string>

#include "qident/errors.hpp"
#include "qident/partition.hpp"
#include "qident/qtools.hpp"

namespace qident {

// Bailey pairs over the half-power base: everything lives in the variable s
// with the Bailey base q = s^2, so q^{1/2} = s and no exponent is ever
// fractional.  The parameter a is the monomial s^a_exp (the classical uses
// are a = 1 and a = q, i.e. a_exp 0 and 2).
//
// Family invariant: alpha(n, order) and beta(n, order) return series with no
// terms below exponent 0, claimed on a window containing [0, order].  The
// defining relation is beta_n = sum_{r=0..n} alpha_r / ((q)_{n-r} (aq)_{n+r}).
struct BaileyPair {
    std::string label;
    long a_exp = 0;
    std::function<PowerSeries(long, long)> alpha;
    std::function<PowerSeries(long, long)> beta;
    bool validated = false;
};

enum class TransformMode { i, ii, iii };
enum class ChainMode { an1, an2, an3 };

namespace detail {

// Normalizes a valuation-complete series (no nonzero terms below exponent 0)
// to the exact claim [0, order].  Tracked zeros below 0 are trimmed away.
inline PowerSeries on_window(PowerSeries f, long order) {
    if (f.lo() < 0) {
        for (long j = f.lo(); j < 0; ++j)
            if (!f.coefficient(j).is_zero())
                throw usage_error("on_window: nonzero negative exponent survives");
        f = f.restricted(0, f.hi());
    }
    f = f.padded_down_to(0);
    if (f.hi() < order)
        throw inconclusive_error("series window ends at " + std::to_string(f.hi()) +
                                     ", need order " + std::to_string(order),
                                 order);
    return f.hi() == order ? f : f.restricted(0, order);
}

// Accumulate a term whose window floor is a proven valuation bound.
inline void accumulate(PowerSeries& acc, const PowerSeries& term) {
    if (term.lo() < acc.lo())
        throw usage_error("accumulate: term window dips below the target window");
    acc += term.padded_down_to(acc.lo());
}

// Memoizing wrapper for an indexed family, safe for concurrent readers.
class FamilyCache {
public:
    explicit FamilyCache(std::function<PowerSeries(long, long)> fn) : fn_(std::move(fn)) {}
    PowerSeries operator()(long n, long order) const {
        std::lock_guard<std::mutex> lk(state_->mu);
        auto it = state_->memo.find({n, order});
        if (it != state_->memo.end()) return it->second;
        PowerSeries v = fn_(n, order);
        state_->memo.emplace(std::make_pair(n, order), v);
        return v;
    }

private:
    struct State {
        std::mutex mu;
        std::map<std::pair<long, long>, PowerSeries> memo;
    };
    std::function<PowerSeries(long, long)> fn_;
    std::shared_ptr<State> state_ = std::make_shared<State>();
};

inline PowerSeries poch_s2(const Rational& c, long a, long count, long order) {
    return poch_mono('s', c, a, 2, count, order);
}

inline PowerSeries inv_poch_s2(const Rational& c, long a, long count, long order) {
    return poch_s2(c, a, count, order).inverse();
}

} // namespace detail

struct PairCheckResult {
    bool pass = true;
    long first_failing_n = -1;
};

// Verifies the defining relation for n = 0..n_max coefficientwise on
// [0, order] in s.
inline PairCheckResult check_pair(const BaileyPair& p, long n_max, long order) {
    for (long n = 0; n <= n_max; ++n) {
        PowerSeries lhs = detail::on_window(p.beta(n, order), order);
        PowerSeries rhs = PowerSeries::zero('s', 0, order);
        for (long r = 0; r <= n; ++r) {
            PowerSeries term = p.alpha(r, order) *
                               detail::inv_poch_s2(Rational(1), 2, n - r, order) *
                               detail::inv_poch_s2(Rational(1), p.a_exp + 2, n + r, order);
            detail::accumulate(rhs, detail::on_window(term, order));
        }
        if (first_difference_on(lhs, rhs, 0, order).has_value())
            return PairCheckResult{false, n};
    }
    return PairCheckResult{true, -1};
}

// Runs check_pair and marks the pair usable by chains; chains refuse
// unvalidated pairs so convention bugs fail fast.
inline void validate_pair(BaileyPair& p, long n_max, long order) {
    PairCheckResult r = check_pair(p, n_max, order);
    if (!r.pass)
        throw precondition_error("Bailey pair '" + p.label +
                                 "' fails its defining relation at n = " +
                                 std::to_string(r.first_failing_n));
    p.validated = true;
}

// The two pairs from Slater's list used here, with q replaced by q^2 and
// a = 1 (resp. a = q), expressed in the base s:
//   pair 1: alpha_n = s^{2n^2}(s^n + s^{-n}), beta_n = 1/(s; s)_{2n}, a_exp = 0
//   pair 2: alpha_n = s^{2n^2+n}(1 + s^{2n+1})/(1 + s),
//           beta_n = 1/((s^3; s^2)_n (s^2; s^2)_n), a_exp = 2
// The displayed alpha_0 of pair 1 evaluates to 2, but the relation at n = 0
// forces beta_0 = alpha_0 = 1, so alpha_0 = 1 here; check_pair enforces it.
inline BaileyPair slater_pair(int which, long validation_order = 40) {
    BaileyPair p;
    if (which == 1) {
        p.label = "slater-pair-1";
        p.a_exp = 0;
        p.alpha = detail::FamilyCache([](long n, long ord) {
            if (n == 0) return PowerSeries::one('s', ord);
            PowerSeries a = PowerSeries::zero('s', 0, ord);
            long e1 = 2 * n * n - n, e2 = 2 * n * n + n;
            if (e1 <= ord) a += PowerSeries::monomial('s', Rational(1), e1, 0, ord);
            if (e2 <= ord) a += PowerSeries::monomial('s', Rational(1), e2, 0, ord);
            return a;
        });
        p.beta = detail::FamilyCache([](long n, long ord) {
            return detail::on_window(detail::inv_poch_s2(Rational(1), 1, n, ord) *
                                         detail::inv_poch_s2(Rational(1), 2, n, ord),
                                     ord);
        });
    } else if (which == 2) {
        p.label = "slater-pair-2";
        p.a_exp = 2;
        p.alpha = detail::FamilyCache([](long n, long ord) {
            PowerSeries num = PowerSeries::zero('s', 0, ord);
            long e1 = 2 * n * n + n, e2 = 2 * n * n + 3 * n + 1;
            if (e1 <= ord) num += PowerSeries::monomial('s', Rational(1), e1, 0, ord);
            if (e2 <= ord) num += PowerSeries::monomial('s', Rational(1), e2, 0, ord);
            return detail::on_window(num * detail::poch_s2(Rational(-1), 1, 1, ord).inverse(),
                                     ord);
        });
        p.beta = detail::FamilyCache([](long n, long ord) {
            return detail::on_window(detail::inv_poch_s2(Rational(1), 3, n, ord) *
                                         detail::inv_poch_s2(Rational(1), 2, n, ord),
                                     ord);
        });
    } else {
        throw usage_error("slater_pair: which must be 1 or 2");
    }
    validate_pair(p, 8, validation_order);
    return p;
}

// Bailey's lemma: the image of a pair under any of the three classical
// transforms is again a pair relative to the same a.
//   (i)   alpha'_n = a^n q^{n^2} alpha_n
//   (ii)  alpha'_n = (-q^{1/2})_n / (-a q^{1/2})_n a^n q^{n^2/2} alpha_n
//   (iii) alpha'_n = a^{n/2} q^{n^2/2} alpha_n    (needs a_exp even)
// with the matching beta' sums.  The image is validated before it is
// returned.
inline BaileyPair transform(const BaileyPair& p, TransformMode mode, long validation_order = 40) {
    if (!p.validated) throw precondition_error("transform: refusing an unvalidated pair");
    if (p.a_exp < 0) throw usage_error("transform: negative a exponent");
    const long a = p.a_exp;
    auto alpha = p.alpha;
    auto beta = p.beta;
    BaileyPair out;
    out.a_exp = a;
    switch (mode) {
    case TransformMode::i: {
        out.label = p.label + "+i";
        out.alpha = detail::FamilyCache([alpha, a](long n, long ord) {
            return detail::on_window(alpha(n, ord).shifted(n * a + 2 * n * n), ord);
        });
        out.beta = detail::FamilyCache([beta, a](long n, long ord) {
            PowerSeries acc = PowerSeries::zero('s', 0, ord);
            for (long j = 0; j <= n; ++j) {
                long e = j * a + 2 * j * j;
                if (e > ord) break;
                PowerSeries t = beta(j, ord).shifted(e) *
                                detail::inv_poch_s2(Rational(1), 2, n - j, ord);
                detail::accumulate(acc, detail::on_window(t, ord));
            }
            return acc;
        });
        break;
    }
    case TransformMode::ii: {
        // The -aq^{1/2} Pochhammer divides the whole beta' sum at index n,
        // exactly as in mode iii; relation preservation forces that reading
        // and check_pair would reject the per-summand one.
        out.label = p.label + "+ii";
        out.alpha = detail::FamilyCache([alpha, a](long n, long ord) {
            PowerSeries t = detail::poch_s2(Rational(-1), 1, n, ord) *
                            detail::inv_poch_s2(Rational(-1), a + 1, n, ord) *
                            alpha(n, ord).shifted(n * a + n * n);
            return detail::on_window(t, ord);
        });
        out.beta = detail::FamilyCache([beta, a](long n, long ord) {
            PowerSeries acc = PowerSeries::zero('s', 0, ord);
            for (long j = 0; j <= n; ++j) {
                long e = j * a + j * j;
                if (e > ord) break;
                PowerSeries t = detail::poch_s2(Rational(-1), 1, j, ord) *
                                beta(j, ord).shifted(e) *
                                detail::inv_poch_s2(Rational(1), 2, n - j, ord);
                detail::accumulate(acc, detail::on_window(t, ord));
            }
            return detail::on_window(acc * detail::inv_poch_s2(Rational(-1), a + 1, n, ord),
                                     ord);
        });
        break;
    }
    case TransformMode::iii: {
        out.label = p.label + "+iii";
        if (a % 2 != 0)
            throw usage_error("transform iii: a^{n/2} needs an even power of s for a");
        const long h = (a + 2) / 2; // (aq)^{1/2} = s^h
        out.alpha = detail::FamilyCache([alpha, a](long n, long ord) {
            return detail::on_window(alpha(n, ord).shifted(n * (a / 2) + n * n), ord);
        });
        out.beta = detail::FamilyCache([beta, a, h](long n, long ord) {
            PowerSeries acc = PowerSeries::zero('s', 0, ord);
            for (long j = 0; j <= n; ++j) {
                long e = j * (a / 2) + j * j;
                if (e > ord) break;
                PowerSeries t = detail::poch_s2(Rational(-1), h, j, ord) *
                                beta(j, ord).shifted(e) *
                                detail::inv_poch_s2(Rational(1), 2, n - j, ord);
                detail::accumulate(acc, detail::on_window(t, ord));
            }
            return detail::on_window(acc * detail::inv_poch_s2(Rational(-1), h, n, ord), ord);
        });
        break;
    }
    }
    validate_pair(out, 6, validation_order);
    return out;
}

namespace detail {

// Shift exponent of the n-th summand on each side of the limiting relations.
inline long limit_shift(TransformMode mode, long a, long n) {
    switch (mode) {
    case TransformMode::i:
        return n * a + 2 * n * n;
    case TransformMode::ii:
        return n * a + n * n;
    case TransformMode::iii:
        return n * (a / 2) + n * n;
    }
    throw usage_error("limit_shift: bad mode");
}

} // namespace detail

// The n -> infinity limits of the transformed relations:
//   (i)   sum_n a^n q^{n^2} beta_n = (aq)_inf^-1 sum_r a^r q^{r^2} alpha_r
//   (ii)  sum_n a^n q^{n^2/2} (-q^{1/2})_n beta_n
//          = ((-a q^{1/2})_inf / (aq)_inf) sum_r (-q^{1/2})_r / (-a q^{1/2})_r a^r q^{r^2/2} alpha_r
//   (iii) sum_n a^{n/2} q^{n^2/2} (-(aq)^{1/2})_n beta_n
//          = ((-(aq)^{1/2})_inf / (aq)_inf) sum_r a^{r/2} q^{r^2/2} alpha_r
// verified coefficientwise on the s-window [0, order].
inline bool limit_identity_check(const BaileyPair& p, TransformMode mode, long order) {
    if (!p.validated) throw precondition_error("limit_identity_check: unvalidated pair");
    const long a = p.a_exp;
    if (mode == TransformMode::iii && a % 2 != 0)
        throw usage_error("limit iii: a^{n/2} needs an even power of s for a");
    const long h = (a + 2) / 2;

    PowerSeries lhs = PowerSeries::zero('s', 0, order);
    long prev = -1;
    for (long n = 0;; ++n) {
        long e = detail::limit_shift(mode, a, n);
        if (n > 0 && e <= prev)
            throw divergence_error("limit_identity_check: summand fails to raise valuation");
        prev = e;
        if (e > order) break;
        PowerSeries t = p.beta(n, order).shifted(e);
        if (mode == TransformMode::ii) t = t * detail::poch_s2(Rational(-1), 1, n, order);
        if (mode == TransformMode::iii) t = t * detail::poch_s2(Rational(-1), h, n, order);
        detail::accumulate(lhs, detail::on_window(t, order));
    }

    PowerSeries rsum = PowerSeries::zero('s', 0, order);
    for (long r = 0;; ++r) {
        long e = detail::limit_shift(mode, a, r);
        if (e > order) break;
        PowerSeries t = p.alpha(r, order).shifted(e);
        if (mode == TransformMode::ii)
            t = t * detail::poch_s2(Rational(-1), 1, r, order) *
                detail::inv_poch_s2(Rational(-1), a + 1, r, order);
        detail::accumulate(rsum, detail::on_window(t, order));
    }
    PowerSeries rhs = rsum * poch_mono_inf('s', Rational(1), a + 2, 2, order).inverse();
    if (mode == TransformMode::ii)
        rhs = rhs * poch_mono_inf('s', Rational(-1), a + 1, 2, order);
    if (mode == TransformMode::iii)
        rhs = rhs * poch_mono_inf('s', Rational(-1), h, 2, order);

    return !first_difference_on(detail::on_window(lhs, order), detail::on_window(rhs, order), 0,
                                order)
                .has_value();
}

namespace detail {

inline long chain_shift(ChainMode mode, long a, long k, long r) {
    switch (mode) {
    case ChainMode::an1:
        return k * r * a + 2 * k * r * r;
    case ChainMode::an2:
        return k * r * a + k * r * r;
    case ChainMode::an3:
        return k * r * (a / 2) + k * r * r;
    }
    throw usage_error("chain_shift: bad mode");
}

} // namespace detail

// The r-sum side of the k-fold iterated relations, prefactors included:
//   an1: (aq)_inf^-1 sum_r a^{kr} q^{kr^2} alpha_r
//   an2: ((-aq^{1/2})_inf / (aq)_inf) sum_r ((-q^{1/2})_r / (-aq^{1/2})_r)^k a^{kr} q^{kr^2/2} alpha_r
//   an3: ((-(aq)^{1/2})_inf / (aq)_inf) sum_r a^{kr/2} q^{kr^2/2} alpha_r
// The an2 display prints (-q^{1/2})_inf in the prefactor; iterating the
// limiting relation gives (-aq^{1/2})_inf (the two agree exactly when a = 1,
// the only case the display is used with), and the k = 1 instance must
// reduce to the limiting relation, which pins the a-dependent form.
inline PowerSeries chain_r_sum(const BaileyPair& p, long k, ChainMode mode, long order) {
    if (!p.validated) throw precondition_error("chain_r_sum: unvalidated pair");
    const long a = p.a_exp;
    if (mode == ChainMode::an3 && a % 2 != 0)
        throw usage_error("an3: a^{kr/2} needs an even power of s for a");
    const long h = (a + 2) / 2;
    PowerSeries sum = PowerSeries::zero('s', 0, order);
    for (long r = 0;; ++r) {
        long e = detail::chain_shift(mode, a, k, r);
        if (r > 0 && e > order) break;
        PowerSeries t = p.alpha(r, order).shifted(e);
        if (mode == ChainMode::an2) {
            PowerSeries ratio = detail::poch_s2(Rational(-1), 1, r, order) *
                                detail::inv_poch_s2(Rational(-1), a + 1, r, order);
            PowerSeries rk = PowerSeries::one('s', order);
            for (long i = 0; i < k; ++i) rk = rk * ratio;
            t = t * rk;
        }
        detail::accumulate(sum, detail::on_window(t, order));
    }
    PowerSeries out = sum * poch_mono_inf('s', Rational(1), a + 2, 2, order).inverse();
    if (mode == ChainMode::an2) out = out * poch_mono_inf('s', Rational(-1), a + 1, 2, order);
    if (mode == ChainMode::an3) out = out * poch_mono_inf('s', Rational(-1), h, 2, order);
    return detail::on_window(out, order);
}

// The multisum side of the k-fold iterated relations:
//   an1: sum_{l(la)<=k} a^{|la|} q^{n2(la)} (q)_{la_k} / (q)_la beta_{la_k}
//   an2: sum a^{|la|} q^{n2/2} prod_{i<=k}(-q^{1/2})_{la_i} / prod_{i<=k-1}(-aq^{1/2})_{la_i}
//            * (q)_{la_k} / (q)_la beta_{la_k}
//   an3: sum a^{|la|/2} q^{n2/2} (-(aq)^{1/2})_{la_k} (q)_{la_k} / (q)_la beta_{la_k}
inline PowerSeries chain_lambda_sum(const BaileyPair& p, long k, ChainMode mode, long order) {
    if (!p.validated) throw precondition_error("chain_lambda_sum: unvalidated pair");
    const long a = p.a_exp;
    if (mode == ChainMode::an3 && a % 2 != 0)
        throw usage_error("an3: a^{|la|/2} needs an even power of s for a");
    const long h = (a + 2) / 2;

    auto shift_exp = [&](const Partition& la) {
        long w = la.weight(), n2 = n2_stat(la);
        switch (mode) {
        case ChainMode::an1:
            return w * a + 2 * n2;
        case ChainMode::an2:
            return w * a + n2;
        case ChainMode::an3:
            return w * (a / 2) + n2;
        }
        throw usage_error("chain_lambda_sum: bad mode");
    };

    // Memoized (s^2; s^2)_j^{-1} building blocks for (q)_la.
    std::vector<PowerSeries> inv_s2;
    auto inv_s2_at = [&](long j) -> const PowerSeries& {
        while (long(inv_s2.size()) <= j)
            inv_s2.push_back(detail::inv_poch_s2(Rational(1), 2, long(inv_s2.size()), order));
        return inv_s2[size_t(j)];
    };

    PowerSeries acc = PowerSeries::zero('s', 0, order);
    enumerate_bounded_visit(k, shift_exp, order, [&](const Partition& la) {
        long lak = la.part(k);
        PowerSeries t = p.beta(lak, order).shifted(shift_exp(la));
        t = t * detail::poch_s2(Rational(1), 2, lak, order); // (q)_{la_k}
        for (long i = 1; i <= la.length(); ++i)
            t = t * inv_s2_at(la.part(i) - la.part(i + 1)); // 1/(q)_la over part differences
        if (mode == ChainMode::an2) {
            for (long i = 1; i <= k; ++i)
                t = t * detail::poch_s2(Rational(-1), 1, la.part(i), order);
            for (long i = 1; i <= k - 1; ++i)
                t = t * detail::inv_poch_s2(Rational(-1), a + 1, la.part(i), order);
        }
        if (mode == ChainMode::an3)
            t = t * detail::poch_s2(Rational(-1), h, lak, order);
        detail::accumulate(acc, detail::on_window(t, order));
        return true;
    });
    return acc;
}

// Coefficientwise check of the k-fold iterated identity on [0, order].
inline bool iterated_identity_check(const BaileyPair& p, long k, ChainMode mode, long order) {
    if (k < 1) throw usage_error("iterated_identity_check: k must be positive");
    PowerSeries lhs = chain_r_sum(p, k, mode, order);
    PowerSeries rhs = chain_lambda_sum(p, k, mode, order);
    return !first_difference_on(lhs, rhs, 0, order).has_value();
}

// ---------------------------------------------------------------------------
// The three multisum identities obtained by feeding the Slater pairs into
// the iterated relations (written in the printed variable q, which is the
// chain base s here since the pairs are used with q -> q^2).
//
//   55: sum_{l(la)<=k} q^{n2} (-q;q^2)_{la_k} / ((q;q^2)_{la_k} (q^2;q^2)_la)
//        = (q^{2k+4}, -q^{k+1}, -q^{k+3}; q^{2k+4})_inf / ((q)_inf (-q^2;q^2)_inf)
//   56: sum q^{2|la|+2n2} / ((q;q^2)_{la_k + 1} (q^2;q^2)_la)
//        = (q^{4k+4}, -q^{4k+3}, -q; q^{4k+4})_inf / (q^2;q^2)_inf
//   57: sum q^{|la|+n2} (-q^2;q^2)_{la_k} / ((q;q^2)_{la_k + 1} (q^2;q^2)_la)
//        = (q^{2k+4}, -q^{2k+3}, -q; q^{2k+4})_inf / ((q)_inf (-q;q^2)_inf)
//
// 56 and 57 are stated with (q;q^2)_{la_k + 1}: the chain derivation produces
// (q^3;q^2)_{la_k} = (q;q^2)_{la_k+1}/(1-q), and only the la_k+1 reading is
// consistent with the displayed product sides.
// ---------------------------------------------------------------------------

inline PowerSeries derived_multisum(int which, long k, long order) {
    auto functional = [which, k](const Partition& la) {
        long n2 = n2_stat(la), w = la.weight();
        switch (which) {
        case 55: return n2;
        case 56: return 2 * w + 2 * n2;
        case 57: return w + n2;
        default: throw usage_error("derived_multisum: which must be 55..57");
        }
    };
    std::vector<PowerSeries> inv_q2, inv_q_odd; // (q^2;q^2)_j^-1 and (q;q^2)_j^-1
    auto inv_q2_at = [&](long j) -> const PowerSeries& {
        while (long(inv_q2.size()) <= j)
            inv_q2.push_back(poch_mono('q', Rational(1), 2, 2, long(inv_q2.size()), order).inverse());
        return inv_q2[size_t(j)];
    };
    auto inv_q_odd_at = [&](long j) -> const PowerSeries& {
        while (long(inv_q_odd.size()) <= j)
            inv_q_odd.push_back(
                poch_mono('q', Rational(1), 1, 2, long(inv_q_odd.size()), order).inverse());
        return inv_q_odd[size_t(j)];
    };
    PowerSeries acc = PowerSeries::zero('q', 0, order);
    enumerate_bounded_visit(k, functional, order, [&](const Partition& la) {
        long lak = la.part(k);
        PowerSeries t = PowerSeries::monomial('q', Rational(1), functional(la), 0, order);
        for (long i = 1; i <= la.length(); ++i)
            t = t * inv_q2_at(la.part(i) - la.part(i + 1));
        switch (which) {
        case 55:
            t = t * inv_q_odd_at(lak) * poch_mono('q', Rational(-1), 1, 2, lak, order);
            break;
        case 56:
            t = t * inv_q_odd_at(lak + 1);
            break;
        case 57:
            t = t * inv_q_odd_at(lak + 1) * poch_mono('q', Rational(-1), 2, 2, lak, order);
            break;
        }
        detail::accumulate(acc, detail::on_window(t, order));
        return true;
    });
    return acc;
}

inline PowerSeries derived_product(int which, long k, long order) {
    auto triple = [&](long xexp, long M) {
        return poch_mono_inf('q', Rational(1), M, M, order) *
               poch_mono_inf('q', Rational(-1), xexp, M, order) *
               poch_mono_inf('q', Rational(-1), M - xexp, M, order);
    };
    switch (which) {
    case 55:
        return triple(k + 1, 2 * k + 4) *
               poch_mono_inf('q', Rational(1), 1, 1, order).inverse() *
               poch_mono_inf('q', Rational(-1), 2, 2, order).inverse();
    case 56:
        return triple(4 * k + 3, 4 * k + 4) *
               poch_mono_inf('q', Rational(1), 2, 2, order).inverse();
    case 57:
        return triple(2 * k + 3, 2 * k + 4) *
               poch_mono_inf('q', Rational(1), 1, 1, order).inverse() *
               poch_mono_inf('q', Rational(-1), 1, 2, order).inverse();
    default:
        throw usage_error("derived_product: which must be 55..57");
    }
}

struct DerivedIdentityResult {
    bool multisum_equals_product = false;
    bool multisum_equals_chain = false;
    bool pass() const { return multisum_equals_product && multisum_equals_chain; }
};

// Verifies the printed multisum = product identity and, independently, that
// the multisum coincides with the corresponding Bailey-chain lambda sum.
// Pair 2's beta carries (q^3; q^2)_{la_k}, so its chain sums equal (1-q)
// times the (q;q^2)_{la_k+1} multisums of 56 and 57.
inline DerivedIdentityResult derived_identity_check(int which, long k, long order) {
    PowerSeries lhs = derived_multisum(which, k, order);
    PowerSeries rhs = derived_product(which, k, order);
    BaileyPair pair = slater_pair(which == 55 ? 1 : 2, std::min<long>(order, 40));
    ChainMode mode = which == 55 ? ChainMode::an2 : (which == 56 ? ChainMode::an1 : ChainMode::an3);
    PowerSeries chain = chain_lambda_sum(pair, k, mode, order).relabeled('q');
    PowerSeries lhs_chain_form =
        which == 55 ? lhs : lhs * poch_mono('q', Rational(1), 1, 1, 1, order);
    DerivedIdentityResult res;
    res.multisum_equals_product = !first_difference_on(lhs, rhs, 0, order).has_value();
    res.multisum_equals_chain =
        !first_difference_on(lhs_chain_form, chain, 0, order).has_value();
    return res;
}

} // namespace qident
