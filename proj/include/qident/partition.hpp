#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <type_traits>
#include <vector>

#include <json.hpp>

#include "qident/errors.hpp"
#include "qident/power_series.hpp"
#include "qident/rational.hpp"

namespace qident {

// Integer partition: weakly decreasing positive parts.  The empty partition
// is the empty sequence.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<long> parts) : p_(std::move(parts)) {
        for (size_t i = 0; i < p_.size(); ++i) {
            if (p_[i] <= 0) throw precondition_error("Partition: parts must be positive");
            if (i > 0 && p_[i] > p_[i - 1])
                throw precondition_error("Partition: parts must be weakly decreasing");
        }
    }
    Partition(std::initializer_list<long> parts) : Partition(std::vector<long>(parts)) {}

    const std::vector<long>& parts() const { return p_; }
    long length() const { return long(p_.size()); }
    long weight() const {
        long w = 0;
        for (long p : p_) w += p;
        return w;
    }
    // i is 1-based; parts beyond the length are 0.
    long part(long i) const { return (i >= 1 && i <= length()) ? p_[size_t(i - 1)] : 0; }
    bool empty() const { return p_.empty(); }

    Partition conjugate() const {
        std::vector<long> c;
        if (!p_.empty()) {
            c.assign(size_t(p_[0]), 0);
            for (long p : p_)
                for (long j = 0; j < p; ++j) c[size_t(j)]++;
        }
        return Partition(std::move(c));
    }

    // Multiplicity of the value v among the parts.
    long multiplicity(long v) const {
        return long(std::count(p_.begin(), p_.end(), v));
    }

    Partition scaled(long m) const {
        std::vector<long> s = p_;
        for (long& p : s) p *= m;
        return Partition(std::move(s));
    }

    bool contains(const Partition& mu) const {
        if (mu.length() > length()) return false;
        for (long i = 1; i <= mu.length(); ++i)
            if (part(i) < mu.part(i)) return false;
        return true;
    }

    friend bool operator==(const Partition& a, const Partition& b) { return a.p_ == b.p_; }
    friend bool operator!=(const Partition& a, const Partition& b) { return a.p_ != b.p_; }
    // Lexicographic on the part sequences.
    friend bool operator<(const Partition& a, const Partition& b) { return a.p_ < b.p_; }

    nlohmann::json to_json() const { return nlohmann::json(p_); }

    std::string str() const {
        std::string s = "(";
        for (size_t i = 0; i < p_.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(p_[i]);
        }
        return s + ")";
    }

private:
    std::vector<long> p_;
};

struct PartitionStatistics {
    long weight = 0;
    long length = 0;
    Partition conjugate;
    std::map<long, long> mult; // value -> multiplicity, positive values only
    long n_stat = 0;           // sum of C(part, 2) over the parts
    long n2 = 0;               // sum of squared parts
};

inline PartitionStatistics statistics(const Partition& la) {
    PartitionStatistics st;
    st.weight = la.weight();
    st.length = la.length();
    st.conjugate = la.conjugate();
    for (long p : la.parts()) {
        st.mult[p]++;
        st.n_stat += p * (p - 1) / 2;
        st.n2 += p * p;
    }
    return st;
}

inline long n_stat(const Partition& la) {
    long s = 0;
    for (long p : la.parts()) s += p * (p - 1) / 2;
    return s;
}

inline long n2_stat(const Partition& la) {
    long s = 0;
    for (long p : la.parts()) s += p * p;
    return s;
}

// The other classical n-statistic, sum of (i-1)*part_i.  Kept only so the
// principal-specialization check can decide between the two conventions;
// nothing else uses it implicitly.
inline long n_stat_row_weighted(const Partition& la) {
    long s = 0;
    for (long i = 1; i <= la.length(); ++i) s += (i - 1) * la.part(i);
    return s;
}

// ---------------------------------------------------------------------------
// Carrier-generic arithmetic: every q-product below works both at an exact
// rational point and over a truncated series.
// ---------------------------------------------------------------------------

template <class K>
inline constexpr bool is_series_carrier = std::is_same_v<K, PowerSeries>;

template <class K>
K carrier_one(const K& like) {
    if constexpr (is_series_carrier<K>) {
        return PowerSeries::one(like.var(), like.hi());
    } else {
        (void)like;
        return Rational(1);
    }
}

template <class K>
K carrier_zero(const K& like) {
    if constexpr (is_series_carrier<K>) {
        return PowerSeries::zero(like.var(), std::min(0L, like.lo()), like.hi());
    } else {
        (void)like;
        return Rational(0);
    }
}

// 1 - u, with a window that does not shrink u's.
template <class K>
K one_minus(const K& u) {
    if constexpr (is_series_carrier<K>) {
        return PowerSeries::monomial(u.var(), Rational(1), 0, std::min(0L, u.lo()), u.hi()) - u;
    } else {
        return Rational(1) - u;
    }
}

template <class K>
K carrier_div(const K& num, const K& den) {
    if constexpr (is_series_carrier<K>) {
        return num * den.inverse();
    } else {
        if (den.is_zero())
            throw singular_error("singular specialization: denominator vanishes");
        return num / den;
    }
}

// Finite q-Pochhammer (x; Q)_count = prod_{t=0..count-1} (1 - x Q^t).
template <class K>
K pochhammer(const K& x, long count, const K& Q) {
    K acc = carrier_one(Q);
    K xq = x;
    for (long t = 0; t < count; ++t) {
        acc = acc * one_minus(xq);
        if (t + 1 < count) xq = xq * Q;
    }
    return acc;
}

// (x)_la = (x)_{la1-la2} (x)_{la2-la3} ... with the trailing difference
// taken against 0.
template <class K>
K pochhammer_lambda(const K& x, const Partition& la, const K& q) {
    K acc = carrier_one(q);
    for (long i = 1; i <= la.length(); ++i)
        acc = acc * pochhammer(x, la.part(i) - la.part(i + 1), q);
    return acc;
}

// Generalized q-binomial [n; la] = (q)_n / ((q)_{n-la1} (q)_la), zero when
// la1 > n.  For a single-part la this is the classical Gaussian binomial.
template <class K>
K gen_qbinom(long n, const Partition& la, const K& q) {
    if (la.part(1) > n) return carrier_zero(q);
    K num = pochhammer(q, n, q);
    K den = pochhammer(q, n - la.part(1), q) * pochhammer_lambda(q, la, q);
    return carrier_div(num, den);
}

// Classical [n; m] via a one-part partition (or empty for m = 0).
template <class K>
K qbinom(long n, long m, const K& q) {
    if (m < 0 || m > n) return carrier_zero(q);
    if (m == 0) return carrier_one(q);
    return gen_qbinom(n, Partition{m}, q);
}

enum class CoefficientKind { c, d, c_k, d_k };

// Partition-indexed coefficients attached to the summation formulas:
//   c:   prod_i (q; q^2)_{m_i/2}          (needs every multiplicity even)
//   d:   prod_i (q)_{m_i} / (q^2; q^2)_{floor(m_i/2)}
//   c_k: prod_{i=1..k-1} (q; q^2)_{m_i/2} (needs m_i even for i < k)
//   d_k: prod_{i=1..k-1} (q)_{m_i} / (q^2; q^2)_{floor(m_i/2)}
//
// The bounded-sum display prints c_{la,k} without the halving, but its own
// proof builds the coefficient from phi_{2n}(q) = (q; q^2)_n over blocks of
// size m_i, the companion generating function carries
// (q; q^2)_la / (q; q^2)_{la_k}, and the summation formula only balances at
// exact points with the halved multiplicities, so that is what this
// computes.
template <class K>
K partition_coefficient(const Partition& la, CoefficientKind kind, long k, const K& q) {
    K q2 = q * q;
    K acc = carrier_one(q);
    auto term_c = [&](long m, const char* where) {
        if (m % 2 != 0)
            throw precondition_error(std::string("coefficient kind ") + where +
                                     " needs an even multiplicity");
        return pochhammer(q, m / 2, q2);
    };
    auto term_d = [&](long m) {
        return carrier_div(pochhammer(q, m, q), pochhammer(q2, m / 2, q2));
    };
    switch (kind) {
    case CoefficientKind::c:
        for (long v = 1; v <= la.part(1); ++v)
            acc = acc * term_c(la.multiplicity(v), "c");
        return acc;
    case CoefficientKind::d:
        for (long v = 1; v <= la.part(1); ++v) acc = acc * term_d(la.multiplicity(v));
        return acc;
    case CoefficientKind::c_k:
        if (k < 1) throw precondition_error("coefficient kind c_k needs k >= 1");
        for (long v = 1; v <= k - 1; ++v) acc = acc * term_c(la.multiplicity(v), "c_k");
        return acc;
    case CoefficientKind::d_k:
        if (k < 1) throw precondition_error("coefficient kind d_k needs k >= 1");
        for (long v = 1; v <= k - 1; ++v) acc = acc * term_d(la.multiplicity(v));
        return acc;
    }
    throw usage_error("unknown coefficient kind");
}

// ---------------------------------------------------------------------------
// Pruned enumeration
// ---------------------------------------------------------------------------

using DegreeFn = std::function<long(const Partition&)>;

namespace detail {

inline bool visit_weight_level(long w, long max_length, const DegreeFn& degree, long bound,
                               std::vector<long>& prefix,
                               const std::function<bool(const Partition&)>& emit) {
    // Extends prefix to partitions of exactly w more cells, parts bounded by
    // the last chosen part.  Descending first-part choice keeps the output
    // lexicographically decreasing inside a weight grade.  Returns false if
    // the caller asked to stop.
    if (w == 0) return emit(Partition(prefix));
    if (long(prefix.size()) >= max_length) return true;
    long cap = prefix.empty() ? w : std::min(w, prefix.back());
    for (long p = cap; p >= 1; --p) {
        prefix.push_back(p);
        bool keep = true;
        if (degree(Partition(prefix)) <= bound) // monotone: pruning is sound
            keep = visit_weight_level(w - p, max_length, degree, bound, prefix, emit);
        prefix.pop_back();
        if (!keep) return false;
    }
    return true;
}

} // namespace detail

// Visits exactly the partitions with length <= max_length and
// degree(la) <= bound, each once, in graded lexicographic order (weight
// ascending, lexicographically decreasing within a weight).  degree must be
// non-decreasing under incrementing any single part and unbounded as any
// part grows; the weight loop stops at the first level that produces
// nothing, which the monotone contract makes sound.
inline void enumerate_bounded_visit(long max_length, const DegreeFn& degree, long bound,
                                    const std::function<bool(const Partition&)>& emit) {
    if (max_length < 0) throw usage_error("enumerate_bounded: negative max_length");
    for (long w = 0;; ++w) {
        bool found_any = false;
        std::vector<long> prefix;
        bool keep = detail::visit_weight_level(
            w, max_length, degree, bound, prefix, [&](const Partition& la) {
                if (degree(la) > bound) return true;
                found_any = true;
                return emit(la);
            });
        if (!keep) return;
        if (!found_any) return;
    }
}

inline std::vector<Partition> enumerate_bounded(long max_length, const DegreeFn& degree,
                                                long bound) {
    std::vector<Partition> out;
    enumerate_bounded_visit(max_length, degree, bound, [&](const Partition& la) {
        out.push_back(la);
        return true;
    });
    return out;
}

// Restartable stream over the same set, for callers that want to pull.
class PartitionStream {
public:
    PartitionStream(long max_length, DegreeFn degree, long bound)
        : items_(enumerate_bounded(max_length, degree, bound)) {}

    std::optional<Partition> next() {
        if (pos_ >= items_.size()) return std::nullopt;
        return items_[pos_++];
    }
    void restart() { pos_ = 0; }

private:
    std::vector<Partition> items_;
    size_t pos_ = 0;
};

enum class StripDirection { horizontal, vertical };

// All partitions la containing mu with |la/mu| = m and at most one added
// cell per column (horizontal) or per row (vertical), in lexicographically
// decreasing order.
inline std::vector<Partition> strips(const Partition& mu, long m, StripDirection dir) {
    std::vector<Partition> out;
    if (m < 0) throw usage_error("strips: negative cell count");
    if (m == 0) return {mu};
    std::vector<long> la;
    if (dir == StripDirection::horizontal) {
        // Interlacing: la_i in [mu_i, mu_{i-1}] row by row, one extra row allowed.
        long rows = mu.length() + 1;
        std::function<void(long, long)> rec = [&](long i, long rem) {
            if (i > rows) {
                if (rem == 0) {
                    std::vector<long> v = la;
                    while (!v.empty() && v.back() == 0) v.pop_back();
                    out.push_back(Partition(v));
                }
                return;
            }
            long lo = mu.part(i);
            long hi = (i == 1) ? mu.part(1) + rem : std::min(mu.part(i - 1), mu.part(i) + rem);
            for (long x = hi; x >= lo; --x) {
                la.push_back(x);
                rec(i + 1, rem - (x - mu.part(i)));
                la.pop_back();
            }
        };
        rec(1, m);
    } else {
        // Each row grows by 0 or 1; rows below l(mu) can open with a single
        // cell as long as the result stays weakly decreasing.
        long rows = mu.length() + m;
        std::function<void(long, long)> rec = [&](long i, long rem) {
            if (i > rows || (rem == 0 && i > mu.length())) {
                if (rem == 0) {
                    std::vector<long> v = la;
                    while (!v.empty() && v.back() == 0) v.pop_back();
                    out.push_back(Partition(v));
                }
                return;
            }
            long prev = (i == 1) ? (mu.part(1) + 1) : la[size_t(i - 2)];
            for (long add = std::min(1L, rem); add >= 0; --add) {
                long x = mu.part(i) + add;
                if (x > prev) continue;
                la.push_back(x);
                rec(i + 1, rem - add);
                la.pop_back();
            }
        };
        rec(1, m);
    }
    std::sort(out.begin(), out.end(),
              [](const Partition& a, const Partition& b) { return b < a; });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

} // namespace qident
