#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "qident/errors.hpp"
#include "qident/rational.hpp"

namespace qident {

// Truncated Laurent-capable formal power series in one variable over
// Rational.  A series stores its reliable window [lo, hi]: coefficients
// inside the window are exact, nothing is claimed outside it.  Arithmetic
// never extrapolates; every operation returns the provably correct window
// intersection, so a silent truncation error cannot occur.
//
// The variable label ('q', 'z', 't', 's') is documentation plus a guard:
// combining series over different labels is a usage error.
class PowerSeries {
public:
    PowerSeries(char var, long lo, std::vector<Rational> coeffs)
        : var_(var), lo_(lo), c_(std::move(coeffs)) {
        if (c_.empty()) throw usage_error("PowerSeries: empty window");
    }

    // Series that is identically zero on [lo, hi] (all claimed, all exact).
    static PowerSeries zero(char var, long lo, long hi) {
        check_window(lo, hi);
        return PowerSeries(var, lo, std::vector<Rational>(size_t(hi - lo + 1)));
    }

    // c * x^e, claimed on [lo, hi] (zero everywhere else in the window).
    static PowerSeries monomial(char var, const Rational& c, long e, long lo, long hi) {
        if (e < lo || e > hi) throw usage_error("PowerSeries::monomial: exponent outside window");
        PowerSeries r = zero(var, lo, hi);
        r.c_[size_t(e - lo)] = c;
        return r;
    }

    static PowerSeries constant(char var, const Rational& c, long hi) {
        return monomial(var, c, 0, 0, hi);
    }

    static PowerSeries one(char var, long hi) { return constant(var, Rational(1), hi); }

    char var() const { return var_; }
    long lo() const { return lo_; }
    long hi() const { return lo_ + long(c_.size()) - 1; }

    // Exact coefficient of x^j; access outside the window is an error,
    // never a silent zero.
    const Rational& coefficient(long j) const {
        if (j < lo() || j > hi())
            throw out_of_window_error("coefficient of x^" + std::to_string(j) +
                                      " outside window [" + std::to_string(lo()) + ", " +
                                      std::to_string(hi()) + "]");
        return c_[size_t(j - lo_)];
    }

    // Lowest exponent with a nonzero coefficient, if any.
    std::optional<long> valuation() const {
        for (size_t i = 0; i < c_.size(); ++i)
            if (!c_[i].is_zero()) return lo_ + long(i);
        return std::nullopt;
    }

    bool is_zero_on_window() const { return !valuation().has_value(); }

    PowerSeries operator-() const {
        PowerSeries r = *this;
        for (auto& c : r.c_) c = -c;
        return r;
    }

    friend PowerSeries operator+(const PowerSeries& a, const PowerSeries& b) {
        a.check_same_var(b);
        long lo = std::max(a.lo(), b.lo()), hi = std::min(a.hi(), b.hi());
        if (lo > hi)
            throw usage_error("PowerSeries: empty window intersection in addition");
        PowerSeries r = zero(a.var_, lo, hi);
        for (long j = lo; j <= hi; ++j)
            r.c_[size_t(j - lo)] = a.coefficient(j) + b.coefficient(j);
        return r;
    }

    friend PowerSeries operator-(const PowerSeries& a, const PowerSeries& b) { return a + (-b); }

    // Truncated convolution on the intersection of reliable windows:
    // lo = a.lo + b.lo, hi = min(a.hi + b.lo, b.hi + a.lo).
    friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
        a.check_same_var(b);
        long lo = a.lo() + b.lo();
        long hi = std::min(a.hi() + b.lo(), b.hi() + a.lo());
        PowerSeries r = zero(a.var_, lo, hi);
        for (long i = a.lo(); i <= a.hi(); ++i) {
            const Rational& ai = a.c_[size_t(i - a.lo_)];
            if (ai.is_zero()) continue;
            long jlo = std::max(b.lo(), lo - i), jhi = std::min(b.hi(), hi - i);
            for (long j = jlo; j <= jhi; ++j) {
                const Rational& bj = b.c_[size_t(j - b.lo_)];
                if (bj.is_zero()) continue;
                r.c_[size_t(i + j - lo)] += ai * bj;
            }
        }
        return r;
    }

    PowerSeries& operator+=(const PowerSeries& o) { return *this = *this + o; }
    PowerSeries& operator*=(const PowerSeries& o) { return *this = *this * o; }
    PowerSeries& operator-=(const PowerSeries& o) { return *this = *this - o; }

    PowerSeries scaled(const Rational& c) const {
        PowerSeries r = *this;
        for (auto& x : r.c_) x *= c;
        return r;
    }

    // Multiplication by x^e: pure window shift.
    PowerSeries shifted(long e) const {
        PowerSeries r = *this;
        r.lo_ += e;
        return r;
    }

    // Multiplicative inverse by long division.  If the lowest nonzero term of
    // f is c*x^v, then 1/f has window [-v, f.hi - 2v].
    PowerSeries inverse() const {
        auto v = valuation();
        if (!v) throw singular_error("PowerSeries: inverse of a series that is zero on its window");
        long val = *v;
        long relh = hi() - val; // relative order of the known part of x^-val * f
        const long base = val - lo_;
        std::vector<Rational> g(size_t(relh + 1));
        Rational f0inv = c_[size_t(base)].inverse();
        g[0] = f0inv;
        for (long t = 1; t <= relh; ++t) {
            Rational acc;
            for (long j = 1; j <= t; ++j) acc += c_[size_t(base + j)] * g[size_t(t - j)];
            g[size_t(t)] = -acc * f0inv;
        }
        return PowerSeries(var_, -val, std::move(g));
    }

    // f(x) -> f(x^m).  Coefficient of x^{j*m} is the coefficient of x^j;
    // everything in between is known zero, so the window scales to
    // [m*lo, m*hi].
    PowerSeries substitute_power(long m) const {
        if (m < 1) throw usage_error("substitute_power: exponent multiplier must be >= 1");
        PowerSeries r = zero(var_, m * lo(), m * hi());
        for (size_t i = 0; i < c_.size(); ++i)
            r.c_[size_t((lo_ + long(i)) * m - r.lo_)] = c_[i];
        return r;
    }

    // Extends the window downward, claiming zeros on [new_lo, lo).  Only
    // sound when the current lo is a proven valuation bound, i.e. the series
    // is known to have no terms below its window (true for products of
    // exactly-constructed factors, never after an additive intersection).
    PowerSeries padded_down_to(long new_lo) const {
        if (new_lo >= lo_) return *this;
        PowerSeries r = zero(var_, new_lo, hi());
        std::copy(c_.begin(), c_.end(), r.c_.begin() + (lo_ - new_lo));
        return r;
    }

    PowerSeries restricted(long lo, long hi) const {
        if (lo < this->lo() || hi > this->hi() || lo > hi)
            throw usage_error("PowerSeries::restricted: not a subwindow");
        return PowerSeries(var_, lo,
                           std::vector<Rational>(c_.begin() + (lo - lo_),
                                                 c_.begin() + (hi - lo_ + 1)));
    }

    // Relabels the variable; exponents and coefficients are untouched.
    PowerSeries relabeled(char var) const {
        PowerSeries r = *this;
        r.var_ = var;
        return r;
    }

    // Coefficientwise equality on the shared window.
    bool equals_on_shared_window(const PowerSeries& o) const {
        check_same_var(o);
        long lo = std::max(this->lo(), o.lo()), hi = std::min(this->hi(), o.hi());
        for (long j = lo; j <= hi; ++j)
            if (coefficient(j) != o.coefficient(j)) return false;
        return true;
    }

    nlohmann::json to_json() const {
        nlohmann::json coeffs = nlohmann::json::array();
        for (const auto& c : c_) coeffs.push_back(c.str());
        return nlohmann::json{{"var", std::string(1, var_)}, {"lo", lo_}, {"coeffs", coeffs}};
    }

    std::string str() const {
        std::string s;
        bool any = false;
        for (long j = lo(); j <= hi(); ++j) {
            const Rational& c = coefficient(j);
            if (c.is_zero()) continue;
            if (any) s += " + ";
            s += c.str() + "*" + std::string(1, var_) + "^" + std::to_string(j);
            any = true;
        }
        if (!any) s = "0";
        return s + "  on [" + std::to_string(lo()) + ", " + std::to_string(hi()) + "]";
    }

private:
    static void check_window(long lo, long hi) {
        if (lo > hi) throw usage_error("PowerSeries: lo > hi");
    }
    void check_same_var(const PowerSeries& o) const {
        if (var_ != o.var_)
            throw usage_error(std::string("PowerSeries: variable mismatch '") + var_ + "' vs '" +
                              o.var_ + "'");
    }

    char var_;
    long lo_;
    std::vector<Rational> c_;
};

// First exponent in [lo, hi] where the two series disagree, or nullopt if
// they agree everywhere on it.  Both windows must cover [lo, hi]; if not,
// the comparison is inconclusive and says which order would be needed.
inline std::optional<long> first_difference_on(const PowerSeries& a, const PowerSeries& b,
                                               long lo, long hi) {
    if (a.lo() > lo || a.hi() < hi || b.lo() > lo || b.hi() < hi)
        throw inconclusive_error(
            "series windows [" + std::to_string(a.lo()) + "," + std::to_string(a.hi()) + "] and [" +
                std::to_string(b.lo()) + "," + std::to_string(b.hi()) + "] do not cover [" +
                std::to_string(lo) + "," + std::to_string(hi) + "]",
            hi);
    for (long j = lo; j <= hi; ++j)
        if (a.coefficient(j) != b.coefficient(j)) return j;
    return std::nullopt;
}

} // namespace qident
