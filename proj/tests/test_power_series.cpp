#include <catch2/catch_amalgamated.hpp>

#include "qident/power_series.hpp"
#include "qident/rational.hpp"

using namespace qident;

namespace {

PowerSeries poly(char var, std::vector<std::pair<long, long>> terms, long lo, long hi) {
    PowerSeries r = PowerSeries::zero(var, lo, hi);
    for (auto [e, c] : terms) r += PowerSeries::monomial(var, Rational(c), e, lo, hi);
    return r;
}

// Deterministic little generator for property-style sweeps.
struct Rng {
    unsigned long long s;
    unsigned long long next() {
        s += 0x9e3779b97f4a7c15ULL;
        unsigned long long z = s;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    long range(long lo, long hi) { return lo + long(next() % (unsigned long long)(hi - lo + 1)); }
    Rational rational() {
        long num = range(-9, 9);
        long den = range(1, 9);
        return Rational(num, den);
    }
    PowerSeries series(char var, long lo, long hi, bool nonzero_lowest = false) {
        PowerSeries r = PowerSeries::zero(var, lo, hi);
        for (long j = lo; j <= hi; ++j)
            r += PowerSeries::monomial(var, rational(), j, lo, hi);
        if (nonzero_lowest) {
            while (r.coefficient(lo).is_zero())
                r += PowerSeries::monomial(var, rational(), lo, lo, hi);
        }
        return r;
    }
};

} // namespace

TEST_CASE("rational canonical form and arithmetic") {
    Rational a(6, -4);
    CHECK(a.str() == "-3/2");
    CHECK(Rational(0, 5).str() == "0/1");
    CHECK((Rational(1, 3) + Rational(1, 6)).str() == "1/2");
    CHECK(Rational(2, 3).pow(-2).str() == "9/4");
    CHECK(Rational::parse("-14/21").str() == "-2/3");
    CHECK_THROWS_AS(Rational(1, 0), singular_error);
    CHECK_THROWS_AS(Rational(0).inverse(), singular_error);

    Rng rng{7};
    for (int i = 0; i < 200; ++i) {
        Rational x = rng.rational(), y = rng.rational();
        Rational s = x * y + x - y;
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), s.numerator().get_mpz_t(), s.denominator().get_mpz_t());
        CHECK(g == 1);
        CHECK(s.denominator() > 0);
    }
}

TEST_CASE("series multiplication windows") {
    // (1 - v)(1 + v + v^2 + v^3) telescopes to 1 on [0, 3]
    PowerSeries a = poly('q', {{0, 1}, {1, -1}}, 0, 3);
    PowerSeries b = poly('q', {{0, 1}, {1, 1}, {2, 1}, {3, 1}}, 0, 3);
    PowerSeries p = a * b;
    CHECK(p.lo() == 0);
    CHECK(p.hi() == 3);
    CHECK(p.coefficient(0) == Rational(1));
    for (long j = 1; j <= 3; ++j) CHECK(p.coefficient(j).is_zero());

    // v^-1 * v = 1 with lo = 0
    PowerSeries inv = PowerSeries::monomial('q', Rational(1), -1, -1, 2);
    PowerSeries v = PowerSeries::monomial('q', Rational(1), 1, 1, 4);
    PowerSeries one = inv * v;
    CHECK(one.lo() == 0);
    CHECK(one.coefficient(0) == Rational(1));

    // (1-q)(1-q^2)(1-q^3) = 1 - q - q^2 + q^4 + q^5 - q^6
    PowerSeries f = poly('q', {{0, 1}, {1, -1}}, 0, 6) * poly('q', {{0, 1}, {2, -1}}, 0, 6) *
                    poly('q', {{0, 1}, {3, -1}}, 0, 6);
    long expect[7] = {1, -1, -1, 0, 1, 1, -1};
    for (long j = 0; j <= 6; ++j) CHECK(f.coefficient(j) == Rational(expect[j]));

    CHECK_THROWS_AS(a * PowerSeries::one('z', 3), usage_error);
}

TEST_CASE("series inverse") {
    PowerSeries g = poly('q', {{0, 1}, {1, -1}}, 0, 4).inverse();
    for (long j = 0; j <= 4; ++j) CHECK(g.coefficient(j) == Rational(1));

    // Fibonacci coefficients from 1/(1 - v - v^2)
    PowerSeries fib = poly('q', {{0, 1}, {1, -1}, {2, -1}}, 0, 4).inverse();
    long expect[5] = {1, 1, 2, 3, 5};
    for (long j = 0; j <= 4; ++j) CHECK(fib.coefficient(j) == Rational(expect[j]));

    // Laurent division: 1/(1 - z v^-1) for z = 2 starts at -v/2 (lowest term -v/z)
    PowerSeries f = poly('q', {{0, 1}}, -1, 2) - PowerSeries::monomial('q', Rational(2), -1, -1, 2);
    PowerSeries inv = f.inverse();
    CHECK(inv.lo() == 1);
    CHECK(inv.coefficient(1) == Rational(-1, 2));
    CHECK(inv.coefficient(2) == Rational(-1, 4));
    CHECK((f * inv).coefficient(0) == Rational(1));

    CHECK_THROWS_AS(PowerSeries::zero('q', 0, 5).inverse(), singular_error);
}

TEST_CASE("substitute power") {
    PowerSeries f = poly('q', {{0, 1}, {1, 1}, {2, 1}}, 0, 5);
    PowerSeries g = f.substitute_power(2);
    CHECK(g.lo() == 0);
    CHECK(g.hi() == 10);
    CHECK(g.coefficient(0) == Rational(1));
    CHECK(g.coefficient(2) == Rational(1));
    CHECK(g.coefficient(4) == Rational(1));
    CHECK(g.coefficient(1).is_zero());
    CHECK(g.coefficient(6).is_zero());

    PowerSeries h = poly('q', {{0, 1}, {1, -1}}, 0, 3).substitute_power(3);
    CHECK(h.coefficient(0) == Rational(1));
    CHECK(h.coefficient(3) == Rational(-1));
    CHECK(h.coefficient(2).is_zero());

    // Fibonacci under v -> v^2, frozen from the direct recomputation
    PowerSeries fib = poly('q', {{0, 1}, {1, -1}, {2, -1}}, 0, 4).inverse().substitute_power(2);
    long expect[5] = {1, 1, 2, 3, 5};
    for (long j = 0; j <= 4; ++j) {
        CHECK(fib.coefficient(2 * j) == Rational(expect[j]));
        if (j > 0) CHECK(fib.coefficient(2 * j - 1).is_zero());
    }
}

TEST_CASE("coefficient access is window-checked") {
    PowerSeries f = poly('q', {{0, 1}, {1, 1}}, 0, 3);
    CHECK(f.coefficient(3).is_zero());
    CHECK_THROWS_AS(f.coefficient(4), out_of_window_error);
    CHECK_THROWS_AS(f.coefficient(-1), out_of_window_error);
}

TEST_CASE("ring axioms on random windows") {
    Rng rng{42};
    for (int it = 0; it < 60; ++it) {
        long lo = rng.range(-3, 0), hi = lo + rng.range(3, 7);
        PowerSeries a = rng.series('q', lo, hi);
        PowerSeries b = rng.series('q', lo, hi);
        PowerSeries c = rng.series('q', lo, hi);
        CHECK((a * b).equals_on_shared_window(b * a));
        CHECK(((a * b) * c).equals_on_shared_window(a * (b * c)));
        CHECK((a * (b + c)).equals_on_shared_window(a * b + a * c));
    }
}

TEST_CASE("inverse round trip on random series") {
    Rng rng{99};
    for (int it = 0; it < 100; ++it) {
        long lo = rng.range(-2, 1), hi = lo + rng.range(4, 8);
        PowerSeries f = rng.series('q', lo, hi, /*nonzero_lowest=*/true);
        PowerSeries p = f * f.inverse();
        CHECK(p.coefficient(0) == Rational(1));
        for (long j = p.lo(); j <= p.hi(); ++j)
            if (j != 0) CHECK(p.coefficient(j).is_zero());
    }
}

TEST_CASE("substitute power composes multiplicatively") {
    Rng rng{5};
    for (int it = 0; it < 40; ++it) {
        long hi = rng.range(3, 6);
        PowerSeries f = rng.series('q', 0, hi);
        long a = rng.range(1, 3), b = rng.range(1, 3);
        CHECK(f.substitute_power(a).substitute_power(b).equals_on_shared_window(
            f.substitute_power(a * b)));
    }
}

TEST_CASE("serialization") {
    PowerSeries f = poly('q', {{-1, 2}, {0, 1}}, -1, 1);
    auto j = f.to_json();
    CHECK(j["var"] == "q");
    CHECK(j["lo"] == -1);
    CHECK(j["coeffs"][0] == "2/1");
    CHECK(j["coeffs"][1] == "1/1");
    CHECK(j["coeffs"][2] == "0/1");
}
