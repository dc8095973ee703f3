#include <catch2/catch_amalgamated.hpp>

#include "qident/bailey.hpp"

using namespace qident;

TEST_CASE("slater pairs satisfy the defining relation") {
    BaileyPair p1 = slater_pair(1);
    BaileyPair p2 = slater_pair(2);
    CHECK(p1.validated);
    CHECK(p2.validated);
    CHECK(check_pair(p1, 8, 40).pass);
    CHECK(check_pair(p2, 8, 40).pass);

    // beta_0 = alpha_0 = 1
    CHECK(p1.alpha(0, 10).coefficient(0) == Rational(1));
    CHECK(p2.alpha(0, 10).coefficient(0) == Rational(1));

    // pair 1, n = 1: alpha_1 = q(q^{1/2} + q^{-1/2}) = s + s^3 in the s-language
    PowerSeries a1 = p1.alpha(1, 10);
    CHECK(a1.coefficient(1) == Rational(1));
    CHECK(a1.coefficient(3) == Rational(1));
    CHECK(a1.coefficient(5).is_zero());

    // every beta has constant term 1
    for (long n = 0; n <= 6; ++n) {
        CHECK(p1.beta(n, 12).coefficient(0) == Rational(1));
        CHECK(p2.beta(n, 12).coefficient(0) == Rational(1));
    }
}

TEST_CASE("pair 1 relation at n = 1 in closed form") {
    // beta_1 = 1/((1-s)(1-s^2)) must equal
    // 1/(1-s^2)^2 + (s^3+s)/((1-s^2)(1-s^4)) after q = s^2.
    const long ord = 24;
    PowerSeries beta1 = (poch_mono('s', Rational(1), 1, 2, 1, ord) *
                         poch_mono('s', Rational(1), 2, 2, 1, ord))
                            .inverse();
    PowerSeries t0 = (poch_mono('s', Rational(1), 2, 2, 1, ord) *
                      poch_mono('s', Rational(1), 2, 2, 1, ord))
                         .inverse();
    PowerSeries num = PowerSeries::monomial('s', Rational(1), 1, 0, ord) +
                      PowerSeries::monomial('s', Rational(1), 3, 0, ord);
    PowerSeries t1 = num * (poch_mono('s', Rational(1), 2, 2, 1, ord) *
                            poch_mono('s', Rational(1), 4, 2, 1, ord))
                               .inverse();
    CHECK(!first_difference_on(beta1, t0 + t1, 0, ord).has_value());
}

TEST_CASE("corrupted pair fails check_pair") {
    BaileyPair p = slater_pair(1);
    BaileyPair bad = p;
    auto alpha = p.alpha;
    bad.alpha = [alpha](long n, long ord) {
        PowerSeries a = alpha(n, ord);
        if (n == 1) a += PowerSeries::one('s', a.hi());
        return a;
    };
    auto r = check_pair(bad, 4, 20);
    CHECK(!r.pass);
    CHECK(r.first_failing_n == 1);

    // the naive alpha_0 = 2 of pair 1 fails already at n = 0
    BaileyPair naive = p;
    naive.alpha = [alpha](long n, long ord) {
        PowerSeries a = alpha(n, ord);
        if (n == 0) a = a.scaled(Rational(2));
        return a;
    };
    auto r0 = check_pair(naive, 2, 20);
    CHECK(!r0.pass);
    CHECK(r0.first_failing_n == 0);
}

TEST_CASE("transforms preserve the relation") {
    for (int which : {1, 2}) {
        BaileyPair p = slater_pair(which);
        for (auto mode : {TransformMode::i, TransformMode::ii, TransformMode::iii}) {
            BaileyPair img = transform(p, mode); // validates at depth 6 internally
            CHECK(img.validated);
            CHECK(check_pair(img, 6, 40).pass);
        }
    }
}

TEST_CASE("transform mode i shifts alpha by a^n q^{n^2}") {
    BaileyPair p = slater_pair(1);
    BaileyPair img = transform(p, TransformMode::i);
    // alpha'_1 = q alpha_1 = s^2 (s^3 + s) = s^3 + s^5
    PowerSeries a1 = img.alpha(1, 12);
    CHECK(a1.coefficient(3) == Rational(1));
    CHECK(a1.coefficient(5) == Rational(1));
    CHECK(a1.coefficient(1).is_zero());

    // mode ii keeps index 0 fixed
    BaileyPair img2 = transform(p, TransformMode::ii);
    CHECK(img2.alpha(0, 10).coefficient(0) == Rational(1));
    CHECK(!first_difference_on(img2.beta(0, 10), p.beta(0, 10), 0, 10).has_value());
}

TEST_CASE("limit identities") {
    BaileyPair p1 = slater_pair(1);
    BaileyPair p2 = slater_pair(2);
    for (auto mode : {TransformMode::i, TransformMode::ii, TransformMode::iii}) {
        CHECK(limit_identity_check(p1, mode, 40));
        CHECK(limit_identity_check(p2, mode, 40));
    }
    // window restriction: the same check at a lower order
    CHECK(limit_identity_check(p1, TransformMode::i, 20));
}

TEST_CASE("iterated chains") {
    BaileyPair p1 = slater_pair(1);
    BaileyPair p2 = slater_pair(2);
    for (long k = 1; k <= 3; ++k) {
        CHECK(iterated_identity_check(p1, k, ChainMode::an1, 40));
        CHECK(iterated_identity_check(p1, k, ChainMode::an2, 40));
        CHECK(iterated_identity_check(p2, k, ChainMode::an1, 40));
        CHECK(iterated_identity_check(p2, k, ChainMode::an3, 40));
    }
}

TEST_CASE("chains refuse unvalidated pairs") {
    BaileyPair raw;
    raw.label = "raw";
    raw.a_exp = 0;
    raw.alpha = [](long, long ord) { return PowerSeries::one('s', ord); };
    raw.beta = [](long, long ord) { return PowerSeries::one('s', ord); };
    CHECK_THROWS_AS(transform(raw, TransformMode::i), precondition_error);
    CHECK_THROWS_AS(iterated_identity_check(raw, 2, ChainMode::an1, 20), precondition_error);
}

TEST_CASE("chain consistency: transforms then limit equals the iterated identity") {
    for (int which : {1, 2}) {
        BaileyPair p = slater_pair(which);
        const long ord = 30;
        for (long k = 1; k <= 3; ++k) {
            BaileyPair chained = p;
            for (long i = 1; i < k; ++i) chained = transform(chained, TransformMode::i, ord);
            // sum_n a^n q^{n^2} beta^{(k-1)}_n accumulated directly
            PowerSeries lhs = PowerSeries::zero('s', 0, ord);
            for (long n = 0;; ++n) {
                long e = n * p.a_exp + 2 * n * n;
                if (e > ord) break;
                PowerSeries t = chained.beta(n, ord).shifted(e);
                lhs += t.padded_down_to(0).restricted(0, ord);
            }
            CHECK(!first_difference_on(lhs, chain_lambda_sum(p, k, ChainMode::an1, ord), 0, ord)
                       .has_value());
            CHECK(!first_difference_on(lhs, chain_r_sum(p, k, ChainMode::an1, ord), 0, ord)
                       .has_value());
        }
    }
}

TEST_CASE("derived identities 55-57") {
    for (long k = 1; k <= 2; ++k) {
        for (int which : {55, 56, 57}) {
            auto res = derived_identity_check(which, k, 40);
            CHECK(res.multisum_equals_product);
            CHECK(res.multisum_equals_chain);
        }
    }
    // leading coefficient of the 56 multisum
    CHECK(derived_multisum(56, 1, 10).coefficient(0) == Rational(1));
}

TEST_CASE("55 and 13 share the k = 1 instance but differ at k = 2") {
    // At k = 1 both multisums reduce to sum q^{n^2} (-q;q^2)_n / (q)_{2n}.
    // The exponent families differ from k = 2 on.
    const long ord = 40;
    auto t3_13_lhs = [&](long k) {
        auto functional = [](const Partition& la) { return 2 * n2_stat(la) - la.part(1) * la.part(1); };
        PowerSeries acc = PowerSeries::zero('q', 0, ord);
        enumerate_bounded_visit(k, functional, ord, [&](const Partition& la) {
            PowerSeries t = PowerSeries::monomial('q', Rational(1), functional(la), 0, ord) *
                            poch_mono('q', Rational(-1), 1, 2, la.part(1), ord);
            t = t * poch_mono('q', Rational(1), 1, 2, la.part(k), ord).inverse();
            for (long i = 1; i <= la.length(); ++i)
                t = t * poch_mono('q', Rational(1), 2, 2, la.part(i) - la.part(i + 1), ord)
                            .inverse();
            acc += t.padded_down_to(0).restricted(0, ord);
            return true;
        });
        return acc;
    };
    CHECK(!first_difference_on(derived_multisum(55, 1, ord), t3_13_lhs(1), 0, ord).has_value());
    auto diff = first_difference_on(derived_multisum(55, 2, ord), t3_13_lhs(2), 0, ord);
    REQUIRE(diff.has_value());
    CHECK(*diff > 0);
}
