// Expected values frozen from an independent exact computation (separate
// arbitrary-precision toolchain, separate series code): multisum expansions,
// a parametered left side of the key identity, Hall-Littlewood point values
// over a length-4 alphabet, and a transformed Bailey beta.  Guards against
// self-consistent window or convention bugs in the engine.

#include <catch2/catch_amalgamated.hpp>

#include "qident/bailey.hpp"
#include "qident/hall_littlewood.hpp"
#include "qident/identities.hpp"
#include "qident/identities_point.hpp"

using namespace qident;

TEST_CASE("frozen: multisum (11) coefficients at k = 2 and k = 3") {
    const char* k2[21] = {"1", "0", "1", "0", "2", "1", "3",  "2",  "5",  "3", "7",
                          "5", "11", "8", "15", "12", "22", "18", "30", "26", "42"};
    const char* k3[21] = {"1", "0", "1", "0", "2", "0", "3",  "1",  "5",  "2", "7",
                          "3", "11", "5", "15", "8", "22", "12", "30", "18", "42"};
    PowerSeries l2 = builders::t3_lhs(11, 2, 20);
    PowerSeries l3 = builders::t3_lhs(11, 3, 20);
    for (long j = 0; j <= 20; ++j) {
        CHECK(l2.coefficient(j) == Rational::parse(k2[j]));
        CHECK(l3.coefficient(j) == Rational::parse(k3[j]));
    }
}

TEST_CASE("frozen: key-identity left side at a=1/2, b=-1/3, z=2/3") {
    // The independent expansion multiplies the (a, b; q^-2)_{la_1} factors
    // literally as Laurent polynomials; the engine uses the folded
    // (ab)^{la_1} q^{-2 la_1(la_1-1)} (1/a, 1/b; q^2)_{la_1} route.
    const char* k1[16] = {"1",
                          "4/9",
                          "32/81",
                          "616/729",
                          "4892/6561",
                          "68008/59049",
                          "693068/531441",
                          "7836232/4782969",
                          "73415192/43046721",
                          "893807428/387420489",
                          "8899587320/3486784401",
                          "93685531792/31381059609",
                          "970085037560/282429536481",
                          "10189346914480/2541865828329",
                          "104291857903064/22876792454961",
                          "1125789890219320/205891132094649"};
    const char* k2[16] = {"1",
                          "4/9",
                          "20/81",
                          "520/729",
                          "3044/6561",
                          "54304/59049",
                          "488072/531441",
                          "5915464/4782969",
                          "50850308/43046721",
                          "657737692/387420489",
                          "6444439832/3486784401",
                          "67532147368/31381059609",
                          "676774356536/282429536481",
                          "7133278327936/2541865828329",
                          "74044228133864/22876792454961",
                          "776554501967152/205891132094649"};
    PowerSeries l1 = builders::t2_lhs(1, Rational(1, 2), Rational(-1, 3), Rational(2, 3), 15);
    PowerSeries l2 = builders::t2_lhs(2, Rational(1, 2), Rational(-1, 3), Rational(2, 3), 15);
    for (long j = 0; j <= 15; ++j) {
        CHECK(l1.coefficient(j) == Rational::parse(k1[j]));
        CHECK(l2.coefficient(j) == Rational::parse(k2[j]));
    }
}

TEST_CASE("frozen: hall-littlewood values over a length-4 alphabet") {
    PointConfig pc({Rational(2), Rational(-3), Rational(1, 4), Rational(5, 7)}, Rational(3, 8));
    CHECK(hl_symmetrization(Partition{1}, pc) == Rational::parse("-1/28"));
    CHECK(hl_symmetrization(Partition{2, 1}, pc) == Rational::parse("116433/12544"));
    CHECK(hl_symmetrization(Partition{3, 2, 1}, pc) == Rational::parse("-17633121/351232"));
    CHECK(hl_symmetrization(Partition{2, 2}, pc) == Rational::parse("2272709/50176"));
    CHECK(hl_symmetrization(Partition{4, 1, 1}, pc) == Rational::parse("165579025/2458624"));
    CHECK(hl_symmetrization(Partition{2, 1, 1, 1}, pc) == Rational::parse("15/392"));
}

TEST_CASE("frozen: finite-summation sides at exact points") {
    // n=5, k=2, z=3/4, q=-2/5
    Rational a23 = Rational::parse("442893254197/610351562500");
    CHECK(builders::t4_lhs_point(23, 5, 2, Rational(3, 4), Rational(-2, 5)) == a23);
    CHECK(builders::t4_rhs_point(23, 5, 2, Rational(3, 4), Rational(-2, 5)) == a23);
    // n=6, k=3, z=-1/2, q=2/7
    Rational a24 = Rational::parse(
        "480831298116743074624254094464469550619/749048330965186233494494102694564493649");
    CHECK(builders::t4_lhs_point(24, 6, 3, Rational(-1, 2), Rational(2, 7)) == a24);
    CHECK(builders::t4_rhs_point(24, 6, 3, Rational(-1, 2), Rational(2, 7)) == a24);
}

TEST_CASE("frozen: derived multisum (57) coefficients at k = 2") {
    const char* expect[19] = {"1",  "1",  "2",  "2",  "4",  "4",  "8",   "9",   "14", "16",
                              "25", "28", "42", "48", "68", "78", "108", "124", "168"};
    PowerSeries m = derived_multisum(57, 2, 18);
    for (long j = 0; j <= 18; ++j) CHECK(m.coefficient(j) == Rational::parse(expect[j]));
}

TEST_CASE("frozen: transformed beta of the first Slater pair, mode ii, n = 2") {
    const char* expect[17] = {"1", "0", "3", "0", "8",  "0", "14", "0", "25",
                              "0", "39", "0", "58", "0", "82", "0", "113"};
    BaileyPair img = transform(slater_pair(1), TransformMode::ii);
    PowerSeries b2 = img.beta(2, 16);
    for (long j = 0; j <= 16; ++j) CHECK(b2.coefficient(j) == Rational::parse(expect[j]));
}
