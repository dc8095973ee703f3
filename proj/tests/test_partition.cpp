#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "qident/partition.hpp"

using namespace qident;

namespace {

// Brute-force list of all partitions of exact weight w (no bounds).
std::vector<Partition> all_partitions_of(long w) {
    std::vector<Partition> out;
    std::vector<long> cur;
    std::function<void(long, long)> rec = [&](long rem, long cap) {
        if (rem == 0) {
            out.push_back(Partition(cur));
            return;
        }
        for (long p = std::min(rem, cap); p >= 1; --p) {
            cur.push_back(p);
            rec(rem - p, p);
            cur.pop_back();
        }
    };
    rec(w, w == 0 ? 1 : w);
    return out;
}

PowerSeries qvar(long hi) { return PowerSeries::monomial('q', Rational(1), 1, 0, hi); }

} // namespace

TEST_CASE("partition statistics") {
    Partition la{3, 1};
    auto st = statistics(la);
    CHECK(st.weight == 4);
    CHECK(st.length == 2);
    CHECK(st.conjugate == Partition{2, 1, 1});
    CHECK(st.n_stat == 3);
    CHECK(st.n2 == 10);
    CHECK(st.mult.at(3) == 1);
    CHECK(st.mult.at(1) == 1);

    auto e = statistics(Partition{});
    CHECK(e.weight == 0);
    CHECK(e.length == 0);
    CHECK(e.conjugate == Partition{});
    CHECK(e.n_stat == 0);
    CHECK(e.n2 == 0);

    CHECK(n_stat(Partition{2, 1}.scaled(2)) == 7); // C(4,2) + C(2,2)

    CHECK_THROWS_AS(Partition({1, 2}), precondition_error);
    CHECK_THROWS_AS(Partition({2, 0}), precondition_error);
}

TEST_CASE("conjugation involutes and swaps the n statistics") {
    for (long w = 0; w <= 12; ++w)
        for (const Partition& la : all_partitions_of(w)) {
            CHECK(la.conjugate().conjugate() == la);
            CHECK(n_stat(la.conjugate()) == n_stat_row_weighted(la));
        }
}

TEST_CASE("pochhammer over partitions") {
    Rational q(1, 3);
    // (q)_{(2,1)} = (q)_1 (q)_1 = (1-q)^2
    CHECK(pochhammer_lambda(q, Partition{2, 1}, q) ==
          (Rational(1) - q) * (Rational(1) - q));
    CHECK(pochhammer_lambda(q, Partition{}, q) == Rational(1));
    // (q)_{(2,2)} = (q)_0 (q)_2
    CHECK(pochhammer_lambda(q, Partition{2, 2}, q) ==
          (Rational(1) - q) * (Rational(1) - q * q));

    // Same shapes over a series carrier.
    PowerSeries qs = qvar(6);
    PowerSeries p = pochhammer_lambda(qs, Partition{2, 1}, qs);
    CHECK(p.coefficient(0) == Rational(1));
    CHECK(p.coefficient(1) == Rational(-2));
    CHECK(p.coefficient(2) == Rational(1));
}

TEST_CASE("generalized q-binomial") {
    PowerSeries q = qvar(8);
    PowerSeries b = gen_qbinom(3, Partition{2, 1}, q);
    // (1+q)(1+q+q^2) = 1 + 2q + 2q^2 + q^3
    CHECK(b.coefficient(0) == Rational(1));
    CHECK(b.coefficient(1) == Rational(2));
    CHECK(b.coefficient(2) == Rational(2));
    CHECK(b.coefficient(3) == Rational(1));
    CHECK(b.coefficient(4).is_zero());

    CHECK(gen_qbinom(2, Partition{3}, q).is_zero_on_window());

    PowerSeries g = gen_qbinom(4, Partition{2}, q);
    long expect[5] = {1, 1, 2, 1, 1};
    for (long j = 0; j <= 4; ++j) CHECK(g.coefficient(j) == Rational(expect[j]));

    // Rational carrier with a vanishing denominator
    CHECK_THROWS_AS(gen_qbinom(3, Partition{2}, Rational(1)), singular_error);
    CHECK(gen_qbinom(3, Partition{2}, Rational(2)) == Rational(7)); // 1 + q + q^2 at q = 2
}

TEST_CASE("gen_qbinom stays polynomial") {
    PowerSeries q = qvar(40);
    for (long n = 0; n <= 6; ++n)
        for (long w = 0; w <= 3 * n; ++w)
            for (const Partition& la : all_partitions_of(w)) {
                if (la.part(1) > n) continue;
                PowerSeries b = gen_qbinom(n, la, q);
                CHECK(b.lo() >= 0);
                // all claimed coefficients exact; top of the window still reliable
                CHECK(b.hi() >= 30);
            }
}

TEST_CASE("partition coefficients") {
    Rational q(1, 5);
    CHECK(partition_coefficient(Partition{}, CoefficientKind::c, 1, q) == Rational(1));
    CHECK(partition_coefficient(Partition{}, CoefficientKind::d_k, 3, q) == Rational(1));
    // la = (1,1): m_1 = 2, kind c -> (q; q^2)_1 = 1 - q
    CHECK(partition_coefficient(Partition{1, 1}, CoefficientKind::c, 1, q) == Rational(1) - q);
    // kind c_k with k = 2 also halves the multiplicity: (q; q^2)_1
    CHECK(partition_coefficient(Partition{1, 1}, CoefficientKind::c_k, 2, q) == Rational(1) - q);
    CHECK(partition_coefficient(Partition{2, 1, 1, 1, 1}, CoefficientKind::c_k, 2, q) ==
          (Rational(1) - q) * (Rational(1) - q.pow(3))); // m_1 = 4 -> (q; q^2)_2
    // odd multiplicity rejects kinds c and c_k
    CHECK_THROWS_AS(partition_coefficient(Partition{1}, CoefficientKind::c, 1, q),
                    precondition_error);
    CHECK_THROWS_AS(partition_coefficient(Partition{1}, CoefficientKind::c_k, 2, q),
                    precondition_error);
    // k = 1 products over i = 1..0 are empty
    CHECK(partition_coefficient(Partition{3, 2, 1}, CoefficientKind::c_k, 1, q) == Rational(1));
    CHECK(partition_coefficient(Partition{3, 2, 1}, CoefficientKind::d_k, 1, q) == Rational(1));
}

TEST_CASE("bounded enumeration") {
    auto n2 = [](const Partition& la) { return n2_stat(la); };
    auto got = enumerate_bounded(2, n2, 2);
    REQUIRE(got.size() == 3);
    CHECK(got[0] == Partition{});
    CHECK(got[1] == Partition{1});
    CHECK(got[2] == Partition{1, 1});

    CHECK(enumerate_bounded(0, n2, 100) == std::vector<Partition>{Partition{}});

    auto f = [](const Partition& la) { return 2 * n2_stat(la) - 2 * la.part(1); };
    auto got2 = enumerate_bounded(1, f, 4);
    REQUIRE(got2.size() == 3);
    CHECK(got2[0] == Partition{});
    CHECK(got2[1] == Partition{1});
    CHECK(got2[2] == Partition{2});
}

TEST_CASE("enumeration matches the partition function") {
    long p_w[11] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
    auto weight = [](const Partition& la) { return la.weight(); };
    for (long w = 0; w <= 10; ++w) {
        long count = 0;
        enumerate_bounded_visit(w + 1, weight, w, [&](const Partition& la) {
            (void)la;
            ++count;
            return true;
        });
        long expect = 0;
        for (long v = 0; v <= w; ++v) expect += long(all_partitions_of(v).size());
        CHECK(count == expect);
        CHECK(long(all_partitions_of(w).size()) == p_w[w]);
    }
}

TEST_CASE("enumeration order is graded lexicographic") {
    auto weight = [](const Partition& la) { return la.weight(); };
    auto got = enumerate_bounded(10, weight, 3);
    std::vector<Partition> expect = {Partition{},     Partition{1},    Partition{2},
                                     Partition{1, 1}, Partition{3},    Partition{2, 1},
                                     Partition{1, 1, 1}};
    CHECK(got == expect);

    PartitionStream stream(10, weight, 3);
    for (const auto& e : expect) {
        auto nxt = stream.next();
        REQUIRE(nxt.has_value());
        CHECK(*nxt == e);
    }
    CHECK(!stream.next().has_value());
    stream.restart();
    auto again = stream.next();
    REQUIRE(again.has_value());
    CHECK(*again == Partition{});
}

TEST_CASE("strips") {
    auto hs = strips(Partition{2, 1}, 2, StripDirection::horizontal);
    std::vector<Partition> expect = {Partition{4, 1}, Partition{3, 2}, Partition{3, 1, 1},
                                     Partition{2, 2, 1}};
    CHECK(hs == expect);

    CHECK(strips(Partition{3, 1}, 0, StripDirection::horizontal) ==
          std::vector<Partition>{Partition{3, 1}});

    auto vs = strips(Partition{1}, 2, StripDirection::vertical);
    CHECK(vs == std::vector<Partition>{Partition{2, 1}, Partition{1, 1, 1}});
}

TEST_CASE("strips against brute force") {
    auto brute = [](const Partition& mu, long m, StripDirection dir) {
        std::set<Partition> out;
        for (const Partition& la : all_partitions_of(mu.weight() + m)) {
            if (!la.contains(mu)) continue;
            bool ok = true;
            if (dir == StripDirection::horizontal) {
                // at most one added cell per column: la_{i+1} <= mu_i
                for (long i = 1; i <= la.length(); ++i)
                    if (i >= 2 && la.part(i) > mu.part(i - 1)) ok = false;
            } else {
                for (long i = 1; i <= la.length(); ++i)
                    if (la.part(i) - mu.part(i) > 1) ok = false;
            }
            if (ok) out.insert(la);
        }
        return out;
    };
    for (long w = 0; w <= 6; ++w)
        for (const Partition& mu : all_partitions_of(w))
            for (long m = 0; m <= 4; ++m)
                for (auto dir : {StripDirection::horizontal, StripDirection::vertical}) {
                    auto got = strips(mu, m, dir);
                    auto want = brute(mu, m, dir);
                    CHECK(got.size() == want.size());
                    for (const auto& la : got) CHECK(want.count(la) == 1);
                }
}
