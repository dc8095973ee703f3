#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "qident/errors.hpp"
#include "qident/rational.hpp"

namespace qident {

// Deterministic splitmix64 stream.  Everything random in a verification run
// flows through one of these, seeded from (global seed, case id), so results
// are identical across platforms and schedules.
class SplitMix64 {
public:
    explicit SplitMix64(uint64_t seed) : s_(seed) {}
    uint64_t next() {
        s_ += 0x9e3779b97f4a7c15ULL;
        uint64_t z = s_;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    long range(long lo, long hi) { // inclusive
        return lo + long(next() % (uint64_t)(hi - lo + 1));
    }

private:
    uint64_t s_;
};

// FNV-1a over the case id folded with the global seed.
inline uint64_t case_seed(uint64_t global_seed, std::string_view case_id) {
    uint64_t h = 14695981039346656037ULL ^ global_seed;
    for (char c : case_id) {
        h ^= (unsigned char)c;
        h *= 1099511628211ULL;
    }
    return h;
}

// Constraints a sampled point set must satisfy.
struct RandomPointSpec {
    long count = 1;
    long num_lo = -9, num_hi = 9; // numerator range, zero excluded below
    long den_lo = 1, den_hi = 9;
    bool nonzero = true;
    bool distinct = true;
    bool no_unit_pairs = true;  // x_i x_j != 1
    bool exclude_pm_one = true; // x_i != +-1
    long max_resamples = 1000;
};

inline Rational random_rational(SplitMix64& rng, const RandomPointSpec& spec) {
    for (long t = 0; t < spec.max_resamples; ++t) {
        long num = rng.range(spec.num_lo, spec.num_hi);
        if (spec.nonzero && num == 0) continue;
        Rational x(num, rng.range(spec.den_lo, spec.den_hi));
        if (spec.exclude_pm_one && (x.is_one() || x == Rational(-1))) continue;
        return x;
    }
    throw inconclusive_error("random_rational: resampling budget exhausted");
}

// Deterministic pseudo-random rationals satisfying all constraints of the
// spec; resamples on violation and reports inconclusive when the budget runs
// out.
inline std::vector<Rational> random_points(const RandomPointSpec& spec, SplitMix64& rng) {
    for (long attempt = 0; attempt < spec.max_resamples; ++attempt) {
        std::vector<Rational> xs;
        bool ok = true;
        while (long(xs.size()) < spec.count && ok) {
            Rational x = random_rational(rng, spec);
            for (const Rational& y : xs) {
                if (spec.distinct && y == x) ok = false;
                if (spec.no_unit_pairs && (y * x).is_one()) ok = false;
            }
            if (ok) xs.push_back(x);
        }
        if (ok) return xs;
    }
    throw inconclusive_error("random_points: resampling budget exhausted");
}

} // namespace qident
