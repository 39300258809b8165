#pragma once

#include <cstdint>

#include "haff/carnot.hpp"
#include "haff/kform.hpp"
#include "haff/rational.hpp"

namespace haff {

/// Deterministic splitmix64 stream. Randomized checks construct one per
/// trial as Rng(seed, trial_index), so results do not depend on scheduling.
class Rng {
  public:
    explicit Rng(uint64_t seed) : state_(seed ^ 0x9E3779B97F4A7C15ULL) { next(); }
    Rng(uint64_t seed, uint64_t stream) : state_(seed) {
        state_ = next() ^ (stream * 0xBF58476D1CE4E5B9ULL + 0x94D049BB133111EBULL);
        next();
    }

    uint64_t next() {
        state_ += 0x9E3779B97F4A7C15ULL;
        uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform integer in [lo, hi].
    int uniform(int lo, int hi) {
        return lo + static_cast<int>(next() % static_cast<uint64_t>(hi - lo + 1));
    }

    /// Small exact rational, numerator in [-6, 6], denominator in [1, 3].
    Rational small_rational() { return rat(uniform(-6, 6), uniform(1, 3)); }

    Rational nonzero_rational() {
        while (true) {
            Rational q = small_rational();
            if (!is_zero(q)) return q;
        }
    }

    RatVec vec(int len) {
        RatVec v(len);
        for (auto& q : v) q = small_rational();
        return v;
    }

    RatVec nonzero_vec(int len) {
        while (true) {
            RatVec v = vec(len);
            if (!vec_is_zero(v)) return v;
        }
    }

    KForm form(int n, int k) { return KForm::from_coords(n, k, vec(static_cast<int>(lex_blades(n, k).size()))); }

    KForm nonzero_form(int n, int k) {
        while (true) {
            KForm f = form(n, k);
            if (!f.is_zero()) return f;
        }
    }

    FreePoint point(int n) { return FreePoint(form(n, 1), form(n, 2)); }

    GroupPoint gpoint(const CarnotPresentation& pres) {
        return GroupPoint{vec(pres.rank()), vec(pres.dim_v2())};
    }

  private:
    uint64_t state_;
};

}  // namespace haff
