#pragma once

#include <cstdint>
#include <random>

#include "oct/rational.hpp"

namespace oct {

// Deterministic random source. mt19937_64 output is pinned by the standard;
// the reductions below are hand-rolled so that streams are reproducible
// bit-for-bit across standard libraries (std distributions are not).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next_u64() { return eng_(); }

    // Uniform in [0, bound), unbiased via rejection.
    std::uint64_t below(std::uint64_t bound) {
        if (bound <= 1) return 0;
        std::uint64_t limit = ~0ULL - ~0ULL % bound;
        std::uint64_t x;
        do {
            x = next_u64();
        } while (x >= limit);
        return x % bound;
    }

    // Uniform in [lo, hi], inclusive.
    int range(int lo, int hi) {
        return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo) + 1));
    }

    // True with probability num/den (exactly, den > 0).
    bool chance(long long num, long long den) {
        if (num <= 0) return false;
        if (num >= den) return true;
        return below(static_cast<std::uint64_t>(den)) < static_cast<std::uint64_t>(num);
    }
    bool chance(const Rational& p) { return chance(p.num(), p.den()); }

    // Random positive test weight: k/d with k in [1,100], d in {1,2,4,5}.
    Rational weight() {
        static constexpr int dens[4] = {1, 2, 4, 5};
        return Rational(range(1, 100), dens[below(4)]);
    }

private:
    std::mt19937_64 eng_;
};

}  // namespace oct
