#pragma once

#include <cstdint>
#include <random>

namespace boolcomb {

// Seeded generator threaded explicitly through every randomized routine.
// Bounded draws avoid std::uniform_int_distribution so sequences are the
// same across standard libraries.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next() { return eng_(); }

    // Uniform in [0, bound); bound must be positive.
    std::uint64_t below(std::uint64_t bound) {
        std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
        std::uint64_t x;
        do x = eng_();
        while (x >= limit);
        return x % bound;
    }

    bool coin() { return eng_() >> 63; }
    bool chance(double p) { return static_cast<double>(eng_() >> 11) * 0x1.0p-53 < p; }

    template <class It>
    void shuffle(It first, It last) {
        for (auto n = last - first; n > 1; --n) std::swap(first[n - 1], first[below(n)]);
    }

    // Independent stream for a sub-task, so parallel checks stay reproducible.
    Rng split(std::uint64_t salt) { return Rng(eng_() ^ (salt * 0x9E3779B97F4A7C15ULL)); }

private:
    std::mt19937_64 eng_;
};

}  // namespace boolcomb
