#pragma once

#include <cstdint>
#include <string_view>

namespace hyperind {

/// Deterministic 64-bit PRNG (splitmix64). One family across the whole
/// project; named child streams keep independent operations decoupled from
/// each other's draw counts, so adding a draw in one place never perturbs
/// another. Reproducibility contract: identical seeds give identical
/// streams within one build of this implementation.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform double in [0, 1).
    double next_unit() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    /// Uniform integer in [0, bound). bound must be > 0. Rejection sampling,
    /// so the result is exactly uniform.
    std::uint64_t next_below(std::uint64_t bound) {
        const std::uint64_t limit = bound * ((~std::uint64_t{0}) / bound);
        std::uint64_t x;
        do {
            x = next_u64();
        } while (x >= limit);
        return x % bound;
    }

    bool next_bernoulli(double p) { return next_unit() < p; }

    /// Child stream keyed by a label. FNV-1a over the label, mixed with the
    /// parent state snapshot; does not advance the parent.
    Rng derive(std::string_view label) const {
        std::uint64_t h = 0xcbf29ce484222325ULL;
        for (char c : label) {
            h ^= static_cast<unsigned char>(c);
            h *= 0x100000001b3ULL;
        }
        return Rng(state_ ^ h ^ 0x6a09e667f3bcc909ULL);
    }

private:
    std::uint64_t state_;
};

} // namespace hyperind
