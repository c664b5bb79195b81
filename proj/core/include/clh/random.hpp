#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "clh/rational.hpp"

namespace clh {

/// Seeded random source.  All derived draws (bits, bounded integers, exact
/// Bernoulli and categorical events) consume the underlying mt19937_64
/// stream deterministically, so identical seeds give identical sample
/// streams on every platform.
class RandomSource {
public:
    explicit RandomSource(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next_u64() { return eng_(); }

    bool next_bit();

    /// Uniform integer in [0, bound); bound >= 1.  Rejection sampling, no
    /// modulo bias.
    std::uint64_t uniform_below(std::uint64_t bound);

    /// Exact Bernoulli draw: true with probability prob (0 <= prob <= 1).
    /// Refines a lazily drawn uniform binary fraction until it separates
    /// from prob, so no rounding enters.
    bool bernoulli(const Rat& prob);

    /// Exact categorical draw over probs (all >= 0, sum <= 1).  Returns the
    /// chosen index, or probs.size() for the residual event of mass
    /// 1 - sum(probs).
    std::size_t categorical(const std::vector<Rat>& probs);

private:
    std::mt19937_64 eng_;
    std::uint64_t bit_buf_ = 0;
    int bits_left_ = 0;
};

}  // namespace clh
