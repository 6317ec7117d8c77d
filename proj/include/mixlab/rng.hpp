#pragma once

#include <cstdint>
#include <vector>

namespace mixlab {

/// Explicit-state pseudo-random generator (xoshiro256**, splitmix64-seeded).
/// The same seed yields a bit-identical sample stream on every platform; no
/// standard-library distributions are used anywhere because their streams
/// are implementation-defined.
class Rng {
public:
    explicit Rng(std::uint64_t seed);

    std::uint64_t next_u64();

    /// Splits off an independent child stream. The parent jumps ahead by
    /// 2^128 draws, so parent and child do not overlap for at least 2^128
    /// subsequent draws each.
    Rng fork();

    /// Uniform in [0, 1).
    double uniform01();
    /// Uniform in [lo, hi); requires lo < hi.
    double uniform(double lo, double hi);
    /// Unbiased uniform integer in [0, n).
    std::uint64_t uniform_below(std::uint64_t n);
    /// Standard normal via Box-Muller.
    double gaussian();
    /// One draw from Gamma(shape, 1), shape > 0.
    double gamma(double shape);
    /// One draw from Beta(alpha, alpha), alpha > 0.
    double beta_symmetric(double alpha);

    /// Uniformly random permutation of {0..n-1} (Fisher-Yates).
    std::vector<std::size_t> permutation(std::size_t n);

    bool operator==(const Rng& o) const = default;

private:
    void jump();

    std::uint64_t s_[4];
};

} // namespace mixlab
