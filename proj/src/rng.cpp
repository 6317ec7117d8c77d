#include "mixlab/rng.hpp"

#include <cmath>
#include <numbers>

#include "mixlab/errors.hpp"

namespace mixlab {

namespace {

inline std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
}

inline std::uint64_t splitmix64(std::uint64_t& x) {
    std::uint64_t z = (x += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

} // namespace

Rng::Rng(std::uint64_t seed) {
    std::uint64_t x = seed;
    for (auto& s : s_) s = splitmix64(x);
}

std::uint64_t Rng::next_u64() {
    const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
}

void Rng::jump() {
    static constexpr std::uint64_t kJump[] = {0x180ec6d33cfd0abaULL, 0xd5a61266f0c9392cULL,
                                              0xa9582618e03fc9aaULL, 0x39abdc4529b1661cULL};
    std::uint64_t s0 = 0, s1 = 0, s2 = 0, s3 = 0;
    for (std::uint64_t word : kJump)
        for (int b = 0; b < 64; ++b) {
            if (word & (1ULL << b)) {
                s0 ^= s_[0];
                s1 ^= s_[1];
                s2 ^= s_[2];
                s3 ^= s_[3];
            }
            next_u64();
        }
    s_[0] = s0;
    s_[1] = s1;
    s_[2] = s2;
    s_[3] = s3;
}

Rng Rng::fork() {
    Rng child = *this;
    jump();
    return child;
}

double Rng::uniform01() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double Rng::uniform(double lo, double hi) {
    if (!(lo < hi)) throw DomainError("uniform: requires lo < hi");
    return lo + (hi - lo) * uniform01();
}

std::uint64_t Rng::uniform_below(std::uint64_t n) {
    if (n == 0) throw DomainError("uniform_below: n must be positive");
    const std::uint64_t limit = ~std::uint64_t{0} - ~std::uint64_t{0} % n;
    std::uint64_t x;
    do {
        x = next_u64();
    } while (x >= limit);
    return x % n;
}

double Rng::gaussian() {
    // Box-Muller; the second value of the pair is discarded so the state
    // stays a plain four-word stream.
    const double u1 = static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53; // (0, 1]
    const double u2 = uniform01();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

double Rng::gamma(double shape) {
    if (!(shape > 0.0)) throw DomainError("gamma: shape must be positive");
    if (shape < 1.0) {
        // Boost trick: Gamma(a) = Gamma(a+1) * U^(1/a).
        const double g = gamma(shape + 1.0);
        const double u = static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
        return g * std::pow(u, 1.0 / shape);
    }
    // Marsaglia-Tsang squeeze.
    const double d = shape - 1.0 / 3.0;
    const double c = 1.0 / std::sqrt(9.0 * d);
    for (;;) {
        double x, v;
        do {
            x = gaussian();
            v = 1.0 + c * x;
        } while (v <= 0.0);
        v = v * v * v;
        const double u = uniform01();
        if (u < 1.0 - 0.0331 * x * x * x * x) return d * v;
        if (u > 0.0 && std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v;
    }
}

double Rng::beta_symmetric(double alpha) {
    if (!(alpha > 0.0)) throw DomainError("beta_symmetric: alpha must be positive");
    const double g1 = gamma(alpha);
    const double g2 = gamma(alpha);
    if (g1 + g2 == 0.0) return 0.5; // both draws underflowed; the symmetric midpoint
    return g1 / (g1 + g2);
}

std::vector<std::size_t> Rng::permutation(std::size_t n) {
    std::vector<std::size_t> p(n);
    for (std::size_t i = 0; i < n; ++i) p[i] = i;
    for (std::size_t i = n; i > 1; --i) {
        const std::size_t j = static_cast<std::size_t>(uniform_below(i));
        std::swap(p[i - 1], p[j]);
    }
    return p;
}

} // namespace mixlab
