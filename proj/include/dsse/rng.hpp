#ifndef DSSE_RNG_HPP
#define DSSE_RNG_HPP

#include <cstdint>
#include <random>

namespace dsse {

/// splitmix64 mixing step.
inline std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Derive an independent stream seed from (master seed, stream index).
/// Streams are order-independent: scenario i always gets the same seed
/// regardless of how many other scenarios were drawn before it.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
    return mix64(mix64(master) ^ mix64(index + 0x6a09e667f3bcc909ULL));
}

/// Seeded random stream with the distributions used across the toolkit.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    double uniform(double lo, double hi) {
        return std::uniform_real_distribution<double>(lo, hi)(eng_);
    }
    double normal(double mean, double std) {
        return std::normal_distribution<double>(mean, std)(eng_);
    }
    std::size_t index(std::size_t n) {
        return std::uniform_int_distribution<std::size_t>(0, n - 1)(eng_);
    }
    std::mt19937_64& engine() { return eng_; }

  private:
    std::mt19937_64 eng_;
};

} // namespace dsse

#endif
