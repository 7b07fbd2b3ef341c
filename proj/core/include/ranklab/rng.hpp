#ifndef RANKLAB_RNG_HPP
#define RANKLAB_RNG_HPP

#include <cstdint>
#include <random>

namespace ranklab {

/// Deterministic random generator. Every randomized operation in the library
/// takes one of these explicitly; there is no ambient randomness anywhere.
///
/// Backed by std::mt19937_64, whose output stream is fully specified by the
/// standard, so identical seeds give bit-identical runs on every platform.
/// Bounded draws use rejection sampling (std::uniform_int_distribution is
/// implementation-defined and would break cross-platform reproducibility).
class Rng {
public:
    explicit Rng(uint64_t seed) : seed_(seed), eng_(seed) {}

    uint64_t seed() const { return seed_; }

    uint64_t u64() { return eng_(); }

    /// Uniform in [0, bound). bound must be nonzero.
    uint64_t below(uint64_t bound);

    /// Uniform in [0, 2^bits), bits <= 64.
    uint64_t bits(unsigned bits);

    bool coin() { return eng_() >> 63; }

    /// Independent child stream; deterministic in (parent seed, index).
    Rng child(uint64_t index) const;

private:
    uint64_t seed_;
    std::mt19937_64 eng_;
};

/// SplitMix64 step, used for seed derivation.
uint64_t splitmix64(uint64_t& state);

} // namespace ranklab

#endif
