#include "ranklab/rng.hpp"

namespace ranklab {

uint64_t splitmix64(uint64_t& state) {
    uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

uint64_t Rng::below(uint64_t bound) {
    // rejection over the smallest covering power of two
    if (bound <= 1) return 0;
    unsigned b = 64 - __builtin_clzll(bound - 1);
    for (;;) {
        uint64_t v = bits(b);
        if (v < bound) return v;
    }
}

uint64_t Rng::bits(unsigned nbits) {
    if (nbits == 0) return 0;
    return eng_() >> (64 - nbits);
}

Rng Rng::child(uint64_t index) const {
    uint64_t s = seed_ ^ (0xa5a5a5a55a5a5a5aULL + index);
    uint64_t derived = splitmix64(s);
    return Rng(splitmix64(s) ^ derived);
}

} // namespace ranklab
