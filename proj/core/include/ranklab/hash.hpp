#ifndef RANKLAB_HASH_HPP
#define RANKLAB_HASH_HPP

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "ranklab/matrix.hpp"

namespace ranklab {

std::array<uint8_t, 32> sha256(const uint8_t* data, size_t len);
std::array<uint8_t, 32> sha256(const std::string& s);

/// Expands sha256(prefix || counter) into an unbounded bit stream; the
/// counter is a 32-bit big-endian block index. Bits come out of each byte
/// least-significant first.
class DigitStream {
public:
    explicit DigitStream(std::string prefix);
    uint64_t take_bits(unsigned nbits);

private:
    void refill();
    std::string prefix_;
    uint32_t counter_ = 0;
    std::array<uint8_t, 32> block_{};
    size_t bit_pos_ = 256; // exhausted, forces first refill
};

/// Deterministic hash of (domain-tag || params-digest || msg) to a vector of
/// len elements over the field. Each element consumes a*m bits, m digits of
/// a bits in little-endian digit order (digit i is the beta_i coordinate).
VecFqm hash_to_field_vector(const ExtField& F, const std::string& domain_tag,
                            const std::string& params_digest, const std::string& msg,
                            size_t len);

} // namespace ranklab

#endif
