#include "ranklab/hash.hpp"

#include <openssl/evp.h>
#include <stdexcept>

namespace ranklab {

std::array<uint8_t, 32> sha256(const uint8_t* data, size_t len) {
    std::array<uint8_t, 32> out{};
    unsigned int outlen = 0;
    if (EVP_Digest(data, len, out.data(), &outlen, EVP_sha256(), nullptr) != 1 || outlen != 32)
        throw std::runtime_error("sha256 failed");
    return out;
}

std::array<uint8_t, 32> sha256(const std::string& s) {
    return sha256(reinterpret_cast<const uint8_t*>(s.data()), s.size());
}

DigitStream::DigitStream(std::string prefix) : prefix_(std::move(prefix)) {}

void DigitStream::refill() {
    std::string buf = prefix_;
    buf.push_back(static_cast<char>((counter_ >> 24) & 0xff));
    buf.push_back(static_cast<char>((counter_ >> 16) & 0xff));
    buf.push_back(static_cast<char>((counter_ >> 8) & 0xff));
    buf.push_back(static_cast<char>(counter_ & 0xff));
    ++counter_;
    block_ = sha256(buf);
    bit_pos_ = 0;
}

uint64_t DigitStream::take_bits(unsigned nbits) {
    uint64_t v = 0;
    for (unsigned b = 0; b < nbits; ++b) {
        if (bit_pos_ >= 256) refill();
        uint64_t bit = (block_[bit_pos_ / 8] >> (bit_pos_ % 8)) & 1;
        v |= bit << b;
        ++bit_pos_;
    }
    return v;
}

VecFqm hash_to_field_vector(const ExtField& F, const std::string& domain_tag,
                            const std::string& params_digest, const std::string& msg,
                            size_t len) {
    std::string prefix = domain_tag;
    prefix.push_back('\0');
    prefix += params_digest;
    prefix.push_back('\0');
    prefix += msg;
    DigitStream stream(prefix);
    VecFqm out(len, F.zero());
    for (size_t j = 0; j < len; ++j) {
        Fqm x = F.zero();
        for (unsigned i = 1; i <= F.m(); ++i)
            F.set_beta_coord(x, i, static_cast<Fq>(stream.take_bits(F.a())));
        out[j] = x;
    }
    return out;
}

} // namespace ranklab
