#ifndef RANKLAB_HAMMING_HPP
#define RANKLAB_HAMMING_HPP

#include "ranklab/ibe.hpp"

namespace ranklab {

inline size_t hamming_weight(const std::vector<Fq>& v) {
    size_t w = 0;
    for (Fq x : v) w += x != 0;
    return w;
}

struct PrangeStats {
    uint64_t iterations = 0;     // invertible information-set draws
    uint64_t singular_skips = 0; // draws discarded for a singular submatrix
    bool success = false;
};

/// Information-set decoding for G e^T = s^T with G of shape k x n: guesses a
/// size-k column set carrying the whole error, solves the square system, and
/// accepts on exact weight w. Per-iteration success probability is about
/// C(k, w) / C(n, w) when the weight-w solution is unique. max_iters counts
/// invertible draws only; singular draws are skipped and logged.
std::optional<std::vector<Fq>> prange_decode(const MatFq& G, const std::vector<Fq>& s,
                                             unsigned w, Rng& rng, uint64_t max_iters,
                                             PrangeStats* stats = nullptr);

struct HammingBreakResult {
    bool ok = false;
    MatFq E;                 // recovered noise matrix
    std::vector<Fq> msg;     // recovered plaintext
    std::vector<PrangeStats> columns;
    uint64_t total_iterations = 0;
};

/// Recovers E column by column with the Prange decoder, then peels the
/// noise off C2 and solves for the message.
HammingBreakResult break_hamming_ibe(const HammingIbeMpk& mpk, const std::string& id,
                                     const HammingCiphertext& ct, Rng& rng,
                                     uint64_t per_column_budget, unsigned threads = 1);

} // namespace ranklab

#endif
