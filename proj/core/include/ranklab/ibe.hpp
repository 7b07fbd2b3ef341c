#ifndef RANKLAB_IBE_HPP
#define RANKLAB_IBE_HPP

#include <iosfwd>

#include "ranklab/ranksign.hpp"
#include "ranklab/rsl.hpp"

namespace ranklab {

/// Identity-based encryption from two codes: a signing code with a
/// hash-and-sign trapdoor (key extraction) and a decodable code (message
/// recovery). Rank mode instantiates the signing code with a RankSign key
/// and the decodable code with a fresh LRPC code.
struct RankIbeParams {
    LrpcParams sgn;                     // signing trapdoor parameters
    unsigned n_dec = 0, k_dec = 0;      // decodable code shape
    unsigned d_dec = 2;                 // its parity-check weight
    unsigned w_dec = 0;                 // homogeneous weight of encryption noise
    unsigned n_sgn() const { return sgn.n + sgn.t; }
    unsigned k_sgn() const { return sgn.k + sgn.t; }
    unsigned w_sgn() const { return sgn.w; }
};

struct RankIbeMpk {
    RankIbeParams p;
    FieldPtr field;
    MatFqm G_sgn; // k_sgn x n_sgn generator of the signing code
    MatFqm G_dec; // k_dec x n_dec generator of the decodable code
    // receivers must decode the decodable code, so its low-weight
    // parity-check ships with the public key; only the signing trapdoor
    // stays secret
    HomogeneousMatrix H_dec;
};

struct RankIbeMsk {
    RanksignSecretKey sgn_sk;
};

struct RankIbeKeys {
    RankIbeMpk mpk;
    RankIbeMsk msk;
};

struct IbeUserKey {
    std::string id;
    VecFqm u; // length k_sgn, |u G_sgn - H(id)| = w_sgn
};

struct RankCiphertext {
    MatFqm C1; // k_sgn x n_dec
    VecFqm C2; // length n_dec
};

/// Rejects parameters failing the signature-window and decodability
/// constraints unless force is set (the support-learning guard is reported
/// but not enforced: breaking it is this library's business).
RankIbeKeys rank_ibe_setup(const RankIbeParams& p, Rng& rng, bool force = false);

VecFqm ibe_hash_id(const ExtField& F, const LrpcParams& sgn, const std::string& id,
                   size_t len);

std::optional<IbeUserKey> rank_ibe_extract(const RankIbeKeys& keys, const std::string& id,
                                           Rng& rng, unsigned max_retries = 64);

/// Verifies the defining distance |u G_sgn - H(id)| = w_sgn.
bool rank_ibe_userkey_ok(const RankIbeMpk& mpk, const IbeUserKey& uk);

RankCiphertext rank_ibe_encrypt(const RankIbeMpk& mpk, const std::string& id,
                                const VecFqm& msg, Rng& rng);

/// Decodes u C1 - C2 against the decodable code; nullopt when the noise term
/// falls outside the decoder's reach.
std::optional<VecFqm> rank_ibe_decrypt(const RankIbeMpk& mpk, const IbeUserKey& uk,
                                       const RankCiphertext& ct);

// --- Hamming mode (encryption target only: no extraction trapdoor) ---------

struct HammingIbeParams {
    unsigned n_sgn = 0, k_sgn = 0;
    unsigned w_dec = 0; // exact column weight of the noise matrix
    unsigned n_dec = 0, k_dec = 0;
};

struct HammingIbeMpk {
    HammingIbeParams p;
    MatFq G_sgn; // k_sgn x n_sgn binary generator
    MatFq G_dec; // k_dec x n_dec binary generator
};

struct HammingCiphertext {
    MatFq C1;            // k_sgn x n_dec
    std::vector<Fq> C2;  // length n_dec
};

HammingIbeMpk hamming_ibe_setup(const HammingIbeParams& p, Rng& rng);

std::vector<Fq> hamming_hash_id(const HammingIbeParams& p, const std::string& id);

HammingCiphertext hamming_ibe_encrypt(const HammingIbeMpk& mpk, const std::string& id,
                                      const std::vector<Fq>& msg, Rng& rng);

/// Predicted relative weight of one noise bit in the Hamming decryption
/// identity, (1/2)(1 - exp(-2 w_sgn w_dec / n)), plus the linear noise
/// budget ratio w_sgn w_dec / n_sgn.
struct HammingNoiseReport {
    double predicted_rate = 0;
    double budget_ratio = 0;
};
HammingNoiseReport check_hamming_noise(unsigned n_sgn, unsigned w_sgn, unsigned w_dec);

// --- files -------------------------------------------------------------------

void write_rank_ibe_mpk(std::ostream& os, const RankIbeMpk& mpk);
RankIbeMpk read_rank_ibe_mpk(std::istream& is);
void write_rank_ibe_msk(std::ostream& os, const RankIbeKeys& keys);
RankIbeKeys read_rank_ibe_msk(std::istream& is);
void write_user_key(std::ostream& os, const ExtField& F, const IbeUserKey& uk);
IbeUserKey read_user_key(std::istream& is, const ExtField& F);
void write_rank_ct(std::ostream& os, const ExtField& F, const RankCiphertext& ct);
RankCiphertext read_rank_ct(std::istream& is, const ExtField& F);
void write_hamming_mpk(std::ostream& os, const HammingIbeMpk& mpk);
HammingIbeMpk read_hamming_mpk(std::istream& is);
void write_hamming_ct(std::ostream& os, const HammingCiphertext& ct);
HammingCiphertext read_hamming_ct(std::istream& is);

} // namespace ranklab

#endif
