#ifndef RANKLAB_RANKSIGN_HPP
#define RANKLAB_RANKSIGN_HPP

#include <iosfwd>

#include "ranklab/lrpc.hpp"

namespace ranklab {

/// Trapdoor key: H_sec = [H | R] before scrambling. H is homogeneous of
/// weight d with 1 in its coefficient space, R has t uniform columns, P is
/// invertible over F_q, Q invertible over F_{q^m}.
struct RanksignSecretKey {
    LrpcParams params;
    FieldPtr field;
    HomogeneousMatrix H; // (n-k) x n
    MatFqm R;            // (n-k) x t
    MatFq P;             // (n+t) x (n+t)
    MatFqm Q;            // (n-k) x (n-k)
};

struct RanksignPublicKey {
    LrpcParams params;
    FieldPtr field;
    MatFqm H_pub; // (n-k) x (n+t), equal to Q [H|R] P
};

struct RanksignSignature {
    VecFqm e;       // length n+t, rank weight w
    uint64_t nonce; // seed of the internal retry stream
};

struct RanksignKeyPair {
    RanksignPublicKey pk;
    RanksignSecretKey sk;
};

/// Rejects parameters failing the admissibility equalities.
RanksignKeyPair ranksign_keygen(const LrpcParams& params, Rng& rng);

/// Recomputes H_pub = Q [H|R] P from the secret components.
RanksignPublicKey ranksign_public_from_secret(const RanksignSecretKey& sk);

/// Deterministic message hash to a syndrome of length n-k.
VecFqm hash_to_syndrome(const ExtField& F, const LrpcParams& params, const std::string& msg,
                        const std::string& domain_tag = "RANKLAB-SIG-V1");

/// Hash-and-sign: finds e with H_pub e^T = hash(msg)^T and |e| = w via the
/// trapdoor decoder; retries with fresh randomness up to max_retries times.
std::optional<RanksignSignature> ranksign_sign(const RanksignSecretKey& sk,
                                               const std::string& msg, Rng& rng,
                                               unsigned max_retries = 64);

bool ranksign_verify(const RanksignPublicKey& pk, const std::string& msg,
                     const RanksignSignature& sig);

// mixed-field products (entries of the F_q factor lifted to F_{q^m})
MatFqm mul_fqm_fq(const ExtField& F, const MatFqm& A, const MatFq& B);
VecFqm vec_mul_fq(const ExtField& F, const VecFqm& x, const MatFq& B);

// --- key and signature files (header `RANKSIGN v1 <role>`) -----------------
void write_public_key(std::ostream& os, const RanksignPublicKey& pk);
void write_secret_key(std::ostream& os, const RanksignSecretKey& sk);
void write_signature(std::ostream& os, const ExtField& F, const RanksignSignature& sig);
RanksignPublicKey read_public_key(std::istream& is);
RanksignSecretKey read_secret_key(std::istream& is);
RanksignSignature read_signature(std::istream& is, const ExtField& F);

LrpcParams read_params_line(std::istream& is);
void write_params_line(std::ostream& os, const LrpcParams& p);

} // namespace ranklab

#endif
