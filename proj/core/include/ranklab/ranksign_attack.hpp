#ifndef RANKLAB_RANKSIGN_ATTACK_HPP
#define RANKLAB_RANKSIGN_ATTACK_HPP

#include <iosfwd>

#include "ranklab/bilinear.hpp"
#include "ranklab/ranksign.hpp"

namespace ranklab {

/// The public code with every codeword coordinate projected away from the
/// beta_m = 1 direction: an F_q matrix code of shape (m-1) x (n+t),
/// flattened row-major. Its right kernel is spanned by the flattened
/// projections of the public code's F_q-basis.
struct ProjectedCode {
    MatFq parity;     // ((m-1)(n+t) - (k+t)m) x (m-1)(n+t)
    MatFq code_basis; // (k+t)m x (m-1)(n+t), rows span the projected code
    size_t rows_meta = 0, cols_meta = 0; // m-1 and n+t
};

/// Raised when a structural expectation of the key-recovery pipeline fails;
/// callers retry with different low-rank codewords.
class AssumptionError : public std::runtime_error {
public:
    AssumptionError(std::string which, const std::string& what)
        : std::runtime_error(what), assumption(std::move(which)) {}
    std::string assumption;
};

ProjectedCode build_proj_code(const RanksignPublicKey& pk);

enum class Rank1Strategy { Bilinear, Enumerate };

/// Rank-1 elements of the projected code, in a deterministic order, up to
/// max_results of them. The enumeration strategy walks representatives z of
/// the orbits z ~ a z + b (a in F_q^*, b in F_q) and keeps those z for which
/// the public code has nonzero codewords with all coordinates in <1, z>; the
/// bilinear strategy solves the modelled system with its standard fixings.
std::vector<MatFq> find_rank1(const RanksignPublicKey& pk, const ProjectedCode& proj,
                              Rank1Strategy strategy, Rng& rng, size_t max_results = 16);

/// The unique public codeword whose projection is M (unique once rational
/// codewords are quotiented out; ties broken by smallest serialization).
/// Throws AssumptionError when M is not liftable.
VecFqm lift(const RanksignPublicKey& pk, const MatFq& M);

/// F_q-basis of {c in C_pub : every coordinate of c lies in F'}.
std::vector<VecFqm> compute_cpub_prime(const RanksignPublicKey& pk, const Subspace& Fprime);

/// Everything needed to sign as the legitimate user: S H' P = diag(I_t, R)
/// with P over F_q, S over F_{q^m}, and R homogeneous of weight 2.
struct ForgeKey {
    LrpcParams params;
    FieldPtr field;
    MatFqm Hp; // (n+t-k) x (n+t) parity check of the extended subcode
    MatFqm S;  // (n+t-k) x (n+t-k)
    MatFq P;   // (n+t) x (n+t)
    HomogeneousMatrix R; // (n-k) x n, weight 2, coefficient space contains 1
    std::vector<std::string> checks; // assumption manifest, for the report
};

/// Builds the forging key from a basis of the low-weight subcode; throws
/// AssumptionError naming the failed expectation.
ForgeKey assemble_forge_key(const RanksignPublicKey& pk,
                            const std::vector<VecFqm>& cpub_prime);

/// Signs msg with the recovered decomposition; the result verifies under the
/// victim's public key.
std::optional<RanksignSignature> forged_sign(const RanksignPublicKey& pk, const ForgeKey& fk,
                                             const std::string& msg, Rng& rng,
                                             unsigned max_retries = 64);

struct AttackReport {
    size_t rank1_found = 0;
    unsigned candidates_tried = 0;
    std::vector<std::string> notes;
};

/// Full pipeline: projected code, rank-1 search, lift, low-weight subcode,
/// forging key. Retries across rank-1 candidates when an assumption check
/// fails (bounded at 16).
std::optional<ForgeKey> attack_ranksign(const RanksignPublicKey& pk, Rank1Strategy strategy,
                                        Rng& rng, AttackReport* report = nullptr);

void write_forge_key(std::ostream& os, const ForgeKey& fk);
ForgeKey read_forge_key(std::istream& is);

} // namespace ranklab

#endif
