#ifndef RANKLAB_RSL_HPP
#define RANKLAB_RSL_HPP

#include <iosfwd>

#include "ranklab/bilinear.hpp"
#include "ranklab/lrpc.hpp"

namespace ranklab {

/// Rank support learning: recover the secret subspace F from (A, A E) where
/// every entry of E lies in F.
struct RslParams {
    unsigned a = 1, m = 1;
    unsigned n = 0, k = 0, N = 0, w = 0;
    uint64_t q() const { return 1ULL << a; }
};

struct RslInstance {
    RslParams p;
    FieldPtr field;
    MatFqm A; // (n-k) x n, systematic [I | A']
    MatFqm B; // A E, (n-k) x N
};

struct RslSecret {
    Subspace F; // dim w
    MatFqm E;   // n x N, entries span F
};

std::pair<RslInstance, RslSecret> rsl_gen_instance(const RslParams& p, Rng& rng);

/// Guaranteed dimension N - w k of the subcode with coordinates in F.
long theorem_bound(const RslParams& p);

/// The F_q-linear code spanned by the rows of B^T inside F_{q^m}^{n-k},
/// together with its flattened matrix form and a parity-check of the latter.
struct RslCode {
    MatFq gen;    // N x m(n-k): flattened coordinate expansions of the spanning rows
    MatFq parity; // (m(n-k) - N) x m(n-k) when non-degenerate
    size_t rows_meta = 0, cols_meta = 0; // m and n-k
    bool degenerate = false;             // spanning rows not independent over F_q
};
RslCode rsl_build_code(const RslInstance& inst);

enum class RslStrategy { Exhaustive, Bilinear };

struct RslAttackReport {
    uint64_t words_tried = 0;
    size_t low_rank_words = 0;
    unsigned pivot_retries = 0;
    bool degenerate_code = false;
};

/// Recovers (a subspace of) F from the low-rank codewords of the built code.
/// The exhaustive strategy walks all q^N combinations (hard cap 2^22); the
/// bilinear strategy models rank-w codewords and solves with the standard
/// fixings. Returns the span of the supports of every low-rank word found.
std::optional<Subspace> rsl_attack(const RslInstance& inst, RslStrategy strategy, Rng& rng,
                                   RslAttackReport* report = nullptr, unsigned threads = 1);

/// Constraint report for instantiating the encryption scheme: the signature
/// weight window, the decodability product bound, and the support-learning
/// avoidance bound w_dec (n_sgn - k_sgn) >= n_dec. GV distances are computed
/// exactly when cheap and estimated (flagged) otherwise. q = 2^a.
struct IbeConstraintReport {
    bool sig_lower = false, sig_upper = false; // gv <= w_sgn <= m(n-k)/max(m,n)
    bool decoding = false;                     // w_sgn w_dec <= gv(n_dec, k_dec)
    bool rsl_guard = false;                    // w_dec (n_sgn - k_sgn) >= n_dec
    double gv_sgn = 0, gv_dec = 0;
    bool gv_exact = false;
    double sig_upper_bound = 0;
    long rsl_lhs = 0, rsl_rhs = 0;
    double epsilon_slack = 0; // 1 - w_sgn w_dec / min(m, n_dec)
    bool all_pass() const { return sig_lower && sig_upper && decoding && rsl_guard; }
};
IbeConstraintReport ibe_param_check(unsigned a, unsigned m, unsigned n_sgn, unsigned k_sgn,
                                    unsigned n_dec, unsigned k_dec, unsigned w_sgn,
                                    unsigned w_dec);

void write_rsl_instance(std::ostream& os, const RslInstance& inst);
RslInstance read_rsl_instance(std::istream& is);
void write_rsl_secret(std::ostream& os, const ExtField& F, const RslSecret& sec);
RslSecret read_rsl_secret(std::istream& is, FieldPtr field);

} // namespace ranklab

#endif
