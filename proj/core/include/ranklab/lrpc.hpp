#ifndef RANKLAB_LRPC_HPP
#define RANKLAB_LRPC_HPP

#include <optional>
#include <string>

#include "ranklab/subspace.hpp"

namespace ranklab {

/// Matrix over F_{q^m} whose entries collectively span exactly the
/// coefficient space F (a "homogeneous matrix of weight dim F").
struct HomogeneousMatrix {
    MatFqm M;
    Subspace F;
    size_t d() const { return F.dim(); }
};

/// Parameters of an augmented low-rank-parity-check signing code, q = 2^a.
struct LrpcParams {
    unsigned a = 1, m = 1;
    unsigned n = 0, k = 0;
    unsigned d = 0, t = 0, tprime = 0, w = 0;
    uint64_t q() const { return 1ULL << a; }
    std::string digest_line() const; // canonical params line fed to hashes
};

/// Admissibility report for the three parameter equalities
///   m = (w - t')(d + 1),  n - k = d(w - t - t'),  n = (n - k) d,
/// plus derived quantities and Gilbert-Varshamov context (reported, never
/// enforced).
struct ParamReport {
    bool eq_weight_field = false; // m = (w - t')(d+1)
    bool eq_cokernel = false;     // n - k = d(w - t - t')
    bool eq_length = false;       // n = (n - k) d
    bool derived_w_integral = false;
    double derived_w = 0;     // t + t' + (n-k)/d
    unsigned gv = 0;          // exact GV distance at (q, m, n, k)
    bool w_below_gv = false;  // context only
    bool ok() const { return eq_weight_field && eq_cokernel && eq_length; }
    std::string summary() const;
};

ParamReport validate_params(const LrpcParams& p);

/// Uniform entries in F, resampled until the entries span all of F.
HomogeneousMatrix sample_homogeneous(FieldPtr field, size_t rows, size_t cols,
                                     const Subspace& F, Rng& rng);

struct DecodeStats {
    unsigned padding_added = 0;
    size_t syndrome_support_dim = 0;
    size_t product_space_dim = 0;
    size_t candidate_dim = 0;
    const char* fail_reason = nullptr;
};

/// Errors-and-erasures decoder for a homogeneous parity-check matrix H with
/// coefficient space F = <f_1, ..., f_d>.
///
/// Given syndrome s, a subspace T that the error support must contain, and a
/// target weight w, it proceeds in three steps:
///  1. W <- support(s) + F*T, padded with uniform random elements while its
///     dimension is below d*w - (d-1)*dim(T);
///  2. candidates <- intersection of the f_i^{-1} W; the error support V is
///     T extended by random candidate directions up to dimension w (in the
///     unique-decoding regime the intersection already has dimension w and V
///     is exactly it);
///  3. solve {H e^T = s^T, e_j in V} over F_q, take the lexicographically
///     smallest solution under the canonical serialization order.
///
/// Failures (candidate space too small, inconsistent system, or a solution
/// of the wrong weight) are retryable: callers re-randomize T or padding.
std::optional<VecFqm> lrpc_decode(const HomogeneousMatrix& H, const VecFqm& s,
                                  const Subspace& T, size_t target_w, Rng& rng,
                                  DecodeStats* stats = nullptr);

/// Unique-regime variant: no erasure space and no target weight; recovers
/// the support purely from the syndrome and accepts any consistent solution.
/// Used for bounded-distance decoding of plain LRPC codes.
std::optional<VecFqm> lrpc_decode_unique(const HomogeneousMatrix& H, const VecFqm& s);

/// Solves {H e^T = s^T, e_j in V for all j}; returns the lexicographically
/// smallest solution, or nullopt if inconsistent.
std::optional<VecFqm> solve_with_support(const MatFqm& H, const VecFqm& s, const Subspace& V);

/// Basis (rows) of {u in F_q^n : H u^T = 0}, the F_q-rational codewords of
/// the code with parity-check H. A homogeneous H whose code has such
/// codewords makes the support-restricted syndrome map singular when
/// n = (n-k) d, so key generation rejects those draws.
MatFq fq_rational_kernel(const ExtField& F, const MatFqm& H);

} // namespace ranklab

#endif
