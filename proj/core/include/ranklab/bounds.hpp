#ifndef RANKLAB_BOUNDS_HPP
#define RANKLAB_BOUNDS_HPP

#include "ranklab/bigint.hpp"

namespace ranklab {

/// Number of m x n matrices over F_q of rank exactly i:
///   S_i = prod_{j=0}^{i-1} (q^n - q^j)(q^m - q^j) / (q^i - q^j).
/// Exact big-integer value; requires 0 <= i <= min(m, n).
BigInt sphere_size(const BigInt& q, unsigned m, unsigned n, unsigned i);

/// Ball size B_t = sum_{i<=t} S_i.
BigInt ball_size(const BigInt& q, unsigned m, unsigned n, unsigned t);

/// Rank-metric Gilbert-Varshamov distance: smallest t with
/// q^(m(n-k)) <= B_t. Exact computation over big integers.
unsigned gv_distance_exact(const BigInt& q, unsigned m, unsigned n, unsigned k);

/// Asymptotic estimate (m + n - sqrt((m-n)^2 + 4km)) / 2; an estimate, not
/// an exact value.
double gv_distance_asymptotic(unsigned m, unsigned n, unsigned k);

/// Rank-metric Singleton distance floor((n-k) m / max(m, n)) + 1.
unsigned singleton_distance(unsigned m, unsigned n, unsigned k);

/// Binary entropy, h(0) = h(1) = 0.
double binary_entropy(double x);

/// log2 C(n, l) approximation error driver: exact big-integer binomial is
/// big_binomial; the estimate is n h(l/n).
double entropy_estimate(unsigned n, unsigned l);

/// n h(w/n) - k h(w/k): the exponent governing Prange's iteration count.
double prange_exponent(unsigned n, unsigned k, unsigned w);

} // namespace ranklab

#endif
