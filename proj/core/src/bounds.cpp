#include "ranklab/bounds.hpp"

#include <cmath>
#include <stdexcept>

namespace ranklab {

namespace {

BigInt qpow(const BigInt& q, unsigned e) {
    BigInt r = 1;
    for (unsigned i = 0; i < e; ++i) r *= q;
    return r;
}

} // namespace

BigInt sphere_size(const BigInt& q, unsigned m, unsigned n, unsigned i) {
    if (i > std::min(m, n)) throw std::domain_error("sphere radius exceeds min(m,n)");
    if (i == 0) return 1;
    BigInt num = 1, den = 1;
    BigInt qn = qpow(q, n), qm = qpow(q, m), qi = qpow(q, i);
    BigInt qj = 1;
    for (unsigned j = 0; j < i; ++j) {
        num *= (qn - qj) * (qm - qj);
        den *= (qi - qj);
        qj *= q;
    }
    BigInt s = num / den;
    if (s * den != num) throw std::logic_error("sphere size not integral");
    return s;
}

BigInt ball_size(const BigInt& q, unsigned m, unsigned n, unsigned t) {
    BigInt b = 0;
    for (unsigned i = 0; i <= t; ++i) b += sphere_size(q, m, n, i);
    return b;
}

unsigned gv_distance_exact(const BigInt& q, unsigned m, unsigned n, unsigned k) {
    if (k > n) throw std::domain_error("k > n");
    BigInt target = qpow(q, m * (n - k));
    BigInt ball = 0;
    for (unsigned t = 0; t <= std::min(m, n); ++t) {
        ball += sphere_size(q, m, n, t);
        if (ball >= target) return t;
    }
    // the full space has q^(mn) >= q^(m(n-k)) points, so this is unreachable
    throw std::logic_error("ball never reached the syndrome count");
}

double gv_distance_asymptotic(unsigned m, unsigned n, unsigned k) {
    double dm = m, dn = n, dk = k;
    return (dm + dn - std::sqrt((dm - dn) * (dm - dn) + 4.0 * dk * dm)) / 2.0;
}

unsigned singleton_distance(unsigned m, unsigned n, unsigned k) {
    if (k > n) throw std::domain_error("k > n");
    uint64_t num = static_cast<uint64_t>(n - k) * m;
    return static_cast<unsigned>(num / std::max(m, n)) + 1;
}

double binary_entropy(double x) {
    if (x < 0.0 || x > 1.0) throw std::domain_error("entropy argument outside [0,1]");
    if (x == 0.0 || x == 1.0) return 0.0;
    return -x * std::log2(x) - (1.0 - x) * std::log2(1.0 - x);
}

double entropy_estimate(unsigned n, unsigned l) {
    if (l > n) throw std::domain_error("l > n");
    if (n == 0) return 0.0;
    return n * binary_entropy(static_cast<double>(l) / n);
}

double prange_exponent(unsigned n, unsigned k, unsigned w) {
    if (w > k || k > n) throw std::domain_error("need w <= k <= n");
    return entropy_estimate(n, w) - entropy_estimate(k, w);
}

} // namespace ranklab
