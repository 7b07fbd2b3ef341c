#ifndef RANKLAB_FIELD_HPP
#define RANKLAB_FIELD_HPP

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <vector>

#include "ranklab/rng.hpp"

namespace ranklab {

/// Element of the base field F_q, q = 2^a: an integer < q whose bits are the
/// F_2 coefficients of the residue modulo g.
using Fq = uint32_t;

/// Element of F_{q^m}: m base-field coefficients, index j holding the
/// coefficient of X^j in F_q[X]/(f). The ordered basis used everywhere for
/// coordinates is (X^{m-1}, ..., X, 1): basis index i (1-based) is the
/// monomial X^{m-i}, so the last basis element is 1.
using Fqm = std::vector<Fq>;

/// The tower F_2 < F_q < F_{q^m} with q = 2^a.
///
/// Moduli are deterministic: g and f are the lexicographically smallest
/// irreducible monic polynomials of their degree, coefficients compared from
/// the constant term upward, restricted to nonzero constant term. This makes
/// every serialized artifact portable across implementations.
class ExtField {
public:
    /// 1 <= a <= 32, 1 <= m <= 64. Verifies irreducibility of both moduli.
    ExtField(unsigned a, unsigned m);

    unsigned a() const { return a_; }
    unsigned m() const { return m_; }
    uint64_t q() const { return q_; }

    /// Base modulus g as a bit mask, bit j = coefficient of X^j (degree a).
    uint64_t base_modulus() const { return g_; }
    /// Extension modulus f, f[j] = coefficient of X^j (degree m, monic).
    const std::vector<Fq>& ext_modulus() const { return f_; }

    // --- base field -------------------------------------------------------
    Fq fq_add(Fq x, Fq y) const { return x ^ y; }
    Fq fq_mul(Fq x, Fq y) const;
    Fq fq_inv(Fq x) const;
    Fq fq_pow(Fq x, uint64_t e) const;
    Fq fq_random(Rng& rng) const { return static_cast<Fq>(rng.below(q_)); }

    // --- extension field ---------------------------------------------------
    Fqm zero() const { return Fqm(m_, 0); }
    Fqm one() const;
    Fqm from_base(Fq x) const;
    /// The residue class of X (equals beta_{m-1} when m >= 2).
    Fqm gen() const;
    bool is_zero(const Fqm& x) const;
    bool is_base(const Fqm& x) const; // all mass on the constant coordinate

    Fqm add(const Fqm& x, const Fqm& y) const;
    Fqm mul(const Fqm& x, const Fqm& y) const;
    Fqm mul_base(const Fqm& x, Fq c) const;
    Fqm inv(const Fqm& x) const;
    Fqm pow(const Fqm& x, uint64_t e) const;
    Fqm random(Rng& rng) const;

    /// Coordinate of x on basis element beta_i = X^{m-i}, i in [1, m].
    Fq beta_coord(const Fqm& x, unsigned i) const { return x.at(m_ - i); }
    void set_beta_coord(Fqm& x, unsigned i, Fq v) const { x.at(m_ - i) = v; }
    /// Element with given beta coordinates (index 0 of the span holds beta_1).
    Fqm from_beta_coords(const std::vector<Fq>& c) const;

    /// Numeric comparison of the canonical packed encodings
    /// sum_i c_i q^{i-1}; defines the serialization order used for
    /// tie-breaking. Returns <0, 0, >0.
    int compare(const Fqm& x, const Fqm& y) const;

    /// Shared, cached instance per (a, m).
    static std::shared_ptr<const ExtField> get(unsigned a, unsigned m);

private:
    unsigned a_, m_;
    uint64_t q_;
    uint64_t g_;
    std::vector<Fq> f_;
    std::vector<Fq> log_, exp_; // discrete-log tables when a <= 16

    void build_tables();
};

using FieldPtr = std::shared_ptr<const ExtField>;

/// Irreducibility of a monic polynomial over F_q given by the tower's base
/// field; poly[j] = coefficient of X^j, leading coefficient 1. Uses trial
/// division when the divisor space is small and a gcd-based test otherwise.
bool is_irreducible(const ExtField& base_ops, const std::vector<Fq>& poly);

} // namespace ranklab

#endif
