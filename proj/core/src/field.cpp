#include "ranklab/field.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace ranklab {

// ---------------------------------------------------------------------------
// binary polynomials as bit masks (bit j = coefficient of X^j)

namespace {

unsigned bin_degree(uint64_t p) { return p ? 63 - __builtin_clzll(p) : 0; }

uint64_t bin_mod(uint64_t x, uint64_t mod) {
    unsigned dm = bin_degree(mod);
    while (x && bin_degree(x) >= dm) x ^= mod << (bin_degree(x) - dm);
    return x;
}

bool bin_irreducible(uint64_t p, unsigned deg) {
    if (deg == 1) return true;
    if ((p & 1) == 0) return false;
    // trial division by every odd polynomial of degree 1..deg/2
    for (unsigned e = 1; 2 * e <= deg; ++e) {
        uint64_t lead = 1ULL << e;
        for (uint64_t low = 1; low < lead; low += 2)
            if (bin_mod(p, lead | low) == 0) return false;
    }
    return true;
}

// smallest irreducible of the given degree, coefficients compared from the
// constant term upward, constant term forced nonzero
uint64_t find_base_modulus(unsigned a) {
    // candidate counter w maps to coefficients c_i = bit (a-1-i) of w,
    // so incrementing w walks the candidates in lexicographic order on
    // (c_0, c_1, ..., c_{a-1})
    for (uint64_t w = 1ULL << (a - 1);; ++w) {
        uint64_t p = 1ULL << a; // monic
        for (unsigned i = 0; i < a; ++i)
            if ((w >> (a - 1 - i)) & 1) p |= 1ULL << i;
        if (bin_irreducible(p, a)) return p;
    }
}

} // namespace

// ---------------------------------------------------------------------------
// dense polynomials over F_q (p[j] = coefficient of X^j)

namespace {

using Poly = std::vector<Fq>;

void poly_trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

int poly_deg(const Poly& p) { return static_cast<int>(p.size()) - 1; }

// x mod f, f monic
Poly poly_mod(const ExtField& K, Poly x, const Poly& f) {
    poly_trim(x);
    int df = poly_deg(f);
    while (poly_deg(x) >= df) {
        Fq c = x.back();
        int shift = poly_deg(x) - df;
        if (c != 0)
            for (int j = 0; j <= df; ++j)
                x[j + shift] = K.fq_add(x[j + shift], K.fq_mul(c, f[j]));
        x.pop_back();
        poly_trim(x);
    }
    return x;
}

Poly poly_mulmod(const ExtField& K, const Poly& a, const Poly& b, const Poly& f) {
    if (a.empty() || b.empty()) return {};
    Poly prod(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j)
            prod[i + j] = K.fq_add(prod[i + j], K.fq_mul(a[i], b[j]));
    }
    return poly_mod(K, std::move(prod), f);
}

Poly poly_gcd(const ExtField& K, Poly a, Poly b) {
    poly_trim(a);
    poly_trim(b);
    while (!b.empty()) {
        // make b monic so poly_mod applies
        Fq lead_inv = K.fq_inv(b.back());
        for (auto& c : b) c = K.fq_mul(c, lead_inv);
        Poly r = poly_mod(K, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

// squaring is linear in characteristic 2: (sum a_i X^i)^2 = sum a_i^2 X^(2i)
Poly poly_sqmod(const ExtField& K, const Poly& a, const Poly& f) {
    if (a.empty()) return {};
    Poly sq(2 * a.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i]) sq[2 * i] = K.fq_mul(a[i], a[i]);
    return poly_mod(K, std::move(sq), f);
}

// X^(q^steps) mod f via repeated squaring (q = 2^a means one application of
// Frobenius is a squarings)
Poly poly_frobenius_power(const ExtField& K, const Poly& f, unsigned steps) {
    Poly x = {0, 1};
    Poly r = poly_mod(K, x, f);
    for (unsigned s = 0; s < steps * K.a(); ++s) r = poly_sqmod(K, r, f);
    return r;
}

} // namespace

bool is_irreducible(const ExtField& K, const std::vector<Fq>& poly) {
    int deg = poly_deg(poly);
    if (deg < 1 || poly.back() != 1) throw std::invalid_argument("monic polynomial expected");
    if (deg == 1) return true;
    if (poly[0] == 0) return false;

    // trial division when the divisor space is small enough to walk
    double space = 0;
    for (int e = 1; 2 * e <= deg; ++e) {
        double s = 1;
        for (int i = 0; i < e; ++i) s *= static_cast<double>(K.q());
        space += s;
    }
    if (space <= (1 << 16)) {
        for (int e = 1; 2 * e <= deg; ++e) {
            Poly div(e + 1, 0);
            div[e] = 1;
            uint64_t count = 1;
            for (int i = 0; i < e; ++i) count *= K.q();
            for (uint64_t idx = 0; idx < count; ++idx) {
                uint64_t v = idx;
                for (int i = 0; i < e; ++i) {
                    div[i] = static_cast<Fq>(v % K.q());
                    v /= K.q();
                }
                if (poly_mod(K, poly, div).empty()) return false;
            }
        }
        return true;
    }

    // gcd test: irreducible iff X^(q^deg) = X mod f and for every prime
    // p | deg, gcd(X^(q^(deg/p)) - X, f) is constant
    Poly x = {0, 1};
    Poly xq = poly_frobenius_power(K, poly, static_cast<unsigned>(deg));
    Poly diff = xq;
    if (diff.size() < 2) diff.resize(2, 0);
    diff[1] = K.fq_add(diff[1], 1);
    poly_trim(diff);
    if (!diff.empty()) return false;
    std::vector<unsigned> primes;
    int d = deg;
    for (int p = 2; p * p <= d; ++p)
        while (d % p == 0) {
            if (primes.empty() || primes.back() != static_cast<unsigned>(p))
                primes.push_back(p);
            d /= p;
        }
    if (d > 1) primes.push_back(d);
    for (unsigned p : primes) {
        Poly xe = poly_frobenius_power(K, poly, deg / p);
        Poly delta = xe;
        if (delta.size() < 2) delta.resize(2, 0);
        delta[1] = K.fq_add(delta[1], 1);
        poly_trim(delta);
        Poly g = poly_gcd(K, poly, delta);
        if (poly_deg(g) > 0) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// ExtField

ExtField::ExtField(unsigned a, unsigned m) : a_(a), m_(m) {
    if (a < 1 || a > 32) throw std::invalid_argument("base field width a out of range [1,32]");
    if (m < 1 || m > 64) throw std::invalid_argument("extension degree m out of range [1,64]");
    q_ = 1ULL << a;
    g_ = find_base_modulus(a);
    build_tables();

    // smallest irreducible f of degree m over F_q, lexicographic from the
    // constant term, constant term nonzero; odometer keeps lexicographic order
    std::vector<Fq> c(m, 0); // c[i] = coefficient of X^i ... compared as (c0, c1, ...)
    c[0] = 1;
    for (;;) {
        std::vector<Fq> cand(m + 1, 0);
        for (unsigned i = 0; i < m; ++i) cand[i] = c[i];
        cand[m] = 1;
        if (is_irreducible(*this, cand)) {
            f_ = cand;
            break;
        }
        // increment: last compare-digit (c[m-1]) varies fastest
        int pos = static_cast<int>(m) - 1;
        while (pos >= 0) {
            if (++c[pos] < q_) break;
            c[pos] = 0;
            --pos;
        }
        if (pos < 0) throw std::logic_error("no irreducible polynomial found");
        if (c[0] == 0) c[0] = 1; // constant term stays nonzero
    }
}

void ExtField::build_tables() {
    if (a_ > 16) return;
    uint64_t order = q_ - 1;
    std::vector<uint64_t> primes;
    uint64_t d = order;
    for (uint64_t p = 2; p * p <= d; ++p)
        while (d % p == 0) {
            if (primes.empty() || primes.back() != p) primes.push_back(p);
            d /= p;
        }
    if (d > 1) primes.push_back(d);

    auto mul_raw = [&](Fq x, Fq y) {
        uint64_t acc = 0, xx = x;
        while (y) {
            if (y & 1) acc ^= xx;
            xx <<= 1;
            y >>= 1;
        }
        unsigned dg = bin_degree(g_);
        while (acc >> dg) {
            unsigned da = bin_degree(acc);
            acc ^= g_ << (da - dg);
        }
        return static_cast<Fq>(acc);
    };
    auto pow_raw = [&](Fq x, uint64_t e) {
        Fq r = 1;
        while (e) {
            if (e & 1) r = mul_raw(r, x);
            x = mul_raw(x, x);
            e >>= 1;
        }
        return r;
    };

    Fq gen = 1;
    for (Fq cand = 2; cand < q_; ++cand) {
        bool primitive = true;
        for (uint64_t p : primes)
            if (pow_raw(cand, order / p) == 1) {
                primitive = false;
                break;
            }
        if (primitive) {
            gen = cand;
            break;
        }
    }
    if (q_ == 2) gen = 1;

    exp_.assign(order, 1);
    log_.assign(q_, 0);
    Fq cur = 1;
    for (uint64_t i = 0; i < order; ++i) {
        exp_[i] = cur;
        log_[cur] = static_cast<Fq>(i);
        cur = mul_raw(cur, gen);
    }
}

Fq ExtField::fq_mul(Fq x, Fq y) const {
    if (x == 0 || y == 0) return 0;
    if (!exp_.empty()) {
        uint64_t s = static_cast<uint64_t>(log_[x]) + log_[y];
        uint64_t order = q_ - 1;
        if (s >= order) s -= order;
        return exp_[s];
    }
    uint64_t acc = 0, xx = x;
    while (y) {
        if (y & 1) acc ^= xx;
        xx <<= 1;
        y >>= 1;
    }
    unsigned dg = bin_degree(g_);
    while (acc >> dg) {
        unsigned da = bin_degree(acc);
        acc ^= g_ << (da - dg);
    }
    return static_cast<Fq>(acc);
}

Fq ExtField::fq_inv(Fq x) const {
    if (x == 0) throw std::domain_error("inverse of zero");
    if (!exp_.empty()) {
        uint64_t order = q_ - 1;
        uint64_t l = log_[x];
        return exp_[(order - l) % order];
    }
    return fq_pow(x, q_ - 2);
}

Fq ExtField::fq_pow(Fq x, uint64_t e) const {
    Fq r = 1;
    while (e) {
        if (e & 1) r = fq_mul(r, x);
        x = fq_mul(x, x);
        e >>= 1;
    }
    return r;
}

Fqm ExtField::one() const {
    Fqm x(m_, 0);
    x[0] = 1;
    return x;
}

Fqm ExtField::from_base(Fq c) const {
    Fqm x(m_, 0);
    x[0] = c;
    return x;
}

Fqm ExtField::gen() const {
    Fqm x(m_, 0);
    if (m_ == 1) {
        // X = -f0 in the degree-1 quotient
        x[0] = f_[0];
    } else {
        x[1] = 1;
    }
    return x;
}

bool ExtField::is_zero(const Fqm& x) const {
    for (Fq c : x)
        if (c) return false;
    return true;
}

bool ExtField::is_base(const Fqm& x) const {
    for (unsigned j = 1; j < m_; ++j)
        if (x[j]) return false;
    return true;
}

Fqm ExtField::add(const Fqm& x, const Fqm& y) const {
    Fqm z(m_);
    for (unsigned j = 0; j < m_; ++j) z[j] = x[j] ^ y[j];
    return z;
}

Fqm ExtField::mul(const Fqm& x, const Fqm& y) const {
    std::vector<Fq> prod(2 * m_ - 1, 0);
    for (unsigned i = 0; i < m_; ++i) {
        if (x[i] == 0) continue;
        for (unsigned j = 0; j < m_; ++j)
            if (y[j]) prod[i + j] = fq_add(prod[i + j], fq_mul(x[i], y[j]));
    }
    for (int d = static_cast<int>(prod.size()) - 1; d >= static_cast<int>(m_); --d) {
        Fq c = prod[d];
        if (c == 0) continue;
        prod[d] = 0;
        for (unsigned j = 0; j < m_; ++j)
            prod[d - m_ + j] = fq_add(prod[d - m_ + j], fq_mul(c, f_[j]));
    }
    prod.resize(m_);
    return prod;
}

Fqm ExtField::mul_base(const Fqm& x, Fq c) const {
    Fqm z(m_);
    for (unsigned j = 0; j < m_; ++j) z[j] = fq_mul(x[j], c);
    return z;
}

Fqm ExtField::inv(const Fqm& x) const {
    if (is_zero(x)) throw std::domain_error("inverse of zero");
    // extended Euclid in F_q[X]: s*x + t*f = gcd
    Poly r0(f_.begin(), f_.end());
    Poly r1(x.begin(), x.end());
    poly_trim(r1);
    Poly s0 = {}, s1 = {1};
    while (!r1.empty()) {
        // divide r0 by r1
        Poly quo;
        Poly rem = r0;
        poly_trim(rem);
        int d1 = poly_deg(r1);
        Fq lead_inv = fq_inv(r1.back());
        while (poly_deg(rem) >= d1) {
            int shift = poly_deg(rem) - d1;
            Fq c = fq_mul(rem.back(), lead_inv);
            if (static_cast<int>(quo.size()) <= shift) quo.resize(shift + 1, 0);
            quo[shift] = fq_add(quo[shift], c);
            for (int j = 0; j <= d1; ++j)
                rem[j + shift] = fq_add(rem[j + shift], fq_mul(c, r1[j]));
            poly_trim(rem);
        }
        // (r0, r1) <- (r1, rem); (s0, s1) <- (s1, s0 - quo*s1)
        Poly qs(quo.size() + s1.size(), 0);
        if (!quo.empty() && !s1.empty()) {
            qs.assign(quo.size() + s1.size() - 1, 0);
            for (size_t i = 0; i < quo.size(); ++i)
                for (size_t j = 0; j < s1.size(); ++j)
                    qs[i + j] = fq_add(qs[i + j], fq_mul(quo[i], s1[j]));
        } else {
            qs.clear();
        }
        Poly s2(std::max(s0.size(), qs.size()), 0);
        for (size_t i = 0; i < s2.size(); ++i) {
            Fq u = i < s0.size() ? s0[i] : 0;
            Fq v = i < qs.size() ? qs[i] : 0;
            s2[i] = fq_add(u, v);
        }
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    // r0 = gcd (a nonzero constant), s0 * x = r0 mod f
    Fq scale = fq_inv(r0[0]);
    Fqm out(m_, 0);
    for (size_t i = 0; i < s0.size() && i < m_; ++i) out[i] = fq_mul(s0[i], scale);
    return out;
}

Fqm ExtField::pow(const Fqm& x, uint64_t e) const {
    Fqm r = one(), base = x;
    while (e) {
        if (e & 1) r = mul(r, base);
        base = mul(base, base);
        e >>= 1;
    }
    return r;
}

Fqm ExtField::random(Rng& rng) const {
    Fqm x(m_);
    for (unsigned j = 0; j < m_; ++j) x[j] = fq_random(rng);
    return x;
}

Fqm ExtField::from_beta_coords(const std::vector<Fq>& c) const {
    if (c.size() != m_) throw std::invalid_argument("coordinate count != m");
    Fqm x(m_);
    for (unsigned i = 1; i <= m_; ++i) x[m_ - i] = c[i - 1];
    return x;
}

int ExtField::compare(const Fqm& x, const Fqm& y) const {
    // packed value sum_i c_i q^(i-1) with c_i = x[m-i]: most significant
    // digit is the constant coefficient, so plain array order decides
    for (unsigned j = 0; j < m_; ++j) {
        if (x[j] < y[j]) return -1;
        if (x[j] > y[j]) return 1;
    }
    return 0;
}

FieldPtr ExtField::get(unsigned a, unsigned m) {
    static std::mutex mu;
    static std::map<std::pair<unsigned, unsigned>, FieldPtr> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(a, m);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    auto field = std::make_shared<const ExtField>(a, m);
    cache.emplace(key, field);
    return field;
}

} // namespace ranklab
