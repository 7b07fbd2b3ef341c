#include "ranklab/ranksign.hpp"

#include <istream>
#include <ostream>

#include "ranklab/hash.hpp"
#include "ranklab/serialize.hpp"

namespace ranklab {

MatFqm mul_fqm_fq(const ExtField& F, const MatFqm& A, const MatFq& B) {
    assert(A.cols() == B.rows());
    MatFqm C(A.rows(), B.cols(), F.zero());
    for (size_t i = 0; i < A.rows(); ++i)
        for (size_t k = 0; k < A.cols(); ++k) {
            const Fqm& a = A.at(i, k);
            if (F.is_zero(a)) continue;
            for (size_t j = 0; j < B.cols(); ++j)
                if (B.at(k, j)) C.at(i, j) = F.add(C.at(i, j), F.mul_base(a, B.at(k, j)));
        }
    return C;
}

VecFqm vec_mul_fq(const ExtField& F, const VecFqm& x, const MatFq& B) {
    assert(x.size() == B.rows());
    VecFqm y(B.cols(), F.zero());
    for (size_t i = 0; i < x.size(); ++i) {
        if (F.is_zero(x[i])) continue;
        for (size_t j = 0; j < B.cols(); ++j)
            if (B.at(i, j)) y[j] = F.add(y[j], F.mul_base(x[i], B.at(i, j)));
    }
    return y;
}

RanksignKeyPair ranksign_keygen(const LrpcParams& params, Rng& rng) {
    ParamReport rep = validate_params(params);
    if (!rep.ok())
        throw std::invalid_argument("inadmissible signing parameters: " + rep.summary());
    FieldPtr field = ExtField::get(params.a, params.m);
    const ExtField& F = *field;
    FqOps fq{F};
    FqmOps fqm{F};
    size_t nk = params.n - params.k;

    for (;;) {
        // canonical orbit representative so recovered and generated
        // coefficient spaces are directly comparable
        Subspace coeff =
            canonical_unit_orbit(sample_subspace(field, params.d, /*contains_one=*/true, rng));
        HomogeneousMatrix H = sample_homogeneous(field, nk, params.n, coeff, rng);
        // F_q-rational codewords make the support-restricted signing system
        // singular for almost all syndromes (n = (n-k)d is square), so such
        // draws can never sign and are rejected
        if (fq_rational_kernel(F, H.M).rows() != 0) continue;
        MatFqm R = random_matrix(fqm, nk, params.t, rng);

        MatFqm HR(nk, params.n + params.t, F.zero());
        for (size_t i = 0; i < nk; ++i) {
            for (size_t j = 0; j < params.n; ++j) HR.at(i, j) = H.M.at(i, j);
            for (size_t j = 0; j < params.t; ++j) HR.at(i, params.n + j) = R.at(i, j);
        }
        if (rank_of(fqm, HR) != nk) continue; // resample a degenerate draw

        MatFq P = random_invertible(fq, params.n + params.t, rng);
        MatFqm Q = random_invertible(fqm, nk, rng);
        MatFqm H_pub = mat_mul(fqm, Q, mul_fqm_fq(F, HR, P));
        if (rank_of(fqm, H_pub) != nk) continue;

        RanksignKeyPair kp{{params, field, std::move(H_pub)},
                           {params, field, std::move(H), std::move(R), std::move(P),
                            std::move(Q)}};
        return kp;
    }
}

RanksignPublicKey ranksign_public_from_secret(const RanksignSecretKey& sk) {
    const ExtField& F = *sk.field;
    FqmOps fqm{F};
    size_t nk = sk.params.n - sk.params.k;
    MatFqm HR(nk, sk.params.n + sk.params.t, F.zero());
    for (size_t i = 0; i < nk; ++i) {
        for (size_t j = 0; j < sk.params.n; ++j) HR.at(i, j) = sk.H.M.at(i, j);
        for (size_t j = 0; j < sk.params.t; ++j) HR.at(i, sk.params.n + j) = sk.R.at(i, j);
    }
    return {sk.params, sk.field, mat_mul(fqm, sk.Q, mul_fqm_fq(F, HR, sk.P))};
}

VecFqm hash_to_syndrome(const ExtField& F, const LrpcParams& params, const std::string& msg,
                        const std::string& domain_tag) {
    auto digest = sha256(params.digest_line());
    std::string digest_str(digest.begin(), digest.end());
    return hash_to_field_vector(F, domain_tag, digest_str, msg, params.n - params.k);
}

std::optional<RanksignSignature> ranksign_sign(const RanksignSecretKey& sk,
                                               const std::string& msg, Rng& rng,
                                               unsigned max_retries) {
    const ExtField& F = *sk.field;
    FqOps fq{F};
    FqmOps fqm{F};
    const LrpcParams& p = sk.params;
    size_t nk = p.n - p.k;

    VecFqm s = hash_to_syndrome(F, p, msg);
    auto Qinv = try_inverse(fqm, sk.Q);
    auto Pinv = try_inverse(fq, sk.P);
    assert(Qinv && Pinv);
    VecFqm s_q = mat_vec(fqm, *Qinv, s); // Q^{-1} s^T

    uint64_t nonce = rng.u64();
    Rng stream(nonce);
    for (unsigned attempt = 0; attempt < max_retries; ++attempt) {
        // fresh augmented coordinates and erasure space
        VecFqm e_t(p.t, F.zero());
        for (auto& x : e_t) x = F.random(stream);
        VecFqm s2 = s_q;
        for (size_t i = 0; i < nk; ++i) {
            Fqm acc = F.zero();
            for (size_t j = 0; j < p.t; ++j) acc = F.add(acc, F.mul(sk.R.at(i, j), e_t[j]));
            s2[i] = F.add(s2[i], acc); // subtraction in characteristic 2
        }
        Subspace T = support(sk.field, e_t);
        if (p.tprime > 0)
            T = T.sum(sample_subspace(sk.field, p.tprime, /*contains_one=*/false, stream));

        auto e_h = lrpc_decode(sk.H, s2, T, p.w, stream);
        if (!e_h) continue;

        VecFqm stacked(p.n + p.t, F.zero());
        for (size_t j = 0; j < p.n; ++j) stacked[j] = (*e_h)[j];
        for (size_t j = 0; j < p.t; ++j) stacked[p.n + j] = e_t[j];
        VecFqm e = vec_mul_fq(F, stacked, transpose(*Pinv));
        if (rank_weight(F, e) != p.w) continue;
        return RanksignSignature{std::move(e), nonce};
    }
    return std::nullopt;
}

bool ranksign_verify(const RanksignPublicKey& pk, const std::string& msg,
                     const RanksignSignature& sig) {
    const ExtField& F = *pk.field;
    FqmOps fqm{F};
    if (sig.e.size() != pk.H_pub.cols()) return false;
    VecFqm lhs = mat_vec(fqm, pk.H_pub, sig.e);
    VecFqm s = hash_to_syndrome(F, pk.params, msg);
    for (size_t i = 0; i < lhs.size(); ++i)
        if (!F.is_zero(F.add(lhs[i], s[i]))) return false;
    return rank_weight(F, sig.e) == pk.params.w;
}

// --- files ------------------------------------------------------------------

void write_params_line(std::ostream& os, const LrpcParams& p) {
    os << "params " << p.digest_line() << '\n';
}

LrpcParams read_params_line(std::istream& is) {
    std::string tag;
    LrpcParams p;
    if (!(is >> tag >> p.a >> p.m >> p.n >> p.k >> p.d >> p.t >> p.tprime >> p.w) ||
        tag != "params")
        throw ParseError("bad params line");
    return p;
}

namespace {

void expect_header(std::istream& is, const std::string& role) {
    std::string a, b, c;
    if (!(is >> a >> b >> c) || a != "RANKSIGN" || b != "v1" || c != role)
        throw ParseError("bad RANKSIGN header (expected role " + role + ")");
}

void write_homogeneous(std::ostream& os, const ExtField& F, const HomogeneousMatrix& H) {
    write_mat_fq(os, F, H.F.basis_mat());
    os << "---\n";
    write_mat_fqm(os, F, H.M);
}

HomogeneousMatrix read_homogeneous(std::istream& is, FieldPtr field) {
    MatFq basis = read_mat_fq(is, *field);
    std::string sep;
    if (!(is >> sep) || sep != "---") throw ParseError("missing homogeneous separator");
    MatFqm M = read_mat_fqm(is, *field);
    std::vector<Fqm> gens;
    for (size_t r = 0; r < basis.rows(); ++r) {
        std::vector<Fq> row = basis.row(r);
        gens.push_back(field->from_beta_coords(row));
    }
    Subspace F_space = Subspace::span(field, gens);
    return {std::move(M), std::move(F_space)};
}

} // namespace

void write_public_key(std::ostream& os, const RanksignPublicKey& pk) {
    os << "RANKSIGN v1 public\n";
    write_params_line(os, pk.params);
    write_mat_fqm(os, *pk.field, pk.H_pub);
}

RanksignPublicKey read_public_key(std::istream& is) {
    expect_header(is, "public");
    LrpcParams p = read_params_line(is);
    FieldPtr field = ExtField::get(p.a, p.m);
    MatFqm H_pub = read_mat_fqm(is, *field);
    return {p, field, std::move(H_pub)};
}

void write_secret_key(std::ostream& os, const RanksignSecretKey& sk) {
    os << "RANKSIGN v1 secret\n";
    write_params_line(os, sk.params);
    write_homogeneous(os, *sk.field, sk.H);
    write_mat_fqm(os, *sk.field, sk.R);
    write_mat_fq(os, *sk.field, sk.P);
    write_mat_fqm(os, *sk.field, sk.Q);
}

RanksignSecretKey read_secret_key(std::istream& is) {
    expect_header(is, "secret");
    LrpcParams p = read_params_line(is);
    FieldPtr field = ExtField::get(p.a, p.m);
    HomogeneousMatrix H = read_homogeneous(is, field);
    MatFqm R = read_mat_fqm(is, *field);
    MatFq P = read_mat_fq(is, *field);
    MatFqm Q = read_mat_fqm(is, *field);
    return {p, field, std::move(H), std::move(R), std::move(P), std::move(Q)};
}

void write_signature(std::ostream& os, const ExtField& F, const RanksignSignature& sig) {
    os << "RANKSIGN v1 signature\n";
    os << "nonce " << sig.nonce << '\n';
    write_vec_fqm(os, F, sig.e);
}

RanksignSignature read_signature(std::istream& is, const ExtField& F) {
    expect_header(is, "signature");
    std::string tag;
    uint64_t nonce;
    if (!(is >> tag >> nonce) || tag != "nonce") throw ParseError("bad signature nonce line");
    VecFqm e = read_vec_fqm(is, F);
    return {std::move(e), nonce};
}

} // namespace ranklab
