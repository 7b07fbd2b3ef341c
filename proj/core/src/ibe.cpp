#include "ranklab/ibe.hpp"

#include <cmath>
#include <istream>
#include <ostream>

#include "ranklab/hash.hpp"
#include "ranklab/serialize.hpp"

namespace ranklab {

namespace {

constexpr const char* kIdTag = "RANKLAB-IBE-ID-V1";

// signs an externally supplied syndrome with the trapdoor (hash-and-sign
// with the hashing already done)
std::optional<VecFqm> sign_syndrome(const RanksignSecretKey& sk, const VecFqm& s, Rng& rng,
                                    unsigned max_retries) {
    const ExtField& F = *sk.field;
    FqOps fq{F};
    FqmOps fqm{F};
    const LrpcParams& p = sk.params;
    size_t nk = p.n - p.k;
    auto Qinv = try_inverse(fqm, sk.Q);
    auto Pinv = try_inverse(fq, sk.P);
    assert(Qinv && Pinv);
    VecFqm s_q = mat_vec(fqm, *Qinv, s);
    for (unsigned attempt = 0; attempt < max_retries; ++attempt) {
        VecFqm e_t(p.t, F.zero());
        for (auto& x : e_t) x = F.random(rng);
        VecFqm s2 = s_q;
        for (size_t i = 0; i < nk; ++i) {
            Fqm acc = F.zero();
            for (size_t j = 0; j < p.t; ++j) acc = F.add(acc, F.mul(sk.R.at(i, j), e_t[j]));
            s2[i] = F.add(s2[i], acc);
        }
        Subspace T = support(sk.field, e_t);
        if (p.tprime > 0)
            T = T.sum(sample_subspace(sk.field, p.tprime, false, rng));
        auto e_h = lrpc_decode(sk.H, s2, T, p.w, rng);
        if (!e_h) continue;
        VecFqm stacked(p.n + p.t, F.zero());
        for (size_t j = 0; j < p.n; ++j) stacked[j] = (*e_h)[j];
        for (size_t j = 0; j < p.t; ++j) stacked[p.n + j] = e_t[j];
        VecFqm e = vec_mul_fq(F, stacked, transpose(*Pinv));
        if (rank_weight(F, e) == p.w) return e;
    }
    return std::nullopt;
}

} // namespace

VecFqm ibe_hash_id(const ExtField& F, const LrpcParams& sgn, const std::string& id,
                   size_t len) {
    auto digest = sha256(sgn.digest_line());
    std::string digest_str(digest.begin(), digest.end());
    return hash_to_field_vector(F, kIdTag, digest_str, id, len);
}

RankIbeKeys rank_ibe_setup(const RankIbeParams& p, Rng& rng, bool force) {
    if (!force) {
        IbeConstraintReport rep =
            ibe_param_check(p.sgn.a, p.sgn.m, p.n_sgn(), p.k_sgn(), p.n_dec, p.k_dec,
                            p.w_sgn(), p.w_dec);
        if (!(rep.sig_lower && rep.sig_upper && rep.decoding))
            throw std::invalid_argument(
                "parameters fail the signature or decoding constraints (use force to override)");
    }
    auto kp = ranksign_keygen(p.sgn, rng);
    const ExtField& F = *kp.pk.field;
    FqmOps fqm{F};

    MatFqm G_sgn = kernel_basis(fqm, kp.pk.H_pub);
    if (rank_of(fqm, G_sgn) != p.k_sgn()) throw std::logic_error("signing code rank defect");

    FieldPtr field = kp.pk.field;
    for (;;) {
        Subspace Fdec = sample_subspace(field, p.d_dec, /*contains_one=*/false, rng);
        HomogeneousMatrix H_dec =
            sample_homogeneous(field, p.n_dec - p.k_dec, p.n_dec, Fdec, rng);
        if (fq_rational_kernel(F, H_dec.M).rows() != 0) continue;
        MatFqm G_dec = kernel_basis(fqm, H_dec.M);
        if (rank_of(fqm, G_dec) != p.k_dec) continue;
        RankIbeMpk mpk{p, field, std::move(G_sgn), std::move(G_dec), std::move(H_dec)};
        RankIbeMsk msk{std::move(kp.sk)};
        return {std::move(mpk), std::move(msk)};
    }
}

std::optional<IbeUserKey> rank_ibe_extract(const RankIbeKeys& keys, const std::string& id,
                                           Rng& rng, unsigned max_retries) {
    const ExtField& F = *keys.mpk.field;
    FqmOps fqm{F};
    const RankIbeParams& p = keys.mpk.p;

    VecFqm h = ibe_hash_id(F, p.sgn, id, p.n_sgn());
    // the trapdoor inverts the syndrome of H(id); the remainder lies in the
    // signing code and yields u
    RanksignPublicKey pk = ranksign_public_from_secret(keys.msk.sgn_sk);
    VecFqm syn = mat_vec(fqm, pk.H_pub, h);
    auto e = sign_syndrome(keys.msk.sgn_sk, syn, rng, max_retries);
    if (!e) return std::nullopt;
    VecFqm cw(h.size(), F.zero());
    for (size_t j = 0; j < h.size(); ++j) cw[j] = F.add(h[j], (*e)[j]);
    auto usol = solve_linear(fqm, transpose(keys.mpk.G_sgn), cw);
    if (!usol) return std::nullopt;
    IbeUserKey uk{id, usol->x};
    if (!rank_ibe_userkey_ok(keys.mpk, uk)) return std::nullopt;
    return uk;
}

bool rank_ibe_userkey_ok(const RankIbeMpk& mpk, const IbeUserKey& uk) {
    const ExtField& F = *mpk.field;
    FqmOps fqm{F};
    VecFqm prod = vec_mat(fqm, uk.u, mpk.G_sgn);
    VecFqm h = ibe_hash_id(F, mpk.p.sgn, uk.id, mpk.p.n_sgn());
    VecFqm diff(prod.size(), F.zero());
    for (size_t j = 0; j < prod.size(); ++j) diff[j] = F.add(prod[j], h[j]);
    return rank_weight(F, diff) == mpk.p.w_sgn();
}

RankCiphertext rank_ibe_encrypt(const RankIbeMpk& mpk, const std::string& id,
                                const VecFqm& msg, Rng& rng) {
    const ExtField& F = *mpk.field;
    FqmOps fqm{F};
    const RankIbeParams& p = mpk.p;
    if (msg.size() != p.k_dec) throw std::invalid_argument("message length must be k_dec");

    Subspace noise_space = sample_subspace(mpk.field, p.w_dec, false, rng);
    HomogeneousMatrix E = sample_homogeneous(mpk.field, p.n_sgn(), p.n_dec, noise_space, rng);
    VecFqm h = ibe_hash_id(F, p.sgn, id, p.n_sgn());

    RankCiphertext ct;
    ct.C1 = mat_mul(fqm, mpk.G_sgn, E.M);
    ct.C2 = vec_mat(fqm, h, E.M);
    VecFqm code = vec_mat(fqm, msg, mpk.G_dec);
    for (size_t j = 0; j < p.n_dec; ++j) ct.C2[j] = F.add(ct.C2[j], code[j]);
    return ct;
}

std::optional<VecFqm> rank_ibe_decrypt(const RankIbeMpk& mpk, const IbeUserKey& uk,
                                       const RankCiphertext& ct) {
    const ExtField& F = *mpk.field;
    FqmOps fqm{F};
    // u C1 - C2 = (u G_sgn - H(id)) E - m G_dec; characteristic 2 folds the
    // signs away
    VecFqm r = vec_mat(fqm, uk.u, ct.C1);
    for (size_t j = 0; j < r.size(); ++j) r[j] = F.add(r[j], ct.C2[j]);
    VecFqm syn = mat_vec(fqm, mpk.H_dec.M, r);
    auto noise = lrpc_decode_unique(mpk.H_dec, syn);
    if (!noise) return std::nullopt;
    VecFqm cw(r.size(), F.zero());
    for (size_t j = 0; j < r.size(); ++j) cw[j] = F.add(r[j], (*noise)[j]);
    auto msol = solve_linear(fqm, transpose(mpk.G_dec), cw);
    if (!msol) return std::nullopt;
    return msol->x;
}

// --- Hamming mode ------------------------------------------------------------

HammingIbeMpk hamming_ibe_setup(const HammingIbeParams& p, Rng& rng) {
    auto field = ExtField::get(1, 1);
    FqOps fq{*field};
    HammingIbeMpk mpk;
    mpk.p = p;
    for (;;) {
        mpk.G_sgn = random_matrix(fq, p.k_sgn, p.n_sgn, rng);
        if (rank_of(fq, mpk.G_sgn) == p.k_sgn) break;
    }
    for (;;) {
        mpk.G_dec = random_matrix(fq, p.k_dec, p.n_dec, rng);
        if (rank_of(fq, mpk.G_dec) == p.k_dec) break;
    }
    return mpk;
}

std::vector<Fq> hamming_hash_id(const HammingIbeParams& p, const std::string& id) {
    std::string params = std::to_string(p.n_sgn) + ' ' + std::to_string(p.k_sgn) + ' ' +
                         std::to_string(p.w_dec) + ' ' + std::to_string(p.n_dec) + ' ' +
                         std::to_string(p.k_dec);
    auto digest = sha256(params);
    std::string digest_str(digest.begin(), digest.end());
    auto field = ExtField::get(1, 1);
    VecFqm v = hash_to_field_vector(*field, kIdTag, digest_str, id, p.n_sgn);
    std::vector<Fq> bits(p.n_sgn);
    for (size_t j = 0; j < p.n_sgn; ++j) bits[j] = v[j][0];
    return bits;
}

HammingCiphertext hamming_ibe_encrypt(const HammingIbeMpk& mpk, const std::string& id,
                                      const std::vector<Fq>& msg, Rng& rng) {
    const HammingIbeParams& p = mpk.p;
    if (msg.size() != p.k_dec) throw std::invalid_argument("message length must be k_dec");
    auto field = ExtField::get(1, 1);
    FqOps fq{*field};

    // noise columns of exact weight w_dec
    MatFq E(p.n_sgn, p.n_dec, 0);
    for (size_t col = 0; col < p.n_dec; ++col) {
        std::vector<size_t> pos(p.n_sgn);
        for (size_t i = 0; i < p.n_sgn; ++i) pos[i] = i;
        for (size_t i = 0; i < p.w_dec; ++i) {
            size_t j = i + rng.below(p.n_sgn - i);
            std::swap(pos[i], pos[j]);
            E.at(pos[i], col) = 1;
        }
    }
    std::vector<Fq> h = hamming_hash_id(p, id);
    HammingCiphertext ct;
    ct.C1 = mat_mul(fq, mpk.G_sgn, E);
    ct.C2 = vec_mat(fq, h, E);
    std::vector<Fq> code = vec_mat(fq, msg, mpk.G_dec);
    for (size_t j = 0; j < p.n_dec; ++j) ct.C2[j] ^= code[j];
    return ct;
}

HammingNoiseReport check_hamming_noise(unsigned n_sgn, unsigned w_sgn, unsigned w_dec) {
    HammingNoiseReport r;
    if (n_sgn == 0) return r;
    double x = 2.0 * w_sgn * w_dec / n_sgn;
    r.predicted_rate = 0.5 * (1.0 - std::exp(-x));
    r.budget_ratio = static_cast<double>(w_sgn) * w_dec / n_sgn;
    return r;
}

// --- files -------------------------------------------------------------------

namespace {

void expect_ibe_header(std::istream& is, const std::string& role) {
    std::string a, b, c;
    if (!(is >> a >> b >> c) || a != "IBE" || b != "v1" || c != role)
        throw ParseError("bad IBE header (expected " + role + ")");
}

void write_dec_params(std::ostream& os, const RankIbeParams& p) {
    os << "decparams " << p.n_dec << ' ' << p.k_dec << ' ' << p.d_dec << ' ' << p.w_dec
       << '\n';
}

void read_dec_params(std::istream& is, RankIbeParams& p) {
    std::string tag;
    if (!(is >> tag >> p.n_dec >> p.k_dec >> p.d_dec >> p.w_dec) || tag != "decparams")
        throw ParseError("bad decparams line");
}

void write_id_line(std::ostream& os, const std::string& id) {
    os << "id " << id.size() << '\n' << id << '\n';
}

std::string read_id_line(std::istream& is) {
    std::string tag;
    size_t len;
    if (!(is >> tag >> len) || tag != "id") throw ParseError("bad id line");
    is.get(); // newline
    std::string id(len, '\0');
    is.read(id.data(), static_cast<std::streamsize>(len));
    if (!is) throw ParseError("truncated id");
    return id;
}

void write_hamming_params(std::ostream& os, const HammingIbeParams& p) {
    os << "hparams " << p.n_sgn << ' ' << p.k_sgn << ' ' << p.w_dec << ' ' << p.n_dec << ' '
       << p.k_dec << '\n';
}

HammingIbeParams read_hamming_params(std::istream& is) {
    std::string tag;
    HammingIbeParams p;
    if (!(is >> tag >> p.n_sgn >> p.k_sgn >> p.w_dec >> p.n_dec >> p.k_dec) ||
        tag != "hparams")
        throw ParseError("bad hparams line");
    return p;
}

} // namespace

void write_rank_ibe_mpk(std::ostream& os, const RankIbeMpk& mpk) {
    os << "IBE v1 rank-mpk\n";
    write_params_line(os, mpk.p.sgn);
    write_dec_params(os, mpk.p);
    write_mat_fqm(os, *mpk.field, mpk.G_sgn);
    write_mat_fqm(os, *mpk.field, mpk.G_dec);
    write_mat_fq(os, *mpk.field, mpk.H_dec.F.basis_mat());
    os << "---\n";
    write_mat_fqm(os, *mpk.field, mpk.H_dec.M);
}

RankIbeMpk read_rank_ibe_mpk(std::istream& is) {
    expect_ibe_header(is, "rank-mpk");
    RankIbeParams p;
    p.sgn = read_params_line(is);
    read_dec_params(is, p);
    FieldPtr field = ExtField::get(p.sgn.a, p.sgn.m);
    MatFqm G_sgn = read_mat_fqm(is, *field);
    MatFqm G_dec = read_mat_fqm(is, *field);
    MatFq basis = read_mat_fq(is, *field);
    std::string sep;
    if (!(is >> sep) || sep != "---") throw ParseError("missing separator");
    MatFqm Hm = read_mat_fqm(is, *field);
    std::vector<Fqm> gens;
    for (size_t r = 0; r < basis.rows(); ++r)
        gens.push_back(field->from_beta_coords(basis.row(r)));
    HomogeneousMatrix H_dec{std::move(Hm), Subspace::span(field, gens)};
    return {p, field, std::move(G_sgn), std::move(G_dec), std::move(H_dec)};
}

void write_rank_ibe_msk(std::ostream& os, const RankIbeKeys& keys) {
    os << "IBE v1 rank-msk\n";
    write_dec_params(os, keys.mpk.p);
    write_secret_key(os, keys.msk.sgn_sk);
    const ExtField& F = *keys.mpk.field;
    write_mat_fqm(os, F, keys.mpk.G_sgn);
    write_mat_fqm(os, F, keys.mpk.G_dec);
    write_mat_fq(os, F, keys.mpk.H_dec.F.basis_mat());
    os << "---\n";
    write_mat_fqm(os, F, keys.mpk.H_dec.M);
}

RankIbeKeys read_rank_ibe_msk(std::istream& is) {
    expect_ibe_header(is, "rank-msk");
    RankIbeParams p;
    read_dec_params(is, p);
    RanksignSecretKey sk = read_secret_key(is);
    p.sgn = sk.params;
    FieldPtr field = sk.field;
    const ExtField& F = *field;
    MatFqm G_sgn = read_mat_fqm(is, F);
    MatFqm G_dec = read_mat_fqm(is, F);
    MatFq basis = read_mat_fq(is, F);
    std::string sep;
    if (!(is >> sep) || sep != "---") throw ParseError("missing separator");
    MatFqm Hm = read_mat_fqm(is, F);
    std::vector<Fqm> gens;
    for (size_t r = 0; r < basis.rows(); ++r) gens.push_back(F.from_beta_coords(basis.row(r)));
    HomogeneousMatrix H_dec{std::move(Hm), Subspace::span(field, gens)};
    RankIbeMpk mpk{p, field, std::move(G_sgn), std::move(G_dec), std::move(H_dec)};
    return {std::move(mpk), {std::move(sk)}};
}

void write_user_key(std::ostream& os, const ExtField& F, const IbeUserKey& uk) {
    os << "IBE v1 userkey\n";
    write_id_line(os, uk.id);
    write_vec_fqm(os, F, uk.u);
}

IbeUserKey read_user_key(std::istream& is, const ExtField& F) {
    expect_ibe_header(is, "userkey");
    std::string id = read_id_line(is);
    VecFqm u = read_vec_fqm(is, F);
    return {std::move(id), std::move(u)};
}

void write_rank_ct(std::ostream& os, const ExtField& F, const RankCiphertext& ct) {
    os << "IBE v1 rank-ct\n";
    write_mat_fqm(os, F, ct.C1);
    write_vec_fqm(os, F, ct.C2);
}

RankCiphertext read_rank_ct(std::istream& is, const ExtField& F) {
    expect_ibe_header(is, "rank-ct");
    MatFqm C1 = read_mat_fqm(is, F);
    VecFqm C2 = read_vec_fqm(is, F);
    return {std::move(C1), std::move(C2)};
}

void write_hamming_mpk(std::ostream& os, const HammingIbeMpk& mpk) {
    os << "IBE v1 hamming-mpk\n";
    write_hamming_params(os, mpk.p);
    auto field = ExtField::get(1, 1);
    write_mat_fq(os, *field, mpk.G_sgn);
    write_mat_fq(os, *field, mpk.G_dec);
}

HammingIbeMpk read_hamming_mpk(std::istream& is) {
    expect_ibe_header(is, "hamming-mpk");
    HammingIbeMpk mpk;
    mpk.p = read_hamming_params(is);
    auto field = ExtField::get(1, 1);
    mpk.G_sgn = read_mat_fq(is, *field);
    mpk.G_dec = read_mat_fq(is, *field);
    return mpk;
}

void write_hamming_ct(std::ostream& os, const HammingCiphertext& ct) {
    os << "IBE v1 hamming-ct\n";
    auto field = ExtField::get(1, 1);
    write_mat_fq(os, *field, ct.C1);
    MatFq row(1, ct.C2.size(), 0);
    for (size_t j = 0; j < ct.C2.size(); ++j) row.at(0, j) = ct.C2[j];
    write_mat_fq(os, *field, row);
}

HammingCiphertext read_hamming_ct(std::istream& is) {
    expect_ibe_header(is, "hamming-ct");
    auto field = ExtField::get(1, 1);
    MatFq C1 = read_mat_fq(is, *field);
    MatFq row = read_mat_fq(is, *field);
    if (row.rows() != 1) throw ParseError("bad ciphertext vector");
    return {std::move(C1), row.row(0)};
}

} // namespace ranklab
