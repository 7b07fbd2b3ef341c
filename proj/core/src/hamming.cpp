#include "ranklab/hamming.hpp"

#include <thread>

namespace ranklab {

std::optional<std::vector<Fq>> prange_decode(const MatFq& G, const std::vector<Fq>& s,
                                             unsigned w, Rng& rng, uint64_t max_iters,
                                             PrangeStats* stats) {
    auto field = ExtField::get(1, 1);
    FqOps fq{*field};
    size_t k = G.rows(), n = G.cols();
    PrangeStats local;
    PrangeStats& st = stats ? *stats : local;
    st = PrangeStats{};

    std::vector<size_t> pos(n);
    for (size_t i = 0; i < n; ++i) pos[i] = i;
    const uint64_t skip_cap = 64 * max_iters + 1024;

    while (st.iterations < max_iters && st.singular_skips < skip_cap) {
        // uniform size-k column subset carrying the candidate error
        for (size_t i = 0; i < k; ++i) {
            size_t j = i + rng.below(n - i);
            std::swap(pos[i], pos[j]);
        }
        MatFq sub(k, k, 0);
        for (size_t r = 0; r < k; ++r)
            for (size_t c = 0; c < k; ++c) sub.at(r, c) = G.at(r, pos[c]);
        auto sol = solve_linear(fq, sub, s);
        if (!sol || sol->kernel.rows() != 0) {
            ++st.singular_skips;
            continue;
        }
        ++st.iterations;
        size_t weight = 0;
        for (Fq x : sol->x) weight += x != 0;
        if (weight != w) continue;
        std::vector<Fq> e(n, 0);
        for (size_t c = 0; c < k; ++c) e[pos[c]] = sol->x[c];
        st.success = true;
        return e;
    }
    return std::nullopt;
}

HammingBreakResult break_hamming_ibe(const HammingIbeMpk& mpk, const std::string& id,
                                     const HammingCiphertext& ct, Rng& rng,
                                     uint64_t per_column_budget, unsigned threads) {
    auto field = ExtField::get(1, 1);
    FqOps fq{*field};
    const HammingIbeParams& p = mpk.p;
    HammingBreakResult out;
    out.E = MatFq(p.n_sgn, p.n_dec, 0);
    out.columns.assign(p.n_dec, PrangeStats{});

    // one draw from the caller stream seeds all per-column streams, so the
    // serial and threaded paths produce identical artifacts
    uint64_t base = rng.u64();
    auto column_rng = [base](size_t col) {
        uint64_t state = base + 0x9e3779b97f4a7c15ULL * (col + 1);
        return Rng(splitmix64(state));
    };

    std::vector<char> col_ok(p.n_dec, 0);
    auto run_column = [&](size_t col, Rng col_rng) {
        std::vector<Fq> s(p.k_sgn);
        for (size_t r = 0; r < p.k_sgn; ++r) s[r] = ct.C1.at(r, col);
        auto e = prange_decode(mpk.G_sgn, s, p.w_dec, col_rng, per_column_budget,
                               &out.columns[col]);
        if (!e) return;
        for (size_t r = 0; r < p.n_sgn; ++r) out.E.at(r, col) = (*e)[r];
        col_ok[col] = 1;
    };

    if (threads <= 1) {
        for (size_t col = 0; col < p.n_dec; ++col) run_column(col, column_rng(col));
    } else {
        unsigned nt = std::min<unsigned>(threads, 16);
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < nt; ++t)
            pool.emplace_back([&, t] {
                for (size_t col = t; col < p.n_dec; col += nt) run_column(col, column_rng(col));
            });
        for (auto& th : pool) th.join();
    }
    for (size_t col = 0; col < p.n_dec; ++col) {
        out.total_iterations += out.columns[col].iterations;
        if (!col_ok[col]) return out; // a column outlived its budget
    }

    // m G_dec = C2 - H(id) E, then solve for the message
    std::vector<Fq> h = hamming_hash_id(p, id);
    std::vector<Fq> hE = vec_mat(fq, h, out.E);
    std::vector<Fq> cw(p.n_dec);
    for (size_t j = 0; j < p.n_dec; ++j) cw[j] = ct.C2[j] ^ hE[j];
    auto msol = solve_linear(fq, transpose(mpk.G_dec), cw);
    if (!msol) return out;
    out.msg = msol->x;
    out.ok = true;
    return out;
}

} // namespace ranklab
