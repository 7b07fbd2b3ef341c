#include "ranklab/rsl.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <thread>

#include "ranklab/bounds.hpp"
#include "ranklab/ranksign.hpp"
#include "ranklab/serialize.hpp"

namespace ranklab {

std::pair<RslInstance, RslSecret> rsl_gen_instance(const RslParams& p, Rng& rng) {
    if (p.w > p.m || p.k >= p.n) throw std::invalid_argument("need w <= m and k < n");
    FieldPtr field = ExtField::get(p.a, p.m);
    const ExtField& F = *field;
    FqmOps fqm{F};
    size_t nk = p.n - p.k;

    Subspace secret = sample_subspace(field, p.w, /*contains_one=*/false, rng);
    HomogeneousMatrix E = sample_homogeneous(field, p.n, p.N, secret, rng);

    // uniform full-rank A, row-reduced to systematic form (resampled until
    // the leading block is invertible)
    MatFqm A(nk, p.n, F.zero());
    for (;;) {
        A = random_matrix(fqm, nk, p.n, rng);
        MatFqm L(nk, nk, F.zero());
        for (size_t i = 0; i < nk; ++i)
            for (size_t j = 0; j < nk; ++j) L.at(i, j) = A.at(i, j);
        auto Linv = try_inverse(fqm, L);
        if (!Linv) continue;
        A = mat_mul(fqm, *Linv, A);
        break;
    }
    MatFqm B = mat_mul(fqm, A, E.M);
    return {{p, field, std::move(A), std::move(B)}, {secret, std::move(E.M)}};
}

long theorem_bound(const RslParams& p) {
    return static_cast<long>(p.N) - static_cast<long>(p.w) * p.k;
}

RslCode rsl_build_code(const RslInstance& inst) {
    const ExtField& F = *inst.field;
    FqOps fq{F};
    size_t nk = inst.p.n - inst.p.k;
    RslCode code;
    code.rows_meta = F.m();
    code.cols_meta = nk;
    MatFq gen(0, F.m() * nk, 0);
    for (size_t col = 0; col < inst.p.N; ++col) {
        VecFqm c(nk, F.zero());
        for (size_t i = 0; i < nk; ++i) c[i] = inst.B.at(i, col);
        MatFq M = mat_expand(F, c);
        std::vector<Fq> flat;
        flat.reserve(F.m() * nk);
        for (size_t i = 0; i < M.rows(); ++i)
            for (size_t j = 0; j < M.cols(); ++j) flat.push_back(M.at(i, j));
        gen.append_row(flat);
    }
    code.degenerate = rank_of(fq, gen) != inst.p.N;
    code.parity = kernel_basis(fq, gen);
    code.gen = std::move(gen);
    return code;
}

namespace {

void exhaustive_range(const RslInstance& inst, uint64_t begin, uint64_t end,
                      std::vector<Subspace>& supports, uint64_t& low_rank) {
    const ExtField& F = *inst.field;
    size_t nk = inst.p.n - inst.p.k;
    for (uint64_t idx = begin; idx < end; ++idx) {
        // e in F_q^N from the digits of idx
        VecFqm c(nk, F.zero());
        uint64_t v = idx;
        for (size_t col = 0; col < inst.p.N; ++col) {
            Fq coef = static_cast<Fq>(v % F.q());
            v /= F.q();
            if (!coef) continue;
            for (size_t i = 0; i < nk; ++i)
                c[i] = F.add(c[i], F.mul_base(inst.B.at(i, col), coef));
        }
        Subspace sup = support(inst.field, c);
        if (sup.dim() == 0 || sup.dim() > inst.p.w) continue;
        ++low_rank;
        supports.push_back(std::move(sup));
    }
}

} // namespace

std::optional<Subspace> rsl_attack(const RslInstance& inst, RslStrategy strategy, Rng& rng,
                                   RslAttackReport* report, unsigned threads) {
    const ExtField& F = *inst.field;
    RslAttackReport local;
    RslAttackReport& rep = report ? *report : local;

    if (strategy == RslStrategy::Exhaustive) {
        double total = 1;
        for (unsigned i = 0; i < inst.p.N; ++i) total *= static_cast<double>(F.q());
        if (total > static_cast<double>(1ULL << 22))
            throw std::invalid_argument("q^N exceeds the exhaustive cap");
        uint64_t count = static_cast<uint64_t>(total);
        rep.words_tried = count - 1;
        std::vector<Subspace> supports;
        uint64_t low = 0;
        if (threads <= 1 || count < (1 << 12)) {
            exhaustive_range(inst, 1, count, supports, low);
        } else {
            unsigned nt = std::min<unsigned>(threads, 16);
            std::vector<std::vector<Subspace>> outs(nt);
            std::vector<uint64_t> lows(nt, 0);
            std::vector<std::thread> pool;
            for (unsigned t = 0; t < nt; ++t) {
                uint64_t lo = 1 + (count - 1) * t / nt, hi = 1 + (count - 1) * (t + 1) / nt;
                pool.emplace_back([&, t, lo, hi] {
                    exhaustive_range(inst, lo, hi, outs[t], lows[t]);
                });
            }
            for (auto& th : pool) th.join();
            for (unsigned t = 0; t < nt; ++t) {
                low += lows[t];
                for (auto& s : outs[t]) supports.push_back(std::move(s));
            }
        }
        rep.low_rank_words = low;
        if (supports.empty()) return std::nullopt;
        Subspace span = supports.front();
        for (size_t i = 1; i < supports.size() && span.dim() < inst.p.w; ++i)
            span = span.sum(supports[i]);
        return span;
    }

    // bilinear modelling on the flattened matrix code
    RslCode code = rsl_build_code(inst);
    rep.degenerate_code = code.degenerate;
    if (code.degenerate) return std::nullopt;
    size_t nk = inst.p.n - inst.p.k;
    // zero out one less than the guaranteed solution-space dimension, the
    // same reduction used for the signing-code system; anything larger
    // empties the solution set
    long isize = theorem_bound(inst.p) - 1;
    if (isize < 0) isize = 0;

    for (unsigned attempt = 0; attempt < 16; ++attempt) {
        BilinearSystem sys =
            model_rank_w(inst.p.a, code.parity, F.m(), nk, inst.p.w);
        // random zero set I and pivot outside it; the systematic identity
        // pattern also rotates across attempts since the secret space need
        // not project invertibly onto the leading columns
        std::vector<std::pair<unsigned, unsigned>> I;
        std::vector<std::pair<unsigned, unsigned>> all;
        for (unsigned j = 0; j < nk; ++j)
            for (unsigned i = 0; i < inst.p.w; ++i) all.emplace_back(j, i);
        for (size_t j = all.size(); j > 1; --j) std::swap(all[j - 1], all[rng.below(j)]);
        for (long t = 0; t < isize && t < static_cast<long>(all.size()) - 1; ++t)
            I.push_back(all[t]);
        auto pivot_jy = all[I.size()]; // (j, i) outside I
        std::vector<unsigned> xcols(F.m());
        for (unsigned i = 0; i < F.m(); ++i) xcols[i] = i;
        if (attempt > 0)
            for (size_t j = xcols.size(); j > 1; --j) std::swap(xcols[j - 1], xcols[rng.below(j)]);
        xcols.resize(inst.p.w);
        std::sort(xcols.begin(), xcols.end());
        apply_rsl_fixings(sys, I, {pivot_jy.second, pivot_jy.first}, xcols);
        ++rep.pivot_retries;

        // the linearization only pins the system down when few variables
        // stay free; otherwise go straight to the enumeration oracle
        SolverResult sol;
        if (sys.vars_free() <= 20) sol = solve_linearize(sys, 3);
        if (!sol.stats.complete || sol.solutions.empty()) {
            double fx = 1, fy = 1;
            size_t free_x = 0, free_y = 0;
            for (unsigned l = 0; l < sys.w; ++l) {
                for (unsigned i = 0; i < sys.nx; ++i)
                    if (!sys.is_assigned(true, l, i)) ++free_x;
                for (unsigned j = 0; j < sys.ny; ++j)
                    if (!sys.is_assigned(false, l, j)) ++free_y;
            }
            for (size_t t = 0; t < free_x; ++t) fx *= static_cast<double>(F.q());
            for (size_t t = 0; t < free_y; ++t) fy *= static_cast<double>(F.q());
            uint64_t budget = 1ULL << 22;
            try {
                if (std::min(fx, fy) <= static_cast<double>(budget))
                    sol = solve_enumerate(sys, budget, fx <= fy ? EnumAxis::X : EnumAxis::Y,
                                          threads);
            } catch (const BudgetExceeded&) {
            }
        }
        if (sol.solutions.empty()) continue;
        rep.low_rank_words += sol.solutions.size();
        std::optional<Subspace> span;
        for (const auto& [x, y] : sol.solutions) {
            // the support of the reconstructed codeword: the x rows weighted
            // by nonzero y coordinates (an x block facing y^l = 0 is
            // unconstrained and must not leak into the span)
            MatFq M = solution_matrix(sys, x, y);
            std::vector<Fqm> gens;
            for (size_t j = 0; j < M.cols(); ++j) {
                std::vector<Fq> coords(F.m());
                for (unsigned i = 0; i < F.m(); ++i) coords[i] = M.at(i, j);
                gens.push_back(F.from_beta_coords(coords));
            }
            Subspace s = Subspace::span(inst.field, gens);
            span = span ? span->sum(s) : s;
            if (span->dim() >= inst.p.w) break;
        }
        return span;
    }
    return std::nullopt;
}

IbeConstraintReport ibe_param_check(unsigned a, unsigned m, unsigned n_sgn, unsigned k_sgn,
                                    unsigned n_dec, unsigned k_dec, unsigned w_sgn,
                                    unsigned w_dec) {
    IbeConstraintReport r;
    // exact GV when the numbers stay small, the asymptotic estimate otherwise
    double cost = static_cast<double>(a) * m * std::max(n_sgn, n_dec);
    r.gv_exact = cost <= 60000.0;
    if (r.gv_exact) {
        BigInt q = BigInt(1) << a;
        r.gv_sgn = gv_distance_exact(q, m, n_sgn, k_sgn);
        r.gv_dec = gv_distance_exact(q, m, n_dec, k_dec);
    } else {
        r.gv_sgn = gv_distance_asymptotic(m, n_sgn, k_sgn);
        r.gv_dec = gv_distance_asymptotic(m, n_dec, k_dec);
    }
    r.sig_upper_bound =
        static_cast<double>(m) * (n_sgn - k_sgn) / std::max(m, n_sgn);
    r.sig_lower = r.gv_sgn <= w_sgn;
    r.sig_upper = w_sgn <= r.sig_upper_bound;
    r.decoding = static_cast<double>(w_sgn) * w_dec <= r.gv_dec;
    r.rsl_lhs = static_cast<long>(w_dec) * (n_sgn - k_sgn);
    r.rsl_rhs = n_dec;
    r.rsl_guard = r.rsl_lhs >= r.rsl_rhs;
    double denom = std::min(m, n_dec);
    r.epsilon_slack = denom > 0 ? 1.0 - static_cast<double>(w_sgn) * w_dec / denom : 0.0;
    return r;
}

// --- files ------------------------------------------------------------------

namespace {

void write_rsl_params(std::ostream& os, const RslParams& p) {
    os << "rslparams " << p.a << ' ' << p.m << ' ' << p.n << ' ' << p.k << ' ' << p.N << ' '
       << p.w << '\n';
}

RslParams read_rsl_params(std::istream& is) {
    std::string tag;
    RslParams p;
    if (!(is >> tag >> p.a >> p.m >> p.n >> p.k >> p.N >> p.w) || tag != "rslparams")
        throw ParseError("bad rslparams line");
    return p;
}

} // namespace

void write_rsl_instance(std::ostream& os, const RslInstance& inst) {
    os << "RSL v1 instance\n";
    write_rsl_params(os, inst.p);
    write_mat_fqm(os, *inst.field, inst.A);
    write_mat_fqm(os, *inst.field, inst.B);
}

RslInstance read_rsl_instance(std::istream& is) {
    std::string a, b, c;
    if (!(is >> a >> b >> c) || a != "RSL" || b != "v1" || c != "instance")
        throw ParseError("bad RSL instance header");
    RslParams p = read_rsl_params(is);
    FieldPtr field = ExtField::get(p.a, p.m);
    MatFqm A = read_mat_fqm(is, *field);
    MatFqm B = read_mat_fqm(is, *field);
    return {p, field, std::move(A), std::move(B)};
}

void write_rsl_secret(std::ostream& os, const ExtField& F, const RslSecret& sec) {
    os << "RSL v1 secret\n";
    write_mat_fq(os, F, sec.F.basis_mat());
    write_mat_fqm(os, F, sec.E);
}

RslSecret read_rsl_secret(std::istream& is, FieldPtr field) {
    std::string a, b, c;
    if (!(is >> a >> b >> c) || a != "RSL" || b != "v1" || c != "secret")
        throw ParseError("bad RSL secret header");
    MatFq basis = read_mat_fq(is, *field);
    std::vector<Fqm> gens;
    for (size_t r = 0; r < basis.rows(); ++r)
        gens.push_back(field->from_beta_coords(basis.row(r)));
    MatFqm E = read_mat_fqm(is, *field);
    return {Subspace::span(field, gens), std::move(E)};
}

} // namespace ranklab
