#include "ranklab/ranksign_attack.hpp"

#include <istream>
#include <ostream>

#include "ranklab/serialize.hpp"

namespace ranklab {

namespace {

// F_q-basis of the public code: beta_u * g_v over an F_{q^m}-generator
std::vector<VecFqm> public_code_fq_basis(const RanksignPublicKey& pk) {
    const ExtField& F = *pk.field;
    FqmOps fqm{F};
    MatFqm G = kernel_basis(fqm, pk.H_pub); // (k+t) x (n+t)
    std::vector<VecFqm> basis;
    basis.reserve(G.rows() * F.m());
    for (size_t v = 0; v < G.rows(); ++v) {
        for (unsigned u = 1; u <= F.m(); ++u) {
            Fqm beta = F.zero();
            F.set_beta_coord(beta, u, 1);
            VecFqm row(G.cols(), F.zero());
            for (size_t j = 0; j < G.cols(); ++j) row[j] = F.mul(beta, G.at(v, j));
            basis.push_back(std::move(row));
        }
    }
    return basis;
}

std::vector<Fq> flatten_matp(const MatFq& M) {
    std::vector<Fq> flat;
    flat.reserve(M.rows() * M.cols());
    for (size_t i = 0; i < M.rows(); ++i)
        for (size_t j = 0; j < M.cols(); ++j) flat.push_back(M.at(i, j));
    return flat;
}

} // namespace

ProjectedCode build_proj_code(const RanksignPublicKey& pk) {
    const ExtField& F = *pk.field;
    FqOps fq{F};
    const LrpcParams& p = pk.params;
    size_t len = p.n + p.t;

    ProjectedCode out;
    out.rows_meta = F.m() - 1;
    out.cols_meta = len;
    auto basis = public_code_fq_basis(pk);
    MatFq rows(0, (F.m() - 1) * len, 0);
    for (const auto& c : basis) rows.append_row(flatten_matp(matp_expand(F, c)));
    size_t expect = basis.size(); // (k+t) m
    if (rank_of(fq, rows) != expect)
        throw AssumptionError("projected-dimension",
                              "projected code has degenerate dimension");
    out.code_basis = std::move(rows);
    out.parity = kernel_basis(fq, out.code_basis);
    return out;
}

std::vector<MatFq> find_rank1(const RanksignPublicKey& pk, const ProjectedCode& proj,
                              Rank1Strategy strategy, Rng& rng, size_t max_results) {
    const ExtField& F = *pk.field;
    FqOps fq{F};
    const LrpcParams& p = pk.params;
    size_t len = p.n + p.t;
    std::vector<MatFq> found;

    if (strategy == Rank1Strategy::Enumerate) {
        if (F.m() * F.a() > 20)
            throw std::invalid_argument("field too large for subspace enumeration");
        auto basis = public_code_fq_basis(pk);
        uint64_t qm = 1;
        for (unsigned i = 0; i < F.m(); ++i) qm *= F.q();
        for (uint64_t idx = 0; idx < qm && found.size() < max_results; ++idx) {
            Fqm z = Subspace::full(pk.field).element_at(idx);
            if (F.is_base(z)) continue;
            // canonical orbit representative under z -> a z + b
            bool canonical = true;
            for (uint64_t a = 1; a < F.q() && canonical; ++a)
                for (uint64_t b = 0; b < F.q() && canonical; ++b) {
                    Fqm other = F.add(F.mul_base(z, static_cast<Fq>(a)),
                                      F.from_base(static_cast<Fq>(b)));
                    if (F.compare(other, z) < 0) canonical = false;
                }
            if (!canonical) continue;
            Subspace S = Subspace::span(pk.field, {F.one(), z});
            if (S.dim() != 2) continue;
            // codewords with every coordinate inside <1, z>
            MembershipMap mm = subspace_membership_constraints(S, len);
            size_t crow = mm.per_coord_constraints.rows();
            MatFq A(crow * len, basis.size(), 0);
            for (size_t v = 0; v < basis.size(); ++v)
                for (size_t j = 0; j < len; ++j)
                    for (size_t r = 0; r < crow; ++r) {
                        Fq acc = 0;
                        for (unsigned i = 1; i <= F.m(); ++i)
                            acc = F.fq_add(acc,
                                           F.fq_mul(mm.per_coord_constraints.at(r, i - 1),
                                                    F.beta_coord(basis[v][j], i)));
                        A.at(j * crow + r, v) = acc;
                    }
            MatFq K = kernel_basis(fq, A);
            for (size_t r = 0; r < K.rows() && found.size() < max_results; ++r) {
                VecFqm c(len, F.zero());
                for (size_t v = 0; v < basis.size(); ++v) {
                    Fq coef = K.at(r, v);
                    if (!coef) continue;
                    for (size_t j = 0; j < len; ++j)
                        c[j] = F.add(c[j], F.mul_base(basis[v][j], coef));
                }
                MatFq M = matp_expand(F, c);
                if (rank_of(fq, M) == 1) found.push_back(std::move(M));
            }
        }
        return found;
    }

    // bilinear modelling: standard fixings first, then re-randomized
    // normalizations (the x_1 = 1 pin only applies "when there is a solution
    // with x_1 != 0", so retries move the pin and the y slice around)
    unsigned max_attempts = 4 * (static_cast<unsigned>(F.m()) - 1);
    for (unsigned attempt = 0; attempt < max_attempts && found.empty(); ++attempt) {
        BilinearSystem sys = model_rank_w(p.a, proj.parity, F.m() - 1, len, 1);
        if (attempt == 0) {
            Fq alpha = F.fq_random(rng);
            Fq beta = alpha;
            while (beta == alpha && F.q() > 2) beta = F.fq_random(rng);
            apply_ranksign_fixings(sys, p.n, p.d, alpha, beta);
        } else {
            // same shape as the standard fixings, with the pinned x
            // coordinate rotating and the y slice re-randomized
            unsigned xpin = attempt % (static_cast<unsigned>(F.m()) - 1);
            sys.assigns.push_back({true, 0, xpin, 1});
            std::vector<unsigned> idx(len);
            for (size_t j = 0; j < len; ++j) idx[j] = static_cast<unsigned>(j);
            for (size_t j = len; j > 1; --j) std::swap(idx[j - 1], idx[rng.below(j)]);
            unsigned nd = p.n / p.d;
            for (unsigned j = 0; j + 1 < nd; ++j) sys.assigns.push_back({false, 0, idx[j], 0});
            sys.assigns.push_back({false, 0, idx[nd - 1], 1});
        }
        SolverResult sol = solve_linearize(sys, 3);
        if (!sol.stats.complete || sol.solutions.empty()) {
            uint64_t budget = 1ULL << 21;
            try {
                // fall back to enumeration over the smaller axis
                double fx = 1, fy = 1;
                size_t free_x = 0, free_y = 0;
                for (unsigned i = 0; i < sys.nx; ++i)
                    if (!sys.is_assigned(true, 0, i)) ++free_x;
                for (unsigned j = 0; j < sys.ny; ++j)
                    if (!sys.is_assigned(false, 0, j)) ++free_y;
                for (size_t t = 0; t < free_x; ++t) fx *= static_cast<double>(F.q());
                for (size_t t = 0; t < free_y; ++t) fy *= static_cast<double>(F.q());
                EnumAxis axis = fx <= fy ? EnumAxis::X : EnumAxis::Y;
                if (std::min(fx, fy) <= static_cast<double>(budget))
                    sol = solve_enumerate(sys, budget, axis);
            } catch (const BudgetExceeded&) {
            }
        }
        for (const auto& [x, y] : sol.solutions) {
            MatFq M = solution_matrix(sys, x, y);
            if (rank_of(fq, M) == 1) found.push_back(std::move(M));
            if (found.size() >= max_results) break;
        }
    }
    return found;
}

VecFqm lift(const RanksignPublicKey& pk, const MatFq& M) {
    const ExtField& F = *pk.field;
    FqOps fq{F};
    size_t len = pk.params.n + pk.params.t;
    auto basis = public_code_fq_basis(pk);

    // solve for F_q-coefficients of a public codeword whose projection is M
    MatFq A(0, basis.size(), 0);
    {
        MatFq At(basis.size(), (F.m() - 1) * len, 0);
        for (size_t v = 0; v < basis.size(); ++v)
            At.set_row(v, flatten_matp(matp_expand(F, basis[v])));
        A = transpose(At);
    }
    std::vector<Fq> b = flatten_matp(M);
    auto sol = solve_linear(fq, A, b);
    if (!sol) throw AssumptionError("lift", "matrix has no preimage in the public code");

    auto to_codeword = [&](const std::vector<Fq>& u) {
        VecFqm c(len, F.zero());
        for (size_t v = 0; v < basis.size(); ++v)
            if (u[v])
                for (size_t j = 0; j < len; ++j)
                    c[j] = F.add(c[j], F.mul_base(basis[v][j], u[v]));
        return c;
    };
    // choose the smallest serialization among all preimages
    auto to_digits = [&](const VecFqm& c) {
        std::vector<Fq> digits(len * F.m());
        for (size_t j = 0; j < len; ++j)
            for (unsigned i = 1; i <= F.m(); ++i)
                digits[j * F.m() + (i - 1)] = F.beta_coord(c[j], i);
        return digits;
    };
    std::vector<Fq> x0 = to_digits(to_codeword(sol->x));
    MatFq K(0, len * F.m(), 0);
    for (size_t r = 0; r < sol->kernel.rows(); ++r)
        K.append_row(to_digits(to_codeword(sol->kernel.row(r))));
    std::vector<size_t> priority;
    for (size_t j = 0; j < len; ++j)
        for (unsigned i = F.m(); i >= 1; --i) priority.push_back(j * F.m() + (i - 1));
    std::vector<Fq> best = lexmin_affine(fq, std::move(x0), K, priority);
    VecFqm c(len, F.zero());
    for (size_t j = 0; j < len; ++j) {
        std::vector<Fq> coords(best.begin() + j * F.m(), best.begin() + (j + 1) * F.m());
        c[j] = F.from_beta_coords(coords);
    }
    // a zero lexmin pick would mean M = 0; re-add the particular solution then
    if (rank_weight(F, c) == 0 && rank_of(fq, M) > 0) c = to_codeword(sol->x);
    return c;
}

std::vector<VecFqm> compute_cpub_prime(const RanksignPublicKey& pk, const Subspace& Fprime) {
    const ExtField& F = *pk.field;
    FqOps fq{F};
    size_t len = pk.params.n + pk.params.t;
    size_t dprime = Fprime.dim();
    size_t m = F.m();

    // unknowns u[j * dprime + l]: c_j = sum_l u[j,l] f'_l, constrained by
    // H_pub c^T = 0 expanded over F_q
    MatFq A(pk.H_pub.rows() * m, len * dprime, 0);
    for (size_t r = 0; r < pk.H_pub.rows(); ++r)
        for (size_t j = 0; j < len; ++j)
            for (size_t l = 0; l < dprime; ++l) {
                Fqm coeff = F.mul(pk.H_pub.at(r, j), Fprime.basis_elem(l));
                for (unsigned i = 1; i <= m; ++i)
                    A.at(r * m + (i - 1), j * dprime + l) = F.beta_coord(coeff, i);
            }
    MatFq K = kernel_basis(fq, A);
    std::vector<VecFqm> out;
    for (size_t r = 0; r < K.rows(); ++r) {
        VecFqm c(len, F.zero());
        for (size_t j = 0; j < len; ++j) {
            Fqm acc = F.zero();
            for (size_t l = 0; l < dprime; ++l) {
                Fq u = K.at(r, j * dprime + l);
                if (u) acc = F.add(acc, F.mul_base(Fprime.basis_elem(l), u));
            }
            c[j] = acc;
        }
        out.push_back(std::move(c));
    }
    return out;
}

ForgeKey assemble_forge_key(const RanksignPublicKey& pk,
                            const std::vector<VecFqm>& cpub_prime) {
    const ExtField& F = *pk.field;
    FieldPtr field = pk.field;
    FqOps fq{F};
    FqmOps fqm{F};
    const LrpcParams& p = pk.params;
    size_t len = p.n + p.t;
    size_t nk = p.n - p.k;
    ForgeKey fk;
    fk.params = p;
    fk.field = field;

    if (cpub_prime.empty())
        throw AssumptionError("subcode-empty", "low-weight subcode is trivial");

    // the extension of the subcode must have dimension exactly k
    MatFqm Gp(cpub_prime.size(), len, F.zero());
    for (size_t r = 0; r < cpub_prime.size(); ++r) Gp.set_row(r, cpub_prime[r]);
    auto grr = rref(fqm, Gp);
    if (grr.rank != p.k)
        throw AssumptionError("extension-dimension",
                              "extended subcode dimension differs from k");
    fk.checks.push_back("extension-dimension=k");
    MatFqm Gk(p.k, len, F.zero());
    for (size_t r = 0; r < p.k; ++r)
        for (size_t j = 0; j < len; ++j) Gk.at(r, j) = grr.R.at(r, j);

    // recovered coefficient space: the span of all subcode entries
    std::vector<Fqm> entries;
    for (const auto& c : cpub_prime)
        for (const auto& x : c) entries.push_back(x);
    Subspace Frec = Subspace::span(field, entries);
    if (Frec.dim() != 2 || !Frec.contains(F.one()))
        throw AssumptionError("support-shape",
                              "subcode entries do not span a weight-2 space containing 1");
    fk.checks.push_back("support-dim=2,contains-1");

    // dual of the extension, as an F_q space, then the rational and
    // low-support row sets
    MatFqm dual = kernel_basis(fqm, Gk); // (n+t-k) x (n+t)
    std::vector<VecFqm> dual_fq_basis;
    for (size_t v = 0; v < dual.rows(); ++v)
        for (unsigned u = 1; u <= F.m(); ++u) {
            Fqm beta = F.zero();
            F.set_beta_coord(beta, u, 1);
            VecFqm row(len, F.zero());
            for (size_t j = 0; j < len; ++j) row[j] = F.mul(beta, dual.at(v, j));
            dual_fq_basis.push_back(std::move(row));
        }
    auto members_with_support = [&](const Subspace& S) {
        MembershipMap mm = subspace_membership_constraints(S, len);
        size_t crow = mm.per_coord_constraints.rows();
        MatFq A(crow * len, dual_fq_basis.size(), 0);
        for (size_t v = 0; v < dual_fq_basis.size(); ++v)
            for (size_t j = 0; j < len; ++j)
                for (size_t r = 0; r < crow; ++r) {
                    Fq acc = 0;
                    for (unsigned i = 1; i <= F.m(); ++i)
                        acc = F.fq_add(acc, F.fq_mul(mm.per_coord_constraints.at(r, i - 1),
                                                     F.beta_coord(dual_fq_basis[v][j], i)));
                    A.at(j * crow + r, v) = acc;
                }
        MatFq K = kernel_basis(fq, A);
        std::vector<VecFqm> rows;
        for (size_t r = 0; r < K.rows(); ++r) {
            VecFqm c(len, F.zero());
            for (size_t v = 0; v < dual_fq_basis.size(); ++v) {
                Fq coef = K.at(r, v);
                if (!coef) continue;
                for (size_t j = 0; j < len; ++j)
                    c[j] = F.add(c[j], F.mul_base(dual_fq_basis[v][j], coef));
            }
            rows.push_back(std::move(c));
        }
        return rows;
    };
    std::vector<VecFqm> D = members_with_support(Subspace::span(field, {F.one()}));
    std::vector<VecFqm> Dp = members_with_support(Frec);
    if (D.size() < p.t)
        throw AssumptionError("rational-rows", "not enough rational dual codewords");
    if (Dp.size() < nk + 2 * p.t)
        throw AssumptionError("low-support-rows", "low-support dual set is too small");
    fk.checks.push_back("dual-sets-large-enough");

    // greedy basis extraction: t rational rows then n-k low-support rows,
    // tracked by F_{q^m}-rank
    MatFqm Hp(0, len, F.zero());
    auto rank_with = [&](const VecFqm& row) {
        MatFqm tmp = Hp;
        tmp.append_row(row);
        return rank_of(fqm, tmp);
    };
    size_t taken_rational = 0;
    for (const auto& row : D) {
        if (taken_rational == p.t) break;
        if (rank_with(row) > Hp.rows()) {
            Hp.append_row(row);
            ++taken_rational;
        }
    }
    if (taken_rational != p.t)
        throw AssumptionError("rational-extraction", "rational rows do not extend to rank t");
    for (const auto& row : Dp) {
        if (Hp.rows() == len - p.k) break;
        if (rank_with(row) > Hp.rows()) Hp.append_row(row);
    }
    if (Hp.rows() != len - p.k)
        throw AssumptionError("basis-extraction",
                              "rational and low-support rows do not span the dual");
    fk.checks.push_back("basis-extracted");

    // column selection making the rational block invertible over F_q
    size_t rows_total = len - p.k;
    MatFq top(p.t, len, 0);
    for (size_t r = 0; r < p.t; ++r)
        for (size_t j = 0; j < len; ++j) {
            const Fqm& x = Hp.at(r, j);
            if (!F.is_base(x))
                throw AssumptionError("rational-top", "rational rows have non-rational entries");
            top.at(r, j) = F.beta_coord(x, F.m());
        }
    std::vector<size_t> J;
    {
        MatFq sel(p.t, 0, 0);
        for (size_t j = 0; j < len && J.size() < p.t; ++j) {
            MatFq cand(p.t, J.size() + 1, 0);
            for (size_t r = 0; r < p.t; ++r) {
                for (size_t c = 0; c < J.size(); ++c) cand.at(r, c) = top.at(r, J[c]);
                cand.at(r, J.size()) = top.at(r, j);
            }
            if (rank_of(fq, cand) == J.size() + 1) J.push_back(j);
        }
        (void)sel;
    }
    if (J.size() != p.t)
        throw AssumptionError("pivot-columns", "rational block has no invertible minor");

    // permutation moving J to the front
    MatFq Pi(len, len, 0);
    {
        std::vector<char> used(len, 0);
        size_t pos = 0;
        for (size_t j : J) {
            Pi.at(j, pos++) = 1;
            used[j] = 1;
        }
        for (size_t j = 0; j < len; ++j)
            if (!used[j]) Pi.at(j, pos++) = 1;
    }
    MatFqm M1 = mul_fqm_fq(F, Hp, Pi);

    // S: invert the top-left t x t block, then clear below it
    MatFqm S = make_identity(fqm, rows_total);
    if (p.t > 0) {
        MatFq TL(p.t, p.t, 0);
        for (size_t r = 0; r < p.t; ++r)
            for (size_t c = 0; c < p.t; ++c) TL.at(r, c) = F.beta_coord(M1.at(r, c), F.m());
        auto TLinv = try_inverse(fq, TL);
        if (!TLinv) throw AssumptionError("pivot-columns", "rational minor not invertible");
        MatFqm S1 = make_identity(fqm, rows_total);
        for (size_t r = 0; r < p.t; ++r)
            for (size_t c = 0; c < p.t; ++c) S1.at(r, c) = F.from_base(TLinv->at(r, c));
        M1 = mat_mul(fqm, S1, M1);
        S = mat_mul(fqm, S1, S);
        // eliminate the lower block under I_t
        MatFqm S2 = make_identity(fqm, rows_total);
        for (size_t r = p.t; r < rows_total; ++r)
            for (size_t c = 0; c < p.t; ++c) S2.at(r, c) = M1.at(r, c); // -coeff, char 2
        M1 = mat_mul(fqm, S2, M1);
        S = mat_mul(fqm, S2, S);
    }

    // clear the top-right block with F_q column operations
    MatFq Pc = make_identity(fq, len);
    for (size_t r = 0; r < p.t; ++r)
        for (size_t c = p.t; c < len; ++c) {
            const Fqm& x = M1.at(r, c);
            if (F.is_zero(x)) continue;
            if (!F.is_base(x))
                throw AssumptionError("upper-block", "upper block left the base field");
            Pc.at(r, c) = F.beta_coord(x, F.m()); // -value, char 2
        }
    MatFqm M2 = mul_fqm_fq(F, M1, Pc);
    MatFq P = mat_mul(fq, Pi, Pc);

    // lower-right block: homogeneous of weight 2
    MatFqm Rm(nk, p.n, F.zero());
    for (size_t r = 0; r < nk; ++r)
        for (size_t c = 0; c < p.n; ++c) Rm.at(r, c) = M2.at(p.t + r, p.t + c);
    {
        std::vector<Fqm> rentries;
        for (size_t r = 0; r < nk; ++r)
            for (size_t c = 0; c < p.n; ++c) rentries.push_back(Rm.at(r, c));
        Subspace rspan = Subspace::span(field, rentries);
        if (!(rspan == Frec))
            throw AssumptionError("parity-support", "recovered parity spans the wrong space");
    }
    fk.checks.push_back("parity-homogeneous-weight-2");

    // block identity S H' P = diag(I_t, R), verified by direct multiplication
    MatFqm BD = mul_fqm_fq(F, mat_mul(fqm, S, Hp), P);
    for (size_t r = 0; r < rows_total; ++r)
        for (size_t c = 0; c < len; ++c) {
            Fqm expect = F.zero();
            if (r < p.t && c < p.t && r == c) expect = F.one();
            if (r >= p.t && c >= p.t) expect = Rm.at(r - p.t, c - p.t);
            if (!(BD.at(r, c) == expect))
                throw AssumptionError("block-identity", "S H' P is not block diagonal");
        }
    fk.checks.push_back("block-identity-verified");

    if (fq_rational_kernel(F, Rm).rows() != 0)
        throw AssumptionError("degenerate-parity",
                              "recovered parity admits rational codewords");

    fk.Hp = std::move(Hp);
    fk.S = std::move(S);
    fk.P = std::move(P);
    fk.R = HomogeneousMatrix{std::move(Rm), Frec};
    return fk;
}

std::optional<RanksignSignature> forged_sign(const RanksignPublicKey& pk, const ForgeKey& fk,
                                             const std::string& msg, Rng& rng,
                                             unsigned max_retries) {
    const ExtField& F = *pk.field;
    FqOps fq{F};
    FqmOps fqm{F};
    const LrpcParams& p = fk.params;
    size_t len = p.n + p.t;
    size_t nk = p.n - p.k;

    VecFqm s = hash_to_syndrome(F, p, msg);
    auto ysol = solve_linear(fqm, pk.H_pub, s);
    if (!ysol) return std::nullopt; // public key not full rank
    const VecFqm& y = ysol->x;

    auto Pinv = try_inverse(fq, fk.P);
    assert(Pinv);
    VecFqm yprime = vec_mul_fq(F, y, transpose(*Pinv));
    MatFqm BD = mul_fqm_fq(F, mat_mul(fqm, fk.S, fk.Hp), fk.P);
    VecFqm sprime = mat_vec(fqm, BD, yprime);
    VecFqm s1(sprime.begin(), sprime.begin() + p.t);
    VecFqm s2(sprime.begin() + p.t, sprime.end());
    assert(s2.size() == nk);
    (void)nk;

    uint64_t nonce = rng.u64();
    Rng stream(nonce);
    for (unsigned attempt = 0; attempt < max_retries; ++attempt) {
        Subspace T = support(pk.field, s1);
        if (p.tprime > 0)
            T = T.sum(sample_subspace(pk.field, p.tprime, /*contains_one=*/false, stream));
        auto e2 = lrpc_decode(fk.R, s2, T, p.w, stream);
        if (!e2) continue;
        VecFqm stacked(len, F.zero());
        for (size_t j = 0; j < p.t; ++j) stacked[j] = s1[j];
        for (size_t j = 0; j < p.n; ++j) stacked[p.t + j] = (*e2)[j];
        VecFqm e = vec_mul_fq(F, stacked, transpose(fk.P));
        RanksignSignature sig{std::move(e), nonce};
        if (ranksign_verify(pk, msg, sig)) return sig;
    }
    return std::nullopt;
}

std::optional<ForgeKey> attack_ranksign(const RanksignPublicKey& pk, Rank1Strategy strategy,
                                        Rng& rng, AttackReport* report) {
    AttackReport local;
    AttackReport& rep = report ? *report : local;
    ProjectedCode proj = build_proj_code(pk);
    std::vector<MatFq> words = find_rank1(pk, proj, strategy, rng, 16);
    rep.rank1_found = words.size();
    if (words.empty()) {
        rep.notes.push_back("no rank-1 words found");
        return std::nullopt;
    }
    for (const auto& M : words) {
        if (rep.candidates_tried >= 16) break;
        ++rep.candidates_tried;
        try {
            VecFqm c = lift(pk, M);
            Subspace Fprime = support(pk.field, c);
            if (Fprime.dim() != 2) {
                rep.notes.push_back("degenerate lift support");
                continue;
            }
            // the scalings alpha F' with 1 in alpha F' are equivalent
            // trapdoors; normalize to the canonical one
            Fprime = canonical_unit_orbit(Fprime);
            auto sub = compute_cpub_prime(pk, Fprime);
            if (sub.size() < pk.params.n / pk.params.d) {
                rep.notes.push_back("subcode below the guaranteed dimension");
                continue;
            }
            return assemble_forge_key(pk, sub);
        } catch (const AssumptionError& e) {
            rep.notes.push_back("assumption failed: " + e.assumption);
        }
    }
    return std::nullopt;
}

void write_forge_key(std::ostream& os, const ForgeKey& fk) {
    os << "FORGEKEY v1\n";
    write_params_line(os, fk.params);
    const ExtField& F = *fk.field;
    write_mat_fqm(os, F, fk.Hp);
    write_mat_fqm(os, F, fk.S);
    write_mat_fq(os, F, fk.P);
    write_mat_fq(os, F, fk.R.F.basis_mat());
    os << "---\n";
    write_mat_fqm(os, F, fk.R.M);
    os << "checks " << fk.checks.size() << '\n';
    for (const auto& c : fk.checks) os << c << '\n';
}

ForgeKey read_forge_key(std::istream& is) {
    std::string a, b;
    if (!(is >> a >> b) || a != "FORGEKEY" || b != "v1") throw ParseError("bad FORGEKEY header");
    ForgeKey fk;
    fk.params = read_params_line(is);
    fk.field = ExtField::get(fk.params.a, fk.params.m);
    const ExtField& F = *fk.field;
    fk.Hp = read_mat_fqm(is, F);
    fk.S = read_mat_fqm(is, F);
    fk.P = read_mat_fq(is, F);
    MatFq basis = read_mat_fq(is, F);
    std::string sep;
    if (!(is >> sep) || sep != "---") throw ParseError("missing separator");
    MatFqm Rm = read_mat_fqm(is, F);
    std::vector<Fqm> gens;
    for (size_t r = 0; r < basis.rows(); ++r) gens.push_back(F.from_beta_coords(basis.row(r)));
    fk.R = HomogeneousMatrix{std::move(Rm), Subspace::span(fk.field, gens)};
    size_t nchecks;
    if (!(is >> sep >> nchecks) || sep != "checks") throw ParseError("bad checks line");
    for (size_t i = 0; i < nchecks; ++i) {
        std::string line;
        if (!(is >> line)) throw ParseError("missing check");
        fk.checks.push_back(line);
    }
    return fk;
}

} // namespace ranklab
