#include "ranklab/lrpc.hpp"

#include <sstream>

#include "ranklab/bounds.hpp"

namespace ranklab {

std::string LrpcParams::digest_line() const {
    std::ostringstream os;
    os << a << ' ' << m << ' ' << n << ' ' << k << ' ' << d << ' ' << t << ' ' << tprime << ' '
       << w;
    return os.str();
}

ParamReport validate_params(const LrpcParams& p) {
    ParamReport r;
    r.eq_weight_field = p.w >= p.tprime && p.m == (p.w - p.tprime) * (p.d + 1);
    r.eq_cokernel = p.k <= p.n && p.w >= p.t + p.tprime &&
                    p.n - p.k == p.d * (p.w - p.t - p.tprime);
    r.eq_length = p.k <= p.n && p.n == (p.n - p.k) * p.d;
    if (p.d > 0 && p.k <= p.n) {
        r.derived_w = p.t + p.tprime + static_cast<double>(p.n - p.k) / p.d;
        r.derived_w_integral = (p.n - p.k) % p.d == 0;
    }
    r.gv = gv_distance_exact(BigInt(p.q()), p.m, p.n, p.k);
    r.w_below_gv = p.w < r.gv;
    return r;
}

std::string ParamReport::summary() const {
    std::ostringstream os;
    os << "m=(w-t')(d+1): " << (eq_weight_field ? "ok" : "FAIL")
       << ", n-k=d(w-t-t'): " << (eq_cokernel ? "ok" : "FAIL")
       << ", n=(n-k)d: " << (eq_length ? "ok" : "FAIL") << ", derived w=" << derived_w
       << (derived_w_integral ? "" : " (non-integral)") << ", gv=" << gv
       << ", w<gv: " << (w_below_gv ? "yes" : "no");
    return os.str();
}

HomogeneousMatrix sample_homogeneous(FieldPtr field, size_t rows, size_t cols,
                                     const Subspace& F, Rng& rng) {
    if (rows * cols < F.dim())
        throw std::invalid_argument("too few entries to span the coefficient space");
    for (;;) {
        MatFqm M(rows, cols, field->zero());
        std::vector<Fqm> entries;
        entries.reserve(rows * cols);
        for (size_t i = 0; i < rows; ++i)
            for (size_t j = 0; j < cols; ++j) {
                M.at(i, j) = F.random_element(rng);
                entries.push_back(M.at(i, j));
            }
        if (Subspace::span(field, entries) == F) return {std::move(M), F};
    }
}

std::optional<VecFqm> solve_with_support(const MatFqm& H, const VecFqm& s, const Subspace& V) {
    const ExtField& F = V.field();
    FqOps ops{F};
    size_t n = H.cols(), rows = H.rows(), w = V.dim(), m = F.m();
    assert(s.size() == rows);

    if (w == 0) {
        for (const auto& si : s)
            if (!F.is_zero(si)) return std::nullopt;
        return VecFqm(n, F.zero());
    }

    // unknowns u[j*w + l]: e_j = sum_l u[j,l] V_l; equations are the beta
    // coordinates of each syndrome row
    MatFq A(rows * m, n * w, 0);
    std::vector<Fq> b(rows * m, 0);
    for (size_t r = 0; r < rows; ++r) {
        for (size_t j = 0; j < n; ++j) {
            for (size_t l = 0; l < w; ++l) {
                Fqm coeff = F.mul(H.at(r, j), V.basis_elem(l));
                for (unsigned i = 1; i <= m; ++i)
                    A.at(r * m + (i - 1), j * w + l) = F.beta_coord(coeff, i);
            }
        }
        for (unsigned i = 1; i <= m; ++i) b[r * m + (i - 1)] = F.beta_coord(s[r], i);
    }
    auto sol = solve_linear(ops, A, b);
    if (!sol) return std::nullopt;

    // move the affine solution set into digit space to pick the smallest
    // serialization: digit (j, i) has significance i = m first within each
    // coordinate (the packed integer's most significant digit is c_m)
    auto params_to_digits = [&](const std::vector<Fq>& u) {
        std::vector<Fq> digits(n * m, 0);
        for (size_t j = 0; j < n; ++j) {
            Fqm e = F.zero();
            for (size_t l = 0; l < w; ++l)
                if (u[j * w + l])
                    e = F.add(e, F.mul_base(V.basis_elem(l), u[j * w + l]));
            for (unsigned i = 1; i <= m; ++i) digits[j * m + (i - 1)] = F.beta_coord(e, i);
        }
        return digits;
    };
    std::vector<Fq> x0 = params_to_digits(sol->x);
    MatFq Kd(0, n * m, 0);
    for (size_t r = 0; r < sol->kernel.rows(); ++r)
        Kd.append_row(params_to_digits(sol->kernel.row(r)));
    std::vector<size_t> priority;
    priority.reserve(n * m);
    for (size_t j = 0; j < n; ++j)
        for (unsigned i = m; i >= 1; --i) priority.push_back(j * m + (i - 1));
    std::vector<Fq> best = lexmin_affine(ops, std::move(x0), Kd, priority);

    VecFqm e(n, F.zero());
    for (size_t j = 0; j < n; ++j) {
        std::vector<Fq> coords(best.begin() + j * m, best.begin() + (j + 1) * m);
        e[j] = F.from_beta_coords(coords);
    }
    return e;
}

std::optional<VecFqm> lrpc_decode(const HomogeneousMatrix& H, const VecFqm& s,
                                  const Subspace& T, size_t target_w, Rng& rng,
                                  DecodeStats* stats) {
    FieldPtr field = T.field_ptr();
    const ExtField& F = *field;
    size_t d = H.d();
    size_t tau = T.dim();
    DecodeStats local{};
    DecodeStats& st = stats ? *stats : local;

    // step 1: product-space estimate W = support(s) + F*T, padded if short
    Subspace W = support(field, s);
    st.syndrome_support_dim = W.dim();
    if (tau > 0) W = W.sum(subspace_product(H.F, T));
    size_t pad_target = 0;
    if (d * target_w >= (d - 1) * tau) pad_target = d * target_w - (d - 1) * tau;
    while (W.dim() < pad_target) {
        W = W.sum(Subspace::of_element(field, F.random(rng)));
        ++st.padding_added;
    }
    st.product_space_dim = W.dim();

    // step 2: candidate support directions
    Subspace cand = scale_subspace(F.inv(H.F.basis_elem(0)), W);
    for (size_t i = 1; i < d && cand.dim() > 0; ++i)
        cand = cand.intersect(scale_subspace(F.inv(H.F.basis_elem(i)), W));
    st.candidate_dim = cand.dim();
    if (cand.dim() < target_w) {
        st.fail_reason = "candidate support too small";
        return std::nullopt;
    }
    Subspace V = T; // T is always inside the candidate set since F*T <= W
    if (cand.dim() == target_w) {
        V = cand;
    } else {
        unsigned budget = 16 * static_cast<unsigned>(target_w) + 16;
        while (V.dim() < target_w && budget--) {
            V = V.sum(Subspace::of_element(field, cand.random_element(rng)));
        }
        if (V.dim() != target_w) {
            st.fail_reason = "support sampling stalled";
            return std::nullopt;
        }
    }

    // step 3: linear recovery within the chosen support
    auto e = solve_with_support(H.M, s, V);
    if (!e) {
        st.fail_reason = "no solution inside support";
        return std::nullopt;
    }
    if (rank_weight(F, *e) != target_w) {
        st.fail_reason = "solution has wrong weight";
        return std::nullopt;
    }
    if (!support(field, *e).contains_subspace(T)) {
        st.fail_reason = "erasure space not covered";
        return std::nullopt;
    }
    return e;
}

std::optional<VecFqm> lrpc_decode_unique(const HomogeneousMatrix& H, const VecFqm& s) {
    FieldPtr field = H.F.field_ptr();
    const ExtField& F = *field;
    Subspace W = support(field, s);
    if (W.dim() == 0) return VecFqm(H.M.cols(), F.zero());
    Subspace V = scale_subspace(F.inv(H.F.basis_elem(0)), W);
    for (size_t i = 1; i < H.d() && V.dim() > 0; ++i)
        V = V.intersect(scale_subspace(F.inv(H.F.basis_elem(i)), W));
    if (V.dim() > 0) {
        auto e = solve_with_support(H.M, s, V);
        if (e) return e;
    }

    // Degraded syndrome support (dim W below d * |e|) starves the direct
    // intersection. Expand one product level: U = W + F W approximates
    // F^2 * support(e), and intersecting the g^{-1} U over a basis of F^2
    // recovers the support when m is large enough.
    Subspace U = W;
    for (size_t i = 0; i < H.d(); ++i)
        U = U.sum(scale_subspace(H.F.basis_elem(i), W));
    Subspace F2 = subspace_product(H.F, H.F);
    if (F2.dim() == 0 || U.dim() >= F.m()) return std::nullopt;
    Subspace V2 = scale_subspace(F.inv(F2.basis_elem(0)), U);
    for (size_t i = 1; i < F2.dim() && V2.dim() > 0; ++i)
        V2 = V2.intersect(scale_subspace(F.inv(F2.basis_elem(i)), U));
    if (V2.dim() == 0) return std::nullopt;
    return solve_with_support(H.M, s, V2);
}

MatFq fq_rational_kernel(const ExtField& F, const MatFqm& H) {
    FqOps ops{F};
    MatFq A(H.rows() * F.m(), H.cols(), 0);
    for (size_t r = 0; r < H.rows(); ++r)
        for (size_t j = 0; j < H.cols(); ++j)
            for (unsigned i = 1; i <= F.m(); ++i)
                A.at(r * F.m() + (i - 1), j) = F.beta_coord(H.at(r, j), i);
    return kernel_basis(ops, A);
}

} // namespace ranklab
