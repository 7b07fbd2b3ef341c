#include "ranklab/subspace.hpp"

namespace ranklab {

namespace {

std::vector<Fq> beta_row(const ExtField& F, const Fqm& x) {
    std::vector<Fq> row(F.m());
    for (unsigned i = 1; i <= F.m(); ++i) row[i - 1] = F.beta_coord(x, i);
    return row;
}

Fqm from_beta_row(const ExtField& F, const std::vector<Fq>& row) {
    return F.from_beta_coords(row);
}

} // namespace

Subspace Subspace::full(FieldPtr field) {
    Subspace s(field);
    FqOps ops{*field};
    s.basis_ = make_identity(ops, field->m());
    return s;
}

Subspace Subspace::span(FieldPtr field, const std::vector<Fqm>& gens) {
    Subspace s(field);
    MatFq rows(0, field->m(), 0);
    for (const auto& g : gens) rows.append_row(beta_row(*field, g));
    FqOps ops{*field};
    auto rr = rref(ops, rows);
    MatFq basis(rr.rank, field->m(), 0);
    for (size_t r = 0; r < rr.rank; ++r)
        for (size_t c = 0; c < field->m(); ++c) basis.at(r, c) = rr.R.at(r, c);
    s.basis_ = std::move(basis);
    return s;
}

Subspace Subspace::of_element(FieldPtr field, const Fqm& x) {
    return span(field, {x});
}

Fqm Subspace::basis_elem(size_t r) const { return from_beta_row(*F_, basis_.row(r)); }

bool Subspace::contains(const Fqm& x) const {
    // reduce x against the RREF basis
    std::vector<Fq> v = beta_row(*F_, x);
    FqOps ops{*F_};
    for (size_t r = 0; r < basis_.rows(); ++r) {
        size_t pivot = 0;
        while (pivot < basis_.cols() && basis_.at(r, pivot) == 0) ++pivot;
        if (pivot == basis_.cols()) continue;
        if (v[pivot] == 0) continue;
        Fq c = v[pivot];
        for (size_t j = 0; j < basis_.cols(); ++j)
            v[j] = ops.sub(v[j], ops.mul(c, basis_.at(r, j)));
    }
    for (Fq c : v)
        if (c) return false;
    return true;
}

bool Subspace::contains_subspace(const Subspace& other) const {
    for (size_t r = 0; r < other.dim(); ++r)
        if (!contains(other.basis_elem(r))) return false;
    return true;
}

std::optional<std::vector<Fq>> Subspace::coords_in(const Fqm& x) const {
    std::vector<Fq> v = beta_row(*F_, x);
    std::vector<Fq> coeffs(dim(), 0);
    FqOps ops{*F_};
    for (size_t r = 0; r < basis_.rows(); ++r) {
        size_t pivot = 0;
        while (pivot < basis_.cols() && basis_.at(r, pivot) == 0) ++pivot;
        if (pivot == basis_.cols() || v[pivot] == 0) continue;
        Fq c = v[pivot];
        coeffs[r] = c;
        for (size_t j = 0; j < basis_.cols(); ++j)
            v[j] = ops.sub(v[j], ops.mul(c, basis_.at(r, j)));
    }
    for (Fq c : v)
        if (c) return std::nullopt;
    return coeffs;
}

Fqm Subspace::element(const std::vector<Fq>& coeffs) const {
    assert(coeffs.size() == dim());
    Fqm acc = F_->zero();
    for (size_t r = 0; r < dim(); ++r) {
        if (coeffs[r] == 0) continue;
        acc = F_->add(acc, F_->mul_base(basis_elem(r), coeffs[r]));
    }
    return acc;
}

Fqm Subspace::element_at(uint64_t index) const {
    std::vector<Fq> coeffs(dim());
    for (size_t r = 0; r < dim(); ++r) {
        coeffs[r] = static_cast<Fq>(index % F_->q());
        index /= F_->q();
    }
    return element(coeffs);
}

Fqm Subspace::random_element(Rng& rng) const {
    std::vector<Fq> coeffs(dim());
    for (auto& c : coeffs) c = F_->fq_random(rng);
    return element(coeffs);
}

Subspace Subspace::sum(const Subspace& other) const {
    std::vector<Fqm> gens;
    for (size_t r = 0; r < dim(); ++r) gens.push_back(basis_elem(r));
    for (size_t r = 0; r < other.dim(); ++r) gens.push_back(other.basis_elem(r));
    return span(F_, gens);
}

Subspace Subspace::intersect(const Subspace& other) const {
    // kernel of (a, b) -> a U + b V gives intersecting combinations
    size_t du = dim(), dv = other.dim();
    if (du == 0 || dv == 0) return zero(F_);
    MatFq stacked(F_->m(), du + dv, 0); // columns: U rows then V rows
    for (size_t r = 0; r < du; ++r)
        for (size_t c = 0; c < F_->m(); ++c) stacked.at(c, r) = basis_.at(r, c);
    for (size_t r = 0; r < dv; ++r)
        for (size_t c = 0; c < F_->m(); ++c) stacked.at(c, du + r) = other.basis_.at(r, c);
    FqOps ops{*F_};
    MatFq K = kernel_basis(ops, stacked);
    std::vector<Fqm> gens;
    for (size_t r = 0; r < K.rows(); ++r) {
        std::vector<Fq> full = K.row(r);
        full.resize(du);
        gens.push_back(element(full));
    }
    return span(F_, gens);
}

Subspace support(FieldPtr field, const VecFqm& v) { return Subspace::span(std::move(field), v); }

size_t rank_weight(const ExtField& F, const VecFqm& v) {
    FqOps ops{F};
    return rank_of(ops, mat_expand(F, v));
}

Subspace subspace_product(const Subspace& U, const Subspace& V) {
    if (&U.field() != &V.field()) throw std::invalid_argument("mismatched ambient fields");
    const ExtField& F = U.field();
    std::vector<Fqm> gens;
    gens.reserve(U.dim() * V.dim());
    for (size_t i = 0; i < U.dim(); ++i)
        for (size_t j = 0; j < V.dim(); ++j)
            gens.push_back(F.mul(U.basis_elem(i), V.basis_elem(j)));
    return Subspace::span(U.field_ptr(), gens);
}

Subspace scale_subspace(const Fqm& c, const Subspace& W) {
    const ExtField& F = W.field();
    std::vector<Fqm> gens;
    for (size_t r = 0; r < W.dim(); ++r) gens.push_back(F.mul(c, W.basis_elem(r)));
    return Subspace::span(W.field_ptr(), gens);
}

Subspace sample_subspace(FieldPtr field, size_t dim, bool contains_one, Rng& rng) {
    if (dim > field->m()) throw std::invalid_argument("subspace dimension exceeds m");
    for (;;) {
        std::vector<Fqm> gens;
        if (contains_one) gens.push_back(field->one());
        while (gens.size() < dim) gens.push_back(field->random(rng));
        Subspace s = Subspace::span(field, gens);
        if (s.dim() == dim) return s;
    }
}

Subspace canonical_unit_orbit(const Subspace& S) {
    const ExtField& F = S.field();
    if (S.dim() == 0) return S;
    uint64_t count = 1;
    for (size_t r = 0; r < S.dim(); ++r) count *= F.q();
    std::optional<Subspace> best;
    std::string best_key;
    for (uint64_t idx = 1; idx < count; ++idx) {
        Fqm s = S.element_at(idx);
        if (F.is_zero(s)) continue;
        Subspace cand = scale_subspace(F.inv(s), S);
        std::string key;
        const MatFq& B = cand.basis_mat();
        for (size_t i = 0; i < B.rows(); ++i)
            for (size_t j = 0; j < B.cols(); ++j) {
                key += std::to_string(B.at(i, j));
                key += ',';
            }
        if (!best || key < best_key) {
            best = std::move(cand);
            best_key = std::move(key);
        }
    }
    return *best;
}

MatFq mat_expand(const ExtField& F, const VecFqm& v) {
    MatFq M(F.m(), v.size(), 0);
    for (size_t j = 0; j < v.size(); ++j)
        for (unsigned i = 1; i <= F.m(); ++i) M.at(i - 1, j) = F.beta_coord(v[j], i);
    return M;
}

MatFq matp_expand(const ExtField& F, const VecFqm& v) {
    MatFq M(F.m() - 1, v.size(), 0);
    for (size_t j = 0; j < v.size(); ++j)
        for (unsigned i = 1; i < F.m(); ++i) M.at(i - 1, j) = F.beta_coord(v[j], i);
    return M;
}

VecFqm mat_collapse(const ExtField& F, const MatFq& M) {
    if (M.rows() != F.m()) throw std::invalid_argument("expansion has wrong row count");
    VecFqm v(M.cols(), F.zero());
    for (size_t j = 0; j < M.cols(); ++j) {
        std::vector<Fq> coords(F.m());
        for (unsigned i = 1; i <= F.m(); ++i) coords[i - 1] = M.at(i - 1, j);
        v[j] = F.from_beta_coords(coords);
    }
    return v;
}

MembershipMap subspace_membership_constraints(const Subspace& S, size_t n) {
    const ExtField& F = S.field();
    FqOps ops{F};
    MembershipMap out;
    out.n = n;
    out.per_coord_param = S.basis_mat();
    // forms vanishing on S: kernel of the basis viewed as a map on
    // coordinate vectors (rows of the kernel of basis * x^T = 0 ... we need
    // forms h with h . s = 0 for all s in S, i.e. the kernel of basis_mat)
    out.per_coord_constraints = kernel_basis(ops, S.basis_mat());
    return out;
}

} // namespace ranklab
