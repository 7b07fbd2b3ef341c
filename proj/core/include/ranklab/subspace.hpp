#ifndef RANKLAB_SUBSPACE_HPP
#define RANKLAB_SUBSPACE_HPP

#include "ranklab/matrix.hpp"

namespace ranklab {

/// An F_q-subspace of F_{q^m}, stored as a basis matrix in reduced
/// row-echelon form over F_q. Row r holds the coordinates of one basis
/// element on (beta_1, ..., beta_m); the RREF canonicalization makes equal
/// subspaces have identical representations, so operator== is correct.
class Subspace {
public:
    /// Empty shell; usable only after assignment from a real subspace.
    Subspace() : basis_(0, 0, 0) {}
    explicit Subspace(FieldPtr field) : F_(std::move(field)), basis_(0, F_->m(), 0) {}

    static Subspace zero(FieldPtr field) { return Subspace(std::move(field)); }
    static Subspace full(FieldPtr field);
    static Subspace span(FieldPtr field, const std::vector<Fqm>& gens);
    static Subspace of_element(FieldPtr field, const Fqm& x);

    const ExtField& field() const { return *F_; }
    FieldPtr field_ptr() const { return F_; }
    size_t dim() const { return basis_.rows(); }
    const MatFq& basis_mat() const { return basis_; }

    Fqm basis_elem(size_t r) const;
    bool contains(const Fqm& x) const;
    bool contains_subspace(const Subspace& other) const;
    /// Coefficients of x over the canonical basis rows, or nullopt if x is
    /// not a member.
    std::optional<std::vector<Fq>> coords_in(const Fqm& x) const;

    /// Element with the given coefficients over the canonical basis rows.
    Fqm element(const std::vector<Fq>& coeffs) const;
    /// index interpreted base-q over the basis rows; enumerates all q^dim
    /// elements as index runs over [0, q^dim).
    Fqm element_at(uint64_t index) const;
    Fqm random_element(Rng& rng) const;

    Subspace sum(const Subspace& other) const;
    Subspace intersect(const Subspace& other) const;

    bool operator==(const Subspace& o) const { return basis_ == o.basis_; }
    bool operator!=(const Subspace& o) const { return !(*this == o); }

private:
    FieldPtr F_;
    MatFq basis_;
};

/// Support of a vector: the F_q-span of its coordinates. The rank weight of
/// v is dim(support(v)).
Subspace support(FieldPtr field, const VecFqm& v);
size_t rank_weight(const ExtField& F, const VecFqm& v);

/// Span of all pairwise products {u v : u in U, v in V}.
Subspace subspace_product(const Subspace& U, const Subspace& V);

/// {c w : w in W} for a fixed scalar c.
Subspace scale_subspace(const Fqm& c, const Subspace& W);

/// Uniform dim-dimensional subspace by rejection over basis draws; when
/// contains_one is set, 1 is forced in and the remaining directions are
/// drawn at random until the dimension is exact.
Subspace sample_subspace(FieldPtr field, size_t dim, bool contains_one, Rng& rng);

/// Canonical representative of the orbit {alpha S : alpha != 0} among those
/// members containing 1: the scalings s^{-1} S over nonzero s in S all
/// contain 1, and the one with the smallest serialized basis wins. Two
/// subspaces are equivalent trapdoors exactly when they share this
/// representative.
Subspace canonical_unit_orbit(const Subspace& S);

/// Coordinate expansion: column j of the m x n matrix holds the coordinates
/// of v_j on (beta_1, ..., beta_m). rank(mat_expand(v)) equals the rank
/// weight of v.
MatFq mat_expand(const ExtField& F, const VecFqm& v);
/// First m-1 rows only: the expansion with the beta_m = 1 row dropped.
MatFq matp_expand(const ExtField& F, const VecFqm& v);
/// Reads a vector back from its full coordinate expansion.
VecFqm mat_collapse(const ExtField& F, const MatFq& M);

/// The F_q-linear conditions forcing every coordinate of a length-n vector
/// into S, together with the parameterization by n*dim(S) free coordinates.
struct MembershipMap {
    /// rows annihilate exactly S: (m - dim) x m, applied per coordinate.
    MatFq per_coord_constraints;
    /// basis of S: dim x m; a coordinate is sum of rows weighted by its
    /// free parameters.
    MatFq per_coord_param;
    size_t n; // vector length the map was built for
};
MembershipMap subspace_membership_constraints(const Subspace& S, size_t n);

} // namespace ranklab

#endif
