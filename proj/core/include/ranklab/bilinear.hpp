#ifndef RANKLAB_BILINEAR_HPP
#define RANKLAB_BILINEAR_HPP

#include <iosfwd>
#include <optional>
#include <string>

#include "ranklab/matrix.hpp"

namespace ranklab {

/// A system of bilinear equations over F_q in w blocks of variable pairs
/// (x^l, y^l), x^l of length nx and y^l of length ny. Equation e is
///   sum_l sum_i sum_j coeff[e][l*nx*ny + i*ny + j] x_i^l y_j^l = 0.
/// Assignments and an optional univariate quadratic constraint restrict the
/// solution set without touching the equations themselves.
struct BilinearSystem {
    unsigned a = 1; // q = 2^a
    unsigned w = 1, nx = 0, ny = 0;
    std::vector<std::vector<Fq>> eqs;

    struct Assign {
        bool is_x;
        unsigned block, index;
        Fq value;
    };
    std::vector<Assign> assigns;

    /// (v - alpha)(v - beta) = 0 on one x variable.
    struct QuadFix {
        unsigned block, index;
        Fq alpha, beta;
    };
    std::optional<QuadFix> quad;

    uint64_t q() const { return 1ULL << a; }
    size_t coeff_len() const { return static_cast<size_t>(w) * nx * ny; }
    size_t vars_total() const { return static_cast<size_t>(w) * (nx + ny); }
    size_t vars_free() const { return vars_total() - assigns.size(); }
    /// Equation count with fixings counted as equations.
    size_t eqs_with_fixings() const { return eqs.size() + assigns.size() + (quad ? 1 : 0); }

    bool is_assigned(bool is_x, unsigned block, unsigned index, Fq* value = nullptr) const;
};

/// Models "find an element of rank w in the matrix code annihilated by
/// `parity`" as a bilinear system: the unknown rows x^l span the column
/// space, the y^l hold the combination coefficients, and each parity row
/// contributes one equation. The code lives in rows x cols matrices
/// flattened row-major (entry (i,j) at position i*cols + j).
BilinearSystem model_rank_w(unsigned a, const MatFq& parity, size_t rows, size_t cols,
                            unsigned w);

/// Solution-restricting assignments for the single-block signing-code system:
/// x_1 = 1, y_1 = ... = y_{n/d-1} = 0, y_{n/d} = 1, and (x_2-alpha)(x_2-beta)=0
/// when q > 2 (over F_2 every value satisfies v^2 = v, making the quadratic
/// vacuous, so it is skipped there).
void apply_ranksign_fixings(BilinearSystem& sys, unsigned n, unsigned d, Fq alpha, Fq beta);

/// Assignments for the w-block system: the x block in systematic form
/// (x_i^l = [i == l] for i, l < w) plus y_j^i = 0 on the index set I and a
/// single pivot y = 1 outside it. The overload places the identity pattern
/// on an arbitrary column set instead of the first w columns (the recovered
/// space must project invertibly onto the chosen columns, which the leading
/// ones need not satisfy).
void apply_rsl_fixings(BilinearSystem& sys, const std::vector<std::pair<unsigned, unsigned>>& I,
                       std::pair<unsigned, unsigned> pivot);
void apply_rsl_fixings(BilinearSystem& sys, const std::vector<std::pair<unsigned, unsigned>>& I,
                       std::pair<unsigned, unsigned> pivot,
                       const std::vector<unsigned>& x_columns);

struct SolverStats {
    unsigned degree_reached = 0;
    size_t lin_rows = 0, lin_cols = 0;
    size_t projected_kernel_dim = 0;
    uint64_t candidates_enumerated = 0;
    bool complete = false; // solution list provably exhaustive
    std::string note;
};

struct SolverResult {
    // each solution: flat x values (w*nx) and flat y values (w*ny)
    std::vector<std::pair<std::vector<Fq>, std::vector<Fq>>> solutions;
    std::string strategy;
    SolverStats stats;
};

class BudgetExceeded : public std::runtime_error {
public:
    explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

enum class EnumAxis { X, Y };

/// Ground-truth oracle: walks every assignment of the free variables on one
/// axis (default x), solves the remaining linear system and collects every
/// solution. Refuses (throws BudgetExceeded) instead of truncating when
/// q^free or the output would pass the budget.
SolverResult solve_enumerate(const BilinearSystem& sys, uint64_t budget,
                             EnumAxis axis = EnumAxis::X, unsigned threads = 1);

/// XL-style solver: multiplies the equations by monomials up to total degree
/// max_degree - 2 (exponents reduced via v^2 = v when q = 2), linearizes,
/// solves, and enumerates the projection of the solution space onto the
/// degree-1 coordinates; every candidate is re-verified against the original
/// system before being returned. Sound always; complete whenever stats.complete
/// is set (full projection enumerated or inconsistency proved).
SolverResult solve_linearize(const BilinearSystem& sys, unsigned max_degree);

/// True iff (x, y) satisfies every equation, every assignment, and the
/// quadratic constraint.
bool verify_solution(const BilinearSystem& sys, const std::vector<Fq>& x,
                     const std::vector<Fq>& y);

/// Matrix reconstructed from a solution: M_ij = sum_l x_i^l y_j^l (nx x ny).
MatFq solution_matrix(const BilinearSystem& sys, const std::vector<Fq>& x,
                      const std::vector<Fq>& y);

// --- equation / variable counts --------------------------------------------

struct PropositionCounts {
    long equations = 0;
    long unknowns = 0;
};

/// Post-fixing census formula for the signing-code system:
/// nm - k(m+1) - t + 2 equations, m - 1 + n + t unknowns.
PropositionCounts ranksign_system_counts(unsigned n, unsigned k, unsigned m, unsigned t);

/// Post-fixing census formula for the w-block system:
/// m k_sgn + w_dec^2 + (n_sgn - k_sgn) equations, (m + k_sgn) w_dec unknowns.
PropositionCounts rsl_system_counts(unsigned n_sgn, unsigned k_sgn, unsigned m,
                                    unsigned w_dec);

// --- text round trip ---------------------------------------------------------

void write_bilinear(std::ostream& os, const BilinearSystem& sys);
BilinearSystem read_bilinear(std::istream& is);

} // namespace ranklab

#endif
