#include "ranklab/bilinear.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <ostream>
#include <set>
#include <mutex>
#include <sstream>
#include <thread>

namespace ranklab {

namespace {

// variable ids: x vars first (l*nx + i), then y vars (w*nx + l*ny + j)
size_t xid(const BilinearSystem& s, unsigned l, unsigned i) { return size_t(l) * s.nx + i; }
size_t yid(const BilinearSystem& s, unsigned l, unsigned j) {
    return size_t(s.w) * s.nx + size_t(l) * s.ny + j;
}
// index into a per-axis flat vector (length w*ny)
size_t yflat(const BilinearSystem& s, unsigned l, unsigned j) {
    return size_t(l) * s.ny + j;
}

} // namespace

bool BilinearSystem::is_assigned(bool is_x_var, unsigned block, unsigned index,
                                 Fq* value) const {
    for (const auto& a : assigns)
        if (a.is_x == is_x_var && a.block == block && a.index == index) {
            if (value) *value = a.value;
            return true;
        }
    return false;
}

BilinearSystem model_rank_w(unsigned a, const MatFq& parity, size_t rows, size_t cols,
                            unsigned w) {
    if (parity.cols() != rows * cols)
        throw std::invalid_argument("parity width does not match the flattened shape");
    BilinearSystem sys;
    sys.a = a;
    sys.w = w;
    sys.nx = static_cast<unsigned>(rows);
    sys.ny = static_cast<unsigned>(cols);
    sys.eqs.reserve(parity.rows());
    for (size_t e = 0; e < parity.rows(); ++e) {
        std::vector<Fq> coeff(sys.coeff_len(), 0);
        for (size_t i = 0; i < rows; ++i)
            for (size_t j = 0; j < cols; ++j) {
                Fq c = parity.at(e, i * cols + j);
                if (c == 0) continue;
                for (unsigned l = 0; l < w; ++l)
                    coeff[size_t(l) * rows * cols + i * cols + j] = c;
            }
        sys.eqs.push_back(std::move(coeff));
    }
    return sys;
}

void apply_ranksign_fixings(BilinearSystem& sys, unsigned n, unsigned d, Fq alpha, Fq beta) {
    if (sys.w != 1) throw std::invalid_argument("single-block system expected");
    if (d == 0 || n % d != 0) throw std::invalid_argument("d must divide n");
    unsigned nd = n / d;
    if (nd > sys.ny) throw std::invalid_argument("n/d exceeds the y block");
    sys.assigns.push_back({true, 0, 0, 1});
    for (unsigned j = 0; j + 1 < nd; ++j) sys.assigns.push_back({false, 0, j, 0});
    sys.assigns.push_back({false, 0, nd - 1, 1});
    if (sys.q() > 2 && sys.nx > 1) sys.quad = BilinearSystem::QuadFix{0, 1, alpha, beta};
}

void apply_rsl_fixings(BilinearSystem& sys,
                       const std::vector<std::pair<unsigned, unsigned>>& I,
                       std::pair<unsigned, unsigned> pivot) {
    std::vector<unsigned> cols(sys.w);
    for (unsigned i = 0; i < sys.w; ++i) cols[i] = i;
    apply_rsl_fixings(sys, I, pivot, cols);
}

void apply_rsl_fixings(BilinearSystem& sys,
                       const std::vector<std::pair<unsigned, unsigned>>& I,
                       std::pair<unsigned, unsigned> pivot,
                       const std::vector<unsigned>& x_columns) {
    if (x_columns.size() != sys.w) throw std::invalid_argument("need w pinned columns");
    for (unsigned l = 0; l < sys.w; ++l)
        for (unsigned i = 0; i < sys.w; ++i) {
            if (x_columns[i] >= sys.nx) throw std::invalid_argument("pinned column exceeds nx");
            sys.assigns.push_back({true, l, x_columns[i], static_cast<Fq>(i == l ? 1 : 0)});
        }
    for (auto [j, i] : I) {
        if (i >= sys.w || j >= sys.ny) throw std::invalid_argument("index set out of range");
        if (std::make_pair(i, j) == std::make_pair(pivot.first, pivot.second))
            throw std::invalid_argument("pivot inside the zero index set");
        sys.assigns.push_back({false, i, j, 0});
    }
    if (pivot.first >= sys.w || pivot.second >= sys.ny)
        throw std::invalid_argument("pivot out of range");
    sys.assigns.push_back({false, pivot.first, pivot.second, 1});
}

namespace {

bool verify_with(const ExtField& F, const BilinearSystem& sys, const std::vector<Fq>& x,
                 const std::vector<Fq>& y) {
    if (x.size() != size_t(sys.w) * sys.nx || y.size() != size_t(sys.w) * sys.ny) return false;
    for (const auto& eq : sys.eqs) {
        Fq acc = 0;
        for (unsigned l = 0; l < sys.w; ++l)
            for (unsigned i = 0; i < sys.nx; ++i) {
                Fq xv = x[xid(sys, l, i)];
                if (xv == 0) continue;
                const Fq* row = eq.data() + size_t(l) * sys.nx * sys.ny + size_t(i) * sys.ny;
                Fq inner = 0;
                for (unsigned j = 0; j < sys.ny; ++j)
                    if (row[j] && y[yflat(sys, l, j)])
                        inner = F.fq_add(inner, F.fq_mul(row[j], y[yflat(sys, l, j)]));
                acc = F.fq_add(acc, F.fq_mul(xv, inner));
            }
        if (acc != 0) return false;
    }
    for (const auto& as : sys.assigns) {
        Fq v = as.is_x ? x[xid(sys, as.block, as.index)] : y[yflat(sys, as.block, as.index)];
        if (v != as.value) return false;
    }
    if (sys.quad) {
        Fq v = x[xid(sys, sys.quad->block, sys.quad->index)];
        Fq lhs = F.fq_mul(F.fq_add(v, sys.quad->alpha), F.fq_add(v, sys.quad->beta));
        if (lhs != 0) return false;
    }
    return true;
}

} // namespace

bool verify_solution(const BilinearSystem& sys, const std::vector<Fq>& x,
                     const std::vector<Fq>& y) {
    auto field = ExtField::get(sys.a, 1);
    return verify_with(*field, sys, x, y);
}

MatFq solution_matrix(const BilinearSystem& sys, const std::vector<Fq>& x,
                      const std::vector<Fq>& y) {
    auto field = ExtField::get(sys.a, 1);
    const ExtField& F = *field;
    MatFq M(sys.nx, sys.ny, 0);
    for (unsigned l = 0; l < sys.w; ++l)
        for (unsigned i = 0; i < sys.nx; ++i)
            for (unsigned j = 0; j < sys.ny; ++j)
                M.at(i, j) = F.fq_add(M.at(i, j), F.fq_mul(x[xid(sys, l, i)],
                                                           y[yflat(sys, l, j)]));
    return M;
}

// ---------------------------------------------------------------------------
// enumeration oracle

namespace {

struct FreeVars {
    std::vector<size_t> x_free, y_free;    // global var ids
    std::vector<Fq> x_fixed, y_fixed;      // full flat vectors with fixed slots set
    std::vector<char> x_is_fixed, y_is_fixed;
};

FreeVars collect_free(const BilinearSystem& sys) {
    FreeVars fv;
    fv.x_fixed.assign(size_t(sys.w) * sys.nx, 0);
    fv.y_fixed.assign(size_t(sys.w) * sys.ny, 0);
    fv.x_is_fixed.assign(fv.x_fixed.size(), 0);
    fv.y_is_fixed.assign(fv.y_fixed.size(), 0);
    for (const auto& a : sys.assigns) {
        if (a.is_x) {
            fv.x_fixed[size_t(a.block) * sys.nx + a.index] = a.value;
            fv.x_is_fixed[size_t(a.block) * sys.nx + a.index] = 1;
        } else {
            fv.y_fixed[size_t(a.block) * sys.ny + a.index] = a.value;
            fv.y_is_fixed[size_t(a.block) * sys.ny + a.index] = 1;
        }
    }
    for (size_t i = 0; i < fv.x_fixed.size(); ++i)
        if (!fv.x_is_fixed[i]) fv.x_free.push_back(i);
    for (size_t j = 0; j < fv.y_fixed.size(); ++j)
        if (!fv.y_is_fixed[j]) fv.y_free.push_back(j);
    return fv;
}

// one enumeration step over a contiguous range of assignments of the outer
// axis; appends found solutions
void enumerate_range(const BilinearSystem& sys, const FreeVars& fv, EnumAxis axis,
                     uint64_t begin, uint64_t end, uint64_t budget,
                     std::vector<std::pair<std::vector<Fq>, std::vector<Fq>>>& out,
                     uint64_t& candidates) {
    auto field = ExtField::get(sys.a, 1);
    const ExtField& F = *field;
    FqOps ops{F};
    const bool outer_is_x = axis == EnumAxis::X;
    const auto& outer_free = outer_is_x ? fv.x_free : fv.y_free;
    const auto& inner_free = outer_is_x ? fv.y_free : fv.x_free;
    const size_t inner_len = outer_is_x ? fv.y_fixed.size() : fv.x_fixed.size();

    std::vector<Fq> outer = outer_is_x ? fv.x_fixed : fv.y_fixed;
    for (uint64_t idx = begin; idx < end; ++idx) {
        uint64_t v = idx;
        for (size_t t = 0; t < outer_free.size(); ++t) {
            outer[outer_free[t]] = static_cast<Fq>(v % sys.q());
            v /= sys.q();
        }
        if (sys.quad && outer_is_x) {
            Fq val = outer[size_t(sys.quad->block) * sys.nx + sys.quad->index];
            if (F.fq_mul(F.fq_add(val, sys.quad->alpha), F.fq_add(val, sys.quad->beta)) != 0)
                continue;
        }
        // linear system over the inner free variables
        MatFq A(sys.eqs.size(), inner_free.size(), 0);
        std::vector<Fq> b(sys.eqs.size(), 0);
        for (size_t e = 0; e < sys.eqs.size(); ++e) {
            const auto& eq = sys.eqs[e];
            std::vector<Fq> inner_coeff(inner_len, 0);
            for (unsigned l = 0; l < sys.w; ++l)
                for (unsigned i = 0; i < sys.nx; ++i)
                    for (unsigned j = 0; j < sys.ny; ++j) {
                        Fq c = eq[size_t(l) * sys.nx * sys.ny + size_t(i) * sys.ny + j];
                        if (c == 0) continue;
                        if (outer_is_x) {
                            Fq xv = outer[size_t(l) * sys.nx + i];
                            if (xv)
                                inner_coeff[size_t(l) * sys.ny + j] = F.fq_add(
                                    inner_coeff[size_t(l) * sys.ny + j], F.fq_mul(c, xv));
                        } else {
                            Fq yv = outer[size_t(l) * sys.ny + j];
                            if (yv)
                                inner_coeff[size_t(l) * sys.nx + i] = F.fq_add(
                                    inner_coeff[size_t(l) * sys.nx + i], F.fq_mul(c, yv));
                        }
                    }
            // fixed inner slots feed the right-hand side
            const auto& inner_fixed = outer_is_x ? fv.y_fixed : fv.x_fixed;
            const auto& inner_is_fixed = outer_is_x ? fv.y_is_fixed : fv.x_is_fixed;
            for (size_t t = 0; t < inner_len; ++t)
                if (inner_is_fixed[t] && inner_fixed[t] && inner_coeff[t])
                    b[e] = F.fq_add(b[e], F.fq_mul(inner_coeff[t], inner_fixed[t]));
            for (size_t t = 0; t < inner_free.size(); ++t) A.at(e, t) = inner_coeff[inner_free[t]];
        }
        auto sol = solve_linear(ops, A, b);
        if (!sol) continue;
        // quadratic constraint on an inner x variable restricts the kernel walk
        double dpoints = 1;
        for (size_t r = 0; r < sol->kernel.rows(); ++r) dpoints *= static_cast<double>(sys.q());
        if (static_cast<double>(candidates) + dpoints > static_cast<double>(budget))
            throw BudgetExceeded("solution enumeration exceeds the budget");
        uint64_t points = static_cast<uint64_t>(dpoints);
        std::vector<Fq> inner(outer_is_x ? fv.y_fixed : fv.x_fixed);
        for (uint64_t kidx = 0; kidx < points; ++kidx) {
            ++candidates;
            std::vector<Fq> u = sol->x;
            uint64_t kv = kidx;
            for (size_t r = 0; r < sol->kernel.rows(); ++r) {
                Fq c = static_cast<Fq>(kv % sys.q());
                kv /= sys.q();
                if (c == 0) continue;
                for (size_t t = 0; t < u.size(); ++t)
                    u[t] = F.fq_add(u[t], F.fq_mul(c, sol->kernel.at(r, t)));
            }
            for (size_t t = 0; t < inner_free.size(); ++t) inner[inner_free[t]] = u[t];
            const std::vector<Fq>& xv = outer_is_x ? outer : inner;
            const std::vector<Fq>& yv = outer_is_x ? inner : outer;
            if (verify_with(F, sys, xv, yv)) out.emplace_back(xv, yv);
        }
    }
}

} // namespace

SolverResult solve_enumerate(const BilinearSystem& sys, uint64_t budget, EnumAxis axis,
                             unsigned threads) {
    FreeVars fv = collect_free(sys);
    const auto& outer_free = axis == EnumAxis::X ? fv.x_free : fv.y_free;
    double total = 1;
    for (size_t t = 0; t < outer_free.size(); ++t) total *= static_cast<double>(sys.q());
    if (total > static_cast<double>(budget))
        throw BudgetExceeded("q^free exceeds the enumeration budget");
    uint64_t count = 1;
    for (size_t t = 0; t < outer_free.size(); ++t) count *= sys.q();

    SolverResult res;
    res.strategy = "enumerate";
    res.stats.complete = true;
    if (threads <= 1 || count < 1024) {
        uint64_t candidates = 0;
        enumerate_range(sys, fv, axis, 0, count, budget, res.solutions, candidates);
        res.stats.candidates_enumerated = candidates;
    } else {
        unsigned nt = std::min<unsigned>(threads, 16);
        std::vector<std::vector<std::pair<std::vector<Fq>, std::vector<Fq>>>> outs(nt);
        std::vector<uint64_t> cand(nt, 0);
        std::vector<std::thread> pool;
        std::exception_ptr err;
        std::mutex err_mu;
        for (unsigned t = 0; t < nt; ++t) {
            uint64_t lo = count * t / nt, hi = count * (t + 1) / nt;
            pool.emplace_back([&, t, lo, hi] {
                try {
                    enumerate_range(sys, fv, axis, lo, hi, budget, outs[t], cand[t]);
                } catch (...) {
                    std::lock_guard<std::mutex> g(err_mu);
                    if (!err) err = std::current_exception();
                }
            });
        }
        for (auto& th : pool) th.join();
        if (err) std::rethrow_exception(err);
        for (unsigned t = 0; t < nt; ++t) {
            res.stats.candidates_enumerated += cand[t];
            for (auto& s : outs[t]) res.solutions.push_back(std::move(s));
        }
    }
    return res;
}

// ---------------------------------------------------------------------------
// XL / linearization

namespace {

using Monomial = std::vector<uint16_t>; // sorted free-variable ids

Monomial merge_monomial(const Monomial& u, const Monomial& v, bool boolean) {
    Monomial out;
    out.reserve(u.size() + v.size());
    std::merge(u.begin(), u.end(), v.begin(), v.end(), std::back_inserter(out));
    if (boolean) out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

struct TermMap {
    std::map<Monomial, Fq> terms;
    void add(const ExtField& F, const Monomial& mono, Fq c) {
        if (c == 0) return;
        auto [it, fresh] = terms.emplace(mono, c);
        if (!fresh) {
            it->second = F.fq_add(it->second, c);
            if (it->second == 0) terms.erase(it);
        }
    }
};

void gen_multipliers(unsigned max_deg, size_t nvars, bool boolean, Monomial& cur,
                     uint16_t next, std::vector<Monomial>& out) {
    out.push_back(cur);
    if (cur.size() == max_deg) return;
    for (uint16_t v = next; v < nvars; ++v) {
        cur.push_back(v);
        gen_multipliers(max_deg, nvars, boolean, cur, boolean ? v + 1 : v, out);
        cur.pop_back();
    }
}

} // namespace

SolverResult solve_linearize(const BilinearSystem& sys, unsigned max_degree) {
    if (max_degree < 2) throw std::invalid_argument("max_degree must be at least 2");
    auto field = ExtField::get(sys.a, 1);
    const ExtField& F = *field;
    FqOps ops{F};
    const bool boolean = sys.q() == 2;
    constexpr uint64_t kCandidateCap = 1ULL << 20;
    constexpr size_t kCellCap = 8u << 20; // linearized rows*cols limit

    SolverResult res;
    res.strategy = "linearize";

    FreeVars fv = collect_free(sys);
    std::vector<size_t> free_global; // free var id -> global id (x first, then y)
    for (size_t id : fv.x_free) free_global.push_back(id);
    for (size_t id : fv.y_free) free_global.push_back(id + fv.x_fixed.size());
    size_t nfree = free_global.size();
    std::vector<size_t> global_to_free(fv.x_fixed.size() + fv.y_fixed.size(), SIZE_MAX);
    for (size_t t = 0; t < nfree; ++t) global_to_free[free_global[t]] = t;

    // base equations over the free variables
    std::vector<TermMap> base;
    for (const auto& eq : sys.eqs) {
        TermMap tm;
        for (unsigned l = 0; l < sys.w; ++l)
            for (unsigned i = 0; i < sys.nx; ++i)
                for (unsigned j = 0; j < sys.ny; ++j) {
                    Fq c = eq[size_t(l) * sys.nx * sys.ny + size_t(i) * sys.ny + j];
                    if (c == 0) continue;
                    size_t gx = size_t(l) * sys.nx + i;
                    size_t gy = fv.x_fixed.size() + size_t(l) * sys.ny + j;
                    bool xf = !fv.x_is_fixed[gx];
                    bool yf = !fv.y_is_fixed[gy - fv.x_fixed.size()];
                    if (!xf && !yf) {
                        Fq v = F.fq_mul(fv.x_fixed[gx],
                                        fv.y_fixed[gy - fv.x_fixed.size()]);
                        tm.add(F, {}, F.fq_mul(c, v));
                    } else if (!xf) {
                        Fq v = fv.x_fixed[gx];
                        if (v) tm.add(F, {static_cast<uint16_t>(global_to_free[gy])},
                                      F.fq_mul(c, v));
                    } else if (!yf) {
                        Fq v = fv.y_fixed[gy - fv.x_fixed.size()];
                        if (v) tm.add(F, {static_cast<uint16_t>(global_to_free[gx])},
                                      F.fq_mul(c, v));
                    } else {
                        uint16_t a1 = static_cast<uint16_t>(global_to_free[gx]);
                        uint16_t b1 = static_cast<uint16_t>(global_to_free[gy]);
                        Monomial mono = a1 <= b1 ? Monomial{a1, b1} : Monomial{b1, a1};
                        if (boolean && a1 == b1) mono = {a1};
                        tm.add(F, mono, c);
                    }
                }
        base.push_back(std::move(tm));
    }
    if (sys.quad) {
        size_t gx = size_t(sys.quad->block) * sys.nx + sys.quad->index;
        Fq ab = F.fq_mul(sys.quad->alpha, sys.quad->beta);
        Fq apb = F.fq_add(sys.quad->alpha, sys.quad->beta);
        if (fv.x_is_fixed[gx]) {
            Fq v = fv.x_fixed[gx];
            if (F.fq_mul(F.fq_add(v, sys.quad->alpha), F.fq_add(v, sys.quad->beta)) != 0) {
                res.stats.complete = true;
                res.stats.note = "quadratic constraint conflicts with an assignment";
                return res;
            }
        } else {
            TermMap tm;
            uint16_t v = static_cast<uint16_t>(global_to_free[gx]);
            tm.add(F, boolean ? Monomial{v} : Monomial{v, v}, 1);
            tm.add(F, {v}, apb);
            tm.add(F, {}, ab);
            base.push_back(std::move(tm));
        }
    }

    for (unsigned degree = 2; degree <= max_degree; ++degree) {
        // multiplier monomials of degree <= degree - 2
        std::vector<Monomial> mult;
        Monomial cur;
        gen_multipliers(degree - 2, nfree, boolean, cur, 0, mult);

        // register columns; keep degree-1 columns for every free variable
        std::map<Monomial, size_t> col_of;
        for (size_t t = 0; t < nfree; ++t) col_of[{static_cast<uint16_t>(t)}] = 0;
        std::vector<std::map<Monomial, Fq>> rows;
        rows.reserve(base.size() * mult.size());
        bool too_big = false;
        for (const auto& bm : base) {
            for (const auto& mu : mult) {
                std::map<Monomial, Fq> row;
                for (const auto& [mono, c] : bm.terms) {
                    Monomial prod = merge_monomial(mono, mu, boolean);
                    auto [it, fresh] = row.emplace(prod, c);
                    if (!fresh) {
                        it->second = F.fq_add(it->second, c);
                        if (it->second == 0) row.erase(it);
                    }
                }
                for (const auto& [mono, c] : row)
                    if (!mono.empty()) col_of.emplace(mono, 0);
                rows.push_back(std::move(row));
                if (rows.size() * (col_of.size() + 1) > kCellCap) {
                    too_big = true;
                    break;
                }
            }
            if (too_big) break;
        }
        if (too_big) {
            res.stats.note = "linearized dimension exceeds the memory budget";
            break;
        }
        size_t ncols = 0;
        for (auto& [mono, idx] : col_of) idx = ncols++;
        res.stats.degree_reached = degree;
        res.stats.lin_rows = rows.size();
        res.stats.lin_cols = ncols;

        MatFq A(rows.size(), ncols, 0);
        std::vector<Fq> b(rows.size(), 0);
        for (size_t r = 0; r < rows.size(); ++r)
            for (const auto& [mono, c] : rows[r]) {
                if (mono.empty())
                    b[r] = F.fq_add(b[r], c); // constants move to the other side
                else
                    A.at(r, col_of.at(mono)) = c;
            }
        auto sol = solve_linear(ops, A, b);
        if (!sol) {
            // the linearized system majorizes the original one, so
            // inconsistency proves there is no solution at all
            res.stats.complete = true;
            res.stats.note = "inconsistent linearization: no solutions";
            return res;
        }

        // project the affine solution set onto the degree-1 columns
        std::vector<size_t> deg1_cols(nfree);
        for (size_t t = 0; t < nfree; ++t)
            deg1_cols[t] = col_of.at({static_cast<uint16_t>(t)});
        std::vector<Fq> p1(nfree);
        for (size_t t = 0; t < nfree; ++t) p1[t] = sol->x[deg1_cols[t]];
        MatFq K1(sol->kernel.rows(), nfree, 0);
        for (size_t r = 0; r < sol->kernel.rows(); ++r)
            for (size_t t = 0; t < nfree; ++t) K1.at(r, t) = sol->kernel.at(r, deg1_cols[t]);
        auto kr = rref(ops, K1);
        res.stats.projected_kernel_dim = kr.rank;
        double points = 1;
        for (size_t r = 0; r < kr.rank; ++r) points *= static_cast<double>(sys.q());
        if (points > static_cast<double>(kCandidateCap)) {
            if (degree == max_degree) {
                res.stats.note = "undetermined at this degree";
                return res;
            }
            continue;
        }

        uint64_t total = 1;
        for (size_t r = 0; r < kr.rank; ++r) total *= sys.q();
        std::set<std::pair<std::vector<Fq>, std::vector<Fq>>> found;
        for (uint64_t idx = 0; idx < total; ++idx) {
            ++res.stats.candidates_enumerated;
            std::vector<Fq> v = p1;
            uint64_t iv = idx;
            for (size_t r = 0; r < kr.rank; ++r) {
                Fq c = static_cast<Fq>(iv % sys.q());
                iv /= sys.q();
                if (c == 0) continue;
                for (size_t t = 0; t < nfree; ++t)
                    v[t] = F.fq_add(v[t], F.fq_mul(c, kr.R.at(r, t)));
            }
            std::vector<Fq> x = fv.x_fixed, y = fv.y_fixed;
            for (size_t t = 0; t < nfree; ++t) {
                size_t g = free_global[t];
                if (g < fv.x_fixed.size())
                    x[g] = v[t];
                else
                    y[g - fv.x_fixed.size()] = v[t];
            }
            if (verify_with(F, sys, x, y)) found.emplace(std::move(x), std::move(y));
        }
        res.solutions.assign(found.begin(), found.end());
        res.stats.complete = true; // the full projection was walked
        return res;
    }
    return res;
}

// ---------------------------------------------------------------------------
// census formulas

PropositionCounts ranksign_system_counts(unsigned n, unsigned k, unsigned m, unsigned t) {
    PropositionCounts c;
    c.equations = long(n) * m - long(k) * (m + 1) - long(t) + 2;
    c.unknowns = long(m) - 1 + n + t;
    return c;
}

PropositionCounts rsl_system_counts(unsigned n_sgn, unsigned k_sgn, unsigned m,
                                    unsigned w_dec) {
    PropositionCounts c;
    c.equations = long(m) * k_sgn + long(w_dec) * w_dec + (long(n_sgn) - k_sgn);
    c.unknowns = (long(m) + k_sgn) * w_dec;
    return c;
}

// ---------------------------------------------------------------------------
// text round trip

void write_bilinear(std::ostream& os, const BilinearSystem& sys) {
    os << "BILIN " << sys.q() << ' ' << sys.w << ' ' << sys.nx << ' ' << sys.ny << ' '
       << sys.eqs.size() << '\n';
    for (const auto& eq : sys.eqs) {
        size_t nz = 0;
        for (Fq c : eq)
            if (c) ++nz;
        os << nz;
        for (unsigned l = 0; l < sys.w; ++l)
            for (unsigned i = 0; i < sys.nx; ++i)
                for (unsigned j = 0; j < sys.ny; ++j) {
                    Fq c = eq[size_t(l) * sys.nx * sys.ny + size_t(i) * sys.ny + j];
                    if (c) os << ' ' << l << ' ' << i << ' ' << j << ' ' << c;
                }
        os << '\n';
    }
    os << "FIXINGS " << sys.assigns.size() << '\n';
    for (const auto& a : sys.assigns)
        os << (a.is_x ? 'x' : 'y') << ' ' << a.block << ' ' << a.index << ' ' << a.value
           << '\n';
    if (sys.quad)
        os << "QUAD " << sys.quad->block << ' ' << sys.quad->index << ' ' << sys.quad->alpha
           << ' ' << sys.quad->beta << '\n';
    os << "END\n";
}

BilinearSystem read_bilinear(std::istream& is) {
    std::string tag;
    uint64_t q;
    BilinearSystem sys;
    size_t neqs;
    if (!(is >> tag >> q >> sys.w >> sys.nx >> sys.ny >> neqs) || tag != "BILIN")
        throw std::runtime_error("bad BILIN header");
    unsigned a = 0;
    while ((1ULL << a) < q) ++a;
    if ((1ULL << a) != q) throw std::runtime_error("q must be a power of two");
    sys.a = a;
    for (size_t e = 0; e < neqs; ++e) {
        size_t nz;
        if (!(is >> nz)) throw std::runtime_error("bad equation line");
        std::vector<Fq> coeff(sys.coeff_len(), 0);
        for (size_t t = 0; t < nz; ++t) {
            unsigned l, i, j;
            uint64_t c;
            if (!(is >> l >> i >> j >> c)) throw std::runtime_error("bad coefficient");
            coeff[size_t(l) * sys.nx * sys.ny + size_t(i) * sys.ny + j] = static_cast<Fq>(c);
        }
        sys.eqs.push_back(std::move(coeff));
    }
    size_t nfix;
    if (!(is >> tag >> nfix) || tag != "FIXINGS") throw std::runtime_error("bad FIXINGS");
    for (size_t t = 0; t < nfix; ++t) {
        char axis;
        BilinearSystem::Assign a2{};
        uint64_t v;
        if (!(is >> axis >> a2.block >> a2.index >> v)) throw std::runtime_error("bad fixing");
        a2.is_x = axis == 'x';
        a2.value = static_cast<Fq>(v);
        sys.assigns.push_back(a2);
    }
    if (!(is >> tag)) throw std::runtime_error("missing END");
    if (tag == "QUAD") {
        BilinearSystem::QuadFix qf{};
        uint64_t al, be;
        if (!(is >> qf.block >> qf.index >> al >> be)) throw std::runtime_error("bad QUAD");
        qf.alpha = static_cast<Fq>(al);
        qf.beta = static_cast<Fq>(be);
        sys.quad = qf;
        if (!(is >> tag)) throw std::runtime_error("missing END");
    }
    if (tag != "END") throw std::runtime_error("missing END");
    return sys;
}

} // namespace ranklab
