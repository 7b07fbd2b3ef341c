#ifndef RANKLAB_MATRIX_HPP
#define RANKLAB_MATRIX_HPP

#include <cassert>
#include <optional>
#include <vector>

#include "ranklab/field.hpp"

namespace ranklab {

/// Dense row-major matrix. Element arithmetic is supplied separately by an
/// ops adaptor so the same algorithms serve F_q and F_{q^m}.
template <class T>
class Mat {
public:
    Mat() : rows_(0), cols_(0) {}
    Mat(size_t rows, size_t cols, const T& fill)
        : rows_(rows), cols_(cols), d_(rows * cols, fill) {}

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    T& at(size_t i, size_t j) { return d_[i * cols_ + j]; }
    const T& at(size_t i, size_t j) const { return d_[i * cols_ + j]; }

    std::vector<T> row(size_t i) const {
        return std::vector<T>(d_.begin() + i * cols_, d_.begin() + (i + 1) * cols_);
    }
    void set_row(size_t i, const std::vector<T>& r) {
        assert(r.size() == cols_);
        std::copy(r.begin(), r.end(), d_.begin() + i * cols_);
    }
    void append_row(const std::vector<T>& r) {
        assert(cols_ == 0 || r.size() == cols_);
        if (cols_ == 0) cols_ = r.size();
        d_.insert(d_.end(), r.begin(), r.end());
        ++rows_;
    }

    bool operator==(const Mat& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && d_ == o.d_;
    }

private:
    size_t rows_, cols_;
    std::vector<T> d_;
};

using MatFq = Mat<Fq>;
using MatFqm = Mat<Fqm>;
using VecFqm = std::vector<Fqm>;

struct FqOps {
    const ExtField& F;
    using Elem = Fq;
    Elem zero() const { return 0; }
    Elem one() const { return 1; }
    bool is_zero(Elem x) const { return x == 0; }
    Elem add(Elem x, Elem y) const { return F.fq_add(x, y); }
    Elem sub(Elem x, Elem y) const { return F.fq_add(x, y); }
    Elem mul(Elem x, Elem y) const { return F.fq_mul(x, y); }
    Elem inv(Elem x) const { return F.fq_inv(x); }
    Elem random(Rng& rng) const { return F.fq_random(rng); }
};

struct FqmOps {
    const ExtField& F;
    using Elem = Fqm;
    Elem zero() const { return F.zero(); }
    Elem one() const { return F.one(); }
    bool is_zero(const Elem& x) const { return F.is_zero(x); }
    Elem add(const Elem& x, const Elem& y) const { return F.add(x, y); }
    Elem sub(const Elem& x, const Elem& y) const { return F.add(x, y); }
    Elem mul(const Elem& x, const Elem& y) const { return F.mul(x, y); }
    Elem inv(const Elem& x) const { return F.inv(x); }
    Elem random(Rng& rng) const { return F.random(rng); }
};

template <class Ops>
struct RrefResult {
    Mat<typename Ops::Elem> R;
    std::vector<size_t> pivots;
    size_t rank = 0;
};

/// Row-reduced echelon form with leading entries normalized to 1 and pivot
/// columns cleared above and below.
template <class Ops>
RrefResult<Ops> rref(const Ops& ops, Mat<typename Ops::Elem> M) {
    RrefResult<Ops> out;
    size_t r = 0;
    for (size_t c = 0; c < M.cols() && r < M.rows(); ++c) {
        size_t sel = r;
        while (sel < M.rows() && ops.is_zero(M.at(sel, c))) ++sel;
        if (sel == M.rows()) continue;
        if (sel != r)
            for (size_t j = 0; j < M.cols(); ++j) std::swap(M.at(sel, j), M.at(r, j));
        auto piv_inv = ops.inv(M.at(r, c));
        for (size_t j = c; j < M.cols(); ++j) M.at(r, j) = ops.mul(M.at(r, j), piv_inv);
        for (size_t i = 0; i < M.rows(); ++i) {
            if (i == r || ops.is_zero(M.at(i, c))) continue;
            auto coef = M.at(i, c);
            for (size_t j = c; j < M.cols(); ++j)
                M.at(i, j) = ops.sub(M.at(i, j), ops.mul(coef, M.at(r, j)));
        }
        out.pivots.push_back(c);
        ++r;
    }
    out.rank = r;
    out.R = std::move(M);
    return out;
}

template <class Ops>
size_t rank_of(const Ops& ops, const Mat<typename Ops::Elem>& M) {
    return rref(ops, M).rank;
}

/// Basis of the right kernel {y : M y^T = 0}, one basis vector per row, in
/// the canonical form induced by the RREF of M (free column = 1 slots).
template <class Ops>
Mat<typename Ops::Elem> kernel_basis(const Ops& ops, const Mat<typename Ops::Elem>& M) {
    auto rr = rref(ops, M);
    size_t n = M.cols();
    std::vector<char> is_pivot(n, 0);
    for (size_t p : rr.pivots) is_pivot[p] = 1;
    Mat<typename Ops::Elem> K(0, n, ops.zero());
    for (size_t c = 0; c < n; ++c) {
        if (is_pivot[c]) continue;
        std::vector<typename Ops::Elem> v(n, ops.zero());
        v[c] = ops.one();
        for (size_t r = 0; r < rr.rank; ++r)
            v[rr.pivots[r]] = ops.sub(ops.zero(), rr.R.at(r, c));
        K.append_row(v);
    }
    return K;
}

template <class Ops>
struct LinSolve {
    std::vector<typename Ops::Elem> x; // one solution of A x^T = b^T
    Mat<typename Ops::Elem> kernel;    // rows span {y : A y^T = 0}
};

/// Solves A x^T = b^T; nullopt when inconsistent.
template <class Ops>
std::optional<LinSolve<Ops>> solve_linear(const Ops& ops, const Mat<typename Ops::Elem>& A,
                                          const std::vector<typename Ops::Elem>& b) {
    assert(b.size() == A.rows());
    Mat<typename Ops::Elem> aug(A.rows(), A.cols() + 1, ops.zero());
    for (size_t i = 0; i < A.rows(); ++i) {
        for (size_t j = 0; j < A.cols(); ++j) aug.at(i, j) = A.at(i, j);
        aug.at(i, A.cols()) = b[i];
    }
    auto rr = rref(ops, std::move(aug));
    for (size_t p : rr.pivots)
        if (p == A.cols()) return std::nullopt;
    LinSolve<Ops> out;
    out.x.assign(A.cols(), ops.zero());
    for (size_t r = 0; r < rr.rank; ++r) out.x[rr.pivots[r]] = rr.R.at(r, A.cols());
    out.kernel = kernel_basis(ops, A);
    return out;
}

template <class Ops>
std::optional<Mat<typename Ops::Elem>> try_inverse(const Ops& ops,
                                                   const Mat<typename Ops::Elem>& M) {
    assert(M.rows() == M.cols());
    size_t n = M.rows();
    Mat<typename Ops::Elem> aug(n, 2 * n, ops.zero());
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) aug.at(i, j) = M.at(i, j);
        aug.at(i, n + i) = ops.one();
    }
    auto rr = rref(ops, std::move(aug));
    if (rr.rank < n || rr.pivots[n - 1] != n - 1) return std::nullopt;
    Mat<typename Ops::Elem> inv(n, n, ops.zero());
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) inv.at(i, j) = rr.R.at(i, n + j);
    return inv;
}

template <class Ops>
Mat<typename Ops::Elem> make_identity(const Ops& ops, size_t n) {
    Mat<typename Ops::Elem> I(n, n, ops.zero());
    for (size_t i = 0; i < n; ++i) I.at(i, i) = ops.one();
    return I;
}

template <class Ops>
Mat<typename Ops::Elem> mat_mul(const Ops& ops, const Mat<typename Ops::Elem>& A,
                                const Mat<typename Ops::Elem>& B) {
    assert(A.cols() == B.rows());
    Mat<typename Ops::Elem> C(A.rows(), B.cols(), ops.zero());
    for (size_t i = 0; i < A.rows(); ++i)
        for (size_t k = 0; k < A.cols(); ++k) {
            const auto& a = A.at(i, k);
            if (ops.is_zero(a)) continue;
            for (size_t j = 0; j < B.cols(); ++j)
                C.at(i, j) = ops.add(C.at(i, j), ops.mul(a, B.at(k, j)));
        }
    return C;
}

/// A x^T as a plain vector (length = rows of A).
template <class Ops>
std::vector<typename Ops::Elem> mat_vec(const Ops& ops, const Mat<typename Ops::Elem>& A,
                                        const std::vector<typename Ops::Elem>& x) {
    assert(x.size() == A.cols());
    std::vector<typename Ops::Elem> y(A.rows(), ops.zero());
    for (size_t i = 0; i < A.rows(); ++i)
        for (size_t j = 0; j < A.cols(); ++j)
            y[i] = ops.add(y[i], ops.mul(A.at(i, j), x[j]));
    return y;
}

/// x A as a plain vector (length = cols of A).
template <class Ops>
std::vector<typename Ops::Elem> vec_mat(const Ops& ops, const std::vector<typename Ops::Elem>& x,
                                        const Mat<typename Ops::Elem>& A) {
    assert(x.size() == A.rows());
    std::vector<typename Ops::Elem> y(A.cols(), ops.zero());
    for (size_t i = 0; i < A.rows(); ++i) {
        if (ops.is_zero(x[i])) continue;
        for (size_t j = 0; j < A.cols(); ++j)
            y[j] = ops.add(y[j], ops.mul(x[i], A.at(i, j)));
    }
    return y;
}

template <class T>
Mat<T> transpose(const Mat<T>& M) {
    if (M.rows() == 0) return M;
    Mat<T> Tm(M.cols(), M.rows(), M.at(0, 0));
    for (size_t i = 0; i < M.rows(); ++i)
        for (size_t j = 0; j < M.cols(); ++j) Tm.at(j, i) = M.at(i, j);
    return Tm;
}

template <class Ops>
Mat<typename Ops::Elem> random_matrix(const Ops& ops, size_t r, size_t c, Rng& rng) {
    Mat<typename Ops::Elem> M(r, c, ops.zero());
    for (size_t i = 0; i < r; ++i)
        for (size_t j = 0; j < c; ++j) M.at(i, j) = ops.random(rng);
    return M;
}

/// Uniform invertible matrix by rejection: draw uniform, retry until the
/// rank is full. Expected O(1) retries for q >= 2.
template <class Ops>
Mat<typename Ops::Elem> random_invertible(const Ops& ops, size_t n, Rng& rng,
                                          unsigned* attempts = nullptr) {
    for (unsigned tries = 1;; ++tries) {
        auto M = random_matrix(ops, n, n, rng);
        if (rank_of(ops, M) == n) {
            if (attempts) *attempts = tries;
            return M;
        }
    }
}

/// Smallest element of the affine space x0 + rowspan(K) under the ordering
/// that compares coordinates by the given priority list (most significant
/// position first). Used to pick canonical representatives deterministically.
std::vector<Fq> lexmin_affine(const FqOps& ops, std::vector<Fq> x0, const MatFq& K,
                              const std::vector<size_t>& priority);

} // namespace ranklab

#endif
