#include "ranklab/matrix.hpp"

#include <numeric>

namespace ranklab {

std::vector<Fq> lexmin_affine(const FqOps& ops, std::vector<Fq> x0, const MatFq& K,
                              const std::vector<size_t>& priority) {
    if (K.rows() == 0) return x0;
    size_t n = x0.size();
    assert(K.cols() == n && priority.size() == n);

    // Gaussian elimination on K with columns visited in priority order;
    // each pivot row then zeroes x0 at its pivot position. Positions without
    // a pivot are forced, so the greedy sweep is the lexicographic minimum.
    MatFq W = K;
    std::vector<char> used(W.rows(), 0);
    for (size_t idx = 0; idx < n; ++idx) {
        size_t col = priority[idx];
        size_t sel = W.rows();
        for (size_t r = 0; r < W.rows(); ++r)
            if (!used[r] && !ops.is_zero(W.at(r, col))) {
                sel = r;
                break;
            }
        if (sel == W.rows()) continue;
        used[sel] = 1;
        Fq piv_inv = ops.inv(W.at(sel, col));
        for (size_t j = 0; j < n; ++j) W.at(sel, j) = ops.mul(W.at(sel, j), piv_inv);
        for (size_t r = 0; r < W.rows(); ++r) {
            if (r == sel || ops.is_zero(W.at(r, col))) continue;
            Fq c = W.at(r, col);
            for (size_t j = 0; j < n; ++j)
                W.at(r, j) = ops.sub(W.at(r, j), ops.mul(c, W.at(sel, j)));
        }
        Fq c = x0[col];
        if (!ops.is_zero(c))
            for (size_t j = 0; j < n; ++j)
                x0[j] = ops.sub(x0[j], ops.mul(c, W.at(sel, j)));
    }
    return x0;
}

} // namespace ranklab
