#include "ranklab/gf2.hpp"

namespace ranklab {

GF2Rref gf2_rref(GF2Mat& M) {
    GF2Rref out;
    size_t r = 0;
    for (size_t c = 0; c < M.cols() && r < M.rows(); ++c) {
        size_t sel = r;
        while (sel < M.rows() && !M.get(sel, c)) ++sel;
        if (sel == M.rows()) continue;
        M.swap_rows(sel, r);
        for (size_t i = 0; i < M.rows(); ++i)
            if (i != r && M.get(i, c)) M.xor_rows(i, r);
        out.pivots.push_back(c);
        ++r;
    }
    out.rank = r;
    return out;
}

GF2Mat gf2_kernel(const GF2Mat& M) {
    GF2Mat R = M;
    GF2Rref rr = gf2_rref(R);
    size_t n = M.cols();
    std::vector<char> is_pivot(n, 0);
    for (size_t p : rr.pivots) is_pivot[p] = 1;
    size_t free_count = 0;
    for (size_t c = 0; c < n; ++c)
        if (!is_pivot[c]) ++free_count;
    GF2Mat K(free_count, n);
    size_t kr = 0;
    for (size_t c = 0; c < n; ++c) {
        if (is_pivot[c]) continue;
        K.set(kr, c, true);
        for (size_t r = 0; r < rr.rank; ++r)
            if (R.get(r, c)) K.set(kr, rr.pivots[r], true);
        ++kr;
    }
    return K;
}

std::optional<GF2Solve> gf2_solve(const GF2Mat& A, const std::vector<uint64_t>& b) {
    size_t n = A.cols();
    GF2Mat aug(A.rows(), n + 1);
    for (size_t i = 0; i < A.rows(); ++i) {
        const uint64_t* src = A.row_ptr(i);
        uint64_t* dst = aug.row_ptr(i);
        for (size_t w = 0; w < A.words(); ++w) dst[w] = src[w];
        if ((b[i / 64] >> (i % 64)) & 1) aug.set(i, n, true);
    }
    GF2Rref rr = gf2_rref(aug);
    for (size_t p : rr.pivots)
        if (p == n) return std::nullopt;
    GF2Solve out;
    out.x.assign((n + 63) / 64, 0);
    for (size_t r = 0; r < rr.rank; ++r)
        if (aug.get(r, n)) out.x[rr.pivots[r] / 64] |= 1ULL << (rr.pivots[r] % 64);
    out.kernel = gf2_kernel(A);
    return out;
}

} // namespace ranklab
