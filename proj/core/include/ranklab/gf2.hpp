#ifndef RANKLAB_GF2_HPP
#define RANKLAB_GF2_HPP

#include <cstdint>
#include <optional>
#include <vector>

namespace ranklab {

/// Bit-packed matrix over GF(2); rows are arrays of 64-bit words. Used in
/// solver inner loops where the generic element-wise path is too slow.
class GF2Mat {
public:
    GF2Mat() : rows_(0), cols_(0), words_(0) {}
    GF2Mat(size_t rows, size_t cols)
        : rows_(rows), cols_(cols), words_((cols + 63) / 64), d_(rows * words_, 0) {}

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    size_t words() const { return words_; }

    bool get(size_t i, size_t j) const { return (d_[i * words_ + j / 64] >> (j % 64)) & 1; }
    void set(size_t i, size_t j, bool v) {
        uint64_t mask = 1ULL << (j % 64);
        if (v)
            d_[i * words_ + j / 64] |= mask;
        else
            d_[i * words_ + j / 64] &= ~mask;
    }
    uint64_t* row_ptr(size_t i) { return d_.data() + i * words_; }
    const uint64_t* row_ptr(size_t i) const { return d_.data() + i * words_; }

    void xor_rows(size_t dst, size_t src) {
        uint64_t* a = row_ptr(dst);
        const uint64_t* b = row_ptr(src);
        for (size_t w = 0; w < words_; ++w) a[w] ^= b[w];
    }
    void swap_rows(size_t i, size_t j) {
        if (i == j) return;
        uint64_t* a = row_ptr(i);
        uint64_t* b = row_ptr(j);
        for (size_t w = 0; w < words_; ++w) std::swap(a[w], b[w]);
    }
    void append_row(const std::vector<uint64_t>& row) {
        d_.insert(d_.end(), row.begin(), row.end());
        ++rows_;
    }

private:
    size_t rows_, cols_, words_;
    std::vector<uint64_t> d_;
};

struct GF2Rref {
    std::vector<size_t> pivots;
    size_t rank = 0;
};

/// In-place reduced row echelon form.
GF2Rref gf2_rref(GF2Mat& M);

/// Rows spanning {y : M y^T = 0}.
GF2Mat gf2_kernel(const GF2Mat& M);

/// One solution of A x^T = b^T plus kernel, or nullopt if inconsistent.
/// b is packed (ceil(rows/64) words).
struct GF2Solve {
    std::vector<uint64_t> x; // packed, cols bits
    GF2Mat kernel;
};
std::optional<GF2Solve> gf2_solve(const GF2Mat& A, const std::vector<uint64_t>& b);

inline bool gf2_dot(const uint64_t* a, const uint64_t* b, size_t words) {
    uint64_t acc = 0;
    for (size_t w = 0; w < words; ++w) acc ^= a[w] & b[w];
    return __builtin_parityll(acc);
}

} // namespace ranklab

#endif
