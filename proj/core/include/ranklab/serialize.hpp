#ifndef RANKLAB_SERIALIZE_HPP
#define RANKLAB_SERIALIZE_HPP

#include <iosfwd>
#include <string>

#include "ranklab/bigint.hpp"
#include "ranklab/matrix.hpp"

namespace ranklab {

/// Canonical text form of matrices, bit-exact across platforms.
///
/// First line: `q m rows cols` in decimal. Then one line per row, elements
/// space-separated. An element of F_{q^m} is written as the decimal integer
/// sum_i c_i q^(i-1) where c_i is its coordinate on basis element beta_i
/// (digit order little-endian in the basis index). F_q matrices use m = 1.

BigInt pack_elem(const ExtField& F, const Fqm& x);
Fqm unpack_elem(const ExtField& F, const BigInt& v);

void write_mat_fq(std::ostream& os, const ExtField& F, const MatFq& M);
void write_mat_fqm(std::ostream& os, const ExtField& F, const MatFqm& M);
void write_vec_fqm(std::ostream& os, const ExtField& F, const VecFqm& v);

/// Reads a canonical matrix block; checks the header against the field.
MatFq read_mat_fq(std::istream& is, const ExtField& F);
MatFqm read_mat_fqm(std::istream& is, const ExtField& F);
VecFqm read_vec_fqm(std::istream& is, const ExtField& F);

/// Header of the next canonical block without a field at hand, so callers
/// can reconstruct the tower first: returns (q, m, rows, cols) peeked from
/// the stream position (consumes the header line).
struct MatHeader {
    uint64_t q;
    unsigned m;
    size_t rows, cols;
};
MatHeader read_mat_header(std::istream& is);
MatFqm read_mat_body(std::istream& is, const ExtField& F, const MatHeader& h);

std::string to_string_fq(const ExtField& F, const MatFq& M);
std::string to_string_fqm(const ExtField& F, const MatFqm& M);

class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace ranklab

#endif
