#include "ranklab/serialize.hpp"

#include <istream>
#include <ostream>
#include <sstream>

namespace ranklab {

BigInt big_binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt r = 1;
    for (unsigned i = 0; i < k; ++i) {
        r *= n - i;
        r /= i + 1;
    }
    return r;
}

double big_log2(const BigInt& x) {
    if (x <= 0) throw std::domain_error("log2 of non-positive value");
    size_t bits = msb(x); // position of highest set bit
    if (bits <= 52) return std::log2(x.convert_to<double>());
    BigInt top = x >> (bits - 52);
    return std::log2(top.convert_to<double>()) + static_cast<double>(bits - 52);
}

BigInt pack_elem(const ExtField& F, const Fqm& x) {
    BigInt v = 0;
    for (unsigned i = F.m(); i >= 1; --i) {
        v *= F.q();
        v += F.beta_coord(x, i);
    }
    return v;
}

Fqm unpack_elem(const ExtField& F, const BigInt& val) {
    BigInt v = val;
    Fqm x = F.zero();
    for (unsigned i = 1; i <= F.m(); ++i) {
        BigInt digit = v % F.q();
        F.set_beta_coord(x, i, digit.convert_to<Fq>());
        v /= F.q();
    }
    if (v != 0) throw ParseError("element value out of range for field");
    return x;
}

void write_mat_fqm(std::ostream& os, const ExtField& F, const MatFqm& M) {
    os << F.q() << ' ' << F.m() << ' ' << M.rows() << ' ' << M.cols() << '\n';
    for (size_t i = 0; i < M.rows(); ++i) {
        for (size_t j = 0; j < M.cols(); ++j) {
            if (j) os << ' ';
            os << pack_elem(F, M.at(i, j));
        }
        os << '\n';
    }
}

void write_mat_fq(std::ostream& os, const ExtField& F, const MatFq& M) {
    os << F.q() << " 1 " << M.rows() << ' ' << M.cols() << '\n';
    for (size_t i = 0; i < M.rows(); ++i) {
        for (size_t j = 0; j < M.cols(); ++j) {
            if (j) os << ' ';
            os << M.at(i, j);
        }
        os << '\n';
    }
}

void write_vec_fqm(std::ostream& os, const ExtField& F, const VecFqm& v) {
    MatFqm M(1, v.size(), F.zero());
    for (size_t j = 0; j < v.size(); ++j) M.at(0, j) = v[j];
    write_mat_fqm(os, F, M);
}

MatHeader read_mat_header(std::istream& is) {
    MatHeader h{};
    if (!(is >> h.q >> h.m >> h.rows >> h.cols)) throw ParseError("bad matrix header");
    return h;
}

MatFqm read_mat_body(std::istream& is, const ExtField& F, const MatHeader& h) {
    MatFqm M(h.rows, h.cols, F.zero());
    for (size_t i = 0; i < h.rows; ++i)
        for (size_t j = 0; j < h.cols; ++j) {
            std::string tok;
            if (!(is >> tok)) throw ParseError("matrix body truncated");
            M.at(i, j) = unpack_elem(F, BigInt(tok));
        }
    return M;
}

MatFqm read_mat_fqm(std::istream& is, const ExtField& F) {
    MatHeader h = read_mat_header(is);
    if (h.q != F.q() || h.m != F.m()) throw ParseError("field mismatch in matrix header");
    return read_mat_body(is, F, h);
}

MatFq read_mat_fq(std::istream& is, const ExtField& F) {
    MatHeader h = read_mat_header(is);
    if (h.q != F.q() || h.m != 1) throw ParseError("expected base-field matrix");
    MatFq M(h.rows, h.cols, 0);
    for (size_t i = 0; i < h.rows; ++i)
        for (size_t j = 0; j < h.cols; ++j) {
            uint64_t v;
            if (!(is >> v)) throw ParseError("matrix body truncated");
            if (v >= F.q()) throw ParseError("element value out of range for field");
            M.at(i, j) = static_cast<Fq>(v);
        }
    return M;
}

VecFqm read_vec_fqm(std::istream& is, const ExtField& F) {
    MatFqm M = read_mat_fqm(is, F);
    if (M.rows() != 1) throw ParseError("expected a single-row matrix");
    return M.row(0);
}

std::string to_string_fq(const ExtField& F, const MatFq& M) {
    std::ostringstream os;
    write_mat_fq(os, F, M);
    return os.str();
}

std::string to_string_fqm(const ExtField& F, const MatFqm& M) {
    std::ostringstream os;
    write_mat_fqm(os, F, M);
    return os.str();
}

} // namespace ranklab
