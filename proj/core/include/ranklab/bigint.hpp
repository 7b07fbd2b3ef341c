#ifndef RANKLAB_BIGINT_HPP
#define RANKLAB_BIGINT_HPP

#include <boost/multiprecision/cpp_int.hpp>

namespace ranklab {

using BigInt = boost::multiprecision::cpp_int;

/// Exact binomial coefficient.
BigInt big_binomial(unsigned n, unsigned k);

/// log2 of a positive BigInt, accurate to double precision.
double big_log2(const BigInt& x);

} // namespace ranklab

#endif
