#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace isolat {

// All counts, coordinates and volumes are exact; floating point appears only
// in the reporting layer (bounds and ratios), at 50 decimal digits.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;
using Real = boost::multiprecision::cpp_bin_float_50;

/// Floor division (rounds toward negative infinity). b must be nonzero.
Int floor_div(const Int& a, const Int& b);

/// Ceiling division (rounds toward positive infinity). b must be nonzero.
Int ceil_div(const Int& a, const Int& b);

/// "p" when q is an integer, "p/q" otherwise (canonical lowest terms).
std::string rat_to_string(const Rat& q);

Real rat_to_real(const Rat& q);

/// Exact d-th root where it exists in the reals; sqrt for d = 2 so that
/// perfect squares come out exact.
Real nth_root(const Real& x, unsigned d);

/// Checked narrowing; throws std::overflow_error when out of range.
std::int64_t to_i64(const Int& v);

/// Fixed-point decimal formatting with the given number of fractional digits.
std::string format_fixed(const Real& x, int digits);

}  // namespace isolat
