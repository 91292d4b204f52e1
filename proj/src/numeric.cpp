#include "isolat/numeric.hpp"

#include <limits>
#include <sstream>
#include <stdexcept>

namespace isolat {

Int floor_div(const Int& a, const Int& b) {
  Int q = a / b;  // truncates toward zero
  if ((a % b) != 0 && ((a < 0) != (b < 0))) --q;
  return q;
}

Int ceil_div(const Int& a, const Int& b) {
  Int q = a / b;
  if ((a % b) != 0 && ((a < 0) == (b < 0))) ++q;
  return q;
}

std::string rat_to_string(const Rat& q) {
  const Int num = boost::multiprecision::numerator(q);
  const Int den = boost::multiprecision::denominator(q);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

Real rat_to_real(const Rat& q) {
  return Real(boost::multiprecision::numerator(q)) /
         Real(boost::multiprecision::denominator(q));
}

Real nth_root(const Real& x, unsigned d) {
  if (d == 1) return x;
  if (d == 2) return sqrt(x);
  return pow(x, Real(1) / Real(d));
}

std::int64_t to_i64(const Int& v) {
  if (v < std::numeric_limits<std::int64_t>::min() ||
      v > std::numeric_limits<std::int64_t>::max()) {
    throw std::overflow_error("integer does not fit in 64 bits: " + v.str());
  }
  return v.convert_to<std::int64_t>();
}

std::string format_fixed(const Real& x, int digits) {
  std::ostringstream oss;
  oss.setf(std::ios::fixed);
  oss.precision(digits);
  oss << x;
  return oss.str();
}

}  // namespace isolat
