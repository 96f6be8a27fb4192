#ifndef FAREYLAB_RATIONAL_HPP
#define FAREYLAB_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>

namespace fareylab {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Largest integer <= r.
inline BigInt rational_floor(const Rational& r) {
  BigInt n = numerator(r);
  BigInt d = denominator(r);  // always > 0
  BigInt q = n / d;
  if (n < 0 && q * d != n) --q;
  return q;
}

inline BigInt rational_ceil(const Rational& r) { return -rational_floor(-r); }

inline std::int64_t to_int64(const BigInt& n) {
  return n.convert_to<std::int64_t>();
}

inline std::string num_string(const Rational& r) { return numerator(r).str(); }
inline std::string den_string(const Rational& r) { return denominator(r).str(); }

}  // namespace fareylab

#endif
