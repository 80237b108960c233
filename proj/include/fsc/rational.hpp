#ifndef FSC_RATIONAL_HPP
#define FSC_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace fsc {

using BigInt = boost::multiprecision::cpp_int;

/// Arbitrary-precision rational, always stored reduced with positive
/// denominator.  Every index computation in the library is exact; equality
/// and ordering decide theorem clauses, so floating point is never used on
/// this side of the toolkit.
using Rational = boost::multiprecision::cpp_rational;

/// num/den with sign normalization; throws RangeError on zero denominator.
Rational make_rational(BigInt num, BigInt den);

inline Rational rat(long long num, long long den = 1) {
  return make_rational(BigInt(num), BigInt(den));
}

/// Parses INT('/'INT)?.  `base_offset` is added to reported byte offsets.
Rational parse_rational(std::string_view text, std::size_t base_offset = 0);

/// Canonical form: "n" when the value is integral, otherwise "n/d".
std::string format_rational(const Rational& value);

double to_double(const Rational& value);

bool is_integer(const Rational& value);

BigInt floor_rational(const Rational& value);
BigInt ceil_rational(const Rational& value);

/// 1 - x; conjugation of a reciprocal exponent (1/p -> 1/p*).
inline Rational conjugate_inv(const Rational& inv) { return Rational(1) - inv; }

}  // namespace fsc

#endif
