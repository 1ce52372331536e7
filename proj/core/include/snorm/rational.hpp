#ifndef SNORM_RATIONAL_HPP
#define SNORM_RATIONAL_HPP
//
// Exact rational scalars.
//
// All core computations run on arbitrary-precision rationals; floating point
// only ever appears in the explicit approximate-mode entry points.  The
// representation is boost::multiprecision::cpp_rational, which keeps values
// in canonical form (reduced, positive denominator).
//
// This header adds the project-wide helpers on top of it: parsing of
// "num/den" strings, exact integer powers, and correctly rounded decimal
// rendering (round half to even) of rationals and of p-th roots of
// rationals.  Rendering is done entirely in integer arithmetic, so the
// emitted digit strings are exact, deterministic and platform independent.
//

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace snorm {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Default number of fractional digits in decimal renderings.
inline constexpr int kDefaultDecimalDigits = 12;

/// Exact r^p for integer p >= 0.
Rational pow_int(const Rational& r, unsigned p);

/// Absolute value.
Rational abs_value(const Rational& r);

/// Parses "num", "-num" or "num/den" (den > 0 after canonicalization).
/// Throws std::invalid_argument on malformed input or zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical fraction rendering: "num/den", or just "num" when den == 1.
std::string fraction_string(const Rational& r);

/// Fixed-point decimal rendering with `digits` fractional digits,
/// round half to even.  Exact: computed with integer arithmetic.
std::string decimal_string(const Rational& r, int digits = kDefaultDecimalDigits);

/// Decimal rendering of r^(1/p) for r >= 0 and integer p >= 1, with
/// `digits` fractional digits, round half to even.  The root is located by
/// exact integer bisection, so every emitted digit (including the tie
/// direction) is correct.
std::string root_decimal_string(const Rational& r, unsigned p,
                                int digits = kDefaultDecimalDigits);

/// floor(v^(1/p)) for v >= 0.
BigInt floor_root(const BigInt& v, unsigned p);

}  // namespace snorm

#endif  // SNORM_RATIONAL_HPP
