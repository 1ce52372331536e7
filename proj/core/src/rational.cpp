#include "snorm/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace snorm {

namespace {

BigInt pow_big(BigInt base, unsigned e) {
  BigInt out(1);
  while (e > 0) {
    if (e & 1u) out *= base;
    base *= base;
    e >>= 1;
  }
  return out;
}

BigInt pow10(int d) { return pow_big(BigInt(10), static_cast<unsigned>(d)); }

// Splits a nonnegative scaled integer into "intpart.fracpart" with `digits`
// fractional digits.
std::string format_scaled(const BigInt& scaled, int digits, bool negative) {
  const BigInt scale = pow10(digits);
  BigInt ip = scaled / scale;
  BigInt fp = scaled % scale;
  std::string frac = fp.str();
  if (frac.size() < static_cast<std::size_t>(digits))
    frac.insert(frac.begin(), static_cast<std::size_t>(digits) - frac.size(), '0');
  std::string out;
  if (negative && (ip != 0 || fp != 0)) out += '-';
  out += ip.str();
  if (digits > 0) {
    out += '.';
    out += frac;
  }
  return out;
}

}  // namespace

Rational pow_int(const Rational& r, unsigned p) {
  return Rational(pow_big(numerator(r), p), pow_big(denominator(r), p));
}

Rational abs_value(const Rational& r) { return r < 0 ? Rational(-r) : r; }

Rational parse_rational(std::string_view text) {
  const auto bad = [&] {
    throw std::invalid_argument("malformed rational '" + std::string(text) +
                                "' (expected \"num\" or \"num/den\")");
  };
  if (text.empty()) bad();
  const auto slash = text.find('/');
  const auto is_integer = [&](std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
  };
  // The big-integer parser does not take a leading '+'.
  const auto to_bigint = [](std::string_view s) {
    if (s.front() == '+') s.remove_prefix(1);
    return BigInt(std::string(s));
  };
  if (slash == std::string_view::npos) {
    if (!is_integer(text)) bad();
    return Rational(to_bigint(text));
  }
  const std::string_view num = text.substr(0, slash);
  const std::string_view den = text.substr(slash + 1);
  if (!is_integer(num) || !is_integer(den)) bad();
  BigInt n = to_bigint(num);
  BigInt d = to_bigint(den);
  if (d == 0) throw std::invalid_argument("zero denominator in rational '" + std::string(text) + "'");
  if (d < 0) {  // canonical form keeps the sign on the numerator
    n = -n;
    d = -d;
  }
  return Rational(n, d);
}

std::string fraction_string(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

std::string decimal_string(const Rational& r, int digits) {
  if (digits < 0) throw std::invalid_argument("negative digit count");
  const bool neg = r < 0;
  const BigInt num = neg ? BigInt(-numerator(r)) : numerator(r);
  const BigInt den = denominator(r);
  const BigInt scaled_num = num * pow10(digits);
  BigInt q = scaled_num / den;
  const BigInt rem = scaled_num % den;
  const BigInt twice = 2 * rem;
  if (twice > den || (twice == den && (q & 1) == 1)) ++q;
  return format_scaled(q, digits, neg);
}

BigInt floor_root(const BigInt& v, unsigned p) {
  if (v < 0) throw std::domain_error("floor_root of negative value");
  if (p == 0) throw std::domain_error("floor_root with p = 0");
  if (v == 0 || v == 1 || p == 1) return v;
  BigInt lo(1), hi(2);
  while (pow_big(hi, p) <= v) hi <<= 1;
  // invariant: lo^p <= v < hi^p
  while (hi - lo > 1) {
    BigInt mid = (lo + hi) >> 1;
    if (pow_big(mid, p) <= v)
      lo = mid;
    else
      hi = mid;
  }
  return lo;
}

std::string root_decimal_string(const Rational& r, unsigned p, int digits) {
  if (r < 0) throw std::domain_error("root of negative value");
  if (p == 0) throw std::domain_error("p-th root with p = 0");
  if (digits < 0) throw std::invalid_argument("negative digit count");
  // K = floor(10^digits * (num/den)^(1/p)): largest K with K^p * den <= num * 10^(p*digits).
  const BigInt num = numerator(r);
  const BigInt den = denominator(r);
  // K = floor((target/den)^(1/p)); K^p is an integer, so flooring target/den
  // first does not change the result.
  const BigInt target = num * pow10(digits * static_cast<int>(p));
  BigInt k = floor_root(target / den, p);
  // Round half to even: compare the true value against K + 1/2, exactly.
  const BigInt half_cmp = pow_big(2 * k + 1, p) * den;
  const BigInt rhs = target * pow_big(BigInt(2), p);
  if (half_cmp < rhs || (half_cmp == rhs && (k & 1) == 1)) ++k;
  return format_scaled(k, digits, false);
}

}  // namespace snorm
