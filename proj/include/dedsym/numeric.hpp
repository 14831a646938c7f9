#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace dedsym {

using Integer = mpz_class;
using Rational = mpq_class;

static_assert(sizeof(long) == 8, "dedsym requires a 64-bit long");

inline Integer int_of(std::int64_t v) { return Integer(static_cast<long>(v)); }

/// Canonical p/q with q > 0 and gcd(|p|, q) = 1.
inline Rational make_rational(const Integer& num, const Integer& den) {
  if (sgn(den) == 0) throw std::domain_error("rational with zero denominator");
  Rational r(num);
  r /= Rational(den);
  return r;
}

inline Rational make_rational(std::int64_t num, std::int64_t den) {
  return make_rational(int_of(num), int_of(den));
}

inline bool is_integral(const Rational& r) { return r.get_den() == 1; }

inline Integer to_integer(const Rational& r) {
  if (!is_integral(r)) throw std::logic_error("expected an integer, got " + r.get_str());
  return r.get_num();
}

inline Integer int_pow(const Integer& base, unsigned long e) {
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
  return out;
}

inline Integer int_pow(std::int64_t base, unsigned long e) { return int_pow(int_of(base), e); }

inline Rational rat_pow(const Rational& base, unsigned long e) {
  if (e == 0) return Rational(1);
  return make_rational(int_pow(base.get_num(), e), int_pow(base.get_den(), e));
}

inline Integer binomial(unsigned long n, unsigned long k) {
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

inline std::string to_string(const Integer& z) { return z.get_str(); }
inline std::string to_string(const Rational& r) { return r.get_str(); }

// floor/ceil division, exact for negative operands
inline std::int64_t floor_div(std::int64_t p, std::int64_t q) {
  std::int64_t d = p / q;
  std::int64_t r = p % q;
  return (r != 0 && ((r < 0) != (q < 0))) ? d - 1 : d;
}

inline std::int64_t ceil_div(std::int64_t p, std::int64_t q) { return -floor_div(-p, q); }

}  // namespace dedsym
