#pragma once

#include <cstdint>
#include <functional>
#include <string>

#include "dedsym/numeric.hpp"
#include "dedsym/polynomial.hpp"
#include "dedsym/unimodular.hpp"

namespace dedsym {

/// Domain point of every symbol: h >= 1, k any integer.
struct SymbolPoint {
  std::int64_t h = 1;
  std::int64_t k = 0;
  bool operator==(const SymbolPoint&) const = default;
};

enum class Parity { even, odd, none };

/// Weight-w family index pair (n, n_tilde) with n + n_tilde = w.
struct FamilyParams {
  int w;
  int n;
  FamilyParams(int w_, int n_);  // requires w even >= 2 and 0 < n < w
  int n_tilde() const { return w - n; }
};

/// An evaluable weighted Dedekind symbol: periodic in k mod h, homogeneous of
/// degree `weight` under common scaling, with the declared parity in k.
struct DedekindSymbol {
  int weight = 0;
  Parity parity = Parity::none;
  std::string name;
  std::function<Rational(SymbolPoint)> eval;

  Rational operator()(SymbolPoint p) const { return eval(p); }
};

/// gcd(h, k)^w with gcd(h, 0) = h.
Rational gcd_power_value(int w, SymbolPoint p);

/// h^w.
Rational h_power_value(int w, SymbolPoint p);

/// Finite unimodular orbit sum at the default box; always an exact integer.
Integer orbit_sum(const FamilyParams& fp, SymbolPoint p, int slack = 0);

/// ((w+2)/B_{w+2}) (B_{n+1}/(n+1)) (B_{nt+1}/(nt+1)).
Rational origin_constant(int w, int n);

/// Symbol value combining the orbit sum with Bernoulli-function corrections.
/// Even in k for n odd, odd in k for n even.
Rational period_symbol_value(const FamilyParams& fp, SymbolPoint p, int slack = 0);

/// Closed form of period_symbol_value at (1, 0) for odd n:
///   -B_{n+1}/(n+1) - B_{nt+1}/(nt+1) + origin_constant(w, n).
Rational period_symbol_at_origin(const FamilyParams& fp);

/// Degree-w reciprocity polynomial of the family, expanded into exact
/// monomial coefficients. Even in k for n odd, odd for n even.
HomogeneousPolynomial reciprocity_polynomial(const FamilyParams& fp);

/// -(h^w / (2(w+1))) s_{w+1}(k, h); odd in k.
Rational eisenstein_value(int w, SymbolPoint p);

DedekindSymbol make_gcd_power_symbol(int w);      // "G:w", even
DedekindSymbol make_h_power_symbol(int w);        // "F:w", even
DedekindSymbol make_period_symbol(int w, int n);  // "E:w:n"
DedekindSymbol make_eisenstein_symbol(int w);     // "Eis:w", odd

/// Parses "G:w" | "F:w" | "E:w:n" | "Eis:w". Malformed strings raise
/// std::invalid_argument; out-of-range parameters raise std::domain_error.
/// `slack` widens the enumeration box of period symbols (other families
/// ignore it).
DedekindSymbol parse_symbol_spec(const std::string& spec, int slack = 0);

}  // namespace dedsym
