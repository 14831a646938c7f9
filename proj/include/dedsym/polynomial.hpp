#pragma once

#include <string>
#include <vector>

#include "dedsym/numeric.hpp"

namespace dedsym {

/// Homogeneous polynomial of fixed degree w in (h, k); coefficient(i)
/// multiplies h^i k^(w-i).
class HomogeneousPolynomial {
 public:
  explicit HomogeneousPolynomial(int degree);

  int degree() const { return degree_; }
  const Rational& coefficient(int h_exp) const;
  void set_coefficient(int h_exp, const Rational& v);
  void add_to_coefficient(int h_exp, const Rational& v);

  Rational evaluate(const Rational& h, const Rational& k) const;

  /// g(h+k, k) re-expanded in the monomial basis.
  HomogeneousPolynomial substitute_h_plus_k_for_h() const;
  /// g(h, h+k) re-expanded in the monomial basis.
  HomogeneousPolynomial substitute_h_plus_k_for_k() const;

  bool is_even_in_k() const;  // g(h,-k) == g(h,k)
  bool is_odd_in_k() const;   // g(h,-k) == -g(h,k)
  bool is_zero() const;

  HomogeneousPolynomial operator+(const HomogeneousPolynomial& other) const;
  HomogeneousPolynomial operator-(const HomogeneousPolynomial& other) const;
  bool operator==(const HomogeneousPolynomial& other) const;

  /// JSON array of {"i": exponent of h, "coeff": "p/q"} in decreasing i,
  /// nonzero coefficients only.
  std::string to_json() const;

 private:
  int degree_;
  std::vector<Rational> coeff_;
};

}  // namespace dedsym
