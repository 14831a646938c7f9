#pragma once

#include <vector>

#include "dedsym/numeric.hpp"

namespace dedsym {

/// Truncated integer power series in q, coefficients indexed 0..truncation.
class QSeries {
 public:
  explicit QSeries(int truncation);
  static QSeries one(int truncation);

  int truncation() const { return static_cast<int>(c_.size()) - 1; }
  const Integer& coeff(int i) const { return c_.at(i); }
  Integer& coeff(int i) { return c_.at(i); }
  const std::vector<Integer>& coeffs() const { return c_; }

  bool operator==(const QSeries& other) const { return c_ == other.c_; }

 private:
  std::vector<Integer> c_;
};

/// Cauchy product truncated at min(N_a, N_b).
QSeries series_mul(const QSeries& a, const QSeries& b);

/// Square-and-multiply power.
QSeries series_pow(const QSeries& a, unsigned e);

/// Multiplication by q^by (coefficients shifted up, same truncation).
QSeries series_shift(const QSeries& a, int by);

/// q prod_{n=1}^{N} (1 - q^n)^24 to order N.
QSeries qexp_delta(int truncation);

/// 1 + 240 sum sigma_3(n) q^n.
QSeries qexp_e4(int truncation);

/// 1 - 504 sum sigma_5(n) q^n.
QSeries qexp_e6(int truncation);

/// The normalized weight-(ell+2) eigenform for ell in {10,14,16,18,20,24}:
/// Delta, E4*Delta, E6*Delta, E4^2*Delta, E4*E6*Delta, E4^2*E6*Delta.
QSeries qexp_eigenform(int ell, int truncation);

}  // namespace dedsym
