#include "dedsym/qseries.hpp"

#include <stdexcept>

#include "dedsym/arith.hpp"

namespace dedsym {

QSeries::QSeries(int truncation) {
  if (truncation < 0) throw std::domain_error("truncation must be non-negative");
  c_.assign(truncation + 1, Integer(0));
}

QSeries QSeries::one(int truncation) {
  QSeries s(truncation);
  s.coeff(0) = 1;
  return s;
}

QSeries series_mul(const QSeries& a, const QSeries& b) {
  const int n = std::min(a.truncation(), b.truncation());
  QSeries out(n);
  for (int i = 0; i <= n; ++i) {
    if (a.coeff(i) == 0) continue;
    for (int j = 0; i + j <= n; ++j) {
      if (b.coeff(j) == 0) continue;
      out.coeff(i + j) += a.coeff(i) * b.coeff(j);
    }
  }
  return out;
}

QSeries series_pow(const QSeries& a, unsigned e) {
  QSeries result = QSeries::one(a.truncation());
  QSeries base = a;
  while (e > 0) {
    if (e & 1u) result = series_mul(result, base);
    e >>= 1u;
    if (e > 0) base = series_mul(base, base);
  }
  return result;
}

QSeries series_shift(const QSeries& a, int by) {
  if (by < 0) throw std::domain_error("shift must be non-negative");
  QSeries out(a.truncation());
  for (int i = 0; i + by <= a.truncation(); ++i) out.coeff(i + by) = a.coeff(i);
  return out;
}

QSeries qexp_delta(int truncation) {
  QSeries product = QSeries::one(truncation);
  for (int n = 1; n <= truncation; ++n) {
    QSeries factor = QSeries::one(truncation);
    factor.coeff(n) = -1;
    product = series_mul(product, series_pow(factor, 24));
  }
  return series_shift(product, 1);
}

QSeries qexp_e4(int truncation) {
  QSeries s(truncation);
  s.coeff(0) = 1;
  for (int n = 1; n <= truncation; ++n) s.coeff(n) = 240 * sigma(3, n);
  return s;
}

QSeries qexp_e6(int truncation) {
  QSeries s(truncation);
  s.coeff(0) = 1;
  for (int n = 1; n <= truncation; ++n) s.coeff(n) = -504 * sigma(5, n);
  return s;
}

QSeries qexp_eigenform(int ell, int truncation) {
  const QSeries delta = qexp_delta(truncation);
  switch (ell) {
    case 10:
      return delta;
    case 14:
      return series_mul(qexp_e4(truncation), delta);
    case 16:
      return series_mul(qexp_e6(truncation), delta);
    case 18:
      return series_mul(series_pow(qexp_e4(truncation), 2), delta);
    case 20:
      return series_mul(series_mul(qexp_e4(truncation), qexp_e6(truncation)), delta);
    case 24:
      return series_mul(series_mul(series_pow(qexp_e4(truncation), 2), qexp_e6(truncation)),
                        delta);
    default:
      throw std::domain_error("ell must be one of 10, 14, 16, 18, 20, 24");
  }
}

}  // namespace dedsym
