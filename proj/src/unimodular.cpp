#include "dedsym/unimodular.hpp"

#include <algorithm>
#include <cstdlib>

namespace dedsym {

EnumerationBox EnumerationBox::defaults(std::int64_t h, std::int64_t k, int slack) {
  if (h < 1) throw std::domain_error("enumeration point requires h >= 1");
  if (slack < 0) throw std::domain_error("slack must be non-negative");
  EnumerationBox box;
  box.q_shift = floor_div(2 * k + h, 2 * h);  // floor(k/h + 1/2)
  box.a_max = h;
  box.c_max = h;
  box.slack = slack;
  return box;
}

std::optional<std::pair<std::int64_t, std::int64_t>> solve_bezout(std::int64_t a,
                                                                  std::int64_t c) {
  if (a < 1) throw std::domain_error("solve_bezout requires a >= 1");
  if (c == 0) throw std::domain_error("solve_bezout requires c != 0");
  // extended Euclid keeping old_r = a*old_s + c*old_t
  std::int64_t old_r = a, r = c;
  std::int64_t old_s = 1, s = 0;
  std::int64_t old_t = 0, t = 1;
  while (r != 0) {
    const std::int64_t q = old_r / r;
    std::int64_t tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
    tmp = old_t - q * t;
    old_t = t;
    t = tmp;
  }
  if (old_r != 1 && old_r != -1) return std::nullopt;
  // a*old_s + c*old_t = old_r; want a*d0 - b0*c = 1
  const std::int64_t g = old_r;
  const std::int64_t d0 = old_s * g;
  const std::int64_t b0 = -old_t * g;
  return std::make_pair(b0, d0);
}

namespace {

inline int sign64(std::int64_t v) { return (v > 0) - (v < 0); }

void validate(int w, int n, std::int64_t h) {
  if (h < 1) throw std::domain_error("symbol point requires h >= 1");
  if (w < 2 || w % 2 != 0) throw std::domain_error("weight must be even and >= 2");
  if (n <= 0 || n >= w) throw std::domain_error("index n must satisfy 0 < n < w");
}

}  // namespace

Integer term_value(int w, int n, std::int64_t h, std::int64_t k, const UnimodularMatrix& m) {
  validate(w, n, h);
  const Integer p1 = int_of(m.a) * int_of(k) + int_of(m.b) * int_of(h);
  const Integer p2 = int_of(m.c) * int_of(k) + int_of(m.d) * int_of(h);
  // sgn(k/h + b/a) = sgn(p1) sgn(a) since h > 0, and similarly for the d/c factor
  const int s1 = sgn(p1) * sign64(m.a);
  const int s2 = sgn(p2) * sign64(m.c);
  if (s1 * s2 >= 0) return Integer(0);  // strict sign condition
  Integer t = int_pow(p1, static_cast<unsigned long>(w - n)) *
              int_pow(p2, static_cast<unsigned long>(n));
  return s1 > 0 ? t : Integer(-t);
}

void enumerate_terms(int w, int n, std::int64_t h, std::int64_t k, const EnumerationBox& box,
                     const TermVisitor& visit) {
  validate(w, n, h);
  if (box.slack < 0) throw std::domain_error("slack must be non-negative");
  const std::int64_t amax = box.a_max * (1 + box.slack);
  const std::int64_t cmax = box.c_max * (1 + box.slack);
  const std::int64_t q = box.q_shift;
  for (std::int64_t a = 1; a <= amax; ++a) {
    for (std::int64_t c = -cmax; c <= cmax; ++c) {
      if (c == 0) continue;
      const auto bd = solve_bezout(a, c);
      if (!bd) continue;
      const auto [b0, d0] = *bd;
      // |b + q a| <= a with b = b0 + a t
      const std::int64_t t_lo_b = ceil_div(-a - q * a - b0, a);
      const std::int64_t t_hi_b = floor_div(a - q * a - b0, a);
      // |d + q c| <= |c| with d = d0 + c t
      const std::int64_t lo = -std::llabs(c) - q * c - d0;
      const std::int64_t hi = std::llabs(c) - q * c - d0;
      std::int64_t t_lo_d, t_hi_d;
      if (c > 0) {
        t_lo_d = ceil_div(lo, c);
        t_hi_d = floor_div(hi, c);
      } else {
        t_lo_d = ceil_div(hi, c);
        t_hi_d = floor_div(lo, c);
      }
      const std::int64_t t_lo = std::max(t_lo_b, t_lo_d);
      const std::int64_t t_hi = std::min(t_hi_b, t_hi_d);
      for (std::int64_t t = t_lo; t <= t_hi; ++t) {
        const UnimodularMatrix m{a, b0 + a * t, c, d0 + c * t};
        visit(m, term_value(w, n, h, k, m));
      }
    }
  }
}

Integer box_sum(int w, int n, std::int64_t h, std::int64_t k, const EnumerationBox& box) {
  Integer total(0);
  enumerate_terms(w, n, h, k, box,
                  [&total](const UnimodularMatrix&, const Integer& term) { total += term; });
  return total;
}

}  // namespace dedsym
