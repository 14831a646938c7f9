#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>

#include "dedsym/numeric.hpp"

namespace dedsym {

/// Representative of {M, -M} with a > 0. Emitted matrices satisfy
/// a*d - b*c = 1 and a*c != 0. Entries stay far below 2^63 for any
/// enumeration that terminates; term arithmetic is arbitrary-precision.
struct UnimodularMatrix {
  std::int64_t a = 0;
  std::int64_t b = 0;
  std::int64_t c = 0;
  std::int64_t d = 0;
  bool operator==(const UnimodularMatrix&) const = default;
};

struct EnumerationBox {
  std::int64_t q_shift = 0;  // floor(k/h + 1/2)
  std::int64_t a_max = 1;    // half-widths, default h
  std::int64_t c_max = 1;
  int slack = 0;  // widens the a/c ranges by the factor (1 + slack)

  static EnumerationBox defaults(std::int64_t h, std::int64_t k, int slack = 0);
};

/// One solution (b0, d0) of a*d0 - b0*c = 1; the full family is
/// (b0 + a*t, d0 + c*t) for integer t. nullopt when gcd(a, |c|) > 1.
std::optional<std::pair<std::int64_t, std::int64_t>> solve_bezout(std::int64_t a,
                                                                  std::int64_t c);

/// Term of a single matrix:
///   sgn(k/h + b/a) (a k + b h)^(w-n) (c k + d h)^n,
/// taken as 0 unless (k/h + b/a)(k/h + d/c) < 0 strictly. Valid for either
/// representative of {M, -M}.
Integer term_value(int w, int n, std::int64_t h, std::int64_t k, const UnimodularMatrix& m);

using TermVisitor = std::function<void(const UnimodularMatrix&, const Integer&)>;

/// Visits every canonical matrix with a*c != 0 satisfying
///   |b + q a| <= |a| <= a_max (1+slack),  |d + q c| <= |c| <= c_max (1+slack)
/// together with its term value. Iterates a in [1, a_max(1+slack)], then
/// c in +-[1, c_max(1+slack)] coprime to a, then the t-window of solve_bezout
/// intersecting both the b- and d-bounds.
void enumerate_terms(int w, int n, std::int64_t h, std::int64_t k, const EnumerationBox& box,
                     const TermVisitor& visit);

/// Sum of all terms of enumerate_terms over the given box.
Integer box_sum(int w, int n, std::int64_t h, std::int64_t k, const EnumerationBox& box);

}  // namespace dedsym
