#pragma once

#include <cstdint>

#include "dedsym/numeric.hpp"

namespace dedsym {

/// Apostol generalized Dedekind sum
///   s_m(k, h) = sum_{mu=0}^{h-1} (mu/h) Bbar_m(mu k / h)
/// for odd m >= 3 and h >= 1. Periodic in k with period h, odd in k.
Rational apostol_sum(unsigned m, std::int64_t k, std::int64_t h);

}  // namespace dedsym
