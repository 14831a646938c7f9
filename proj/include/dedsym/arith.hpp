#pragma once

#include <cstdint>
#include <vector>

#include "dedsym/numeric.hpp"

namespace dedsym {

/// Divisors of n in ascending order, n >= 1.
std::vector<std::int64_t> divisors(std::int64_t n);

/// sigma_k(n): sum of the k-th powers of the positive divisors of n.
Integer sigma(unsigned k, std::int64_t n);

/// Trial-division primality, adequate at the scales used here.
bool is_prime(std::int64_t n);

}  // namespace dedsym
