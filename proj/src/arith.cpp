#include "dedsym/arith.hpp"

#include <algorithm>
#include <stdexcept>

namespace dedsym {

std::vector<std::int64_t> divisors(std::int64_t n) {
  if (n < 1) throw std::domain_error("divisors of a non-positive integer");
  std::vector<std::int64_t> out;
  for (std::int64_t d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    out.push_back(d);
    if (d != n / d) out.push_back(n / d);
  }
  std::sort(out.begin(), out.end());
  return out;
}

Integer sigma(unsigned k, std::int64_t n) {
  Integer total(0);
  for (std::int64_t d : divisors(n)) {
    total += int_pow(d, k);
  }
  return total;
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0) return false;
  for (std::int64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

}  // namespace dedsym
