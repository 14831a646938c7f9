#include "dedsym/apostol.hpp"

#include "dedsym/bernoulli.hpp"

namespace dedsym {

Rational apostol_sum(unsigned m, std::int64_t k, std::int64_t h) {
  if (h < 1) throw std::domain_error("apostol_sum requires h >= 1");
  if (m < 3 || m % 2 == 0) throw std::domain_error("apostol_sum requires odd m >= 3");
  Rational total(0);
  for (std::int64_t mu = 1; mu < h; ++mu) {  // mu = 0 carries the factor 0/h
    const Rational x = make_rational(int_of(mu) * int_of(k), int_of(h));
    total += make_rational(mu, h) * periodic_bernoulli(m, x);
  }
  return total;
}

}  // namespace dedsym
