#include "dedsym/bernoulli.hpp"

#include <mutex>

namespace dedsym {

namespace {

std::mutex g_table_mutex;

std::vector<Rational>& table() {
  static std::vector<Rational> t{Rational(1)};
  return t;
}

// sum_{j=0}^{m} C(m+1, j) B_j = 0 for m >= 1, solved for B_m
void extend_locked(unsigned m) {
  auto& t = table();
  for (unsigned i = t.size(); i <= m; ++i) {
    Rational acc(0);
    for (unsigned j = 0; j < i; ++j) {
      acc += Rational(binomial(i + 1, j)) * t[j];
    }
    t.push_back(-acc / Rational(int_of(i + 1)));
  }
}

}  // namespace

Rational bernoulli_number(unsigned m) {
  std::lock_guard<std::mutex> lock(g_table_mutex);
  extend_locked(m);
  return table()[m];
}

std::vector<Rational> bernoulli_numbers_up_to(unsigned m) {
  std::lock_guard<std::mutex> lock(g_table_mutex);
  extend_locked(m);
  const auto& t = table();
  return std::vector<Rational>(t.begin(), t.begin() + m + 1);
}

Rational bernoulli_poly(unsigned m, const Rational& x) {
  const auto b = bernoulli_numbers_up_to(m);
  Rational total(0);
  for (unsigned j = 0; j <= m; ++j) {
    total += Rational(binomial(m, j)) * b[j] * rat_pow(x, m - j);
  }
  return total;
}

Rational periodic_bernoulli(unsigned m, const Rational& x) {
  if (m < 2) throw std::domain_error("periodic Bernoulli function requires m >= 2");
  Integer fl;
  const Integer num = x.get_num();
  const Integer den = x.get_den();
  mpz_fdiv_q(fl.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return bernoulli_poly(m, x - Rational(fl));
}

}  // namespace dedsym
