#include "dedsym/hecke.hpp"

#include <algorithm>
#include <thread>

#include "dedsym/arith.hpp"
#include "dedsym/bernoulli.hpp"

namespace dedsym {

std::vector<HeckeTriple> hecke_triples(std::int64_t n) {
  if (n < 1) throw std::domain_error("Hecke index must be positive");
  std::vector<HeckeTriple> out;
  for (std::int64_t d : divisors(n)) {
    const std::int64_t a = n / d;
    for (std::int64_t b = 0; b < d; ++b) out.push_back({a, d, b});
  }
  return out;
}

namespace {

// index-ordered parallel reduction; the exact sum is independent of the split
Rational sum_over_range(std::int64_t count, int threads,
                        const std::function<Rational(std::int64_t)>& item) {
  if (count <= 0) return Rational(0);
  const int workers =
      static_cast<int>(std::max<std::int64_t>(1, std::min<std::int64_t>(threads, count)));
  if (workers == 1) {
    Rational total(0);
    for (std::int64_t i = 0; i < count; ++i) total += item(i);
    return total;
  }
  std::vector<Rational> partial(workers, Rational(0));
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int wi = 0; wi < workers; ++wi) {
    const std::int64_t lo = count * wi / workers;
    const std::int64_t hi = count * (wi + 1) / workers;
    pool.emplace_back([&, wi, lo, hi] {
      Rational acc(0);
      for (std::int64_t i = lo; i < hi; ++i) acc += item(i);
      partial[wi] = acc;
    });
  }
  for (auto& t : pool) t.join();
  Rational total(0);
  for (const auto& part : partial) total += part;
  return total;
}

}  // namespace

Rational hecke_apply(const DedekindSymbol& E, std::int64_t n, SymbolPoint p, int threads) {
  const auto triples = hecke_triples(n);
  return sum_over_range(static_cast<std::int64_t>(triples.size()), threads,
                        [&](std::int64_t i) {
                          const auto& t = triples[i];
                          return E.eval({t.d * p.h, t.a * p.k + t.b * p.h});
                        });
}

DedekindSymbol hecke_image(const DedekindSymbol& E, std::int64_t n) {
  if (n < 1) throw std::domain_error("Hecke index must be positive");
  DedekindSymbol out;
  out.weight = E.weight;
  out.parity = E.parity;
  out.name = "T" + std::to_string(n) + "(" + E.name + ")";
  out.eval = [E, n](SymbolPoint p) { return hecke_apply(E, n, p); };
  return out;
}

SymbolPoint find_nonzero_point(const DedekindSymbol& E, std::int64_t search_limit) {
  if (search_limit < 1) throw std::domain_error("search limit must be positive");
  for (std::int64_t h = 1; h <= search_limit; ++h) {
    for (std::int64_t k = 0; k < h; ++k) {
      const SymbolPoint p{h, k};
      if (E.eval(p) != 0) return p;
    }
  }
  throw std::runtime_error("symbol '" + E.name + "' vanishes at every point with h <= " +
                           std::to_string(search_limit));
}

EigenReport eigen_report(const DedekindSymbol& E, std::int64_t n, int extra_checks,
                         std::int64_t search_limit, int threads) {
  EigenReport report;
  report.base_point = find_nonzero_point(E, search_limit);
  const Rational base_value = E.eval(report.base_point);
  report.eigenvalue = hecke_apply(E, n, report.base_point, threads) / base_value;
  report.checked_points.push_back(report.base_point);
  report.consistent = true;
  int found = 0;
  for (std::int64_t h = 1; h <= search_limit && found < extra_checks; ++h) {
    for (std::int64_t k = 0; k < h && found < extra_checks; ++k) {
      const SymbolPoint p{h, k};
      if (p == report.base_point) continue;
      const Rational value = E.eval(p);
      if (value == 0) continue;
      ++found;
      report.checked_points.push_back(p);
      if (hecke_apply(E, n, p, threads) != report.eigenvalue * value) {
        report.consistent = false;
        return report;
      }
    }
  }
  return report;
}

bool is_supported_weight(int ell) {
  return ell == 10 || ell == 14 || ell == 16 || ell == 18 || ell == 20 || ell == 24;
}

int eigen_index(int ell) {
  if (!is_supported_weight(ell)) {
    throw std::domain_error("ell must be one of 10, 14, 16, 18, 20, 24");
  }
  return 2 * ((ell + 2) / 4) - 1;
}

Integer orbit_sum_over_residues(int w, int n, std::int64_t m, int threads) {
  if (m < 1) throw std::domain_error("modulus m must be positive");
  const FamilyParams fp(w, n);
  const Rational total = sum_over_range(
      m, threads, [&](std::int64_t b) { return Rational(orbit_sum(fp, {m, b})); });
  return to_integer(total);
}

Integer tau(int ell, std::int64_t m, int threads) {
  if (m < 1) throw std::domain_error("tau index must be positive");
  const auto E = make_period_symbol(ell, eigen_index(ell));
  const SymbolPoint origin{1, 0};  // nonzero for all six weights
  const Rational base_value = E.eval(origin);
  if (base_value == 0) throw std::logic_error("eigen symbol vanished at the base point");
  const Rational ratio = hecke_apply(E, m, origin, threads) / base_value;
  if (!is_integral(ratio)) {
    throw std::logic_error("non-integral eigenvalue ratio " + to_string(ratio) +
                           " for ell=" + std::to_string(ell) + ", m=" + std::to_string(m));
  }
  return ratio.get_num();
}

namespace {

struct ClosedFormTerm {
  std::int64_t num, den;  // coefficient
  int exponent;           // multiplies m^exponent - m^(w+1)
};

struct ClosedForm {
  std::int64_t pre_num, pre_den;  // prefactor of the braces
  std::vector<ClosedFormTerm> terms;
};

ClosedForm closed_form_for(int ell) {
  switch (ell) {
    case 10:
      return {-691, 6, {{-1, 126, 5}}};
    case 14:
      return {3617, 30, {{1, 120, 7}}};
    case 16:
      return {-43867, 150, {{-1, 132, 7}, {1, 240, 9}}};
    case 18:
      return {-174611, 2646, {{-1, 66, 9}}};
    case 20:
      return {77683, 1050, {{691, 32760, 9}, {-1, 132, 11}}};
    case 24:
      return {-657931, 40950, {{-1, 12, 11}, {691, 32760, 13}}};
    default:
      throw std::domain_error("ell must be one of 10, 14, 16, 18, 20, 24");
  }
}

}  // namespace

Integer tau_closed_form(int ell, std::int64_t m, int threads) {
  if (!is_prime(m)) throw std::domain_error("the closed form is stated for prime m only");
  const int w = ell;
  const int n0 = eigen_index(ell);
  const ClosedForm cf = closed_form_for(ell);
  const Integer m_top = int_pow(m, w + 1);
  Rational braces(0);
  for (const auto& term : cf.terms) {
    braces += make_rational(term.num, term.den) * Rational(int_pow(m, term.exponent) - m_top);
  }
  braces += Rational(orbit_sum_over_residues(w, n0, m, threads));
  const Rational value =
      Rational(1) + Rational(m_top) + make_rational(cf.pre_num, cf.pre_den) * braces;
  return to_integer(value);
}

Integer tau_box_form(std::int64_t m) {
  if (!is_prime(m)) throw std::domain_error("the box form is stated for prime m only");
  const std::int64_t bound = 2 * m;
  Integer orbit(0);
  for (std::int64_t i = 0; i < m; ++i) {
    for (std::int64_t a = 1; a <= bound; ++a) {
      for (std::int64_t b = -bound; b <= bound; ++b) {
        for (std::int64_t c = -bound; c <= bound; ++c) {
          if (c == 0) continue;
          const std::int64_t num = 1 + b * c;
          if (num % a != 0) continue;
          const std::int64_t d = num / a;
          if (d < -bound || d > bound) continue;
          orbit += term_value(10, 5, m, i, {a, b, c, d});
        }
      }
    }
  }
  const Rational value = Rational(1) + Rational(int_pow(m, 11)) +
                         make_rational(691, 756) * Rational(int_pow(m, 5) - int_pow(m, 11)) -
                         make_rational(691, 6) * Rational(orbit);
  return to_integer(value);
}

Rational hecke_origin_closed_form(int w, int n, std::int64_t m, int threads) {
  if (n % 2 != 1) throw std::domain_error("origin closed form requires odd n");
  if (!is_prime(m)) throw std::domain_error("origin closed form requires prime m");
  const FamilyParams fp(w, n);
  const int nt = fp.n_tilde();
  Rational total(orbit_sum_over_residues(w, n, m, threads));
  total -= bernoulli_number(n + 1) / (n + 1) * Rational(1 + int_pow(m, nt));
  total -= bernoulli_number(nt + 1) / (nt + 1) * Rational(1 + int_pow(m, n));
  total += Rational(1 + int_pow(m, w + 1)) * origin_constant(w, n);
  return total;
}

}  // namespace dedsym
