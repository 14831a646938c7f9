#include "dedsym/symbols.hpp"

#include <charconv>

#include "dedsym/apostol.hpp"
#include "dedsym/bernoulli.hpp"

namespace dedsym {

namespace {

void require_point(SymbolPoint p) {
  if (p.h < 1) throw std::domain_error("symbol point requires h >= 1");
}

void require_weight(int w) {
  if (w < 2 || w % 2 != 0) throw std::domain_error("weight must be even and >= 2");
}

}  // namespace

FamilyParams::FamilyParams(int w_, int n_) : w(w_), n(n_) {
  require_weight(w);
  if (n <= 0 || n >= w) throw std::domain_error("index n must satisfy 0 < n < w");
}

Rational gcd_power_value(int w, SymbolPoint p) {
  require_weight(w);
  require_point(p);
  Integer g;
  const Integer hz = int_of(p.h);
  const Integer kz = int_of(p.k);
  mpz_gcd(g.get_mpz_t(), hz.get_mpz_t(), kz.get_mpz_t());  // gcd(h, 0) = h
  return Rational(int_pow(g, w));
}

Rational h_power_value(int w, SymbolPoint p) {
  require_weight(w);
  require_point(p);
  return Rational(int_pow(p.h, w));
}

Integer orbit_sum(const FamilyParams& fp, SymbolPoint p, int slack) {
  return box_sum(fp.w, fp.n, p.h, p.k, EnumerationBox::defaults(p.h, p.k, slack));
}

Rational origin_constant(int w, int n) {
  const FamilyParams fp(w, n);
  const Rational bw2 = bernoulli_number(w + 2);
  if (bw2 == 0) throw std::logic_error("vanishing B_{w+2}");
  const Rational rn = bernoulli_number(n + 1) / (n + 1);
  const Rational rnt = bernoulli_number(fp.n_tilde() + 1) / (fp.n_tilde() + 1);
  return Rational(w + 2) / bw2 * rn * rnt;
}

Rational period_symbol_value(const FamilyParams& fp, SymbolPoint p, int slack) {
  require_point(p);
  const int n = fp.n;
  const int nt = fp.n_tilde();
  const Rational x = make_rational(p.k, p.h);
  const Rational hw(int_pow(p.h, fp.w));
  Rational total(orbit_sum(fp, p, slack));
  const Rational bn = periodic_bernoulli(n + 1, x) / (n + 1);
  const Rational bnt = periodic_bernoulli(nt + 1, x) / (nt + 1);
  if (n % 2 == 1) {
    total -= bn * hw;
    total -= bnt * hw;
    total += origin_constant(fp.w, n) * hw;
  } else {
    total += bn * hw;
    total -= bnt * hw;
  }
  return total;
}

Rational period_symbol_at_origin(const FamilyParams& fp) {
  if (fp.n % 2 != 1) throw std::domain_error("origin closed form requires odd n");
  const int nt = fp.n_tilde();
  return -bernoulli_number(fp.n + 1) / (fp.n + 1) - bernoulli_number(nt + 1) / (nt + 1) +
         origin_constant(fp.w, fp.n);
}

HomogeneousPolynomial reciprocity_polynomial(const FamilyParams& fp) {
  const int w = fp.w;
  const int n = fp.n;
  const int nt = fp.n_tilde();
  HomogeneousPolynomial out(w);
  // B_m(k/h) h^w contributes C(m,j) B_j at h-exponent w-m+j
  const auto add_h_side = [&](int m, const Rational& scale) {
    const auto b = bernoulli_numbers_up_to(m);
    for (int j = 0; j <= m; ++j) {
      out.add_to_coefficient(w - m + j, scale * Rational(binomial(m, j)) * b[j]);
    }
  };
  // B_m(h/k) k^w contributes C(m,j) B_j at h-exponent m-j
  const auto add_k_side = [&](int m, const Rational& scale) {
    const auto b = bernoulli_numbers_up_to(m);
    for (int j = 0; j <= m; ++j) {
      out.add_to_coefficient(m - j, scale * Rational(binomial(m, j)) * b[j]);
    }
  };
  const Rational cn = make_rational(1, n + 1);
  const Rational cnt = make_rational(1, nt + 1);
  if (n % 2 == 1) {
    add_h_side(n + 1, -cn);
    add_k_side(n + 1, cn);
    add_h_side(nt + 1, -cnt);
    add_k_side(nt + 1, cnt);
    const Rational oc = origin_constant(w, n);
    out.add_to_coefficient(w, oc);
    out.add_to_coefficient(0, -oc);
  } else {
    add_h_side(n + 1, cn);
    add_k_side(n + 1, cn);
    add_h_side(nt + 1, -cnt);
    add_k_side(nt + 1, -cnt);
  }
  return out;
}

Rational eisenstein_value(int w, SymbolPoint p) {
  require_weight(w);
  require_point(p);
  const Rational s = apostol_sum(w + 1, p.k, p.h);
  return -(Rational(int_pow(p.h, w)) / (2 * (w + 1))) * s;
}

DedekindSymbol make_gcd_power_symbol(int w) {
  require_weight(w);
  return {w, Parity::even, "G:" + std::to_string(w),
          [w](SymbolPoint p) { return gcd_power_value(w, p); }};
}

DedekindSymbol make_h_power_symbol(int w) {
  require_weight(w);
  return {w, Parity::even, "F:" + std::to_string(w),
          [w](SymbolPoint p) { return h_power_value(w, p); }};
}

DedekindSymbol make_period_symbol(int w, int n) {
  const FamilyParams fp(w, n);
  const Parity parity = (n % 2 == 1) ? Parity::even : Parity::odd;
  return {w, parity, "E:" + std::to_string(w) + ":" + std::to_string(n),
          [fp](SymbolPoint p) { return period_symbol_value(fp, p); }};
}

DedekindSymbol make_eisenstein_symbol(int w) {
  require_weight(w);
  return {w, Parity::odd, "Eis:" + std::to_string(w),
          [w](SymbolPoint p) { return eisenstein_value(w, p); }};
}

namespace {

int parse_int(const std::string& text) {
  int value = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last) {
    throw std::invalid_argument("malformed integer in symbol spec: '" + text + "'");
  }
  return value;
}

}  // namespace

DedekindSymbol parse_symbol_spec(const std::string& spec, int slack) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t colon = spec.find(':', start);
    if (colon == std::string::npos) {
      parts.push_back(spec.substr(start));
      break;
    }
    parts.push_back(spec.substr(start, colon - start));
    start = colon + 1;
  }
  if (parts.size() == 2 && parts[0] == "G") return make_gcd_power_symbol(parse_int(parts[1]));
  if (parts.size() == 2 && parts[0] == "F") return make_h_power_symbol(parse_int(parts[1]));
  if (parts.size() == 2 && parts[0] == "Eis") return make_eisenstein_symbol(parse_int(parts[1]));
  if (parts.size() == 3 && parts[0] == "E") {
    auto symbol = make_period_symbol(parse_int(parts[1]), parse_int(parts[2]));
    if (slack > 0) {
      const FamilyParams fp(parse_int(parts[1]), parse_int(parts[2]));
      symbol.eval = [fp, slack](SymbolPoint p) { return period_symbol_value(fp, p, slack); };
    }
    return symbol;
  }
  throw std::invalid_argument("malformed symbol spec '" + spec +
                              "' (expected G:w, F:w, E:w:n or Eis:w)");
}

}  // namespace dedsym
