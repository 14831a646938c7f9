#include "dedsym/verify.hpp"

#include <algorithm>
#include <json.hpp>

#include "dedsym/apostol.hpp"
#include "dedsym/arith.hpp"
#include "dedsym/qseries.hpp"

namespace dedsym {

namespace {

std::string point_str(SymbolPoint p) {
  return "(" + std::to_string(p.h) + "," + std::to_string(p.k) + ")";
}

std::string witness_str(SymbolPoint p, const Rational& lhs, const Rational& rhs) {
  return "point=" + point_str(p) + " lhs=" + to_string(lhs) + " rhs=" + to_string(rhs);
}

CheckResult pass(std::string name, std::string params) {
  return {std::move(name), std::move(params), true, std::nullopt};
}

CheckResult fail(std::string name, std::string params, std::string witness) {
  return {std::move(name), std::move(params), false, std::move(witness)};
}

std::vector<std::int64_t> primes_up_to(int limit) {
  std::vector<std::int64_t> out;
  for (std::int64_t p = 2; p <= limit; ++p) {
    if (is_prime(p)) out.push_back(p);
  }
  return out;
}

}  // namespace

CheckResult check_symbol_axioms(const DedekindSymbol& E, const SampleSpec& spec) {
  const std::string name = "axioms[" + E.name + "]";
  const std::string params = "h<=" + std::to_string(spec.h_max) +
                             ",|k|<=" + std::to_string(spec.k_max) +
                             ",c<=" + std::to_string(spec.c_max);
  for (std::int64_t h = 1; h <= spec.h_max; ++h) {
    for (std::int64_t k = -spec.k_max; k <= spec.k_max; ++k) {
      const SymbolPoint p{h, k};
      const Rational value = E.eval(p);
      const Rational shifted = E.eval({h, k + h});
      if (shifted != value) {
        return fail(name, params, "periodicity " + witness_str(p, value, shifted));
      }
      if (E.parity != Parity::none) {
        const Rational mirrored = E.eval({h, -k});
        const Rational expected = (E.parity == Parity::even) ? value : Rational(-value);
        if (mirrored != expected) {
          return fail(name, params, "parity " + witness_str(p, mirrored, expected));
        }
      }
      for (std::int64_t c = 2; c <= spec.c_max; ++c) {
        const Rational scaled = E.eval({c * h, c * k});
        const Rational expected = Rational(int_pow(c, E.weight)) * value;
        if (scaled != expected) {
          return fail(name, params,
                      "homogeneity c=" + std::to_string(c) + " " + witness_str(p, scaled, expected));
        }
      }
    }
  }
  return pass(name, params);
}

CheckResult check_reciprocity_against(const FamilyParams& fp, const SampleSpec& spec,
                                      const HomogeneousPolynomial& rhs) {
  const std::string name =
      "reciprocity[w=" + std::to_string(fp.w) + ",n=" + std::to_string(fp.n) + "]";
  const std::string params =
      "h<=" + std::to_string(spec.h_max) + ",k<=" + std::to_string(spec.h_max);
  for (std::int64_t h = 1; h <= spec.h_max; ++h) {
    for (std::int64_t k = 1; k <= spec.h_max; ++k) {
      const Rational lhs =
          period_symbol_value(fp, {h, k}) - period_symbol_value(fp, {k, -h});
      const Rational expected = rhs.evaluate(Rational(int_of(h)), Rational(int_of(k)));
      if (lhs != expected) {
        return fail(name, params, witness_str({h, k}, lhs, expected));
      }
    }
  }
  return pass(name, params);
}

CheckResult check_reciprocity(const FamilyParams& fp, const SampleSpec& spec) {
  return check_reciprocity_against(fp, spec, reciprocity_polynomial(fp));
}

CheckResult check_cocycle_of(const HomogeneousPolynomial& g, const std::string& label) {
  const std::string name = "cocycle[" + label + "]";
  const std::string params = "degree=" + std::to_string(g.degree());
  const HomogeneousPolynomial combined =
      g.substitute_h_plus_k_for_h() + g.substitute_h_plus_k_for_k();
  if (!(combined == g)) {
    return fail(name, params,
                "g(h+k,k)+g(h,h+k) != g(h,k); difference " + (combined - g).to_json());
  }
  const Rational at_one = g.evaluate(Rational(1), Rational(1));
  if (at_one != 0) {
    return fail(name, params, "g(1,1)=" + to_string(at_one));
  }
  return pass(name, params);
}

CheckResult check_cocycle(const FamilyParams& fp) {
  return check_cocycle_of(reciprocity_polynomial(fp),
                          "w=" + std::to_string(fp.w) + ",n=" + std::to_string(fp.n));
}

CheckResult check_eigen(int ell, std::int64_t m, int num_points, int threads) {
  const std::string name = "eigen[ell=" + std::to_string(ell) + ",m=" + std::to_string(m) + "]";
  const std::string params = "points=" + std::to_string(num_points + 1);
  const auto E = make_period_symbol(ell, eigen_index(ell));
  const SymbolPoint origin{1, 0};
  const Rational base_value = E.eval(origin);
  if (base_value == 0) {
    return fail(name, params, "base value vanished at " + point_str(origin));
  }
  const Rational ratio = hecke_apply(E, m, origin, threads) / base_value;
  const Rational oracle(qexp_eigenform(ell, static_cast<int>(m)).coeff(static_cast<int>(m)));
  if (ratio != oracle) {
    return fail(name, params, "ratio " + witness_str(origin, ratio, oracle));
  }
  int found = 0;
  for (std::int64_t h = 1; found < num_points; ++h) {
    for (std::int64_t k = 0; k < h && found < num_points; ++k) {
      const SymbolPoint p{h, k};
      if (p == origin) continue;
      const Rational value = E.eval(p);
      if (value == 0) continue;
      ++found;
      const Rational applied = hecke_apply(E, m, p, threads);
      if (applied != ratio * value) {
        return fail(name, params, witness_str(p, applied, ratio * value));
      }
    }
  }
  return pass(name, params);
}

std::pair<Rational, Rational> kpr_sides(int w, std::int64_t n, SymbolPoint p) {
  Rational lhs(0);
  for (const auto& t : hecke_triples(n)) {
    lhs += Rational(int_pow(t.d, w)) * apostol_sum(w + 1, t.a * p.k + t.b * p.h, t.d * p.h);
  }
  const Rational rhs = Rational(sigma(w + 1, n)) * apostol_sum(w + 1, p.k, p.h);
  return {lhs, rhs};
}

CheckResult check_kpr(int w, std::int64_t n, const SampleSpec& spec) {
  const std::string name = "kpr[w=" + std::to_string(w) + ",n=" + std::to_string(n) + "]";
  const std::string params = "h<=" + std::to_string(spec.h_max);
  std::vector<SymbolPoint> points = spec.explicit_points;
  if (points.empty()) {
    for (std::int64_t h = 1; h <= spec.h_max; ++h) {
      for (std::int64_t k = -2; k <= spec.h_max; ++k) points.push_back({h, k});
    }
  }
  for (const SymbolPoint& p : points) {
    const auto [lhs, rhs] = kpr_sides(w, n, p);
    if (lhs != rhs) {
      return fail(name, params, witness_str(p, lhs, rhs));
    }
  }
  return pass(name, params);
}

CheckResult check_eisenstein_eigen(int w, std::int64_t n, const SampleSpec& spec) {
  const std::string name =
      "eisenstein_eigen[w=" + std::to_string(w) + ",n=" + std::to_string(n) + "]";
  const std::string params = "h<=" + std::to_string(spec.h_max);
  const auto E = make_eisenstein_symbol(w);
  const Rational factor(sigma(w + 1, n));
  std::vector<SymbolPoint> points = spec.explicit_points;
  if (points.empty()) {
    for (std::int64_t h = 1; h <= spec.h_max; ++h) {
      for (std::int64_t k = 0; k < h; ++k) points.push_back({h, k});
    }
  }
  for (const SymbolPoint& p : points) {
    const Rational applied = hecke_apply(E, n, p, spec.threads);
    const Rational expected = factor * E.eval(p);
    if (applied != expected) {
      return fail(name, params, witness_str(p, applied, expected));
    }
  }
  return pass(name, params);
}

Integer congruence_modulus(int ell) {
  switch (ell) {
    case 10:
      return Integer(691);
    case 14:
      return Integer(3617);
    case 16:
      return Integer(43867);
    case 18:
      return Integer(283) * 617;
    case 20:
      return Integer(131) * 593;
    case 24:
      return Integer(657931);
    default:
      throw std::domain_error("ell must be one of 10, 14, 16, 18, 20, 24");
  }
}

CheckResult check_congruence(int ell, std::int64_t m, int threads) {
  const std::string name =
      "congruence[ell=" + std::to_string(ell) + ",m=" + std::to_string(m) + "]";
  const Integer modulus = congruence_modulus(ell);
  const std::string params = "mod=" + to_string(modulus);
  const Integer tau_value = tau(ell, m, threads);
  const Integer sigma_value = sigma(ell + 1, m);
  const Integer difference = tau_value - sigma_value;
  if (difference % modulus != 0) {
    return fail(name, params,
                "tau=" + to_string(tau_value) + " sigma=" + to_string(sigma_value) +
                    " difference=" + to_string(difference));
  }
  return pass(name, params);
}

CheckResult check_box_stability(const FamilyParams& fp, const SampleSpec& spec) {
  const std::string name =
      "box_stability[w=" + std::to_string(fp.w) + ",n=" + std::to_string(fp.n) + "]";
  const std::string params =
      "h<=" + std::to_string(spec.h_max) + ",slack<=" + std::to_string(spec.max_slack);
  std::vector<SymbolPoint> points = spec.explicit_points;
  if (points.empty()) {
    for (std::int64_t h = 1; h <= spec.h_max; ++h) {
      for (std::int64_t k = 0; k < h; ++k) points.push_back({h, k});
    }
  }
  for (const SymbolPoint& p : points) {
    const Integer base = orbit_sum(fp, p, 0);
    for (int slack = 1; slack <= spec.max_slack; ++slack) {
      const Integer widened = orbit_sum(fp, p, slack);
      if (widened != base) {
        return fail(name, params,
                    "slack=" + std::to_string(slack) + " " +
                        witness_str(p, Rational(widened), Rational(base)));
      }
    }
  }
  return pass(name, params);
}

CheckResult check_trivial_kernel(int w, const SampleSpec& spec) {
  const std::string name = "trivial_kernel[w=" + std::to_string(w) + "]";
  const std::string params = "h<=" + std::to_string(spec.h_max);
  for (std::int64_t h = 1; h <= spec.h_max; ++h) {
    for (std::int64_t k = 1; k <= spec.h_max; ++k) {
      const Rational lhs = gcd_power_value(w, {h, k}) - gcd_power_value(w, {k, -h});
      if (lhs != 0) {
        return fail(name, params, witness_str({h, k}, lhs, Rational(0)));
      }
    }
  }
  return pass(name, params);
}

std::vector<CheckResult> run_suite(const std::string& filter, const SampleSpec& spec) {
  struct Entry {
    std::string name;
    std::function<CheckResult()> run;
  };
  std::vector<Entry> entries;
  const auto add = [&entries](std::string name, std::function<CheckResult()> run) {
    entries.push_back({std::move(name), std::move(run)});
  };

  const std::vector<std::pair<int, int>> families = {{10, 4}, {10, 5}, {12, 3},
                                                     {12, 6}, {14, 7}, {16, 7}};

  std::vector<DedekindSymbol> axiom_symbols;
  axiom_symbols.push_back(make_gcd_power_symbol(10));
  axiom_symbols.push_back(make_h_power_symbol(10));
  axiom_symbols.push_back(make_eisenstein_symbol(2));
  axiom_symbols.push_back(make_eisenstein_symbol(10));
  for (const auto& [w, n] : families) axiom_symbols.push_back(make_period_symbol(w, n));
  for (const auto& symbol : axiom_symbols) {
    add("axioms[" + symbol.name + "]",
        [symbol, spec] { return check_symbol_axioms(symbol, spec); });
  }

  for (int w : {2, 10}) {
    add("trivial_kernel[w=" + std::to_string(w) + "]",
        [w, spec] { return check_trivial_kernel(w, spec); });
  }

  for (const auto& [w, n] : families) {
    add("reciprocity[w=" + std::to_string(w) + ",n=" + std::to_string(n) + "]",
        [w = w, n = n, spec] { return check_reciprocity(FamilyParams(w, n), spec); });
  }

  for (const auto& [w, n] : families) {
    add("cocycle[w=" + std::to_string(w) + ",n=" + std::to_string(n) + "]",
        [w = w, n = n] { return check_cocycle(FamilyParams(w, n)); });
  }

  // closure checks run on a reduced grid: every sampled point costs
  // sigma_1(n) inner evaluations at points scaled by c*d
  SampleSpec closure_spec = spec;
  closure_spec.h_max = std::min(spec.h_max, 3);
  closure_spec.k_max = std::min(spec.k_max, 4);
  closure_spec.c_max = std::min(spec.c_max, 2);
  const std::vector<std::string> closure_symbols = {"F:10", "E:10:4", "E:10:5"};
  for (const auto& spec_str : closure_symbols) {
    for (int n = 1; n <= spec.n_max; ++n) {
      add("hecke_closure[" + spec_str + ",n=" + std::to_string(n) + "]",
          [spec_str, n, closure_spec] {
            CheckResult result =
                check_symbol_axioms(hecke_image(parse_symbol_spec(spec_str), n), closure_spec);
            result.check_name = "hecke_closure[" + spec_str + ",n=" + std::to_string(n) + "]";
            return result;
          });
    }
  }

  for (int ell : {10, 14, 16, 18, 20, 24}) {
    for (std::int64_t m = 1; m <= 7; ++m) {
      add("eigen[ell=" + std::to_string(ell) + ",m=" + std::to_string(m) + "]",
          [ell, m, spec] { return check_eigen(ell, m, spec.eigen_points, spec.threads); });
    }
  }

  for (int w : {2, 4, 10}) {
    for (std::int64_t n = 1; n <= spec.n_max; ++n) {
      add("kpr[w=" + std::to_string(w) + ",n=" + std::to_string(n) + "]",
          [w, n, spec] { return check_kpr(w, n, spec); });
    }
  }

  for (int w : {2, 10}) {
    for (std::int64_t n = 1; n <= spec.n_max; ++n) {
      add("eisenstein_eigen[w=" + std::to_string(w) + ",n=" + std::to_string(n) + "]",
          [w, n, spec] { return check_eisenstein_eigen(w, n, spec); });
    }
  }

  for (int ell : {10, 14, 16, 18, 20, 24}) {
    for (std::int64_t m : primes_up_to(spec.prime_max)) {
      add("congruence[ell=" + std::to_string(ell) + ",m=" + std::to_string(m) + "]",
          [ell, m, spec] { return check_congruence(ell, m, spec.threads); });
    }
  }

  SampleSpec box_spec = spec;
  box_spec.h_max = std::min(spec.h_max, 4);
  for (const auto& [w, n] : {std::pair{10, 5}, std::pair{14, 7}}) {
    add("box_stability[w=" + std::to_string(w) + ",n=" + std::to_string(n) + "]",
        [w = w, n = n, box_spec] { return check_box_stability(FamilyParams(w, n), box_spec); });
  }

  std::vector<CheckResult> results;
  for (const auto& entry : entries) {
    if (!filter.empty() && entry.name.find(filter) == std::string::npos) continue;
    results.push_back(entry.run());
  }
  return results;
}

bool all_passed(const std::vector<CheckResult>& results) {
  for (const auto& r : results) {
    if (!r.passed) return false;
  }
  return true;
}

std::string report_json(const std::vector<CheckResult>& results) {
  nlohmann::ordered_json report = nlohmann::ordered_json::array();
  for (const auto& r : results) {
    nlohmann::ordered_json entry;
    entry["check_name"] = r.check_name;
    entry["parameters"] = r.parameters;
    entry["passed"] = r.passed;
    if (r.witness) entry["witness"] = *r.witness;
    report.push_back(entry);
  }
  return report.dump(1);
}

}  // namespace dedsym
