#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dedsym/hecke.hpp"

namespace dedsym {

struct CheckResult {
  std::string check_name;
  std::string parameters;
  bool passed = false;
  std::optional<std::string> witness;  // present whenever passed is false
};

struct SampleSpec {
  int h_max = 6;
  int k_max = 12;
  int c_max = 3;
  int n_max = 6;
  int prime_max = 13;
  int eigen_points = 5;
  int max_slack = 3;
  int threads = 1;
  std::vector<SymbolPoint> explicit_points;  // overrides the h/k grid when set
};

/// Periodicity, homogeneity and declared parity at every sampled point.
CheckResult check_symbol_axioms(const DedekindSymbol& E, const SampleSpec& spec);

/// E(h,k) - E(k,-h) equals the family's reciprocity polynomial on h, k >= 1.
CheckResult check_reciprocity(const FamilyParams& fp, const SampleSpec& spec);

/// Same, against a caller-supplied right-hand side (negative-control seam).
CheckResult check_reciprocity_against(const FamilyParams& fp, const SampleSpec& spec,
                                      const HomogeneousPolynomial& rhs);

/// Coefficient-level g(h+k,k) + g(h,h+k) = g(h,k) plus g(1,1) = 0.
CheckResult check_cocycle(const FamilyParams& fp);

/// Same cocycle predicate for an arbitrary polynomial (negative-control seam).
CheckResult check_cocycle_of(const HomogeneousPolynomial& g, const std::string& label);

/// T_m on the weight-ell eigen symbol: ratio at (1,0) equals the q-expansion
/// coefficient and persists at num_points further nonzero points.
CheckResult check_eigen(int ell, std::int64_t m, int num_points, int threads = 1);

/// Divisor identity for Apostol sums with eigenvalue sigma_{w+1}(n).
CheckResult check_kpr(int w, std::int64_t n, const SampleSpec& spec);

/// Both sides of the Apostol divisor identity at one point.
std::pair<Rational, Rational> kpr_sides(int w, std::int64_t n, SymbolPoint p);

/// T_n on the weight-w Eisenstein symbol acts by sigma_{w+1}(n).
CheckResult check_eisenstein_eigen(int w, std::int64_t n, const SampleSpec& spec);

/// tau_{ell+2}(m) = sigma_{ell+1}(m) modulo the weight-specific modulus.
CheckResult check_congruence(int ell, std::int64_t m, int threads = 1);
Integer congruence_modulus(int ell);

/// Orbit sums unchanged under box enlargement slack = 0..max_slack.
CheckResult check_box_stability(const FamilyParams& fp, const SampleSpec& spec);

/// gcd-power symbol has vanishing reciprocity: G(h,k) - G(k,-h) = 0.
CheckResult check_trivial_kernel(int w, const SampleSpec& spec);

/// Runs every check whose name contains `filter` (all when empty), in a
/// fixed deterministic order.
std::vector<CheckResult> run_suite(const std::string& filter, const SampleSpec& spec);

bool all_passed(const std::vector<CheckResult>& results);

/// Deterministic JSON rendering: array of CheckResult objects.
std::string report_json(const std::vector<CheckResult>& results);

}  // namespace dedsym
