// Acceptance suite: one pass/fail line per criterion, every comparison an
// exact equality of arbitrary-precision integers or rationals. Criteria with
// a stated wall-clock budget fail when they exceed it.
//
// Usage: acceptance [path-to-cli]   (defaults to a sibling binary "dedsym")

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "dedsym/arith.hpp"
#include "dedsym/qseries.hpp"
#include "dedsym/verify.hpp"

namespace {

using dedsym::FamilyParams;
using dedsym::Integer;
using dedsym::Rational;
using dedsym::SampleSpec;
using dedsym::make_rational;

struct Criterion {
  std::string label;
  double limit_seconds;  // 0 = no stated budget
  std::function<bool(std::string&)> run;
};

std::string g_cli_path;

bool run_cli(const std::string& args, std::string& output, int& exit_code) {
  const std::string command = g_cli_path + " " + args;
  FILE* pipe = popen(command.c_str(), "r");
  if (pipe == nullptr) return false;
  output.clear();
  char buffer[4096];
  size_t got = 0;
  while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0) output.append(buffer, got);
  const int status = pclose(pipe);
  exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return true;
}

bool all_pass(const std::vector<dedsym::CheckResult>& results, std::string& detail) {
  for (const auto& r : results) {
    if (!r.passed) {
      detail = r.check_name + ": " + r.witness.value_or("failed");
      return false;
    }
  }
  if (results.empty()) {
    detail = "no checks ran";
    return false;
  }
  return true;
}

const std::vector<int> kWeights = {10, 14, 16, 18, 20, 24};

std::vector<Criterion> build_criteria() {
  std::vector<Criterion> list;

  list.push_back({"criterion 01: origin constants for the six eigen symbols", 1.0,
                  [](std::string& detail) {
                    const std::vector<std::pair<int, Rational>> expected = {
                        {10, make_rational(-6, 691)},     {14, make_rational(30, 3617)},
                        {16, make_rational(-150, 43867)}, {18, make_rational(-2646, 174611)},
                        {20, make_rational(1050, 77683)}, {24, make_rational(-40950, 657931)}};
                    for (const auto& [ell, value] : expected) {
                      const FamilyParams fp(ell, dedsym::eigen_index(ell));
                      const Rational direct = dedsym::period_symbol_value(fp, {1, 0});
                      if (direct != value || dedsym::period_symbol_at_origin(fp) != value) {
                        detail = "ell=" + std::to_string(ell) + " got " + dedsym::to_string(direct);
                        return false;
                      }
                    }
                    return true;
                  }});

  list.push_back(
      {"criterion 02: printed reciprocity polynomials (10,4) and (10,5)", 1.0,
       [](std::string& detail) {
         const auto p4 = dedsym::reciprocity_polynomial(FamilyParams(10, 4));
         const auto p5 = dedsym::reciprocity_polynomial(FamilyParams(10, 5));
         const std::vector<std::pair<int, Rational>> c4 = {{9, make_rational(-2, 35)},
                                                           {7, make_rational(5, 14)},
                                                           {5, make_rational(-3, 5)},
                                                           {3, make_rational(5, 14)},
                                                           {1, make_rational(-2, 35)}};
         const std::vector<std::pair<int, Rational>> c5 = {
             {10, make_rational(-6, 691)}, {8, make_rational(1, 6)}, {6, make_rational(-1, 2)},
             {4, make_rational(1, 2)},     {2, make_rational(-1, 6)}, {0, make_rational(6, 691)}};
         for (int i = 0; i <= 10; ++i) {
           Rational want4(0), want5(0);
           for (const auto& [j, v] : c4) {
             if (j == i) want4 = v;
           }
           for (const auto& [j, v] : c5) {
             if (j == i) want5 = v;
           }
           if (p4.coefficient(i) != want4 || p5.coefficient(i) != want5) {
             detail = "coefficient of h^" + std::to_string(i) + " differs";
             return false;
           }
         }
         return true;
       }});

  list.push_back({"criterion 03: tau(10, m) matches the q-expansion for primes up to 13", 60.0,
                  [](std::string& detail) {
                    const auto delta = dedsym::qexp_delta(13);
                    const std::vector<long> frozen = {-24, 252, 4830, -16744, 534612, -577738};
                    const std::vector<int> primes = {2, 3, 5, 7, 11, 13};
                    for (std::size_t i = 0; i < primes.size(); ++i) {
                      const Integer value = dedsym::tau(10, primes[i]);
                      if (value != delta.coeff(primes[i]) || value != frozen[i]) {
                        detail = "m=" + std::to_string(primes[i]) + " got " + dedsym::to_string(value);
                        return false;
                      }
                    }
                    return true;
                  }});

  list.push_back({"criterion 04: tau(ell, 2) and tau(ell, 3) match the oracle for all six ell",
                  60.0, [](std::string& detail) {
                    for (int ell : kWeights) {
                      const auto oracle = dedsym::qexp_eigenform(ell, 3);
                      for (std::int64_t m = 2; m <= 3; ++m) {
                        const Integer value = dedsym::tau(ell, m);
                        if (value != oracle.coeff(static_cast<int>(m))) {
                          detail = "ell=" + std::to_string(ell) + " m=" + std::to_string(m);
                          return false;
                        }
                      }
                    }
                    return true;
                  }});

  list.push_back({"criterion 05: closed-form route equals the operator route", 60.0,
                  [](std::string& detail) {
                    for (int ell : kWeights) {
                      for (std::int64_t m : {2, 3, 5, 7}) {
                        if (dedsym::tau_closed_form(ell, m) != dedsym::tau(ell, m)) {
                          detail = "ell=" + std::to_string(ell) + " m=" + std::to_string(m);
                          return false;
                        }
                      }
                    }
                    for (std::int64_t m : {2, 3, 5, 7}) {
                      if (dedsym::tau_box_form(m) != dedsym::tau_closed_form(10, m)) {
                        detail = "box rendering differs at m=" + std::to_string(m);
                        return false;
                      }
                    }
                    return true;
                  }});

  list.push_back({"criterion 06: reciprocity law for the six families over h,k <= 5", 120.0,
                  [](std::string& detail) {
                    SampleSpec spec;
                    spec.h_max = 5;
                    std::vector<dedsym::CheckResult> results;
                    for (const auto& [w, n] :
                         {std::pair{10, 4}, std::pair{10, 5}, std::pair{14, 7},
                          std::pair{16, 7}, std::pair{12, 3}, std::pair{12, 6}}) {
                      results.push_back(dedsym::check_reciprocity(FamilyParams(w, n), spec));
                    }
                    return all_pass(results, detail);
                  }});

  list.push_back(
      {"criterion 07: symbol axioms for G, F, Eis and the six families", 120.0,
       [](std::string& detail) {
         SampleSpec spec;
         std::vector<dedsym::CheckResult> results;
         for (int w : {2, 10}) {
           results.push_back(dedsym::check_symbol_axioms(dedsym::make_gcd_power_symbol(w), spec));
           results.push_back(dedsym::check_symbol_axioms(dedsym::make_eisenstein_symbol(w), spec));
           results.push_back(dedsym::check_trivial_kernel(w, spec));
         }
         results.push_back(dedsym::check_symbol_axioms(dedsym::make_h_power_symbol(10), spec));
         for (const auto& [w, n] : {std::pair{10, 4}, std::pair{10, 5}, std::pair{14, 7},
                                    std::pair{16, 7}, std::pair{12, 3}, std::pair{12, 6}}) {
           results.push_back(dedsym::check_symbol_axioms(dedsym::make_period_symbol(w, n), spec));
         }
         return all_pass(results, detail);
       }});

  list.push_back(
      {"criterion 08: Hecke images satisfy the symbol axioms for n <= 6", 0.0,
       [](std::string& detail) {
         SampleSpec spec;
         spec.h_max = 3;
         spec.k_max = 4;
         spec.c_max = 2;
         std::vector<dedsym::CheckResult> results;
         for (const auto& spec_str : {"F:10", "E:10:4", "E:10:5", "Eis:2"}) {
           for (std::int64_t n = 1; n <= 6; ++n) {
             const auto image = dedsym::hecke_image(dedsym::parse_symbol_spec(spec_str), n);
             auto result = dedsym::check_symbol_axioms(image, spec);
             result.check_name = "closure[" + std::string(spec_str) + ",n=" + std::to_string(n) + "]";
             results.push_back(result);
           }
         }
         return all_pass(results, detail);
       }});

  list.push_back({"criterion 09: eigen consistency at six points for m <= 7", 0.0,
                  [](std::string& detail) {
                    std::vector<dedsym::CheckResult> results;
                    for (int ell : kWeights) {
                      for (std::int64_t m = 1; m <= 7; ++m) {
                        results.push_back(dedsym::check_eigen(ell, m, 5));
                      }
                    }
                    return all_pass(results, detail);
                  }});

  list.push_back({"criterion 10: Apostol divisor identity for w in {2,4,10}, n <= 6", 0.0,
                  [](std::string& detail) {
                    SampleSpec spec;
                    spec.h_max = 5;
                    std::vector<dedsym::CheckResult> results;
                    for (int w : {2, 4, 10}) {
                      for (std::int64_t n = 1; n <= 6; ++n) {
                        results.push_back(dedsym::check_kpr(w, n, spec));
                      }
                    }
                    if (!all_pass(results, detail)) return false;
                    const auto [lhs, rhs] = dedsym::kpr_sides(2, 2, {3, 1});
                    if (lhs != make_rational(-1, 9) || rhs != make_rational(-1, 9)) {
                      detail = "hand instance w=2,n=2,(3,1) differs: lhs=" + dedsym::to_string(lhs) +
                               " rhs=" + dedsym::to_string(rhs);
                      return false;
                    }
                    return true;
                  }});

  list.push_back({"criterion 11: Eisenstein symbol is a sigma-eigenfunction for w in {2,10}",
                  0.0, [](std::string& detail) {
                    SampleSpec spec;
                    std::vector<dedsym::CheckResult> results;
                    for (int w : {2, 10}) {
                      for (std::int64_t n = 1; n <= 6; ++n) {
                        results.push_back(dedsym::check_eisenstein_eigen(w, n, spec));
                      }
                    }
                    return all_pass(results, detail);
                  }});

  list.push_back({"criterion 12: congruences for all six ell and primes up to 29", 600.0,
                  [](std::string& detail) {
                    std::vector<dedsym::CheckResult> results;
                    for (int ell : kWeights) {
                      for (std::int64_t m : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29}) {
                        results.push_back(dedsym::check_congruence(ell, m));
                      }
                    }
                    return all_pass(results, detail);
                  }});

  list.push_back({"criterion 13: box stability with slack up to 3", 0.0,
                  [](std::string& detail) {
                    SampleSpec spec;
                    spec.h_max = 4;
                    spec.max_slack = 3;
                    std::vector<dedsym::CheckResult> results;
                    results.push_back(dedsym::check_box_stability(FamilyParams(10, 5), spec));
                    results.push_back(dedsym::check_box_stability(FamilyParams(14, 7), spec));
                    return all_pass(results, detail);
                  }});

  list.push_back({"criterion 14: verify output is byte-identical across thread counts", 0.0,
                  [](std::string& detail) {
                    std::string one, four;
                    int rc_one = -1, rc_four = -1;
                    if (!run_cli("--threads 1 verify", one, rc_one) ||
                        !run_cli("--threads 4 verify", four, rc_four)) {
                      detail = "could not spawn " + g_cli_path;
                      return false;
                    }
                    if (rc_one != 0 || rc_four != 0) {
                      detail = "verify exit codes " + std::to_string(rc_one) + "/" +
                               std::to_string(rc_four);
                      return false;
                    }
                    if (one != four) {
                      detail = "outputs differ (" + std::to_string(one.size()) + " vs " +
                               std::to_string(four.size()) + " bytes)";
                      return false;
                    }
                    if (one.find("\"passed\": false") != std::string::npos) {
                      detail = "verify reported failures";
                      return false;
                    }
                    return true;
                  }});

  return list;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc > 1) {
    g_cli_path = argv[1];
  } else {
    g_cli_path = (std::filesystem::path(argv[0]).parent_path() / "dedsym").string();
  }

  int failures = 0;
  const auto criteria = build_criteria();
  for (const auto& criterion : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = false;
    try {
      ok = criterion.run(detail);
    } catch (const std::exception& e) {
      ok = false;
      detail = std::string("exception: ") + e.what();
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (ok && criterion.limit_seconds > 0 && seconds > criterion.limit_seconds) {
      ok = false;
      detail = "exceeded the " + std::to_string(criterion.limit_seconds) + " s budget";
    }
    std::ostringstream line;
    line << (ok ? "[PASS] " : "[FAIL] ") << criterion.label;
    line.setf(std::ios::fixed);
    line.precision(2);
    line << " (" << seconds << " s)";
    if (!ok && !detail.empty()) line << "\n       " << detail;
    std::cout << line.str() << "\n";
    if (!ok) ++failures;
  }
  std::cout << "ACCEPTANCE: " << (criteria.size() - failures) << "/" << criteria.size()
            << " criteria passed\n";
  return failures == 0 ? 0 : 1;
}
