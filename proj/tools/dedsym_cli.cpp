// Command-line frontend: symbol evaluation, Hecke eigenvalues, q-expansion
// dumps and the identity verification suite. Exit codes: 0 success/all-pass,
// 1 computational or verification failure, 2 usage error.

#include <CLI11.hpp>
#include <chrono>
#include <fstream>
#include <iostream>
#include <json.hpp>

#include "dedsym/arith.hpp"
#include "dedsym/hecke.hpp"
#include "dedsym/qseries.hpp"
#include "dedsym/verify.hpp"

namespace {

using Clock = std::chrono::steady_clock;

long long elapsed_ms(Clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
}

void print_record(const std::string& command, const nlohmann::ordered_json& inputs,
                  const nlohmann::ordered_json& result, long long ms, bool as_json) {
  if (as_json) {
    nlohmann::ordered_json record;
    record["command"] = command;
    record["inputs"] = inputs;
    record["result"] = result;
    record["elapsed_ms"] = ms;
    std::cout << record.dump(1) << "\n";
    return;
  }
  if (result.is_object()) {
    for (const auto& [key, value] : result.items()) {
      if (value.is_string()) {
        std::cout << key << " " << value.get<std::string>() << "\n";
      } else {
        std::cout << key << " " << value.dump() << "\n";
      }
    }
  } else if (result.is_string()) {
    std::cout << result.get<std::string>() << "\n";
  } else {
    std::cout << result.dump() << "\n";
  }
}

struct VerifyOptions {
  std::string suite;
  std::string out_path;
  dedsym::SampleSpec spec;
};

int run_verify(const VerifyOptions& opt) {
  const auto results = dedsym::run_suite(opt.suite, opt.spec);
  if (results.empty()) {
    std::cerr << "no checks match filter '" << opt.suite << "'\n";
    return 2;
  }
  const std::string report = dedsym::report_json(results);
  if (opt.out_path.empty()) {
    std::cout << report << "\n";
  } else {
    std::ofstream out(opt.out_path, std::ios::binary);
    if (!out) {
      std::cerr << "cannot open '" << opt.out_path << "'\n";
      return 1;
    }
    out << report << "\n";
  }
  return dedsym::all_passed(results) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Dedekind-symbol and Hecke-eigenvalue calculator"};
  app.require_subcommand(1);
  app.set_help_flag("--help", "print usage");  // frees -h/--h for point coordinates

  int threads = 1;
  int slack = 0;
  bool as_json = false;
  app.add_option("--threads", threads, "worker count for enumeration loops")
      ->check(CLI::PositiveNumber);
  app.add_option("--slack", slack, "box enlargement factor for orbit sums")
      ->check(CLI::NonNegativeNumber);
  app.add_flag("--json", as_json, "emit an OutputRecord JSON object");

  // eval
  auto* eval_cmd = app.add_subcommand("eval", "evaluate a symbol at a point");
  eval_cmd->fallthrough();
  eval_cmd->set_help_flag("--help", "print usage");
  std::string symbol_spec;
  long long eval_h = 1, eval_k = 0;
  eval_cmd->add_option("spec", symbol_spec, "G:w | F:w | E:w:n | Eis:w")->required();
  eval_cmd->add_option("--h", eval_h, "first coordinate, h >= 1")->required();
  eval_cmd->add_option("--k", eval_k, "second coordinate")->required();

  // tau
  auto* tau_cmd = app.add_subcommand("tau", "Fourier coefficient of the weight-(ell+2) eigenform");
  tau_cmd->fallthrough();
  tau_cmd->set_help_flag("--help", "print usage");
  int tau_ell = 10;
  long long tau_m = 1;
  std::string route = "hecke";
  tau_cmd->add_option("--ell", tau_ell, "one of 10, 14, 16, 18, 20, 24")->required();
  tau_cmd->add_option("--m", tau_m, "coefficient index, m >= 1")->required();
  tau_cmd->add_option("--route", route, "hecke | closed | both")
      ->check(CLI::IsMember({"hecke", "closed", "both"}));

  // oracle
  auto* oracle_cmd = app.add_subcommand("oracle", "dump eigenform q-expansion coefficients");
  oracle_cmd->fallthrough();
  oracle_cmd->set_help_flag("--help", "print usage");
  int oracle_ell = 10;
  int qtrunc = 32;
  oracle_cmd->add_option("--ell", oracle_ell, "one of 10, 14, 16, 18, 20, 24")->required();
  oracle_cmd->add_option("--qtrunc", qtrunc, "truncation order N (dumps q^0..q^N)")
      ->check(CLI::PositiveNumber);

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "run the identity verification suite");
  verify_cmd->fallthrough();
  verify_cmd->set_help_flag("--help", "print usage");
  VerifyOptions vopt;
  verify_cmd->add_option("--suite", vopt.suite, "substring filter on check names");
  verify_cmd->add_option("--out", vopt.out_path, "write the JSON report to this path");
  verify_cmd->add_option("--hmax", vopt.spec.h_max, "sample bound on h");
  verify_cmd->add_option("--kmax", vopt.spec.k_max, "sample bound on |k|");
  verify_cmd->add_option("--cmax", vopt.spec.c_max, "sample bound on the scaling factor");
  verify_cmd->add_option("--nmax", vopt.spec.n_max, "sample bound on Hecke indices");
  verify_cmd->add_option("--prime-max", vopt.spec.prime_max, "congruence prime bound");
  verify_cmd->add_option("--eigen-points", vopt.spec.eigen_points,
                         "extra nonzero points per eigen check");
  verify_cmd->add_option("--max-slack", vopt.spec.max_slack, "box stability slack bound");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  const auto start = Clock::now();
  try {
    if (*eval_cmd) {
      const auto symbol = dedsym::parse_symbol_spec(symbol_spec, slack);
      const dedsym::Rational value = symbol.eval({eval_h, eval_k});
      nlohmann::ordered_json inputs;
      inputs["symbol"] = symbol_spec;
      inputs["h"] = eval_h;
      inputs["k"] = eval_k;
      print_record("eval", inputs, dedsym::to_string(value), elapsed_ms(start), as_json);
      return 0;
    }

    if (*tau_cmd) {
      if (route != "hecke" && !dedsym::is_prime(tau_m)) {
        std::cerr << "route '" << route << "' requires a prime m\n";
        return 2;
      }
      nlohmann::ordered_json inputs;
      inputs["ell"] = tau_ell;
      inputs["m"] = tau_m;
      inputs["route"] = route;
      if (route == "hecke") {
        const dedsym::Integer value = dedsym::tau(tau_ell, tau_m, threads);
        print_record("tau", inputs, dedsym::to_string(value), elapsed_ms(start), as_json);
        return 0;
      }
      if (route == "closed") {
        const dedsym::Integer value = dedsym::tau_closed_form(tau_ell, tau_m, threads);
        print_record("tau", inputs, dedsym::to_string(value), elapsed_ms(start), as_json);
        return 0;
      }
      const dedsym::Integer hecke_value = dedsym::tau(tau_ell, tau_m, threads);
      const dedsym::Integer closed_value = dedsym::tau_closed_form(tau_ell, tau_m, threads);
      const dedsym::Integer oracle_value =
          dedsym::qexp_eigenform(tau_ell, static_cast<int>(tau_m)).coeff(static_cast<int>(tau_m));
      const bool agreement = hecke_value == closed_value && hecke_value == oracle_value;
      nlohmann::ordered_json result;
      result["hecke"] = dedsym::to_string(hecke_value);
      result["closed"] = dedsym::to_string(closed_value);
      result["oracle"] = dedsym::to_string(oracle_value);
      result["agreement"] = agreement;
      print_record("tau", inputs, result, elapsed_ms(start), as_json);
      return agreement ? 0 : 1;
    }

    if (*oracle_cmd) {
      const dedsym::QSeries series = dedsym::qexp_eigenform(oracle_ell, qtrunc);
      nlohmann::ordered_json inputs;
      inputs["ell"] = oracle_ell;
      inputs["qtrunc"] = qtrunc;
      if (as_json) {
        // decimal strings inside the record; coefficients can exceed 2^63
        nlohmann::ordered_json coeffs = nlohmann::ordered_json::array();
        for (int i = 0; i <= series.truncation(); ++i) {
          coeffs.push_back(dedsym::to_string(series.coeff(i)));
        }
        print_record("oracle", inputs, coeffs, elapsed_ms(start), true);
      } else {
        // exact JSON integer array, built directly
        std::cout << '[';
        for (int i = 0; i <= series.truncation(); ++i) {
          if (i > 0) std::cout << ',';
          std::cout << dedsym::to_string(series.coeff(i));
        }
        std::cout << "]\n";
      }
      return 0;
    }

    if (*verify_cmd) {
      vopt.spec.threads = threads;
      return run_verify(vopt);
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "precondition violated: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
