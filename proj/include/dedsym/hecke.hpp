#pragma once

#include <cstdint>
#include <vector>

#include "dedsym/symbols.hpp"

namespace dedsym {

/// One summand index of T_n: a*d = n, d > 0, 0 <= b < d.
struct HeckeTriple {
  std::int64_t a;
  std::int64_t d;
  std::int64_t b;
};

/// All sigma_1(n) triples, d ascending then b ascending.
std::vector<HeckeTriple> hecke_triples(std::int64_t n);

/// (T_n E)(h, k) = sum_{ad=n, d>0} sum_{b mod d} E(d h, a k + b h).
/// The triple sum may be partitioned across `threads` workers; the exact
/// result is independent of the partitioning.
Rational hecke_apply(const DedekindSymbol& E, std::int64_t n, SymbolPoint p, int threads = 1);

/// T_n E as a symbol of the same weight and parity.
DedekindSymbol hecke_image(const DedekindSymbol& E, std::int64_t n);

/// First point with E != 0 in the scan order h = 1..limit, k = 0..h-1.
/// Throws std::runtime_error on exhaustion.
SymbolPoint find_nonzero_point(const DedekindSymbol& E, std::int64_t search_limit);

struct EigenReport {
  SymbolPoint base_point;
  Rational eigenvalue;
  std::vector<SymbolPoint> checked_points;
  bool consistent = false;
};

/// Eigenvalue T_n E / E at the first nonzero point, re-verified at
/// extra_checks further nonzero points. consistent = false signals that E is
/// not an eigen-symbol of T_n.
EigenReport eigen_report(const DedekindSymbol& E, std::int64_t n, int extra_checks = 0,
                         std::int64_t search_limit = 64, int threads = 1);

/// The six one-dimensional weights.
bool is_supported_weight(int ell);

/// n0 = 2 floor((ell+2)/4) - 1 for ell in {10, 14, 16, 18, 20, 24}.
int eigen_index(int ell);

/// sum_{b=0}^{m-1} orbit_sum(w, n, (m, b)); the b-loop is the dominant cost
/// and is partitioned across `threads`.
Integer orbit_sum_over_residues(int w, int n, std::int64_t m, int threads = 1);

/// Fourier coefficient of the weight-(ell+2) eigenform through the Hecke
/// eigenvalue at the base point (1, 0). Valid for every m >= 1.
/// A non-integral ratio raises std::logic_error (enumeration bug tripwire).
Integer tau(int ell, std::int64_t m, int threads = 1);

/// The per-ell closed form in terms of orbit sums; m must be prime.
Integer tau_closed_form(int ell, std::int64_t m, int threads = 1);

/// Literal box rendering for ell = 10: a direct sum over matrices with all
/// entries bounded by 2m. m must be prime.
Integer tau_box_form(std::int64_t m);

/// Closed form of (T_m E)(1, 0) for odd n and prime m:
///   sum_b orbit - (B_{n+1}/(n+1))(1+m^nt) - (B_{nt+1}/(nt+1))(1+m^n)
///   + (1+m^{w+1}) origin_constant(w, n).
Rational hecke_origin_closed_form(int w, int n, std::int64_t m, int threads = 1);

}  // namespace dedsym
