#pragma once

#include <vector>

#include "dedsym/numeric.hpp"

namespace dedsym {

/// B_m under the convention B_1 = -1/2, so that B_m(0) = B_m for every m.
/// Values are memoized; the table is safe to share across threads.
Rational bernoulli_number(unsigned m);

/// Copy of the memoized table B_0 .. B_m.
std::vector<Rational> bernoulli_numbers_up_to(unsigned m);

/// B_m(x) = sum_j C(m,j) B_j x^(m-j).
Rational bernoulli_poly(unsigned m, const Rational& x);

/// Period-1 extension B_m(x - floor(x)). Only m >= 2 is admitted; the m = 1
/// extension disagrees with the polynomial at integers and is unused here.
Rational periodic_bernoulli(unsigned m, const Rational& x);

}  // namespace dedsym
