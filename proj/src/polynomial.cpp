#include "dedsym/polynomial.hpp"

#include <sstream>
#include <stdexcept>

namespace dedsym {

HomogeneousPolynomial::HomogeneousPolynomial(int degree) : degree_(degree) {
  if (degree < 0) throw std::domain_error("polynomial degree must be non-negative");
  coeff_.assign(degree + 1, Rational(0));
}

const Rational& HomogeneousPolynomial::coefficient(int h_exp) const {
  return coeff_.at(h_exp);
}

void HomogeneousPolynomial::set_coefficient(int h_exp, const Rational& v) {
  coeff_.at(h_exp) = v;
}

void HomogeneousPolynomial::add_to_coefficient(int h_exp, const Rational& v) {
  coeff_.at(h_exp) += v;
}

Rational HomogeneousPolynomial::evaluate(const Rational& h, const Rational& k) const {
  Rational total(0);
  for (int i = 0; i <= degree_; ++i) {
    if (coeff_[i] == 0) continue;
    total += coeff_[i] * rat_pow(h, i) * rat_pow(k, degree_ - i);
  }
  return total;
}

HomogeneousPolynomial HomogeneousPolynomial::substitute_h_plus_k_for_h() const {
  // h^i k^(w-i) -> (h+k)^i k^(w-i) = sum_r C(i,r) h^r k^(w-r)
  HomogeneousPolynomial out(degree_);
  for (int i = 0; i <= degree_; ++i) {
    if (coeff_[i] == 0) continue;
    for (int r = 0; r <= i; ++r) {
      out.coeff_[r] += coeff_[i] * Rational(binomial(i, r));
    }
  }
  return out;
}

HomogeneousPolynomial HomogeneousPolynomial::substitute_h_plus_k_for_k() const {
  // h^i k^(w-i) -> h^i (h+k)^(w-i) = sum_s C(w-i,s) h^(i+s) k^(w-i-s)
  HomogeneousPolynomial out(degree_);
  for (int i = 0; i <= degree_; ++i) {
    if (coeff_[i] == 0) continue;
    for (int s = 0; s <= degree_ - i; ++s) {
      out.coeff_[i + s] += coeff_[i] * Rational(binomial(degree_ - i, s));
    }
  }
  return out;
}

bool HomogeneousPolynomial::is_even_in_k() const {
  for (int i = 0; i <= degree_; ++i) {
    if ((degree_ - i) % 2 == 1 && coeff_[i] != 0) return false;
  }
  return true;
}

bool HomogeneousPolynomial::is_odd_in_k() const {
  for (int i = 0; i <= degree_; ++i) {
    if ((degree_ - i) % 2 == 0 && coeff_[i] != 0) return false;
  }
  return true;
}

bool HomogeneousPolynomial::is_zero() const {
  for (const auto& c : coeff_) {
    if (c != 0) return false;
  }
  return true;
}

HomogeneousPolynomial HomogeneousPolynomial::operator+(const HomogeneousPolynomial& other) const {
  if (degree_ != other.degree_) throw std::domain_error("degree mismatch");
  HomogeneousPolynomial out(degree_);
  for (int i = 0; i <= degree_; ++i) out.coeff_[i] = coeff_[i] + other.coeff_[i];
  return out;
}

HomogeneousPolynomial HomogeneousPolynomial::operator-(const HomogeneousPolynomial& other) const {
  if (degree_ != other.degree_) throw std::domain_error("degree mismatch");
  HomogeneousPolynomial out(degree_);
  for (int i = 0; i <= degree_; ++i) out.coeff_[i] = coeff_[i] - other.coeff_[i];
  return out;
}

bool HomogeneousPolynomial::operator==(const HomogeneousPolynomial& other) const {
  if (degree_ != other.degree_) return false;
  for (int i = 0; i <= degree_; ++i) {
    if (coeff_[i] != other.coeff_[i]) return false;
  }
  return true;
}

std::string HomogeneousPolynomial::to_json() const {
  std::ostringstream out;
  out << '[';
  bool first = true;
  for (int i = degree_; i >= 0; --i) {
    if (coeff_[i] == 0) continue;
    if (!first) out << ',';
    first = false;
    out << "{\"i\":" << i << ",\"coeff\":\"" << to_string(coeff_[i]) << "\"}";
  }
  out << ']';
  return out.str();
}

}  // namespace dedsym
