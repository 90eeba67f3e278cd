#pragma once

#include <vector>

#include "conehodge/rational.hpp"

namespace conehodge {

// Dense univariate polynomial over the rationals, coefficient i belongs
// to x^i. The zero polynomial is the empty coefficient list; nonzero
// polynomials carry no trailing zero coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs);
  static Polynomial constant(const Rational& c);
  // a*x + b
  static Polynomial linear(const Rational& a, const Rational& b);

  const std::vector<Rational>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

  Rational eval(const Rational& x) const;
  Rational eval_at(std::int64_t m) const;

  Polynomial operator+(const Polynomial& other) const;
  Polynomial operator-(const Polynomial& other) const;
  Polynomial operator*(const Polynomial& other) const;
  Polynomial operator*(const Rational& c) const;
  bool operator==(const Polynomial& other) const = default;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

}  // namespace conehodge
