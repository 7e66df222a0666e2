#pragma once

#include <map>
#include <string>

#include "wsys/rational.hpp"

namespace wsys {

// Univariate polynomial in N with arbitrary-precision integer coefficients.
// Zero coefficients are never stored.
class IntPolynomial {
 public:
  IntPolynomial() = default;

  static IntPolynomial monomial(const Integer& coeff, unsigned exponent);

  void add_term(const Integer& coeff, unsigned exponent);

  IntPolynomial& operator+=(const IntPolynomial& rhs);
  friend IntPolynomial operator+(IntPolynomial lhs, const IntPolynomial& rhs) {
    lhs += rhs;
    return lhs;
  }
  IntPolynomial operator-() const;

  bool is_zero() const { return terms_.empty(); }
  // -1 for the zero polynomial.
  int degree() const;
  Integer coefficient(unsigned exponent) const;
  const std::map<unsigned, Integer>& terms() const { return terms_; }

  Integer evaluate(const Integer& n) const;

  // Descending exponents with explicit signs, e.g. "2*N^3 - 2*N".
  std::string to_string() const;

  bool operator==(const IntPolynomial&) const = default;

 private:
  std::map<unsigned, Integer> terms_;
};

}  // namespace wsys
