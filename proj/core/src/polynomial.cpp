#include "wsys/polynomial.hpp"

#include <sstream>

namespace wsys {

IntPolynomial IntPolynomial::monomial(const Integer& coeff, unsigned exponent) {
  IntPolynomial p;
  p.add_term(coeff, exponent);
  return p;
}

void IntPolynomial::add_term(const Integer& coeff, unsigned exponent) {
  if (sgn(coeff) == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponent, coeff);
  if (inserted) return;
  it->second += coeff;
  if (sgn(it->second) == 0) terms_.erase(it);
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& rhs) {
  for (const auto& [exp, coeff] : rhs.terms_) add_term(coeff, exp);
  return *this;
}

IntPolynomial IntPolynomial::operator-() const {
  IntPolynomial out;
  for (const auto& [exp, coeff] : terms_) out.terms_.emplace(exp, -coeff);
  return out;
}

int IntPolynomial::degree() const {
  return terms_.empty() ? -1 : static_cast<int>(terms_.rbegin()->first);
}

Integer IntPolynomial::coefficient(unsigned exponent) const {
  const auto it = terms_.find(exponent);
  return it == terms_.end() ? Integer(0) : it->second;
}

Integer IntPolynomial::evaluate(const Integer& n) const {
  // Horner over the sparse exponents, highest first.
  Integer acc = 0;
  unsigned prev = 0;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!first) {
      for (unsigned k = it->first; k < prev; ++k) acc *= n;
    }
    acc += it->second;
    prev = it->first;
    first = false;
  }
  for (unsigned k = 0; k < prev; ++k) acc *= n;
  return acc;
}

std::string IntPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const unsigned exp = it->first;
    Integer mag = abs(it->second);
    const bool negative = sgn(it->second) < 0;
    if (first) {
      if (negative) out << '-';
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    if (exp == 0) {
      out << mag.get_str();
      continue;
    }
    if (mag != 1) out << mag.get_str() << '*';
    out << 'N';
    if (exp > 1) out << '^' << exp;
  }
  return out.str();
}

}  // namespace wsys
