#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace wsys {

using Integer = mpz_class;
using Rational = mpq_class;

/// Makes num/den in lowest terms with a positive denominator.
Rational make_rational(long num, long den = 1);

std::string to_string(const Integer& x);
std::string to_string(const Rational& x);

/// Dense row-major matrix of exact rationals.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols);

  static RationalMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  RationalMatrix operator*(const RationalMatrix& rhs) const;
  bool operator==(const RationalMatrix& rhs) const = default;

  RationalMatrix transposed() const;
  bool is_symmetric() const;

  // Gauss-Jordan elimination; nullopt when singular or not square.
  std::optional<RationalMatrix> inverse() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

}  // namespace wsys
