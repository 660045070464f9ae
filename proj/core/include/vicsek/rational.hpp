#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace vicsek {

/// Exact rational backed by GMP; always kept in canonical form.
using Rational = mpq_class;
using BigInt = mpz_class;

/// "num/den", or just "num" when the denominator is 1.
std::string to_string(const Rational& q);
/// Parses "num/den" or "num" and canonicalizes. Throws DomainError.
Rational parse_rational(const std::string& text);

/// Dense row-major matrix of exact rationals.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static RationalMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  std::vector<Rational> row(std::size_t r) const;

  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
RationalMatrix operator-(const RationalMatrix& a, const RationalMatrix& b);
/// Row vector times matrix.
std::vector<Rational> operator*(const std::vector<Rational>& v, const RationalMatrix& m);
/// Square matrix power by repeated squaring, k >= 0.
RationalMatrix power(const RationalMatrix& m, unsigned long k);

/// Solves A x = b exactly by Gauss-Jordan elimination. Throws SingularError
/// when A is singular.
std::vector<Rational> solve(RationalMatrix a, std::vector<Rational> b);

}  // namespace vicsek
