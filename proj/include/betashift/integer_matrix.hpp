#pragma once

// Dense arbitrary-precision integer matrices and the Smith normal form.

#include <cstddef>
#include <string>
#include <vector>

#include "betashift/numeric.hpp"

namespace betashift {

class IntegerMatrix {
 public:
  IntegerMatrix() = default;
  IntegerMatrix(std::size_t rows, std::size_t cols);
  // Throws Error{kPrecondition} on ragged input.
  static IntegerMatrix from_rows(const std::vector<std::vector<BigInt>>& rows);
  static IntegerMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  BigInt& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const BigInt& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  // row[dst] += factor * row[src]
  void add_row(std::size_t dst, std::size_t src, const BigInt& factor);
  void add_col(std::size_t dst, std::size_t src, const BigInt& factor);
  void negate_row(std::size_t r);

  IntegerMatrix operator*(const IntegerMatrix& other) const;
  IntegerMatrix operator-(const IntegerMatrix& other) const;
  bool operator==(const IntegerMatrix&) const = default;

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> data_;
};

// Fraction-free Gaussian elimination. Throws Error{kPrecondition} if M is
// not square.
BigInt determinant(const IntegerMatrix& m);

struct SmithNormalForm {
  IntegerMatrix left;      // unimodular, rows x rows
  IntegerMatrix diagonal;  // left * M * right
  IntegerMatrix right;     // unimodular, cols x cols
  // d_1 | d_2 | ... over min(rows, cols) entries, zeros last.
  std::vector<BigInt> divisors;
};

SmithNormalForm smith_normal_form(const IntegerMatrix& m);

// L * M * R == D, D diagonal with the divisor chain, |det L| = |det R| = 1.
bool verify_certificate(const IntegerMatrix& m, const SmithNormalForm& snf);

}  // namespace betashift
