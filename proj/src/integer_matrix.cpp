#include "betashift/integer_matrix.hpp"

#include <algorithm>
#include <sstream>

#include "betashift/error.hpp"

namespace betashift {

IntegerMatrix::IntegerMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

IntegerMatrix IntegerMatrix::from_rows(const std::vector<std::vector<BigInt>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  IntegerMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw Error(ErrorCode::kPrecondition, "ragged matrix rows");
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

IntegerMatrix IntegerMatrix::identity(std::size_t n) {
  IntegerMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

void IntegerMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap(at(a, j), at(b, j));
}

void IntegerMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < rows_; ++i) std::swap(at(i, a), at(i, b));
}

void IntegerMatrix::add_row(std::size_t dst, std::size_t src, const BigInt& factor) {
  if (factor == 0) return;
  for (std::size_t j = 0; j < cols_; ++j) at(dst, j) += factor * at(src, j);
}

void IntegerMatrix::add_col(std::size_t dst, std::size_t src, const BigInt& factor) {
  if (factor == 0) return;
  for (std::size_t i = 0; i < rows_; ++i) at(i, dst) += factor * at(i, src);
}

void IntegerMatrix::negate_row(std::size_t r) {
  for (std::size_t j = 0; j < cols_; ++j) at(r, j) = -at(r, j);
}

IntegerMatrix IntegerMatrix::operator*(const IntegerMatrix& other) const {
  if (cols_ != other.rows_) throw Error(ErrorCode::kPrecondition, "matrix shape mismatch");
  IntegerMatrix out(rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      if (at(i, k) == 0) continue;
      for (std::size_t j = 0; j < other.cols_; ++j) out.at(i, j) += at(i, k) * other.at(k, j);
    }
  }
  return out;
}

IntegerMatrix IntegerMatrix::operator-(const IntegerMatrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_) {
    throw Error(ErrorCode::kPrecondition, "matrix shape mismatch");
  }
  IntegerMatrix out = *this;
  for (std::size_t k = 0; k < data_.size(); ++k) out.data_[k] -= other.data_[k];
  return out;
}

std::string IntegerMatrix::to_string() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < rows_; ++i) {
    out << '[';
    for (std::size_t j = 0; j < cols_; ++j) out << (j ? " " : "") << at(i, j);
    out << "]\n";
  }
  return out.str();
}

BigInt determinant(const IntegerMatrix& m) {
  if (!m.is_square()) throw Error(ErrorCode::kPrecondition, "determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntegerMatrix a = m;
  BigInt sign = 1;
  BigInt prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a.at(k, k) == 0) {
      std::size_t r = k + 1;
      while (r < n && a.at(r, k) == 0) ++r;
      if (r == n) return 0;
      a.swap_rows(k, r);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a.at(i, j) = (a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j)) / prev;
      }
    }
    prev = a.at(k, k);
  }
  return sign * a.at(n - 1, n - 1);
}

SmithNormalForm smith_normal_form(const IntegerMatrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  IntegerMatrix d = m;
  IntegerMatrix left = IntegerMatrix::identity(rows);
  IntegerMatrix right = IntegerMatrix::identity(cols);
  const std::size_t rank_bound = std::min(rows, cols);

  for (std::size_t t = 0; t < rank_bound; ++t) {
    for (;;) {
      // Smallest nonzero |entry| in the trailing block; ties to the lowest
      // row, then the lowest column.
      bool found = false;
      std::size_t pr = t, pc = t;
      BigInt best;
      for (std::size_t i = t; i < rows; ++i) {
        for (std::size_t j = t; j < cols; ++j) {
          if (d.at(i, j) == 0) continue;
          BigInt mag = abs(d.at(i, j));
          if (!found || mag < best) {
            found = true;
            best = mag;
            pr = i;
            pc = j;
          }
        }
      }
      if (!found) break;
      d.swap_rows(t, pr);
      left.swap_rows(t, pr);
      d.swap_cols(t, pc);
      right.swap_cols(t, pc);

      bool clean = true;
      const BigInt pivot = d.at(t, t);
      for (std::size_t i = t + 1; i < rows; ++i) {
        BigInt q = d.at(i, t) / pivot;
        d.add_row(i, t, -q);
        left.add_row(i, t, -q);
        if (d.at(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        BigInt q = d.at(t, j) / pivot;
        d.add_col(j, t, -q);
        right.add_col(j, t, -q);
        if (d.at(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      bool divides = true;
      for (std::size_t i = t + 1; i < rows && divides; ++i) {
        for (std::size_t j = t + 1; j < cols; ++j) {
          if (d.at(i, j) % pivot != 0) {
            d.add_row(t, i, 1);
            left.add_row(t, i, 1);
            divides = false;
            break;
          }
        }
      }
      if (divides) break;
    }
    if (d.at(t, t) < 0) {
      d.negate_row(t);
      left.negate_row(t);
    }
  }

  std::vector<BigInt> divisors;
  for (std::size_t t = 0; t < rank_bound; ++t) divisors.push_back(d.at(t, t));
  return {std::move(left), std::move(d), std::move(right), std::move(divisors)};
}

bool verify_certificate(const IntegerMatrix& m, const SmithNormalForm& snf) {
  if (snf.left * m * snf.right != snf.diagonal) return false;
  if (abs(determinant(snf.left)) != 1 || abs(determinant(snf.right)) != 1) return false;
  for (std::size_t i = 0; i < snf.diagonal.rows(); ++i) {
    for (std::size_t j = 0; j < snf.diagonal.cols(); ++j) {
      if (i != j && snf.diagonal.at(i, j) != 0) return false;
    }
  }
  for (std::size_t k = 0; k < snf.divisors.size(); ++k) {
    if (snf.divisors[k] < 0 || snf.divisors[k] != snf.diagonal.at(k, k)) return false;
    if (k + 1 < snf.divisors.size()) {
      const BigInt& a = snf.divisors[k];
      const BigInt& b = snf.divisors[k + 1];
      if (a == 0 ? b != 0 : b % a != 0) return false;
    }
  }
  return true;
}

}  // namespace betashift
