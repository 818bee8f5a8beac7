#pragma once

// Exact integer/rational linear algebra. Nothing here touches floating point.

#include <gmpxx.h>

#include <cstddef>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "kappa/errors.hpp"

namespace kappa {

using BigInt = mpz_class;
/// mpq_class keeps itself canonical (lowest terms, positive denominator)
/// under arithmetic; make_rat canonicalizes freshly built values.
using BigRat = mpq_class;

inline BigRat make_rat(const BigInt& num, const BigInt& den) {
  if (den == 0) throw DomainError("make_rat: zero denominator");
  BigRat r(num, den);
  r.canonicalize();
  return r;
}

/// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static IntMatrix square(std::size_t n) { return IntMatrix(n, n); }

  static IntMatrix identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  static IntMatrix from_rows(const std::vector<std::vector<long>>& rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows.front().size();
    IntMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
      if (rows[i].size() != c) throw DimensionError("IntMatrix::from_rows: ragged rows");
      for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  BigInt& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const BigInt& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }

  /// Principal submatrix on the given (row = column) indices.
  IntMatrix principal_submatrix(std::span<const std::size_t> idx) const {
    IntMatrix out(idx.size(), idx.size());
    for (std::size_t i = 0; i < idx.size(); ++i)
      for (std::size_t j = 0; j < idx.size(); ++j) out(i, j) = (*this)(idx[i], idx[j]);
    return out;
  }

  /// Deletes row k and column k.
  IntMatrix without(std::size_t k) const {
    std::vector<std::size_t> idx;
    idx.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      if (i != k) idx.push_back(i);
    return principal_submatrix(idx);
  }

  friend IntMatrix operator+(IntMatrix a, const IntMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionError("IntMatrix +: shape mismatch");
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] += b.data_[i];
    return a;
  }

  friend IntMatrix operator-(IntMatrix a, const IntMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionError("IntMatrix -: shape mismatch");
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] -= b.data_[i];
    return a;
  }

  friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> data_;
};

/// Fraction-free (Bareiss) determinant. Pivoting only swaps in the first
/// nonzero entry below a zero pivot. Every division by the previous pivot is
/// checked for a zero remainder.
inline BigInt det_bareiss(IntMatrix m) {
  if (!m.is_square()) throw DimensionError("det_bareiss: matrix is not square");
  const std::size_t n = m.rows();
  if (n == 0) return 1;

  BigInt prev = 1;
  BigInt prod;
  BigInt rem;
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t r = k + 1;
      while (r < n && m(r, k) == 0) ++r;
      if (r == n) return 0;
      m.swap_rows(k, r);
      negate = !negate;
    }
    const BigInt& pivot = m(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      const BigInt& lead = m(i, k);
      const bool lead_zero = lead == 0;
      for (std::size_t j = k + 1; j < n; ++j) {
        BigInt& cell = m(i, j);
        mpz_mul(prod.get_mpz_t(), cell.get_mpz_t(), pivot.get_mpz_t());
        if (!lead_zero) mpz_submul(prod.get_mpz_t(), lead.get_mpz_t(), m(k, j).get_mpz_t());
        mpz_tdiv_qr(cell.get_mpz_t(), rem.get_mpz_t(), prod.get_mpz_t(), prev.get_mpz_t());
        if (rem != 0) throw ConsistencyError("det_bareiss: inexact fraction-free division");
      }
      m(i, k) = 0;
    }
    prev = pivot;
  }
  BigInt det = m(n - 1, n - 1);
  return negate ? BigInt(-det) : det;
}

/// Integer polynomial, constant term first; trailing zeros trimmed.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }

  bool is_zero() const noexcept { return c_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>(c_.size()) - 1; }
  const std::vector<BigInt>& coefficients() const noexcept { return c_; }

  BigInt coeff(std::size_t i) const { return i < c_.size() ? c_[i] : BigInt(0); }

  BigInt evaluate(const BigInt& x) const {
    BigInt acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  /// Synthetic division by (x - root). The flag is true when the remainder is zero.
  std::pair<IntPolynomial, bool> divide_linear(const BigInt& root) const {
    if (c_.empty()) return {IntPolynomial{}, true};
    std::vector<BigInt> q(c_.size() - 1);
    BigInt carry = 0;
    for (std::size_t i = c_.size(); i-- > 0;) {
      BigInt v = c_[i] + carry * root;
      if (i == 0) return {IntPolynomial(std::move(q)), v == 0};
      q[i - 1] = v;
      carry = v;
    }
    return {IntPolynomial{}, false};
  }

  std::string to_string(const std::string& var = "x") const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = c_.size(); i-- > 0;) {
      const BigInt& a = c_[i];
      if (a == 0) continue;
      BigInt mag = abs(a);
      if (first) {
        if (a < 0) os << "-";
      } else {
        os << (a < 0 ? " - " : " + ");
      }
      first = false;
      if (i == 0 || mag != 1) os << mag.get_str();
      if (i >= 1) os << var;
      if (i >= 2) os << "^" << i;
    }
    return os.str();
  }

  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) { return a.c_ == b.c_; }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<BigInt> c_;
};

/// Interpolates the unique polynomial of degree <= n through (t, values[t]),
/// t = 0..n, via forward differences. Throws ConsistencyError when a
/// coefficient is not an integer.
inline IntPolynomial interpolate_integer_nodes(std::span<const BigInt> values) {
  const std::size_t count = values.size();
  if (count == 0) return IntPolynomial{};

  // Newton form on nodes 0..n: p(x) = sum_k (Delta^k f(0) / k!) * x(x-1)...(x-k+1).
  std::vector<BigInt> diff(values.begin(), values.end());
  std::vector<BigInt> delta0(count);
  for (std::size_t k = 0; k < count; ++k) {
    delta0[k] = diff[0];
    for (std::size_t i = 0; i + 1 < count - k; ++i) diff[i] = diff[i + 1] - diff[i];
  }

  std::vector<BigRat> result(count, BigRat(0));
  std::vector<BigInt> falling{1};  // coefficients of x(x-1)...(x-k+1)
  BigInt factorial = 1;
  for (std::size_t k = 0; k < count; ++k) {
    if (k > 0) {
      factorial *= static_cast<unsigned long>(k);
      std::vector<BigInt> next(falling.size() + 1, BigInt(0));
      const BigInt shift = static_cast<unsigned long>(k - 1);
      for (std::size_t i = 0; i < falling.size(); ++i) {
        next[i + 1] += falling[i];
        next[i] -= falling[i] * shift;
      }
      falling = std::move(next);
    }
    const BigRat scale = make_rat(delta0[k], factorial);
    if (scale == 0) continue;
    for (std::size_t i = 0; i < falling.size(); ++i) result[i] += scale * BigRat(falling[i]);
  }

  std::vector<BigInt> coeffs(count);
  for (std::size_t i = 0; i < count; ++i) {
    if (result[i].get_den() != 1)
      throw ConsistencyError("interpolate_integer_nodes: non-integer coefficient");
    coeffs[i] = result[i].get_num();
  }
  return IntPolynomial(std::move(coeffs));
}

}  // namespace kappa
