#pragma once

// Exact integer / rational linear algebra on GMP numbers.

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace lorentz {

using Int = mpz_class;
using Rat = mpq_class;

/// Thrown when an exact computation meets input outside its contract.
class MathError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Dense row-major matrix.
template <class T>
class Matrix {
public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}
  Matrix(std::initializer_list<std::initializer_list<long>> init) {
    rows_ = init.size();
    cols_ = rows_ ? init.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& row : init) {
      if (row.size() != cols_) throw MathError("ragged matrix literal");
      for (long v : row) data_.emplace_back(v);
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<T> row(std::size_t r) const {
    return std::vector<T>(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                          data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
  }
  void set_row(std::size_t r, const std::vector<T>& v) {
    for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) = v[c];
  }
  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  bool operator==(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) return false;
    for (std::size_t i = 0; i < data_.size(); ++i)
      if (data_[i] != o.data_[i]) return false;
    return true;
  }
  bool operator!=(const Matrix& o) const { return !(*this == o); }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw MathError("matrix product shape mismatch");
    Matrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (aik == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
      }
    return out;
  }

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMat = Matrix<Int>;
using RatMat = Matrix<Rat>;
using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

RatMat to_rational(const IntMat& m);
bool is_symmetric(const IntMat& m);

/// Row Hermite normal form: transform is unimodular and transform * m == form.
/// Nonzero rows of form come first, pivots strictly increase, pivots are
/// positive and entries above a pivot are reduced into [0, pivot).
struct HermiteResult {
  IntMat form;
  IntMat transform;
  std::size_t rank = 0;
};
HermiteResult hnf(const IntMat& m);

/// Smith normal form: left * m * right == diag, diag entries d_i | d_{i+1}.
struct SmithResult {
  IntMat left;
  IntMat diag;
  IntMat right;
};
SmithResult snf(const IntMat& m);

/// Determinant by fraction-free (Bareiss) elimination.
Int det(const IntMat& m);

/// Integer row-kernel basis: rows k with k * m == 0, a basis of the full
/// integer kernel (saturated).
IntMat left_kernel(const IntMat& m);

/// Inverse over Q; throws MathError if singular.
RatMat inverse(const RatMat& m);
RatMat inverse(const IntMat& m);

/// Solve x * m == rhs (row vector) over Q, if consistent.
std::optional<RatVec> solve_left(const RatMat& m, const RatVec& rhs);

/// Exact L D L^T of a symmetric matrix (L unit lower triangular).
struct LdlResult {
  RatMat lower;
  RatVec diag;
};
LdlResult ldl(const IntMat& gram);

enum class Signature { positive_definite, lorentzian };

/// A symmetric integral bilinear form.
class QuadForm {
public:
  QuadForm() = default;
  QuadForm(IntMat gram, Signature sig);

  const IntMat& gram() const { return gram_; }
  Signature signature() const { return sig_; }
  std::size_t dim() const { return gram_.rows(); }
  bool is_even() const;
  Int norm(const IntVec& x) const;
  Rat norm(const RatVec& x) const;
  Int inner(const IntVec& x, const IntVec& y) const;

private:
  IntMat gram_;
  Signature sig_ = Signature::positive_definite;
};

/// Exact leading-principal-minor test.
bool is_positive_definite(const IntMat& gram);

/// Integral LLL on a positive definite Gram matrix (delta = 99/100).
/// Returns the reduced Gram and the unimodular transform T with
/// reduced == T * gram * T^T.
struct LllResult {
  IntMat gram;
  IntMat transform;
};
LllResult lll_gram(const IntMat& gram);

/// Row-vector helpers.
IntVec mul(const IntVec& x, const IntMat& m);
RatVec mul(const RatVec& x, const RatMat& m);
Int dot(const IntVec& a, const IntVec& b);

std::string to_string(const IntMat& m);

}  // namespace lorentz
