#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "selfsim/dense_poly.hpp"
#include "selfsim/errors.hpp"
#include "selfsim/hashing.hpp"

namespace selfsim {

/// Square matrix over a commutative ring element type R. R supplies
/// zero_like(), one_like(), +, -, *, ==, hash(), and for triangular
/// inversion try_inverse().
template <class R>
class Matrix {
public:
  Matrix() = default;
  Matrix(std::size_t n, const R &zero) : n_(n), a_(n * n, zero) {}

  static Matrix identity(std::size_t n, const R &proto) {
    Matrix m(n, proto.zero_like());
    for (std::size_t i = 0; i < n; ++i) m(i, i) = proto.one_like();
    return m;
  }

  std::size_t size() const { return n_; }
  R &operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
  const R &operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }
  const std::vector<R> &entries() const { return a_; }

  Matrix operator*(const Matrix &o) const {
    check_size(o);
    Matrix r(n_, a_.front().zero_like());
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t k = 0; k < n_; ++k) {
        const R &x = (*this)(i, k);
        if (x.is_zero()) continue;
        for (std::size_t j = 0; j < n_; ++j) {
          const R &y = o(k, j);
          if (y.is_zero()) continue;
          r(i, j) = r(i, j) + x * y;
        }
      }
    return r;
  }

  Matrix operator+(const Matrix &o) const {
    check_size(o);
    Matrix r(*this);
    for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k] + o.a_[k];
    return r;
  }

  Matrix operator-(const Matrix &o) const {
    check_size(o);
    Matrix r(*this);
    for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k] - o.a_[k];
    return r;
  }

  /// Matrix-vector product.
  std::vector<R> apply(const std::vector<R> &v) const {
    if (v.size() != n_) throw std::invalid_argument("vector length does not match matrix size");
    std::vector<R> r(n_, a_.front().zero_like());
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t k = 0; k < n_; ++k)
        if (!(*this)(i, k).is_zero() && !v[k].is_zero()) r[i] = r[i] + (*this)(i, k) * v[k];
    return r;
  }

  bool is_upper_triangular() const {
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < i; ++j)
        if (!(*this)(i, j).is_zero()) return false;
    return true;
  }

  bool is_identity() const {
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) {
        const R &x = (*this)(i, j);
        if (i == j ? !(x == x.one_like()) : !x.is_zero()) return false;
      }
    return true;
  }

  std::size_t hash() const {
    std::size_t h = n_;
    for (const auto &x : a_) hash_combine(h, x.hash());
    return h;
  }

  friend bool operator==(const Matrix &a, const Matrix &b) { return a.n_ == b.n_ && a.a_ == b.a_; }

private:
  void check_size(const Matrix &o) const {
    if (n_ != o.n_ || n_ == 0) throw std::invalid_argument("matrix size mismatch");
  }

  std::size_t n_ = 0;
  std::vector<R> a_;
};

using PolyMat = Matrix<DensePoly>;
using ColumnVec = std::vector<DensePoly>;

/// Inverse of an upper triangular matrix by back substitution. Throws
/// std::domain_error when a diagonal entry is not a unit.
template <class R>
Matrix<R> tri_inverse(const Matrix<R> &t) {
  const std::size_t n = t.size();
  if (n == 0) return t;
  if (!t.is_upper_triangular()) throw std::invalid_argument("tri_inverse: matrix is not upper triangular");
  std::vector<R> diag_inv;
  diag_inv.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    auto inv = t(i, i).try_inverse();
    if (!inv) throw std::domain_error("tri_inverse: diagonal entry " + std::to_string(i) + " is not invertible");
    diag_inv.push_back(std::move(*inv));
  }
  Matrix<R> b(n, t(0, 0).zero_like());
  for (std::size_t i = n; i-- > 0;) {
    b(i, i) = diag_inv[i];
    for (std::size_t j = i + 1; j < n; ++j) {
      R s = t(0, 0).zero_like();
      for (std::size_t k = i + 1; k <= j; ++k)
        if (!t(i, k).is_zero() && !b(k, j).is_zero()) s = s + t(i, k) * b(k, j);
      b(i, j) = -(diag_inv[i] * s);
    }
  }
  return b;
}

/// Largest entry degree; kNegInfDegree for the zero matrix.
int rho(const PolyMat &c);
int rho(const ColumnVec &v);

/// A b A^{-1} for the matrix A with ones on the superdiagonal and 1/(x-1) in
/// the bottom-left corner. Throws NotDivisible if b has a superdiagonal entry
/// outside (x-1)F_p[x].
PolyMat conj_by_A(const PolyMat &b);

/// A^{-1} b A; inverse of conj_by_A (always polynomial for b in B).
PolyMat conj_by_A_inverse(const PolyMat &b);

/// A v = (v_2, ..., v_n, v_1/(x-1)). Throws NotDivisible when (x-1) does not
/// divide v_1.
ColumnVec apply_A(const ColumnVec &v);

/// Determinant by cofactor expansion (desk-scale sizes only).
DensePoly determinant(const PolyMat &m);

/// Inverse over F_p[x]; throws std::domain_error unless det is a nonzero
/// constant.
PolyMat poly_mat_inverse(const PolyMat &m);

PolyMat poly_mat_identity(Residue p, std::size_t n);

} // namespace selfsim
