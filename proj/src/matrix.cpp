#include "selfsim/matrix.hpp"

#include <algorithm>

namespace selfsim {

int rho(const PolyMat &c) {
  int r = kNegInfDegree;
  for (const auto &e : c.entries()) r = std::max(r, e.degree());
  return r;
}

int rho(const ColumnVec &v) {
  int r = kNegInfDegree;
  for (const auto &e : v) r = std::max(r, e.degree());
  return r;
}

namespace {

DensePoly div_xm1(const DensePoly &a, const char *what) {
  if (a.is_zero()) return a;
  auto q = a.exact_div(DensePoly::x_minus_one(a.modulus()));
  if (!q) throw NotDivisible(std::string(what) + ": entry " + a.to_string() + " is not divisible by x-1");
  return *q;
}

Residue field_of(const PolyMat &b) {
  for (const auto &e : b.entries())
    if (!e.is_zero()) return e.modulus();
  return b.entries().empty() ? 2 : b.entries().front().modulus();
}

} // namespace

PolyMat conj_by_A(const PolyMat &b) {
  const std::size_t n = b.size();
  const Residue p = field_of(b);
  const DensePoly xm1 = DensePoly::x_minus_one(p);
  PolyMat r(n, DensePoly(p));
  auto sigma = [n](std::size_t i) { return (i + 1) % n; };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const DensePoly &e = b(sigma(i), sigma(j));
      const bool i_last = i == n - 1, j_last = j == n - 1;
      if (i_last && !j_last)
        r(i, j) = div_xm1(e, "conj_by_A");
      else if (j_last && !i_last)
        r(i, j) = e * xm1;
      else
        r(i, j) = e;
    }
  return r;
}

PolyMat conj_by_A_inverse(const PolyMat &b) {
  const std::size_t n = b.size();
  const Residue p = field_of(b);
  const DensePoly xm1 = DensePoly::x_minus_one(p);
  PolyMat r(n, DensePoly(p));
  auto tau = [n](std::size_t i) { return (i + n - 1) % n; };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const DensePoly &e = b(tau(i), tau(j));
      const bool i_first = i == 0, j_first = j == 0;
      if (j_first && !i_first)
        r(i, j) = div_xm1(e, "conj_by_A_inverse");
      else if (i_first && !j_first)
        r(i, j) = e * xm1;
      else
        r(i, j) = e;
    }
  return r;
}

ColumnVec apply_A(const ColumnVec &v) {
  if (v.empty()) return v;
  ColumnVec r(v.begin() + 1, v.end());
  r.push_back(div_xm1(v.front(), "apply_A"));
  return r;
}

namespace {

DensePoly det_rec(const PolyMat &m, std::vector<std::size_t> &rows, std::vector<std::size_t> &cols) {
  const std::size_t k = rows.size();
  if (k == 1) return m(rows[0], cols[0]);
  if (k == 2) return m(rows[0], cols[0]) * m(rows[1], cols[1]) - m(rows[0], cols[1]) * m(rows[1], cols[0]);
  DensePoly acc(m(0, 0).modulus());
  const std::size_t r0 = rows.front();
  std::vector<std::size_t> sub_rows(rows.begin() + 1, rows.end());
  for (std::size_t c = 0; c < k; ++c) {
    const DensePoly &e = m(r0, cols[c]);
    if (e.is_zero()) continue;
    std::vector<std::size_t> sub_cols;
    sub_cols.reserve(k - 1);
    for (std::size_t t = 0; t < k; ++t)
      if (t != c) sub_cols.push_back(cols[t]);
    DensePoly term = e * det_rec(m, sub_rows, sub_cols);
    acc = (c % 2 == 0) ? acc + term : acc - term;
  }
  return acc;
}

} // namespace

DensePoly determinant(const PolyMat &m) {
  const std::size_t n = m.size();
  if (n == 0) throw std::invalid_argument("determinant of an empty matrix");
  std::vector<std::size_t> rows(n), cols(n);
  for (std::size_t i = 0; i < n; ++i) rows[i] = cols[i] = i;
  return det_rec(m, rows, cols);
}

PolyMat poly_mat_identity(Residue p, std::size_t n) { return PolyMat::identity(n, DensePoly(p)); }

PolyMat poly_mat_inverse(const PolyMat &m) {
  const std::size_t n = m.size();
  const DensePoly det = determinant(m);
  auto det_inv = det.try_inverse();
  if (!det_inv) throw std::domain_error("matrix is not invertible over F_p[x] (det = " + det.to_string() + ")");
  const Residue p = det.modulus();
  if (n == 1) {
    PolyMat r(1, DensePoly(p));
    r(0, 0) = *det_inv;
    return r;
  }
  PolyMat r(n, DensePoly(p));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      // adj(m)(j, i) = (-1)^{i+j} minor(i, j)
      std::vector<std::size_t> rows, cols;
      for (std::size_t t = 0; t < n; ++t) {
        if (t != i) rows.push_back(t);
        if (t != j) cols.push_back(t);
      }
      DensePoly minor = det_rec(m, rows, cols);
      if ((i + j) % 2) minor = -minor;
      r(j, i) = minor * *det_inv;
    }
  return r;
}

} // namespace selfsim
