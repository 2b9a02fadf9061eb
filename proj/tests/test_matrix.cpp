#include <doctest.h>

#include "selfsim/matrix.hpp"
#include "selfsim/sfraction.hpp"
#include "support.hpp"

using namespace selfsim;
using namespace testsupport;

namespace {

// (x-1) A: ones on the superdiagonal times x-1, and 1 in the corner.
PolyMat scaled_A(Residue p, std::size_t n) {
  PolyMat m(n, DensePoly(p));
  for (std::size_t i = 0; i + 1 < n; ++i) m(i, i + 1) = DensePoly::x_minus_one(p);
  m(n - 1, 0) = DensePoly::constant(p, 1);
  return m;
}

PolyMat A_inverse(Residue p, std::size_t n) {
  PolyMat m(n, DensePoly(p));
  for (std::size_t i = 1; i < n; ++i) m(i, i - 1) = DensePoly::constant(p, 1);
  m(0, n - 1) = DensePoly::x_minus_one(p);
  return m;
}

// A b A^{-1} through matrix products, dividing out the scalar x-1 at the end.
PolyMat naive_conj(const PolyMat &b, Residue p) {
  const std::size_t n = b.size();
  PolyMat prod = scaled_A(p, n) * b * A_inverse(p, n);
  PolyMat r(n, DensePoly(p));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      auto q = prod(i, j).exact_div(DensePoly::x_minus_one(p));
      REQUIRE(q);
      r(i, j) = *q;
    }
  return r;
}

PolyMat elementary(Residue p, std::size_t n, std::size_t i, std::size_t j, const DensePoly &e) {
  PolyMat m = poly_mat_identity(p, n);
  m(i, j) = e;
  return m;
}

// Random element of B(n, F_p[x]): product of elementary generators.
PolyMat random_B(Residue p, std::size_t n, int steps = 4) {
  PolyMat b = poly_mat_identity(p, n);
  for (int s = 0; s < steps; ++s) {
    std::size_t i = static_cast<std::size_t>(uniform(0, static_cast<int>(n) - 1));
    std::size_t j = static_cast<std::size_t>(uniform(0, static_cast<int>(n) - 1));
    DensePoly h = random_poly(p, 2);
    if (i < j)
      b = b * elementary(p, n, i, j, h * DensePoly::x_minus_one(p));
    else if (i > j)
      b = b * elementary(p, n, i, j, h);
    else if (p > 2)
      b = b * elementary(p, n, i, i, DensePoly::constant(p, uniform(1, static_cast<int>(p) - 1)));
  }
  return b;
}

} // namespace

TEST_CASE("rho") {
  PolyMat z(3, DensePoly(2));
  CHECK(rho(z) == kNegInfDegree);
  CHECK(rho(poly_mat_identity(2, 3)) == 0);
  z(1, 2) = DensePoly(2, {0, 1, 0, 1});
  CHECK(rho(z) == 3);
  CHECK(rho(ColumnVec{DensePoly(2), DensePoly(2, {1, 1})}) == 1);
  for (int t = 0; t < 200; ++t) {
    PolyMat a(3, DensePoly(3)), b(3, DensePoly(3));
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) {
        a(i, j) = random_poly(3, 3);
        b(i, j) = random_poly(3, 3);
      }
    if (rho(a) == kNegInfDegree || rho(b) == kNegInfDegree) continue;
    CHECK(rho(a * b) <= rho(a) + rho(b));
  }
}

TEST_CASE("tri_inverse") {
  PolyMat id = poly_mat_identity(2, 3);
  CHECK(tri_inverse(id) == id);
  PolyMat t = poly_mat_identity(3, 2);
  t(0, 1) = DensePoly(3, {1, 2});
  CHECK(tri_inverse(t)(0, 1) == -t(0, 1));
  // Unitriangular with deg a_ij <= j-i-1: the inverse obeys the same bound.
  for (int trial = 0; trial < 300; ++trial) {
    PolyMat u = poly_mat_identity(2, 4);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = i + 1; j < 4; ++j) u(i, j) = random_poly(2, static_cast<int>(j - i) - 1);
    PolyMat v = tri_inverse(u);
    CHECK((u * v).is_identity());
    CHECK(tri_inverse(v) == u);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = i + 1; j < 4; ++j) CHECK(v(i, j).degree() <= static_cast<int>(j - i) - 1);
  }
  // Over A with unit diagonals.
  auto R = LocalizedRing::make(3, {DensePoly::x(3), DensePoly(3, {2, 1, 1})});
  for (int trial = 0; trial < 200; ++trial) {
    Matrix<SFraction> m(3, SFraction::zero(R));
    for (std::size_t i = 0; i < 3; ++i) {
      m(i, i) = SFraction::unit(R, static_cast<Residue>(uniform(1, 2)), {uniform(-2, 2), uniform(-2, 2)});
      for (std::size_t j = i + 1; j < 3; ++j) m(i, j) = random_sfraction(R);
    }
    auto inv = tri_inverse(m);
    CHECK((m * inv).is_identity());
    CHECK((inv * m).is_identity());
    CHECK(inv.is_upper_triangular());
    CHECK(tri_inverse(inv) == m);
  }
  PolyMat bad = poly_mat_identity(2, 2);
  bad(1, 1) = DensePoly(2, {0, 1});
  CHECK_THROWS_AS(tri_inverse(bad), std::domain_error);
}

TEST_CASE("conj_by_A closed form against matrix products") {
  CHECK(conj_by_A(poly_mat_identity(2, 3)) == poly_mat_identity(2, 3));
  PolyMat b = elementary(2, 3, 0, 1, DensePoly::x_minus_one(2));
  PolyMat expect = elementary(2, 3, 2, 0, DensePoly::constant(2, 1));
  CHECK(conj_by_A(b) == expect);
  CHECK(naive_conj(b, 2) == expect);
  int checked = 0;
  for (Residue p : {2u, 3u})
    for (std::size_t n : {3u, 4u})
      for (int t = 0; t < 60; ++t) {
        PolyMat r = random_B(p, n);
        PolyMat c = conj_by_A(r);
        CHECK(c == naive_conj(r, p));
        CHECK(conj_by_A_inverse(c) == r);
        PolyMat it = r;
        for (std::size_t k = 0; k < n; ++k) it = conj_by_A(it);
        CHECK(it == r);
        ++checked;
      }
  CHECK(checked >= 200);
  // Superdiagonal entry outside (x-1)F_p[x]: not in B.
  CHECK_THROWS_AS(conj_by_A(elementary(2, 3, 0, 1, DensePoly::constant(2, 1))), NotDivisible);
}

TEST_CASE("apply_A") {
  const DensePoly xm1 = DensePoly::x_minus_one(2), zero(2);
  CHECK(apply_A({xm1, zero, zero}) == ColumnVec{zero, zero, DensePoly::constant(2, 1)});
  CHECK(apply_A({zero, zero, zero}) == ColumnVec{zero, zero, zero});
  DensePoly q(2, {1, 1, 1}), r(2, {0, 1});
  CHECK(apply_A({zero, q, r}) == ColumnVec{q, r, zero});
  CHECK_THROWS_AS(apply_A({DensePoly::x(2), zero, zero}), NotDivisible);
  for (Residue p : {2u, 3u})
    for (int t = 0; t < 200; ++t) {
      ColumnVec w{random_poly(p, 3), random_poly(p, 3), random_poly(p, 3)};
      ColumnVec v;
      for (const auto &e : w) v.push_back(e * DensePoly::x_minus_one(p));
      ColumnVec it = v;
      for (int k = 0; k < 3; ++k) it = apply_A(it);
      CHECK(it == w);
    }
}

TEST_CASE("polynomial matrix inverse") {
  for (int t = 0; t < 100; ++t) {
    PolyMat b = random_B(3, 3);
    CHECK(determinant(b).is_constant());
    CHECK((b * poly_mat_inverse(b)).is_identity());
  }
}
