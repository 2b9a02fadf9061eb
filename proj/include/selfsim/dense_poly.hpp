#pragma once

#include <climits>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/container/small_vector.hpp>

#include "selfsim/prime_field.hpp"

namespace selfsim {

/// Degree of the zero polynomial. Behaves as minus infinity under max and
/// under addition of a few degrees.
inline constexpr int kNegInfDegree = INT_MIN / 8;

/// Coefficient storage; short polynomials stay inline.
using Coeffs = boost::container::small_vector<Residue, 8>;

/// Univariate polynomial over F_p, coefficients in ascending degree.
/// The coefficient vector never has a trailing zero; zero is empty.
class DensePoly {
public:
  DensePoly() = default;
  explicit DensePoly(Residue p) : p_(p) {}
  DensePoly(Residue p, const std::vector<Residue> &coeffs);
  DensePoly(Residue p, Coeffs coeffs);
  DensePoly(Residue p, std::initializer_list<long long> coeffs);

  static DensePoly constant(Residue p, long long c);
  static DensePoly monomial(Residue p, long long c, unsigned degree);
  static DensePoly x(Residue p) { return monomial(p, 1, 1); }
  /// x - 1
  static DensePoly x_minus_one(Residue p);

  Residue modulus() const { return p_; }
  const Coeffs &coeffs() const { return c_; }
  Residue coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }

  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
  bool is_constant() const { return c_.size() <= 1; }
  int degree() const { return c_.empty() ? kNegInfDegree : static_cast<int>(c_.size()) - 1; }
  Residue leading() const { return c_.empty() ? 0 : c_.back(); }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }

  Residue eval(Residue at) const;

  DensePoly operator+(const DensePoly &o) const;
  DensePoly operator-(const DensePoly &o) const;
  DensePoly operator*(const DensePoly &o) const;
  DensePoly operator-() const;
  DensePoly &operator+=(const DensePoly &o) { return *this = *this + o; }
  DensePoly &operator-=(const DensePoly &o) { return *this = *this - o; }
  DensePoly &operator*=(const DensePoly &o) { return *this = *this * o; }
  DensePoly scaled(Residue c) const;
  DensePoly pow(unsigned e) const;
  /// Multiply by x^k.
  DensePoly shifted(unsigned k) const;

  /// Exact quotient, or nullopt when `d` does not divide this.
  std::optional<DensePoly> exact_div(const DensePoly &d) const;

  /// Inverse modulo `m` (requires gcd 1), as a polynomial of degree < deg m.
  std::optional<DensePoly> inverse_mod(const DensePoly &m) const;

  DensePoly zero_like() const { return DensePoly(p_); }
  DensePoly one_like() const { return constant(p_, 1); }
  /// Units of F_p[x] are the nonzero constants.
  std::optional<DensePoly> try_inverse() const;

  std::size_t hash() const;
  std::string to_string(const std::string &var = "x") const;

  friend bool operator==(const DensePoly &a, const DensePoly &b) {
    return a.c_ == b.c_ && (a.c_.empty() || a.p_ == b.p_);
  }

private:
  void trim();
  void check_same(const DensePoly &o) const;

  Residue p_ = 2;
  Coeffs c_;
};

/// Euclidean division: a = q*b + r with deg r < deg b. Throws on b = 0.
std::pair<DensePoly, DensePoly> poly_divrem(const DensePoly &a, const DensePoly &b);

DensePoly poly_gcd(DensePoly a, DensePoly b);

/// Irreducibility over F_p by trial division with every monic polynomial of
/// degree at most deg/2.
bool is_irreducible(const DensePoly &f);

/// All monic polynomials of the given degree, in increasing lexicographic
/// order of the coefficient vector read from the constant term upward.
std::vector<DensePoly> monic_polys_of_degree(Residue p, unsigned degree);

/// All polynomials of degree at most `max_degree` (zero included).
std::vector<DensePoly> polys_up_to_degree(Residue p, int max_degree);

} // namespace selfsim
