#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "selfsim/dense_poly.hpp"

namespace selfsim {

/// The ring A = F_p[x^{±1}, 1/f_1, ..., 1/f_{n-1}]: F_p[x] with a fixed list
/// of basis polynomials f_0 = x, f_1, ... inverted. Fractions are only ever
/// formed over this basis, which keeps canonical forms cheap.
class LocalizedRing {
public:
  /// `basis` must start with x. No hypothesis checking happens here; see
  /// validate_config.
  LocalizedRing(Residue p, std::vector<DensePoly> basis);

  static std::shared_ptr<const LocalizedRing> make(Residue p, std::vector<DensePoly> basis) {
    return std::make_shared<const LocalizedRing>(p, std::move(basis));
  }

  Residue modulus() const { return p_; }
  std::size_t size() const { return basis_.size(); }
  const DensePoly &basis(std::size_t i) const { return basis_[i]; }
  const std::vector<DensePoly> &basis() const { return basis_; }
  /// basis(i)^e, cached for small e.
  DensePoly basis_power(std::size_t i, int e) const;

  bool operator==(const LocalizedRing &o) const { return p_ == o.p_ && basis_ == o.basis_; }

private:
  Residue p_;
  std::vector<DensePoly> basis_;
  std::vector<std::vector<DensePoly>> powers_;
};

using RingPtr = std::shared_ptr<const LocalizedRing>;

/// Denominator exponents, one per basis polynomial.
using Exps = boost::container::small_vector<int, 4>;

/// Element num / (f_0^{e_0} ... f_{n-1}^{e_{n-1}}) of a LocalizedRing, always
/// kept canonical: f_i does not divide num whenever e_i > 0, and zero has
/// every e_i = 0. Canonical forms of equal elements are identical.
class SFraction {
public:
  SFraction() = default;
  SFraction(RingPtr ring, DensePoly num);

  static SFraction zero(const RingPtr &ring);
  static SFraction one(const RingPtr &ring);
  static SFraction constant(const RingPtr &ring, long long c);
  /// c * prod f_i^{exps_i}; exponents may be negative.
  static SFraction unit(const RingPtr &ring, Residue c, const std::vector<int> &exps);

  const RingPtr &ring() const { return ring_; }
  const DensePoly &num() const { return num_; }
  const Exps &den_exps() const { return den_; }
  Residue modulus() const { return num_.modulus(); }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const;
  /// True when no denominator is present.
  bool is_polynomial() const;
  /// Degree of the numerator of a polynomial element (kNegInfDegree for 0).
  int poly_degree() const { return num_.degree(); }

  SFraction operator+(const SFraction &o) const;
  SFraction operator-(const SFraction &o) const;
  SFraction operator*(const SFraction &o) const;
  SFraction operator-() const;
  SFraction &operator+=(const SFraction &o) { return *this = *this + o; }
  SFraction &operator-=(const SFraction &o) { return *this = *this - o; }
  SFraction scaled(Residue c) const;
  /// Multiply by prod f_i^{exps_i}.
  SFraction times_unit(const std::vector<int> &exps) const;
  SFraction times_poly(const DensePoly &q) const;

  /// Whether (x-1)^k divides this element in A.
  bool divisible_by_xm1_pow(unsigned k) const;
  /// this / (x-1)^k; throws NotDivisible.
  SFraction divide_exact(unsigned k) const;
  /// num(1) * den(1)^{-1}; zero exactly on the ideal (x-1)A.
  Residue eval_at_one() const;
  /// The unique polynomial of degree < k congruent to this element modulo
  /// (x-1)^k A.
  DensePoly reduce_mod_xm1_pow(unsigned k) const;

  /// Inverse when this element is a unit of A (c * prod f_i^{k_i}).
  std::optional<SFraction> try_inverse() const;
  /// Decompose a unit as (c, exponent vector).
  std::optional<std::pair<Residue, std::vector<int>>> as_unit() const;

  SFraction zero_like() const { return zero(ring_); }
  SFraction one_like() const { return one(ring_); }

  std::size_t hash() const;
  std::string to_string() const;

  friend bool operator==(const SFraction &a, const SFraction &b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

private:
  friend SFraction canonicalize(const RingPtr &ring, DensePoly num, Exps den_exps);
  void check_same(const SFraction &o) const;

  RingPtr ring_;
  DensePoly num_;
  Exps den_;
};

/// Cancel basis factors from num against the denominator exponents.
/// Exponents must be nonnegative.
SFraction canonicalize(const RingPtr &ring, DensePoly num, Exps den_exps);

} // namespace selfsim
