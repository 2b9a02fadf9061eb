#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "selfsim/dense_poly.hpp"

namespace selfsim {

using Exponents = std::vector<int>;

/// Sparse Laurent polynomial in d variables over F_p, i.e. an element of the
/// group algebra F_p[Z^d]. No zero coefficient is ever stored.
class MultiLaurent {
public:
  MultiLaurent() = default;
  MultiLaurent(Residue p, std::size_t d) : p_(p), d_(d) {}

  static MultiLaurent constant(Residue p, std::size_t d, long long c);
  static MultiLaurent monomial(Residue p, const Exponents &e, long long c = 1);
  /// g(x_var) for a univariate polynomial g.
  static MultiLaurent univariate(const DensePoly &g, std::size_t d, std::size_t var);

  Residue modulus() const { return p_; }
  std::size_t vars() const { return d_; }
  const std::map<Exponents, Residue> &terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  void add_term(const Exponents &e, Residue c);

  MultiLaurent operator+(const MultiLaurent &o) const;
  MultiLaurent operator-(const MultiLaurent &o) const;
  MultiLaurent operator*(const MultiLaurent &o) const;
  MultiLaurent operator-() const;
  MultiLaurent scaled(Residue c) const;
  /// Multiply by the monomial x^e.
  MultiLaurent shifted(const Exponents &e) const;
  MultiLaurent pow(unsigned e) const;

  /// Sum of coefficients, the value at x_1 = ... = x_d = 1.
  Residue augmentation() const;

  /// Exact quotient by g(x_var), or nullopt when g(x_var) does not divide.
  /// g must not be the zero polynomial.
  std::optional<MultiLaurent> divide_by_univariate(const DensePoly &g, std::size_t var) const;

  std::size_t hash() const;
  std::string to_string() const;

  friend bool operator==(const MultiLaurent &a, const MultiLaurent &b) { return a.terms_ == b.terms_; }

private:
  void check_same(const MultiLaurent &o) const;

  Residue p_ = 2;
  std::size_t d_ = 0;
  std::map<Exponents, Residue> terms_;
};

/// The ring F_p[x_1^{±1}, 1/g(x_1)] ⊗ ... ⊗ F_p[x_d^{±1}, 1/g(x_d)].
/// An empty g means no localization (fractions must then be polynomial).
struct MultiLocalizedRing {
  Residue p;
  std::size_t d;
  DensePoly g;

  static std::shared_ptr<const MultiLocalizedRing> make(Residue p, std::size_t d, DensePoly g) {
    return std::make_shared<const MultiLocalizedRing>(MultiLocalizedRing{p, d, std::move(g)});
  }
  bool localized() const { return !g.is_zero(); }
};

using MultiRingPtr = std::shared_ptr<const MultiLocalizedRing>;

/// num / prod_i g(x_i)^{z_i}, canonical: g(x_i) does not divide num whenever
/// z_i > 0, and zero has every z_i = 0.
class MultiSFraction {
public:
  MultiSFraction() = default;
  MultiSFraction(MultiRingPtr ring, MultiLaurent num);

  static MultiSFraction zero(const MultiRingPtr &ring);
  static MultiSFraction constant(const MultiRingPtr &ring, long long c);

  const MultiRingPtr &ring() const { return ring_; }
  const MultiLaurent &num() const { return num_; }
  const std::vector<int> &den_exps() const { return den_; }
  Residue modulus() const { return ring_->p; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_laurent() const;

  MultiSFraction operator+(const MultiSFraction &o) const;
  MultiSFraction operator-(const MultiSFraction &o) const;
  MultiSFraction operator*(const MultiSFraction &o) const;
  MultiSFraction operator-() const;
  MultiSFraction scaled(Residue c) const;
  MultiSFraction shifted(const Exponents &e) const;
  /// Multiply by prod_i g(x_i)^{k_i}; exponents may be negative.
  MultiSFraction times_g_powers(const std::vector<int> &k) const;

  /// Value at x_1 = ... = x_d = 1; zero exactly on the augmentation ideal
  /// extended to the localization.
  Residue eval_at_ones() const;

  std::size_t hash() const;
  std::string to_string() const;

  friend bool operator==(const MultiSFraction &a, const MultiSFraction &b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

private:
  friend MultiSFraction canonicalize(const MultiRingPtr &ring, MultiLaurent num, std::vector<int> den);

  MultiRingPtr ring_;
  MultiLaurent num_;
  std::vector<int> den_;
};

MultiSFraction canonicalize(const MultiRingPtr &ring, MultiLaurent num, std::vector<int> den);

} // namespace selfsim
