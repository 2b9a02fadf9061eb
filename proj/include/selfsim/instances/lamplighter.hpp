#pragma once

#include <optional>
#include <string>
#include <vector>

#include "selfsim/engine.hpp"
#include "selfsim/sfraction.hpp"

namespace selfsim {

/// u^r q: r in A, q in Z^n written additively.
struct LampElem {
  SFraction r;
  std::vector<int> q;

  friend bool operator==(const LampElem &, const LampElem &) = default;
};

/// The metabelian group A ⋊ Q, Q = Z^n acting on A through
/// multiplication by f_0 = x, f_1, ..., f_{n-1}, with H = (x-1)A ⋊ Q,
/// transversal u^0, ..., u^{p-1} and f(u^r q) = u^{r/(x-1)} q.
class LamplighterInstance {
public:
  using Element = LampElem;

  /// polys = f_0 = x, f_1, ...; throws InvalidConfig unless the list is
  /// admissible with f_i(1) = 1.
  LamplighterInstance(Residue p, std::vector<DensePoly> polys);

  Residue p() const { return ring_->modulus(); }
  std::size_t rank() const { return ring_->size(); }
  const RingPtr &ring() const { return ring_; }
  const DensePoly &f(std::size_t j) const { return ring_->basis(j); }

  std::size_t degree() const { return p(); }
  LampElem identity() const;
  LampElem multiply(const LampElem &a, const LampElem &b) const;
  LampElem invert(const LampElem &a) const;
  const std::vector<LampElem> &transversal() const { return transversal_; }
  const std::vector<LampElem> &transversal_inverses() const { return transversal_inv_; }
  bool h_member(const LampElem &a) const;
  std::size_t coset_index(const LampElem &a) const;
  /// Throws NotInH outside H.
  LampElem endo(const LampElem &a) const;
  std::size_t hash(const LampElem &a) const;
  /// Generator word (see the expression grammar), reparseable.
  std::string render(const LampElem &a) const;

  LampElem u_pow(const SFraction &r) const;
  LampElem u_pow(const DensePoly &lambda) const { return u_pow(SFraction(ring_, lambda)); }
  LampElem x(std::size_t j, int e = 1) const;
  /// u, x_0, ..., x_{n-1}.
  std::vector<LampElem> generators() const;
  std::vector<std::string> generator_names() const;

  /// Decomposition from the explicit formulas for u^{±1}, x_j^{±1} and
  /// u^λ x_j^{-1} with λ a polynomial; nullopt for other shapes.
  std::optional<WreathDecomp<LampElem>> closed_form_decompose(const LampElem &a) const;

  /// Y_j = { u^λ x_j^{-1} : λ polynomial, deg λ <= deg f_j }.
  bool in_Y(std::size_t j, const LampElem &a) const;
  std::vector<LampElem> Y_elements(std::size_t j) const;

  /// u^λ = (u^{(λ - λ(1))/(x-1)})^{(1)} u^{λ(1)} for every sample λ, and
  /// u^{x^i} = (u^{x^{i-1}} ... u^x u)^{(1)} u for 1 <= i <= i_max, both as
  /// equalities of engine decompositions.
  Verdict power_identity_check(int i_max, const std::vector<DensePoly> &lambdas) const;
  /// BFS from every element of Y_j stays in Y_j within `cap` states.
  Verdict Y_closure_check(std::size_t j, std::size_t cap) const;

private:
  RingPtr ring_;
  std::vector<LampElem> transversal_;
  std::vector<LampElem> transversal_inv_;
};

} // namespace selfsim
