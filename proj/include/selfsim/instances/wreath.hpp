#pragma once

#include <string>
#include <vector>

#include "selfsim/engine.hpp"
#include "selfsim/multi_laurent.hpp"

namespace selfsim {

/// a^r x^q y^y with r in the (possibly localized) group algebra of Z^d.
/// y stays zero in the unlocalized group.
struct WreathElem {
  MultiSFraction r;
  std::vector<int> q;
  std::vector<int> y;

  friend bool operator==(const WreathElem &, const WreathElem &) = default;
};

/// C_p wr Z^d = <a> wr <x_1, ..., x_d>, and its localization at
/// S = {prod g(x_i)^{z_i}} extended by y_1, ..., y_d acting as g(x_i).
///
/// Base: H = A_0 ⋊ Q_0 with Q_0 = <x_1^p, x_2, ..., x_d>, transversal
/// a^i x_1^j. Localized: H = A_0 S^{-1} ⋊ (Q_0 × <y_1^p, y_2, ..., y_d>),
/// transversal a^i x_1^j y_1^k.
class WreathInstance {
public:
  using Element = WreathElem;

  /// Unlocalized group.
  WreathInstance(Residue p, std::size_t d);
  /// Localized at g; g must not be c x^j and must not vanish at 1.
  WreathInstance(Residue p, std::size_t d, DensePoly g);

  Residue p() const { return ring_->p; }
  std::size_t d() const { return ring_->d; }
  bool localized() const { return ring_->localized(); }
  const DensePoly &g() const { return ring_->g; }
  const MultiRingPtr &ring() const { return ring_; }

  std::size_t degree() const { return transversal_.size(); }
  WreathElem identity() const;
  WreathElem multiply(const WreathElem &a, const WreathElem &b) const;
  WreathElem invert(const WreathElem &a) const;
  const std::vector<WreathElem> &transversal() const { return transversal_; }
  const std::vector<WreathElem> &transversal_inverses() const { return transversal_inv_; }
  bool h_member(const WreathElem &a) const;
  std::size_t coset_index(const WreathElem &a) const;
  /// f on the base group, f~ on the localized one. Throws NotInH.
  WreathElem endo(const WreathElem &a) const;
  std::size_t hash(const WreathElem &a) const;
  /// Generator word, reparseable.
  std::string render(const WreathElem &a) const;

  /// f on A_0: a^{c x^w} with w = z + i e_1, z in Q_0, 0 <= i < p, goes to
  /// a^{c i σ(z)}. Throws NotInH off the augmentation ideal.
  MultiLaurent endo_A(const MultiLaurent &r) const;
  /// f~ on A_0 S^{-1}, using s_1 = g(x_1)^{k + p * extra_periods} with k
  /// minimal. Every choice gives the same value.
  MultiSFraction endo_A_localized(const MultiSFraction &r, int extra_periods = 0) const;
  /// The exponent map on Q_0: x_1^p -> x_2, x_i -> x_{i+1}, x_d -> x_1.
  std::vector<int> sigma(const std::vector<int> &z) const;

  WreathElem a_pow(const MultiSFraction &r) const;
  WreathElem x(std::size_t i, int e = 1) const; ///< 1-based
  WreathElem y(std::size_t i, int e = 1) const; ///< 1-based
  /// a, x1..xd, then y1..yd when localized.
  std::vector<WreathElem> generators() const;
  std::vector<std::string> generator_names() const;

private:
  WreathElem make_t(Residue i, Residue j, Residue k) const;
  std::size_t index_of(Residue i, Residue j, Residue k) const;

  MultiRingPtr ring_;
  std::vector<WreathElem> transversal_;
  std::vector<WreathElem> transversal_inv_;
};

} // namespace selfsim
