#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "selfsim/engine.hpp"
#include "selfsim/matrix.hpp"

namespace selfsim {

/// (v, b): the affine map w -> v + b w with v in F_p[x]^n and b in B.
struct AffineElem {
  ColumnVec v;
  PolyMat b;

  friend bool operator==(const AffineElem &, const AffineElem &) = default;
};

/// V ⋊ B(n, F_p[x]), where B consists of the invertible matrices whose
/// superdiagonal entries lie in (x-1)F_p[x]. H = V_0 ⋊ B with
/// V_0 = (x-1)F_p[x] × F_p[x]^{n-1}, transversal {(α e_1, I)} and
/// f(v, b) = (A v, A b A^{-1}).
class AffineInstance {
public:
  using Element = AffineElem;

  AffineInstance(Residue p, std::size_t n);

  Residue p() const { return p_; }
  std::size_t n() const { return n_; }
  /// Set when n = 2: the group is state closed but not finitely generated.
  const std::string &warning() const { return warning_; }

  std::size_t degree() const { return p_; }
  AffineElem identity() const;
  AffineElem multiply(const AffineElem &a, const AffineElem &b) const;
  AffineElem invert(const AffineElem &a) const;
  const std::vector<AffineElem> &transversal() const { return transversal_; }
  const std::vector<AffineElem> &transversal_inverses() const { return transversal_inv_; }
  bool h_member(const AffineElem &a) const;
  /// Index of the coset of t_α a: (α + v_1(1)) b_11(1)^{-1}.
  std::size_t coset_index_from(const AffineElem &a, Residue alpha) const;
  std::size_t coset_index(const AffineElem &a) const { return coset_index_from(a, 0); }
  /// Throws NotInH outside H.
  AffineElem endo(const AffineElem &a) const;
  std::size_t hash(const AffineElem &a) const;
  /// Compact JSON literal {"b": ..., "v": ...}.
  std::string render(const AffineElem &a) const;

  /// Throws std::invalid_argument unless b lies in B.
  AffineElem make(ColumnVec v, PolyMat b) const;
  bool in_B(const PolyMat &b) const;
  nlohmann::json to_json(const AffineElem &a) const;
  AffineElem from_json(const nlohmann::json &j) const;

  /// (e_i, I), 1 <= i <= n.
  AffineElem e(std::size_t i) const;
  /// I + (x-1) E_ij for i < j and I + E_ij for i > j (1-based).
  AffineElem elementary(std::size_t i, std::size_t j) const;
  /// diag(1, ..., c, ..., 1).
  AffineElem diagonal(std::size_t k, Residue c) const;
  /// A fixed sample of elements; not claimed to generate.
  std::vector<std::string> generator_names() const;
  std::vector<AffineElem> generators() const;

  /// ρ(v) <= k and ρ(A^j b A^{-j}) <= k for 0 <= j < n.
  bool in_Delta(int k, const AffineElem &a) const;

private:
  Residue p_;
  std::size_t n_;
  std::string warning_;
  std::vector<AffineElem> transversal_;
  std::vector<AffineElem> transversal_inv_;
};

} // namespace selfsim
