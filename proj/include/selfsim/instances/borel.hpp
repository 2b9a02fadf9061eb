#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "selfsim/engine.hpp"
#include "selfsim/matrix.hpp"
#include "selfsim/sfraction.hpp"

namespace selfsim {

/// N D with N unitriangular and D diagonal over A, modulo scalar matrices:
/// the representative has d_1 = 1.
struct BorelElem {
  Matrix<SFraction> N;
  std::vector<SFraction> D;
  std::vector<SFraction> Dinv; // entrywise inverse of D, kept alongside

  friend bool operator==(const BorelElem &a, const BorelElem &b) { return a.N == b.N && a.D == b.D; }
};

/// Upper triangular matrices over A = F_p[x^{±1}, 1/f_1, ..., 1/f_{n-1}]
/// modulo the center. H consists of the N D with N_ij in (x-1)^{j-i} A,
/// the transversal of unitriangular matrices with deg a_ij < j - i, and
/// f divides N_ij by (x-1)^{j-i}.
class BorelInstance {
public:
  using Element = BorelElem;

  /// Enumeration bound on the transversal size p^l.
  static constexpr std::size_t kMaxDegree = 1u << 16;

  BorelInstance(Residue p, std::size_t m, std::vector<DensePoly> polys);

  Residue p() const { return ring_->modulus(); }
  std::size_t m() const { return m_; }
  std::size_t rank() const { return ring_->size(); }
  const RingPtr &ring() const { return ring_; }
  const DensePoly &f(std::size_t s) const { return ring_->basis(s); }
  /// l = sum_{i=1}^{m} i (m - i).
  std::size_t l() const;

  std::size_t degree() const { return transversal_.size(); }
  BorelElem identity() const;
  BorelElem multiply(const BorelElem &a, const BorelElem &b) const;
  BorelElem invert(const BorelElem &a) const;
  const std::vector<BorelElem> &transversal() const { return transversal_; }
  const std::vector<BorelElem> &transversal_inverses() const { return transversal_inv_; }
  bool h_member(const BorelElem &a) const;
  /// Closed-form coset index by peeling off an element of N_0 row by row.
  std::size_t coset_index(const BorelElem &a) const;
  /// Throws NotInH outside H.
  BorelElem endo(const BorelElem &a) const;
  std::size_t hash(const BorelElem &a) const;
  /// Compact JSON literal {"N": ..., "D": ...}.
  std::string render(const BorelElem &a) const;

  /// Build from N and D, normalizing modulo the center. Throws
  /// std::invalid_argument unless N is unitriangular and D consists of units.
  BorelElem make(Matrix<SFraction> N, std::vector<SFraction> D) const;
  nlohmann::json to_json(const BorelElem &a) const;
  BorelElem from_json(const nlohmann::json &j) const;

  /// I + E_{i,i+1}, 1 <= i < m.
  BorelElem u(std::size_t i) const;
  /// diag(1, ..., f_s, ..., 1) with f_s in position k, 1 <= k <= m.
  BorelElem x(std::size_t k, std::size_t s) const;
  /// diag(1, ..., c, ..., 1) for a unit c of F_p.
  BorelElem c(std::size_t k, Residue value) const;
  /// Names and elements of the default generating set.
  std::vector<std::string> generator_names() const;
  std::vector<BorelElem> generators() const;

  /// Membership in Δ_k^{(s)}: upper triangular, diagonal (1, ..., f_s, ..., 1)
  /// up to the center, off-diagonal entries polynomials of degree <= deg f_s.
  bool in_Delta(std::size_t k, std::size_t s, const BorelElem &a) const;
  /// |Δ_k^{(s)}| = p^{(deg f_s + 1) m (m - 1) / 2}.
  std::size_t Delta_size(std::size_t s) const;
  /// The inverse of every transversal element lies in the transversal.
  bool claim1_check() const;
  /// Q(x_k^{(s)}) is finite within `cap` and lies in Δ_k^{(s)}.
  Verdict claim2_check(std::size_t k, std::size_t s, std::size_t cap) const;

  /// Index of a unitriangular polynomial matrix with deg a_ij < j - i.
  std::size_t transversal_index(const Matrix<SFraction> &t) const;

private:
  BorelElem normalize(Matrix<SFraction> N, std::vector<SFraction> D) const;
  BorelElem normalize(Matrix<SFraction> N, std::vector<SFraction> D, std::vector<SFraction> Dinv) const;

  RingPtr ring_;
  std::size_t m_;
  std::vector<BorelElem> transversal_;
  std::vector<BorelElem> transversal_inv_;
};

} // namespace selfsim
