#include "selfsim/instances/affine.hpp"

#include "selfsim/errors.hpp"
#include "selfsim/serialize.hpp"

namespace selfsim {

AffineInstance::AffineInstance(Residue p, std::size_t n) : p_(p), n_(n) {
  if (!is_prime(p)) throw InvalidConfig("p = " + std::to_string(p) + " is not prime");
  if (n < 2) throw InvalidConfig("affine family needs n >= 2");
  if (n == 2) warning_ = "n = 2: the group is state closed of degree p but not finitely generated";
  for (Residue a = 0; a < p; ++a) {
    AffineElem t = identity();
    t.v[0] = DensePoly::constant(p, a);
    transversal_.push_back(t);
    transversal_inv_.push_back(invert(t));
  }
}

AffineElem AffineInstance::identity() const { return {ColumnVec(n_, DensePoly(p_)), poly_mat_identity(p_, n_)}; }

AffineElem AffineInstance::multiply(const AffineElem &a, const AffineElem &b) const {
  ColumnVec v = a.b.apply(b.v);
  for (std::size_t i = 0; i < n_; ++i) v[i] += a.v[i];
  return {std::move(v), a.b * b.b};
}

AffineElem AffineInstance::invert(const AffineElem &a) const {
  PolyMat binv = poly_mat_inverse(a.b);
  ColumnVec v = binv.apply(a.v);
  for (auto &e : v) e = -e;
  return {std::move(v), std::move(binv)};
}

bool AffineInstance::h_member(const AffineElem &a) const { return a.v[0].eval(1) == 0; }

std::size_t AffineInstance::coset_index_from(const AffineElem &a, Residue alpha) const {
  const Residue b11 = a.b(0, 0).eval(1);
  if (b11 == 0) throw ContractViolation("b_11(1) = 0: matrix outside B");
  return fp::mul(fp::add(alpha % p_, a.v[0].eval(1), p_), fp::inv(b11, p_), p_);
}

AffineElem AffineInstance::endo(const AffineElem &a) const {
  try {
    return {apply_A(a.v), conj_by_A(a.b)};
  } catch (const NotDivisible &e) {
    throw NotInH(e.what());
  }
}

std::size_t AffineInstance::hash(const AffineElem &a) const {
  std::size_t h = a.b.hash();
  for (const auto &e : a.v) hash_combine(h, e.hash());
  return h;
}

nlohmann::json AffineInstance::to_json(const AffineElem &a) const {
  return {{"v", selfsim::to_json(a.v)}, {"b", selfsim::to_json(a.b)}};
}

std::string AffineInstance::render(const AffineElem &a) const { return to_json(a).dump(); }

bool AffineInstance::in_B(const PolyMat &b) const {
  if (b.size() != n_) return false;
  const DensePoly xm1 = DensePoly::x_minus_one(p_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i + 1; j < n_; ++j)
      if (!b(i, j).is_zero() && !b(i, j).exact_div(xm1)) return false;
  const DensePoly det = determinant(b);
  return det.degree() == 0;
}

AffineElem AffineInstance::make(ColumnVec v, PolyMat b) const {
  if (v.size() != n_) throw std::invalid_argument("vector has the wrong length");
  if (!in_B(b)) throw std::invalid_argument("matrix is not in B(n, F_p[x])");
  return {std::move(v), std::move(b)};
}

AffineElem AffineInstance::from_json(const nlohmann::json &j) const {
  if (!j.is_object() || !j.contains("v") || !j.contains("b"))
    throw ParseError("affine literal must be {\"v\": [...], \"b\": [[...]]}");
  try {
    return make(column_from_json(p_, j.at("v")), poly_mat_from_json(p_, j.at("b")));
  } catch (const std::invalid_argument &e) {
    throw ParseError(e.what());
  }
}

AffineElem AffineInstance::e(std::size_t i) const {
  if (i < 1 || i > n_) throw std::out_of_range("e_i needs 1 <= i <= n");
  AffineElem a = identity();
  a.v[i - 1] = DensePoly::constant(p_, 1);
  return a;
}

AffineElem AffineInstance::elementary(std::size_t i, std::size_t j) const {
  if (i < 1 || j < 1 || i > n_ || j > n_ || i == j) throw std::out_of_range("elementary matrix needs i != j in 1..n");
  AffineElem a = identity();
  a.b(i - 1, j - 1) = i < j ? DensePoly::x_minus_one(p_) : DensePoly::constant(p_, 1);
  return a;
}

AffineElem AffineInstance::diagonal(std::size_t k, Residue c) const {
  if (k < 1 || k > n_ || c % p_ == 0) throw std::out_of_range("diagonal unit needs 1 <= k <= n and c != 0");
  AffineElem a = identity();
  a.b(k - 1, k - 1) = DensePoly::constant(p_, c);
  return a;
}

std::vector<std::string> AffineInstance::generator_names() const {
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= n_; ++i) names.push_back("e" + std::to_string(i));
  for (std::size_t i = 1; i <= n_; ++i)
    for (std::size_t j = 1; j <= n_; ++j)
      if (i != j) names.push_back("E" + std::to_string(i) + "_" + std::to_string(j));
  if (p_ > 2)
    for (std::size_t k = 1; k <= n_; ++k) names.push_back("d" + std::to_string(k));
  return names;
}

std::vector<AffineElem> AffineInstance::generators() const {
  std::vector<AffineElem> g;
  for (std::size_t i = 1; i <= n_; ++i) g.push_back(e(i));
  for (std::size_t i = 1; i <= n_; ++i)
    for (std::size_t j = 1; j <= n_; ++j)
      if (i != j) g.push_back(elementary(i, j));
  if (p_ > 2)
    for (std::size_t k = 1; k <= n_; ++k) g.push_back(diagonal(k, fp::primitive_root(p_)));
  return g;
}

bool AffineInstance::in_Delta(int k, const AffineElem &a) const {
  if (rho(a.v) > k) return false;
  PolyMat c = a.b;
  for (std::size_t j = 0; j < n_; ++j) {
    if (rho(c) > k) return false;
    if (j + 1 < n_) {
      try {
        c = conj_by_A(c);
      } catch (const NotDivisible &) {
        return false;
      }
    }
  }
  return true;
}

} // namespace selfsim
