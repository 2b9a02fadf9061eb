#include "selfsim/instances/borel.hpp"

#include "selfsim/errors.hpp"
#include "selfsim/serialize.hpp"
#include "selfsim/validate.hpp"

namespace selfsim {

namespace {

std::size_t checked_power(std::size_t base, std::size_t exp, std::size_t bound) {
  std::size_t r = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (r > bound / base) return bound + 1;
    r *= base;
  }
  return r;
}

SFraction unit_inverse(const SFraction &u) {
  if (u.is_one()) return u;
  auto inv = u.try_inverse();
  if (!inv) throw std::invalid_argument("diagonal entry " + u.to_string() + " is not a unit");
  return *inv;
}

// Product of upper unitriangular matrices.
Matrix<SFraction> unitri_mul(const Matrix<SFraction> &a, const Matrix<SFraction> &b) {
  const std::size_t m = a.size();
  Matrix<SFraction> r = a;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) {
      SFraction s = a(i, j) + b(i, j);
      for (std::size_t k = i + 1; k < j; ++k)
        if (!a(i, k).is_zero() && !b(k, j).is_zero()) s += a(i, k) * b(k, j);
      r(i, j) = std::move(s);
    }
  return r;
}

} // namespace

BorelInstance::BorelInstance(Residue p, std::size_t m, std::vector<DensePoly> polys) : m_(m) {
  auto report = validate_config(p, polys);
  if (!report.valid) {
    std::string msg = "invalid Borel configuration:";
    for (const auto &v : report.violations) msg += " " + v.message + ";";
    throw InvalidConfig(msg);
  }
  if (m < 2) throw InvalidConfig("Borel family needs m >= 2");
  ring_ = LocalizedRing::make(p, std::move(polys));
  const std::size_t count = checked_power(p, l(), kMaxDegree);
  if (count > kMaxDegree)
    throw InvalidConfig("transversal of size p^" + std::to_string(l()) + " exceeds the enumeration bound");
  const SFraction one = SFraction::one(ring_);
  for (std::size_t idx = 0; idx < count; ++idx) {
    Matrix<SFraction> t = Matrix<SFraction>::identity(m_, one);
    std::size_t rest = idx;
    for (std::size_t i = 0; i < m_; ++i)
      for (std::size_t j = i + 1; j < m_; ++j) {
        std::vector<Residue> c(j - i);
        for (auto &v : c) {
          v = static_cast<Residue>(rest % p);
          rest /= p;
        }
        t(i, j) = SFraction(ring_, DensePoly(p, c));
      }
    transversal_.push_back({std::move(t), std::vector<SFraction>(m_, one), std::vector<SFraction>(m_, one)});
    transversal_inv_.push_back(invert(transversal_.back()));
  }
}

std::size_t BorelInstance::l() const {
  std::size_t s = 0;
  for (std::size_t i = 1; i <= m_; ++i) s += i * (m_ - i);
  return s;
}

BorelElem BorelInstance::identity() const {
  const SFraction one = SFraction::one(ring_);
  return {Matrix<SFraction>::identity(m_, one), std::vector<SFraction>(m_, one), std::vector<SFraction>(m_, one)};
}

BorelElem BorelInstance::normalize(Matrix<SFraction> N, std::vector<SFraction> D) const {
  std::vector<SFraction> Dinv;
  Dinv.reserve(D.size());
  for (const auto &d : D) Dinv.push_back(unit_inverse(d));
  return normalize(std::move(N), std::move(D), std::move(Dinv));
}

BorelElem BorelInstance::normalize(Matrix<SFraction> N, std::vector<SFraction> D, std::vector<SFraction> Dinv) const {
  if (!D[0].is_one()) {
    const SFraction s = Dinv[0], s_inv = D[0];
    for (auto &d : D) d = d * s;
    for (auto &d : Dinv) d = d * s_inv;
  }
  return {std::move(N), std::move(D), std::move(Dinv)};
}

BorelElem BorelInstance::multiply(const BorelElem &a, const BorelElem &b) const {
  // N1 D1 N2 D2 = N1 (D1 N2 D1^{-1}) D1 D2
  Matrix<SFraction> conj = b.N;
  for (std::size_t i = 0; i < m_; ++i)
    for (std::size_t j = i + 1; j < m_; ++j)
      if (!conj(i, j).is_zero()) conj(i, j) = a.D[i] * conj(i, j) * a.Dinv[j];
  std::vector<SFraction> D(m_), Dinv(m_);
  for (std::size_t i = 0; i < m_; ++i) {
    D[i] = a.D[i] * b.D[i];
    Dinv[i] = a.Dinv[i] * b.Dinv[i];
  }
  return normalize(unitri_mul(a.N, conj), std::move(D), std::move(Dinv));
}

BorelElem BorelInstance::invert(const BorelElem &a) const {
  // (N D)^{-1} = (D^{-1} N^{-1} D) D^{-1}
  Matrix<SFraction> ninv = tri_inverse(a.N);
  for (std::size_t i = 0; i < m_; ++i)
    for (std::size_t j = i + 1; j < m_; ++j)
      if (!ninv(i, j).is_zero()) ninv(i, j) = a.Dinv[i] * ninv(i, j) * a.D[j];
  return normalize(std::move(ninv), a.Dinv, a.D);
}

bool BorelInstance::h_member(const BorelElem &a) const {
  for (std::size_t i = 0; i < m_; ++i)
    for (std::size_t j = i + 1; j < m_; ++j)
      if (!a.N(i, j).divisible_by_xm1_pow(static_cast<unsigned>(j - i))) return false;
  return true;
}

std::size_t BorelInstance::transversal_index(const Matrix<SFraction> &t) const {
  const Residue p = this->p();
  std::size_t idx = 0, weight = 1;
  for (std::size_t i = 0; i < m_; ++i)
    for (std::size_t j = i + 1; j < m_; ++j) {
      const SFraction &e = t(i, j);
      if (!e.is_polynomial() || e.poly_degree() >= static_cast<int>(j - i))
        throw ContractViolation("matrix is not a transversal element");
      for (std::size_t k = 0; k < j - i; ++k) {
        idx += weight * e.num().coeff(k);
        weight *= p;
      }
    }
  return idx;
}

std::size_t BorelInstance::coset_index(const BorelElem &a) const {
  // H N D = H D^{-1} N D, and D^{-1} N D = n0 t with n0 in N_0, t in T.
  const auto &dinv = a.Dinv;
  const SFraction one = SFraction::one(ring_);
  Matrix<SFraction> n0 = Matrix<SFraction>::identity(m_, one), t = n0;
  for (std::size_t i = m_; i-- > 0;)
    for (std::size_t j = i + 1; j < m_; ++j) {
      SFraction r = a.N(i, j).is_zero() ? SFraction::zero(ring_) : dinv[i] * a.N(i, j) * a.D[j];
      for (std::size_t k = i + 1; k < j; ++k)
        if (!n0(i, k).is_zero() && !t(k, j).is_zero()) r -= n0(i, k) * t(k, j);
      t(i, j) = SFraction(ring_, r.reduce_mod_xm1_pow(static_cast<unsigned>(j - i)));
      n0(i, j) = r - t(i, j);
    }
  return transversal_index(t);
}

BorelElem BorelInstance::endo(const BorelElem &a) const {
  BorelElem r = a;
  for (std::size_t i = 0; i < m_; ++i)
    for (std::size_t j = i + 1; j < m_; ++j) {
      try {
        r.N(i, j) = a.N(i, j).divide_exact(static_cast<unsigned>(j - i));
      } catch (const NotDivisible &) {
        throw NotInH("entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ") outside I^" +
                     std::to_string(j - i));
      }
    }
  return r;
}

std::size_t BorelInstance::hash(const BorelElem &a) const {
  std::size_t h = a.N.hash();
  for (const auto &d : a.D) hash_combine(h, d.hash());
  return h;
}

nlohmann::json BorelInstance::to_json(const BorelElem &a) const {
  nlohmann::json N = nlohmann::json::array(), D = nlohmann::json::array();
  for (std::size_t i = 0; i < m_; ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t j = 0; j < m_; ++j) row.push_back(selfsim::to_json(a.N(i, j)));
    N.push_back(row);
  }
  for (const auto &d : a.D) D.push_back(selfsim::to_json(d));
  return {{"N", N}, {"D", D}};
}

std::string BorelInstance::render(const BorelElem &a) const { return to_json(a).dump(); }

BorelElem BorelInstance::make(Matrix<SFraction> N, std::vector<SFraction> D) const {
  if (N.size() != m_ || D.size() != m_) throw std::invalid_argument("Borel element has the wrong size");
  for (std::size_t i = 0; i < m_; ++i)
    for (std::size_t j = 0; j <= i; ++j)
      if (i == j ? !N(i, j).is_one() : !N(i, j).is_zero())
        throw std::invalid_argument("N must be upper unitriangular");
  for (const auto &d : D) unit_inverse(d);
  return normalize(std::move(N), std::move(D));
}

BorelElem BorelInstance::from_json(const nlohmann::json &j) const {
  if (!j.is_object() || !j.contains("N") || !j.contains("D"))
    throw ParseError("Borel literal must be {\"N\": [[...]], \"D\": [...]}");
  const auto &jn = j.at("N");
  const auto &jd = j.at("D");
  if (!jn.is_array() || jn.size() != m_ || !jd.is_array() || jd.size() != m_)
    throw ParseError("Borel literal must have " + std::to_string(m_) + " rows and diagonal entries");
  Matrix<SFraction> N(m_, SFraction::zero(ring_));
  for (std::size_t i = 0; i < m_; ++i) {
    if (!jn[i].is_array() || jn[i].size() != m_) throw ParseError("Borel N must be square");
    for (std::size_t k = 0; k < m_; ++k) N(i, k) = sfraction_from_json(ring_, jn[i][k]);
  }
  std::vector<SFraction> D;
  for (const auto &e : jd) D.push_back(sfraction_from_json(ring_, e));
  try {
    return make(std::move(N), std::move(D));
  } catch (const std::invalid_argument &e) {
    throw ParseError(e.what());
  }
}

BorelElem BorelInstance::u(std::size_t i) const {
  if (i < 1 || i >= m_) throw std::out_of_range("u_i needs 1 <= i < m");
  BorelElem e = identity();
  e.N(i - 1, i) = SFraction::one(ring_);
  return e;
}

BorelElem BorelInstance::x(std::size_t k, std::size_t s) const {
  if (k < 1 || k > m_ || s >= rank()) throw std::out_of_range("x_k^(s) needs 1 <= k <= m and s < n");
  BorelElem e = identity();
  e.D[k - 1] = SFraction(ring_, f(s));
  return normalize(std::move(e.N), std::move(e.D));
}

BorelElem BorelInstance::c(std::size_t k, Residue value) const {
  if (k < 1 || k > m_) throw std::out_of_range("c_k needs 1 <= k <= m");
  BorelElem e = identity();
  e.D[k - 1] = SFraction::constant(ring_, value);
  return make(std::move(e.N), std::move(e.D));
}

std::vector<std::string> BorelInstance::generator_names() const {
  std::vector<std::string> names;
  for (std::size_t i = 1; i < m_; ++i) names.push_back("u" + std::to_string(i));
  for (std::size_t k = 1; k <= m_; ++k)
    for (std::size_t s = 0; s < rank(); ++s) names.push_back("x" + std::to_string(k) + "_" + std::to_string(s));
  if (p() > 2)
    for (std::size_t k = 1; k <= m_; ++k) names.push_back("c" + std::to_string(k));
  return names;
}

std::vector<BorelElem> BorelInstance::generators() const {
  std::vector<BorelElem> g;
  for (std::size_t i = 1; i < m_; ++i) g.push_back(u(i));
  for (std::size_t k = 1; k <= m_; ++k)
    for (std::size_t s = 0; s < rank(); ++s) g.push_back(x(k, s));
  if (p() > 2)
    for (std::size_t k = 1; k <= m_; ++k) g.push_back(c(k, fp::primitive_root(p())));
  return g;
}

bool BorelInstance::in_Delta(std::size_t k, std::size_t s, const BorelElem &a) const {
  if (k < 1 || k > m_ || s >= rank()) throw std::out_of_range("Δ_k^(s) needs 1 <= k <= m and s < n");
  const SFraction fs(ring_, f(s)), one = SFraction::one(ring_);
  // Scale the representative by λ so that the diagonal becomes (1, ..., f_s, ..., 1).
  SFraction lambda = one;
  if (k == 1) {
    lambda = fs;
    const SFraction finv = unit_inverse(fs);
    for (std::size_t i = 1; i < m_; ++i)
      if (!(a.D[i] == finv)) return false;
  } else {
    for (std::size_t i = 1; i < m_; ++i)
      if (!(a.D[i] == (i == k - 1 ? fs : one))) return false;
  }
  const int bound = f(s).degree();
  for (std::size_t i = 0; i < m_; ++i)
    for (std::size_t j = i + 1; j < m_; ++j) {
      if (a.N(i, j).is_zero()) continue;
      SFraction e = a.N(i, j) * a.D[j] * lambda;
      if (!e.is_polynomial() || e.poly_degree() > bound) return false;
    }
  return true;
}

std::size_t BorelInstance::Delta_size(std::size_t s) const {
  return checked_power(p(), static_cast<std::size_t>(f(s).degree() + 1) * m_ * (m_ - 1) / 2,
                       std::size_t(1) << 40);
}

bool BorelInstance::claim1_check() const {
  for (const auto &t : transversal_) {
    Matrix<SFraction> inv = tri_inverse(t.N);
    try {
      const std::size_t idx = transversal_index(inv);
      if (!(transversal_[idx].N == inv)) return false;
    } catch (const ContractViolation &) {
      return false;
    }
  }
  return true;
}

Verdict BorelInstance::claim2_check(std::size_t k, std::size_t s, std::size_t cap) const {
  const BorelElem start = x(k, s);
  if (!in_Delta(k, s, start)) return Verdict::fail("x_k^(s) is not in Δ_k^(s)");
  auto res = states_bfs(*this, start, cap);
  if (const auto *ce = std::get_if<CapExceeded>(&res))
    return Verdict::fail("state set exceeds cap " + std::to_string(cap) + " (" + std::to_string(ce->discovered) +
                         " discovered)");
  const auto &a = std::get<MealyAutomaton<BorelElem>>(res);
  for (const auto &q : a.states)
    if (!in_Delta(k, s, q)) return Verdict::fail("state " + render(q) + " leaves Δ_k^(s)");
  return Verdict::pass(std::to_string(a.states.size()) + " states");
}

} // namespace selfsim
