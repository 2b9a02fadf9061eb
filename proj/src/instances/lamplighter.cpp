#include "selfsim/instances/lamplighter.hpp"

#include <sstream>

#include "selfsim/errors.hpp"
#include "selfsim/validate.hpp"

namespace selfsim {

namespace {

std::vector<int> unit_vector(std::size_t n, std::size_t j, int e) {
  std::vector<int> v(n, 0);
  v[j] = e;
  return v;
}

std::vector<int> negated(std::vector<int> v) {
  for (int &e : v) e = -e;
  return v;
}

bool is_zero_vector(const std::vector<int> &v) {
  for (int e : v)
    if (e) return false;
  return true;
}

} // namespace

LamplighterInstance::LamplighterInstance(Residue p, std::vector<DensePoly> polys) {
  auto report = validate_config(p, polys);
  if (!report.lamplighter_valid) {
    std::string msg = "invalid lamplighter configuration:";
    for (const auto &v : report.violations) msg += " " + v.message + ";";
    for (const auto &v : report.lamplighter_violations) msg += " " + v.message + ";";
    throw InvalidConfig(msg);
  }
  ring_ = LocalizedRing::make(p, std::move(polys));
  for (Residue i = 0; i < p; ++i) {
    transversal_.push_back(u_pow(SFraction::constant(ring_, i)));
    transversal_inv_.push_back(invert(transversal_.back()));
  }
}

LampElem LamplighterInstance::identity() const { return {SFraction::zero(ring_), std::vector<int>(rank(), 0)}; }

LampElem LamplighterInstance::multiply(const LampElem &a, const LampElem &b) const {
  std::vector<int> q(a.q);
  for (std::size_t i = 0; i < q.size(); ++i) q[i] += b.q[i];
  return {a.r + b.r.times_unit(negated(a.q)), std::move(q)};
}

LampElem LamplighterInstance::invert(const LampElem &a) const { return {-a.r.times_unit(a.q), negated(a.q)}; }

bool LamplighterInstance::h_member(const LampElem &a) const { return a.r.eval_at_one() == 0; }

std::size_t LamplighterInstance::coset_index(const LampElem &a) const { return a.r.eval_at_one(); }

LampElem LamplighterInstance::endo(const LampElem &a) const {
  if (!h_member(a)) throw NotInH("u^r q with r(1) != 0");
  return {a.r.divide_exact(1), a.q};
}

std::size_t LamplighterInstance::hash(const LampElem &a) const {
  std::size_t h = a.r.hash();
  for (int e : a.q) hash_combine(h, static_cast<std::size_t>(e));
  return h;
}

std::string LamplighterInstance::render(const LampElem &a) const {
  std::vector<std::string> tokens;
  std::vector<int> cur(rank(), 0);
  auto shift_to = [&](const std::vector<int> &target) {
    for (std::size_t j = 0; j < rank(); ++j) {
      int e = target[j] - cur[j];
      if (e == 0) continue;
      tokens.push_back("x" + std::to_string(j) + (e == 1 ? "" : "^" + std::to_string(e)));
    }
    cur = target;
  };
  // u^{c x^k / D} = w u^c w^{-1} with w = den - k e_0.
  const auto &coeffs = a.r.num().coeffs();
  const Residue p = this->p();
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (!coeffs[k]) continue;
    std::vector<int> w(a.r.den_exps().begin(), a.r.den_exps().end());
    w[0] -= static_cast<int>(k);
    shift_to(w);
    long long c = coeffs[k] > p / 2 ? static_cast<long long>(coeffs[k]) - p : coeffs[k];
    tokens.push_back(c == 1 ? "u" : "u^" + std::to_string(c));
  }
  shift_to(a.q);
  if (tokens.empty()) return "e";
  std::string out;
  for (const auto &t : tokens) out += (out.empty() ? "" : " ") + t;
  return out;
}

LampElem LamplighterInstance::u_pow(const SFraction &r) const { return {r, std::vector<int>(rank(), 0)}; }

LampElem LamplighterInstance::x(std::size_t j, int e) const {
  if (j >= rank()) throw std::out_of_range("generator index out of range");
  return {SFraction::zero(ring_), unit_vector(rank(), j, e)};
}

std::vector<LampElem> LamplighterInstance::generators() const {
  std::vector<LampElem> g{u_pow(SFraction::one(ring_))};
  for (std::size_t j = 0; j < rank(); ++j) g.push_back(x(j));
  return g;
}

std::optional<WreathDecomp<LampElem>> LamplighterInstance::closed_form_decompose(const LampElem &a) const {
  const Residue p = this->p();
  const SFraction one = SFraction::one(ring_);
  WreathDecomp<LampElem> d;
  if (is_zero_vector(a.q) && (a.r == one || a.r == -one)) {
    d.states.assign(p, identity());
    d.perm = Perm::cycle_power(p, a.r == one ? 1 : -1);
    return d;
  }
  for (std::size_t j = 0; j < rank(); ++j) {
    if (a.q == unit_vector(rank(), j, 1) && a.r.is_zero()) {
      // x_j = (u^{-i (f_j^{-1} - 1)/(x-1)} x_j)_i
      SFraction step = (SFraction::unit(ring_, 1, unit_vector(rank(), j, -1)) - one).divide_exact(1);
      for (Residue i = 0; i < p; ++i) d.states.push_back({-step.scaled(i), a.q});
      d.perm = Perm::identity(p);
      return d;
    }
    if (a.q == unit_vector(rank(), j, -1) && a.r.is_polynomial()) {
      // u^λ x_j^{-1} = (u^{λ~ - k (f_j - 1)/(x-1)} x_j^{-1})_i, k = i + λ(1)
      const Residue l1 = a.r.eval_at_one();
      SFraction tilde = (a.r - SFraction::constant(ring_, l1)).divide_exact(1);
      SFraction step = SFraction(ring_, f(j) - DensePoly::constant(p, 1)).divide_exact(1);
      std::vector<Letter> image;
      for (Residue i = 0; i < p; ++i) {
        Residue k = fp::add(i, l1, p);
        image.push_back(k);
        d.states.push_back({tilde - step.scaled(k), a.q});
      }
      d.perm = Perm(image);
      return d;
    }
  }
  return std::nullopt;
}

std::vector<std::string> LamplighterInstance::generator_names() const {
  std::vector<std::string> out{"u"};
  for (std::size_t j = 0; j < rank(); ++j) out.push_back("x" + std::to_string(j));
  return out;
}

bool LamplighterInstance::in_Y(std::size_t j, const LampElem &a) const {
  return a.q == unit_vector(rank(), j, -1) && a.r.is_polynomial() && a.r.poly_degree() <= f(j).degree();
}

std::vector<LampElem> LamplighterInstance::Y_elements(std::size_t j) const {
  std::vector<LampElem> out;
  for (const auto &lambda : polys_up_to_degree(p(), f(j).degree()))
    out.push_back({SFraction(ring_, lambda), unit_vector(rank(), j, -1)});
  return out;
}

namespace {

// (s)^{(1)} c: every state equal to s, permutation c.
bool is_diagonal_times(const WreathDecomp<LampElem> &d, const LampElem &s, const Perm &c) {
  if (!(d.perm == c)) return false;
  for (const auto &st : d.states)
    if (!(st == s)) return false;
  return true;
}

} // namespace

Verdict LamplighterInstance::power_identity_check(int i_max, const std::vector<DensePoly> &lambdas) const {
  const Residue p = this->p();
  for (const auto &lambda : lambdas) {
    const Residue l1 = lambda.eval(1);
    auto tilde = SFraction(ring_, lambda - DensePoly::constant(p, l1)).divide_exact(1);
    if (!is_diagonal_times(decompose(*this, u_pow(lambda)), u_pow(tilde), Perm::cycle_power(p, l1)))
      return Verdict::fail("u^λ identity fails for λ = " + lambda.to_string());
  }
  DensePoly partial(p);  // 1 + x + ... + x^{i-1}
  for (int i = 1; i <= i_max; ++i) {
    partial = partial + DensePoly::monomial(p, 1, static_cast<unsigned>(i - 1));
    auto lhs = decompose(*this, u_pow(DensePoly::monomial(p, 1, static_cast<unsigned>(i))));
    if (!is_diagonal_times(lhs, u_pow(partial), Perm::cycle_power(p, 1)))
      return Verdict::fail("u^{x^i} identity fails for i = " + std::to_string(i));
  }
  return Verdict::pass();
}

Verdict LamplighterInstance::Y_closure_check(std::size_t j, std::size_t cap) const {
  if (j >= rank()) throw std::out_of_range("generator index out of range");
  for (const auto &y : Y_elements(j)) {
    auto res = states_bfs(*this, y, cap);
    if (std::holds_alternative<CapExceeded>(res)) return Verdict::fail("state set of " + render(y) + " exceeds the cap");
    for (const auto &s : std::get<MealyAutomaton<LampElem>>(res).states)
      if (!in_Y(j, s)) return Verdict::fail("state " + render(s) + " of " + render(y) + " leaves Y_j");
  }
  return Verdict::pass();
}

} // namespace selfsim
