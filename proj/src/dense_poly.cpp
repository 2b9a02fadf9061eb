#include "selfsim/dense_poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "selfsim/errors.hpp"
#include "selfsim/hashing.hpp"

namespace selfsim {

DensePoly::DensePoly(Residue p, Coeffs coeffs) : p_(p), c_(std::move(coeffs)) {
  for (auto &c : c_) c %= p_;
  trim();
}

DensePoly::DensePoly(Residue p, const std::vector<Residue> &coeffs)
    : DensePoly(p, Coeffs(coeffs.begin(), coeffs.end())) {}

DensePoly::DensePoly(Residue p, std::initializer_list<long long> coeffs) : p_(p) {
  c_.reserve(coeffs.size());
  for (long long c : coeffs) c_.push_back(fp::reduce(c, p));
  trim();
}

DensePoly DensePoly::constant(Residue p, long long c) { return DensePoly(p, {c}); }

DensePoly DensePoly::monomial(Residue p, long long c, unsigned degree) {
  Coeffs v(degree + 1, 0);
  v[degree] = fp::reduce(c, p);
  return DensePoly(p, std::move(v));
}

DensePoly DensePoly::x_minus_one(Residue p) { return DensePoly(p, {-1, 1}); }

void DensePoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

void DensePoly::check_same(const DensePoly &o) const {
  if (p_ != o.p_) throw std::invalid_argument("polynomials over different prime fields");
}

Residue DensePoly::eval(Residue at) const {
  Residue r = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = fp::add(fp::mul(r, at, p_), *it, p_);
  return r;
}

DensePoly DensePoly::operator+(const DensePoly &o) const {
  check_same(o);
  DensePoly r(p_);
  r.c_.resize(std::max(c_.size(), o.c_.size()), 0);
  for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = fp::add(coeff(i), o.coeff(i), p_);
  r.trim();
  return r;
}

DensePoly DensePoly::operator-(const DensePoly &o) const {
  check_same(o);
  DensePoly r(p_);
  r.c_.resize(std::max(c_.size(), o.c_.size()), 0);
  for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = fp::sub(coeff(i), o.coeff(i), p_);
  r.trim();
  return r;
}

DensePoly DensePoly::operator-() const {
  DensePoly r(*this);
  for (auto &c : r.c_) c = fp::neg(c, p_);
  return r;
}

DensePoly DensePoly::operator*(const DensePoly &o) const {
  check_same(o);
  if (is_zero() || o.is_zero()) return DensePoly(p_);
  boost::container::small_vector<std::uint64_t, 16> acc(c_.size() + o.c_.size() - 1, 0);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) {
      acc[i + j] += static_cast<std::uint64_t>(c_[i]) * o.c_[j];
      if (acc[i + j] >= (1ULL << 62)) acc[i + j] %= p_;
    }
  }
  DensePoly r(p_);
  r.c_.resize(acc.size());
  for (std::size_t k = 0; k < acc.size(); ++k) r.c_[k] = static_cast<Residue>(acc[k] % p_);
  r.trim();
  return r;
}

DensePoly DensePoly::scaled(Residue c) const {
  c %= p_;
  if (c == 0) return DensePoly(p_);
  DensePoly r(*this);
  for (auto &v : r.c_) v = fp::mul(v, c, p_);
  return r;
}

DensePoly DensePoly::pow(unsigned e) const {
  DensePoly r = one_like();
  DensePoly b = *this;
  while (e) {
    if (e & 1) r = r * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return r;
}

DensePoly DensePoly::shifted(unsigned k) const {
  if (is_zero() || k == 0) return *this;
  DensePoly r(p_);
  r.c_.assign(k, 0);
  r.c_.insert(r.c_.end(), c_.begin(), c_.end());
  return r;
}

std::pair<DensePoly, DensePoly> poly_divrem(const DensePoly &a, const DensePoly &b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  if (a.modulus() != b.modulus() && !a.is_zero())
    throw std::invalid_argument("polynomials over different prime fields");
  const Residue p = b.modulus();
  if (a.degree() < b.degree()) return {DensePoly(p), a};
  Coeffs rem = a.coeffs();
  const auto &bc = b.coeffs();
  const std::size_t db = bc.size() - 1;
  const Residue lead_inv = bc.back() == 1 ? 1 : fp::inv(bc.back(), p);
  Coeffs q(rem.size() - db, 0);
  for (std::size_t k = rem.size(); k-- > db;) {
    Residue c = fp::mul(rem[k], lead_inv, p);
    if (c == 0) continue;
    q[k - db] = c;
    for (std::size_t j = 0; j <= db; ++j) rem[k - db + j] = fp::sub(rem[k - db + j], fp::mul(c, bc[j], p), p);
  }
  rem.resize(db);
  return {DensePoly(p, std::move(q)), DensePoly(p, std::move(rem))};
}

std::optional<DensePoly> DensePoly::exact_div(const DensePoly &d) const {
  auto [q, r] = poly_divrem(*this, d);
  if (!r.is_zero()) return std::nullopt;
  return q;
}

std::optional<DensePoly> DensePoly::try_inverse() const {
  if (degree() != 0) return std::nullopt;
  return constant(p_, fp::inv(c_[0], p_));
}

DensePoly poly_gcd(DensePoly a, DensePoly b) {
  while (!b.is_zero()) {
    auto r = poly_divrem(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return a.scaled(fp::inv(a.leading(), a.modulus()));
}

std::optional<DensePoly> DensePoly::inverse_mod(const DensePoly &m) const {
  if (m.degree() < 1) throw std::invalid_argument("inverse_mod needs a nonconstant modulus");
  DensePoly r0 = m, r1 = poly_divrem(*this, m).second;
  DensePoly s0(p_), s1 = one_like();
  while (!r1.is_zero()) {
    auto [q, r] = poly_divrem(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    DensePoly t = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(t);
  }
  if (r0.degree() != 0) return std::nullopt;
  return poly_divrem(s0.scaled(fp::inv(r0.leading(), p_)), m).second;
}

std::size_t DensePoly::hash() const {
  std::size_t h = p_;
  for (auto c : c_) hash_combine(h, c);
  return h;
}

std::string DensePoly::to_string(const std::string &var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = c_.size(); i-- > 0;) {
    Residue c = c_[i];
    if (c == 0) continue;
    if (!first) os << "+";
    first = false;
    if (i == 0) {
      os << c;
      continue;
    }
    if (c != 1) os << c << "*";
    os << var;
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

std::vector<DensePoly> monic_polys_of_degree(Residue p, unsigned degree) {
  std::vector<DensePoly> out;
  std::vector<Residue> c(degree + 1, 0);
  c[degree] = 1;
  while (true) {
    out.emplace_back(p, c);
    std::size_t k = 0;
    while (k < degree && ++c[k] == p) c[k++] = 0;
    if (k == degree) break;
  }
  return out;
}

std::vector<DensePoly> polys_up_to_degree(Residue p, int max_degree) {
  std::vector<DensePoly> out;
  if (max_degree < 0) {
    out.emplace_back(p);
    return out;
  }
  std::vector<Residue> c(static_cast<std::size_t>(max_degree) + 1, 0);
  while (true) {
    out.emplace_back(p, c);
    std::size_t k = 0;
    while (k < c.size() && ++c[k] == p) c[k++] = 0;
    if (k == c.size()) break;
  }
  return out;
}

bool is_irreducible(const DensePoly &f) {
  const int d = f.degree();
  if (d < 1) return false;
  for (int k = 1; 2 * k <= d; ++k)
    for (const auto &g : monic_polys_of_degree(f.modulus(), static_cast<unsigned>(k)))
      if (poly_divrem(f, g).second.is_zero()) return false;
  return true;
}

} // namespace selfsim
