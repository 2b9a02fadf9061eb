#include "selfsim/sfraction.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "selfsim/errors.hpp"
#include "selfsim/hashing.hpp"

namespace selfsim {

LocalizedRing::LocalizedRing(Residue p, std::vector<DensePoly> basis) : p_(p), basis_(std::move(basis)) {
  if (basis_.empty() || basis_[0] != DensePoly::x(p))
    throw InvalidConfig("localized ring basis must start with f_0 = x");
  for (const auto &f : basis_)
    if (f.modulus() != p) throw InvalidConfig("basis polynomial over the wrong prime field");
  constexpr int kCachedPowers = 24;
  powers_.resize(basis_.size());
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    powers_[i].push_back(DensePoly::constant(p, 1));
    for (int e = 1; e <= kCachedPowers; ++e) powers_[i].push_back(powers_[i].back() * basis_[i]);
  }
}

DensePoly LocalizedRing::basis_power(std::size_t i, int e) const {
  const auto &pw = powers_.at(i);
  if (e < static_cast<int>(pw.size())) return pw[static_cast<std::size_t>(e)];
  return pw.back() * basis_[i].pow(static_cast<unsigned>(e) - static_cast<unsigned>(pw.size() - 1));
}

SFraction canonicalize(const RingPtr &ring, DensePoly num, Exps den_exps) {
  if (den_exps.size() != ring->size()) throw std::invalid_argument("denominator exponent vector has wrong length");
  SFraction r;
  r.ring_ = ring;
  if (num.is_zero()) {
    r.num_ = DensePoly(ring->modulus());
    r.den_.assign(ring->size(), 0);
    return r;
  }
  for (std::size_t i = 0; i < den_exps.size(); ++i) {
    if (den_exps[i] < 0) throw std::invalid_argument("negative denominator exponent");
    if (i == 0) {
      // f_0 = x: cancel trailing zero coefficients directly.
      unsigned z = 0;
      while (static_cast<int>(z) < den_exps[0] && num.coeff(z) == 0) ++z;
      if (z) {
        num = DensePoly(num.modulus(), Coeffs(num.coeffs().begin() + z, num.coeffs().end()));
        den_exps[0] -= static_cast<int>(z);
      }
      continue;
    }
    while (den_exps[i] > 0) {
      auto q = num.exact_div(ring->basis(i));
      if (!q) break;
      num = std::move(*q);
      --den_exps[i];
    }
  }
  r.num_ = std::move(num);
  r.den_ = std::move(den_exps);
  return r;
}

SFraction::SFraction(RingPtr ring, DensePoly num) : ring_(std::move(ring)), num_(std::move(num)) {
  den_.assign(ring_->size(), 0);
}

SFraction SFraction::zero(const RingPtr &ring) { return SFraction(ring, DensePoly(ring->modulus())); }
SFraction SFraction::one(const RingPtr &ring) { return constant(ring, 1); }
SFraction SFraction::constant(const RingPtr &ring, long long c) {
  return SFraction(ring, DensePoly::constant(ring->modulus(), c));
}

SFraction SFraction::unit(const RingPtr &ring, Residue c, const std::vector<int> &exps) {
  if (c % ring->modulus() == 0) throw std::invalid_argument("unit with zero scalar");
  return constant(ring, c).times_unit(exps);
}

bool SFraction::is_one() const { return num_.is_one() && is_polynomial(); }

bool SFraction::is_polynomial() const {
  for (int e : den_)
    if (e) return false;
  return true;
}

void SFraction::check_same(const SFraction &o) const {
  if (ring_ != o.ring_ && !(*ring_ == *o.ring_)) throw std::invalid_argument("fractions over different rings");
}

namespace {

DensePoly basis_power(const LocalizedRing &ring, std::size_t i, int e) { return ring.basis_power(i, e); }

} // namespace

SFraction SFraction::operator+(const SFraction &o) const {
  check_same(o);
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  Exps den(den_.size());
  DensePoly a = num_, b = o.num_;
  for (std::size_t i = 0; i < den.size(); ++i) {
    den[i] = std::max(den_[i], o.den_[i]);
    if (den[i] > den_[i]) a = a * basis_power(*ring_, i, den[i] - den_[i]);
    if (den[i] > o.den_[i]) b = b * basis_power(*ring_, i, den[i] - o.den_[i]);
  }
  return canonicalize(ring_, a + b, std::move(den));
}

SFraction SFraction::operator-() const {
  SFraction r(*this);
  r.num_ = -num_;
  return r;
}

SFraction SFraction::operator-(const SFraction &o) const { return *this + (-o); }

SFraction SFraction::operator*(const SFraction &o) const {
  check_same(o);
  if (is_zero() || o.is_zero()) return zero(ring_);
  if (o.num_.is_constant() && o.is_polynomial()) return scaled(o.num_.coeff(0));
  if (num_.is_constant() && is_polynomial()) return o.scaled(num_.coeff(0));
  if (is_polynomial() && o.is_polynomial()) return SFraction(ring_, num_ * o.num_);
  Exps den(den_.size());
  for (std::size_t i = 0; i < den.size(); ++i) den[i] = den_[i] + o.den_[i];
  return canonicalize(ring_, num_ * o.num_, std::move(den));
}

SFraction SFraction::scaled(Residue c) const {
  SFraction r(*this);
  r.num_ = num_.scaled(c);
  if (r.num_.is_zero()) r.den_.assign(den_.size(), 0);
  return r;
}

SFraction SFraction::times_unit(const std::vector<int> &exps) const {
  if (exps.size() != den_.size()) throw std::invalid_argument("unit exponent vector has wrong length");
  if (is_zero()) return *this;
  DensePoly num = num_;
  Exps den = den_;
  for (std::size_t i = 0; i < den.size(); ++i) {
    int k = exps[i];
    if (k < 0) {
      den[i] -= k;
    } else if (k > 0) {
      int cancel = std::min(k, den[i]);
      den[i] -= cancel;
      if (k > cancel) num = num * basis_power(*ring_, i, k - cancel);
    }
  }
  return canonicalize(ring_, std::move(num), std::move(den));
}

SFraction SFraction::times_poly(const DensePoly &q) const {
  return canonicalize(ring_, num_ * q, den_);
}

bool SFraction::divisible_by_xm1_pow(unsigned k) const {
  if (is_zero()) return true;
  const DensePoly xm1 = DensePoly::x_minus_one(modulus());
  DensePoly n = num_;
  for (unsigned i = 0; i < k; ++i) {
    auto q = n.exact_div(xm1);
    if (!q) return false;
    n = std::move(*q);
  }
  return true;
}

SFraction SFraction::divide_exact(unsigned k) const {
  if (is_zero()) return *this;
  const DensePoly xm1 = DensePoly::x_minus_one(modulus());
  DensePoly n = num_;
  for (unsigned i = 0; i < k; ++i) {
    auto q = n.exact_div(xm1);
    if (!q) throw NotDivisible("(x-1)^" + std::to_string(k) + " does not divide " + to_string());
    n = std::move(*q);
  }
  // x-1 is coprime to every basis polynomial, so the form stays canonical
  SFraction r(*this);
  r.num_ = std::move(n);
  return r;
}

Residue SFraction::eval_at_one() const {
  const Residue p = modulus();
  Residue den = 1;
  for (std::size_t i = 0; i < den_.size(); ++i)
    if (den_[i]) den = fp::mul(den, fp::pow(ring_->basis(i).eval(1), static_cast<unsigned>(den_[i]), p), p);
  if (den == 0) throw std::domain_error("denominator vanishes at x = 1");
  return fp::mul(num_.eval(1), fp::inv(den, p), p);
}

DensePoly SFraction::reduce_mod_xm1_pow(unsigned k) const {
  const Residue p = modulus();
  if (k == 0 || is_zero()) return DensePoly(p);
  const DensePoly m = DensePoly::x_minus_one(p).pow(k);
  if (is_polynomial()) return poly_divrem(num_, m).second;
  DensePoly den = DensePoly::constant(p, 1);
  for (std::size_t i = 0; i < den_.size(); ++i)
    if (den_[i]) den = den * basis_power(*ring_, i, den_[i]);
  auto inv = den.inverse_mod(m);
  if (!inv) throw std::domain_error("denominator not invertible modulo (x-1)^k");
  return poly_divrem(poly_divrem(num_, m).second * *inv, m).second;
}

std::optional<std::pair<Residue, std::vector<int>>> SFraction::as_unit() const {
  if (is_zero()) return std::nullopt;
  DensePoly n = num_;
  std::vector<int> exps(den_.size());
  for (std::size_t i = 0; i < den_.size(); ++i) {
    exps[i] = -den_[i];
    while (n.degree() > 0) {
      auto q = n.exact_div(ring_->basis(i));
      if (!q) break;
      n = std::move(*q);
      ++exps[i];
    }
  }
  if (n.degree() != 0) return std::nullopt;
  return std::make_pair(n.coeff(0), std::move(exps));
}

std::optional<SFraction> SFraction::try_inverse() const {
  auto u = as_unit();
  if (!u) return std::nullopt;
  std::vector<int> neg(u->second.size());
  for (std::size_t i = 0; i < neg.size(); ++i) neg[i] = -u->second[i];
  return unit(ring_, fp::inv(u->first, modulus()), neg);
}

std::size_t SFraction::hash() const {
  std::size_t h = num_.hash();
  for (int e : den_) hash_combine(h, static_cast<std::size_t>(e));
  return h;
}

std::string SFraction::to_string() const {
  if (is_polynomial()) return num_.to_string();
  std::ostringstream os;
  os << "(" << num_.to_string() << ")/(";
  bool first = true;
  for (std::size_t i = 0; i < den_.size(); ++i) {
    if (!den_[i]) continue;
    if (!first) os << "*";
    first = false;
    os << "f" << i;
    if (den_[i] > 1) os << "^" << den_[i];
  }
  os << ")";
  return os.str();
}

} // namespace selfsim
