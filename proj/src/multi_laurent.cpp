#include "selfsim/multi_laurent.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "selfsim/errors.hpp"
#include "selfsim/hashing.hpp"

namespace selfsim {

MultiLaurent MultiLaurent::constant(Residue p, std::size_t d, long long c) {
  MultiLaurent r(p, d);
  r.add_term(Exponents(d, 0), fp::reduce(c, p));
  return r;
}

MultiLaurent MultiLaurent::monomial(Residue p, const Exponents &e, long long c) {
  MultiLaurent r(p, e.size());
  r.add_term(e, fp::reduce(c, p));
  return r;
}

MultiLaurent MultiLaurent::univariate(const DensePoly &g, std::size_t d, std::size_t var) {
  MultiLaurent r(g.modulus(), d);
  Exponents e(d, 0);
  for (std::size_t k = 0; k < g.coeffs().size(); ++k) {
    e[var] = static_cast<int>(k);
    r.add_term(e, g.coeffs()[k]);
  }
  return r;
}

void MultiLaurent::add_term(const Exponents &e, Residue c) {
  if (e.size() != d_) throw std::invalid_argument("exponent vector has wrong length");
  c %= p_;
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second = fp::add(it->second, c, p_);
    if (it->second == 0) terms_.erase(it);
  }
}

void MultiLaurent::check_same(const MultiLaurent &o) const {
  if (p_ != o.p_ || d_ != o.d_) throw std::invalid_argument("Laurent polynomials over different rings");
}

MultiLaurent MultiLaurent::operator+(const MultiLaurent &o) const {
  check_same(o);
  MultiLaurent r(*this);
  for (const auto &[e, c] : o.terms_) r.add_term(e, c);
  return r;
}

MultiLaurent MultiLaurent::operator-() const {
  MultiLaurent r(*this);
  for (auto &kv : r.terms_) kv.second = fp::neg(kv.second, p_);
  return r;
}

MultiLaurent MultiLaurent::operator-(const MultiLaurent &o) const { return *this + (-o); }

MultiLaurent MultiLaurent::operator*(const MultiLaurent &o) const {
  check_same(o);
  MultiLaurent r(p_, d_);
  Exponents e(d_);
  for (const auto &[ea, ca] : terms_)
    for (const auto &[eb, cb] : o.terms_) {
      for (std::size_t i = 0; i < d_; ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, fp::mul(ca, cb, p_));
    }
  return r;
}

MultiLaurent MultiLaurent::scaled(Residue c) const {
  c %= p_;
  MultiLaurent r(p_, d_);
  if (c == 0) return r;
  r.terms_ = terms_;
  for (auto &kv : r.terms_) kv.second = fp::mul(kv.second, c, p_);
  return r;
}

MultiLaurent MultiLaurent::shifted(const Exponents &s) const {
  if (s.size() != d_) throw std::invalid_argument("shift vector has wrong length");
  MultiLaurent r(p_, d_);
  for (const auto &[e, c] : terms_) {
    Exponents f = e;
    for (std::size_t i = 0; i < d_; ++i) f[i] += s[i];
    r.terms_.emplace_hint(r.terms_.end(), std::move(f), c);
  }
  return r;
}

MultiLaurent MultiLaurent::pow(unsigned e) const {
  MultiLaurent r = constant(p_, d_, 1), b = *this;
  while (e) {
    if (e & 1) r = r * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return r;
}

Residue MultiLaurent::augmentation() const {
  Residue s = 0;
  for (const auto &kv : terms_) s = fp::add(s, kv.second, p_);
  return s;
}

std::optional<MultiLaurent> MultiLaurent::divide_by_univariate(const DensePoly &g, std::size_t var) const {
  if (g.is_zero()) throw std::domain_error("division by the zero polynomial");
  if (var >= d_) throw std::out_of_range("variable index out of range");
  // g = x^j * g0 with g0(0) != 0; x is a unit of the Laurent ring.
  int j = 0;
  while (g.coeff(static_cast<std::size_t>(j)) == 0) ++j;
  DensePoly g0(p_, Coeffs(g.coeffs().begin() + j, g.coeffs().end()));

  // Group terms by the exponents of the other variables.
  std::map<Exponents, std::vector<std::pair<int, Residue>>> groups;
  for (const auto &[e, c] : terms_) {
    Exponents key = e;
    key[var] = 0;
    groups[key].emplace_back(e[var], c);
  }
  MultiLaurent r(p_, d_);
  for (auto &[key, column] : groups) {
    int lo = column.front().first, hi = lo;
    for (const auto &[k, c] : column) {
      lo = std::min(lo, k);
      hi = std::max(hi, k);
    }
    std::vector<Residue> coeffs(static_cast<std::size_t>(hi - lo) + 1, 0);
    for (const auto &[k, c] : column) coeffs[static_cast<std::size_t>(k - lo)] = c;
    auto q = DensePoly(p_, std::move(coeffs)).exact_div(g0);
    if (!q) return std::nullopt;
    Exponents e = key;
    for (std::size_t k = 0; k < q->coeffs().size(); ++k) {
      e[var] = static_cast<int>(k) + lo - j;
      r.add_term(e, q->coeffs()[k]);
    }
  }
  return r;
}

std::size_t MultiLaurent::hash() const {
  std::size_t h = d_;
  for (const auto &[e, c] : terms_) {
    for (int v : e) hash_combine(h, static_cast<std::size_t>(v));
    hash_combine(h, c);
  }
  return h;
}

std::string MultiLaurent::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto &[e, c] : terms_) {
    if (!first) os << "+";
    first = false;
    bool any = false;
    std::ostringstream mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (!e[i]) continue;
      if (any) mono << "*";
      any = true;
      mono << "x" << i + 1;
      if (e[i] != 1) mono << "^" << e[i];
    }
    if (!any) {
      os << c;
    } else {
      if (c != 1) os << c << "*";
      os << mono.str();
    }
  }
  return os.str();
}

// ---------------------------------------------------------------------------

MultiSFraction canonicalize(const MultiRingPtr &ring, MultiLaurent num, std::vector<int> den) {
  if (den.size() != ring->d) throw std::invalid_argument("denominator exponent vector has wrong length");
  MultiSFraction r;
  r.ring_ = ring;
  if (num.is_zero()) {
    r.num_ = MultiLaurent(ring->p, ring->d);
    r.den_.assign(ring->d, 0);
    return r;
  }
  for (std::size_t i = 0; i < den.size(); ++i) {
    if (den[i] < 0) throw std::invalid_argument("negative denominator exponent");
    if (den[i] > 0 && !ring->localized()) throw std::domain_error("denominator in an unlocalized ring");
    while (den[i] > 0) {
      auto q = num.divide_by_univariate(ring->g, i);
      if (!q) break;
      num = std::move(*q);
      --den[i];
    }
  }
  r.num_ = std::move(num);
  r.den_ = std::move(den);
  return r;
}

MultiSFraction::MultiSFraction(MultiRingPtr ring, MultiLaurent num) : ring_(std::move(ring)), num_(std::move(num)) {
  if (num_.vars() != ring_->d || num_.modulus() != ring_->p)
    throw std::invalid_argument("numerator does not belong to the ring");
  den_.assign(ring_->d, 0);
}

MultiSFraction MultiSFraction::zero(const MultiRingPtr &ring) {
  return MultiSFraction(ring, MultiLaurent(ring->p, ring->d));
}

MultiSFraction MultiSFraction::constant(const MultiRingPtr &ring, long long c) {
  return MultiSFraction(ring, MultiLaurent::constant(ring->p, ring->d, c));
}

bool MultiSFraction::is_laurent() const {
  return std::all_of(den_.begin(), den_.end(), [](int z) { return z == 0; });
}

namespace {

MultiLaurent g_power(const MultiLocalizedRing &ring, std::size_t var, int e) {
  return MultiLaurent::univariate(ring.g, ring.d, var).pow(static_cast<unsigned>(e));
}

} // namespace

MultiSFraction MultiSFraction::operator+(const MultiSFraction &o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  std::vector<int> den(den_.size());
  MultiLaurent a = num_, b = o.num_;
  for (std::size_t i = 0; i < den.size(); ++i) {
    den[i] = std::max(den_[i], o.den_[i]);
    if (den[i] > den_[i]) a = a * g_power(*ring_, i, den[i] - den_[i]);
    if (den[i] > o.den_[i]) b = b * g_power(*ring_, i, den[i] - o.den_[i]);
  }
  return canonicalize(ring_, a + b, std::move(den));
}

MultiSFraction MultiSFraction::operator-() const {
  MultiSFraction r(*this);
  r.num_ = -num_;
  return r;
}

MultiSFraction MultiSFraction::operator-(const MultiSFraction &o) const { return *this + (-o); }

MultiSFraction MultiSFraction::operator*(const MultiSFraction &o) const {
  if (is_zero() || o.is_zero()) return zero(ring_);
  std::vector<int> den(den_.size());
  for (std::size_t i = 0; i < den.size(); ++i) den[i] = den_[i] + o.den_[i];
  return canonicalize(ring_, num_ * o.num_, std::move(den));
}

MultiSFraction MultiSFraction::scaled(Residue c) const {
  return canonicalize(ring_, num_.scaled(c), den_);
}

MultiSFraction MultiSFraction::shifted(const Exponents &e) const {
  MultiSFraction r(*this);
  r.num_ = num_.shifted(e);
  return r;
}

MultiSFraction MultiSFraction::times_g_powers(const std::vector<int> &k) const {
  if (k.size() != den_.size()) throw std::invalid_argument("g-exponent vector has wrong length");
  if (is_zero()) return *this;
  MultiLaurent num = num_;
  std::vector<int> den = den_;
  for (std::size_t i = 0; i < den.size(); ++i) {
    if (k[i] < 0) {
      den[i] -= k[i];
    } else if (k[i] > 0) {
      int cancel = std::min(k[i], den[i]);
      den[i] -= cancel;
      if (k[i] > cancel) num = num * g_power(*ring_, i, k[i] - cancel);
    }
  }
  return canonicalize(ring_, std::move(num), std::move(den));
}

Residue MultiSFraction::eval_at_ones() const {
  const Residue p = ring_->p;
  int total = 0;
  for (int z : den_) total += z;
  Residue den = 1;
  if (total) {
    Residue g1 = ring_->g.eval(1);
    if (g1 == 0) throw std::domain_error("g(1) = 0: denominator vanishes at the augmentation point");
    den = fp::pow(g1, static_cast<unsigned>(total), p);
  }
  return fp::mul(num_.augmentation(), fp::inv(den, p), p);
}

std::size_t MultiSFraction::hash() const {
  std::size_t h = num_.hash();
  for (int z : den_) hash_combine(h, static_cast<std::size_t>(z));
  return h;
}

std::string MultiSFraction::to_string() const {
  if (is_laurent()) return num_.to_string();
  std::ostringstream os;
  os << "(" << num_.to_string() << ")/(";
  bool first = true;
  for (std::size_t i = 0; i < den_.size(); ++i) {
    if (!den_[i]) continue;
    if (!first) os << "*";
    first = false;
    os << "g(x" << i + 1 << ")";
    if (den_[i] > 1) os << "^" << den_[i];
  }
  os << ")";
  return os.str();
}

} // namespace selfsim
