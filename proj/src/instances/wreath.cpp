#include "selfsim/instances/wreath.hpp"

#include "selfsim/errors.hpp"
#include "selfsim/hashing.hpp"

namespace selfsim {

namespace {

long long mod(long long a, long long p) { return ((a % p) + p) % p; }

std::vector<int> negated(std::vector<int> v) {
  for (int &e : v) e = -e;
  return v;
}

std::vector<int> sum(std::vector<int> a, const std::vector<int> &b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

void check_g(Residue p, const DensePoly &g) {
  if (g.modulus() != p) throw InvalidConfig("g is over the wrong prime field");
  std::size_t nonzero = 0;
  for (auto c : g.coeffs()) nonzero += c != 0;
  if (nonzero <= 1) throw InvalidConfig("g must not be of the form c x^j");
  if (g.eval(1) == 0) throw InvalidConfig("g must not be divisible by x - 1");
}

} // namespace

WreathInstance::WreathInstance(Residue p, std::size_t d) : WreathInstance(p, d, DensePoly(p)) {}

WreathInstance::WreathInstance(Residue p, std::size_t d, DensePoly g) {
  if (!is_prime(p)) throw InvalidConfig("p must be prime");
  if (d < 1) throw InvalidConfig("d must be at least 1");
  if (!g.is_zero()) check_g(p, g);
  ring_ = MultiLocalizedRing::make(p, d, std::move(g));
  const Residue kmax = localized() ? p : 1;
  for (Residue k = 0; k < kmax; ++k)
    for (Residue j = 0; j < p; ++j)
      for (Residue i = 0; i < p; ++i) transversal_.push_back(make_t(i, j, k));
  for (const auto &t : transversal_) transversal_inv_.push_back(invert(t));
}

WreathElem WreathInstance::make_t(Residue i, Residue j, Residue k) const {
  WreathElem t = identity();
  t.r = MultiSFraction::constant(ring_, i);
  t.q[0] = static_cast<int>(j);
  t.y[0] = static_cast<int>(k);
  return t;
}

std::size_t WreathInstance::index_of(Residue i, Residue j, Residue k) const {
  return i + p() * (j + p() * k);
}

WreathElem WreathInstance::identity() const {
  return {MultiSFraction::zero(ring_), std::vector<int>(d(), 0), std::vector<int>(d(), 0)};
}

WreathElem WreathInstance::multiply(const WreathElem &a, const WreathElem &b) const {
  MultiSFraction moved = b.r.shifted(negated(a.q));
  if (localized()) moved = moved.times_g_powers(negated(a.y));
  return {a.r + moved, sum(a.q, b.q), sum(a.y, b.y)};
}

WreathElem WreathInstance::invert(const WreathElem &a) const {
  MultiSFraction r = -a.r.shifted(a.q);
  if (localized()) r = r.times_g_powers(a.y);
  return {r, negated(a.q), negated(a.y)};
}

bool WreathInstance::h_member(const WreathElem &a) const {
  const long long p = this->p();
  return a.r.eval_at_ones() == 0 && mod(a.q[0], p) == 0 && mod(a.y[0], p) == 0;
}

std::size_t WreathInstance::coset_index(const WreathElem &a) const {
  const Residue p = this->p();
  const auto j = static_cast<Residue>(mod(a.q[0], p));
  const auto k = static_cast<Residue>(mod(a.y[0], p));
  Residue i = a.r.eval_at_ones();
  if (localized()) {
    long long e = -static_cast<long long>(k);
    for (int v : a.y) e += v;
    Residue g1 = g().eval(1);
    if (e < 0) {
      g1 = fp::inv(g1, p);
      e = -e;
    }
    i = fp::mul(i, fp::pow(g1, static_cast<unsigned long long>(e), p), p);
  }
  return index_of(i, j, k);
}

std::vector<int> WreathInstance::sigma(const std::vector<int> &z) const {
  const std::size_t d = this->d();
  const int p = static_cast<int>(this->p());
  if (z.size() != d) throw std::invalid_argument("exponent vector has wrong length");
  if (mod(z[0], p) != 0) throw NotInH("first exponent is not divisible by p");
  std::vector<int> out(d);
  if (d == 1) {
    out[0] = z[0] / p;
    return out;
  }
  out[0] = z[d - 1];
  out[1] = z[0] / p;
  for (std::size_t k = 1; k + 1 < d; ++k) out[k + 1] = z[k];
  return out;
}

MultiLaurent WreathInstance::endo_A(const MultiLaurent &r) const {
  if (r.augmentation() != 0) throw NotInH("a-part outside the augmentation ideal");
  const Residue p = this->p();
  MultiLaurent out(p, d());
  for (const auto &[w, c] : r.terms()) {
    const auto i = static_cast<Residue>(mod(w[0], p));
    if (i == 0) continue;
    Exponents z = w;
    z[0] -= static_cast<int>(i);
    out.add_term(sigma(z), fp::mul(c, i, p));
  }
  return out;
}

MultiSFraction WreathInstance::endo_A_localized(const MultiSFraction &r, int extra_periods) const {
  if (extra_periods < 0) throw std::invalid_argument("extra_periods must be nonnegative");
  const int p = static_cast<int>(this->p());
  std::vector<int> z = r.den_exps();
  int k = static_cast<int>(mod(-z[0], p)) + p * extra_periods;
  MultiLaurent num = r.num();
  if (k > 0) num = num * MultiLaurent::univariate(g(), d(), 0).pow(static_cast<unsigned>(k));
  z[0] += k;
  if (!localized()) return MultiSFraction(ring_, endo_A(num));
  return canonicalize(ring_, endo_A(num), sigma(z));
}

WreathElem WreathInstance::endo(const WreathElem &a) const {
  if (!h_member(a)) throw NotInH("element is outside H");
  WreathElem out{endo_A_localized(a.r), sigma(a.q), std::vector<int>(d(), 0)};
  if (localized()) out.y = sigma(a.y);
  return out;
}

std::size_t WreathInstance::hash(const WreathElem &a) const {
  std::size_t h = a.r.hash();
  for (int e : a.q) hash_combine(h, static_cast<std::size_t>(e));
  for (int e : a.y) hash_combine(h, static_cast<std::size_t>(e));
  return h;
}

std::string WreathInstance::render(const WreathElem &a) const {
  std::vector<std::string> tokens;
  std::vector<int> cq(d(), 0), cy(d(), 0);
  auto shift_to = [&](const std::vector<int> &tq, const std::vector<int> &ty) {
    auto emit = [&](const char *name, std::vector<int> &cur, const std::vector<int> &target) {
      for (std::size_t i = 0; i < d(); ++i) {
        int e = target[i] - cur[i];
        if (e) tokens.push_back(name + std::to_string(i + 1) + (e == 1 ? "" : "^" + std::to_string(e)));
      }
      cur = target;
    };
    emit("x", cq, tq);
    emit("y", cy, ty);
  };
  // a^{c x^w / g^z} = (x^{-w} y^z) a^c (x^w y^{-z})
  const Residue p = this->p();
  const std::vector<int> &z = a.r.den_exps();
  for (const auto &[w, c] : a.r.num().terms()) {
    shift_to(negated(w), z);
    long long cc = c > p / 2 ? static_cast<long long>(c) - p : c;
    tokens.push_back(cc == 1 ? "a" : "a^" + std::to_string(cc));
  }
  shift_to(a.q, a.y);
  if (tokens.empty()) return "e";
  std::string out;
  for (const auto &t : tokens) out += (out.empty() ? "" : " ") + t;
  return out;
}

WreathElem WreathInstance::a_pow(const MultiSFraction &r) const {
  WreathElem e = identity();
  e.r = r;
  return e;
}

WreathElem WreathInstance::x(std::size_t i, int e) const {
  if (i < 1 || i > d()) throw std::out_of_range("generator index out of range");
  WreathElem out = identity();
  out.q[i - 1] = e;
  return out;
}

WreathElem WreathInstance::y(std::size_t i, int e) const {
  if (!localized()) throw std::invalid_argument("y generators exist only in the localized group");
  if (i < 1 || i > d()) throw std::out_of_range("generator index out of range");
  WreathElem out = identity();
  out.y[i - 1] = e;
  return out;
}

std::vector<WreathElem> WreathInstance::generators() const {
  std::vector<WreathElem> out{a_pow(MultiSFraction::constant(ring_, 1))};
  for (std::size_t i = 1; i <= d(); ++i) out.push_back(x(i));
  if (localized())
    for (std::size_t i = 1; i <= d(); ++i) out.push_back(y(i));
  return out;
}

std::vector<std::string> WreathInstance::generator_names() const {
  std::vector<std::string> out{"a"};
  for (std::size_t i = 1; i <= d(); ++i) out.push_back("x" + std::to_string(i));
  if (localized())
    for (std::size_t i = 1; i <= d(); ++i) out.push_back("y" + std::to_string(i));
  return out;
}

} // namespace selfsim
