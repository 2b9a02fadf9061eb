#include "selfsim/prime_field.hpp"

#include <stdexcept>

namespace selfsim {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

namespace fp {

Residue pow(Residue a, unsigned long long e, Residue p) {
  Residue r = 1 % p;
  while (e) {
    if (e & 1) r = mul(r, a, p);
    a = mul(a, a, p);
    e >>= 1;
  }
  return r;
}

Residue inv(Residue a, Residue p) {
  if (a % p == 0) throw std::domain_error("inverse of zero in F_" + std::to_string(p));
  // extended Euclid on (a, p)
  long long r0 = p, r1 = a, s0 = 0, s1 = 1;
  while (r1 != 0) {
    long long q = r0 / r1;
    long long t = r0 - q * r1;
    r0 = r1;
    r1 = t;
    t = s0 - q * s1;
    s0 = s1;
    s1 = t;
  }
  return reduce(s0, p);
}

Residue primitive_root(Residue p) {
  if (p == 2) return 1;
  for (Residue g = 2; g < p; ++g) {
    bool ok = true;
    Residue order = p - 1;
    Residue m = order;
    for (Residue q = 2; q * q <= m; ++q) {
      if (m % q) continue;
      while (m % q == 0) m /= q;
      if (pow(g, order / q, p) == 1) ok = false;
    }
    if (m > 1 && pow(g, order / m, p) == 1) ok = false;
    if (ok) return g;
  }
  return 1;
}

} // namespace fp

PrimeFieldElem::PrimeFieldElem(long long value, Residue p) : value_(0), p_(p) {
  if (!is_prime(p)) throw std::invalid_argument("modulus " + std::to_string(p) + " is not prime");
  value_ = fp::reduce(value, p);
}

void PrimeFieldElem::check_same(const PrimeFieldElem &o) const {
  if (p_ != o.p_) throw std::invalid_argument("mixed moduli in F_p arithmetic");
}

PrimeFieldElem PrimeFieldElem::operator+(const PrimeFieldElem &o) const {
  check_same(o);
  return {fp::add(value_, o.value_, p_), p_, Unchecked{}};
}

PrimeFieldElem PrimeFieldElem::operator-(const PrimeFieldElem &o) const {
  check_same(o);
  return {fp::sub(value_, o.value_, p_), p_, Unchecked{}};
}

PrimeFieldElem PrimeFieldElem::operator*(const PrimeFieldElem &o) const {
  check_same(o);
  return {fp::mul(value_, o.value_, p_), p_, Unchecked{}};
}

PrimeFieldElem PrimeFieldElem::inverse() const { return {fp::inv(value_, p_), p_, Unchecked{}}; }

} // namespace selfsim
