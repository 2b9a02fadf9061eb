#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>

namespace selfsim {

using Residue = std::uint32_t;

bool is_prime(std::uint64_t n);

/// Residue arithmetic modulo a small prime. All inputs are assumed reduced.
namespace fp {

inline Residue add(Residue a, Residue b, Residue p) {
  Residue s = a + b;
  return s >= p ? s - p : s;
}

inline Residue sub(Residue a, Residue b, Residue p) { return a >= b ? a - b : a + p - b; }

inline Residue neg(Residue a, Residue p) { return a == 0 ? 0 : p - a; }

inline Residue mul(Residue a, Residue b, Residue p) {
  return static_cast<Residue>(static_cast<std::uint64_t>(a) * b % p);
}

Residue inv(Residue a, Residue p);

/// Reduce an arbitrary signed integer into [0, p).
inline Residue reduce(long long v, Residue p) {
  long long r = v % static_cast<long long>(p);
  return static_cast<Residue>(r < 0 ? r + p : r);
}

Residue pow(Residue a, unsigned long long e, Residue p);

/// Smallest generator of the multiplicative group F_p^*.
Residue primitive_root(Residue p);

} // namespace fp

/// An element of F_p carrying its modulus.
class PrimeFieldElem {
public:
  PrimeFieldElem(long long value, Residue p);

  Residue value() const { return value_; }
  Residue modulus() const { return p_; }
  bool is_zero() const { return value_ == 0; }

  PrimeFieldElem operator+(const PrimeFieldElem &o) const;
  PrimeFieldElem operator-(const PrimeFieldElem &o) const;
  PrimeFieldElem operator*(const PrimeFieldElem &o) const;
  PrimeFieldElem operator-() const { return {fp::neg(value_, p_), p_, Unchecked{}}; }
  PrimeFieldElem inverse() const;

  friend bool operator==(const PrimeFieldElem &, const PrimeFieldElem &) = default;

private:
  struct Unchecked {};
  PrimeFieldElem(Residue v, Residue p, Unchecked) : value_(v), p_(p) {}
  void check_same(const PrimeFieldElem &o) const;

  Residue value_;
  Residue p_;
};

} // namespace selfsim
