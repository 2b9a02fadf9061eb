#pragma once

#include <random>
#include <vector>

#include "selfsim/dense_poly.hpp"
#include "selfsim/multi_laurent.hpp"
#include "selfsim/sfraction.hpp"

namespace testsupport {

using namespace selfsim;

inline std::mt19937_64 &rng() {
  static std::mt19937_64 r(20261019);
  return r;
}

inline int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng()); }

inline DensePoly random_poly(Residue p, int max_degree) {
  std::vector<Residue> c(static_cast<std::size_t>(uniform(0, max_degree + 1)));
  for (auto &v : c) v = static_cast<Residue>(uniform(0, static_cast<int>(p) - 1));
  return DensePoly(p, c);
}

template <class V>
DensePoly basis_product(const LocalizedRing &ring, const V &e) {
  DensePoly d = DensePoly::constant(ring.modulus(), 1);
  for (std::size_t i = 0; i < e.size(); ++i) d = d * ring.basis(i).pow(static_cast<unsigned>(e[i]));
  return d;
}

inline SFraction random_sfraction(const RingPtr &ring, int max_degree = 4, int max_exp = 2) {
  Exps e(ring->size());
  for (auto &v : e) v = uniform(0, max_exp);
  return canonicalize(ring, random_poly(ring->modulus(), max_degree), e);
}

inline MultiLaurent random_laurent(Residue p, std::size_t d, int terms = 4, int range = 2) {
  MultiLaurent m(p, d);
  for (int t = uniform(0, terms); t > 0; --t) {
    Exponents e(d);
    for (auto &v : e) v = uniform(-range, range);
    m.add_term(e, static_cast<Residue>(uniform(1, static_cast<int>(p) - 1)));
  }
  return m;
}

inline MultiSFraction random_multi_sfraction(const MultiRingPtr &ring, int max_exp = 2) {
  std::vector<int> z(ring->d, 0);
  if (ring->localized())
    for (auto &v : z) v = uniform(0, max_exp);
  return canonicalize(ring, random_laurent(ring->p, ring->d), z);
}

} // namespace testsupport
