#include <doctest.h>

#include <random>

#include "selfsim/tame.hpp"

using namespace selfsim;

namespace {

Character ch(std::initializer_list<long long> v) {
  Character c;
  for (long long x : v) c.emplace_back(x);
  return c;
}

// Positive integer coefficients up to `bound` with sum c_i v_i = 0.
bool grid_search(const std::vector<Character> &vs, int bound) {
  const std::size_t k = vs.size(), dim = vs[0].size();
  std::vector<int> c(k, 1);
  while (true) {
    bool zero = true;
    for (std::size_t d = 0; d < dim && zero; ++d) {
      Rational s = 0;
      for (std::size_t i = 0; i < k; ++i) s += c[i] * vs[i][d];
      zero = s == 0;
    }
    if (zero) return true;
    std::size_t i = 0;
    while (i < k && c[i] == bound) c[i++] = 1;
    if (i == k) return false;
    ++c[i];
  }
}

LamplighterInstance lamp(std::size_t n) {
  std::vector<DensePoly> all{DensePoly::x(2), DensePoly(2, {1, 1, 1}), DensePoly(2, {1, 1, 0, 1}),
                             DensePoly(2, {1, 0, 1, 1})};
  return LamplighterInstance(2, std::vector<DensePoly>(all.begin(), all.begin() + static_cast<long>(n)));
}

} // namespace

TEST_CASE("sigma_c for the metabelian family") {
  CHECK(sigma_c_for_lamp(lamp(1)) == SigmaCSet{ch({1}), ch({-1})});
  CHECK(sigma_c_for_lamp(lamp(2)) == SigmaCSet{ch({1, 0}), ch({0, 1}), ch({-1, -2})});
  CHECK(sigma_c_for_lamp(lamp(3)) == SigmaCSet{ch({1, 0, 0}), ch({0, 1, 0}), ch({0, 0, 1}), ch({-1, -2, -3})});
}

TEST_CASE("tame_degree examples") {
  CHECK(tame_degree({ch({1, 0}), ch({0, 1}), ch({-1, -2})}, 5) == 2);
  CHECK(tame_degree({ch({1}), ch({-1})}, 5) == 1);
  CHECK(tame_degree({ch({1, 0})}, 4) == 4);
  CHECK(tame_degree({ch({1, 0}), ch({0, 1}), ch({1, 1})}, 3) == 3);
  CHECK(origin_in_open_cone({ch({1, 0}), ch({0, 1}), ch({-1, -2})}));
  CHECK_FALSE(origin_in_open_cone({ch({1, 0}), ch({0, 1})}));
  // Rational entries.
  CHECK(origin_in_open_cone({Character{Rational(1, 3)}, Character{Rational(-5, 7)}}));
  CHECK_THROWS_AS(tame_degree({ch({0, 0})}, 2), std::invalid_argument);
  CHECK_THROWS_AS(tame_degree({ch({1})}, 0), std::invalid_argument);
}

TEST_CASE("tame degree of the metabelian family is n") {
  for (std::size_t n = 1; n <= 4; ++n) {
    auto L = lamp(n);
    CHECK(tame_degree(sigma_c_for_lamp(L), 6) == static_cast<int>(n));
    auto r = finiteness_report(L);
    CHECK(r.tame_degree == static_cast<int>(n));
    CHECK(r.fp_type == static_cast<int>(n));
    CHECK(r.finitely_presented == (n >= 2));
  }
  CHECK(finiteness_report(lamp(1)).to_json().dump() ==
        R"({"basis":"theorem","finitely_presented":false,"fp_type":1,"tame_degree":1})");
  LamplighterInstance L3(3, {DensePoly::x(3), DensePoly(3, {2, 1, 1})});
  CHECK(finiteness_report(L3).tame_degree == 2);
}

TEST_CASE("Fourier-Motzkin agrees with a grid search on small subsets") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> coord(-3, 3);
  std::vector<std::vector<Character>> cases;
  for (std::size_t n = 1; n <= 4; ++n) {
    auto pts = sigma_c_for_lamp(lamp(n));
    for (std::size_t i = 0; i < pts.size(); ++i)
      for (std::size_t j = i + 1; j < pts.size(); ++j) {
        cases.push_back({pts[i], pts[j]});
        for (std::size_t k = j + 1; k < pts.size(); ++k) cases.push_back({pts[i], pts[j], pts[k]});
      }
  }
  for (int t = 0; t < 300; ++t) {
    std::size_t k = 2 + static_cast<std::size_t>(t % 2);
    std::vector<Character> vs;
    while (vs.size() < k) {
      Character c = ch({coord(rng), coord(rng)});
      if (c[0] != 0 || c[1] != 0) vs.push_back(c);
    }
    cases.push_back(vs);
  }
  // Minimal integer coefficients are 2x2 minors, at most 18 here.
  for (const auto &vs : cases) CHECK(origin_in_open_cone(vs) == grid_search(vs, 18));
}

TEST_CASE("invariance under rescaling and permutation") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> scale(1, 9);
  for (std::size_t n = 1; n <= 4; ++n) {
    auto pts = sigma_c_for_lamp(lamp(n));
    for (int t = 0; t < 10; ++t) {
      auto q = pts;
      for (auto &c : q) {
        Rational s(scale(rng), scale(rng));
        for (auto &v : c) v *= s;
      }
      std::shuffle(q.begin(), q.end(), rng);
      CHECK(tame_degree(q, 6) == static_cast<int>(n));
    }
  }
}
