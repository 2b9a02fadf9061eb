#include <doctest.h>

#include <random>

#include "selfsim/instances/wreath.hpp"

using namespace selfsim;

namespace {

const DensePoly kG(2, {1, 1, 1}); // x^2 + x + 1

MultiSFraction poly(const WreathInstance &W, std::initializer_list<std::pair<Exponents, long long>> terms,
                    std::vector<int> den = {}) {
  MultiLaurent m(W.p(), W.d());
  for (const auto &[e, c] : terms) m.add_term(e, fp::reduce(c, W.p()));
  if (den.empty()) den.assign(W.d(), 0);
  return canonicalize(W.ring(), m, den);
}

// g h^{-1}-style projection into H: multiply by the inverse of the coset representative.
WreathElem into_H(const WreathInstance &W, const WreathElem &g) {
  return W.multiply(g, W.transversal_inverses()[W.coset_index(g)]);
}

std::vector<WreathInstance> instances() {
  return {WreathInstance(2, 2), WreathInstance(3, 2), WreathInstance(2, 3), WreathInstance(2, 2, kG),
          WreathInstance(3, 2, DensePoly(3, {1, 1})), WreathInstance(2, 1, kG)};
}

} // namespace

TEST_CASE("f on the a-part") {
  WreathInstance W(2, 3);
  // a^{x_1 - 1} -> a
  CHECK(W.endo_A(poly(W, {{{1, 0, 0}, 1}, {{0, 0, 0}, -1}}).num()) == MultiLaurent::constant(2, 3, 1));
  // a^{x_2 - 1} -> 1
  CHECK(W.endo_A(poly(W, {{{0, 1, 0}, 1}, {{0, 0, 0}, -1}}).num()).is_zero());
  // a^{x_2 x_1 - 1} -> a^{x_3}
  CHECK(W.endo_A(poly(W, {{{1, 1, 0}, 1}, {{0, 0, 0}, -1}}).num()) == MultiLaurent::monomial(2, {0, 0, 1}));
  CHECK_THROWS_AS(W.endo_A(MultiLaurent::constant(2, 3, 1)), NotInH);
  // Q_0 part: x_1^p -> x_2, x_2 -> x_3, x_3 -> x_1.
  CHECK(W.sigma({2, 0, 0}) == std::vector<int>{0, 1, 0});
  CHECK(W.sigma({0, 1, 0}) == std::vector<int>{0, 0, 1});
  CHECK(W.sigma({0, 0, 1}) == std::vector<int>{1, 0, 0});
  CHECK_THROWS_AS(W.sigma({1, 0, 0}), NotInH);
  CHECK(W.endo(W.x(1, 2)) == W.x(2));
}

TEST_CASE("localized f on the a-part") {
  WreathInstance W(2, 2, kG);
  // a^{x_1 - 1} / g(x_1)^2 -> a / g(x_2)
  auto r = poly(W, {{{1, 0}, 1}, {{0, 0}, -1}}, {2, 0});
  CHECK(W.endo_A_localized(r) == poly(W, {{{0, 0}, 1}}, {0, 1}));
  // No denominator: same as f.
  auto r0 = poly(W, {{{1, 0}, 1}, {{0, 1}, -1}});
  CHECK(W.endo_A_localized(r0).num() == W.endo_A(r0.num()));
  CHECK(W.endo(W.y(1, 2)) == W.y(2));
  CHECK(W.endo(W.y(2)) == W.y(1));
}

TEST_CASE("transversal and coset index") {
  for (const auto &W : instances()) {
    std::mt19937_64 rng(3);
    std::vector<WreathElem> samples;
    for (int t = 0; t < 80; ++t) samples.push_back(random_word_element(W, W.generators(), rng, 8));
    for (const auto &g : samples) CHECK(W.coset_index(g) == exhaustive_coset_index(W, g));
    CHECK(transversal_validate(W, samples).ok);
    CHECK(W.degree() == (W.localized() ? W.p() * W.p() * W.p() : W.p() * W.p()));
    CHECK(transitivity_check(W, W.generators()));
  }
}

TEST_CASE("f and localized f are homomorphisms on H") {
  for (const auto &W : instances()) {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 200; ++t) {
      auto a = into_H(W, random_word_element(W, W.generators(), rng, 6));
      auto b = into_H(W, random_word_element(W, W.generators(), rng, 6));
      REQUIRE(W.h_member(a));
      REQUIRE(W.h_member(b));
      CHECK(W.endo(W.multiply(a, b)) == W.multiply(W.endo(a), W.endo(b)));
    }
  }
}

TEST_CASE("localized f does not depend on the choice of s_1") {
  for (const auto &W : {WreathInstance(2, 2, kG), WreathInstance(3, 2, DensePoly(3, {1, 1}))}) {
    std::mt19937_64 rng(5);
    for (int t = 0; t < 100; ++t) {
      auto h = into_H(W, random_word_element(W, W.generators(), rng, 6));
      auto base = W.endo_A_localized(h.r, 0);
      CHECK(W.endo_A_localized(h.r, 1) == base);
      CHECK(W.endo_A_localized(h.r, 2) == base);
    }
  }
}

TEST_CASE("engine laws") {
  for (const auto &W : instances()) {
    std::mt19937_64 rng(2);
    for (int t = 0; t < 10; ++t) {
      auto g = random_word_element(W, W.generators(), rng, 5), h = random_word_element(W, W.generators(), rng, 5);
      CHECK(product_rule_check(W, g, h, 4).ok);
      CHECK(inverse_decomposition_check(W, g).ok);
    }
  }
}

TEST_CASE("random nontrivial words act nontrivially") {
  WreathInstance W(2, 2, kG);
  std::mt19937_64 rng(17);
  int probed = 0;
  while (probed < 100) {
    std::uniform_int_distribution<int> len(1, 6);
    auto g = random_word_element(W, W.generators(), rng, len(rng));
    if (g == W.identity()) continue;
    ++probed;
    CHECK(std::holds_alternative<ActsNontrivially>(faithfulness_probe(W, g, 8)));
  }
}

TEST_CASE("configuration and render") {
  CHECK_THROWS_AS(WreathInstance(2, 2, DensePoly(2, {0, 1})), InvalidConfig);
  CHECK_THROWS_AS(WreathInstance(2, 2, DensePoly(2, {1, 1})), InvalidConfig);
  CHECK_THROWS_AS(WreathInstance(2, 0), InvalidConfig);
  CHECK_THROWS_AS(WreathInstance(6, 2), InvalidConfig);
  WreathInstance W(2, 2, kG);
  CHECK(W.render(W.identity()) == "e");
  CHECK(W.render(W.multiply(W.generators()[0], W.x(1))) == "a x1");
  CHECK(W.render(W.y(2, -3)) == "y2^-3");
  CHECK(W.generator_names() == std::vector<std::string>{"a", "x1", "x2", "y1", "y2"});
  CHECK_THROWS_AS(WreathInstance(2, 2).y(1), std::invalid_argument);
}
