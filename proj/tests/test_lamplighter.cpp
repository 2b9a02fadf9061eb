#include <doctest.h>

#include "selfsim/automaton_io.hpp"
#include "selfsim/instances/lamplighter.hpp"
#include "selfsim/validate.hpp"
#include "support.hpp"

using namespace selfsim;

namespace {

LamplighterInstance config(Residue p, std::size_t n) {
  std::vector<DensePoly> polys{DensePoly::x(p)};
  if (n >= 2) polys.push_back(p == 2 ? DensePoly(2, {1, 1, 1}) : DensePoly(3, {2, 1, 1}));
  if (n >= 3) polys.push_back(DensePoly(p, {1, 1, 0, 1}));
  return LamplighterInstance(p, polys);
}

bool same(const WreathDecomp<LampElem> &a, const WreathDecomp<LampElem> &b) {
  return a.perm == b.perm && a.states == b.states;
}

} // namespace

TEST_CASE("closed-form decomposition matches the engine") {
  for (auto [p, n] : {std::pair<Residue, std::size_t>{2, 1}, {2, 2}, {3, 2}, {2, 3}, {5, 1}}) {
    auto L = config(p, n);
    std::vector<LampElem> shapes{L.u_pow(DensePoly::constant(p, 1)), L.u_pow(DensePoly::constant(p, -1))};
    for (std::size_t j = 0; j < n; ++j) {
      shapes.push_back(L.x(j));
      shapes.push_back(L.x(j, -1));
      for (const auto &lambda : polys_up_to_degree(p, p == 5 ? 2 : 4))
        shapes.push_back(L.multiply(L.u_pow(lambda), L.x(j, -1)));
    }
    for (const auto &e : shapes) {
      auto cf = L.closed_form_decompose(e);
      REQUIRE(cf.has_value());
      CHECK_MESSAGE(same(*cf, decompose(L, e)), L.render(e));
    }
    CHECK_FALSE(L.closed_form_decompose(L.multiply(L.x(0), L.x(0))).has_value());
  }
}

TEST_CASE("generators x_j act trivially on the first level") {
  for (auto [p, n] : {std::pair<Residue, std::size_t>{2, 2}, {3, 2}, {2, 3}}) {
    auto L = config(p, n);
    for (std::size_t j = 0; j < n; ++j) {
      CHECK(decompose(L, L.x(j)).perm.is_identity());
      CHECK(decompose(L, L.x(j, -1)).perm.is_identity());
    }
    CHECK(decompose(L, L.generators()[0]).perm == Perm::cycle_power(p, 1));
  }
}

TEST_CASE("power identities") {
  for (Residue p : {2u, 3u}) {
    auto L = config(p, 2);
    std::vector<DensePoly> lambdas;
    for (int t = 0; t < 50; ++t) lambdas.push_back(testsupport::random_poly(p, 5));
    auto v = L.power_identity_check(6, lambdas);
    CHECK_MESSAGE(v.ok, v.detail);
  }
  // u^x = (u, ..., u) u
  auto L = config(2, 1);
  auto d = decompose(L, L.u_pow(DensePoly::x(2)));
  CHECK(d.perm == Perm::cycle_power(2, 1));
  for (const auto &s : d.states) CHECK(s == L.generators()[0]);
  // A constant λ has trivial states.
  auto L3 = config(3, 1);
  auto dc = decompose(L3, L3.u_pow(DensePoly::constant(3, 2)));
  CHECK(dc.perm == Perm::cycle_power(3, 2));
  for (const auto &s : dc.states) CHECK(s == L3.identity());
}

TEST_CASE("u^(x^2+x) over F_2 acts as its decomposition to depth 5") {
  auto L = config(2, 1);
  const DensePoly lambda(2, {0, 1, 1});
  auto g = L.u_pow(lambda);
  auto tilde = L.u_pow(*(lambda - DensePoly::constant(2, lambda.eval(1))).exact_div(DensePoly::x_minus_one(2)));
  for (const auto &w : all_words(2, 5)) {
    Word tail(w.begin() + 1, w.end());
    Word expected{static_cast<Letter>((w[0] + lambda.eval(1)) % 2)};
    auto moved = act_on_word(L, tilde, tail);
    expected.insert(expected.end(), moved.begin(), moved.end());
    CHECK(act_on_word(L, g, w) == expected);
  }
}

TEST_CASE("Y_j is state closed") {
  for (auto [p, n] : {std::pair<Residue, std::size_t>{2, 1}, {2, 2}, {3, 2}}) {
    auto L = config(p, n);
    for (std::size_t j = 0; j < n; ++j) {
      auto v = L.Y_closure_check(j, L.Y_elements(j).size());
      CHECK_MESSAGE(v.ok, v.detail);
      // One step lowers the λ-degree below deg f_j.
      for (const auto &y : L.Y_elements(j))
        for (const auto &s : decompose(L, y).states) CHECK(s.r.poly_degree() < L.f(j).degree());
    }
  }
  auto L = config(2, 1);
  CHECK(L.Y_elements(0).size() == 4);
  CHECK_FALSE(L.in_Y(0, L.x(0)));
  CHECK_THROWS_AS(L.Y_closure_check(1, 10), std::out_of_range);
}

TEST_CASE("the p = 2, n = 1 group is the classical lamplighter automaton") {
  auto L = config(2, 1);
  auto t = to_table(L, std::get<0>(states_bfs(L, L.x(0, -1), 4)));
  CHECK(t.labels.size() == 2);
  CHECK(t.out[0] == std::vector<Letter>{0, 1});
  CHECK(t.out[1] == std::vector<Letter>{1, 0});
  CHECK(t.next[0] == std::vector<std::size_t>{0, 1});
  CHECK(t.next[1] == std::vector<std::size_t>{1, 0});
}

TEST_CASE("invalid configurations") {
  CHECK_THROWS_AS(LamplighterInstance(2, {DensePoly::x(2), DensePoly(2, {1, 1})}), InvalidConfig);
  CHECK_THROWS_AS(LamplighterInstance(3, {DensePoly::x(3), DensePoly(3, {1, 0, 1})}), InvalidConfig);
  CHECK_THROWS_AS(LamplighterInstance(4, {DensePoly::x(2)}), InvalidConfig);
  CHECK(find_lamplighter_poly(3, 2) == DensePoly(3, {2, 1, 1}));
}

TEST_CASE("render is a generator word") {
  auto L = config(3, 2);
  CHECK(L.render(L.identity()) == "e");
  CHECK(L.render(L.generators()[0]) == "u");
  CHECK(L.render(L.x(1, 2)) == "x1^2");
}
