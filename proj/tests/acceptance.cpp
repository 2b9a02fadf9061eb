// Acceptance run: one line per criterion, "criterion N: PASS|FAIL (time) detail".
// Exit status is nonzero when any criterion fails.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>

#include "selfsim/config.hpp"
#include "selfsim/expr.hpp"
#include "selfsim/tame.hpp"
#include "selfsim/validate.hpp"
#include "selfsim/verify.hpp"

using namespace selfsim;

namespace {

const std::string fixtures = SELFSIM_FIXTURE_DIR;

AnyInstance fixture(const std::string &name) { return make_instance(read_json_file(fixtures + "/" + name)); }

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string &what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
  void require(const Verdict &v, const std::string &what) { require(v.ok, what + ": " + v.detail); }
  void require(const SuiteResult &r, const std::string &what) {
    for (const auto &c : r.checks) require(c.ok, what + " " + c.name + ": " + c.detail);
  }
};

DensePoly random_poly(Residue p, std::mt19937_64 &rng) {
  std::vector<Residue> c(6);
  for (auto &v : c) v = static_cast<Residue>(rng() % p);
  return DensePoly(p, c);
}

LamplighterInstance lamp(Residue p, std::size_t n) {
  std::vector<DensePoly> polys{DensePoly::x(p)};
  if (n >= 2) {
    auto f1 = p == 2 ? std::optional(DensePoly(2, {1, 1, 1})) : find_lamplighter_poly(p, 2, polys);
    if (!f1) throw std::runtime_error("no admissible f_1");
    polys.push_back(*f1);
  }
  return LamplighterInstance(p, polys);
}

Outcome lamplighter_reproduction() {
  Outcome o;
  auto L = std::get<LamplighterInstance>(fixture("lamplighter_p2n1.json"));
  auto du = decompose(L, parse_element(L, "u"));
  o.require(du.perm == Perm({1, 0}), "perm of u is " + du.perm.to_string());
  for (const auto &s : du.states) o.require(s == L.identity(), "state of u is " + L.render(s));
  auto xinv = parse_element(L, "x0^-1");
  auto dx = decompose(L, xinv);
  o.require(dx.perm.is_identity(), "perm of x0^-1 is " + dx.perm.to_string());
  o.require(dx.states == std::vector<LampElem>{xinv, parse_element(L, "u^-1 x0^-1")},
            "states of x0^-1 are " + L.render(dx.states[0]) + ", " + L.render(dx.states[1]));
  auto res = states_bfs(L, xinv, 8);
  o.require(std::holds_alternative<MealyAutomaton<LampElem>>(res), "BFS from x0^-1 exceeded cap 8");
  if (o.ok) {
    const auto &a = std::get<0>(res);
    auto words = all_words(2, 6);
    o.require(words.size() == 64, "expected 64 words");
    for (const auto &w : words) o.require(simulate(a, w) == act_on_word(L, xinv, w), "automaton disagrees");
    o.detail = std::to_string(a.states.size()) + " states, 64 words";
  }
  return o;
}

Outcome power_identities() {
  Outcome o;
  std::mt19937_64 rng(1);
  for (Residue p : {2u, 3u})
    for (std::size_t n : {1u, 2u}) {
      auto L = lamp(p, n);
      std::vector<DensePoly> lambdas;
      for (int t = 0; t < 50; ++t) lambdas.push_back(random_poly(p, rng));
      o.require(L.power_identity_check(6, lambdas), "p=" + std::to_string(p) + " n=" + std::to_string(n));
    }
  if (o.ok) o.detail = "p in {2,3}, n in {1,2}, i <= 6, 50 polynomials each";
  return o;
}

Outcome y_closure() {
  Outcome o;
  std::string shapes;
  for (auto [p, n] : {std::pair<Residue, std::size_t>{2, 1}, {2, 2}, {3, 2}}) {
    auto L = lamp(p, n);
    for (std::size_t j = 0; j < n; ++j)
      o.require(L.Y_closure_check(j, L.Y_elements(j).size()),
                "p=" + std::to_string(p) + " n=" + std::to_string(n) + " j=" + std::to_string(j));
    shapes += (shapes.empty() ? "" : ", ") + std::to_string(p) + "/" + std::to_string(n);
  }
  if (o.ok) o.detail = "(p/n) " + shapes + "; p=3 f_1 = " + lamp(3, 2).f(1).to_string();
  return o;
}

Outcome borel_combinatorics() {
  Outcome o;
  const DensePoly f1(2, {1, 1, 1});
  struct Shape {
    Residue p;
    std::size_t m, cosets;
  };
  for (auto [p, m, cosets] : {Shape{2, 2, 2}, Shape{3, 2, 3}, Shape{2, 3, 16}}) {
    std::vector<DensePoly> polys{DensePoly::x(p)};
    polys.push_back(p == 2 ? f1 : *find_lamplighter_poly(p, 2, polys));
    BorelInstance B(p, m, polys);
    const std::string tag = "m=" + std::to_string(m) + " p=" + std::to_string(p);
    o.require(B.transversal().size() == cosets, tag + ": transversal size " + std::to_string(B.transversal().size()));
    o.require(B.claim1_check(), tag + ": claim 1");
    o.require(transversal_validate(B, std::vector<BorelElem>{}), tag + ": transversal");
    if (p == 2)
      for (std::size_t k = 1; k <= m; ++k)
        for (std::size_t s = 0; s < B.rank(); ++s)
          o.require(B.claim2_check(k, s, B.Delta_size(s)),
                    tag + " k=" + std::to_string(k) + " s=" + std::to_string(s));
  }
  if (o.ok) o.detail = "2, 3, 16 cosets; Δ_k^(s) closed at (m,p,n) = (2,2,2), (3,2,2)";
  return o;
}

Outcome affine_closure() {
  Outcome o;
  auto inst = fixture("affine_n3p2.json");
  const auto &A = std::get<AffineInstance>(inst);
  o.require(A.degree() == 2, "degree");
  SuiteOptions opts;
  opts.samples = 100; // 500 coset samples, 200 conjugations
  auto r = run_suite(inst, "affine", opts);
  o.require(r, "affine");
  o.require(run_suite(inst, "core", opts), "core");
  if (o.ok)
    for (const auto &c : r.checks)
      if (!c.detail.empty()) o.detail += (o.detail.empty() ? "" : "; ") + c.name + " " + c.detail;
  return o;
}

Outcome engine_laws() {
  Outcome o;
  SuiteOptions opts; // 100 pairs at depth 4, bijectivity through level 6
  int count = 0;
  for (const char *name : {"lamplighter_p2n1.json", "lamplighter_p3n2.json", "lamplighter_p2n4.json", "borel_m2p2.json",
                           "borel_m2p3.json", "borel_m3p2.json", "affine_n3p2.json", "wreath_p2d2.json",
                           "wreath_p2d2_localized.json"}) {
    o.require(run_suite(fixture(name), "core", opts), name);
    ++count;
  }
  if (o.ok) o.detail = std::to_string(count) + " instances";
  return o;
}

Outcome wreath_section() {
  Outcome o;
  SuiteOptions opts;
  auto base = fixture("wreath_p2d2.json");
  auto loc = fixture("wreath_p2d2_localized.json");
  o.require(run_suite(base, "wreath", opts), "base");
  o.require(run_suite(loc, "wreath", opts), "localized");
  if (o.ok) o.detail = "200 H-pairs each, 100 s_1 samples, 100 depth-8 probes";
  return o;
}

Outcome tameness() {
  Outcome o;
  auto inst = fixture("lamplighter_p2n4.json");
  const auto &L4 = std::get<LamplighterInstance>(inst);
  for (std::size_t n = 1; n <= 4; ++n) {
    const auto &basis = L4.ring()->basis();
    LamplighterInstance L(2, std::vector<DensePoly>(basis.begin(), basis.begin() + static_cast<long>(n)));
    int t = tame_degree(sigma_c_for_lamp(L), static_cast<int>(n) + 2);
    auto rep = finiteness_report(L);
    o.require(t == static_cast<int>(n), "n=" + std::to_string(n) + ": tame degree " + std::to_string(t));
    o.require(rep.finitely_presented == (n >= 2), "n=" + std::to_string(n) + ": finite presentability flag");
  }
  if (o.ok) o.detail = "tame degree n for n = 1..4; finitely presented iff n >= 2";
  return o;
}

} // namespace

int main() {
  const std::vector<std::pair<double, std::function<Outcome()>>> criteria{
      {1, lamplighter_reproduction}, {5, power_identities}, {10, y_closure},     {60, borel_combinatorics},
      {30, affine_closure},          {60, engine_laws},     {60, wreath_section}, {5, tameness}};
  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto [limit, run] = criteria[i];
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = run();
    } catch (const std::exception &e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (o.ok && secs >= limit) o = {false, "exceeded the " + std::to_string(static_cast<int>(limit)) + " s limit"};
    all = all && o.ok;
    std::cout << "criterion " << i + 1 << ": " << (o.ok ? "PASS" : "FAIL") << " (" << std::fixed
              << std::setprecision(2) << secs << " s) " << o.detail << std::endl;
  }
  return all ? 0 : 1;
}
