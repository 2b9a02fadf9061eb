#include "selfsim/verify.hpp"

#include <stdexcept>

#include "selfsim/automaton_io.hpp"
#include "selfsim/tame.hpp"

namespace selfsim {

bool SuiteResult::ok() const {
  for (const auto &c : checks)
    if (!c.ok) return false;
  return true;
}

nlohmann::json SuiteResult::to_json() const {
  nlohmann::json cs = nlohmann::json::array();
  for (const auto &c : checks) cs.push_back({{"name", c.name}, {"ok", c.ok}, {"detail", c.detail}});
  return {{"suite", suite}, {"ok", ok()}, {"checks", cs}};
}

const std::vector<std::string> &suite_names() {
  static const std::vector<std::string> names{"core", "borel", "affine", "lamplighter", "wreath", "tame"};
  return names;
}

namespace {

template <class F>
void guarded(SuiteResult &r, const std::string &name, F &&fn) {
  try {
    r.add(name, fn());
  } catch (const std::exception &e) {
    r.add(name, false, std::string("exception: ") + e.what());
  }
}

template <class I>
std::vector<typename I::Element> samples(const I &inst, std::mt19937_64 &rng, int count, std::size_t len) {
  std::vector<typename I::Element> xs;
  auto gens = inst.generators();
  for (int i = 0; i < count; ++i) xs.push_back(random_word_element(inst, gens, rng, len));
  return xs;
}

template <class I>
Verdict coset_oracle(const I &inst, const std::vector<typename I::Element> &xs) {
  for (const auto &g : xs)
    if (inst.coset_index(g) != exhaustive_coset_index(inst, g))
      return Verdict::fail("closed-form coset index differs from search for " + inst.render(g));
  return Verdict::pass(std::to_string(xs.size()) + " samples");
}

DensePoly random_poly(Residue p, int max_degree, std::mt19937_64 &rng) {
  std::vector<Residue> c(static_cast<std::size_t>(max_degree) + 1);
  for (auto &v : c) v = static_cast<Residue>(rng() % p);
  return DensePoly(p, c);
}

SuiteResult borel_suite(const BorelInstance &B, const SuiteOptions &o) {
  SuiteResult r{"borel", {}};
  std::mt19937_64 rng(o.seed);
  guarded(r, "degree", [&] {
    std::size_t l = 0, pl = 1;
    for (std::size_t i = 1; i <= B.m(); ++i) l += i * (B.m() - i);
    for (std::size_t i = 0; i < l; ++i) pl *= B.p();
    return B.degree() == pl ? Verdict::pass(std::to_string(pl) + " cosets")
                            : Verdict::fail("degree " + std::to_string(B.degree()) + ", expected " + std::to_string(pl));
  });
  guarded(r, "claim1", [&] {
    return B.claim1_check() ? Verdict::pass() : Verdict::fail("inverse of a transversal element left T");
  });
  for (std::size_t k = 1; k <= B.m(); ++k)
    for (std::size_t s = 0; s < B.rank(); ++s)
      guarded(r, "claim2_k" + std::to_string(k) + "_s" + std::to_string(s),
              [&] { return B.claim2_check(k, s, B.Delta_size(s)); });
  guarded(r, "coset_closed_form", [&] { return coset_oracle(B, samples(B, rng, o.samples, 8)); });
  return r;
}

SuiteResult affine_suite(const AffineInstance &G, const SuiteOptions &o) {
  SuiteResult r{"affine", {}};
  std::mt19937_64 rng(o.seed);
  if (!G.warning().empty()) r.add("warning", true, G.warning());
  guarded(r, "degree", [&] {
    return G.degree() == G.p() ? Verdict::pass() : Verdict::fail("degree differs from p");
  });
  guarded(r, "coset_closed_form", [&] {
    auto xs = samples(G, rng, 5 * o.samples, 6);
    Verdict v = coset_oracle(G, xs);
    if (!v.ok) return v;
    for (const auto &g : xs)
      for (Residue a = 0; a < G.p(); ++a)
        if (G.coset_index_from(g, a) != exhaustive_coset_index(G, G.multiply(G.transversal()[a], g)))
          return Verdict::fail("coset index from " + std::to_string(a) + " differs for " + G.render(g));
    return v;
  });
  guarded(r, "delta1_closure", [&] {
    std::vector<AffineElem> sample;
    for (const auto &g : G.generators())
      if (G.in_Delta(1, g)) sample.push_back(g);
    auto gens = sample;
    for (int t = 0; t < 4 * o.samples && sample.size() < static_cast<std::size_t>(o.samples / 2); ++t) {
      auto g = random_word_element(G, gens, rng, 3);
      if (G.in_Delta(1, g)) sample.push_back(g);
    }
    for (const auto &g : sample) {
      auto res = states_bfs(G, g, 1u << 16);
      if (std::holds_alternative<CapExceeded>(res)) return Verdict::fail("state set of " + G.render(g) + " too large");
      for (const auto &s : std::get<MealyAutomaton<AffineElem>>(res).states)
        if (!G.in_Delta(1, s)) return Verdict::fail("state " + G.render(s) + " of " + G.render(g) + " leaves Δ_1");
    }
    return Verdict::pass(std::to_string(sample.size()) + " elements of Δ_1");
  });
  guarded(r, "A_power_conjugation", [&] {
    auto xs = samples(G, rng, 2 * o.samples, 6);
    for (const auto &g : xs) {
      PolyMat c = g.b;
      for (std::size_t k = 0; k < G.n(); ++k) c = conj_by_A(c);
      if (!(c == g.b)) return Verdict::fail("A^n b A^-n differs from b for " + G.render(g));
    }
    return Verdict::pass(std::to_string(xs.size()) + " matrices");
  });
  return r;
}

SuiteResult lamplighter_suite(const LamplighterInstance &L, const SuiteOptions &o) {
  SuiteResult r{"lamplighter", {}};
  std::mt19937_64 rng(o.seed);
  const Residue p = L.p();
  guarded(r, "closed_form_decompose", [&] {
    std::vector<LampElem> shapes{L.generators()[0], L.invert(L.generators()[0])};
    for (std::size_t j = 0; j < L.rank(); ++j) {
      shapes.push_back(L.x(j));
      for (const auto &y : L.Y_elements(j)) shapes.push_back(y);
    }
    for (const auto &e : shapes) {
      auto cf = L.closed_form_decompose(e);
      if (!cf) return Verdict::fail("no closed form for " + L.render(e));
      auto d = decompose(L, e);
      if (!(cf->perm == d.perm) || cf->states != d.states)
        return Verdict::fail("closed form differs from the engine for " + L.render(e));
    }
    return Verdict::pass(std::to_string(shapes.size()) + " elements");
  });
  guarded(r, "x_j_trivial_on_level_1", [&] {
    for (std::size_t j = 0; j < L.rank(); ++j)
      if (!decompose(L, L.x(j)).perm.is_identity()) return Verdict::fail("x" + std::to_string(j) + " moves level 1");
    return Verdict::pass();
  });
  guarded(r, "H_normal_on_samples", [&] {
    auto xs = samples(L, rng, o.samples, 6);
    for (std::size_t i = 0; i < xs.size(); ++i) {
      const auto &g = xs[(i + 1) % xs.size()];
      auto h = project_to_H(L, xs[i]);
      if (!L.h_member(L.multiply(L.multiply(g, h), L.invert(g))))
        return Verdict::fail("conjugate of " + L.render(h) + " by " + L.render(g) + " leaves H");
    }
    return Verdict::pass(std::to_string(xs.size()) + " samples");
  });
  guarded(r, "power_identities", [&] {
    std::vector<DensePoly> lambdas;
    for (int t = 0; t < 50; ++t) lambdas.push_back(random_poly(p, 5, rng));
    return L.power_identity_check(6, lambdas);
  });
  for (std::size_t j = 0; j < L.rank(); ++j)
    guarded(r, "Y" + std::to_string(j) + "_closure", [&] { return L.Y_closure_check(j, L.Y_elements(j).size()); });
  if (p == 2 && L.rank() == 1)
    guarded(r, "classical_lamplighter", [&] {
      auto t = to_table(L, std::get<0>(states_bfs(L, L.x(0, -1), 4)));
      bool ok = t.labels.size() == 2 && t.out[0] == std::vector<Letter>{0, 1} &&
                t.out[1] == std::vector<Letter>{1, 0} && t.next[0] == std::vector<std::size_t>{0, 1} &&
                t.next[1] == std::vector<std::size_t>{1, 0};
      return ok ? Verdict::pass() : Verdict::fail("automaton of x0^-1 is not the 2-state lamplighter machine");
    });
  return r;
}

SuiteResult wreath_suite(const WreathInstance &W, const SuiteOptions &o) {
  SuiteResult r{"wreath", {}};
  std::mt19937_64 rng(o.seed);
  guarded(r, "endo_examples", [&] {
    MultiLaurent m(W.p(), W.d());
    Exponents e1(W.d(), 0), zero(W.d(), 0);
    e1[0] = 1;
    m.add_term(e1, 1);
    m.add_term(zero, W.p() - 1);
    auto img = W.endo(W.a_pow(MultiSFraction(W.ring(), m)));
    return img == W.generators()[0] ? Verdict::pass() : Verdict::fail("f(a^(x1 - 1)) = " + W.render(img));
  });
  guarded(r, "f_homomorphism", [&] {
    for (int t = 0; t < 2 * o.samples; ++t) {
      auto xs = samples(W, rng, 2, 6);
      auto a = project_to_H(W, xs[0]), b = project_to_H(W, xs[1]);
      if (!(W.endo(W.multiply(a, b)) == W.multiply(W.endo(a), W.endo(b))))
        return Verdict::fail("f(ab) != f(a) f(b) for a = " + W.render(a) + ", b = " + W.render(b));
    }
    return Verdict::pass(std::to_string(2 * o.samples) + " pairs");
  });
  if (W.localized())
    guarded(r, "s1_independence", [&] {
      for (const auto &g : samples(W, rng, o.samples, 6)) {
        auto h = project_to_H(W, g);
        if (!(W.endo_A_localized(h.r, 0) == W.endo_A_localized(h.r, 1)))
          return Verdict::fail("two admissible s_1 disagree on " + W.render(h));
      }
      return Verdict::pass(std::to_string(o.samples) + " samples");
    });
  guarded(r, "faithfulness", [&] {
    int probed = 0;
    auto gens = W.generators();
    while (probed < o.samples) {
      auto g = random_word_element(W, gens, rng, 1 + rng() % 6);
      if (g == W.identity()) continue;
      ++probed;
      if (!std::holds_alternative<ActsNontrivially>(faithfulness_probe(W, g, 8)))
        return Verdict::fail(W.render(g) + " acts trivially up to depth 8");
    }
    return Verdict::pass(std::to_string(probed) + " nontrivial words");
  });
  return r;
}

SuiteResult tame_suite(const LamplighterInstance &L) {
  SuiteResult r{"tame", {}};
  guarded(r, "tame_degree", [&] {
    int n = static_cast<int>(L.rank());
    int t = tame_degree(sigma_c_for_lamp(L), n + 1);
    return t == n ? Verdict::pass(finiteness_report(L).to_json().dump())
                  : Verdict::fail("tame degree " + std::to_string(t) + ", expected " + std::to_string(n));
  });
  return r;
}

} // namespace

SuiteResult run_suite(const AnyInstance &any, const std::string &suite, const SuiteOptions &o) {
  if (suite == "core")
    return std::visit([&](const auto &inst) { return core_suite(inst, inst.generators(), o); }, any);
  auto mismatch = [&] {
    return std::invalid_argument("suite \"" + suite + "\" does not apply to the " + family_name(any) + " family");
  };
  if (suite == "borel") {
    if (auto *b = std::get_if<BorelInstance>(&any)) return borel_suite(*b, o);
    throw mismatch();
  }
  if (suite == "affine") {
    if (auto *a = std::get_if<AffineInstance>(&any)) return affine_suite(*a, o);
    throw mismatch();
  }
  if (suite == "lamplighter") {
    if (auto *l = std::get_if<LamplighterInstance>(&any)) return lamplighter_suite(*l, o);
    throw mismatch();
  }
  if (suite == "wreath") {
    if (auto *w = std::get_if<WreathInstance>(&any)) return wreath_suite(*w, o);
    throw mismatch();
  }
  if (suite == "tame") {
    if (auto *l = std::get_if<LamplighterInstance>(&any)) return tame_suite(*l);
    throw mismatch();
  }
  throw std::invalid_argument("unknown suite \"" + suite + "\"");
}

} // namespace selfsim
