#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include "selfsim/config.hpp"
#include "selfsim/engine.hpp"

namespace selfsim {

struct SuiteOptions {
  std::uint64_t seed = 1;
  int pairs = 100;          ///< random pairs for the product rule
  int depth = 4;            ///< product rule depth
  std::size_t word_length = 4;
  int samples = 100;        ///< random elements for the other sampled checks
  std::size_t bijective_levels = 6;
  int bijective_samples = 5;
};

struct CheckResult {
  std::string name;
  bool ok = true;
  std::string detail;
};

struct SuiteResult {
  std::string suite;
  std::vector<CheckResult> checks;

  bool ok() const;
  void add(std::string name, const Verdict &v) { checks.push_back({std::move(name), v.ok, v.detail}); }
  void add(std::string name, bool ok, std::string detail = {}) {
    checks.push_back({std::move(name), ok, std::move(detail)});
  }
  nlohmann::json to_json() const;
};

/// g t^{-1} for the representative t of g's coset, an element of H.
template <SelfSimilarInstance I>
typename I::Element project_to_H(const I &inst, const typename I::Element &g) {
  std::vector<typename I::Element> scratch;
  return inst.multiply(g, transversal_inverse(inst, coset_index(inst, g), scratch));
}

/// Runs `check` on every sample and reports the first failure.
template <class E>
Verdict all_of(const std::vector<E> &xs, const std::function<Verdict(const E &)> &check) {
  for (std::size_t i = 0; i < xs.size(); ++i) {
    Verdict v = check(xs[i]);
    if (!v.ok) return Verdict::fail("sample " + std::to_string(i) + ": " + v.detail);
  }
  return Verdict::pass(std::to_string(xs.size()) + " samples");
}

/// Checks every instance must pass: transversal, transitivity, product rule,
/// inverse decompositions, bijectivity per level, coset projection into H and
/// the homomorphism property of f, on seeded random words in `gens`.
template <SelfSimilarInstance I>
SuiteResult core_suite(const I &inst, const std::vector<typename I::Element> &gens, const SuiteOptions &o) {
  using E = typename I::Element;
  SuiteResult r{"core", {}};
  std::mt19937_64 rng(o.seed);
  auto sample = [&](int count) {
    std::vector<E> xs;
    for (int i = 0; i < count; ++i) xs.push_back(random_word_element(inst, gens, rng, o.word_length));
    return xs;
  };
  auto guard = [&](const std::string &name, auto &&fn) {
    try {
      r.add(name, fn());
    } catch (const std::exception &e) {
      r.add(name, false, std::string("exception: ") + e.what());
    }
  };

  const auto samples = sample(o.samples);
  guard("transversal_validate", [&] { return transversal_validate(inst, samples); });
  guard("transitivity", [&] {
    return transitivity_check(inst, gens) ? Verdict::pass() : Verdict::fail("orbit of 0 is not the whole level");
  });
  guard("product_rule", [&] {
    for (int t = 0; t < o.pairs; ++t) {
      E g = random_word_element(inst, gens, rng, o.word_length);
      E h = random_word_element(inst, gens, rng, o.word_length);
      Verdict v = product_rule_check(inst, g, h, o.depth);
      if (!v.ok) return Verdict::fail("pair " + std::to_string(t) + ": " + v.detail);
    }
    return Verdict::pass(std::to_string(o.pairs) + " pairs, depth " + std::to_string(o.depth));
  });
  guard("inverse_decomposition",
        [&] { return all_of<E>(samples, [&](const E &g) { return inverse_decomposition_check(inst, g); }); });
  guard("bijective_per_level", [&] {
    std::vector<E> xs = gens;
    for (int i = 0; i < o.bijective_samples && i < static_cast<int>(samples.size()); ++i) xs.push_back(samples[i]);
    return all_of<E>(xs, [&](const E &g) { return action_bijective_check(inst, g, o.bijective_levels); });
  });
  guard("projection_in_H", [&] {
    for (std::size_t i = 0; i < samples.size(); ++i)
      if (!inst.h_member(project_to_H(inst, samples[i])))
        return Verdict::fail("projection of sample " + std::to_string(i) + " is not in H");
    return Verdict::pass(std::to_string(samples.size()) + " samples");
  });
  guard("endo_homomorphism", [&] {
    for (std::size_t i = 0; i + 1 < samples.size(); i += 2) {
      E a = project_to_H(inst, samples[i]), b = project_to_H(inst, samples[i + 1]);
      if (!(inst.endo(inst.multiply(a, b)) == inst.multiply(inst.endo(a), inst.endo(b))))
        return Verdict::fail("f(ab) != f(a) f(b) for a = " + inst.render(a) + ", b = " + inst.render(b));
    }
    return Verdict::pass(std::to_string(samples.size() / 2) + " pairs");
  });
  return r;
}

/// Suites: core, borel, affine, lamplighter, wreath, tame. Throws
/// std::invalid_argument for an unknown suite or one that does not apply to
/// the instance's family.
SuiteResult run_suite(const AnyInstance &inst, const std::string &suite, const SuiteOptions &o);

const std::vector<std::string> &suite_names();

} // namespace selfsim
