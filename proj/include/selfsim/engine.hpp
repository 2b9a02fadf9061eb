#pragma once

// Tree actions from virtual endomorphisms.
//
// An instance supplies a group G, a finite-index subgroup H given by a
// membership test, a right transversal t_0, ..., t_{m-1} of H in G with
// t_0 in H, and a homomorphism f : H -> G. Every g in G then decomposes as
//
//     g = (g_0, ..., g_{m-1}) sigma,   H t_i g = H t_{(i)sigma},
//     g_i = f(t_i g t_{(i)sigma}^{-1}),
//
// which defines a level-preserving action on words over {0, ..., m-1}. The
// first letter of a word is the level-1 letter: sigma moves it and the state
// g_i acts on the remaining suffix.

#include <concepts>
#include <cstddef>
#include <deque>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <variant>
#include <vector>

#include "selfsim/errors.hpp"
#include "selfsim/hashing.hpp"
#include "selfsim/perm.hpp"

namespace selfsim {

template <class I>
concept SelfSimilarInstance = requires(const I &inst, const typename I::Element &g) {
  { inst.degree() } -> std::convertible_to<std::size_t>;
  { inst.identity() } -> std::convertible_to<typename I::Element>;
  { inst.multiply(g, g) } -> std::convertible_to<typename I::Element>;
  { inst.invert(g) } -> std::convertible_to<typename I::Element>;
  { inst.transversal() } -> std::convertible_to<const std::vector<typename I::Element> &>;
  { inst.h_member(g) } -> std::convertible_to<bool>;
  { inst.endo(g) } -> std::convertible_to<typename I::Element>;
  { inst.hash(g) } -> std::convertible_to<std::size_t>;
  { inst.render(g) } -> std::convertible_to<std::string>;
  { g == g } -> std::convertible_to<bool>;
};

/// Instances may answer coset queries in closed form instead of by search.
template <class I>
concept HasCosetIndex = requires(const I &inst, const typename I::Element &g) {
  { inst.coset_index(g) } -> std::convertible_to<std::size_t>;
};

template <class I>
concept CachesTransversalInverses = requires(const I &inst) {
  { inst.transversal_inverses() } -> std::convertible_to<const std::vector<typename I::Element> &>;
};

template <class E>
struct WreathDecomp {
  std::vector<E> states;
  Perm perm;
};

/// A pass/fail outcome with a human-readable reason for failures.
struct Verdict {
  bool ok = true;
  std::string detail;

  explicit operator bool() const { return ok; }
  static Verdict pass(std::string d = {}) { return {true, std::move(d)}; }
  static Verdict fail(std::string d) { return {false, std::move(d)}; }
};

template <SelfSimilarInstance I>
struct ElementHash {
  const I *inst;
  std::size_t operator()(const typename I::Element &g) const { return inst->hash(g); }
};

template <SelfSimilarInstance I>
using ElementSet = std::unordered_set<typename I::Element, ElementHash<I>>;

template <SelfSimilarInstance I, class V>
using ElementMap = std::unordered_map<typename I::Element, V, ElementHash<I>>;

template <SelfSimilarInstance I>
const typename I::Element &transversal_inverse(const I &inst, std::size_t j,
                                               std::vector<typename I::Element> &scratch) {
  if constexpr (CachesTransversalInverses<I>) {
    return inst.transversal_inverses()[j];
  } else {
    scratch.assign(1, inst.invert(inst.transversal()[j]));
    return scratch.front();
  }
}

/// Coset index by exhaustive search: the unique j with g t_j^{-1} in H.
/// Throws ContractViolation when no j or more than one j qualifies.
template <SelfSimilarInstance I>
std::size_t exhaustive_coset_index(const I &inst, const typename I::Element &g) {
  const std::size_t m = inst.degree();
  std::size_t found = m;
  std::vector<typename I::Element> scratch;
  for (std::size_t j = 0; j < m; ++j) {
    if (!inst.h_member(inst.multiply(g, transversal_inverse(inst, j, scratch)))) continue;
    if (found != m) throw ContractViolation("element lies in two transversal cosets");
    found = j;
  }
  if (found == m) throw ContractViolation("element lies in no transversal coset");
  return found;
}

template <SelfSimilarInstance I>
std::size_t coset_index(const I &inst, const typename I::Element &g) {
  if constexpr (HasCosetIndex<I>)
    return inst.coset_index(g);
  else
    return exhaustive_coset_index(inst, g);
}

template <SelfSimilarInstance I>
WreathDecomp<typename I::Element> decompose(const I &inst, const typename I::Element &g) {
  using E = typename I::Element;
  const std::size_t m = inst.degree();
  const auto &T = inst.transversal();
  if (T.size() != m) throw ContractViolation("transversal size differs from the degree");
  WreathDecomp<E> d;
  d.states.reserve(m);
  std::vector<Letter> image(m);
  std::vector<E> scratch;
  for (std::size_t i = 0; i < m; ++i) {
    E tg = inst.multiply(T[i], g);
    std::size_t j = coset_index(inst, tg);
    if (j >= m) throw ContractViolation("coset index out of range");
    image[i] = static_cast<Letter>(j);
    E cofactor = inst.multiply(tg, transversal_inverse(inst, j, scratch));
    if (!inst.h_member(cofactor))
      throw ContractViolation("cofactor " + std::to_string(i) + " of " + inst.render(g) + " is not in H");
    d.states.push_back(inst.endo(cofactor));
  }
  try {
    d.perm = Perm(std::move(image));
  } catch (const std::invalid_argument &) {
    throw ContractViolation("coset action of " + inst.render(g) + " is not a permutation");
  }
  return d;
}

/// Image of a word; letters must lie in {0, ..., m-1}.
template <SelfSimilarInstance I>
Word act_on_word(const I &inst, typename I::Element g, const Word &w) {
  Word out;
  out.reserve(w.size());
  for (Letter a : w) {
    if (a >= inst.degree()) throw std::out_of_range("letter outside the alphabet");
    auto d = decompose(inst, g);
    out.push_back(d.perm(a));
    g = std::move(d.states[a]);
  }
  return out;
}

/// Checks the product rule
///   (g_0, ..., g_{m-1}) sigma (h_0, ..., h_{m-1}) tau
///     = (g_0 h_{(0)sigma}, ..., g_{m-1} h_{(m-1)sigma}) sigma tau
/// against direct decomposition of g h, recursively on the state pairs down
/// to `depth` levels. Repeated state pairs are checked once.
template <SelfSimilarInstance I>
Verdict product_rule_check(const I &inst, const typename I::Element &g, const typename I::Element &h,
                           int depth) {
  using E = typename I::Element;
  struct PairHash {
    const I *inst;
    std::size_t operator()(const std::pair<E, E> &pr) const {
      std::size_t s = inst->hash(pr.first);
      hash_combine(s, inst->hash(pr.second));
      return s;
    }
  };
  std::unordered_map<std::pair<E, E>, int, PairHash> done(16, PairHash{&inst});
  ElementMap<I, WreathDecomp<E>> memo(16, ElementHash<I>{&inst});
  auto cached = [&](const E &x) -> const WreathDecomp<E> & {
    auto it = memo.find(x);
    if (it == memo.end()) it = memo.emplace(x, decompose(inst, x)).first;
    return it->second;
  };
  // Breadth first, so each pair is first met with its largest remaining depth.
  std::deque<std::tuple<E, E, E, int>> queue;
  queue.emplace_back(g, h, inst.multiply(g, h), depth);
  try {
    while (!queue.empty()) {
      auto [a, b, ab, d] = std::move(queue.front());
      queue.pop_front();
      if (d <= 0) continue;
      auto [it, inserted] = done.try_emplace(std::make_pair(a, b), d);
      if (!inserted) {
        if (it->second >= d) continue;
        it->second = d;
      }
      const auto &da = cached(a);
      const auto &db = cached(b);
      const auto &dab = cached(ab);
      if (!(dab.perm == da.perm.then(db.perm)))
        return Verdict::fail("permutation of product differs for " + inst.render(a) + " * " + inst.render(b));
      for (std::size_t i = 0; i < inst.degree(); ++i) {
        const E &bi = db.states[da.perm(static_cast<Letter>(i))];
        E expected = inst.multiply(da.states[i], bi);
        if (!(dab.states[i] == expected))
          return Verdict::fail("state " + std::to_string(i) + " of " + inst.render(a) + " * " + inst.render(b) +
                               " is " + inst.render(dab.states[i]) + ", product rule gives " +
                               inst.render(expected));
        if (d > 1) queue.emplace_back(da.states[i], bi, std::move(expected), d - 1);
      }
    }
  } catch (const ContractViolation &e) {
    return Verdict::fail(std::string("contract violation: ") + e.what());
  } catch (const NotInH &e) {
    return Verdict::fail(std::string("endomorphism outside H: ") + e.what());
  } catch (const NotDivisible &e) {
    return Verdict::fail(std::string("endomorphism outside H: ") + e.what());
  }
  return Verdict::pass();
}

/// Decomposition of g^{-1}: permutation inverse to that of g, and
/// (g^{-1})_{(i)sigma} = (g_i)^{-1}.
template <SelfSimilarInstance I>
Verdict inverse_decomposition_check(const I &inst, const typename I::Element &g) {
  auto d = decompose(inst, g);
  auto di = decompose(inst, inst.invert(g));
  if (!(di.perm == d.perm.inverse())) return Verdict::fail("permutation of inverse is not inverse");
  for (std::size_t i = 0; i < inst.degree(); ++i)
    if (!(di.states[d.perm(static_cast<Letter>(i))] == inst.invert(d.states[i])))
      return Verdict::fail("state " + std::to_string(i) + " of inverse of " + inst.render(g) + " mismatches");
  return Verdict::pass();
}

// ---------------------------------------------------------------------------
// Automata

template <class E>
struct MealyAutomaton {
  std::size_t degree = 0;
  std::size_t initial = 0;
  std::vector<E> states;                 // BFS discovery order
  std::vector<std::vector<std::size_t>> next; // next[q][i]: state reached reading i
  std::vector<Perm> output;              // output[q](i): letter written reading i
};

struct CapExceeded {
  std::size_t discovered = 0; // states found before giving up
  std::size_t frontier = 0;   // discovered but not yet expanded
};

template <class E>
using BfsResult = std::variant<MealyAutomaton<E>, CapExceeded>;

/// Breadth-first closure of {g} under taking states. Returns the automaton
/// on exactly Q(g) when it has at most `cap` elements.
template <SelfSimilarInstance I>
BfsResult<typename I::Element> states_bfs(const I &inst, const typename I::Element &g, std::size_t cap) {
  using E = typename I::Element;
  if (cap < 1) throw std::invalid_argument("states_bfs: cap must be at least 1");
  MealyAutomaton<E> a;
  a.degree = inst.degree();
  ElementMap<I, std::size_t> index(16, ElementHash<I>{&inst});
  a.states.push_back(g);
  index.emplace(g, 0);
  for (std::size_t q = 0; q < a.states.size(); ++q) {
    auto d = decompose(inst, a.states[q]);
    std::vector<std::size_t> row(a.degree);
    for (std::size_t i = 0; i < a.degree; ++i) {
      auto [it, inserted] = index.try_emplace(d.states[i], a.states.size());
      if (inserted) {
        if (a.states.size() >= cap) return CapExceeded{a.states.size() + 1, a.states.size() - q};
        a.states.push_back(std::move(d.states[i]));
      }
      row[i] = it->second;
    }
    a.next.push_back(std::move(row));
    a.output.push_back(std::move(d.perm));
  }
  return a;
}

template <class E>
Word simulate(const MealyAutomaton<E> &a, const Word &w) {
  Word out;
  out.reserve(w.size());
  std::size_t q = a.initial;
  for (Letter x : w) {
    out.push_back(a.output[q](x));
    q = a.next[q][x];
  }
  return out;
}

/// Every transition target lies in the state set and each output map is a
/// permutation of the alphabet.
template <class E>
Verdict automaton_closed(const MealyAutomaton<E> &a) {
  for (std::size_t q = 0; q < a.next.size(); ++q) {
    if (a.next[q].size() != a.degree || a.output[q].degree() != a.degree)
      return Verdict::fail("state " + std::to_string(q) + " is incomplete");
    for (std::size_t t : a.next[q])
      if (t >= a.states.size()) return Verdict::fail("transition leaves the state set");
  }
  return Verdict::pass();
}

/// All words of length `len` over {0, ..., m-1} in lexicographic order.
std::vector<Word> all_words(std::size_t m, std::size_t len);

/// The automaton and the recursive action agree on every word of length at
/// most `max_len`.
template <SelfSimilarInstance I>
Verdict automaton_matches_action(const I &inst, const MealyAutomaton<typename I::Element> &a,
                                 std::size_t max_len) {
  for (std::size_t len = 1; len <= max_len; ++len)
    for (const auto &w : all_words(a.degree, len))
      if (simulate(a, w) != act_on_word(inst, a.states[a.initial], w))
        return Verdict::fail("automaton and action disagree on a word of length " + std::to_string(len));
  return Verdict::pass();
}

// ---------------------------------------------------------------------------
// Structural checks

/// Pairwise distinct cosets, t_0 in H, and coset_index consistent with
/// exhaustive search on the transversal and on `samples`.
template <SelfSimilarInstance I>
Verdict transversal_validate(const I &inst, const std::vector<typename I::Element> &samples = {}) {
  using E = typename I::Element;
  const auto &T = inst.transversal();
  const std::size_t m = inst.degree();
  if (T.size() != m) return Verdict::fail("transversal has " + std::to_string(T.size()) + " elements, degree " +
                                          std::to_string(m));
  if (m == 0) return Verdict::fail("empty transversal");
  if (!inst.h_member(T[0])) return Verdict::fail("t_0 is not in H");
  std::vector<E> inv;
  inv.reserve(m);
  for (const auto &t : T) inv.push_back(inst.invert(t));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      if (i != j && inst.h_member(inst.multiply(T[i], inv[j])))
        return Verdict::fail("t_" + std::to_string(i) + " and t_" + std::to_string(j) + " lie in the same coset");
  auto check = [&](const E &g) -> Verdict {
    std::size_t hits = 0, where = m;
    for (std::size_t j = 0; j < m; ++j)
      if (inst.h_member(inst.multiply(g, inv[j]))) {
        ++hits;
        where = j;
      }
    if (hits != 1)
      return Verdict::fail(inst.render(g) + " lies in " + std::to_string(hits) + " transversal cosets");
    try {
      if (coset_index(inst, g) != where) return Verdict::fail("coset_index disagrees with search on " + inst.render(g));
      const E t0g = inst.multiply(T[0], g);
      if (!inst.h_member(inst.multiply(t0g, inv[coset_index(inst, t0g)])))
        return Verdict::fail("cofactor of t_0 " + inst.render(g) + " is not in H");
    } catch (const ContractViolation &e) {
      return Verdict::fail(e.what());
    }
    return Verdict::pass();
  };
  for (const auto &t : T)
    if (auto v = check(t); !v) return v;
  for (const auto &g : samples)
    if (auto v = check(g); !v) return v;
  return Verdict::pass();
}

/// The permutations of the generators act transitively on the first level.
template <SelfSimilarInstance I>
bool transitivity_check(const I &inst, const std::vector<typename I::Element> &gens) {
  const std::size_t m = inst.degree();
  std::vector<Perm> perms;
  for (const auto &g : gens) perms.push_back(decompose(inst, g).perm);
  std::vector<bool> seen(m, false);
  std::deque<Letter> queue{0};
  seen[0] = true;
  std::size_t count = 1;
  while (!queue.empty()) {
    Letter i = queue.front();
    queue.pop_front();
    for (const auto &p : perms) {
      Letter j = p(i);
      if (!seen[j]) {
        seen[j] = true;
        ++count;
        queue.push_back(j);
      }
    }
  }
  return count == m;
}

struct ActsNontrivially {
  int depth;
};
struct Inconclusive {};
using ProbeResult = std::variant<ActsNontrivially, Inconclusive>;

/// Least depth at which g moves some word, searching the distinct
/// nontrivial states level by level. Never claims that g acts trivially.
template <SelfSimilarInstance I>
ProbeResult faithfulness_probe(const I &inst, const typename I::Element &g, int max_depth,
                               std::size_t level_limit = 1u << 14) {
  using E = typename I::Element;
  const E id = inst.identity();
  if (g == id) throw std::invalid_argument("faithfulness_probe: element is the identity");
  std::vector<E> level{g};
  for (int depth = 1; depth <= max_depth; ++depth) {
    ElementSet<I> next(16, ElementHash<I>{&inst});
    std::vector<E> next_order;
    for (const auto &s : level) {
      auto d = decompose(inst, s);
      if (!d.perm.is_identity()) return ActsNontrivially{depth};
      for (auto &st : d.states) {
        if (st == id || next_order.size() >= level_limit) continue;
        if (next.insert(st).second) next_order.push_back(std::move(st));
      }
    }
    if (next_order.empty()) return Inconclusive{};
    level = std::move(next_order);
  }
  return Inconclusive{};
}

/// Length-preserving bijection on words of every length up to `max_len`.
/// Levels with at most `enumeration_limit` words are enumerated; beyond
/// that, bijectivity is certified by every reachable state at the levels
/// above having a permutation as its level action.
template <SelfSimilarInstance I>
Verdict action_bijective_check(const I &inst, const typename I::Element &g, std::size_t max_len,
                               std::size_t enumeration_limit = 1u << 16) {
  using E = typename I::Element;
  const std::size_t m = inst.degree();
  ElementMap<I, WreathDecomp<E>> memo(16, ElementHash<I>{&inst});
  auto cached = [&](const E &x) -> const WreathDecomp<E> & {
    auto it = memo.find(x);
    if (it == memo.end()) it = memo.emplace(x, decompose(inst, x)).first;
    return it->second;
  };
  // Images of all words of length `left` below x, appended to `img`.
  std::set<Word> images;
  Word img;
  auto walk = [&](auto &self, const E &x, std::size_t left) -> void {
    if (left == 0) {
      images.insert(img);
      return;
    }
    const auto &d = cached(x);
    for (Letter i = 0; i < m; ++i) {
      img.push_back(d.perm(i));
      self(self, d.states[i], left - 1);
      img.pop_back();
    }
  };
  std::size_t words = 1;
  std::vector<E> level{g};
  try {
    for (std::size_t len = 1; len <= max_len; ++len) {
      words = (words > enumeration_limit) ? words : words * m;
      if (words <= enumeration_limit) {
        images.clear();
        walk(walk, g, len);
        if (images.size() != words)
          return Verdict::fail("action is not injective on words of length " + std::to_string(len));
      }
      // Beyond the enumerated levels, decompose() rejecting non-permutation
      // coset actions makes reaching the states the certificate.
      ElementSet<I> next(16, ElementHash<I>{&inst});
      std::vector<E> order;
      for (const auto &s : level)
        for (const auto &st : cached(s).states)
          if (next.insert(st).second) order.push_back(st);
      level = std::move(order);
    }
  } catch (const ContractViolation &e) {
    return Verdict::fail(e.what());
  }
  return Verdict::pass();
}

// ---------------------------------------------------------------------------
// Portraits

struct PortraitNode {
  Perm perm;
  std::vector<PortraitNode> children; // empty at the cut depth
};

template <SelfSimilarInstance I>
PortraitNode portrait(const I &inst, const typename I::Element &g, int depth) {
  auto d = decompose(inst, g);
  PortraitNode node{d.perm, {}};
  if (depth > 1) {
    node.children.reserve(d.states.size());
    for (const auto &s : d.states) node.children.push_back(portrait(inst, s, depth - 1));
  }
  return node;
}

// ---------------------------------------------------------------------------
// Random elements

/// Product of `length` generators or their inverses drawn uniformly.
template <SelfSimilarInstance I, class Rng>
typename I::Element random_word_element(const I &inst, const std::vector<typename I::Element> &gens, Rng &rng,
                                        std::size_t length) {
  auto g = inst.identity();
  if (gens.empty()) return g;
  // Plain modulo keeps the stream identical across standard libraries.
  const std::size_t choices = 2 * gens.size();
  for (std::size_t k = 0; k < length; ++k) {
    std::size_t c = static_cast<std::size_t>(rng() % choices);
    const auto &x = gens[c / 2];
    g = inst.multiply(g, (c % 2) ? inst.invert(x) : x);
  }
  return g;
}

} // namespace selfsim
