#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "selfsim/engine.hpp"

namespace selfsim {

/// Element-free view of a Mealy automaton with rendered state labels.
struct AutomatonTable {
  std::size_t degree = 0;
  std::size_t initial = 0;
  std::vector<std::string> labels;
  std::vector<std::vector<std::size_t>> next;
  std::vector<std::vector<Letter>> out;

  friend bool operator==(const AutomatonTable &, const AutomatonTable &) = default;
};

template <SelfSimilarInstance I>
AutomatonTable to_table(const I &inst, const MealyAutomaton<typename I::Element> &a) {
  AutomatonTable t;
  t.degree = a.degree;
  t.initial = a.initial;
  t.next = a.next;
  for (const auto &s : a.states) t.labels.push_back(inst.render(s));
  for (const auto &p : a.output) t.out.push_back(p.image());
  return t;
}

enum class ExportFormat { Dot, Json };

/// Parses "dot" or "json"; throws std::invalid_argument otherwise.
ExportFormat parse_export_format(const std::string &name);

std::string export_automaton(const AutomatonTable &t, ExportFormat format);
std::string export_dot(const AutomatonTable &t);
std::string export_json(const AutomatonTable &t);

nlohmann::json automaton_to_json(const AutomatonTable &t);
AutomatonTable automaton_from_json(const nlohmann::json &j);

/// Nested arrays [images, [child_0, ..., child_{m-1}]].
nlohmann::json portrait_to_json(const PortraitNode &node);

} // namespace selfsim
