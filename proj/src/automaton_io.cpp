#include "selfsim/automaton_io.hpp"

#include <sstream>
#include <stdexcept>

namespace selfsim {

std::vector<Word> all_words(std::size_t m, std::size_t len) {
  std::vector<Word> out;
  Word w(len, 0);
  if (m == 0) return out;
  while (true) {
    out.push_back(w);
    std::size_t k = len;
    while (k > 0) {
      if (++w[k - 1] < m) break;
      w[k - 1] = 0;
      --k;
    }
    if (k == 0) return out;
  }
}

ExportFormat parse_export_format(const std::string &name) {
  if (name == "dot") return ExportFormat::Dot;
  if (name == "json") return ExportFormat::Json;
  throw std::invalid_argument("unsupported automaton format: " + name);
}

std::string export_automaton(const AutomatonTable &t, ExportFormat format) {
  return format == ExportFormat::Dot ? export_dot(t) : export_json(t);
}

namespace {

std::string dot_escape(const std::string &s) {
  std::string r;
  for (char c : s) {
    if (c == '"' || c == '\\') r.push_back('\\');
    r.push_back(c);
  }
  return r;
}

} // namespace

std::string export_dot(const AutomatonTable &t) {
  std::ostringstream os;
  os << "digraph automaton {\n  rankdir=LR;\n";
  for (std::size_t q = 0; q < t.labels.size(); ++q) {
    os << "  q" << q << " [label=\"" << dot_escape(t.labels[q]) << "\"";
    if (q == t.initial) os << ", shape=doublecircle";
    os << "];\n";
  }
  for (std::size_t q = 0; q < t.next.size(); ++q)
    for (std::size_t i = 0; i < t.degree; ++i)
      os << "  q" << q << " -> q" << t.next[q][i] << " [label=\"" << i << "|" << t.out[q][i] << "\"];\n";
  os << "}\n";
  return os.str();
}

nlohmann::json automaton_to_json(const AutomatonTable &t) {
  nlohmann::json states = nlohmann::json::array();
  for (std::size_t q = 0; q < t.labels.size(); ++q)
    states.push_back({{"id", q}, {"label", t.labels[q]}, {"next", t.next[q]}, {"out", t.out[q]}});
  return {{"degree", t.degree}, {"initial", t.initial}, {"states", states}};
}

std::string export_json(const AutomatonTable &t) { return automaton_to_json(t).dump(2) + "\n"; }

AutomatonTable automaton_from_json(const nlohmann::json &j) {
  AutomatonTable t;
  t.degree = j.at("degree").get<std::size_t>();
  t.initial = j.at("initial").get<std::size_t>();
  for (const auto &s : j.at("states")) {
    if (s.at("id").get<std::size_t>() != t.labels.size()) throw std::invalid_argument("state ids out of order");
    t.labels.push_back(s.at("label").get<std::string>());
    t.next.push_back(s.at("next").get<std::vector<std::size_t>>());
    t.out.push_back(s.at("out").get<std::vector<Letter>>());
  }
  return t;
}

nlohmann::json portrait_to_json(const PortraitNode &node) {
  nlohmann::json children = nlohmann::json::array();
  for (const auto &c : node.children) children.push_back(portrait_to_json(c));
  return nlohmann::json::array({node.perm.image(), children});
}

} // namespace selfsim
