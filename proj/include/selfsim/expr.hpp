#pragma once

#include <cctype>
#include <map>
#include <regex>
#include <string>
#include <string_view>

#include <json.hpp>

#include "selfsim/engine.hpp"
#include "selfsim/errors.hpp"

namespace selfsim {

/// Group power with exponent of either sign.
template <SelfSimilarInstance I>
typename I::Element element_power(const I &inst, typename I::Element g, long long e) {
  if (e < 0) {
    g = inst.invert(g);
    e = -e;
  }
  auto r = inst.identity();
  while (e) {
    if (e & 1) r = inst.multiply(r, g);
    e >>= 1;
    if (e) g = inst.multiply(g, g);
  }
  return r;
}

/// Parses a product of factors separated by whitespace. A factor is "e", a
/// generator name, or a JSON object literal (for instances with from_json),
/// optionally followed by "^k" with k a signed integer. Throws ParseError.
template <SelfSimilarInstance I>
typename I::Element parse_element(const I &inst, std::string_view s) {
  using E = typename I::Element;
  std::map<std::string, E> names;
  {
    auto ns = inst.generator_names();
    auto gs = inst.generators();
    for (std::size_t i = 0; i < ns.size(); ++i) names.emplace(ns[i], gs[i]);
  }
  static const std::regex alias(R"(x(\d+)s(\d+))");
  auto lookup = [&](const std::string &name) -> E {
    if (name == "e") return inst.identity();
    if (auto it = names.find(name); it != names.end()) return it->second;
    std::smatch m;
    if (std::regex_match(name, m, alias))
      if (auto it = names.find("x" + m[1].str() + "_" + m[2].str()); it != names.end()) return it->second;
    throw ParseError("unknown generator '" + name + "'");
  };

  E result = inst.identity();
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  };
  skip_ws();
  if (i == s.size()) throw ParseError("empty expression");
  while (i < s.size()) {
    E factor;
    if (s[i] == '{') {
      std::size_t start = i;
      int level = 0;
      bool in_string = false;
      for (; i < s.size(); ++i) {
        char c = s[i];
        if (in_string) {
          if (c == '\\') ++i;
          else if (c == '"') in_string = false;
        } else if (c == '"') {
          in_string = true;
        } else if (c == '{') {
          ++level;
        } else if (c == '}' && --level == 0) {
          ++i;
          break;
        }
      }
      if (level != 0) throw ParseError("unbalanced braces in literal");
      if constexpr (requires(const nlohmann::json &j) { inst.from_json(j); }) {
        nlohmann::json j;
        try {
          j = nlohmann::json::parse(s.substr(start, i - start));
        } catch (const nlohmann::json::exception &e) {
          throw ParseError(std::string("bad element literal: ") + e.what());
        }
        factor = inst.from_json(j);
      } else {
        throw ParseError("this family has no element literals");
      }
    } else if (std::isalpha(static_cast<unsigned char>(s[i]))) {
      std::size_t start = i;
      while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_')) ++i;
      factor = lookup(std::string(s.substr(start, i - start)));
    } else {
      throw ParseError("unexpected character '" + std::string(1, s[i]) + "' at offset " + std::to_string(i));
    }
    if (i < s.size() && s[i] == '^') {
      ++i;
      std::size_t start = i;
      if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
      std::size_t digits = i;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      if (i == digits) throw ParseError("missing exponent at offset " + std::to_string(start));
      long long e;
      try {
        e = std::stoll(std::string(s.substr(start, i - start)));
      } catch (const std::out_of_range &) {
        throw ParseError("exponent out of range");
      }
      factor = element_power(inst, std::move(factor), e);
    }
    result = inst.multiply(result, factor);
    if (i < s.size() && !std::isspace(static_cast<unsigned char>(s[i])))
      throw ParseError("expected whitespace at offset " + std::to_string(i));
    skip_ws();
  }
  return result;
}

} // namespace selfsim
