#include "selfsim/config.hpp"

#include <fstream>
#include <sstream>

#include "selfsim/errors.hpp"
#include "selfsim/serialize.hpp"

namespace selfsim {

namespace {

using nlohmann::json;

const json &field(const json &cfg, const char *key) {
  if (!cfg.contains(key)) throw ParseError(std::string("config is missing \"") + key + "\"");
  return cfg.at(key);
}

long long int_field(const json &cfg, const char *key) {
  const json &v = field(cfg, key);
  if (!v.is_number_integer()) throw ParseError(std::string("\"") + key + "\" must be an integer");
  return v.get<long long>();
}

Residue prime_field(const json &cfg) {
  long long p = int_field(cfg, "p");
  if (p < 2 || p > 65521) throw InvalidConfig("p must be a prime below 65536");
  if (!is_prime(static_cast<std::uint64_t>(p))) throw InvalidConfig("p = " + std::to_string(p) + " is not prime");
  return static_cast<Residue>(p);
}

std::size_t size_field(const json &cfg, const char *key) {
  long long v = int_field(cfg, key);
  if (v < 1 || v > 64) throw InvalidConfig(std::string("\"") + key + "\" out of range");
  return static_cast<std::size_t>(v);
}

std::vector<DensePoly> polys_field(const json &cfg, Residue p) {
  const json &v = field(cfg, "polys");
  if (!v.is_array() || v.empty()) throw ParseError("\"polys\" must be a nonempty array of coefficient arrays");
  std::vector<DensePoly> out;
  for (const auto &c : v) out.push_back(poly_from_json(p, c));
  if (cfg.contains("n") && int_field(cfg, "n") != static_cast<long long>(out.size()))
    throw ParseError("\"n\" differs from the number of polynomials");
  return out;
}

std::string family_field(const json &cfg) {
  if (!cfg.is_object()) throw ParseError("config must be a JSON object");
  const json &f = field(cfg, "family");
  if (!f.is_string()) throw ParseError("\"family\" must be a string");
  return f.get<std::string>();
}

} // namespace

json read_json_file(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return json::parse(ss.str());
  } catch (const json::exception &e) {
    throw ParseError(path + ": " + e.what());
  }
}

AnyInstance make_instance(const json &cfg) {
  const std::string family = family_field(cfg);
  const Residue p = prime_field(cfg);
  if (family == "lamplighter") return LamplighterInstance(p, polys_field(cfg, p));
  if (family == "borel") return BorelInstance(p, size_field(cfg, "m"), polys_field(cfg, p));
  if (family == "affine") return AffineInstance(p, size_field(cfg, "n"));
  if (family == "wreath") {
    const std::size_t d = size_field(cfg, "d");
    bool localized = cfg.contains("g");
    if (cfg.contains("localized")) {
      if (!cfg.at("localized").is_boolean()) throw ParseError("\"localized\" must be a boolean");
      localized = cfg.at("localized").get<bool>();
    }
    if (!localized) {
      if (cfg.contains("g")) throw ParseError("\"g\" given but \"localized\" is false");
      return WreathInstance(p, d);
    }
    return WreathInstance(p, d, poly_from_json(p, field(cfg, "g")));
  }
  throw ParseError("unknown family \"" + family + "\"");
}

json validation_json(const json &cfg) {
  const std::string family = family_field(cfg);
  if (family != "lamplighter" && family != "borel") return nullptr;
  const Residue p = prime_field(cfg);
  auto report = validate_config(p, polys_field(cfg, p));
  auto list = [](const std::vector<Violation> &vs) {
    json out = json::array();
    for (const auto &v : vs) out.push_back({{"code", v.code}, {"poly_index", v.poly_index}, {"message", v.message}});
    return out;
  };
  return {{"valid", family == "borel" ? report.valid : report.lamplighter_valid},
          {"violations", list(report.violations)},
          {"family_violations", list(family == "borel" ? std::vector<Violation>{} : report.lamplighter_violations)},
          {"interpretation", report.interpretation}};
}

std::string family_name(const AnyInstance &inst) {
  static const char *names[] = {"lamplighter", "borel", "affine", "wreath"};
  return names[inst.index()];
}

} // namespace selfsim
