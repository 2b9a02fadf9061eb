#include <doctest.h>

#include <random>

#include "doubles.hpp"
#include "selfsim/config.hpp"
#include "selfsim/errors.hpp"
#include "selfsim/expr.hpp"
#include "selfsim/verify.hpp"

using namespace selfsim;
using nlohmann::json;

namespace {

const std::string fixtures = SELFSIM_FIXTURE_DIR;

AnyInstance fixture(const std::string &name) { return make_instance(read_json_file(fixtures + "/" + name)); }

template <class I>
void round_trip(const I &inst, int count, std::size_t len) {
  std::mt19937_64 rng(11);
  auto gens = inst.generators();
  for (int t = 0; t < count; ++t) {
    auto g = random_word_element(inst, gens, rng, len);
    auto s = inst.render(g);
    INFO(s);
    CHECK(parse_element(inst, s) == g);
  }
}

} // namespace

TEST_CASE("config parsing") {
  CHECK(family_name(fixture("lamplighter_p2n1.json")) == "lamplighter");
  CHECK(std::get<BorelInstance>(fixture("borel_m3p2.json")).degree() == 16);
  CHECK(std::get<AffineInstance>(fixture("affine_n3p2.json")).degree() == 2);
  CHECK_FALSE(std::get<WreathInstance>(fixture("wreath_p2d2.json")).localized());
  CHECK(std::get<WreathInstance>(fixture("wreath_p2d2_localized.json")).localized());

  CHECK_THROWS_AS(fixture("borel_invalid.json"), InvalidConfig);
  CHECK_THROWS_AS(fixture("malformed.json"), ParseError);
  CHECK_THROWS_AS(read_json_file(fixtures + "/absent.json"), IoError);

  CHECK_THROWS_AS(make_instance(json::array()), ParseError);
  CHECK_THROWS_AS(make_instance({{"family", "borel"}, {"p", 2}}), ParseError);
  CHECK_THROWS_AS(make_instance({{"family", "klein"}, {"p", 2}}), ParseError);
  CHECK_THROWS_AS(make_instance({{"family", "affine"}, {"p", 4}, {"n", 3}}), InvalidConfig);
  CHECK_THROWS_AS(make_instance({{"family", "affine"}, {"p", "2"}, {"n", 3}}), ParseError);
  CHECK_THROWS_AS(make_instance({{"family", "lamplighter"}, {"p", 2}, {"n", 2}, {"polys", {{0, 1}}}}), ParseError);
  CHECK_THROWS_AS(make_instance({{"family", "wreath"}, {"p", 2}, {"d", 2}, {"localized", true}}), ParseError);
  CHECK_THROWS_AS(make_instance({{"family", "wreath"}, {"p", 2}, {"d", 2}, {"localized", false}, {"g", {1, 1, 1}}}),
                  ParseError);
  // g(1) = 0 is not a unit of the localization.
  CHECK_THROWS_AS(make_instance({{"family", "wreath"}, {"p", 2}, {"d", 2}, {"g", {1, 1}}}), InvalidConfig);
}

TEST_CASE("validation report") {
  auto bad = validation_json(read_json_file(fixtures + "/borel_invalid.json"));
  CHECK_FALSE(bad["valid"].get<bool>());
  CHECK_FALSE(bad["violations"].empty());
  auto good = validation_json(read_json_file(fixtures + "/lamplighter_p3n2.json"));
  CHECK(good["valid"].get<bool>());
  CHECK(validation_json(read_json_file(fixtures + "/affine_n3p2.json")).is_null());
}

TEST_CASE("expression parser") {
  auto L = std::get<LamplighterInstance>(fixture("lamplighter_p2n1.json"));
  auto u = L.generators()[0], x0 = L.generators()[1];
  CHECK(parse_element(L, "u") == u);
  CHECK(parse_element(L, "  e ") == L.identity());
  CHECK(parse_element(L, "x0^-1") == L.invert(x0));
  CHECK(parse_element(L, "u x0^-1 u^2") == L.multiply(L.multiply(u, L.invert(x0)), L.multiply(u, u)));
  CHECK(parse_element(L, "x0^+3 x0^-3") == L.identity());
  CHECK(parse_element(L, "u^0") == L.identity());
  CHECK_THROWS_AS(parse_element(L, ""), ParseError);
  CHECK_THROWS_AS(parse_element(L, "x7"), ParseError);
  CHECK_THROWS_AS(parse_element(L, "u^"), ParseError);
  CHECK_THROWS_AS(parse_element(L, "u*x0"), ParseError);
  CHECK_THROWS_AS(parse_element(L, "u^99999999999999999999"), ParseError);
  CHECK_THROWS_AS(parse_element(L, "{\"v\": [[1]]}"), ParseError);

  auto B = std::get<BorelInstance>(fixture("borel_m2p2.json"));
  CHECK(parse_element(B, "x1s1") == parse_element(B, "x1_1"));
  CHECK(parse_element(B, "x1s1") == B.x(1, 1));
  CHECK(parse_element(B, B.to_json(B.x(2, 0)).dump()) == B.x(2, 0));
  CHECK_THROWS_AS(parse_element(B, "{\"a\": 1"), ParseError);

  auto A = std::get<AffineInstance>(fixture("affine_n3p2.json"));
  auto g = A.multiply(A.e(1), A.elementary(1, 2));
  CHECK(parse_element(A, A.to_json(g).dump() + "^2") == A.multiply(g, g));
}

TEST_CASE("render round trip for every family") {
  round_trip(std::get<LamplighterInstance>(fixture("lamplighter_p2n1.json")), 100, 8);
  round_trip(std::get<LamplighterInstance>(fixture("lamplighter_p3n2.json")), 100, 8);
  round_trip(std::get<BorelInstance>(fixture("borel_m2p2.json")), 50, 6);
  round_trip(std::get<BorelInstance>(fixture("borel_m2p3.json")), 50, 6);
  round_trip(std::get<AffineInstance>(fixture("affine_n3p2.json")), 50, 6);
  round_trip(std::get<WreathInstance>(fixture("wreath_p2d2.json")), 100, 8);
  round_trip(std::get<WreathInstance>(fixture("wreath_p2d2_localized.json")), 100, 8);
}

TEST_CASE("suites pass on shipped instances") {
  SuiteOptions quick;
  quick.pairs = 10;
  quick.samples = 20;
  quick.bijective_levels = 4;
  for (std::string name : {"lamplighter_p2n1.json", "lamplighter_p3n2.json", "borel_m2p2.json", "borel_m2p3.json",
                           "affine_n3p2.json", "wreath_p2d2.json", "wreath_p2d2_localized.json"}) {
    auto inst = fixture(name);
    auto family = family_name(inst);
    for (const auto &suite : {std::string("core"), family}) {
      auto r = run_suite(inst, suite, quick);
      INFO(name << " " << r.to_json().dump());
      CHECK(r.ok());
      CHECK_FALSE(r.checks.empty());
    }
  }
  auto lamp = fixture("lamplighter_p2n4.json");
  CHECK(run_suite(lamp, "tame", quick).ok());
  CHECK_THROWS_AS(run_suite(lamp, "affine", quick), std::invalid_argument);
  CHECK_THROWS_AS(run_suite(fixture("affine_n3p2.json"), "tame", quick), std::invalid_argument);
  CHECK_THROWS_AS(run_suite(lamp, "everything", quick), std::invalid_argument);
  CHECK(suite_names().size() == 6);
}

TEST_CASE("suites are deterministic for a fixed seed") {
  auto inst = fixture("wreath_p2d2_localized.json");
  SuiteOptions o;
  o.pairs = 5;
  o.samples = 10;
  CHECK(run_suite(inst, "core", o).to_json() == run_suite(inst, "core", o).to_json());
}

TEST_CASE("core suite reports failures on corrupted instances") {
  using testsupport::Odometer;
  SuiteOptions o;
  o.pairs = 20;
  o.samples = 20;
  auto names_failing = [&](const Odometer &inst) {
    std::vector<std::string> out;
    for (const auto &c : core_suite(inst, {1LL}, o).checks)
      if (!c.ok) out.push_back(c.name);
    return out;
  };
  CHECK(names_failing(Odometer()).empty());
  auto shifted = names_failing(Odometer(1));
  CHECK(std::find(shifted.begin(), shifted.end(), "endo_homomorphism") != shifted.end());
  auto duplicate = names_failing(Odometer(0, 2));
  CHECK(std::find(duplicate.begin(), duplicate.end(), "transversal_validate") != duplicate.end());
}
