// selfsim: build, inspect and verify self-similar group instances from JSON configs.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "selfsim/automaton_io.hpp"
#include "selfsim/config.hpp"
#include "selfsim/errors.hpp"
#include "selfsim/expr.hpp"
#include "selfsim/tame.hpp"
#include "selfsim/verify.hpp"

using namespace selfsim;
using nlohmann::json;

namespace {

enum Exit { kPass = 0, kHypothesis = 1, kVerification = 2, kInput = 3 };

template <class I>
std::string joined(const I &inst, const std::vector<typename I::Element> &xs, const char *sep) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? sep : "") + inst.render(xs[i]);
  return out;
}

int cmd_build(const std::string &path) {
  const json cfg = read_json_file(path);
  const json report = validation_json(cfg);
  if (!report.is_null() && !report["valid"].get<bool>()) {
    std::cout << "invalid configuration\n" << report.dump(2) << "\n";
    return kHypothesis;
  }
  const AnyInstance any = make_instance(cfg);
  std::visit(
      [&](const auto &inst) {
        std::cout << "family " << family_name(any) << "\n";
        std::cout << "degree " << inst.degree() << ", transversal {" << joined(inst, inst.transversal(), ", ")
                  << "}\n";
        std::cout << "transversal size " << inst.transversal().size() << "\n";
        std::cout << "generators";
        for (const auto &n : inst.generator_names()) std::cout << " " << n;
        std::cout << "\n";
        if constexpr (requires { inst.warning(); })
          if (!inst.warning().empty()) std::cout << "warning " << inst.warning() << "\n";
      },
      any);
  if (!report.is_null()) std::cout << "validation " << report.dump() << "\n";
  return kPass;
}

int cmd_decompose(const std::string &path, const std::string &expr, int depth) {
  const AnyInstance any = make_instance(read_json_file(path));
  std::visit(
      [&](const auto &inst) {
        auto g = parse_element(inst, expr);
        if (depth > 0) {
          std::cout << portrait_to_json(portrait(inst, g, depth)).dump() << "\n";
          return;
        }
        auto d = decompose(inst, g);
        std::cout << "perm " << d.perm.to_string() << "\n";
        std::cout << "states (" << joined(inst, d.states, ", ") << ")\n";
      },
      any);
  return kPass;
}

int cmd_automaton(const std::string &path, const std::string &expr, std::size_t cap, const std::string &format,
                  const std::string &output) {
  const ExportFormat fmt = parse_export_format(format);
  const AnyInstance any = make_instance(read_json_file(path));
  std::optional<std::string> text;
  std::visit(
      [&](const auto &inst) {
        auto res = states_bfs(inst, parse_element(inst, expr), cap);
        if (const auto *ce = std::get_if<CapExceeded>(&res)) {
          json r{{"status", "cap_exceeded"}, {"cap", cap}, {"discovered", ce->discovered}, {"frontier", ce->frontier}};
          std::cout << r.dump() << "\n";
          return;
        }
        text = export_automaton(to_table(inst, std::get<0>(res)), fmt);
      },
      any);
  if (!text) return kPass;
  if (output.empty() || output == "-") {
    std::cout << *text;
    return kPass;
  }
  std::ofstream out(output, std::ios::binary);
  if (!out || !(out << *text)) throw IoError("cannot write " + output);
  return kPass;
}

int cmd_verify(const std::string &path, std::vector<std::string> suites, const SuiteOptions &opts) {
  const AnyInstance any = make_instance(read_json_file(path));
  if (suites.empty()) {
    suites = {"core", family_name(any)};
    if (family_name(any) == "lamplighter") suites.push_back("tame");
  }
  json results = json::array();
  bool ok = true;
  for (const auto &s : suites) {
    SuiteResult r = run_suite(any, s, opts);
    ok = ok && r.ok();
    results.push_back(r.to_json());
  }
  std::cout << json{{"family", family_name(any)}, {"seed", opts.seed}, {"ok", ok}, {"suites", results}}.dump(2)
            << "\n";
  return ok ? kPass : kVerification;
}

int cmd_tame(const std::string &path) {
  const AnyInstance any = make_instance(read_json_file(path));
  const auto *L = std::get_if<LamplighterInstance>(&any);
  if (!L) {
    std::cerr << "error: tameness reports are only available for the lamplighter family\n";
    return kHypothesis;
  }
  std::cout << finiteness_report(*L).to_json().dump() << "\n";
  return kPass;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Self-similar groups from virtual endomorphisms"};
  app.require_subcommand(1);

  std::string config, expr, format = "dot", output;
  int depth = 0;
  std::size_t cap = 1024;
  std::vector<std::string> suites;
  SuiteOptions opts;

  auto *build = app.add_subcommand("build", "Construct an instance and print a summary");
  build->add_option("config", config, "Instance config (JSON)")->required();

  auto *dec = app.add_subcommand("decompose", "Print the wreath decomposition of an element");
  dec->add_option("config", config, "Instance config (JSON)")->required();
  dec->add_option("expr", expr, "Element expression")->required();
  dec->add_option("--depth", depth, "Print the portrait to this depth as JSON")->check(CLI::Range(1, 32));

  auto *aut = app.add_subcommand("automaton", "Compute the state automaton of an element");
  aut->add_option("config", config, "Instance config (JSON)")->required();
  aut->add_option("expr", expr, "Element expression")->required();
  aut->add_option("--cap", cap, "Maximum number of states")->check(CLI::PositiveNumber)->capture_default_str();
  aut->add_option("--format", format, "Output format")->check(CLI::IsMember({"dot", "json"}))->capture_default_str();
  aut->add_option("-o,--output", output, "Output file (default: stdout)");

  auto *ver = app.add_subcommand("verify", "Run verification suites");
  ver->add_option("config", config, "Instance config (JSON)")->required();
  ver->add_option("--suite", suites, "Suite to run (repeatable; default: core and the family suite)")
      ->check(CLI::IsMember(suite_names()));
  ver->add_option("--seed", opts.seed, "Random seed")->capture_default_str();
  ver->add_option("--pairs", opts.pairs, "Random pairs for the product rule")->capture_default_str();
  ver->add_option("--depth", opts.depth, "Product rule depth")->capture_default_str();
  ver->add_option("--samples", opts.samples, "Random samples for sampled checks")->capture_default_str();

  auto *tame = app.add_subcommand("tame", "Print the finiteness report (lamplighter family)");
  tame->add_option("config", config, "Instance config (JSON)")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int code = app.exit(e);
    return code == 0 ? kPass : kInput;
  }

  try {
    if (*build) return cmd_build(config);
    if (*dec) return cmd_decompose(config, expr, depth);
    if (*aut) return cmd_automaton(config, expr, cap, format, output);
    if (*ver) return cmd_verify(config, suites, opts);
    if (*tame) return cmd_tame(config);
  } catch (const IoError &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInput;
  } catch (const ParseError &e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kInput;
  } catch (const InvalidConfig &e) {
    std::cerr << "invalid configuration: " << e.what() << "\n";
    return kHypothesis;
  } catch (const std::invalid_argument &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInput;
  } catch (const std::exception &e) {
    std::cerr << "verification error: " << e.what() << "\n";
    return kVerification;
  }
  return kPass;
}
