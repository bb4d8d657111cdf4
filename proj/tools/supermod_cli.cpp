// supermod: verification suites, expression normalization, idempotent certificates.

#include <unistd.h>

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "supermod/io.hpp"
#include "supermod/landi.hpp"
#include "supermod/spheres.hpp"
#include "supermod/suites.hpp"

namespace {

using namespace supermod;

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

bool use_color() { return std::getenv("NO_COLOR") == nullptr && isatty(STDOUT_FILENO); }

int emit(const Report& r, const std::string& format) {
  if (format == "json") std::cout << r.to_json().dump(2) << "\n";
  else std::cout << r.to_text(use_color());
  return r.pass() ? kPass : kFail;
}

std::string suite_list() {
  std::string s = "suites:\n";
  for (const auto& e : suite_registry()) s += "  " + std::string(e.name) + "  " + e.summary + "\n";
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact arithmetic and checks for Grassmann-valued modules"};
  app.require_subcommand(1);
  app.footer(suite_list());

  std::string format = "text";
  std::uint64_t seed = 1;
  SuiteParams params;

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  std::string suite;
  verify->add_option("suite", suite, "suite name")->required();
  verify->add_option("--L", params.L, "odd generator count");
  verify->add_option("--n", params.n, "sphere dimension / Landi charge");
  verify->add_option("--max-n", params.max_n, "largest power (example-2-6)");
  verify->add_option("--count", params.count, "number of random samples");
  verify->add_option("--seed", seed, "random seed")->capture_default_str();
  verify->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));

  auto* list = app.add_subcommand("list", "list suites");

  auto* eval = app.add_subcommand("eval", "print the normal form of an expression");
  std::string expr, ring_file;
  eval->add_option("expr", expr, "expression")->required();
  eval->add_option("--ring", ring_file, "ring descriptor (JSON file)")->required();
  eval->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));

  auto* certify = app.add_subcommand("certify", "certify a morphism JSON file as an idempotent");
  std::string morphism_file;
  certify->add_option("file", morphism_file, "morphism JSON")->required();
  certify->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));

  auto* exporter = app.add_subcommand("export", "write a built-in morphism as JSON");
  std::string what;
  unsigned export_n = 1, export_L = 0;
  exporter->add_option("what", what, "sphere-projector or landi-projector")
      ->required()
      ->check(CLI::IsMember({"sphere-projector", "landi-projector"}));
  exporter->add_option("--n", export_n, "sphere dimension / Landi charge")->capture_default_str();
  exporter->add_option("--L", export_L, "odd generators adjoined (sphere only)")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kUsage;
  }

  try {
    if (*list) {
      std::cout << suite_list();
      return kPass;
    }
    if (*verify) return emit(run_suite(suite, params, seed), format);
    if (*eval) {
      const RingPtr ring = ring_from_json(load_json_file(ring_file));
      const SuperElement x = parse_expression(expr, ring);
      if (format == "json") std::cout << element_to_json(x).dump(2) << "\n";
      else std::cout << x.to_string() << "\n";
      return kPass;
    }
    if (*certify) return emit(certify_idempotent(morphism_from_json(load_json_file(morphism_file))), format);
    if (*exporter) {
      const SuperMorphism g = what == "sphere-projector"
                                  ? make_sphere_projector(grassmann_ring(export_L), export_n).g
                                  : projector_p(export_n);
      std::cout << morphism_to_json(g).dump(2) << "\n";
      return kPass;
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const UsageError& e) {
    std::cerr << "usage: " << e.what() << "\n";
    if (*verify && std::string(e.what()).rfind("unknown suite", 0) == 0) std::cerr << suite_list();
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
