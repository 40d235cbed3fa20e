#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "dforge_cli/jobs.hpp"
#include "dforge_cli/selftest.hpp"

using dforge::io::Json;

namespace {

int fail(int code, const char* kind, const std::string& msg, long required = -1) {
  Json e;
  e["error"] = kind;
  e["message"] = msg;
  if (required >= 0) e["required_N"] = std::to_string(required);
  std::cerr << e.dump() << "\n";
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Drinfeld modular curves: census, Tate-Drinfeld expansions, stable reduction"};
  app.require_subcommand(1);
  dforge::io::JobConfig cfg;
  std::string input;
  std::uint64_t seed = 20260101;
  std::string fault;
  std::uint32_t spec_m = 0;

  auto* census = app.add_subcommand("census", "cusp and component census of X(f)");
  census->set_help_flag("--help", "print this help and exit");
  census->add_option("--q", cfg.q, "size of the constant field")->required();
  census->add_option("--f", cfg.f, "f little-endian, e.g. 0,1 for T")->required();
  census->add_option("--h", cfg.h, "class number h(A)");

  auto* tate = app.add_subcommand("tate", "Tate-Drinfeld module mod x^{N+1}");
  tate->add_option("--q", cfg.q, "size of the constant field")->required();
  tate->add_option("--f", cfg.f, "f little-endian")->required();
  tate->add_option("--N", cfg.N, "x-adic precision")->required();
  tate->add_option("--specialise", spec_m, "emit a reduce input over F_{q^m} instead");

  auto* reduce = app.add_subcommand("reduce", "stable reduction of a module over F_{q^m}((pi))");
  reduce->add_option("input", input, "input module file (JSON), - for stdin")->required();
  reduce->add_option("--D", cfg.D, "tau-degree of the approximation");

  auto* selftest = app.add_subcommand("selftest", "run the property suites");
  selftest->add_option("--seed", seed, "base seed");
  selftest->add_option("--inject-fault", fault, "corrupt one suite to demonstrate failure reporting")
      ->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return 2;
  }

  try {
    Json out;
    if (*census) {
      out = dforge::io::cmd_census(cfg);
    } else if (*tate) {
      if (spec_m) cfg.specialise = spec_m;
      out = dforge::io::cmd_tate(cfg);
    } else if (*reduce) {
      Json doc;
      try {
        if (input == "-") {
          doc = Json::parse(std::cin);
        } else {
          std::ifstream in(input);
          if (!in) return fail(2, "config", "cannot open " + input);
          doc = Json::parse(in);
        }
      } catch (const Json::parse_error& e) {
        return fail(2, "config", std::string("input is not valid JSON: ") + e.what());
      }
      out = dforge::io::cmd_reduce(doc, cfg.D);
    } else if (*selftest) {
      const auto r = dforge::io::run_selftest(seed, fault);
      out = dforge::io::selftest_to_json(seed, r);
      std::cout << out.dump() << "\n";
      return out["verdict"] == "pass" ? 0 : 1;
    }
    std::cout << out.dump() << "\n";
    return 0;
  } catch (const dforge::ConfigError& e) {
    return fail(2, "config", e.what());
  } catch (const dforge::PrecisionError& e) {
    return fail(3, "precision", e.what(), e.required());
  } catch (const dforge::MathError& e) {
    return fail(4, "math", e.what());
  } catch (const Json::exception& e) {
    return fail(2, "config", std::string("malformed input document: ") + e.what());
  }
}
