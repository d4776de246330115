#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "fbt/fbt.h"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitNumeric = 3;

struct Flags {
  std::optional<double> alpha, radius, lambda, eps, c, s, e_max;
  std::optional<long> n, seed, kmin, kmax, instances;
  std::optional<std::string> set_s, set_sigma, f;
  std::vector<double> eps_list;
  std::string config, out;
  std::size_t threads = 0;
  bool quiet = false;
};

void add_flags(CLI::App* app, Flags& fl) {
  app->add_option("--alpha", fl.alpha, "Bessel order, > -1/2");
  app->add_option("--R", fl.radius, "Grid radius");
  app->add_option("--n", fl.n, "Grid size");
  app->add_option("--S", fl.set_s, "Interval set, \"a,b;c,d\" or JSON");
  app->add_option("--Sigma", fl.set_sigma, "Interval set, \"a,b;c,d\" or JSON");
  app->add_option("--f", fl.f, "Test function: gaussian, gaussian-poly, bump, bessel-mode");
  app->add_option("--lambda", fl.lambda, "Dilation or frequency of the test function");
  app->add_option("--seed", fl.seed, "Random seed");
  app->add_option("--eps", fl.eps, "Thinness parameter");
  app->add_option("--eps-list", fl.eps_list, "Thinness parameters for the lp sweep")->delimiter(',');
  app->add_option("--c", fl.c, "Constant of the thin example");
  app->add_option("--kmin", fl.kmin, "First index of the thin example");
  app->add_option("--kmax", fl.kmax, "Last index of the thin example");
  app->add_option("--s", fl.s, "Moment exponent for the local inequalities");
  app->add_option("--E-max", fl.e_max, "Upper end of the random sets E");
  app->add_option("--instances", fl.instances, "Number of random instances");
  app->add_option("--config", fl.config, "JSON config file; flags override it");
  app->add_option("--out", fl.out, "Report directory (default $FBT_OUT_DIR or ./fbt-reports)");
  app->add_option("--threads", fl.threads, "Worker threads (default $FBT_THREADS or all cores)");
  app->add_flag("--quiet", fl.quiet, "Do not echo the report");
}

json set_value(const std::string& text) {
  const auto first = text.find_first_not_of(" \t");
  if (first != std::string::npos && text[first] == '[') return json::parse(text);
  return text;
}

json overrides(const Flags& fl) {
  json cfg = json::object();
  if (!fl.config.empty()) {
    std::ifstream in(fl.config);
    if (!in) throw std::runtime_error("cannot read config file " + fl.config);
    cfg = json::parse(in);
    if (!cfg.is_object()) throw std::runtime_error("config file must hold a JSON object");
  }
  auto put = [&](const char* key, const auto& v) {
    if (v) cfg[key] = *v;
  };
  put("alpha", fl.alpha);
  put("R", fl.radius);
  put("n", fl.n);
  put("f", fl.f);
  put("lambda", fl.lambda);
  put("seed", fl.seed);
  put("eps", fl.eps);
  put("c", fl.c);
  put("kmin", fl.kmin);
  put("kmax", fl.kmax);
  put("s", fl.s);
  put("E_max", fl.e_max);
  put("instances", fl.instances);
  if (fl.set_s) cfg["S"] = set_value(*fl.set_s);
  if (fl.set_sigma) cfg["Sigma"] = set_value(*fl.set_sigma);
  if (!fl.eps_list.empty()) cfg["eps_list"] = fl.eps_list;
  return cfg;
}

fs::path output_dir(const Flags& fl) {
  if (!fl.out.empty()) return fl.out;
  if (const char* env = std::getenv("FBT_OUT_DIR"); env && *env) return env;
  return "fbt-reports";
}

// Never overwrites: picks the first unused <command>-<k> stem.
fs::path fresh_stem(const fs::path& dir, const std::string& command) {
  for (int k = 1;; ++k) {
    const fs::path stem = dir / (command + "-" + std::to_string(k));
    if (!fs::exists(stem.string() + ".json")) return stem;
  }
}

int run(const std::string& command, const Flags& fl) {
  json cfg;
  try {
    cfg = overrides(fl);
  } catch (const std::exception& e) {
    std::cerr << "fbt: " << e.what() << '\n';
    return kExitUsage;
  }
  if (fl.threads) fbt_set_threads(fl.threads);

  char* report = nullptr;
  char* csv = nullptr;
  int passed = 0;
  const fbt_status st = fbt_run_experiment(command.c_str(), cfg.dump().c_str(), &report, &csv, &passed);
  if (st != FBT_OK) {
    std::cerr << "fbt " << command << ": " << fbt_last_error() << '\n';
    return st == FBT_ERR_NUMERIC || st == FBT_ERR_INTERNAL ? kExitNumeric : kExitUsage;
  }
  const std::string text(report), table(csv ? csv : "");
  fbt_free_string(report);
  fbt_free_string(csv);

  const fs::path dir = output_dir(fl);
  std::error_code ec;
  fs::create_directories(dir, ec);
  const fs::path stem = fresh_stem(dir, command);
  std::ofstream(stem.string() + ".json") << text;
  if (!table.empty()) std::ofstream(stem.string() + ".csv") << table;
  if (!fl.quiet) std::cout << text;
  std::cerr << "report: " << stem.string() << ".json" << (passed ? "" : " (assertions failed)") << '\n';
  return passed ? 0 : kExitFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fourier–Bessel transform experiments"};
  app.set_version_flag("--version", fbt_version());
  app.require_subcommand(1);
  Flags fl;
  const std::vector<std::pair<std::string, std::string>> commands = {
      {"transform", "Plancherel, Gaussian and round-trip checks"},
      {"translate", "Product formula and translation kernel checks"},
      {"annihilate", "Norms, certificate constants and inequality sweep for (S, Sigma)"},
      {"thin-check", "Thinness of an interval set"},
      {"thin-example", "The thin example family"},
      {"lp", "Partition, decomposition and thin Schur sweep"},
      {"local", "Local uncertainty inequalities in both regimes"},
      {"heisenberg", "Heisenberg ratio diagnostic"},
  };
  for (const auto& [name, help] : commands) add_flags(app.add_subcommand(name, help), fl);
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }
  for (const auto& [name, help] : commands)
    if (app.got_subcommand(name)) return run(name, fl);
  return kExitUsage;
}
