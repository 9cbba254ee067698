// Copyright 2026 The Incentive Policy Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end: generate, solve, curve, certify, simulate, profiles.
//
// Exit codes: 0 success, 2 input error, 3 certification failure, 4 resource
// cap exceeded.

#include <omp.h>

#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "incentive/concavize.h"
#include "incentive/errors.h"
#include "incentive/exact_oracle.h"
#include "incentive/generator.h"
#include "incentive/greedy.h"
#include "incentive/imperfect_info.h"
#include "incentive/instance.h"
#include "incentive/instance_io.h"
#include "incentive/report_io.h"
#include "json.hpp"

namespace fs = std::filesystem;
using nlohmann::ordered_json;

namespace incentive {
namespace {

constexpr char kToolVersion[] = "1.0.0";
constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitCertifyFail = 3;
constexpr int kExitResource = 4;

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path.string());
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

void write_file(const fs::path& path, const std::string& contents) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path.string());
  out << contents;
  if (!out) throw InputError("write failed for " + path.string());
}

// Collects what goes into the run manifest. The config hash covers the
// command, every non-path flag and the bytes of every input file; it does not
// depend on where inputs live or where outputs go.
class Manifest {
 public:
  explicit Manifest(std::string command)
      : command_(std::move(command)), start_(std::chrono::steady_clock::now()) {}

  void flag(const std::string& name, const std::string& value) {
    flags_[name] = value;
  }
  void input(const fs::path& path) { inputs_.push_back(path); }
  void output(const fs::path& path) { outputs_.push_back(path); }
  void seed(std::uint64_t s) { seed_ = s; }

  std::string config_hash() const {
    std::uint64_t h = fnv1a(command_);
    for (const auto& [k, v] : flags_) h = fnv1a(k + "=" + v + ";", h);
    for (const fs::path& p : inputs_) h = fnv1a(read_file(p), h);
    return hash_hex(h);
  }

  void write(const fs::path& path) const {
    ordered_json j;
    j["command"] = command_;
    j["inputs"] = ordered_json::array();
    for (const fs::path& p : inputs_) j["inputs"].push_back(p.string());
    j["flags"] = flags_;
    j["config_hash"] = config_hash();
    if (seed_) {
      j["seed"] = *seed_;
    } else {
      j["seed"] = nullptr;
    }
    j["tool_version"] = kToolVersion;
    const double runtime =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start_)
            .count();
    j["runtime_seconds"] = runtime;
    j["outputs"] = ordered_json::array();
    for (const fs::path& p : outputs_) j["outputs"].push_back(p.string());
    write_file(path, j.dump(2) + "\n");
  }

 private:
  std::string command_;
  std::chrono::steady_clock::time_point start_;
  std::map<std::string, std::string> flags_;
  std::vector<fs::path> inputs_;
  std::vector<fs::path> outputs_;
  std::optional<std::uint64_t> seed_;
};

fs::path manifest_beside(const fs::path& file) {
  return fs::path(file.string() + ".manifest.json");
}

FileFormat instance_format(const fs::path& path, const std::string& format) {
  return format.empty() ? format_from_path(path) : parse_format(format);
}

struct Options {
  std::string config;
  std::string instance;
  std::string out;
  std::string format;
  std::uint64_t seed = 0;
  double budget = 0.0;
  double max_budget = 0.0;
  double mu = 1.0;
  std::size_t reps = 1;
  std::string oracle = "dp";
  std::int64_t scale = 100;
};

int cmd_generate(const Options& o) {
  Manifest m("generate");
  m.input(o.config);
  m.seed(o.seed);
  m.flag("format", o.format);
  const GeneratorConfig config = GeneratorConfig::load(o.config);
  const Instance instance = synthesize_population(config, o.seed);
  const fs::path out(o.out);
  if (out.has_parent_path()) fs::create_directories(out.parent_path());
  save_instance(out, instance, instance_format(out, o.format));
  m.output(out);
  m.write(manifest_beside(out));
  std::cout << "individuals " << instance.size() << "\n"
            << "alternatives " << instance.num_alternatives() << "\n";
  return kExitOk;
}

int cmd_solve(const Options& o) {
  Manifest m("solve");
  m.input(o.instance);
  m.flag("budget", format_exact(o.budget));
  m.flag("format", o.format);
  const Instance instance =
      load_instance(o.instance, instance_format(o.instance, o.format));
  const auto profiles = concavize_all(instance);
  const GreedyResult r = solve(profiles, o.budget);

  const fs::path dir(o.out);
  fs::create_directories(dir);
  write_file(dir / "result.json", result_json(r));
  std::ostringstream alloc;
  write_allocation_csv(alloc, r.allocation);
  write_file(dir / "allocation.csv", alloc.str());
  std::ostringstream crv;
  write_curve_csv(crv, r.curve);
  write_file(dir / "curve.csv", crv.str());
  for (const char* name : {"result.json", "allocation.csv", "curve.csv"}) {
    m.output(dir / name);
  }
  m.write(dir / "manifest.json");

  std::cout << "welfare_kg " << format_number(r.welfare) << "\n"
            << "budget_used_eur " << format_number(r.budget_used) << "\n"
            << "gap_bound_kg " << format_number(r.gap_bound) << "\n"
            << "split_eff "
            << (r.split ? format_number(r.split->eff) : std::string("none"))
            << "\n"
            << "iterations " << r.iterations << "\n";
  return kExitOk;
}

int cmd_curve(const Options& o) {
  Manifest m("curve");
  m.input(o.instance);
  m.flag("max_budget", format_exact(o.max_budget));
  m.flag("format", o.format);
  const Instance instance =
      load_instance(o.instance, instance_format(o.instance, o.format));
  const auto profiles = concavize_all(instance);
  const WelfareCurve c = curve(profiles, o.max_budget);
  std::ostringstream text;
  write_curve_csv(text, c);
  const fs::path out(o.out);
  write_file(out, text.str());
  m.output(out);
  m.write(manifest_beside(out));
  std::cout << "breakpoints " << c.breakpoints.size() << "\n";
  return kExitOk;
}

int cmd_certify(const Options& o) {
  Manifest m("certify");
  m.input(o.instance);
  m.flag("budget", format_exact(o.budget));
  m.flag("oracle", o.oracle);
  m.flag("scale", std::to_string(o.scale));
  m.flag("format", o.format);
  const Instance instance =
      load_instance(o.instance, instance_format(o.instance, o.format));
  OracleConfig config;
  config.weight_scale = o.scale;
  if (o.oracle == "enumerate") {
    config.mode = OracleConfig::Mode::kEnumerate;
  } else if (o.oracle != "dp") {
    throw InputError("unknown oracle '" + o.oracle + "'");
  }
  const auto profiles = concavize_all(instance);
  const GreedyResult r = solve(profiles, o.budget);
  const ExactSolution exact = exact_solve(instance, o.budget, config);
  const bool pass = certify(r, exact.welfare);

  std::cout << "exact_welfare_kg " << format_number(exact.welfare) << "\n"
            << "greedy_welfare_kg " << format_number(r.welfare) << "\n"
            << "gap_kg " << format_number(exact.welfare - r.welfare) << "\n"
            << "bound_kg " << format_number(r.gap_bound) << "\n"
            << (pass ? "PASS" : "FAIL") << "\n";
  if (!o.out.empty()) {
    const fs::path out(o.out);
    ordered_json j;
    j["exact"] = ordered_json::parse(result_json(exact, o.budget));
    j["greedy"] = ordered_json::parse(result_json(r));
    j["verdict"] = pass ? "PASS" : "FAIL";
    write_file(out, j.dump(2) + "\n");
    m.output(out);
    m.write(manifest_beside(out));
  }
  return pass ? kExitOk : kExitCertifyFail;
}

struct Stats {
  double mean = 0.0;
  double std = 0.0;
};

Stats stats(const std::vector<double>& v) {
  Stats s;
  if (v.empty()) return s;
  s.mean = std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
  if (v.size() > 1) {
    double ss = 0.0;
    for (double x : v) ss += (x - s.mean) * (x - s.mean);
    s.std = std::sqrt(ss / static_cast<double>(v.size() - 1));
  }
  return s;
}

ordered_json stats_json(const std::vector<double>& v) {
  const Stats s = stats(v);
  // Round through the 6-digit formatter so reruns print identical text.
  return {{"mean", std::stod(format_number(s.mean))},
          {"std", std::stod(format_number(s.std))}};
}

int cmd_simulate(const Options& o) {
  Manifest m("simulate");
  m.input(o.instance);
  m.seed(o.seed);
  m.flag("budget", format_exact(o.budget));
  m.flag("mu", format_exact(o.mu));
  m.flag("reps", std::to_string(o.reps));
  m.flag("format", o.format);
  if (!(o.mu > 0.0)) throw InputError("--mu must be positive");
  if (o.reps == 0) throw InputError("--reps must be at least 1");
  const Instance instance =
      load_instance(o.instance, instance_format(o.instance, o.format));

  struct Run {
    SimulationReport imperfect;
    GreedyResult perfect;
  };
  std::vector<Run> runs(o.reps);
  const auto reps = static_cast<std::int64_t>(o.reps);
  // Each repetition uses seed + index and touches only its own slot.
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t k = 0; k < reps; ++k) {
    const auto stoch = StochasticInstance::create(
        instance, o.mu, o.seed + static_cast<std::uint64_t>(k));
    runs[k].imperfect = simulate_sequential(stoch, o.budget);
    runs[k].perfect = solve(concavize_all(stoch.realized()), o.budget);
  }

  const fs::path dir(o.out);
  fs::create_directories(dir);
  std::vector<double> rate, spent, welfare, proposals, accepted;
  std::vector<double> p_spent, p_welfare, p_proposals;
  for (std::size_t k = 0; k < runs.size(); ++k) {
    char stem[32];
    std::snprintf(stem, sizeof(stem), "run_%04zu", k);
    const SimulationReport& rep = runs[k].imperfect;
    write_file(dir / (std::string(stem) + ".json"), report_json(rep));
    std::ostringstream log;
    write_proposal_log_csv(log, rep);
    write_file(dir / (std::string(stem) + "_log.csv"), log.str());
    m.output(dir / (std::string(stem) + ".json"));
    m.output(dir / (std::string(stem) + "_log.csv"));
    rate.push_back(rep.acceptance_rate);
    spent.push_back(rep.budget_spent);
    welfare.push_back(rep.welfare);
    proposals.push_back(static_cast<double>(rep.proposals));
    accepted.push_back(static_cast<double>(rep.acceptances));
    p_spent.push_back(runs[k].perfect.budget_used);
    p_welfare.push_back(runs[k].perfect.welfare);
    p_proposals.push_back(static_cast<double>(runs[k].perfect.iterations));
  }
  ordered_json summary;
  summary["repetitions"] = o.reps;
  summary["seed"] = o.seed;
  summary["budget"] = std::stod(format_number(o.budget));
  summary["mu"] = std::stod(format_number(o.mu));
  summary["imperfect"] = {{"budget_spent", stats_json(spent)},
                          {"proposals", stats_json(proposals)},
                          {"accepted", stats_json(accepted)},
                          {"acceptance_rate", stats_json(rate)},
                          {"welfare_kg", stats_json(welfare)}};
  summary["perfect"] = {{"budget_spent", stats_json(p_spent)},
                        {"proposals", stats_json(p_proposals)},
                        {"accepted", stats_json(p_proposals)},
                        {"welfare_kg", stats_json(p_welfare)}};
  write_file(dir / "summary.json", summary.dump(2) + "\n");
  m.output(dir / "summary.json");
  m.write(dir / "manifest.json");

  const Stats r = stats(rate), w = stats(welfare), pw = stats(p_welfare);
  std::cout << "acceptance_rate_mean " << format_number(r.mean) << "\n"
            << "welfare_kg_mean " << format_number(w.mean) << "\n"
            << "perfect_welfare_kg_mean " << format_number(pw.mean) << "\n";
  return kExitOk;
}

int cmd_profiles(const Options& o) {
  const Instance instance =
      load_instance(o.instance, instance_format(o.instance, o.format));
  const auto profiles = concavize_all(instance);
  std::ostringstream text;
  write_profiles_csv(text, profiles);
  if (o.out.empty()) {
    std::cout << text.str();
  } else {
    write_file(o.out, text.str());
  }
  return kExitOk;
}

void apply_thread_env() {
  if (const char* env = std::getenv("INCENTIVE_THREADS")) {
    const int n = std::atoi(env);
    if (n > 0) omp_set_num_threads(n);
  }
}

}  // namespace
}  // namespace incentive

int main(int argc, char** argv) {
  using namespace incentive;
  apply_thread_env();

  CLI::App app{"Budget-constrained personalised incentive policies"};
  app.require_subcommand(1);
  Options o;

  auto* gen = app.add_subcommand("generate", "Synthesize a population");
  gen->add_option("--config", o.config, "Generator config (JSON)")->required();
  gen->add_option("--seed", o.seed, "Random seed")->required();
  gen->add_option("--out", o.out, "Output instance file")->required();
  gen->add_option("--format", o.format, "csv or json (default: extension)");

  auto* sol = app.add_subcommand("solve", "Greedy policy for one budget");
  sol->add_option("instance", o.instance, "Instance file")->required();
  sol->add_option("--budget", o.budget, "Budget (EUR)")->required();
  sol->add_option("--out", o.out, "Output directory")->required();
  sol->add_option("--format", o.format, "Instance format override");

  auto* crv = app.add_subcommand("curve", "Welfare curve breakpoints");
  crv->add_option("instance", o.instance, "Instance file")->required();
  crv->add_option("--max-budget", o.max_budget, "Largest budget (EUR)")
      ->required();
  crv->add_option("--out", o.out, "Output CSV")->required();
  crv->add_option("--format", o.format, "Instance format override");

  auto* cert = app.add_subcommand("certify", "Check the gap bound exactly");
  cert->add_option("instance", o.instance, "Instance file")->required();
  cert->add_option("--budget", o.budget, "Budget (EUR)")->required();
  cert->add_option("--oracle", o.oracle, "dp or enumerate");
  cert->add_option("--scale", o.scale, "DP budget units per EUR");
  cert->add_option("--out", o.out, "Optional verdict JSON");
  cert->add_option("--format", o.format, "Instance format override");

  auto* sim = app.add_subcommand("simulate", "Imperfect-information runs");
  sim->add_option("instance", o.instance, "Instance (systematic utilities)")
      ->required();
  sim->add_option("--mu", o.mu, "Gumbel scale (EUR)")->required();
  sim->add_option("--seed", o.seed, "Base seed")->required();
  sim->add_option("--budget", o.budget, "Budget (EUR)")->required();
  sim->add_option("--reps", o.reps, "Repetitions (seed + index)");
  sim->add_option("--out", o.out, "Output directory")->required();
  sim->add_option("--format", o.format, "Instance format override");

  auto* prof = app.add_subcommand("profiles", "Dump LP-extreme profiles");
  prof->add_option("instance", o.instance, "Instance file")->required();
  prof->add_option("--out", o.out, "Output CSV (default stdout)");
  prof->add_option("--format", o.format, "Instance format override");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitInput;
  }

  try {
    if (*gen) return cmd_generate(o);
    if (*sol) return cmd_solve(o);
    if (*crv) return cmd_curve(o);
    if (*cert) return cmd_certify(o);
    if (*sim) return cmd_simulate(o);
    if (*prof) return cmd_profiles(o);
  } catch (const ResourceLimitError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitResource;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const fs::filesystem_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
