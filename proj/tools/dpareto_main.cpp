// Copyright 2026 The DPareto Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <chrono>
#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "dpareto/driver.hpp"
#include "dpareto/errors.hpp"
#include "dpareto/math_util.hpp"
#include "dpareto/privacy.hpp"
#include "dpareto/problems.hpp"
#include "dpareto/stats.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace dpareto;

namespace {

constexpr const char* kVersion = "0.1.0";

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitRuntime = 3;

std::uint64_t fnv1a64(const std::string& text) {
  std::uint64_t hash = 1469598103934665603ULL;
  for (unsigned char c : text) {
    hash ^= c;
    hash *= 1099511628211ULL;
  }
  return hash;
}

std::string hex64(std::uint64_t value) {
  char buf[20];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(value));
  return buf;
}

std::string timestamp_utc() {
  const std::time_t now = std::time(nullptr);
  char buf[32];
  std::tm tm_utc{};
  gmtime_r(&now, &tm_utc);
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm_utc);
  return buf;
}

// ---------------------------------------------------------------------------
// Experiment config

struct ExperimentConfig {
  std::string problem;
  std::string method = "bo";
  std::uint64_t seed = 0;
  int repetitions = 50;
  std::optional<double> delta;
  AntiIdealPoint anti_ideal{10.0, 1.0};
  int k0 = 16;
  int k = 64;
  int budget = 80;
  int points_per_dim = 3;
  std::string out_dir;
  json raw;  // canonical parsed config, hashed into the manifest

  // svt options
  int svt_queries = 100;
  int svt_positives = 10;

  // dataset source
  std::optional<json> dataset;
  std::optional<json> synthetic;

  std::optional<json> domain_override;
  std::optional<json> sampling;
  acq::AcquisitionConfig acquisition;
};

[[noreturn]] void config_fail(const std::string& field, const std::string& message) {
  throw ConfigError("config field '" + field + "': " + message);
}

template <typename T>
T get_or(const json& object, const std::string& field, T fallback) {
  if (!object.contains(field)) return fallback;
  try {
    return object.at(field).get<T>();
  } catch (const json::exception& e) {
    config_fail(field, e.what());
  }
}

ExperimentConfig parse_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config '" + path + "'");
  json raw;
  try {
    raw = json::parse(in);
  } catch (const json::exception& e) {
    throw ConfigError("config parse error: " + std::string(e.what()));
  }

  ExperimentConfig config;
  config.raw = raw;
  if (!raw.contains("problem")) config_fail("problem", "is required");
  config.problem = raw.at("problem").get<std::string>();
  const std::vector<std::string> known{"svt", "output_perturbed_logreg", "dpsgd_logreg",
                                       "dpsgd_svm", "dpadam_logreg"};
  if (std::find(known.begin(), known.end(), config.problem) == known.end()) {
    config_fail("problem", "unknown problem '" + config.problem + "'");
  }
  config.method = get_or<std::string>(raw, "method", "bo");
  if (config.method != "bo" && config.method != "random" && config.method != "grid") {
    config_fail("method", "must be one of bo, random, grid");
  }
  config.seed = get_or<std::uint64_t>(raw, "seed", 0);
  config.repetitions = get_or<int>(raw, "repetitions", 50);
  if (config.repetitions < 1) config_fail("repetitions", "must be >= 1");
  if (raw.contains("delta")) config.delta = raw.at("delta").get<double>();
  if (raw.contains("anti_ideal")) {
    const auto& anti = raw.at("anti_ideal");
    if (!anti.is_array() || anti.size() != 2) config_fail("anti_ideal", "expected [epsilon, error]");
    config.anti_ideal = {anti[0].get<double>(), anti[1].get<double>()};
  }
  if (raw.contains("budgets")) {
    const auto& budgets = raw.at("budgets");
    config.k0 = get_or<int>(budgets, "k0", config.k0);
    config.k = get_or<int>(budgets, "k", config.k);
    config.budget = get_or<int>(budgets, "budget", config.budget);
    config.points_per_dim = get_or<int>(budgets, "points_per_dim", config.points_per_dim);
  }
  if (config.k0 < 2 || config.k < 0 || config.budget < 1 || config.points_per_dim < 2) {
    config_fail("budgets", "require k0 >= 2, k >= 0, budget >= 1, points_per_dim >= 2");
  }
  config.out_dir = get_or<std::string>(raw, "out_dir", "dpareto-out");
  if (raw.contains("svt")) {
    config.svt_queries = get_or<int>(raw.at("svt"), "queries", 100);
    config.svt_positives = get_or<int>(raw.at("svt"), "positives", 10);
    if (config.svt_positives < 0 || config.svt_positives > config.svt_queries) {
      config_fail("svt", "need 0 <= positives <= queries");
    }
  }
  if (raw.contains("dataset")) config.dataset = raw.at("dataset");
  if (raw.contains("synthetic")) config.synthetic = raw.at("synthetic");
  if (raw.contains("domain")) config.domain_override = raw.at("domain");
  if (raw.contains("sampling")) config.sampling = raw.at("sampling");
  if (raw.contains("acquisition")) {
    const auto& acquisition = raw.at("acquisition");
    config.acquisition.candidate_count =
        get_or<int>(acquisition, "candidates", config.acquisition.candidate_count);
    config.acquisition.refine_top =
        get_or<int>(acquisition, "refine_top", config.acquisition.refine_top);
    config.acquisition.refine_iters =
        get_or<int>(acquisition, "refine_iters", config.acquisition.refine_iters);
  }

  // Environment overrides.
  if (const char* env_seed = std::getenv("DPARETO_SEED")) {
    config.seed = std::strtoull(env_seed, nullptr, 10);
  }
  if (const char* env_out = std::getenv("DPARETO_OUT")) {
    config.out_dir = env_out;
  }
  return config;
}

HyperparameterDomain apply_domain_override(HyperparameterDomain domain, const json& override_list) {
  if (!override_list.is_array()) config_fail("domain", "expected an array of dimensions");
  std::vector<Dimension> dims(domain.dims());
  for (const auto& entry : override_list) {
    const std::string name = entry.at("name").get<std::string>();
    bool found = false;
    for (auto& dim : dims) {
      if (dim.name != name) continue;
      found = true;
      dim.low = get_or<double>(entry, "low", dim.low);
      dim.high = get_or<double>(entry, "high", dim.high);
      if (entry.contains("scale")) {
        const std::string scale = entry.at("scale").get<std::string>();
        if (scale == "linear") {
          dim.scale = Scale::kLinear;
        } else if (scale == "log") {
          dim.scale = Scale::kLog;
        } else {
          config_fail("domain", "scale must be linear or log");
        }
      }
      if (entry.contains("integral")) dim.integral = entry.at("integral").get<bool>();
    }
    if (!found) config_fail("domain", "no dimension named '" + name + "'");
  }
  return HyperparameterDomain(dims);
}

driver::SamplingDistribution parse_sampling(const json& sampling_list,
                                            const HyperparameterDomain& domain) {
  driver::SamplingDistribution sampling = driver::SamplingDistribution::uniform_over(domain);
  if (!sampling_list.is_array()) config_fail("sampling", "expected an array");
  for (const auto& entry : sampling_list) {
    const std::string name = entry.at("name").get<std::string>();
    const std::size_t index = domain.index_of(name);
    driver::DimSampler& sampler = sampling.dims[index];
    const std::string kind = entry.at("distribution").get<std::string>();
    if (kind == "uniform") {
      sampler.kind = driver::DimSampler::Kind::kUniform;
      sampler.a = entry.at("a").get<double>();
      sampler.b = entry.at("b").get<double>();
    } else if (kind == "normal") {
      sampler.kind = driver::DimSampler::Kind::kNormal;
      sampler.a = entry.at("mu").get<double>();
      sampler.b = entry.at("sigma").get<double>();
    } else if (kind == "shifted_exponential") {
      sampler.kind = driver::DimSampler::Kind::kShiftedExponential;
      sampler.a = entry.at("rate").get<double>();
      sampler.b = entry.at("shift").get<double>();
    } else if (kind == "domain_uniform") {
      sampler.kind = driver::DimSampler::Kind::kDomainUniform;
    } else {
      config_fail("sampling", "unknown distribution '" + kind + "'");
    }
    sampler.int_valued = get_or<bool>(entry, "int_valued", domain.dim(index).integral);
    if (entry.contains("accept")) {
      const auto& accept = entry.at("accept");
      if (!accept.is_array() || accept.size() != 2) config_fail("sampling", "accept = [lo, hi]");
      sampler.accept_lo = accept[0].get<double>();
      sampler.accept_hi = accept[1].get<double>();
    }
  }
  return sampling;
}

std::shared_ptr<const mech::Dataset> build_dataset(const ExperimentConfig& config) {
  if (config.dataset.has_value()) {
    const json& spec = *config.dataset;
    const std::string path = spec.at("path").get<std::string>();
    const std::string format_name = get_or<std::string>(spec, "format", "csv");
    mech::DatasetFormat format;
    if (format_name == "csv") {
      format = mech::DatasetFormat::kCsv;
    } else if (format_name == "libsvm") {
      format = mech::DatasetFormat::kLibsvm;
    } else {
      config_fail("dataset.format", "must be csv or libsvm");
    }
    mech::LoadOptions options;
    options.subsample = get_or<std::int64_t>(spec, "subsample", 0);
    options.seed = get_or<std::uint64_t>(spec, "seed", config.seed);
    options.test_fraction = get_or<double>(spec, "test_fraction", 0.2);
    options.normalize = get_or<bool>(spec, "normalize", true);
    return std::make_shared<const mech::Dataset>(mech::load_dataset(path, format, options));
  }
  json spec = config.synthetic.value_or(json::object());
  const int train = get_or<int>(spec, "train", 600);
  const int test = get_or<int>(spec, "test", 150);
  const int dims = get_or<int>(spec, "dims", 2);
  const double separation = get_or<double>(spec, "separation", 4.0);
  const std::uint64_t seed = get_or<std::uint64_t>(spec, "seed", config.seed);
  return std::make_shared<const mech::Dataset>(
      mech::make_synthetic_dataset(train, test, dims, separation, seed));
}

driver::Problem build_problem(const ExperimentConfig& config, RngStream root) {
  driver::Problem problem;
  if (config.problem == "svt") {
    problems::SvtOptions options;
    options.queries = config.svt_queries;
    options.positives = config.svt_positives;
    options.repetitions = config.repetitions;
    options.anti_ideal = config.anti_ideal;
    problem = problems::make_svt_problem(options, root.child(1000));
    problem.delta = config.delta.value_or(0.0);
  } else if (config.problem == "output_perturbed_logreg") {
    problems::OutputPerturbationOptions options;
    options.delta = config.delta.value_or(1e-6);
    options.repetitions = config.repetitions;
    options.anti_ideal = config.anti_ideal;
    problem = problems::make_output_perturbation_problem(build_dataset(config), options);
  } else {
    problems::TrainingOptions options;
    options.delta = config.delta.value_or(1e-6);
    options.repetitions = config.repetitions;
    options.anti_ideal = config.anti_ideal;
    if (config.problem == "dpsgd_logreg") {
      options.trainer = problems::TrainerKind::kSgdLogistic;
    } else if (config.problem == "dpsgd_svm") {
      options.trainer = problems::TrainerKind::kSgdHinge;
    } else {
      options.trainer = problems::TrainerKind::kAdamLogistic;
    }
    auto data = build_dataset(config);
    problem = problems::make_training_problem(data, options);
    if (config.domain_override.has_value()) {
      problem.domain = apply_domain_override(problem.domain, *config.domain_override);
      const auto lot = problem.domain.dim(problem.domain.index_of("lot_size"));
      if (lot.high > static_cast<double>(data->n_train())) {
        config_fail("domain", "lot_size upper bound exceeds training rows");
      }
    }
    return problem;
  }
  if (config.domain_override.has_value()) {
    problem.domain = apply_domain_override(problem.domain, *config.domain_override);
  }
  return problem;
}

// ---------------------------------------------------------------------------
// run

std::string config_hash(const ExperimentConfig& config) {
  return hex64(fnv1a64(config.raw.dump() + "|seed=" + std::to_string(config.seed) +
                       "|out=" + config.out_dir));
}

void write_manifest(const fs::path& path, const ExperimentConfig& config) {
  json manifest;
  manifest["config_hash"] = config_hash(config);
  manifest["seed"] = config.seed;
  manifest["version"] = kVersion;
  manifest["created_at"] = timestamp_utc();
  std::ofstream out(path);
  out << manifest.dump(2) << "\n";
}

int run_command(const std::string& config_path) {
  const ExperimentConfig config = parse_config(config_path);
  const RngStream root{config.seed, 0};
  driver::Problem problem = build_problem(config, root);

  fs::create_directories(config.out_dir);
  const fs::path out_dir(config.out_dir);
  const fs::path evals_path = out_dir / "evals.jsonl";
  const fs::path manifest_path = out_dir / "manifest.json";

  if (fs::exists(manifest_path)) {
    std::ifstream in(manifest_path);
    json manifest;
    try {
      manifest = json::parse(in);
    } catch (const json::exception&) {
      throw ConfigError("existing manifest.json is unreadable; refusing to resume");
    }
    if (manifest.value("config_hash", "") != config_hash(config)) {
      throw ConfigError("existing run in '" + config.out_dir +
                        "' was produced by a different config; refusing to resume");
    }
  }

  std::vector<Evaluation> resume;
  if (fs::exists(evals_path)) {
    std::ifstream in(evals_path);
    resume = read_evaluation_log(in, &problem.domain);
  }

  std::ofstream evals_out(evals_path, std::ios::app);
  if (!evals_out) throw ConfigError("cannot open '" + evals_path.string() + "' for append");
  std::vector<std::string> names;
  for (const auto& dim : problem.domain.dims()) names.push_back(dim.name);

  driver::RunHooks hooks;
  hooks.resume = resume.empty() ? nullptr : &resume;
  hooks.on_evaluation = [&](const Evaluation& evaluation, int index, bool resumed) {
    if (resumed) return;
    append_evaluation_jsonl(evals_out, evaluation, names);
    evals_out.flush();
    std::cerr << "evaluation " << index << ": epsilon=" << format_display(evaluation.objectives.epsilon)
              << " error=" << format_display(evaluation.objectives.error) << "\n";
  };

  driver::RunResult result;
  if (config.method == "bo") {
    acq::AcquisitionConfig acquisition = config.acquisition;
    result = driver::dpareto_run(problem, config.k0, config.k, acquisition, root, hooks);
  } else if (config.method == "random") {
    driver::SamplingDistribution sampling =
        config.sampling.has_value() ? parse_sampling(*config.sampling, problem.domain)
                                    : driver::SamplingDistribution::uniform_over(problem.domain);
    result = driver::random_search_run(problem, sampling, config.budget, root, hooks);
  } else {
    result = driver::grid_search_run(problem, config.points_per_dim, root, hooks);
  }

  {
    std::ofstream front_out(out_dir / "front.csv");
    write_front_csv(front_out, result.front);
  }
  {
    std::ofstream trajectory_out(out_dir / "trajectory.csv");
    trajectory_out << "index,hypervolume\n";
    for (const auto& [index, hv] : result.hv_trajectory) {
      trajectory_out << index << ',' << format_double(hv) << '\n';
    }
  }
  write_manifest(manifest_path, config);
  for (const std::string& note : result.notes) std::cerr << "note: " << note << "\n";
  std::cout << "evaluations=" << result.evaluations.size()
            << " front_size=" << result.front.size() << " hypervolume="
            << format_display(result.hv_trajectory.empty() ? 0.0
                                                           : result.hv_trajectory.back().second)
            << "\n";
  return kExitOk;
}

// ---------------------------------------------------------------------------
// analyze

std::vector<Evaluation> load_log(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open evaluation log '" + path + "'");
  return read_evaluation_log(in, nullptr);
}

ParetoFront front_of(const std::vector<Evaluation>& evaluations) {
  std::vector<ObjectivePoint> points;
  points.reserve(evaluations.size());
  for (const auto& evaluation : evaluations) points.push_back(evaluation.objectives);
  return pareto_front(std::move(points));
}

AntiIdealPoint parse_anti_ideal(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) {
    throw ConfigError("--anti-ideal expects 'epsilon,error'");
  }
  try {
    return {std::stod(text.substr(0, comma)), std::stod(text.substr(comma + 1))};
  } catch (const std::exception&) {
    throw ConfigError("--anti-ideal expects numeric 'epsilon,error'");
  }
}

void emit(const std::string& out_path, const std::string& content) {
  if (out_path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw ConfigError("cannot open '" + out_path + "' for writing");
  out << content;
}

int analyze_front(const std::string& log_path, const std::string& out_path) {
  std::ostringstream csv;
  write_front_csv(csv, front_of(load_log(log_path)));
  emit(out_path, csv.str());
  return kExitOk;
}

int analyze_hv(const std::string& log_path, const AntiIdealPoint& anti) {
  std::cout << format_display(hypervolume(front_of(load_log(log_path)), anti)) << "\n";
  return kExitOk;
}

int analyze_trajectory(const std::string& log_path, const AntiIdealPoint& anti,
                       const std::string& out_path) {
  const auto evaluations = load_log(log_path);
  std::ostringstream csv;
  csv << "index,hypervolume\n";
  for (const auto& [index, hv] : driver::hv_trajectory(evaluations, anti)) {
    csv << index << ',' << format_double(hv) << '\n';
  }
  emit(out_path, csv.str());
  return kExitOk;
}

int analyze_variability(const std::string& log_path, const std::string& out_path) {
  const auto evaluations = load_log(log_path);
  const auto fronts = driver::variability_fronts(evaluations);
  std::ostringstream csv;
  csv << "epsilon,error,kind\n";
  auto append = [&csv](const ParetoFront& front, const char* kind) {
    for (const auto& p : front.points) {
      csv << format_double(p.epsilon) << ',' << format_double(p.error) << ',' << kind << '\n';
    }
  };
  append(fronts.best, "best");
  append(fronts.mean, "mean");
  append(fronts.worst, "worst");
  emit(out_path, csv.str());
  return kExitOk;
}

int analyze_compare(const std::string& bo_path, const std::vector<std::string>& random_paths,
                    const AntiIdealPoint& anti) {
  driver::RunResult bo;
  bo.evaluations = load_log(bo_path);
  std::vector<driver::RunResult> chunks;
  for (const auto& path : random_paths) {
    driver::RunResult chunk;
    chunk.evaluations = load_log(path);
    chunks.push_back(std::move(chunk));
  }
  const auto comparison = stats::compare_hv(bo, chunks, anti);
  std::cout << "mean_diff=" << format_display(comparison.mean_diff) << " ci95=("
            << format_display(comparison.ci_low) << "," << format_display(comparison.ci_high)
            << ") t=" << format_display(comparison.t_stat) << " dof=" << comparison.dof
            << " significant_p<0.001=" << (comparison.significant_p001 ? "yes" : "no");
  if (comparison.degenerate) std::cout << " degenerate=yes";
  std::cout << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Privacy-utility Pareto front discovery toolkit"};
  app.require_subcommand(1);

  // run
  std::string config_path;
  CLI::App* run = app.add_subcommand("run", "Execute an experiment config");
  run->add_option("config", config_path, "JSON experiment config")->required();

  // account
  CLI::App* account = app.add_subcommand("account", "Standalone privacy accountant queries");
  account->require_subcommand(1);
  double opt_b = 0, opt_c = 0, opt_sigma = 0, opt_sens = 1, opt_delta = 1e-6, opt_gamma = 0;
  std::int64_t opt_n = 0, opt_m = 0, opt_t = 0;
  int opt_order = 2;

  CLI::App* account_svt = account->add_subcommand("svt", "Closed-form SVT epsilon");
  account_svt->add_option("--b", opt_b, "total noise level")->required();
  account_svt->add_option("--C", opt_c, "answer bound")->required();

  CLI::App* account_gauss = account->add_subcommand("gaussian", "Analytic Gaussian mechanism");
  account_gauss->add_option("--sigma", opt_sigma, "noise standard deviation")->required();
  account_gauss->add_option("--sens", opt_sens, "L2 sensitivity")->required();
  account_gauss->add_option("--delta", opt_delta, "target delta")->required();

  CLI::App* account_dpsgd = account->add_subcommand("dpsgd", "Subsampled Gaussian composition");
  account_dpsgd->add_option("--n", opt_n, "dataset size")->required();
  account_dpsgd->add_option("--m", opt_m, "lot size")->required();
  account_dpsgd->add_option("--T", opt_t, "epochs")->required();
  account_dpsgd->add_option("--sigma", opt_sigma, "noise multiplier (std/sensitivity)")->required();
  account_dpsgd->add_option("--delta", opt_delta, "target delta")->required();

  CLI::App* account_sub = account->add_subcommand("subsampled", "Single-order subsampled RDP");
  account_sub->add_option("--order", opt_order, "integer order >= 2")->required();
  account_sub->add_option("--sigma", opt_sigma, "noise multiplier")->required();
  account_sub->add_option("--gamma", opt_gamma, "sampling fraction")->required();

  // analyze
  CLI::App* analyze = app.add_subcommand("analyze", "Recompute statistics from evaluation logs");
  analyze->require_subcommand(1);
  std::string log_path, out_path, anti_text = "10,1", bo_path;
  std::vector<std::string> random_paths;

  CLI::App* analyze_front_cmd = analyze->add_subcommand("front", "Pareto front CSV");
  analyze_front_cmd->add_option("log", log_path, "evals.jsonl")->required();
  analyze_front_cmd->add_option("--out", out_path, "output file (default stdout)");

  CLI::App* analyze_hv_cmd = analyze->add_subcommand("hv", "Front hypervolume");
  analyze_hv_cmd->add_option("log", log_path, "evals.jsonl")->required();
  analyze_hv_cmd->add_option("--anti-ideal", anti_text, "epsilon,error (default 10,1)");

  CLI::App* analyze_trajectory_cmd = analyze->add_subcommand("trajectory", "Prefix hypervolume CSV");
  analyze_trajectory_cmd->add_option("log", log_path, "evals.jsonl")->required();
  analyze_trajectory_cmd->add_option("--anti-ideal", anti_text, "epsilon,error (default 10,1)");
  analyze_trajectory_cmd->add_option("--out", out_path, "output file (default stdout)");

  CLI::App* analyze_var_cmd = analyze->add_subcommand("variability", "Best/mean/worst fronts CSV");
  analyze_var_cmd->add_option("log", log_path, "evals.jsonl")->required();
  analyze_var_cmd->add_option("--out", out_path, "output file (default stdout)");

  CLI::App* analyze_compare_cmd =
      analyze->add_subcommand("compare", "BO vs random hypervolume t-test");
  analyze_compare_cmd->add_option("--bo", bo_path, "BO evals.jsonl")->required();
  analyze_compare_cmd->add_option("random", random_paths, "random evals.jsonl chunks (>= 2)")
      ->required();
  analyze_compare_cmd->add_option("--anti-ideal", anti_text, "epsilon,error (default 10,1)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfig;
  }

  try {
    if (run->parsed()) return run_command(config_path);
    if (account->parsed()) {
      double value = 0.0;
      if (account_svt->parsed()) {
        value = privacy::svt_epsilon(opt_b, opt_c);
      } else if (account_gauss->parsed()) {
        value = privacy::gaussian_mechanism_epsilon(opt_sigma, opt_sens, opt_delta);
      } else if (account_dpsgd->parsed()) {
        value = privacy::dpsgd_privacy_oracle(opt_m, opt_t, opt_sigma, opt_n, opt_delta);
      } else {
        value = privacy::rdp_subsampled_gaussian(opt_order, opt_sigma, opt_gamma);
      }
      std::cout << format_display(value) << "\n";
      return kExitOk;
    }
    const AntiIdealPoint anti = parse_anti_ideal(anti_text);
    if (analyze_front_cmd->parsed()) return analyze_front(log_path, out_path);
    if (analyze_hv_cmd->parsed()) return analyze_hv(log_path, anti);
    if (analyze_trajectory_cmd->parsed()) return analyze_trajectory(log_path, anti, out_path);
    if (analyze_var_cmd->parsed()) return analyze_variability(log_path, out_path);
    if (analyze_compare_cmd->parsed()) return analyze_compare(bo_path, random_paths, anti);
    return kExitConfig;
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitRuntime;
  }
}
