// Command-line surface for the coupled Hardy-Sobolev sharp-constant toolkit.
// Exit codes: 0 ok, 1 usage/precondition error, 2 regime-forbidden.

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "hssys/approx.hpp"
#include "hssys/cones.hpp"
#include "hssys/coupling.hpp"
#include "hssys/exponents.hpp"
#include "hssys/fiber.hpp"
#include "hssys/groundstate.hpp"
#include "hssys/radial.hpp"
#include "hssys/regime.hpp"

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct RunConfig {
  int N = 3;
  double s = 1.0;
  double s1 = -1.0, s2 = -1.0;  // optional split orders
  double alpha = 2.0, beta = 2.0;
  double lambda = 1.0, mu = 1.0, kappa = 1.0;
  double r_min = 1e-6, r_max = 1e6;
  int grid_points = 4096;
  unsigned long seed = 0;
  int jobs = 1;
  std::string output_dir;
};

void add_common_options(CLI::App* cmd, RunConfig& cfg, bool with_grid) {
  cmd->add_option("--N", cfg.N, "space dimension (>= 3)");
  cmd->add_option("--s", cfg.s, "singularity order, s1 = s2 = s");
  cmd->add_option("--s1", cfg.s1, "first singularity order");
  cmd->add_option("--s2", cfg.s2, "second singularity order");
  cmd->add_option("--alpha", cfg.alpha, "coupling power alpha (> 1)");
  cmd->add_option("--beta", cfg.beta, "coupling power beta (> 1)");
  cmd->add_option("--lambda", cfg.lambda, "first diagonal weight (> 0)");
  cmd->add_option("--mu", cfg.mu, "second diagonal weight (> 0)");
  cmd->add_option("--kappa", cfg.kappa, "coupling strength (!= 0)");
  cmd->add_option("--seed", cfg.seed, "seed recorded with outputs");
  cmd->add_option("--output-dir", cfg.output_dir, "directory for emitted files");
  if (with_grid) {
    cmd->add_option("--r-min", cfg.r_min, "inner truncation radius");
    cmd->add_option("--r-max", cfg.r_max, "outer truncation radius");
    cmd->add_option("--grid-points", cfg.grid_points, "radial node count");
  }
}

hssys::Exponents exponents_of(const RunConfig& cfg) {
  const double a = cfg.s1 > 0.0 ? cfg.s1 : cfg.s;
  const double b = cfg.s2 > 0.0 ? cfg.s2 : cfg.s;
  return hssys::Exponents::make(cfg.N, a, b);
}

hssys::CouplingParams params_of(const RunConfig& cfg) {
  return {cfg.lambda, cfg.mu, cfg.kappa, cfg.alpha, cfg.beta};
}

void emit(const RunConfig& cfg, const std::string& filename, const std::string& body) {
  if (cfg.output_dir.empty()) return;
  fs::create_directories(cfg.output_dir);
  std::ofstream os(fs::path(cfg.output_dir) / filename);
  os << body;
}

int cmd_regime(const RunConfig& cfg) {
  const auto rep = hssys::classify(exponents_of(cfg), params_of(cfg));
  const std::string body = hssys::to_json(rep) + "\n";
  std::cout << body;
  emit(cfg, "regime.json", body);
  return rep.classification == hssys::Classification::Inadmissible ? 2 : 0;
}

int cmd_sharp_constant(const RunConfig& cfg) {
  const auto exps = exponents_of(cfg);
  const auto params = params_of(cfg);
  const auto rep = hssys::classify(exps, params);
  if (rep.classification == hssys::Classification::Inadmissible) {
    std::cout << hssys::to_json(rep) << "\n";
    return 2;
  }
  const auto grid =
      hssys::RadialGrid::log_spaced(cfg.N, cfg.r_min, cfg.r_max, cfg.grid_points);
  const double mu_s = hssys::mu_s_quadrature(grid, exps.s1);
  const double S = rep.sharp_ratio * mu_s;
  const double c0 = hssys::ground_state_energy(rep.sharp_ratio, mu_s, exps.two_star_s1);

  json j;
  j["classification"] = hssys::to_string(rep.classification);
  if (rep.t0)
    j["t0"] = *rep.t0;
  else
    j["t0"] = nullptr;
  j["g_min"] = rep.sharp_ratio;
  j["mu_s"] = mu_s;
  j["S"] = S;
  j["c0"] = c0;
  const std::string body = j.dump(2) + "\n";
  std::cout << body;
  emit(cfg, "sharp_constant.json", body);
  return 0;
}

int cmd_ground_state(const RunConfig& cfg) {
  const auto exps = exponents_of(cfg);
  const auto params = params_of(cfg);
  const auto rep = hssys::classify(exps, params);
  if (rep.classification != hssys::Classification::NontrivialGroundState &&
      rep.classification != hssys::Classification::DegenerateFamily) {
    std::cerr << "ground-state: regime forbids a nontrivial pair (rule: " << rep.rule_fired
              << ", classification: " << hssys::to_string(rep.classification) << ")\n";
    return 2;
  }
  const auto grid =
      hssys::RadialGrid::log_spaced(cfg.N, cfg.r_min, cfg.r_max, cfg.grid_points);
  const double mu_s = hssys::mu_s_quadrature(grid, exps.s1);
  const auto pair = hssys::build_ground_state(rep, mu_s, grid, exps.s1, params);

  const auto [res_u, res_v] = hssys::system_residual(pair, exps.s1, params);
  const double poho = hssys::pohozaev_residual(pair, exps.s1, exps.s2, params);
  const bool decay_u = hssys::decay_check(pair.u, exps.s1);
  const bool decay_v = hssys::decay_check(pair.v, exps.s1);
  const double phi = hssys::pair_energy_quadrature(pair, exps.s1, params);
  const double energy_rel = std::abs(phi - pair.energy) / std::abs(pair.energy);

  json checks;
  checks["system_residual_u"] = res_u;
  checks["system_residual_v"] = res_v;
  checks["pohozaev_residual"] = poho;
  checks["decay_u"] = decay_u;
  checks["decay_v"] = decay_v;
  checks["energy_consistency_rel"] = energy_rel;
  checks["tolerances"] = {{"system_residual", 1e-3},
                          {"pohozaev_residual", 1e-3},
                          {"energy_consistency_rel", 1e-6}};
  checks["pass"] = {{"system_residual", res_u < 1e-3 && res_v < 1e-3},
                    {"pohozaev_residual", poho < 1e-3},
                    {"decay", decay_u && decay_v},
                    {"energy_consistency", energy_rel < 1e-6}};
  checks["all_pass"] = res_u < 1e-3 && res_v < 1e-3 && poho < 1e-3 && decay_u &&
                       decay_v && energy_rel < 1e-6;

  json meta = json::parse(hssys::pair_meta_json(pair));
  meta["seed"] = cfg.seed;
  meta["classification"] = hssys::to_string(rep.classification);

  const std::string checks_body = checks.dump(2) + "\n";
  std::cout << checks_body;
  if (!cfg.output_dir.empty()) {
    fs::create_directories(cfg.output_dir);
    std::ofstream csv(fs::path(cfg.output_dir) / "profile.csv");
    hssys::write_pair_csv(csv, pair);
    emit(cfg, "meta.json", meta.dump(2) + "\n");
    emit(cfg, "checks.json", checks_body);
  }
  return 0;
}

int cmd_sweep(const RunConfig& cfg, double from, double to, int count) {
  if (count < 2 || !(to > from)) throw CLI::ValidationError("sweep: need --count >= 2 and --to > --from");
  const auto exps = exponents_of(cfg);
  std::vector<std::string> rows(count);

  auto work = [&](int lo, int hi) {
    for (int i = lo; i < hi; ++i) {
      const double kappa = from + (to - from) * i / (count - 1);
      auto params = params_of(cfg);
      params.kappa = kappa;
      const auto rep = hssys::classify(exps, params);
      char buf[160];
      std::snprintf(buf, sizeof(buf), "%.17g,%s,%.17g,", kappa,
                    hssys::to_string(rep.classification), rep.sharp_ratio);
      rows[i] = std::string(buf) + (rep.t0 ? [=] {
        char tb[40];
        std::snprintf(tb, sizeof(tb), "%.17g", *rep.t0);
        return std::string(tb);
      }() : std::string(""));
    }
  };

  const int jobs = std::max(1, cfg.jobs);
  if (jobs == 1) {
    work(0, count);
  } else {
    std::vector<std::thread> pool;
    const int chunk = (count + jobs - 1) / jobs;
    for (int j = 0; j < jobs; ++j) {
      const int lo = j * chunk, hi = std::min(count, lo + chunk);
      if (lo < hi) pool.emplace_back(work, lo, hi);
    }
    for (auto& t : pool) t.join();
  }

  std::string body = "kappa,classification,sharp_ratio,t0\n";
  for (const auto& r : rows) body += r + "\n";
  std::cout << body;
  emit(cfg, "sweep.csv", body);
  return 0;
}

int cmd_approx(const RunConfig& cfg, std::vector<double> eps_list) {
  if (eps_list.empty()) throw CLI::ValidationError("approx: need at least one --eps");
  const auto exps = exponents_of(cfg);
  const auto grid =
      hssys::RadialGrid::log_spaced(cfg.N, cfg.r_min, cfg.r_max, cfg.grid_points);
  const auto rows =
      hssys::s_eps_monotonicity_sweep(grid, exps, params_of(cfg), eps_list);
  std::ostringstream os;
  hssys::write_sweep_csv(os, rows);
  std::cout << os.str();
  emit(cfg, "approx.csv", os.str());
  return 0;
}

int cmd_cones(const std::string& table_path, std::optional<double> tau,
              std::optional<int> glue_k, int N, double two_star_s,
              std::optional<double> glue_S) {
  std::ifstream is(table_path);
  if (!is) throw CLI::ValidationError("cones: cannot open table " + table_path);
  const auto table = hssys::read_table_csv(is);

  json j;
  auto violations = hssys::validate_table(table);
  j["violations"] = json::array();
  for (const auto& v : violations)
    j["violations"].push_back({{"i", v.i}, {"j", v.j}});
  if (tau) {
    const auto br = hssys::intermediate_value_locate(table, *tau);
    j["bracket"] = {{"theta_lo", br.theta_lo},
                    {"theta_hi", br.theta_hi},
                    {"open_at_zero", br.open_at_zero}};
  }
  if (glue_k && glue_S) {
    json energies = json::array();
    for (int k = 1; k <= *glue_k; ++k)
      energies.push_back(hssys::gluing_energy(k, N, two_star_s, *glue_S));
    j["gluing_energies"] = energies;
  }
  std::cout << j.dump(2) << "\n";
  return 0;
}

int cmd_fiber(const RunConfig& cfg, double t_min, double t_max, int count) {
  const auto exps = exponents_of(cfg);
  const hssys::FiberMap fm{params_of(cfg), exps.two_star_s1};
  std::ostringstream os;
  hssys::write_fiber_csv(os, fm, t_min, t_max, count);
  std::cout << os.str();
  emit(cfg, "fiber.csv", os.str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sharp constants, fiber maps and ground states of coupled "
               "Hardy-Sobolev critical systems on radial grids"};
  app.require_subcommand(1);

  RunConfig cfg;

  auto* regime = app.add_subcommand("regime", "classify the extremal regime");
  add_common_options(regime, cfg, false);

  auto* sharp = app.add_subcommand("sharp-constant", "sharp ratio, mu_s, S and c0");
  add_common_options(sharp, cfg, true);

  auto* ground = app.add_subcommand("ground-state", "build and verify the ground-state pair");
  add_common_options(ground, cfg, true);

  auto* sweep = app.add_subcommand("sweep", "kappa sweep of the regime report");
  add_common_options(sweep, cfg, false);
  double sweep_from = 0.1, sweep_to = 2.0;
  int sweep_count = 20;
  sweep->add_option("--from", sweep_from, "first kappa");
  sweep->add_option("--to", sweep_to, "last kappa");
  sweep->add_option("--count", sweep_count, "number of samples");
  sweep->add_option("--jobs", cfg.jobs, "worker threads (results merged in input order)");

  auto* approx = app.add_subcommand("approx", "regularized sharp constants over an eps list");
  add_common_options(approx, cfg, true);
  std::vector<double> eps_list;
  approx->add_option("--eps", eps_list, "eps values, strictly increasing in (0,s)");

  auto* cones = app.add_subcommand("cones", "cone-constant table calculus");
  std::string table_path;
  double tau_value = 0.0, cone_two_star = 4.0, glue_S_value = 0.0;
  int glue_k = 0, cone_N = 3;
  cones->add_option("--table", table_path, "CSV table theta,S,provenance")->required();
  auto* tau_opt = cones->add_option("--tau", tau_value, "target constant to bracket");
  cones->add_option("--glue-k", glue_k, "emit gluing energies for k = 1..K");
  cones->add_option("--glue-N", cone_N, "dimension for gluing energies");
  cones->add_option("--glue-two-star-s", cone_two_star, "critical exponent for gluing energies");
  auto* glue_S_opt = cones->add_option("--glue-S", glue_S_value, "sub-cone constant");

  auto* fiber = app.add_subcommand("fiber", "sample t,g,h to CSV");
  add_common_options(fiber, cfg, false);
  double t_min = 1e-3, t_max = 1e3;
  int t_count = 512;
  fiber->add_option("--t-min", t_min, "first abscissa (> 0)");
  fiber->add_option("--t-max", t_max, "last abscissa");
  fiber->add_option("--count", t_count, "sample count");

  CLI11_PARSE(app, argc, argv);

  try {
    if (regime->parsed()) return cmd_regime(cfg);
    if (sharp->parsed()) return cmd_sharp_constant(cfg);
    if (ground->parsed()) return cmd_ground_state(cfg);
    if (sweep->parsed()) return cmd_sweep(cfg, sweep_from, sweep_to, sweep_count);
    if (approx->parsed()) return cmd_approx(cfg, eps_list);
    if (cones->parsed())
      return cmd_cones(table_path, tau_opt->count() ? std::optional(tau_value) : std::nullopt,
                       glue_k > 0 ? std::optional(glue_k) : std::nullopt, cone_N,
                       cone_two_star,
                       glue_S_opt->count() ? std::optional(glue_S_value) : std::nullopt);
    if (fiber->parsed()) return cmd_fiber(cfg, t_min, t_max, t_count);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
