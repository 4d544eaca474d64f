#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include "lindpur/accessibility.hpp"
#include "lindpur/problem_spec.hpp"
#include "lindpur/zeno.hpp"

namespace {

using nlohmann::json;
using namespace lindpur;

constexpr int kExitPass = 0;
constexpr int kExitExperimentFail = 1;
constexpr int kExitParseError = 2;
constexpr int kExitInvariantError = 3;
constexpr int kExitNotConverged = 4;

struct CommonOptions {
  std::string input;  // spec path; "-" or empty reads stdin
  std::string out;
  std::optional<double> tol;
  std::optional<double> time;
  std::optional<std::uint64_t> seed;
  std::vector<int> n_steps;
  std::optional<Index> max_dim;
};

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw SpecParseError("cannot open input file: " + path);
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void apply_overrides(ProblemSpec& spec, const CommonOptions& opts) {
  if (opts.tol) spec.params.tol = *opts.tol;
  if (opts.time) spec.params.t = *opts.time;
  if (opts.seed) spec.params.seed = *opts.seed;
  if (!opts.n_steps.empty()) spec.params.n_steps = opts.n_steps;
  if (opts.max_dim) spec.params.max_dim = *opts.max_dim;
}

void emit(const json& report, const std::string& out) {
  if (out.empty()) {
    std::cout << report.dump(2) << "\n";
  } else {
    std::ofstream f(out, std::ios::binary);
    if (!f) {
      throw std::runtime_error("cannot open output file: " + out);
    }
    f << report.dump(2) << "\n";
  }
}

json generation_summary(const LieBasis& basis) {
  std::map<int, int> counts;
  for (const auto& p : basis.generation_log) {
    counts[p.generation]++;
  }
  json out = json::array();
  for (const auto& [generation, count] : counts) {
    out.push_back({{"generation", generation}, {"count", count}});
  }
  return out;
}

int run_purify(const CommonOptions& opts) {
  const std::string text = read_input(opts.input);
  ProblemSpec spec = parse_problem_spec_text(text);
  apply_overrides(spec, opts);
  const double commute_tol = opts.tol.value_or(1e-10);

  const PurifiedSet purified = purify_lindbladians(spec.generators);
  std::vector<SuperOperator> assembled;
  for (const auto& g : purified.generators) {
    assembled.push_back(assemble(g));
  }
  json commutators = json::array();
  double max_norm = 0.0;
  for (std::size_t i = 0; i < assembled.size(); ++i) {
    for (std::size_t k = i + 1; k < assembled.size(); ++k) {
      const double norm = commutator(assembled[i], assembled[k]).norm();
      max_norm = std::max(max_norm, norm);
      commutators.push_back({{"i", i}, {"j", k}, {"norm", norm}});
    }
  }

  json gens = json::array();
  for (const auto& g : purified.generators) {
    json ls = json::array();
    for (const auto& l : g.lindblad_ops()) {
      ls.push_back(matrix_to_json(l));
    }
    gens.push_back({{"hamiltonian", matrix_to_json(g.hamiltonian())},
                    {"lindblad_ops", std::move(ls)}});
  }

  const bool pass = max_norm < commute_tol;
  const json report = {
      {"command", "purify"},
      {"spec_hash", content_hash(text)},
      {"seed", spec.params.seed},
      {"tol", commute_tol},
      {"system_dim", purified.system_dim},
      {"aux_dim", purified.aux_dim},
      {"purified_generators", std::move(gens)},
      {"commutator_norms", std::move(commutators)},
      {"max_commutator_norm", max_norm},
      {"pass", pass},
  };
  emit(report, opts.out);
  return pass ? kExitPass : kExitExperimentFail;
}

int run_zeno(const CommonOptions& opts, const std::string& csv_path) {
  const std::string text = read_input(opts.input);
  ProblemSpec spec = parse_problem_spec_text(text);
  apply_overrides(spec, opts);
  const double recovery_tol = opts.tol.value_or(1e-10);
  const Index j = spec.params.generator_index;
  const double t = spec.params.t;

  const PurifiedSet purified = purify_lindbladians(spec.generators);
  const Superprojector proj =
      superprojector_from_basis(purified.system_dim, fourier_mub(purified.aux_dim));
  const SuperOperator lifted = assemble(purified.generators[j]);

  json sweep = json::array();
  std::vector<int> ns;
  std::vector<double> errors;
  std::ostringstream csv;
  csv << "N,error\n";
  for (const int n : spec.params.n_steps) {
    const ZenoResult r = zeno_product(lifted, proj, t, n);
    sweep.push_back({{"n", n}, {"error", r.error}});
    ns.push_back(n);
    errors.push_back(r.error);
    csv << n << "," << r.error << "\n";
  }
  const std::optional<double> slope = fit_loglog_slope(ns, errors);

  Rng rng(spec.params.seed);
  const Operator rho0 = random_density(rng, purified.system_dim * purified.aux_dim);
  const ReducedDynamics recovery = reduced_dynamics(spec.generators, j, rho0, t);

  const bool slope_ok = !slope || std::abs(*slope + 1.0) <= 0.1;
  const bool pass = slope_ok && recovery.distance < recovery_tol;
  json report = {
      {"command", "zeno"},
      {"spec_hash", content_hash(text)},
      {"seed", spec.params.seed},
      {"tol", recovery_tol},
      {"t", t},
      {"generator_index", j},
      {"sweep", std::move(sweep)},
      {"slope", slope ? json(*slope) : json(nullptr)},
      {"recovery_residual", recovery.distance},
      {"pass", pass},
  };
  emit(report, opts.out);
  if (!csv_path.empty()) {
    std::ofstream f(csv_path, std::ios::binary);
    if (!f) {
      throw std::runtime_error("cannot open CSV file: " + csv_path);
    }
    f << csv.str();
  }
  return pass ? kExitPass : kExitExperimentFail;
}

int run_access(const CommonOptions& opts, Index pair_dim, Index purified_pair_dim) {
  std::string text;
  std::vector<SuperOperator> generators;
  Index dim = 0;
  std::string mode;
  double tol = opts.tol.value_or(1e-8);
  Index max_dim = opts.max_dim.value_or(0);
  std::uint64_t seed = opts.seed.value_or(0);
  std::optional<Index> expected;
  std::optional<Index> oracle;

  if (pair_dim > 0) {
    mode = "pair";
    text = "accessible-pair d=" + std::to_string(pair_dim);
    const AccessiblePair pair = accessible_pair(pair_dim);
    generators = {assemble(pair.drift), assemble(pair.control)};
    dim = pair_dim;
    oracle = full_gkls_dim(dim, tol);
    expected = oracle;
  } else if (purified_pair_dim > 0) {
    mode = "purified-pair";
    text = "purified-accessible-pair d=" + std::to_string(purified_pair_dim);
    const AccessiblePair pair = accessible_pair(purified_pair_dim);
    const PurifiedSet purified = purify_lindbladians({pair.drift, pair.control});
    for (const auto& g : purified.generators) {
      generators.push_back(assemble(g));
    }
    dim = purified.system_dim * purified.aux_dim;
    expected = 2;  // the purified pair commutes
  } else {
    mode = "spec";
    text = read_input(opts.input);
    ProblemSpec spec = parse_problem_spec_text(text);
    apply_overrides(spec, opts);
    tol = spec.params.tol;
    max_dim = spec.params.max_dim;
    seed = spec.params.seed;
    for (const auto& g : spec.generators) {
      generators.push_back(assemble(g));
    }
    dim = spec.dim;
    oracle = full_gkls_dim(dim, tol);
    expected = oracle;
  }

  const LieBasis closure = lie_closure(generators, tol, max_dim);
  const bool pass = closure.converged && expected && closure.dim() == *expected;
  const json report = {
      {"command", "access"},
      {"mode", mode},
      {"spec_hash", content_hash(text)},
      {"seed", seed},
      {"tol", tol},
      {"dim", dim},
      {"closure_dim", closure.dim()},
      {"oracle_dim", oracle ? json(*oracle) : json(nullptr)},
      {"expected_dim", expected ? json(*expected) : json(nullptr)},
      {"converged", closure.converged},
      {"generation_summary", generation_summary(closure)},
      {"pass", pass},
  };
  emit(report, opts.out);
  if (!closure.converged) return kExitNotConverged;
  return pass ? kExitPass : kExitExperimentFail;
}

int run_demo_appendix_a(const CommonOptions& opts) {
  const std::uint64_t seed = opts.seed.value_or(0);
  const double tol = opts.tol.value_or(1e-8);
  Rng rng(seed);
  const AppendixAReport r = appendix_a_demo(rng);

  const double expected_min_eig = (1.0 - std::sqrt(2.0)) / 2.0;
  Matrix expected_limit(2, 2);
  expected_limit << 1.0, 0.5, 0.5, 0.0;
  const double limit_dev = (r.plus_state_limit.mat() - expected_limit).norm();

  const bool pass = r.max_dist_to_ground_with_projection < tol && limit_dev < tol &&
                    !r.cptp_at_unit_time;
  const json report = {
      {"command", "demo-appendix-a"},
      {"spec_hash", content_hash("appendix-a")},
      {"seed", seed},
      {"tol", tol},
      {"t_limit", r.t_limit},
      {"max_dist_to_ground_with_projection", r.max_dist_to_ground_with_projection},
      {"plus_state_limit", matrix_to_json(r.plus_state_limit)},
      {"plus_state_min_eigenvalue", r.plus_state_min_eigenvalue},
      {"expected_min_eigenvalue", expected_min_eig},
      {"off_diagonal_freeze_residual", r.off_diagonal_freeze_residual},
      {"cptp_at_unit_time", r.cptp_at_unit_time},
      {"doubling_change", r.doubling_change},
      {"pass", pass},
  };
  emit(report, opts.out);
  return pass ? kExitPass : kExitExperimentFail;
}

int run_verify_quartet(const CommonOptions& opts, Index d, int n_unitaries,
                       std::uint64_t seed) {
  const double tol = opts.tol.value_or(1e-8);
  const QuartetSpanReport r = quartet_span_check(d, n_unitaries, seed, {}, tol);
  const json report = {
      {"command", "verify-quartet"},
      {"spec_hash", content_hash("quartet d=" + std::to_string(d) +
                                 " n=" + std::to_string(n_unitaries) +
                                 " seed=" + std::to_string(seed))},
      {"seed", seed},
      {"tol", tol},
      {"dim", r.d},
      {"quartet", r.quartet},
      {"n_unitaries", r.n_unitaries},
      {"span_dim", r.span_dim},
      {"max_pair_residual", r.max_pair_residual},
      {"lindblad_reconstruction_error", r.lindblad_reconstruction_error},
      {"pass", r.pass},
  };
  emit(report, opts.out);
  return r.pass ? kExitPass : kExitExperimentFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lindbladian purification, Zeno-projected dynamics, and "
               "Lie-algebra accessibility analysis"};
  app.require_subcommand(1);

  CommonOptions opts;
  const auto add_common = [&](CLI::App* cmd, bool with_input) {
    if (with_input) {
      cmd->add_option("input", opts.input, "problem spec path ('-' or absent: stdin)");
    }
    cmd->add_option("--tol", opts.tol, "tolerance override");
    cmd->add_option("--seed", opts.seed, "random seed");
    cmd->add_option("--time", opts.time, "evolution time t");
    cmd->add_option("--n-steps", opts.n_steps, "measurement counts for the sweep");
    cmd->add_option("--max-dim", opts.max_dim, "Lie-closure dimension cap");
    cmd->add_option("--out", opts.out, "write the JSON report here instead of stdout");
  };

  auto* purify = app.add_subcommand("purify", "purify a generator set and check commutativity");
  add_common(purify, true);

  std::string csv_path;
  auto* zeno = app.add_subcommand("zeno", "finite-N measured dynamics, Zeno limit, recovery");
  add_common(zeno, true);
  zeno->add_option("--csv", csv_path, "write the N,error sweep as CSV");

  Index pair_dim = 0;
  Index purified_pair_dim = 0;
  auto* access = app.add_subcommand("access", "dynamical Lie-algebra closure and accessibility");
  add_common(access, true);
  access->add_option("--pair", pair_dim, "use the universal accessible pair at this dimension");
  access->add_option("--purified-pair", purified_pair_dim,
                     "use the purified accessible pair at this system dimension");

  auto* demo = app.add_subcommand("demo", "built-in demonstrations");
  demo->require_subcommand(1);
  auto* appendix_a = demo->add_subcommand(
      "appendix-a", "projected amplitude damping is not a CPTP semigroup");
  add_common(appendix_a, false);

  auto* verify = app.add_subcommand("verify", "numerical verifications");
  verify->require_subcommand(1);
  Index quartet_d = 4;
  int n_unitaries = 64;
  std::uint64_t quartet_seed = 7;
  auto* quartet = verify->add_subcommand(
      "quartet", "paired elementary dissipators lie in the generated span");
  quartet->add_option("d", quartet_d, "system dimension (>= 4)");
  quartet->add_option("n_unitaries", n_unitaries, "number of random unitaries");
  quartet->add_option("rng-seed", quartet_seed, "random seed");
  quartet->add_option("--tol", opts.tol, "tolerance override");
  quartet->add_option("--out", opts.out, "write the JSON report here instead of stdout");

  CLI11_PARSE(app, argc, argv);

  try {
    if (purify->parsed()) return run_purify(opts);
    if (zeno->parsed()) return run_zeno(opts, csv_path);
    if (access->parsed()) return run_access(opts, pair_dim, purified_pair_dim);
    if (appendix_a->parsed()) return run_demo_appendix_a(opts);
    if (quartet->parsed()) {
      return run_verify_quartet(opts, quartet_d, n_unitaries, quartet_seed);
    }
  } catch (const SpecParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParseError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invariant violation: " << e.what() << "\n";
    return kExitInvariantError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParseError;
  }
  return kExitParseError;
}
