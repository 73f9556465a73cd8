#include "ssdual/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "ssdual/analysis.hpp"
#include "ssdual/coupon.hpp"
#include "ssdual/duality.hpp"
#include "ssdual/fsst.hpp"
#include "ssdual/json_io.hpp"

namespace ssdual {

namespace {

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> parts;
  std::string current;
  for (char c : text) {
    if (c == ',') {
      parts.push_back(current);
      current.clear();
    } else {
      current.push_back(c);
    }
  }
  parts.push_back(current);
  return parts;
}

std::vector<Rational> parse_rationals(const std::string& text) {
  std::vector<Rational> out;
  for (const auto& part : split_list(text)) out.push_back(Rational::parse(part));
  return out;
}

std::vector<double> parse_doubles(const std::string& text) {
  std::vector<double> out;
  for (const auto& part : split_list(text)) {
    if (part.find('/') != std::string::npos) {
      out.push_back(Rational::parse(part).to_double());
    } else {
      std::size_t used = 0;
      const double v = std::stod(part, &used);
      if (used != part.size()) throw Error("BadFormat", "cannot parse number '" + part + "'");
      out.push_back(v);
    }
  }
  return out;
}

std::vector<int> parse_ints(const std::string& text) {
  std::vector<int> out;
  for (const auto& part : split_list(text)) {
    std::size_t used = 0;
    const int v = std::stoi(part, &used);
    if (used != part.size()) throw Error("BadFormat", "cannot parse integer '" + part + "'");
    out.push_back(v);
  }
  return out;
}

Json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("FileError", "cannot open " + path);
  Json j;
  in >> j;
  return j;
}

RatRowVector load_distribution(const std::string& path) {
  return distribution_from_json(load_json(path));
}

void emit(const std::string& output_path, const std::string& text) {
  if (output_path.empty() || output_path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(output_path);
  if (!out) throw Error("FileError", "cannot write " + output_path);
  out << text;
}

struct EmitTarget {
  std::string path;
  void json(const Json& j) const { emit(path, dump_json(j)); }
  void text(const std::string& t) const { emit(path, t); }
};

}  // namespace

int run_cli(const std::vector<std::string>& args) {
  CLI::App app{"Strong stationary duality over partially ordered state spaces: exact\n"
               "antidual/dual constructions, closed-form coupon-collector families,\n"
               "prescribed-FSST chains, separation profiles and cutoff experiments."};
  app.require_subcommand(1);
  app.fallthrough();  // --cap / --output may follow the subcommand

  Index cap = kDefaultStateCap;
  app.add_option("--cap", cap, "State-count cap for exact constructions")
      ->envname("SSDUAL_STATE_CAP");

  std::string output;
  app.add_option("-o,--output", output, "Output file (default: stdout)");

  // ---- chain constructors -------------------------------------------------
  std::string opt_p, opt_n, opt_a, opt_alpha, opt_beta;

  auto* coupon = app.add_subcommand(
      "coupon", "Absorbing coupon-collector chain; emits chain JSON");
  coupon->add_option("--p", opt_p, "Sampling probabilities, e.g. 1/2,1/3")->required();
  coupon->add_option("--N", opt_n, "Target counts per type, e.g. 1,2")->required();

  auto* antidual_uni = app.add_subcommand(
      "antidual-uniform", "Closed-form antidual with uniform stationary law; emits chain JSON");
  antidual_uni->add_option("--p", opt_p, "Sampling probabilities")->required();
  antidual_uni->add_option("--N", opt_n, "Target counts per type")->required();

  auto* antidual_prod = app.add_subcommand(
      "antidual-product", "Closed-form antidual on {0,1}^d with product stationary law");
  antidual_prod->add_option("--p", opt_p, "Sampling probabilities")->required();
  antidual_prod->add_option("--a", opt_a, "Up-move weights a_k in (0,1), e.g. 1/3,2/3")->required();

  auto* cube = app.add_subcommand(
      "cube-walk", "Nearest-neighbour walk on {0,1}^d with given up/down rates");
  cube->add_option("--alpha", opt_alpha, "Up rates per coordinate")->required();
  cube->add_option("--beta", opt_beta, "Down rates per coordinate")->required();

  std::string opt_pi_file, opt_p_file, opt_a_file;
  auto* fsst_cmd = app.add_subcommand(
      "fsst", "Skip-free chain with prescribed stationary law and geometric-mixture FSST");
  fsst_cmd->add_option("--pi", opt_pi_file, "JSON file with the stationary distribution")->required();
  fsst_cmd->add_option("--p", opt_p_file, "JSON file with the M-1 geometric rates")->required();
  fsst_cmd->add_option("--a", opt_a_file, "JSON file with the M mixture weights")->required();

  auto* pure = app.add_subcommand(
      "pure", "Chain with prescribed stationary law and deterministic FSST");
  pure->add_option("--pi", opt_pi_file, "JSON file with the stationary distribution")->required();

  int opt_d = 0;
  std::string opt_rate;
  auto* pair_cmd = app.add_subcommand(
      "pair", "Two chains on {1..d} and {0,1}^d sharing one FSST; emits both chain JSONs");
  pair_cmd->add_option("--d", opt_d, "Dimension d > 1")->required();
  pair_cmd->add_option("--p", opt_rate, "Per-coordinate rate, 0 < p <= 1/d")->required();

  // ---- generic transforms -------------------------------------------------
  std::string opt_chain_file, opt_poset_file, opt_primal_file, opt_dual_file;

  auto* antidual_cmd = app.add_subcommand(
      "antidual", "Sharp antidual of an absorbing chain for a given (pi, poset)");
  antidual_cmd->add_option("--chain", opt_chain_file, "Absorbing chain JSON")->required();
  antidual_cmd->add_option("--pi", opt_pi_file, "Target stationary distribution JSON")->required();
  antidual_cmd->add_option("--poset", opt_poset_file, "Poset JSON")->required();

  auto* ssd_cmd = app.add_subcommand(
      "ssd", "Strong stationary dual of an ergodic chain for a given poset");
  ssd_cmd->add_option("--chain", opt_chain_file, "Ergodic chain JSON")->required();
  ssd_cmd->add_option("--poset", opt_poset_file, "Poset JSON")->required();

  Index opt_k = 50;
  auto* verify = app.add_subcommand(
      "verify", "Duality report plus the sharp-pair identity check; exit 2 on failure");
  verify->add_option("--primal", opt_primal_file, "Ergodic chain JSON")->required();
  verify->add_option("--dual", opt_dual_file, "Absorbing chain JSON")->required();
  verify->add_option("--pi", opt_pi_file, "Stationary distribution JSON")->required();
  verify->add_option("--poset", opt_poset_file, "Poset JSON")->required();
  verify->add_option("--k", opt_k, "Steps for the separation/tail comparison (default 50)");

  // ---- profiles -----------------------------------------------------------
  std::string opt_absorbing_file;
  auto* sep_cmd = app.add_subcommand("sep", "Separation/TV profile CSV (k,sep,tv,tail)");
  sep_cmd->add_option("--chain", opt_chain_file, "Chain JSON (exact or float)")->required();
  sep_cmd->add_option("--pi", opt_pi_file, "Stationary distribution JSON")->required();
  sep_cmd->add_option("--k", opt_k, "Largest step")->required();
  sep_cmd->add_option("--absorbing", opt_absorbing_file,
                      "Absorbing chain JSON; fills the tail column");

  auto* tv_cmd = app.add_subcommand("tv", "Same CSV as sep (k,sep,tv,tail)");
  tv_cmd->add_option("--chain", opt_chain_file, "Chain JSON (exact or float)")->required();
  tv_cmd->add_option("--pi", opt_pi_file, "Stationary distribution JSON")->required();
  tv_cmd->add_option("--k", opt_k, "Largest step")->required();
  tv_cmd->add_option("--absorbing", opt_absorbing_file,
                     "Absorbing chain JSON; fills the tail column");

  std::string opt_a_list, opt_p_list;
  auto* mixture = app.add_subcommand("mixture-tail",
                                     "Exact tail of a geometric mixture; CSV (k,tail)");
  mixture->add_option("--a", opt_a_list, "Mixture weights over start levels, e.g. 1/2,1/2,0")
      ->required();
  mixture->add_option("--p", opt_p_list, "Geometric rates p_1..p_{M-1}")->required();
  mixture->add_option("--k", opt_k, "Largest step")->required();

  // ---- simulation ---------------------------------------------------------
  std::uint64_t opt_trials = 0, opt_seed = 0, opt_scale = 0;
  std::string opt_thresholds, opt_c_grid, opt_family, opt_lambdas, opt_breaks;
  int opt_copies = 1;
  double opt_exponent = 0.5;

  auto* simulate = app.add_subcommand(
      "simulate", "Monte Carlo coupon absorption times; emits a JSON summary");
  simulate->add_option("--p", opt_p, "Sampling probabilities (floats or rationals)")->required();
  simulate->add_option("--N", opt_n, "Target counts per type")->required();
  simulate->add_option("--trials", opt_trials, "Number of trials")->required();
  simulate->add_option("--seed", opt_seed, "Stream seed; identical seeds reproduce bit-identically")
      ->required();
  simulate->add_option("--thresholds", opt_thresholds, "Tail thresholds, e.g. 3,5,10");

  auto* cutoff = app.add_subcommand(
      "cutoff", "Separation-cutoff experiment; CSV (c,empirical,limit,d,trials,t_d,w_d)");
  cutoff->add_option("--family", opt_family,
                     "classic | piecewise | n_copies | log_weights")->required();
  cutoff->add_option("--d", opt_scale, "Number of coupon types")->required();
  cutoff->add_option("--trials", opt_trials, "Number of trials")->required();
  cutoff->add_option("--c", opt_c_grid, "Window offsets, e.g. -2,-1,0,1,2,3")->required();
  cutoff->add_option("--seed", opt_seed, "Stream seed")->required();
  cutoff->add_option("--N", opt_copies, "Copies per type (n_copies, log_weights)");
  cutoff->add_option("--exponent", opt_exponent, "Weight exponent in (0,1) (log_weights)");
  cutoff->add_option("--lambda", opt_lambdas, "Density values (piecewise)");
  cutoff->add_option("--breaks", opt_breaks, "Right endpoints, last must be 1 (piecewise)");

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("ssdual");
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  const EmitTarget target{output};
  try {
    if (coupon->parsed()) {
      target.json(chain_to_json(coupon_chain(CouponParams(parse_rationals(opt_p), parse_ints(opt_n)))));
    } else if (antidual_uni->parsed()) {
      target.json(chain_to_json(antidual_uniform(CouponParams(parse_rationals(opt_p), parse_ints(opt_n)))));
    } else if (antidual_prod->parsed()) {
      target.json(chain_to_json(antidual_product(parse_rationals(opt_p), parse_rationals(opt_a))));
    } else if (cube->parsed()) {
      target.json(chain_to_json(cube_walk(parse_rationals(opt_alpha), parse_rationals(opt_beta))));
    } else if (fsst_cmd->parsed()) {
      const RatRowVector pi = load_distribution(opt_pi_file);
      const auto rates = rational_list_from_json(load_json(opt_p_file));
      const RatRowVector weights = distribution_from_json(load_json(opt_a_file));
      target.json(chain_to_json(fsst_chain(pi, rates, weights)));
    } else if (pure->parsed()) {
      target.json(chain_to_json(pure_chain(load_distribution(opt_pi_file))));
    } else if (pair_cmd->parsed()) {
      const auto [path, cube_chain] = hypercube_pair(opt_d, Rational::parse(opt_rate));
      Json j;
      j["chain1"] = chain_to_json(path);
      j["chain2"] = chain_to_json(cube_chain);
      target.json(j);
    } else if (antidual_cmd->parsed()) {
      const Chain star = chain_from_json(load_json(opt_chain_file));
      const RatRowVector pi = load_distribution(opt_pi_file);
      const Poset poset = poset_from_json(load_json(opt_poset_file), cap);
      target.json(chain_to_json(sharp_antidual(star, pi, poset)));
    } else if (ssd_cmd->parsed()) {
      const Chain chain = chain_from_json(load_json(opt_chain_file));
      const Poset poset = poset_from_json(load_json(opt_poset_file), cap);
      target.json(chain_to_json(strong_stationary_dual(chain, poset)));
    } else if (verify->parsed()) {
      const Chain primal = chain_from_json(load_json(opt_primal_file));
      const Chain dual = chain_from_json(load_json(opt_dual_file));
      const RatRowVector pi = load_distribution(opt_pi_file);
      const Poset poset = poset_from_json(load_json(opt_poset_file), cap);
      const Link link = build_link(poset, pi);
      const DualityReport duality = verify_duality(primal, dual, link);
      const SharpPairReport sharp = verify_sharp_pair(primal, dual, pi, opt_k);
      Json j;
      j["duality"] = duality_report_to_json(duality);
      j["sharp_pair"] = sharp_pair_report_to_json(sharp);
      const bool ok = duality.all_passed() && sharp.equal;
      j["all_passed"] = ok;
      target.json(j);
      return ok ? 0 : 2;
    } else if (sep_cmd->parsed() || tv_cmd->parsed()) {
      const Json jchain = load_json(opt_chain_file);
      if (json_chain_is_float(jchain)) {
        if (!opt_absorbing_file.empty())
          throw Error("FloatRejected", "the tail column requires an exact chain");
        const FloatChain chain = float_chain_from_json(jchain);
        const RatRowVector pi_exact = load_distribution(opt_pi_file);
        Eigen::RowVectorXd pi(pi_exact.cols());
        for (Index i = 0; i < pi_exact.cols(); ++i) pi(i) = pi_exact(i).to_double();
        target.text(profile_csv(sep_profile(chain, pi, opt_k), tv_profile(chain, pi, opt_k)));
      } else {
        const Chain chain = chain_from_json(jchain);
        const RatRowVector pi = load_distribution(opt_pi_file);
        const auto sep = sep_profile(chain, pi, opt_k);
        const auto tv = tv_profile(chain, pi, opt_k);
        if (opt_absorbing_file.empty()) {
          target.text(profile_csv(sep, tv, nullptr));
        } else {
          const Chain star = chain_from_json(load_json(opt_absorbing_file));
          const auto tail = absorption_tail(star, opt_k);
          target.text(profile_csv(sep, tv, &tail));
        }
      }
    } else if (mixture->parsed()) {
      const auto weights = parse_rationals(opt_a_list);
      RatRowVector a(static_cast<Index>(weights.size()));
      for (Index i = 0; i < a.cols(); ++i) a(i) = weights[static_cast<std::size_t>(i)];
      const GeometricMixture mix(a, parse_rationals(opt_p_list));
      target.text(tail_csv(mixture_tail(mix, opt_k)));
    } else if (simulate->parsed()) {
      const auto thresholds =
          opt_thresholds.empty() ? std::vector<double>{} : parse_doubles(opt_thresholds);
      const SimSummary summary =
          simulate_coupon(parse_doubles(opt_p), parse_ints(opt_n), opt_trials, opt_seed, thresholds);
      target.json(sim_summary_to_json(summary));
    } else if (cutoff->parsed()) {
      const auto lambdas = opt_lambdas.empty() ? std::vector<double>{} : parse_doubles(opt_lambdas);
      const auto breaks = opt_breaks.empty() ? std::vector<double>{} : parse_doubles(opt_breaks);
      const CutoffFamily family =
          cutoff_family(opt_family, opt_copies, opt_exponent, lambdas, breaks);
      const CutoffTable table =
          cutoff_experiment(family, opt_scale, opt_trials, parse_doubles(opt_c_grid), opt_seed);
      target.text(cutoff_csv(table));
    }
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace ssdual
