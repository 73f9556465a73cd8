#include "ssdual/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>

#include "ssdual/sampling.hpp"

namespace ssdual {

namespace {

void require_positive(const RatRowVector& pi) {
  for (Index i = 0; i < pi.cols(); ++i)
    if (!(pi(i) > Rational(0)))
      throw Error("ZeroMass", "pi(" + std::to_string(i) + ") is not strictly positive");
}

}  // namespace

std::vector<Rational> sep_profile(const Chain& chain, const RatRowVector& pi, Index steps) {
  if (pi.cols() != chain.size())
    throw Error("DimensionMismatch", "pi size does not match the chain");
  require_positive(pi);
  std::vector<Rational> profile;
  profile.reserve(static_cast<std::size_t>(steps) + 1);
  RatRowVector v = chain.nu;
  for (Index k = 0; k <= steps; ++k) {
    Rational worst = Rational(1) - v(0) / pi(0);
    for (Index e = 1; e < chain.size(); ++e) {
      const Rational gap = Rational(1) - v(e) / pi(e);
      if (gap > worst) worst = gap;
    }
    profile.push_back(worst);
    if (k < steps) v = matmul(v, chain.P);
  }
  return profile;
}

std::vector<Rational> tv_profile(const Chain& chain, const RatRowVector& pi, Index steps) {
  if (pi.cols() != chain.size())
    throw Error("DimensionMismatch", "pi size does not match the chain");
  std::vector<Rational> profile;
  profile.reserve(static_cast<std::size_t>(steps) + 1);
  RatRowVector v = chain.nu;
  for (Index k = 0; k <= steps; ++k) {
    Rational total(0);
    for (Index e = 0; e < chain.size(); ++e) total += abs(v(e) - pi(e));
    profile.push_back(total / Rational(2));
    if (k < steps) v = matmul(v, chain.P);
  }
  return profile;
}

std::vector<double> sep_profile(const FloatChain& chain, const Eigen::RowVectorXd& pi,
                                Index steps) {
  for (Index i = 0; i < pi.cols(); ++i)
    if (!(pi(i) > 0)) throw Error("ZeroMass", "pi(" + std::to_string(i) + ") is not positive");
  std::vector<double> profile;
  Eigen::RowVectorXd v = chain.nu;
  for (Index k = 0; k <= steps; ++k) {
    profile.push_back((1.0 - (v.array() / pi.array())).maxCoeff());
    if (k < steps) v = v * chain.P;
  }
  return profile;
}

std::vector<double> tv_profile(const FloatChain& chain, const Eigen::RowVectorXd& pi,
                               Index steps) {
  std::vector<double> profile;
  Eigen::RowVectorXd v = chain.nu;
  for (Index k = 0; k <= steps; ++k) {
    profile.push_back(0.5 * (v - pi).cwiseAbs().sum());
    if (k < steps) v = v * chain.P;
  }
  return profile;
}

SharpPairReport verify_sharp_pair(const Chain& ergodic, const Chain& absorbing,
                                  const RatRowVector& pi, Index steps) {
  const auto sep = sep_profile(ergodic, pi, steps);
  const auto tail = absorption_tail(absorbing, steps);
  SharpPairReport report;
  report.equal = true;
  for (Index k = 0; k <= steps; ++k) {
    if (sep[static_cast<std::size_t>(k)] != tail[static_cast<std::size_t>(k)]) {
      report.equal = false;
      report.first_mismatch = k;
      report.sep_at_mismatch = sep[static_cast<std::size_t>(k)];
      report.tail_at_mismatch = tail[static_cast<std::size_t>(k)];
      break;
    }
  }
  return report;
}

AliasTable::AliasTable(const std::vector<double>& weights) {
  const std::size_t n = weights.size();
  if (n == 0 || n > 0x7FFFFFFF) throw Error("InvalidProbabilities", "bad alias table size");
  cells_ = static_cast<std::uint32_t>(n);
  threshold_.assign(n, 0);
  alias_.assign(n, 0);

  std::vector<double> scaled(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (weights[i] < 0) throw Error("InvalidProbabilities", "negative weight");
    scaled[i] = weights[i] * static_cast<double>(n);
  }
  std::vector<std::uint32_t> small, large;
  for (std::size_t i = 0; i < n; ++i)
    (scaled[i] < 1.0 ? small : large).push_back(static_cast<std::uint32_t>(i));

  const double two32 = 4294967296.0;
  while (!small.empty() && !large.empty()) {
    const std::uint32_t s = small.back();
    small.pop_back();
    const std::uint32_t l = large.back();
    threshold_[s] = static_cast<std::uint32_t>(std::min(two32 - 1.0, scaled[s] * two32));
    alias_[s] = l;
    scaled[l] -= 1.0 - scaled[s];
    if (scaled[l] < 1.0) {
      large.pop_back();
      small.push_back(l);
    }
  }
  for (std::uint32_t i : large) {
    threshold_[i] = 0xFFFFFFFFu;
    alias_[i] = i;
  }
  for (std::uint32_t i : small) {  // leftovers from rounding drift
    threshold_[i] = 0xFFFFFFFFu;
    alias_[i] = i;
  }
}

SimSummary simulate_coupon(const std::vector<double>& p, const std::vector<int>& targets,
                           std::uint64_t trials, std::uint64_t seed,
                           const std::vector<double>& thresholds) {
  if (p.empty()) throw Error("InvalidProbabilities", "at least one coupon type is required");
  if (targets.size() != p.size())
    throw Error("InvalidCounts", "need one target count per coupon type");
  if (trials < 1) throw Error("InvalidParameter", "at least one trial is required");
  double total = 0;
  for (double pk : p) {
    if (pk <= 0) throw Error("InvalidProbabilities", "probabilities must be positive");
    total += pk;
  }
  if (total > 1.0 + 1e-12) throw Error("InvalidProbabilities", "probabilities sum above 1");
  for (int t : targets)
    if (t < 1) throw Error("InvalidCounts", "targets must be >= 1");

  const std::size_t d = p.size();
  const double slack = std::max(0.0, 1.0 - total);
  std::vector<double> weights = p;
  const bool has_slack = slack > 1e-15;
  if (has_slack) weights.push_back(slack);
  const AliasTable table(weights);

  std::vector<int> count(d);
  std::vector<std::uint64_t> exceed(thresholds.size(), 0);
  std::uint64_t sum = 0;
  unsigned __int128 sum_sq = 0;

  for (std::uint64_t trial = 0; trial < trials; ++trial) {
    CounterRng rng(seed, trial);
    std::fill(count.begin(), count.end(), 0);
    std::size_t remaining = d;
    std::uint64_t steps = 0;
    while (remaining > 0) {
      ++steps;
      const std::uint32_t outcome = table.sample(rng.next());
      if (outcome >= d) continue;  // no coupon sampled
      if (count[outcome] < targets[outcome] && ++count[outcome] == targets[outcome]) --remaining;
    }
    sum += steps;
    sum_sq += static_cast<unsigned __int128>(steps) * steps;
    for (std::size_t t = 0; t < thresholds.size(); ++t)
      if (static_cast<double>(steps) > thresholds[t]) ++exceed[t];
  }

  SimSummary out;
  out.trials = trials;
  out.mean = static_cast<double>(sum) / static_cast<double>(trials);
  if (trials > 1) {
    const double n = static_cast<double>(trials);
    const double sq = static_cast<double>(sum_sq);
    out.variance = (sq - n * out.mean * out.mean) / (n - 1.0);
  }
  for (std::size_t t = 0; t < thresholds.size(); ++t)
    out.tail.push_back(
        {thresholds[t], static_cast<double>(exceed[t]) / static_cast<double>(trials)});
  return out;
}

double gumbel_cdf(double c) { return std::exp(-std::exp(-c)); }

CutoffFamily cutoff_family(const std::string& name, int copies, double exponent,
                           const std::vector<double>& lambdas,
                           const std::vector<double>& breaks) {
  CutoffFamily family;
  if (name == "classic") {
    family.kind = CutoffFamily::Kind::Classic;
  } else if (name == "piecewise") {
    family.kind = CutoffFamily::Kind::Piecewise;
    family.lambdas = lambdas;
    family.breaks = breaks;
  } else if (name == "n_copies") {
    family.kind = CutoffFamily::Kind::NCopies;
    family.copies = copies;
  } else if (name == "log_weights") {
    family.kind = CutoffFamily::Kind::LogWeights;
    family.copies = copies;
    family.exponent = exponent;
  } else {
    throw Error("UnknownFamily", "no cutoff family named '" + name + "'");
  }
  return family;
}

namespace {

constexpr double kEulerGamma = 0.57721566490153286;

double log_factorial(int n) { return std::lgamma(static_cast<double>(n) + 1.0); }

struct ResolvedFamily {
  std::string name;
  std::vector<double> p;
  std::vector<int> targets;
  double t_d = 0;
  double w_d = 0;
};

ResolvedFamily resolve(const CutoffFamily& family, std::uint64_t d) {
  if (d < 2) throw Error("InvalidParameter", "scale d must be at least 2");
  const auto dd = static_cast<double>(d);
  const auto n = static_cast<std::size_t>(d);
  ResolvedFamily out;
  switch (family.kind) {
    case CutoffFamily::Kind::Classic: {
      out.name = "classic";
      out.p.assign(n, 1.0 / dd);
      out.targets.assign(n, 1);
      out.t_d = dd * std::log(dd);
      out.w_d = dd;
      break;
    }
    case CutoffFamily::Kind::Piecewise: {
      out.name = "piecewise";
      const auto& lambdas = family.lambdas;
      const auto& breaks = family.breaks;
      if (lambdas.empty() || lambdas.size() != breaks.size())
        throw Error("InvalidDensity", "need one right endpoint per density value");
      double prev = 0;
      for (double b : breaks) {
        if (!(b > prev)) throw Error("InvalidDensity", "breakpoints must increase");
        prev = b;
      }
      if (std::abs(breaks.back() - 1.0) > 1e-12)
        throw Error("InvalidDensity", "last breakpoint must be 1");
      const double lambda1 = lambdas.front();
      for (std::size_t j = 0; j < lambdas.size(); ++j) {
        if (lambdas[j] <= 0) throw Error("InvalidDensity", "density values must be positive");
        if (j > 0 && lambdas[j] <= lambda1)
          throw Error("InvalidDensity",
                      "the first density value must be strictly minimal (ties are rejected)");
      }
      out.p.assign(n, 0.0);
      for (std::size_t k = 0; k < n; ++k) {
        const double lo = static_cast<double>(k) / dd;
        const double hi = static_cast<double>(k + 1) / dd;
        double mass = 0, seg_lo = 0;
        for (std::size_t j = 0; j < lambdas.size(); ++j) {
          const double seg_hi = breaks[j];
          const double overlap = std::max(0.0, std::min(hi, seg_hi) - std::max(lo, seg_lo));
          mass += lambdas[j] * overlap;
          seg_lo = seg_hi;
        }
        out.p[k] = mass;
      }
      out.targets.assign(n, 1);
      const double n1 = breaks.front();
      out.t_d = dd / lambda1 * (std::log(dd) - std::log(n1));
      out.w_d = dd / lambda1;
      break;
    }
    case CutoffFamily::Kind::NCopies: {
      out.name = "n_copies";
      const int N = family.copies;
      if (N < 2) throw Error("InvalidCounts", "n_copies needs N >= 2");
      out.p.assign(n, 1.0 / dd);
      out.targets.assign(n, N);
      out.t_d = dd * std::log(dd) + (N - 1) * dd * std::log(std::log(dd)) -
                dd * (kEulerGamma - log_factorial(N - 1));
      out.w_d = dd;
      break;
    }
    case CutoffFamily::Kind::LogWeights: {
      out.name = "log_weights";
      const int N = family.copies;
      const double expo = family.exponent;
      if (N < 2) throw Error("InvalidCounts", "log_weights needs N >= 2");
      if (!(expo > 0 && expo < 1))
        throw Error("InvalidParameter", "log_weights exponent must lie in (0,1)");
      // Weight of type k is log(k+1)^-expo; the argument is shifted by one
      // so type 1 gets a finite weight.
      std::vector<double> raw(n);
      double norm = 0;
      for (std::size_t k = 0; k < n; ++k) {
        raw[k] = 1.0 / std::pow(std::log(static_cast<double>(k) + 2.0), expo);
        norm += raw[k];
      }
      out.p.resize(n);
      for (std::size_t k = 0; k < n; ++k) out.p[k] = raw[k] / norm;
      out.targets.assign(n, N);
      out.t_d = dd * std::log(dd) + (N - 1) * dd * std::log(std::log(dd)) -
                dd * (kEulerGamma + expo - std::log(expo + 1.0) - log_factorial(N - 1));
      out.w_d = dd;
      break;
    }
  }
  return out;
}

}  // namespace

CutoffTable cutoff_experiment(const CutoffFamily& family, std::uint64_t d, std::uint64_t trials,
                              const std::vector<double>& c_grid, std::uint64_t seed) {
  if (c_grid.empty()) throw Error("InvalidParameter", "c grid is empty");
  const ResolvedFamily resolved = resolve(family, d);

  std::vector<double> thresholds;
  thresholds.reserve(c_grid.size());
  for (double c : c_grid) thresholds.push_back(resolved.t_d + c * resolved.w_d);

  const SimSummary summary = simulate_coupon(resolved.p, resolved.targets, trials, seed, thresholds);

  CutoffTable table;
  table.family = resolved.name;
  table.summary = summary;
  for (std::size_t i = 0; i < c_grid.size(); ++i) {
    CutoffRow row;
    row.c = c_grid[i];
    row.empirical = summary.tail[i].probability;
    row.limit = 1.0 - gumbel_cdf(c_grid[i]);
    row.trials = trials;
    row.d = d;
    row.t_d = resolved.t_d;
    row.w_d = resolved.w_d;
    table.rows.push_back(row);
  }
  return table;
}

}  // namespace ssdual
