#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ssdual/markov.hpp"

namespace ssdual {

/// Exact separation profile sep(nu P^k, pi) = max_e (1 - nu P^k(e)/pi(e))
/// for k = 0..K. Throws ZeroMass when pi vanishes somewhere.
std::vector<Rational> sep_profile(const Chain& chain, const RatRowVector& pi, Index steps);

/// Exact total-variation profile (1/2) sum_e |nu P^k(e) - pi(e)|.
std::vector<Rational> tv_profile(const Chain& chain, const RatRowVector& pi, Index steps);

/// Floating-point chain, accepted only by the profile routines.
struct FloatChain {
  std::vector<std::string> labels;
  Eigen::RowVectorXd nu;
  Eigen::MatrixXd P;
};

std::vector<double> sep_profile(const FloatChain& chain, const Eigen::RowVectorXd& pi,
                                Index steps);
std::vector<double> tv_profile(const FloatChain& chain, const Eigen::RowVectorXd& pi,
                               Index steps);

/// Outcome of comparing a separation profile with an absorption tail,
/// position by position with exact arithmetic.
struct SharpPairReport {
  bool equal = false;
  std::optional<Index> first_mismatch;
  Rational sep_at_mismatch;
  Rational tail_at_mismatch;
};

/// Checks sep(nu P^k, pi) == P(T* > k) for k = 0..K, the identity that makes
/// an (ergodic, absorbing) pair sharp.
SharpPairReport verify_sharp_pair(const Chain& ergodic, const Chain& absorbing,
                                  const RatRowVector& pi, Index steps);

struct TailPoint {
  double threshold = 0;
  double probability = 0;
};

struct SimSummary {
  std::uint64_t trials = 0;
  double mean = 0;
  double variance = 0;  // unbiased sample variance
  std::vector<TailPoint> tail;
};

/// Simulates the coupon process directly (one categorical draw per step,
/// alias-sampled; the leftover mass 1 - sum p is an explicit no-coupon
/// outcome) until every type k has been seen targets[k] times. Trial i uses
/// the counter-based stream keyed (seed, i); the output is identical for
/// identical (seed, trials) regardless of how trials are scheduled.
SimSummary simulate_coupon(const std::vector<double>& p, const std::vector<int>& targets,
                           std::uint64_t trials, std::uint64_t seed,
                           const std::vector<double>& thresholds = {});

double gumbel_cdf(double c);

struct CutoffFamily {
  enum class Kind { Classic, Piecewise, NCopies, LogWeights };
  Kind kind = Kind::Classic;
  int copies = 1;                // NCopies / LogWeights
  double exponent = 0;           // LogWeights, in (0,1)
  std::vector<double> lambdas;   // Piecewise density values
  std::vector<double> breaks;    // Piecewise right endpoints n_1 < ... < n_k = 1
};

/// Builds a CutoffFamily from its CLI name; throws UnknownFamily.
CutoffFamily cutoff_family(const std::string& name, int copies, double exponent,
                           const std::vector<double>& lambdas, const std::vector<double>& breaks);

struct CutoffRow {
  double c = 0;
  double empirical = 0;
  double limit = 0;  // 1 - exp(-exp(-c)), depends on c only
  std::uint64_t trials = 0;
  std::uint64_t d = 0;
  double t_d = 0;
  double w_d = 0;
};

struct CutoffTable {
  std::string family;
  std::vector<CutoffRow> rows;
  SimSummary summary;
};

/// Simulates the family's coupon absorption time at scale d and tabulates
/// empirical P(T* > t_d + c w_d) against the standard Gumbel tail for every
/// c in the grid.
CutoffTable cutoff_experiment(const CutoffFamily& family, std::uint64_t d, std::uint64_t trials,
                              const std::vector<double>& c_grid, std::uint64_t seed);

}  // namespace ssdual
