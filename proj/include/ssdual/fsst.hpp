#pragma once

#include <utility>
#include <vector>

#include "ssdual/markov.hpp"

namespace ssdual {

/// T ~ sum_i a_i G(p_i,...,p_{M-1}), where G is a sum of independent
/// geometrics each supported on {1,2,...} (number-of-trials convention) and
/// the weight a_M puts mass on T = 0.
struct GeometricMixture {
  RatRowVector start_weights;   // a_1..a_M, nonnegative, sums to 1
  std::vector<Rational> rates;  // p_1..p_{M-1}, each in [0,1]

  GeometricMixture(RatRowVector a, std::vector<Rational> p);
};

/// Skip-free chain on {1..M} with stationary distribution pi whose fastest
/// strong stationary time is the given geometric mixture; nu is determined
/// by the mixture weights. Throws NotRealizableError listing every negative
/// entry when (pi, p) does not admit the construction.
Chain fsst_chain(const RatRowVector& pi, const std::vector<Rational>& rates,
                 const RatRowVector& start_weights);

/// Chain with stationary distribution pi, started at state 1, whose FSST is
/// deterministic: separation drops from 1 to 0 exactly at step M-1.
Chain pure_chain(const RatRowVector& pi);

/// Two chains with uniform stationary distributions on {1..d} and {0,1}^d
/// whose FSSTs are both distributed as sum_{k=1}^{d-1} Geo(k p).
/// Throws InvalidP unless 0 < p <= 1/d and d > 1.
std::pair<Chain, Chain> hypercube_pair(int d, const Rational& p);

/// Exact tail P(T > k), k = 0..K, of a geometric mixture, computed as the
/// absorption tail of the pure-birth chain with the mixture's rates started
/// from the mixture's weights.
std::vector<Rational> mixture_tail(const GeometricMixture& mix, Index steps);

}  // namespace ssdual
