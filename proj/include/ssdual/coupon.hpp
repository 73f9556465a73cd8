#pragma once

#include <vector>

#include "ssdual/markov.hpp"
#include "ssdual/poset.hpp"

namespace ssdual {

/// Sampling probabilities p_k > 0 with sum <= 1 (the remaining mass draws
/// nothing) and per-type targets N_j >= 1.
struct CouponParams {
  std::vector<Rational> p;
  std::vector<int> targets;

  CouponParams(std::vector<Rational> probabilities, std::vector<int> counts);

  int dims() const noexcept { return static_cast<int>(p.size()); }
};

/// Absorbing chain on prod(N_j + 1) states counting how many coupons of each
/// type were sampled; absorbs at (N_1,...,N_d), starts at the origin.
Chain coupon_chain(const CouponParams& params);

/// Closed-form sharp antidual with the uniform stationary distribution on
/// the same lattice. Throws ConditionViolated when the hold-probability
/// bound fails (it cannot, given valid parameters; the check documents the
/// bound).
Chain antidual_uniform(const CouponParams& params);

/// Closed-form sharp antidual on {0,1}^d with product stationary
/// distribution: coordinate k goes up with a_k p_k and down with
/// (1-a_k) p_k. Throws InvalidWeight when some a_k is outside (0,1).
Chain antidual_product(const std::vector<Rational>& p, const std::vector<Rational>& a);

/// Stationary distribution of antidual_product in lattice numbering:
/// pi(i) = prod_j [a_j if i_j = 1 else 1 - a_j].
RatRowVector product_stationary(const std::vector<Rational>& a);

/// Nearest-neighbour walk on {0,1}^d with up rates alpha_k and down rates
/// beta_k. Throws NegativeHold when some hold probability is negative.
Chain cube_walk(const std::vector<Rational>& alpha, const std::vector<Rational>& beta);

/// Product stationary distribution of cube_walk.
RatRowVector cube_stationary(const std::vector<Rational>& alpha,
                             const std::vector<Rational>& beta);

}  // namespace ssdual
