#include "ssdual/coupon.hpp"

namespace ssdual {

namespace {

std::vector<std::string> lattice_labels(const MixedRadix& radix) {
  std::vector<std::string> labels(static_cast<std::size_t>(radix.size()));
  for (Index i = 0; i < radix.size(); ++i)
    labels[static_cast<std::size_t>(i)] = lattice_label(radix.coords(i));
  return labels;
}

}  // namespace

CouponParams::CouponParams(std::vector<Rational> probabilities, std::vector<int> counts)
    : p(std::move(probabilities)), targets(std::move(counts)) {
  if (p.empty()) throw Error("InvalidProbabilities", "at least one coupon type is required");
  if (targets.size() != p.size())
    throw Error("InvalidCounts", "need one target count per coupon type");
  Rational total(0);
  for (std::size_t k = 0; k < p.size(); ++k) {
    if (!(p[k] > Rational(0)))
      throw Error("InvalidProbabilities", "p_" + std::to_string(k + 1) + " must be positive");
    total += p[k];
  }
  if (total > Rational(1))
    throw Error("InvalidProbabilities", "probabilities sum to " + total.str() + " > 1");
  for (std::size_t k = 0; k < targets.size(); ++k)
    if (targets[k] < 1)
      throw Error("InvalidCounts", "N_" + std::to_string(k + 1) + " must be >= 1");
}

Chain coupon_chain(const CouponParams& params) {
  MixedRadix radix(params.targets);
  const Index n = radix.size();
  const int d = params.dims();

  Rational total_p(0);
  for (const Rational& pk : params.p) total_p += pk;

  RatMatrix P = RatMatrix::Zero(n, n);
  for (Index i = 0; i < n; ++i) {
    const auto c = radix.coords(i);
    Rational hold = Rational(1) - total_p;
    for (int k = 0; k < d; ++k) {
      if (c[static_cast<std::size_t>(k)] < params.targets[static_cast<std::size_t>(k)]) {
        P(i, i + radix.stride(k)) = params.p[static_cast<std::size_t>(k)];
      } else {
        hold += params.p[static_cast<std::size_t>(k)];  // full type: the draw is wasted
      }
    }
    P(i, i) = hold;
  }
  return Chain(lattice_labels(radix), point_mass(n, 0), std::move(P));
}

Chain antidual_uniform(const CouponParams& params) {
  // Hold-probability bound; implied by sum(p) <= 1 but kept explicit.
  Rational bound(0);
  for (std::size_t k = 0; k < params.p.size(); ++k) {
    const long long nk = params.targets[k];
    bound += (Rational(1) - Rational(1, nk * (nk + 1))) * params.p[k];
  }
  if (bound > Rational(1))
    throw Error("ConditionViolated", "hold-probability bound is " + bound.str() + " > 1");

  MixedRadix radix(params.targets);
  const Index n = radix.size();
  const int d = params.dims();

  RatMatrix P = RatMatrix::Zero(n, n);
  for (Index i = 0; i < n; ++i) {
    const auto c = radix.coords(i);
    Rational hold(1);
    for (int k = 0; k < d; ++k) {
      const long long ik = c[static_cast<std::size_t>(k)];
      const long long nk = params.targets[static_cast<std::size_t>(k)];
      const Rational& pk = params.p[static_cast<std::size_t>(k)];
      if (ik < nk) {
        P(i, i + radix.stride(k)) = Rational(ik + 1, ik + 2) * pk;
        hold -= (Rational(1) - Rational(1, (ik + 1) * (ik + 2))) * pk;
      } else {
        hold -= Rational(nk, nk + 1) * pk;
      }
      const Rational down = (ik < nk ? Rational(1, (ik + 1) * (ik + 2)) : Rational(1, nk + 1)) * pk;
      for (long long m = 1; m <= ik; ++m) P(i, i - m * radix.stride(k)) = down;
    }
    P(i, i) = hold;
  }
  return Chain(lattice_labels(radix), point_mass(n, 0), std::move(P));
}

Chain antidual_product(const std::vector<Rational>& p, const std::vector<Rational>& a) {
  if (a.size() != p.size())
    throw Error("InvalidWeight", "need one weight a_k per coupon type");
  for (std::size_t k = 0; k < a.size(); ++k)
    if (!(a[k] > Rational(0)) || !(a[k] < Rational(1)))
      throw Error("InvalidWeight", "a_" + std::to_string(k + 1) + " = " + a[k].str() +
                                       " is outside (0,1)");
  const CouponParams params(p, std::vector<int>(p.size(), 1));

  MixedRadix radix(params.targets);
  const Index n = radix.size();
  const int d = params.dims();

  RatMatrix P = RatMatrix::Zero(n, n);
  for (Index i = 0; i < n; ++i) {
    const auto c = radix.coords(i);
    Rational hold(1);
    for (int k = 0; k < d; ++k) {
      const Rational& pk = params.p[static_cast<std::size_t>(k)];
      const Rational& ak = a[static_cast<std::size_t>(k)];
      if (c[static_cast<std::size_t>(k)] == 0) {
        P(i, i + radix.stride(k)) = ak * pk;
        hold -= ak * pk;
      } else {
        P(i, i - radix.stride(k)) = (Rational(1) - ak) * pk;
        hold -= (Rational(1) - ak) * pk;
      }
    }
    P(i, i) = hold;
  }
  return Chain(lattice_labels(radix), point_mass(n, 0), std::move(P));
}

RatRowVector product_stationary(const std::vector<Rational>& a) {
  MixedRadix radix(std::vector<int>(a.size(), 1));
  RatRowVector pi(radix.size());
  for (Index i = 0; i < radix.size(); ++i) {
    const auto c = radix.coords(i);
    Rational mass(1);
    for (std::size_t k = 0; k < a.size(); ++k)
      mass *= c[k] == 1 ? a[k] : Rational(1) - a[k];
    pi(i) = mass;
  }
  return pi;
}

Chain cube_walk(const std::vector<Rational>& alpha, const std::vector<Rational>& beta) {
  if (alpha.empty() || alpha.size() != beta.size())
    throw Error("InvalidRates", "need matching nonempty up/down rate lists");
  for (std::size_t k = 0; k < alpha.size(); ++k)
    if (!(alpha[k] > Rational(0)) || !(beta[k] > Rational(0)))
      throw Error("InvalidRates", "rates of coordinate " + std::to_string(k + 1) +
                                      " must be positive");

  MixedRadix radix(std::vector<int>(alpha.size(), 1));
  const Index n = radix.size();
  const int d = radix.dims();

  RatMatrix P = RatMatrix::Zero(n, n);
  for (Index i = 0; i < n; ++i) {
    const auto c = radix.coords(i);
    Rational hold(1);
    for (int k = 0; k < d; ++k) {
      if (c[static_cast<std::size_t>(k)] == 0) {
        P(i, i + radix.stride(k)) = alpha[static_cast<std::size_t>(k)];
        hold -= alpha[static_cast<std::size_t>(k)];
      } else {
        P(i, i - radix.stride(k)) = beta[static_cast<std::size_t>(k)];
        hold -= beta[static_cast<std::size_t>(k)];
      }
    }
    if (hold.is_negative())
      throw Error("NegativeHold", "hold probability at " + lattice_label(c) + " is " + hold.str());
    P(i, i) = hold;
  }
  return Chain(lattice_labels(radix), point_mass(n, 0), std::move(P));
}

RatRowVector cube_stationary(const std::vector<Rational>& alpha,
                             const std::vector<Rational>& beta) {
  MixedRadix radix(std::vector<int>(alpha.size(), 1));
  RatRowVector pi(radix.size());
  for (Index i = 0; i < radix.size(); ++i) {
    const auto c = radix.coords(i);
    Rational mass(1);
    for (std::size_t k = 0; k < alpha.size(); ++k) {
      const Rational denom = alpha[k] + beta[k];
      mass *= (c[k] == 1 ? alpha[k] : beta[k]) / denom;
    }
    pi(i) = mass;
  }
  return pi;
}

}  // namespace ssdual
