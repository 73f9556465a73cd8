#include "ssdual/fsst.hpp"

#include <stdexcept>

#include "ssdual/poset.hpp"

namespace ssdual {

namespace {

std::vector<std::string> path_labels(Index m) {
  std::vector<std::string> labels(static_cast<std::size_t>(m));
  for (Index i = 0; i < m; ++i) labels[static_cast<std::size_t>(i)] = std::to_string(i + 1);
  return labels;
}

void check_rates(const std::vector<Rational>& rates) {
  for (std::size_t k = 0; k < rates.size(); ++k)
    if (rates[k].is_negative() || rates[k] > Rational(1))
      throw Error("InvalidParameter",
                  "p_" + std::to_string(k + 1) + " = " + rates[k].str() + " is outside [0,1]");
}

void check_weights(const RatRowVector& a) {
  Rational total(0);
  for (Index i = 0; i < a.cols(); ++i) {
    if (a(i).is_negative())
      throw Error("InvalidParameter", "weight a_" + std::to_string(i + 1) + " is negative");
    total += a(i);
  }
  if (!total.is_one())
    throw Error("InvalidParameter", "weights sum to " + total.str());
}

void check_distribution(const RatRowVector& pi) {
  Rational total(0);
  for (Index i = 0; i < pi.cols(); ++i) {
    if (!(pi(i) > Rational(0)))
      throw Error("ZeroMass", "pi(" + std::to_string(i + 1) + ") is not strictly positive");
    total += pi(i);
  }
  if (!total.is_one())
    throw Error("InvalidParameter", "pi sums to " + total.str());
}

}  // namespace

GeometricMixture::GeometricMixture(RatRowVector a, std::vector<Rational> p)
    : start_weights(std::move(a)), rates(std::move(p)) {
  if (static_cast<Index>(rates.size()) + 1 != start_weights.cols())
    throw Error("InvalidParameter", "need one rate per level transition (M-1 rates)");
  check_weights(start_weights);
  check_rates(rates);
}

Chain fsst_chain(const RatRowVector& pi, const std::vector<Rational>& rates,
                 const RatRowVector& start_weights) {
  const Index m = pi.cols();
  check_distribution(pi);
  if (static_cast<Index>(rates.size()) != m - 1)
    throw Error("InvalidParameter", "need exactly M-1 rates");
  if (start_weights.cols() != m)
    throw Error("InvalidParameter", "need exactly M start weights");
  check_rates(rates);
  check_weights(start_weights);

  // Cumulative masses with H(0) = 0 sentinel; p_0 = p_M = 0 folds the
  // boundary rows into the interior formula.
  std::vector<Rational> H(static_cast<std::size_t>(m) + 1);
  H[0] = Rational(0);
  for (Index k = 1; k <= m; ++k) H[static_cast<std::size_t>(k)] = H[static_cast<std::size_t>(k - 1)] + pi(k - 1);
  auto rate = [&](Index k) {  // p_k with sentinels, 1-based
    return (k >= 1 && k <= m - 1) ? rates[static_cast<std::size_t>(k - 1)] : Rational(0);
  };

  RatMatrix P = RatMatrix::Zero(m, m);
  std::vector<std::pair<Index, Index>> negatives;
  for (Index k = 1; k <= m; ++k) {
    const Rational up_loss = rate(k) * (Rational(1) - H[static_cast<std::size_t>(k)] / H[static_cast<std::size_t>(k + 1 <= m ? k + 1 : m)]);
    const Rational down_gain = rate(k - 1) * (Rational(1) - H[static_cast<std::size_t>(k - 1)] / H[static_cast<std::size_t>(k)]);
    for (Index s = 1; s < k; ++s) {
      const Rational entry = pi(s - 1) / pi(k - 1) * (down_gain - up_loss);
      P(k - 1, s - 1) = entry;
      if (entry.is_negative()) negatives.emplace_back(k, s);
    }
    const Rational diag = Rational(1) - up_loss - rate(k - 1) * H[static_cast<std::size_t>(k - 1)] / H[static_cast<std::size_t>(k)];
    P(k - 1, k - 1) = diag;
    if (diag.is_negative()) negatives.emplace_back(k, k);
    if (k < m) {
      P(k - 1, k) = rate(k) * (H[static_cast<std::size_t>(k)] / H[static_cast<std::size_t>(k + 1)]) * (pi(k) / pi(k - 1));
    }
  }
  if (!negatives.empty()) {
    std::string msg = "matrix has negative entries at";
    for (const auto& [k, s] : negatives)
      msg += " (" + std::to_string(k) + "," + std::to_string(s) + ")";
    throw NotRealizableError(msg, negatives);
  }

  RatRowVector nu(m);
  for (Index k = 1; k <= m; ++k) {
    Rational acc(0);
    for (Index i = k; i <= m; ++i) acc += start_weights(i - 1) / H[static_cast<std::size_t>(i)];
    nu(k - 1) = pi(k - 1) * acc;
  }

  Chain chain(path_labels(m), std::move(nu), std::move(P));
  if (matmul(pi, chain.P) != pi)
    throw std::logic_error("prescribed-FSST kernel does not hold pi stationary");
  return chain;
}

Chain pure_chain(const RatRowVector& pi) {
  const Index m = pi.cols();
  check_distribution(pi);
  if (m == 1) return Chain(path_labels(1), point_mass(1, 0), rat_identity(1));

  std::vector<Rational> H(static_cast<std::size_t>(m) + 1);
  H[0] = Rational(0);
  for (Index k = 1; k <= m; ++k) H[static_cast<std::size_t>(k)] = H[static_cast<std::size_t>(k - 1)] + pi(k - 1);

  RatMatrix P = RatMatrix::Zero(m, m);
  for (Index r = 1; r <= 2; ++r) P(0, r - 1) = pi(r - 1) / H[2];
  for (Index k = 2; k < m; ++k) {
    const Rational gap = H[static_cast<std::size_t>(k)] / H[static_cast<std::size_t>(k + 1)] -
                         H[static_cast<std::size_t>(k - 1)] / H[static_cast<std::size_t>(k)];
    for (Index r = 1; r <= k; ++r) P(k - 1, r - 1) = pi(r - 1) / pi(k - 1) * gap;
    P(k - 1, k) = pi(k) / pi(k - 1) * H[static_cast<std::size_t>(k)] / H[static_cast<std::size_t>(k + 1)];
  }
  for (Index r = 1; r <= m; ++r) P(m - 1, r - 1) = pi(r - 1);

  return Chain(path_labels(m), point_mass(m, 0), std::move(P));
}

std::pair<Chain, Chain> hypercube_pair(int d, const Rational& p) {
  if (d <= 1) throw Error("InvalidP", "d must be greater than 1");
  if (!(p > Rational(0)) || p * Rational(d) > Rational(1))
    throw Error("InvalidP", "p = " + p.str() + " is outside (0, 1/d]");

  std::vector<Rational> rates(static_cast<std::size_t>(d) - 1);
  for (int k = 1; k < d; ++k) rates[static_cast<std::size_t>(k - 1)] = Rational(d - k) * p;
  const Chain path =
      fsst_chain(uniform_distribution(d), rates, point_mass(d, 0));

  MixedRadix radix(std::vector<int>(static_cast<std::size_t>(d), 1));
  const Index n = radix.size();
  RatMatrix P = RatMatrix::Zero(n, n);
  const Rational half_p = p / Rational(2);
  for (Index i = 0; i < n; ++i) {
    const auto c = radix.coords(i);
    for (int k = 0; k < d; ++k) {
      if (c[static_cast<std::size_t>(k)] == 0)
        P(i, i + radix.stride(k)) = half_p;
      else
        P(i, i - radix.stride(k)) = half_p;
    }
    P(i, i) = Rational(1) - Rational(d) * half_p;
  }
  // nu = nu* Lambda with nu* on level one reduces to two equal atoms.
  RatRowVector nu = RatRowVector::Zero(n);
  nu(0) = Rational(1, 2);
  nu(radix.stride(0)) = Rational(1, 2);  // (1,0,...,0)

  std::vector<std::string> labels(static_cast<std::size_t>(n));
  for (Index i = 0; i < n; ++i) labels[static_cast<std::size_t>(i)] = lattice_label(radix.coords(i));
  return {path, Chain(std::move(labels), std::move(nu), std::move(P))};
}

std::vector<Rational> mixture_tail(const GeometricMixture& mix, Index steps) {
  if (steps < 0) throw Error("InvalidParameter", "step count must be nonnegative");
  const Index m = mix.start_weights.cols();
  if (m == 1) return std::vector<Rational>(static_cast<std::size_t>(steps) + 1, Rational(0));

  RatMatrix P = RatMatrix::Zero(m, m);
  for (Index k = 0; k + 1 < m; ++k) {
    P(k, k + 1) = mix.rates[static_cast<std::size_t>(k)];
    P(k, k) = Rational(1) - mix.rates[static_cast<std::size_t>(k)];
  }
  P(m - 1, m - 1) = Rational(1);
  const Chain birth(path_labels(m), mix.start_weights, std::move(P));
  return absorption_tail(birth, steps);
}

}  // namespace ssdual
