#include "ssdual/duality.hpp"

#include <stdexcept>

namespace ssdual {

namespace {

void require_positive(const RatRowVector& pi, const Poset& poset) {
  for (Index i = 0; i < pi.cols(); ++i)
    if (!(pi(i) > Rational(0)))
      throw Error("ZeroMass", "pi(" + poset.labels()[static_cast<std::size_t>(i)] +
                                  ") is not strictly positive");
}

std::vector<std::pair<Index, Index>> negative_entries(const RatMatrix& m) {
  std::vector<std::pair<Index, Index>> out;
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j)
      if (m(i, j).is_negative()) out.emplace_back(i, j);
  return out;
}

}  // namespace

Link build_link(const Poset& poset, const RatRowVector& pi) {
  const Index n = poset.size();
  if (pi.cols() != n)
    throw Error("DimensionMismatch", "pi has " + std::to_string(pi.cols()) +
                                         " entries for a poset of " + std::to_string(n));
  require_positive(pi, poset);

  const RatRowVector mass = matmul(pi, poset.zeta());
  RatMatrix lambda = RatMatrix::Zero(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j <= i; ++j)
      if (poset.leq(j, i)) lambda(i, j) = pi(j) / mass(i);

  // Closed form for the inverse: diag(pi)^{-1} mu^T diag(H).
  RatMatrix lambda_inv = RatMatrix::Zero(n, n);
  const RatMatrix& mu = poset.mobius();
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      if (!mu(j, i).is_zero()) lambda_inv(i, j) = mu(j, i) * mass(j) / pi(i);

  if (matmul(lambda, lambda_inv) != rat_identity(n))
    throw std::logic_error("link inverse closed form failed verification");

  return Link{std::move(lambda), std::move(lambda_inv), mass, poset, pi};
}

bool mobius_monotone(const RatMatrix& P, const Poset& poset, Monotone direction) {
  const Index n = poset.size();
  if (P.rows() != n || P.cols() != n)
    throw Error("DimensionMismatch", "matrix size does not match the poset");
  RatMatrix transformed;
  if (direction == Monotone::Down) {
    transformed = matmul(matmul(poset.mobius(), P), poset.zeta());
  } else {
    const RatMatrix mu_t = poset.mobius().transpose();
    const RatMatrix zeta_t = poset.zeta().transpose();
    transformed = matmul(matmul(mu_t, P), zeta_t);
  }
  return is_nonnegative(transformed);
}

bool function_mobius_monotone(const RatRowVector& f, const Poset& poset) {
  const Index n = poset.size();
  if (f.cols() != n) throw Error("DimensionMismatch", "f size does not match the poset");
  const RatMatrix& mu = poset.mobius();
  for (Index i = 0; i < n; ++i) {
    Rational acc(0);
    for (Index j = 0; j < n; ++j)
      if (!mu(i, j).is_zero()) acc += mu(i, j) * f(j);
    if (acc.is_negative()) return false;
  }
  return true;
}

RatMatrix mass_conjugate(const RatMatrix& P, const RatRowVector& pi, const Poset& poset) {
  const Index n = poset.size();
  if (P.rows() != n || P.cols() != n || pi.cols() != n)
    throw Error("DimensionMismatch", "matrix/pi size does not match the poset");
  require_positive(pi, poset);
  const RatRowVector mass = matmul(pi, poset.zeta());
  RatMatrix out(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      out(i, j) = P(i, j).is_zero() ? Rational(0) : mass(i) * P(i, j) / mass(j);
  return out;
}

Chain sharp_antidual(const Chain& absorbing, const RatRowVector& pi, const Poset& poset) {
  const Index n = poset.size();
  if (absorbing.size() != n)
    throw Error("DimensionMismatch", "chain size does not match the poset");
  const ChainClass cls = classify(absorbing);
  if (cls.kind != ChainKind::AbsorbingUnique)
    throw Error("AbsorbingMismatch", "input chain has no unique absorbing state");
  if (cls.absorbing_index != poset.max_index())
    throw Error("AbsorbingMismatch",
                "absorbing state " + absorbing.labels[static_cast<std::size_t>(cls.absorbing_index)] +
                    " is not the poset maximum " +
                    poset.labels()[static_cast<std::size_t>(poset.max_index())]);

  const Link link = build_link(poset, pi);

  // Route 1: through the link matrices.
  const RatMatrix through_link = matmul(link.lambda_inv, matmul(absorbing.P, link.lambda));

  // Route 2: diag(pi)^{-1} (C^T)^{-1} [diag(H) P* diag(H)^{-1}] C^T diag(pi).
  const RatMatrix conj = mass_conjugate(absorbing.P, pi, poset);
  const RatMatrix mu_t = poset.mobius().transpose();
  const RatMatrix zeta_t = poset.zeta().transpose();
  RatMatrix through_mobius = matmul(matmul(mu_t, conj), zeta_t);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      if (!through_mobius(i, j).is_zero())
        through_mobius(i, j) = pi(j) * through_mobius(i, j) / pi(i);

  if (through_link != through_mobius)
    throw std::logic_error("antidual routes disagree; link or Mobius data is corrupt");

  const auto negatives = negative_entries(through_link);
  if (!negatives.empty()) {
    std::string msg = "antidual kernel has negative entries at";
    for (const auto& [i, j] : negatives)
      msg += " (" + poset.labels()[static_cast<std::size_t>(i)] + "," +
             poset.labels()[static_cast<std::size_t>(j)] + ")";
    throw NotMonotoneError(msg, negatives);
  }

  const RatRowVector nu = matmul(absorbing.nu, link.lambda);
  Chain result(poset.labels(), nu, through_link);
  if (matmul(pi, result.P) != pi)
    throw std::logic_error("antidual kernel does not hold pi stationary");
  return result;
}

Chain strong_stationary_dual(const Chain& ergodic, const Poset& poset) {
  const Index n = poset.size();
  if (ergodic.size() != n)
    throw Error("DimensionMismatch", "chain size does not match the poset");
  if (classify(ergodic).kind != ChainKind::Ergodic)
    throw Error("NotErgodic", "strong stationary dual requires an ergodic chain");

  const RatRowVector pi = stationary(ergodic);

  RatRowVector density_ratio(n);
  for (Index i = 0; i < n; ++i) density_ratio(i) = ergodic.nu(i) / pi(i);
  if (!function_mobius_monotone(density_ratio, poset))
    throw Error("InitialNotMonotone", "nu/pi is not Mobius monotone for this ordering");

  const RatMatrix reversed = reverse(ergodic, pi);
  if (!mobius_monotone(reversed, poset, Monotone::Down))
    throw Error("ReversalNotMonotone", "the time-reversed kernel is not Mobius monotone");

  const Link link = build_link(poset, pi);
  const RatMatrix dual_kernel = matmul(link.lambda, matmul(ergodic.P, link.lambda_inv));
  const RatRowVector dual_nu = matmul(ergodic.nu, link.lambda_inv);

  // Cross-check nu* against its closed form H(e_i) sum_{e >= e_i} mu(e_i,e) g(e).
  const RatMatrix& mu = poset.mobius();
  for (Index i = 0; i < n; ++i) {
    Rational acc(0);
    for (Index j = 0; j < n; ++j)
      if (!mu(i, j).is_zero()) acc += mu(i, j) * density_ratio(j);
    if (link.down_mass(i) * acc != dual_nu(i))
      throw std::logic_error("dual initial distribution disagrees with its closed form");
  }

  return Chain(ergodic.labels, dual_nu, dual_kernel);
}

DualityReport verify_duality(const Chain& primal, const Chain& dual, const Link& link) {
  DualityReport report;
  const Index n = link.poset.size();

  const RatRowVector projected = matmul(dual.nu, link.lambda);
  report.nu_matches = true;
  for (Index i = 0; i < n && report.nu_matches; ++i)
    if (projected(i) != primal.nu(i)) {
      report.nu_matches = false;
      report.nu_mismatch = i;
    }

  const RatMatrix lhs = matmul(link.lambda, primal.P);
  const RatMatrix rhs = matmul(dual.P, link.lambda);
  report.intertwining = true;
  for (Index i = 0; i < n && report.intertwining; ++i)
    for (Index j = 0; j < n; ++j)
      if (lhs(i, j) != rhs(i, j)) {
        report.intertwining = false;
        report.intertwining_mismatch = {i, j};
        break;
      }

  report.link_stochastic = is_nonnegative(link.lambda) && rows_sum_to_one(link.lambda);
  report.link_last_row_is_pi = true;
  for (Index j = 0; j < n && report.link_last_row_is_pi; ++j)
    if (link.lambda(n - 1, j) != link.pi(j)) {
      report.link_last_row_is_pi = false;
      report.last_row_mismatch = j;
    }

  report.sharp = true;
  for (Index i = 0; i < n && report.sharp; ++i)
    for (Index j = i + 1; j < n; ++j)
      if (!link.lambda(i, j).is_zero()) {
        report.sharp = false;
        report.sharp_violation = {i, j};
        break;
      }

  const RatRowVector pi_step = matmul(link.pi, primal.P);
  report.stationary = true;
  for (Index i = 0; i < n && report.stationary; ++i)
    if (pi_step(i) != link.pi(i)) {
      report.stationary = false;
      report.stationary_mismatch = i;
    }

  return report;
}

}  // namespace ssdual
