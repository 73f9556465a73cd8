#pragma once

#include <optional>
#include <string>
#include <utility>

#include "ssdual/markov.hpp"
#include "ssdual/poset.hpp"

namespace ssdual {

/// Intertwining link for one (pi, poset) pair: Lambda's row at state e is pi
/// truncated to the down-set of e, so the last row (unique maximal state)
/// is pi itself and Lambda is lower-triangular in the topological numbering.
struct Link {
  RatMatrix lambda;
  RatMatrix lambda_inv;
  RatRowVector down_mass;  // H(e) = sum of pi over the down-set of e
  Poset poset;
  RatRowVector pi;
};

/// Builds the truncated-stationary-distribution link. The inverse comes from
/// the closed form diag(pi)^{-1} mu^T diag(H) and is checked against
/// Lambda exactly. Throws ZeroMass when pi vanishes somewhere.
Link build_link(const Poset& poset, const RatRowVector& pi);

enum class Monotone { Down, Up };

/// Down: every entry of C^{-1} P C is nonnegative.
/// Up:   every entry of (C^T)^{-1} P C^T is nonnegative.
/// P need not be stochastic.
bool mobius_monotone(const RatMatrix& P, const Poset& poset, Monotone direction);

/// True iff sum_{e >= e_i} mu(e_i,e) f(e) >= 0 for every state e_i.
bool function_mobius_monotone(const RatRowVector& f, const Poset& poset);

/// Similarity transform diag(H) P diag(H)^{-1} with H the cumulative
/// down-set masses of pi. Its Up-monotonicity decides whether a sharp
/// antidual exists for the given (pi, poset).
RatMatrix mass_conjugate(const RatMatrix& P, const RatRowVector& pi, const Poset& poset);

/// Sharp antidual transform: given an absorbing chain whose absorbing state
/// is the poset's unique maximum, returns the ergodic chain X with
/// nu = nu* Lambda and P = Lambda^{-1} P* Lambda, whose stationary
/// distribution is exactly pi. Both algebraic routes (through the link and
/// through the mass-conjugated kernel) are computed and must agree.
/// Throws NotMonotoneError listing every negative entry when the transform
/// leaves the stochastic cone, AbsorbingMismatch when the absorbing state is
/// not the poset maximum.
Chain sharp_antidual(const Chain& absorbing, const RatRowVector& pi, const Poset& poset);

/// Strong stationary dual on the same state space: requires an ergodic
/// chain whose initial-density ratio nu/pi and time reversal are both
/// Mobius monotone. Returns X* with nu* = nu Lambda^{-1} and
/// P* = Lambda P Lambda^{-1}, absorbing at the poset maximum.
/// Throws InitialNotMonotone / ReversalNotMonotone.
Chain strong_stationary_dual(const Chain& ergodic, const Poset& poset);

/// One boolean per duality requirement, each with an optional counterexample
/// coordinate. Exact comparisons throughout.
struct DualityReport {
  bool nu_matches = false;
  std::optional<Index> nu_mismatch;

  bool intertwining = false;
  std::optional<std::pair<Index, Index>> intertwining_mismatch;

  bool link_stochastic = false;
  bool link_last_row_is_pi = false;
  std::optional<Index> last_row_mismatch;

  bool sharp = false;  // Lambda lower-triangular in topological numbering
  std::optional<std::pair<Index, Index>> sharp_violation;

  bool stationary = false;
  std::optional<Index> stationary_mismatch;

  bool all_passed() const {
    return nu_matches && intertwining && link_stochastic && link_last_row_is_pi && sharp &&
           stationary;
  }
};

/// Checks nu = nu* Lambda, Lambda P = P* Lambda, the link properties,
/// sharpness and stationarity of pi under the primal kernel.
DualityReport verify_duality(const Chain& primal, const Chain& dual, const Link& link);

}  // namespace ssdual
