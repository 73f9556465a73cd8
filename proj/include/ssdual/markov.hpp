#pragma once

#include <string>
#include <vector>

#include "ssdual/matrix.hpp"

namespace ssdual {

/// A finite chain: labelled states, an exact initial distribution nu and an
/// exact row-stochastic kernel P. Construction validates both.
struct Chain {
  Chain() = default;
  Chain(std::vector<std::string> labels, RatRowVector nu, RatMatrix P);

  Index size() const noexcept { return P.rows(); }

  std::vector<std::string> labels;
  RatRowVector nu;
  RatMatrix P;

  friend bool operator==(const Chain& a, const Chain& b) {
    return a.labels == b.labels && a.nu == b.nu && a.P == b.P;
  }
};

enum class ChainKind { Ergodic, AbsorbingUnique, Other };

struct ChainClass {
  ChainKind kind = ChainKind::Other;
  Index absorbing_index = -1;  // set when kind == AbsorbingUnique
};

/// Ergodic iff the transition digraph is strongly connected with cycle-length
/// gcd 1; AbsorbingUnique iff exactly one state holds with probability 1 and
/// is reachable from everywhere; Other otherwise.
ChainClass classify(const Chain& chain);

/// Unique exact stationary distribution of an ergodic chain.
/// Throws NotErgodic.
RatRowVector stationary(const Chain& chain);

/// Exact time-reversed kernel diag(pi)^{-1} P^T diag(pi).
/// Throws NotStationary when pi P != pi.
RatMatrix reverse(const Chain& chain, const RatRowVector& pi);

/// Exact absorption tail [P(T>0), ..., P(T>K)] for a chain with a unique
/// absorbing state, via iterating the sub-distribution on transient states.
std::vector<Rational> absorption_tail(const Chain& chain, Index steps);

/// True iff det(P - lambda I) vanishes exactly.
bool is_eigenvalue(const RatMatrix& P, const Rational& lambda);

/// Exact nu P^k.
RatRowVector distribution_at(const Chain& chain, Index k);

}  // namespace ssdual
