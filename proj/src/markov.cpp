#include "ssdual/markov.hpp"

#include <numeric>
#include <queue>

namespace ssdual {

Chain::Chain(std::vector<std::string> labels_in, RatRowVector nu_in, RatMatrix P_in)
    : labels(std::move(labels_in)), nu(std::move(nu_in)), P(std::move(P_in)) {
  const Index n = P.rows();
  if (P.cols() != n)
    throw Error("InvalidChain", "transition matrix is not square");
  if (static_cast<Index>(labels.size()) != n || nu.cols() != n)
    throw Error("InvalidChain", "labels/nu size does not match the transition matrix");
  Rational total(0);
  for (Index i = 0; i < n; ++i) {
    if (nu(i).is_negative())
      throw Error("InvalidChain", "nu(" + labels[static_cast<std::size_t>(i)] + ") is negative");
    total += nu(i);
    Rational row(0);
    for (Index j = 0; j < n; ++j) {
      if (P(i, j).is_negative())
        throw Error("InvalidChain", "P(" + labels[static_cast<std::size_t>(i)] + "," +
                                        labels[static_cast<std::size_t>(j)] + ") is negative");
      row += P(i, j);
    }
    if (!row.is_one())
      throw Error("InvalidChain",
                  "row " + labels[static_cast<std::size_t>(i)] + " sums to " + row.str());
  }
  if (!total.is_one()) throw Error("InvalidChain", "nu sums to " + total.str());
}

namespace {

std::vector<std::vector<Index>> adjacency(const RatMatrix& P) {
  std::vector<std::vector<Index>> adj(static_cast<std::size_t>(P.rows()));
  for (Index i = 0; i < P.rows(); ++i)
    for (Index j = 0; j < P.cols(); ++j)
      if (!P(i, j).is_zero()) adj[static_cast<std::size_t>(i)].push_back(j);
  return adj;
}

std::vector<std::vector<Index>> transpose_adjacency(const RatMatrix& P) {
  std::vector<std::vector<Index>> adj(static_cast<std::size_t>(P.rows()));
  for (Index i = 0; i < P.rows(); ++i)
    for (Index j = 0; j < P.cols(); ++j)
      if (!P(i, j).is_zero()) adj[static_cast<std::size_t>(j)].push_back(i);
  return adj;
}

std::vector<bool> reachable_from(const std::vector<std::vector<Index>>& adj, Index start) {
  std::vector<bool> seen(adj.size(), false);
  std::vector<Index> stack{start};
  seen[static_cast<std::size_t>(start)] = true;
  while (!stack.empty()) {
    const Index u = stack.back();
    stack.pop_back();
    for (Index v : adj[static_cast<std::size_t>(u)]) {
      if (!seen[static_cast<std::size_t>(v)]) {
        seen[static_cast<std::size_t>(v)] = true;
        stack.push_back(v);
      }
    }
  }
  return seen;
}

bool strongly_connected(const RatMatrix& P) {
  const auto fwd = reachable_from(adjacency(P), 0);
  const auto bwd = reachable_from(transpose_adjacency(P), 0);
  for (std::size_t i = 0; i < fwd.size(); ++i)
    if (!fwd[i] || !bwd[i]) return false;
  return true;
}

// gcd of cycle lengths of a strongly connected digraph via BFS level
// arithmetic: every edge (u,v) contributes |level(u)+1-level(v)|.
bool aperiodic(const RatMatrix& P) {
  const auto adj = adjacency(P);
  const Index n = P.rows();
  std::vector<long long> level(static_cast<std::size_t>(n), -1);
  std::queue<Index> q;
  q.push(0);
  level[0] = 0;
  long long g = 0;
  while (!q.empty()) {
    const Index u = q.front();
    q.pop();
    for (Index v : adj[static_cast<std::size_t>(u)]) {
      if (level[static_cast<std::size_t>(v)] < 0) {
        level[static_cast<std::size_t>(v)] = level[static_cast<std::size_t>(u)] + 1;
        q.push(v);
      } else {
        const long long diff = level[static_cast<std::size_t>(u)] + 1 - level[static_cast<std::size_t>(v)];
        g = std::gcd(g, diff < 0 ? -diff : diff);
      }
    }
  }
  return g == 1;
}

}  // namespace

ChainClass classify(const Chain& chain) {
  if (strongly_connected(chain.P) && aperiodic(chain.P))
    return ChainClass{ChainKind::Ergodic, -1};

  std::vector<Index> absorbing;
  for (Index i = 0; i < chain.size(); ++i)
    if (chain.P(i, i).is_one()) absorbing.push_back(i);
  if (absorbing.size() == 1) {
    const auto reach = reachable_from(transpose_adjacency(chain.P), absorbing.front());
    bool all = true;
    for (bool r : reach) all = all && r;
    if (all) return ChainClass{ChainKind::AbsorbingUnique, absorbing.front()};
  }
  return ChainClass{ChainKind::Other, -1};
}

RatRowVector stationary(const Chain& chain) {
  if (classify(chain).kind != ChainKind::Ergodic)
    throw Error("NotErgodic", "stationary distribution requires an ergodic chain");
  const Index n = chain.size();
  // (P^T - I) x = 0 with the last equation replaced by normalization.
  RatMatrix A = RatMatrix::Zero(n, n);
  for (Index i = 0; i + 1 < n; ++i)
    for (Index j = 0; j < n; ++j)
      A(i, j) = chain.P(j, i) - (i == j ? Rational(1) : Rational(0));
  for (Index j = 0; j < n; ++j) A(n - 1, j) = Rational(1);
  RatMatrix rhs = RatMatrix::Zero(n, 1);
  rhs(n - 1, 0) = Rational(1);
  const RatMatrix x = solve(A, rhs);
  RatRowVector pi(n);
  for (Index i = 0; i < n; ++i) {
    pi(i) = x(i, 0);
    if (!(pi(i) > Rational(0)))
      throw Error("NotErgodic", "stationary solution is not strictly positive");
  }
  return pi;
}

RatMatrix reverse(const Chain& chain, const RatRowVector& pi) {
  const Index n = chain.size();
  if (pi.cols() != n) throw Error("DimensionMismatch", "pi size does not match the chain");
  for (Index i = 0; i < n; ++i)
    if (!(pi(i) > Rational(0)))
      throw Error("NotStationary", "pi must be strictly positive");
  if (matmul(pi, chain.P) != pi)
    throw Error("NotStationary", "pi P != pi");
  RatMatrix rev(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      rev(i, j) = pi(j) * chain.P(j, i) / pi(i);
  return rev;
}

std::vector<Rational> absorption_tail(const Chain& chain, Index steps) {
  const ChainClass cls = classify(chain);
  if (cls.kind != ChainKind::AbsorbingUnique)
    throw Error("NotAbsorbing", "absorption tail requires a unique absorbing state");
  const Index n = chain.size();
  const Index a = cls.absorbing_index;

  std::vector<Index> transient;
  for (Index i = 0; i < n; ++i)
    if (i != a) transient.push_back(i);
  const Index m = static_cast<Index>(transient.size());

  RatMatrix Q(m, m);
  RatRowVector v(m);
  for (Index r = 0; r < m; ++r) {
    v(r) = chain.nu(transient[static_cast<std::size_t>(r)]);
    for (Index c = 0; c < m; ++c)
      Q(r, c) = chain.P(transient[static_cast<std::size_t>(r)], transient[static_cast<std::size_t>(c)]);
  }

  std::vector<Rational> tail;
  tail.reserve(static_cast<std::size_t>(steps) + 1);
  for (Index k = 0; k <= steps; ++k) {
    Rational mass(0);
    for (Index r = 0; r < m; ++r) mass += v(r);
    tail.push_back(mass);
    if (k < steps) v = matmul(v, Q);
  }
  return tail;
}

bool is_eigenvalue(const RatMatrix& P, const Rational& lambda) {
  if (P.rows() != P.cols()) throw Error("DimensionMismatch", "is_eigenvalue needs a square matrix");
  RatMatrix shifted = P;
  for (Index i = 0; i < P.rows(); ++i) shifted(i, i) -= lambda;
  return determinant(shifted).is_zero();
}

RatRowVector distribution_at(const Chain& chain, Index k) {
  if (k < 0) throw Error("InvalidParameter", "step count must be nonnegative");
  RatRowVector v = chain.nu;
  for (Index step = 0; step < k; ++step) v = matmul(v, chain.P);
  return v;
}

}  // namespace ssdual
