#include "ssdual/poset.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace ssdual {

MixedRadix::MixedRadix(std::vector<int> bounds) : bounds_(std::move(bounds)) {
  if (bounds_.empty()) throw Error("InvalidCounts", "at least one coordinate is required");
  strides_.assign(bounds_.size(), 1);
  Index size = 1;
  for (int k = dims() - 1; k >= 0; --k) {
    const int b = bounds_[static_cast<std::size_t>(k)];
    if (b < 0) throw Error("InvalidCounts", "negative bound in coordinate " + std::to_string(k + 1));
    strides_[static_cast<std::size_t>(k)] = size;
    size *= b + 1;
  }
  size_ = size;
}

Index MixedRadix::index(const std::vector<int>& coords) const {
  Index idx = 0;
  for (int k = 0; k < dims(); ++k)
    idx += strides_[static_cast<std::size_t>(k)] * coords[static_cast<std::size_t>(k)];
  return idx;
}

std::vector<int> MixedRadix::coords(Index state) const {
  std::vector<int> c(bounds_.size());
  for (int k = 0; k < dims(); ++k) {
    const Index s = strides_[static_cast<std::size_t>(k)];
    c[static_cast<std::size_t>(k)] = static_cast<int>(state / s);
    state %= s;
  }
  return c;
}

std::string lattice_label(const std::vector<int>& coords) {
  std::ostringstream os;
  os << '(';
  for (std::size_t k = 0; k < coords.size(); ++k) {
    if (k) os << ',';
    os << coords[k];
  }
  os << ')';
  return os.str();
}

namespace {

bool entry_is_binary(const Rational& r) { return r.is_zero() || r.is_one(); }

}  // namespace

Poset Poset::validate(std::vector<std::string> labels, const RatMatrix& zeta) {
  const Index n = static_cast<Index>(labels.size());
  if (zeta.rows() != n || zeta.cols() != n)
    throw Error("DimensionMismatch", "zeta is " + std::to_string(zeta.rows()) + "x" +
                                         std::to_string(zeta.cols()) + " but there are " +
                                         std::to_string(n) + " labels");
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      if (!entry_is_binary(zeta(i, j)))
        throw Error("InvalidZeta", "zeta(" + labels[i] + "," + labels[j] + ") is not 0/1");

  for (Index i = 0; i < n; ++i)
    if (!zeta(i, i).is_one())
      throw Error("NotReflexive", "state " + labels[i] + " does not precede itself");
  for (Index i = 0; i < n; ++i)
    for (Index j = i + 1; j < n; ++j)
      if (zeta(i, j).is_one() && zeta(j, i).is_one())
        throw Error("NotAntisymmetric", "states " + labels[i] + " and " + labels[j] +
                                            " precede each other");
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) {
      if (!zeta(i, j).is_one() || i == j) continue;
      for (Index k = 0; k < n; ++k)
        if (zeta(j, k).is_one() && !zeta(i, k).is_one())
          throw Error("NotTransitive", "pair (" + labels[i] + "," + labels[k] +
                                           ") is missing although " + labels[i] + " <= " +
                                           labels[j] + " <= " + labels[k]);
    }

  std::vector<Index> maximal;
  for (Index i = 0; i < n; ++i) {
    bool is_max = true;
    for (Index j = 0; j < n && is_max; ++j)
      if (j != i && zeta(i, j).is_one()) is_max = false;
    if (is_max) maximal.push_back(i);
  }
  if (maximal.size() != 1) {
    std::string msg = maximal.empty() ? "no maximal state" : "maximal states";
    for (Index m : maximal) msg += " " + labels[m];
    throw Error("NoUniqueMax", msg);
  }

  // Topological renumbering: repeatedly emit the smallest original index
  // whose strict predecessors are all placed. Already-topological input
  // keeps its numbering.
  std::vector<Index> order;
  order.reserve(static_cast<std::size_t>(n));
  std::vector<bool> placed(static_cast<std::size_t>(n), false);
  for (Index step = 0; step < n; ++step) {
    Index pick = -1;
    for (Index i = 0; i < n && pick < 0; ++i) {
      if (placed[static_cast<std::size_t>(i)]) continue;
      bool ready = true;
      for (Index j = 0; j < n && ready; ++j)
        if (j != i && zeta(j, i).is_one() && !placed[static_cast<std::size_t>(j)]) ready = false;
      if (ready) pick = i;
    }
    placed[static_cast<std::size_t>(pick)] = true;
    order.push_back(pick);
  }

  std::vector<std::string> new_labels(static_cast<std::size_t>(n));
  RatMatrix new_zeta(n, n);
  for (Index i = 0; i < n; ++i) {
    new_labels[static_cast<std::size_t>(i)] = labels[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])];
    for (Index j = 0; j < n; ++j)
      new_zeta(i, j) = zeta(order[static_cast<std::size_t>(i)], order[static_cast<std::size_t>(j)]);
  }
  RatMatrix mobius = invert(new_zeta);
  return Poset(std::move(new_labels), std::move(new_zeta), std::move(mobius), std::move(order));
}

Poset Poset::product_lattice(const std::vector<int>& bounds, Index cap) {
  for (std::size_t k = 0; k < bounds.size(); ++k)
    if (bounds[k] < 1)
      throw Error("InvalidCounts", "bound N_" + std::to_string(k + 1) + " must be >= 1");
  MixedRadix radix(bounds);
  if (radix.size() > cap)
    throw Error("TooLarge", std::to_string(radix.size()) + " states exceed the cap of " +
                                std::to_string(cap));
  const Index n = radix.size();
  const int d = radix.dims();

  std::vector<std::vector<int>> coords(static_cast<std::size_t>(n));
  std::vector<std::string> labels(static_cast<std::size_t>(n));
  for (Index i = 0; i < n; ++i) {
    coords[static_cast<std::size_t>(i)] = radix.coords(i);
    labels[static_cast<std::size_t>(i)] = lattice_label(coords[static_cast<std::size_t>(i)]);
  }

  RatMatrix zeta = RatMatrix::Zero(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) {
      bool le = true;
      for (int k = 0; k < d && le; ++k)
        le = coords[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] <=
             coords[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)];
      if (le) zeta(i, j) = Rational(1);
    }

  // mu factorizes over coordinates: (-1)^{sum r_k} on unit-box increments.
  RatMatrix mobius = RatMatrix::Zero(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) {
      int parity = 0;
      bool in_box = true;
      for (int k = 0; k < d && in_box; ++k) {
        const int r = coords[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)] -
                      coords[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)];
        if (r < 0 || r > 1) in_box = false;
        parity += r;
      }
      if (in_box) mobius(i, j) = (parity % 2 == 0) ? Rational(1) : Rational(-1);
    }

  std::vector<Index> identity(static_cast<std::size_t>(n));
  std::iota(identity.begin(), identity.end(), Index{0});
  return Poset(std::move(labels), std::move(zeta), std::move(mobius), std::move(identity));
}

Poset Poset::total_order(Index m) {
  if (m < 1) throw Error("InvalidCounts", "a total order needs at least one state");
  std::vector<std::string> labels(static_cast<std::size_t>(m));
  for (Index i = 0; i < m; ++i) labels[static_cast<std::size_t>(i)] = std::to_string(i + 1);
  RatMatrix zeta = RatMatrix::Zero(m, m);
  RatMatrix mobius = RatMatrix::Zero(m, m);
  for (Index i = 0; i < m; ++i) {
    for (Index j = i; j < m; ++j) zeta(i, j) = Rational(1);
    mobius(i, i) = Rational(1);
    if (i + 1 < m) mobius(i, i + 1) = Rational(-1);
  }
  std::vector<Index> identity(static_cast<std::size_t>(m));
  std::iota(identity.begin(), identity.end(), Index{0});
  return Poset(std::move(labels), std::move(zeta), std::move(mobius), std::move(identity));
}

}  // namespace ssdual
