#pragma once

#include <string>
#include <vector>

#include "ssdual/matrix.hpp"

namespace ssdual {

inline constexpr Index kDefaultStateCap = 4096;

/// Mixed-radix indexing of the box {0..N_1} x ... x {0..N_d}; the first
/// coordinate is the most significant digit, so the numbering is a linear
/// extension of the coordinate-wise order (min box point -> 0, max -> last).
class MixedRadix {
 public:
  explicit MixedRadix(std::vector<int> bounds);

  Index size() const noexcept { return size_; }
  int dims() const noexcept { return static_cast<int>(bounds_.size()); }
  const std::vector<int>& bounds() const noexcept { return bounds_; }

  Index index(const std::vector<int>& coords) const;
  std::vector<int> coords(Index state) const;
  /// Index delta of a unit step in coordinate k.
  Index stride(int k) const noexcept { return strides_[static_cast<std::size_t>(k)]; }

 private:
  std::vector<int> bounds_;
  std::vector<Index> strides_;
  Index size_;
};

std::string lattice_label(const std::vector<int>& coords);

/// A finite partial order stored in a topological numbering, together with
/// its zeta matrix C (C(i,j) = 1 iff state i precedes state j) and the
/// Mobius matrix mu = C^{-1}. The unique maximal state is always the last
/// index.
class Poset {
 public:
  /// Validates an arbitrary labelled 0/1 zeta matrix: reflexivity,
  /// antisymmetry, transitivity, unique maximal element. States are
  /// renumbered topologically if needed; the original positions stay
  /// available through original_index().
  static Poset validate(std::vector<std::string> labels, const RatMatrix& zeta);

  /// Coordinate-wise order on {0..N_1} x ... x {0..N_d}.
  static Poset product_lattice(const std::vector<int>& bounds, Index cap = kDefaultStateCap);

  /// Linear order 1 < 2 < ... < M.
  static Poset total_order(Index m);

  Index size() const noexcept { return static_cast<Index>(labels_.size()); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const RatMatrix& zeta() const noexcept { return zeta_; }
  const RatMatrix& mobius() const noexcept { return mobius_; }

  /// True iff state i precedes state j.
  bool leq(Index i, Index j) const { return zeta_(i, j).is_one(); }
  Index max_index() const noexcept { return size() - 1; }

  /// Position of (topological) state i in the labels the poset was built from.
  Index original_index(Index i) const { return to_original_[static_cast<std::size_t>(i)]; }

 private:
  Poset(std::vector<std::string> labels, RatMatrix zeta, RatMatrix mobius,
        std::vector<Index> to_original)
      : labels_(std::move(labels)),
        zeta_(std::move(zeta)),
        mobius_(std::move(mobius)),
        to_original_(std::move(to_original)) {}

  std::vector<std::string> labels_;
  RatMatrix zeta_;
  RatMatrix mobius_;
  std::vector<Index> to_original_;
};

}  // namespace ssdual
