#pragma once

#include <Eigen/Core>

#include "ssdual/rational.hpp"

namespace ssdual {

using RatMatrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using RatRowVector = Eigen::Matrix<Rational, 1, Eigen::Dynamic>;
using Index = Eigen::Index;

/// Exact matrix product. Skips zero entries of `a`, which on the sparse
/// structured matrices used here (links, Mobius matrices, lattice kernels)
/// is far cheaper than a dense pass.
RatMatrix matmul(const RatMatrix& a, const RatMatrix& b);
RatRowVector matmul(const RatRowVector& v, const RatMatrix& b);

/// Exact inverse via Gauss-Jordan elimination; pivots are picked by first
/// nonzero scan down each column. Throws Singular.
RatMatrix invert(const RatMatrix& a);

/// Exact determinant (0 for singular input, no error).
Rational determinant(const RatMatrix& a);

/// Solves a x = rhs exactly for a single right-hand side column.
/// Throws Singular.
RatMatrix solve(const RatMatrix& a, const RatMatrix& rhs);

RatMatrix rat_identity(Index n);

bool is_nonnegative(const RatMatrix& m);
bool rows_sum_to_one(const RatMatrix& m);

RatRowVector uniform_distribution(Index n);
RatRowVector point_mass(Index n, Index at);

}  // namespace ssdual
