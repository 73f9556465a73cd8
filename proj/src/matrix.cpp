#include "ssdual/matrix.hpp"

#include <string>

namespace ssdual {

namespace {

void require_square(const RatMatrix& a, const char* op) {
  if (a.rows() != a.cols())
    throw Error("DimensionMismatch", std::string(op) + ": matrix is " +
                                         std::to_string(a.rows()) + "x" +
                                         std::to_string(a.cols()));
}

}  // namespace

RatMatrix matmul(const RatMatrix& a, const RatMatrix& b) {
  if (a.cols() != b.rows())
    throw Error("DimensionMismatch",
                "matmul: " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                    " times " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  RatMatrix out = RatMatrix::Zero(a.rows(), b.cols());
  for (Index i = 0; i < a.rows(); ++i) {
    for (Index k = 0; k < a.cols(); ++k) {
      const Rational& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (Index j = 0; j < b.cols(); ++j) {
        const Rational& bkj = b(k, j);
        if (bkj.is_zero()) continue;
        out(i, j) += aik * bkj;
      }
    }
  }
  return out;
}

RatRowVector matmul(const RatRowVector& v, const RatMatrix& b) {
  if (v.cols() != b.rows())
    throw Error("DimensionMismatch", "matmul: vector length " + std::to_string(v.cols()) +
                                         " vs matrix rows " + std::to_string(b.rows()));
  RatRowVector out = RatRowVector::Zero(b.cols());
  for (Index k = 0; k < v.cols(); ++k) {
    const Rational& vk = v(k);
    if (vk.is_zero()) continue;
    for (Index j = 0; j < b.cols(); ++j) {
      const Rational& bkj = b(k, j);
      if (bkj.is_zero()) continue;
      out(j) += vk * bkj;
    }
  }
  return out;
}

RatMatrix invert(const RatMatrix& a) {
  require_square(a, "invert");
  const Index n = a.rows();
  RatMatrix work = a;
  RatMatrix inv = rat_identity(n);
  for (Index col = 0; col < n; ++col) {
    Index pivot = -1;
    for (Index r = col; r < n; ++r) {
      if (!work(r, col).is_zero()) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) throw Error("Singular", "matrix has no inverse (column " + std::to_string(col) + ")");
    if (pivot != col) {
      work.row(pivot).swap(work.row(col));
      inv.row(pivot).swap(inv.row(col));
    }
    const Rational p = work(col, col);
    if (!p.is_one()) {
      for (Index j = 0; j < n; ++j) {
        if (!work(col, j).is_zero()) work(col, j) /= p;
        if (!inv(col, j).is_zero()) inv(col, j) /= p;
      }
    }
    for (Index r = 0; r < n; ++r) {
      if (r == col) continue;
      const Rational f = work(r, col);
      if (f.is_zero()) continue;
      for (Index j = 0; j < n; ++j) {
        if (!work(col, j).is_zero()) work(r, j) -= f * work(col, j);
        if (!inv(col, j).is_zero()) inv(r, j) -= f * inv(col, j);
      }
    }
  }
  return inv;
}

Rational determinant(const RatMatrix& a) {
  require_square(a, "determinant");
  const Index n = a.rows();
  RatMatrix work = a;
  Rational det(1);
  for (Index col = 0; col < n; ++col) {
    Index pivot = -1;
    for (Index r = col; r < n; ++r) {
      if (!work(r, col).is_zero()) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) return Rational(0);
    if (pivot != col) {
      work.row(pivot).swap(work.row(col));
      det = -det;
    }
    const Rational p = work(col, col);
    det *= p;
    for (Index r = col + 1; r < n; ++r) {
      const Rational f = work(r, col) / p;
      if (f.is_zero()) continue;
      for (Index j = col; j < n; ++j) {
        if (!work(col, j).is_zero()) work(r, j) -= f * work(col, j);
      }
    }
  }
  return det;
}

RatMatrix solve(const RatMatrix& a, const RatMatrix& rhs) {
  require_square(a, "solve");
  if (rhs.rows() != a.rows())
    throw Error("DimensionMismatch", "solve: rhs has " + std::to_string(rhs.rows()) + " rows");
  const Index n = a.rows();
  RatMatrix work = a;
  RatMatrix x = rhs;
  for (Index col = 0; col < n; ++col) {
    Index pivot = -1;
    for (Index r = col; r < n; ++r) {
      if (!work(r, col).is_zero()) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) throw Error("Singular", "system is singular (column " + std::to_string(col) + ")");
    if (pivot != col) {
      work.row(pivot).swap(work.row(col));
      x.row(pivot).swap(x.row(col));
    }
    const Rational p = work(col, col);
    if (!p.is_one()) {
      for (Index j = col; j < n; ++j)
        if (!work(col, j).is_zero()) work(col, j) /= p;
      for (Index j = 0; j < x.cols(); ++j)
        if (!x(col, j).is_zero()) x(col, j) /= p;
    }
    for (Index r = 0; r < n; ++r) {
      if (r == col) continue;
      const Rational f = work(r, col);
      if (f.is_zero()) continue;
      for (Index j = col; j < n; ++j)
        if (!work(col, j).is_zero()) work(r, j) -= f * work(col, j);
      for (Index j = 0; j < x.cols(); ++j)
        if (!x(col, j).is_zero()) x(r, j) -= f * x(col, j);
    }
  }
  return x;
}

RatMatrix rat_identity(Index n) {
  RatMatrix m = RatMatrix::Zero(n, n);
  for (Index i = 0; i < n; ++i) m(i, i) = Rational(1);
  return m;
}

bool is_nonnegative(const RatMatrix& m) {
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j)
      if (m(i, j).is_negative()) return false;
  return true;
}

bool rows_sum_to_one(const RatMatrix& m) {
  for (Index i = 0; i < m.rows(); ++i) {
    Rational s(0);
    for (Index j = 0; j < m.cols(); ++j) s += m(i, j);
    if (!s.is_one()) return false;
  }
  return true;
}

RatRowVector uniform_distribution(Index n) {
  RatRowVector v(n);
  for (Index i = 0; i < n; ++i) v(i) = Rational(1, static_cast<long long>(n));
  return v;
}

RatRowVector point_mass(Index n, Index at) {
  RatRowVector v = RatRowVector::Zero(n);
  v(at) = Rational(1);
  return v;
}

}  // namespace ssdual
