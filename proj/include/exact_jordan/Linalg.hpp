#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include <Eigen/Core>

#include "exact_jordan/Scalar.hpp"

/// Exact dense linear algebra over a field scalar. Every routine here
/// decides zero-ness structurally, so nothing depends on a tolerance.
namespace ej {

template <class Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <class Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using ExactMatrix = Matrix<GaussianRational>;
using ExactVector = Vector<GaussianRational>;
using Index = Eigen::Index;

class NotInvariant : public std::logic_error {
 public:
  NotInvariant() : std::logic_error("subspace is not invariant under the operator") {}
};

class NotNested : public std::logic_error {
 public:
  NotNested() : std::logic_error("inner subspace is not contained in outer subspace") {}
};

class Singular : public std::domain_error {
 public:
  Singular() : std::domain_error("matrix is singular") {}
};

class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

template <class Scalar>
struct RowEchelon {
  Matrix<Scalar> reduced;
  std::vector<Index> pivotCols;
  Index rank = 0;
};

template <class Derived>
bool allZero(const Eigen::MatrixBase<Derived>& m) {
  for (Index c = 0; c < m.cols(); ++c)
    for (Index r = 0; r < m.rows(); ++r)
      if (!isZero(m.coeff(r, c))) return false;
  return true;
}

template <class Derived>
auto rref(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  RowEchelon<Scalar> out;
  out.reduced = m;
  Matrix<Scalar>& r = out.reduced;
  const Index rows = r.rows();
  const Index cols = r.cols();
  Index row = 0;
  for (Index col = 0; col < cols && row < rows; ++col) {
    // First nonzero entry at or below the current row.
    Index pivot = row;
    while (pivot < rows && isZero(r(pivot, col))) ++pivot;
    if (pivot == rows) continue;
    if (pivot != row) r.row(pivot).swap(r.row(row));

    const Scalar scale = inv(r(row, col));
    for (Index c = col; c < cols; ++c) r(row, c) *= scale;
    for (Index other = 0; other < rows; ++other) {
      if (other == row || isZero(r(other, col))) continue;
      const Scalar factor = r(other, col);
      for (Index c = col; c < cols; ++c)
        if (!isZero(r(row, c))) r(other, c) -= factor * r(row, c);
    }
    out.pivotCols.push_back(col);
    ++row;
  }
  out.rank = static_cast<Index>(out.pivotCols.size());
  return out;
}

template <class Derived>
Index rank(const Eigen::MatrixBase<Derived>& m) {
  return rref(m).rank;
}

/// Column-basis representation of a linear subspace of Scalar^ambientDim.
/// The basis always has full column rank.
template <class Scalar>
class Subspace {
 public:
  explicit Subspace(Matrix<Scalar> basis) : basis_(std::move(basis)) {
    if (ej::rank(basis_) != basis_.cols())
      throw std::invalid_argument("subspace basis columns are linearly dependent");
  }

  static Subspace zero(Index ambientDim) { return Subspace(Matrix<Scalar>(ambientDim, 0)); }
  static Subspace full(Index ambientDim) { return Subspace(Matrix<Scalar>::Identity(ambientDim, ambientDim)); }

  Index ambientDim() const { return basis_.rows(); }
  Index dim() const { return basis_.cols(); }
  const Matrix<Scalar>& basis() const { return basis_; }

  /// True when v lies in the span of the basis.
  template <class Derived>
  bool contains(const Eigen::MatrixBase<Derived>& v) const {
    Matrix<Scalar> joined(ambientDim(), dim() + v.cols());
    joined << basis_, v;
    return ej::rank(joined) == dim();
  }

 private:
  Matrix<Scalar> basis_;
};

using ExactSubspace = Subspace<GaussianRational>;

template <class Derived>
auto kernelBasis(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  const auto echelon = rref(m);
  const Index cols = m.cols();
  std::vector<bool> isPivot(static_cast<std::size_t>(cols), false);
  for (Index p : echelon.pivotCols) isPivot[static_cast<std::size_t>(p)] = true;

  Matrix<Scalar> basis = Matrix<Scalar>::Zero(cols, cols - echelon.rank);
  Index k = 0;
  for (Index free = 0; free < cols; ++free) {
    if (isPivot[static_cast<std::size_t>(free)]) continue;
    basis(free, k) = Scalar(1);
    for (Index r = 0; r < echelon.rank; ++r) basis(echelon.pivotCols[static_cast<std::size_t>(r)], k) = -echelon.reduced(r, free);
    ++k;
  }
  return Subspace<Scalar>(std::move(basis));
}

/// Column space, spanned by the pivot columns of m itself in ascending order.
template <class Derived>
auto imageBasis(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  const auto echelon = rref(m);
  Matrix<Scalar> basis(m.rows(), echelon.rank);
  for (Index k = 0; k < echelon.rank; ++k) basis.col(k) = m.col(echelon.pivotCols[static_cast<std::size_t>(k)]);
  return Subspace<Scalar>(std::move(basis));
}

/// The same subspace with its reduced column-echelon basis, which depends
/// only on the span and not on the basis it was given in.
template <class Scalar>
Subspace<Scalar> canonicalBasis(const Subspace<Scalar>& s) {
  const auto echelon = rref(s.basis().transpose());
  return Subspace<Scalar>(Matrix<Scalar>(echelon.reduced.topRows(echelon.rank).transpose()));
}

/// A solution of m x = b with every free variable set to zero, or nullopt if
/// b is outside the column space.
template <class DerivedM, class DerivedB>
auto solveParticular(const Eigen::MatrixBase<DerivedM>& m, const Eigen::MatrixBase<DerivedB>& b)
    -> std::optional<Vector<typename DerivedM::Scalar>> {
  using Scalar = typename DerivedM::Scalar;
  if (b.rows() != m.rows() || b.cols() != 1) throw DimensionMismatch("right-hand side has wrong shape");
  Matrix<Scalar> augmented(m.rows(), m.cols() + 1);
  augmented << m, b;
  const auto echelon = rref(augmented);
  if (!echelon.pivotCols.empty() && echelon.pivotCols.back() == m.cols()) return std::nullopt;
  Vector<Scalar> x = Vector<Scalar>::Zero(m.cols());
  for (Index r = 0; r < echelon.rank; ++r) x(echelon.pivotCols[static_cast<std::size_t>(r)]) = echelon.reduced(r, m.cols());
  return x;
}

/// The matrix of a restricted to the invariant subspace s, in the
/// coordinates of s's basis: a * basis = basis * result.
template <class Derived>
auto restrictOperator(const Eigen::MatrixBase<Derived>& a, const Subspace<typename Derived::Scalar>& s) {
  using Scalar = typename Derived::Scalar;
  if (a.rows() != a.cols() || a.rows() != s.ambientDim()) throw DimensionMismatch("operator and subspace dimensions differ");
  const Index m = s.dim();
  Matrix<Scalar> augmented(s.ambientDim(), 2 * m);
  augmented << s.basis(), a * s.basis();
  const auto echelon = rref(augmented);
  // Full column rank of the basis puts the first m pivots in the left block;
  // a further pivot means some image column escaped the span.
  if (echelon.rank != m) throw NotInvariant();
  return Matrix<Scalar>(echelon.reduced.topRightCorner(m, m));
}

/// Vectors from outer's basis, chosen greedily in column order, that complete
/// inner to a basis of outer.
template <class Scalar>
std::vector<Vector<Scalar>> extendBasis(const Subspace<Scalar>& inner, const Subspace<Scalar>& outer) {
  if (inner.ambientDim() != outer.ambientDim()) throw DimensionMismatch("subspaces live in different spaces");
  if (!outer.contains(inner.basis())) throw NotNested();

  std::vector<Vector<Scalar>> added;
  Matrix<Scalar> current = inner.basis();
  Index currentRank = inner.dim();
  for (Index c = 0; c < outer.dim() && currentRank < outer.dim(); ++c) {
    Matrix<Scalar> candidate(current.rows(), current.cols() + 1);
    candidate << current, outer.basis().col(c);
    if (rank(candidate) > currentRank) {
      current = std::move(candidate);
      ++currentRank;
      added.emplace_back(outer.basis().col(c));
    }
  }
  return added;
}

template <class Derived>
auto invert(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  if (m.rows() != m.cols()) throw DimensionMismatch("only square matrices can be inverted");
  const Index n = m.rows();
  Matrix<Scalar> augmented(n, 2 * n);
  augmented << m, Matrix<Scalar>::Identity(n, n);
  const auto echelon = rref(augmented);
  if (echelon.rank < n || (n > 0 && echelon.pivotCols.back() >= n)) throw Singular();
  return Matrix<Scalar>(echelon.reduced.rightCols(n));
}

template <class Derived>
auto determinant(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  if (m.rows() != m.cols()) throw DimensionMismatch("determinant of a non-square matrix");
  Matrix<Scalar> work = m;
  const Index n = work.rows();
  Scalar det(1);
  for (Index col = 0; col < n; ++col) {
    Index pivot = col;
    while (pivot < n && isZero(work(pivot, col))) ++pivot;
    if (pivot == n) return Scalar(0);
    if (pivot != col) {
      work.row(pivot).swap(work.row(col));
      det = -det;
    }
    det *= work(col, col);
    const Scalar scale = inv(work(col, col));
    for (Index r = col + 1; r < n; ++r) {
      if (isZero(work(r, col))) continue;
      const Scalar factor = work(r, col) * scale;
      for (Index c = col; c < n; ++c) work(r, c) -= factor * work(col, c);
    }
  }
  return det;
}

template <class Derived>
auto matrixPower(const Eigen::MatrixBase<Derived>& m, unsigned exponent) {
  using Scalar = typename Derived::Scalar;
  Matrix<Scalar> result = Matrix<Scalar>::Identity(m.rows(), m.cols());
  Matrix<Scalar> base = m;
  while (exponent > 0) {
    if (exponent & 1u) result = result * base;
    exponent >>= 1u;
    if (exponent > 0) base = base * base;
  }
  return result;
}

/// a - lambda * I
template <class Derived>
auto shifted(const Eigen::MatrixBase<Derived>& a, const typename Derived::Scalar& lambda) {
  using Scalar = typename Derived::Scalar;
  Matrix<Scalar> out = a;
  for (Index k = 0; k < out.rows(); ++k) out(k, k) -= lambda;
  return out;
}

}  // namespace ej
