// SPDX-License-Identifier: Apache-2.0
//
// Small exact matrices.  Everything is an Eigen dense type templated on the
// scalar; the free functions here are the handful of operations Eigen cannot
// do exactly on its own (determinant and inverse without pivoting, Smith
// normal form, congruence action by integer matrices).
#pragma once

#include <string>

#include <Eigen/Core>

#include "splitjac/rational.hpp"

namespace splitjac {

template <class S>
using Mat2 = Eigen::Matrix<S, 2, 2>;
template <class S>
using Vec2 = Eigen::Matrix<S, 2, 1>;
/// Rank-1 or rank-2 lattice map; size fixed at construction, never above 2.
template <class S>
using Mat = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic, 0, 2, 2>;

using IntMat2 = Mat2<Integer>;
using RatMat2 = Mat2<Rational>;
using IntMat = Mat<Integer>;
using RatMat = Mat<Rational>;
using IntVec2 = Vec2<Integer>;
using RatVec2 = Vec2<Rational>;

/// Row-major 2x2 constructor: [[a, b], [c, d]].
template <class S>
Mat2<S> mat2(const S& a, const S& b, const S& c, const S& d) {
  Mat2<S> m;
  m << a, b, c, d;
  return m;
}

inline IntMat2 imat2(long long a, long long b, long long c, long long d) {
  return mat2<Integer>(a, b, c, d);
}

inline RatMat2 rmat2(const Rational& a, const Rational& b, const Rational& c, const Rational& d) {
  return mat2<Rational>(a, b, c, d);
}

template <class Derived>
auto to_rational(const Eigen::MatrixBase<Derived>& m) {
  using Out = Eigen::Matrix<Rational, Derived::RowsAtCompileTime, Derived::ColsAtCompileTime, 0,
                            Derived::MaxRowsAtCompileTime, Derived::MaxColsAtCompileTime>;
  Out r(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) r(i, j) = Rational(m(i, j));
  return r;
}

template <class Derived>
bool is_integral(const Eigen::MatrixBase<Derived>& m) {
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_integer()) return false;
  return true;
}

/// Throws NotIntegral when any entry has a nontrivial denominator.
template <class Derived>
auto to_integer(const Eigen::MatrixBase<Derived>& m) {
  using Out = Eigen::Matrix<Integer, Derived::RowsAtCompileTime, Derived::ColsAtCompileTime, 0,
                            Derived::MaxRowsAtCompileTime, Derived::MaxColsAtCompileTime>;
  Out r(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) r(i, j) = m(i, j).to_integer();
  return r;
}

/// Determinant of a 1x1 or 2x2 matrix by the cofactor formula.
template <class Derived>
typename Derived::Scalar det(const Eigen::MatrixBase<Derived>& m) {
  if (m.rows() != m.cols() || m.rows() < 1 || m.rows() > 2)
    throw Error(ErrorKind::UnsupportedRank, "determinant needs a 1x1 or 2x2 matrix");
  if (m.rows() == 1) return m(0, 0);
  return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
}

/// Exact inverse of a 2x2 rational matrix; throws SingularMatrix when det = 0.
RatMat2 inv2(const RatMat2& a);
/// Exact inverse of a 1x1 or 2x2 rational matrix.
RatMat inverse(const RatMat& a);

/// Xᵀ·Q·X.  Contravariant: congruence_act(X*Y, Q) == congruence_act(Y, congruence_act(X, Q)).
template <class S>
Mat2<S> congruence_act(const IntMat2& x, const Mat2<S>& q) {
  Mat2<S> xs;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) xs(i, j) = S(x(i, j));
  const Mat2<S> xt = xs.transpose();
  const Mat2<S> left = xt * q;
  return left * xs;
}

template <class Derived>
bool is_symmetric(const Eigen::MatrixBase<Derived>& m) {
  return m.rows() == m.cols() && m == m.transpose();
}

/// Symmetric and all leading principal minors strictly positive.
template <class Derived>
bool is_positive_definite(const Eigen::MatrixBase<Derived>& m) {
  if (!is_symmetric(m)) return false;
  if (m(0, 0).sign() <= 0) return false;
  return m.rows() == 1 || det(m).sign() > 0;
}

/// Smith normal form U·A·V = D of a 2x2 integer matrix.
struct Snf2 {
  IntMat2 u;
  IntMat2 d;
  IntMat2 v;
};

Snf2 snf2(const IntMat2& a);

/// Invariant factors γ₁ | γ₂ of a 2x2 integer matrix.
std::pair<Integer, Integer> invariant_factors(const IntMat2& a);

template <class Derived>
std::string to_string(const Eigen::MatrixBase<Derived>& m) {
  std::string s = "[";
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    s += i ? ",[" : "[";
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (j) s += ",";
      s += m(i, j).str();
    }
    s += "]";
  }
  return s + "]";
}

}  // namespace splitjac
