// SPDX-License-Identifier: Apache-2.0
#include "splitjac/matrix.hpp"

#include <utility>

namespace splitjac {

RatMat2 inv2(const RatMat2& a) {
  const Rational dt = det(a);
  if (dt.is_zero()) throw Error(ErrorKind::SingularMatrix, "inverse of singular matrix " + to_string(a));
  return rmat2(a(1, 1) / dt, -a(0, 1) / dt, -a(1, 0) / dt, a(0, 0) / dt);
}

RatMat inverse(const RatMat& a) {
  if (a.rows() == 2 && a.cols() == 2) return inv2(a);
  if (a.rows() == 1 && a.cols() == 1) {
    if (a(0, 0).is_zero()) throw Error(ErrorKind::SingularMatrix, "inverse of [[0]]");
    RatMat r(1, 1);
    r(0, 0) = Rational(1) / a(0, 0);
    return r;
  }
  throw Error(ErrorKind::UnsupportedRank, "inverse needs a 1x1 or 2x2 matrix");
}

namespace {

// Elementary operations applied simultaneously to the working matrix and to
// the transform that records them (rows → U, columns → V).
void swap_rows(IntMat2& m, IntMat2& u) {
  m.row(0).swap(m.row(1));
  u.row(0).swap(u.row(1));
}

void swap_cols(IntMat2& m, IntMat2& v) {
  m.col(0).swap(m.col(1));
  v.col(0).swap(v.col(1));
}

// row `dst` -= q * row `src`
void row_axpy(IntMat2& m, IntMat2& u, int dst, int src, const Integer& q) {
  for (int j = 0; j < 2; ++j) {
    m(dst, j) -= q * m(src, j);
    u(dst, j) -= q * u(src, j);
  }
}

void col_axpy(IntMat2& m, IntMat2& v, int dst, int src, const Integer& q) {
  for (int i = 0; i < 2; ++i) {
    m(i, dst) -= q * m(i, src);
    v(i, dst) -= q * v(i, src);
  }
}

}  // namespace

Snf2 snf2(const IntMat2& a) {
  IntMat2 m = a;
  IntMat2 u = IntMat2::Identity();
  IntMat2 v = IntMat2::Identity();

  for (;;) {
    // Pivot: smallest nonzero entry in absolute value moves to (0,0).
    int pi = -1, pj = -1;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        if (!m(i, j).is_zero() && (pi < 0 || abs(m(i, j)) < abs(m(pi, pj)))) {
          pi = i;
          pj = j;
        }
    if (pi < 0) break;
    if (pi == 1) swap_rows(m, u);
    if (pj == 1) swap_cols(m, v);

    if (!m(1, 0).is_zero()) {
      row_axpy(m, u, 1, 0, m(1, 0) / m(0, 0));
      if (!m(1, 0).is_zero()) continue;
    }
    if (!m(0, 1).is_zero()) {
      col_axpy(m, v, 1, 0, m(0, 1) / m(0, 0));
      if (!m(0, 1).is_zero()) continue;
    }
    if (!(m(1, 1) % m(0, 0)).is_zero()) {
      // Fold row 1 into row 0; the next column pass leaves a smaller remainder.
      row_axpy(m, u, 0, 1, Integer(-1));
      continue;
    }
    break;
  }

  for (int i = 0; i < 2; ++i)
    if (m(i, i).sign() < 0) {
      m.row(i) = -m.row(i);
      u.row(i) = -u.row(i);
    }
  return {u, m, v};
}

std::pair<Integer, Integer> invariant_factors(const IntMat2& a) {
  const Snf2 s = snf2(a);
  return {s.d(0, 0), s.d(1, 1)};
}

}  // namespace splitjac
