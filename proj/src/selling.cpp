// SPDX-License-Identifier: Apache-2.0
#include "splitjac/selling.hpp"

#include <algorithm>

namespace splitjac {

SellingParams selling_params(const RatMat2& q) {
  return {q(0, 1), -q(0, 0) - q(0, 1), -q(1, 1) - q(0, 1)};
}

bool in_sigma(const RatMat2& q) {
  const SellingParams p = selling_params(q);
  return p.p12.sign() <= 0 && p.p13.sign() <= 0 && p.p23.sign() <= 0;
}

IntMat2 move_matrix(Move m) { return m == Move::T1 ? imat2(1, 0, 1, 1) : imat2(1, 1, 0, 1); }

IntMat2 ReductionWord::matrix() const {
  IntMat2 x = preflip ? imat2(1, 0, 0, -1) : IntMat2(IntMat2::Identity());
  for (Move m : moves) x = IntMat2(x * move_matrix(m));
  return IntMat2(x * stab);
}

std::vector<std::size_t> ReductionWord::labels() const {
  std::vector<std::size_t> runs{0};
  Move current = Move::T1;
  for (Move m : moves) {
    if (m != current) {
      runs.push_back(0);
      current = m;
    }
    ++runs.back();
  }
  if (runs.size() % 2 == 1) runs.push_back(0);
  return runs;
}

std::vector<std::size_t> ReductionWord::counts() const {
  if (moves.empty()) return {};
  std::vector<std::size_t> runs = labels();
  if (runs.back() == 0) runs.pop_back();
  std::reverse(runs.begin(), runs.end());
  return runs;
}

SellingResult selling_reduce(const RatMat2& q, std::size_t cap) {
  if (!is_positive_definite(q))
    throw Error(ErrorKind::NotPositiveDefinite, "form " + to_string(q) + " is not positive definite");
  if (q(0, 1).sign() > 0)
    throw Error(ErrorKind::PositiveQ12, "selling_reduce expects q12 <= 0, got " + q(0, 1).str());

  SellingResult r{q, {}};
  for (std::size_t it = 0;; ++it) {
    const SellingParams p = selling_params(r.reduced);
    Move m;
    if (p.p13.sign() > 0) {
      m = Move::T2;
    } else if (p.p23.sign() > 0) {
      m = Move::T1;
    } else {
      return r;
    }
    if (it >= cap)
      throw Error(ErrorKind::IterationCapExceeded,
                  "Selling reduction did not finish within " + std::to_string(cap) + " moves");
    r.reduced = congruence_act(move_matrix(m), r.reduced);
    r.word.moves.push_back(m);
  }
}

SellingResult reduce_to_sigma(const RatMat2& q, std::size_t cap) {
  if (!is_positive_definite(q))
    throw Error(ErrorKind::NotPositiveDefinite, "form " + to_string(q) + " is not positive definite");
  if (q(0, 1).sign() <= 0) return selling_reduce(q, cap);
  SellingResult r = selling_reduce(congruence_act(imat2(1, 0, 0, -1), q), cap);
  r.word.preflip = true;
  return r;
}

namespace {

bool preserves_sigma(const IntMat2& x) {
  static const std::array<RatMat2, 3> rays{rmat2(1, 0, 0, 0), rmat2(0, 0, 0, 1), rmat2(1, -1, -1, 1)};
  for (const RatMat2& r : rays) {
    const RatMat2 img = congruence_act(x, r);
    if (std::none_of(rays.begin(), rays.end(), [&](const RatMat2& s) { return s == img; })) return false;
  }
  return true;
}

std::vector<IntMat2> enumerate_stabilizer() {
  std::vector<IntMat2> out{IntMat2::Identity()};
  for (int a = -1; a <= 1; ++a)
    for (int b = -1; b <= 1; ++b)
      for (int c = -1; c <= 1; ++c)
        for (int d = -1; d <= 1; ++d) {
          const IntMat2 x = imat2(a, b, c, d);
          if (x == IntMat2(IntMat2::Identity())) continue;
          if (abs(det(x)) != Integer(1)) continue;
          if (preserves_sigma(x)) out.push_back(x);
        }
  return out;
}

}  // namespace

const std::vector<IntMat2>& stab_sigma_full() {
  static const std::vector<IntMat2> full = enumerate_stabilizer();
  return full;
}

const std::vector<IntMat2>& stab_sigma() {
  static const std::vector<IntMat2> effective = [] {
    std::vector<IntMat2> reps;
    for (const IntMat2& x : stab_sigma_full()) {
      const IntMat2 neg = -x;
      if (std::none_of(reps.begin(), reps.end(), [&](const IntMat2& y) { return y == neg; })) reps.push_back(x);
    }
    return reps;
  }();
  return effective;
}

bool in_fundamental_domain(const RatMat2& q) {
  return q(0, 1).sign() <= 0 && (q(0, 0) + Rational(2) * q(0, 1)).sign() >= 0 && q(1, 1) >= q(0, 0);
}

RatMat2 SigmaCoords::form() const { return rmat2(l1 + l3, -l3, -l3, l2 + l3); }

SigmaCoords sigma_coords(const RatMat2& q) {
  if (!is_symmetric(q) || !in_sigma(q)) throw Error(ErrorKind::NotInSigma, "form " + to_string(q) + " is not in sigma");
  return {q(0, 0) + q(0, 1), q(1, 1) + q(0, 1), -q(0, 1)};
}

bool in_fundamental_domain_coords(const SigmaCoords& c) { return c.l3 <= c.l1 && c.l1 <= c.l2; }

FdResult fd_representative(const RatMat2& q) {
  if (!is_symmetric(q) || !in_sigma(q)) throw Error(ErrorKind::NotInSigma, "form " + to_string(q) + " is not in sigma");
  for (const IntMat2& x : stab_sigma()) {
    RatMat2 img = congruence_act(x, q);
    if (in_fundamental_domain(img)) return {std::move(img), x};
  }
  throw Error(ErrorKind::InternalInconsistency, "no stabilizer image of " + to_string(q) + " lies in F");
}

TropicalCurve classify_curve(const RatMat2& q) {
  if (!is_positive_definite(q))
    throw Error(ErrorKind::NotPositiveDefinite, "form " + to_string(q) + " is not positive definite");
  const SigmaCoords c = sigma_coords(q);
  const int zeros = int(c.l1.is_zero()) + int(c.l2.is_zero()) + int(c.l3.is_zero());
  if (zeros == 0) return Theta{c.l1, c.l2, c.l3};
  if (zeros > 1) throw Error(ErrorKind::NotPositiveDefinite, "two vanishing sigma coordinates");
  if (c.l3.is_zero()) return Dumbbell{c.l1, c.l2};
  // Off-F boundary forms: move the vanishing coordinate into the l3 slot.
  const IntMat2 x = c.l2.is_zero() ? imat2(-1, 0, -1, 1) : imat2(1, -1, 0, -1);
  const RatMat2 diag = congruence_act(x, q);
  if (!diag(0, 1).is_zero())
    throw Error(ErrorKind::InternalInconsistency, "boundary remapping did not diagonalize " + to_string(q));
  return Dumbbell{diag(0, 0), diag(1, 1)};
}

}  // namespace splitjac
