// SPDX-License-Identifier: Apache-2.0
#include "splitjac/tav.hpp"

#include <utility>

namespace splitjac {

namespace {

void require_small_square(const RatMat& p) {
  if (p.rows() != p.cols() || p.rows() < 1 || p.rows() > 2)
    throw Error(ErrorKind::UnsupportedRank, "only ranks 1 and 2 are supported");
}

IntMat identity(int r) { return IntMat::Identity(r, r); }

IntMat scaled_identity(int r, const Integer& n) {
  IntMat m = IntMat::Zero(r, r);
  for (int i = 0; i < r; ++i) m(i, i) = n;
  return m;
}

Integer maximal_minor_gcd(const IntMat& m) {
  if (m.rows() == m.cols()) return abs(det(m));
  Integer g(0);
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) g = gcd(g, m(i, j));
  return g;
}

}  // namespace

IntegralTorus::IntegralTorus(RatMat pairing) : pairing_(std::move(pairing)) {
  require_small_square(pairing_);
  if (det(pairing_).is_zero())
    throw Error(ErrorKind::InvalidTav, "degenerate pairing " + to_string(pairing_));
}

RatMat gram(const IntMat& z, const RatMat& pairing) {
  const RatMat zt = to_rational(z).transpose();
  return zt * pairing;
}

bool is_polarization(const IntMat& z, const IntegralTorus& torus) {
  if (z.rows() != torus.rank() || z.cols() != torus.rank()) return false;
  return is_positive_definite(gram(z, torus.pairing()));
}

Tav::Tav(IntegralTorus torus, IntMat polarization)
    : torus_(std::move(torus)), polarization_(std::move(polarization)) {
  if (!is_polarization(polarization_, torus_))
    throw Error(ErrorKind::InvalidTav,
                "Gram matrix of " + to_string(polarization_) + " is not symmetric positive definite");
}

RatMat Tav::gram() const { return splitjac::gram(polarization_, pairing()); }

TavMorphism::TavMorphism(IntegralTorus source, IntegralTorus target, IntMat msharp, IntMat mflat)
    : source_(std::move(source)), target_(std::move(target)), msharp_(std::move(msharp)), mflat_(std::move(mflat)) {
  const int r1 = source_.rank();
  const int r2 = target_.rank();
  if (msharp_.rows() != r1 || msharp_.cols() != r2 || mflat_.rows() != r2 || mflat_.cols() != r1)
    throw Error(ErrorKind::IncompatibleMorphism, "lattice map shapes do not match the torus ranks");
  const RatMat lhs = to_rational(msharp_).transpose() * source_.pairing();
  const RatMat rhs = target_.pairing() * to_rational(mflat_);
  if (lhs != rhs)
    throw Error(ErrorKind::IncompatibleMorphism,
                "msharp^T P1 = " + to_string(lhs) + " but P2 mflat = " + to_string(rhs));
}

int integer_rank(const IntMat& m) {
  if (m.isZero()) return 0;
  if (m.rows() == 2 && m.cols() == 2) return det(m).is_zero() ? 1 : 2;
  return 1;
}

MorphismClass classify(const TavMorphism& f) {
  MorphismClass c;
  c.surjective = integer_rank(f.msharp()) == f.msharp().cols();
  c.finite = integer_rank(f.mflat()) == f.mflat().cols();
  c.injective = c.finite && maximal_minor_gcd(f.mflat()) == Integer(1);
  c.isogeny = c.surjective && c.finite;
  return c;
}

IntegralTorus dual(const IntegralTorus& t) { return IntegralTorus(t.pairing().transpose()); }

IntegralTorus dual(const Tav& t) { return dual(t.torus()); }

TavMorphism dual_morphism(const TavMorphism& f) {
  return TavMorphism(dual(f.target()), dual(f.source()), f.mflat(), f.msharp());
}

TavMorphism identity_morphism(const IntegralTorus& t) {
  return TavMorphism(t, t, identity(t.rank()), identity(t.rank()));
}

TavMorphism compose(const TavMorphism& g, const TavMorphism& f) {
  if (!(f.target() == g.source()))
    throw Error(ErrorKind::IncompatibleMorphism, "composition: target of f differs from source of g");
  IntMat sharp = f.msharp() * g.msharp();
  IntMat flat = g.mflat() * f.mflat();
  return TavMorphism(f.source(), g.target(), std::move(sharp), std::move(flat));
}

TavMorphism multiplication_by(const IntegralTorus& t, const Integer& n) {
  return TavMorphism(t, t, scaled_identity(t.rank(), n), scaled_identity(t.rank(), n));
}

Tav direct_sum(const Tav& t1, const Tav& t2) {
  if (t1.rank() != 1 || t2.rank() != 1)
    throw Error(ErrorKind::UnsupportedRank, "direct_sum supports two rank-1 tavs only");
  RatMat p = RatMat::Zero(2, 2);
  p(0, 0) = t1.pairing()(0, 0);
  p(1, 1) = t2.pairing()(0, 0);
  IntMat z = IntMat::Zero(2, 2);
  z(0, 0) = t1.polarization()(0, 0);
  z(1, 1) = t2.polarization()(0, 0);
  return Tav(IntegralTorus(std::move(p)), std::move(z));
}

IntMat pullback_polarization(const TavMorphism& f, const IntMat& z2) {
  if (!classify(f).isogeny) throw Error(ErrorKind::NotIsogeny, "pullback requires an isogeny");
  if (z2.rows() != f.target().rank() || z2.cols() != f.target().rank())
    throw Error(ErrorKind::IncompatibleMorphism, "polarization shape does not match the target");
  return f.msharp() * z2 * f.mflat();
}

std::vector<Integer> polarization_type(const IntMat& z) {
  if (z.rows() != z.cols() || z.rows() < 1 || z.rows() > 2)
    throw Error(ErrorKind::UnsupportedRank, "polarization_type needs a 1x1 or 2x2 matrix");
  if (det(z).is_zero()) throw Error(ErrorKind::SingularMatrix, "polarization " + to_string(z) + " is singular");
  if (z.rows() == 1) return {abs(z(0, 0))};
  const auto [g1, g2] = invariant_factors(IntMat2(z));
  return {g1, g2};
}

bool is_principal(const IntMat& z) {
  if (z.rows() != z.cols()) return false;
  return abs(det(z)) == Integer(1);
}

InductionSteps induction_steps(const TavMorphism& f, const IntMat& z1, const std::optional<IntMat>& s_prime) {
  if (!classify(f).isogeny) throw Error(ErrorKind::NotIsogeny, "Algorithm 1 requires an isogeny");
  const int r = f.source().rank();
  if (z1.rows() != r || z1.cols() != r)
    throw Error(ErrorKind::IncompatibleMorphism, "polarization shape does not match the source");

  // Step I: ζ₁(T′_j) expressed in the basis T″_j = f^#(S_j) of im(f^#).
  InductionSteps s;
  s.a = inverse(to_rational(f.msharp())) * to_rational(z1);
  if (!is_integral(s.a))
    throw Error(ErrorKind::ImageConditionViolated, "im(zeta1) is not contained in im(f^#)");

  // Step II: S″_j = f_#(T′_j) expressed in the basis S′ of Λ′₂.
  const IntMat u = s_prime.value_or(identity(r));
  if (u.rows() != r || u.cols() != r || !is_principal(u))
    throw Error(ErrorKind::ValidationError, "S' must be a unimodular basis matrix");
  s.b = inverse(to_rational(u)) * to_rational(f.mflat());

  // Step III.
  s.m = s.a * inverse(s.b);
  return s;
}

IntMat induce_polarization(const TavMorphism& f, const IntMat& z1, const std::optional<IntMat>& s_prime) {
  const InductionSteps s = induction_steps(f, z1, s_prime);
  if (!is_integral(s.m))
    throw Error(ErrorKind::NotInducible, "Algorithm 1 output " + to_string(s.m) + " is not integral");
  // M maps S′-coordinates to standard ones; undo the basis choice.
  const RatMat u = to_rational(s_prime.value_or(identity(f.source().rank())));
  return to_integer(RatMat(s.m * inverse(u)));
}

TavMorphism adjoint(const TavMorphism& f, const IntMat& z1, const IntMat& z2) {
  if (!is_principal(z1) || !is_principal(z2))
    throw Error(ErrorKind::NotPrincipal, "adjoint requires principal polarizations");
  if (z1.rows() != f.source().rank() || z2.rows() != f.target().rank())
    throw Error(ErrorKind::IncompatibleMorphism, "polarization shapes do not match the morphism");
  const RatMat z1inv = inverse(to_rational(z1));
  const RatMat sharp = to_rational(z2) * to_rational(f.mflat()) * z1inv;
  const RatMat flat = z1inv * to_rational(f.msharp()) * to_rational(z2);
  if (!is_integral(sharp) || !is_integral(flat))
    throw Error(ErrorKind::NonIntegralAdjoint, "adjoint lattice maps are not integral");
  return TavMorphism(f.target(), f.source(), to_integer(sharp), to_integer(flat));
}

}  // namespace splitjac
