// SPDX-License-Identifier: Apache-2.0
#include "doctest.h"
#include "support.hpp"

using namespace splitjac;
using splitjac::testing::Gen;
using splitjac::testing::kCases;

namespace {

IntMat im(const IntMat2& m) { return IntMat(m); }
RatMat diag(const Rational& a, const Rational& b) { return RatMat(rmat2(a, 0, 0, b)); }

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error thrown");
  return ErrorKind::InternalInconsistency;
}

// q from the d = 2 worked example (lengths 1 and 3).
TavMorphism example_q() { return build_jpp({2, 1, 1, 3}).q; }

}  // namespace

TEST_CASE("torus and tav invariants") {
  CHECK(kind_of([] { IntegralTorus t(diag(0, 1)); }) == ErrorKind::InvalidTav);
  const IntegralTorus t(diag(1, 3));
  CHECK(t.rank() == 2);
  CHECK_NOTHROW(Tav(t, im(IntMat2::Identity())));
  CHECK_THROWS_AS(Tav(t, im(imat2(1, 0, 0, -1))), Error);
  CHECK_THROWS_AS(Tav(t, im(imat2(0, 1, 1, 0))), Error);
}

TEST_CASE("classify examples") {
  const IntegralTorus t(diag(1, 3));
  const MorphismClass id = classify(identity_morphism(t));
  CHECK(id == MorphismClass{true, true, true, true});

  const TavMorphism q = example_q();
  CHECK(q.mflat() == im(imat2(1, -1, 0, 2)));
  const MorphismClass c = classify(q);
  CHECK(c.finite);
  CHECK(c.surjective);
  CHECK(c.isogeny);
  CHECK_FALSE(c.injective);

  // A zero lattice map is compatible only with itself on a zero msharp.
  const TavMorphism zero(t, t, im(imat2(0, 0, 0, 0)), im(imat2(0, 0, 0, 0)));
  CHECK_FALSE(classify(zero).finite);
  CHECK_FALSE(classify(zero).isogeny);
}

TEST_CASE("incompatible morphisms are rejected") {
  const IntegralTorus t(diag(1, 3));
  CHECK(kind_of([&] { TavMorphism f(t, t, im(imat2(1, 0, 0, 1)), im(imat2(2, 0, 0, 1))); }) ==
        ErrorKind::IncompatibleMorphism);
}

TEST_CASE("duality") {
  const TavMorphism q = example_q();
  const TavMorphism dq = dual_morphism(q);
  CHECK(dq.mflat() == im(imat2(1, 0, 0, 1)));
  CHECK(dq.msharp() == im(imat2(1, -1, 0, 2)));
  CHECK(dual_morphism(dq) == q);
  const IntegralTorus t(RatMat(rmat2(1, 2, 0, 3)));
  CHECK(dual(dual(t)) == t);
  const MorphismClass a = classify(q), b = classify(dq);
  CHECK(a.surjective == b.finite);
  CHECK(a.finite == b.surjective);
}

TEST_CASE("direct sum of circles") {
  const Tav e1(IntegralTorus(RatMat(RatMat::Constant(1, 1, Rational(1)))), IntMat::Identity(1, 1));
  const Tav e2(IntegralTorus(RatMat(RatMat::Constant(1, 1, Rational(3)))), IntMat::Identity(1, 1));
  const Tav s = direct_sum(e1, e2);
  CHECK(s.pairing() == diag(1, 3));
  CHECK(s.polarization() == IntMat::Identity(2, 2));
  CHECK(s.gram() == diag(1, 3));
  CHECK(kind_of([&] { direct_sum(s, e1); }) == ErrorKind::UnsupportedRank);
  CHECK_THROWS_AS(IntegralTorus(RatMat(RatMat::Constant(1, 1, Rational(0)))), Error);
}

TEST_CASE("pullback examples") {
  const TavMorphism q = example_q();
  CHECK(pullback_polarization(q, im(imat2(2, 1, 0, 1))) == im(imat2(2, 0, 0, 2)));
  const IntegralTorus t(diag(1, 3));
  const IntMat z = im(imat2(2, 1, 0, 1));
  CHECK(pullback_polarization(identity_morphism(t), z) == z);
  for (int n = 2; n <= 5; ++n)
    CHECK(pullback_polarization(multiplication_by(t, n), z) == IntMat(z * Integer(n * n)));
  const TavMorphism zero(t, t, im(imat2(0, 0, 0, 0)), im(imat2(0, 0, 0, 0)));
  CHECK(kind_of([&] { pullback_polarization(zero, z); }) == ErrorKind::NotIsogeny);
}

TEST_CASE("polarization types") {
  CHECK(polarization_type(im(IntMat2::Identity())) == std::vector<Integer>{1, 1});
  CHECK(polarization_type(im(imat2(1, -1, 0, 2))) == std::vector<Integer>{1, 2});
  CHECK(polarization_type(im(imat2(2, 1, 0, 1))) == std::vector<Integer>{1, 2});
  CHECK(is_principal(im(imat2(2, 1, 1, 1))));
  CHECK(kind_of([] { polarization_type(im(imat2(1, 2, 2, 4))); }) == ErrorKind::SingularMatrix);
}

TEST_CASE("Algorithm 1 examples") {
  const TavMorphism q = example_q();
  const InductionSteps s = induction_steps(q, im(imat2(2, 0, 0, 2)));
  CHECK(s.a == diag(2, 2));
  CHECK(s.b == RatMat(rmat2(1, -1, 0, 2)));
  CHECK(s.m == RatMat(rmat2(2, 1, 0, 1)));
  CHECK(induce_polarization(q, im(imat2(2, 0, 0, 2))) == im(imat2(2, 1, 0, 1)));

  const InductionSteps bad = induction_steps(q, im(IntMat2::Identity()));
  CHECK(bad.m == RatMat(rmat2(1, Rational(1, 2), 0, Rational(1, 2))));
  CHECK(kind_of([&] { induce_polarization(q, im(IntMat2::Identity())); }) == ErrorKind::NotInducible);

  const IntegralTorus t(diag(1, 3));
  const IntMat z = im(imat2(2, 1, 0, 1));
  CHECK(induce_polarization(identity_morphism(t), z) == z);

  // f^# = 2I cannot see ζ₁ = I.
  CHECK(kind_of([&] { induce_polarization(multiplication_by(t, 2), im(IntMat2::Identity())); }) ==
        ErrorKind::ImageConditionViolated);
}

TEST_CASE("adjoint examples") {
  const IntegralTorus t(diag(1, 3));
  const IntMat id = IntMat::Identity(2, 2);
  CHECK(adjoint(identity_morphism(t), id, id) == identity_morphism(t));
  CHECK(kind_of([&] { adjoint(identity_morphism(t), im(imat2(2, 0, 0, 1)), id); }) == ErrorKind::NotPrincipal);

  for (const SplittingData sd : {SplittingData{2, 1, 1, 3}, SplittingData{18, 7, 3, 1}, SplittingData{5, 2, 1, 1}}) {
    const JppModel m = build_jpp(sd);
    const TavMorphism ft = adjoint(m.phi, m.sum.polarization(), m.jpp.polarization());
    const TavMorphism both = compose(ft, m.phi);
    const IntMat dI = IntMat::Identity(2, 2) * Integer(sd.d);
    CHECK(both.msharp() == dI);
    CHECK(both.mflat() == dI);
  }
}

TEST_CASE("property: Algorithm 1 on random isogenies from a product of circles") {
  Gen g(201);
  int inducible = 0, refused = 0;
  for (int i = 0; i < kCases; ++i) {
    const Rational lp = g.positive(), l = g.positive();
    const IntegralTorus src(diag(lp, l));
    const long long n = g.integer(1, 6);
    // f^# = U·diag(a, b) with a and b dividing n, so im(n·I) ⊆ im(f^#).
    const auto divisor = [&] {
      long long c;
      do c = g.integer(1, n);
      while (n % c != 0);
      return c;
    };
    const long long a = divisor(), b = divisor();
    const IntMat2 msharp = IntMat2(g.unimodular(3) * imat2(a, 0, 0, b));
    IntMat2 mflat;
    do mflat = g.int_matrix(4);
    while (det(mflat).is_zero());
    const RatMat2 p2 = RatMat2(to_rational(msharp).transpose() * rmat2(lp, 0, 0, l) * inv2(to_rational(mflat)));
    const TavMorphism f(src, IntegralTorus(RatMat(p2)), IntMat(msharp), IntMat(mflat));
    const IntMat z1 = IntMat::Identity(2, 2) * Integer(n);

    const IntMat sp = IntMat(g.unimodular());
    bool ok = true;
    IntMat z2;
    try {
      z2 = induce_polarization(f, z1);
    } catch (const Error& e) {
      REQUIRE(e.kind() == ErrorKind::NotInducible);
      ok = false;
    }
    // The verdict does not depend on the basis S′.
    bool ok_other = true;
    IntMat z2_other;
    try {
      z2_other = induce_polarization(f, z1, sp);
    } catch (const Error& e) {
      REQUIRE(e.kind() == ErrorKind::NotInducible);
      ok_other = false;
    }
    CHECK(ok == ok_other);
    if (!ok) {
      ++refused;
      continue;
    }
    ++inducible;
    CHECK(z2_other == z2);
    CHECK(pullback_polarization(f, z2) == z1);
    const RatMat gr = gram(z2, RatMat(p2));
    CHECK(is_symmetric(gr));
    CHECK(is_positive_definite(gr));
  }
  CHECK(inducible > 20);
  CHECK(refused > 20);
}

TEST_CASE("property: induced splitting polarization and basis independence") {
  Gen g(202);
  for (int i = 0; i < kCases; ++i) {
    const SplittingData sd = g.splitting();
    const JppModel m = build_jpp(sd);
    CHECK(m.zeta == imat2(sd.d, sd.k, 0, 1));
    const IntMat dd = IntMat::Identity(2, 2) * Integer(sd.d);
    CHECK(pullback_polarization(m.q, IntMat(m.zeta)) == dd);
    CHECK(is_positive_definite(gram(IntMat(m.zeta), m.quotient.pairing())));
    CHECK(induce_polarization(m.q, dd, IntMat(g.unimodular())) == IntMat(m.zeta));
  }
}

TEST_CASE("property: duality swaps flags and is an involution") {
  Gen g(203);
  for (int i = 0; i < kCases; ++i) {
    const SplittingData sd = g.splitting();
    const JppModel m = build_jpp(sd);
    for (const TavMorphism* f : {&m.q, &m.phibar, &m.phi}) {
      const TavMorphism df = dual_morphism(*f);
      CHECK(dual_morphism(df) == *f);
      const MorphismClass a = classify(*f), b = classify(df);
      CHECK(a.surjective == b.finite);
      CHECK(a.finite == b.surjective);
      CHECK(a.isogeny == (a.surjective && a.finite));
      if (a.injective) CHECK(a.finite);
    }
  }
}

TEST_CASE("property: adjoint composition with identity polarization on the source") {
  Gen g(204);
  for (int i = 0; i < kCases; ++i) {
    const SplittingData sd = g.splitting();
    const JppModel m = build_jpp(sd);
    const TavMorphism ft = adjoint(m.phi, m.sum.polarization(), m.jpp.polarization());
    const TavMorphism both = compose(ft, m.phi);
    CHECK(both.msharp() == both.mflat());
    CHECK(both.msharp() == pullback_polarization(m.phi, m.jpp.polarization()));
  }
}
