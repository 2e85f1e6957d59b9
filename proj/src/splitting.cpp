// SPDX-License-Identifier: Apache-2.0
#include "splitjac/splitting.hpp"

#include <algorithm>
#include <numeric>

namespace splitjac {

namespace {

RatMat scalar_mat(const Rational& x) {
  RatMat m(1, 1);
  m(0, 0) = x;
  return m;
}

IntMat int_mat(std::initializer_list<std::initializer_list<long long>> rows) {
  IntMat m(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(rows.begin()->size()));
  Eigen::Index i = 0;
  for (const auto& row : rows) {
    Eigen::Index j = 0;
    for (long long v : row) m(i, j++) = v;
    ++i;
  }
  return m;
}

Tav circle(const Rational& length) { return Tav(IntegralTorus(scalar_mat(length)), int_mat({{1}})); }

RatMat2 quotient_pairing(const SplittingData& sd) {
  return rmat2(sd.lp, Rational(sd.k) * sd.lp / Rational(sd.d), 0, sd.l / Rational(sd.d));
}

}  // namespace

std::optional<std::string> splitting_violation(const SplittingData& sd) {
  if (sd.d < 2) return "d must be at least 2 (got " + std::to_string(sd.d) + ")";
  if (sd.k < 1 || sd.k > sd.d - 1)
    return "k must lie in 1..d-1 (got k=" + std::to_string(sd.k) + ", d=" + std::to_string(sd.d) + ")";
  if (std::gcd(sd.k, sd.d) != 1)
    return "gcd(k, d) must be 1 (gcd(" + std::to_string(sd.k) + ", " + std::to_string(sd.d) +
           ") = " + std::to_string(std::gcd(sd.k, sd.d)) + ")";
  if (sd.lp.sign() <= 0) return "lp must be positive (got " + sd.lp.str() + ")";
  if (sd.l.sign() <= 0) return "l must be positive (got " + sd.l.str() + ")";
  return std::nullopt;
}

void validate(const SplittingData& sd) {
  if (auto why = splitting_violation(sd)) throw Error(ErrorKind::ValidationError, *why);
}

IntMat2 sign_flip() { return imat2(1, 0, 0, -1); }

RatMat2 gram_pp(const SplittingData& sd) {
  validate(sd);
  const Rational d(sd.d), k(sd.k);
  return rmat2(d * sd.lp, k * sd.lp, k * sd.lp, (k * k * sd.lp + sd.l) / d);
}

RatMat2 qpp(const SplittingData& sd) { return congruence_act(sign_flip(), gram_pp(sd)); }

JppModel build_jpp(const SplittingData& sd) {
  validate(sd);
  const Integer d(sd.d), k(sd.k);

  const Tav sum = direct_sum(circle(sd.lp), circle(sd.l));
  const IntegralTorus quotient{RatMat(quotient_pairing(sd))};
  const IntMat2 qflat = imat2(1, -sd.k, 0, sd.d);
  const TavMorphism q(sum.torus(), quotient, IntMat::Identity(2, 2), qflat);

  const IntMat2 dd = imat2(sd.d, 0, 0, sd.d);
  const IntMat2 zeta = induce_polarization(q, dd);
  const RatMat2 closed = to_rational(dd) * inv2(to_rational(qflat));
  if (!(to_rational(zeta) == closed))
    throw Error(ErrorKind::InternalInconsistency,
                "Algorithm 1 gave " + to_string(zeta) + " but the closed form is " + to_string(closed));

  const RatMat2 g = gram(zeta, quotient.pairing());
  const Tav jpp(IntegralTorus(g), IntMat::Identity(2, 2));
  const TavMorphism phibar(quotient, jpp.torus(), zeta, IntMat::Identity(2, 2));
  TavMorphism phi = compose(phibar, q);

  RatVec2 b1, b2;
  b1 << sd.lp, 0;
  b2 << Rational(k) * sd.lp / Rational(d), sd.l / Rational(d);
  return JppModel{qflat, zeta, IntMat2::Identity(), g, b1, b2, sum, quotient, jpp, q, phibar, std::move(phi)};
}

SplitDiagram build_diagram(const SplittingData& sd) {
  const JppModel m = build_jpp(sd);
  const IntegralTorus& st = m.sum.torus();
  const IntegralTorus ep{RatMat(scalar_mat(sd.lp))};
  const IntegralTorus e{RatMat(scalar_mat(sd.l))};

  const TavMorphism phitilde = adjoint(m.phi, m.sum.polarization(), m.jpp.polarization());

  const TavMorphism iota1(ep, st, int_mat({{1, 0}}), int_mat({{1}, {0}}));
  const TavMorphism iota2(e, st, int_mat({{0, 1}}), int_mat({{0}, {1}}));
  const TavMorphism p1(st, ep, int_mat({{1}, {0}}), int_mat({{1, 0}}));
  const TavMorphism p2(st, e, int_mat({{0}, {1}}), int_mat({{0, 1}}));

  SplitDiagram sdg{sd.d,
                   to_rational(m.phi.mflat()),
                   to_rational(phitilde.mflat()),
                   {},
                   {},
                   {},
                   {},
                   compose(m.phi, iota1),
                   compose(m.phi, iota2),
                   compose(p1, phitilde),
                   compose(p2, phitilde),
                   m.phi,
                   phitilde};
  sdg.f1 = to_rational(sdg.f1_map.mflat());
  sdg.f2 = to_rational(sdg.f2_map.mflat());
  sdg.g1 = to_rational(sdg.g1_map.mflat());
  sdg.g2 = to_rational(sdg.g2_map.mflat());

  const RatMat2 expected = Rational(sd.d) * inv2(sdg.phi);
  if (!(sdg.phitilde == expected))
    throw Error(ErrorKind::InternalInconsistency, "adjoint of phi differs from d*phi^-1");
  return sdg;
}

std::vector<RatVec2> torus_kernel(const IntMat2& m) {
  const Integer dt = abs(det(m));
  if (dt.is_zero()) throw Error(ErrorKind::SingularMatrix, "kernel of a singular map is not finite");
  const long long n = dt.to_ll();
  const RatMat2 mr = to_rational(m);
  std::vector<RatVec2> out;
  for (long long a = 0; a < n; ++a)
    for (long long b = 0; b < n; ++b) {
      RatVec2 v;
      v << Rational(Integer(a), Integer(n)), Rational(Integer(b), Integer(n));
      const RatVec2 image = mr * v;
      if (image(0).is_integer() && image(1).is_integer()) out.push_back(v);
    }
  std::sort(out.begin(), out.end(), [](const RatVec2& x, const RatVec2& y) {
    return x(0) != y(0) ? x(0) < y(0) : x(1) < y(1);
  });
  return out;
}

std::vector<RatVec2> raw_kernel(const SplittingData& sd) {
  validate(sd);
  std::vector<RatVec2> pts = torus_kernel(imat2(1, -sd.k, 0, sd.d));
  for (auto& p : pts) {
    p(0) *= sd.lp;
    p(1) *= sd.l;
  }
  return pts;
}

RatMat2 raw_phi(const SplittingData& sd) {
  const RatMat2 phi = to_rational(imat2(1, -sd.k, 0, sd.d));
  const RatMat2 scale_inv = rmat2(Rational(1) / sd.lp, 0, 0, Rational(1) / sd.l);
  return gram_pp(sd) * phi * scale_inv;
}

RatMat2 raw_phitilde(const SplittingData& sd) {
  const RatMat2 phitilde = to_rational(imat2(sd.d, sd.k, 0, 1));
  const RatMat2 scale = rmat2(sd.lp, 0, 0, sd.l);
  return scale * phitilde * inv2(gram_pp(sd));
}

}  // namespace splitjac
