// SPDX-License-Identifier: Apache-2.0
#include <map>

#include "doctest.h"
#include "support.hpp"

using namespace splitjac;
using splitjac::testing::Gen;
using splitjac::testing::kCases;

namespace {

std::map<std::string, Integer> slopes(const Cover& c) {
  std::map<std::string, Integer> m;
  for (const EdgeMap& e : c.edges) m[e.edge] = e.slope;
  return m;
}

const EdgeMap& edge(const Cover& c, const std::string& name) {
  for (const EdgeMap& e : c.edges)
    if (e.edge == name) return e;
  throw std::runtime_error("no edge " + name);
}

RatMat2 flip(const RatMat2& q) { return congruence_act(sign_flip(), q); }

bool is_dumbbell(const SplittingData& sd) { return std::holds_alternative<Dumbbell>(torelli_preimage(sd).curve); }

// Independent fiber count: solve offset + slope·x/L ≡ y (mod 1) for x
// strictly inside each edge and weight each solution by abs(slope).
Integer count_preimages(const Cover& c, const Rational& y) {
  Integer total(0);
  for (const EdgeMap& e : c.edges) {
    if (e.slope.is_zero() || !e.length) continue;
    const Rational s(e.slope);
    // x = (y − offset + n)·L / s ranges over (0, len) for n between the bounds below.
    const Rational lo = e.offset - y, hi = e.offset - y + s * *e.length / c.target_length;
    const Rational a = std::min(lo, hi), b = std::max(lo, hi);
    for (Integer n = floor_div(a.numerator(), a.denominator()) - Integer(1);
         Rational(n) <= b + Rational(1); n = n + Integer(1)) {
      const Rational x = (y - e.offset + Rational(n)) * c.target_length / s;
      if (x.sign() > 0 && x < *e.length) total += abs(e.slope);
    }
  }
  return total;
}

}  // namespace

TEST_CASE("pipeline examples") {
  const PipelineTrace t2 = torelli_preimage({2, 1, 1, 3});
  CHECK(std::get<Theta>(t2.curve).le == Rational(1));
  CHECK(std::get<Theta>(t2.curve).le1 == Rational(1));
  CHECK(std::get<Theta>(t2.curve).le2 == Rational(1));

  const PipelineTrace t18 = torelli_preimage({18, 7, 3, 1});
  CHECK(t18.qtilde == rmat2(Rational(14, 9), Rational(-1, 3), Rational(-1, 3), 2));
  const Theta th = std::get<Theta>(t18.curve);
  CHECK(th.le == Rational(11, 9));
  CHECK(th.le1 == Rational(5, 3));
  CHECK(th.le2 == Rational(1, 3));
  CHECK(congruence_act(t18.x, t18.qpp) == t18.qtilde);
  CHECK(det(t18.qtilde) == Rational(3));

  const Dumbbell d16 = std::get<Dumbbell>(torelli_preimage({16, 1, 3, 5}).curve);
  CHECK(d16.lc1 == Rational(1, 2));
  CHECK(d16.lc2 == Rational(30));
  const Dumbbell d24 = std::get<Dumbbell>(torelli_preimage({24, 1, 3, 5}).curve);
  CHECK(d24.lc1 == Rational(1, 3));
  CHECK(d24.lc2 == Rational(45));
}

TEST_CASE("period matrices") {
  CHECK(period_matrix(Theta{1, 1, 1}).q == rmat2(2, 1, 1, 2));
  const PeriodMatrix p = period_matrix(Dumbbell{Rational(1, 2), 30}, 7);
  CHECK(p.q == rmat2(Rational(1, 2), 0, 0, 30));
  CHECK(p.type == CurveType::Dumbbell);
  CHECK(period_matrix(Dumbbell{Rational(1, 2), 30}, 0).q == p.q);
  CHECK_THROWS_AS(period_matrix(Theta{1, 0, 1}), Error);
  CHECK_THROWS_AS(period_matrix(Dumbbell{1, -1}), Error);
}

TEST_CASE("boundary tests") {
  CHECK(boundary_test_k1({16, 1, 3, 5}) == 6);
  CHECK(boundary_test_k1({24, 1, 3, 5}) == 9);
  CHECK_FALSE(boundary_test_k1({2, 1, 1, 3}).has_value());
  CHECK(boundary_test_kd1({3, 2, 1, 2}) == 1);
  CHECK(is_dumbbell({3, 2, 1, 2}));
  CHECK_FALSE(boundary_test_kd1({3, 2, 1, 1}).has_value());
  CHECK_FALSE(is_dumbbell({3, 2, 1, 1}));
  const auto kind = [](const std::function<void()>& f) {
    try {
      f();
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::InternalInconsistency;
  };
  CHECK(kind([] { boundary_test_kd1({2, 1, 1, 1}); }) == ErrorKind::WrongK);
  CHECK(kind([] { boundary_test_k1({5, 2, 1, 1}); }) == ErrorKind::WrongK);
  CHECK(kind([] { boundary_test_kd1({5, 2, 1, 1}); }) == ErrorKind::WrongK);
}

TEST_CASE("covers of the d = 2 example") {
  const CoverPair c = build_covers(torelli_preimage({2, 1, 1, 3}));
  const auto sp = slopes(c.to_eprime), s = slopes(c.to_e);
  CHECK(sp.at("e") == Integer(1));
  CHECK(sp.at("e1") == Integer(0));
  CHECK(sp.at("e2") == Integer(1));
  CHECK(abs(s.at("e")) == Integer(1));
  CHECK(abs(s.at("e1")) == Integer(2));
  CHECK(abs(s.at("e2")) == Integer(1));
  CHECK(s.at("e1") == Integer(-2));
  for (const EdgeMap& e : c.to_eprime.edges) CHECK(e.offset.is_zero());
  CHECK(edge(c.to_e, "e").offset == Rational(1, 3));
  CHECK(c.to_e.target_length == Rational(3));
}

TEST_CASE("covers of the golden and dumbbell examples") {
  const CoverPair c = build_covers(torelli_preimage({18, 7, 3, 1}));
  const auto sp = slopes(c.to_eprime), s = slopes(c.to_e);
  CHECK(sp.at("e") == Integer(-3));
  CHECK(sp.at("e1") == Integer(-5));
  CHECK(sp.at("e2") == Integer(2));
  CHECK(s.at("e") == Integer(3));
  CHECK(s.at("e1") == Integer(-1));
  CHECK(s.at("e2") == Integer(4));

  const CoverPair db = build_covers(torelli_preimage({16, 1, 3, 5}));
  CHECK(edge(db.to_eprime, "e").slope.is_zero());
  CHECK(edge(db.to_e, "e").slope.is_zero());
  CHECK_FALSE(edge(db.to_e, "e").length.has_value());
  CHECK(edge(db.to_eprime, "e1").slope == Integer(-6));
  CHECK(edge(db.to_eprime, "e2").slope == Integer(1));
  CHECK(edge(db.to_e, "e1").slope == Integer(-10));
  CHECK(edge(db.to_e, "e2").slope == Integer(-1));
}

TEST_CASE("property: round trip through the period matrix") {
  Gen g(501);
  for (int i = 0; i < kCases; ++i) {
    const SplittingData sd = g.splitting(20, 10);
    const PipelineTrace t = torelli_preimage(sd);
    CHECK(congruence_act(t.x, t.qpp) == t.qtilde);
    CHECK(det(t.qtilde) == sd.lp * sd.l);
    CHECK(in_fundamental_domain(t.qtilde));
    const RatMat2 back = flip(period_matrix(t.curve, 1).q);
    const RatMat2 rep = fd_representative(reduce_to_sigma(back).reduced).qtilde;
    CHECK(rep == t.qtilde);
  }
}

TEST_CASE("property: covers have integer slopes, balance and degree d") {
  Gen g(502);
  for (int i = 0; i < kCases; ++i) {
    const SplittingData sd = g.splitting(14, 8);
    const PipelineTrace t = torelli_preimage(sd);
    const CoverPair cp = build_covers(t);
    const IntMat2 z = IntMat2(sign_flip() * t.x * sign_flip());
    const SplitDiagram dg = build_diagram(sd);
    const std::array<std::pair<const Cover*, const RatMat*>, 2> both{{{&cp.to_eprime, &dg.g1}, {&cp.to_e, &dg.g2}}};
    for (const auto& [c, gi] : both) {
      CAPTURE(c->target);
      // Harmonicity and degree.
      CHECK(local_degree(*c, 0).has_value());
      CHECK(local_degree(*c, 1).has_value());
      Rational stretched(0);
      for (const EdgeMap& e : c->edges)
        if (e.length) stretched += Rational(e.slope * e.slope) * *e.length;
      CHECK(stretched == Rational(sd.d) * c->target_length);

      const Rational y = generic_point(*c);
      CHECK(fiber_degree(*c, y) == Integer(sd.d));
      CHECK(count_preimages(*c, y) == Integer(sd.d));

      // Windings around the cycle basis equal g_i·Z.
      std::map<std::string, Rational> wind;
      for (const EdgeMap& e : c->edges)
        if (e.length) wind[e.edge] = Rational(e.slope) * *e.length / c->target_length;
      const RatMat row = *gi * to_rational(z);
      if (std::holds_alternative<Theta>(t.curve)) {
        CHECK(wind["e"] + wind["e2"] == row(0, 0));
        CHECK(wind["e2"] - wind["e1"] == row(0, 1));
      } else {
        CHECK(wind["e1"] == row(0, 0));
        CHECK(wind["e2"] == row(0, 1));
      }
    }
  }
}

TEST_CASE("property: boundary witness iff dumbbell, k = 1 and k = d - 1") {
  Gen g(503);
  int dumbbells = 0;
  for (int i = 0; i < kCases; ++i) {
    const long long d = g.integer(3, 12);
    // Bias towards boundary points: pick α and scale.
    Rational lp = g.positive(8), l = g.positive(8);
    if (i % 2 == 0) {
      const long long a = g.integer(1, d - 1);
      l = lp * Rational(d - a, a);
    }
    const SplittingData s1{d, 1, lp, l}, s2{d, d - 1, lp, l};
    const bool w1 = boundary_test_k1(s1).has_value();
    CHECK(w1 == is_dumbbell(s1));
    CHECK(boundary_test_kd1(s2).has_value() == is_dumbbell(s2));
    // Exhaustive α oracle.
    bool exhaustive = false;
    for (long long a = 1; a < d; ++a) exhaustive = exhaustive || Rational(a) * l == Rational(d - a) * lp;
    CHECK(w1 == exhaustive);
    dumbbells += w1;
  }
  CHECK(dumbbells >= kCases / 2);
}
