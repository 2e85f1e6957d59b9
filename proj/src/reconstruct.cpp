// SPDX-License-Identifier: Apache-2.0
#include "splitjac/reconstruct.hpp"

#include <algorithm>

namespace splitjac {

namespace {

Integer floor_rat(const Rational& x) { return floor_div(x.numerator(), x.denominator()); }

Rational frac(const Rational& x) { return x - Rational(floor_rat(x)); }

Integer ceil_rat(const Rational& x) { return -floor_rat(-x); }

struct EdgeSpec {
  const char* name;
  int from, to;
  std::optional<Rational> length;
  RatVec2 derivative;  // coefficients of (ω₁, ω₂) along the edge
};

RatVec2 vec(long long a, long long b) {
  RatVec2 v;
  v << a, b;
  return v;
}

std::vector<EdgeSpec> edge_specs(const TropicalCurve& curve) {
  if (const auto* th = std::get_if<Theta>(&curve))
    return {{"e", 1, 0, th->le, vec(1, 0)}, {"e1", 0, 1, th->le1, vec(0, -1)}, {"e2", 0, 1, th->le2, vec(1, 1)}};
  const auto& db = std::get<Dumbbell>(curve);
  return {{"e1", 0, 0, db.lc1, vec(1, 0)}, {"e2", 1, 1, db.lc2, vec(0, 1)}, {"e", 0, 1, std::nullopt, vec(0, 0)}};
}

Rational row_dot(const RatMat& row, const RatVec2& v) { return row(0, 0) * v(0) + row(0, 1) * v(1); }

// Image of the far end of an edge, normalized.
Rational end_image(const Cover& c, const EdgeMap& e) {
  return e.offset + Rational(e.slope) * e.length.value_or(Rational(0)) / c.target_length;
}

}  // namespace

PipelineTrace torelli_preimage(const SplittingData& sd, std::size_t cap) {
  validate(sd);
  const RatMat2 q = qpp(sd);
  SellingResult sel = selling_reduce(q, cap);
  FdResult fd = fd_representative(sel.reduced);
  ReductionWord word = sel.word;
  word.stab = fd.stab;
  const IntMat2 x = word.matrix();
  if (!(congruence_act(x, q) == fd.qtilde))
    throw Error(ErrorKind::InternalInconsistency, "accumulated word does not map qpp to its F-representative");
  TropicalCurve curve = classify_curve(fd.qtilde);
  return PipelineTrace{sd, q, std::move(sel), fd.qtilde, std::move(word), x, std::move(curve)};
}

PeriodMatrix period_matrix(const TropicalCurve& curve, const Rational& t) {
  if (const auto* th = std::get_if<Theta>(&curve)) {
    if (th->le.sign() <= 0 || th->le1.sign() <= 0 || th->le2.sign() <= 0)
      throw Error(ErrorKind::NonPositiveLength, "theta edge lengths must be positive");
    return {rmat2(th->le + th->le2, th->le2, th->le2, th->le1 + th->le2), CurveType::Theta};
  }
  const auto& db = std::get<Dumbbell>(curve);
  if (db.lc1.sign() <= 0 || db.lc2.sign() <= 0)
    throw Error(ErrorKind::NonPositiveLength, "dumbbell cycle lengths must be positive");
  if (t.sign() < 0) throw Error(ErrorKind::NonPositiveLength, "bridge length must be nonnegative");
  return {rmat2(db.lc1, 0, 0, db.lc2), CurveType::Dumbbell};
}

namespace {

std::optional<std::int64_t> boundary_witness(const SplittingData& sd) {
  // α·l = (d − α)·l′  ⟺  α = d·l′ / (l′ + l)
  const Rational alpha = Rational(sd.d) * sd.lp / (sd.lp + sd.l);
  if (!alpha.is_integer()) return std::nullopt;
  const std::int64_t a = alpha.to_integer().to_ll();
  if (a < 1 || a > sd.d - 1) return std::nullopt;
  return a;
}

}  // namespace

std::optional<std::int64_t> boundary_test_k1(const SplittingData& sd) {
  validate(sd);
  if (sd.k != 1) throw Error(ErrorKind::WrongK, "boundary_test_k1 needs k = 1, got " + std::to_string(sd.k));
  return boundary_witness(sd);
}

std::optional<std::int64_t> boundary_test_kd1(const SplittingData& sd) {
  if (sd.d < 3) throw Error(ErrorKind::WrongK, "boundary_test_kd1 needs d >= 3");
  validate(sd);
  if (sd.k != sd.d - 1) throw Error(ErrorKind::WrongK, "boundary_test_kd1 needs k = d - 1");
  return boundary_witness(sd);
}

CoverPair build_covers(const PipelineTrace& trace) {
  const SplittingData& sd = trace.sd;
  const SplitDiagram diagram = build_diagram(sd);
  const IntMat2 s = sign_flip();
  // Γ-cycle coordinates → B-coordinates of J^pp.
  const RatMat2 z = to_rational(IntMat2(s * trace.x * s));
  const RatMat2 period_inv = inv2(period_matrix(trace.curve).q);

  CoverPair out{{"E'", sd.lp, {}}, {"E", sd.l, {}}};
  const std::vector<EdgeSpec> specs = edge_specs(trace.curve);

  // Position of P₁ in B-coordinates, reached from P₀ = 0 along e₁ (theta) or
  // across the contracted bridge (dumbbell).
  RatVec2 p1 = RatVec2::Zero();
  std::vector<RatVec2> velocity;
  for (const EdgeSpec& e : specs) {
    velocity.push_back(z * period_inv * e.derivative);
    if (std::holds_alternative<Theta>(trace.curve) && std::string(e.name) == "e1") p1 = velocity.back() * *e.length;
  }

  const auto fill = [&](Cover& cover, const RatMat& g, const Rational& length) {
    for (std::size_t i = 0; i < specs.size(); ++i) {
      const EdgeSpec& e = specs[i];
      const Rational slope = length * row_dot(g, velocity[i]);
      if (!slope.is_integer())
        throw Error(ErrorKind::NonIntegralSlope,
                    "edge " + std::string(e.name) + " of the cover to " + cover.target + " has slope " + slope.str());
      const RatVec2 start = e.from == 0 ? RatVec2(RatVec2::Zero()) : p1;
      cover.edges.push_back({e.name, e.from, e.to, e.length, slope.to_integer(), frac(row_dot(g, start))});
    }
  };
  fill(out.to_eprime, diagram.g1, sd.lp);
  fill(out.to_e, diagram.g2, sd.l);

  for (const Cover* c : {&out.to_eprime, &out.to_e}) {
    for (int v = 0; v < 2; ++v)
      if (!local_degree(*c, v))
        throw Error(ErrorKind::InternalInconsistency, "cover to " + c->target + " is not harmonic at P" + std::to_string(v));
    if (fiber_degree(*c, generic_point(*c)) != Integer(sd.d))
      throw Error(ErrorKind::InternalInconsistency, "cover to " + c->target + " does not have degree d");
  }
  return out;
}

std::optional<Integer> local_degree(const Cover& c, int vertex) {
  Integer up(0), down(0);
  const auto add = [&](const Integer& s) {
    if (s.sign() > 0) up += s;
    if (s.sign() < 0) down -= s;
  };
  for (const EdgeMap& e : c.edges) {
    if (e.from == vertex) add(e.slope);
    if (e.to == vertex) add(-e.slope);
  }
  if (up != down) return std::nullopt;
  return up;
}

Integer fiber_degree(const Cover& c, const Rational& y) {
  Integer total(0);
  for (const EdgeMap& e : c.edges) {
    if (e.slope.is_zero() || !e.length) continue;
    Rational lo = e.offset, hi = end_image(c, e);
    if (hi < lo) std::swap(lo, hi);
    // integers n with lo < y + n < hi
    const Integer count = ceil_rat(hi - y) - floor_rat(lo - y) - Integer(1);
    if (count.sign() > 0) total += count * abs(e.slope);
  }
  return total;
}

Rational generic_point(const Cover& c) {
  std::vector<Rational> marks;
  for (const EdgeMap& e : c.edges) {
    marks.push_back(frac(e.offset));
    marks.push_back(frac(end_image(c, e)));
  }
  std::sort(marks.begin(), marks.end());
  marks.erase(std::unique(marks.begin(), marks.end()), marks.end());
  if (marks.size() == 1) return frac(marks[0] + Rational(1, 2));
  return (marks[0] + marks[1]) / Rational(2);
}

}  // namespace splitjac
