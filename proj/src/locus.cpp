// SPDX-License-Identifier: Apache-2.0
#include "splitjac/locus.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include "splitjac/splitting.hpp"

namespace splitjac {

LinForm LinForm::normalized() const {
  if (is_zero()) return *this;
  // Clear denominators, then divide out the content.
  const Integer da = a.denominator(), db = b.denominator();
  const Integer lcm = da / gcd(da, db) * db;
  Integer na = (a * Rational(lcm)).to_integer();
  Integer nb = (b * Rational(lcm)).to_integer();
  const Integer g = gcd(na, nb);
  na = na / g;
  nb = nb / g;
  if (nb.sign() < 0 || (nb.is_zero() && na.sign() < 0)) {
    na = -na;
    nb = -nb;
  }
  return {Rational(na), Rational(nb)};
}

std::optional<Rational> LinForm::positive_root() const {
  if (b.is_zero()) return std::nullopt;
  const Rational t = -a / b;
  if (t.sign() <= 0) return std::nullopt;
  return t;
}

std::string to_string(const LinForm& f) {
  std::string s;
  const auto term = [&](const Rational& c, const char* var) {
    if (c.is_zero()) return;
    if (!s.empty()) s += c.sign() < 0 ? " - " : " + ";
    else if (c.sign() < 0) s += "-";
    const Rational m = abs(c);
    if (m != Rational(1)) s += m.str() + "*";
    s += var;
  };
  term(f.a, "lp");
  term(f.b, "l");
  return s.empty() ? "0" : s;
}

RatMat2 SymForm::eval(const Rational& lp, const Rational& l) const {
  const RatMat2 left = a * lp;
  const RatMat2 right = b * l;
  return left + right;
}

SymForm symbolic_qpp(std::int64_t d, std::int64_t k) {
  validate(SplittingData{d, k, 1, 1});
  // Linear in (l′, l): the coefficient matrices are qpp at (1, 0) and (0, 1).
  const Rational dr(d), kr(k);
  const RatMat2 a = rmat2(dr, -kr, -kr, kr * kr / dr);
  const RatMat2 b = rmat2(0, 0, 0, Rational(1) / dr);
  return {a, b};
}

namespace {

LinForm ray_form(const std::optional<Rational>& t, bool lower) {
  if (!t) return {1, 0};               // the l-axis, l′ = 0
  if (t->is_zero() && lower) return {0, 1};  // the l′-axis, l = 0
  return LinForm{-t->numerator(), t->denominator()}.normalized();
}

RatVec2 ray_vector(const std::optional<Rational>& t) {
  RatVec2 v;
  if (!t) v << 0, 1;
  else if (t->is_zero()) v << 1, 0;
  else v << t->denominator(), t->numerator();
  return v;
}

}  // namespace

std::array<RatVec2, 2> FanCone::ray_vectors() const { return {ray_vector(t_lo), ray_vector(t_hi)}; }

RatVec2 FanCone::sample() const {
  RatVec2 v;
  v << 1, sample_t;
  return v;
}

std::vector<LinForm> FanDelta::interior_rays() const {
  std::vector<LinForm> out;
  for (std::size_t i = 0; i + 1 < cones.size(); ++i) out.push_back(cones[i].rays[1]);
  return out;
}

FanCone cone_at(std::int64_t d, std::int64_t k, const Rational& t, std::size_t cap) {
  if (t.sign() <= 0) throw Error(ErrorKind::DegenerateSample, "sample slope must be positive");
  FanCone c;
  c.sample_t = t;
  SymForm q = symbolic_qpp(d, k);
  const Rational one(1);

  for (std::size_t it = 0;; ++it) {
    const LinForm q11 = q.entry(0, 0), q12 = q.entry(0, 1), q22 = q.entry(1, 1);
    const LinForm p13 = -q11 - q12, p23 = -q22 - q12;
    Move m;
    if (p13.eval(one, t).sign() > 0) {
      c.inequalities.push_back(p13);
      m = Move::T2;
    } else if (p23.eval(one, t).sign() > 0) {
      c.inequalities.push_back(p23);
      m = Move::T1;
    } else {
      c.phi_sigma = {q11 + q12, q22 + q12, -q12};
      for (const LinForm& f : c.phi_sigma) {
        if (f.eval(one, t).sign() == 0)
          throw Error(ErrorKind::DegenerateSample, "sample slope " + t.str() + " lies on a ray");
        c.inequalities.push_back(f);
      }
      c.reduced = q;
      break;
    }
    if (it >= cap) throw Error(ErrorKind::IterationCapExceeded, "symbolic reduction exceeded the move cap");
    q = q.act(move_matrix(m));
    c.word.moves.push_back(m);
  }

  c.t_lo = 0;
  for (const LinForm& f : c.inequalities) {
    if (f.b.is_zero()) {
      if (f.a.sign() <= 0) throw Error(ErrorKind::InternalInconsistency, "infeasible constant inequality");
      continue;
    }
    const Rational root = -f.a / f.b;
    if (f.b.sign() > 0) {
      c.t_lo = std::max(c.t_lo, root);
    } else if (!c.t_hi || root < *c.t_hi) {
      c.t_hi = root;
    }
  }
  if (!(c.t_lo < t) || (c.t_hi && !(t < *c.t_hi)))
    throw Error(ErrorKind::InternalInconsistency, "sample slope outside its own cone");
  c.rays = {ray_form(c.t_lo, true), ray_form(c.t_hi, false)};
  return c;
}

FanDelta build_fan(std::int64_t d, std::int64_t k, std::optional<std::size_t> cap) {
  validate(SplittingData{d, k, 1, 1});
  const std::size_t max_cones = cap.value_or(default_cone_cap(d));
  constexpr int kMaxRefinements = 256;
  FanDelta fan{d, k, {}};

  // Seed near the l′-axis: halve the slope until the cone reaches t = 0.
  Rational t(1, 2);
  for (int j = 0;; ++j, t = t / Rational(2)) {
    if (j >= kMaxRefinements) throw Error(ErrorKind::DegenerateSample, "could not seed near the l' axis");
    try {
      FanCone c = cone_at(d, k, t);
      if (c.t_lo.is_zero()) {
        fan.cones.push_back(std::move(c));
        break;
      }
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::DegenerateSample) throw;
    }
  }

  while (fan.cones.back().t_hi) {
    if (fan.cones.size() >= max_cones)
      throw Error(ErrorKind::ConeCapExceeded, "fan has more than " + std::to_string(max_cones) + " cones");
    const Rational hi = *fan.cones.back().t_hi;
    Rational step = std::min(Rational(1), hi) / Rational(2);
    bool crossed = false;
    for (int j = 0; j < kMaxRefinements && !crossed; ++j, step = step / Rational(2)) {
      try {
        FanCone c = cone_at(d, k, hi + step);
        if (c.t_lo == hi) {
          fan.cones.push_back(std::move(c));
          crossed = true;
        }
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::DegenerateSample) throw;
      }
    }
    if (!crossed) throw Error(ErrorKind::DegenerateSample, "could not cross the ray t = " + hi.str());
  }
  return fan;
}

std::vector<BoundaryRay> boundary_rays(std::int64_t d, std::int64_t k) {
  std::vector<BoundaryRay> out;
  for (const FanCone& c : build_fan(d, k).cones)
    for (int i = 0; i < 2; ++i) {
      const LinForm& f = c.phi_sigma[i];
      if (f.a.sign() * f.b.sign() < 0) out.push_back({c.word, f.normalized()});
    }
  return out;
}

namespace {

using Point3 = std::array<Rational, 3>;

Point3 normalize_sum(const Point3& p) {
  const Rational s = p[0] + p[1] + p[2];
  if (s.sign() <= 0) throw Error(ErrorKind::InternalInconsistency, "image point outside the positive orthant");
  return {p[0] / s, p[1] / s, p[2] / s};
}

Point3 lerp(const Point3& a, const Point3& b, const Rational& s) {
  Point3 r;
  for (int i = 0; i < 3; ++i) r[i] = (Rational(1) - s) * a[i] + s * b[i];
  return r;
}

// Cut segment a→b along the walls x_i = x_j and sort each piece into the chamber.
void chamber_pieces(const Point3& a, const Point3& b, std::vector<ChamberSegment>& out) {
  std::vector<Rational> cuts{Rational(0), Rational(1)};
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) {
      const Rational da = a[i] - a[j], db = b[i] - b[j];
      if (da == db) continue;
      const Rational s = da / (da - db);
      if (s.sign() > 0 && s < Rational(1)) cuts.push_back(s);
    }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  for (std::size_t c = 0; c + 1 < cuts.size(); ++c) {
    const Point3 mid = lerp(a, b, (cuts[c] + cuts[c + 1]) / Rational(2));
    std::array<int, 3> perm{0, 1, 2};
    std::stable_sort(perm.begin(), perm.end(), [&](int x, int y) { return mid[x] < mid[y]; });
    const auto sorted = [&](const Point3& p) { return normalize_sum(Point3{p[perm[0]], p[perm[1]], p[perm[2]]}); };
    Point3 p = sorted(lerp(a, b, cuts[c]));
    Point3 q = sorted(lerp(a, b, cuts[c + 1]));
    if (q < p) std::swap(p, q);
    out.push_back({p, q});
  }
}

// Merge collinear segments that overlap or touch.
std::vector<ChamberSegment> merge_collinear(std::vector<ChamberSegment> segs) {
  using Key = std::tuple<Rational, Rational, Rational>;
  std::map<Key, std::vector<ChamberSegment>> lines;
  std::vector<Point3> points;
  for (const ChamberSegment& s : segs) {
    if (s.p == s.q) {
      points.push_back(s.p);
      continue;
    }
    // Work in the (x1, x2) chart of the plane x1 + x2 + x3 = 1.
    Rational dx = s.q[0] - s.p[0], dy = s.q[1] - s.p[1];
    const Rational lead = dx.is_zero() ? dy : dx;
    dx = dx / lead;
    dy = dy / lead;
    const Rational offset = s.p[0] * dy - s.p[1] * dx;
    lines[{dx, dy, offset}].push_back(s);
  }
  std::vector<ChamberSegment> out;
  for (auto& [key, group] : lines) {
    std::sort(group.begin(), group.end(), [](const ChamberSegment& x, const ChamberSegment& y) { return x.p < y.p; });
    ChamberSegment cur = group.front();
    for (std::size_t i = 1; i < group.size(); ++i) {
      if (!(cur.q < group[i].p)) {
        cur.q = std::max(cur.q, group[i].q);
      } else {
        out.push_back(cur);
        cur = group[i];
      }
    }
    out.push_back(cur);
  }
  // Isolated points survive only when no segment passes through them.
  for (const Point3& pt : points) {
    const bool covered = std::any_of(out.begin(), out.end(), [&](const ChamberSegment& s) {
      const Rational cross = (s.q[0] - s.p[0]) * (pt[1] - s.p[1]) - (s.q[1] - s.p[1]) * (pt[0] - s.p[0]);
      return cross.is_zero() && !(pt < s.p) && !(s.q < pt);
    });
    if (!covered) out.push_back({pt, pt});
  }
  std::sort(out.begin(), out.end(), [](const ChamberSegment& x, const ChamberSegment& y) {
    return std::tie(x.p, x.q) < std::tie(y.p, y.q);
  });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

std::vector<ChamberSegment> canonical_image(const FanDelta& fan) {
  std::vector<ChamberSegment> pieces;
  for (const FanCone& c : fan.cones) {
    const auto rv = c.ray_vectors();
    std::array<Point3, 2> img;
    for (int r = 0; r < 2; ++r)
      for (int i = 0; i < 3; ++i) img[r][i] = c.phi_sigma[i].eval(rv[r](0), rv[r](1));
    chamber_pieces(img[0], img[1], pieces);
  }
  return merge_collinear(std::move(pieces));
}

ImageComparison compare_images(const FanDelta& f1, const FanDelta& f2) {
  if (f1.d != f2.d) throw Error(ErrorKind::ValidationError, "compare_images needs fans with the same d");
  ImageComparison r;
  r.image1 = canonical_image(f1);
  r.image2 = canonical_image(f2);
  r.equal = r.image1 == r.image2;
  return r;
}

}  // namespace splitjac
