// SPDX-License-Identifier: Apache-2.0
#include "serialize.hpp"

#include <sstream>

namespace splitjac::io {

Json to_json(const Rational& r) { return r.str(); }
Json to_json(const Integer& n) { return n.str(); }

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long long>());
  throw Error(ErrorKind::ParseError, "expected a rational string, got " + j.dump());
}

RatMat rat_matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty() || j.size() > 2)
    throw Error(ErrorKind::ParseError, "expected a 1x1 or 2x2 matrix, got " + j.dump());
  const auto n = static_cast<Eigen::Index>(j.size());
  RatMat m(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const Json& row = j[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != n)
      throw Error(ErrorKind::ParseError, "matrix rows must have length " + std::to_string(n));
    for (Eigen::Index c = 0; c < n; ++c) m(i, c) = rational_from_json(row[static_cast<std::size_t>(c)]);
  }
  return m;
}

IntMat int_matrix_from_json(const Json& j) { return to_integer(rat_matrix_from_json(j)); }

Json to_json(const SellingParams& p) {
  return Json{{"p12", to_json(p.p12)}, {"p13", to_json(p.p13)}, {"p23", to_json(p.p23)}};
}

Json to_json(const ReductionWord& w) {
  Json moves = Json::array();
  for (Move m : w.moves) moves.push_back(m == Move::T1 ? "T1" : "T2");
  return Json{{"preflip", w.preflip},
              {"moves", moves},
              {"labels", w.labels()},
              {"counts", w.counts()},
              {"stab", matrix_json(w.stab)}};
}

std::string curve_type(const TropicalCurve& c) { return std::holds_alternative<Theta>(c) ? "theta" : "dumbbell"; }

std::vector<Rational> curve_lengths(const TropicalCurve& c) {
  if (const auto* th = std::get_if<Theta>(&c)) return {th->le, th->le1, th->le2};
  const auto& db = std::get<Dumbbell>(c);
  return {db.lc1, db.lc2};
}

Json to_json(const TropicalCurve& c) {
  Json lengths = Json::array();
  for (const Rational& r : curve_lengths(c)) lengths.push_back(to_json(r));
  Json j{{"type", curve_type(c)}, {"lengths", lengths}};
  if (const auto* th = std::get_if<Theta>(&c)) {
    j["le"] = to_json(th->le);
    j["le1"] = to_json(th->le1);
    j["le2"] = to_json(th->le2);
  } else {
    const auto& db = std::get<Dumbbell>(c);
    j["lc1"] = to_json(db.lc1);
    j["lc2"] = to_json(db.lc2);
    j["bridge"] = "free";
  }
  return j;
}

Json to_json(const IntegralTorus& t) { return Json{{"pairing", matrix_json(t.pairing())}}; }

Json to_json(const Tav& t) {
  return Json{{"pairing", matrix_json(t.pairing())}, {"polarization", matrix_json(t.polarization())}};
}

Json to_json(const TavMorphism& f) {
  return Json{{"source", to_json(f.source())},
              {"target", to_json(f.target())},
              {"msharp", matrix_json(f.msharp())},
              {"mflat", matrix_json(f.mflat())}};
}

Json to_json(const MorphismClass& c) {
  return Json{{"surjective", c.surjective}, {"finite", c.finite}, {"injective", c.injective}, {"isogeny", c.isogeny}};
}

IntegralTorus torus_from_json(const Json& j) { return IntegralTorus(rat_matrix_from_json(j.at("pairing"))); }

Tav tav_from_json(const Json& j) {
  return Tav(IntegralTorus(rat_matrix_from_json(j.at("pairing"))), int_matrix_from_json(j.at("polarization")));
}

namespace {

// Morphism maps may be rectangular (1x2 or 2x1).
IntMat map_from_json(const Json& j) {
  if (!j.is_array() || j.empty() || j.size() > 2 || !j[0].is_array() || j[0].empty() || j[0].size() > 2)
    throw Error(ErrorKind::ParseError, "expected a matrix with at most two rows and columns, got " + j.dump());
  IntMat m(static_cast<Eigen::Index>(j.size()), static_cast<Eigen::Index>(j[0].size()));
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    const Json& row = j[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != m.cols())
      throw Error(ErrorKind::ParseError, "ragged matrix " + j.dump());
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      const Rational r = rational_from_json(row[static_cast<std::size_t>(c)]);
      m(i, c) = r.to_integer();
    }
  }
  return m;
}

}  // namespace

TavMorphism morphism_from_json(const Json& j) {
  return TavMorphism(torus_from_json(j.at("source")), torus_from_json(j.at("target")), map_from_json(j.at("msharp")),
                     map_from_json(j.at("mflat")));
}

Json to_json(const SplittingData& sd) {
  return Json{{"d", sd.d}, {"k", sd.k}, {"lp", to_json(sd.lp)}, {"l", to_json(sd.l)}};
}

Json to_json(const PipelineTrace& t) {
  return Json{{"input", to_json(t.sd)},
              {"qpp", matrix_json(t.qpp)},
              {"det_qpp", to_json(det(t.qpp))},
              {"selling_params", to_json(selling_params(t.qpp))},
              {"qn", matrix_json(t.selling.reduced)},
              {"qtilde", matrix_json(t.qtilde)},
              {"det_qtilde", to_json(det(t.qtilde))},
              {"word", to_json(t.word)},
              {"x", matrix_json(t.x)},
              {"curve", to_json(t.curve)}};
}

Json to_json(const Cover& c) {
  Json edges = Json::array();
  for (const EdgeMap& e : c.edges) {
    edges.push_back(Json{{"edge", e.edge},
                         {"from", "P" + std::to_string(e.from)},
                         {"to", "P" + std::to_string(e.to)},
                         {"length", e.length ? to_json(*e.length) : Json(nullptr)},
                         {"slope", to_json(e.slope)},
                         {"offset", to_json(e.offset)}});
  }
  return Json{{"target", c.target}, {"target_length", to_json(c.target_length)}, {"edges", edges}};
}

Json to_json(const CoverPair& c) { return Json{{"to_eprime", to_json(c.to_eprime)}, {"to_e", to_json(c.to_e)}}; }

Json to_json(const SplitDiagram& d) {
  return Json{{"d", d.d},
              {"phi", matrix_json(d.phi)},
              {"phitilde", matrix_json(d.phitilde)},
              {"f1", matrix_json(d.f1)},
              {"f2", matrix_json(d.f2)},
              {"g1", matrix_json(d.g1)},
              {"g2", matrix_json(d.g2)},
              {"phitilde_phi", matrix_json(RatMat2(d.phitilde * d.phi))}};
}

Json to_json(const LinForm& f) { return Json{{"a", to_json(f.a)}, {"b", to_json(f.b)}, {"text", to_string(f)}}; }

Json to_json(const FanCone& c) {
  Json ineq = Json::array();
  for (const LinForm& f : c.inequalities) ineq.push_back(to_json(f));
  Json rays = Json::array(), vectors = Json::array(), phi = Json::array();
  for (const LinForm& f : c.rays) rays.push_back(to_json(f));
  for (const RatVec2& v : c.ray_vectors()) vectors.push_back(Json::array({to_json(v(0)), to_json(v(1))}));
  for (const LinForm& f : c.phi_sigma) phi.push_back(to_json(f));
  const RatVec2 s = c.sample();
  return Json{{"word", to_json(c.word)},
              {"inequalities", ineq},
              {"rays", rays},
              {"ray_vectors", vectors},
              {"phi_sigma", phi},
              {"t_lo", to_json(c.t_lo)},
              {"t_hi", c.t_hi ? to_json(*c.t_hi) : Json(nullptr)},
              {"sample", Json::array({to_json(s(0)), to_json(s(1))})}};
}

Json to_json(const FanDelta& f) {
  Json cones = Json::array(), rays = Json::array();
  for (const FanCone& c : f.cones) cones.push_back(to_json(c));
  for (const LinForm& r : f.interior_rays()) rays.push_back(to_json(r));
  return Json{{"d", f.d}, {"k", f.k}, {"cone_count", f.cones.size()}, {"interior_rays", rays}, {"cones", cones}};
}

Json to_json(const ChamberSegment& s) {
  Json p = Json::array(), q = Json::array();
  for (const Rational& r : s.p) p.push_back(to_json(r));
  for (const Rational& r : s.q) q.push_back(to_json(r));
  return Json{{"from", p}, {"to", q}};
}

Json to_json(const ImageComparison& c) {
  Json a = Json::array(), b = Json::array();
  for (const ChamberSegment& s : c.image1) a.push_back(to_json(s));
  for (const ChamberSegment& s : c.image2) b.push_back(to_json(s));
  return Json{{"equal", c.equal}, {"image1", a}, {"image2", b}};
}

std::string join(const std::vector<std::string>& items, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) out += (i ? sep : "") + items[i];
  return out;
}

std::string fan_csv(const FanDelta& f) {
  std::ostringstream os;
  os << "kind,cone,lp,l\n";
  for (std::size_t i = 0; i < f.cones.size(); ++i) {
    const FanCone& c = f.cones[i];
    const auto rv = c.ray_vectors();
    if (i == 0) os << "ray," << i << "," << rv[0](0).str() << "," << rv[0](1).str() << "\n";
    os << "ray," << i << "," << rv[1](0).str() << "," << rv[1](1).str() << "\n";
    const RatVec2 s = c.sample();
    os << "sample," << i << "," << s(0).str() << "," << s(1).str() << "\n";
  }
  return os.str();
}

std::string trace_csv(const PipelineTrace& t) {
  const auto mat = [](const RatMat2& m) {
    return m(0, 0).str() + " " + m(0, 1).str() + " " + m(1, 0).str() + " " + m(1, 1).str();
  };
  std::vector<std::string> lengths, counts;
  for (const Rational& r : curve_lengths(t.curve)) lengths.push_back(r.str());
  for (std::size_t c : t.word.counts()) counts.push_back(std::to_string(c));
  std::ostringstream os;
  os << "field,value\n"
     << "d," << t.sd.d << "\n"
     << "k," << t.sd.k << "\n"
     << "lp," << t.sd.lp.str() << "\n"
     << "l," << t.sd.l.str() << "\n"
     << "qpp," << mat(t.qpp) << "\n"
     << "qn," << mat(t.selling.reduced) << "\n"
     << "qtilde," << mat(t.qtilde) << "\n"
     << "counts," << join(counts, " ") << "\n"
     << "type," << curve_type(t.curve) << "\n"
     << "lengths," << join(lengths, " ") << "\n";
  return os.str();
}

}  // namespace splitjac::io
