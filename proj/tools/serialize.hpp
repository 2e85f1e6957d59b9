// SPDX-License-Identifier: Apache-2.0
//
// JSON and CSV encodings shared by the command-line tool and its tests.
// Rationals are always strings "p/q" (or "p"); matrices are row-major arrays
// of such strings.
#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "splitjac/locus.hpp"
#include "splitjac/reconstruct.hpp"

namespace splitjac::io {

using Json = nlohmann::ordered_json;

Json to_json(const Rational& r);
Json to_json(const Integer& n);
Rational rational_from_json(const Json& j);

template <typename Derived>
Json matrix_json(const Eigen::MatrixBase<Derived>& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(to_json(m(i, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

RatMat rat_matrix_from_json(const Json& j);
IntMat int_matrix_from_json(const Json& j);

Json to_json(const SellingParams& p);
Json to_json(const ReductionWord& w);
Json to_json(const TropicalCurve& c);
Json to_json(const IntegralTorus& t);
Json to_json(const Tav& t);
Json to_json(const TavMorphism& f);
Json to_json(const MorphismClass& c);
Json to_json(const SplittingData& sd);
Json to_json(const PipelineTrace& t);
Json to_json(const Cover& c);
Json to_json(const CoverPair& c);
Json to_json(const SplitDiagram& d);
Json to_json(const LinForm& f);
Json to_json(const FanCone& c);
Json to_json(const FanDelta& f);
Json to_json(const ChamberSegment& s);
Json to_json(const ImageComparison& c);

IntegralTorus torus_from_json(const Json& j);
Tav tav_from_json(const Json& j);
TavMorphism morphism_from_json(const Json& j);

/// "theta" or "dumbbell".
std::string curve_type(const TropicalCurve& c);
std::vector<Rational> curve_lengths(const TropicalCurve& c);

/// Joins the strings of `items` with `sep`.
std::string join(const std::vector<std::string>& items, const std::string& sep);

/// Ray directions and cone sample points, one row per item.
std::string fan_csv(const FanDelta& f);
/// field,value rows of a pipeline trace.
std::string trace_csv(const PipelineTrace& t);

}  // namespace splitjac::io
