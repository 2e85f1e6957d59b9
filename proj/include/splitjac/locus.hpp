// SPDX-License-Identifier: Apache-2.0
//
// The fan Δ_k on the open quadrant of lengths (l′, l) for fixed (d, k): two
// length pairs lie in the same open cone iff Selling reduction of their
// sign-flipped Q^pp takes the same word.  Each cone carries the linear map
// φ_σ = (l1, l2, l3) into the theta cell of the moduli of genus-2 curves.
//
// Points of the quadrant are handled through the slope t = l / l′ ∈ (0, ∞);
// every ray of the fan is one value of t.
#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "splitjac/selling.hpp"

namespace splitjac {

/// a·l′ + b·l.
struct LinForm {
  Rational a;
  Rational b;

  Rational eval(const Rational& lp, const Rational& l) const { return a * lp + b * l; }
  LinForm operator+(const LinForm& o) const { return {a + o.a, b + o.b}; }
  LinForm operator-(const LinForm& o) const { return {a - o.a, b - o.b}; }
  LinForm operator-() const { return {-a, -b}; }
  bool is_zero() const { return a.is_zero() && b.is_zero(); }
  /// Positive multiple with coprime integer coefficients and b > 0 (or, when
  /// b = 0, a > 0).  The zero form is returned unchanged.
  LinForm normalized() const;
  /// Root t = l/l′ of the form, when it is a single positive slope.
  std::optional<Rational> positive_root() const;

  friend bool operator==(const LinForm&, const LinForm&) = default;
};

std::string to_string(const LinForm& f);

/// Q(l′, l) = l′·A + l·B with A, B fixed rational matrices.
struct SymForm {
  RatMat2 a;
  RatMat2 b;

  LinForm entry(int i, int j) const { return {a(i, j), b(i, j)}; }
  RatMat2 eval(const Rational& lp, const Rational& l) const;
  SymForm act(const IntMat2& x) const { return {congruence_act(x, a), congruence_act(x, b)}; }

  friend bool operator==(const SymForm&, const SymForm&) = default;
};

/// The sign-flipped Q^pp as a function of (l′, l).
SymForm symbolic_qpp(std::int64_t d, std::int64_t k);

struct FanCone {
  ReductionWord word;
  std::vector<LinForm> inequalities;  // each > 0 on the open cone
  std::array<LinForm, 2> rays;        // lower and upper boundary (vanishing forms)
  std::array<LinForm, 3> phi_sigma;   // (q₁₁+q₁₂, q₂₂+q₁₂, −q₁₂) of the reduced form
  SymForm reduced;
  Rational t_lo;                      // 0 on the l′-axis side
  std::optional<Rational> t_hi;       // empty on the l-axis side
  Rational sample_t;                  // interior slope used to build the cone

  /// Direction vectors (l′, l) of the two boundary rays.
  std::array<RatVec2, 2> ray_vectors() const;
  /// A point (l′, l) = (1, sample_t) inside the cone.
  RatVec2 sample() const;
};

struct FanDelta {
  std::int64_t d = 0;
  std::int64_t k = 0;
  std::vector<FanCone> cones;  // ordered from the l′-axis to the l-axis

  /// The shared rays between consecutive cones, normalized.
  std::vector<LinForm> interior_rays() const;
};

inline std::size_t default_cone_cap(std::int64_t d) { return static_cast<std::size_t>(64 * d); }

/// Throws ValidationError, ConeCapExceeded, DegenerateSample.
FanDelta build_fan(std::int64_t d, std::int64_t k, std::optional<std::size_t> cap = std::nullopt);

/// The cone of the fan containing the slope t in its interior, computed
/// symbolically.  Throws DegenerateSample if t lies on a ray.
FanCone cone_at(std::int64_t d, std::int64_t k, const Rational& t, std::size_t cap = kDefaultIterationCap);

inline const std::array<LinForm, 3>& phi_sigma(const FanCone& c) { return c.phi_sigma; }

struct BoundaryRay {
  ReductionWord word;
  LinForm form;  // normalized terminal form with coefficients of opposite sign
};

std::vector<BoundaryRay> boundary_rays(std::int64_t d, std::int64_t k);

/// A segment in the sorted theta chamber {x1 ≤ x2 ≤ x3}, both endpoints
/// normalized to coordinate sum 1.
struct ChamberSegment {
  std::array<Rational, 3> p;
  std::array<Rational, 3> q;
  friend bool operator==(const ChamberSegment&, const ChamberSegment&) = default;
};

struct ImageComparison {
  bool equal = false;
  std::vector<ChamberSegment> image1;
  std::vector<ChamberSegment> image2;
};

/// Canonical image of a fan in the theta cell: each cone's image (spanned by
/// the φ_σ-images of its rays) is cut along the walls x_i = x_j, each piece
/// is sorted into the chamber x1 ≤ x2 ≤ x3, and collinear overlapping pieces
/// are merged.
std::vector<ChamberSegment> canonical_image(const FanDelta& fan);

ImageComparison compare_images(const FanDelta& f1, const FanDelta& f2);

}  // namespace splitjac
