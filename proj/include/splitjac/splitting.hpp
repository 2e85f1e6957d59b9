// SPDX-License-Identifier: Apache-2.0
//
// Splitting data (d, k, l′, l) and the principally polarized quotient J^pp of
// 𝕋E′ ⊕ 𝕋E by the graph subgroup G = ⟨(k·l′/d, l/d)⟩.
//
// Normalized coordinates: each elliptic curve is ℝ/ℤ (coordinate divided by
// its length) and J^pp is written in the basis B₁ = (l′, 0), B₂ = (k·l′/d, l/d)
// of π⁻¹(G), so every lattice involved is ℤ or ℤ².
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "splitjac/tav.hpp"

namespace splitjac {

struct SplittingData {
  std::int64_t d = 2;
  std::int64_t k = 1;
  Rational lp = 1;  // length of 𝕋E′
  Rational l = 1;   // length of 𝕋E
};

/// Description of the first violated condition, if any.
std::optional<std::string> splitting_violation(const SplittingData& sd);
/// Throws ValidationError naming the violated condition.
void validate(const SplittingData& sd);

/// Diagonal sign flip diag(1, −1).
IntMat2 sign_flip();

/// Gram matrix of ζ^pp in the B-basis, before the sign flip:
/// [[d·l′, k·l′], [k·l′, (k²·l′ + l)/d]].
RatMat2 gram_pp(const SplittingData& sd);

/// The sign-flipped form diag(1,−1)ᵀ·gram_pp·diag(1,−1); q₁₂ < 0.
RatMat2 qpp(const SplittingData& sd);

struct JppModel {
  IntMat2 qflat;    // q_#  = [[1, −k], [0, d]]
  IntMat2 zeta;     // inducing polarization [[d, k], [0, 1]]
  IntMat2 zetapp;   // I
  RatMat2 gram;     // gram_pp
  RatVec2 b1;       // (l′, 0)
  RatVec2 b2;       // (k·l′/d, l/d)

  Tav sum;               // 𝕋E′ ⊕ 𝕋E with the product principal polarization
  IntegralTorus quotient;  // (𝕋E′ ⊕ 𝕋E)/G in the bases (ω₁, ω₂), (B₁, B₂)
  Tav jpp;               // the quotient with pairing [φ̄^#(·), ·] and ζ^pp = I
  TavMorphism q;         // 𝕋E′ ⊕ 𝕋E → quotient
  TavMorphism phibar;    // quotient → J^pp
  TavMorphism phi;       // phibar ∘ q
};

/// Computes ζ both in closed form and by Algorithm 1; throws
/// InternalInconsistency if the two disagree.
JppModel build_jpp(const SplittingData& sd);

struct SplitDiagram {
  std::int64_t d = 0;
  RatMat2 phi;       // [[1, −k], [0, d]]
  RatMat2 phitilde;  // [[d, k], [0, 1]] = d·phi⁻¹
  RatMat f1, f2;     // 2x1: columns of phi
  RatMat g1, g2;     // 1x2: rows of phitilde

  /// Tav-level arrows: f_i = φ∘ι_i and g_i = p_i∘φ̃.
  TavMorphism f1_map, f2_map, g1_map, g2_map;
  TavMorphism phi_map, phitilde_map;
};

SplitDiagram build_diagram(const SplittingData& sd);

/// Points of ker(m) on ℝ²/ℤ², each coordinate in [0, 1), sorted
/// lexicographically.  Enumerates the (1/|det m|)-grid.
std::vector<RatVec2> torus_kernel(const IntMat2& m);

/// The normalized kernel of phi rescaled to raw lengths (x·l′, y·l).
std::vector<RatVec2> raw_kernel(const SplittingData& sd);

/// φ and φ̃ in raw coordinates: 𝕋E′ ⊕ 𝕋E as ℝ/l′ℤ ⊕ ℝ/lℤ and J^pp as
/// ℝ²/gram·ℤ² (the Hom(Ω, ℝ) picture).
RatMat2 raw_phi(const SplittingData& sd);
RatMat2 raw_phitilde(const SplittingData& sd);

}  // namespace splitjac
