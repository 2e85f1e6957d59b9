// SPDX-License-Identifier: Apache-2.0
//
// From splitting data to the genus-2 curve Γ with Jac(Γ) ≅ J^pp and the two
// degree-d covers φ′: Γ → 𝕋E′, φ: Γ → 𝕋E.
//
// Graph conventions.  Theta: vertices P₀, P₁; edge e runs P₁ → P₀, edges e₁
// and e₂ run P₀ → P₁; cycle basis (e + e₂, e₂ − e₁).  Dumbbell: loop e₁ at
// P₀, loop e₂ at P₁, bridge e from P₀ to P₁; cycle basis (e₁, e₂).
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "splitjac/selling.hpp"
#include "splitjac/splitting.hpp"

namespace splitjac {

struct PipelineTrace {
  SplittingData sd;
  RatMat2 qpp;
  SellingResult selling;  // Qn and the move word (stab still identity)
  RatMat2 qtilde;
  ReductionWord word;     // full word including the stabilizer element
  IntMat2 x;              // word.matrix(): xᵀ·qpp·x = qtilde
  TropicalCurve curve;
};

PipelineTrace torelli_preimage(const SplittingData& sd, std::size_t cap = kDefaultIterationCap);

enum class CurveType { Theta, Dumbbell };

struct PeriodMatrix {
  RatMat2 q;
  CurveType type;
};

/// Period matrix in the Convention's cycle basis.  The bridge length t of a
/// dumbbell does not enter.  Throws NonPositiveLength.
PeriodMatrix period_matrix(const TropicalCurve& curve, const Rational& t = Rational(0));

/// For k = 1: the α ∈ {1, …, d−1} with α·l = (d−α)·l′, if any.  Throws WrongK.
std::optional<std::int64_t> boundary_test_k1(const SplittingData& sd);
/// For k = d−1, d ≥ 3: the β with β·l = (d−β)·l′, if any.  Throws WrongK.
std::optional<std::int64_t> boundary_test_kd1(const SplittingData& sd);

struct EdgeMap {
  std::string edge;
  int from = 0;  // vertex index (0 = P₀, 1 = P₁)
  int to = 0;
  std::optional<Rational> length;  // empty for the dumbbell bridge (free t)
  Integer slope;                   // expansion factor along the orientation
  Rational offset;                 // image of `from` in ℝ/ℤ, in [0, 1)
};

struct Cover {
  std::string target;     // "E'" or "E"
  Rational target_length;
  std::vector<EdgeMap> edges;
};

struct CoverPair {
  Cover to_eprime;  // φ′ = g₁ ∘ Φ_{P₀}
  Cover to_e;       // φ  = g₂ ∘ Φ_{P₀}
};

/// Throws NonIntegralSlope, or InternalInconsistency if harmonicity or the
/// degree count fails.
CoverPair build_covers(const PipelineTrace& trace);

/// Balanced slope sums at `vertex`: the local degree, or nullopt if unbalanced.
std::optional<Integer> local_degree(const Cover& c, int vertex);
/// Number of preimages of y ∈ ℝ/ℤ (normalized), counted with |slope|.
/// Requires y not to be the image of a vertex.
Integer fiber_degree(const Cover& c, const Rational& y);
/// A point of ℝ/ℤ that is not the image of any vertex.
Rational generic_point(const Cover& c);

}  // namespace splitjac
