// SPDX-License-Identifier: Apache-2.0
//
// Selling reduction of positive definite binary forms into the cone
//   σ = cone(diag(1,0), diag(0,1), [[1,−1],[−1,1]]),
// its stabilizer, the fundamental domain F ⊂ σ and the genus-2 curve read
// off from a form in F.
#pragma once

#include <array>
#include <cstddef>
#include <variant>
#include <vector>

#include "splitjac/matrix.hpp"

namespace splitjac {

struct SellingParams {
  Rational p12;  // q₁₂
  Rational p13;  // −q₁₁ − q₁₂
  Rational p23;  // −q₂₂ − q₁₂

  friend bool operator==(const SellingParams&, const SellingParams&) = default;
};

SellingParams selling_params(const RatMat2& q);
bool in_sigma(const RatMat2& q);

enum class Move { T1, T2 };

/// T1 = [[1,0],[1,1]], T2 = [[1,1],[0,1]].
IntMat2 move_matrix(Move m);

struct ReductionWord {
  bool preflip = false;          // diag(1,−1) applied before any move
  std::vector<Move> moves;       // in order of application
  IntMat2 stab = IntMat2::Identity();  // stabilizer element applied last

  /// preflip · moves… · stab, so that Xᵀ·Q₀·X is the final form.
  IntMat2 matrix() const;
  /// Run lengths (α₁, β₁, α₂, β₂, …): α counts T1 moves, β counts T2 moves,
  /// starting with α₁ (possibly 0).  The empty word gives (0, 0).
  std::vector<std::size_t> labels() const;
  /// Run lengths listed from the last application back to the first, ending
  /// with α₁; a trailing β of zero is omitted.  T1,T1,T2 serializes as [1, 2].
  std::vector<std::size_t> counts() const;

  friend bool operator==(const ReductionWord&, const ReductionWord&) = default;
};

struct SellingResult {
  RatMat2 reduced;
  ReductionWord word;
};

inline constexpr std::size_t kDefaultIterationCap = 10000;

/// Requires q symmetric positive definite with q₁₂ ≤ 0.
/// Throws NotPositiveDefinite, PositiveQ12, IterationCapExceeded.
SellingResult selling_reduce(const RatMat2& q, std::size_t cap = kDefaultIterationCap);

/// Like selling_reduce, but first applies diag(1,−1) when q₁₂ > 0.
SellingResult reduce_to_sigma(const RatMat2& q, std::size_t cap = kDefaultIterationCap);

/// Six representatives (one per ±X pair) of the setwise stabilizer of σ,
/// identity first.
const std::vector<IntMat2>& stab_sigma();
/// All twelve matrices with entries in {−1,0,1}, |det| = 1, preserving σ.
const std::vector<IntMat2>& stab_sigma_full();

/// F ⊂ σ via the inequalities q₁₂ ≤ 0, q₁₁ + 2q₁₂ ≥ 0, q₂₂ ≥ q₁₁.
bool in_fundamental_domain(const RatMat2& q);

struct SigmaCoords {
  Rational l1;  // q₁₁ + q₁₂
  Rational l2;  // q₂₂ + q₁₂
  Rational l3;  // −q₁₂

  RatMat2 form() const;
  friend bool operator==(const SigmaCoords&, const SigmaCoords&) = default;
};

/// Throws NotInSigma.
SigmaCoords sigma_coords(const RatMat2& q);
/// F via l3 ≤ l1 ≤ l2 (requires q ∈ σ).
bool in_fundamental_domain_coords(const SigmaCoords& c);

struct FdResult {
  RatMat2 qtilde;
  IntMat2 stab;
};

/// The image of q in F under stab_sigma(), preferring the identity and then
/// the listed order when several images coincide.  Throws NotInSigma.
FdResult fd_representative(const RatMat2& q);

struct Theta {
  Rational le, le1, le2;
  friend bool operator==(const Theta&, const Theta&) = default;
};

/// Two cycles of lengths lc1 (at P₀) and lc2 (at P₁) joined by a bridge of
/// free length t ≥ 0.
struct Dumbbell {
  Rational lc1, lc2;
  friend bool operator==(const Dumbbell&, const Dumbbell&) = default;
};

using TropicalCurve = std::variant<Theta, Dumbbell>;

/// Reads edge lengths off a positive definite form in σ.
/// Throws NotInSigma, NotPositiveDefinite.
TropicalCurve classify_curve(const RatMat2& q);

}  // namespace splitjac
