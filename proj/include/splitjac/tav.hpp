// SPDX-License-Identifier: Apache-2.0
//
// Tropical abelian varieties of rank 1 and 2 in coordinates.
//
// A torus is fixed by its pairing matrix P, where [λ, λ′] = coord(λ)ᵀ·P·coord(λ′)
// relative to chosen bases of Λ and Λ′.  A morphism f: Σ₁ → Σ₂ is the pair
//   msharp : Λ₂  → Λ₁   (f^#)
//   mflat  : Λ′₁ → Λ′₂  (f_#)
// subject to msharpᵀ·P₁ = P₂·mflat.  A polarization ζ: Λ′ → Λ is an integer
// matrix Z whose Gram matrix Zᵀ·P is symmetric positive definite.
#pragma once

#include <optional>
#include <vector>

#include "splitjac/matrix.hpp"

namespace splitjac {

class IntegralTorus {
 public:
  /// Throws UnsupportedRank or InvalidTav (degenerate pairing).
  explicit IntegralTorus(RatMat pairing);

  int rank() const noexcept { return static_cast<int>(pairing_.rows()); }
  const RatMat& pairing() const noexcept { return pairing_; }

  friend bool operator==(const IntegralTorus&, const IntegralTorus&) = default;

 private:
  RatMat pairing_;
};

class Tav {
 public:
  /// Throws InvalidTav unless Zᵀ·P is symmetric positive definite.
  Tav(IntegralTorus torus, IntMat polarization);

  int rank() const noexcept { return torus_.rank(); }
  const IntegralTorus& torus() const noexcept { return torus_; }
  const RatMat& pairing() const noexcept { return torus_.pairing(); }
  const IntMat& polarization() const noexcept { return polarization_; }
  RatMat gram() const;

 private:
  IntegralTorus torus_;
  IntMat polarization_;
};

/// Zᵀ·P.
RatMat gram(const IntMat& z, const RatMat& pairing);
bool is_polarization(const IntMat& z, const IntegralTorus& torus);

class TavMorphism {
 public:
  /// Throws IncompatibleMorphism on shape mismatch or when msharpᵀ·P₁ ≠ P₂·mflat.
  TavMorphism(IntegralTorus source, IntegralTorus target, IntMat msharp, IntMat mflat);

  const IntegralTorus& source() const noexcept { return source_; }
  const IntegralTorus& target() const noexcept { return target_; }
  const IntMat& msharp() const noexcept { return msharp_; }
  const IntMat& mflat() const noexcept { return mflat_; }

  friend bool operator==(const TavMorphism&, const TavMorphism&) = default;

 private:
  IntegralTorus source_;
  IntegralTorus target_;
  IntMat msharp_;
  IntMat mflat_;
};

struct MorphismClass {
  bool surjective = false;
  bool finite = false;
  bool injective = false;
  bool isogeny = false;

  friend bool operator==(const MorphismClass&, const MorphismClass&) = default;
};

MorphismClass classify(const TavMorphism& f);

IntegralTorus dual(const IntegralTorus& t);
/// The dual of a polarized torus forgets the polarization.
IntegralTorus dual(const Tav& t);
TavMorphism dual_morphism(const TavMorphism& f);

TavMorphism identity_morphism(const IntegralTorus& t);
/// g ∘ f.
TavMorphism compose(const TavMorphism& g, const TavMorphism& f);
/// Multiplication by n on a torus: both lattice maps are n·I.
TavMorphism multiplication_by(const IntegralTorus& t, const Integer& n);

/// Product of two rank-1 tavs with block-diagonal pairing and polarization.
Tav direct_sum(const Tav& t1, const Tav& t2);

/// msharp·z2·mflat.  Throws NotIsogeny.
IntMat pullback_polarization(const TavMorphism& f, const IntMat& z2);

/// Invariant factors (α₁ | α₂ for rank 2).  Throws SingularMatrix.
std::vector<Integer> polarization_type(const IntMat& z);
bool is_principal(const IntMat& z);

/// The matrices of Algorithm 1 for one choice of basis S′ of Λ′₂.
struct InductionSteps {
  RatMat a;  // coordinates of ζ₁ in the basis induced on im(f^#)
  RatMat b;  // inclusion im(f_#) → Λ′₂ in the basis S′
  RatMat m;  // A·B⁻¹
};

/// Runs Algorithm 1.  `s_prime` holds the chosen basis of Λ′₂ as columns
/// (standard basis when omitted).  Throws NotIsogeny, ImageConditionViolated.
InductionSteps induction_steps(const TavMorphism& f, const IntMat& z1,
                               const std::optional<IntMat>& s_prime = std::nullopt);

/// The inducing polarization ζ₂ in standard coordinates, or NotInducible when
/// Algorithm 1 produces a non-integral matrix.
IntMat induce_polarization(const TavMorphism& f, const IntMat& z1,
                           const std::optional<IntMat>& s_prime = std::nullopt);

/// f̃ with f̃^# = z2·mflat·z1⁻¹ and f̃_# = z1⁻¹·msharp·z2.
/// Throws NotPrincipal, NonIntegralAdjoint.
TavMorphism adjoint(const TavMorphism& f, const IntMat& z1, const IntMat& z2);

/// Rank of a small integer matrix.
int integer_rank(const IntMat& m);

}  // namespace splitjac
