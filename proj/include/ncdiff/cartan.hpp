#pragma once

#include <cstdint>
#include <vector>

#include "ncdiff/calculus.hpp"
#include "ncdiff/duality.hpp"

namespace ncd {

/// Knobs shared by the randomized checks. Trial t draws from seed + t.
struct TrialOptions {
  int trials = 500;
  int degree = 3;
  std::uint64_t seed = 0;
};

/// Right Cartan pair (R, ρ). R is the right dual of `presentation`: left-free
/// on E_i = e^i, with right multiplication E_i.f = Σ_k Φ_ik(f).E_k. The pair
/// is fixed by the finite matrix action(i, j) = E_i^ρ(g_j).
class RightCartanPair {
public:
  RightCartanPair(BimodulePresentation presentation, std::vector<std::vector<AlgElement>> action);

  const BimodulePresentation& presentation() const { return presentation_; }
  const AlgebraPresentation& algebra() const { return presentation_.algebra(); }
  std::size_t rank() const { return presentation_.rank(); }
  const AlgElement& action(BasisId i, GenId j) const { return action_.at(i).at(j); }
  const std::vector<std::vector<AlgElement>>& action() const { return action_; }

  friend bool operator==(const RightCartanPair&, const RightCartanPair&) = default;

private:
  BimodulePresentation presentation_;
  std::vector<std::vector<AlgElement>> action_;
};

/// X^ρ(f), extended from the action matrix by
///   (h.X)^ρ(g) = h X^ρ(g)  and  X^ρ(g w) = X^ρ(g) w + (X.g)^ρ(w).
AlgElement action_apply(const RightCartanPair& pair, const DualElement& X, const AlgElement& f);

/// (E_i.a)^ρ(g) through E_i^ρ(a g) - E_i^ρ(a) g, without using the right
/// multiplication of R.
AlgElement action_on_right_multiple(const RightCartanPair& pair, BasisId i, const AlgElement& a,
                                    const AlgElement& g);

/// Rule compatibility for every basis element, the structure of R, and
/// randomized instances of both axioms, bracketing independence, the derived
/// rule and X^ρ(1) = 0.
ValidationReport check_right_axioms(const RightCartanPair& pair, const TrialOptions& opts = {});

/// Right partial derivatives of a calculus: ρ_i(g_j) = i-th component of d(g_j).
/// Throws ModelError when the calculus is invalid.
RightCartanPair pair_from_calculus(const CalculusModel& c);

/// d_ρ f with components E_i^ρ(f), evaluated through the action.
BimElement d_rho(const RightCartanPair& pair, const AlgElement& f);

/// Calculus on the left dual of R, identified with the presentation's M.
/// Throws ModelError when the pair fails its rule checks.
CalculusModel calculus_from_pair(const RightCartanPair& pair);

ValidationReport roundtrip_calculus(const CalculusModel& c, const TrialOptions& opts = {});
ValidationReport roundtrip_pair(const RightCartanPair& pair, const TrialOptions& opts = {});

struct KernelReport {
  int degree = 0;
  /// Basis of { X = Σ f_i.E_i : deg f_i <= degree, X^ρ(w) = 0 for deg w <= degree + 1 }.
  std::vector<DualElement> kernel;
  /// Dimension of the searched space.
  std::size_t unknowns = 0;

  bool faithful() const { return kernel.empty(); }
};

KernelReport faithful_bounded(const RightCartanPair& pair, int degree);

/// Left Cartan pair over mirror(right().algebra()): the mirror image of a right
/// pair over the opposite algebra. Its bimodule is right-free on the basis of
/// mirror(right().presentation()).
class LeftCartanPair {
public:
  explicit LeftCartanPair(RightCartanPair right);

  const RightCartanPair& right() const { return right_; }
  const BimodulePresentation& presentation() const { return presentation_; }
  const AlgebraPresentation& algebra() const { return presentation_.algebra(); }

  friend bool operator==(const LeftCartanPair& a, const LeftCartanPair& b) { return a.right_ == b.right_; }

private:
  RightCartanPair right_;
  BimodulePresentation presentation_;
};

LeftCartanPair mirror(const RightCartanPair& pair);
RightCartanPair mirror(const LeftCartanPair& pair);

/// X^λ(f) for X in the left pair's bimodule and f in its algebra.
AlgElement left_action_apply(const LeftCartanPair& pair, const BimElement& X, const AlgElement& f);

/// (X.g)^λ(f) = X^λ(f) g and X^λ(f g) = f X^λ(g) + (g.X)^λ(f) on random inputs,
/// plus rule compatibility.
ValidationReport check_left_axioms(const LeftCartanPair& pair, const TrialOptions& opts = {});

/// Left partial derivatives f ↦ ⟨df, X⟩. Needs the mirrored calculus to
/// validate, which holds when M is free on both sides with matching structure.
LeftCartanPair left_pair_from_calculus(const CalculusModel& c);

} // namespace ncd
