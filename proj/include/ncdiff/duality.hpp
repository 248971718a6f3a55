#pragma once

#include <string>

#include "ncdiff/bimodule.hpp"

namespace ncd {

/// Σ f_i.e^i in the right dual M*, left-free on the dual basis with
/// ⟨e^i, e_j⟩ = δ_ij.
using DualElement = Components<LeftCoefficients>;

/// Element of the left dual of M*, right-free on a basis identified with
/// the basis of M by name.
using DualDualElement = Components<DualDualCoefficients>;

/// ⟨Σ f_i.e^i, Σ e_j.a_j⟩ = Σ_i f_i a_i.
AlgElement pair(const DualElement& X, const BimElement& x, const BimodulePresentation& m);

/// Transpose of left multiplication: e^i.f = Σ_k Φ_ik(f).e^k.
DualElement dual_right_mul(const DualElement& X, const AlgElement& f, const BimodulePresentation& m);

DualElement dual_left_mul(const AlgElement& f, const DualElement& X, const BimodulePresentation& m);

/// x ↦ x̃ with components ⟨e^i, x⟩.
DualDualElement canonical_embed(const BimElement& x, const BimodulePresentation& m);

/// Inverse of the reflexivity identification (components carried over by name).
BimElement identify(const DualDualElement& x);

/// ⟨X, x̃⟩ evaluated in the left dual of M*. M* is presented right-free over
/// the opposite algebra by mirror(m), so this runs the right-dual pairing there
/// and maps the result back.
AlgElement pair_dual_dual(const DualElement& X, const DualDualElement& x, const BimodulePresentation& m);

/// Elements of M* become module elements of mirror(m); elements of M become
/// dual elements of mirror(m). Pairing commutes with both.
BimElement mirror(const DualElement& X, const BimodulePresentation& m);
DualElement mirror(const BimElement& x, const BimodulePresentation& m);

inline DualElement random_dual_element(const BimodulePresentation& m, int degree, Rng& rng) {
  return random_components<LeftCoefficients>(m, degree, rng);
}

/// `( 4 x ).dx + ( 3 y ).dy`; zero prints as `0`.
std::string format(const DualElement& X, const BimodulePresentation& m);

/// Left dual of a left-free bimodule N over A, with N given by a right-free
/// presentation `op` of N over the opposite algebra. Every argument and
/// result is expressed over A = mirror(op.algebra()).
namespace left_dual {

/// Elements of N are BimElements of `op`, read with left coefficients in A;
/// elements of the left dual are DualElements of `op`, read with right
/// coefficients in A. Coefficients are stored mirrored.
AlgElement pair(const BimElement& x, const DualElement& X, const BimodulePresentation& op);
BimElement module_left_mul(const AlgElement& f, const BimElement& x, const BimodulePresentation& op);
BimElement module_right_mul(const BimElement& x, const AlgElement& f, const BimodulePresentation& op);
DualElement dual_left_mul(const AlgElement& f, const DualElement& X, const BimodulePresentation& op);
DualElement dual_right_mul(const DualElement& X, const AlgElement& f, const BimodulePresentation& op);

} // namespace left_dual

} // namespace ncd
