#include "ncdiff/duality.hpp"

namespace ncd {

AlgElement pair(const DualElement& X, const BimElement& x, const BimodulePresentation& m) {
  AlgElement acc;
  for (std::size_t i = 0; i < m.rank(); ++i)
    acc += free_product(X[i], x[i]);
  return nf(acc, m.algebra());
}

DualElement dual_right_mul(const DualElement& X, const AlgElement& f, const BimodulePresentation& m) {
  const auto phi = phi_matrix(f, m);
  DualElement out(m.rank());
  for (std::size_t k = 0; k < m.rank(); ++k) {
    AlgElement acc;
    for (std::size_t i = 0; i < m.rank(); ++i)
      acc += free_product(X[i], phi(i, k));
    out[k] = nf(acc, m.algebra());
  }
  return out;
}

DualElement dual_left_mul(const AlgElement& f, const DualElement& X, const BimodulePresentation& m) {
  DualElement out(m.rank());
  for (std::size_t i = 0; i < m.rank(); ++i)
    out[i] = mul(f, X[i], m.algebra());
  return out;
}

DualDualElement canonical_embed(const BimElement& x, const BimodulePresentation& m) {
  DualDualElement out(m.rank());
  for (std::size_t i = 0; i < m.rank(); ++i)
    out[i] = pair(DualElement::basis(m.rank(), i), x, m);
  return out;
}

BimElement identify(const DualDualElement& x) { return BimElement(x.components()); }

BimElement mirror(const DualElement& X, const BimodulePresentation& m) {
  return BimElement(mirror_components(X, m.algebra()).components());
}

DualElement mirror(const BimElement& x, const BimodulePresentation& m) {
  return DualElement(mirror_components(x, m.algebra()).components());
}

AlgElement pair_dual_dual(const DualElement& X, const DualDualElement& x, const BimodulePresentation& m) {
  const auto op = mirror(m);
  const DualElement x_op(mirror_components(x, m.algebra()).components());
  return left_dual::pair(mirror(X, m), x_op, op);
}

std::string format(const DualElement& X, const BimodulePresentation& m) {
  std::string out;
  for (std::size_t i = 0; i < X.rank(); ++i) {
    if (X[i].is_zero())
      continue;
    if (!out.empty())
      out += " + ";
    out += "( " + format(X[i], m.algebra()) + " )." + m.basis_name(i);
  }
  return out.empty() ? "0" : out;
}

namespace left_dual {

namespace {

AlgElement to_op(const AlgElement& f, const BimodulePresentation& op) {
  return mirror(f, mirror(op.algebra()));
}

AlgElement from_op(const AlgElement& f, const BimodulePresentation& op) { return mirror(f, op.algebra()); }

} // namespace

AlgElement pair(const BimElement& x, const DualElement& X, const BimodulePresentation& op) {
  return from_op(ncd::pair(X, x, op), op);
}

BimElement module_left_mul(const AlgElement& f, const BimElement& x, const BimodulePresentation& op) {
  return right_mul(x, to_op(f, op), op);
}

BimElement module_right_mul(const BimElement& x, const AlgElement& f, const BimodulePresentation& op) {
  return left_mul(to_op(f, op), x, op);
}

DualElement dual_left_mul(const AlgElement& f, const DualElement& X, const BimodulePresentation& op) {
  return ncd::dual_right_mul(X, to_op(f, op), op);
}

DualElement dual_right_mul(const DualElement& X, const AlgElement& f, const BimodulePresentation& op) {
  return ncd::dual_left_mul(to_op(f, op), X, op);
}

} // namespace left_dual

} // namespace ncd
