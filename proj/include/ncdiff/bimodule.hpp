#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ncdiff/algebra.hpp"
#include "ncdiff/presentation.hpp"
#include "ncdiff/report.hpp"

namespace ncd {

using BasisId = std::size_t;

/// Dense row-major matrix with algebra entries. Products keep entry order
/// (entries do not commute).
class AlgMatrix {
public:
  AlgMatrix() = default;
  AlgMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static AlgMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  AlgElement& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const AlgElement& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  AlgMatrix& operator+=(const AlgMatrix& other);
  AlgMatrix& operator*=(const Scalar& c);

  friend bool operator==(const AlgMatrix&, const AlgMatrix&) = default;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<AlgElement> data_;
};

AlgMatrix multiply(const AlgMatrix& a, const AlgMatrix& b, const AlgebraPresentation& p);

/// Fixed-rank vector of algebra coefficients over a basis. The tag fixes which
/// side the coefficients sit on, so module elements and dual elements cannot
/// be mixed up.
template <class Tag>
class Components {
public:
  Components() = default;
  explicit Components(std::size_t rank) : c_(rank) {}
  explicit Components(std::vector<AlgElement> c) : c_(std::move(c)) {}

  static Components basis(std::size_t rank, BasisId i) {
    Components x(rank);
    x.c_.at(i) = AlgElement::one();
    return x;
  }

  std::size_t rank() const { return c_.size(); }
  const AlgElement& operator[](BasisId i) const { return c_[i]; }
  AlgElement& operator[](BasisId i) { return c_[i]; }
  const std::vector<AlgElement>& components() const { return c_; }

  bool is_zero() const {
    for (const auto& e : c_)
      if (!e.is_zero())
        return false;
    return true;
  }

  Components& operator+=(const Components& o) {
    for (std::size_t i = 0; i < c_.size(); ++i)
      c_[i] += o.c_.at(i);
    return *this;
  }
  Components& operator-=(const Components& o) {
    for (std::size_t i = 0; i < c_.size(); ++i)
      c_[i] -= o.c_.at(i);
    return *this;
  }
  Components& operator*=(const Scalar& s) {
    for (auto& e : c_)
      e *= s;
    return *this;
  }

  friend Components operator+(Components a, const Components& b) { return a += b; }
  friend Components operator-(Components a, const Components& b) { return a -= b; }
  friend Components operator*(const Scalar& s, Components a) { return a *= s; }
  friend bool operator==(const Components&, const Components&) = default;

private:
  std::vector<AlgElement> c_;
};

struct RightCoefficients {};
struct LeftCoefficients {};
struct DualDualCoefficients {};

/// Σ e_i.a_i in a right-free bimodule.
using BimElement = Components<RightCoefficients>;

enum class Side { Right, Mirror };

/// Right-free bimodule on a finite basis. Left multiplication by a generator
/// is the matrix structure(g): g.e_i = Σ_j e_j.structure(g)(j, i).
/// Side::Mirror marks a presentation obtained by mirror() of a right one.
class BimodulePresentation {
public:
  /// Throws PresentationError for rank mismatches or a non-confluent algebra.
  BimodulePresentation(AlgebraPresentation algebra, std::vector<std::string> basis_names,
                       std::vector<AlgMatrix> structure, Side side = Side::Right);

  const AlgebraPresentation& algebra() const { return algebra_; }
  const std::vector<std::string>& basis_names() const { return basis_; }
  const std::string& basis_name(BasisId i) const { return basis_.at(i); }
  std::optional<BasisId> find_basis(std::string_view name) const;
  std::size_t rank() const { return basis_.size(); }
  const AlgMatrix& structure(GenId g) const { return structure_.at(g); }
  const std::vector<AlgMatrix>& structure() const { return structure_; }
  Side side() const { return side_; }

  friend bool operator==(const BimodulePresentation&, const BimodulePresentation&) = default;

private:
  AlgebraPresentation algebra_;
  std::vector<std::string> basis_;
  std::vector<AlgMatrix> structure_;
  Side side_;
};

BimElement right_mul(const BimElement& x, const AlgElement& f, const BimodulePresentation& m);
BimElement left_mul(const AlgElement& f, const BimElement& x, const BimodulePresentation& m);

/// Multiplicative extension of the structure matrices; linear in f.
AlgMatrix phi_matrix(const AlgElement& f, const BimodulePresentation& m);

/// Per rule g_j g_i -> rhs: Φ(g_j)Φ(g_i) = Φ(rhs).
ValidationReport check_bimodule(const BimodulePresentation& m);

/// Opposite presentation over mirror(algebra): structure matrices transposed
/// with mirrored entries, side flipped. An involution.
BimodulePresentation mirror(const BimodulePresentation& m);

/// Components mirrored entry-wise; the tag is preserved.
template <class Tag>
Components<Tag> mirror_components(const Components<Tag>& x, const AlgebraPresentation& p) {
  Components<Tag> out(x.rank());
  for (std::size_t i = 0; i < x.rank(); ++i)
    out[i] = mirror(x[i], p);
  return out;
}

template <class Tag>
Components<Tag> random_components(const BimodulePresentation& m, int degree, Rng& rng) {
  Components<Tag> x(m.rank());
  for (std::size_t i = 0; i < m.rank(); ++i)
    if (rng() % 4 != 0)
      x[i] = random_element(m.algebra(), degree, rng);
  return x;
}

inline BimElement random_bim_element(const BimodulePresentation& m, int degree, Rng& rng) {
  return random_components<RightCoefficients>(m, degree, rng);
}

/// `dx.( 5 x ) + dy.( 1 )`; zero prints as `0`.
std::string format(const BimElement& x, const BimodulePresentation& m);
std::string format(const AlgMatrix& a, const AlgebraPresentation& p);

} // namespace ncd
