#include "ncdiff/bimodule.hpp"

#include <set>

#include "ncdiff/errors.hpp"

namespace ncd {

namespace {

// g.y for a single generator: (g.y)_j = Σ_i Φ_ji(g) y_i.
BimElement apply_generator(GenId g, const BimElement& y, const BimodulePresentation& m) {
  const auto& phi = m.structure(g);
  const auto& p = m.algebra();
  BimElement z(m.rank());
  for (std::size_t j = 0; j < m.rank(); ++j)
    for (std::size_t i = 0; i < m.rank(); ++i)
      if (!phi(j, i).is_zero() && !y[i].is_zero())
        z[j] += mul(phi(j, i), y[i], p);
  return z;
}

} // namespace

AlgMatrix AlgMatrix::identity(std::size_t n) {
  AlgMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    a(i, i) = AlgElement::one();
  return a;
}

AlgMatrix& AlgMatrix::operator+=(const AlgMatrix& other) {
  for (std::size_t k = 0; k < data_.size(); ++k)
    data_[k] += other.data_.at(k);
  return *this;
}

AlgMatrix& AlgMatrix::operator*=(const Scalar& c) {
  for (auto& e : data_)
    e *= c;
  return *this;
}

AlgMatrix multiply(const AlgMatrix& a, const AlgMatrix& b, const AlgebraPresentation& p) {
  AlgMatrix out(a.rows(), b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < b.cols(); ++c) {
      AlgElement acc;
      for (std::size_t k = 0; k < a.cols(); ++k)
        acc += free_product(a(r, k), b(k, c));
      out(r, c) = nf(acc, p);
    }
  return out;
}

BimodulePresentation::BimodulePresentation(AlgebraPresentation algebra, std::vector<std::string> basis_names,
                                           std::vector<AlgMatrix> structure, Side side)
    : algebra_(std::move(algebra)), basis_(std::move(basis_names)), structure_(std::move(structure)),
      side_(side) {
  require_confluent(algebra_);
  if (basis_.empty())
    throw PresentationError("bimodule basis must be non-empty");
  std::set<std::string> seen;
  for (const auto& b : basis_) {
    if (b.empty() || !seen.insert(b).second)
      throw PresentationError("duplicate or empty basis name '" + b + "'");
    if (algebra_.find_generator(b))
      throw PresentationError("basis name '" + b + "' clashes with a generator");
  }
  if (structure_.size() != algebra_.generator_count())
    throw PresentationError("expected one structure matrix per generator");
  for (auto& phi : structure_) {
    if (phi.rows() != basis_.size() || phi.cols() != basis_.size())
      throw PresentationError("structure matrix rank does not match basis");
    for (std::size_t r = 0; r < phi.rows(); ++r)
      for (std::size_t c = 0; c < phi.cols(); ++c)
        phi(r, c) = nf(phi(r, c), algebra_);
  }
}

std::optional<BasisId> BimodulePresentation::find_basis(std::string_view name) const {
  for (std::size_t i = 0; i < basis_.size(); ++i)
    if (basis_[i] == name)
      return i;
  return std::nullopt;
}

BimElement right_mul(const BimElement& x, const AlgElement& f, const BimodulePresentation& m) {
  BimElement z(m.rank());
  for (std::size_t i = 0; i < m.rank(); ++i)
    z[i] = mul(x[i], f, m.algebra());
  return z;
}

BimElement left_mul(const AlgElement& f, const BimElement& x, const BimodulePresentation& m) {
  BimElement out(m.rank());
  for (const auto& [w, c] : f.terms()) {
    BimElement y = x;
    for (auto it = w.rbegin(); it != w.rend(); ++it)
      y = apply_generator(*it, y, m);
    out += c * y;
  }
  return out;
}

AlgMatrix phi_matrix(const AlgElement& f, const BimodulePresentation& m) {
  AlgMatrix out(m.rank(), m.rank());
  for (const auto& [w, c] : f.terms()) {
    AlgMatrix prod = AlgMatrix::identity(m.rank());
    for (GenId g : w)
      prod = multiply(prod, m.structure(g), m.algebra());
    prod *= c;
    out += prod;
  }
  return out;
}

ValidationReport check_bimodule(const BimodulePresentation& m) {
  const auto& p = m.algebra();
  ValidationReport details;
  std::size_t failures = 0;
  for (const auto& r : p.rules()) {
    const auto lhs = multiply(m.structure(r.high), m.structure(r.low), p);
    auto diff = phi_matrix(r.rhs, m);
    diff *= Scalar(-1);
    diff += lhs;
    bool zero = true;
    for (std::size_t i = 0; i < m.rank() && zero; ++i)
      for (std::size_t j = 0; j < m.rank(); ++j)
        if (!diff(i, j).is_zero()) {
          zero = false;
          break;
        }
    const std::string key = "bimodule:" + format_word(Word{r.high, r.low}, p);
    if (zero) {
      details.add(key, Status::Pass);
    } else {
      ++failures;
      details.add(key, Status::Fail, "Φ(lhs) - Φ(rhs) = " + format(diff, p));
    }
  }
  ValidationReport report;
  report.add("bimodule", failures == 0 ? Status::Pass : Status::Fail,
             std::to_string(p.rules().size()) + " rules, " + std::to_string(failures) + " failing");
  report.append(details);
  return report;
}

BimodulePresentation mirror(const BimodulePresentation& m) {
  const auto& p = m.algebra();
  auto mp = mirror(p);
  const auto n = p.generator_count();
  std::vector<AlgMatrix> structure(n);
  for (std::size_t g = 0; g < n; ++g) {
    const auto& phi = m.structure(static_cast<GenId>(g));
    AlgMatrix t(m.rank(), m.rank());
    for (std::size_t r = 0; r < m.rank(); ++r)
      for (std::size_t c = 0; c < m.rank(); ++c)
        t(c, r) = mirror(phi(r, c), p);
    structure[n - 1 - g] = std::move(t);
  }
  return BimodulePresentation(std::move(mp), m.basis_names(), std::move(structure),
                              m.side() == Side::Right ? Side::Mirror : Side::Right);
}

std::string format(const BimElement& x, const BimodulePresentation& m) {
  std::string out;
  for (std::size_t i = 0; i < x.rank(); ++i) {
    if (x[i].is_zero())
      continue;
    if (!out.empty())
      out += " + ";
    out += m.basis_name(i) + ".( " + format(x[i], m.algebra()) + " )";
  }
  return out.empty() ? "0" : out;
}

std::string format(const AlgMatrix& a, const AlgebraPresentation& p) {
  std::string out = "[";
  for (std::size_t r = 0; r < a.rows(); ++r) {
    out += r == 0 ? "[" : ", [";
    for (std::size_t c = 0; c < a.cols(); ++c)
      out += (c == 0 ? "" : ", ") + format(a(r, c), p);
    out += "]";
  }
  return out + "]";
}

} // namespace ncd
