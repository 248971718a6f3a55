#include "ncdiff/calculus.hpp"

#include "ncdiff/errors.hpp"
#include "ncdiff/linear_solve.hpp"

namespace ncd {

CalculusModel::CalculusModel(BimodulePresentation bimodule, std::vector<BimElement> differential)
    : bimodule_(std::move(bimodule)), differential_(std::move(differential)) {
  if (differential_.size() != bimodule_.algebra().generator_count())
    throw PresentationError("differential needs one value per generator");
  for (auto& v : differential_) {
    if (v.rank() != bimodule_.rank())
      throw PresentationError("differential value has wrong rank");
    for (std::size_t i = 0; i < v.rank(); ++i)
      v[i] = nf(v[i], bimodule_.algebra());
  }
}

BimElement diff_word(const Word& w, const CalculusModel& c) {
  const auto& m = c.bimodule();
  BimElement out(m.rank());
  for (std::size_t t = 0; t < w.size(); ++t) {
    const Word prefix(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(t));
    const Word suffix(w.begin() + static_cast<std::ptrdiff_t>(t + 1), w.end());
    auto term = left_mul(AlgElement::monomial(prefix), c.differential(w[t]), m);
    out += right_mul(term, AlgElement::monomial(suffix), m);
  }
  return out;
}

BimElement diff(const AlgElement& f, const CalculusModel& c) {
  BimElement out(c.bimodule().rank());
  for (const auto& [w, coef] : f.terms())
    out += coef * diff_word(w, c);
  return out;
}

ValidationReport check_calculus(const CalculusModel& c) {
  const auto& p = c.algebra();
  ValidationReport details;
  std::size_t failures = 0;
  const auto unit = diff(AlgElement::one(), c);
  details.add("calculus:unit", unit.is_zero() ? Status::Pass : Status::Fail,
              unit.is_zero() ? "" : format(unit, c.bimodule()));
  failures += unit.is_zero() ? 0 : 1;
  for (const auto& r : p.rules()) {
    const auto gap = diff(r.rhs, c) - diff_word(Word{r.high, r.low}, c);
    const std::string key = "calculus:" + format_word(Word{r.high, r.low}, p);
    if (gap.is_zero()) {
      details.add(key, Status::Pass);
    } else {
      ++failures;
      details.add(key, Status::Fail, format(gap, c.bimodule()));
    }
  }
  ValidationReport report;
  report.add("calculus", failures == 0 ? Status::Pass : Status::Fail,
             std::to_string(p.rules().size()) + " rules, " + std::to_string(failures) + " failing");
  report.append(details);
  return report;
}

void require_valid(const CalculusModel& c) {
  ValidationReport all = check_bimodule(c.bimodule());
  all.append(check_calculus(c));
  if (const auto* bad = all.first_failure())
    throw ModelError("invalid calculus: " + bad->key + " " + to_string(bad->status) +
                     (bad->detail.empty() ? "" : " (" + bad->detail + ")"));
}

SpanReport spans_check(const CalculusModel& c, int bound) {
  const auto& m = c.bimodule();
  const auto& p = c.algebra();
  const auto words = enumerate_monomials(p, bound);

  // Coordinates of a module element: (basis index, normal word).
  std::map<std::pair<BasisId, Word>, std::size_t> coord;
  auto to_column = [&](const BimElement& x) {
    SparseColumn col;
    for (BasisId i = 0; i < x.rank(); ++i)
      for (const auto& [w, v] : x[i].terms()) {
        auto [it, inserted] = coord.try_emplace({i, w}, coord.size());
        col[it->second] = v;
      }
    return col;
  };

  std::vector<SparseColumn> columns;
  std::vector<SpanTerm> labels;
  for (const auto& left : words)
    for (GenId g = 0; g < p.generator_count(); ++g) {
      const auto lx = left_mul(AlgElement::monomial(left), c.differential(g), m);
      for (const auto& right : words) {
        columns.push_back(to_column(right_mul(lx, AlgElement::monomial(right), m)));
        labels.push_back({Scalar(1), left, g, right});
      }
    }

  SpanReport report;
  report.bound = bound;
  report.status = Status::Pass;
  for (BasisId i = 0; i < m.rank(); ++i) {
    const auto target = to_column(BimElement::basis(m.rank(), i));
    auto sol = solve_combination(columns, target);
    if (!sol) {
      report.status = Status::Inconclusive;
      report.missing.push_back(i);
      report.witnesses.emplace_back();
      continue;
    }
    std::vector<SpanTerm> witness;
    for (std::size_t k = 0; k < sol->size(); ++k)
      if ((*sol)[k] != 0) {
        auto t = labels[k];
        t.coefficient = (*sol)[k];
        witness.push_back(std::move(t));
      }
    report.witnesses.push_back(std::move(witness));
  }
  return report;
}

std::string format(const SpanTerm& t, const CalculusModel& c) {
  const auto& p = c.algebra();
  std::string out = t.coefficient == 1 ? "" : t.coefficient.get_str() + " ";
  if (!t.left.empty())
    out += format_word(t.left, p) + ".";
  out += "d(" + p.generator_name(t.generator) + ")";
  if (!t.right.empty())
    out += "." + format_word(t.right, p);
  return out;
}

ValidationReport to_report(const SpanReport& r, const CalculusModel& c) {
  ValidationReport report;
  for (BasisId i = 0; i < c.bimodule().rank(); ++i) {
    const std::string key = "spans:" + c.bimodule().basis_name(i);
    if (r.witnesses[i].empty()) {
      report.add(key, Status::Inconclusive, "not reached at bound " + std::to_string(r.bound));
      continue;
    }
    std::string detail = c.bimodule().basis_name(i) + " =";
    for (std::size_t k = 0; k < r.witnesses[i].size(); ++k)
      detail += (k == 0 ? " " : " + ") + format(r.witnesses[i][k], c);
    report.add(key, Status::Pass, detail);
  }
  return report;
}

CalculusModel mirror(const CalculusModel& c) {
  auto m = mirror(c.bimodule());
  const auto& p = c.algebra();
  const auto n = p.generator_count();
  std::vector<BimElement> d(n);
  for (std::size_t g = 0; g < n; ++g)
    d[n - 1 - g] = mirror_components(c.differential(static_cast<GenId>(g)), p);
  return CalculusModel(std::move(m), std::move(d));
}

} // namespace ncd
