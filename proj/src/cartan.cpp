#include "ncdiff/cartan.hpp"

#include <functional>

#include "ncdiff/errors.hpp"
#include "ncdiff/linear_solve.hpp"

namespace ncd {

namespace {

// X.g for a single generator: (X.g)_k = Σ_i X_i Φ_ik(g).
DualElement right_mul_generator(const DualElement& X, GenId g, const BimodulePresentation& m) {
  const auto& phi = m.structure(g);
  DualElement out(m.rank());
  for (std::size_t k = 0; k < m.rank(); ++k) {
    AlgElement acc;
    for (std::size_t i = 0; i < m.rank(); ++i)
      acc += free_product(X[i], phi(i, k));
    out[k] = nf(acc, m.algebra());
  }
  return out;
}

// Tallies one randomized law: counts failures and keeps the first counterexample.
struct LawTally {
  std::string key;
  std::size_t trials = 0;
  std::size_t failures = 0;
  std::string first = {};

  void record(bool ok, const std::function<std::string()>& describe) {
    ++trials;
    if (!ok && failures++ == 0)
      first = describe();
  }

  void emit(ValidationReport& r) const {
    if (failures == 0)
      r.add(key, Status::Pass, std::to_string(trials) + " trials");
    else
      r.add(key, Status::Fail,
            std::to_string(failures) + "/" + std::to_string(trials) + " trials fail; first: " + first);
  }
};

// Finite obligations: R's structure matrices respect the rules, ρ is
// compatible with every rule, and every basis element kills the unit.
ValidationReport rule_checks(const RightCartanPair& pair, const std::string& prefix) {
  const auto& m = pair.presentation();
  const auto& p = pair.algebra();
  ValidationReport report;
  const auto structure = check_bimodule(m);
  report.add(prefix + "structure", structure.verdict(), structure.lines().front().detail);

  std::size_t failures = 0;
  std::string first;
  for (const auto& r : p.rules())
    for (BasisId i = 0; i < pair.rank(); ++i) {
      const auto E = DualElement::basis(pair.rank(), i);
      const auto gap = action_apply(pair, E, AlgElement::monomial(Word{r.high, r.low})) - action_apply(pair, E, r.rhs);
      if (!gap.is_zero() && failures++ == 0)
        first = m.basis_name(i) + " on " + format_word(Word{r.high, r.low}, p) + ": lhs - rhs = " + format(gap, p);
    }
  report.add(prefix + "rules", failures == 0 ? Status::Pass : Status::Fail,
             failures == 0 ? std::to_string(p.rules().size() * pair.rank()) + " rule/basis pairs" : first);

  bool unit_ok = true;
  for (BasisId i = 0; i < pair.rank(); ++i)
    unit_ok = unit_ok && action_apply(pair, DualElement::basis(pair.rank(), i), AlgElement::one()).is_zero();
  report.add(prefix + "unit", unit_ok ? Status::Pass : Status::Fail);
  return report;
}

void require_rules(const RightCartanPair& pair) {
  const auto r = rule_checks(pair, "cartan:");
  if (const auto* bad = r.first_failure())
    throw ModelError("invalid Cartan pair: " + bad->key + " (" + bad->detail + ")");
}

} // namespace

RightCartanPair::RightCartanPair(BimodulePresentation presentation, std::vector<std::vector<AlgElement>> action)
    : presentation_(std::move(presentation)), action_(std::move(action)) {
  if (action_.size() != presentation_.rank())
    throw PresentationError("action matrix needs one row per basis element");
  for (auto& row : action_) {
    if (row.size() != presentation_.algebra().generator_count())
      throw PresentationError("action matrix needs one entry per generator");
    for (auto& e : row)
      e = nf(e, presentation_.algebra());
  }
}

AlgElement action_apply(const RightCartanPair& pair, const DualElement& X, const AlgElement& f) {
  const auto& m = pair.presentation();
  AlgElement out;
  for (const auto& [w, c] : f.terms()) {
    DualElement h = X;
    AlgElement acc;
    for (std::size_t t = 0; t < w.size(); ++t) {
      AlgElement local;
      for (std::size_t i = 0; i < pair.rank(); ++i)
        local += free_product(h[i], pair.action(i, w[t]));
      const Word suffix(w.begin() + static_cast<std::ptrdiff_t>(t + 1), w.end());
      acc += free_product(local, AlgElement::monomial(suffix));
      if (t + 1 < w.size())
        h = right_mul_generator(h, w[t], m);
    }
    out += c * nf(acc, m.algebra());
  }
  return out;
}

AlgElement action_on_right_multiple(const RightCartanPair& pair, BasisId i, const AlgElement& a,
                                    const AlgElement& g) {
  const auto& p = pair.algebra();
  const auto E = DualElement::basis(pair.rank(), i);
  return action_apply(pair, E, mul(a, g, p)) - mul(action_apply(pair, E, a), g, p);
}

ValidationReport check_right_axioms(const RightCartanPair& pair, const TrialOptions& opts) {
  const auto& m = pair.presentation();
  const auto& p = pair.algebra();
  ValidationReport report = rule_checks(pair, "cartan:");

  LawTally linear{"cartan:left-linearity"}, leibniz{"cartan:twisted-leibniz"},
      bracketing{"cartan:bracketing"}, derived{"cartan:derived-rule"};
  for (int t = 0; t < opts.trials; ++t) {
    Rng rng(opts.seed + static_cast<std::uint64_t>(t));
    const auto X = random_dual_element(m, opts.degree, rng);
    const auto h = random_element(p, opts.degree, rng);
    const auto f = random_element(p, opts.degree, rng);
    const auto g = random_element(p, opts.degree, rng);
    const auto k = random_element(p, opts.degree, rng);
    const auto i = static_cast<BasisId>(rng() % pair.rank());
    auto show = [&] {
      return "X = " + format(X, m) + ", f = " + format(f, p) + ", g = " + format(g, p);
    };

    linear.record(action_apply(pair, dual_left_mul(h, X, m), g) == mul(h, action_apply(pair, X, g), p), [&] {
      return "h = " + format(h, p) + ", " + show();
    });

    const auto Xf = dual_right_mul(X, f, m);
    const auto fg = mul(f, g, p);
    const auto lhs = action_apply(pair, X, fg);
    leibniz.record(lhs == mul(action_apply(pair, X, f), g, p) + action_apply(pair, Xf, g), show);

    const auto via_fg = mul(lhs, k, p) + action_apply(pair, dual_right_mul(X, fg, m), k);
    const auto via_gk = mul(action_apply(pair, X, f), mul(g, k, p), p) + action_apply(pair, Xf, mul(g, k, p));
    bracketing.record(via_fg == via_gk && via_fg == action_apply(pair, X, mul(fg, k, p)),
                      [&] { return show() + ", h = " + format(k, p); });

    derived.record(action_on_right_multiple(pair, i, f, g) ==
                       action_apply(pair, dual_right_mul(DualElement::basis(pair.rank(), i), f, m), g),
                   [&] { return "E = " + m.basis_name(i) + ", a = " + format(f, p) + ", g = " + format(g, p); });
  }
  linear.emit(report);
  leibniz.emit(report);
  bracketing.emit(report);
  derived.emit(report);
  return report;
}

RightCartanPair pair_from_calculus(const CalculusModel& c) {
  require_valid(c);
  const auto& m = c.bimodule();
  std::vector<std::vector<AlgElement>> action(m.rank(), std::vector<AlgElement>(c.algebra().generator_count()));
  for (BasisId i = 0; i < m.rank(); ++i)
    for (GenId j = 0; j < c.algebra().generator_count(); ++j)
      action[i][j] = c.differential(j)[i];
  return RightCartanPair(m, std::move(action));
}

BimElement d_rho(const RightCartanPair& pair, const AlgElement& f) {
  BimElement out(pair.rank());
  for (BasisId i = 0; i < pair.rank(); ++i)
    out[i] = action_apply(pair, DualElement::basis(pair.rank(), i), f);
  return out;
}

CalculusModel calculus_from_pair(const RightCartanPair& pair) {
  require_rules(pair);
  const auto n = pair.algebra().generator_count();
  std::vector<BimElement> d(n, BimElement(pair.rank()));
  for (GenId j = 0; j < n; ++j)
    for (BasisId i = 0; i < pair.rank(); ++i)
      d[j][i] = pair.action(i, j);
  return CalculusModel(pair.presentation(), std::move(d));
}

ValidationReport roundtrip_calculus(const CalculusModel& c, const TrialOptions& opts) {
  const auto& m = c.bimodule();
  const auto& p = c.algebra();
  const auto partials = pair_from_calculus(c);
  const auto back = calculus_from_pair(partials);

  ValidationReport report;
  report.add("roundtrip:generators", back.differential() == c.differential() ? Status::Pass : Status::Fail);

  LawTally leibniz{"roundtrip:differential"}, partial{"roundtrip:partial-derivative"},
      defining{"roundtrip:dual-pairing"};
  for (int t = 0; t < opts.trials; ++t) {
    Rng rng(opts.seed + static_cast<std::uint64_t>(t));
    const auto f = random_element(p, opts.degree, rng);
    const auto X = random_dual_element(m, opts.degree, rng);
    const auto df = diff(f, c);
    const auto via_action = d_rho(partials, f);
    auto show = [&] { return "f = " + format(f, p); };

    leibniz.record(diff(f, back) == df && identify(DualDualElement(via_action.components())) == df, show);
    const auto action = action_apply(partials, X, f);
    partial.record(action == pair(X, df, m), [&] { return "X = " + format(X, m) + ", " + show(); });
    defining.record(pair_dual_dual(X, DualDualElement(via_action.components()), m) == action,
                    [&] { return "X = " + format(X, m) + ", " + show(); });
  }
  leibniz.emit(report);
  partial.emit(report);
  defining.emit(report);
  return report;
}

ValidationReport roundtrip_pair(const RightCartanPair& pair, const TrialOptions& opts) {
  ValidationReport report;
  std::optional<RightCartanPair> back;
  try {
    back = pair_from_calculus(calculus_from_pair(pair));
  } catch (const ModelError& e) {
    report.add("roundtrip:reconstruct", Status::Fail, e.what());
    return report;
  }
  report.add("roundtrip:action-matrix", back->action() == pair.action() ? Status::Pass : Status::Fail);

  const auto& m = pair.presentation();
  LawTally action{"roundtrip:action"};
  for (int t = 0; t < opts.trials; ++t) {
    Rng rng(opts.seed + static_cast<std::uint64_t>(t));
    const auto X = random_dual_element(m, opts.degree, rng);
    const auto f = random_element(pair.algebra(), opts.degree, rng);
    action.record(action_apply(*back, X, f) == action_apply(pair, X, f),
                  [&] { return "X = " + format(X, m) + ", f = " + format(f, pair.algebra()); });
  }
  action.emit(report);
  return report;
}

KernelReport faithful_bounded(const RightCartanPair& pair, int degree) {
  const auto& p = pair.algebra();
  const auto coefficients = enumerate_monomials(p, degree);
  const auto tests = enumerate_monomials(p, degree + 1);

  std::vector<std::vector<AlgElement>> images(pair.rank());
  for (BasisId i = 0; i < pair.rank(); ++i)
    for (const auto& w : tests)
      images[i].push_back(action_apply(pair, DualElement::basis(pair.rank(), i), AlgElement::monomial(w)));

  std::map<std::pair<std::size_t, Word>, std::size_t> rows;
  std::vector<SparseColumn> columns;
  std::vector<std::pair<BasisId, Word>> unknowns;
  for (BasisId i = 0; i < pair.rank(); ++i)
    for (const auto& mono : coefficients) {
      SparseColumn col;
      for (std::size_t w = 0; w < tests.size(); ++w) {
        const auto product = mul(AlgElement::monomial(mono), images[i][w], p);
        for (const auto& [word, v] : product.terms()) {
          auto [it, inserted] = rows.try_emplace({w, word}, rows.size());
          col[it->second] = v;
        }
      }
      columns.push_back(std::move(col));
      unknowns.emplace_back(i, mono);
    }

  KernelReport report;
  report.degree = degree;
  report.unknowns = unknowns.size();
  for (const auto& v : kernel_basis(columns)) {
    DualElement X(pair.rank());
    for (std::size_t k = 0; k < v.size(); ++k)
      X[unknowns[k].first].add_term(unknowns[k].second, v[k]);
    report.kernel.push_back(std::move(X));
  }
  return report;
}

LeftCartanPair::LeftCartanPair(RightCartanPair right)
    : right_(std::move(right)), presentation_(mirror(right_.presentation())) {}

LeftCartanPair mirror(const RightCartanPair& pair) { return LeftCartanPair(pair); }

RightCartanPair mirror(const LeftCartanPair& pair) { return pair.right(); }

AlgElement left_action_apply(const LeftCartanPair& pair, const BimElement& X, const AlgElement& f) {
  const auto& right = pair.right();
  const auto value = action_apply(right, mirror(X, pair.presentation()), mirror(f, pair.algebra()));
  return mirror(value, right.algebra());
}

ValidationReport check_left_axioms(const LeftCartanPair& pair, const TrialOptions& opts) {
  const auto& m = pair.presentation();
  const auto& p = pair.algebra();
  ValidationReport report = rule_checks(pair.right(), "left:");

  LawTally linear{"left:right-linearity"}, leibniz{"left:twisted-leibniz"};
  for (int t = 0; t < opts.trials; ++t) {
    Rng rng(opts.seed + static_cast<std::uint64_t>(t));
    const auto X = random_bim_element(m, opts.degree, rng);
    const auto f = random_element(p, opts.degree, rng);
    const auto g = random_element(p, opts.degree, rng);
    auto show = [&] { return "X = " + format(X, m) + ", f = " + format(f, p) + ", g = " + format(g, p); };

    linear.record(left_action_apply(pair, right_mul(X, g, m), f) == mul(left_action_apply(pair, X, f), g, p), show);
    leibniz.record(left_action_apply(pair, X, mul(f, g, p)) ==
                       mul(f, left_action_apply(pair, X, g), p) + left_action_apply(pair, left_mul(g, X, m), f),
                   show);
  }
  linear.emit(report);
  leibniz.emit(report);
  return report;
}

LeftCartanPair left_pair_from_calculus(const CalculusModel& c) {
  return LeftCartanPair(pair_from_calculus(mirror(c)));
}

} // namespace ncd
