#pragma once

#include <string>
#include <vector>

#include "ncdiff/bimodule.hpp"
#include "ncdiff/report.hpp"

namespace ncd {

/// First-order calculus (M, d): the differential is given on generators and
/// extended by the Leibniz rule. Construction checks shapes only; use
/// check_calculus / require_valid for the algebraic conditions.
class CalculusModel {
public:
  CalculusModel(BimodulePresentation bimodule, std::vector<BimElement> differential);

  const AlgebraPresentation& algebra() const { return bimodule_.algebra(); }
  const BimodulePresentation& bimodule() const { return bimodule_; }
  const BimElement& differential(GenId g) const { return differential_.at(g); }
  const std::vector<BimElement>& differential() const { return differential_; }

  friend bool operator==(const CalculusModel&, const CalculusModel&) = default;

private:
  BimodulePresentation bimodule_;
  std::vector<BimElement> differential_;
};

/// Leibniz expansion over the literal word, no normalization of w itself.
BimElement diff_word(const Word& w, const CalculusModel& c);

BimElement diff(const AlgElement& f, const CalculusModel& c);

/// Per rule: diff(rhs) - diff(lhs word) must vanish; also d(1) = 0.
ValidationReport check_calculus(const CalculusModel& c);

/// Bimodule and calculus checks together; throws ModelError on the first failure.
void require_valid(const CalculusModel& c);

/// One summand c · w.d(g).u of a span witness.
struct SpanTerm {
  Scalar coefficient;
  Word left;
  GenId generator = 0;
  Word right;
};

struct SpanReport {
  Status status = Status::Inconclusive;
  int bound = 0;
  /// For PASS, witnesses[i] expresses basis element i.
  std::vector<std::vector<SpanTerm>> witnesses;
  /// Basis elements not reached at this bound.
  std::vector<BasisId> missing;
};

/// Semi-decision for M = A.dA: every basis element in the span of
/// w.d(g).u with deg w, deg u <= bound. Never answers "no".
SpanReport spans_check(const CalculusModel& c, int bound);

std::string format(const SpanTerm& t, const CalculusModel& c);
ValidationReport to_report(const SpanReport& r, const CalculusModel& c);

/// Formal mirror over the opposite algebra (no validation).
CalculusModel mirror(const CalculusModel& c);

} // namespace ncd
