#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "ncdiff/algebra.hpp"
#include "ncdiff/report.hpp"

namespace ncd {

/// g_high g_low -> rhs, with high > low. Every rhs word has length <= 2 and is
/// strictly below the lhs in the monomial order, which makes rewriting terminate.
struct RewriteRule {
  GenId high = 0;
  GenId low = 0;
  AlgElement rhs;

  friend bool operator==(const RewriteRule&, const RewriteRule&) = default;
};

/// Generators plus one quadratic rewrite rule per ordered pair high > low.
/// The constructor enforces rule shape and completeness only; local
/// confluence is reported by check_presentation().
class AlgebraPresentation {
public:
  AlgebraPresentation(std::vector<std::string> generator_names, std::vector<RewriteRule> rules);

  std::size_t generator_count() const { return names_.size(); }
  const std::vector<std::string>& generator_names() const { return names_; }
  const std::string& generator_name(GenId g) const { return names_.at(g); }
  std::optional<GenId> find_generator(std::string_view name) const;

  /// Rules sorted by (high, low).
  const std::vector<RewriteRule>& rules() const { return rules_; }
  const RewriteRule& rule(GenId high, GenId low) const;

  friend bool operator==(const AlgebraPresentation& a, const AlgebraPresentation& b) {
    return a.names_ == b.names_ && a.rules_ == b.rules_;
  }

private:
  std::vector<std::string> names_;
  std::vector<RewriteRule> rules_;
  std::vector<std::size_t> rule_index_; // high * n + low -> position in rules_
};

/// Normal form: rewrites until every word is non-decreasing. Throws
/// std::out_of_range for generator indices outside the presentation.
AlgElement nf(const AlgElement& e, const AlgebraPresentation& p);

AlgElement mul(const AlgElement& a, const AlgElement& b, const AlgebraPresentation& p);

/// Overlap check on every word g_k g_j g_i with k > j > i. Each line compares
/// the normal form obtained by first reducing g_j g_i with the one obtained by
/// first reducing g_k g_j; the detail of a FAIL line is their difference.
ValidationReport check_presentation(const AlgebraPresentation& p);

/// Throws PresentationError unless check_presentation passes.
void require_confluent(const AlgebraPresentation& p);

/// All normal words of length <= degree, ascending in the monomial order.
std::vector<Word> enumerate_monomials(const AlgebraPresentation& p, int degree);

using Rng = std::mt19937_64;

/// Random normal-form element with words of length <= degree and coefficients
/// from {0, ±1, ±1/2, ±2}. Deterministic for a given seed.
AlgElement random_element(const AlgebraPresentation& p, int degree, std::uint64_t seed);
AlgElement random_element(const AlgebraPresentation& p, int degree, Rng& rng);

/// Opposite algebra: generator order reversed (names kept), every word reversed.
AlgebraPresentation mirror(const AlgebraPresentation& p);

/// Image of an element of p in mirror(p): reverse each word and relabel.
AlgElement mirror(const AlgElement& e, const AlgebraPresentation& p);

/// Canonical text: terms ascending in the monomial order, `2 x^2 y`, `-1/2`, `0`.
std::string format(const AlgElement& e, const AlgebraPresentation& p);
std::string format_word(const Word& w, const AlgebraPresentation& p);

} // namespace ncd
