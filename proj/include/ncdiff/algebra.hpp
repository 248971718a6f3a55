#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include <gmpxx.h>

namespace ncd {

/// Exact rational; gmp keeps every arithmetic result in lowest terms.
using Scalar = mpq_class;

using GenId = std::uint16_t;

/// Sequence of generator indices. The empty word is the unit monomial.
using Word = std::vector<GenId>;

/// Degree-lexicographic order: shorter words first, then lexicographic on
/// generator index (earlier-declared generator = smaller).
struct MonomialLess {
  bool operator()(const Word& a, const Word& b) const {
    if (a.size() != b.size())
      return a.size() < b.size();
    return a < b;
  }
};

/// True when no adjacent pair is a descent (w[t] > w[t+1]).
bool is_normal_word(const Word& w);

Word concat(const Word& a, const Word& b);

/// Finite rational combination of words. Zero coefficients are never stored,
/// so the empty map is the unique zero. No presentation is attached: words may
/// be non-normal until passed through nf().
class AlgElement {
public:
  using Terms = std::map<Word, Scalar, MonomialLess>;

  AlgElement() = default;

  static AlgElement constant(const Scalar& c);
  static AlgElement one() { return constant(1); }
  static AlgElement monomial(Word w, const Scalar& c = 1);
  static AlgElement generator(GenId g) { return monomial(Word{g}); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Scalar coefficient(const Word& w) const;

  /// Length of the longest word, -1 for zero.
  int degree() const;

  void add_term(const Word& w, const Scalar& c);

  AlgElement& operator+=(const AlgElement& other);
  AlgElement& operator-=(const AlgElement& other);
  AlgElement& operator*=(const Scalar& c);

  friend AlgElement operator+(AlgElement a, const AlgElement& b) { return a += b; }
  friend AlgElement operator-(AlgElement a, const AlgElement& b) { return a -= b; }
  friend AlgElement operator-(AlgElement a) { return a *= Scalar(-1); }
  friend AlgElement operator*(const Scalar& c, AlgElement a) { return a *= c; }
  friend AlgElement operator*(AlgElement a, const Scalar& c) { return a *= c; }
  friend bool operator==(const AlgElement& a, const AlgElement& b) { return a.terms_ == b.terms_; }

private:
  Terms terms_;
};

/// Concatenation product in the free algebra (no normalization).
AlgElement free_product(const AlgElement& a, const AlgElement& b);

} // namespace ncd
