#include "ncdiff/algebra.hpp"

namespace ncd {

bool is_normal_word(const Word& w) {
  for (std::size_t t = 0; t + 1 < w.size(); ++t)
    if (w[t] > w[t + 1])
      return false;
  return true;
}

Word concat(const Word& a, const Word& b) {
  Word w;
  w.reserve(a.size() + b.size());
  w.insert(w.end(), a.begin(), a.end());
  w.insert(w.end(), b.begin(), b.end());
  return w;
}

AlgElement AlgElement::constant(const Scalar& c) { return monomial(Word{}, c); }

AlgElement AlgElement::monomial(Word w, const Scalar& c) {
  AlgElement e;
  if (c != 0)
    e.terms_.emplace(std::move(w), c);
  return e;
}

Scalar AlgElement::coefficient(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Scalar(0) : it->second;
}

int AlgElement::degree() const {
  if (terms_.empty())
    return -1;
  return static_cast<int>(terms_.rbegin()->first.size());
}

void AlgElement::add_term(const Word& w, const Scalar& c) {
  if (c == 0)
    return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0)
      terms_.erase(it);
  }
}

AlgElement& AlgElement::operator+=(const AlgElement& other) {
  for (const auto& [w, c] : other.terms_)
    add_term(w, c);
  return *this;
}

AlgElement& AlgElement::operator-=(const AlgElement& other) {
  for (const auto& [w, c] : other.terms_)
    add_term(w, -c);
  return *this;
}

AlgElement& AlgElement::operator*=(const Scalar& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, v] : terms_)
    v *= c;
  return *this;
}

AlgElement free_product(const AlgElement& a, const AlgElement& b) {
  AlgElement out;
  for (const auto& [wa, ca] : a.terms())
    for (const auto& [wb, cb] : b.terms())
      out.add_term(concat(wa, wb), ca * cb);
  return out;
}

} // namespace ncd
