#include "ncdiff/presentation.hpp"

#include <algorithm>
#include <array>
#include <iterator>
#include <set>
#include <stdexcept>

#include "ncdiff/errors.hpp"

namespace ncd {

namespace {

std::string rule_label(GenId high, GenId low, const std::vector<std::string>& names) {
  auto name = [&](GenId g) { return g < names.size() ? names[g] : "#" + std::to_string(g); };
  return name(high) + " " + name(low);
}

void check_range(const AlgElement& e, std::size_t n) {
  for (const auto& [w, c] : e.terms())
    for (GenId g : w)
      if (g >= n)
        throw std::out_of_range("generator index " + std::to_string(g) + " out of range");
}

void enumerate_rec(std::size_t n, std::size_t length, Word& prefix, std::vector<Word>& out) {
  if (prefix.size() == length) {
    out.push_back(prefix);
    return;
  }
  GenId start = prefix.empty() ? 0 : prefix.back();
  for (GenId g = start; g < n; ++g) {
    prefix.push_back(g);
    enumerate_rec(n, length, prefix, out);
    prefix.pop_back();
  }
}

} // namespace

AlgebraPresentation::AlgebraPresentation(std::vector<std::string> generator_names,
                                         std::vector<RewriteRule> rules)
    : names_(std::move(generator_names)), rules_(std::move(rules)) {
  const std::size_t n = names_.size();
  if (n == 0)
    throw PresentationError("presentation needs at least one generator");
  if (n > 1000)
    throw PresentationError("too many generators");
  std::set<std::string> seen;
  for (const auto& name : names_) {
    if (name.empty())
      throw PresentationError("empty generator name");
    if (!seen.insert(name).second)
      throw PresentationError("duplicate generator '" + name + "'");
  }

  rule_index_.assign(n * n, static_cast<std::size_t>(-1));
  std::sort(rules_.begin(), rules_.end(), [](const RewriteRule& a, const RewriteRule& b) {
    return std::pair(a.high, a.low) < std::pair(b.high, b.low);
  });
  for (std::size_t k = 0; k < rules_.size(); ++k) {
    const auto& r = rules_[k];
    if (r.high >= n || r.low >= n)
      throw PresentationError("rule refers to an unknown generator");
    const std::string label = rule_label(r.high, r.low, names_);
    if (r.high <= r.low)
      throw PresentationError("rule " + label + ": lhs must be in descending generator order");
    auto& slot = rule_index_[r.high * n + r.low];
    if (slot != static_cast<std::size_t>(-1))
      throw PresentationError("duplicate rule for " + label);
    slot = k;
    const Word lhs{r.high, r.low};
    for (const auto& [w, c] : r.rhs.terms()) {
      for (GenId g : w)
        if (g >= n)
          throw PresentationError("rule " + label + ": rhs refers to an unknown generator");
      if (w.size() > 2)
        throw PresentationError("rule " + label + ": rhs word longer than 2");
      if (!MonomialLess{}(w, lhs))
        throw PresentationError("rule " + label +
                                ": rhs monomial not smaller than lhs (rewriting would not terminate)");
    }
  }
  for (GenId high = 0; high < n; ++high)
    for (GenId low = 0; low < high; ++low)
      if (rule_index_[high * n + low] == static_cast<std::size_t>(-1))
        throw PresentationError("missing rule for " + rule_label(high, low, names_));
}

std::optional<GenId> AlgebraPresentation::find_generator(std::string_view name) const {
  for (std::size_t g = 0; g < names_.size(); ++g)
    if (names_[g] == name)
      return static_cast<GenId>(g);
  return std::nullopt;
}

const RewriteRule& AlgebraPresentation::rule(GenId high, GenId low) const {
  return rules_[rule_index_.at(high * names_.size() + low)];
}

AlgElement nf(const AlgElement& e, const AlgebraPresentation& p) {
  check_range(e, p.generator_count());
  // Rewriting only produces smaller words, so popping the largest pending word
  // touches each word at most once.
  std::map<Word, Scalar, MonomialLess> pending;
  for (const auto& [w, c] : e.terms())
    pending[w] += c;

  AlgElement out;
  while (!pending.empty()) {
    auto it = std::prev(pending.end());
    Word w = std::move(it->first);
    Scalar c = std::move(it->second);
    pending.erase(it);
    if (c == 0)
      continue;
    std::size_t t = 0;
    while (t + 1 < w.size() && w[t] <= w[t + 1])
      ++t;
    if (t + 1 >= w.size()) {
      out.add_term(w, c);
      continue;
    }
    const auto& r = p.rule(w[t], w[t + 1]);
    for (const auto& [rw, rc] : r.rhs.terms()) {
      Word nw;
      nw.reserve(w.size());
      nw.insert(nw.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(t));
      nw.insert(nw.end(), rw.begin(), rw.end());
      nw.insert(nw.end(), w.begin() + static_cast<std::ptrdiff_t>(t + 2), w.end());
      pending[nw] += c * rc;
    }
  }
  return out;
}

AlgElement mul(const AlgElement& a, const AlgElement& b, const AlgebraPresentation& p) {
  return nf(free_product(a, b), p);
}

ValidationReport check_presentation(const AlgebraPresentation& p) {
  ValidationReport details;
  const auto n = static_cast<GenId>(p.generator_count());
  std::size_t overlaps = 0, failures = 0;
  for (GenId k = 0; k < n; ++k)
    for (GenId j = 0; j < k; ++j)
      for (GenId i = 0; i < j; ++i) {
        ++overlaps;
        const auto via_right = nf(free_product(AlgElement::generator(k), p.rule(j, i).rhs), p);
        const auto via_left = nf(free_product(p.rule(k, j).rhs, AlgElement::generator(i)), p);
        const auto diff = via_right - via_left;
        const std::string key = "overlap:" + format_word(Word{k, j, i}, p);
        if (diff.is_zero()) {
          details.add(key, Status::Pass, format(via_right, p));
        } else {
          ++failures;
          details.add(key, Status::Fail, format(diff, p));
        }
      }
  ValidationReport report;
  report.add("confluence", failures == 0 ? Status::Pass : Status::Fail,
             std::to_string(overlaps) + " overlaps, " + std::to_string(failures) + " failing");
  report.append(details);
  return report;
}

void require_confluent(const AlgebraPresentation& p) {
  auto report = check_presentation(p);
  if (const auto* bad = report.first_failure(); bad != nullptr) {
    for (const auto& l : report.lines())
      if (l.status != Status::Pass && l.key != "confluence")
        throw PresentationError("presentation is not confluent: " + l.key + " differs by " + l.detail);
    throw PresentationError("presentation is not confluent");
  }
}

std::vector<Word> enumerate_monomials(const AlgebraPresentation& p, int degree) {
  std::vector<Word> out;
  Word prefix;
  for (int len = 0; len <= degree; ++len)
    enumerate_rec(p.generator_count(), static_cast<std::size_t>(len), prefix, out);
  return out;
}

AlgElement random_element(const AlgebraPresentation& p, int degree, Rng& rng) {
  static const std::array<Scalar, 7> pool{Scalar(0),     Scalar(1),     Scalar(-1), Scalar(1, 2),
                                          Scalar(-1, 2), Scalar(2),     Scalar(-2)};
  const std::size_t n = p.generator_count();
  const auto terms = 1 + rng() % 3;
  AlgElement e;
  for (std::uint64_t t = 0; t < terms; ++t) {
    const Scalar& c = pool[rng() % pool.size()];
    const auto len = degree <= 0 ? 0 : rng() % static_cast<std::uint64_t>(degree + 1);
    Word w(len);
    for (auto& g : w)
      g = static_cast<GenId>(rng() % n);
    e.add_term(w, c);
  }
  return nf(e, p);
}

AlgElement random_element(const AlgebraPresentation& p, int degree, std::uint64_t seed) {
  Rng rng(seed);
  return random_element(p, degree, rng);
}

AlgElement mirror(const AlgElement& e, const AlgebraPresentation& p) {
  check_range(e, p.generator_count());
  const auto top = static_cast<GenId>(p.generator_count() - 1);
  AlgElement out;
  for (const auto& [w, c] : e.terms()) {
    Word r(w.rbegin(), w.rend());
    for (auto& g : r)
      g = static_cast<GenId>(top - g);
    out.add_term(r, c);
  }
  return out;
}

AlgebraPresentation mirror(const AlgebraPresentation& p) {
  const auto top = static_cast<GenId>(p.generator_count() - 1);
  std::vector<std::string> names(p.generator_names().rbegin(), p.generator_names().rend());
  std::vector<RewriteRule> rules;
  for (const auto& r : p.rules())
    rules.push_back({static_cast<GenId>(top - r.low), static_cast<GenId>(top - r.high), mirror(r.rhs, p)});
  try {
    return AlgebraPresentation(std::move(names), std::move(rules));
  } catch (const PresentationError& e) {
    throw PresentationError(std::string("mirrored presentation rejected: ") + e.what());
  }
}

std::string format_word(const Word& w, const AlgebraPresentation& p) {
  std::string out;
  for (std::size_t t = 0; t < w.size();) {
    std::size_t run = 1;
    while (t + run < w.size() && w[t + run] == w[t])
      ++run;
    if (!out.empty())
      out += ' ';
    out += p.generator_name(w[t]);
    if (run > 1)
      out += "^" + std::to_string(run);
    t += run;
  }
  return out;
}

std::string format(const AlgElement& e, const AlgebraPresentation& p) {
  if (e.is_zero())
    return "0";
  std::string out;
  for (const auto& [w, c] : e.terms()) {
    const bool negative = c < 0;
    if (out.empty())
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    const Scalar mag = abs(c);
    if (w.empty()) {
      out += mag.get_str();
    } else {
      if (mag != 1)
        out += mag.get_str() + " ";
      out += format_word(w, p);
    }
  }
  return out;
}

} // namespace ncd
