#include "oracles.hpp"

#include <fstream>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace oracle {

using namespace ncd;

namespace {

// Mixed words: letters < n are generators, letters >= n are basis symbols.
using Mixed = std::map<Word, Scalar>;

void add(Mixed& acc, const Word& w, const Scalar& c) {
  if (c == 0)
    return;
  auto& slot = acc[w];
  slot += c;
  if (slot == 0)
    acc.erase(w);
}

// Rewrites until every word is e_i followed by a non-decreasing generator word
// (or a plain non-decreasing generator word when no basis letter is present).
Mixed reduce(Mixed acc, const AlgebraPresentation& p, const std::vector<AlgMatrix>& structure,
             std::uint64_t seed) {
  const auto n = static_cast<GenId>(p.generator_count());
  std::mt19937_64 rng(seed);
  Mixed done;
  while (!acc.empty()) {
    auto it = acc.begin();
    std::advance(it, static_cast<long>(rng() % acc.size()));
    const Word w = it->first;
    const Scalar c = it->second;
    acc.erase(it);

    std::vector<std::size_t> spots;
    for (std::size_t t = 0; t + 1 < w.size(); ++t) {
      const bool basis_next = w[t + 1] >= n;
      if (w[t] < n && (basis_next || w[t] > w[t + 1]))
        spots.push_back(t);
    }
    if (spots.empty()) {
      add(done, w, c);
      continue;
    }
    const std::size_t t = spots[rng() % spots.size()];
    const Word head(w.begin(), w.begin() + static_cast<long>(t));
    const Word tail(w.begin() + static_cast<long>(t + 2), w.end());
    if (w[t + 1] >= n) {
      const std::size_t i = w[t + 1] - n;
      const auto& phi = structure.at(w[t]);
      for (std::size_t j = 0; j < phi.rows(); ++j)
        for (const auto& [rw, rc] : phi(j, i).terms()) {
          Word nw = head;
          nw.push_back(static_cast<GenId>(n + j));
          nw.insert(nw.end(), rw.begin(), rw.end());
          nw.insert(nw.end(), tail.begin(), tail.end());
          add(acc, nw, c * rc);
        }
    } else {
      for (const auto& [rw, rc] : p.rule(w[t], w[t + 1]).rhs.terms()) {
        Word nw = head;
        nw.insert(nw.end(), rw.begin(), rw.end());
        nw.insert(nw.end(), tail.begin(), tail.end());
        add(acc, nw, c * rc);
      }
    }
  }
  return done;
}

BimElement to_bim(const Mixed& words, std::size_t n, std::size_t rank) {
  BimElement x(rank);
  for (const auto& [w, c] : words) {
    if (w.empty() || w[0] < n)
      throw std::logic_error("oracle: word without leading basis letter");
    x[w[0] - n].add_term(Word(w.begin() + 1, w.end()), c);
  }
  return x;
}

Mixed from_bim(const BimElement& x, std::size_t n) {
  Mixed out;
  for (std::size_t i = 0; i < x.rank(); ++i)
    for (const auto& [w, c] : x[i].terms()) {
      Word nw{static_cast<GenId>(n + i)};
      nw.insert(nw.end(), w.begin(), w.end());
      add(out, nw, c);
    }
  return out;
}

} // namespace

AlgElement random_strategy_nf(const AlgElement& e, const AlgebraPresentation& p, std::uint64_t seed) {
  Mixed acc;
  for (const auto& [w, c] : e.terms())
    add(acc, w, c);
  AlgElement out;
  for (const auto& [w, c] : reduce(acc, p, {}, seed))
    out.add_term(w, c);
  return out;
}

BimElement brute_diff(const AlgElement& f, const ModelFile& m, std::uint64_t seed) {
  const std::size_t n = m.algebra.generator_count();
  Mixed acc;
  for (const auto& [w, c] : f.terms())
    for (std::size_t t = 0; t < w.size(); ++t)
      for (const auto& [dw, dc] : from_bim(m.differential->at(w[t]), n)) {
        Word nw(w.begin(), w.begin() + static_cast<long>(t));
        nw.insert(nw.end(), dw.begin(), dw.end());
        nw.insert(nw.end(), w.begin() + static_cast<long>(t + 1), w.end());
        add(acc, nw, c * dc);
      }
  return to_bim(reduce(acc, m.algebra, m.structure, seed), n, m.basis.size());
}

BimElement brute_left_mul(const AlgElement& f, const BimElement& x, const ModelFile& m, std::uint64_t seed) {
  const std::size_t n = m.algebra.generator_count();
  Mixed acc;
  for (const auto& [w, c] : f.terms())
    for (const auto& [xw, xc] : from_bim(x, n)) {
      Word nw = w;
      nw.insert(nw.end(), xw.begin(), xw.end());
      add(acc, nw, c * xc);
    }
  return to_bim(reduce(acc, m.algebra, m.structure, seed), n, m.basis.size());
}

namespace {

const std::vector<std::string> kNames = {"a", "b", "c"};
const std::vector<std::string> kBasis = {"e", "f"};

Scalar random_scalar(Rng& rng) {
  static const int nums[] = {-3, -1, 1, 2, 5};
  Scalar s(nums[rng() % 5], static_cast<long>(1 + rng() % 3));
  s.canonicalize();
  return s;
}

// Random combination of normal words of length <= 2 accepted by `ok`.
template <class Pred>
AlgElement random_combo(std::size_t n, Rng& rng, Pred ok) {
  std::vector<Word> pool{{}};
  for (GenId i = 0; i < n; ++i) {
    pool.push_back({i});
    for (GenId j = i; j < n; ++j)
      pool.push_back({i, j});
  }
  AlgElement e;
  const auto terms = rng() % 3;
  for (std::size_t t = 0; t < terms; ++t) {
    const auto& w = pool[rng() % pool.size()];
    if (ok(w))
      e.add_term(w, random_scalar(rng));
  }
  return e;
}

} // namespace

ModelFile random_model_file(Rng& rng) {
  const std::size_t n = 1 + rng() % 3;
  std::vector<std::string> names(kNames.begin(), kNames.begin() + static_cast<long>(n));
  std::vector<RewriteRule> rules;
  for (GenId j = 0; j < n; ++j)
    for (GenId i = 0; i < j; ++i) {
      const Word lhs{j, i};
      rules.push_back({j, i, random_combo(n, rng, [&](const Word& w) { return MonomialLess{}(w, lhs); })});
    }
  ModelFile m{AlgebraPresentation(names, rules), {}, {}, std::nullopt, std::nullopt, {}};
  const std::size_t rank = rng() % 3;
  if (rank == 0)
    return m;
  m.basis.assign(kBasis.begin(), kBasis.begin() + static_cast<long>(rank));
  auto any = [](const Word&) { return true; };
  for (std::size_t g = 0; g < n; ++g) {
    AlgMatrix phi(rank, rank);
    for (std::size_t r = 0; r < rank; ++r)
      for (std::size_t c = 0; c < rank; ++c)
        phi(r, c) = random_combo(n, rng, any);
    m.structure.push_back(phi);
  }
  if (rng() % 2 == 0) {
    std::vector<BimElement> d;
    for (std::size_t g = 0; g < n; ++g) {
      BimElement x(rank);
      for (std::size_t i = 0; i < rank; ++i)
        x[i] = random_combo(n, rng, any);
      d.push_back(x);
    }
    m.differential = d;
  }
  if (rng() % 2 == 0) {
    std::vector<std::vector<AlgElement>> rho(rank);
    for (auto& row : rho)
      for (std::size_t g = 0; g < n; ++g)
        row.push_back(random_combo(n, rng, any));
    m.action = rho;
  }
  return m;
}

std::size_t binomial(std::size_t n, std::size_t k) {
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i)
    r = r * (n - k + i) / i;
  return r;
}

ModelFile load_fixture(const std::string& name) {
  std::ifstream in(std::string(NCD_FIXTURES) + "/" + name);
  if (!in)
    throw std::runtime_error("missing fixture " + name);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_model(buf.str());
}

} // namespace oracle
