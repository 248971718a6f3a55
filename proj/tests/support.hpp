#pragma once

#include "ncdiff/cartan.hpp"
#include "ncdiff/errors.hpp"
#include "ncdiff/specfile.hpp"
#include "oracles.hpp"

namespace support {

inline const ncd::ModelFile& poly2() {
  static const auto m = oracle::load_fixture("poly2.nc");
  return m;
}

inline const ncd::ModelFile& qplane2() {
  static const auto m = oracle::load_fixture("qplane2.nc");
  return m;
}

// Enveloping algebra of a solvable Lie algebra: [z,x] = x, [z,y] = -y, [y,x] = 0.
inline const ncd::AlgebraPresentation& lie3() {
  static const auto m = ncd::parse_model("generators: x y z\n"
                                         "rule: y x = x y\n"
                                         "rule: z x = x z + x\n"
                                         "rule: z y = y z - y\n");
  return m.algebra;
}

inline ncd::AlgElement el(const std::string& text, const ncd::AlgebraPresentation& p) {
  return ncd::parse_expr(text, p);
}

// A random word in the free algebra, not normalized.
inline ncd::Word free_word(const ncd::AlgebraPresentation& p, std::size_t max_len, ncd::Rng& rng) {
  ncd::Word w(rng() % (max_len + 1));
  for (auto& g : w)
    g = static_cast<ncd::GenId>(rng() % p.generator_count());
  return w;
}

} // namespace support
