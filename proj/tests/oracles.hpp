#pragma once

// Test-only reference computations. Nothing here calls nf(), mul(),
// left_mul(), phi_matrix(), diff() or action_apply(); they only read the raw
// tables of a model (rules, structure matrices on generators, d on generators).

#include <string>

#include "ncdiff/specfile.hpp"

namespace oracle {

/// Normal form by rewriting a randomly chosen descent until none is left.
ncd::AlgElement random_strategy_nf(const ncd::AlgElement& e, const ncd::AlgebraPresentation& p,
                                   std::uint64_t seed);

/// d(f) by expanding the Leibniz sum into mixed words (one basis letter per
/// word) and pushing the basis letter left with g e_i -> Σ_j e_j Φ_ji(g),
/// rewriting algebra descents at random positions along the way.
ncd::BimElement brute_diff(const ncd::AlgElement& f, const ncd::ModelFile& m, std::uint64_t seed = 1);

/// Left multiplication f.x through the same mixed-word rewriting.
ncd::BimElement brute_left_mul(const ncd::AlgElement& f, const ncd::BimElement& x, const ncd::ModelFile& m,
                               std::uint64_t seed = 1);

/// A random, syntactically complete model file (not necessarily confluent).
ncd::ModelFile random_model_file(ncd::Rng& rng);

std::size_t binomial(std::size_t n, std::size_t k);

ncd::ModelFile load_fixture(const std::string& name);

} // namespace oracle
