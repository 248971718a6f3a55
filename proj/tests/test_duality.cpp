#include "doctest.h"
#include "support.hpp"

using namespace ncd;
using support::el;

namespace {

const BimodulePresentation& qmod() {
  static const auto m = bimodule_of(support::qplane2());
  return m;
}

} // namespace

TEST_CASE("dual module values") {
  const auto& m = qmod();
  const auto& p = m.algebra();
  const auto edx = DualElement::basis(2, 0);
  const auto X = dual_right_mul(edx, el("x", p), m);
  CHECK(X[0] == el("4 x", p));
  CHECK(X[1] == el("3 y", p));
  CHECK(format(X, m) == "( 4 x ).dx + ( 3 y ).dy");
  CHECK(pair(dual_right_mul(edx, el("y", p), m), BimElement::basis(2, 0), m) == el("8 y", p));
  CHECK(pair(edx, BimElement::basis(2, 1), m).is_zero());
}

TEST_CASE("right dual laws") {
  for (const auto* model : {&support::poly2(), &support::qplane2()}) {
    const auto m = bimodule_of(*model);
    const auto& p = m.algebra();
    Rng rng(43);
    for (int t = 0; t < 200; ++t) {
      const auto X = random_dual_element(m, 2, rng);
      const auto Y = random_dual_element(m, 2, rng);
      const auto x = random_bim_element(m, 2, rng);
      const auto y = random_bim_element(m, 2, rng);
      const auto f = random_element(p, 2, rng);
      REQUIRE(pair(X, x + y, m) == pair(X, x, m) + pair(X, y, m));
      REQUIRE(pair(X, right_mul(x, f, m), m) == mul(pair(X, x, m), f, p));
      REQUIRE(pair(X + Y, x, m) == pair(X, x, m) + pair(Y, x, m));
      REQUIRE(pair(dual_left_mul(f, X, m), x, m) == mul(f, pair(X, x, m), p));
      REQUIRE(pair(dual_right_mul(X, f, m), x, m) == pair(X, left_mul(f, x, m), m));
    }
  }
}

TEST_CASE("dual is a bimodule") {
  const auto& m = qmod();
  const auto& p = m.algebra();
  Rng rng(47);
  for (int t = 0; t < 200; ++t) {
    const auto X = random_dual_element(m, 2, rng);
    const auto f = random_element(p, 2, rng);
    const auto g = random_element(p, 2, rng);
    REQUIRE(dual_right_mul(dual_right_mul(X, f, m), g, m) == dual_right_mul(X, mul(f, g, p), m));
    REQUIRE(dual_left_mul(f, dual_left_mul(g, X, m), m) == dual_left_mul(mul(f, g, p), X, m));
    REQUIRE(dual_left_mul(f, dual_right_mul(X, g, m), m) == dual_right_mul(dual_left_mul(f, X, m), g, m));
  }
}

TEST_CASE("left dual laws over the mirrored module") {
  // op presents a module N over the opposite algebra; laws are read over A.
  const auto op = mirror(qmod());
  const auto& a = qmod().algebra();
  CHECK(mirror(op.algebra()) == a);
  Rng rng(53);
  for (int t = 0; t < 200; ++t) {
    const auto X = random_dual_element(op, 2, rng);
    const auto Y = random_dual_element(op, 2, rng);
    const auto x = random_bim_element(op, 2, rng);
    const auto y = random_bim_element(op, 2, rng);
    const auto f = random_element(a, 2, rng);
    REQUIRE(left_dual::pair(x + y, X, op) == left_dual::pair(x, X, op) + left_dual::pair(y, X, op));
    REQUIRE(left_dual::pair(left_dual::module_left_mul(f, x, op), X, op) == mul(f, left_dual::pair(x, X, op), a));
    REQUIRE(left_dual::pair(x, X + Y, op) == left_dual::pair(x, X, op) + left_dual::pair(x, Y, op));
    REQUIRE(left_dual::pair(x, left_dual::dual_right_mul(X, f, op), op) == mul(left_dual::pair(x, X, op), f, a));
    REQUIRE(left_dual::pair(left_dual::module_right_mul(x, f, op), X, op) ==
            left_dual::pair(x, left_dual::dual_left_mul(f, X, op), op));
  }
}

TEST_CASE("pairing commutes with mirror") {
  const auto& m = qmod();
  const auto op = mirror(m);
  Rng rng(59);
  for (int t = 0; t < 200; ++t) {
    const auto X = random_dual_element(m, 2, rng);
    const auto x = random_bim_element(m, 2, rng);
    REQUIRE(pair(mirror(x, m), mirror(X, m), op) == mirror(pair(X, x, m), m.algebra()));
    REQUIRE(mirror(mirror(X, m), op) == X);
    REQUIRE(mirror(mirror(x, m), op) == x);
  }
}

TEST_CASE("canonical embedding into the double dual") {
  const auto& m = qmod();
  Rng rng(61);
  for (int t = 0; t < 100; ++t) {
    const auto x = random_bim_element(m, 3, rng);
    const auto X = random_dual_element(m, 2, rng);
    const auto xx = canonical_embed(x, m);
    REQUIRE(xx.components() == x.components());
    REQUIRE(identify(xx) == x);
    REQUIRE(pair_dual_dual(X, xx, m) == pair(X, x, m));
  }
}
