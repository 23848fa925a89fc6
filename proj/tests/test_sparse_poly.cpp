#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "icf/sparse_poly.hpp"

using namespace icf;

TEST_CASE("printing and parsing round trip") {
  const char* samples[] = {"0", "7", "x1*y2 + x2*y1 - y1*y2", "2*x1^2*y3 - x2", "-x1 + 3"};
  for (const char* s : samples) {
    const SparsePoly p = parse_poly(s, 6);
    CHECK(parse_poly(to_string(p), 6) == p);
  }
  CHECK(to_string(parse_poly("x1*y2 + x2*y1 - y1*y2", 4)) == "x1*y2 + x2*y1 - y1*y2");
  CHECK(to_string(parse_poly("y1 + x1 + x1", 2)) == "2*x1 + y1");
  CHECK(to_string(parse_poly("x1 - x1", 2)) == "0");
}

TEST_CASE("parser rejects malformed input") {
  CHECK_THROWS(parse_poly("x3", 4));
  CHECK_THROWS(parse_poly("x1 +", 4));
  CHECK_THROWS(parse_poly("x1^", 4));
}

TEST_CASE("odd arity names variables generically") {
  CHECK(variable_name(3, 0) == "v1");
  CHECK(variable_name(4, 2) == "y1");
}

TEST_CASE("ring operations") {
  const SparsePoly x = SparsePoly::variable(2, 0);
  const SparsePoly y = SparsePoly::variable(2, 1);
  const SparsePoly one = SparsePoly::constant(2, 1);
  CHECK(to_string((x + y) * (x - y)) == to_string(x * x - y * y));
  CHECK((x + one).pow(3) == (x + one) * (x + one) * (x + one));
  CHECK((x - x).is_zero());
  CHECK(-(x * BigCount(3)) == x * BigCount(-3));
  CHECK(poly_arith(x, y, PolyOp::sub) == x - y);
  CHECK(((x + y).pow(4)).is_homogeneous(4));
  CHECK_FALSE((x + one).is_homogeneous(1));
  CHECK((x * y + x).total_degree() == 2);
  CHECK_THROWS(x + SparsePoly::variable(3, 0));
}

TEST_CASE("evaluation is a ring homomorphism on random inputs") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> coef(-5, 5);
  std::uniform_int_distribution<int> expo(0, 3);
  auto random_poly = [&] {
    SparsePoly p(3);
    for (int t = 0; t < 5; ++t) p.add_term({expo(rng), expo(rng), expo(rng)}, coef(rng));
    return p;
  };
  for (int trial = 0; trial < 200; ++trial) {
    const SparsePoly a = random_poly();
    const SparsePoly b = random_poly();
    const std::vector<BigCount> point{coef(rng), coef(rng), coef(rng)};
    CHECK((a + b).evaluate(point) == a.evaluate(point) + b.evaluate(point));
    CHECK((a * b).evaluate(point) == a.evaluate(point) * b.evaluate(point));
    CHECK((a - b).evaluate(point) == a.evaluate(point) - b.evaluate(point));
  }
}

TEST_CASE("substitution") {
  const SparsePoly p = parse_poly("x1^2 + x1*y1", 2);
  // x1 -> x1 + y1
  const SparsePoly shifted = substitute(p, {{0, parse_poly("x1 + y1", 2)}});
  CHECK(to_string(shifted) == to_string(parse_poly("x1^2 + 3*x1*y1 + 2*y1^2", 2)));
  CHECK(substitute(p, {}) == p);
}
