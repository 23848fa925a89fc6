#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "icf/keypoly.hpp"
#include "icf/sparse_poly.hpp"

using namespace icf;

TEST_CASE("small key polynomials in canonical print") {
  // The one-color case degenerates: every summand cancels.
  CHECK(to_string(build_pk(1)) == "0");
  CHECK(to_string(build_pk(2)) == "x1*y2 + x2*y1 - y1*y2");
  const SparsePoly p3 = build_pk(3);
  CHECK(p3.size() == 25);
  CHECK(p3 == parse_poly(
                  "x1^2*y2 + x1^2*y3 + x2^2*y1 + x2^2*y3 + x3^2*y1 + x3^2*y2 + 2*y1*y2*y3"
                  " + x1*x2*y1 + x1*x2*y2 + 2*x1*x2*y3 + x1*x3*y1 + 2*x1*x3*y2 + x1*x3*y3"
                  " + 2*x2*x3*y1 + x2*x3*y2 + x2*x3*y3 - x1*y1*y2 - x1*y1*y3 - 2*x1*y2*y3"
                  " - x2*y1*y2 - 2*x2*y1*y3 - x2*y2*y3 - 2*x3*y1*y2 - x3*y1*y3 - x3*y2*y3",
                  6));
}

TEST_CASE("key polynomials are homogeneous of degree k") {
  for (int k = 1; k <= 6; ++k) {
    const SparsePoly pk = build_pk(k);
    CHECK(pk.num_vars() == 2 * k);
    CHECK(pk.is_homogeneous(k));
  }
}

TEST_CASE("direct evaluation agrees with the expansion") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> dist(-9, 9);
  for (int k = 1; k <= 5; ++k) {
    const SparsePoly pk = build_pk(k);
    for (int trial = 0; trial < 40; ++trial) {
      std::vector<BigCount> xs, ys;
      for (int i = 0; i < k; ++i) xs.emplace_back(dist(rng));
      for (int i = 0; i < k; ++i) ys.emplace_back(dist(rng));
      std::vector<BigCount> point = xs;
      point.insert(point.end(), ys.begin(), ys.end());
      CHECK(eval_pk(k, xs, ys) == pk.evaluate(point));
    }
  }
}

TEST_CASE("identities hold symbolically") {
  for (int k = 2; k <= 5; ++k) {
    CHECK(check_pk_identity(k, PkIdentity::vanishes_without_roots));
    CHECK(check_pk_identity(k, PkIdentity::two_color_restriction));
    CHECK(check_pk_identity(k, PkIdentity::color_symmetry));
  }
  for (int k = 2; k <= 3; ++k) CHECK(check_pk_identity(k, PkIdentity::shift_recurrence));
  const auto sides = shift_recurrence_sides(2);
  CHECK(sides.lhs == sides.rhs);
}

TEST_CASE("shift polynomial preconditions") {
  CHECK_THROWS_AS(build_pk_shift(3, {3}), std::domain_error);
  CHECK_THROWS_AS(build_pk_shift(3, {0}), std::domain_error);
  CHECK_NOTHROW(build_pk_shift(3, {1, 2}));
}

TEST_CASE("identity labels") {
  CHECK(parse_pk_identity("iv") == PkIdentity::shift_recurrence);
  CHECK(std::string(label(PkIdentity::color_symmetry)) == "iii");
  CHECK_THROWS(parse_pk_identity("v"));
}

TEST_CASE("z-variable form keeps degree") {
  const SparsePoly z = pk_in_z_variables(3);
  CHECK(z.is_homogeneous(3));
  CHECK(z.size() > 0);
}
