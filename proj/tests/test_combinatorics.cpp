#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "icf/combinatorics.hpp"

using namespace icf;

namespace {

BigCount factorial(long n) {
  BigCount out = 1;
  for (long i = 2; i <= n; ++i) out *= i;
  return out;
}

// Independent oracle: n!/(k!(n-k)!).
BigCount binomial_by_factorials(long n, long k) {
  if (k < 0 || k > n) return 0;
  return factorial(n) / (factorial(k) * factorial(n - k));
}

}  // namespace

TEST_CASE("binomial matches factorial formula") {
  for (long a = 0; a <= 30; ++a) {
    for (long b = -2; b <= a + 2; ++b) CHECK(binomial(a, b) == binomial_by_factorials(a, b));
  }
  CHECK(binomial(-1, 0) == 0);
  CHECK(binomial(3, -1) == 0);
}

TEST_CASE("composition arithmetic") {
  const Composition a{3, 1, 1};
  CHECK(a.k() == 3);
  CHECK(a.total() == 5);
  CHECK(a.at_color(1) == 3);
  CHECK(a + Composition::unit(3, 2) == Composition{3, 2, 1});
  CHECK(a - Composition::unit(3, 1) == Composition{2, 1, 1});
  CHECK_THROWS_AS(a - Composition::unit(3, 2) - Composition::unit(3, 2), std::domain_error);
  CHECK(a.to_string() == "3,1,1");
  CHECK(a.is_weakly_decreasing());
  CHECK_FALSE(Composition({1, 2}).is_weakly_decreasing());
  CHECK(Composition::zero(4).is_zero());
}

TEST_CASE("partition rejects increasing parts") {
  CHECK_THROWS(Partition({1, 2}));
  CHECK_NOTHROW(Partition({2, 2, 0}));
}

TEST_CASE("composition ranges have the stars-and-bars size and are lexicographic") {
  for (int k = 1; k <= 4; ++k) {
    for (int n = 0; n <= 7; ++n) {
      const auto exact = all_compositions(k, n);
      CHECK(BigCount(static_cast<unsigned long>(exact.size())) == binomial_by_factorials(n + k - 1, k - 1));
      for (std::size_t i = 1; i < exact.size(); ++i) CHECK(exact[i - 1] < exact[i]);
      for (const auto& c : exact) CHECK(c.total() == n);

      const auto at_most = all_compositions(k, n, CompositionMode::at_most);
      CHECK(BigCount(static_cast<unsigned long>(at_most.size())) == binomial_by_factorials(n + k, k));
      std::set<Composition> distinct(at_most.begin(), at_most.end());
      CHECK(distinct.size() == at_most.size());
      for (const auto& c : at_most) CHECK(c.total() <= n);

      const auto less = all_compositions(k, n, CompositionMode::less_than);
      CHECK(less.size() + exact.size() == at_most.size());
    }
  }
}

TEST_CASE("compositions iterate lazily") {
  int seen = 0;
  for (const auto& c : compositions(3, 2)) {
    (void)c;
    ++seen;
  }
  CHECK(seen == 6);
  CHECK(compositions(2, 0).begin() != std::default_sentinel);
}

TEST_CASE("partitions are listed in decreasing lexicographic order") {
  const auto parts = partitions(3, 6);
  REQUIRE(parts.size() == 7);
  CHECK(parts.front() == Partition({6, 0, 0}));
  CHECK(parts.back() == Partition({2, 2, 2}));
  for (std::size_t i = 1; i < parts.size(); ++i) CHECK(parts[i].composition() < parts[i - 1].composition());
}

TEST_CASE("orbit sizes") {
  CHECK(orbit_size(Partition({3, 2, 1})) == 6);
  CHECK(orbit_size(Partition({2, 2, 1})) == 3);
  CHECK(orbit_size(Partition({2, 2, 2})) == 1);
  CHECK(orbit_size(Partition({3, 0, 0})) == 3);
}

TEST_CASE("fuss-catalan numbers") {
  const long catalan[] = {1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862};
  for (int n = 0; n < 10; ++n) CHECK(fuss_catalan(n, 2, 1) == catalan[n]);
  CHECK(fuss_catalan(6, 2, 6) == 6188);
  CHECK(fuss_catalan(0, 3, 5) == 1);
  CHECK_THROWS_AS(fuss_catalan(3, 2, 0), std::domain_error);
  // Ternary trees: 1, 1, 3, 12, 55.
  CHECK(fuss_catalan_series(3, 1, 5) == std::vector<BigCount>{1, 1, 3, 12, 55});
}

TEST_CASE("fuss-catalan recurrence and series powers") {
  for (int p = 1; p <= 4; ++p) {
    CHECK(fuss_catalan_recurrence(p, 11) == fuss_catalan_series(p, 1, 11));
    const auto base = fuss_catalan_series(p, 1, 12);
    for (int r = 1; r <= 5; ++r) CHECK(series_power(base, r, 12) == fuss_catalan_series(p, r, 12));
  }
}

TEST_CASE("exact division") {
  CHECK(exact_div(BigCount(12), BigCount(4), "t") == 3);
  CHECK_THROWS_AS(exact_div(BigCount(7), BigCount(2), "t"), std::logic_error);
  CHECK_THROWS_AS(exact_div(BigCount(7), BigCount(0), "t"), std::logic_error);
}

TEST_CASE("integer list parsing") {
  CHECK(parse_int_list("3,1,1") == std::vector<int>{3, 1, 1});
  CHECK(parse_int_list(" 2 , 0 ") == std::vector<int>{2, 0});
  CHECK_THROWS(parse_int_list("1,,2"));
  CHECK_THROWS(parse_int_list("a"));
}
