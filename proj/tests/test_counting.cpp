#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "icf/combinatorics.hpp"
#include "icf/counting.hpp"
#include "reference_tables.hpp"
#include "series_oracle.hpp"

using namespace icf;

TEST_CASE("headline forest count") {
  CHECK(to_string(count_forests(Composition{11, 7, 8, 6}, ColorSeq(4, {1, 1, 3}))) == "2223687758798502796800");
}

TEST_CASE("small forest and tree counts") {
  CHECK(count_forests(Composition{3, 1, 1}, ColorSeq(3, {1, 1})) == 20);
  CHECK(count_trees(Composition{2, 2, 4}, 3) == 200);
  CHECK(count_trees(Composition{1, 1, 1}, 3) == 3);
  CHECK(count_trees(Composition{0, 5}, 1) == 0);
  CHECK(count_trees(Composition{1}, 1) == 1);
  CHECK(count_trees(Composition{2}, 1) == 0);
  CHECK(count_forests(Composition{3}, ColorSeq(1, {1, 1, 1})) == 1);
  CHECK(count_forests(Composition{0, 0}, ColorSeq(2, {})) == 1);
}

TEST_CASE("closed form agrees with the generating-function oracle") {
  for (int k = 1; k <= 4; ++k) {
    const int max_n = k <= 3 ? 7 : 5;
    const oracle::TreeSeries series(k, max_n);
    for (const auto& lambda : compositions(k, max_n, CompositionMode::at_most)) {
      for (const auto& mult : compositions(k, 3, CompositionMode::at_most)) {
        const ColorSeq roots = ColorSeq::from_multiplicities(mult.parts());
        const std::vector<int> lam(lambda.parts().begin(), lambda.parts().end());
        const std::vector<int> seq(roots.entries().begin(), roots.entries().end());
        const BigCount expected(static_cast<unsigned long>(series.forests(lam, seq)));
        INFO("lambda=", lambda.to_string(), " roots=", roots.to_string());
        CHECK(count_forests(lambda, roots) == expected);
      }
    }
  }
}

TEST_CASE("feasibility") {
  CHECK(feasible(Composition{3, 1, 1}, ColorSeq(3, {1, 1})));
  CHECK_FALSE(feasible(Composition{0, 1}, ColorSeq(2, {1})));
  CHECK_FALSE(feasible(Composition{1, 1}, ColorSeq(2, {1, 1, 2})));
}

TEST_CASE("forest totals") {
  // One single-root forest on 4 vertices with two colors: the alternating path.
  CHECK(count_forests_total(4, 2, 1) == 1);
  for (int k = 1; k <= 3; ++k) {
    for (int n = 1; n <= 7; ++n) {
      for (int m = 1; m <= 3; ++m) {
        BigCount sum = 0;
        const ColorSeq roots(k, std::vector<int>(static_cast<std::size_t>(m), 1));
        for (const auto& lambda : compositions(k, n)) sum += count_forests(lambda, roots);
        CHECK(count_forests_total(n, k, m) == sum);
      }
    }
  }
}

TEST_CASE("symmetries under root reordering and color relabeling") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<int> parts(4);
    for (int& p : parts) p = std::uniform_int_distribution<int>(0, 6)(rng);
    std::vector<int> roots;
    const int m = std::uniform_int_distribution<int>(1, 3)(rng);
    for (int j = 0; j < m; ++j) roots.push_back(std::uniform_int_distribution<int>(1, 4)(rng));
    const BigCount base = count_forests(Composition(parts), ColorSeq(4, roots));
    std::vector<int> shuffled = roots;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    CHECK(count_forests(Composition(parts), ColorSeq(4, shuffled)) == base);
    // Swap colors 1 and 2 everywhere.
    std::vector<int> swapped = parts;
    std::swap(swapped[0], swapped[1]);
    std::vector<int> swapped_roots;
    for (int c : roots) swapped_roots.push_back(c == 1 ? 2 : c == 2 ? 1 : c);
    CHECK(count_forests(Composition(swapped), ColorSeq(4, swapped_roots)) == base);
  }
}

TEST_CASE("xi grids") {
  const auto& grids = reference::xi_grids();
  for (int n = 1; n <= 8; ++n) {
    const auto& grid = grids[static_cast<std::size_t>(n - 1)];
    BigCount sum = 0;
    for (std::size_t a = 0; a < grid.size(); ++a) {
      for (std::size_t b = 0; b < grid.size(); ++b) {
        const int nu1 = static_cast<int>(a);
        const int nu2 = static_cast<int>(b);
        if (nu1 + nu2 >= n) continue;
        const BigCount value = xi(n, Composition{nu1, nu2});
        const long expected = grid[a][b] < 0 ? 0 : grid[a][b];
        CHECK(value == expected);
        sum += value;
      }
    }
    CHECK(sum == fuss_catalan(n, 2, 1));
  }
  CHECK_THROWS_AS(xi(3, Composition{2, 1}), std::domain_error);
}

TEST_CASE("alpha grids") {
  for (const auto& g : reference::alpha_grids()) {
    const Partition rho(g.rho);
    BigCount sum = 0;
    for (int a = 0; a <= 4; ++a) {
      for (int b = 0; b <= 4; ++b) {
        if (a + b > 6) continue;
        const BigCount value = alpha(6, rho, Composition{a, b});
        const long expected = g.cells[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
        CHECK(value == (expected < 0 ? 0 : expected));
        const auto closed = alpha_closed_form(6, rho, Composition{a, b});
        REQUIRE(closed.has_value());
        CHECK(*closed == value);
        sum += value;
      }
    }
    CHECK(sum == 6188);
  }
}

TEST_CASE("triangulation counts by type") {
  for (const auto& row : reference::triangulation_census()) {
    INFO("n=", row.n);
    CHECK(count_triangulations_by_type(row.n, Partition(row.type)) == row.count);
  }
  CHECK(count_triangulations_by_type(6, Partition({4, 1, 1})) == 0);
  for (int n = 3; n <= 16; ++n) {
    BigCount sum = 0;
    for (const auto& lambda : partitions(3, n)) {
      if (lambda[2] > 0) sum += count_triangulations_by_type(n, lambda);
    }
    CHECK(sum == fuss_catalan(n - 2, 2, 1));
  }
}

TEST_CASE("color sequences") {
  const ColorSeq c(3, {1, 3, 1});
  CHECK(c.m() == 3);
  CHECK(c.multiplicity(1) == 2);
  CHECK(c.without_last().to_string() == "1,3");
  CHECK(c.appended(std::vector<int>{2}).m() == 4);
  CHECK_THROWS_AS(ColorSeq(2, {3}), std::domain_error);
  CHECK(ColorSeq::from_multiplicities(std::vector<int>{2, 0, 1}) == ColorSeq(3, {1, 1, 3}));
}
