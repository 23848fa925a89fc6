#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "icf/combinatorics.hpp"
#include "icf/counting.hpp"
#include "icf/triangulation.hpp"
#include "json.hpp"
#include "reference_tables.hpp"

using namespace icf;

namespace {

// Hand-propagated coloring oracle: repeatedly color any vertex that closes a triangle with two
// colored vertices, independent of the library's region walk.
std::vector<int> propagate_colors(const Triangulation& t) {
  std::vector<int> colors(static_cast<std::size_t>(t.n()), 0);
  colors[0] = 1;
  colors[1] = 2;
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& tri : t.triangles()) {
      int uncolored = -1, seen = 0, missing_sum = 6;
      for (int v : tri) {
        if (colors[static_cast<std::size_t>(v)] == 0) {
          uncolored = v;
        } else {
          ++seen;
          missing_sum -= colors[static_cast<std::size_t>(v)];
        }
      }
      if (seen == 2) {
        colors[static_cast<std::size_t>(uncolored)] = missing_sum;
        changed = true;
      }
    }
  }
  return colors;
}

Triangulation octagon_example() { return Triangulation(8, {{0, 5}, {1, 5}, {1, 3}, {3, 5}, {5, 7}}); }

}  // namespace

TEST_CASE("triangulation counts are Catalan numbers") {
  for (int n = 3; n <= 11; ++n) {
    CHECK(BigCount(static_cast<unsigned long>(enumerate_triangulations(n).size())) == fuss_catalan(n - 2, 2, 1));
  }
}

TEST_CASE("validation") {
  CHECK_THROWS(Triangulation(5, {{0, 2}, {1, 3}}));  // crossing
  CHECK_THROWS(Triangulation(5, {{0, 2}}));          // too few
  CHECK_THROWS(Triangulation(5, {{0, 1}, {0, 2}}));  // side, not diagonal
  CHECK_THROWS(Triangulation(2, {}));
  CHECK_NOTHROW(Triangulation(3, {}));
}

TEST_CASE("colorings match hand propagation") {
  for (int n = 3; n <= 10; ++n) {
    for_each_triangulation(n, [&](const Triangulation& t) {
      const auto coloring = proper_three_coloring(t);
      CHECK(coloring.colors == propagate_colors(t));
      CHECK(is_proper_coloring(t, coloring.colors));
    });
  }
}

TEST_CASE("octagon example: coloring, dual tree and inverse") {
  const Triangulation t = octagon_example();
  const auto coloring = proper_three_coloring(t);
  CHECK(coloring.colors == std::vector<int>{1, 2, 3, 1, 2, 3, 1, 2});
  CHECK(coloring.type == Partition({3, 3, 2}));
  const ColoredTree tree = chi(t);
  CHECK(to_text(tree) == "3(1(2()3())2(1()))");
  CHECK(chi_inverse(tree) == t);
}

TEST_CASE("dual tree of the triangle is a bare root") {
  const Triangulation t(3, {});
  CHECK(to_text(chi(t)) == "3()");
  CHECK(chi_inverse(ColoredTree(3)) == t);
  CHECK_THROWS_AS(chi_inverse(ColoredTree(1)), std::domain_error);
}

TEST_CASE("chi round trips and bridges characters") {
  for (int n = 3; n <= 9; ++n) {
    std::set<std::string> images;
    const auto all = enumerate_triangulations(n);
    for (const auto& t : all) {
      const ColoredTree tree = chi(t);
      images.insert(to_text(tree));
      CHECK(chi_inverse(tree) == t);
      std::vector<int> census(3, 0);
      for (int c : proper_three_coloring(t).colors) ++census[static_cast<std::size_t>(c - 1)];
      CHECK(tree.character(3) == Composition(census) - Composition{1, 1, 0});
    }
    CHECK(images.size() == all.size());
  }
}

TEST_CASE("equitable triangulations of the hexagon") {
  int equitable = 0;
  for (const auto& t : enumerate_triangulations(6)) equitable += is_equitable(t) ? 1 : 0;
  CHECK(equitable == 8);
  CHECK(is_equitable(Triangulation(3, {})));
  CHECK_FALSE(is_equitable(Triangulation(6, {{0, 2}, {0, 3}, {0, 4}})));
}

TEST_CASE("enumerated census matches the formula") {
  for (int n = 3; n <= 10; ++n) {
    const CountTable brute = census_by_enumeration(n);
    const CountTable formula = triangulation_table(n);
    CHECK(brute.cells == formula.cells);
    CHECK(brute.cell_sum() == formula.total);
  }
  const CountTable six = census_by_enumeration(6);
  CHECK(six.at({3, 2, 1}) == 6);
  CHECK(six.at({2, 2, 2}) == 8);
  CHECK_THROWS_AS(census_by_enumeration(15), SizeGuardError);
}

TEST_CASE("serializations") {
  const Triangulation t = octagon_example();
  const std::string text = serialize_triangulation(t, TriangulationFormat::text);
  CHECK(text.find("n=8") == 0);
  CHECK(text.find("type=3,3,2") != std::string::npos);
  const auto j = nlohmann::json::parse(serialize_triangulation(t, TriangulationFormat::json));
  CHECK(j["diagonals"].size() == 5);
  CHECK(serialize_triangulation(t, TriangulationFormat::dot).rfind("graph", 0) == 0);
}
