#pragma once

#include <array>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "icf/combinatorics.hpp"
#include "icf/count_table.hpp"
#include "icf/enumeration.hpp"
#include "icf/forest.hpp"

namespace icf {

/// A triangulation of the convex n-gon with vertices 0..n-1 counterclockwise. The base edge is
/// {0,1}: vertex 0 is its left endpoint, vertex 1 its right endpoint.
class Triangulation {
 public:
  using Diagonal = std::pair<int, int>;

  /// Validates n >= 3, exactly n-3 proper diagonals (a < b, not polygon sides) and no crossings.
  Triangulation(int n, std::vector<Diagonal> diagonals);

  int n() const { return n_; }
  const std::vector<Diagonal>& diagonals() const { return diagonals_; }
  bool has_edge(int u, int v) const;
  /// n-2 vertex triples (sorted), base triangle first, then depth-first from the base edge.
  std::vector<std::array<int, 3>> triangles() const;

  friend bool operator==(const Triangulation& a, const Triangulation& b) {
    return a.n_ == b.n_ && a.diagonals_ == b.diagonals_;
  }

  /// Apex of the triangle on the region edge (a, b), a < b <= n, where b = n stands for vertex 0.
  int apex(int a, int b) const;

 private:
  int n_;
  std::vector<Diagonal> diagonals_;
  std::vector<std::vector<bool>> adjacent_;
};

struct TriColoring {
  std::vector<int> colors;  // colors[v] in {1,2,3}; colors[0] = 1, colors[1] = 2
  Partition type;
};

void for_each_triangulation(int n, const std::function<void(const Triangulation&)>& visit);
std::vector<Triangulation> enumerate_triangulations(int n);

/// The unique proper 3-coloring with vertex 0 colored 1 and vertex 1 colored 2.
TriColoring proper_three_coloring(const Triangulation& t);
bool is_proper_coloring(const Triangulation& t, const std::vector<int>& colors);
Partition type_of(const Triangulation& t);
bool is_equitable(const Triangulation& t);

/// Dual tree rooted at the base triangle; each node carries the color of its triangle's apex
/// (the vertex opposite the edge it is entered through), so the root is colored 3.
ColoredTree chi(const Triangulation& t);

/// Rebuilds the triangulation from its dual tree; root must be colored 3 and colors lie in 1..3.
Triangulation chi_inverse(const ColoredTree& tree);

/// Brute-force census: enumerate all triangulations and bin them by type. Same shape as
/// triangulation_table(n).
CountTable census_by_enumeration(int n, int max_n = 14);

enum class TriangulationFormat { text, json, dot };
std::string serialize_triangulation(const Triangulation& t, TriangulationFormat format);

}  // namespace icf
