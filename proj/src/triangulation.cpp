#include "icf/triangulation.hpp"

#include "json.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <stdexcept>

namespace icf {

namespace {

bool crosses(const Triangulation::Diagonal& d, const Triangulation::Diagonal& e) {
  const auto [a, b] = d;
  const auto [c, f] = e;
  return (a < c && c < b && b < f) || (c < a && a < f && f < b);
}

}  // namespace

Triangulation::Triangulation(int n, std::vector<Diagonal> diagonals) : n_(n), diagonals_(std::move(diagonals)) {
  if (n < 3) throw std::domain_error("Triangulation: n must be >= 3");
  if (static_cast<int>(diagonals_.size()) != n - 3) {
    throw std::domain_error("Triangulation: expected exactly n-3 diagonals");
  }
  for (auto& d : diagonals_) {
    if (d.first > d.second) std::swap(d.first, d.second);
    const auto [a, b] = d;
    if (a < 0 || b >= n) throw std::domain_error("Triangulation: vertex index out of range");
    if (b - a < 2 || (a == 0 && b == n - 1)) throw std::domain_error("Triangulation: not a diagonal");
  }
  std::sort(diagonals_.begin(), diagonals_.end());
  if (std::adjacent_find(diagonals_.begin(), diagonals_.end()) != diagonals_.end()) {
    throw std::domain_error("Triangulation: repeated diagonal");
  }
  for (std::size_t i = 0; i < diagonals_.size(); ++i) {
    for (std::size_t j = i + 1; j < diagonals_.size(); ++j) {
      if (crosses(diagonals_[i], diagonals_[j])) throw std::domain_error("Triangulation: crossing diagonals");
    }
  }
  adjacent_.assign(static_cast<std::size_t>(n), std::vector<bool>(static_cast<std::size_t>(n), false));
  auto link = [this](int u, int v) {
    adjacent_[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = true;
    adjacent_[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] = true;
  };
  for (int v = 0; v < n; ++v) link(v, (v + 1) % n);
  for (const auto& [a, b] : diagonals_) link(a, b);
}

bool Triangulation::has_edge(int u, int v) const {
  return adjacent_.at(static_cast<std::size_t>(u % n_)).at(static_cast<std::size_t>(v % n_));
}

int Triangulation::apex(int a, int b) const {
  for (int c = a + 1; c < b; ++c) {
    if (has_edge(a, c) && has_edge(c, b)) return c;
  }
  throw std::logic_error("Triangulation: region without an apex");
}

std::vector<std::array<int, 3>> Triangulation::triangles() const {
  std::vector<std::array<int, 3>> out;
  std::vector<std::pair<int, int>> stack{{1, n_}};
  while (!stack.empty()) {
    const auto [a, b] = stack.back();
    stack.pop_back();
    const int c = apex(a, b);
    std::array<int, 3> tri{a, c, b % n_};
    std::sort(tri.begin(), tri.end());
    out.push_back(tri);
    if (b - c >= 2) stack.emplace_back(c, b);
    if (c - a >= 2) stack.emplace_back(a, c);
  }
  return out;
}

namespace {

void triangulate_rec(int n, std::vector<std::pair<int, int>>& pending, std::vector<Triangulation::Diagonal>& diagonals,
                     const std::function<void(const Triangulation&)>& visit) {
  if (pending.empty()) {
    visit(Triangulation(n, diagonals));
    return;
  }
  const auto [a, b] = pending.back();
  pending.pop_back();
  for (int c = a + 1; c < b; ++c) {
    const std::size_t saved_pending = pending.size();
    const std::size_t saved_diagonals = diagonals.size();
    if (b - c >= 2) {
      diagonals.emplace_back(c, b % n);
      pending.emplace_back(c, b);
    }
    if (c - a >= 2) {
      diagonals.emplace_back(a, c);
      pending.emplace_back(a, c);
    }
    triangulate_rec(n, pending, diagonals, visit);
    pending.resize(saved_pending);
    diagonals.resize(saved_diagonals);
  }
  pending.emplace_back(a, b);
}

}  // namespace

void for_each_triangulation(int n, const std::function<void(const Triangulation&)>& visit) {
  if (n < 3) throw std::domain_error("enumerate_triangulations: n must be >= 3");
  std::vector<std::pair<int, int>> pending{{1, n}};
  std::vector<Triangulation::Diagonal> diagonals;
  triangulate_rec(n, pending, diagonals, visit);
}

std::vector<Triangulation> enumerate_triangulations(int n) {
  std::vector<Triangulation> out;
  for_each_triangulation(n, [&](const Triangulation& t) { out.push_back(t); });
  return out;
}

namespace {

Partition census_type(const std::vector<int>& colors) {
  std::vector<int> counts(3, 0);
  for (int c : colors) ++counts[static_cast<std::size_t>(c - 1)];
  std::sort(counts.begin(), counts.end(), std::greater<>());
  return Partition(counts);
}

}  // namespace

TriColoring proper_three_coloring(const Triangulation& t) {
  const int n = t.n();
  std::vector<int> colors(static_cast<std::size_t>(n), 0);
  colors[0] = 1;
  colors[1] = 2;
  auto col = [&](int v) -> int& { return colors[static_cast<std::size_t>(v % n)]; };
  std::vector<std::pair<int, int>> stack{{1, n}};
  while (!stack.empty()) {
    const auto [a, b] = stack.back();
    stack.pop_back();
    const int c = t.apex(a, b);
    col(c) = 6 - col(a) - col(b);
    if (c - a >= 2) stack.emplace_back(a, c);
    if (b - c >= 2) stack.emplace_back(c, b);
  }
  Partition type = census_type(colors);
  return {std::move(colors), std::move(type)};
}

bool is_proper_coloring(const Triangulation& t, const std::vector<int>& colors) {
  const int n = t.n();
  if (static_cast<int>(colors.size()) != n) return false;
  for (int u = 0; u < n; ++u) {
    if (colors[static_cast<std::size_t>(u)] < 1 || colors[static_cast<std::size_t>(u)] > 3) return false;
    for (int v = u + 1; v < n; ++v) {
      if (t.has_edge(u, v) && colors[static_cast<std::size_t>(u)] == colors[static_cast<std::size_t>(v)]) return false;
    }
  }
  return true;
}

Partition type_of(const Triangulation& t) { return proper_three_coloring(t).type; }

bool is_equitable(const Triangulation& t) {
  const Partition type = type_of(t);
  return type[0] - type[2] <= 1;
}

namespace {

ColoredTree chi_rec(const Triangulation& t, const std::vector<int>& colors, int a, int b) {
  const int c = t.apex(a, b);
  std::vector<ColoredTree> children;
  if (c - a >= 2) children.push_back(chi_rec(t, colors, a, c));
  if (b - c >= 2) children.push_back(chi_rec(t, colors, c, b));
  return ColoredTree(colors[static_cast<std::size_t>(c % t.n())], std::move(children));
}

}  // namespace

ColoredTree chi(const Triangulation& t) {
  const auto coloring = proper_three_coloring(t);
  return chi_rec(t, coloring.colors, 1, t.n());
}

namespace {

struct ChiInverseBuilder {
  int n;
  std::vector<int> colors;
  std::vector<Triangulation::Diagonal> diagonals;

  int& col(int v) { return colors[static_cast<std::size_t>(v % n)]; }

  // `node` is the triangle on region edge (a, b).
  void build(const ColoredTree& node, int a, int b) {
    const int apex_color = 6 - col(a) - col(b);
    if (node.root_color() != apex_color) throw std::domain_error("chi_inverse: tree coloring is inconsistent");
    // The child across (a, c) avoids col(a) and the apex color, so it carries col(b); symmetrically
    // the child across (c, b) carries col(a).
    const ColoredTree* left = node.child(col(b));
    const ColoredTree* right = node.child(col(a));
    if (node.children().size() != static_cast<std::size_t>((left != nullptr) + (right != nullptr))) {
      throw std::domain_error("chi_inverse: child color outside 1..3");
    }
    const int c = a + 1 + (left ? static_cast<int>(left->size()) : 0);
    if (b - c != 1 + (right ? static_cast<int>(right->size()) : 0)) {
      throw std::logic_error("chi_inverse: region size mismatch");
    }
    col(c) = apex_color;
    if (left) {
      diagonals.emplace_back(a, c);
      build(*left, a, c);
    }
    if (right) {
      diagonals.emplace_back(c, b % n);
      build(*right, c, b);
    }
  }
};

}  // namespace

Triangulation chi_inverse(const ColoredTree& tree) {
  if (tree.root_color() != 3) throw std::domain_error("chi_inverse: root must be colored 3");
  if (tree.max_color() > 3) throw std::domain_error("chi_inverse: tree must use colors 1..3");
  const int n = static_cast<int>(tree.size()) + 2;
  ChiInverseBuilder builder{n, std::vector<int>(static_cast<std::size_t>(n), 0), {}};
  builder.col(0) = 1;
  builder.col(1) = 2;
  builder.build(tree, 1, n);
  return Triangulation(n, std::move(builder.diagonals));
}

CountTable census_by_enumeration(int n, int max_n) {
  if (n > max_n) {
    throw SizeGuardError("census guard: n = " + std::to_string(n) + " exceeds " + std::to_string(max_n));
  }
  CountTable table = triangulation_table(n);
  table.formula = "tri-enumerated";
  table.cells.clear();
  std::map<std::vector<int>, BigCount> bins;
  for_each_triangulation(n, [&](const Triangulation& t) {
    const Partition type = type_of(t);
    ++bins[std::vector<int>(type.parts().begin(), type.parts().end())];
  });
  // Same row order as the formula table: lexicographically decreasing.
  for (auto it = bins.rbegin(); it != bins.rend(); ++it) {
    if (it->first[2] == 0) throw std::logic_error("census: triangulation type with an empty color class");
    table.cells.emplace_back(it->first, it->second);
  }
  return table;
}

std::string serialize_triangulation(const Triangulation& t, TriangulationFormat format) {
  const auto coloring = proper_three_coloring(t);
  switch (format) {
    case TriangulationFormat::text: {
      std::string out = "n=" + std::to_string(t.n()) + " diagonals=";
      for (std::size_t i = 0; i < t.diagonals().size(); ++i) {
        if (i) out += ',';
        out += std::to_string(t.diagonals()[i].first) + '-' + std::to_string(t.diagonals()[i].second);
      }
      out += " colors=";
      for (std::size_t i = 0; i < coloring.colors.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(coloring.colors[i]);
      }
      out += " type=" + coloring.type.to_string();
      return out;
    }
    case TriangulationFormat::json: {
      nlohmann::ordered_json j;
      j["n"] = t.n();
      j["diagonals"] = nlohmann::ordered_json::array();
      for (const auto& [a, b] : t.diagonals()) j["diagonals"].push_back({a, b});
      j["colors"] = coloring.colors;
      j["type"] = std::vector<int>(coloring.type.parts().begin(), coloring.type.parts().end());
      return j.dump();
    }
    case TriangulationFormat::dot: {
      std::string out = "graph triangulation {\n";
      for (int v = 0; v < t.n(); ++v) {
        out += "  v" + std::to_string(v) + " [label=\"" + std::to_string(v) + ":" +
               std::to_string(coloring.colors[static_cast<std::size_t>(v)]) + "\"];\n";
      }
      for (int v = 0; v < t.n(); ++v) {
        out += "  v" + std::to_string(v) + " -- v" + std::to_string((v + 1) % t.n()) + ";\n";
      }
      for (const auto& [a, b] : t.diagonals()) {
        out += "  v" + std::to_string(a) + " -- v" + std::to_string(b) + " [style=dashed];\n";
      }
      out += "}\n";
      return out;
    }
  }
  return {};
}

}  // namespace icf
