#include "icf/count_table.hpp"

#include "json.hpp"

#include <algorithm>
#include <stdexcept>

namespace icf {

BigCount CountTable::cell_sum() const {
  BigCount sum = 0;
  for (const auto& [index, value] : cells) sum += value;
  return sum;
}

const BigCount& CountTable::at(const std::vector<int>& index) const {
  for (const auto& [idx, value] : cells) {
    if (idx == index) return value;
  }
  throw std::out_of_range("CountTable: index not in table");
}

namespace {

template <typename Cell>
void fill_grid(CountTable& table, int p, int max, Cell&& cell) {
  table.axis_max.assign(static_cast<std::size_t>(p), max);
  for (const auto& c : compositions(p, p * max, CompositionMode::at_most)) {
    if (std::any_of(c.parts().begin(), c.parts().end(), [max](int v) { return v > max; })) continue;
    table.cells.emplace_back(std::vector<int>(c.parts().begin(), c.parts().end()), cell(c));
  }
}

std::vector<std::string> indexed_names(const std::string& stem, int count) {
  std::vector<std::string> out;
  for (int i = 1; i <= count; ++i) out.push_back(stem + std::to_string(i));
  return out;
}

}  // namespace

CountTable xi_table(int n, int p) {
  if (n < 1) throw std::domain_error("xi table: n must be positive");
  if (p < 1) throw std::domain_error("xi table: p must be positive");
  CountTable t;
  t.formula = "xi";
  t.params = {{"n", std::to_string(n)}, {"p", std::to_string(p)}};
  t.index_names = indexed_names("nu", p);
  fill_grid(t, p, n / 2, [n](const Composition& nu) { return nu.total() < n ? xi(n, nu) : BigCount(0); });
  t.total = fuss_catalan(n, p, 1);
  return t;
}

CountTable alpha_table(int n, const Partition& rho) {
  const int p = rho.k() - 1;
  const int ell = rho.total();
  if (n < 0) throw std::domain_error("alpha table: n must be nonnegative");
  if (p < 1) throw std::domain_error("alpha table: rho needs at least 2 parts");
  if (ell < 1) throw std::domain_error("alpha table: |rho| must be positive");
  CountTable t;
  t.formula = "alpha";
  t.params = {{"n", std::to_string(n)}, {"p", std::to_string(p)}, {"rho", rho.to_string()}};
  t.index_names = indexed_names("mu", p);
  fill_grid(t, p, std::min(n, (n + ell) / 2),
            [&](const Composition& mu) { return mu.total() <= n ? alpha(n, rho, mu) : BigCount(0); });
  t.total = fuss_catalan(n, p, static_cast<long>(p) * ell);
  return t;
}

CountTable triangulation_table(int n) {
  if (n < 3) throw std::domain_error("triangulation table: n must be >= 3");
  CountTable t;
  t.formula = "tri";
  t.params = {{"n", std::to_string(n)}};
  t.index_names = indexed_names("lambda", 3);
  for (const auto& lambda : partitions(3, n)) {
    if (lambda[2] == 0) continue;
    BigCount count = count_triangulations_by_type(n, lambda);
    // Types no triangulation realizes are left out, as in the usual census listing.
    if (count != 0) t.cells.emplace_back(std::vector<int>(lambda.parts().begin(), lambda.parts().end()), std::move(count));
  }
  t.total = fuss_catalan(n - 2, 2, 1);
  return t;
}

CountTable forest_table(int n, const ColorSeq& roots) {
  if (n < 1) throw std::domain_error("forest table: n must be positive");
  if (roots.m() < 1) throw std::domain_error("forest table: need at least one root");
  CountTable t;
  t.formula = "forest";
  t.params = {{"n", std::to_string(n)}, {"k", std::to_string(roots.k())}, {"roots", roots.to_string()}};
  t.index_names = indexed_names("lambda", roots.k());
  for (const auto& lambda : compositions(roots.k(), n)) {
    t.cells.emplace_back(std::vector<int>(lambda.parts().begin(), lambda.parts().end()), count_forests(lambda, roots));
  }
  t.total = count_forests_total(n, roots.k(), roots.m());
  return t;
}

namespace {

std::string join_index(const std::vector<int>& idx) {
  std::string out;
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(idx[i]);
  }
  return out;
}

std::string render_csv(const CountTable& t) {
  std::string out;
  if (t.is_grid() && t.axis_max.size() == 2) {
    const int rows = t.axis_max[0];
    const int cols = t.axis_max[1];
    out += t.index_names[0] + "\\" + t.index_names[1];
    for (int c = 0; c <= cols; ++c) out += ',' + std::to_string(c);
    out += '\n';
    // Cells are stored in lexicographic index order, i.e. row-major.
    std::size_t pos = 0;
    for (int r = 0; r <= rows; ++r) {
      out += std::to_string(r);
      for (int c = 0; c <= cols; ++c) out += ',' + to_string(t.cells[pos++].second);
      out += '\n';
    }
  } else {
    for (const auto& name : t.index_names) out += name + ',';
    out += "count\n";
    for (const auto& [idx, value] : t.cells) out += join_index(idx) + ',' + to_string(value) + '\n';
  }
  out += "total," + to_string(t.total) + '\n';
  return out;
}

std::string render_json(const CountTable& t) {
  nlohmann::ordered_json j;
  j["formula"] = t.formula;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  for (const auto& [key, value] : t.params) params[key] = value;
  j["params"] = params;
  nlohmann::ordered_json axes = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < t.index_names.size(); ++i) {
    nlohmann::ordered_json axis;
    axis["name"] = t.index_names[i];
    if (t.is_grid()) {
      axis["min"] = 0;
      axis["max"] = t.axis_max[i];
    }
    axes.push_back(axis);
  }
  j["axes"] = axes;
  nlohmann::ordered_json cells = nlohmann::ordered_json::object();
  for (const auto& [idx, value] : t.cells) cells[join_index(idx)] = to_string(value);
  j["cells"] = cells;
  j["total"] = to_string(t.total);
  return j.dump(2) + '\n';
}

}  // namespace

std::string render_table(const CountTable& table, TableFormat format) {
  return format == TableFormat::csv ? render_csv(table) : render_json(table);
}

}  // namespace icf
