#pragma once

#include <string>
#include <utility>
#include <vector>

#include "icf/bigint.hpp"
#include "icf/combinatorics.hpp"
#include "icf/counting.hpp"

namespace icf {

/// A fully populated table of counts plus the independent total it must sum to.
///
/// Grid tables index every tuple in [0, axis_max[0]] x ... ; listed tables (triangulation types,
/// forest characters) carry an explicit index list. Zero cells are stored explicitly.
struct CountTable {
  std::string formula;
  std::vector<std::pair<std::string, std::string>> params;
  std::vector<std::string> index_names;
  std::vector<int> axis_max;  // empty for listed tables
  std::vector<std::pair<std::vector<int>, BigCount>> cells;
  BigCount total;

  bool is_grid() const { return !axis_max.empty(); }
  BigCount cell_sum() const;
  /// Throws std::out_of_range when the index is not part of the table.
  const BigCount& at(const std::vector<int>& index) const;
};

CountTable xi_table(int n, int p);
CountTable alpha_table(int n, const Partition& rho);
/// Formula path of the triangulation census; rows are Lambda_3^+(n) with lambda_3 >= 1.
CountTable triangulation_table(int n);
CountTable forest_table(int n, const ColorSeq& roots);

enum class TableFormat { csv, json };

/// Byte-stable serialization. 2-D grids render as a matrix with a header row of second-index
/// values; everything else as one row per cell. Both end with the total.
std::string render_table(const CountTable& table, TableFormat format);

}  // namespace icf
