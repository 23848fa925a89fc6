#pragma once

#include <functional>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "icf/bigint.hpp"
#include "icf/combinatorics.hpp"
#include "icf/counting.hpp"
#include "icf/forest.hpp"

namespace icf {

/// Thrown when a request exceeds an explicit enumeration size guard.
class SizeGuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct EnumerationLimits {
  int max_vertices = 12;
};

using TreeVisitor = std::function<void(const ColoredTree&)>;
using ForestVisitor = std::function<void(const ColoredForest&)>;

/// Visits one canonical tree per isomorphism class with character lambda and root color `root`.
void for_each_tree(const Composition& lambda, int root, const TreeVisitor& visit, EnumerationLimits limits = {});
std::vector<ColoredTree> enumerate_trees(const Composition& lambda, int root, EnumerationLimits limits = {});

/// Visits one canonical forest per class: every split of lambda into per-root characters, then the
/// product of the per-root tree streams.
void for_each_forest(const Composition& lambda, const ColorSeq& roots, const ForestVisitor& visit,
                     EnumerationLimits limits = {});
std::vector<ColoredForest> enumerate_forests(const Composition& lambda, const ColorSeq& roots,
                                             EnumerationLimits limits = {});

/// Counts classes by memoized convolution over (character, root color) states, never building trees.
/// Independent of the closed forms in counting.hpp.
class BruteCounter {
 public:
  BigCount trees(const Composition& lambda, int root);
  BigCount forests(const Composition& lambda, const ColorSeq& roots);

 private:
  BigCount trees_or_empty(const Composition& lambda, int root);
  BigCount child_convolution(const Composition& remaining, const std::vector<int>& colors, std::size_t next);
  BigCount root_convolution(const Composition& remaining, const ColorSeq& roots, std::size_t next);

  std::map<std::pair<Composition, int>, BigCount> memo_;
};

BigCount brute_count(const Composition& lambda, const ColorSeq& roots, EnumerationLimits limits = {});

/// Removes the last root; its children become new trailing roots in increasing color order.
/// Returns the new forest and the set of those child colors (sorted).
std::pair<ColoredForest, std::vector<int>> delete_last_root(const ColoredForest& f);

/// Inverse of delete_last_root: a new root of color `color` adopts the last |S| roots, whose colors
/// must be exactly `child_colors` in increasing order.
ColoredForest attach_root(const ColoredForest& f, const std::vector<int>& child_colors, int color);

/// The child subtrees keyed by color.
std::map<int, ColoredTree> decompose_tree(const ColoredTree& t);
ColoredTree assemble_tree(int root_color, const std::map<int, ColoredTree>& children);

}  // namespace icf
