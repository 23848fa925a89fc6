#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "icf/combinatorics.hpp"
#include "icf/counting.hpp"

namespace icf {

/// Canonical representative of an injectively colored rooted tree.
///
/// Children are kept sorted by strictly increasing root color and no child shares the parent's
/// color, so the injective-coloring condition holds by construction and structural equality is
/// isomorphism (isomorphisms fix roots and colors).
class ColoredTree {
 public:
  explicit ColoredTree(int root_color, std::vector<ColoredTree> children = {});

  int root_color() const { return root_color_; }
  const std::vector<ColoredTree>& children() const { return children_; }
  /// The child of the given color, or nullptr.
  const ColoredTree* child(int color) const;

  std::size_t size() const;
  int max_color() const;
  Composition character(int k) const;

  friend bool operator==(const ColoredTree&, const ColoredTree&) = default;
  friend std::strong_ordering operator<=>(const ColoredTree& a, const ColoredTree& b);

 private:
  void add_character(std::vector<int>& counts) const;

  int root_color_;
  std::vector<ColoredTree> children_;
};

/// Canonical representative of a (lambda, c)-forest class: trees in root order.
class ColoredForest {
 public:
  ColoredForest(int k, std::vector<ColoredTree> trees);

  int k() const { return k_; }
  const std::vector<ColoredTree>& trees() const { return trees_; }
  bool empty() const { return trees_.empty(); }
  ColorSeq roots() const;
  Composition character() const;

  friend bool operator==(const ColoredForest&, const ColoredForest&) = default;

 private:
  int k_;
  std::vector<ColoredTree> trees_;
};

/// Vertex color census of a forest.
inline Composition character(const ColoredForest& f) { return f.character(); }

enum class ForestFormat { text, json, dot };

/// Canonical text: tree := color "(" tree* ")", forest = trees joined by single spaces.
std::string to_text(const ColoredTree& t);
std::string to_text(const ColoredForest& f);
std::string serialize_forest(const ColoredForest& f, ForestFormat format);
std::string serialize_tree(const ColoredTree& t, ForestFormat format);

ColoredTree parse_tree(std::string_view text);
ColoredForest parse_forest(std::string_view text, int k);

}  // namespace icf
