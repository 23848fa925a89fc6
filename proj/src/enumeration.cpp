#include "icf/enumeration.hpp"

#include <algorithm>
#include <string>

namespace icf {

namespace {

void check_guard(const Composition& lambda, EnumerationLimits limits) {
  if (lambda.total() > limits.max_vertices) {
    throw SizeGuardError("enumeration guard: |lambda| = " + std::to_string(lambda.total()) + " exceeds " +
                         std::to_string(limits.max_vertices));
  }
}

/// All nu with 0 <= nu <= bound componentwise, lexicographic.
std::vector<Composition> sub_compositions(const Composition& bound) {
  std::vector<Composition> out;
  std::vector<int> cur(static_cast<std::size_t>(bound.k()), 0);
  while (true) {
    out.emplace_back(cur);
    std::size_t j = cur.size();
    while (j > 0) {
      --j;
      if (cur[j] < bound[j]) {
        ++cur[j];
        break;
      }
      cur[j] = 0;
      if (j == 0) return out;
    }
  }
}

class TreeEnumerator {
 public:
  explicit TreeEnumerator(BruteCounter& counter) : counter_(counter) {}

  void trees(const Composition& lambda, int root, const TreeVisitor& visit) {
    if (lambda.at_color(root) == 0 || counter_.trees(lambda, root) == 0) return;
    const Composition rest = lambda - Composition::unit(lambda.k(), root);
    std::vector<int> colors;
    for (int i = 1; i <= lambda.k(); ++i) {
      if (i != root) colors.push_back(i);
    }
    std::vector<ColoredTree> children;
    children_rec(root, rest, colors, 0, children, visit);
  }

 private:
  void children_rec(int root, const Composition& remaining, const std::vector<int>& colors, std::size_t next,
                    std::vector<ColoredTree>& children, const TreeVisitor& visit) {
    if (next == colors.size()) {
      if (remaining.is_zero()) visit(ColoredTree(root, children));
      return;
    }
    const int color = colors[next];
    const bool last = next + 1 == colors.size();
    for (const auto& nu : last ? std::vector<Composition>{remaining} : sub_compositions(remaining)) {
      if (nu.is_zero()) {
        children_rec(root, remaining, colors, next + 1, children, visit);
        continue;
      }
      if (counter_.trees(nu, color) == 0) continue;
      const Composition after = remaining - nu;
      trees(nu, color, [&](const ColoredTree& child) {
        children.push_back(child);
        children_rec(root, after, colors, next + 1, children, visit);
        children.pop_back();
      });
    }
  }

  BruteCounter& counter_;
};

void forest_rec(TreeEnumerator& trees, BruteCounter& counter, const Composition& remaining, const ColorSeq& roots,
                std::size_t next, std::vector<ColoredTree>& built, const ForestVisitor& visit) {
  const auto entries = roots.entries();
  if (next == entries.size()) {
    if (remaining.is_zero()) visit(ColoredForest(roots.k(), built));
    return;
  }
  const int color = entries[next];
  const bool last = next + 1 == entries.size();
  for (const auto& nu : last ? std::vector<Composition>{remaining} : sub_compositions(remaining)) {
    if (nu.at_color(color) == 0 || counter.trees(nu, color) == 0) continue;
    const Composition after = remaining - nu;
    if (counter.forests(after, ColorSeq(roots.k(), std::vector<int>(entries.begin() + static_cast<long>(next) + 1,
                                                                      entries.end()))) == 0) {
      continue;
    }
    trees.trees(nu, color, [&](const ColoredTree& t) {
      built.push_back(t);
      forest_rec(trees, counter, after, roots, next + 1, built, visit);
      built.pop_back();
    });
  }
}

}  // namespace

void for_each_tree(const Composition& lambda, int root, const TreeVisitor& visit, EnumerationLimits limits) {
  if (root < 1 || root > lambda.k()) throw std::domain_error("enumerate_trees: root color out of range");
  check_guard(lambda, limits);
  BruteCounter counter;
  TreeEnumerator(counter).trees(lambda, root, visit);
}

std::vector<ColoredTree> enumerate_trees(const Composition& lambda, int root, EnumerationLimits limits) {
  std::vector<ColoredTree> out;
  for_each_tree(lambda, root, [&](const ColoredTree& t) { out.push_back(t); }, limits);
  return out;
}

void for_each_forest(const Composition& lambda, const ColorSeq& roots, const ForestVisitor& visit,
                     EnumerationLimits limits) {
  if (lambda.k() != roots.k()) throw std::domain_error("enumerate_forests: mismatched k");
  check_guard(lambda, limits);
  BruteCounter counter;
  TreeEnumerator trees(counter);
  std::vector<ColoredTree> built;
  forest_rec(trees, counter, lambda, roots, 0, built, visit);
}

std::vector<ColoredForest> enumerate_forests(const Composition& lambda, const ColorSeq& roots,
                                             EnumerationLimits limits) {
  std::vector<ColoredForest> out;
  for_each_forest(lambda, roots, [&](const ColoredForest& f) { out.push_back(f); }, limits);
  return out;
}

BigCount BruteCounter::trees(const Composition& lambda, int root) {
  if (lambda.at_color(root) == 0) return 0;
  const auto key = std::make_pair(lambda, root);
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  std::vector<int> colors;
  for (int i = 1; i <= lambda.k(); ++i) {
    if (i != root) colors.push_back(i);
  }
  const Composition rest = lambda - Composition::unit(lambda.k(), root);
  BigCount value = colors.empty() ? BigCount(rest.is_zero() ? 1 : 0) : child_convolution(rest, colors, 0);
  memo_.emplace(key, value);
  return value;
}

BigCount BruteCounter::trees_or_empty(const Composition& lambda, int root) {
  return lambda.is_zero() ? BigCount(1) : trees(lambda, root);
}

BigCount BruteCounter::child_convolution(const Composition& remaining, const std::vector<int>& colors,
                                         std::size_t next) {
  if (next + 1 == colors.size()) return trees_or_empty(remaining, colors[next]);
  BigCount sum = 0;
  for (const auto& nu : sub_compositions(remaining)) {
    const BigCount head = trees_or_empty(nu, colors[next]);
    if (head == 0) continue;
    sum += head * child_convolution(remaining - nu, colors, next + 1);
  }
  return sum;
}

BigCount BruteCounter::root_convolution(const Composition& remaining, const ColorSeq& roots, std::size_t next) {
  const auto entries = roots.entries();
  if (next == entries.size()) return remaining.is_zero() ? 1 : 0;
  if (next + 1 == entries.size()) return trees(remaining, entries[next]);
  BigCount sum = 0;
  for (const auto& nu : sub_compositions(remaining)) {
    const BigCount head = trees(nu, entries[next]);
    if (head == 0) continue;
    sum += head * root_convolution(remaining - nu, roots, next + 1);
  }
  return sum;
}

BigCount BruteCounter::forests(const Composition& lambda, const ColorSeq& roots) {
  if (lambda.k() != roots.k()) throw std::domain_error("brute_count: mismatched k");
  return root_convolution(lambda, roots, 0);
}

BigCount brute_count(const Composition& lambda, const ColorSeq& roots, EnumerationLimits limits) {
  check_guard(lambda, limits);
  BruteCounter counter;
  return counter.forests(lambda, roots);
}

std::pair<ColoredForest, std::vector<int>> delete_last_root(const ColoredForest& f) {
  if (f.empty()) throw std::domain_error("delete_last_root: empty forest");
  std::vector<ColoredTree> trees(f.trees().begin(), f.trees().end() - 1);
  const ColoredTree& last = f.trees().back();
  std::vector<int> colors;
  for (const auto& c : last.children()) {
    colors.push_back(c.root_color());
    trees.push_back(c);
  }
  return {ColoredForest(f.k(), std::move(trees)), std::move(colors)};
}

ColoredForest attach_root(const ColoredForest& f, const std::vector<int>& child_colors, int color) {
  if (color < 1 || color > f.k()) throw std::domain_error("attach_root: color out of range");
  if (!std::is_sorted(child_colors.begin(), child_colors.end()) ||
      std::adjacent_find(child_colors.begin(), child_colors.end()) != child_colors.end()) {
    throw std::domain_error("attach_root: child colors must be strictly increasing");
  }
  if (std::find(child_colors.begin(), child_colors.end(), color) != child_colors.end()) {
    throw std::domain_error("attach_root: new root color appears among its children");
  }
  const auto& trees = f.trees();
  if (child_colors.size() > trees.size()) throw std::domain_error("attach_root: not enough roots to adopt");
  const std::size_t keep = trees.size() - child_colors.size();
  for (std::size_t i = 0; i < child_colors.size(); ++i) {
    if (trees[keep + i].root_color() != child_colors[i]) {
      throw std::domain_error("attach_root: trailing root colors do not match the child colors");
    }
  }
  std::vector<ColoredTree> out(trees.begin(), trees.begin() + static_cast<long>(keep));
  out.emplace_back(color, std::vector<ColoredTree>(trees.begin() + static_cast<long>(keep), trees.end()));
  return ColoredForest(f.k(), std::move(out));
}

std::map<int, ColoredTree> decompose_tree(const ColoredTree& t) {
  std::map<int, ColoredTree> out;
  for (const auto& c : t.children()) out.emplace(c.root_color(), c);
  return out;
}

ColoredTree assemble_tree(int root_color, const std::map<int, ColoredTree>& children) {
  std::vector<ColoredTree> list;
  for (const auto& [color, child] : children) {
    if (child.root_color() != color) throw std::domain_error("assemble_tree: key does not match child color");
    list.push_back(child);
  }
  return ColoredTree(root_color, std::move(list));
}

}  // namespace icf
