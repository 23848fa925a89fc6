#include "icf/forest.hpp"

#include "json.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace icf {

ColoredTree::ColoredTree(int root_color, std::vector<ColoredTree> children)
    : root_color_(root_color), children_(std::move(children)) {
  if (root_color_ < 1) throw std::domain_error("ColoredTree: colors are 1-based");
  std::sort(children_.begin(), children_.end(),
            [](const ColoredTree& a, const ColoredTree& b) { return a.root_color_ < b.root_color_; });
  for (std::size_t i = 0; i < children_.size(); ++i) {
    if (children_[i].root_color_ == root_color_) {
      throw std::domain_error("ColoredTree: child shares its parent's color");
    }
    if (i && children_[i].root_color_ == children_[i - 1].root_color_) {
      throw std::domain_error("ColoredTree: two children share a color");
    }
  }
}

const ColoredTree* ColoredTree::child(int color) const {
  for (const auto& c : children_) {
    if (c.root_color_ == color) return &c;
  }
  return nullptr;
}

std::size_t ColoredTree::size() const {
  std::size_t n = 1;
  for (const auto& c : children_) n += c.size();
  return n;
}

int ColoredTree::max_color() const {
  int best = root_color_;
  for (const auto& c : children_) best = std::max(best, c.max_color());
  return best;
}

void ColoredTree::add_character(std::vector<int>& counts) const {
  ++counts.at(static_cast<std::size_t>(root_color_ - 1));
  for (const auto& c : children_) c.add_character(counts);
}

Composition ColoredTree::character(int k) const {
  std::vector<int> counts(static_cast<std::size_t>(k), 0);
  add_character(counts);
  return Composition(std::move(counts));
}

std::strong_ordering operator<=>(const ColoredTree& a, const ColoredTree& b) {
  if (auto c = a.root_color_ <=> b.root_color_; c != 0) return c;
  return std::lexicographical_compare_three_way(a.children_.begin(), a.children_.end(), b.children_.begin(),
                                                b.children_.end());
}

ColoredForest::ColoredForest(int k, std::vector<ColoredTree> trees) : k_(k), trees_(std::move(trees)) {
  if (k < 1) throw std::domain_error("ColoredForest: k must be >= 1");
  for (const auto& t : trees_) {
    if (t.max_color() > k) throw std::domain_error("ColoredForest: color exceeds k");
  }
}

ColorSeq ColoredForest::roots() const {
  std::vector<int> colors;
  for (const auto& t : trees_) colors.push_back(t.root_color());
  return ColorSeq(k_, std::move(colors));
}

Composition ColoredForest::character() const {
  Composition total = Composition::zero(k_);
  for (const auto& t : trees_) total = total + t.character(k_);
  return total;
}

std::string to_text(const ColoredTree& t) {
  std::string out = std::to_string(t.root_color()) + '(';
  for (const auto& c : t.children()) out += to_text(c);
  out += ')';
  return out;
}

std::string to_text(const ColoredForest& f) {
  std::string out;
  for (std::size_t i = 0; i < f.trees().size(); ++i) {
    if (i) out += ' ';
    out += to_text(f.trees()[i]);
  }
  return out;
}

namespace {

nlohmann::ordered_json tree_json(const ColoredTree& t) {
  nlohmann::ordered_json j;
  j["color"] = t.root_color();
  j["children"] = nlohmann::ordered_json::array();
  for (const auto& c : t.children()) j["children"].push_back(tree_json(c));
  return j;
}

void dot_nodes(const ColoredTree& t, int& next_id, std::string& out, bool is_root) {
  const int id = next_id++;
  out += "  n" + std::to_string(id) + " [label=\"" + std::to_string(t.root_color()) + "\"" +
         (is_root ? ", shape=doublecircle" : "") + "];\n";
  for (const auto& c : t.children()) {
    const int child_id = next_id;
    dot_nodes(c, next_id, out, false);
    out += "  n" + std::to_string(id) + " -> n" + std::to_string(child_id) + ";\n";
  }
}

std::string dot_graph(const std::vector<ColoredTree>& trees) {
  std::string out = "digraph forest {\n";
  int next_id = 0;
  std::vector<int> root_ids;
  for (const auto& t : trees) {
    root_ids.push_back(next_id);
    dot_nodes(t, next_id, out, true);
  }
  if (root_ids.size() > 1) {
    out += "  { rank=same;";
    for (int id : root_ids) out += " n" + std::to_string(id) + ";";
    out += " }\n";
  }
  out += "}\n";
  return out;
}

class TreeParser {
 public:
  explicit TreeParser(std::string_view text) : text_(text) {}

  ColoredTree tree() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a color");
    const int color = std::stoi(std::string(text_.substr(start, pos_ - start)));
    expect('(');
    std::vector<ColoredTree> children;
    skip_ws();
    while (pos_ < text_.size() && text_[pos_] != ')') {
      children.push_back(tree());
      skip_ws();
    }
    expect(')');
    ColoredTree out(color, children);
    if (out.children() != children) fail("children not in increasing color order");
    return out;
  }

  bool at_end() {
    skip_ws();
    return pos_ >= text_.size();
  }

 private:
  void expect(char c) {
    skip_ws();
    if (pos_ >= text_.size() || text_[pos_] != c) fail("unexpected character");
    ++pos_;
  }
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const char* what) const {
    throw std::invalid_argument(std::string("parse_tree: ") + what + " at offset " + std::to_string(pos_));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string serialize_tree(const ColoredTree& t, ForestFormat format) {
  switch (format) {
    case ForestFormat::text: return to_text(t);
    case ForestFormat::json: return tree_json(t).dump();
    case ForestFormat::dot: return dot_graph({t});
  }
  return {};
}

std::string serialize_forest(const ColoredForest& f, ForestFormat format) {
  switch (format) {
    case ForestFormat::text: return to_text(f);
    case ForestFormat::json: {
      nlohmann::ordered_json j;
      j["k"] = f.k();
      j["trees"] = nlohmann::ordered_json::array();
      for (const auto& t : f.trees()) j["trees"].push_back(tree_json(t));
      return j.dump();
    }
    case ForestFormat::dot: return dot_graph(f.trees());
  }
  return {};
}

ColoredTree parse_tree(std::string_view text) {
  TreeParser parser(text);
  ColoredTree t = parser.tree();
  if (!parser.at_end()) throw std::invalid_argument("parse_tree: trailing input");
  return t;
}

ColoredForest parse_forest(std::string_view text, int k) {
  TreeParser parser(text);
  std::vector<ColoredTree> trees;
  while (!parser.at_end()) trees.push_back(parser.tree());
  return ColoredForest(k, std::move(trees));
}

}  // namespace icf
