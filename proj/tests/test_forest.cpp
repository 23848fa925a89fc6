#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "icf/forest.hpp"
#include "json.hpp"

using namespace icf;

namespace {
const char* const kSixRootedLeft = "2(3()5(2()4())) 5(1()2(1(2()3()4()))4(3()))";
}

TEST_CASE("canonical text round trip") {
  const ColoredForest f = parse_forest(kSixRootedLeft, 5);
  CHECK(to_text(f) == kSixRootedLeft);
  CHECK(f.character() == Composition{2, 4, 3, 3, 2});
  CHECK(f.roots() == ColorSeq(5, {2, 5}));
  CHECK(f.trees().size() == 2);
  CHECK(f.trees()[0].size() == 5);
}

TEST_CASE("children are stored in increasing color order") {
  const ColoredTree t(3, {ColoredTree(2), ColoredTree(1)});
  CHECK(to_text(t) == "3(1()2())");
  CHECK(t.child(2) != nullptr);
  CHECK(t.child(3) == nullptr);
  CHECK(t.max_color() == 3);
}

TEST_CASE("injectivity is enforced") {
  CHECK_THROWS(ColoredTree(1, {ColoredTree(1)}));
  CHECK_THROWS(ColoredTree(1, {ColoredTree(2), ColoredTree(2)}));
  CHECK_THROWS(ColoredForest(2, {ColoredTree(3)}));
  CHECK_THROWS(parse_tree("1(3()2())"));
  CHECK_THROWS(parse_tree("1(1())"));
  CHECK_THROWS(parse_tree("1("));
  CHECK_THROWS(parse_forest("1() x", 2));
}

TEST_CASE("json and dot serializations") {
  const ColoredForest f = parse_forest("1(2()) 2()", 2);
  const auto j = nlohmann::json::parse(serialize_forest(f, ForestFormat::json));
  CHECK(j["trees"].size() == 2);
  CHECK(j["trees"][0]["color"] == 1);
  const std::string dot = serialize_forest(f, ForestFormat::dot);
  CHECK(dot.rfind("digraph", 0) == 0);
  CHECK(dot.find("doublecircle") != std::string::npos);
  CHECK(dot.find("rank=same") != std::string::npos);
  CHECK(serialize_forest(f, ForestFormat::text) == "1(2()) 2()");
}

TEST_CASE("empty forest") {
  const ColoredForest f(3, {});
  CHECK(f.empty());
  CHECK(to_text(f).empty());
  CHECK(f.character() == Composition::zero(3));
}
