#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "icf/count_table.hpp"
#include "json.hpp"

using namespace icf;

TEST_CASE("grid tables sum to their independent totals") {
  for (int p = 1; p <= 3; ++p) {
    for (int n = 1; n <= 9; ++n) {
      const CountTable t = xi_table(n, p);
      CHECK(t.is_grid());
      CHECK(t.cell_sum() == t.total);
    }
  }
  for (int ell = 1; ell <= 4; ++ell) {
    for (const auto& rho : partitions(3, ell)) {
      for (int n = 0; n <= 7; ++n) {
        const CountTable t = alpha_table(n, rho);
        INFO("n=", n, " rho=", rho.to_string());
        CHECK(t.cell_sum() == t.total);
      }
    }
  }
  for (int n = 1; n <= 6; ++n) {
    const CountTable t = forest_table(n, ColorSeq(3, {1, 2}));
    CHECK_FALSE(t.is_grid());
    CHECK(t.cell_sum() == t.total);
  }
}

TEST_CASE("csv layout is byte stable") {
  CHECK(render_table(xi_table(3, 2), TableFormat::csv) ==
        "nu1\\nu2,0,1\n"
        "0,0,1\n"
        "1,1,3\n"
        "total,5\n");
  CHECK(render_table(triangulation_table(6), TableFormat::csv) ==
        "lambda1,lambda2,lambda3,count\n"
        "3,2,1,6\n"
        "2,2,2,8\n"
        "total,14\n");
}

TEST_CASE("json layout") {
  const auto j = nlohmann::json::parse(render_table(alpha_table(6, Partition({1, 1, 1})), TableFormat::json));
  CHECK(j["formula"] == "alpha");
  CHECK(j["total"] == "6188");
  CHECK(j["cells"]["2,2"] == "2000");
  CHECK(j["axes"].size() == 2);
}

TEST_CASE("lookup and preconditions") {
  const CountTable t = xi_table(8, 2);
  CHECK(t.at({2, 2}) == 200);
  CHECK_THROWS_AS(t.at({9, 9}), std::out_of_range);
  CHECK_THROWS_AS(xi_table(0, 2), std::domain_error);
  CHECK_THROWS_AS(triangulation_table(2), std::domain_error);
  CHECK_THROWS_AS(alpha_table(3, Partition({0, 0, 0})), std::domain_error);
}
