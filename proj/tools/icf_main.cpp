// Command-line front end: counts, tables, sequences, verification sweeps, enumeration.
#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "icf/combinatorics.hpp"
#include "icf/count_table.hpp"
#include "icf/counting.hpp"
#include "icf/enumeration.hpp"
#include "icf/forest.hpp"
#include "icf/keypoly.hpp"
#include "icf/triangulation.hpp"
#include "icf/verify.hpp"

namespace {

using namespace icf;

struct Options {
  std::string lambda, roots, type, nu, rho, mu;
  int root = 0;
  int n = -1;
  int p = 2;
  long r = 1;
  int k = 0;
  int m = 0;
  int h = 0;
  int from = 0;
  int to = -1;
  std::string format;
  std::string output;
  int max_size = 12;
  int max_n = -1;
  int max_m = 2;
  std::string part = "all";
  bool ci = false;
  bool json_report = false;
  std::uint64_t seed = 1;
};

void require(bool ok, const std::string& message) {
  if (!ok) throw std::invalid_argument(message);
}

Composition parse_composition(const std::string& text, const char* what) {
  require(!text.empty(), std::string("missing --") + what);
  auto parts = parse_int_list(text);
  for (int v : parts) require(v >= 0, std::string(what) + " entries must be nonnegative");
  return Composition(parts);
}

ColorSeq parse_roots(const std::string& text, int k) {
  std::vector<int> entries = text.empty() ? std::vector<int>{} : parse_int_list(text);
  for (int c : entries) {
    require(c >= 1 && c <= k, "root colors must lie in 1.." + std::to_string(k));
  }
  return ColorSeq(k, entries);
}

void require_n(const Options& o, int min) {
  require(o.n >= min, "--n must be at least " + std::to_string(min));
}

void emit(const std::string& text, const Options& o) {
  if (o.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(o.output, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open " + o.output);
  file << text;
}

std::string run_count(const std::string& what, const Options& o) {
  BigCount value;
  if (what == "forests") {
    const Composition lambda = parse_composition(o.lambda, "lambda");
    value = count_forests(lambda, parse_roots(o.roots, lambda.k()));
  } else if (what == "trees") {
    const Composition lambda = parse_composition(o.lambda, "lambda");
    require(o.root >= 1 && o.root <= lambda.k(), "--root must lie in 1..k");
    value = count_trees(lambda, o.root);
  } else if (what == "tri") {
    require_n(o, 3);
    value = count_triangulations_by_type(o.n, Partition(parse_int_list(o.type)));
  } else if (what == "fuss") {
    require_n(o, 0);
    require(o.p >= 0 && o.r >= 1, "fuss needs p >= 0 and r >= 1");
    value = fuss_catalan(o.n, o.p, o.r);
  } else if (what == "total") {
    require_n(o, 0);
    require(o.k >= 1 && o.m >= 1, "total needs k >= 1 and m >= 1");
    value = count_forests_total(o.n, o.k, o.m);
  } else if (what == "xi") {
    require_n(o, 1);
    value = xi(o.n, parse_composition(o.nu, "nu"));
  } else if (what == "alpha") {
    require_n(o, 0);
    value = alpha(o.n, Partition(parse_int_list(o.rho)), parse_composition(o.mu, "mu"));
  } else {
    throw std::invalid_argument("unknown count target " + what);
  }
  return to_string(value) + '\n';
}

std::string run_table(const std::string& what, const Options& o) {
  TableFormat format = TableFormat::csv;
  if (o.format == "json") {
    format = TableFormat::json;
  } else {
    require(o.format.empty() || o.format == "csv", "table format must be csv or json");
  }
  CountTable table;
  if (what == "xi") {
    require_n(o, 1);
    require(o.p >= 1, "--p must be positive");
    table = xi_table(o.n, o.p);
  } else if (what == "alpha") {
    require_n(o, 0);
    table = alpha_table(o.n, Partition(parse_int_list(o.rho)));
  } else if (what == "tri") {
    require_n(o, 3);
    table = triangulation_table(o.n);
  } else if (what == "forest") {
    require_n(o, 1);
    require(o.k >= 1, "--k must be positive");
    table = forest_table(o.n, parse_roots(o.roots, o.k));
  } else {
    throw std::invalid_argument("unknown table " + what);
  }
  return render_table(table, format);
}

std::string b_file(int from, const std::vector<BigCount>& values) {
  std::ostringstream out;
  for (std::size_t i = 0; i < values.size(); ++i) out << from + static_cast<int>(i) << ' ' << values[i] << '\n';
  return out.str();
}

std::string run_sequence(const std::string& what, const Options& o) {
  std::vector<BigCount> values;
  if (what == "antidiagonal") {
    // Entries nu = (h, floor(n/2) - h) of the p = 2 table for a fixed n.
    require_n(o, 1);
    const int half = o.n / 2;
    for (int h = 0; h <= half; ++h) values.push_back(xi(o.n, Composition{h, half - h}));
    return b_file(0, values);
  }
  require(o.from >= 0 && o.to >= o.from, "need 0 <= --from <= --to");
  if (what == "catalan") {
    for (int n = o.from; n <= o.to; ++n) values.push_back(fuss_catalan(n, 2, 1));
  } else if (what == "fuss") {
    require(o.p >= 0 && o.r >= 1, "fuss needs p >= 0 and r >= 1");
    for (int n = o.from; n <= o.to; ++n) values.push_back(fuss_catalan(n, o.p, o.r));
  } else if (what == "row-sums") {
    require(o.h >= 0, "--h must be nonnegative");
    require(o.from >= 1, "row sums start at n = 1");
    for (int n = o.from; n <= o.to; ++n) {
      BigCount sum = 0;
      for (int t = 0; t + o.h < n; ++t) sum += xi(n, Composition{t, o.h});
      values.push_back(sum);
    }
  } else {
    throw std::invalid_argument("unknown sequence " + what);
  }
  return b_file(o.from, values);
}

std::vector<verify::CheckResult> ci_suite(std::uint64_t seed) {
  using namespace icf::verify;
  std::vector<CheckResult> out;
  out.push_back(oracle(3, 8, 3));
  out.push_back(oracle(4, 6, 2));
  out.push_back(tree_forest_bridge(3, 8));
  out.push_back(forest_recurrence(3, 7));
  out.push_back(tree_recurrence(3, 7));
  out.push_back(last_root_maps(3, 5, 2));
  out.push_back(forest_streams(3, 6, 2));
  out.push_back(tree_decomposition(3, 7));
  out.push_back(count_symmetries(4, 12, seed, 200));
  out.push_back(fuss_catalan_layer(3, 10, 4, 12));
  out.push_back(distribution_sums(3, 9));
  out.push_back(alpha_distributions(2, 3, 7));
  out.push_back(tree_totals(4, 8));
  out.push_back(forest_totals(3, 8, 3));
  for (int k = 2; k <= 5; ++k) {
    for (auto part : {PkIdentity::vanishes_without_roots, PkIdentity::two_color_restriction, PkIdentity::color_symmetry}) {
      out.push_back(pk_identity(k, part));
    }
  }
  for (int k = 2; k <= 4; ++k) out.push_back(pk_identity(k, PkIdentity::shift_recurrence));
  out.push_back(pk_homogeneity(6));
  out.push_back(pk_evaluation(5, seed, 50));
  out.push_back(pk_golden());
  out.push_back(census(12, 16));
  out.push_back(chi_bijection(9));
  out.push_back(z_coefficients(4));
  return out;
}

std::vector<PkIdentity> selected_parts(const std::string& part) {
  if (part == "all") {
    return {PkIdentity::vanishes_without_roots, PkIdentity::two_color_restriction, PkIdentity::color_symmetry,
            PkIdentity::shift_recurrence};
  }
  return {parse_pk_identity(part)};
}

std::string run_verify(const std::string& what, const Options& o, bool& ok) {
  using namespace icf::verify;
  std::vector<CheckResult> results;
  auto max_n_or = [&](int fallback) { return o.max_n >= 0 ? o.max_n : fallback; };
  const int k = o.k > 0 ? o.k : 3;
  if (what == "oracle") {
    require(max_n_or(7) <= 10, "oracle sweep guard: --max-n <= 10");
    results.push_back(oracle(k, max_n_or(7), o.max_m));
  } else if (what == "poly") {
    require(k >= 1 && k <= 6, "poly checks need 1 <= k <= 6");
    for (auto part : selected_parts(o.part)) results.push_back(pk_identity(k, part));
    if (o.part == "all") results.push_back(pk_golden());
  } else if (what == "chi") {
    require(max_n_or(9) >= 3 && max_n_or(9) <= 11, "chi sweep guard: 3 <= --max-n <= 11");
    results.push_back(chi_bijection(max_n_or(9)));
  } else if (what == "census") {
    require(max_n_or(12) <= 14, "census guard: --max-n <= 14");
    results.push_back(census(max_n_or(12), 16));
  } else if (what == "recurrence") {
    results.push_back(forest_recurrence(k, max_n_or(7)));
    results.push_back(tree_recurrence(k, max_n_or(7)));
  } else if (what == "fuss") {
    results.push_back(fuss_catalan_layer(3, 10, 4, 12));
    results.push_back(forest_totals(3, 8, 3));
  } else if (what == "zcoeffs") {
    require(k >= 1 && k <= 6, "zcoeffs needs 1 <= k <= 6");
    results.push_back(z_coefficients(k));
  } else if (what == "all") {
    results = ci_suite(o.seed);
  } else {
    throw std::invalid_argument("unknown verify suite " + what);
  }
  ok = all_passed(results);
  return render_report(results, o.json_report);
}

std::string run_enumerate(const std::string& what, const Options& o) {
  ForestFormat format = ForestFormat::text;
  if (o.format == "json") {
    format = ForestFormat::json;
  } else if (o.format == "dot") {
    format = ForestFormat::dot;
  } else {
    require(o.format.empty() || o.format == "text", "enumerate format must be text, json or dot");
  }
  const EnumerationLimits limits{o.max_size};
  std::ostringstream out;
  auto line = [&](std::string s) {
    out << s;
    if (s.empty() || s.back() != '\n') out << '\n';
  };
  if (what == "forests") {
    const Composition lambda = parse_composition(o.lambda, "lambda");
    for_each_forest(lambda, parse_roots(o.roots, lambda.k()),
                    [&](const ColoredForest& f) { line(serialize_forest(f, format)); }, limits);
  } else if (what == "trees") {
    const Composition lambda = parse_composition(o.lambda, "lambda");
    require(o.root >= 1 && o.root <= lambda.k(), "--root must lie in 1..k");
    for_each_tree(lambda, o.root, [&](const ColoredTree& t) { line(serialize_tree(t, format)); }, limits);
  } else if (what == "tri") {
    require_n(o, 3);
    if (o.n > o.max_size) throw SizeGuardError("polygon size exceeds --max-size");
    const auto tri_format = format == ForestFormat::json  ? TriangulationFormat::json
                            : format == ForestFormat::dot ? TriangulationFormat::dot
                                                          : TriangulationFormat::text;
    for_each_triangulation(o.n, [&](const Triangulation& t) { line(serialize_triangulation(t, tri_format)); });
  } else {
    throw std::invalid_argument("unknown enumeration target " + what);
  }
  return out.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Counting and enumeration of injectively colored forests"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--lambda", o.lambda, "color character, comma separated");
    sub->add_option("--roots", o.roots, "root colors, comma separated");
    sub->add_option("--root", o.root, "root color");
    sub->add_option("--n", o.n, "size");
    sub->add_option("--k", o.k, "number of colors");
    sub->add_option("--p", o.p, "Fuss-Catalan parameter p");
    sub->add_option("--output,-o", o.output, "write to file instead of standard output");
  };

  std::string target;
  auto* count = app.add_subcommand("count", "print one exact count");
  count->add_option("what", target, "forests|trees|tri|fuss|total|xi|alpha")->required();
  add_common(count);
  count->add_option("--type", o.type, "triangulation type");
  count->add_option("--r", o.r, "Fuss-Catalan parameter r");
  count->add_option("--m", o.m, "number of roots");
  count->add_option("--nu", o.nu);
  count->add_option("--rho", o.rho);
  count->add_option("--mu", o.mu);

  auto* table = app.add_subcommand("table", "emit a count table");
  table->add_option("what", target, "xi|alpha|tri|forest")->required();
  add_common(table);
  table->add_option("--rho", o.rho);
  table->add_option("--format", o.format, "csv|json");

  auto* sequence = app.add_subcommand("sequence", "emit a b-file");
  sequence->add_option("what", target, "catalan|fuss|row-sums|antidiagonal")->required();
  add_common(sequence);
  sequence->add_option("--r", o.r);
  sequence->set_help_flag("--help", "Print this help message and exit");
  sequence->add_option("--h", o.h, "column index h");
  sequence->add_option("--from", o.from);
  sequence->add_option("--to", o.to);

  auto* verify_cmd = app.add_subcommand("verify", "run verification sweeps");
  verify_cmd->add_option("what", target, "oracle|poly|chi|census|recurrence|fuss|zcoeffs|all")->required();
  add_common(verify_cmd);
  verify_cmd->add_option("--max-n", o.max_n);
  verify_cmd->add_option("--max-m", o.max_m);
  verify_cmd->add_option("--part", o.part, "i|ii|iii|iv|all");
  verify_cmd->add_flag("--ci", o.ci, "run the CI-sized suite");
  verify_cmd->add_flag("--json-report", o.json_report);
  verify_cmd->add_option("--seed", o.seed);

  auto* enumerate = app.add_subcommand("enumerate", "stream objects");
  enumerate->add_option("what", target, "forests|trees|tri")->required();
  add_common(enumerate);
  enumerate->add_option("--format", o.format, "text|json|dot");
  enumerate->add_option("--max-size", o.max_size, "vertex guard");

  CLI11_PARSE(app, argc, argv);

  try {
    std::string text;
    bool ok = true;
    if (count->parsed()) text = run_count(target, o);
    else if (table->parsed()) text = run_table(target, o);
    else if (sequence->parsed()) text = run_sequence(target, o);
    else if (verify_cmd->parsed()) text = run_verify(target, o, ok);
    else text = run_enumerate(target, o);
    emit(text, o);
    return ok ? 0 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
