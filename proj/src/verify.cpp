#include "icf/verify.hpp"

#include "json.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "icf/combinatorics.hpp"
#include "icf/count_table.hpp"
#include "icf/counting.hpp"
#include "icf/enumeration.hpp"
#include "icf/forest.hpp"
#include "icf/triangulation.hpp"

namespace icf::verify {

namespace {

/// Records the first failure and counts instances.
class Recorder {
 public:
  explicit Recorder(std::string name) { result_.name = std::move(name); }

  void check(bool ok, const std::function<std::string()>& describe) {
    ++result_.instances;
    if (!ok && result_.passed) {
      result_.passed = false;
      result_.detail = describe();
    }
  }

  CheckResult finish(std::string summary = {}) {
    if (result_.passed) result_.detail = std::move(summary);
    return result_;
  }

 private:
  CheckResult result_;
};

std::vector<Composition> multiplicity_vectors(int k, int max_m) {
  return all_compositions(k, max_m, CompositionMode::at_most);
}

std::string describe(const Composition& lambda, const ColorSeq& roots) {
  return "lambda=(" + lambda.to_string() + ") roots=(" + roots.to_string() + ")";
}

Composition transpose_colors(const Composition& c, int i, int j) {
  std::vector<int> parts(c.parts().begin(), c.parts().end());
  std::swap(parts[static_cast<std::size_t>(i - 1)], parts[static_cast<std::size_t>(j - 1)]);
  return Composition(std::move(parts));
}

}  // namespace

CheckResult oracle(int k, int max_n, int max_m) {
  Recorder rec("oracle k=" + std::to_string(k) + " max_n=" + std::to_string(max_n) + " max_m=" + std::to_string(max_m));
  BruteCounter counter;
  const auto mults = multiplicity_vectors(k, max_m);
  for (const auto& lambda : compositions(k, max_n, CompositionMode::at_most)) {
    for (const auto& mult : mults) {
      const ColorSeq roots = ColorSeq::from_multiplicities(mult.parts());
      const BigCount brute = counter.forests(lambda, roots);
      const BigCount formula = count_forests(lambda, roots);
      rec.check(brute == formula, [&] {
        return describe(lambda, roots) + " brute=" + to_string(brute) + " formula=" + to_string(formula);
      });
      if (!feasible(lambda, roots)) {
        rec.check(formula == 0, [&] { return describe(lambda, roots) + " infeasible but nonzero"; });
      }
    }
  }
  return rec.finish();
}

CheckResult tree_forest_bridge(int k, int max_n) {
  Recorder rec("tree/forest bridge k=" + std::to_string(k) + " max_n=" + std::to_string(max_n));
  for (const auto& lambda : compositions(k, max_n, CompositionMode::at_most)) {
    for (int c = 1; c <= k; ++c) {
      const BigCount t = count_trees(lambda, c);
      const BigCount f = count_forests(lambda, ColorSeq(k, {c}));
      rec.check(t == f, [&] { return "lambda=(" + lambda.to_string() + ") c=" + std::to_string(c); });
    }
  }
  return rec.finish();
}

CheckResult forest_recurrence(int k, int max_n) {
  Recorder rec("forest recurrence k=" + std::to_string(k) + " max_n=" + std::to_string(max_n));
  BruteCounter counter;
  for (const auto& lambda : compositions(k, max_n, CompositionMode::at_most)) {
    if (lambda.at_color(k) == 0) continue;
    // Every root multiplicity vector with a k-colored root that fits inside lambda.
    for (const auto& mult : compositions(k, lambda.total(), CompositionMode::at_most)) {
      bool fits = mult.at_color(k) >= 1;
      for (int i = 1; i <= k && fits; ++i) fits = mult.at_color(i) <= lambda.at_color(i);
      if (!fits) continue;
      const ColorSeq roots = ColorSeq::from_multiplicities(mult.parts());
      if (!feasible(lambda, roots)) continue;
      const Composition smaller = lambda - Composition::unit(k, k);
      const ColorSeq prefix = roots.without_last();
      BigCount sum_formula = 0;
      BigCount sum_brute = 0;
      for (unsigned mask = 0; mask < (1u << (k - 1)); ++mask) {
        std::vector<int> s;
        for (int i = 1; i < k; ++i) {
          if (mask & (1u << (i - 1))) s.push_back(i);
        }
        const ColorSeq extended = prefix.appended(s);
        sum_formula += count_forests(smaller, extended);
        sum_brute += counter.forests(smaller, extended);
      }
      const BigCount lhs = count_forests(lambda, roots);
      rec.check(lhs == sum_formula && counter.forests(lambda, roots) == sum_brute, [&] {
        return describe(lambda, roots) + " lhs=" + to_string(lhs) + " rhs=" + to_string(sum_formula);
      });
    }
  }
  return rec.finish();
}

CheckResult tree_recurrence(int k, int max_n) {
  Recorder rec("tree recurrence k=" + std::to_string(k) + " max_n=" + std::to_string(max_n));
  auto t_hat = [](const Composition& lambda, int c) {
    return lambda.is_zero() ? BigCount(1) : count_trees(lambda, c);
  };
  for (const auto& lambda : compositions(k, max_n, CompositionMode::at_most)) {
    for (int c = 1; c <= k; ++c) {
      const BigCount lhs = t_hat(lambda, c);
      if (lambda.at_color(c) == 0) {
        rec.check(lhs == (lambda.is_zero() ? 1 : 0), [&] { return "lambda=(" + lambda.to_string() + ") base case"; });
        continue;
      }
      const Composition target = lambda - Composition::unit(k, c);
      std::vector<int> others;
      for (int i = 1; i <= k; ++i) {
        if (i != c) others.push_back(i);
      }
      // Sum over mu^(i), i != c, with sum_i (i c).mu^(i) = target, of prod_i t_hat(mu^(i), c).
      std::function<BigCount(const Composition&, std::size_t)> conv = [&](const Composition& remaining,
                                                                         std::size_t idx) -> BigCount {
        const int i = others[idx];
        if (idx + 1 == others.size()) return t_hat(transpose_colors(remaining, i, c), c);
        BigCount sum = 0;
        for (const auto& part : compositions(k, remaining.total(), CompositionMode::at_most)) {
          bool fits = true;
          for (int j = 0; j < k && fits; ++j) fits = part[static_cast<std::size_t>(j)] <= remaining[static_cast<std::size_t>(j)];
          if (!fits) continue;
          const BigCount head = t_hat(transpose_colors(part, i, c), c);
          if (head != 0) sum += head * conv(remaining - part, idx + 1);
        }
        return sum;
      };
      const BigCount rhs = others.empty() ? BigCount(target.is_zero() ? 1 : 0) : conv(target, 0);
      rec.check(lhs == rhs, [&] {
        return "lambda=(" + lambda.to_string() + ") c=" + std::to_string(c) + " lhs=" + to_string(lhs) +
               " rhs=" + to_string(rhs);
      });
    }
  }
  return rec.finish();
}

CheckResult last_root_maps(int k, int max_n, int max_m) {
  Recorder rec("last-root maps k=" + std::to_string(k) + " max_n=" + std::to_string(max_n));
  BruteCounter counter;
  for (const auto& lambda : compositions(k, max_n, CompositionMode::at_most)) {
    for (const auto& mult : multiplicity_vectors(k, max_m)) {
      if (mult.total() == 0) continue;
      const ColorSeq roots = ColorSeq::from_multiplicities(mult.parts());
      std::map<std::vector<int>, std::uint64_t> by_subset;
      for_each_forest(lambda, roots, [&](const ColoredForest& f) {
        auto [smaller, subset] = delete_last_root(f);
        ++by_subset[subset];
        const ColoredForest back = attach_root(smaller, subset, roots.entries().back());
        rec.check(back == f, [&] { return "attach(delete(F)) != F for F = " + to_text(f); });
        auto [again, subset2] = delete_last_root(back);
        rec.check(again == smaller && subset2 == subset,
                  [&] { return "delete(attach(F', S)) != (F', S) for F' = " + to_text(smaller); });
      });
      // Each subset class must hold exactly the forests counted by the smaller instance.
      const int last = roots.entries().back();
      if (lambda.at_color(last) == 0) continue;
      const Composition smaller = lambda - Composition::unit(k, last);
      std::vector<int> others;
      for (int i = 1; i <= k; ++i) {
        if (i != last) others.push_back(i);
      }
      for (unsigned mask = 0; mask < (1u << others.size()); ++mask) {
        std::vector<int> s;
        for (std::size_t i = 0; i < others.size(); ++i) {
          if (mask & (1u << i)) s.push_back(others[i]);
        }
        const BigCount expected = counter.forests(smaller, roots.without_last().appended(s));
        const auto it = by_subset.find(s);
        const BigCount got = it == by_subset.end() ? BigCount(0) : BigCount(static_cast<unsigned long>(it->second));
        rec.check(got == expected, [&] { return describe(lambda, roots) + " subset class size mismatch"; });
      }
    }
  }
  return rec.finish();
}

CheckResult forest_streams(int k, int max_n, int max_m) {
  Recorder rec("forest streams k=" + std::to_string(k) + " max_n=" + std::to_string(max_n));
  for (const auto& lambda : compositions(k, max_n, CompositionMode::at_most)) {
    for (const auto& mult : multiplicity_vectors(k, max_m)) {
      const ColorSeq roots = ColorSeq::from_multiplicities(mult.parts());
      std::set<std::string> seen;
      std::uint64_t streamed = 0;
      bool shapes_ok = true;
      for_each_forest(lambda, roots, [&](const ColoredForest& f) {
        ++streamed;
        seen.insert(to_text(f));
        shapes_ok = shapes_ok && f.character() == lambda && f.roots() == roots;
      });
      const BigCount expected = count_forests(lambda, roots);
      rec.check(shapes_ok && seen.size() == streamed && BigCount(static_cast<unsigned long>(streamed)) == expected,
                [&] { return describe(lambda, roots) + " streamed=" + std::to_string(streamed); });
    }
  }
  return rec.finish();
}

CheckResult tree_decomposition(int k, int max_n) {
  Recorder rec("tree decomposition k=" + std::to_string(k) + " max_n=" + std::to_string(max_n));
  for (const auto& lambda : compositions(k, max_n, CompositionMode::at_most)) {
    for (int c = 1; c <= k; ++c) {
      for_each_tree(lambda, c, [&](const ColoredTree& t) {
        const auto parts = decompose_tree(t);
        rec.check(assemble_tree(t.root_color(), parts) == t, [&] { return "reassembly failed for " + to_text(t); });
      });
    }
  }
  return rec.finish();
}

CheckResult count_symmetries(int k, int max_n, std::uint64_t seed, int samples) {
  Recorder rec("count symmetries k=" + std::to_string(k) + " seed=" + std::to_string(seed));
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> size_dist(0, max_n);
  for (int s = 0; s < samples; ++s) {
    std::vector<int> parts(static_cast<std::size_t>(k), 0);
    const int n = size_dist(rng);
    std::uniform_int_distribution<int> color_dist(0, k - 1);
    for (int v = 0; v < n; ++v) ++parts[static_cast<std::size_t>(color_dist(rng))];
    const Composition lambda(parts);
    std::vector<int> entries;
    const int m = std::uniform_int_distribution<int>(0, std::min(3, n))(rng);
    for (int j = 0; j < m; ++j) entries.push_back(color_dist(rng) + 1);
    const ColorSeq roots(k, entries);
    const BigCount base = count_forests(lambda, roots);

    std::vector<int> shuffled = entries;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    rec.check(count_forests(lambda, ColorSeq(k, shuffled)) == base,
              [&] { return describe(lambda, roots) + " root-order invariance"; });

    std::vector<int> sigma(static_cast<std::size_t>(k));
    std::iota(sigma.begin(), sigma.end(), 1);
    std::shuffle(sigma.begin(), sigma.end(), rng);
    std::vector<int> permuted_parts(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) permuted_parts[static_cast<std::size_t>(sigma[static_cast<std::size_t>(i)] - 1)] = parts[static_cast<std::size_t>(i)];
    std::vector<int> permuted_entries;
    for (int c : entries) permuted_entries.push_back(sigma[static_cast<std::size_t>(c - 1)]);
    rec.check(count_forests(Composition(permuted_parts), ColorSeq(k, permuted_entries)) == base,
              [&] { return describe(lambda, roots) + " color-permutation equivariance"; });

    std::vector<BigCount> xs(parts.begin(), parts.end());
    std::vector<BigCount> ys(roots.multiplicities().begin(), roots.multiplicities().end());
    std::vector<BigCount> pxs(permuted_parts.begin(), permuted_parts.end());
    std::vector<BigCount> pys(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) pys[static_cast<std::size_t>(sigma[static_cast<std::size_t>(i)] - 1)] = ys[static_cast<std::size_t>(i)];
    rec.check(eval_pk(k, xs, ys) == eval_pk(k, pxs, pys), [&] { return describe(lambda, roots) + " P_k symmetry"; });
  }
  return rec.finish();
}

CheckResult fuss_catalan_layer(int max_p, int max_n, int max_r, int terms) {
  Recorder rec("fuss-catalan layer");
  for (int p = 1; p <= max_p; ++p) {
    const auto closed = fuss_catalan_series(p, 1, max_n + 1);
    const auto recurrence = fuss_catalan_recurrence(p, max_n + 1);
    rec.check(closed == recurrence, [&] { return "closed form != recurrence for p=" + std::to_string(p); });
    const auto base = fuss_catalan_series(p, 1, terms);
    for (int r = 1; r <= max_r; ++r) {
      rec.check(series_power(base, r, terms) == fuss_catalan_series(p, r, terms),
                [&] { return "B_{p,r} != B_{p,1}^r for p=" + std::to_string(p) + " r=" + std::to_string(r); });
    }
  }
  return rec.finish();
}

CheckResult distribution_sums(int max_p, int max_n) {
  Recorder rec("xi distribution sums");
  for (int p = 1; p <= max_p; ++p) {
    for (int n = 1; n <= max_n; ++n) {
      BigCount sum = 0;
      for (const auto& nu : compositions(p, n, CompositionMode::less_than)) {
        const BigCount value = xi(n, nu);
        sum += value;
        std::vector<int> lambda(nu.parts().begin(), nu.parts().end());
        lambda.push_back(n - nu.total());
        rec.check(value == count_trees(Composition(lambda), p + 1),
                  [&] { return "xi != tree count at n=" + std::to_string(n) + " nu=(" + nu.to_string() + ")"; });
      }
      rec.check(sum == fuss_catalan(n, p, 1),
                [&] { return "sum xi != A_n(p,1) at n=" + std::to_string(n) + " p=" + std::to_string(p); });
    }
  }
  return rec.finish();
}

CheckResult alpha_distributions(int p, int max_ell, int max_n) {
  Recorder rec("alpha distribution sums p=" + std::to_string(p));
  for (int ell = 1; ell <= max_ell; ++ell) {
    for (const auto& rho : partitions(p + 1, ell)) {
      for (int n = 0; n <= max_n; ++n) {
        BigCount sum = 0;
        for (const auto& mu : compositions(p, n, CompositionMode::at_most)) {
          const BigCount value = alpha(n, rho, mu);
          sum += value;
          const auto closed = alpha_closed_form(n, rho, mu);
          rec.check(closed.has_value() && *closed == value, [&] {
            return "alpha closed form disagrees at n=" + std::to_string(n) + " rho=(" + rho.to_string() + ") mu=(" +
                   mu.to_string() + ")";
          });
        }
        rec.check(sum == fuss_catalan(n, p, static_cast<long>(p) * ell), [&] {
          return "sum alpha != A_n(p, p*l) at n=" + std::to_string(n) + " rho=(" + rho.to_string() + ")";
        });
      }
    }
  }
  return rec.finish();
}

CheckResult tree_totals(int max_k, int max_n) {
  Recorder rec("tree totals");
  for (int k = 1; k <= max_k; ++k) {
    for (int n = 1; n <= max_n; ++n) {
      for (int c = 1; c <= k; ++c) {
        BigCount sum = 0;
        for (const auto& lambda : compositions(k, n)) sum += count_trees(lambda, c);
        rec.check(sum == fuss_catalan(n, k - 1, 1), [&] {
          return "sum t != A_n(k-1,1) at k=" + std::to_string(k) + " n=" + std::to_string(n);
        });
      }
    }
  }
  return rec.finish();
}

CheckResult forest_totals(int max_k, int max_n, int max_m) {
  Recorder rec("forest totals");
  for (int k = 1; k <= max_k; ++k) {
    for (int n = 1; n <= max_n; ++n) {
      for (int m = 1; m <= max_m; ++m) {
        // Totals do not depend on which root sequence is chosen; sample all of them.
        for (const auto& mult : compositions(k, m)) {
          const ColorSeq roots = ColorSeq::from_multiplicities(mult.parts());
          BigCount sum = 0;
          for (const auto& lambda : compositions(k, n)) sum += count_forests(lambda, roots);
          const BigCount total = count_forests_total(n, k, m);
          rec.check(sum == total, [&] {
            return "sum f != total at k=" + std::to_string(k) + " n=" + std::to_string(n) + " roots=(" +
                   roots.to_string() + ")";
          });
          if (k >= 2 && n >= m) {
            rec.check(total == fuss_catalan(n - m, k - 1, static_cast<long>(k) * m - m),
                      [&] { return "total != A_{n-m}(k-1, km-m)"; });
          }
        }
      }
    }
  }
  return rec.finish();
}

CheckResult pk_identity(int k, PkIdentity part) {
  Recorder rec(std::string("P_k identity (") + label(part) + ") k=" + std::to_string(k));
  rec.check(check_pk_identity(k, part), [] { return "symbolic expansion does not vanish"; });
  return rec.finish();
}

CheckResult pk_homogeneity(int max_k) {
  Recorder rec("P_k homogeneity");
  for (int k = 1; k <= max_k; ++k) {
    const SparsePoly pk = build_pk(k);
    rec.check(pk.is_homogeneous(k) && pk.num_vars() == 2 * k, [&] { return "k=" + std::to_string(k); });
  }
  return rec.finish();
}

CheckResult pk_evaluation(int k, std::uint64_t seed, int samples) {
  Recorder rec("P_k evaluation k=" + std::to_string(k));
  const SparsePoly pk = build_pk(k);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> dist(-20, 20);
  for (int s = 0; s < samples; ++s) {
    std::vector<BigCount> xs, ys, all;
    for (int i = 0; i < k; ++i) xs.emplace_back(dist(rng));
    for (int i = 0; i < k; ++i) ys.emplace_back(dist(rng));
    all = xs;
    all.insert(all.end(), ys.begin(), ys.end());
    rec.check(eval_pk(k, xs, ys) == pk.evaluate(all), [&] { return "sample " + std::to_string(s); });
  }
  return rec.finish();
}

namespace {

// The two printed examples of P_2 and P_3, term by term in their printed order.
const char* const kPrintedP2 = "x1*y2 + x2*y1 - y1*y2";
const char* const kPrintedP3 =
    "x1^2*y2 + x1^2*y3 + x2^2*y1 + x2^2*y3 + x3^2*y1 + x3^2*y2 + 2*y1*y2*y3"
    " + x1*x2*y1 + x1*x2*y2 + 2*x1*x2*y3 + x1*x3*y1 + 2*x1*x3*y2 + x1*x3*y3"
    " + 2*x2*x3*y1 + x2*x3*y2 + x2*x3*y3 - x1*y1*y2 - x1*y1*y3 - 2*x1*y2*y3"
    " - x2*y1*y2 - 2*x2*y1*y3 - x2*y2*y3 - 2*x3*y1*y2 - x3*y1*y3 - x3*y2*y3";

}  // namespace

CheckResult pk_golden() {
  Recorder rec("P_2, P_3 printed forms");
  rec.check(to_string(build_pk(2)) == to_string(parse_poly(kPrintedP2, 4)), [] { return "P_2 mismatch"; });
  const SparsePoly printed3 = parse_poly(kPrintedP3, 6);
  rec.check(printed3.size() == 25 && to_string(build_pk(3)) == to_string(printed3), [] { return "P_3 mismatch"; });
  return rec.finish();
}

CheckResult census(int max_enum_n, int max_formula_n) {
  Recorder rec("triangulation census");
  for (int n = 3; n <= max_formula_n; ++n) {
    const CountTable formula = triangulation_table(n);
    rec.check(formula.cell_sum() == formula.total,
              [&] { return "formula census sum != C_{n-2} at n=" + std::to_string(n); });
    if (n > max_enum_n) continue;
    const CountTable brute = census_by_enumeration(n, max_enum_n);
    rec.check(brute.cells == formula.cells, [&] { return "enumerated census != formula at n=" + std::to_string(n); });

    std::uint64_t equitable = 0;
    std::uint64_t total = 0;
    bool proper = true;
    for_each_triangulation(n, [&](const Triangulation& t) {
      ++total;
      const auto coloring = proper_three_coloring(t);
      proper = proper && is_proper_coloring(t, coloring.colors);
      if (is_equitable(t)) ++equitable;
    });
    rec.check(proper, [&] { return "improper coloring at n=" + std::to_string(n); });
    rec.check(BigCount(static_cast<unsigned long>(total)) == fuss_catalan(n - 2, 2, 1),
              [&] { return "triangulation count != C_{n-2} at n=" + std::to_string(n); });
    const int third = n / 3;
    const int top = (n + 2) / 3;
    const Partition equitable_type({top, n - top - third, third});
    rec.check(BigCount(static_cast<unsigned long>(equitable)) == count_triangulations_by_type(n, equitable_type),
              [&] { return "equitable count mismatch at n=" + std::to_string(n); });
  }
  return rec.finish();
}

CheckResult chi_bijection(int max_n) {
  Recorder rec("chi bijection max_n=" + std::to_string(max_n));
  for (int n = 3; n <= max_n; ++n) {
    std::set<std::string> images;
    std::uint64_t count = 0;
    for_each_triangulation(n, [&](const Triangulation& t) {
      ++count;
      const ColoredTree tree = chi(t);
      images.insert(to_text(tree));
      rec.check(chi_inverse(tree) == t, [&] { return "chi_inverse(chi(t)) != t at n=" + std::to_string(n); });
      const auto coloring = proper_three_coloring(t);
      std::vector<int> census(3, 0);
      for (int c : coloring.colors) ++census[static_cast<std::size_t>(c - 1)];
      const Composition bridge = Composition(census) - Composition{1, 1, 0};
      rec.check(tree.character(3) == bridge && tree.root_color() == 3 && tree.size() == static_cast<std::size_t>(n - 2),
                [&] { return "character bridge fails for " + to_text(tree); });
    });
    rec.check(images.size() == count, [&] { return "chi not injective at n=" + std::to_string(n); });
    std::uint64_t trees = 0;
    for (const auto& lambda : compositions(3, n - 2)) {
      for_each_tree(lambda, 3, [&](const ColoredTree& tree) {
        ++trees;
        rec.check(chi(chi_inverse(tree)) == tree, [&] { return "chi(chi_inverse(T)) != T for " + to_text(tree); });
      }, EnumerationLimits{n});
    }
    rec.check(trees == count, [&] { return "|T_{n-2,3}| != |Tri_n| at n=" + std::to_string(n); });
  }
  return rec.finish();
}

CheckResult z_coefficients(int k) {
  CheckResult out;
  out.name = "z-variable coefficients k=" + std::to_string(k);
  out.informational = true;
  const SparsePoly z = pk_in_z_variables(k);
  BigCount min_coef = 0;
  bool first = true;
  for (const auto& [e, c] : z.terms()) {
    if (first || c < min_coef) min_coef = c;
    first = false;
  }
  out.instances = z.size();
  out.detail = "terms=" + std::to_string(z.size()) + " min_coefficient=" + (first ? "none" : to_string(min_coef));
  return out;
}

std::string render_report(const std::vector<CheckResult>& results, bool json) {
  if (json) {
    nlohmann::ordered_json j = nlohmann::ordered_json::array();
    for (const auto& r : results) {
      nlohmann::ordered_json item;
      item["name"] = r.name;
      item["status"] = r.informational ? "info" : (r.passed ? "pass" : "fail");
      item["instances"] = r.instances;
      item["detail"] = r.detail;
      j.push_back(item);
    }
    nlohmann::ordered_json doc;
    doc["passed"] = all_passed(results);
    doc["checks"] = j;
    return doc.dump(2) + '\n';
  }
  std::ostringstream out;
  for (const auto& r : results) {
    out << (r.informational ? "INFO" : (r.passed ? "PASS" : "FAIL")) << "  " << r.name << "  [" << r.instances
        << " instances]";
    if (!r.detail.empty()) out << "  " << r.detail;
    out << '\n';
  }
  return out.str();
}

bool all_passed(const std::vector<CheckResult>& results) {
  return std::all_of(results.begin(), results.end(), [](const CheckResult& r) { return r.informational || r.passed; });
}

}  // namespace icf::verify
