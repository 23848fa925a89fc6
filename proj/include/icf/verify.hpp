#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "icf/keypoly.hpp"

namespace icf::verify {

struct CheckResult {
  std::string name;
  bool passed = true;
  std::uint64_t instances = 0;
  std::string detail;        // first failure, or a short summary
  bool informational = false;  // reported, never counted as pass/fail
};

/// brute_count == count_forests for every lambda in Lambda_k(<= max_n) and every root
/// multiplicity vector with m <= max_m; infeasible inputs must count 0.
CheckResult oracle(int k, int max_n, int max_m);

/// count_trees(lambda, c) == count_forests(lambda, (c)).
CheckResult tree_forest_bridge(int k, int max_n);

/// Last-root deletion recurrence on every feasible instance with |lambda| <= max_n, checked
/// against both the closed form and the brute counter.
CheckResult forest_recurrence(int k, int max_n);

/// Child-subtree convolution for the (empty-extended) tree counts, using the closed form.
CheckResult tree_recurrence(int k, int max_n);

/// delete_last_root / attach_root round trips over enumerated forests, and grouping by the
/// removed child-color set reproduces the recurrence summands.
CheckResult last_root_maps(int k, int max_n, int max_m);

/// Enumerated streams: distinct canonical texts, correct character and roots, length = count.
CheckResult forest_streams(int k, int max_n, int max_m);

/// decompose_tree / assemble_tree identity over enumerated trees.
CheckResult tree_decomposition(int k, int max_n);

/// Root-order invariance and color-permutation equivariance on sampled inputs.
CheckResult count_symmetries(int k, int max_n, std::uint64_t seed, int samples);

/// Closed form vs convolution recurrence, and B_{p,r} = B_{p,1}^r coefficientwise.
CheckResult fuss_catalan_layer(int max_p, int max_n, int max_r, int terms);

/// Column sums over compositions: xi totals, alpha totals (with the closed-form cross-check),
/// tree totals and forest totals.
CheckResult distribution_sums(int max_p, int max_n);
CheckResult alpha_distributions(int p, int max_ell, int max_n);
CheckResult tree_totals(int max_k, int max_n);
CheckResult forest_totals(int max_k, int max_n, int max_m);

CheckResult pk_identity(int k, PkIdentity part);
CheckResult pk_homogeneity(int max_k);
/// eval_pk agrees with the expanded polynomial at `samples` seeded integer points.
CheckResult pk_evaluation(int k, std::uint64_t seed, int samples);
CheckResult pk_golden();

/// Formula census sums to C_{n-2} for 3 <= n <= max_formula_n; enumeration census equals the
/// formula census for n <= max_enum_n; every coloring is proper; equitable counts agree.
CheckResult census(int max_enum_n, int max_formula_n);

/// chi and chi_inverse are mutually inverse on all triangulations / trees for n <= max_n,
/// chi is injective, and the character bridge holds.
CheckResult chi_bijection(int max_n);

/// Minimum coefficient of P_k after x_i = z_i + y_i, reported only.
CheckResult z_coefficients(int k);

std::string render_report(const std::vector<CheckResult>& results, bool json);
bool all_passed(const std::vector<CheckResult>& results);

}  // namespace icf::verify
