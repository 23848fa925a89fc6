#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "icf/bigint.hpp"
#include "icf/combinatorics.hpp"

namespace icf {

/// Root-color sequence c_1..c_m over colors 1..k with cached multiplicities.
class ColorSeq {
 public:
  ColorSeq(int k, std::vector<int> entries);
  /// The sorted sequence 1^{m_1} 2^{m_2} ... k^{m_k}.
  static ColorSeq from_multiplicities(std::span<const int> multiplicities);

  int k() const { return k_; }
  int m() const { return static_cast<int>(entries_.size()); }
  std::span<const int> entries() const { return entries_; }
  std::span<const int> multiplicities() const { return mult_; }
  /// Number of roots of the given (1-based) color.
  int multiplicity(int color) const { return mult_.at(static_cast<std::size_t>(color - 1)); }

  ColorSeq without_last() const;
  ColorSeq appended(std::span<const int> colors) const;

  std::string to_string() const;

  friend bool operator==(const ColorSeq&, const ColorSeq&) = default;

 private:
  int k_;
  std::vector<int> entries_;
  std::vector<int> mult_;
};

/// 0 <= lambda_i - mult_i <= |lambda| - lambda_i for every color.
bool feasible(const Composition& lambda, const ColorSeq& roots);

/// Number of isomorphism classes of injectively colored forests with the given character and roots.
BigCount count_forests(const Composition& lambda, const ColorSeq& roots);

/// Number of injectively colored trees with character lambda and root color `root`.
BigCount count_trees(const Composition& lambda, int root);

/// Forests on n vertices, k colors and m roots (any fixed root sequence): (m/n) C(kn-n, n-m).
BigCount count_forests_total(int n, int k, int m);

/// Distribution of A_n(p,1) over nu in Lambda_p(<n).
BigCount xi(int n, const Composition& nu);

/// Distribution of A_n(p, p*l) over mu in Lambda_p(<=n) for a partition rho of l into p+1 parts.
/// Computed as a forest count on rho + (mu, n - |mu|) with roots 1^{rho_1} ... (p+1)^{rho_{p+1}}.
BigCount alpha(int n, const Partition& rho, const Composition& mu);

/// The closed form of alpha written with P_{p+1} and binomials; nullopt when a denominator vanishes.
std::optional<BigCount> alpha_closed_form(int n, const Partition& rho, const Composition& mu);

/// Triangulations of the convex n-gon whose proper 3-coloring has type lambda.
BigCount count_triangulations_by_type(int n, const Partition& lambda);

}  // namespace icf
