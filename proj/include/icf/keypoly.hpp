#pragma once

#include <set>
#include <span>
#include <vector>

#include "icf/bigint.hpp"
#include "icf/sparse_poly.hpp"

namespace icf {

/// The key polynomial P_k in variables x1..xk, y1..yk (homogeneous of degree k):
///
///   P_k = sum_{S subset [1,k]} (-1)^|S| (x_S - |S| x_all) x_all^(k-|S|-1) y_S
///
/// where x_S is a sum, y_S a product, and the S = [1,k] summand reads (-1)^k (1-k) y1...yk.
SparsePoly build_pk(int k);

/// P_k with x_k -> x_k - 1, y_i -> y_i + [i in I] (i < k), y_k -> y_k - 1.
/// `shift_set` must be a subset of {1, ..., k-1}.
SparsePoly build_pk_shift(int k, const std::set<int>& shift_set);

/// Direct evaluation over the 2^k subsets, no symbolic expansion.
BigCount eval_pk(int k, std::span<const BigCount> xs, std::span<const BigCount> ys);
BigCount eval_pk(std::span<const int> xs, std::span<const int> ys);

enum class PkIdentity {
  vanishes_without_roots,  // P_k(x, 0) = 0
  two_color_restriction,   // P_k at x = e_a + e_b, y restricted to {a,b}: 2^(k-2)(y_a + y_b - y_a y_b)
  color_symmetry,          // invariance under simultaneous permutation of x and y
  shift_recurrence,        // P_k * prod(x_all - x_i - 1) = sum_I P_k^(I) * ...
};

/// Parses "i", "ii", "iii", "iv" into the matching identity.
PkIdentity parse_pk_identity(const std::string& label);
const char* label(PkIdentity part);

/// Checks the identity by full symbolic expansion. For color_symmetry, every permutation is
/// checked when k <= 4 and the adjacent transpositions (a generating set) otherwise.
bool check_pk_identity(int k, PkIdentity part);

/// Both sides of the shift recurrence, expanded.
struct ShiftRecurrenceSides {
  SparsePoly lhs;
  SparsePoly rhs;
};
ShiftRecurrenceSides shift_recurrence_sides(int k);

/// P_k after the change of variables x_i = z_i + y_i (z printed in the x slots).
SparsePoly pk_in_z_variables(int k);

}  // namespace icf
