#pragma once

#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "icf/bigint.hpp"

namespace icf {

using Exponents = std::vector<int>;

/// Graded lexicographic order, largest monomial first (x1 > x2 > ... > y1 > ...).
struct GradedLexGreater {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

/// Exact multivariate polynomial over Z. Variables are indexed 0..num_vars-1;
/// with an even count the first half prints as x1..xk and the second as y1..yk.
class SparsePoly {
 public:
  using TermMap = std::map<Exponents, BigCount, GradedLexGreater>;

  explicit SparsePoly(int num_vars);

  static SparsePoly constant(int num_vars, const BigCount& value);
  static SparsePoly variable(int num_vars, int index);

  int num_vars() const { return num_vars_; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  /// Adds c * monomial(e); drops the term if the coefficient cancels.
  void add_term(const Exponents& e, const BigCount& c);

  SparsePoly& operator+=(const SparsePoly& other);
  SparsePoly& operator-=(const SparsePoly& other);
  SparsePoly& operator*=(const BigCount& scalar);

  friend SparsePoly operator+(SparsePoly a, const SparsePoly& b) { return a += b; }
  friend SparsePoly operator-(SparsePoly a, const SparsePoly& b) { return a -= b; }
  friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b);
  friend SparsePoly operator*(SparsePoly a, const BigCount& s) { return a *= s; }
  SparsePoly operator-() const;

  SparsePoly pow(unsigned exponent) const;

  BigCount evaluate(std::span<const BigCount> point) const;

  /// -1 for the zero polynomial.
  int total_degree() const;
  bool is_homogeneous(int degree) const;

  friend bool operator==(const SparsePoly& a, const SparsePoly& b) {
    return a.num_vars_ == b.num_vars_ && a.terms_ == b.terms_;
  }

 private:
  void check_arity(const SparsePoly& other) const;

  int num_vars_;
  TermMap terms_;
};

enum class PolyOp { add, sub, mul };

SparsePoly poly_arith(const SparsePoly& a, const SparsePoly& b, PolyOp op);

/// Replaces variable i by assignments.at(i) for each key; other variables are kept.
SparsePoly substitute(const SparsePoly& p, const std::map<int, SparsePoly>& assignments);

std::string variable_name(int num_vars, int index);

/// Canonical rendering: graded-lex order, "2*x1^2*y3 - y1*y2", "0" for zero.
std::string to_string(const SparsePoly& p);

/// Parses the canonical rendering (spaces optional, a bare number is a constant).
SparsePoly parse_poly(std::string_view text, int num_vars);

}  // namespace icf
