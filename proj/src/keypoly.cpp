#include "icf/keypoly.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>
#include <string>

namespace icf {

namespace {

void require_k(int k) {
  if (k < 1) throw std::domain_error("key polynomial: k must be >= 1");
  if (k > 16) throw std::domain_error("key polynomial: k too large for subset expansion");
}

SparsePoly x_var(int k, int color) { return SparsePoly::variable(2 * k, color - 1); }
SparsePoly y_var(int k, int color) { return SparsePoly::variable(2 * k, k + color - 1); }

SparsePoly x_sum(int k) {
  SparsePoly s(2 * k);
  for (int i = 1; i <= k; ++i) s += x_var(k, i);
  return s;
}

SparsePoly constant(int k, long value) { return SparsePoly::constant(2 * k, value); }

}  // namespace

SparsePoly build_pk(int k) {
  require_k(k);
  const int nv = 2 * k;
  const SparsePoly x_all = x_sum(k);
  std::vector<SparsePoly> x_all_pow{constant(k, 1)};
  for (int e = 1; e < k; ++e) x_all_pow.push_back(x_all_pow.back() * x_all);

  SparsePoly out(nv);
  const unsigned full = (1u << k) - 1u;
  for (unsigned mask = 0; mask <= full; ++mask) {
    const int size = std::popcount(mask);
    Exponents y_mono(static_cast<std::size_t>(nv), 0);
    for (int i = 0; i < k; ++i) {
      if (mask & (1u << i)) y_mono[static_cast<std::size_t>(k + i)] = 1;
    }
    SparsePoly y_prod(nv);
    y_prod.add_term(y_mono, 1);
    const long sign = (size % 2 == 0) ? 1 : -1;

    if (mask == full) {
      out += y_prod * BigCount(sign * (1 - k));
      continue;
    }
    SparsePoly linear(nv);
    for (int i = 0; i < k; ++i) {
      if (mask & (1u << i)) linear += x_var(k, i + 1);
    }
    linear -= x_all * BigCount(size);
    out += linear * x_all_pow[static_cast<std::size_t>(k - size - 1)] * y_prod * BigCount(sign);
  }
  if (!out.is_homogeneous(k)) throw std::logic_error("build_pk: result is not homogeneous of degree k");
  return out;
}

SparsePoly build_pk_shift(int k, const std::set<int>& shift_set) {
  require_k(k);
  for (int i : shift_set) {
    if (i < 1 || i > k - 1) throw std::domain_error("build_pk_shift: shift index outside [1, k-1]");
  }
  std::map<int, SparsePoly> sub;
  sub.emplace(k - 1, x_var(k, k) - constant(k, 1));
  for (int i : shift_set) sub.emplace(k + i - 1, y_var(k, i) + constant(k, 1));
  sub.emplace(2 * k - 1, y_var(k, k) - constant(k, 1));
  return substitute(build_pk(k), sub);
}

BigCount eval_pk(int k, std::span<const BigCount> xs, std::span<const BigCount> ys) {
  require_k(k);
  if (static_cast<int>(xs.size()) != k || static_cast<int>(ys.size()) != k) {
    throw std::domain_error("eval_pk: expected k values for xs and ys");
  }
  BigCount x_all = 0;
  for (const auto& x : xs) x_all += x;

  BigCount total = 0;
  const unsigned full = (1u << k) - 1u;
  for (unsigned mask = 0; mask <= full; ++mask) {
    const int size = std::popcount(mask);
    BigCount y_prod = 1;
    BigCount x_part = 0;
    for (int i = 0; i < k; ++i) {
      if (mask & (1u << i)) {
        y_prod *= ys[static_cast<std::size_t>(i)];
        x_part += xs[static_cast<std::size_t>(i)];
      }
    }
    if (y_prod == 0) continue;
    BigCount term;
    if (mask == full) {
      term = BigCount(1 - k) * y_prod;
    } else {
      term = (x_part - BigCount(size) * x_all) * icf::pow(x_all, static_cast<unsigned long>(k - size - 1)) * y_prod;
    }
    if (size % 2) term = -term;
    total += term;
  }
  return total;
}

BigCount eval_pk(std::span<const int> xs, std::span<const int> ys) {
  std::vector<BigCount> bx(xs.begin(), xs.end());
  std::vector<BigCount> by(ys.begin(), ys.end());
  return eval_pk(static_cast<int>(xs.size()), bx, by);
}

PkIdentity parse_pk_identity(const std::string& label) {
  if (label == "i") return PkIdentity::vanishes_without_roots;
  if (label == "ii") return PkIdentity::two_color_restriction;
  if (label == "iii") return PkIdentity::color_symmetry;
  if (label == "iv") return PkIdentity::shift_recurrence;
  throw std::invalid_argument("unknown identity part '" + label + "' (expected i, ii, iii or iv)");
}

const char* label(PkIdentity part) {
  switch (part) {
    case PkIdentity::vanishes_without_roots: return "i";
    case PkIdentity::two_color_restriction: return "ii";
    case PkIdentity::color_symmetry: return "iii";
    case PkIdentity::shift_recurrence: return "iv";
  }
  return "?";
}

namespace {

bool check_vanishing(int k, const SparsePoly& pk) {
  std::map<int, SparsePoly> sub;
  for (int i = 1; i <= k; ++i) sub.emplace(k + i - 1, constant(k, 0));
  return substitute(pk, sub).is_zero();
}

bool check_two_color(int k, const SparsePoly& pk) {
  for (int a = 1; a <= k; ++a) {
    for (int b = a + 1; b <= k; ++b) {
      std::map<int, SparsePoly> sub;
      for (int i = 1; i <= k; ++i) {
        const bool in = (i == a || i == b);
        sub.emplace(i - 1, constant(k, in ? 1 : 0));
        sub.emplace(k + i - 1, in ? y_var(k, i) : constant(k, 0));
      }
      SparsePoly expected = y_var(k, a) + y_var(k, b) - y_var(k, a) * y_var(k, b);
      expected *= icf::pow(BigCount(2), static_cast<unsigned long>(k - 2));
      if (!(substitute(pk, sub) == expected)) return false;
    }
  }
  return true;
}

bool symmetric_under(int k, const SparsePoly& pk, const std::vector<int>& perm) {
  std::map<int, SparsePoly> sub;
  for (int i = 0; i < k; ++i) {
    sub.emplace(i, x_var(k, perm[static_cast<std::size_t>(i)] + 1));
    sub.emplace(k + i, y_var(k, perm[static_cast<std::size_t>(i)] + 1));
  }
  return substitute(pk, sub) == pk;
}

bool check_symmetry(int k, const SparsePoly& pk) {
  std::vector<int> perm(static_cast<std::size_t>(k));
  std::iota(perm.begin(), perm.end(), 0);
  if (k <= 4) {
    do {
      if (!symmetric_under(k, pk, perm)) return false;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return true;
  }
  for (int i = 0; i + 1 < k; ++i) {
    std::vector<int> swap = perm;
    std::swap(swap[static_cast<std::size_t>(i)], swap[static_cast<std::size_t>(i + 1)]);
    if (!symmetric_under(k, pk, swap)) return false;
  }
  return true;
}

}  // namespace

ShiftRecurrenceSides shift_recurrence_sides(int k) {
  require_k(k);
  if (k < 2) throw std::domain_error("shift recurrence needs k >= 2");
  const SparsePoly x_all = x_sum(k);
  const SparsePoly one = constant(k, 1);

  SparsePoly lhs = build_pk(k);
  for (int i = 1; i <= k - 1; ++i) lhs = lhs * (x_all - x_var(k, i) - one);

  SparsePoly rhs(2 * k);
  const unsigned subsets = 1u << (k - 1);
  for (unsigned mask = 0; mask < subsets; ++mask) {
    std::set<int> shift_set;
    for (int i = 1; i <= k - 1; ++i) {
      if (mask & (1u << (i - 1))) shift_set.insert(i);
    }
    SparsePoly term = build_pk_shift(k, shift_set);
    for (int i = 1; i <= k - 1; ++i) {
      if (shift_set.count(i)) {
        term = term * (x_var(k, i) - y_var(k, i));
      } else {
        term = term * (x_all - x_var(k, i) * BigCount(2) + y_var(k, i));
      }
    }
    rhs += term;
  }
  return {std::move(lhs), std::move(rhs)};
}

bool check_pk_identity(int k, PkIdentity part) {
  require_k(k);
  if ((part == PkIdentity::two_color_restriction || part == PkIdentity::shift_recurrence) && k < 2) {
    throw std::domain_error("identity needs k >= 2");
  }
  switch (part) {
    case PkIdentity::vanishes_without_roots: return check_vanishing(k, build_pk(k));
    case PkIdentity::two_color_restriction: return check_two_color(k, build_pk(k));
    case PkIdentity::color_symmetry: return check_symmetry(k, build_pk(k));
    case PkIdentity::shift_recurrence: {
      const auto sides = shift_recurrence_sides(k);
      return (sides.lhs - sides.rhs).is_zero();
    }
  }
  return false;
}

SparsePoly pk_in_z_variables(int k) {
  std::map<int, SparsePoly> sub;
  for (int i = 1; i <= k; ++i) sub.emplace(i - 1, x_var(k, i) + y_var(k, i));
  return substitute(build_pk(k), sub);
}

}  // namespace icf
