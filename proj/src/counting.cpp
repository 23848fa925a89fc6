#include "icf/counting.hpp"

#include <algorithm>
#include <stdexcept>

#include "icf/keypoly.hpp"

namespace icf {

ColorSeq::ColorSeq(int k, std::vector<int> entries) : k_(k), entries_(std::move(entries)) {
  if (k < 1) throw std::domain_error("ColorSeq: k must be >= 1");
  mult_.assign(static_cast<std::size_t>(k), 0);
  for (int c : entries_) {
    if (c < 1 || c > k) {
      throw std::domain_error("ColorSeq: color " + std::to_string(c) + " outside [1," + std::to_string(k) + "]");
    }
    ++mult_[static_cast<std::size_t>(c - 1)];
  }
}

ColorSeq ColorSeq::from_multiplicities(std::span<const int> multiplicities) {
  std::vector<int> entries;
  for (std::size_t i = 0; i < multiplicities.size(); ++i) {
    if (multiplicities[i] < 0) throw std::domain_error("ColorSeq: negative multiplicity");
    entries.insert(entries.end(), static_cast<std::size_t>(multiplicities[i]), static_cast<int>(i) + 1);
  }
  return ColorSeq(static_cast<int>(multiplicities.size()), std::move(entries));
}

ColorSeq ColorSeq::without_last() const {
  if (entries_.empty()) throw std::domain_error("ColorSeq: no last root");
  return ColorSeq(k_, std::vector<int>(entries_.begin(), entries_.end() - 1));
}

ColorSeq ColorSeq::appended(std::span<const int> colors) const {
  std::vector<int> out(entries_);
  out.insert(out.end(), colors.begin(), colors.end());
  return ColorSeq(k_, std::move(out));
}

std::string ColorSeq::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(entries_[i]);
  }
  return out;
}

namespace {

void require_same_k(const Composition& lambda, const ColorSeq& roots) {
  if (lambda.k() != roots.k()) throw std::domain_error("character and root sequence use different k");
}

}  // namespace

bool feasible(const Composition& lambda, const ColorSeq& roots) {
  require_same_k(lambda, roots);
  for (int i = 1; i <= lambda.k(); ++i) {
    const int nonroots = lambda.at_color(i) - roots.multiplicity(i);
    if (nonroots < 0 || nonroots > lambda.total() - lambda.at_color(i)) return false;
  }
  return true;
}

BigCount count_forests(const Composition& lambda, const ColorSeq& roots) {
  require_same_k(lambda, roots);
  const int n = lambda.total();
  const int m = roots.m();
  const int k = lambda.k();

  // Single-color characters (including the empty one) are tested first: the general
  // expression divides by |lambda| - lambda_i.
  for (int i = 1; i <= k; ++i) {
    if (lambda.at_color(i) == n) return (m == n && m == roots.multiplicity(i)) ? 1 : 0;
  }

  BigCount num = eval_pk(lambda.parts(), roots.multiplicities());
  BigCount den = 1;
  for (int i = 1; i <= k; ++i) {
    const int rest = n - lambda.at_color(i);
    num *= binomial(rest, lambda.at_color(i) - roots.multiplicity(i));
    if (num == 0) return 0;
    den *= rest;
  }
  return exact_div(num, den, "count_forests");
}

BigCount count_trees(const Composition& lambda, int root) {
  const int k = lambda.k();
  if (root < 1 || root > k) throw std::domain_error("count_trees: root color out of range");
  if (lambda.at_color(root) == 0) return 0;
  const int n = lambda.total();
  if (k == 1) return n == 1 ? 1 : 0;

  const int lc = lambda.at_color(root);
  BigCount num = icf::pow(BigCount(n), static_cast<unsigned long>(k - 2)) * binomial(n - lc, lc - 1);
  BigCount den = 1;
  for (int i = 1; i <= k; ++i) {
    if (i == root) continue;
    const int rest = n - lambda.at_color(i);
    num *= binomial(rest, lambda.at_color(i));
    den *= rest;
  }
  if (num == 0) return 0;
  return exact_div(num, den, "count_trees");
}

BigCount count_forests_total(int n, int k, int m) {
  if (n < 1 || m < 1 || k < 1) throw std::domain_error("count_forests_total: n, k, m must be positive");
  return exact_div(BigCount(m) * binomial(static_cast<long>(k) * n - n, n - m), BigCount(n), "count_forests_total");
}

BigCount xi(int n, const Composition& nu) {
  if (n < 1) throw std::domain_error("xi: n must be positive");
  if (nu.total() >= n) throw std::domain_error("xi: need |nu| < n");
  const int p = nu.k();
  BigCount num = icf::pow(BigCount(n), static_cast<unsigned long>(p - 1)) * binomial(nu.total(), n - nu.total() - 1);
  BigCount den = 1;
  for (int v : nu.parts()) {
    num *= binomial(n - v, v);
    den *= (n - v);
  }
  if (num == 0) return 0;
  return exact_div(num, den, "xi");
}

namespace {

struct AlphaInput {
  Composition character;  // rho + (mu, n - |mu|)
  ColorSeq roots;
};

AlphaInput alpha_input(int n, const Partition& rho, const Composition& mu) {
  const int p = mu.k();
  if (rho.k() != p + 1) throw std::domain_error("alpha: rho must have p+1 parts");
  if (n < 0) throw std::domain_error("alpha: n must be nonnegative");
  if (mu.total() > n) throw std::domain_error("alpha: need |mu| <= n");
  std::vector<int> hat(mu.parts().begin(), mu.parts().end());
  hat.push_back(n - mu.total());
  return {rho.composition() + Composition(std::move(hat)), ColorSeq::from_multiplicities(rho.parts())};
}

}  // namespace

BigCount alpha(int n, const Partition& rho, const Composition& mu) {
  const auto input = alpha_input(n, rho, mu);
  return count_forests(input.character, input.roots);
}

std::optional<BigCount> alpha_closed_form(int n, const Partition& rho, const Composition& mu) {
  const auto input = alpha_input(n, rho, mu);
  const int p = mu.k();
  const int ell = rho.total();
  if (rho[0] == ell && mu[0] == n) return BigCount(n == 0 ? 1 : 0);

  BigCount num = eval_pk(input.character.parts(), rho.parts());
  BigCount den = 1;
  const int last = ell + mu.total() - rho[static_cast<std::size_t>(p)];
  num *= binomial(last, n - mu.total());
  den *= last;
  for (int i = 0; i < p; ++i) {
    const int rest = ell + n - rho[static_cast<std::size_t>(i)] - mu[static_cast<std::size_t>(i)];
    num *= binomial(rest, mu[static_cast<std::size_t>(i)]);
    den *= rest;
  }
  if (den == 0) return std::nullopt;
  return exact_div(num, den, "alpha_closed_form");
}

BigCount count_triangulations_by_type(int n, const Partition& lambda) {
  if (n < 3) throw std::domain_error("count_triangulations_by_type: n must be >= 3");
  if (lambda.k() != 3) throw std::domain_error("count_triangulations_by_type: type must have 3 parts");
  if (lambda.total() != n) throw std::domain_error("count_triangulations_by_type: |lambda| must equal n");
  if (lambda[2] == 0) return 0;
  BigCount num = orbit_size(lambda) * n * (n - 2);
  BigCount den = 3;
  for (int v : lambda.parts()) {
    num *= binomial(n - v - 1, v - 1);
    den *= (n - v - 1);
  }
  if (num == 0) return 0;
  return exact_div(num, den, "count_triangulations_by_type");
}

}  // namespace icf
