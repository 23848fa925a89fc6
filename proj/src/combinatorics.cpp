#include "icf/combinatorics.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace icf {

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw std::domain_error("composition needs k >= 1 parts");
  for (int p : parts_) {
    if (p < 0) throw std::domain_error("composition parts must be nonnegative");
  }
  total_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Composition Composition::zero(int k) {
  if (k < 1) throw std::domain_error("composition needs k >= 1 parts");
  return Composition(std::vector<int>(static_cast<std::size_t>(k), 0));
}

Composition Composition::unit(int k, int color) {
  if (color < 1 || color > k) throw std::domain_error("color out of range");
  std::vector<int> parts(static_cast<std::size_t>(k), 0);
  parts[static_cast<std::size_t>(color - 1)] = 1;
  return Composition(std::move(parts));
}

bool Composition::is_weakly_decreasing() const {
  return std::is_sorted(parts_.begin(), parts_.end(), std::greater<>());
}

Composition Composition::operator+(const Composition& other) const {
  if (k() != other.k()) throw std::domain_error("composition length mismatch");
  std::vector<int> out(parts_);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += other.parts_[i];
  return Composition(std::move(out));
}

Composition Composition::operator-(const Composition& other) const {
  if (k() != other.k()) throw std::domain_error("composition length mismatch");
  std::vector<int> out(parts_);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] -= other.parts_[i];
  return Composition(std::move(out));
}

Composition Composition::with_part(int color, int value) const {
  std::vector<int> out(parts_);
  out.at(static_cast<std::size_t>(color - 1)) = value;
  return Composition(std::move(out));
}

std::string Composition::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out;
}

Partition::Partition(std::vector<int> parts) : Partition(Composition(std::move(parts))) {}

Partition::Partition(const Composition& c) : comp_(c) {
  if (!comp_.is_weakly_decreasing()) throw std::domain_error("partition parts must be weakly decreasing");
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto first = item.find_first_not_of(' ');
    const auto last = item.find_last_not_of(' ');
    item = first == std::string::npos ? std::string() : item.substr(first, last - first + 1);
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("not an integer: '" + item + "'");
    }
    if (used != item.size()) throw std::invalid_argument("not an integer: '" + item + "'");
    out.push_back(value);
  }
  return out;
}

BigCount binomial(long a, long b) {
  if (a < 0 || b < 0 || b > a) return 0;
  BigCount out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(b));
  return out;
}

CompositionRange::CompositionRange(int k, int n, CompositionMode mode) : k_(k), exact_(mode == CompositionMode::exact) {
  if (k < 1) throw std::domain_error("compositions: k must be >= 1");
  switch (mode) {
    case CompositionMode::exact: bound_ = n < 0 ? -1 : n; break;
    case CompositionMode::less_than: bound_ = n - 1; break;
    case CompositionMode::at_most: bound_ = n; break;
  }
  if (bound_ < 0) bound_ = -1;
}

CompositionRange::iterator CompositionRange::begin() const { return iterator(this, bound_ < 0); }

CompositionRange::iterator::iterator(const CompositionRange* owner, bool done) : owner_(owner), done_(done) {
  if (done_) return;
  parts_.assign(static_cast<std::size_t>(owner_->k_), 0);
  if (owner_->exact_) parts_.back() = owner_->bound_;
  current_ = Composition(parts_);
}

CompositionRange::iterator& CompositionRange::iterator::operator++() {
  const std::size_t k = parts_.size();
  if (owner_->exact_) {
    // Bump the rightmost position j < k-1 that still has mass after it.
    std::size_t j = k - 1;
    int tail = parts_[k - 1];
    bool advanced = false;
    while (j > 0) {
      --j;
      if (tail > 0) {
        parts_[j] += 1;
        for (std::size_t i = j + 1; i + 1 < k; ++i) parts_[i] = 0;
        parts_[k - 1] = tail - 1;
        advanced = true;
        break;
      }
      tail += parts_[j];
    }
    if (!advanced) {
      done_ = true;
      return *this;
    }
  } else {
    const int bound = owner_->bound_;
    int sum = std::accumulate(parts_.begin(), parts_.end(), 0);
    bool advanced = false;
    for (std::size_t j = k; j-- > 0;) {
      // Zero everything after j, then bump j if the prefix allows it.
      if (sum + 1 <= bound) {
        parts_[j] += 1;
        advanced = true;
        break;
      }
      sum -= parts_[j];
      parts_[j] = 0;
    }
    if (!advanced) {
      done_ = true;
      return *this;
    }
  }
  current_ = Composition(parts_);
  return *this;
}

std::vector<Composition> all_compositions(int k, int n, CompositionMode mode) {
  std::vector<Composition> out;
  for (const auto& c : compositions(k, n, mode)) out.push_back(c);
  return out;
}

namespace {

void partitions_rec(int k, int remaining, int max_part, std::vector<int>& prefix, std::vector<Partition>& out) {
  if (static_cast<int>(prefix.size()) == k) {
    if (remaining == 0) out.emplace_back(prefix);
    return;
  }
  const int slots = k - static_cast<int>(prefix.size());
  for (int v = std::min(max_part, remaining); v >= 0; --v) {
    if (v * slots < remaining) break;
    prefix.push_back(v);
    partitions_rec(k, remaining - v, v, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions(int k, int n) {
  if (k < 1) throw std::domain_error("partitions: k must be >= 1");
  std::vector<Partition> out;
  if (n < 0) return out;
  std::vector<int> prefix;
  partitions_rec(k, n, n, prefix, out);
  return out;
}

BigCount orbit_size(const Partition& lambda) {
  std::map<int, unsigned long> mult;
  for (int v : lambda.parts()) ++mult[v];
  BigCount num;
  mpz_fac_ui(num.get_mpz_t(), static_cast<unsigned long>(lambda.k()));
  BigCount den = 1;
  for (const auto& [value, m] : mult) {
    BigCount f;
    mpz_fac_ui(f.get_mpz_t(), m);
    den *= f;
  }
  return exact_div(num, den, "orbit_size");
}

BigCount fuss_catalan(long n, long p, long r) {
  if (r <= 0) throw std::domain_error("fuss_catalan: r must be positive");
  if (n < 0 || p < 0) throw std::domain_error("fuss_catalan: n and p must be nonnegative");
  const long top = n * p + r;
  return exact_div(BigCount(r) * binomial(top, n), BigCount(top), "fuss_catalan");
}

std::vector<BigCount> fuss_catalan_series(long p, long r, int count) {
  if (count < 1) throw std::domain_error("fuss_catalan_series: need at least one term");
  std::vector<BigCount> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int n = 0; n < count; ++n) out.push_back(fuss_catalan(n, p, r));
  return out;
}

std::vector<BigCount> fuss_catalan_recurrence(long p, int count) {
  if (count < 1) throw std::domain_error("fuss_catalan_recurrence: need at least one term");
  if (p < 0) throw std::domain_error("fuss_catalan_recurrence: p must be nonnegative");
  std::vector<BigCount> a{1};
  for (int n = 1; n < count; ++n) {
    BigCount sum = 0;
    if (p == 0) {
      sum = n == 1 ? 1 : 0;  // Lambda_0(n-1) holds only the empty tuple, at n-1 = 0
    } else {
      for (const auto& lambda : compositions(static_cast<int>(p), n - 1)) {
        BigCount term = 1;
        for (int part : lambda.parts()) term *= a[static_cast<std::size_t>(part)];
        sum += term;
      }
    }
    a.push_back(sum);
  }
  return a;
}

std::vector<BigCount> series_power(std::span<const BigCount> series, int power, int count) {
  if (power < 0) throw std::domain_error("series_power: negative power");
  const auto n = static_cast<std::size_t>(count);
  std::vector<BigCount> result(n, 0);
  if (n == 0) return result;
  result[0] = 1;
  for (int step = 0; step < power; ++step) {
    std::vector<BigCount> next(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      if (result[i] == 0) continue;
      for (std::size_t j = 0; i + j < n && j < series.size(); ++j) next[i + j] += result[i] * series[j];
    }
    result = std::move(next);
  }
  return result;
}

}  // namespace icf
