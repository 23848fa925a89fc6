#pragma once

#include <cstddef>
#include <initializer_list>
#include <iterator>
#include <span>
#include <string>
#include <vector>

#include "icf/bigint.hpp"

namespace icf {

/// An element of Z_{>=0}^k: k nonnegative parts with a cached total.
class Composition {
 public:
  Composition() = default;
  explicit Composition(std::vector<int> parts);
  Composition(std::initializer_list<int> parts) : Composition(std::vector<int>(parts)) {}

  static Composition zero(int k);
  /// The unit vector with part `color` (1-based) equal to 1.
  static Composition unit(int k, int color);

  int k() const { return static_cast<int>(parts_.size()); }
  int total() const { return total_; }
  std::span<const int> parts() const { return parts_; }
  /// 0-based access.
  int operator[](std::size_t i) const { return parts_[i]; }
  /// 1-based access matching color indices.
  int at_color(int color) const { return parts_.at(static_cast<std::size_t>(color - 1)); }

  bool is_zero() const { return total_ == 0; }
  bool is_weakly_decreasing() const;

  Composition operator+(const Composition& other) const;
  /// Componentwise difference; throws std::domain_error if a part would go negative.
  Composition operator-(const Composition& other) const;
  Composition with_part(int color, int value) const;

  std::string to_string() const;  // "3,1,1"

  friend bool operator==(const Composition&, const Composition&) = default;
  friend auto operator<=>(const Composition& a, const Composition& b) { return a.parts_ <=> b.parts_; }

 private:
  std::vector<int> parts_;
  int total_ = 0;
};

/// A weakly decreasing composition.
class Partition {
 public:
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}
  explicit Partition(const Composition& c);

  const Composition& composition() const { return comp_; }
  int k() const { return comp_.k(); }
  int total() const { return comp_.total(); }
  int operator[](std::size_t i) const { return comp_[i]; }
  std::span<const int> parts() const { return comp_.parts(); }
  std::string to_string() const { return comp_.to_string(); }

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  Composition comp_;
};

/// Parses a comma-separated list of integers ("3,1,1"); empty string gives an empty list.
std::vector<int> parse_int_list(const std::string& text);

/// C(a, b), zero outside 0 <= b <= a.
BigCount binomial(long a, long b);

enum class CompositionMode { exact, less_than, at_most };

/// Lazy lexicographic stream over Lambda_k(n), Lambda_k(<n) or Lambda_k(<=n).
class CompositionRange {
 public:
  CompositionRange(int k, int n, CompositionMode mode);

  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = Composition;
    using difference_type = std::ptrdiff_t;
    using pointer = const Composition*;
    using reference = const Composition&;

    iterator() = default;
    reference operator*() const { return current_; }
    pointer operator->() const { return &current_; }
    iterator& operator++();
    void operator++(int) { ++*this; }
    friend bool operator==(const iterator& it, std::default_sentinel_t) { return it.done_; }

   private:
    friend class CompositionRange;
    iterator(const CompositionRange* owner, bool done);

    const CompositionRange* owner_ = nullptr;
    std::vector<int> parts_;
    Composition current_;
    bool done_ = true;
  };

  iterator begin() const;
  std::default_sentinel_t end() const { return {}; }

  int k() const { return k_; }
  int bound() const { return bound_; }
  bool exact() const { return exact_; }

 private:
  int k_;
  int bound_;  // maximal total; -1 for an empty range
  bool exact_;
};

inline CompositionRange compositions(int k, int n, CompositionMode mode = CompositionMode::exact) {
  return {k, n, mode};
}

std::vector<Composition> all_compositions(int k, int n, CompositionMode mode = CompositionMode::exact);

/// Lambda_k^+(n) in lexicographically decreasing order, e.g. (3,2,1),(2,2,2) for k=3, n=6.
std::vector<Partition> partitions(int k, int n);

/// Number of distinct rearrangements of lambda: k! / prod(mult_v!).
BigCount orbit_size(const Partition& lambda);

/// Fuss-Catalan (Raney) number A_n(p,r) = r/(np+r) * C(np+r, n).
BigCount fuss_catalan(long n, long p, long r);

/// [A_0(p,r), ..., A_{N-1}(p,r)] from the closed form.
std::vector<BigCount> fuss_catalan_series(long p, long r, int count);

/// A_0(p,1) .. A_{N-1}(p,1) from the convolution recurrence over Lambda_p(n-1).
std::vector<BigCount> fuss_catalan_recurrence(long p, int count);

/// First `count` coefficients of series^power.
std::vector<BigCount> series_power(std::span<const BigCount> series, int power, int count);

}  // namespace icf
