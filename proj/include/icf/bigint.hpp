#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace icf {

/// Arbitrary-precision integer used for every count in the library.
using BigCount = mpz_class;

inline std::string to_string(const BigCount& value) { return value.get_str(10); }

/// Divides `num` by `den`, throwing std::logic_error unless the division is exact.
inline BigCount exact_div(const BigCount& num, const BigCount& den, const char* where) {
  if (den == 0) throw std::logic_error(std::string(where) + ": division by zero");
  BigCount q, r;
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  if (r != 0) throw std::logic_error(std::string(where) + ": inexact division");
  return q;
}

inline BigCount pow(const BigCount& base, unsigned long exponent) {
  BigCount out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
  return out;
}

}  // namespace icf
