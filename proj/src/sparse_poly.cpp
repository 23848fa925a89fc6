#include "icf/sparse_poly.hpp"

#include <cctype>
#include <numeric>
#include <stdexcept>

namespace icf {

bool GradedLexGreater::operator()(const Exponents& a, const Exponents& b) const {
  const int da = std::accumulate(a.begin(), a.end(), 0);
  const int db = std::accumulate(b.begin(), b.end(), 0);
  if (da != db) return da > db;
  return a > b;
}

SparsePoly::SparsePoly(int num_vars) : num_vars_(num_vars) {
  if (num_vars < 0) throw std::domain_error("SparsePoly: negative variable count");
}

SparsePoly SparsePoly::constant(int num_vars, const BigCount& value) {
  SparsePoly p(num_vars);
  p.add_term(Exponents(static_cast<std::size_t>(num_vars), 0), value);
  return p;
}

SparsePoly SparsePoly::variable(int num_vars, int index) {
  if (index < 0 || index >= num_vars) throw std::domain_error("SparsePoly: variable index out of range");
  SparsePoly p(num_vars);
  Exponents e(static_cast<std::size_t>(num_vars), 0);
  e[static_cast<std::size_t>(index)] = 1;
  p.add_term(e, 1);
  return p;
}

void SparsePoly::check_arity(const SparsePoly& other) const {
  if (num_vars_ != other.num_vars_) throw std::domain_error("SparsePoly: mismatched num_vars");
}

void SparsePoly::add_term(const Exponents& e, const BigCount& c) {
  if (static_cast<int>(e.size()) != num_vars_) throw std::domain_error("SparsePoly: exponent length mismatch");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

SparsePoly& SparsePoly::operator+=(const SparsePoly& other) {
  check_arity(other);
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

SparsePoly& SparsePoly::operator-=(const SparsePoly& other) {
  check_arity(other);
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

SparsePoly& SparsePoly::operator*=(const BigCount& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= scalar;
  return *this;
}

SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
  a.check_arity(b);
  SparsePoly out(a.num_vars_);
  Exponents e(static_cast<std::size_t>(a.num_vars_));
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

SparsePoly SparsePoly::operator-() const {
  SparsePoly out(*this);
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

SparsePoly SparsePoly::pow(unsigned exponent) const {
  SparsePoly result = constant(num_vars_, 1);
  SparsePoly base = *this;
  while (exponent) {
    if (exponent & 1u) result = result * base;
    exponent >>= 1u;
    if (exponent) base = base * base;
  }
  return result;
}

BigCount SparsePoly::evaluate(std::span<const BigCount> point) const {
  if (static_cast<int>(point.size()) != num_vars_) throw std::domain_error("SparsePoly: evaluation arity mismatch");
  BigCount sum = 0;
  for (const auto& [e, c] : terms_) {
    BigCount term = c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i]) term *= icf::pow(point[i], static_cast<unsigned long>(e[i]));
    }
    sum += term;
  }
  return sum;
}

int SparsePoly::total_degree() const {
  int best = -1;
  for (const auto& [e, c] : terms_) best = std::max(best, std::accumulate(e.begin(), e.end(), 0));
  return best;
}

bool SparsePoly::is_homogeneous(int degree) const {
  for (const auto& [e, c] : terms_) {
    if (std::accumulate(e.begin(), e.end(), 0) != degree) return false;
  }
  return true;
}

SparsePoly poly_arith(const SparsePoly& a, const SparsePoly& b, PolyOp op) {
  switch (op) {
    case PolyOp::add: return a + b;
    case PolyOp::sub: return a - b;
    case PolyOp::mul: return a * b;
  }
  throw std::domain_error("poly_arith: unknown op");
}

SparsePoly substitute(const SparsePoly& p, const std::map<int, SparsePoly>& assignments) {
  const int nv = p.num_vars();
  for (const auto& [index, repl] : assignments) {
    if (index < 0 || index >= nv) throw std::domain_error("substitute: variable index out of range");
    if (repl.num_vars() != nv) throw std::domain_error("substitute: replacement arity mismatch");
  }
  // powers[var][e] = replacement^e, filled lazily
  std::map<int, std::vector<SparsePoly>> powers;
  auto power_of = [&](int var, int e) -> const SparsePoly& {
    auto& cache = powers[var];
    if (cache.empty()) cache.push_back(SparsePoly::constant(nv, 1));
    while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * assignments.at(var));
    return cache[static_cast<std::size_t>(e)];
  };

  SparsePoly out(nv);
  for (const auto& [e, c] : p.terms()) {
    Exponents kept(e);
    SparsePoly term(nv);
    for (const auto& [var, repl] : assignments) kept[static_cast<std::size_t>(var)] = 0;
    term.add_term(kept, c);
    for (const auto& [var, repl] : assignments) {
      const int power = e[static_cast<std::size_t>(var)];
      if (power) term = term * power_of(var, power);
    }
    out += term;
  }
  return out;
}

std::string variable_name(int num_vars, int index) {
  if (num_vars % 2 == 0 && num_vars > 0) {
    const int k = num_vars / 2;
    return index < k ? "x" + std::to_string(index + 1) : "y" + std::to_string(index - k + 1);
  }
  return "v" + std::to_string(index + 1);
}

std::string to_string(const SparsePoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    const bool negative = c < 0;
    const BigCount mag = negative ? BigCount(-c) : c;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;

    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (!e[i]) continue;
      if (!mono.empty()) mono += '*';
      mono += variable_name(p.num_vars(), static_cast<int>(i));
      if (e[i] > 1) mono += '^' + std::to_string(e[i]);
    }
    if (mono.empty()) {
      out += to_string(mag);
    } else if (mag == 1) {
      out += mono;
    } else {
      out += to_string(mag) + '*' + mono;
    }
  }
  return out;
}

namespace {

class PolyParser {
 public:
  PolyParser(std::string_view text, int num_vars) : text_(text), num_vars_(num_vars) {}

  SparsePoly parse() {
    SparsePoly out(num_vars_);
    skip_ws();
    if (at_end()) fail("empty polynomial");
    bool first = true;
    while (!at_end()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip_ws();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      parse_term(out, sign);
      skip_ws();
    }
    return out;
  }

 private:
  void parse_term(SparsePoly& out, int sign) {
    BigCount coef = 1;
    Exponents e(static_cast<std::size_t>(num_vars_), 0);
    bool need_factor = true;
    while (need_factor) {
      skip_ws();
      if (at_end()) fail("dangling term");
      if (std::isdigit(static_cast<unsigned char>(peek()))) {
        coef *= BigCount(read_digits());
      } else if (peek() == 'x' || peek() == 'y' || peek() == 'v') {
        const char kind = peek();
        ++pos_;
        const int idx = std::stoi(read_digits()) - 1;
        int var = idx;
        if (kind == 'y') var = num_vars_ / 2 + idx;
        if (kind != 'v' && (num_vars_ % 2 != 0 || idx < 0 || idx >= num_vars_ / 2)) fail("bad variable");
        if (var < 0 || var >= num_vars_) fail("variable out of range");
        int power = 1;
        skip_ws();
        if (!at_end() && peek() == '^') {
          ++pos_;
          skip_ws();
          power = std::stoi(read_digits());
        }
        e[static_cast<std::size_t>(var)] += power;
      } else {
        fail("unexpected character");
      }
      skip_ws();
      need_factor = !at_end() && peek() == '*';
      if (need_factor) ++pos_;
    }
    out.add_term(e, coef * sign);
  }

  std::string read_digits() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected digits");
    return std::string(text_.substr(start, pos_ - start));
  }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  [[noreturn]] void fail(const char* what) const {
    throw std::invalid_argument(std::string("parse_poly: ") + what + " at offset " + std::to_string(pos_));
  }

  std::string_view text_;
  int num_vars_;
  std::size_t pos_ = 0;
};

}  // namespace

SparsePoly parse_poly(std::string_view text, int num_vars) { return PolyParser(text, num_vars).parse(); }

}  // namespace icf
