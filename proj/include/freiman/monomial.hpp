#pragma once

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "freiman/error.hpp"

namespace freiman {

// Size limits applied to user-facing construction (parsing, generator sets,
// family constructors, sweeps). Products formed internally may exceed them.
struct Caps {
  int max_degree = 512;
  int max_vars = 64;
  std::size_t max_generators = 200000;
  std::size_t max_sweep_points = 100000;
};

// A monomial x1^e1 * ... * xn^en in a fixed ambient ring of n variables,
// stored as a dense exponent vector. operator<=> is lexicographic on the
// exponent vector; generator sets list monomials in the reverse of it (see
// canonical_less).
class Monomial {
 public:
  Monomial() = default;

  explicit Monomial(std::vector<int> exponents) : exps_(std::move(exponents)) {
    for (int e : exps_) {
      if (e < 0) throw Error("monomial exponents must be non-negative");
      degree_ += e;
    }
  }

  static Monomial one(std::size_t n) { return Monomial(std::vector<int>(n, 0)); }

  // x_index (1-based) raised to `power`.
  static Monomial variable(std::size_t n, std::size_t index, int power = 1) {
    if (index < 1 || index > n) throw Error("variable index out of range");
    std::vector<int> e(n, 0);
    e[index - 1] = power;
    return Monomial(std::move(e));
  }

  std::size_t ambient() const noexcept { return exps_.size(); }
  long degree() const noexcept { return degree_; }
  const std::vector<int>& exponents() const noexcept { return exps_; }
  int operator[](std::size_t i) const { return exps_[i]; }

  // Same exponents, embedded into `n` >= ambient() variables.
  Monomial widened(std::size_t n) const {
    std::vector<int> e = exps_;
    e.resize(std::max(n, e.size()), 0);
    return Monomial(std::move(e));
  }

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.exps_ == b.exps_;
  }
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
    return a.exps_ <=> b.exps_;
  }

 private:
  std::vector<int> exps_;
  long degree_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept {
    std::uint64_t h = 1469598103934665603ULL;
    for (int e : m.exponents()) {
      h ^= static_cast<std::uint64_t>(e) + 0x9e3779b97f4a7c15ULL;
      h *= 1099511628211ULL;
    }
    return static_cast<std::size_t>(h);
  }
};

inline void check_caps(const Monomial& m, const Caps& caps) {
  if (m.ambient() > static_cast<std::size_t>(caps.max_vars))
    throw CapExceeded("variable count " + std::to_string(m.ambient()) +
                      " exceeds cap " + std::to_string(caps.max_vars));
  if (m.degree() > caps.max_degree)
    throw CapExceeded("degree " + std::to_string(m.degree()) + " exceeds cap " +
                      std::to_string(caps.max_degree));
}

inline Monomial multiply(const Monomial& u, const Monomial& v) {
  if (u.ambient() != v.ambient()) throw AmbientMismatch(u.ambient(), v.ambient());
  std::vector<int> e(u.ambient());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = u[i] + v[i];
  return Monomial(std::move(e));
}

// The sorting of (u, v): write uv = x_{i1} x_{i2} ... x_{i2d} with
// i1 <= ... <= i2d, then u' collects the odd positions and v' the even ones.
// Each variable's multiplicity is split according to the parity of the
// position where its run starts, so the word itself is never built.
inline std::pair<Monomial, Monomial> sort_pair(const Monomial& u, const Monomial& v) {
  if (u.ambient() != v.ambient()) throw AmbientMismatch(u.ambient(), v.ambient());
  if (u.degree() != v.degree()) throw DegreeMismatch(u.degree(), v.degree());
  const std::size_t n = u.ambient();
  std::vector<int> first(n), second(n);
  long position = 0;  // 0-based index of the next factor in the word
  for (std::size_t j = 0; j < n; ++j) {
    const int m = u[j] + v[j];
    const int odd_slots = (position % 2 == 0) ? (m + 1) / 2 : m / 2;
    first[j] = odd_slots;
    second[j] = m - odd_slots;
    position += m;
  }
  return {Monomial(std::move(first)), Monomial(std::move(second))};
}

inline bool is_sorted(const Monomial& u, const Monomial& v) {
  auto [a, b] = sort_pair(u, v);
  return (a == u && b == v) || (a == v && b == u);
}

// Symbolic form: variables in increasing index order, "^1" omitted, "1" for
// the unit monomial.
inline std::string to_string(const Monomial& m) {
  std::string out;
  for (std::size_t i = 0; i < m.ambient(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += 'x';
    out += std::to_string(i + 1);
    if (m[i] > 1) {
      out += '^';
      out += std::to_string(m[i]);
    }
  }
  return out.empty() ? std::string("1") : out;
}

inline std::ostream& operator<<(std::ostream& os, const Monomial& m) {
  return os << to_string(m);
}

namespace detail {

class MonomialParser {
 public:
  MonomialParser(std::string_view text, std::size_t n) : text_(text), n_(n) {}

  Monomial parse() {
    if (text_.find('x') != std::string_view::npos ||
        text_.find('X') != std::string_view::npos)
      return parse_symbolic();
    return parse_vector();
  }

 private:
  [[noreturn]] void fail(ParseErrorKind kind, std::size_t pos, const std::string& detail) const {
    throw ParseError(kind, pos, detail);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool at_end() const { return pos_ >= text_.size(); }

  // Reads an unsigned decimal at pos_; returns false if no digit is present.
  bool read_number(long& value) {
    const std::size_t start = pos_;
    value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + (text_[pos_] - '0');
      if (value > 1'000'000'000L) fail(ParseErrorKind::malformed_token, start, "number too large");
      ++pos_;
    }
    return pos_ > start;
  }

  Monomial parse_vector() {
    std::vector<int> exps;
    skip_space();
    while (!at_end()) {
      const std::size_t start = pos_;
      if (text_[pos_] == '-') {
        ++pos_;
        long ignored = 0;
        if (!read_number(ignored)) fail(ParseErrorKind::malformed_token, start, "expected a digit after '-'");
        fail(ParseErrorKind::negative_exponent, start, "exponent entries must be >= 0");
      }
      if (text_[pos_] == '+') ++pos_;
      long value = 0;
      if (!read_number(value))
        fail(ParseErrorKind::malformed_token, start,
             std::string("unexpected character '") + text_[start] + "'");
      if (!at_end() && !std::isspace(static_cast<unsigned char>(text_[pos_])) && text_[pos_] != ',')
        fail(ParseErrorKind::malformed_token, pos_,
             std::string("unexpected character '") + text_[pos_] + "'");
      exps.push_back(static_cast<int>(value));
      skip_space();
      if (!at_end() && text_[pos_] == ',') {
        ++pos_;
        skip_space();
        if (at_end()) fail(ParseErrorKind::malformed_token, pos_, "trailing ','");
      }
    }
    if (exps.size() != n_)
      fail(ParseErrorKind::wrong_length, text_.size(),
           "expected " + std::to_string(n_) + " entries, got " + std::to_string(exps.size()));
    return Monomial(std::move(exps));
  }

  Monomial parse_symbolic() {
    std::vector<int> exps(n_, 0);
    skip_space();
    bool expect_term = true;
    while (!at_end()) {
      const std::size_t start = pos_;
      if (!expect_term) {
        if (text_[pos_] != '*')
          fail(ParseErrorKind::malformed_token, pos_,
               std::string("expected '*' but found '") + text_[pos_] + "'");
        ++pos_;
        skip_space();
        expect_term = true;
        continue;
      }
      if (text_[pos_] != 'x' && text_[pos_] != 'X')
        fail(ParseErrorKind::malformed_token, start,
             std::string("expected a variable 'x<i>' but found '") + text_[pos_] + "'");
      ++pos_;
      long index = 0;
      const std::size_t index_pos = pos_;
      if (!read_number(index)) fail(ParseErrorKind::malformed_token, index_pos, "missing variable index");
      if (index < 1 || static_cast<std::size_t>(index) > n_)
        fail(ParseErrorKind::index_out_of_range, index_pos,
             "x" + std::to_string(index) + " not in x1..x" + std::to_string(n_));
      long power = 1;
      if (!at_end() && text_[pos_] == '^') {
        ++pos_;
        const std::size_t exp_pos = pos_;
        if (!at_end() && text_[pos_] == '-')
          fail(ParseErrorKind::negative_exponent, exp_pos, "exponents must be >= 1");
        if (!read_number(power)) fail(ParseErrorKind::malformed_token, exp_pos, "missing exponent after '^'");
        if (power < 1) fail(ParseErrorKind::malformed_token, exp_pos, "exponents must be >= 1");
      }
      exps[static_cast<std::size_t>(index - 1)] += static_cast<int>(power);
      skip_space();
      expect_term = false;
    }
    if (expect_term) fail(ParseErrorKind::malformed_token, pos_, "expected a variable term");
    return Monomial(std::move(exps));
  }

  std::string_view text_;
  std::size_t n_;
  std::size_t pos_ = 0;
};

}  // namespace detail

// Accepts an exponent vector ("0 0 2", "0,0,2") or symbolic terms joined by
// '*' ("x1^2*x3"). Repeated variables accumulate.
inline Monomial parse_monomial(std::string_view text, std::size_t n, const Caps& caps = {}) {
  if (n == 0) throw Error("ambient variable count must be positive");
  Monomial m = detail::MonomialParser(text, n).parse();
  check_caps(m, caps);
  return m;
}

}  // namespace freiman
