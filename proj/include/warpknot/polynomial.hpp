#pragma once

// Exact dense polynomials in t with 64-bit integer coefficients and
// non-negative exponents. Everything downstream (warping polynomials, state
// sums, the quotient identity) is exact integer arithmetic; there is no
// floating point anywhere in this library.

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "warpknot/errors.hpp"

namespace warpknot {

class int_polynomial {
 public:
  int_polynomial() = default;

  // Coefficients in ascending exponent order; trailing zeros are trimmed so
  // equality is plain vector comparison. The zero polynomial is the empty
  // coefficient list.
  explicit int_polynomial(std::vector<std::int64_t> coeffs) : coeffs_(std::move(coeffs)) {
    trim();
  }

  static int_polynomial zero() { return int_polynomial(); }
  static int_polynomial constant(std::int64_t c) { return int_polynomial({c}); }

  // c * t^k
  static int_polynomial monomial(std::int64_t c, int k) {
    if (c == 0) return zero();
    std::vector<std::int64_t> v(static_cast<std::size_t>(k) + 1, 0);
    v.back() = c;
    return int_polynomial(std::move(v));
  }

  // (1+t)^k
  static int_polynomial one_plus_t_pow(int k) {
    std::vector<std::int64_t> row{1};
    for (int i = 0; i < k; ++i) {
      std::vector<std::int64_t> next(row.size() + 1, 0);
      for (std::size_t j = 0; j < row.size(); ++j) {
        next[j] += row[j];
        next[j + 1] += row[j];
      }
      row = std::move(next);
    }
    return int_polynomial(std::move(row));
  }

  const std::vector<std::int64_t>& coeffs() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }

  // Degree of the zero polynomial is -1 by convention here.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }

  std::int64_t coeff(int exponent) const noexcept {
    if (exponent < 0 || exponent >= static_cast<int>(coeffs_.size())) return 0;
    return coeffs_[static_cast<std::size_t>(exponent)];
  }

  int lowest_exponent() const {
    if (is_zero()) fail(errc::zero_polynomial, "zero polynomial has no lowest exponent");
    int i = 0;
    while (coeffs_[static_cast<std::size_t>(i)] == 0) ++i;
    return i;
  }

  // Highest minus lowest exponent with nonzero coefficient.
  int span() const {
    if (is_zero()) fail(errc::zero_polynomial, "span of the zero polynomial is undefined");
    return degree() - lowest_exponent();
  }

  std::int64_t evaluate(std::int64_t t) const noexcept {
    std::int64_t acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
    return acc;
  }

  // Sum of coefficients, i.e. the value at t = 1.
  std::int64_t coefficient_sum() const noexcept { return evaluate(1); }

  bool all_nonnegative() const noexcept {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](std::int64_t c) { return c >= 0; });
  }

  friend int_polynomial operator+(const int_polynomial& a, const int_polynomial& b) {
    std::vector<std::int64_t> v(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) v[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) v[i] += b.coeffs_[i];
    return int_polynomial(std::move(v));
  }

  friend int_polynomial operator-(const int_polynomial& a, const int_polynomial& b) {
    std::vector<std::int64_t> v(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) v[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) v[i] -= b.coeffs_[i];
    return int_polynomial(std::move(v));
  }

  friend int_polynomial operator-(const int_polynomial& a) {
    std::vector<std::int64_t> v = a.coeffs_;
    for (auto& c : v) c = -c;
    return int_polynomial(std::move(v));
  }

  friend int_polynomial operator*(const int_polynomial& a, const int_polynomial& b) {
    if (a.is_zero() || b.is_zero()) return zero();
    std::vector<std::int64_t> v(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return int_polynomial(std::move(v));
  }

  friend int_polynomial operator*(std::int64_t s, const int_polynomial& a) {
    std::vector<std::int64_t> v = a.coeffs_;
    for (auto& c : v) c *= s;
    return int_polynomial(std::move(v));
  }

  // Multiply by t^k.
  int_polynomial shifted(int k) const {
    if (is_zero()) return zero();
    std::vector<std::int64_t> v(coeffs_.size() + static_cast<std::size_t>(k), 0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i + static_cast<std::size_t>(k)] = coeffs_[i];
    return int_polynomial(std::move(v));
  }

  friend bool operator==(const int_polynomial& a, const int_polynomial& b) = default;
  friend auto operator<=>(const int_polynomial& a, const int_polynomial& b) = default;

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<std::int64_t> coeffs_;
};

inline int_polynomial mul_by_one_plus_t(const int_polynomial& p) {
  return p + p.shifted(1);
}

// Exact quotient p / (1+t). Signals not_divisible when (1+t) does not divide
// p over the integers, which is how a non-diagram "warping polynomial" (for
// example one coming from an arc) announces itself.
inline int_polynomial div_exact_one_plus_t(const int_polynomial& p) {
  if (p.is_zero()) return int_polynomial::zero();
  const auto& c = p.coeffs();
  std::vector<std::int64_t> q(c.size() - 1, 0);
  std::int64_t carry = 0;  // q[i-1] while scanning c[i]
  for (std::size_t i = 0; i < c.size(); ++i) {
    std::int64_t qi = c[i] - carry;
    if (i + 1 == c.size()) {
      if (qi != 0) fail(errc::not_divisible, "polynomial is not divisible by (1+t)");
    } else {
      q[i] = qi;
    }
    carry = qi;
  }
  return int_polynomial(std::move(q));
}

// t^(n-1) * p(1/t): coefficient i of the result is coefficient n-1-i of p.
// This is the reversal/mirror transform for warping crossing polynomials of
// an n-crossing diagram.
inline int_polynomial reciprocal_transform(const int_polynomial& p, int n) {
  if (n < 1) fail(errc::degree_too_high, "reciprocal_transform needs n >= 1");
  if (p.degree() > n - 1)
    fail(errc::degree_too_high, "degree exceeds n-1 in reciprocal_transform");
  std::vector<std::int64_t> v(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = p.coeff(n - 1 - i);
  return int_polynomial(std::move(v));
}

inline int span(const int_polynomial& p) { return p.span(); }

// ---------------------------------------------------------------------------
// Text forms. Both the coefficient-list form "[c0,c1,...]" and the pretty
// form "c0 + c1 t + c2 t^2" parse back; the zero polynomial prints as "[0]"
// and "0" respectively.

inline std::string to_list_string(const int_polynomial& p) {
  if (p.is_zero()) return "[0]";
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
    if (i) os << ',';
    os << p.coeffs()[i];
  }
  os << ']';
  return os.str();
}

inline std::string to_pretty_string(const int_polynomial& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i <= p.degree(); ++i) {
    std::int64_t c = p.coeff(i);
    if (c == 0) continue;
    if (first) {
      if (c < 0) os << '-';
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    std::int64_t a = c < 0 ? -c : c;
    if (i == 0) {
      os << a;
    } else {
      if (a != 1) os << a;
      os << 't';
      if (i > 1) os << '^' << i;
    }
  }
  return os.str();
}

namespace detail {

inline void skip_ws(const std::string& s, std::size_t& i) {
  while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
}

inline std::int64_t parse_int(const std::string& s, std::size_t& i) {
  skip_ws(s, i);
  std::size_t start = i;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
  std::size_t digits_from = i;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
  if (i == digits_from) fail(errc::syntax_error, "expected integer in polynomial text");
  return std::stoll(s.substr(start, i - start));
}

inline int_polynomial parse_list_form(const std::string& s) {
  std::size_t i = 0;
  skip_ws(s, i);
  if (i >= s.size() || s[i] != '[') fail(errc::syntax_error, "expected '['");
  ++i;
  std::vector<std::int64_t> coeffs;
  skip_ws(s, i);
  if (i < s.size() && s[i] == ']') {
    ++i;
  } else {
    while (true) {
      coeffs.push_back(parse_int(s, i));
      skip_ws(s, i);
      if (i < s.size() && s[i] == ',') {
        ++i;
        continue;
      }
      if (i < s.size() && s[i] == ']') {
        ++i;
        break;
      }
      fail(errc::syntax_error, "expected ',' or ']' in coefficient list");
    }
  }
  skip_ws(s, i);
  if (i != s.size()) fail(errc::syntax_error, "trailing characters after ']'");
  return int_polynomial(std::move(coeffs));
}

inline int_polynomial parse_pretty_form(const std::string& s) {
  std::vector<std::int64_t> coeffs;
  std::size_t i = 0;
  skip_ws(s, i);
  if (i == s.size()) fail(errc::syntax_error, "empty polynomial text");
  bool first = true;
  while (i < s.size()) {
    int sign = 1;
    skip_ws(s, i);
    if (!first) {
      if (s[i] == '+') {
        ++i;
      } else if (s[i] == '-') {
        sign = -1;
        ++i;
      } else {
        fail(errc::syntax_error, "expected '+' or '-' between terms");
      }
      skip_ws(s, i);
    } else if (s[i] == '-') {
      sign = -1;
      ++i;
      skip_ws(s, i);
    }
    first = false;

    std::int64_t mag = 1;
    bool have_coeff = false;
    if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      std::size_t start = i;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      mag = std::stoll(s.substr(start, i - start));
      have_coeff = true;
    }
    skip_ws(s, i);
    int exponent = 0;
    if (i < s.size() && s[i] == 't') {
      ++i;
      exponent = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        exponent = static_cast<int>(parse_int(s, i));
        if (exponent < 0) fail(errc::syntax_error, "negative exponent");
      }
    } else if (!have_coeff) {
      fail(errc::syntax_error, "expected coefficient or 't'");
    }
    if (static_cast<std::size_t>(exponent) >= coeffs.size())
      coeffs.resize(static_cast<std::size_t>(exponent) + 1, 0);
    coeffs[static_cast<std::size_t>(exponent)] += sign * mag;
    skip_ws(s, i);
  }
  return int_polynomial(std::move(coeffs));
}

}  // namespace detail

inline int_polynomial parse_polynomial(const std::string& text) {
  std::size_t i = 0;
  detail::skip_ws(text, i);
  if (i < text.size() && text[i] == '[') return detail::parse_list_form(text);
  return detail::parse_pretty_form(text);
}

}  // namespace warpknot
