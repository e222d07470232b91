#pragma once

#include <cctype>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "antipodal/errors.hpp"
#include "antipodal/linalg.hpp"
#include "antipodal/rational.hpp"

namespace antipodal {

/// Evaluates a polynomial expression in r and q with rational constants.
///
/// Accepted syntax: integers, the variables r and q, + - * / ^, parentheses,
/// and implicit multiplication ("2qr", "r(r+1)/2"). Exponents must be
/// non-negative integer literals.
class Formula {
 public:
  explicit Formula(std::string text) : text_(std::move(text)) {
    // Parse once up front so malformed strings fail at construction.
    Parser p{text_, 0, 1, 1, false};
    p.parse_all();
  }

  [[nodiscard]] const std::string& text() const noexcept { return text_; }

  [[nodiscard]] Rational eval(Rational::int_type r, Rational::int_type q = 0) const {
    Parser p{text_, 0, r, q, true};
    return p.parse_all();
  }

  /// Value at (r, q); throws ParseError if it is not an integer.
  [[nodiscard]] Rational::int_type eval_int(Rational::int_type r, Rational::int_type q = 0) const {
    const Rational v = eval(r, q);
    if (!v.is_integer()) throw ParseError("formula '" + text_ + "' is not integral at r=" + std::to_string(r));
    return v.num();
  }

 private:
  struct Parser {
    const std::string& s;
    std::size_t pos;
    Rational::int_type r, q;
    bool live;

    void skip() {
      while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    [[nodiscard]] char peek() {
      skip();
      return pos < s.size() ? s[pos] : '\0';
    }
    [[noreturn]] void fail(const std::string& what) const {
      throw ParseError("formula '" + s + "': " + what + " at offset " + std::to_string(pos));
    }

    Rational parse_all() {
      if (peek() == '\0') fail("empty expression");
      Rational v = expr();
      if (peek() != '\0') fail("unexpected character");
      return v;
    }

    Rational expr() {
      Rational v = term();
      for (char c = peek(); c == '+' || c == '-'; c = peek()) {
        ++pos;
        const Rational t = term();
        v = c == '+' ? v + t : v - t;
      }
      return v;
    }

    static bool starts_factor(char c) {
      return std::isdigit(static_cast<unsigned char>(c)) || c == 'r' || c == 'q' || c == '(';
    }

    Rational term() {
      Rational v = unary();
      for (;;) {
        const char c = peek();
        if (c == '*') {
          ++pos;
          v = v * unary();
        } else if (c == '/') {
          ++pos;
          const Rational d = unary();
          if (d.is_zero()) fail("division by zero");
          v = v / d;
        } else if (starts_factor(c)) {
          v = v * power();
        } else {
          return v;
        }
      }
    }

    Rational power() {
      Rational base = primary();
      if (peek() != '^') return base;
      ++pos;
      skip();
      std::size_t start = pos;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
      if (start == pos) fail("exponent must be an integer literal");
      const int e = std::stoi(s.substr(start, pos - start));
      Rational v = 1;
      for (int i = 0; i < e; ++i) v = v * base;
      return v;
    }

    // Minus binds looser than '^': -r^2 is -(r^2).
    Rational unary() {
      if (peek() == '-') {
        ++pos;
        return -unary();
      }
      return power();
    }

    Rational primary() {
      const char c = peek();
      if (c == '(') {
        ++pos;
        Rational v = expr();
        if (peek() != ')') fail("missing ')'");
        ++pos;
        return v;
      }
      if (c == 'r') {
        ++pos;
        return live ? Rational(r) : Rational(1);
      }
      if (c == 'q') {
        ++pos;
        return live ? Rational(q) : Rational(1);
      }
      if (std::isdigit(static_cast<unsigned char>(c))) {
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        return Rational(std::stoll(s.substr(start, pos - start)));
      }
      fail("expected a number, r, q or '('");
    }
  };

  std::string text_;
};

/// Affine expression (num_r * r + num_c) / den, used for index columns.
struct AffineIndex {
  Rational slope;
  Rational offset;

  [[nodiscard]] Rational at(Rational::int_type r) const { return slope * Rational(r) + offset; }
  friend bool operator==(const AffineIndex&, const AffineIndex&) = default;
};

/// Fits value = slope * r + offset through the samples, or nullopt if no
/// affine function matches all of them.
inline std::optional<AffineIndex> fit_affine(const std::vector<std::pair<Rational::int_type, Rational>>& samples) {
  if (samples.empty()) return std::nullopt;
  AffineIndex f{Rational(0), samples.front().second};
  for (const auto& s : samples)
    if (s.first != samples.front().first) {
      f.slope = (s.second - samples.front().second) / Rational(s.first - samples.front().first);
      f.offset = samples.front().second - f.slope * Rational(samples.front().first);
      break;
    }
  for (const auto& s : samples)
    if (f.at(s.first) != s.second) return std::nullopt;
  return f;
}

/// Renders an affine index: "r", "r+1", "2r-1", "r/2", "(r-1)/2", "3".
inline std::string render_affine(const AffineIndex& f) {
  // Bring both coefficients to a common denominator.
  auto lcm = [](Rational::int_type a, Rational::int_type b) {
    Rational::int_type x = a, y = b;
    while (y) {
      const auto t = x % y;
      x = y;
      y = t;
    }
    return a / x * b;
  };
  const auto den = lcm(f.slope.den(), f.offset.den());
  const auto a = (f.slope * Rational(den)).num();
  const auto b = (f.offset * Rational(den)).num();
  std::string body;
  if (a != 0) {
    if (a == -1) body = "-";
    else if (a != 1) body = std::to_string(a);
    body += "r";
  }
  if (b != 0 || a == 0) {
    if (a != 0 && b > 0) body += "+";
    body += std::to_string(b);
  }
  if (den == 1) return body;
  const bool simple = b == 0 || a == 0;
  return (simple ? body : "(" + body + ")") + "/" + std::to_string(den);
}


/// c0 + cr*r + crr*r^2 + cq*q + crq*r*q; enough for every dimension column.
struct Polynomial {
  Rational c0, cr, crr, cq, crq;

  [[nodiscard]] Rational at(Rational::int_type r, Rational::int_type q = 0) const {
    const Rational R(r), Q(q);
    return c0 + cr * R + crr * R * R + cq * Q + crq * R * Q;
  }
  friend bool operator==(const Polynomial&, const Polynomial&) = default;
};

struct Sample {
  Rational::int_type r = 0;
  Rational::int_type q = 0;
  Rational value;
};

/// Exact fit over the monomials the samples can resolve: r-degree up to
/// min(2, distinct r - 1), q and rq only when q varies. Returns nullopt when
/// the fitted polynomial misses any sample.
inline std::optional<Polynomial> fit_polynomial(const std::vector<Sample>& samples) {
  if (samples.empty()) return std::nullopt;
  std::set<Rational::int_type> rs, qs;
  for (const auto& s : samples) {
    rs.insert(s.r);
    qs.insert(s.q);
  }
  const std::size_t rdeg = std::min<std::size_t>(2, rs.size() - 1);
  const bool use_q = qs.size() > 1;
  // Monomial k evaluated at a sample; order: 1, r, r^2, q, rq.
  std::vector<int> basis{0};
  if (rdeg >= 1) basis.push_back(1);
  if (rdeg >= 2) basis.push_back(2);
  if (use_q) basis.push_back(3);
  if (use_q && rdeg >= 1) basis.push_back(4);
  auto mono = [](int k, const Sample& s) {
    const Rational R(s.r), Q(s.q);
    switch (k) {
      case 1: return R;
      case 2: return R * R;
      case 3: return Q;
      case 4: return R * Q;
      default: return Rational(1);
    }
  };
  const std::size_t n = basis.size();
  Matrix normal(n, Vector(n));
  Vector rhs(n);
  for (const auto& s : samples)
    for (std::size_t i = 0; i < n; ++i) {
      const Rational mi = mono(basis[i], s);
      rhs[i] += mi * s.value;
      for (std::size_t j = 0; j < n; ++j) normal[i][j] += mi * mono(basis[j], s);
    }
  Vector c;
  try {
    c = solve_square(normal, rhs);
  } catch (const SingularSystemError&) {
    return std::nullopt;
  }
  Polynomial p;
  Rational* slot[] = {&p.c0, &p.cr, &p.crr, &p.cq, &p.crq};
  for (std::size_t i = 0; i < n; ++i) *slot[basis[i]] = c[i];
  for (const auto& s : samples)
    if (p.at(s.r, s.q) != s.value) return std::nullopt;
  return p;
}

/// Renders "2r^2+4r-3", "(r^2+2r-1)/2", "r^2/2", "rq", "4q", "0".
inline std::string render_polynomial(const Polynomial& p) {
  const std::pair<Rational, const char*> terms[] = {
      {p.crr, "r^2"}, {p.cr, "r"}, {p.crq, "rq"}, {p.cq, "q"}, {p.c0, ""}};
  Rational::int_type den = 1;
  for (const auto& [c, name] : terms) {
    Rational::int_type a = den, b = c.den();
    while (b) {
      const auto t = a % b;
      a = b;
      b = t;
    }
    den = den / a * c.den();
  }
  std::string body;
  int count = 0;
  for (const auto& [c, name] : terms) {
    const auto k = (c * Rational(den)).num();
    if (k == 0) continue;
    ++count;
    if (k > 0 && !body.empty()) body += "+";
    const std::string mono = name;
    if (mono.empty()) body += std::to_string(k);
    else if (k == 1) body += mono;
    else if (k == -1) body += "-" + mono;
    else body += std::to_string(k) + mono;
  }
  if (body.empty()) return "0";
  if (den == 1) return body;
  return (count == 1 ? body : "(" + body + ")") + "/" + std::to_string(den);
}

}  // namespace antipodal
