#pragma once

#include <algorithm>
#include <charconv>
#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "bits.hpp"
#include "error.hpp"

namespace sqfree {

// Monomial x^a in nvars variables, stored as a dense exponent vector.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(int nvars) : exps_(static_cast<std::size_t>(nvars), 0) {}
  explicit Monomial(std::vector<int> exps) : exps_(std::move(exps)) {
    for (int e : exps_)
      if (e < 0) throw Error(Errc::BadParameter, "negative exponent");
  }

  static Monomial squarefree(int nvars, Bits support) {
    Monomial m(nvars);
    for_each_bit(support, [&](int i) { m.exps_[i] = 1; });
    return m;
  }

  int nvars() const noexcept { return static_cast<int>(exps_.size()); }
  int exponent(int i) const { return exps_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& exponents() const noexcept { return exps_; }

  int degree() const {
    int d = 0;
    for (int e : exps_) d += e;
    return d;
  }

  bool is_one() const {
    return std::all_of(exps_.begin(), exps_.end(), [](int e) { return e == 0; });
  }
  bool is_squarefree() const {
    return std::all_of(exps_.begin(), exps_.end(), [](int e) { return e <= 1; });
  }

  // Requires nvars <= 64.
  Bits support() const {
    Bits s = 0;
    for (std::size_t i = 0; i < exps_.size(); ++i)
      if (exps_[i] > 0) s |= bit(static_cast<int>(i));
    return s;
  }

  bool divides(const Monomial& o) const {
    for (std::size_t i = 0; i < exps_.size(); ++i)
      if (exps_[i] > o.exps_[i]) return false;
    return true;
  }

  friend Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial m(a.nvars());
    for (std::size_t i = 0; i < m.exps_.size(); ++i) m.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
    return m;
  }
  friend Monomial gcd(const Monomial& a, const Monomial& b) {
    Monomial m(a.nvars());
    for (std::size_t i = 0; i < m.exps_.size(); ++i) m.exps_[i] = std::min(a.exps_[i], b.exps_[i]);
    return m;
  }
  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial m(a.nvars());
    for (std::size_t i = 0; i < m.exps_.size(); ++i) m.exps_[i] = a.exps_[i] + b.exps_[i];
    return m;
  }

  // this / gcd(this, f): the generator of (this) : f.
  Monomial colon(const Monomial& f) const {
    Monomial m(nvars());
    for (std::size_t i = 0; i < exps_.size(); ++i) m.exps_[i] = std::max(0, exps_[i] - f.exps_[i]);
    return m;
  }

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend auto operator<=>(const Monomial&, const Monomial&) = default;

 private:
  std::vector<int> exps_;
};

// Canonical generator order: ascending degree, then x1 > x2 > ... lex.
inline bool graded_less(const Monomial& a, const Monomial& b) {
  int da = a.degree(), db = b.degree();
  if (da != db) return da < db;
  return a.exponents() > b.exponents();
}

// "x1*x3^2*x7"; the unit monomial prints as "1". `names` overrides the
// default variable names x1..xn.
inline std::string format(const Monomial& m, const std::vector<std::string>& names = {}) {
  std::string s;
  for (int i = 0; i < m.nvars(); ++i) {
    int e = m.exponent(i);
    if (e == 0) continue;
    if (!s.empty()) s += '*';
    s += names.empty() ? "x" + std::to_string(i + 1) : names[static_cast<std::size_t>(i)];
    if (e > 1) s += "^" + std::to_string(e);
  }
  return s.empty() ? "1" : s;
}

inline Monomial parse_monomial(std::string_view text, int nvars) {
  Monomial m(nvars);
  std::vector<int> exps(static_cast<std::size_t>(nvars), 0);
  auto bad = [&](const std::string& why) {
    return Error(Errc::BadToken, "monomial \"" + std::string(text) + "\": " + why);
  };
  auto number = [&](std::string_view s) {
    int v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || p != s.data() + s.size()) throw bad("bad number");
    return v;
  };
  if (text == "1") return m;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t star = text.find('*', pos);
    std::string_view factor = text.substr(pos, star == std::string_view::npos ? std::string_view::npos : star - pos);
    if (factor.size() < 2 || factor[0] != 'x') throw bad("expected x<index>");
    std::size_t caret = factor.find('^');
    int var = number(factor.substr(1, caret == std::string_view::npos ? std::string_view::npos : caret - 1));
    int e = caret == std::string_view::npos ? 1 : number(factor.substr(caret + 1));
    if (var < 1 || var > nvars) throw bad("variable out of range");
    exps[static_cast<std::size_t>(var - 1)] += e;
    if (star == std::string_view::npos) break;
    pos = star + 1;
  }
  return Monomial(std::move(exps));
}

}  // namespace sqfree
