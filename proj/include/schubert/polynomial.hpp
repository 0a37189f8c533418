#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "schubert/error.hpp"
#include "schubert/numeric.hpp"

namespace schubert {

/// Exponent vector of a monomial in x_1, x_2, ..., trailing zeros removed.
using Exponent = std::vector<int>;

/// Reverse lexicographic order: compare at the last index where the exponents
/// differ, the larger entry there wins.
struct RevlexLess {
  bool operator()(const Exponent& a, const Exponent& b) const {
    for (std::size_t i = std::max(a.size(), b.size()); i-- > 0;) {
      int x = i < a.size() ? a[i] : 0;
      int y = i < b.size() ? b[i] : 0;
      if (x != y) return x < y;
    }
    return false;
  }
};

/// a >= b in reverse dominance: every suffix sum of a is at least that of b.
inline bool revdom_geq(const Exponent& a, const Exponent& b) {
  std::int64_t sa = 0, sb = 0;
  for (std::size_t i = std::max(a.size(), b.size()); i-- > 0;) {
    sa += i < a.size() ? a[i] : 0;
    sb += i < b.size() ? b[i] : 0;
    if (sa < sb) return false;
  }
  return true;
}

/// Polynomial in x_1, x_2, ... with int64 coefficients (overflow is an error).
/// Terms are kept in revlex order so the leading monomial is the last one.
class Polynomial {
 public:
  using Terms = std::map<Exponent, std::int64_t, RevlexLess>;

  Polynomial() = default;

  static Polynomial monomial(Exponent e, std::int64_t coef = 1) {
    Polynomial p;
    p.add_term(std::move(e), coef);
    return p;
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  std::int64_t coefficient(const Exponent& e) const {
    auto it = terms_.find(strip_trailing_zeros(e));
    return it == terms_.end() ? 0 : it->second;
  }

  /// Revlex-largest monomial. Precondition: nonzero.
  const std::pair<const Exponent, std::int64_t>& leading() const { return *terms_.rbegin(); }

  void add_term(Exponent e, std::int64_t coef) {
    if (coef == 0) return;
    e = strip_trailing_zeros(std::move(e));
    auto [it, fresh] = terms_.emplace(std::move(e), coef);
    if (!fresh) {
      it->second = checked_add(it->second, coef);
      if (it->second == 0) terms_.erase(it);
    }
  }

  Polynomial& operator+=(const Polynomial& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

  Polynomial scaled(std::int64_t k) const {
    Polynomial p;
    if (k == 0) return p;
    for (const auto& [e, c] : terms_) p.terms_.emplace(e, checked_mul(c, k));
    return p;
  }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial p;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) p.add_term(add_exponents(ea, eb), checked_mul(ca, cb));
    return p;
  }

  /// The product restricted to monomials m with keep(m).
  template <typename Pred>
  static Polynomial product_where(const Polynomial& a, const Polynomial& b, Pred keep) {
    Polynomial p;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        Exponent e = add_exponents(ea, eb);
        if (keep(e)) p.add_term(std::move(e), checked_mul(ca, cb));
      }
    return p;
  }

  /// Divided difference (f - s_i f) / (x_i - x_{i+1}), i >= 1.
  Polynomial divided_difference(int i) const {
    if (i < 1) throw Error(ErrorKind::InvalidArgument, "divided difference index must be positive");
    Polynomial out;
    for (const auto& [e, c] : terms_) {
      Exponent m = padded(e, static_cast<std::size_t>(i + 1));
      const int p = m[i - 1], q = m[i];
      if (p == q) continue;
      const int hi = std::max(p, q), lo = std::min(p, q);
      const std::int64_t s = p > q ? c : -c;
      for (int t = 0; t < hi - lo; ++t) {
        m[i - 1] = (p > q) ? p - 1 - t : p + t;
        m[i] = (p > q) ? q + t : q - 1 - t;
        out.add_term(m, s);
      }
    }
    return out;
  }

  int degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) {
      int s = 0;
      for (int x : e) s += x;
      d = std::max(d, s);
    }
    return d;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [e, c] = *it;
      std::string mono;
      for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!mono.empty()) mono += "*";
        mono += "x" + std::to_string(i + 1);
        if (e[i] > 1) mono += "^" + std::to_string(e[i]);
      }
      std::int64_t mag = c < 0 ? -c : c;
      if (s.empty())
        s += c < 0 ? "-" : "";
      else
        s += c < 0 ? " - " : " + ";
      if (mono.empty())
        s += std::to_string(mag);
      else
        s += (mag == 1 ? "" : std::to_string(mag) + "*") + mono;
    }
    return s;
  }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  static Exponent add_exponents(const Exponent& a, const Exponent& b) {
    Exponent e(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) e[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) e[i] += b[i];
    return e;
  }

  Terms terms_;
};

}  // namespace schubert
