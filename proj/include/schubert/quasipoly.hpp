#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "schubert/error.hpp"
#include "schubert/numeric.hpp"

namespace schubert {

/// Values f(1), f(2), ... keyed by N.
using Sequence = std::map<std::int64_t, BigInt>;

/// f(N) = polys[N mod period](N) for N >= offset. Coefficients low to high.
struct QuasiPolynomial {
  int period = 1;
  int offset = 1;
  std::vector<std::vector<Rational>> polys;
  std::int64_t verified_through = 0;

  /// Largest degree among the constituents, -1 when all vanish.
  int degree() const {
    int d = -1;
    for (const auto& p : polys)
      for (int k = static_cast<int>(p.size()) - 1; k >= 0; --k)
        if (p[k] != 0) {
          d = std::max(d, k);
          break;
        }
    return d;
  }

  Rational value(std::int64_t N) const {
    const auto& p = polys[static_cast<std::size_t>(((N % period) + period) % period)];
    Rational acc = 0;
    for (std::size_t k = p.size(); k-- > 0;) acc = acc * N + p[k];
    return acc;
  }

  friend bool operator==(const QuasiPolynomial&, const QuasiPolynomial&) = default;
};

namespace detail {

inline void check_sequence(const Sequence& seq) {
  std::int64_t expect = 1;
  for (const auto& [N, v] : seq) {
    if (N != expect) throw Error(ErrorKind::InvalidArgument, "sequence must be given for N = 1, 2, ... without gaps");
    ++expect;
  }
}

// Coefficients (low to high) of the polynomial of degree <= d through the
// first d + 1 of the points, via Newton divided differences.
inline std::vector<Rational> interpolate(const std::vector<std::int64_t>& xs, const std::vector<Rational>& ys, int d) {
  const int k = d + 1;
  std::vector<Rational> dd(ys.begin(), ys.begin() + k);
  for (int level = 1; level < k; ++level)
    for (int i = k - 1; i >= level; --i) dd[i] = (dd[i] - dd[i - 1]) / Rational(xs[i] - xs[i - level]);
  std::vector<Rational> poly{dd[k - 1]};
  for (int i = k - 2; i >= 0; --i) {
    // poly = poly * (N - xs[i]) + dd[i]
    std::vector<Rational> next(poly.size() + 1, 0);
    for (std::size_t t = 0; t < poly.size(); ++t) {
      next[t + 1] += poly[t];
      next[t] -= poly[t] * xs[i];
    }
    next[0] += dd[i];
    poly = std::move(next);
  }
  while (poly.size() > 1 && poly.back() == 0) poly.pop_back();
  if (poly.size() == 1 && poly[0] == 0) poly.clear();
  return poly;
}

}  // namespace detail

/// Least period, then least offset, then least degree of a quasi-polynomial
/// that interpolates every value from the offset on, with at least one spare
/// point per residue class. Returns nothing when no candidate within the caps
/// certifies.
inline std::optional<QuasiPolynomial> fit(const Sequence& seq, int max_period = 4, int max_degree = 8) {
  detail::check_sequence(seq);
  if (max_period < 1 || max_degree < 0) throw Error(ErrorKind::InvalidArgument, "caps must be positive");
  const std::int64_t last = seq.empty() ? 0 : seq.rbegin()->first;
  bool testable = false;
  for (int m = 1; m <= max_period; ++m) {
    for (std::int64_t M = 1; M <= last; ++M) {
      // Points per residue class r = N mod m among N >= M.
      std::vector<std::vector<std::int64_t>> xs(m);
      std::vector<std::vector<Rational>> ys(m);
      for (std::int64_t N = M; N <= last; ++N) {
        xs[N % m].push_back(N);
        ys[N % m].push_back(Rational(seq.at(N)));
      }
      std::size_t fewest = xs[0].size();
      for (const auto& x : xs) fewest = std::min(fewest, x.size());
      for (int d = 0; d <= max_degree && static_cast<std::size_t>(d) + 2 <= fewest; ++d) {
        testable = true;
        QuasiPolynomial q{m, static_cast<int>(M), {}, last};
        bool ok = true;
        for (int r = 0; r < m && ok; ++r) {
          q.polys.push_back(detail::interpolate(xs[r], ys[r], d));
          for (std::size_t t = d + 1; t < xs[r].size() && ok; ++t) ok = q.value(xs[r][t]) == ys[r][t];
        }
        if (ok) return q;
      }
    }
  }
  if (!testable) throw Error(ErrorKind::InsufficientData, "not enough values for any candidate");
  return std::nullopt;
}

inline BigInt evaluate(const QuasiPolynomial& q, std::int64_t N) {
  if (N < q.offset) throw Error(ErrorKind::InvalidArgument, "N is below the offset");
  const Rational v = q.value(N);
  if (boost::multiprecision::denominator(v) != 1) throw Error(ErrorKind::NonIntegral, "value at N=" + std::to_string(N) + " is " + to_string(v));
  return boost::multiprecision::numerator(v);
}

/// sum_{N >= 1} f(N) t^N = numerator / denominator, with denominator
/// (1 - t^period)^exponent. `exceptional` holds sum_{N < offset} f(N) t^N,
/// which is already folded into the numerator.
struct RationalGeneratingFunction {
  std::vector<BigInt> numerator;
  std::vector<BigInt> denominator;
  std::vector<BigInt> exceptional;
  int period = 1;
  int exponent = 0;

  /// Coefficients of t^0 .. t^order of the power series.
  std::vector<BigInt> series(int order) const {
    std::vector<BigInt> s(order + 1, 0);
    for (int k = 0; k <= order; ++k) {
      BigInt acc = k < static_cast<int>(numerator.size()) ? numerator[k] : BigInt(0);
      for (int i = 1; i <= k && i < static_cast<int>(denominator.size()); ++i) acc -= denominator[i] * s[k - i];
      s[k] = acc;  // denominator[0] == 1
    }
    return s;
  }

  std::string to_string() const {
    auto poly = [](const std::vector<BigInt>& p) {
      std::string s;
      for (std::size_t k = 0; k < p.size(); ++k) {
        if (p[k] == 0) continue;
        BigInt mag = p[k] < 0 ? BigInt(-p[k]) : p[k];
        s += s.empty() ? (p[k] < 0 ? "-" : "") : (p[k] < 0 ? " - " : " + ");
        std::string mono = k == 0 ? "" : (k == 1 ? "t" : "t^" + std::to_string(k));
        if (mono.empty())
          s += mag.str();
        else
          s += (mag == 1 ? "" : mag.str() + "*") + mono;
      }
      return s.empty() ? std::string("0") : s;
    };
    std::string num = poly(numerator);
    if (exponent == 0) return num;
    std::string base = period == 1 ? "(1 - t)" : "(1 - t^" + std::to_string(period) + ")";
    std::string den = exponent == 1 ? base : base + "^" + std::to_string(exponent);
    return "(" + num + ") / " + den;
  }
};

/// The rational generating function of the sequence that agrees with
/// `values` below the offset of q and with q from there on.
inline RationalGeneratingFunction generating_function(const QuasiPolynomial& q, const Sequence& values) {
  RationalGeneratingFunction g;
  g.period = q.period;
  g.exponent = q.degree() + 1;
  for (std::int64_t N = 1; N < q.offset; ++N) {
    auto it = values.find(N);
    if (it == values.end()) throw Error(ErrorKind::InvalidArgument, "missing value below the offset at N=" + std::to_string(N));
    g.exceptional.resize(N + 1, 0);
    g.exceptional[N] = it->second;
  }
  for (const auto& [N, v] : values)
    if (N >= q.offset && evaluate(q, N) != v) throw Error(ErrorKind::InvalidArgument, "values disagree with the quasi-polynomial");
  // (1 - t^m)^e
  g.denominator = {1};
  for (int k = 0; k < g.exponent; ++k) {
    std::vector<BigInt> next(g.denominator.size() + q.period, 0);
    for (std::size_t i = 0; i < g.denominator.size(); ++i) {
      next[i] += g.denominator[i];
      next[i + q.period] -= g.denominator[i];
    }
    g.denominator = std::move(next);
  }
  const int top = q.offset + q.period * g.exponent - 1;
  std::vector<BigInt> series(top + 1, 0);
  for (int N = 1; N <= top; ++N) series[N] = N < q.offset ? g.exceptional[N] : evaluate(q, N);
  g.numerator.assign(top + 1, 0);
  for (int k = 0; k <= top; ++k)
    for (std::size_t i = 0; i < g.denominator.size() && i <= static_cast<std::size_t>(k); ++i) g.numerator[k] += g.denominator[i] * series[k - i];
  while (!g.numerator.empty() && g.numerator.back() == 0) g.numerator.pop_back();
  return g;
}

}  // namespace schubert
