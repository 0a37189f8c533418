#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "schubert/compat.hpp"
#include "schubert/error.hpp"
#include "schubert/numeric.hpp"
#include "schubert/permutation.hpp"
#include "schubert/pipe_dream.hpp"
#include "schubert/polynomial.hpp"
#include "schubert/triple.hpp"

namespace schubert {

inline Polynomial to_polynomial(const std::map<WeightVector, std::int64_t>& weights) {
  Polynomial p;
  for (const auto& [a, k] : weights) p.add_term(a, k);
  return p;
}

/// Schubert polynomial as the pipe dream generating function.
inline Polynomial schubert_polynomial(const Permutation& w) { return to_polynomial(schubert_weights(w)); }

/// Schubert polynomial from the recursive definition: x^rho for the longest
/// element of S_n, then a divided difference for each ascent on the way down.
inline Polynomial schubert_polynomial_dd(const Permutation& w, std::optional<int> n = std::nullopt) {
  const int m = n.value_or(std::max(w.size(), 1));
  if (m < w.size()) throw Error(ErrorKind::InvalidArgument, w.to_string() + " is not in S_" + std::to_string(m));
  std::vector<int> cur = w.oneline(m);
  std::vector<int> path;
  for (bool moved = true; moved;) {
    moved = false;
    for (int i = 1; i < m; ++i)
      if (cur[i - 1] < cur[i]) {
        std::swap(cur[i - 1], cur[i]);
        path.push_back(i);
        moved = true;
        break;
      }
  }
  Exponent rho(m);
  for (int i = 0; i < m; ++i) rho[i] = m - 1 - i;
  Polynomial p = Polynomial::monomial(rho);
  for (auto it = path.rbegin(); it != path.rend(); ++it) p = p.divided_difference(*it);
  return p;
}

using SchubertExpansion = std::map<Permutation, std::int64_t>;

struct ExpandOptions {
  /// Only find coefficients of S_w with code(w) >= floor in reverse dominance.
  /// Monomials outside that upper set are dropped throughout, which leaves
  /// those coefficients unchanged.
  std::optional<Exponent> floor;
  std::size_t max_steps = 10'000'000;
};

/// Writes p in the Schubert basis by repeatedly cancelling the revlex leading
/// term a against S_{w(a)}, whose leading monomial is its code a.
inline SchubertExpansion expand_in_schubert_basis(Polynomial p, const ExpandOptions& opts = {}) {
  auto keep = [&](const Exponent& e) { return !opts.floor || revdom_geq(e, *opts.floor); };
  if (opts.floor) {
    Polynomial q;
    for (const auto& [e, c] : p.terms())
      if (keep(e)) q.add_term(e, c);
    p = std::move(q);
  }
  SchubertExpansion out;
  std::size_t steps = 0;
  while (!p.is_zero()) {
    if (++steps > opts.max_steps) throw Error(ErrorKind::NonTerminating, "expansion exceeded step limit");
    const auto [lead, coef] = p.leading();
    Permutation w = from_code(LehmerCode(lead));
    out[w] += coef;
    for (const auto& [a, k] : schubert_weights(w))
      if (keep(a)) p.add_term(a, checked_mul(-coef, k));
  }
  for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

/// c^w_{u,v} by expanding S_u S_v in the Schubert basis.
inline BigInt coefficient_expand(const Permutation& u, const Permutation& v, const Permutation& w) {
  if (inversions(u) + inversions(v) != inversions(w)) return 0;
  const Exponent floor = lehmer_code(w).entries();
  auto keep = [&](const Exponent& e) { return revdom_geq(e, floor); };
  Polynomial p = Polynomial::product_where(schubert_polynomial(u), schubert_polynomial(v), keep);
  SchubertExpansion ex = expand_in_schubert_basis(std::move(p), {floor});
  auto it = ex.find(w);
  BigInt c = it == ex.end() ? 0 : it->second;
  if (c < 0) throw Error(ErrorKind::NegativeResult, "negative structure constant");
  return c;
}

namespace detail {

/// Prefix tree over the weight vectors (padded to n) of one Schubert
/// polynomial, so that a partially built weight can be rejected early.
class WeightTrie {
 public:
  WeightTrie() : nodes_(1) {}

  void insert(const std::vector<int>& a, std::int64_t count) {
    int node = 0;
    for (int x : a) {
      auto [it, fresh] = nodes_[node].children.emplace(x, static_cast<int>(nodes_.size()));
      if (fresh) nodes_.emplace_back();
      node = it->second;
    }
    nodes_[node].count += count;
  }

  int child(int node, int x) const {
    const auto& ch = nodes_[node].children;
    auto it = ch.find(x);
    return it == ch.end() ? -1 : it->second;
  }

  std::int64_t count(int node) const { return nodes_[node].count; }

 private:
  struct Node {
    std::unordered_map<int, int> children;
    std::int64_t count = 0;
  };
  std::vector<Node> nodes_;
};

}  // namespace detail

/// c^w_{u,v} from the alternating sum over sigma in S_n of Schubert-Kostka
/// numbers: sum sign(sigma) [x^a](S_u S_v) K_{w0 w, sigma rho - a}.
inline BigInt coefficient_ps(const Permutation& u, const Permutation& v, const Permutation& w) {
  if (inversions(u) + inversions(v) != inversions(w)) return 0;
  const int n = std::max({u.size(), v.size(), w.size(), 1});
  const Polynomial uv = schubert_polynomial(u) * schubert_polynomial(v);
  detail::WeightTrie trie;
  for (const auto& [c, k] : schubert_weights(compose(longest_element(n), w))) trie.insert(padded(c, n), k);

  BigInt total = 0;
  std::vector<char> used(n, 0);
  for (const auto& [mono, coef] : uv.terms()) {
    const Exponent a = padded(mono, n);
    if (static_cast<int>(mono.size()) > n) continue;
    // Position j takes t = (sigma rho)_j, which must be >= a_j.
    std::function<void(int, int, int)> rec = [&](int j, int node, int inv) {
      if (j == n) {
        BigInt term = BigInt(coef) * trie.count(node);
        if (inv % 2) term = -term;
        total += term;
        return;
      }
      int smaller = 0;
      for (int t = 0; t < n; ++t) {
        if (used[t]) {
          ++smaller;
          continue;
        }
        if (t < a[j]) continue;
        const int next = trie.child(node, t - a[j]);
        if (next < 0) continue;
        used[t] = 1;
        rec(j + 1, next, inv + smaller);
        used[t] = 0;
      }
    };
    rec(0, 0, 0);
  }
  if (total < 0) throw Error(ErrorKind::NegativeResult, "negative structure constant");
  return total;
}

enum class CoefficientMethod { PostnikovStanley, Expand, Polytope };

inline BigInt coefficient(const Permutation& u, const Permutation& v, const Permutation& w,
                          CoefficientMethod method = CoefficientMethod::PostnikovStanley) {
  switch (method) {
    case CoefficientMethod::Expand: return coefficient_expand(u, v, w);
    case CoefficientMethod::Polytope: return stretched_coefficient_polytope(u, v, w, 1);
    case CoefficientMethod::PostnikovStanley: break;
  }
  return coefficient_ps(u, v, w);
}

/// c^{N*w}_{N*u, N*v}.
inline BigInt stretched_coefficient(const Permutation& u, const Permutation& v, const Permutation& w, std::int64_t N,
                                    CoefficientMethod method = CoefficientMethod::Polytope, unsigned threads = 1) {
  if (N < 1) throw Error(ErrorKind::InvalidArgument, "N must be positive");
  if (method == CoefficientMethod::Polytope) return stretched_coefficient_polytope(u, v, w, N, {FSigmaMethod::Factorized, threads});
  const int k = static_cast<int>(N);
  return coefficient(stretch(u, k), stretch(v, k), stretch(w, k), method);
}

/// K_{N*u, N*a}, counted as the compatible ladder sequences of N*u whose
/// u-weight is N*a.
inline BigInt stretched_kostka(const Permutation& u, const WeightVector& a, std::int64_t N) {
  if (N < 1) throw Error(ErrorKind::InvalidArgument, "N must be positive");
  for (int x : a)
    if (x < 0) throw Error(ErrorKind::InvalidArgument, "weights are natural numbers");
  const AffineCode code = affine_code(u);
  const int mu = static_cast<int>(code.size());
  const WeightVector target = strip_trailing_zeros(a);
  if (static_cast<int>(target.size()) > mu) return 0;
  std::vector<std::int64_t> flow(mu);
  for (int j = 1; j <= mu; ++j) flow[j - 1] = N * (j <= static_cast<int>(target.size()) ? target[j - 1] : 0) - code[j - 1].at(N);
  return detail::fiber_count(detail::block_supports(code, N), flow);
}

}  // namespace schubert
