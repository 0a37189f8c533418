#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "schubert/error.hpp"
#include "schubert/ladder.hpp"
#include "schubert/numeric.hpp"

namespace schubert {

/// A variable of a parametric system: a ladder index, tagged with the block
/// (0, 1, 2 for u, v, w) it belongs to when systems are concatenated.
struct SystemVariable {
  LadderIndex index;
  int block = 0;
  friend bool operator==(const SystemVariable&, const SystemVariable&) = default;
};

/// A x <= N c + b, one row per inequality, variables as listed.
struct ParametricSystem {
  std::vector<SystemVariable> vars;
  std::vector<std::vector<std::int64_t>> A;
  std::vector<std::int64_t> c;
  std::vector<std::int64_t> b;

  std::size_t rows() const { return A.size(); }

  void add_row(std::vector<std::int64_t> coeffs, std::int64_t slope, std::int64_t offset) {
    coeffs.resize(vars.size(), 0);
    A.push_back(std::move(coeffs));
    c.push_back(slope);
    b.push_back(offset);
  }

  friend bool operator==(const ParametricSystem&, const ParametricSystem&) = default;
};

/// A x <= rhs together with x >= lower.
struct InstantiatedSystem {
  std::size_t varcount = 0;
  std::vector<std::vector<std::int64_t>> A;
  std::vector<std::int64_t> rhs;
  std::vector<std::int64_t> lower;

  void add_row(std::vector<std::int64_t> coeffs, std::int64_t bound) {
    coeffs.resize(varcount, 0);
    A.push_back(std::move(coeffs));
    rhs.push_back(bound);
  }
};

inline InstantiatedSystem instantiate(const ParametricSystem& P, std::int64_t N) {
  InstantiatedSystem S;
  S.varcount = P.vars.size();
  S.A = P.A;
  S.rhs.resize(P.rows());
  for (std::size_t r = 0; r < P.rows(); ++r) S.rhs[r] = checked_add(checked_mul(N, P.c[r]), P.b[r]);
  S.lower.assign(S.varcount, 0);
  return S;
}

namespace detail {

/// Depth-first lattice point search over bounding boxes, tightened at every
/// node by interval propagation through the rows.
class BoxSearch {
 public:
  static constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max();

  explicit BoxSearch(const InstantiatedSystem& S) : n_(S.varcount) {
    if (S.A.size() != S.rhs.size()) throw Error(ErrorKind::InvalidArgument, "row count mismatch");
    if (!S.lower.empty() && S.lower.size() != n_) throw Error(ErrorKind::InvalidArgument, "lower bound size mismatch");
    var_rows_.resize(n_);
    for (std::size_t r = 0; r < S.A.size(); ++r) {
      if (S.A[r].size() != n_) throw Error(ErrorKind::InvalidArgument, "row width mismatch");
      Row row;
      row.rhs = S.rhs[r];
      for (std::size_t v = 0; v < n_; ++v)
        if (S.A[r][v] != 0) {
          row.terms.push_back({v, S.A[r][v]});
          var_rows_[v].push_back(rows_.size());
        }
      if (row.terms.empty()) {
        if (row.rhs < 0) infeasible_ = true;
        continue;
      }
      rows_.push_back(std::move(row));
    }
    lo_.assign(n_, 0);
    if (!S.lower.empty()) lo_ = S.lower;
    hi_.assign(n_, kInf);
    if (infeasible_) return;
    std::vector<std::size_t> all(rows_.size());
    for (std::size_t r = 0; r < rows_.size(); ++r) all[r] = r;
    if (!propagate(lo_, hi_, all)) {
      infeasible_ = true;
      return;
    }
    for (std::size_t v = 0; v < n_; ++v)
      if (hi_[v] == kInf) throw Error(ErrorKind::Unbounded, "variable " + std::to_string(v) + " has no upper bound");
  }

  BigInt count() {
    BigInt total = 0;
    if (infeasible_) return total;
    std::vector<std::int64_t> lo = lo_, hi = hi_;
    count_rec(lo, hi, total);
    return total;
  }

  void visit(const std::function<void(std::span<const std::int64_t>)>& f) {
    if (infeasible_) return;
    std::vector<std::int64_t> lo = lo_, hi = hi_;
    visit_rec(lo, hi, f);
  }

  bool infeasible() const { return infeasible_; }
  const std::vector<std::int64_t>& lower() const { return lo_; }
  const std::vector<std::int64_t>& upper() const { return hi_; }

 private:
  struct Term {
    std::size_t var;
    std::int64_t coef;
  };
  struct Row {
    std::vector<Term> terms;
    std::int64_t rhs;
  };

  static __int128 floor_div(__int128 a, __int128 b) {
    __int128 q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
  }
  static __int128 ceil_div(__int128 a, __int128 b) { return -floor_div(-a, b); }

  // Returns false when some box becomes empty. The number of sweeps is capped;
  // propagation only prunes, exactness comes from the checks at the leaves.
  bool propagate(std::vector<std::int64_t>& lo, std::vector<std::int64_t>& hi, std::vector<std::size_t> queue) const {
    std::vector<char> queued(rows_.size(), 0);
    for (auto r : queue) queued[r] = 1;
    std::size_t budget = 64 * (rows_.size() + 1);
    std::size_t head = 0;
    while (head < queue.size()) {
      if (budget-- == 0) return true;
      const std::size_t r = queue[head++];
      queued[r] = 0;
      const Row& row = rows_[r];
      __int128 minsum = 0;
      int infinite = 0;
      for (const Term& t : row.terms) {
        if (t.coef > 0)
          minsum += static_cast<__int128>(t.coef) * lo[t.var];
        else if (hi[t.var] == kInf)
          ++infinite;
        else
          minsum += static_cast<__int128>(t.coef) * hi[t.var];
      }
      if (infinite == 0 && minsum > row.rhs) return false;
      for (const Term& t : row.terms) {
        __int128 own;
        bool own_inf = false;
        if (t.coef > 0)
          own = static_cast<__int128>(t.coef) * lo[t.var];
        else if (hi[t.var] == kInf)
          own_inf = true, own = 0;
        else
          own = static_cast<__int128>(t.coef) * hi[t.var];
        const int rest_inf = infinite - (own_inf ? 1 : 0);
        if (rest_inf > 0) continue;
        const __int128 slack = static_cast<__int128>(row.rhs) - (minsum - own);
        bool changed = false;
        if (t.coef > 0) {
          __int128 ub = floor_div(slack, t.coef);
          if (hi[t.var] == kInf || ub < hi[t.var]) {
            if (ub < lo[t.var]) return false;
            hi[t.var] = static_cast<std::int64_t>(ub);
            changed = true;
          }
        } else {
          __int128 lb = ceil_div(slack, t.coef);
          if (lb > lo[t.var]) {
            if (hi[t.var] != kInf && lb > hi[t.var]) return false;
            if (lb > std::numeric_limits<std::int64_t>::max() / 2) return false;
            lo[t.var] = static_cast<std::int64_t>(lb);
            changed = true;
          }
        }
        if (changed) {
          for (auto r2 : var_rows_[t.var])
            if (!queued[r2]) {
              queued[r2] = 1;
              queue.push_back(r2);
            }
          // minsum is stale now; recompute on the next visit of this row.
          if (!queued[r]) {
            queued[r] = 1;
            queue.push_back(r);
          }
          break;
        }
      }
    }
    return true;
  }

  bool row_holds(const Row& row, const std::vector<std::int64_t>& x) const {
    __int128 s = 0;
    for (const Term& t : row.terms) s += static_cast<__int128>(t.coef) * x[t.var];
    return s <= row.rhs;
  }

  // Exact range of `free` given all other variables fixed at lo.
  std::optional<std::pair<std::int64_t, std::int64_t>> last_range(std::size_t free, const std::vector<std::int64_t>& lo,
                                                                   const std::vector<std::int64_t>& hi) const {
    __int128 L = lo[free], H = hi[free];
    for (const Row& row : rows_) {
      __int128 s = 0;
      std::int64_t a = 0;
      for (const Term& t : row.terms) {
        if (t.var == free)
          a = t.coef;
        else
          s += static_cast<__int128>(t.coef) * lo[t.var];
      }
      const __int128 slack = static_cast<__int128>(row.rhs) - s;
      if (a == 0) {
        if (slack < 0) return std::nullopt;
      } else if (a > 0) {
        H = std::min(H, floor_div(slack, a));
      } else {
        L = std::max(L, ceil_div(slack, a));
      }
      if (L > H) return std::nullopt;
    }
    return std::make_pair(static_cast<std::int64_t>(L), static_cast<std::int64_t>(H));
  }

  // Variable with the smallest domain among the unfixed ones, or n_ if none.
  std::size_t pick(const std::vector<std::int64_t>& lo, const std::vector<std::int64_t>& hi, std::size_t& unfixed) const {
    std::size_t best = n_;
    unfixed = 0;
    for (std::size_t v = 0; v < n_; ++v) {
      if (lo[v] == hi[v]) continue;
      ++unfixed;
      if (best == n_ || hi[v] - lo[v] < hi[best] - lo[best]) best = v;
    }
    return best;
  }

  void count_rec(std::vector<std::int64_t>& lo, std::vector<std::int64_t>& hi, BigInt& total) const {
    std::size_t unfixed;
    const std::size_t v = pick(lo, hi, unfixed);
    if (unfixed == 0) {
      for (const Row& row : rows_)
        if (!row_holds(row, lo)) return;
      total += 1;
      return;
    }
    if (unfixed == 1) {
      if (auto r = last_range(v, lo, hi)) total += BigInt(r->second) - BigInt(r->first) + 1;
      return;
    }
    for (std::int64_t val = lo[v]; val <= hi[v]; ++val) {
      std::vector<std::int64_t> l2 = lo, h2 = hi;
      l2[v] = h2[v] = val;
      if (propagate(l2, h2, var_rows_[v])) count_rec(l2, h2, total);
    }
  }

  void visit_rec(std::vector<std::int64_t>& lo, std::vector<std::int64_t>& hi,
                 const std::function<void(std::span<const std::int64_t>)>& f) const {
    std::size_t unfixed;
    const std::size_t v = pick(lo, hi, unfixed);
    if (unfixed == 0) {
      for (const Row& row : rows_)
        if (!row_holds(row, lo)) return;
      f(lo);
      return;
    }
    for (std::int64_t val = lo[v]; val <= hi[v]; ++val) {
      std::vector<std::int64_t> l2 = lo, h2 = hi;
      l2[v] = h2[v] = val;
      if (propagate(l2, h2, var_rows_[v])) visit_rec(l2, h2, f);
    }
  }

  std::size_t n_;
  std::vector<Row> rows_;
  std::vector<std::vector<std::size_t>> var_rows_;
  std::vector<std::int64_t> lo_, hi_;
  bool infeasible_ = false;
};

}  // namespace detail

/// #{x in Z^n : A x <= rhs, x >= lower}. Throws Unbounded when the box bound
/// from propagation leaves a variable without an upper bound.
inline BigInt count_lattice_points(const InstantiatedSystem& S) { return detail::BoxSearch(S).count(); }

/// Calls `f` on every lattice point, in a fixed order.
inline void for_each_lattice_point(const InstantiatedSystem& S, const std::function<void(std::span<const std::int64_t>)>& f) {
  detail::BoxSearch(S).visit(f);
}

struct Box {
  std::vector<std::int64_t> lower;
  std::vector<std::int64_t> upper;
};

/// A bounding box of the lattice points (not necessarily tight), or nothing
/// when propagation already proves there are none.
inline std::optional<Box> bounding_box(const InstantiatedSystem& S) {
  detail::BoxSearch search(S);
  if (search.infeasible()) return std::nullopt;
  return Box{search.lower(), search.upper()};
}

inline std::vector<std::vector<std::int64_t>> lattice_points(const InstantiatedSystem& S) {
  std::vector<std::vector<std::int64_t>> out;
  for_each_lattice_point(S, [&](std::span<const std::int64_t> x) { out.emplace_back(x.begin(), x.end()); });
  return out;
}

}  // namespace schubert
