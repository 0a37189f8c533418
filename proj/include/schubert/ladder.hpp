#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "schubert/error.hpp"
#include "schubert/permutation.hpp"
#include "schubert/pipe_dream.hpp"

namespace schubert {

/// A ladder index (i; k_1, ..., k_l): a patch of crosses that starts in row i
/// and was carried down k_1, then k_2, ... rows. It lands in row i + sum(k).
class LadderIndex {
 public:
  LadderIndex() : start_(1), steps_{1} {}
  LadderIndex(int start, std::vector<int> steps) : start_(start), steps_(std::move(steps)) {
    if (start_ < 1 || steps_.empty() || std::any_of(steps_.begin(), steps_.end(), [](int k) { return k < 1; }))
      throw Error(ErrorKind::InvalidArgument, "malformed ladder index");
  }

  int start() const { return start_; }
  const std::vector<int>& steps() const { return steps_; }
  int length() const { return static_cast<int>(steps_.size()); }
  int landing() const { return start_ + std::accumulate(steps_.begin(), steps_.end(), 0); }

  /// "(i;k1,k2)"
  std::string to_string() const {
    std::string s = "(" + std::to_string(start_) + ";";
    for (std::size_t p = 0; p < steps_.size(); ++p) s += (p ? "," : "") + std::to_string(steps_[p]);
    return s + ")";
  }

  friend bool operator==(const LadderIndex&, const LadderIndex&) = default;

 private:
  int start_;
  std::vector<int> steps_;
};

/// The ladder order: a < b when a starts lower down, or on a tie when a has the
/// smaller step at the first difference, or when b is a proper prefix of a.
inline std::strong_ordering ladder_compare(const LadderIndex& a, const LadderIndex& b) {
  if (a.start() != b.start()) return b.start() <=> a.start();
  const auto& ka = a.steps();
  const auto& kb = b.steps();
  const std::size_t m = std::min(ka.size(), kb.size());
  for (std::size_t p = 0; p < m; ++p)
    if (ka[p] != kb[p]) return ka[p] <=> kb[p];
  return kb.size() <=> ka.size();
}

struct LadderLess {
  bool operator()(const LadderIndex& a, const LadderIndex& b) const { return ladder_compare(a, b) < 0; }
};

/// All ladder indices landing in rows <= mu, sorted by the ladder order.
inline std::vector<LadderIndex> ladder_indices(int mu) {
  std::vector<LadderIndex> out;
  std::vector<int> steps;
  std::function<void(int, int)> extend = [&](int start, int reach) {
    for (int k = 1; reach + k <= mu; ++k) {
      steps.push_back(k);
      out.emplace_back(start, steps);
      extend(start, reach + k);
      steps.pop_back();
    }
  };
  for (int i = 1; i < mu; ++i) extend(i, i);
  std::sort(out.begin(), out.end(), LadderLess{});
  return out;
}

/// A finitely supported function from ladder indices of L_mu to naturals.
class LadderSequence {
 public:
  using Map = std::map<LadderIndex, std::int64_t, LadderLess>;

  explicit LadderSequence(int mu = 0) : mu_(mu) {}

  int mu() const { return mu_; }

  std::int64_t operator[](const LadderIndex& idx) const {
    auto it = entries_.find(idx);
    return it == entries_.end() ? 0 : it->second;
  }

  void set(const LadderIndex& idx, std::int64_t value) {
    if (idx.landing() > mu_) throw Error(ErrorKind::IndexOutOfRange, idx.to_string() + " lands below row " + std::to_string(mu_));
    if (value < 0) throw Error(ErrorKind::InvalidArgument, "ladder sequence entries are natural numbers");
    if (value == 0)
      entries_.erase(idx);
    else
      entries_[idx] = value;
  }

  void add(const LadderIndex& idx, std::int64_t value) { set(idx, (*this)[idx] + value); }

  /// Nonzero entries in ladder order.
  const Map& entries() const { return entries_; }

  std::vector<LadderIndex> support() const {
    std::vector<LadderIndex> s;
    for (const auto& [idx, v] : entries_) s.push_back(idx);
    return s;
  }

  bool is_zero() const { return entries_.empty(); }

  std::string to_string() const {
    if (entries_.empty()) return "0";
    std::string s;
    for (const auto& [idx, v] : entries_) s += (s.empty() ? "" : " ") + idx.to_string() + "=" + std::to_string(v);
    return s;
  }

  friend bool operator==(const LadderSequence& a, const LadderSequence& b) { return a.mu_ == b.mu_ && a.entries_ == b.entries_; }

 private:
  int mu_;
  Map entries_;
};

/// mu(u) = max{i : c_i(u) > 0}, 0 for the identity.
inline int code_support(const Permutation& u) { return lehmer_code(u).support(); }

/// omega_j(u, x) = c_j(u) - sum_{|i| = j} x_i + sum_{start(i) = j} x_i, for
/// j = 1..mu(u). Entries may be negative when x is not u-compatible.
inline std::vector<std::int64_t> u_weight(const LadderSequence& x, const Permutation& u) {
  const LehmerCode c = lehmer_code(u);
  const int mu = c.support();
  std::vector<std::int64_t> w(mu);
  for (int j = 1; j <= mu; ++j) w[j - 1] = c(j);
  for (const auto& [idx, v] : x.entries()) {
    if (idx.landing() > mu) throw Error(ErrorKind::IndexOutOfRange, idx.to_string() + " exceeds mu(u)");
    w[idx.landing() - 1] -= v;
    w[idx.start() - 1] += v;
  }
  return w;
}

/// Ladder sequence of a reduced pipe dream: drops crosses back to D_bot(u) by
/// inverse ladder moves, always working on the lowest row that has an elbow
/// directly left of a cross, and records where each patch started and how far
/// it fell.
inline LadderSequence encode(const PipeDream& input, const Permutation& u) {
  const int n = u.size();
  if (input.n() > n) {
    for (const Cell& c : input.crosses())
      if (c.row + c.col > n + 1) throw Error(ErrorKind::InvalidPipeDream, "cross outside the staircase of u");
  }
  PipeDream D(n, input.crosses());
  {
    auto r = read_permutation(D);
    if (!r.reduced || r.permutation != u) throw Error(ErrorKind::InvalidPipeDream, "not a reduced pipe dream of " + u.to_string());
  }
  LadderSequence x(code_support(u));

  struct Patch {
    int row;
    int first_col;
    int last_col;
    int start;
    std::vector<int> steps;
  };
  std::optional<Patch> pending;

  while (true) {
    int gi = 0, gj = 0;
    for (int i = n; i >= 1 && !gi; --i)
      for (int j = n - i; j >= 1; --j)
        if (!D.contains(i, j) && D.contains(i, j + 1)) {
          gi = i;
          gj = j;
          break;
        }
    if (!gi) break;
    int k = gj + 1;
    while (D.contains(gi, k + 1)) ++k;
    int d = -1;
    for (int col = gj + 1; col <= k; ++col) {
      auto r = try_inverse_ladder_move(D, gi, col);
      if (!r || (d >= 0 && r->distance != d)) throw Error(ErrorKind::InvalidPipeDream, "patch could not be lowered");
      d = r->distance;
      D = std::move(r->dream);
    }
    Patch patch;
    if (pending && pending->row == gi && pending->first_col == gj + 1 && pending->last_col == k) {
      patch = std::move(*pending);
    } else {
      patch.start = gi;
    }
    patch.steps.push_back(d);
    patch.row = gi + d;
    patch.first_col = gj;
    patch.last_col = k - 1;
    pending.reset();
    const int landing = gi + d;
    const int cnt = D.row_count(landing);
    bool aligned = true;
    for (int col = 1; col <= cnt && aligned; ++col) aligned = D.contains(landing, col);
    if (aligned)
      x.add(LadderIndex(patch.start, patch.steps), k - gj);
    else
      pending = std::move(patch);
  }
  if (D != bottom_pipe_dream(u) && !(D.size() == 0 && u.is_identity()))
    throw Error(ErrorKind::InvalidPipeDream, "did not reach the bottom pipe dream");
  return x;
}

/// Inverse of encode: starts from D_bot(u) and, taking the entries from the
/// top of the ladder order down, lifts the right-most x_i crosses of row |i|
/// by k_l, ..., k_1 rows using ladder moves.
inline PipeDream decode(const LadderSequence& x, const Permutation& u) {
  const int mu = code_support(u);
  for (const auto& [idx, v] : x.entries())
    if (idx.landing() > mu) throw Error(ErrorKind::Incompatible, idx.to_string() + " exceeds mu(u)");
  PipeDream D = bottom_pipe_dream(u);
  const auto& entries = x.entries();
  for (auto it = entries.rbegin(); it != entries.rend(); ++it) {
    const LadderIndex& idx = it->first;
    const std::int64_t v = it->second;
    const int row = idx.landing();
    std::vector<int> cols = D.row_columns(row);
    if (static_cast<std::int64_t>(cols.size()) < v) throw Error(ErrorKind::Incompatible, "too few crosses in row " + std::to_string(row));
    std::vector<Cell> patch;
    for (std::size_t t = cols.size() - v; t < cols.size(); ++t) patch.push_back({row, cols[t]});
    for (int p = idx.length(); p >= 1; --p) {
      const int k = idx.steps()[p - 1];
      for (auto c = patch.rbegin(); c != patch.rend(); ++c) {
        auto r = try_ladder_move(D, c->row, c->col);
        if (!r || r->distance != k) throw Error(ErrorKind::Incompatible, "ladder move failed while decoding " + idx.to_string());
        D = std::move(r->dream);
        c->row -= k;
        c->col += 1;
      }
    }
  }
  auto r = read_permutation(D);
  if (!r.reduced || r.permutation != u || encode(D, u) != x) throw Error(ErrorKind::Incompatible, "sequence is not " + u.to_string() + "-compatible");
  return D;
}

}  // namespace schubert
