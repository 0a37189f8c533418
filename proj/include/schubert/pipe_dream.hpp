#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "schubert/error.hpp"
#include "schubert/numeric.hpp"
#include "schubert/permutation.hpp"

namespace schubert {

/// Finitely supported vector of naturals with trailing zeros removed.
using WeightVector = std::vector<int>;

struct Cell {
  int row;
  int col;
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

/// A set of crosses inside the staircase {(i, j) : i + j <= n + 1}.
/// Each row is a bitset over columns.
class PipeDream {
 public:
  explicit PipeDream(int n = 0) : n_(std::max(n, 0)), words_((n_ + 63) / 64), bits_(static_cast<std::size_t>(n_) * words_, 0) {}

  PipeDream(int n, const std::vector<Cell>& crosses) : PipeDream(n) {
    for (const Cell& c : crosses) {
      if (!in_staircase(c.row, c.col))
        throw Error(ErrorKind::InvalidArgument,
                    "cell (" + std::to_string(c.row) + "," + std::to_string(c.col) + ") outside staircase of size " + std::to_string(n_));
      add(c.row, c.col);
    }
  }

  int n() const { return n_; }

  bool in_staircase(int i, int j) const { return i >= 1 && j >= 1 && i + j <= n_ + 1; }

  bool contains(int i, int j) const {
    if (!in_staircase(i, j)) return false;
    return (word(i, j) >> ((j - 1) % 64)) & 1u;
  }

  void add(int i, int j) {
    if (!in_staircase(i, j)) throw Error(ErrorKind::InvalidArgument, "cell outside staircase");
    word(i, j) |= bit(j);
  }

  void remove(int i, int j) {
    if (!in_staircase(i, j)) return;
    word(i, j) &= ~bit(j);
  }

  int row_count(int i) const {
    if (i < 1 || i > n_) return 0;
    int s = 0;
    for (int w = 0; w < words_; ++w) s += std::popcount(bits_[(i - 1) * words_ + w]);
    return s;
  }

  std::vector<int> row_columns(int i) const {
    std::vector<int> cols;
    for (int j = 1; i >= 1 && i <= n_ && i + j <= n_ + 1; ++j)
      if (contains(i, j)) cols.push_back(j);
    return cols;
  }

  std::vector<Cell> crosses() const {
    std::vector<Cell> out;
    for (int i = 1; i <= n_; ++i)
      for (int j : row_columns(i)) out.push_back({i, j});
    return out;
  }

  int size() const {
    int s = 0;
    for (auto w : bits_) s += std::popcount(w);
    return s;
  }

  /// (#crosses in row 1, #crosses in row 2, ...).
  WeightVector weight() const {
    WeightVector wt(n_);
    for (int i = 1; i <= n_; ++i) wt[i - 1] = row_count(i);
    return strip_trailing_zeros(std::move(wt));
  }

  /// Rows top to bottom, '+' for a cross and '.' for an elbow.
  std::string render() const {
    std::string s;
    for (int i = 1; i <= n_; ++i) {
      for (int j = 1; i + j <= n_ + 1; ++j) s += contains(i, j) ? '+' : '.';
      s += '\n';
    }
    return s;
  }

  std::size_t hash() const noexcept {
    std::size_t h = static_cast<std::size_t>(n_) * 0x9e3779b97f4a7c15ull;
    for (auto w : bits_) h = (h ^ w) * 0x100000001b3ull + (h >> 29);
    return h;
  }

  friend bool operator==(const PipeDream&, const PipeDream&) = default;

  /// Row-major lexicographic order on the bitsets (fixed, otherwise arbitrary).
  friend bool operator<(const PipeDream& a, const PipeDream& b) {
    if (a.n_ != b.n_) return a.n_ < b.n_;
    return a.bits_ < b.bits_;
  }

 private:
  std::uint64_t& word(int i, int j) { return bits_[(i - 1) * words_ + (j - 1) / 64]; }
  std::uint64_t word(int i, int j) const { return bits_[(i - 1) * words_ + (j - 1) / 64]; }
  static std::uint64_t bit(int j) { return std::uint64_t{1} << ((j - 1) % 64); }

  int n_;
  int words_;
  std::vector<std::uint64_t> bits_;
};

struct PipeDreamHash {
  std::size_t operator()(const PipeDream& d) const noexcept { return d.hash(); }
};

struct PipeReading {
  Permutation permutation;
  bool reduced = false;
};

/// Traces the pipes of D. Pipe j enters the top of column j, a cross passes
/// both pipes straight through, an elbow turns the top pipe left and the right
/// pipe down. u(i) is the pipe leaving row i on the left.
///
/// The trace runs in the staircase one size larger than D's so that crosses on
/// the anti-diagonal still give a permutation; this does not change the
/// reading of any other pipe dream.
inline PipeReading read_permutation(const PipeDream& D) {
  const int m = D.n() + 1;
  // top[j] is the label entering the current row at column j from above.
  std::vector<int> top(m + 2, 0);
  for (int j = 1; j <= m; ++j) top[j] = j;
  std::vector<int> out(m, 0);
  std::map<std::pair<int, int>, int> crossings;
  bool reduced = true;
  for (int i = 1; i <= m; ++i) {
    int right = 0;
    std::vector<int> below(m + 2, 0);
    for (int j = m + 1 - i; j >= 1; --j) {
      int t = top[j];
      int r = right;
      int left, bot;
      if (D.contains(i, j)) {
        bot = t;
        left = r;
        auto key = std::minmax(t, r);
        if (++crossings[{key.first, key.second}] > 1) reduced = false;
      } else {
        left = t;
        bot = r;
      }
      below[j] = bot;
      right = left;
    }
    out[i - 1] = right;
    top = std::move(below);
  }
  std::vector<char> seen(m + 1, 0);
  for (int x : out) {
    if (x < 1 || x > m || seen[x]) return {Permutation(), false};
    seen[x] = 1;
  }
  return {Permutation(std::move(out)), reduced};
}

/// D_bot(u): the left-justified pipe dream with c_i(u) crosses in row i.
inline PipeDream bottom_pipe_dream(const Permutation& u) {
  PipeDream D(u.size());
  const LehmerCode c = lehmer_code(u);
  for (int i = 1; i <= c.support(); ++i)
    for (int j = 1; j <= c(i); ++j) D.add(i, j);
  return D;
}

/// Where a (inverse) ladder move sends its cross, with the rows travelled.
struct LadderMoveResult {
  PipeDream dream;
  int distance;
};

/// L_{i,j}: moves the cross (i, j) to (i - m, j + 1) across an m-row ladder.
inline std::optional<LadderMoveResult> try_ladder_move(const PipeDream& D, int i, int j) {
  if (!D.contains(i, j) || D.contains(i, j + 1)) return std::nullopt;
  for (int r = i - 1; r >= 1; --r) {
    bool a = D.contains(r, j), b = D.contains(r, j + 1);
    if (a && b) continue;
    if (a || b) return std::nullopt;
    PipeDream E = D;
    E.remove(i, j);
    E.add(r, j + 1);
    return LadderMoveResult{std::move(E), i - r};
  }
  return std::nullopt;
}

/// Inverse of a ladder move: the cross (i, j) drops to (i + m, j - 1).
inline std::optional<LadderMoveResult> try_inverse_ladder_move(const PipeDream& D, int i, int j) {
  if (j < 2 || !D.contains(i, j) || D.contains(i, j - 1)) return std::nullopt;
  for (int r = i + 1; D.in_staircase(r, j - 1); ++r) {
    bool a = D.contains(r, j - 1), b = D.contains(r, j);
    if (a && b) continue;
    if (a || b) return std::nullopt;
    PipeDream E = D;
    E.remove(i, j);
    E.add(r, j - 1);
    return LadderMoveResult{std::move(E), r - i};
  }
  return std::nullopt;
}

inline PipeDream ladder_move(const PipeDream& D, int i, int j) {
  auto r = try_ladder_move(D, i, j);
  if (!r) throw Error(ErrorKind::NotApplicable, "ladder move L_{" + std::to_string(i) + "," + std::to_string(j) + "}");
  return std::move(r->dream);
}

inline PipeDream inverse_ladder_move(const PipeDream& D, int i, int j) {
  auto r = try_inverse_ladder_move(D, i, j);
  if (!r) throw Error(ErrorKind::NotApplicable, "inverse ladder move at (" + std::to_string(i) + "," + std::to_string(j) + ")");
  return std::move(r->dream);
}

/// PD(u), the reduced pipe dreams of u, as the closure of D_bot(u) under
/// ladder moves. Sorted.
inline std::vector<PipeDream> enumerate_pipe_dreams(const Permutation& u) {
  PipeDream start = bottom_pipe_dream(u);
  std::unordered_set<PipeDream, PipeDreamHash> seen{start};
  std::vector<PipeDream> stack{start};
  while (!stack.empty()) {
    PipeDream D = std::move(stack.back());
    stack.pop_back();
    for (const Cell& c : D.crosses()) {
      auto r = try_ladder_move(D, c.row, c.col);
      if (r && seen.insert(r->dream).second) stack.push_back(std::move(r->dream));
    }
  }
  std::vector<PipeDream> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

/// Monomial coefficients of the Schubert polynomial of u: weight -> #PD(u)
/// with that weight.
inline std::map<WeightVector, std::int64_t> schubert_weights(const Permutation& u) {
  std::map<WeightVector, std::int64_t> out;
  for (const PipeDream& D : enumerate_pipe_dreams(u)) ++out[D.weight()];
  return out;
}

/// K_{u,a} = #{D in PD(u) : weight(D) = a}.
inline std::int64_t schubert_kostka(const Permutation& u, const WeightVector& a) {
  const auto weights = schubert_weights(u);
  auto it = weights.find(strip_trailing_zeros(a));
  return it == weights.end() ? 0 : it->second;
}

}  // namespace schubert
