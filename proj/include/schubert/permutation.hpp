#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "schubert/error.hpp"

namespace schubert {

/// A permutation of {1, 2, ...} fixing all but finitely many points.
///
/// Stored in one-line notation with the trailing run of fixed points removed,
/// so the embeddings S_n -> S_{n+1} are invisible and equality is the natural
/// one on S_infinity.
class Permutation {
 public:
  Permutation() = default;

  /// Accepts any one-line word that is a permutation of {1..n}.
  explicit Permutation(std::vector<int> oneline) : w_(std::move(oneline)) {
    std::vector<char> seen(w_.size() + 1, 0);
    for (int x : w_) {
      if (x < 1 || x > static_cast<int>(w_.size()) || seen[x])
        throw Error(ErrorKind::InvalidArgument, "not a permutation: " + word_string(w_));
      seen[x] = 1;
    }
    canonicalize();
  }

  static Permutation identity() { return {}; }

  /// w(i) for every i >= 1.
  int operator()(int i) const { return i <= size() ? w_[i - 1] : i; }

  /// Canonical length: the largest non-fixed point, 0 for the identity.
  int size() const { return static_cast<int>(w_.size()); }
  bool is_identity() const { return w_.empty(); }

  const std::vector<int>& oneline() const { return w_; }

  /// One-line notation padded with fixed points to length n (n >= size()).
  std::vector<int> oneline(int n) const {
    std::vector<int> out(w_);
    for (int i = size() + 1; i <= n; ++i) out.push_back(i);
    return out;
  }

  Permutation inverse() const {
    std::vector<int> inv(w_.size());
    for (int i = 0; i < size(); ++i) inv[w_[i] - 1] = i + 1;
    Permutation p;
    p.w_ = std::move(inv);
    return p;
  }

  /// Digits when every entry is below 10, comma separated otherwise.
  std::string to_string() const {
    if (w_.empty()) return "id";
    return word_string(w_);
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  static std::string word_string(const std::vector<int>& w) {
    bool small = std::all_of(w.begin(), w.end(), [](int x) { return x >= 0 && x < 10; });
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (!small && i) s += ',';
      s += std::to_string(w[i]);
    }
    return s;
  }

  void canonicalize() {
    while (!w_.empty() && w_.back() == static_cast<int>(w_.size())) w_.pop_back();
  }

  std::vector<int> w_;
};

/// Product (p q)(i) = p(q(i)).
inline Permutation compose(const Permutation& p, const Permutation& q) {
  int n = std::max(p.size(), q.size());
  std::vector<int> out(n);
  for (int i = 1; i <= n; ++i) out[i - 1] = p(q(i));
  return Permutation(std::move(out));
}

/// The longest element w0 = n (n-1) ... 1 of S_n.
inline Permutation longest_element(int n) {
  std::vector<int> w(std::max(n, 0));
  for (int i = 0; i < n; ++i) w[i] = n - i;
  return Permutation(std::move(w));
}

/// Parses "3142", "3,1,4,2", or "id" (also the empty string).
inline Permutation parse_permutation(const std::string& text) {
  if (text.empty() || text == "id" || text == "e") return {};
  std::vector<int> w;
  if (text.find(',') == std::string::npos) {
    for (char ch : text) {
      if (ch < '0' || ch > '9') throw Error(ErrorKind::InvalidArgument, "bad permutation: " + text);
      w.push_back(ch - '0');
    }
  } else {
    std::size_t pos = 0;
    while (pos <= text.size()) {
      std::size_t next = text.find(',', pos);
      if (next == std::string::npos) next = text.size();
      std::string tok = text.substr(pos, next - pos);
      if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
        throw Error(ErrorKind::InvalidArgument, "bad permutation: " + text);
      w.push_back(std::stoi(tok));
      pos = next + 1;
    }
  }
  return Permutation(std::move(w));
}

/// Lehmer code c_i(w) = #{j > i : w(j) < w(i)}, trailing zeros removed.
class LehmerCode {
 public:
  LehmerCode() = default;
  explicit LehmerCode(std::vector<int> entries) : c_(std::move(entries)) {
    for (int x : c_)
      if (x < 0) throw Error(ErrorKind::InvalidCode, "negative code entry");
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  /// c_i for i >= 1 (zero past the support).
  int operator()(int i) const { return i >= 1 && i <= support() ? c_[i - 1] : 0; }
  const std::vector<int>& entries() const { return c_; }

  /// Largest i with c_i > 0.
  int support() const { return static_cast<int>(c_.size()); }

  int sum() const {
    int s = 0;
    for (int x : c_) s += x;
    return s;
  }

  /// Smallest n with c_i <= n - i for all i, so that the code lives in S_n.
  int min_length() const {
    int k = 0;
    for (int i = 0; i < support(); ++i)
      if (c_[i] > 0) k = std::max(k, i + 1 + c_[i]);
    return k;
  }

  LehmerCode scaled(int N) const {
    std::vector<int> out(c_);
    for (int& x : out) x *= N;
    return LehmerCode(std::move(out));
  }

  std::string to_string() const {
    std::string s;
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(c_[i]);
    }
    return s;
  }

  friend bool operator==(const LehmerCode&, const LehmerCode&) = default;

 private:
  std::vector<int> c_;
};

inline LehmerCode lehmer_code(const Permutation& w) {
  const int n = w.size();
  std::vector<int> c(n, 0);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (w(j) < w(i)) ++c[i - 1];
  return LehmerCode(std::move(c));
}

/// Inverse of the Lehmer code. Without `length` the smallest ambient S_k is
/// used, so every code is realisable; with `length` the code must fit in S_length.
inline Permutation from_code(const LehmerCode& code, std::optional<int> length = std::nullopt) {
  int k = code.min_length();
  if (length) {
    if (*length < k) throw Error(ErrorKind::InvalidCode, "code (" + code.to_string() + ") does not fit in S_" + std::to_string(*length));
    k = *length;
  }
  std::vector<int> avail(k);
  for (int i = 0; i < k; ++i) avail[i] = i + 1;
  std::vector<int> w;
  w.reserve(k);
  for (int i = 1; i <= k; ++i) {
    int c = code(i);
    w.push_back(avail[c]);
    avail.erase(avail.begin() + c);
  }
  return Permutation(std::move(w));
}

/// N * w: the permutation whose code is N times the code of w.
inline Permutation stretch(const Permutation& w, int N) {
  if (N < 1) throw Error(ErrorKind::InvalidArgument, "stretch factor must be positive");
  return from_code(lehmer_code(w).scaled(N));
}

inline int inversions(const Permutation& w) { return lehmer_code(w).sum(); }

inline int sign(const Permutation& w) { return inversions(w) % 2 ? -1 : 1; }

inline std::vector<int> descents(const Permutation& w) {
  std::vector<int> d;
  for (int i = 1; i < w.size(); ++i)
    if (w(i) > w(i + 1)) d.push_back(i);
  return d;
}

struct PermutationStats {
  int inversions = 0;
  std::vector<int> descents;
  std::vector<int> exceedances;  // i with w(i) > i
  std::optional<std::pair<int, int>> exceedance_range;
};

inline PermutationStats statistics(const Permutation& w) {
  PermutationStats st;
  st.inversions = inversions(w);
  st.descents = descents(w);
  for (int i = 1; i <= w.size(); ++i)
    if (w(i) > i) st.exceedances.push_back(i);
  if (!st.exceedances.empty()) st.exceedance_range = {st.exceedances.front(), st.exceedances.back()};
  return st;
}

/// All of S_n in lexicographic order of one-line notation.
inline std::vector<Permutation> all_permutations(int n) {
  std::vector<int> w(n);
  for (int i = 0; i < n; ++i) w[i] = i + 1;
  std::vector<Permutation> out;
  do {
    out.emplace_back(w);
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

/// Visits every permutation of {1..n} (as a one-line word) together with its
/// sign. Heap's algorithm, so each step is one transposition and the sign is
/// flipped instead of recomputed.
inline void for_each_signed_permutation(int n, const std::function<void(const std::vector<int>&, int)>& visit) {
  std::vector<int> w(n);
  for (int i = 0; i < n; ++i) w[i] = i + 1;
  std::vector<int> c(n, 0);
  int sgn = 1;
  visit(w, sgn);
  int i = 1;
  while (i < n) {
    if (c[i] < i) {
      if (i % 2 == 0)
        std::swap(w[0], w[i]);
      else
        std::swap(w[c[i]], w[i]);
      sgn = -sgn;
      visit(w, sgn);
      ++c[i];
      i = 1;
    } else {
      c[i] = 0;
      ++i;
    }
  }
}

}  // namespace schubert

template <>
struct std::hash<schubert::Permutation> {
  std::size_t operator()(const schubert::Permutation& p) const noexcept {
    std::size_t h = 0xcbf29ce484222325ull;
    for (int x : p.oneline()) h = (h ^ static_cast<std::size_t>(x)) * 0x100000001b3ull;
    return h;
  }
};
