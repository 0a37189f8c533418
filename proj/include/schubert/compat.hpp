#pragma once

#include <algorithm>
#include <functional>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "schubert/error.hpp"
#include "schubert/ladder.hpp"
#include "schubert/lattice.hpp"
#include "schubert/permutation.hpp"

namespace schubert {

/// slope * N + offset
struct AffineValue {
  std::int64_t slope = 0;
  std::int64_t offset = 0;
  std::int64_t at(std::int64_t N) const { return checked_add(checked_mul(slope, N), offset); }
  friend bool operator==(const AffineValue&, const AffineValue&) = default;
};

/// Code entries c_1..c_mu as affine functions of the stretch factor N.
using AffineCode = std::vector<AffineValue>;

/// c_j(N * u) = N c_j(u), for j = 1..mu(u).
inline AffineCode affine_code(const Permutation& u) {
  const LehmerCode c = lehmer_code(u);
  AffineCode out(c.support());
  for (int j = 1; j <= c.support(); ++j) out[j - 1] = {c(j), 0};
  return out;
}

/// Code entries 1..mu of w0 (N * w) where w0 is the longest element of
/// S_{N n}: c_j = N (n - c_j(w)) - j.
inline AffineCode complement_code(const Permutation& w, int n, int mu) {
  const LehmerCode c = lehmer_code(w);
  AffineCode out(mu);
  for (int j = 1; j <= mu; ++j) out[j - 1] = {n - c(j), -j};
  return out;
}

inline std::vector<std::int64_t> evaluate_code(const AffineCode& code, std::int64_t N) {
  std::vector<std::int64_t> out(code.size());
  for (std::size_t j = 0; j < code.size(); ++j) out[j] = code[j].at(N);
  return out;
}

namespace detail {

struct LinearForm {
  std::vector<std::int64_t> a;
  std::int64_t slope = 0;
  std::int64_t offset = 0;

  LinearForm& operator+=(const LinearForm& o) {
    for (std::size_t t = 0; t < a.size(); ++t) a[t] += o.a[t];
    slope += o.slope;
    offset += o.offset;
    return *this;
  }
  LinearForm& operator-=(const LinearForm& o) {
    for (std::size_t t = 0; t < a.size(); ++t) a[t] -= o.a[t];
    slope -= o.slope;
    offset -= o.offset;
    return *this;
  }
};

// lhs <= rhs  as  (lhs - rhs).a x <= -(lhs - rhs).slope N - (lhs - rhs).offset
inline void add_leq(ParametricSystem& P, LinearForm lhs, const LinearForm& rhs) {
  lhs -= rhs;
  P.add_row(std::move(lhs.a), -lhs.slope, -lhs.offset);
}

}  // namespace detail

inline std::vector<LadderIndex> sorted_support(std::vector<LadderIndex> kappa) {
  std::sort(kappa.begin(), kappa.end(), LadderLess{});
  for (std::size_t t = 1; t < kappa.size(); ++t)
    if (kappa[t] == kappa[t - 1]) throw Error(ErrorKind::InvalidArgument, "repeated ladder index " + kappa[t].to_string());
  return kappa;
}

/// The compatibility system of a support kappa against a code: x in Z^kappa is
/// the restriction of a compatible ladder sequence exactly when it satisfies
/// these rows (with x >= 1 stored as rows as well). Variables follow the
/// ladder order.
inline ParametricSystem compat_system(const AffineCode& code, const std::vector<LadderIndex>& support, int block = 0) {
  const int mu = static_cast<int>(code.size());
  const std::vector<LadderIndex> kappa = sorted_support(support);
  for (const auto& idx : kappa)
    if (idx.landing() > mu) throw Error(ErrorKind::IndexOutOfRange, idx.to_string() + " lands below row " + std::to_string(mu));
  const std::size_t nv = kappa.size();
  ParametricSystem P;
  for (const auto& idx : kappa) P.vars.push_back({idx, block});

  auto var = [&](std::size_t t) {
    detail::LinearForm f{std::vector<std::int64_t>(nv, 0)};
    f.a[t] = 1;
    return f;
  };
  auto constant = [&](std::int64_t s, std::int64_t o) { return detail::LinearForm{std::vector<std::int64_t>(nv, 0), s, o}; };
  auto code_at = [&](int j) { return constant(code[j - 1].slope, code[j - 1].offset); };

  for (std::size_t t = 0; t < nv; ++t) detail::add_leq(P, constant(0, 1), var(t));

  for (int j = 1; j <= mu; ++j) {
    detail::LinearForm s = constant(0, 0);
    bool any = false;
    for (std::size_t t = 0; t < nv; ++t)
      if (kappa[t].landing() == j) s += var(t), any = true;
    if (any) detail::add_leq(P, s, code_at(j));
  }

  for (std::size_t t = 0; t < nv; ++t) {
    const LadderIndex& idx = kappa[t];
    const int i = idx.start();
    // c^idx_j: code entry minus what the later indices landing in row j took.
    auto later_taken = [&](int j) {
      detail::LinearForm f = code_at(j);
      for (std::size_t t2 = t + 1; t2 < nv; ++t2)
        if (kappa[t2].landing() == j) f -= var(t2);
      return f;
    };
    auto local = [&](int j) {
      if (j != i) return later_taken(j);
      for (std::size_t t2 = t + 1; t2 < nv; ++t2)
        if (kappa[t2].start() == i) {
          detail::LinearForm f = later_taken(kappa[t2].landing());
          f += var(t2);
          f.offset += kappa[t2].length();
          return f;
        }
      return later_taken(i);
    };
    const int l = idx.length();
    detail::LinearForm at_landing = local(idx.landing());
    int base = i;
    for (int p = 1; p <= l; ++p) {
      const int k = idx.steps()[p - 1];
      for (int q = 1; q <= k; ++q) {
        if (q == k) {
          detail::LinearForm rhs = at_landing;
          rhs -= var(t);
          rhs.offset += l - p;
          detail::add_leq(P, local(base), rhs);
        } else {
          detail::LinearForm lhs = at_landing;
          lhs.offset += l - p + 1;
          detail::add_leq(P, lhs, local(base + q));
        }
      }
      base += k;
    }
  }
  return P;
}

inline ParametricSystem compat_system(const Permutation& u, const std::vector<LadderIndex>& kappa) {
  return compat_system(affine_code(u), kappa);
}

/// Candidate supports for a code with concrete entries c_1..c_mu: at most one
/// index for each (start, landing) pair, and no more indices landing in row j
/// than c_j. Each support is sorted by the ladder order.
inline std::vector<std::vector<LadderIndex>> admissible_supports(std::span<const std::int64_t> code) {
  const int mu = static_cast<int>(code.size());
  std::map<std::pair<int, int>, std::vector<LadderIndex>> groups;
  for (const auto& idx : ladder_indices(mu)) groups[{idx.start(), idx.landing()}].push_back(idx);
  std::vector<std::vector<LadderIndex>> options;
  std::vector<int> landing;
  for (auto& [key, g] : groups) {
    options.push_back(g);
    landing.push_back(key.second);
  }
  std::vector<std::vector<LadderIndex>> out;
  std::vector<LadderIndex> chosen;
  std::vector<std::int64_t> used(mu + 1, 0);
  std::function<void(std::size_t)> rec = [&](std::size_t g) {
    if (g == options.size()) {
      out.push_back(sorted_support(chosen));
      return;
    }
    rec(g + 1);
    const int j = landing[g];
    if (used[j] + 1 > code[j - 1]) return;
    ++used[j];
    for (const auto& idx : options[g]) {
      chosen.push_back(idx);
      rec(g + 1);
      chosen.pop_back();
    }
    --used[j];
  };
  rec(0);
  return out;
}

inline std::vector<LadderSequence> points_to_sequences(const std::vector<LadderIndex>& kappa, int mu, const InstantiatedSystem& S) {
  std::vector<LadderSequence> out;
  for_each_lattice_point(S, [&](std::span<const std::int64_t> x) {
    LadderSequence seq(mu);
    for (std::size_t t = 0; t < kappa.size(); ++t) seq.set(kappa[t], x[t]);
    out.push_back(std::move(seq));
  });
  return out;
}

/// C(u): every u-compatible ladder sequence, collected support by support.
inline std::vector<LadderSequence> enumerate_compatible(const Permutation& u) {
  const AffineCode code = affine_code(u);
  const auto concrete = evaluate_code(code, 1);
  std::vector<LadderSequence> out;
  for (const auto& kappa : admissible_supports(concrete)) {
    auto seqs = points_to_sequences(kappa, static_cast<int>(code.size()), instantiate(compat_system(code, kappa), 1));
    for (auto& s : seqs) out.push_back(std::move(s));
  }
  return out;
}

}  // namespace schubert
