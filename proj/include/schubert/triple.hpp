#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "schubert/compat.hpp"
#include "schubert/error.hpp"
#include "schubert/lattice.hpp"
#include "schubert/numeric.hpp"
#include "schubert/permutation.hpp"

namespace schubert {

/// Shared data of a triple (u, v, w): the ambient n, the row count mu, and the
/// affine codes of N*u, N*v and w0 (N*w) restricted to rows 1..mu.
struct TripleContext {
  int n = 0;
  int mu = 0;
  std::array<AffineCode, 3> codes;
};

inline TripleContext triple_context(const Permutation& u, const Permutation& v, const Permutation& w) {
  TripleContext ctx;
  ctx.n = std::max({u.size(), v.size(), w.size(), 1});
  ctx.mu = std::max({code_support(u), code_support(v), code_support(w)});
  ctx.codes[0] = affine_code(u);
  ctx.codes[1] = affine_code(v);
  ctx.codes[0].resize(ctx.mu);
  ctx.codes[1].resize(ctx.mu);
  ctx.codes[2] = complement_code(w, ctx.n, ctx.mu);
  return ctx;
}

/// The three compatibility systems of a support triple side by side, plus the
/// weight equations: for j = 1..mu the three u-weights in row j add up to
/// N n - sigma(j). Each equation is stored as a pair of opposite rows.
struct TripleSystem {
  Permutation sigma;
  std::array<ParametricSystem, 3> blocks;
  std::vector<std::vector<std::int64_t>> weight_A;
  std::vector<std::int64_t> weight_c;
  std::vector<std::int64_t> weight_b;

  ParametricSystem merged() const {
    ParametricSystem P;
    std::size_t total = 0;
    for (const auto& blk : blocks) total += blk.vars.size();
    std::size_t off = 0;
    for (const auto& blk : blocks) {
      for (const auto& var : blk.vars) P.vars.push_back(var);
      for (std::size_t r = 0; r < blk.rows(); ++r) {
        std::vector<std::int64_t> row(total, 0);
        std::copy(blk.A[r].begin(), blk.A[r].end(), row.begin() + off);
        P.A.push_back(std::move(row));
        P.c.push_back(blk.c[r]);
        P.b.push_back(blk.b[r]);
      }
      off += blk.vars.size();
    }
    for (std::size_t r = 0; r < weight_A.size(); ++r) {
      P.A.push_back(weight_A[r]);
      P.c.push_back(weight_c[r]);
      P.b.push_back(weight_b[r]);
    }
    return P;
  }
};

inline void check_sigma(const Permutation& sigma, int mu) {
  if (sigma.size() > mu) throw Error(ErrorKind::BadSigma, sigma.to_string() + " is not in S_" + std::to_string(mu));
}

/// Net flow of a ladder sequence through row j: +x for indices starting in
/// row j, -x for indices landing there.
inline std::vector<std::int64_t> flow_coefficients(const std::vector<SystemVariable>& vars, int j) {
  std::vector<std::int64_t> row(vars.size(), 0);
  for (std::size_t t = 0; t < vars.size(); ++t) {
    if (vars[t].index.start() == j) row[t] += 1;
    if (vars[t].index.landing() == j) row[t] -= 1;
  }
  return row;
}

inline TripleSystem triple_system(const TripleContext& ctx, const Permutation& sigma, const std::array<std::vector<LadderIndex>, 3>& kappa) {
  check_sigma(sigma, ctx.mu);
  TripleSystem T;
  T.sigma = sigma;
  for (int r = 0; r < 3; ++r) T.blocks[r] = compat_system(ctx.codes[r], kappa[r], r);
  std::vector<SystemVariable> all;
  for (const auto& blk : T.blocks) all.insert(all.end(), blk.vars.begin(), blk.vars.end());
  for (int j = 1; j <= ctx.mu; ++j) {
    std::int64_t slope = ctx.n, offset = -sigma(j);
    for (const auto& code : ctx.codes) {
      slope -= code[j - 1].slope;
      offset -= code[j - 1].offset;
    }
    std::vector<std::int64_t> row = flow_coefficients(all, j);
    std::vector<std::int64_t> neg(row);
    for (auto& a : neg) a = -a;
    T.weight_A.push_back(row);
    T.weight_c.push_back(slope);
    T.weight_b.push_back(offset);
    T.weight_A.push_back(neg);
    T.weight_c.push_back(-slope);
    T.weight_b.push_back(-offset);
  }
  return T;
}

inline TripleSystem triple_system(const Permutation& u, const Permutation& v, const Permutation& w, const Permutation& sigma,
                                  const std::vector<LadderIndex>& k1, const std::vector<LadderIndex>& k2,
                                  const std::vector<LadderIndex>& k3) {
  return triple_system(triple_context(u, v, w), sigma, {k1, k2, k3});
}

/// How f_sigma is counted. Direct sums lattice point counts of every triple
/// system. Factorized enumerates the points of the u and v blocks, collects
/// their row flows, and counts only the w block against the residual flow.
enum class FSigmaMethod { Factorized, Direct };

struct FSigmaOptions {
  FSigmaMethod method = FSigmaMethod::Factorized;
  unsigned threads = 1;
};

namespace detail {

using Flow = std::vector<std::int64_t>;

struct BlockSupport {
  std::vector<LadderIndex> kappa;
  InstantiatedSystem system;
  Flow flow_lo, flow_hi;  // per-row bounds on the flow, from the box
};

inline std::vector<BlockSupport> block_supports(const AffineCode& code, std::int64_t N) {
  const auto concrete = evaluate_code(code, N);
  const int mu = static_cast<int>(code.size());
  std::vector<BlockSupport> out;
  for (auto& kappa : admissible_supports(concrete)) {
    InstantiatedSystem S = instantiate(compat_system(code, kappa), N);
    auto box = bounding_box(S);
    if (!box) continue;
    BlockSupport bs{kappa, std::move(S), Flow(mu, 0), Flow(mu, 0)};
    for (std::size_t t = 0; t < kappa.size(); ++t) {
      const int a = kappa[t].start(), b = kappa[t].landing();
      bs.flow_lo[a - 1] += box->lower[t];
      bs.flow_hi[a - 1] += box->upper[t];
      bs.flow_lo[b - 1] -= box->upper[t];
      bs.flow_hi[b - 1] -= box->lower[t];
    }
    out.push_back(std::move(bs));
  }
  return out;
}

inline std::map<Flow, BigInt> flow_histogram(const AffineCode& code, std::int64_t N) {
  const int mu = static_cast<int>(code.size());
  std::map<Flow, BigInt> hist;
  for (const auto& bs : block_supports(code, N)) {
    for_each_lattice_point(bs.system, [&](std::span<const std::int64_t> x) {
      Flow f(mu, 0);
      for (std::size_t t = 0; t < bs.kappa.size(); ++t) {
        f[bs.kappa[t].start() - 1] += x[t];
        f[bs.kappa[t].landing() - 1] -= x[t];
      }
      hist[f] += 1;
    });
  }
  return hist;
}

// #{compatible points of the block whose flow equals target}
inline BigInt fiber_count(const std::vector<BlockSupport>& supports, const Flow& target) {
  std::int64_t total = 0;
  for (auto t : target) total += t;
  BigInt count = 0;
  if (total != 0) return count;
  const int mu = static_cast<int>(target.size());
  for (const auto& bs : supports) {
    bool possible = true;
    for (int j = 0; j < mu && possible; ++j) possible = bs.flow_lo[j] <= target[j] && target[j] <= bs.flow_hi[j];
    if (!possible) continue;
    InstantiatedSystem S = bs.system;
    std::vector<SystemVariable> vars;
    for (const auto& idx : bs.kappa) vars.push_back({idx, 0});
    for (int j = 1; j <= mu; ++j) {
      std::vector<std::int64_t> row = flow_coefficients(vars, j);
      std::vector<std::int64_t> neg(row);
      for (auto& a : neg) a = -a;
      S.add_row(std::move(row), target[j - 1]);
      S.add_row(std::move(neg), -target[j - 1]);
    }
    count += count_lattice_points(S);
  }
  return count;
}

template <typename F>
void parallel_for(std::size_t n, unsigned threads, F&& body) {
  if (threads <= 1 || n < 2) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, n));
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(threads);
  for (unsigned t = 0; t < threads; ++t)
    pool.emplace_back([&, t] {
      try {
        for (std::size_t i = t; i < n; i += threads) body(i);
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
  for (auto& th : pool) th.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

inline std::vector<Permutation> sigmas(int mu) { return all_permutations(mu); }

inline std::map<Permutation, BigInt> f_sigma_factorized(const TripleContext& ctx, std::int64_t N, unsigned threads) {
  const int mu = ctx.mu;
  const auto hu = flow_histogram(ctx.codes[0], N);
  const auto hv = flow_histogram(ctx.codes[1], N);
  std::map<Flow, BigInt> huv;
  for (const auto& [fu, cu] : hu)
    for (const auto& [fv, cv] : hv) {
      Flow f(mu);
      for (int j = 0; j < mu; ++j) f[j] = fu[j] + fv[j];
      huv[f] += cu * cv;
    }
  const auto supports = block_supports(ctx.codes[2], N);
  std::vector<std::int64_t> fixed(mu);
  for (int j = 1; j <= mu; ++j) {
    fixed[j - 1] = N * ctx.n;
    for (const auto& code : ctx.codes) fixed[j - 1] -= code[j - 1].at(N);
  }
  const auto sig = sigmas(mu);
  // Residual flows the w block has to supply, for every sigma and every uv flow.
  std::map<Flow, std::size_t> slot;
  std::vector<Flow> targets;
  std::vector<std::vector<std::size_t>> slot_of(sig.size());
  for (std::size_t s = 0; s < sig.size(); ++s)
    for (const auto& [f, c] : huv) {
      Flow t(mu);
      for (int j = 1; j <= mu; ++j) t[j - 1] = fixed[j - 1] - sig[s](j) - f[j - 1];
      auto [it, fresh] = slot.emplace(t, targets.size());
      if (fresh) targets.push_back(t);
      slot_of[s].push_back(it->second);
    }
  std::vector<BigInt> fiber(targets.size());
  parallel_for(targets.size(), threads, [&](std::size_t i) { fiber[i] = fiber_count(supports, targets[i]); });
  std::map<Permutation, BigInt> out;
  for (std::size_t s = 0; s < sig.size(); ++s) {
    BigInt total = 0;
    std::size_t k = 0;
    for (const auto& [f, c] : huv) total += c * fiber[slot_of[s][k++]];
    out[sig[s]] = total;
  }
  return out;
}

inline std::map<Permutation, BigInt> f_sigma_direct(const TripleContext& ctx, std::int64_t N, unsigned threads) {
  std::array<std::vector<std::vector<LadderIndex>>, 3> supports;
  for (int r = 0; r < 3; ++r) {
    for (auto& bs : block_supports(ctx.codes[r], N)) supports[r].push_back(std::move(bs.kappa));
  }
  const auto sig = sigmas(ctx.mu);
  std::vector<BigInt> totals(sig.size());
  parallel_for(sig.size(), threads, [&](std::size_t s) {
    BigInt total = 0;
    for (const auto& k1 : supports[0])
      for (const auto& k2 : supports[1])
        for (const auto& k3 : supports[2])
          total += count_lattice_points(instantiate(triple_system(ctx, sig[s], {k1, k2, k3}).merged(), N));
    totals[s] = total;
  });
  std::map<Permutation, BigInt> out;
  for (std::size_t s = 0; s < sig.size(); ++s) out[sig[s]] = totals[s];
  return out;
}

}  // namespace detail

/// f_sigma(N) for every sigma in S_mu at once.
inline std::map<Permutation, BigInt> f_sigma_all(const Permutation& u, const Permutation& v, const Permutation& w, std::int64_t N,
                                                 const FSigmaOptions& opts = {}) {
  if (N < 1) throw Error(ErrorKind::InvalidArgument, "N must be positive");
  const TripleContext ctx = triple_context(u, v, w);
  if (opts.method == FSigmaMethod::Direct) return detail::f_sigma_direct(ctx, N, opts.threads);
  return detail::f_sigma_factorized(ctx, N, opts.threads);
}

/// f_sigma(N): lattice points of all triple systems for sigma, summed over
/// the admissible supports.
inline BigInt f_sigma(const Permutation& u, const Permutation& v, const Permutation& w, const Permutation& sigma, std::int64_t N,
                      const FSigmaOptions& opts = {}) {
  check_sigma(sigma, triple_context(u, v, w).mu);
  return f_sigma_all(u, v, w, N, opts).at(sigma);
}

/// The stretched structure constant as the signed sum of f_sigma.
inline BigInt stretched_coefficient_polytope(const Permutation& u, const Permutation& v, const Permutation& w, std::int64_t N,
                                             const FSigmaOptions& opts = {}) {
  if (N < 1) throw Error(ErrorKind::InvalidArgument, "N must be positive");
  if (inversions(u) + inversions(v) != inversions(w)) return 0;
  BigInt total = 0;
  for (const auto& [sigma, f] : f_sigma_all(u, v, w, N, opts)) total += sign(sigma) * f;
  if (total < 0) throw Error(ErrorKind::NegativeResult, "signed sum is negative: " + total.str());
  return total;
}

}  // namespace schubert
