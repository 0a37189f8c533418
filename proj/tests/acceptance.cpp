// Acceptance checks. One line per criterion; every comparison is exact.

#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>

#include "oracles.hpp"
#include "schubert/all.hpp"

using namespace schubert;

namespace {

Permutation P(const char* s) { return parse_permutation(s); }

struct Outcome {
  bool ok = true;
  std::string detail;
  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

Outcome criterion1() {
  Outcome o;
  const Permutation u = P("3142"), v = P("1432"), w = P("4321");
  for (int N = 1; N <= 8; ++N)
    if (BigInt c = stretched_coefficient(u, v, w, N, CoefficientMethod::Polytope); c != N - 1)
      o.fail("polytope N=" + std::to_string(N) + " gave " + c.str());
  for (int N = 1; N <= 3; ++N) {
    if (BigInt c = stretched_coefficient(u, v, w, N, CoefficientMethod::PostnikovStanley); c != N - 1)
      o.fail("ps N=" + std::to_string(N) + " gave " + c.str());
    if (BigInt c = stretched_coefficient(u, v, w, N, CoefficientMethod::Expand); c != N - 1)
      o.fail("expand N=" + std::to_string(N) + " gave " + c.str());
  }
  if (o.ok) o.detail = "N-1 for N=1..8 (polytope), N=1..3 (ps, expand)";
  return o;
}

Outcome criterion2() {
  Outcome o;
  int checked = 0;
  for (int N = 1; N <= 6; ++N)
    for (const auto& [sigma, f] : f_sigma_all(P("3142"), P("1432"), P("4321"), N)) {
      ++checked;
      if (f != oracle::closed_form(sigma, N)) o.fail("sigma=" + sigma.to_string() + " N=" + std::to_string(N) + " gave " + f.str());
    }
  if (checked != 36) o.fail("expected 36 (sigma, N) pairs, saw " + std::to_string(checked));
  if (o.ok) o.detail = "36 values match";
  return o;
}

Outcome criterion3() {
  Outcome o;
  for (int n = 4; n <= 5; ++n) {
    std::vector<int> cu(n, 0), cw(n, 0);
    cu[0] = 1, cu[n - 2] = 1;
    cw[0] = 3, cw[n - 2] = 1;
    const Permutation u = from_code(LehmerCode(cu)), w = from_code(LehmerCode(cw));
    std::string seq;
    for (int N = 2 * n - 6; N <= 2 * n - 2; ++N) {
      const BigInt c = stretched_coefficient(u, u, w, N);
      const int want = N == 2 * n - 6 ? 1 : 0;
      seq += (seq.empty() ? "" : ",") + c.str();
      if (c != want) o.fail("n=" + std::to_string(n) + " N=" + std::to_string(N) + " gave " + c.str());
    }
    o.detail += (o.detail.empty() ? "" : "; ") + std::string("n=") + std::to_string(n) + ": " + seq;
  }
  return o;
}

Outcome criterion4() {
  Outcome o;
  std::vector<Permutation> sample = all_permutations(4);
  std::mt19937 rng(20240611);
  for (int t = 0; t < 25; ++t) {
    std::vector<int> w(5 + t % 2);
    std::iota(w.begin(), w.end(), 1);
    std::shuffle(w.begin(), w.end(), rng);
    sample.push_back(Permutation(w));
  }
  std::size_t dreams = 0;
  for (const auto& u : sample) {
    const auto pds = enumerate_pipe_dreams(u);
    const auto compat = enumerate_compatible(u);
    dreams += pds.size();
    if (pds.size() != compat.size()) o.fail(u.to_string() + ": counts differ");
    const int mu = code_support(u);
    for (const auto& D : pds) {
      const LadderSequence x = encode(D, u);
      if (decode(x, u) != D) o.fail(u.to_string() + ": decode(encode(D)) != D");
      std::vector<std::int64_t> wt(mu, 0);
      const auto dw = D.weight();
      for (std::size_t j = 0; j < dw.size(); ++j) wt[j] = dw[j];
      if (u_weight(x, u) != wt) o.fail(u.to_string() + ": u-weight differs from weight");
    }
    for (const auto& x : compat)
      if (encode(decode(x, u), u) != x) o.fail(u.to_string() + ": encode(decode(x)) != x");
  }
  if (o.ok) o.detail = std::to_string(sample.size()) + " permutations, " + std::to_string(dreams) + " pipe dreams";
  return o;
}

Outcome criterion5() {
  Outcome o;
  int triples = 0;
  const auto all = all_permutations(4);
  for (const auto& u : all)
    for (const auto& v : all)
      for (const auto& w : all) {
        if (inversions(u) + inversions(v) != inversions(w)) continue;
        ++triples;
        const BigInt ps = coefficient_ps(u, v, w), ex = coefficient_expand(u, v, w);
        if (ps != ex || ps < 0) o.fail(u.to_string() + " " + v.to_string() + " " + w.to_string() + ": ps=" + ps.str() + " expand=" + ex.str());
      }
  if (o.ok) o.detail = std::to_string(triples) + " triples agree";
  return o;
}

Outcome criterion6() {
  Outcome o;
  const int want[5] = {1, 0, 0, 0, 0};
  std::string seq;
  for (int N = 1; N <= 5; ++N) {
    const BigInt k = stretched_kostka(P("2143"), {2}, N);
    seq += (seq.empty() ? "" : ",") + k.str();
    if (k != want[N - 1]) o.fail("N=" + std::to_string(N) + " gave " + k.str());
  }
  o.detail = seq;
  return o;
}

Outcome criterion7() {
  Outcome o;
  int count = 0;
  for (const auto& w : all_permutations(5)) {
    ++count;
    if (schubert_polynomial_dd(w, 5) != schubert_polynomial(w)) o.fail(w.to_string());
  }
  if (count != 120) o.fail("expected 120 permutations");
  if (o.ok) o.detail = "120 permutations";
  return o;
}

Outcome criterion8() {
  Outcome o;
  Sequence seq;
  for (int N = 1; N <= 8; ++N) seq[N] = stretched_coefficient(P("3142"), P("1432"), P("4321"), N);
  const auto q = fit(seq);
  if (!q) {
    o.fail("NoFit");
    return o;
  }
  if (q->period != 1 || q->offset != 1 || q->polys != std::vector<std::vector<Rational>>{{-1, 1}})
    o.fail("fitted period " + std::to_string(q->period) + ", offset " + std::to_string(q->offset));
  const auto g = generating_function(*q, seq);
  const auto series = g.series(8);
  for (int N = 1; N <= 8; ++N)
    if (series[N] != seq[N]) o.fail("series differs at N=" + std::to_string(N));
  if (o.ok) o.detail = "N - 1, " + g.to_string();
  return o;
}

Outcome criterion9() {
  Outcome o;
  const auto box = oracle::partitions_in_box(3, 3);
  auto size = [](const oracle::Partition& p) { return p[0] + p[1] + p[2]; };
  int triples = 0;
  for (const auto& mu : box)
    for (const auto& nu : box) {
      const auto lr = oracle::littlewood_richardson(mu, nu);
      for (const auto& lambda : box) {
        if (size(lambda) != size(mu) + size(nu)) continue;
        ++triples;
        auto it = lr.find(lambda);
        const std::int64_t want = it == lr.end() ? 0 : it->second;
        const BigInt got = coefficient_ps(oracle::grassmannian(mu), oracle::grassmannian(nu), oracle::grassmannian(lambda));
        if (got != want) o.fail("lambda/mu/nu mismatch, got " + got.str() + " want " + std::to_string(want));
      }
    }
  if (o.ok) o.detail = std::to_string(triples) + " triples";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"stretched (3142,1432,4321) is N-1", criterion1},
      {"f_sigma closed forms", criterion2},
      {"vanishing after 2n-6", criterion3},
      {"pipe dream / ladder sequence bijection", criterion4},
      {"ps equals expansion on S_4", criterion5},
      {"Kostka non-saturation", criterion6},
      {"divided differences on S_5", criterion7},
      {"quasi-polynomial fit", criterion8},
      {"Grassmannian vs Littlewood-Richardson", criterion9},
  };
  int failures = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Outcome o;
    try {
      o = criteria[k].second();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    failures += !o.ok;
    std::cout << (o.ok ? "[PASS]" : "[FAIL]") << " criterion " << k + 1 << ": " << criteria[k].first << " (" << o.detail << ")" << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
