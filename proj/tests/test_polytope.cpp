#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "schubert/triple.hpp"

using namespace schubert;

namespace {

Permutation P(const char* s) { return parse_permutation(s); }

InstantiatedSystem box(std::int64_t hi) {
  InstantiatedSystem S;
  S.varcount = 1;
  S.add_row({1}, hi);
  S.lower = {0};
  return S;
}

}  // namespace

TEST(Instantiate, RightHandSide) {
  ParametricSystem Ps;
  Ps.vars.push_back({LadderIndex(1, {1}), 0});
  Ps.add_row({1}, 1, -3);
  EXPECT_EQ(instantiate(Ps, 5).rhs, (std::vector<std::int64_t>{2}));
  Ps.b = {0};
  EXPECT_EQ(instantiate(Ps, 7).rhs, (std::vector<std::int64_t>{7}));
  EXPECT_EQ(instantiate(Ps, 7).A, Ps.A);
}

TEST(Count, Trivial) {
  EXPECT_EQ(count_lattice_points(box(3)), 4);
  EXPECT_EQ(count_lattice_points(box(-1)), 0);
  InstantiatedSystem none;
  EXPECT_EQ(count_lattice_points(none), 1);
  InstantiatedSystem unbounded;
  unbounded.varcount = 2;
  unbounded.add_row({1, -1}, 0);
  unbounded.lower = {0, 0};
  try {
    count_lattice_points(unbounded);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Unbounded);
  }
}

TEST(Count, HandSystem) {
  EXPECT_EQ(oracle::hand_system(P("123"), 1).rhs, (std::vector<std::int64_t>{1, 1, 1, -1}));
  EXPECT_EQ(count_lattice_points(oracle::hand_system(P("123"), 1)), 2);
  EXPECT_EQ(count_lattice_points(oracle::hand_system(P("321"), 1)), 0);
  for (const auto& sigma : all_permutations(3))
    for (int N = 1; N <= 6; ++N) {
      auto S = oracle::hand_system(sigma, N);
      EXPECT_EQ(count_lattice_points(S), oracle::closed_form(sigma, N));
      EXPECT_EQ(count_lattice_points(S), oracle::count_in_cube(S, 2 * N + 2));
    }
}

TEST(Count, RandomSystemsAgainstCube) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> coef(-2, 2), rhs(-2, 6);
  for (int t = 0; t < 300; ++t) {
    InstantiatedSystem S;
    S.varcount = 1 + t % 4;
    S.lower.assign(S.varcount, 0);
    for (std::size_t v = 0; v < S.varcount; ++v) {
      std::vector<std::int64_t> row(S.varcount, 0);
      row[v] = 1;
      S.add_row(row, 4);
    }
    int extra = 1 + t % 3;
    for (int r = 0; r < extra; ++r) {
      std::vector<std::int64_t> row(S.varcount);
      for (auto& a : row) a = coef(rng);
      S.add_row(row, rhs(rng));
    }
    BigInt c = count_lattice_points(S);
    EXPECT_EQ(c, oracle::count_in_cube(S, 4));
    std::size_t visited = lattice_points(S).size();
    EXPECT_EQ(BigInt(visited), c);
    // Adding a row never increases the count.
    InstantiatedSystem T = S;
    std::vector<std::int64_t> row(S.varcount);
    for (auto& a : row) a = coef(rng);
    T.add_row(row, rhs(rng));
    EXPECT_LE(count_lattice_points(T), c);
  }
}

TEST(TripleSystem, EmptySupports) {
  // With no ladder variables only the weight rows remain; they are constant
  // and hold exactly when the codes already add up to sigma rho.
  const Permutation u = P("3142"), v = P("1432"), w = P("4321");
  for (const auto& sigma : all_permutations(3)) {
    auto T = triple_system(u, v, w, sigma, {}, {}, {});
    auto M = T.merged();
    EXPECT_TRUE(M.vars.empty());
    EXPECT_EQ(M.rows(), 6u);
    for (int N = 1; N <= 3; ++N) {
      auto S = instantiate(M, N);
      bool holds = true;
      for (auto r : S.rhs) holds = holds && r >= 0;
      const int n = 4;
      bool sums = true;
      for (int j = 1; j <= 3; ++j)
        sums = sums && N * (lehmer_code(u)(j) + lehmer_code(v)(j)) + N * (n - lehmer_code(w)(j)) - j == N * n - sigma(j);
      EXPECT_EQ(holds, sums);
    }
  }
  EXPECT_THROW(triple_system(u, v, w, P("1243"), {}, {}, {}), Error);
  try {
    triple_system(u, v, w, P("4123"), {}, {}, {});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::BadSigma);
  }
}

TEST(TripleSystem, MatrixIsIndependentOfN) {
  auto T = triple_system(P("3142"), P("1432"), P("4321"), P("213"), {LadderIndex(1, {2})}, {LadderIndex(2, {1})},
                         {LadderIndex(1, {1}), LadderIndex(2, {1})});
  auto M = T.merged();
  EXPECT_EQ(instantiate(M, 1).A, instantiate(M, 5).A);
  EXPECT_EQ(M.vars.size(), 4u);
  EXPECT_EQ(M.vars[0].block, 0);
  EXPECT_EQ(M.vars[3].block, 2);
}

TEST(FSigma, ClosedForms) {
  const Permutation u = P("3142"), v = P("1432"), w = P("4321");
  EXPECT_EQ(f_sigma(u, v, w, P("123"), 2), 14);
  EXPECT_EQ(f_sigma(u, v, w, P("132"), 1), 1);
  EXPECT_EQ(f_sigma(u, v, w, P("231"), 1), 0);
  for (int N = 1; N <= 6; ++N)
    for (const auto& [sigma, f] : f_sigma_all(u, v, w, N)) {
      EXPECT_EQ(f, oracle::closed_form(sigma, N)) << sigma.to_string() << " N=" << N;
      EXPECT_EQ(f, count_lattice_points(oracle::hand_system(sigma, N)));
    }
}

TEST(FSigma, DirectAndFactorizedAgree) {
  for (const auto& [u, v, w] : std::vector<std::tuple<Permutation, Permutation, Permutation>>{
           {P("3142"), P("1432"), P("4321")}, {P("2143"), P("2143"), P("4132")}, {P("132"), P("132"), P("231")}, {P("21"), P("132"), P("231")}})
    for (int N = 1; N <= 3; ++N)
      EXPECT_EQ(f_sigma_all(u, v, w, N, {FSigmaMethod::Direct, 1}), f_sigma_all(u, v, w, N, {FSigmaMethod::Factorized, 1}));
}

TEST(FSigma, ThreadCountDoesNotChangeResults) {
  const Permutation u = P("2143"), w = P("4132");
  for (int N = 1; N <= 4; ++N) {
    auto one = f_sigma_all(u, u, w, N, {FSigmaMethod::Factorized, 1});
    EXPECT_EQ(one, f_sigma_all(u, u, w, N, {FSigmaMethod::Factorized, 3}));
    EXPECT_EQ(one, f_sigma_all(u, u, w, N, {FSigmaMethod::Direct, 2}));
  }
}

TEST(FSigma, PipeDreamTripleOracle) {
  // Every triple in S_3 with l(u) + l(v) = l(w) at N = 1, 2, and a sample of
  // S_4 at N = 1. The subset oracle is too slow for S_8.
  std::vector<std::tuple<Permutation, Permutation, Permutation>> triples;
  for (const auto& u : all_permutations(3))
    for (const auto& v : all_permutations(3))
      for (const auto& w : all_permutations(3))
        if (inversions(u) + inversions(v) == inversions(w)) triples.push_back({u, v, w});
  std::mt19937 rng(11);
  auto s4 = all_permutations(4);
  while (triples.size() < 60) {
    const auto& u = s4[rng() % s4.size()];
    const auto& v = s4[rng() % s4.size()];
    const auto& w = s4[rng() % s4.size()];
    if (inversions(u) + inversions(v) == inversions(w)) triples.push_back({u, v, w});
  }
  for (const auto& [u, v, w] : triples)
    for (int N = 1; N <= (std::max({u.size(), v.size(), w.size()}) <= 3 ? 2 : 1); ++N)
      for (const auto& [sigma, f] : f_sigma_all(u, v, w, N))
        EXPECT_EQ(f, oracle::f_sigma_pipe_dreams(u, v, w, sigma, N))
            << u.to_string() << " " << v.to_string() << " " << w.to_string() << " sigma=" << sigma.to_string() << " N=" << N;
}

TEST(StretchedPolytope, Examples) {
  for (int N = 1; N <= 8; ++N) EXPECT_EQ(stretched_coefficient_polytope(P("3142"), P("1432"), P("4321"), N), N - 1);
  EXPECT_EQ(stretched_coefficient_polytope(P("2143"), P("2143"), P("4132"), 2), 1);
  EXPECT_EQ(stretched_coefficient_polytope(P("2143"), P("2143"), P("4132"), 3), 0);
  for (int N = 1; N <= 3; ++N) EXPECT_EQ(stretched_coefficient_polytope(Permutation(), Permutation(), Permutation(), N), 1);
  EXPECT_EQ(stretched_coefficient_polytope(P("21"), P("21"), P("21"), 1), 0);
}
