#include <gtest/gtest.h>

#include "schubert/quasipoly.hpp"

using namespace schubert;

namespace {

Sequence from(std::int64_t first, const std::vector<std::int64_t>& vals) {
  Sequence s;
  for (std::size_t k = 0; k < vals.size(); ++k) s[first + k] = vals[k];
  return s;
}

Sequence table(std::int64_t last, const std::function<BigInt(std::int64_t)>& f) {
  Sequence s;
  for (std::int64_t N = 1; N <= last; ++N) s[N] = f(N);
  return s;
}

}  // namespace

TEST(Fit, Linear) {
  auto q = fit(table(10, [](std::int64_t N) { return BigInt(N - 1); }));
  ASSERT_TRUE(q);
  EXPECT_EQ(q->period, 1);
  EXPECT_EQ(q->offset, 1);
  EXPECT_EQ(q->polys, (std::vector<std::vector<Rational>>{{-1, 1}}));
  EXPECT_EQ(q->verified_through, 10);
  EXPECT_EQ(evaluate(*q, 100), 99);
}

TEST(Fit, ConstantAndZero) {
  auto q = fit(table(5, [](std::int64_t) { return BigInt(1); }));
  ASSERT_TRUE(q);
  EXPECT_EQ(q->degree(), 0);
  auto z = fit(table(4, [](std::int64_t) { return BigInt(0); }));
  ASSERT_TRUE(z);
  EXPECT_EQ(z->degree(), -1);
  EXPECT_EQ(evaluate(*z, 50), 0);
}

TEST(Fit, Alternating) {
  auto q = fit(table(8, [](std::int64_t N) { return BigInt(N % 2); }));
  ASSERT_TRUE(q);
  EXPECT_EQ(q->period, 2);
  EXPECT_EQ(q->offset, 1);
  EXPECT_EQ(q->degree(), 0);
  EXPECT_EQ(evaluate(*q, 7), 1);
  EXPECT_EQ(evaluate(*q, 8), 0);
}

TEST(Fit, EventuallyPolynomial) {
  // 1, 2, 2, 1, 0, 0, 0, 0
  auto q = fit(from(1, {1, 2, 2, 1, 0, 0, 0, 0}));
  ASSERT_TRUE(q);
  EXPECT_EQ(q->period, 1);
  EXPECT_EQ(q->offset, 5);
  EXPECT_EQ(q->degree(), -1);
  EXPECT_THROW(evaluate(*q, 4), Error);
}

TEST(Fit, RationalCoefficients) {
  auto q = fit(table(9, [](std::int64_t N) { return BigInt(N * (N + 1) / 2); }));
  ASSERT_TRUE(q);
  EXPECT_EQ(q->polys[0], (std::vector<Rational>{0, Rational(1, 2), Rational(1, 2)}));
  EXPECT_EQ(evaluate(*q, 1000), 500500);
}

TEST(Fit, MinimalityOrder) {
  // Both period 1 from N=3 on and period 2 from N=1 would fit; period wins first.
  auto q = fit(from(1, {5, 0, 3, 3, 3, 3, 3, 3}));
  ASSERT_TRUE(q);
  EXPECT_EQ(q->period, 1);
  EXPECT_EQ(q->offset, 3);
  EXPECT_EQ(q->degree(), 0);
}

TEST(Fit, Failures) {
  try {
    fit(from(1, {1}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::InsufficientData);
  }
  EXPECT_THROW(fit(from(2, {1, 2, 3})), Error);
  // 2^N is no quasi-polynomial of degree <= 3.
  EXPECT_FALSE(fit(table(8, [](std::int64_t N) { return BigInt(1) << N; }), 2, 3));
}

TEST(Fit, Evaluation) {
  QuasiPolynomial q{1, 1, {{Rational(1, 2)}}, 0};
  try {
    evaluate(q, 3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NonIntegral);
  }
}

TEST(GeneratingFunction, Linear) {
  const Sequence s = table(10, [](std::int64_t N) { return BigInt(N - 1); });
  auto g = generating_function(*fit(s), s);
  EXPECT_EQ(g.to_string(), "(t^2) / (1 - t)^2");
  auto series = g.series(12);
  for (int N = 1; N <= 12; ++N) EXPECT_EQ(series[N], N - 1);
  EXPECT_EQ(series[0], 0);
}

TEST(GeneratingFunction, SmallCases) {
  const Sequence ones = table(5, [](std::int64_t) { return BigInt(1); });
  EXPECT_EQ(generating_function(*fit(ones), ones).to_string(), "(t) / (1 - t)");
  const Sequence zeros = table(4, [](std::int64_t) { return BigInt(0); });
  EXPECT_EQ(generating_function(*fit(zeros), zeros).to_string(), "0");
}

TEST(GeneratingFunction, SeriesReproducesValues) {
  std::vector<Sequence> cases = {
      from(1, {1, 2, 2, 1, 0, 0, 0, 0}),
      table(10, [](std::int64_t N) { return BigInt(N % 2 == 0 ? N * N : N + 3); }),
      table(9, [](std::int64_t N) { return BigInt((N - 1) * N * (N + 1) * (N + 2) / 12); }),
      from(1, {7, 1, 0, 1, 0, 1, 0, 1, 0}),
  };
  for (const auto& s : cases) {
    auto q = fit(s);
    ASSERT_TRUE(q);
    auto g = generating_function(*q, s);
    auto series = g.series(20);
    for (const auto& [N, v] : s) EXPECT_EQ(series[N], v);
    for (int N = q->offset; N <= 20; ++N) EXPECT_EQ(series[N], evaluate(*q, N));
  }
}
