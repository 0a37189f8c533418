#include <gtest/gtest.h>

#include "schubert/permutation.hpp"

using namespace schubert;

namespace {

Permutation P(const char* s) { return parse_permutation(s); }

}  // namespace

TEST(Permutation, CanonicalFormDropsFixedTail) {
  EXPECT_EQ(Permutation({2, 1, 3, 4}), P("21"));
  EXPECT_EQ(Permutation({1, 2, 3}), Permutation::identity());
  EXPECT_EQ(P("2143").size(), 4);
  EXPECT_EQ(P("2134").size(), 2);
  EXPECT_EQ(P("3142")(7), 7);
  EXPECT_THROW(Permutation({1, 1}), Error);
  EXPECT_THROW(P("1,2,x"), Error);
}

TEST(Permutation, ParseAndPrint) {
  EXPECT_EQ(P("14862357").to_string(), "14862357");
  EXPECT_EQ(P("1,2,3").to_string(), "id");
  Permutation big = longest_element(11);
  EXPECT_EQ(parse_permutation(big.to_string()), big);
  EXPECT_EQ(big.to_string().substr(0, 6), "11,10,");
}

TEST(LehmerCode, Examples) {
  EXPECT_EQ(lehmer_code(P("14862357")).entries(), (std::vector<int>{0, 2, 5, 3}));
  EXPECT_TRUE(lehmer_code(Permutation::identity()).entries().empty());
  EXPECT_EQ(lehmer_code(P("4321")).entries(), (std::vector<int>{3, 2, 1}));
  EXPECT_EQ(from_code(LehmerCode({0, 2, 5, 3})), P("14862357"));
  EXPECT_EQ(from_code(LehmerCode(std::vector<int>{})), Permutation::identity());
  EXPECT_EQ(from_code(LehmerCode({3, 0, 1, 0})), P("4132"));
}

TEST(LehmerCode, FixedLengthRejectsCodesThatDoNotFit) {
  EXPECT_THROW(from_code(LehmerCode({3}), 3), Error);
  EXPECT_EQ(from_code(LehmerCode({2}), 3), P("312"));
  try {
    from_code(LehmerCode({0, 2}), 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::InvalidCode);
  }
  EXPECT_THROW(LehmerCode({1, -1}), Error);
}

TEST(LehmerCode, RoundTripExhaustive) {
  for (int n = 0; n <= 6; ++n)
    for (const auto& w : all_permutations(n)) {
      const LehmerCode c = lehmer_code(w);
      EXPECT_EQ(from_code(c), w);
      EXPECT_EQ(c.sum(), inversions(w));
      EXPECT_EQ(lehmer_code(from_code(c)), c);
    }
  // Every code with c_i <= n - i comes from S_n.
  for (int a = 0; a <= 3; ++a)
    for (int b = 0; b <= 2; ++b)
      for (int c = 0; c <= 1; ++c) {
        LehmerCode code({a, b, c});
        EXPECT_EQ(lehmer_code(from_code(code, 4)), code);
      }
}

TEST(Stretch, ScalingLaws) {
  EXPECT_EQ(stretch(P("3142"), 1), P("3142"));
  EXPECT_EQ(lehmer_code(stretch(P("3142"), 3)).entries(), (std::vector<int>{6, 0, 3}));
  EXPECT_THROW(stretch(P("21"), 0), Error);
  for (int n = 1; n <= 4; ++n)
    for (const auto& w : all_permutations(n))
      for (int N = 1; N <= 3; ++N) {
        const Permutation s = stretch(w, N);
        EXPECT_EQ(inversions(s), N * inversions(w));
        EXPECT_EQ(descents(s), descents(w));
        EXPECT_EQ(stretch(stretch(w, N), 2), stretch(w, 2 * N));
      }
}

TEST(Permutation, ComposeAndLongest) {
  EXPECT_EQ(longest_element(1), Permutation::identity());
  EXPECT_EQ(longest_element(4), P("4321"));
  EXPECT_EQ(lehmer_code(longest_element(5)).entries(), (std::vector<int>{4, 3, 2, 1}));
  EXPECT_EQ(compose(P("3142"), P("3142").inverse()), Permutation::identity());
  // (pq)(i) = p(q(i))
  EXPECT_EQ(compose(P("213"), P("132")), P("231"));
  for (const auto& w : all_permutations(4)) EXPECT_EQ(inversions(compose(longest_element(4), w)), 6 - inversions(w));
}

TEST(Permutation, Statistics) {
  auto st = statistics(P("3142"));
  EXPECT_EQ(st.inversions, 3);
  EXPECT_EQ(st.descents, (std::vector<int>{1, 3}));
  EXPECT_EQ(st.exceedances, (std::vector<int>{1, 3}));
  ASSERT_TRUE(st.exceedance_range);
  EXPECT_EQ(*st.exceedance_range, std::make_pair(1, 3));
  auto id = statistics(Permutation::identity());
  EXPECT_EQ(id.inversions, 0);
  EXPECT_TRUE(id.descents.empty());
  EXPECT_TRUE(id.exceedances.empty());
  EXPECT_FALSE(id.exceedance_range);
  EXPECT_EQ(statistics(P("14862357")).inversions, 10);
}

TEST(Permutation, SignedEnumerationMatchesInversionParity) {
  for (int n = 0; n <= 5; ++n) {
    int seen = 0;
    for_each_signed_permutation(n, [&](const std::vector<int>& w, int s) {
      EXPECT_EQ(s, sign(Permutation(w)));
      ++seen;
    });
    int fact = 1;
    for (int k = 2; k <= n; ++k) fact *= k;
    EXPECT_EQ(seen, fact);
  }
}
