#include <gtest/gtest.h>

#include "schubert/all.hpp"
#include "schubert/serialize.hpp"

using namespace schubert;

TEST(Json, Numbers) {
  EXPECT_EQ(to_json(BigInt(5)), json(5));
  BigInt big = BigInt(1) << 80;
  EXPECT_TRUE(to_json(big).is_string());
  EXPECT_EQ(bigint_from_json(to_json(big)), big);
  EXPECT_EQ(rational_from_json(to_json(Rational(-3, 4))), Rational(-3, 4));
  EXPECT_THROW(bigint_from_json(json("12a")), Error);
}

TEST(Json, RoundTrips) {
  const Permutation w = parse_permutation("3142");
  EXPECT_EQ(to_json(w), json::parse("[3,1,4,2]"));
  EXPECT_EQ(permutation_from_json(to_json(w)), w);

  for (const auto& D : enumerate_pipe_dreams(parse_permutation("2413")))
    EXPECT_EQ(pipe_dream_from_json(json::parse(to_json(D).dump())), D);

  LadderSequence x(3);
  x.set(LadderIndex(1, {1, 1}), 2);
  x.set(LadderIndex(2, {1}), 1);
  EXPECT_EQ(ladder_sequence_from_json(json::parse(to_json(x).dump())), x);

  ParametricSystem Ps = compat_system(parse_permutation("3142"), {LadderIndex(1, {2}), LadderIndex(2, {1})});
  EXPECT_EQ(parametric_system_from_json(json::parse(to_json(Ps).dump())), Ps);

  InstantiatedSystem S = instantiate(Ps, 3);
  InstantiatedSystem back = instantiated_system_from_json(json::parse(to_json(S).dump()));
  EXPECT_EQ(back.A, S.A);
  EXPECT_EQ(back.rhs, S.rhs);
  EXPECT_EQ(count_lattice_points(back), count_lattice_points(S));

  Polynomial p = schubert_polynomial(parse_permutation("1432"));
  EXPECT_EQ(polynomial_from_json(json::parse(to_json(p).dump())), p);

  Sequence s{{1, 0}, {2, 1}, {3, 2}, {4, 3}};
  auto q = *fit(s);
  EXPECT_EQ(quasipolynomial_from_json(json::parse(to_json(q).dump())), q);
  EXPECT_EQ(sequence_from_json(to_json(s)), s);
}

TEST(Json, SequenceForms) {
  Sequence expect{{1, 4}, {2, 5}};
  EXPECT_EQ(sequence_from_json(json::parse("[4,5]")), expect);
  EXPECT_EQ(sequence_from_json(json::parse(R"({"values":[4,5]})")), expect);
  EXPECT_EQ(sequence_from_json(json::parse(R"({"1":4,"2":5})")), expect);
  EXPECT_EQ(sequence_from_json(json::parse(R"({"from":3,"values":[4]})")), (Sequence{{3, 4}}));
  EXPECT_THROW(sequence_from_json(json::parse(R"({"x":1})")), Error);
}

TEST(Json, MalformedInput) {
  auto kind = [](auto&& f) {
    try {
      f();
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::Unbounded;
  };
  EXPECT_EQ(kind([] { pipe_dream_from_json(json::parse(R"({"n":3})")); }), ErrorKind::InvalidArgument);
  EXPECT_EQ(kind([] { instantiated_system_from_json(json::parse(R"({"A":[[1]],"rhs":[]})")); }), ErrorKind::InvalidArgument);
  EXPECT_EQ(kind([] { ladder_sequence_from_json(json::parse(R"({"mu":2,"entries":[{"i":1,"ks":[2],"value":1}]})")); }),
            ErrorKind::IndexOutOfRange);
  EXPECT_EQ(kind([] { permutation_from_json(json::parse("[1,1]")); }), ErrorKind::InvalidArgument);
}
