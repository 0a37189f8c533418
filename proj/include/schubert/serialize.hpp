#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "schubert/compat.hpp"
#include "schubert/error.hpp"
#include "schubert/ladder.hpp"
#include "schubert/lattice.hpp"
#include "schubert/numeric.hpp"
#include "schubert/permutation.hpp"
#include "schubert/pipe_dream.hpp"
#include "schubert/polynomial.hpp"
#include "schubert/quasipoly.hpp"

namespace schubert {

using nlohmann::json;

namespace detail {

template <typename F>
auto parse_guard(const char* what, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const json::exception& e) {
    throw Error(ErrorKind::InvalidArgument, std::string("malformed ") + what + ": " + e.what());
  }
}

}  // namespace detail

/// Numbers when they fit in 64 bits, decimal strings otherwise.
inline json to_json(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(v);
  return v.str();
}

inline BigInt bigint_from_json(const json& j) {
  if (j.is_number_integer()) return BigInt(j.get<std::int64_t>());
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    if (s.empty() || s.find_first_not_of("-0123456789") != std::string::npos) throw Error(ErrorKind::InvalidArgument, "bad integer " + s);
    return BigInt(s);
  }
  throw Error(ErrorKind::InvalidArgument, "expected an integer");
}

inline json to_json(const Rational& r) { return to_string(r); }

inline Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  if (!j.is_string()) throw Error(ErrorKind::InvalidArgument, "expected a rational");
  const std::string s = j.get<std::string>();
  const auto slash = s.find('/');
  if (slash == std::string::npos) return Rational(bigint_from_json(s));
  return Rational(bigint_from_json(s.substr(0, slash)), bigint_from_json(s.substr(slash + 1)));
}

inline json to_json(const Permutation& w) { return w.oneline(); }

inline Permutation permutation_from_json(const json& j) {
  return detail::parse_guard("permutation", [&] { return Permutation(j.get<std::vector<int>>()); });
}

inline json to_json(const LehmerCode& c) { return c.entries(); }

inline json to_json(const PipeDream& D) {
  json crosses = json::array();
  for (const Cell& c : D.crosses()) crosses.push_back({c.row, c.col});
  return {{"n", D.n()}, {"crosses", crosses}};
}

inline PipeDream pipe_dream_from_json(const json& j) {
  return detail::parse_guard("pipe dream", [&] {
    std::vector<Cell> cells;
    for (const auto& c : j.at("crosses")) {
      if (!c.is_array() || c.size() != 2) throw Error(ErrorKind::InvalidArgument, "crosses are [row, column] pairs");
      cells.push_back({c[0].get<int>(), c[1].get<int>()});
    }
    return PipeDream(j.at("n").get<int>(), cells);
  });
}

inline json to_json(const LadderIndex& idx) { return {{"i", idx.start()}, {"ks", idx.steps()}}; }

inline LadderIndex ladder_index_from_json(const json& j) {
  return detail::parse_guard("ladder index", [&] { return LadderIndex(j.at("i").get<int>(), j.at("ks").get<std::vector<int>>()); });
}

inline json to_json(const LadderSequence& x) {
  json entries = json::array();
  for (const auto& [idx, v] : x.entries()) entries.push_back({{"i", idx.start()}, {"ks", idx.steps()}, {"value", v}});
  return {{"mu", x.mu()}, {"entries", entries}};
}

inline LadderSequence ladder_sequence_from_json(const json& j) {
  return detail::parse_guard("ladder sequence", [&] {
    LadderSequence x(j.at("mu").get<int>());
    for (const auto& e : j.at("entries")) x.set(ladder_index_from_json(e), e.at("value").get<std::int64_t>());
    return x;
  });
}

inline json to_json(const ParametricSystem& P) {
  json vars = json::array();
  for (const auto& v : P.vars) {
    json jv = to_json(v.index);
    if (v.block != 0) jv["block"] = v.block;
    vars.push_back(jv);
  }
  return {{"vars", vars}, {"A", P.A}, {"c", P.c}, {"b", P.b}};
}

inline ParametricSystem parametric_system_from_json(const json& j) {
  return detail::parse_guard("parametric system", [&] {
    ParametricSystem P;
    for (const auto& v : j.at("vars")) P.vars.push_back({ladder_index_from_json(v), v.value("block", 0)});
    P.A = j.at("A").get<std::vector<std::vector<std::int64_t>>>();
    P.c = j.at("c").get<std::vector<std::int64_t>>();
    P.b = j.at("b").get<std::vector<std::int64_t>>();
    if (P.A.size() != P.c.size() || P.A.size() != P.b.size()) throw Error(ErrorKind::InvalidArgument, "row count mismatch");
    for (const auto& row : P.A)
      if (row.size() != P.vars.size()) throw Error(ErrorKind::InvalidArgument, "row width mismatch");
    return P;
  });
}

inline json to_json(const InstantiatedSystem& S) { return {{"A", S.A}, {"rhs", S.rhs}, {"lower", S.lower}}; }

inline InstantiatedSystem instantiated_system_from_json(const json& j) {
  return detail::parse_guard("system", [&] {
    InstantiatedSystem S;
    S.A = j.at("A").get<std::vector<std::vector<std::int64_t>>>();
    S.rhs = j.at("rhs").get<std::vector<std::int64_t>>();
    if (j.contains("lower")) S.lower = j.at("lower").get<std::vector<std::int64_t>>();
    S.varcount = !S.lower.empty() ? S.lower.size() : (S.A.empty() ? 0 : S.A.front().size());
    if (S.lower.empty()) S.lower.assign(S.varcount, 0);
    if (S.A.size() != S.rhs.size()) throw Error(ErrorKind::InvalidArgument, "row count mismatch");
    for (const auto& row : S.A)
      if (row.size() != S.varcount) throw Error(ErrorKind::InvalidArgument, "row width mismatch");
    return S;
  });
}

inline json to_json(const Polynomial& p) {
  json terms = json::array();
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) terms.push_back({{"exp", it->first}, {"coef", it->second}});
  return {{"terms", terms}};
}

inline Polynomial polynomial_from_json(const json& j) {
  return detail::parse_guard("polynomial", [&] {
    Polynomial p;
    for (const auto& t : j.at("terms")) p.add_term(t.at("exp").get<std::vector<int>>(), t.at("coef").get<std::int64_t>());
    return p;
  });
}

inline json to_json(const QuasiPolynomial& q) {
  json polys = json::array();
  for (const auto& p : q.polys) {
    json coeffs = json::array();
    for (const auto& c : p) coeffs.push_back(to_json(c));
    polys.push_back(coeffs);
  }
  return {{"period", q.period}, {"offset", q.offset}, {"polys", polys}, {"verified_through", q.verified_through}};
}

inline QuasiPolynomial quasipolynomial_from_json(const json& j) {
  return detail::parse_guard("quasi-polynomial", [&] {
    QuasiPolynomial q;
    q.period = j.at("period").get<int>();
    q.offset = j.at("offset").get<int>();
    q.verified_through = j.value("verified_through", std::int64_t{0});
    for (const auto& p : j.at("polys")) {
      std::vector<Rational> coeffs;
      for (const auto& c : p) coeffs.push_back(rational_from_json(c));
      q.polys.push_back(std::move(coeffs));
    }
    if (q.period < 1 || static_cast<int>(q.polys.size()) != q.period) throw Error(ErrorKind::InvalidArgument, "one polynomial per residue class");
    return q;
  });
}

inline json to_json(const RationalGeneratingFunction& g) {
  auto arr = [](const std::vector<BigInt>& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(to_json(x));
    return a;
  };
  return {{"numerator", arr(g.numerator)}, {"denominator", arr(g.denominator)}, {"exceptional", arr(g.exceptional)},
          {"period", g.period}, {"exponent", g.exponent}};
}

/// Accepts [f(1), f(2), ...], {"from": N0, "values": [f(N0), ...]} (N0
/// defaults to 1), or {"1": f(1), "2": f(2), ...}.
inline Sequence sequence_from_json(const json& j) {
  return detail::parse_guard("sequence", [&] {
    Sequence seq;
    const json& arr = j.is_object() && j.contains("values") ? j.at("values") : j;
    if (arr.is_array()) {
      std::int64_t N = j.is_object() ? j.value("from", std::int64_t{1}) : 1;
      for (const auto& v : arr) seq[N++] = bigint_from_json(v);
    } else if (arr.is_object()) {
      for (const auto& [key, v] : arr.items()) {
        if (key.empty() || key.find_first_not_of("0123456789") != std::string::npos) throw Error(ErrorKind::InvalidArgument, "bad sequence key " + key);
        seq[std::stoll(key)] = bigint_from_json(v);
      }
    } else {
      throw Error(ErrorKind::InvalidArgument, "expected an array or object");
    }
    return seq;
  });
}

inline json to_json(const Sequence& seq) {
  json a = json::array();
  for (const auto& [N, v] : seq) a.push_back(to_json(v));
  return a;
}

}  // namespace schubert
