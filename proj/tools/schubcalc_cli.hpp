#pragma once

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "schubert/all.hpp"

namespace schubcalc {

using schubert::BigInt;
using schubert::json;
using schubert::Permutation;

/// Bad command-line input (as opposed to a failed computation).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr const char* kParallelEnv = "SCHUBCALC_PARALLEL";

namespace detail {

template <typename F>
auto input(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const schubert::Error& e) {
    throw InputError(e.what());
  } catch (const json::exception& e) {
    throw InputError(e.what());
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  } catch (const std::out_of_range& e) {
    throw InputError(e.what());
  }
}

inline std::vector<int> int_list(const std::string& text) {
  std::vector<int> out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos) throw InputError("bad integer list: " + text);
    out.push_back(std::stoi(tok));
  }
  return out;
}

/// "3142", "3,1,4,2", "id", or "code:1,0,1,0".
inline Permutation perm_arg(const std::string& text) {
  return input([&] {
    if (text.rfind("code:", 0) == 0) return schubert::from_code(schubert::LehmerCode(int_list(text.substr(5))));
    return schubert::parse_permutation(text);
  });
}

/// Positional permutation, or the one given by --code.
inline Permutation perm_or_code(const std::string& positional, const std::string& code) {
  if (!code.empty()) {
    if (!positional.empty()) throw InputError("give either a permutation or --code, not both");
    return input([&] { return schubert::from_code(schubert::LehmerCode(int_list(code))); });
  }
  if (positional.empty()) throw InputError("a permutation is required");
  return perm_arg(positional);
}

/// "2:1;2:2;1:1,2" lists the indices (2;1), (2;2), (1;1,2).
inline std::vector<schubert::LadderIndex> kappa_arg(const std::string& text) {
  std::vector<schubert::LadderIndex> out;
  if (text.empty() || text == "-") return out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ';')) {
    auto colon = tok.find(':');
    if (colon == std::string::npos) throw InputError("ladder index must look like i:k1,k2: " + tok);
    auto start = int_list(tok.substr(0, colon));
    if (start.size() != 1) throw InputError("bad ladder index " + tok);
    out.push_back(input([&] { return schubert::LadderIndex(start[0], int_list(tok.substr(colon + 1))); }));
  }
  return out;
}

inline json read_json(const std::string& path, std::istream& in) {
  return input([&] {
    if (path.empty() || path == "-") return json::parse(in);
    std::ifstream f(path);
    if (!f) throw InputError("cannot open " + path);
    return json::parse(f);
  });
}

inline schubert::CoefficientMethod method_arg(const std::string& m) {
  if (m == "ps") return schubert::CoefficientMethod::PostnikovStanley;
  if (m == "expand") return schubert::CoefficientMethod::Expand;
  if (m == "polytope") return schubert::CoefficientMethod::Polytope;
  throw InputError("unknown method " + m);
}

inline std::string join(const std::vector<int>& v, const char* sep = ",") {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + std::to_string(v[i]);
  return s;
}

struct ReplicateRow {
  std::string check;
  std::string expected;
  std::string got;
  bool ok() const { return expected == got; }
};

inline std::vector<ReplicateRow> replicate_negex(unsigned threads, std::ostream& err) {
  const Permutation u = schubert::parse_permutation("3142"), v = schubert::parse_permutation("1432"), w = schubert::parse_permutation("4321");
  std::vector<ReplicateRow> rows;
  for (int N = 1; N <= 8; ++N) {
    BigInt c = schubert::stretched_coefficient(u, v, w, N, schubert::CoefficientMethod::Polytope, threads);
    rows.push_back({"c(3142,1432,4321) N=" + std::to_string(N), std::to_string(N - 1), c.str()});
    err << "negex: N=" << N << " done\n";
  }
  return rows;
}

inline std::vector<ReplicateRow> replicate_offset(unsigned threads, std::ostream& err) {
  std::vector<ReplicateRow> rows;
  for (int n : {4, 5}) {
    std::vector<int> cu(n, 0), cw(n, 0);
    cu[0] = 1;
    cu[n - 2] = 1;
    cw[0] = 3;
    cw[n - 2] = 1;
    const Permutation u = schubert::from_code(schubert::LehmerCode(cu)), w = schubert::from_code(schubert::LehmerCode(cw));
    for (int N = 2 * n - 6; N <= 2 * n - 2; ++N) {
      BigInt c = schubert::stretched_coefficient(u, u, w, N, schubert::CoefficientMethod::Polytope, threads);
      rows.push_back({"n=" + std::to_string(n) + " c(" + u.to_string() + "," + u.to_string() + "," + w.to_string() + ") N=" + std::to_string(N),
                      N == 2 * n - 6 ? "1" : "0", c.str()});
    }
    err << "offset: n=" << n << " done\n";
  }
  return rows;
}

inline std::vector<ReplicateRow> replicate_kostka(std::ostream& err) {
  std::vector<ReplicateRow> rows;
  const Permutation u = schubert::parse_permutation("2143");
  for (int N = 1; N <= 5; ++N)
    rows.push_back({"K(N*2143, N*(2)) N=" + std::to_string(N), N == 1 ? "1" : "0", schubert::stretched_kostka(u, {2}, N).str()});
  err << "kostka: done\n";
  return rows;
}

/// The closed forms for the six sigma in S_3 attached to (3142, 1432, 4321).
inline BigInt closed_form(const std::string& sigma, std::int64_t N) {
  BigInt n = N;
  if (sigma == "123") return (n + 1) * (n + 2) * (n + 2) * (n + 3) / 12 - 2 * (n + 1);
  if (sigma == "132" || sigma == "213") return n * (n + 1) * (n + 2) * (n + 3) / 12 - n;
  if (sigma == "231" || sigma == "312") return (n - 1) * n * (n + 1) * (n + 2) / 12;
  return (n - 1) * n * n * (n + 1) / 12;
}

inline std::vector<ReplicateRow> replicate_sec61(unsigned threads, std::ostream& err) {
  const Permutation u = schubert::parse_permutation("3142"), v = schubert::parse_permutation("1432"), w = schubert::parse_permutation("4321");
  std::vector<ReplicateRow> rows;
  for (int N = 1; N <= 6; ++N) {
    auto all = schubert::f_sigma_all(u, v, w, N, {schubert::FSigmaMethod::Factorized, threads});
    for (const auto& [sigma, f] : all) {
      std::string s = join(sigma.oneline(3), "");
      rows.push_back({"f_" + s + " N=" + std::to_string(N), closed_form(s, N).str(), f.str()});
    }
    err << "sec61: N=" << N << " done\n";
  }
  return rows;
}

}  // namespace detail

/// Runs one command line (without the program name). Output goes to `out`,
/// diagnostics and progress to `err`.
inline int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  using namespace detail;
  namespace S = schubert;

  CLI::App app{"Schubert coefficients, pipe dreams, ladder sequences and their polytopes"};
  app.name("schubcalc");
  app.require_subcommand(1);
  bool as_json = false;
  unsigned threads = 1;
  if (const char* env = std::getenv(kParallelEnv)) {
    try {
      threads = static_cast<unsigned>(std::max(1, std::stoi(env)));
    } catch (...) {
      err << "ignoring " << kParallelEnv << "=" << env << "\n";
    }
  }
  app.add_flag("--json", as_json, "Machine-readable JSON output");
  app.add_option("--parallel", threads, "Worker threads (default from " + std::string(kParallelEnv) + ")")->check(CLI::PositiveNumber);

  std::function<int()> action;
  std::string pos1, pos2, pos3, code, file, method = "ps", kappa1, kappa2, kappa3, sigma_text;
  long long Nval = 1, from = 1, to = 1, nlen = 0;
  int max_period = 4, max_degree = 8;
  bool count_only = false;

  auto emit = [&](const json& j, const std::string& human) {
    if (as_json)
      out << j.dump() << "\n";
    else
      out << human << (human.empty() || human.back() == '\n' ? "" : "\n");
  };

  // perm
  auto* perm = app.add_subcommand("perm", "Permutation utilities");
  perm->require_subcommand(1);
  {
    auto* c = perm->add_subcommand("code", "Lehmer code");
    c->add_option("w", pos1, "Permutation")->required();
    c->callback([&] {
      action = [&] {
        auto code_w = S::lehmer_code(perm_arg(pos1));
        emit(S::to_json(code_w), code_w.to_string().empty() ? "0" : code_w.to_string());
        return 0;
      };
    });
    auto* uc = perm->add_subcommand("uncode", "Permutation with a given Lehmer code");
    uc->add_option("code", pos1, "Comma-separated code")->required();
    uc->add_option("--n", nlen, "Ambient S_n (default: smallest that fits)");
    uc->callback([&] {
      action = [&] {
        auto c = input([&] { return S::LehmerCode(int_list(pos1)); });
        Permutation w = nlen > 0 ? S::from_code(c, static_cast<int>(nlen)) : S::from_code(c);
        emit(S::to_json(w), w.to_string());
        return 0;
      };
    });
    auto* st = perm->add_subcommand("stretch", "N * w");
    st->add_option("w", pos1, "Permutation");
    st->add_option("--code", code, "Give w by its Lehmer code");
    st->add_option("--N", Nval, "Stretch factor")->required()->check(CLI::PositiveNumber);
    st->callback([&] {
      action = [&] {
        Permutation w = S::stretch(perm_or_code(pos1, code), static_cast<int>(Nval));
        emit(S::to_json(w), w.to_string());
        return 0;
      };
    });
    auto* ss = perm->add_subcommand("stats", "Inversions, descents, exceedances");
    ss->add_option("w", pos1, "Permutation");
    ss->add_option("--code", code, "Give w by its Lehmer code");
    ss->callback([&] {
      action = [&] {
        Permutation w = perm_or_code(pos1, code);
        auto st = S::statistics(w);
        json j{{"permutation", S::to_json(w)}, {"code", S::to_json(S::lehmer_code(w))}, {"inversions", st.inversions},
               {"descents", st.descents}, {"exceedances", st.exceedances}};
        j["exceedance_range"] = st.exceedance_range ? json{st.exceedance_range->first, st.exceedance_range->second} : json(nullptr);
        std::ostringstream h;
        h << "permutation  " << w.to_string() << "\n"
          << "code         " << S::lehmer_code(w).to_string() << "\n"
          << "inversions   " << st.inversions << "\n"
          << "descents     " << join(st.descents) << "\n"
          << "exceedances  " << join(st.exceedances) << "\n"
          << "exc. range   "
          << (st.exceedance_range ? "[" + std::to_string(st.exceedance_range->first) + "," + std::to_string(st.exceedance_range->second) + "]" : "-");
        emit(j, h.str());
        return 0;
      };
    });
  }

  // pd
  auto* pd = app.add_subcommand("pd", "Pipe dreams");
  pd->require_subcommand(1);
  {
    auto* en = pd->add_subcommand("enumerate", "All reduced pipe dreams of u");
    en->add_option("u", pos1, "Permutation");
    en->add_option("--code", code, "Give u by its Lehmer code");
    en->add_flag("--count", count_only, "Only print how many there are");
    en->callback([&] {
      action = [&] {
        auto all = S::enumerate_pipe_dreams(perm_or_code(pos1, code));
        if (count_only) {
          emit(json(all.size()), std::to_string(all.size()));
          return 0;
        }
        json j = json::array();
        std::string h;
        for (const auto& D : all) {
          j.push_back(S::to_json(D));
          h += D.render() + "weight " + join(D.weight()) + "\n\n";
        }
        h += std::to_string(all.size()) + " pipe dreams";
        emit(j, h);
        return 0;
      };
    });
    auto* bo = pd->add_subcommand("bottom", "The bottom pipe dream of u");
    bo->add_option("u", pos1, "Permutation");
    bo->add_option("--code", code, "Give u by its Lehmer code");
    bo->callback([&] {
      action = [&] {
        auto D = S::bottom_pipe_dream(perm_or_code(pos1, code));
        emit(S::to_json(D), D.render());
        return 0;
      };
    });
    auto* re = pd->add_subcommand("render", "Draw a pipe dream given as JSON and read its permutation");
    re->add_option("--file", file, "JSON pipe dream (default: stdin)");
    re->callback([&] {
      action = [&] {
        auto D = input([&] { return S::pipe_dream_from_json(read_json(file, in)); });
        auto r = S::read_permutation(D);
        json j{{"render", D.render()}, {"permutation", S::to_json(r.permutation)}, {"reduced", r.reduced}, {"weight", D.weight()}};
        emit(j, D.render() + "permutation " + r.permutation.to_string() + (r.reduced ? " (reduced)" : " (not reduced)"));
        return 0;
      };
    });
  }

  // ladder
  auto* ladder = app.add_subcommand("ladder", "Ladder sequences");
  ladder->require_subcommand(1);
  {
    auto* enc = ladder->add_subcommand("encode", "Ladder sequence of a pipe dream of u");
    enc->add_option("u", pos1, "Permutation");
    enc->add_option("--code", code, "Give u by its Lehmer code");
    enc->add_option("--file", file, "JSON pipe dream (default: stdin)");
    enc->callback([&] {
      action = [&] {
        Permutation u = perm_or_code(pos1, code);
        auto D = input([&] { return S::pipe_dream_from_json(read_json(file, in)); });
        auto x = S::encode(D, u);
        emit(S::to_json(x), x.to_string());
        return 0;
      };
    });
    auto* dec = ladder->add_subcommand("decode", "Pipe dream of a u-compatible ladder sequence");
    dec->add_option("u", pos1, "Permutation");
    dec->add_option("--code", code, "Give u by its Lehmer code");
    dec->add_option("--file", file, "JSON ladder sequence (default: stdin)");
    dec->callback([&] {
      action = [&] {
        Permutation u = perm_or_code(pos1, code);
        auto x = input([&] { return S::ladder_sequence_from_json(read_json(file, in)); });
        auto D = S::decode(x, u);
        emit(S::to_json(D), D.render());
        return 0;
      };
    });
    auto* ind = ladder->add_subcommand("indices", "Ladder indices of L_mu in ladder order");
    ind->add_option("mu", nlen, "Number of rows")->required()->check(CLI::NonNegativeNumber);
    ind->callback([&] {
      action = [&] {
        json j = json::array();
        std::string h;
        for (const auto& idx : S::ladder_indices(static_cast<int>(nlen))) {
          j.push_back(S::to_json(idx));
          h += idx.to_string() + "\n";
        }
        emit(j, h);
        return 0;
      };
    });
  }

  // system
  auto* sys = app.add_subcommand("system", "Compatibility and triple systems");
  sys->require_subcommand(1);
  {
    auto* em = sys->add_subcommand("emit", "Emit a system as JSON");
    em->require_subcommand(1);
    auto* comp = em->add_subcommand("compat", "Compatibility system of u for a support");
    comp->add_option("u", pos1, "Permutation");
    comp->add_option("--code", code, "Give u by its Lehmer code");
    comp->add_option("--kappa", kappa1, "Support, e.g. \"2:1;1:1,2\"");
    comp->add_option("--N", Nval, "Instantiate at this N")->check(CLI::PositiveNumber);
    comp->callback([&, comp] {
      action = [&, comp] {
        Permutation u = perm_or_code(pos1, code);
        auto P = S::compat_system(u, kappa_arg(kappa1));
        out << (comp->count("--N") ? S::to_json(S::instantiate(P, Nval)) : S::to_json(P)).dump() << "\n";
        return 0;
      };
    });
    auto* tri = em->add_subcommand("triple", "Triple system for (u, v, w), sigma and three supports");
    tri->add_option("u", pos1)->required();
    tri->add_option("v", pos2)->required();
    tri->add_option("w", pos3)->required();
    tri->add_option("--sigma", sigma_text, "Element of S_mu")->required();
    tri->add_option("--k1", kappa1, "Support for u");
    tri->add_option("--k2", kappa2, "Support for v");
    tri->add_option("--k3", kappa3, "Support for w");
    tri->add_option("--N", Nval, "Instantiate at this N")->check(CLI::PositiveNumber);
    tri->callback([&, tri] {
      action = [&, tri] {
        Permutation u = perm_arg(pos1), v = perm_arg(pos2), w = perm_arg(pos3), sigma = perm_arg(sigma_text);
        auto T = S::triple_system(u, v, w, sigma, kappa_arg(kappa1), kappa_arg(kappa2), kappa_arg(kappa3));
        auto P = T.merged();
        out << (tri->count("--N") ? S::to_json(S::instantiate(P, Nval)) : S::to_json(P)).dump() << "\n";
        return 0;
      };
    });
    auto* cnt = sys->add_subcommand("count", "Count lattice points of a JSON system");
    cnt->add_option("--file", file, "Parametric or instantiated system (default: stdin)");
    cnt->add_option("--N", Nval, "N for a parametric system")->check(CLI::PositiveNumber);
    cnt->callback([&] {
      action = [&] {
        json j = read_json(file, in);
        S::InstantiatedSystem Sys = input([&] {
          if (j.contains("vars")) return S::instantiate(S::parametric_system_from_json(j), Nval);
          return S::instantiated_system_from_json(j);
        });
        BigInt c = S::count_lattice_points(Sys);
        emit(S::to_json(c), c.str());
        return 0;
      };
    });
  }

  // coeff
  auto* coeff = app.add_subcommand("coeff", "Schubert structure constant c^{N*w}_{N*u,N*v}");
  coeff->add_option("u", pos1)->required();
  coeff->add_option("v", pos2)->required();
  coeff->add_option("w", pos3)->required();
  coeff->add_option("--method", method, "ps, expand or polytope")->check(CLI::IsMember({"ps", "expand", "polytope"}));
  coeff->add_option("--N", Nval, "Stretch factor (default 1)")->check(CLI::PositiveNumber);
  coeff->callback([&] {
    action = [&] {
      Permutation u = perm_arg(pos1), v = perm_arg(pos2), w = perm_arg(pos3);
      BigInt c = S::stretched_coefficient(u, v, w, Nval, method_arg(method), threads);
      emit(S::to_json(c), c.str());
      return 0;
    };
  });

  // stretched
  auto* str = app.add_subcommand("stretched", "Stretched structure constants over a range of N");
  str->add_option("u", pos1)->required();
  str->add_option("v", pos2)->required();
  str->add_option("w", pos3)->required();
  str->add_option("--from", from, "First N")->required()->check(CLI::PositiveNumber);
  str->add_option("--to", to, "Last N")->required()->check(CLI::PositiveNumber);
  str->add_option("--method", method, "ps, expand or polytope")->check(CLI::IsMember({"ps", "expand", "polytope"}));
  str->callback([&] {
    if (!str->count("--method")) method = "polytope";
    action = [&] {
      Permutation u = perm_arg(pos1), v = perm_arg(pos2), w = perm_arg(pos3);
      if (to < from) throw InputError("--to is smaller than --from");
      json values = json::array();
      std::string h;
      for (long long N = from; N <= to; ++N) {
        BigInt c = S::stretched_coefficient(u, v, w, N, method_arg(method), threads);
        values.push_back(S::to_json(c));
        h += (h.empty() ? "" : " ") + c.str();
        err << "N=" << N << " done\n";
      }
      emit(json{{"from", from}, {"values", values}}, h);
      return 0;
    };
  });

  // fit
  auto* fitc = app.add_subcommand("fit", "Certify a quasi-polynomial for a JSON sequence");
  fitc->add_option("--file", file, "Sequence JSON (default: stdin)");
  fitc->add_option("--max-period", max_period, "Largest period tried")->check(CLI::PositiveNumber);
  fitc->add_option("--max-degree", max_degree, "Largest degree tried")->check(CLI::NonNegativeNumber);
  fitc->callback([&] {
    action = [&] {
      S::Sequence seq = input([&] { return S::sequence_from_json(read_json(file, in)); });
      auto q = S::fit(seq, max_period, max_degree);
      if (!q) {
        emit(json{{"quasipolynomial", nullptr}, {"generating_function", nullptr}}, "NoFit");
        return 0;
      }
      auto g = S::generating_function(*q, seq);
      std::ostringstream h;
      h << "period            " << q->period << "\n"
        << "offset            " << q->offset << "\n";
      for (int r = 0; r < q->period; ++r) {
        std::string p;
        for (std::size_t k = q->polys[r].size(); k-- > 0;) {
          const auto& c = q->polys[r][k];
          if (c == 0) continue;
          std::string mag = S::to_string(c < 0 ? S::Rational(-c) : c);
          std::string mono = k == 0 ? "" : (k == 1 ? "N" : "N^" + std::to_string(k));
          p += p.empty() ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + ");
          p += mono.empty() ? mag : (mag == "1" ? "" : mag + "*") + mono;
        }
        h << "g_" << r << "(N)            " << (p.empty() ? "0" : p) << "\n";
      }
      h << "verified through  N = " << q->verified_through << "\n"
        << "generating fn     " << g.to_string();
      emit(json{{"quasipolynomial", S::to_json(*q)}, {"generating_function", S::to_json(g)}}, h.str());
      return 0;
    };
  });

  // replicate
  auto* rep = app.add_subcommand("replicate", "Run the built-in golden examples");
  std::string which;
  rep->add_option("which", which, "negex, offset, kostka, sec61 or all")->required()->check(CLI::IsMember({"negex", "offset", "kostka", "sec61", "all"}));
  rep->callback([&] {
    action = [&] {
      std::vector<ReplicateRow> rows;
      auto take = [&](std::vector<ReplicateRow> r) { rows.insert(rows.end(), r.begin(), r.end()); };
      if (which == "negex" || which == "all") take(replicate_negex(threads, err));
      if (which == "offset" || which == "all") take(replicate_offset(threads, err));
      if (which == "kostka" || which == "all") take(replicate_kostka(err));
      if (which == "sec61" || which == "all") take(replicate_sec61(threads, err));
      bool all_ok = true;
      json j = json::array();
      std::ostringstream h;
      std::size_t width = 5;
      for (const auto& r : rows) width = std::max(width, r.check.size());
      h << std::left << std::setw(static_cast<int>(width) + 2) << "check" << std::setw(10) << "expected" << std::setw(10) << "got" << "status\n";
      for (const auto& r : rows) {
        all_ok = all_ok && r.ok();
        j.push_back({{"check", r.check}, {"expected", r.expected}, {"got", r.got}, {"status", r.ok() ? "OK" : "MISMATCH"}});
        h << std::left << std::setw(static_cast<int>(width) + 2) << r.check << std::setw(10) << r.expected << std::setw(10) << r.got
          << (r.ok() ? "OK" : "MISMATCH") << "\n";
      }
      emit(j, h.str());
      return all_ok ? 0 : 1;
    };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e, out, err);
    return rc == 0 ? 0 : 2;
  }
  try {
    return action ? action() : 2;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const schubert::Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace schubcalc
