#ifndef YTWO_TOOLS_CLI_HPP
#define YTWO_TOOLS_CLI_HPP

// Command-line front end: verification suites and report rendering.

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ytwo/serialize.hpp"
#include "ytwo/ytwo.hpp"

namespace ytwo::cli {

enum ExitCode { kPass = 0, kFail = 1, kUsage = 2, kCap = 3 };

struct Options {
  int m = 3;
  int n = 5;
  int kmax = -1;  // per-suite default when negative
  std::uint64_t seed = 42;
  std::uint64_t cap = 2000000;
  bool json = false;
  int threads = 1;
  std::string rep = "both";
  int rank = 9;
  bool enumerate = false;
  bool no_timing = false;
  int words = 200;
  int max_len = 30;
};

struct RunReport {
  std::string command;
  Json params = Json::object();
  std::vector<CheckResult> checks;
  Json data = nullptr;  // command-specific payload, omitted when null
  long long elapsed_ms = 0;
  bool cap_hit = false;

  int exit_code() const {
    for (const auto& c : checks) {
      if (c.status == Status::Fail) return kFail;
    }
    return cap_hit ? kCap : kPass;
  }

  Json to_json() const {
    Json j;
    j["command"] = command;
    j["params"] = params;
    Json cs = Json::array();
    for (const auto& c : checks) cs.push_back(ytwo::to_json(c));
    j["checks"] = std::move(cs);
    if (!data.is_null()) j["data"] = data;
    j["elapsed_ms"] = elapsed_ms;
    return j;
  }

  std::string to_text() const {
    std::ostringstream os;
    os << "ytwo " << command;
    for (const auto& [k, v] : params.items()) os << "  " << k << "=" << (v.is_string() ? v.get<std::string>() : v.dump());
    os << "\n";
    int counts[3] = {0, 0, 0};
    for (const auto& c : checks) {
      ++counts[static_cast<int>(c.status)];
      os << "  " << status_name(c.status) << "  " << c.name;
      if (c.expected) os << "  expected=" << *c.expected;
      if (c.actual) os << "  actual=" << *c.actual;
      if (c.detail) os << "  (" << *c.detail << ")";
      os << "\n";
    }
    if (!data.is_null()) os << "  data: " << data.dump() << "\n";
    os << "summary: " << counts[0] << " pass, " << counts[1] << " fail, " << counts[2] << " skip";
    if (elapsed_ms > 0) os << ", " << elapsed_ms << " ms";
    os << "\n";
    return os.str();
  }
};

inline void add(RunReport& r, CheckResult c) { r.checks.push_back(std::move(c)); }

inline std::string join(const std::vector<std::string>& xs, std::size_t limit = 5) {
  std::string out;
  for (std::size_t i = 0; i < xs.size() && i < limit; ++i) out += (i ? ", " : "") + xs[i];
  if (xs.size() > limit) out += ", ...";
  return out;
}

inline void check_m(int m, int lo, int hi) {
  if (m < lo || m > hi) {
    throw Error(Errc::BadM, "--m must lie in " + std::to_string(lo) + ".." + std::to_string(hi) + ", got " + std::to_string(m));
  }
}

// ---------------------------------------------------------------------------
// Suites

template <class Rep>
CheckResult relator_check(const std::string& name, const Rep& rep, const RelationSchedule& sch,
                          const std::function<bool(const typename Rep::element_type&)>& is_id) {
  std::vector<std::string> bad;
  for (const auto& r : sch.relators) {
    if (!is_id(evaluate(r.word, rep))) bad.push_back(r.name);
  }
  const std::string total = std::to_string(sch.relators.size());
  return make_check(name, bad.empty(), total + "/" + total + " identity",
                    std::to_string(sch.relators.size() - bad.size()) + "/" + total + " identity",
                    bad.empty() ? std::nullopt : std::optional(join(bad)));
}

inline void suite_relations(RunReport& r, const Options& o) {
  check_m(o.m, 3, 10);
  const int K = o.kmax < 0 ? 20 : o.kmax;
  const bool phi = o.rep == "phi" || o.rep == "both" || o.rep == "all";
  const bool psi = o.rep == "psi" || o.rep == "both" || o.rep == "all";
  const bool eta = o.rep == "eta" || o.rep == "all";
  if (!phi && !psi && !eta) throw Error(Errc::BadParams, "--rep must be phi, psi, eta, both or all");
  const auto tilde = schedule(o.m, K, Flavor::y_tilde);
  if (phi) {
    const PhiRep rep(o.m);
    add(r, relator_check<PhiRep>("phi_y-tilde_relators", rep, tilde, [](const LMatrix& x) { return x.is_identity(); }));
    if (o.m <= 6) {
      add(r, relator_check<PhiRep>("phi_Y_relators", rep, schedule(o.m, K, Flavor::Y),
                                   [](const LMatrix& x) { return x.is_identity(); }));
    }
  }
  if (psi) {
    const PsiRep rep(o.m);
    const LCliff one = rep.identity();
    add(r, relator_check<PsiRep>("psi_y-tilde_relators", rep, tilde, [&](const LCliff& x) { return x == one; }));
  }
  if (eta) {
    const EtaRep rep(o.m);
    add(r, relator_check<EtaRep>("eta_y_relators", rep, schedule(o.m, K, Flavor::y),
                                 [](const QEMatrix& x) { return x.is_identity(); }));
  }
}

inline std::vector<Gen> all_generators(int m) {
  std::vector<Gen> gens{Gen::a(), Gen::a_inv(), Gen::tau()};
  for (int i = 1; i < m; ++i) {
    gens.push_back(Gen::s(i));
    gens.push_back(Gen::s_tilde(i));
  }
  return gens;
}

inline void suite_lifting(RunReport& r, const Options& o) {
  check_m(o.m, 3, 8);
  const PhiRep phi(o.m);
  const PsiRep psi(o.m);
  std::vector<std::string> bad_gen, bad_norm;
  for (const Gen& g : all_generators(o.m)) {
    if (!(pi_matrix(psi.image(g)) == phi.image(g))) bad_gen.push_back(to_string(Word{g}));
    const auto n = spinor_norm(psi.image(g));
    if (!n || !n->is_one()) bad_norm.push_back(to_string(Word{g}));
  }
  add(r, make_check("pi_psi_equals_phi_generators", bad_gen.empty(), std::nullopt, std::nullopt,
                    bad_gen.empty() ? std::nullopt : std::optional(join(bad_gen))));
  add(r, make_check("psi_generator_spinor_norms_1", bad_norm.empty(), std::nullopt, std::nullopt,
                    bad_norm.empty() ? std::nullopt : std::optional(join(bad_norm))));

  std::mt19937_64 rng(o.seed);
  int lift_ok = 0, norm_ok = 0, even_ok = 0, poly_ok = 0;
  std::vector<std::string> lift_bad;
  for (int i = 0; i < o.words; ++i) {
    const Word w = random_word(rng, o.m, o.max_len, true);
    const LCliff c = evaluate(w, psi);
    const LMatrix M = evaluate(w, phi);
    if (pi_matrix(c) == M) {
      ++lift_ok;
    } else {
      lift_bad.push_back(to_string(w));
    }
    const auto n = spinor_norm(c);
    norm_ok += n && n->is_one();
    poly_ok += entries_in_t_polynomials(M);
  }
  for (int i = 0; i < o.words; ++i) {
    const Word w = random_word(rng, o.m, o.max_len, false);
    even_ok += evaluate(w, psi).is_even();
  }
  const std::string total = std::to_string(o.words);
  add(r, make_check("pi_psi_equals_phi_random_words", lift_ok == o.words, total, std::to_string(lift_ok),
                    lift_bad.empty() ? std::nullopt : std::optional(join(lift_bad, 1))));
  add(r, make_check("random_word_spinor_norms_1", norm_ok == o.words, total, std::to_string(norm_ok)));
  add(r, make_check("phi_entries_in_F2[t]", poly_ok == o.words, total, std::to_string(poly_ok)));
  add(r, make_check("y_words_in_even_part", even_ok == o.words, total, std::to_string(even_ok)));

  if (o.m >= 4) {
    const auto alg = psi.algebra();
    const auto d = hyperbolic_decompose(alg->space());
    const auto& [e, f] = d.pairs.front();
    const LCliff E = LCliff::vector(alg, e), F = LCliff::vector(alg, f);
    const LCliff w = LaurentScalar::s() * (E * F) + F * E;
    const auto n = spinor_norm(w);
    add(r, expect_eq("spinor_norm_s.e.f+f.e", "s", n ? n->to_string() : "not scalar"));
    const bool odd = n && n->is_monomial() && n->low_degree() % 2 != 0;
    add(r, make_check("norm_s_not_a_square_unit", odd, "odd exponent",
                      n ? "exponent " + std::to_string(n->low_degree()) : "none"));
  }
}

inline void suite_closed_form(RunReport& r, const Options& o) {
  check_m(o.m, 3, 10);
  const int K = o.kmax < 0 ? 20 : o.kmax;
  const PhiRep phi(o.m);
  for (int k = 0; k <= K; ++k) {
    const LMatrix cf = to_laurent(closed_form_conjugate(phi.space(), k));
    const LMatrix it = evaluate(conjugation_word(k), phi);
    const auto f = form_coefficients(cf);
    const bool ok = cf == it && entries_in_t_polynomials(cf) && (f[0] + f[1] + f[2]).is_zero();
    add(r, make_check("closed_form_k" + std::to_string(k), ok, std::nullopt, std::nullopt,
                      ok ? std::nullopt
                         : std::optional(std::string(cf == it ? "" : "differs from iterated conjugate; ") +
                                         (entries_in_t_polynomials(cf) ? "" : "entries outside F2[t]; ") +
                                         ((f[0] + f[1] + f[2]).is_zero() ? "" : "f0+f1+f2 != 0"))));
  }
}

inline void suite_powers(RunReport& r, const Options& o) {
  check_m(o.m, 2, 8);
  const int K = o.kmax < 0 ? 50 : o.kmax;
  const auto checks = power_identities(CliffordAlgebra::standard(o.m), K);
  std::vector<std::string> uv, vu, main;
  for (const auto& c : checks) {
    if (!c.uv_ok) uv.push_back(std::to_string(c.seq.k));
    if (!c.vu_ok) vu.push_back(std::to_string(c.seq.k));
    if (!c.main_ok) main.push_back(std::to_string(c.seq.k));
  }
  const std::string range = "k=0.." + std::to_string(K);
  add(r, make_check("(u.v_i)^k=a_k+b_k.u.v_i", uv.empty(), range, std::nullopt, uv.empty() ? std::nullopt : std::optional("fails at k=" + join(uv))));
  add(r, make_check("(v_i.u)^k=a_k+b_k.v_i.u", vu.empty(), range, std::nullopt, vu.empty() ? std::nullopt : std::optional("fails at k=" + join(vu))));
  add(r, make_check("(v1.u)^k(v2.u)^k=(u.v2)^k(u.v1)^k", main.empty(), range, std::nullopt,
                    main.empty() ? std::nullopt : std::optional("fails at k=" + join(main))));
  if (K >= 2) {
    add(r, expect_eq("a_2", "s^-2", checks[2].seq.a.to_string()));
    add(r, expect_eq("b_2", "1", checks[2].seq.b.to_string()));
  }
}

inline void suite_basis(RunReport& r, const Options& o) {
  check_m(o.m, 3, 7);
  const auto alg = CliffordAlgebra::standard(o.m);
  const auto eig = check_eigenvector(alg);
  add(r, make_check("w.psi(a)=alpha.w", eig.a_eigen));
  add(r, make_check("w.psi(s1)=w", eig.s1_fixed));
  add(r, make_check("w.s.u.v2=alpha^-1.w", eig.uv2_eigen));
  const WBasis X = basis(alg, BasisFlavor::X);
  const WBasis Y = basis(alg, BasisFlavor::Y);
  const EtaRep eta(o.m);
  add(r, expect_eq("basis_size", std::to_string(1 << (o.m - 2)), std::to_string(X.elements.size())));
  const auto ind = independence_certificate(X.elements);
  std::string attempts;
  for (const auto& [n, rank] : ind.attempts) attempts += (attempts.empty() ? "" : ", ") + ("n=" + std::to_string(n) + " rank " + std::to_string(rank));
  add(r, make_check("X_independent", ind.certified, "certified", ind.certified ? "certified" : "inconclusive", attempts));
  for (const Gen& g : y_generators(o.m)) {
    const auto a = verify_action(X, eta, g);
    add(r, make_check("action_" + to_string(Word{g}), a.ok, std::nullopt, std::nullopt,
                      a.ok ? std::nullopt : std::optional(a.witness)));
  }
  add(r, make_check("X_Y_same_span", same_span(X, Y, eta)));
  add(r, make_check("eta(a)_parity_rule", parity_rule_holds(X, eta)));
  Json labels = Json::array();
  for (const auto& w : X.words) labels.push_back(word_label(w));
  r.data = Json{{"X", labels}};
}

inline void suite_extended(RunReport& r, const Options& o) {
  check_m(o.m, 3, 6);
  const auto rep = verify_extended_action(o.m);
  add(r, make_check("X_union_Xu_independent", rep.independence.certified));
  for (const auto& [name, a] : rep.actions) {
    add(r, make_check("block_action_" + name, a.ok, std::nullopt, std::nullopt, a.ok ? std::nullopt : std::optional(a.witness)));
  }
}

inline void suite_center(RunReport& r, const Options& o) {
  check_m(o.m, 3, 8);
  const EvalMap map = make_eval_map(o.n);
  const auto c = center_candidates(o.m, map);
  add(r, make_check("1_central", c.one_central));
  if (o.m % 2 == 0) {
    add(r, make_check("r_central", c.r_central));
  } else {
    add(r, make_check("r_not_central", !c.r_central));
  }
  add(r, expect_eq("specialized_center_dimension", std::to_string(c.expected_dimension), std::to_string(c.specialized_dimension)));
  if (o.m % 2 == 0) {
    const auto alg = CliffordAlgebra::standard(o.m);
    for (const auto& lambda : {LaurentScalar::one(), LaurentScalar::s()}) {
      const auto k = check_kernel_element(alg, lambda);
      const std::string tag = "kernel_lambda=" + lambda.to_string();
      add(r, make_check(tag + "_norm_1", k.norm_one));
      add(r, make_check(tag + "_acts_trivially", k.acts_trivially));
      add(r, make_check(tag + "_z_not_1", k.nontrivial, std::nullopt, std::nullopt, k.z.to_string()));
    }
  }
}

inline void run_decompose(RunReport& r, const Options& o) {
  if (o.rank < 2 || o.rank > 63) throw Error(Errc::BadParams, "--rank must lie in 2..63");
  const QuadSpace V(o.rank - 1);
  const auto d = hyperbolic_decompose(V);
  const auto bad = decomposition_violations(V, d);
  add(r, make_check("invariants", bad.empty(), std::nullopt, std::nullopt, bad.empty() ? std::nullopt : std::optional(join(bad))));
  const auto& table = decomposition_state_table();
  bool periodic = true;
  for (std::size_t i = 0; i < d.steps.size(); ++i) {
    const auto& want = table[i % 4];
    const auto& got = d.steps[i];
    periodic = periodic && got.q0 == want.q0 && got.q1 == want.q1 && got.q2 == want.q2 && got.alpha == want.alpha && got.beta == want.beta;
  }
  add(r, make_check("state_table_period_4", periodic));
  const int expected_pairs = o.rank <= 3 ? 0 : (o.rank - 2) / 2;
  add(r, expect_eq("pairs", std::to_string(expected_pairs), std::to_string(d.pairs.size())));
  add(r, expect_eq("residual_rank", std::to_string(o.rank - 2 * expected_pairs), std::to_string(d.residual.size())));
  auto vec = [&](const LVec& v) {
    std::string s;
    for (int i = 0; i < V.rank(); ++i) {
      if (!v[static_cast<std::size_t>(i)].is_one()) continue;
      s += (s.empty() ? "" : "+") + (i == 0 ? std::string("u") : "v" + std::to_string(i));
    }
    return s.empty() ? std::string("0") : s;
  };
  Json pairs = Json::array();
  for (const auto& [e, f] : d.pairs) pairs.push_back(Json{{"e", vec(e)}, {"f", vec(f)}});
  Json residual = Json::array();
  for (const auto& x : d.residual) residual.push_back(vec(x));
  Json steps = Json::array();
  for (const auto& s : d.steps) {
    steps.push_back(Json{{"q0", s.q0.to_string()}, {"q1", s.q1.to_string()}, {"q2", s.q2.to_string()}, {"alpha", s.alpha}, {"beta", s.beta}});
  }
  r.data = Json{{"pairs", pairs}, {"residual", residual}, {"steps", steps}};
}

inline void run_specialize(RunReport& r, const Options& o) {
  check_m(o.m, 3, 12);
  TableOptions opt;
  opt.cap = o.cap;
  opt.threads = o.threads;
  opt.enumerate = o.enumerate;
  const auto g = table1_check(o.m, o.n, opt);
  r.checks = g.checks;
  for (const auto& c : g.checks) {
    if (c.status == Status::Skip && c.detail && c.detail->find("cap") != std::string::npos) r.cap_hit = true;
  }
  Json data;
  data["field"] = g.field;
  data["orbit_reps"] = g.orbit_reps;
  data["group"] = g.group;
  data["expected_order"] = g.expected_order ? Json(*g.expected_order) : Json(nullptr);
  for (const auto& c : g.checks) {
    if (c.name == "phi_order" && c.status != Status::Skip) data["order"] = *c.actual;
  }
  r.data = std::move(data);
}

inline void run_augmentation(RunReport& r, const Options& o) {
  const auto degrees = cyclotomic_split(o.n);
  const auto reps = frobenius_orbit_representatives(o.n);
  int sum = 0;
  for (int d : degrees) sum += d;
  add(r, expect_eq("degree_sum", std::to_string(o.n - 1), std::to_string(sum)));
  add(r, expect_eq("summands_match_orbits", std::to_string(degrees.size()), std::to_string(reps.size())));
  const EvalMap map = make_eval_map(o.n);
  r.data = Json{{"degrees", degrees},
                {"orbit_reps", reps},
                {"field_degree", map.F().degree()},
                {"modulus", gf2x::to_string(map.F().modulus())},
                {"zeta", map.F().to_bits(map.zeta)}};
}

// ---------------------------------------------------------------------------

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Verification suites for the groups y(m), Y(m, n) and their representations", "ytwo"};
  app.require_subcommand(1);
  Options o;
  std::string suite;
  auto global = [&](CLI::App* sub) {
    sub->add_option("--m", o.m, "number of letters m");
    sub->add_option("--n", o.n, "odd root order n");
    sub->add_option("--kmax", o.kmax, "largest k in truncated families");
    sub->add_option("--seed", o.seed, "seed for random words");
    sub->add_option("--cap", o.cap, "largest group to enumerate");
    sub->add_flag("--json", o.json, "emit JSON");
    sub->add_option("--threads", o.threads, "worker threads (YTWO_THREADS overrides)");
    sub->add_flag("--no-timing", o.no_timing, "report elapsed_ms as 0");
  };
  auto* verify = app.add_subcommand("verify", "run an exact verification suite");
  verify->add_option("suite", suite, "relations|lifting|closed-form|powers|basis|center|extended")
      ->required()
      ->check(CLI::IsMember({"relations", "lifting", "closed-form", "powers", "basis", "center", "extended"}));
  verify->add_option("--rep", o.rep, "phi|psi|eta|both|all")->check(CLI::IsMember({"phi", "psi", "eta", "both", "all"}));
  verify->add_option("--words", o.words, "random words in the lifting suite");
  verify->add_option("--max-len", o.max_len, "longest random word");
  global(verify);
  auto* decompose = app.add_subcommand("decompose", "hyperbolic splitting of V");
  decompose->add_option("--rank", o.rank, "rank of V");
  global(decompose);
  auto* spec = app.add_subcommand("specialize", "reduce modulo the augmentation ideal and check a small case");
  spec->add_flag("--enumerate", o.enumerate, "enumerate the group generated by the b_i");
  global(spec);
  auto* aug = app.add_subcommand("augmentation", "field summands of the augmentation ideal of GF(2)C_n");
  global(aug);

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kUsage;
  }
  if (const char* env = std::getenv("YTWO_THREADS")) {
    try {
      o.threads = std::stoi(env);
    } catch (const std::exception&) {
      err << "error: YTWO_THREADS must be an integer\n";
      return kUsage;
    }
  }

  RunReport r;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    if (verify->parsed()) {
      r.command = "verify " + suite;
      r.params["m"] = o.m;
      if (suite == "center") r.params["n"] = o.n;
      if (suite == "relations" || suite == "closed-form" || suite == "powers") {
        r.params["kmax"] = o.kmax >= 0 ? o.kmax : (suite == "powers" ? 50 : 20);
      }
      if (suite == "relations") r.params["rep"] = o.rep;
      if (suite == "lifting") {
        r.params["seed"] = o.seed;
        r.params["words"] = o.words;
        r.params["max_len"] = o.max_len;
      }
      if (suite == "relations") suite_relations(r, o);
      if (suite == "lifting") suite_lifting(r, o);
      if (suite == "closed-form") suite_closed_form(r, o);
      if (suite == "powers") suite_powers(r, o);
      if (suite == "basis") suite_basis(r, o);
      if (suite == "center") suite_center(r, o);
      if (suite == "extended") suite_extended(r, o);
    } else if (decompose->parsed()) {
      r.command = "decompose";
      r.params["rank"] = o.rank;
      run_decompose(r, o);
    } else if (spec->parsed()) {
      r.command = "specialize";
      r.params["m"] = o.m;
      r.params["n"] = o.n;
      r.params["enumerate"] = o.enumerate;
      r.params["cap"] = o.cap;
      run_specialize(r, o);
    } else if (aug->parsed()) {
      r.command = "augmentation";
      r.params["n"] = o.n;
      run_augmentation(r, o);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.code() == Errc::CapExceeded ? kCap : kUsage;
  }
  if (!o.no_timing) {
    r.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
  }
  out << (o.json ? r.to_json().dump(2) + "\n" : r.to_text());
  return r.exit_code();
}

}  // namespace ytwo::cli

#endif  // YTWO_TOOLS_CLI_HPP
