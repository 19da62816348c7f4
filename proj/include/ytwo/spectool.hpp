#ifndef YTWO_SPECTOOL_HPP
#define YTWO_SPECTOOL_HPP

// Reduction of phi and eta modulo the augmentation ideal of GF(2)C_n, order
// enumeration of the resulting finite matrix groups, and the small cases of
// Y(m, n) with their expected orthogonal group orders.

#include <algorithm>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <thread>
#include <unordered_set>
#include <vector>

#include "ytwo/ffmatrix.hpp"
#include "ytwo/ortho_rep.hpp"
#include "ytwo/sidki_rep.hpp"

namespace ytwo {

enum class RepKind { Phi, Eta };

inline std::string_view rep_name(RepKind k) { return k == RepKind::Phi ? "phi" : "eta"; }

/// An element of GL over the product of the field summands: one matrix per block.
struct BlockElement {
  std::vector<FFMatrix> blocks;

  BlockElement mul(const BlockElement& o, const FiniteField& F) const {
    BlockElement z;
    z.blocks.reserve(blocks.size());
    for (std::size_t i = 0; i < blocks.size(); ++i) z.blocks.push_back(blocks[i].mul(o.blocks[i], F));
    return z;
  }

  bool is_identity() const {
    return std::all_of(blocks.begin(), blocks.end(), [](const FFMatrix& b) { return b.is_identity(); });
  }

  std::string encode(int bits) const {
    std::string out;
    for (const auto& b : blocks) b.append_bytes(out, bits);
    return out;
  }

  friend bool operator==(const BlockElement&, const BlockElement&) = default;
};

struct SpecializedRep {
  int m = 0;
  int n = 0;
  RepKind kind = RepKind::Phi;
  std::shared_ptr<const FiniteField> field;
  std::vector<int> orbit_reps;  // block j evaluates alpha at zeta^j
  std::vector<EvalMap> maps;
  // generator images, indexed like PhiRep/EtaRep letters
  BlockElement a, a_inv, tau;
  std::vector<BlockElement> s, s_tilde;  // index i-1
  std::vector<BlockElement> b;           // images of b_1..b_m
  bool has_tau = false;

  const FiniteField& F() const { return *field; }
  int bits() const { return field->degree(); }
  const EvalMap& primary_map() const { return maps.front(); }

  BlockElement identity() const {
    BlockElement e;
    for (const auto& blk : a.blocks) e.blocks.push_back(FFMatrix::identity(blk.rows()));
    return e;
  }

  const BlockElement& image(const Gen& g) const {
    check_gen(g, m);
    switch (g.letter) {
      case Letter::A: return a;
      case Letter::AInv: return a_inv;
      case Letter::S: return s[static_cast<std::size_t>(g.index - 1)];
      case Letter::Tau:
        if (!has_tau) throw Error(Errc::Unsupported, "tau has no image here");
        return tau;
      case Letter::STilde:
        if (!has_tau) throw Error(Errc::Unsupported, "s~ has no image here");
        return s_tilde[static_cast<std::size_t>(g.index - 1)];
    }
    return a;
  }

  /// Words with tau letters are rewritten first when tau has no image.
  BlockElement evaluate(const Word& w) const {
    const Word word = has_tau ? w : eliminate_tau(w);
    BlockElement acc = identity();
    for (const Gen& g : word) acc = acc.mul(image(g), F());
    return acc;
  }
};

/// One map per orbit of j -> 2j on (Z/n) \ {0}, all into GF(2^ord_n(2)).
inline std::vector<EvalMap> augmentation_maps(int n, std::vector<int>* reps_out = nullptr,
                                              std::optional<gf2x::Poly> modulus = std::nullopt) {
  const EvalMap base = make_eval_map(n, modulus);
  std::vector<EvalMap> maps;
  const auto reps = frobenius_orbit_representatives(n);
  for (int j : reps) maps.push_back(eval_map_from_root(base.field, base.F().pow(base.zeta, j)));
  if (reps_out) *reps_out = reps;
  return maps;
}

template <class S>
BlockElement specialize_blocks(const RMatrix<S>& M, const std::vector<EvalMap>& maps) {
  BlockElement e;
  for (const auto& map : maps) e.blocks.push_back(specialize_matrix(M, map));
  return e;
}

inline SpecializedRep specialize(int m, int n, RepKind kind, std::optional<gf2x::Poly> modulus = std::nullopt) {
  if (m < 3) throw Error(Errc::BadM, "m must be >= 3");
  SpecializedRep rep;
  rep.m = m;
  rep.n = n;
  rep.kind = kind;
  rep.maps = augmentation_maps(n, &rep.orbit_reps, modulus);
  rep.field = rep.maps.front().field;
  if (kind == RepKind::Phi) {
    const PhiRep phi(m);
    rep.has_tau = true;
    rep.a = specialize_blocks(phi.image(Gen::a()), rep.maps);
    rep.a_inv = specialize_blocks(phi.image(Gen::a_inv()), rep.maps);
    rep.tau = specialize_blocks(phi.image(Gen::tau()), rep.maps);
    for (int i = 1; i < m; ++i) {
      rep.s.push_back(specialize_blocks(phi.image(Gen::s(i)), rep.maps));
      rep.s_tilde.push_back(specialize_blocks(phi.image(Gen::s_tilde(i)), rep.maps));
    }
  } else {
    const EtaRep eta(m);
    rep.a = specialize_blocks(eta.image(Gen::a()), rep.maps);
    rep.a_inv = specialize_blocks(eta.image(Gen::a_inv()), rep.maps);
    for (int i = 1; i < m; ++i) rep.s.push_back(specialize_blocks(eta.image(Gen::s(i)), rep.maps));
  }
  for (int i = 1; i <= m; ++i) rep.b.push_back(rep.evaluate(b_word(i, m)));
  return rep;
}

/// Names of relators of the matching flavor that fail after specialization.
inline std::vector<std::string> failing_relators(const SpecializedRep& rep, int K) {
  std::vector<std::string> bad;
  const Flavor f = rep.has_tau ? Flavor::y_tilde : Flavor::y;
  for (const auto& r : schedule(rep.m, K, f).relators) {
    if (!rep.evaluate(r.word).is_identity()) bad.push_back(r.name);
  }
  return bad;
}

/// Multiplicative order, or nullopt past the limit.
inline std::optional<long long> element_order(const BlockElement& g, const FiniteField& F, long long limit = 100000) {
  BlockElement x = g;
  for (long long k = 1; k <= limit; ++k) {
    if (x.is_identity()) return k;
    x = x.mul(g, F);
  }
  return std::nullopt;
}

/// Order of the group generated, by breadth-first closure under right
/// multiplication. Throws CapExceeded past cap elements.
inline std::uint64_t group_order_bfs(const std::vector<BlockElement>& gens, const FiniteField& F, std::uint64_t cap,
                                     int threads = 1) {
  if (gens.empty()) return 1;
  const int bits = F.degree();
  BlockElement id;
  for (const auto& blk : gens.front().blocks) id.blocks.push_back(FFMatrix::identity(blk.rows()));
  std::unordered_set<std::string> seen;
  seen.insert(id.encode(bits));
  std::vector<BlockElement> frontier{id};
  threads = std::max(1, threads);
  while (!frontier.empty()) {
    // products in frontier-major, generator-minor order; each worker fills its own slots
    std::vector<BlockElement> products(frontier.size() * gens.size());
    auto work = [&](std::size_t lo, std::size_t hi) {
      for (std::size_t i = lo; i < hi; ++i) {
        for (std::size_t g = 0; g < gens.size(); ++g) products[i * gens.size() + g] = frontier[i].mul(gens[g], F);
      }
    };
    if (threads == 1 || frontier.size() < 256) {
      work(0, frontier.size());
    } else {
      std::vector<std::thread> pool;
      const std::size_t chunk = (frontier.size() + static_cast<std::size_t>(threads) - 1) / static_cast<std::size_t>(threads);
      for (std::size_t lo = 0; lo < frontier.size(); lo += chunk) {
        pool.emplace_back(work, lo, std::min(frontier.size(), lo + chunk));
      }
      for (auto& t : pool) t.join();
    }
    std::vector<BlockElement> next;
    for (auto& p : products) {
      if (seen.insert(p.encode(bits)).second) {
        if (seen.size() > cap) {
          throw Error(Errc::CapExceeded, "group has more than " + std::to_string(cap) + " elements");
        }
        next.push_back(std::move(p));
      }
    }
    frontier = std::move(next);
  }
  return seen.size();
}

/// rank(M + 1) mod 2
inline int dickson(const FFMatrix& M, const FiniteField& F) { return ff_rank(M.plus_identity(), F) % 2; }

struct DicksonValue {
  int value = 0;
  bool caveat = false;  // even m: the form is degenerate and the value is not an invariant
};

inline DicksonValue dickson(const FFMatrix& M, const FiniteField& F, int m) { return {dickson(M, F), m % 2 == 0}; }

/// Nullity of the all-ones alternating Gram matrix of rank m+1.
inline int radical_rank(int m) {
  FFMatrix G(m + 1, m + 1);
  for (int i = 0; i <= m; ++i) {
    for (int j = 0; j <= m; ++j) G(i, j) = i == j ? 0 : 1;
  }
  return m + 1 - ff_rank(std::move(G), FiniteField(0b10));
}

/// Degree over GF(2) of the field generated by x.
inline int generated_subfield_degree(FFElement x, const FiniteField& F) {
  for (int k = 1; k <= F.degree(); ++k) {
    if (F.degree() % k == 0 && F.in_subfield(x, k)) return k;
  }
  return F.degree();
}

inline bool entries_in_subfield(const BlockElement& e, const FiniteField& F, int k) {
  for (const auto& blk : e.blocks) {
    for (int i = 0; i < blk.rows(); ++i) {
      for (int j = 0; j < blk.cols(); ++j) {
        if (!F.in_subfield(blk(i, j), k)) return false;
      }
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Orthogonal group orders and the table of small cases

using Order = unsigned __int128;

inline std::string to_string(Order x) {
  if (x == 0) return "0";
  std::string out;
  while (x) {
    out.push_back(static_cast<char>('0' + static_cast<int>(x % 10)));
    x /= 10;
  }
  std::reverse(out.begin(), out.end());
  return out;
}

inline Order ipow(Order b, int e) {
  Order r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

/// |Omega^eps(2k, q)| = q^{k(k-1)} (q^k - eps) prod_{i<k} (q^{2i} - 1)
inline Order omega_even_order(int k, int q, int eps) {
  Order r = ipow(static_cast<Order>(q), k * (k - 1));
  r *= eps > 0 ? ipow(static_cast<Order>(q), k) - 1 : ipow(static_cast<Order>(q), k) + 1;
  for (int i = 1; i < k; ++i) r *= ipow(static_cast<Order>(q), 2 * i) - 1;
  return r;
}

/// |Omega(2k+1, q)| = q^{k^2} prod_{i<=k} (q^{2i} - 1)
inline Order omega_odd_order(int k, int q) {
  Order r = ipow(static_cast<Order>(q), k * k);
  for (int i = 1; i <= k; ++i) r *= ipow(static_cast<Order>(q), 2 * i) - 1;
  return r;
}

struct SmallCase {
  int m;
  int n;
  std::string group;
  Order order;
};

/// The known small quotients Y(m, n) and their orders.
inline const std::vector<SmallCase>& small_cases() {
  static const std::vector<SmallCase> rows = [] {
    const Order q4_6 = ipow(4, 6), q8_6 = ipow(8, 6), q4_10 = ipow(4, 10);
    return std::vector<SmallCase>{
        {3, 5, "SL_2(16) = Omega^-(4,4)", omega_even_order(2, 4, -1)},
        {3, 7, "Omega^+(4,8)", omega_even_order(2, 8, +1)},
        {4, 5, "Omega(5,4)", omega_odd_order(2, 4)},
        {4, 7, "Omega(5,8)", omega_odd_order(2, 8)},
        {5, 5, "Omega^-(6,4)", omega_even_order(3, 4, -1)},
        {5, 7, "Omega^+(6,8)", omega_even_order(3, 8, +1)},
        {6, 5, "4^6:Omega^-(6,4)", q4_6 * omega_even_order(3, 4, -1)},
        {6, 7, "8^6:Omega^+(6,8)", q8_6 * omega_even_order(3, 8, +1)},
        {7, 5, "Omega^-(8,4)", omega_even_order(4, 4, -1)},
        {8, 5, "Omega(9,4)", omega_odd_order(4, 4)},
        {9, 5, "Omega^-(10,4)", omega_even_order(5, 4, -1)},
        {10, 5, "4^10:Omega^-(10,4)", q4_10 * omega_even_order(5, 4, -1)},
        {3, 11, "Omega^-(4,32)", omega_even_order(2, 32, -1)},
        {4, 11, "Omega(5,32)", omega_odd_order(2, 32)},
        {5, 11, "Omega^-(6,32)", omega_even_order(3, 32, -1)},
    };
  }();
  return rows;
}

inline const SmallCase* find_small_case(int m, int n) {
  for (const auto& r : small_cases()) {
    if (r.m == m && r.n == n) return &r;
  }
  return nullptr;
}

// ---------------------------------------------------------------------------
// Reports

enum class Status { Pass, Fail, Skip };

inline std::string_view status_name(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Skip: return "skip";
  }
  return "?";
}

struct CheckResult {
  std::string name;
  Status status = Status::Pass;
  std::optional<std::string> expected;
  std::optional<std::string> actual;
  std::optional<std::string> detail;
};

inline CheckResult make_check(std::string name, bool ok, std::optional<std::string> expected = std::nullopt,
                              std::optional<std::string> actual = std::nullopt,
                              std::optional<std::string> detail = std::nullopt) {
  return {std::move(name), ok ? Status::Pass : Status::Fail, std::move(expected), std::move(actual), std::move(detail)};
}

inline CheckResult expect_eq(std::string name, const std::string& expected, const std::string& actual) {
  return make_check(std::move(name), expected == actual, expected, actual);
}

struct GroupReport {
  int m = 0;
  int n = 0;
  std::string field;               // GF(2^D) with its modulus
  std::vector<int> orbit_reps;
  std::string group;               // name of the expected group, if known
  std::optional<std::string> expected_order;
  std::vector<CheckResult> checks;

  Status status() const {
    bool any_pass = false;
    for (const auto& c : checks) {
      if (c.status == Status::Fail) return Status::Fail;
      any_pass = any_pass || c.status == Status::Pass;
    }
    return any_pass ? Status::Pass : Status::Skip;
  }
};

struct TableOptions {
  std::uint64_t cap = 2000000;
  int threads = 1;
  int relator_k = 10;
  bool enumerate = true;
  int max_eta_m = 8;  // eta relator checks need 2^{m-2}-square products
};

inline GroupReport table1_check(int m, int n, const TableOptions& opt = {}) {
  GroupReport rep;
  rep.m = m;
  rep.n = n;
  const SpecializedRep phi = specialize(m, n, RepKind::Phi);
  rep.field = "GF(2^" + std::to_string(phi.F().degree()) + ") mod " + gf2x::to_string(phi.F().modulus());
  rep.orbit_reps = phi.orbit_reps;
  const SmallCase* known = find_small_case(m, n);
  if (known) {
    rep.group = known->group;
    rep.expected_order = to_string(known->order);
  }
  const std::string ns = std::to_string(n);

  auto bad = failing_relators(phi, opt.relator_k);
  rep.checks.push_back(make_check("phi_relators_K" + std::to_string(opt.relator_k), bad.empty(), "0 failing",
                                  std::to_string(bad.size()) + " failing", bad.empty() ? std::nullopt : std::optional(bad.front())));

  const auto a_order = element_order(phi.a, phi.F());
  rep.checks.push_back(expect_eq("phi_a_order", ns, a_order ? std::to_string(*a_order) : "none"));
  for (int i = 0; i < m; ++i) {
    const auto o = element_order(phi.b[static_cast<std::size_t>(i)], phi.F());
    rep.checks.push_back(expect_eq("phi_b" + std::to_string(i + 1) + "_order", ns, o ? std::to_string(*o) : "none"));
  }

  const int t_degree = generated_subfield_degree(phi.primary_map().t_image, phi.F());
  bool sub = true;
  for (const Gen& g : y_generators(m)) sub = sub && entries_in_subfield(phi.image(g), phi.F(), t_degree);
  rep.checks.push_back(make_check("phi_entries_in_GF(2^" + std::to_string(t_degree) + ")", sub));

  const int rad = radical_rank(m);
  rep.checks.push_back(expect_eq("radical_rank", m % 2 == 0 ? "1" : "0", std::to_string(rad)));
  if (m % 2 == 0) {
    const QuadSpace V(m);
    const FFElement qr = eval_apply(phi.primary_map(), V.q(V.all_ones()));
    rep.checks.push_back(expect_eq("q(r)", m % 4 == 0 ? "1" : "0", std::to_string(qr)));
  }

  // Dickson invariant on the primary block: 1 on transvections, 0 on y(m)
  const bool caveat = m % 2 == 0;
  const FiniteField& F = phi.F();
  auto dk = [&](const BlockElement& e) { return dickson(e.blocks.front(), F); };
  bool dk_ok = dk(phi.tau) == 1 && dk(phi.a) == 0;
  for (int i = 0; i < m - 1; ++i) dk_ok = dk_ok && dk(phi.s_tilde[static_cast<std::size_t>(i)]) == 1 && dk(phi.s[static_cast<std::size_t>(i)]) == 0;
  if (caveat) {
    rep.checks.push_back({"dickson_generators", Status::Skip, "tau,s~=1; a,s=0", dk_ok ? "tau,s~=1; a,s=0" : "differs",
                          "degenerate form for even m; value reported only"});
  } else {
    rep.checks.push_back(make_check("dickson_generators", dk_ok, "tau,s~=1; a,s=0", dk_ok ? "tau,s~=1; a,s=0" : "differs"));
  }

  std::optional<SpecializedRep> eta;
  if (m <= opt.max_eta_m) {
    eta = specialize(m, n, RepKind::Eta);
    auto ebad = failing_relators(*eta, opt.relator_k);
    rep.checks.push_back(make_check("eta_relators_K" + std::to_string(opt.relator_k), ebad.empty(), "0 failing",
                                    std::to_string(ebad.size()) + " failing",
                                    ebad.empty() ? std::nullopt : std::optional(ebad.front())));
    const auto eo = element_order(eta->a, eta->F());
    rep.checks.push_back(expect_eq("eta_a_order", ns, eo ? std::to_string(*eo) : "none"));
  } else {
    rep.checks.push_back({"eta_relators_K" + std::to_string(opt.relator_k), Status::Skip, std::nullopt, std::nullopt,
                          "eta has dimension 2^" + std::to_string(m - 2)});
  }

  if (!opt.enumerate) return rep;
  const bool within = known && known->order <= static_cast<Order>(opt.cap);
  if (!within) {
    const std::string why = known ? "expected order " + to_string(known->order) + " exceeds cap " + std::to_string(opt.cap)
                                  : "no expected order";
    rep.checks.push_back({"phi_order", Status::Skip, rep.expected_order, std::nullopt, why});
    rep.checks.push_back({"eta_order", Status::Skip, rep.expected_order, std::nullopt, why});
    return rep;
  }
  auto enumerate = [&](const std::string& name, const SpecializedRep& r) -> std::optional<std::uint64_t> {
    try {
      const std::uint64_t order = group_order_bfs(r.b, r.F(), opt.cap, opt.threads);
      rep.checks.push_back(expect_eq(name, *rep.expected_order, std::to_string(order)));
      return order;
    } catch (const Error& e) {
      if (e.code() != Errc::CapExceeded) throw;
      rep.checks.push_back({name, Status::Skip, rep.expected_order, std::nullopt, e.what()});
      return std::nullopt;
    }
  };
  const auto po = enumerate("phi_order", phi);
  std::optional<std::uint64_t> eo;
  if (eta) eo = enumerate("eta_order", *eta);
  if (po && eo) rep.checks.push_back(expect_eq("phi_eta_orders_agree", std::to_string(*po), std::to_string(*eo)));
  return rep;
}

}  // namespace ytwo

#endif  // YTWO_SPECTOOL_HPP
