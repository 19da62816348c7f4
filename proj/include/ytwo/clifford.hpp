#ifndef YTWO_CLIFFORD_HPP
#define YTWO_CLIFFORD_HPP

// Cl(V, q) over GF(2)[s, s^-1] (or its alpha extension), the lifting psi of
// phi into the pin group, the action map pi, spinor norms, center and kernel.

#include <bit>
#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ytwo/ffmatrix.hpp"
#include "ytwo/presentation.hpp"
#include "ytwo/qe_scalar.hpp"
#include "ytwo/quadspace.hpp"

namespace ytwo {

/// A monomial is a bitmask over the ordered generators x_0 = u < x_1 = v_1 < ... < x_m = v_m.
using Monomial = std::uint32_t;

/// Structure constants of Cl(V, q) for the all-ones Gram matrix.
class CliffordAlgebra {
 public:
  using Terms = std::vector<std::pair<Monomial, LaurentScalar>>;

  static constexpr int kMaxGenerators = 12;

  explicit CliffordAlgebra(QuadSpace space) : space_(std::move(space)) {
    gens_ = space_.rank();
    if (gens_ > kMaxGenerators) throw Error(Errc::BadM, "Clifford algebra limited to m <= " + std::to_string(kMaxGenerators - 1));
    dim_ = Monomial{1} << gens_;
    build_right_table();
    build_transpose_table();
    products_.resize(static_cast<std::size_t>(dim_) * dim_);
  }

  static std::shared_ptr<const CliffordAlgebra> standard(int m) {
    return std::make_shared<const CliffordAlgebra>(QuadSpace(m));
  }

  int m() const noexcept { return gens_ - 1; }
  int generators() const noexcept { return gens_; }
  Monomial dim() const noexcept { return dim_; }
  const QuadSpace& space() const noexcept { return space_; }

  /// M * x_j
  const Terms& right_gen(Monomial M, int j) const {
    return right_[static_cast<std::size_t>(M) * static_cast<std::size_t>(gens_) + static_cast<std::size_t>(j)];
  }

  /// (x_{i1} ... x_{ik})^tr = x_{ik} ... x_{i1}
  const Terms& transpose(Monomial M) const { return transpose_[M]; }

  /// M * N, computed on first use.
  const Terms& product(Monomial M, Monomial N) const {
    const std::size_t key = static_cast<std::size_t>(M) * dim_ + N;
    std::lock_guard<std::mutex> lock(mutex_);
    auto& slot = products_[key];
    if (!slot) {
      Terms cur{{M, LaurentScalar::one()}};
      for (int j = 0; j < gens_; ++j) {
        if ((N >> j) & 1U) cur = times_gen(cur, j);
      }
      slot = std::move(cur);
    }
    return *slot;
  }

  bool same_as(const CliffordAlgebra& o) const {
    if (this == &o) return true;
    if (gens_ != o.gens_) return false;
    for (int i = 0; i < gens_; ++i) {
      if (!(space_.q_basis(i) == o.space_.q_basis(i))) return false;
    }
    return true;
  }

  std::string monomial_name(Monomial M) const {
    if (M == 0) return "1";
    std::string out;
    for (int j = 0; j < gens_; ++j) {
      if (!((M >> j) & 1U)) continue;
      if (!out.empty()) out += '.';
      out += j == 0 ? std::string("u") : "v" + std::to_string(j);
    }
    return out;
  }

 private:
  Terms times_gen(const Terms& x, int j) const {
    std::vector<LaurentScalar> acc(dim_);
    std::vector<Monomial> touched;
    for (const auto& [M, c] : x) {
      for (const auto& [P, d] : right_gen(M, j)) {
        if (acc[P].is_zero()) touched.push_back(P);
        acc[P] += c * d;
      }
    }
    Terms out;
    for (Monomial P : touched) {
      if (!acc[P].is_zero()) out.emplace_back(P, std::move(acc[P]));
      acc[P] = {};
    }
    return out;
  }

  void build_right_table() {
    right_.resize(static_cast<std::size_t>(dim_) * static_cast<std::size_t>(gens_));
    const LaurentScalar one = LaurentScalar::one();
    for (Monomial M = 0; M < dim_; ++M) {
      for (int j = 0; j < gens_; ++j) {
        Terms& cell = right_[static_cast<std::size_t>(M) * static_cast<std::size_t>(gens_) + static_cast<std::size_t>(j)];
        if (M == 0) {
          cell = {{Monomial{1} << j, one}};
          continue;
        }
        const int last = 31 - std::countl_zero(M);
        const Monomial rest = M & ~(Monomial{1} << last);
        if (last < j) {
          cell = {{M | (Monomial{1} << j), one}};
        } else if (last == j) {
          cell = {{rest, space_.q_basis(j)}};
        } else {
          // rest x_last x_j = (rest x_j) x_last + (x_j, x_last) rest
          for (const auto& [P, c] : right_gen(rest, j)) cell.emplace_back(P | (Monomial{1} << last), c);
          cell.emplace_back(rest, one);
        }
      }
    }
  }

  void build_transpose_table() {
    transpose_.resize(dim_);
    for (Monomial M = 0; M < dim_; ++M) {
      Terms cur{{0, LaurentScalar::one()}};
      for (int j = gens_ - 1; j >= 0; --j) {
        if ((M >> j) & 1U) cur = times_gen(cur, j);
      }
      transpose_[M] = std::move(cur);
    }
  }

  QuadSpace space_;
  int gens_ = 0;
  Monomial dim_ = 0;
  std::vector<Terms> right_;
  std::vector<Terms> transpose_;
  mutable std::mutex mutex_;
  mutable std::vector<std::optional<Terms>> products_;
};

using AlgebraPtr = std::shared_ptr<const CliffordAlgebra>;

/// Dense coefficient vector over the 2^{m+1} monomials.
template <class S>
class CliffordElement {
 public:
  using scalar_type = S;

  CliffordElement() = default;
  explicit CliffordElement(AlgebraPtr alg) : alg_(std::move(alg)), c_(alg_->dim()) {}

  static CliffordElement scalar(AlgebraPtr alg, S c) {
    CliffordElement x(std::move(alg));
    x.c_[0] = std::move(c);
    return x;
  }
  static CliffordElement one(AlgebraPtr alg) { return scalar(std::move(alg), S::one()); }
  static CliffordElement monomial(AlgebraPtr alg, Monomial M, S c = S::one()) {
    CliffordElement x(std::move(alg));
    x.c_.at(M) = std::move(c);
    return x;
  }
  static CliffordElement generator(AlgebraPtr alg, int j) {
    if (j < 0 || j >= alg->generators()) throw Error(Errc::IndexOutOfRange, "generator " + std::to_string(j));
    return monomial(std::move(alg), Monomial{1} << j);
  }
  /// sum_i x_i e_i for a coordinate vector on u, v_1..v_m.
  template <class T>
  static CliffordElement vector(AlgebraPtr alg, const Vec<T>& v) {
    if (static_cast<int>(v.size()) != alg->generators()) throw Error(Errc::BadParams, "vector length mismatch");
    CliffordElement x(std::move(alg));
    for (std::size_t i = 0; i < v.size(); ++i) x.c_[Monomial{1} << i] = S(v[i]);
    return x;
  }

  const AlgebraPtr& algebra() const noexcept { return alg_; }
  const S& coeff(Monomial M) const { return c_.at(M); }
  S& coeff(Monomial M) { return c_.at(M); }

  std::vector<std::pair<Monomial, S>> terms() const {
    std::vector<std::pair<Monomial, S>> out;
    for (Monomial M = 0; M < c_.size(); ++M) {
      if (!c_[M].is_zero()) out.emplace_back(M, c_[M]);
    }
    return out;
  }

  std::size_t term_count() const {
    std::size_t n = 0;
    for (const auto& c : c_) n += c.is_zero() ? 0 : 1;
    return n;
  }

  bool is_zero() const {
    for (const auto& c : c_) {
      if (!c.is_zero()) return false;
    }
    return true;
  }
  bool is_scalar() const {
    for (Monomial M = 1; M < c_.size(); ++M) {
      if (!c_[M].is_zero()) return false;
    }
    return true;
  }
  bool is_vector() const {
    for (Monomial M = 0; M < c_.size(); ++M) {
      if (std::popcount(M) != 1 && !c_[M].is_zero()) return false;
    }
    return true;
  }
  /// All terms of even (parity 0) or odd (parity 1) length.
  bool is_homogeneous(int parity) const {
    for (Monomial M = 0; M < c_.size(); ++M) {
      if (std::popcount(M) % 2 != parity && !c_[M].is_zero()) return false;
    }
    return true;
  }
  bool is_even() const { return is_homogeneous(0); }
  bool is_odd() const { return is_homogeneous(1); }

  Vec<S> vector_part() const {
    Vec<S> v(static_cast<std::size_t>(alg_->generators()));
    for (int i = 0; i < alg_->generators(); ++i) v[static_cast<std::size_t>(i)] = c_[Monomial{1} << i];
    return v;
  }

  template <class T>
  CliffordElement<T> cast() const {
    CliffordElement<T> out(alg_);
    for (Monomial M = 0; M < c_.size(); ++M) {
      if (!c_[M].is_zero()) out.coeff(M) = T(c_[M]);
    }
    return out;
  }

  CliffordElement& operator+=(const CliffordElement& o) {
    check_same(o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
  }
  friend CliffordElement operator+(CliffordElement x, const CliffordElement& y) {
    x += y;
    return x;
  }

  friend CliffordElement operator*(const S& a, CliffordElement x) {
    for (auto& c : x.c_) {
      if (!c.is_zero()) c = a * c;
    }
    return x;
  }

  friend CliffordElement operator*(const CliffordElement& x, const CliffordElement& y) {
    x.check_same(y);
    const CliffordAlgebra& A = *x.alg_;
    CliffordElement z(x.alg_);
    std::vector<Monomial> ys;
    for (Monomial N = 0; N < y.c_.size(); ++N) {
      if (!y.c_[N].is_zero()) ys.push_back(N);
    }
    for (Monomial M = 0; M < x.c_.size(); ++M) {
      const S& a = x.c_[M];
      if (a.is_zero()) continue;
      for (Monomial N : ys) {
        const S ab = a * y.c_[N];
        for (const auto& [P, k] : A.product(M, N)) {
          if (k.is_one()) {
            z.c_[P] += ab;
          } else {
            z.c_[P] += ab * k;
          }
        }
      }
    }
    return z;
  }

  /// Reversal anti-automorphism; it is also Clifford conjugation in characteristic 2.
  CliffordElement transpose() const {
    CliffordElement z(alg_);
    for (Monomial M = 0; M < c_.size(); ++M) {
      if (c_[M].is_zero()) continue;
      for (const auto& [P, k] : alg_->transpose(M)) z.c_[P] += c_[M] * k;
    }
    return z;
  }

  friend bool operator==(const CliffordElement& x, const CliffordElement& y) {
    return x.alg_ && y.alg_ && x.alg_->same_as(*y.alg_) && x.c_ == y.c_;
  }

  std::string to_string() const {
    std::string out;
    for (Monomial M = 0; M < c_.size(); ++M) {
      if (c_[M].is_zero()) continue;
      if (!out.empty()) out += " + ";
      const std::string coef = c_[M].to_string();
      if (M == 0) {
        out += coef;
      } else if (c_[M].is_one()) {
        out += alg_->monomial_name(M);
      } else {
        out += "(" + coef + ")" + alg_->monomial_name(M);
      }
    }
    return out.empty() ? "0" : out;
  }

 private:
  void check_same(const CliffordElement& o) const {
    if (!alg_ || !o.alg_ || !alg_->same_as(*o.alg_)) {
      throw Error(Errc::MixedAmbient, "Clifford elements from different algebras");
    }
  }

  AlgebraPtr alg_;
  std::vector<S> c_;
};

using LCliff = CliffordElement<LaurentScalar>;
using QCliff = CliffordElement<QEScalar>;

template <class S>
CliffordElement<S> cl_mul(const CliffordElement<S>& x, const CliffordElement<S>& y) {
  return x * y;
}

template <class S>
CliffordElement<S> cl_transpose(const CliffordElement<S>& x) {
  return x.transpose();
}

/// c * c^tr if it is a scalar.
template <class S>
std::optional<S> spinor_norm(const CliffordElement<S>& c) {
  const CliffordElement<S> n = c * c.transpose();
  if (!n.is_scalar()) return std::nullopt;
  return n.coeff(0);
}

inline LaurentScalar inverse_scalar(const LaurentScalar& x) { return lp_invert(x); }
inline QEScalar inverse_scalar(const QEScalar& x) {
  if (x.is_zero()) throw Error(Errc::NotUnit, "zero is not a unit");
  return x.inverse_unit();
}

/// Matrix of v -> c^-1 v c on u, v_1..v_m, rows are images.
template <class S>
RMatrix<S> pi_matrix(const CliffordElement<S>& c) {
  const CliffordElement<S> bar = c.transpose();
  const CliffordElement<S> n = c * bar;
  if (!n.is_scalar()) throw Error(Errc::NotCliffordGroup, "c * c^tr is not a scalar");
  if (n.coeff(0).is_zero()) throw Error(Errc::NotUnit, "c * c^tr = 0, c is a zero divisor");
  const CliffordElement<S> cinv = inverse_scalar(n.coeff(0)) * bar;
  const AlgebraPtr& alg = c.algebra();
  const int g = alg->generators();
  RMatrix<S> out(g);
  for (int i = 0; i < g; ++i) {
    const CliffordElement<S> img = cinv * CliffordElement<S>::generator(alg, i) * c;
    if (!img.is_vector()) {
      throw Error(Errc::NotCliffordGroup, "c^-1 " + alg->monomial_name(Monomial{1} << i) + " c is not a vector");
    }
    for (int j = 0; j < g; ++j) out(i, j) = img.coeff(Monomial{1} << j);
  }
  return out;
}

// ---------------------------------------------------------------------------
// psi: tau -> u, a -> s u v_1, s~_i -> v_i + v_{i+1}

inline LCliff psi_generator(const AlgebraPtr& alg, const Gen& g) {
  check_gen(g, alg->m());
  const LCliff u = LCliff::generator(alg, 0);
  switch (g.letter) {
    case Letter::Tau: return u;
    case Letter::A: return LaurentScalar::s() * (u * LCliff::generator(alg, 1));
    case Letter::AInv: return LaurentScalar::s() * (LCliff::generator(alg, 1) * u);
    case Letter::STilde:
    case Letter::S: {
      const LCliff w = LCliff::generator(alg, g.index) + LCliff::generator(alg, g.index + 1);
      return g.letter == Letter::S ? u * w : w;
    }
  }
  return u;
}

class PsiRep {
 public:
  using element_type = LCliff;

  explicit PsiRep(int m) : PsiRep(CliffordAlgebra::standard(m)) {}
  explicit PsiRep(AlgebraPtr alg) : alg_(std::move(alg)) {
    fixed_.push_back(psi_generator(alg_, Gen::a()));
    fixed_.push_back(psi_generator(alg_, Gen::a_inv()));
    fixed_.push_back(psi_generator(alg_, Gen::tau()));
    for (int i = 1; i < alg_->m(); ++i) {
      s_.push_back(psi_generator(alg_, Gen::s(i)));
      st_.push_back(psi_generator(alg_, Gen::s_tilde(i)));
    }
  }

  int m() const noexcept { return alg_->m(); }
  const AlgebraPtr& algebra() const noexcept { return alg_; }
  LCliff identity() const { return LCliff::one(alg_); }

  const LCliff& image(const Gen& g) const {
    check_gen(g, m());
    switch (g.letter) {
      case Letter::A: return fixed_[0];
      case Letter::AInv: return fixed_[1];
      case Letter::Tau: return fixed_[2];
      case Letter::S: return s_[static_cast<std::size_t>(g.index - 1)];
      case Letter::STilde: return st_[static_cast<std::size_t>(g.index - 1)];
    }
    return fixed_[2];
  }

 private:
  AlgebraPtr alg_;
  std::vector<LCliff> fixed_, s_, st_;
};

// ---------------------------------------------------------------------------
// Powers of u v_i

struct PowerSeq {
  int k = 0;
  LaurentScalar a;
  LaurentScalar b;
};

/// a_0 = 1, a_1 = 0, b_0 = 0, b_1 = 1, x_k = x_{k-1} + t^-1 x_{k-2}.
inline std::vector<PowerSeq> power_sequence(int kmax) {
  if (kmax < 0) throw Error(Errc::NegativeK, "k must be >= 0");
  std::vector<PowerSeq> out;
  const LaurentScalar ti = LaurentScalar::t_inv();
  for (int k = 0; k <= kmax; ++k) {
    if (k == 0) {
      out.push_back({0, LaurentScalar::one(), {}});
    } else if (k == 1) {
      out.push_back({1, {}, LaurentScalar::one()});
    } else {
      const auto& p1 = out[static_cast<std::size_t>(k - 1)];
      const auto& p2 = out[static_cast<std::size_t>(k - 2)];
      out.push_back({k, p1.a + ti * p2.a, p1.b + ti * p2.b});
    }
  }
  return out;
}

struct PowerCheck {
  PowerSeq seq;
  bool uv_ok = true;    // (u v_i)^k = a_k + b_k u v_i for every i
  bool vu_ok = true;    // (v_i u)^k = a_k + b_k v_i u for every i
  bool main_ok = true;  // (v_1 u)^k (v_2 u)^k = (u v_2)^k (u v_1)^k
};

/// Checks k = 0..kmax by direct powering in the algebra (m >= 2).
inline std::vector<PowerCheck> power_identities(const AlgebraPtr& alg, int kmax) {
  const auto seq = power_sequence(kmax);
  const int m = alg->m();
  if (m < 2) throw Error(Errc::BadM, "power identities need m >= 2");
  const LCliff one = LCliff::one(alg);
  const LCliff u = LCliff::generator(alg, 0);
  std::vector<LCliff> uv, vu, uv_pow, vu_pow;
  for (int i = 1; i <= m; ++i) {
    const LCliff v = LCliff::generator(alg, i);
    uv.push_back(u * v);
    vu.push_back(v * u);
  }
  uv_pow.assign(uv.size(), one);
  vu_pow.assign(vu.size(), one);
  std::vector<PowerCheck> out;
  for (int k = 0; k <= kmax; ++k) {
    if (k > 0) {
      for (std::size_t i = 0; i < uv.size(); ++i) {
        uv_pow[i] = uv_pow[i] * uv[i];
        vu_pow[i] = vu_pow[i] * vu[i];
      }
    }
    PowerCheck c;
    c.seq = seq[static_cast<std::size_t>(k)];
    const LCliff a = LCliff::scalar(alg, c.seq.a);
    for (std::size_t i = 0; i < uv.size(); ++i) {
      c.uv_ok = c.uv_ok && uv_pow[i] == a + c.seq.b * uv[i];
      c.vu_ok = c.vu_ok && vu_pow[i] == a + c.seq.b * vu[i];
    }
    c.main_ok = vu_pow[0] * vu_pow[1] == uv_pow[1] * uv_pow[0];
    out.push_back(std::move(c));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Center and kernel

/// r = u + v_1 + ... + v_m
inline LCliff radical_element(const AlgebraPtr& alg) {
  return LCliff::vector(alg, alg->space().all_ones());
}

template <class S>
bool commutes_with_generators(const CliffordElement<S>& c) {
  const AlgebraPtr& alg = c.algebra();
  for (int j = 0; j < alg->generators(); ++j) {
    const auto x = CliffordElement<S>::generator(alg, j);
    if (!(c * x == x * c)) return false;
  }
  return true;
}

struct CenterReport {
  int m = 0;
  bool one_central = false;
  bool r_central = false;  // expected for even m only
  int specialized_dimension = 0;
  int expected_dimension = 0;
};

/// Dimension over the finite field of {c : c x_j = x_j c for all j}.
inline int specialized_center_dimension(const AlgebraPtr& alg, const EvalMap& map) {
  const Monomial dim = alg->dim();
  const int g = alg->generators();
  const FiniteField& F = map.F();
  // one column per monomial coefficient of c, one row per (generator, monomial) of the commutator
  FFMatrix A(static_cast<int>(dim), g * static_cast<int>(dim));
  for (Monomial M = 0; M < dim; ++M) {
    for (int j = 0; j < g; ++j) {
      const Monomial X = Monomial{1} << j;
      for (const auto& [P, k] : alg->product(M, X)) A(static_cast<int>(M), j * static_cast<int>(dim) + static_cast<int>(P)) ^= eval_apply(map, k);
      for (const auto& [P, k] : alg->product(X, M)) A(static_cast<int>(M), j * static_cast<int>(dim) + static_cast<int>(P)) ^= eval_apply(map, k);
    }
  }
  // the transposed system has the same rank
  return static_cast<int>(dim) - ff_rank(std::move(A), F);
}

inline CenterReport center_candidates(int m, const EvalMap& map) {
  if (m < 3 || m > 8) throw Error(Errc::BadM, "center computation needs 3 <= m <= 8");
  const AlgebraPtr alg = CliffordAlgebra::standard(m);
  CenterReport rep;
  rep.m = m;
  rep.one_central = commutes_with_generators(LCliff::one(alg));
  rep.r_central = commutes_with_generators(radical_element(alg));
  rep.specialized_dimension = specialized_center_dimension(alg, map);
  rep.expected_dimension = m % 2 == 0 ? 2 : 1;
  return rep;
}

/// 1 + lambda r (m = 2 mod 4) or 1 + lambda (1 + r) (m = 0 mod 4).
inline LCliff kernel_element(const AlgebraPtr& alg, const LaurentScalar& lambda) {
  const int m = alg->m();
  if (m % 2 != 0) throw Error(Errc::OddM, "kernel element needs even m, got " + std::to_string(m));
  const LCliff one = LCliff::one(alg);
  const LCliff r = radical_element(alg);
  return m % 4 == 2 ? one + lambda * r : one + lambda * (one + r);
}

struct KernelReport {
  LCliff z;
  bool norm_one = false;
  bool acts_trivially = false;
  bool nontrivial = false;
};

inline KernelReport check_kernel_element(const AlgebraPtr& alg, const LaurentScalar& lambda) {
  KernelReport rep;
  rep.z = kernel_element(alg, lambda);
  const auto n = spinor_norm(rep.z);
  rep.norm_one = n && n->is_one();
  rep.acts_trivially = pi_matrix(rep.z).is_identity();
  rep.nontrivial = !(rep.z == LCliff::one(alg));
  return rep;
}

}  // namespace ytwo

#endif  // YTWO_CLIFFORD_HPP
