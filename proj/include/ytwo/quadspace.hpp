#ifndef YTWO_QUADSPACE_HPP
#define YTWO_QUADSPACE_HPP

// The free module V with basis u, v_1..v_m, the all-ones alternating Gram
// matrix and q(u) = 1, q(v_i) = t^-1; orthogonal transvections; the
// hyperbolic splitting V = V_1 + ... + V_k + U.

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ytwo/laurent.hpp"
#include "ytwo/matrix.hpp"

namespace ytwo {

using LVec = Vec<LaurentScalar>;
using LMatrix = RMatrix<LaurentScalar>;

class QuadSpace {
 public:
  /// The form of rank m+1 on u, v_1..v_m.
  explicit QuadSpace(int m) : m_(m) {
    if (m < 1) throw Error(Errc::BadM, "m must be >= 1, got " + std::to_string(m));
    q_.reserve(static_cast<std::size_t>(m) + 1);
    q_.push_back(LaurentScalar::one());
    for (int i = 1; i <= m; ++i) q_.push_back(LaurentScalar::t_inv());
  }

  /// All-ones Gram matrix with arbitrary basis norms.
  static QuadSpace with_norms(std::vector<LaurentScalar> norms) {
    if (norms.size() < 2) throw Error(Errc::BadParams, "need rank >= 2");
    QuadSpace sp(static_cast<int>(norms.size()) - 1);
    sp.q_ = std::move(norms);
    return sp;
  }

  int m() const noexcept { return m_; }
  int rank() const noexcept { return m_ + 1; }

  const LaurentScalar& q_basis(int i) const { return q_.at(static_cast<std::size_t>(i)); }
  static int gram(int i, int j) noexcept { return i != j ? 1 : 0; }

  /// True for the standard norms q(u) = 1, q(v_i) = t^-1.
  bool is_standard() const {
    if (!q_[0].is_one()) return false;
    for (std::size_t i = 1; i < q_.size(); ++i) {
      if (!(q_[i] == LaurentScalar::t_inv())) return false;
    }
    return true;
  }

  LVec zero_vector() const { return LVec(static_cast<std::size_t>(rank())); }
  LVec basis_vector(int i) const {
    LVec v = zero_vector();
    v.at(static_cast<std::size_t>(i)) = LaurentScalar::one();
    return v;
  }
  /// r = u + v_1 + ... + v_m
  LVec all_ones() const { return LVec(static_cast<std::size_t>(rank()), LaurentScalar::one()); }

  /// (x, y) = sum over i != j of x_i y_j.
  LaurentScalar bilin(const LVec& x, const LVec& y) const {
    check(x);
    check(y);
    LaurentScalar sx, sy, diag;
    for (std::size_t i = 0; i < x.size(); ++i) {
      sx += x[i];
      sy += y[i];
      if (!x[i].is_zero() && !y[i].is_zero()) diag += x[i] * y[i];
    }
    return sx * sy + diag;
  }

  /// q(sum l_i x_i) = sum l_i^2 q(x_i) + sum_{i<j} l_i l_j (x_i, x_j).
  LaurentScalar q(const LVec& x) const {
    check(x);
    LaurentScalar acc, prefix;
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (x[i].is_zero()) continue;
      acc += x[i].squared() * q_[i];
      acc += prefix * x[i];
      prefix += x[i];
    }
    return acc;
  }

  LMatrix gram_matrix() const {
    LMatrix g(rank());
    for (int i = 0; i < rank(); ++i) {
      for (int j = 0; j < rank(); ++j) {
        if (i != j) g(i, j) = LaurentScalar::one();
      }
    }
    return g;
  }

  /// M preserves q and (.,.) on all basis vectors and pairs.
  bool preserves_form(const LMatrix& M) const {
    if (M.size() != rank()) return false;
    std::vector<LVec> rows;
    for (int i = 0; i < rank(); ++i) rows.push_back(M.row(i));
    for (int i = 0; i < rank(); ++i) {
      if (!(q(rows[static_cast<std::size_t>(i)]) == q_[static_cast<std::size_t>(i)])) return false;
      for (int j = i + 1; j < rank(); ++j) {
        if (!(bilin(rows[static_cast<std::size_t>(i)], rows[static_cast<std::size_t>(j)]) == LaurentScalar::one())) {
          return false;
        }
      }
    }
    return true;
  }

 private:
  void check(const LVec& x) const {
    if (static_cast<int>(x.size()) != rank()) {
      throw Error(Errc::BadParams, "vector of length " + std::to_string(x.size()) + " in rank " +
                                       std::to_string(rank()) + " space");
    }
  }

  int m_;
  std::vector<LaurentScalar> q_;
};

/// r_w(x) = x + (x, w) q(w)^-1 w, as a row-convention matrix.
inline LMatrix transvection(const QuadSpace& space, const LVec& w) {
  const LaurentScalar qw = space.q(w);
  if (!qw.is_monomial()) {
    throw Error(Errc::NonUnitNorm, "q(w) = " + qw.to_string() + " is not a unit");
  }
  const LaurentScalar qinv = lp_invert(qw);
  LaurentScalar total;
  for (const auto& c : w) total += c;
  LMatrix M = LMatrix::identity(space.rank());
  for (int i = 0; i < space.rank(); ++i) {
    const LaurentScalar coef = (total + w[static_cast<std::size_t>(i)]) * qinv;  // (e_i, w) / q(w)
    if (coef.is_zero()) continue;
    for (int j = 0; j < space.rank(); ++j) M(i, j) += coef * w[static_cast<std::size_t>(j)];
  }
  return M;
}

// ---------------------------------------------------------------------------
// Hyperbolic splitting

/// One row of the periodic state table: the norms (q_0, q_1, q_2 = ... = q_k)
/// and the chosen solution (alpha, beta) of q(alpha e_0 + beta e_1 + e_k) = 0.
struct DecompositionStep {
  LaurentScalar q0, q1, q2;
  int alpha = 0;
  int beta = 0;
};

inline const std::array<DecompositionStep, 4>& decomposition_state_table() {
  static const std::array<DecompositionStep, 4> table = [] {
    const LaurentScalar one = LaurentScalar::one();
    const LaurentScalar ti = LaurentScalar::t_inv();
    const LaurentScalar ti1 = ti + one;
    return std::array<DecompositionStep, 4>{{
        {one, ti, ti, 1, 1},
        {one, ti, ti1, 0, 1},
        {one, ti1, ti1, 1, 1},
        {one, ti1, ti, 0, 1},
    }};
  }();
  return table;
}

struct HyperbolicDecomposition {
  std::vector<std::pair<LVec, LVec>> pairs;  // (e, f)
  std::vector<LVec> residual;                // basis of U
  std::vector<DecompositionStep> steps;      // state and (alpha, beta) per extraction
  bool rank_too_small = false;               // no extraction possible (rank <= 3)
};

namespace detail {

inline LVec gf2_combination(const LVec& x, int c, const LVec& y) {
  if (c == 0) return x;
  return x + y;
}

}  // namespace detail

inline HyperbolicDecomposition hyperbolic_decompose(const QuadSpace& space) {
  HyperbolicDecomposition out;
  const int n = space.rank();
  std::vector<LVec> e;
  for (int i = 0; i < n; ++i) e.push_back(space.basis_vector(i));
  if (n <= 3) {
    out.residual = e;
    out.rank_too_small = true;
    return out;
  }
  LaurentScalar q0 = space.q_basis(0), q1 = space.q_basis(1), q2 = space.q_basis(2);
  for (int i = 3; i < n; ++i) {
    if (!(space.q_basis(i) == q2)) {
      throw Error(Errc::UnsupportedForm, "norms q_2..q_k are not all equal");
    }
  }
  const auto& table = decomposition_state_table();
  while (e.size() >= 4) {
    const DecompositionStep* row = nullptr;
    for (const auto& r : table) {
      if (r.q0 == q0 && r.q1 == q1 && r.q2 == q2) row = &r;
    }
    if (!row) {
      throw Error(Errc::UnsupportedForm, "state (" + q0.to_string() + ", " + q1.to_string() + ", " +
                                             q2.to_string() + ") is outside the periodic table");
    }
    const int a = row->alpha, b = row->beta;
    out.steps.push_back(*row);
    const std::size_t k = e.size() - 1;
    LVec head = space.zero_vector();
    head = detail::gf2_combination(head, a, e[0]);
    head = detail::gf2_combination(head, b, e[1]);
    LVec ev = head + e[k];
    LVec fv = head + e[k - 1];
    const LVec w = ev + fv;
    std::vector<LVec> next;
    next.push_back(detail::gf2_combination(e[0], (b + 1) % 2, w));
    next.push_back(detail::gf2_combination(e[1], (a + 1) % 2, w));
    for (std::size_t i = 2; i + 1 < k; ++i) next.push_back(detail::gf2_combination(e[i], (a + b + 1) % 2, w));
    out.pairs.emplace_back(std::move(ev), std::move(fv));
    e = std::move(next);
    // q_0' = q_0 + b^2 + 1, q_1' = q_1 + a^2 + 1, q_i' = q_i + a^2 + b^2 + 1
    const LaurentScalar one = LaurentScalar::one();
    if ((b + 1) % 2) q0 += one;
    if ((a + 1) % 2) q1 += one;
    if ((a + b + 1) % 2) q2 += one;
  }
  out.residual = std::move(e);
  return out;
}

inline HyperbolicDecomposition hyperbolic_decompose_rank(int rank) {
  if (rank < 2) throw Error(Errc::BadParams, "rank must be >= 2");
  return hyperbolic_decompose(QuadSpace(rank - 1));
}

/// Lists every violated invariant; empty means the decomposition is valid.
inline std::vector<std::string> decomposition_violations(const QuadSpace& space,
                                                         const HyperbolicDecomposition& d) {
  std::vector<std::string> bad;
  const LaurentScalar zero, one = LaurentScalar::one();
  std::vector<std::vector<const LVec*>> blocks;
  for (std::size_t p = 0; p < d.pairs.size(); ++p) {
    const auto& [e, f] = d.pairs[p];
    const std::string tag = "pair " + std::to_string(p);
    if (!(space.q(e) == zero)) bad.push_back(tag + ": q(e) != 0");
    if (!(space.q(f) == zero)) bad.push_back(tag + ": q(f) != 0");
    if (!(space.bilin(e, f) == one)) bad.push_back(tag + ": (e,f) != 1");
    blocks.push_back({&e, &f});
  }
  std::vector<const LVec*> res;
  for (const auto& r : d.residual) res.push_back(&r);
  blocks.push_back(res);
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    for (std::size_t j = i + 1; j < blocks.size(); ++j) {
      for (const LVec* x : blocks[i]) {
        for (const LVec* y : blocks[j]) {
          if (!space.bilin(*x, *y).is_zero()) {
            bad.push_back("blocks " + std::to_string(i) + " and " + std::to_string(j) + " not orthogonal");
          }
        }
      }
    }
  }
  if (!d.rank_too_small && (d.residual.size() < 2 || d.residual.size() > 3)) {
    bad.push_back("residual rank " + std::to_string(d.residual.size()) + " not in {2,3}");
  }
  if (2 * d.pairs.size() + d.residual.size() != static_cast<std::size_t>(space.rank())) {
    bad.push_back("vector count does not match rank");
  }
  auto gf2 = [](const LVec& v) {
    for (const auto& c : v) {
      if (!c.is_zero() && !c.is_one()) return false;
    }
    return true;
  };
  for (const auto& [e, f] : d.pairs) {
    if (!gf2(e) || !gf2(f)) bad.push_back("pair vector is not a GF(2) combination");
  }
  for (const auto& r : d.residual) {
    if (!gf2(r)) bad.push_back("residual vector is not a GF(2) combination");
  }
  // the new basis must span V: full GF(2) rank of the collected vectors
  std::vector<std::uint64_t> rows;
  auto pack = [](const LVec& v) {
    std::uint64_t bits = 0;
    for (std::size_t i = 0; i < v.size() && i < 64; ++i) {
      if (v[i].is_one()) bits |= std::uint64_t{1} << i;
    }
    return bits;
  };
  for (const auto& [e, f] : d.pairs) {
    rows.push_back(pack(e));
    rows.push_back(pack(f));
  }
  for (const auto& r : d.residual) rows.push_back(pack(r));
  int rank = 0;
  for (int col = 0; col < space.rank() && col < 64; ++col) {
    const std::uint64_t bit = std::uint64_t{1} << col;
    auto it = std::find_if(rows.begin() + rank, rows.end(), [bit](std::uint64_t r) { return r & bit; });
    if (it == rows.end()) continue;
    std::iter_swap(rows.begin() + rank, it);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (static_cast<int>(r) != rank && (rows[r] & bit)) rows[r] ^= rows[static_cast<std::size_t>(rank)];
    }
    ++rank;
  }
  if (rank != space.rank() && space.rank() <= 64) bad.push_back("vectors do not span V");
  return bad;
}

/// Rank of the all-ones alternating Gram matrix of size n over GF(2).
inline int gram_rank_gf2(int n) {
  std::vector<std::uint64_t> rows(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) rows[static_cast<std::size_t>(i)] = ((std::uint64_t{1} << n) - 1) & ~(std::uint64_t{1} << i);
  int rank = 0;
  for (int col = 0; col < n; ++col) {
    const std::uint64_t bit = std::uint64_t{1} << col;
    int piv = -1;
    for (int r = rank; r < n; ++r) {
      if (rows[static_cast<std::size_t>(r)] & bit) {
        piv = r;
        break;
      }
    }
    if (piv < 0) continue;
    std::swap(rows[static_cast<std::size_t>(rank)], rows[static_cast<std::size_t>(piv)]);
    for (int r = 0; r < n; ++r) {
      if (r != rank && (rows[static_cast<std::size_t>(r)] & bit)) rows[static_cast<std::size_t>(r)] ^= rows[static_cast<std::size_t>(rank)];
    }
    ++rank;
  }
  return rank;
}

/// r = u + v_1 + ... + v_m for even m (the radical); nullopt for odd m, where
/// the Gram matrix is certified nonsingular over GF(2).
inline std::optional<LVec> radical_vector(const QuadSpace& space) {
  if (space.m() % 2 == 0) {
    LVec r = space.all_ones();
    for (int i = 0; i < space.rank(); ++i) {
      if (!space.bilin(r, space.basis_vector(i)).is_zero()) {
        throw Error(Errc::Mismatch, "r is not orthogonal to basis vector " + std::to_string(i));
      }
    }
    return r;
  }
  if (space.rank() <= 64 && gram_rank_gf2(space.rank()) != space.rank()) {
    throw Error(Errc::Mismatch, "Gram matrix singular for odd m");
  }
  return std::nullopt;
}

}  // namespace ytwo

#endif  // YTWO_QUADSPACE_HPP
