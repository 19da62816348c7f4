#ifndef YTWO_ORTHO_REP_HPP
#define YTWO_ORTHO_REP_HPP

// The representation phi of y~(m) by orthogonal transvections of V.

#include <array>
#include <string>
#include <vector>

#include "ytwo/presentation.hpp"
#include "ytwo/qe_scalar.hpp"
#include "ytwo/quadspace.hpp"

namespace ytwo {

using QEMatrix = RMatrix<QEScalar>;

/// Image of a single generator; A is r_u followed by r_{v_1}.
inline LMatrix phi_generator(const QuadSpace& space, const Gen& g) {
  check_gen(g, space.m());
  const LMatrix ru = transvection(space, space.basis_vector(0));
  switch (g.letter) {
    case Letter::Tau: return ru;
    case Letter::A: return ru * transvection(space, space.basis_vector(1));
    case Letter::AInv: return transvection(space, space.basis_vector(1)) * ru;
    case Letter::STilde:
    case Letter::S: {
      const LMatrix r = transvection(space, space.basis_vector(g.index) + space.basis_vector(g.index + 1));
      return g.letter == Letter::S ? ru * r : r;
    }
  }
  return ru;
}

class PhiRep {
 public:
  using element_type = LMatrix;

  explicit PhiRep(int m) : PhiRep(QuadSpace(m)) {}
  explicit PhiRep(QuadSpace space) : space_(std::move(space)) {
    images_[0] = phi_generator(space_, Gen::a());
    images_[1] = phi_generator(space_, Gen::a_inv());
    images_[2] = phi_generator(space_, Gen::tau());
    for (int i = 1; i < space_.m(); ++i) {
      s_.push_back(phi_generator(space_, Gen::s(i)));
      st_.push_back(phi_generator(space_, Gen::s_tilde(i)));
    }
  }

  int m() const noexcept { return space_.m(); }
  const QuadSpace& space() const noexcept { return space_; }
  LMatrix identity() const { return LMatrix::identity(space_.rank()); }

  const LMatrix& image(const Gen& g) const {
    check_gen(g, m());
    switch (g.letter) {
      case Letter::A: return images_[0];
      case Letter::AInv: return images_[1];
      case Letter::Tau: return images_[2];
      case Letter::S: return s_[static_cast<std::size_t>(g.index - 1)];
      case Letter::STilde: return st_[static_cast<std::size_t>(g.index - 1)];
    }
    return images_[2];
  }

 private:
  QuadSpace space_;
  std::array<LMatrix, 3> images_;
  std::vector<LMatrix> s_, st_;
};

/// Only even, nonnegative s-exponents occur.
inline bool entries_in_t_polynomials(const LMatrix& M) {
  for (int i = 0; i < M.size(); ++i) {
    for (int j = 0; j < M.size(); ++j) {
      if (!M(i, j).in_t_polynomials()) return false;
    }
  }
  return true;
}

inline QEMatrix to_qe(const LMatrix& M) {
  return M.transform([](const LaurentScalar& x) { return QEScalar(x); });
}

/// Drops the alpha part; throws Mismatch if some entry is not in the base ring.
inline LMatrix to_laurent(const QEMatrix& M) {
  return M.transform([](const QEScalar& x) {
    if (!x.is_base()) throw Error(Errc::Mismatch, "entry " + x.to_string() + " involves alpha");
    return x.c0();
  });
}

/// Sum of alpha^{2i} for i = -k..k; zero for k = -1.
inline QEScalar sigma_sum(int k) {
  QEScalar acc;
  for (int i = -k; i <= k; ++i) acc += QEScalar::alpha().pow(2LL * i);
  return acc;
}

/// phi(s_1)^{phi(a)^k} from the alpha-closed form (k >= 1), or phi(s_1) for k = 0.
inline QEMatrix closed_form_conjugate(const QuadSpace& space, int k) {
  if (k < 0) throw Error(Errc::NegativeK, "k must be >= 0, got " + std::to_string(k));
  if (space.m() < 3) throw Error(Errc::BadM, "closed form needs m >= 3");
  if (k == 0) return to_qe(phi_generator(space, Gen::s(1)));
  const QEScalar one = QEScalar::one();
  const QEScalar a2 = QEScalar::alpha().pow(2LL * k) + QEScalar::alpha().pow(-2LL * k);
  const QEScalar lo = sigma_sum(k - 1), hi = sigma_sum(k);
  QEMatrix M = QEMatrix::identity(space.rank());
  const std::array<std::array<QEScalar, 3>, 3> head{{
      {a2 + one, a2, a2},
      {lo, lo + one, lo},
      {hi, hi, hi + one},
  }};
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) M(i, j) = head[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  }
  for (int r = 3; r < space.rank(); ++r) {
    M(r, 0) = a2 + one;
    M(r, 1) = lo + one;
    M(r, 2) = hi + one;
  }
  return M;
}

/// The word a^-k s_1 a^k.
inline Word conjugation_word(int k) { return conjugate({Gen::s(1)}, power({Gen::a()}, k)); }

/// u -> u + f0 w, v_1 -> v_1 + f1 w, v_2 -> v_2 + f2 w with w = u + v_1 + v_2,
/// v_i -> v_i + (f0+1)u + (f1+1)v_1 + (f2+1)v_2 for i >= 3. Needs f0+f1+f2 = 0.
inline LMatrix commuting_form_map(const QuadSpace& space, const LaurentScalar& f0, const LaurentScalar& f1,
                                  const LaurentScalar& f2) {
  if (!(f0 + f1 + f2).is_zero()) throw Error(Errc::BadParams, "coefficients must sum to zero");
  if (space.m() < 2) throw Error(Errc::BadM, "form map needs m >= 2");
  const LaurentScalar one = LaurentScalar::one();
  LMatrix M = LMatrix::identity(space.rank());
  const std::array<LaurentScalar, 3> f{f0, f1, f2};
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) M(i, j) += f[static_cast<std::size_t>(i)];
  }
  for (int r = 3; r < space.rank(); ++r) {
    for (int j = 0; j < 3; ++j) M(r, j) = f[static_cast<std::size_t>(j)] + one;
  }
  return M;
}

/// (f0, f1, f2) read off a matrix of the commuting form.
inline std::array<LaurentScalar, 3> form_coefficients(const LMatrix& M) { return {M(0, 1), M(1, 0), M(2, 0)}; }

}  // namespace ytwo

#endif  // YTWO_ORTHO_REP_HPP
