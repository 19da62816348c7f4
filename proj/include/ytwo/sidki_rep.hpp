#ifndef YTWO_SIDKI_REP_HPP
#define YTWO_SIDKI_REP_HPP

// Sidki's representation eta of y(m) by 2^{m-2}-square matrices over the
// alpha-extended ring, and its realization inside Cl(V, q) on the span of
// w s for products s of the s_i.

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "ytwo/clifford.hpp"
#include "ytwo/ffmatrix.hpp"
#include "ytwo/ortho_rep.hpp"

namespace ytwo {

namespace detail {

inline QEMatrix block2(const QEMatrix& a, const QEMatrix& b, const QEMatrix& c, const QEMatrix& d) {
  const int n = a.size();
  QEMatrix out(2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      out(i, j) = a(i, j);
      out(i, j + n) = b(i, j);
      out(i + n, j) = c(i, j);
      out(i + n, j + n) = d(i, j);
    }
  }
  return out;
}

inline QEMatrix diag_inverse(const QEMatrix& a) {
  QEMatrix out(a.size());
  for (int i = 0; i < a.size(); ++i) out(i, i) = inverse_scalar(a(i, i));
  return out;
}

}  // namespace detail

/// eta on a, a^-1 and s_1..s_{m-1}; tau and s~_i are not in y(m).
class EtaRep {
 public:
  using element_type = QEMatrix;

  explicit EtaRep(int m) : m_(m) {
    if (m < 3) throw Error(Errc::BadM, "eta needs m >= 3, got " + std::to_string(m));
    const QEScalar one = QEScalar::one();
    a_ = QEMatrix(2);
    a_(0, 0) = QEScalar::alpha();
    a_(1, 1) = QEScalar::alpha_inv();
    s_.assign(3, QEMatrix(2));
    s_[1](0, 0) = one;
    s_[1](1, 0) = one;
    s_[1](1, 1) = one;
    s_[2](0, 1) = one;
    s_[2](1, 0) = one;
    for (int k = 4; k <= m; ++k) {
      const int n = a_.size();
      const QEMatrix I = QEMatrix::identity(n), Z(n);
      std::vector<QEMatrix> next(static_cast<std::size_t>(k));
      next[1] = detail::block2(I, Z, I, I);
      next[2] = detail::block2(Z, I, I, Z);
      next[3] = detail::block2(s_[2], Z, I, s_[2]);
      for (int j = 4; j <= k - 1; ++j) {
        next[static_cast<std::size_t>(j)] = detail::block2(s_[static_cast<std::size_t>(j - 1)], Z, Z, s_[static_cast<std::size_t>(j - 1)]);
      }
      a_ = detail::block2(a_, Z, Z, detail::diag_inverse(a_));
      s_ = std::move(next);
    }
    a_inv_ = detail::diag_inverse(a_);
  }

  int m() const noexcept { return m_; }
  int dimension() const noexcept { return a_.size(); }
  QEMatrix identity() const { return QEMatrix::identity(a_.size()); }

  const QEMatrix& image(const Gen& g) const {
    check_gen(g, m_);
    switch (g.letter) {
      case Letter::A: return a_;
      case Letter::AInv: return a_inv_;
      case Letter::S: return s_[static_cast<std::size_t>(g.index)];
      default: throw Error(Errc::Unsupported, "eta is defined on y(m) only; eliminate tau first");
    }
  }

 private:
  int m_;
  QEMatrix a_, a_inv_;
  std::vector<QEMatrix> s_;  // s_[i] for i = 1..m-1, index 0 unused
};

// ---------------------------------------------------------------------------
// The eigenvector w and the bases X_m, Y_m

/// w = (s^-1 + alpha) + alpha u v_1 + alpha^-1 u v_2 + s v_1 v_2
inline QCliff eigenvector_w(const AlgebraPtr& alg) {
  if (alg->m() < 2) throw Error(Errc::BadM, "w needs m >= 2");
  QCliff w(alg);
  w.coeff(0) = QEScalar(LaurentScalar::monomial(-1), LaurentScalar::one());
  w.coeff(0b011) = QEScalar::alpha();
  w.coeff(0b101) = QEScalar::alpha_inv();
  w.coeff(0b110) = QEScalar(LaurentScalar::s());
  return w;
}

struct EigenCheck {
  bool a_eigen = false;     // w psi(a) = alpha w
  bool s1_fixed = false;    // w psi(s_1) = w
  bool uv2_eigen = false;   // w s u v_2 = alpha^-1 w
};

inline EigenCheck check_eigenvector(const AlgebraPtr& alg) {
  const QCliff w = eigenvector_w(alg);
  const PsiRep psi(alg);
  EigenCheck c;
  c.a_eigen = w * psi.image(Gen::a()).cast<QEScalar>() == QEScalar::alpha() * w;
  c.s1_fixed = w * psi.image(Gen::s(1)).cast<QEScalar>() == w;
  const QCliff suv2 = QEScalar(LaurentScalar::s()) * (QCliff::generator(alg, 0) * QCliff::generator(alg, 2));
  c.uv2_eigen = w * suv2 == QEScalar::alpha_inv() * w;
  return c;
}

enum class BasisFlavor { X, Y };

struct WBasis {
  int m = 0;
  BasisFlavor flavor = BasisFlavor::X;
  std::vector<std::vector<int>> words;  // indices i of the s_i applied to w, left to right
  std::vector<QCliff> elements;
};

inline std::string word_label(const std::vector<int>& word) {
  std::string out = "w";
  for (int i : word) out += "s" + std::to_string(i);
  return out;
}

inline WBasis basis(const AlgebraPtr& alg, BasisFlavor flavor) {
  const int m = alg->m();
  if (m < 3 || m > 8) throw Error(Errc::BadM, "basis needs 3 <= m <= 8, got " + std::to_string(m));
  const PsiRep psi(alg);
  std::vector<QCliff> s(static_cast<std::size_t>(m));
  for (int i = 1; i < m; ++i) s[static_cast<std::size_t>(i)] = psi.image(Gen::s(i)).cast<QEScalar>();
  WBasis b{m, flavor, {{}}, {eigenvector_w(alg)}};
  if (flavor == BasisFlavor::X) {
    for (int j = m - 1; j >= 2; --j) {
      const std::size_t n = b.elements.size();
      for (std::size_t i = 0; i < n; ++i) {
        b.elements.push_back(b.elements[i] * s[static_cast<std::size_t>(j)]);
        auto word = b.words[i];
        word.push_back(j);
        b.words.push_back(std::move(word));
      }
    }
    return b;
  }
  // increasing subsets of {2..m-1}, by length then lexicographically
  std::vector<std::vector<int>> words;
  const int k = m - 2;
  for (unsigned mask = 1; mask < (1U << k); ++mask) {
    std::vector<int> word;
    for (int i = 0; i < k; ++i) {
      if ((mask >> i) & 1U) word.push_back(i + 2);
    }
    words.push_back(std::move(word));
  }
  std::sort(words.begin(), words.end(), [](const auto& x, const auto& y) {
    return x.size() != y.size() ? x.size() < y.size() : x < y;
  });
  for (auto& word : words) {
    QCliff e = b.elements[0];
    for (int i : word) e = e * s[static_cast<std::size_t>(i)];
    b.elements.push_back(std::move(e));
    b.words.push_back(std::move(word));
  }
  return b;
}

struct IndependenceResult {
  bool certified = false;
  int n_used = 0;                               // root order of the certifying specialization
  std::vector<std::pair<int, int>> attempts;    // (n, specialized rank)
};

/// Full rank of the coefficient matrix at some listed specialization proves
/// independence over the ring; failure at all of them is inconclusive.
inline IndependenceResult independence_certificate(const std::vector<QCliff>& elements,
                                                   const std::vector<int>& moduli = {5, 7, 11}) {
  IndependenceResult res;
  if (elements.empty()) {
    res.certified = true;
    return res;
  }
  const AlgebraPtr& alg = elements.front().algebra();
  for (int n : moduli) {
    const EvalMap map = make_eval_map(n);
    FFMatrix A(static_cast<int>(elements.size()), static_cast<int>(alg->dim()));
    for (std::size_t i = 0; i < elements.size(); ++i) {
      for (const auto& [M, c] : elements[i].terms()) A(static_cast<int>(i), static_cast<int>(M)) = eval_apply(map, c);
    }
    const int rank = ff_rank(std::move(A), map.F());
    res.attempts.emplace_back(n, rank);
    if (rank == static_cast<int>(elements.size())) {
      res.certified = true;
      res.n_used = n;
      return res;
    }
  }
  return res;
}

struct ActionReport {
  bool ok = true;
  std::string witness;  // first failing row and monomial
};

/// b_i * g = sum_j E(i, j) b_j for every i, compared exactly.
inline ActionReport compare_action(const std::vector<QCliff>& b, const QCliff& g, const QEMatrix& E,
                                   const std::string& label) {
  ActionReport rep;
  if (E.size() != static_cast<int>(b.size())) throw Error(Errc::BadParams, "matrix and basis sizes differ");
  for (std::size_t i = 0; i < b.size(); ++i) {
    const QCliff lhs = b[i] * g;
    QCliff rhs(g.algebra());
    for (std::size_t j = 0; j < b.size(); ++j) {
      const QEScalar& e = E(static_cast<int>(i), static_cast<int>(j));
      if (!e.is_zero()) rhs += e * b[j];
    }
    if (!(lhs == rhs)) {
      rep.ok = false;
      for (Monomial M = 0; M < g.algebra()->dim(); ++M) {
        if (!(lhs.coeff(M) == rhs.coeff(M))) {
          rep.witness = label + ": row " + std::to_string(i) + ", monomial " + g.algebra()->monomial_name(M) +
                        ": got " + lhs.coeff(M).to_string() + ", expected " + rhs.coeff(M).to_string();
          break;
        }
      }
      return rep;
    }
  }
  return rep;
}

/// Right multiplication by psi(g) on X_m reproduces eta(g).
inline ActionReport verify_action(const WBasis& X, const EtaRep& eta, const Gen& g) {
  const PsiRep psi(X.elements.front().algebra());
  return compare_action(X.elements, psi.image(g).cast<QEScalar>(), eta.image(g), to_string(Word{g}));
}

inline ActionReport verify_action(int m, const Gen& g) {
  if (m < 3 || m > 7) throw Error(Errc::BadM, "verify_action needs 3 <= m <= 7");
  const AlgebraPtr alg = CliffordAlgebra::standard(m);
  return verify_action(basis(alg, BasisFlavor::X), EtaRep(m), g);
}

/// The generators of y(m): a, a^-1, s_1..s_{m-1}.
inline std::vector<Gen> y_generators(int m) {
  std::vector<Gen> gens{Gen::a(), Gen::a_inv()};
  for (int i = 1; i < m; ++i) gens.push_back(Gen::s(i));
  return gens;
}

/// Expected block action on X_m followed by X_m u.
inline QEMatrix extended_block(const EtaRep& eta, const Gen& g) {
  const int n = eta.dimension();
  const QEMatrix I = QEMatrix::identity(n), Z(n);
  switch (g.letter) {
    case Letter::Tau: return detail::block2(Z, I, I, Z);
    case Letter::A: return detail::block2(eta.image(Gen::a()), Z, Z, eta.image(Gen::a_inv()));
    case Letter::AInv: return detail::block2(eta.image(Gen::a_inv()), Z, Z, eta.image(Gen::a()));
    case Letter::S: return detail::block2(eta.image(g), Z, Z, eta.image(g));
    case Letter::STilde: {
      const QEMatrix& s = eta.image(Gen::s(g.index));
      return detail::block2(Z, s, s, Z);
    }
  }
  return I;
}

struct ExtendedReport {
  IndependenceResult independence;
  std::vector<std::pair<std::string, ActionReport>> actions;
  bool ok() const {
    if (!independence.certified) return false;
    for (const auto& [name, r] : actions) {
      if (!r.ok) return false;
    }
    return true;
  }
};

inline ExtendedReport verify_extended_action(int m) {
  if (m < 3 || m > 6) throw Error(Errc::BadM, "extended action needs 3 <= m <= 6");
  const AlgebraPtr alg = CliffordAlgebra::standard(m);
  const WBasis X = basis(alg, BasisFlavor::X);
  const EtaRep eta(m);
  const PsiRep psi(alg);
  std::vector<QCliff> b = X.elements;
  const QCliff u = QCliff::generator(alg, 0);
  for (const auto& x : X.elements) b.push_back(x * u);
  ExtendedReport rep;
  rep.independence = independence_certificate(b);
  std::vector<Gen> gens{Gen::tau(), Gen::a(), Gen::a_inv()};
  for (int i = 1; i < m; ++i) {
    gens.push_back(Gen::s(i));
    gens.push_back(Gen::s_tilde(i));
  }
  for (const Gen& g : gens) {
    const std::string name = to_string(Word{g});
    rep.actions.emplace_back(name, compare_action(b, psi.image(g).cast<QEScalar>(), extended_block(eta, g), name));
  }
  return rep;
}

/// Coordinates of each Y_m element in the X_m basis, read off as e_0 eta(word),
/// and verified exactly in the algebra. nullopt if some element disagrees.
inline std::optional<std::vector<Vec<QEScalar>>> y_in_x_coordinates(const WBasis& X, const WBasis& Y, const EtaRep& eta) {
  std::vector<Vec<QEScalar>> coords;
  for (std::size_t k = 0; k < Y.elements.size(); ++k) {
    Vec<QEScalar> e(static_cast<std::size_t>(eta.dimension()));
    e[0] = QEScalar::one();
    for (int i : Y.words[k]) e = e * eta.image(Gen::s(i));
    QCliff rhs(X.elements.front().algebra());
    for (std::size_t j = 0; j < e.size(); ++j) {
      if (!e[j].is_zero()) rhs += e[j] * X.elements[j];
    }
    if (!(rhs == Y.elements[k])) return std::nullopt;
    coords.push_back(std::move(e));
  }
  return coords;
}

/// X_m and Y_m span the same module: every Y element is an exact combination
/// of X elements, and the change of basis is invertible over GF(2).
inline bool same_span(const WBasis& X, const WBasis& Y, const EtaRep& eta) {
  const auto coords = y_in_x_coordinates(X, Y, eta);
  if (!coords || coords->size() != X.elements.size()) return false;
  const int n = static_cast<int>(coords->size());
  FFMatrix C(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const QEScalar& c = (*coords)[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      if (c.is_zero()) continue;
      if (!c.is_one()) return false;
      C(i, j) = 1;
    }
  }
  return ff_rank(std::move(C), FiniteField(0b10)) == n;
}

/// eta(a) is diagonal with alpha on even-length words of X_m and alpha^-1 on odd ones.
inline bool parity_rule_holds(const WBasis& X, const EtaRep& eta) {
  const QEMatrix& A = eta.image(Gen::a());
  for (int i = 0; i < A.size(); ++i) {
    for (int j = 0; j < A.size(); ++j) {
      if (i == j) {
        const bool even = X.words[static_cast<std::size_t>(i)].size() % 2 == 0;
        if (!(A(i, i) == (even ? QEScalar::alpha() : QEScalar::alpha_inv()))) return false;
      } else if (!A(i, j).is_zero()) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace ytwo

#endif  // YTWO_SIDKI_REP_HPP
