#ifndef YTWO_MATRIX_HPP
#define YTWO_MATRIX_HPP

// Square matrices over a commutative scalar ring, row convention: row i is the
// image of basis vector i, vectors are rows, and x (g h) = (x g) h.

#include <concepts>
#include <string>
#include <vector>

#include "ytwo/error.hpp"

namespace ytwo {

template <class S>
concept Ring = std::regular<S> && requires(S a, const S& b) {
  { S::one() } -> std::convertible_to<S>;
  { a + b } -> std::convertible_to<S>;
  { a * b } -> std::convertible_to<S>;
  { b.is_zero() } -> std::convertible_to<bool>;
};

template <class S>
using Vec = std::vector<S>;

template <Ring S>
class RMatrix {
 public:
  using scalar_type = S;

  RMatrix() = default;
  explicit RMatrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n)) {}

  static RMatrix identity(int n) {
    RMatrix m(n);
    for (int i = 0; i < n; ++i) m(i, i) = S::one();
    return m;
  }

  static RMatrix from_rows(const std::vector<Vec<S>>& rows) {
    RMatrix m(static_cast<int>(rows.size()));
    for (int i = 0; i < m.n_; ++i) {
      if (static_cast<int>(rows[static_cast<std::size_t>(i)].size()) != m.n_) {
        throw Error(Errc::BadParams, "row length mismatch");
      }
      for (int j = 0; j < m.n_; ++j) m(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }
    return m;
  }

  int size() const noexcept { return n_; }

  S& operator()(int i, int j) { return a_[idx(i, j)]; }
  const S& operator()(int i, int j) const { return a_[idx(i, j)]; }

  Vec<S> row(int i) const {
    return Vec<S>(a_.begin() + static_cast<std::ptrdiff_t>(idx(i, 0)),
                  a_.begin() + static_cast<std::ptrdiff_t>(idx(i, 0) + static_cast<std::size_t>(n_)));
  }

  bool is_identity() const {
    for (int i = 0; i < n_; ++i) {
      for (int j = 0; j < n_; ++j) {
        const S& x = (*this)(i, j);
        if (i == j ? !(x == S::one()) : !x.is_zero()) return false;
      }
    }
    return true;
  }

  template <class F>
  auto transform(F&& f) const {
    using T = std::decay_t<decltype(f(std::declval<const S&>()))>;
    RMatrix<T> out(n_);
    for (int i = 0; i < n_; ++i) {
      for (int j = 0; j < n_; ++j) out(i, j) = f((*this)(i, j));
    }
    return out;
  }

  friend RMatrix operator*(const RMatrix& x, const RMatrix& y) {
    if (x.n_ != y.n_) throw Error(Errc::BadParams, "matrix size mismatch");
    const int n = x.n_;
    RMatrix z(n);
    // sparse-aware: generator images are mostly zero
    for (int i = 0; i < n; ++i) {
      for (int k = 0; k < n; ++k) {
        const S& xik = x(i, k);
        if (xik.is_zero()) continue;
        for (int j = 0; j < n; ++j) {
          const S& ykj = y(k, j);
          if (ykj.is_zero()) continue;
          z(i, j) += xik * ykj;
        }
      }
    }
    return z;
  }

  friend RMatrix operator+(const RMatrix& x, const RMatrix& y) {
    if (x.n_ != y.n_) throw Error(Errc::BadParams, "matrix size mismatch");
    RMatrix z = x;
    for (std::size_t i = 0; i < z.a_.size(); ++i) z.a_[i] += y.a_[i];
    return z;
  }

  friend bool operator==(const RMatrix& x, const RMatrix& y) { return x.n_ == y.n_ && x.a_ == y.a_; }

  RMatrix pow(unsigned e) const {
    RMatrix result = identity(n_);
    RMatrix base = *this;
    while (e) {
      if (e & 1U) result = result * base;
      e >>= 1;
      if (e) base = base * base;
    }
    return result;
  }

 private:
  std::size_t idx(int i, int j) const noexcept {
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(j);
  }

  int n_ = 0;
  std::vector<S> a_;
};

/// Row vector times matrix.
template <Ring S>
Vec<S> operator*(const Vec<S>& x, const RMatrix<S>& m) {
  const int n = m.size();
  if (static_cast<int>(x.size()) != n) throw Error(Errc::BadParams, "vector length mismatch");
  Vec<S> out(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const S& xi = x[static_cast<std::size_t>(i)];
    if (xi.is_zero()) continue;
    for (int j = 0; j < n; ++j) {
      if (!m(i, j).is_zero()) out[static_cast<std::size_t>(j)] += xi * m(i, j);
    }
  }
  return out;
}

template <Ring S>
Vec<S> operator+(Vec<S> x, const Vec<S>& y) {
  if (x.size() != y.size()) throw Error(Errc::BadParams, "vector length mismatch");
  for (std::size_t i = 0; i < x.size(); ++i) x[i] += y[i];
  return x;
}

template <Ring S>
Vec<S> scale(const S& c, Vec<S> x) {
  for (auto& e : x) e = c * e;
  return x;
}

}  // namespace ytwo

#endif  // YTWO_MATRIX_HPP
