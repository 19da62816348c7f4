#ifndef YTWO_FFMATRIX_HPP
#define YTWO_FFMATRIX_HPP

// Dense matrices over GF(2^d): products, rank, and a packed byte encoding.

#include <string>
#include <utility>
#include <vector>

#include "ytwo/eval_map.hpp"
#include "ytwo/matrix.hpp"

namespace ytwo {

class FFMatrix {
 public:
  FFMatrix() = default;
  FFMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols)) {}

  static FFMatrix identity(int n) {
    FFMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return cols_; }

  FFElement& operator()(int i, int j) { return a_[idx(i, j)]; }
  FFElement operator()(int i, int j) const { return a_[idx(i, j)]; }

  bool is_identity() const {
    if (rows_ != cols_) return false;
    for (int i = 0; i < rows_; ++i) {
      for (int j = 0; j < cols_; ++j) {
        if ((*this)(i, j) != (i == j ? 1U : 0U)) return false;
      }
    }
    return true;
  }

  FFMatrix mul(const FFMatrix& y, const FiniteField& F) const {
    if (cols_ != y.rows_) throw Error(Errc::BadParams, "matrix shape mismatch");
    FFMatrix z(rows_, y.cols_);
    for (int i = 0; i < rows_; ++i) {
      for (int k = 0; k < cols_; ++k) {
        const FFElement x = (*this)(i, k);
        if (x == 0) continue;
        for (int j = 0; j < y.cols_; ++j) z(i, j) ^= F.mul(x, y(k, j));
      }
    }
    return z;
  }

  FFMatrix plus_identity() const {
    FFMatrix z = *this;
    for (int i = 0; i < rows_ && i < cols_; ++i) z(i, i) ^= 1U;
    return z;
  }

  /// Row-major, d bits per entry, packed little-endian.
  void append_bytes(std::string& out, int bits) const {
    unsigned acc = 0;
    int filled = 0;
    for (FFElement x : a_) {
      for (int b = 0; b < bits; ++b) {
        acc |= ((x >> b) & 1U) << filled;
        if (++filled == 8) {
          out.push_back(static_cast<char>(acc));
          acc = 0;
          filled = 0;
        }
      }
    }
    if (filled) out.push_back(static_cast<char>(acc));
  }

  friend bool operator==(const FFMatrix&, const FFMatrix&) = default;

 private:
  std::size_t idx(int i, int j) const noexcept {
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(cols_) + static_cast<std::size_t>(j);
  }

  int rows_ = 0;
  int cols_ = 0;
  std::vector<FFElement> a_;
};

/// Rank by Gaussian elimination; the argument is consumed.
inline int ff_rank(FFMatrix M, const FiniteField& F) {
  int rank = 0;
  for (int col = 0; col < M.cols() && rank < M.rows(); ++col) {
    int piv = -1;
    for (int r = rank; r < M.rows(); ++r) {
      if (M(r, col) != 0) {
        piv = r;
        break;
      }
    }
    if (piv < 0) continue;
    if (piv != rank) {
      for (int j = col; j < M.cols(); ++j) std::swap(M(rank, j), M(piv, j));
    }
    const FFElement inv = F.inv(M(rank, col));
    for (int j = col; j < M.cols(); ++j) M(rank, j) = F.mul(M(rank, j), inv);
    for (int r = rank + 1; r < M.rows(); ++r) {
      const FFElement f = M(r, col);
      if (f == 0) continue;
      for (int j = col; j < M.cols(); ++j) M(r, j) ^= F.mul(f, M(rank, j));
    }
    ++rank;
  }
  return rank;
}

/// Entrywise evaluation of a Laurent or alpha-extended matrix.
template <class S>
FFMatrix specialize_matrix(const RMatrix<S>& M, const EvalMap& map) {
  FFMatrix out(M.size(), M.size());
  for (int i = 0; i < M.size(); ++i) {
    for (int j = 0; j < M.size(); ++j) out(i, j) = eval_apply(map, M(i, j));
  }
  return out;
}

}  // namespace ytwo

#endif  // YTWO_FFMATRIX_HPP
