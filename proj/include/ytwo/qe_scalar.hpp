#ifndef YTWO_QE_SCALAR_HPP
#define YTWO_QE_SCALAR_HPP

// The quadratic extension R[alpha]/(alpha^2 + s alpha + 1) over R = GF(2)[s, s^-1].
// alpha and alpha^-1 = s + alpha are the eigenvalues of psi(a).

#include <ostream>
#include <string>

#include "ytwo/laurent.hpp"

namespace ytwo {

class QEScalar {
 public:
  QEScalar() = default;
  QEScalar(LaurentScalar c0, LaurentScalar c1 = {}) : c0_(std::move(c0)), c1_(std::move(c1)) {}

  static QEScalar one() { return QEScalar(LaurentScalar::one()); }
  static QEScalar alpha() { return QEScalar({}, LaurentScalar::one()); }
  static QEScalar alpha_inv() { return QEScalar(LaurentScalar::s(), LaurentScalar::one()); }

  const LaurentScalar& c0() const noexcept { return c0_; }
  const LaurentScalar& c1() const noexcept { return c1_; }

  bool is_zero() const noexcept { return c0_.is_zero() && c1_.is_zero(); }
  bool is_one() const noexcept { return c0_.is_one() && c1_.is_zero(); }
  /// Lies in the Laurent subring (no alpha component).
  bool is_base() const noexcept { return c1_.is_zero(); }

  /// N(c0 + c1 alpha) = c0^2 + s c0 c1 + c1^2, the product with the conjugate.
  LaurentScalar norm() const {
    return c0_.squared() + (c0_ * c1_).shifted(1) + c1_.squared();
  }

  QEScalar pow(long long e) const {
    QEScalar base = e < 0 ? inverse_unit() : *this;
    unsigned long long k = e < 0 ? static_cast<unsigned long long>(-e) : static_cast<unsigned long long>(e);
    QEScalar result = one();
    while (k) {
      if (k & 1U) result = result * base;
      k >>= 1;
      if (k) base = base * base;
    }
    return result;
  }

  /// Inverse via the norm; requires the norm to be a Laurent unit.
  QEScalar inverse_unit() const {
    const LaurentScalar n_inv = lp_invert(norm());
    // conjugate: alpha -> alpha^-1 = s + alpha
    QEScalar conj(c0_ + c1_.shifted(1), c1_);
    return conj * QEScalar(n_inv);
  }

  QEScalar& operator+=(const QEScalar& o) {
    c0_ += o.c0_;
    c1_ += o.c1_;
    return *this;
  }
  friend QEScalar operator+(QEScalar a, const QEScalar& b) {
    a += b;
    return a;
  }

  friend QEScalar operator*(const QEScalar& x, const QEScalar& y) {
    if (x.is_base() && y.is_base()) return QEScalar(x.c0_ * y.c0_);
    const LaurentScalar hi = x.c1_ * y.c1_;
    // alpha^2 = s alpha + 1
    return QEScalar(x.c0_ * y.c0_ + hi, x.c0_ * y.c1_ + x.c1_ * y.c0_ + hi.shifted(1));
  }
  friend QEScalar operator*(const QEScalar& x, const LaurentScalar& y) {
    return QEScalar(x.c0_ * y, x.c1_ * y);
  }
  friend QEScalar operator*(const LaurentScalar& y, const QEScalar& x) { return x * y; }
  QEScalar& operator*=(const QEScalar& o) {
    *this = *this * o;
    return *this;
  }

  friend bool operator==(const QEScalar& a, const QEScalar& b) noexcept {
    return a.c0_ == b.c0_ && a.c1_ == b.c1_;
  }

  std::string to_string() const {
    if (c1_.is_zero()) return c0_.to_string();
    std::string out;
    if (!c0_.is_zero()) out = c0_.to_string() + " + ";
    out += "(" + c1_.to_string() + ")a";
    return out;
  }
  friend std::ostream& operator<<(std::ostream& os, const QEScalar& x) { return os << x.to_string(); }

 private:
  LaurentScalar c0_;
  LaurentScalar c1_;
};

inline QEScalar qe_mul(const QEScalar& x, const QEScalar& y) { return x * y; }

}  // namespace ytwo

#endif  // YTWO_QE_SCALAR_HPP
