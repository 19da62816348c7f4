#ifndef YTWO_LAURENT_HPP
#define YTWO_LAURENT_HPP

// Elements of GF(2)[s, s^-1], stored as an offset bit vector.
//
// Bit b of word w is the coefficient of s^(low + 64w + b).  The canonical form
// has bit 0 of the first word set and a nonzero last word; zero is the empty
// vector.  t is the element s^2 throughout the library.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include <boost/container/small_vector.hpp>

#include "ytwo/error.hpp"

namespace ytwo {

class LaurentScalar {
 public:
  using Word = std::uint64_t;
  using Storage = boost::container::small_vector<Word, 2>;

  LaurentScalar() = default;

  static LaurentScalar one() { return monomial(0); }

  /// s^e
  static LaurentScalar monomial(int e) {
    LaurentScalar r;
    r.low_ = e;
    r.bits_.push_back(1);
    return r;
  }

  static LaurentScalar s() { return monomial(1); }
  static LaurentScalar t() { return monomial(2); }
  static LaurentScalar t_inv() { return monomial(-2); }

  /// Repeated exponents cancel, as they would in a sum.
  static LaurentScalar from_exponents(std::span<const int> exps) {
    LaurentScalar r;
    if (exps.empty()) return r;
    auto [lo, hi] = std::minmax_element(exps.begin(), exps.end());
    r.low_ = *lo;
    r.bits_.assign(static_cast<std::size_t>((*hi - *lo) / 64 + 1), 0);
    for (int e : exps) {
      const int off = e - r.low_;
      r.bits_[static_cast<std::size_t>(off / 64)] ^= Word{1} << (off % 64);
    }
    r.normalize();
    return r;
  }
  static LaurentScalar from_exponents(std::initializer_list<int> exps) {
    return from_exponents(std::span<const int>(exps.begin(), exps.size()));
  }

  bool is_zero() const noexcept { return bits_.empty(); }
  bool is_one() const noexcept { return is_monomial() && low_ == 0; }
  bool is_monomial() const noexcept { return bits_.size() == 1 && bits_[0] == 1; }

  /// Lowest exponent present; 0 for the zero element.
  int low_degree() const noexcept { return low_; }
  int high_degree() const noexcept {
    if (is_zero()) return 0;
    return low_ + 64 * static_cast<int>(bits_.size() - 1) + (63 - std::countl_zero(bits_.back()));
  }
  std::size_t term_count() const noexcept {
    std::size_t c = 0;
    for (Word w : bits_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  bool coefficient(int e) const noexcept {
    if (is_zero() || e < low_) return false;
    const int off = e - low_;
    const auto w = static_cast<std::size_t>(off / 64);
    if (w >= bits_.size()) return false;
    return (bits_[w] >> (off % 64)) & 1U;
  }

  /// Sorted list of exponents with coefficient 1.
  std::vector<int> exponents() const {
    std::vector<int> out;
    out.reserve(term_count());
    for (std::size_t w = 0; w < bits_.size(); ++w) {
      Word x = bits_[w];
      while (x) {
        const int b = std::countr_zero(x);
        out.push_back(low_ + 64 * static_cast<int>(w) + b);
        x &= x - 1;
      }
    }
    return out;
  }

  /// Element of GF(2)[t, t^-1]: only even exponents.
  bool in_t_subring() const noexcept {
    if (is_zero()) return true;
    if (low_ % 2 != 0) return false;
    for (Word w : bits_) {
      if (w & 0xAAAAAAAAAAAAAAAAULL) return false;
    }
    return true;
  }
  /// Element of GF(2)[t]: even, nonnegative exponents.
  bool in_t_polynomials() const noexcept { return in_t_subring() && (is_zero() || low_ >= 0); }

  /// Multiplication by s^k.
  LaurentScalar shifted(int k) const {
    LaurentScalar r = *this;
    if (!r.is_zero()) r.low_ += k;
    return r;
  }

  /// Frobenius x -> x^2 (spreads bits).
  LaurentScalar squared() const {
    LaurentScalar r;
    if (is_zero()) return r;
    r.low_ = 2 * low_;
    r.bits_.assign(2 * bits_.size(), 0);
    for (std::size_t w = 0; w < bits_.size(); ++w) {
      r.bits_[2 * w] = spread(static_cast<std::uint32_t>(bits_[w]));
      r.bits_[2 * w + 1] = spread(static_cast<std::uint32_t>(bits_[w] >> 32));
    }
    r.normalize();
    return r;
  }

  LaurentScalar pow(unsigned e) const {
    LaurentScalar result = one();
    LaurentScalar base = *this;
    while (e) {
      if (e & 1U) result = result * base;
      e >>= 1;
      if (e) base = base * base;
    }
    return result;
  }

  LaurentScalar& operator+=(const LaurentScalar& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) {
      *this = o;
      return *this;
    }
    if (o.low_ < low_) {
      // rebase onto the lower offset
      LaurentScalar r;
      r.low_ = o.low_;
      r.bits_ = o.bits_;
      xor_shifted(r.bits_, bits_, low_ - o.low_);
      *this = std::move(r);
    } else {
      xor_shifted(bits_, o.bits_, o.low_ - low_);
    }
    normalize();
    return *this;
  }

  friend LaurentScalar operator+(LaurentScalar a, const LaurentScalar& b) {
    a += b;
    return a;
  }

  friend LaurentScalar operator*(const LaurentScalar& a, const LaurentScalar& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (a.is_monomial()) return b.shifted(a.low_);
    if (b.is_monomial()) return a.shifted(b.low_);
    const LaurentScalar& big = a.bits_.size() >= b.bits_.size() ? a : b;
    const LaurentScalar& small = &big == &a ? b : a;
    LaurentScalar r;
    r.low_ = a.low_ + b.low_;
    r.bits_.assign(a.bits_.size() + b.bits_.size(), 0);
    for (std::size_t w = 0; w < small.bits_.size(); ++w) {
      Word x = small.bits_[w];
      while (x) {
        const int bit = std::countr_zero(x);
        xor_shifted(r.bits_, big.bits_, 64 * static_cast<int>(w) + bit);
        x &= x - 1;
      }
    }
    r.normalize();
    return r;
  }

  LaurentScalar& operator*=(const LaurentScalar& o) {
    *this = *this * o;
    return *this;
  }

  friend bool operator==(const LaurentScalar& a, const LaurentScalar& b) noexcept {
    return a.low_ == b.low_ && a.bits_ == b.bits_;
  }

  /// Total order used for deterministic containers; not a ring order.
  friend bool operator<(const LaurentScalar& a, const LaurentScalar& b) noexcept {
    if (a.low_ != b.low_) return a.low_ < b.low_;
    return std::lexicographical_compare(a.bits_.begin(), a.bits_.end(), b.bits_.begin(),
                                        b.bits_.end());
  }

  std::string to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (int e : exponents()) {
      if (!out.empty()) out += '+';
      if (e == 0) {
        out += '1';
      } else if (e == 1) {
        out += 's';
      } else {
        out += "s^" + std::to_string(e);
      }
    }
    return out;
  }

  friend std::ostream& operator<<(std::ostream& os, const LaurentScalar& x) {
    return os << x.to_string();
  }

  std::size_t hash() const noexcept {
    std::size_t h = static_cast<std::size_t>(low_) * 0x9E3779B97F4A7C15ULL;
    for (Word w : bits_) h = (h ^ w) * 0x100000001B3ULL;
    return h;
  }

 private:
  static Word spread(std::uint32_t x) {
    Word v = x;
    v = (v | (v << 16)) & 0x0000FFFF0000FFFFULL;
    v = (v | (v << 8)) & 0x00FF00FF00FF00FFULL;
    v = (v | (v << 4)) & 0x0F0F0F0F0F0F0F0FULL;
    v = (v | (v << 2)) & 0x3333333333333333ULL;
    v = (v | (v << 1)) & 0x5555555555555555ULL;
    return v;
  }

  // dst ^= src << shift (shift >= 0, in bits); grows dst as needed.
  static void xor_shifted(Storage& dst, const Storage& src, int shift) {
    const auto ws = static_cast<std::size_t>(shift / 64);
    const int bs = shift % 64;
    const std::size_t need = src.size() + ws + (bs ? 1 : 0);
    if (dst.size() < need) dst.resize(need, 0);
    if (bs == 0) {
      for (std::size_t i = 0; i < src.size(); ++i) dst[i + ws] ^= src[i];
    } else {
      for (std::size_t i = 0; i < src.size(); ++i) {
        dst[i + ws] ^= src[i] << bs;
        dst[i + ws + 1] ^= src[i] >> (64 - bs);
      }
    }
  }

  void normalize() {
    while (!bits_.empty() && bits_.back() == 0) bits_.pop_back();
    if (bits_.empty()) {
      low_ = 0;
      return;
    }
    std::size_t lead = 0;
    while (bits_[lead] == 0) ++lead;
    if (lead) {
      bits_.erase(bits_.begin(), bits_.begin() + static_cast<std::ptrdiff_t>(lead));
      low_ += 64 * static_cast<int>(lead);
    }
    const int tz = std::countr_zero(bits_[0]);
    if (tz) {
      for (std::size_t i = 0; i < bits_.size(); ++i) {
        bits_[i] >>= tz;
        if (i + 1 < bits_.size()) bits_[i] |= bits_[i + 1] << (64 - tz);
      }
      low_ += tz;
      if (bits_.back() == 0) bits_.pop_back();
    }
  }

  int low_ = 0;
  Storage bits_;
};

/// Inverse in GF(2)[s, s^-1]; only monomials are units.
inline LaurentScalar lp_invert(const LaurentScalar& x) {
  if (x.is_zero()) throw Error(Errc::ZeroInput, "cannot invert 0");
  if (!x.is_monomial()) throw Error(Errc::NotUnit, x.to_string() + " is not a monomial");
  return LaurentScalar::monomial(-x.low_degree());
}

inline LaurentScalar lp_mul(const LaurentScalar& x, const LaurentScalar& y) { return x * y; }

}  // namespace ytwo

#endif  // YTWO_LAURENT_HPP
