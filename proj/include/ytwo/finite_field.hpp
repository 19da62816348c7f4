#ifndef YTWO_FINITE_FIELD_HPP
#define YTWO_FINITE_FIELD_HPP

// GF(2)[x] helpers on 64-bit words and table-driven GF(2^d), d <= 20.

#include <bit>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ytwo/error.hpp"

namespace ytwo {

namespace gf2x {

/// Polynomials over GF(2) of degree <= 63; bit i is the coefficient of x^i.
using Poly = std::uint64_t;

inline int degree(Poly p) noexcept { return p ? 63 - std::countl_zero(p) : -1; }

inline std::pair<Poly, Poly> divmod(Poly a, Poly b) {
  if (b == 0) throw Error(Errc::ZeroInput, "polynomial division by zero");
  const int db = degree(b);
  Poly q = 0;
  for (int da = degree(a); da >= db; da = degree(a)) {
    q |= Poly{1} << (da - db);
    a ^= b << (da - db);
  }
  return {q, a};
}

inline Poly mod(Poly a, Poly m) { return divmod(a, m).second; }

inline Poly gcd(Poly a, Poly b) {
  while (b) {
    a = mod(a, b);
    std::swap(a, b);
  }
  return a;
}

/// a * b mod m, with a and b already reduced.
inline Poly mulmod(Poly a, Poly b, Poly m) {
  const int dm = degree(m);
  Poly r = 0;
  for (int i = degree(b); i >= 0; --i) {
    const bool top = dm == 64 ? false : ((r >> (dm - 1)) & 1U);
    r <<= 1;
    if (top) r ^= m;
    if ((b >> i) & 1U) r ^= a;
  }
  return r;
}

/// x^(2^k) mod m by repeated squaring.
inline Poly frobenius_power_of_x(int k, Poly m) {
  Poly r = mod(2, m);
  for (int i = 0; i < k; ++i) r = mulmod(r, r, m);
  return r;
}

inline std::vector<int> prime_divisors(unsigned long long n) {
  std::vector<int> ps;
  for (unsigned long long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      ps.push_back(static_cast<int>(p));
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) ps.push_back(static_cast<int>(n));
  return ps;
}

/// Rabin's irreducibility test.
inline bool is_irreducible(Poly f) {
  const int d = degree(f);
  if (d < 1) return false;
  if (d == 1) return true;
  if ((f & 1U) == 0) return false;
  if (frobenius_power_of_x(d, f) != mod(2, f)) return false;
  for (int p : prime_divisors(static_cast<unsigned long long>(d))) {
    const Poly h = frobenius_power_of_x(d / p, f) ^ mod(2, f);
    if (gcd(h, f) != 1) return false;
  }
  return true;
}

inline std::string to_string(Poly p) {
  if (p == 0) return "0";
  std::string out;
  for (int i = degree(p); i >= 0; --i) {
    if (!((p >> i) & 1U)) continue;
    if (!out.empty()) out += '+';
    if (i == 0) {
      out += '1';
    } else if (i == 1) {
      out += 'x';
    } else {
      out += "x^" + std::to_string(i);
    }
  }
  return out;
}

}  // namespace gf2x

using FFElement = std::uint32_t;

/// GF(2^d) = GF(2)[x]/(modulus); elements are d-bit vectors.
class FiniteField {
 public:
  static constexpr int kMaxDegree = 20;

  explicit FiniteField(gf2x::Poly modulus) : modulus_(modulus), degree_(gf2x::degree(modulus)) {
    if (degree_ < 1 || degree_ > kMaxDegree) {
      throw Error(Errc::BadModulus, "degree " + std::to_string(degree_) + " outside 1.." +
                                        std::to_string(kMaxDegree));
    }
    if (!gf2x::is_irreducible(modulus)) {
      throw Error(Errc::BadModulus, gf2x::to_string(modulus) + " is reducible");
    }
    build_tables();
  }

  /// Lowest-weight, then numerically least, irreducible of degree d.
  static gf2x::Poly default_modulus(int d) {
    if (d < 1 || d > 32) throw Error(Errc::BadParams, "degree out of range");
    if (d == 1) return 0b10;  // x; GF(2) itself
    const gf2x::Poly lo = (gf2x::Poly{1} << d) | 1U;
    const gf2x::Poly hi = gf2x::Poly{1} << (d + 1);
    // irreducibles of degree > 1 have an odd number of terms
    for (int weight = 3; weight <= d + 1; weight += 2) {
      for (gf2x::Poly f = lo; f < hi; f += 2) {
        if (std::popcount(f) == weight && gf2x::is_irreducible(f)) return f;
      }
    }
    throw Error(Errc::BadModulus, "no irreducible polynomial found");
  }

  int degree() const noexcept { return degree_; }
  gf2x::Poly modulus() const noexcept { return modulus_; }
  std::uint32_t size() const noexcept { return std::uint32_t{1} << degree_; }
  std::uint32_t group_order() const noexcept { return size() - 1; }
  FFElement generator() const noexcept { return generator_; }

  static FFElement add(FFElement a, FFElement b) noexcept { return a ^ b; }

  FFElement mul(FFElement a, FFElement b) const noexcept {
    if (a == 0 || b == 0) return 0;
    return exp_[log_[a] + log_[b]];
  }

  FFElement inv(FFElement a) const {
    if (a == 0) throw Error(Errc::ZeroInput, "inverse of 0 in GF(2^" + std::to_string(degree_) + ")");
    return exp_[group_order() - log_[a]];
  }

  FFElement pow(FFElement a, long long e) const {
    if (a == 0) {
      if (e <= 0) throw Error(Errc::ZeroInput, "0 to a nonpositive power");
      return 0;
    }
    const long long g = group_order();
    long long l = (static_cast<long long>(log_[a]) * (e % g)) % g;
    if (l < 0) l += g;
    return exp_[static_cast<std::size_t>(l)];
  }

  std::uint32_t log(FFElement a) const {
    if (a == 0) throw Error(Errc::ZeroInput, "log of 0");
    return log_[a];
  }
  FFElement exp(std::uint64_t l) const noexcept { return exp_[l % group_order()]; }

  std::uint64_t multiplicative_order(FFElement a) const {
    if (a == 0) throw Error(Errc::ZeroInput, "order of 0");
    std::uint64_t ord = group_order();
    for (int p : gf2x::prime_divisors(ord)) {
      while (ord % static_cast<std::uint64_t>(p) == 0 &&
             pow(a, static_cast<long long>(ord / static_cast<std::uint64_t>(p))) == 1) {
        ord /= static_cast<std::uint64_t>(p);
      }
    }
    return ord;
  }

  /// a lies in the subfield GF(2^k) (k must divide the degree).
  bool in_subfield(FFElement a, int k) const {
    FFElement x = a;
    for (int i = 0; i < k; ++i) x = mul(x, x);
    return x == a;
  }

  /// Little-endian bit string of length d.
  std::string to_bits(FFElement a) const {
    std::string s(static_cast<std::size_t>(degree_), '0');
    for (int i = 0; i < degree_; ++i) {
      if ((a >> i) & 1U) s[static_cast<std::size_t>(i)] = '1';
    }
    return s;
  }

  friend bool operator==(const FiniteField& a, const FiniteField& b) noexcept {
    return a.modulus_ == b.modulus_;
  }

 private:
  FFElement slow_mul(FFElement a, FFElement b) const {
    return static_cast<FFElement>(gf2x::mulmod(a, b, modulus_));
  }

  void build_tables() {
    const std::uint32_t q = size();
    const std::uint32_t g1 = q - 1;
    if (g1 == 1) {
      generator_ = 1;
      exp_.assign(2, 1);
      log_.assign(2, 0);
      return;
    }
    const auto primes = gf2x::prime_divisors(g1);
    for (FFElement cand = 2; cand < q; ++cand) {
      bool primitive = true;
      for (int p : primes) {
        FFElement x = 1, base = cand;
        std::uint32_t e = g1 / static_cast<std::uint32_t>(p);
        while (e) {
          if (e & 1U) x = slow_mul(x, base);
          base = slow_mul(base, base);
          e >>= 1;
        }
        if (x == 1) {
          primitive = false;
          break;
        }
      }
      if (primitive) {
        generator_ = cand;
        break;
      }
    }
    exp_.assign(2 * static_cast<std::size_t>(g1), 0);
    log_.assign(q, 0);
    FFElement x = 1;
    for (std::uint32_t i = 0; i < g1; ++i) {
      exp_[i] = x;
      exp_[i + g1] = x;
      log_[x] = i;
      x = slow_mul(x, generator_);
    }
  }

  gf2x::Poly modulus_;
  int degree_;
  FFElement generator_ = 1;
  std::vector<FFElement> exp_;
  std::vector<std::uint32_t> log_;
};

}  // namespace ytwo

#endif  // YTWO_FINITE_FIELD_HPP
