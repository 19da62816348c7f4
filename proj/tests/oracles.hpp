#ifndef YTWO_TESTS_ORACLES_HPP
#define YTWO_TESTS_ORACLES_HPP

// Slow, direct reimplementations used to cross-check the library.

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "ytwo/ytwo.hpp"

namespace oracle {

// GF(2)[s, 1/s] as a set of exponents.
struct Laurent {
  std::set<int> e;

  static Laurent of(const ytwo::LaurentScalar& x) {
    const auto v = x.exponents();
    return {std::set<int>(v.begin(), v.end())};
  }
  ytwo::LaurentScalar lib() const {
    const std::vector<int> v(e.begin(), e.end());
    return ytwo::LaurentScalar::from_exponents(v);
  }
  friend Laurent operator+(const Laurent& a, const Laurent& b) {
    Laurent r;
    std::set_symmetric_difference(a.e.begin(), a.e.end(), b.e.begin(), b.e.end(), std::inserter(r.e, r.e.end()));
    return r;
  }
  friend Laurent operator*(const Laurent& a, const Laurent& b) {
    std::map<int, int> count;
    for (int x : a.e) {
      for (int y : b.e) ++count[x + y];
    }
    Laurent r;
    for (auto [k, c] : count) {
      if (c % 2) r.e.insert(k);
    }
    return r;
  }
  friend bool operator==(const Laurent&, const Laurent&) = default;
};

// GF(2)[x] as a bit vector, bit i = coefficient of x^i.
using Poly = std::vector<bool>;

inline Poly trim(Poly p) {
  while (!p.empty() && !p.back()) p.pop_back();
  return p;
}

inline Poly from_bits(std::uint64_t b) {
  Poly p;
  for (; b; b >>= 1) p.push_back(b & 1);
  return p;
}

inline std::uint64_t to_bits(const Poly& p) {
  std::uint64_t b = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i]) b |= std::uint64_t{1} << i;
  }
  return b;
}

inline Poly pmul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, false);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (a[i] && b[j]) r[i + j] = !r[i + j];
    }
  }
  return trim(r);
}

// Long division; returns (quotient, remainder).
inline std::pair<Poly, Poly> pdivmod(Poly a, const Poly& b) {
  a = trim(a);
  const Poly d = trim(b);
  Poly q;
  if (a.size() >= d.size()) q.assign(a.size() - d.size() + 1, false);
  while (a.size() >= d.size()) {
    const std::size_t shift = a.size() - d.size();
    q[shift] = true;
    for (std::size_t i = 0; i < d.size(); ++i) {
      if (d[i]) a[i + shift] = !a[i + shift];
    }
    a = trim(a);
  }
  return {trim(q), a};
}

inline std::uint64_t field_mul(std::uint64_t a, std::uint64_t b, std::uint64_t modulus) {
  return to_bits(pdivmod(pmul(from_bits(a), from_bits(b)), from_bits(modulus)).second);
}

inline std::uint64_t field_pow(std::uint64_t a, long long e, std::uint64_t modulus) {
  std::uint64_t r = 1;
  for (long long i = 0; i < e; ++i) r = field_mul(r, a, modulus);
  return r;
}

// Degrees of the irreducible factors of (x^n + 1)/(x + 1), by trial division:
// the lowest-degree proper divisor is always irreducible.
inline std::vector<int> cyclotomic_degrees(int n) {
  Poly f(static_cast<std::size_t>(n), true);  // 1 + x + ... + x^{n-1}
  std::vector<int> out;
  while (f.size() > 1) {
    bool split = false;
    for (int d = 1; d < static_cast<int>(f.size()) - 1 && !split; ++d) {
      for (std::uint64_t low = 0; low < (std::uint64_t{1} << d); ++low) {
        const Poly g = from_bits(low | (std::uint64_t{1} << d));
        auto [q, r] = pdivmod(f, g);
        if (r.empty()) {
          out.push_back(d);
          f = q;
          split = true;
          break;
        }
      }
    }
    if (!split) {
      out.push_back(static_cast<int>(f.size()) - 1);
      break;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Orthogonal transvection on the standard module, built straight from
// x -> x + (x, w)/q(w) w with (e_i, e_j) = 1 for i != j.
inline ytwo::LMatrix transvection(const ytwo::QuadSpace& V, const std::vector<Laurent>& w) {
  const int n = V.rank();
  Laurent qw;
  for (int i = 0; i < n; ++i) qw = qw + w[i] * w[i] * Laurent::of(V.q_basis(i));
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) qw = qw + w[i] * w[j];
  }
  const Laurent inv = Laurent::of(ytwo::lp_invert(qw.lib()));
  ytwo::LMatrix M = ytwo::LMatrix::identity(n);
  for (int i = 0; i < n; ++i) {
    Laurent b;
    for (int j = 0; j < n; ++j) {
      if (j != i) b = b + w[j];
    }
    const Laurent c = b * inv;
    for (int j = 0; j < n; ++j) M(i, j) = (Laurent::of(M(i, j)) + c * w[j]).lib();
  }
  return M;
}

inline std::vector<Laurent> gf2_vector(int n, std::initializer_list<int> support) {
  std::vector<Laurent> w(static_cast<std::size_t>(n));
  for (int i : support) w[static_cast<std::size_t>(i)] = Laurent{{0}};
  return w;
}

// Clifford algebra by rewriting words: adjacent e_i e_j with i > j become
// e_j e_i + (e_i, e_j), and e_i e_i becomes q(e_i).
struct Clifford {
  const ytwo::QuadSpace* V;
  std::map<std::vector<int>, Laurent> terms;

  static void add_term(std::map<std::vector<int>, Laurent>& t, const std::vector<int>& w, const Laurent& c) {
    Laurent& slot = t[w];
    slot = slot + c;
    if (slot.e.empty()) t.erase(w);
  }

  void normalize_into(std::map<std::vector<int>, Laurent>& out, std::vector<int> w, Laurent c) const {
    for (std::size_t k = 0; k + 1 < w.size(); ++k) {
      if (w[k] < w[k + 1]) continue;
      std::vector<int> rest(w.begin(), w.begin() + static_cast<long>(k));
      rest.insert(rest.end(), w.begin() + static_cast<long>(k) + 2, w.end());
      if (w[k] == w[k + 1]) {
        normalize_into(out, rest, c * Laurent::of(V->q_basis(w[k])));
        return;
      }
      std::swap(w[k], w[k + 1]);
      normalize_into(out, w, c);
      normalize_into(out, rest, c);  // (e_i, e_j) = 1
      return;
    }
    add_term(out, w, c);
  }

  friend Clifford operator*(const Clifford& x, const Clifford& y) {
    Clifford r{x.V, {}};
    for (const auto& [a, ca] : x.terms) {
      for (const auto& [b, cb] : y.terms) {
        std::vector<int> w = a;
        w.insert(w.end(), b.begin(), b.end());
        x.normalize_into(r.terms, w, ca * cb);
      }
    }
    return r;
  }

  static Clifford of(const ytwo::LCliff& x) {
    Clifford r{&x.algebra()->space(), {}};
    for (const auto& [M, c] : x.terms()) {
      std::vector<int> w;
      for (int i = 0; i < 32; ++i) {
        if (M >> i & 1U) w.push_back(i);
      }
      r.terms[w] = Laurent::of(c);
    }
    return r;
  }
  friend bool operator==(const Clifford& a, const Clifford& b) { return a.terms == b.terms; }
};

}  // namespace oracle

#endif  // YTWO_TESTS_ORACLES_HPP
