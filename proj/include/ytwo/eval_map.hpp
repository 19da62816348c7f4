#ifndef YTWO_EVAL_MAP_HPP
#define YTWO_EVAL_MAP_HPP

// Evaluation homomorphisms GF(2)[s, s^-1][alpha] -> GF(2^d) with alpha -> zeta,
// a root of unity of odd order n, hence s -> zeta + zeta^-1 and t -> s^2.

#include <algorithm>
#include <memory>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "ytwo/finite_field.hpp"
#include "ytwo/laurent.hpp"
#include "ytwo/qe_scalar.hpp"

namespace ytwo {

struct EvalMap {
  int n = 0;  // multiplicative order of zeta
  std::shared_ptr<const FiniteField> field;
  FFElement zeta = 0;
  FFElement s_image = 0;
  FFElement t_image = 0;

  FFElement alpha_image() const noexcept { return zeta; }
  const FiniteField& F() const noexcept { return *field; }
};

/// Multiplicative order of 2 modulo odd n.
inline int order_of_two_mod(int n) {
  if (n < 3 || n % 2 == 0) throw Error(Errc::EvenN, "n must be odd and >= 3, got " + std::to_string(n));
  int d = 1;
  long long x = 2 % n;
  while (x != 1) {
    x = (x * 2) % n;
    ++d;
  }
  return d;
}

/// Builds the map from an explicit root of unity (its order becomes map.n).
inline EvalMap eval_map_from_root(std::shared_ptr<const FiniteField> field, FFElement zeta) {
  EvalMap map;
  map.field = std::move(field);
  const FiniteField& F = *map.field;
  map.zeta = zeta;
  map.n = static_cast<int>(F.multiplicative_order(zeta));
  if (map.n % 2 == 0 || map.n < 3) {
    throw Error(Errc::EvenN, "root order " + std::to_string(map.n) + " must be odd and >= 3");
  }
  map.s_image = FiniteField::add(zeta, F.inv(zeta));
  map.t_image = F.mul(map.s_image, map.s_image);
  return map;
}

/// GF(2^d) with d = ord_n(2) (or the caller's modulus of that degree) and
/// zeta = g^((2^d-1)/n) for the least primitive element g.
inline EvalMap make_eval_map(int n, std::optional<gf2x::Poly> modulus = std::nullopt) {
  if (n % 2 == 0) throw Error(Errc::EvenN, "n must be odd, got " + std::to_string(n));
  if (n < 3) throw Error(Errc::BadParams, "n must be >= 3, got " + std::to_string(n));
  const int d = order_of_two_mod(n);
  gf2x::Poly mod = modulus.value_or(FiniteField::default_modulus(d));
  if (gf2x::degree(mod) != d) {
    throw Error(Errc::BadModulus, gf2x::to_string(mod) + " has degree " +
                                      std::to_string(gf2x::degree(mod)) + ", need " + std::to_string(d));
  }
  auto field = std::make_shared<const FiniteField>(mod);
  const FFElement zeta = field->pow(field->generator(), static_cast<long long>(field->group_order() / n));
  return eval_map_from_root(std::move(field), zeta);
}

inline FFElement eval_apply(const EvalMap& map, const LaurentScalar& x) {
  const FiniteField& F = map.F();
  const long long g = F.group_order();
  const long long ls = F.log(map.s_image);
  FFElement acc = 0;
  for (int e : x.exponents()) {
    long long l = (ls * (e % g)) % g;
    if (l < 0) l += g;
    acc ^= F.exp(static_cast<std::uint64_t>(l));
  }
  return acc;
}

inline FFElement eval_apply(const EvalMap& map, const QEScalar& x) {
  return eval_apply(map, x.c0()) ^ map.F().mul(eval_apply(map, x.c1()), map.zeta);
}

/// Degrees of the irreducible factors of (x^n + 1)/(x + 1) over GF(2), ascending.
/// Distinct-degree factorization; the input is squarefree for odd n.
inline std::vector<int> cyclotomic_split(int n) {
  if (n % 2 == 0) throw Error(Errc::EvenN, "n must be odd, got " + std::to_string(n));
  if (n < 3 || n > 63) throw Error(Errc::BadParams, "n must lie in 3..63, got " + std::to_string(n));
  gf2x::Poly f = gf2x::divmod((gf2x::Poly{1} << n) | 1U, 0b11).first;
  std::vector<int> degrees;
  gf2x::Poly h = gf2x::mod(2, f);  // x^(2^i) mod f
  for (int i = 1; gf2x::degree(f) >= 2 * i; ++i) {
    h = gf2x::mulmod(h, h, f);
    const gf2x::Poly g = gf2x::gcd(h ^ gf2x::mod(2, f), f);
    if (g != 1) {
      for (int c = gf2x::degree(g) / i; c > 0; --c) degrees.push_back(i);
      f = gf2x::divmod(f, g).first;
      h = gf2x::mod(h, f);
    }
  }
  if (gf2x::degree(f) > 0) degrees.push_back(gf2x::degree(f));
  std::sort(degrees.begin(), degrees.end());
  return degrees;
}

/// Least representative of each orbit of j -> 2j on (Z/n) \ {0}; the orbits
/// index the field summands of the augmentation ideal of GF(2)C_n.
inline std::vector<int> frobenius_orbit_representatives(int n) {
  if (n % 2 == 0 || n < 3) throw Error(Errc::EvenN, "n must be odd and >= 3");
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  std::vector<int> reps;
  for (int j = 1; j < n; ++j) {
    if (seen[static_cast<std::size_t>(j)]) continue;
    reps.push_back(j);
    for (int k = j; !seen[static_cast<std::size_t>(k)]; k = (2 * k) % n) seen[static_cast<std::size_t>(k)] = true;
  }
  return reps;
}

}  // namespace ytwo

#endif  // YTWO_EVAL_MAP_HPP
