#ifndef YTWO_PRESENTATION_HPP
#define YTWO_PRESENTATION_HPP

// Words in the generators a, a^-1, tau, s_i, s~_i = tau s_i of y~(m), the
// conjugates b_i of a, and the relator lists of Y(m), y(m) and y~(m).

#include <cctype>
#include <concepts>
#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "ytwo/error.hpp"

namespace ytwo {

enum class Letter : std::uint8_t { A, AInv, Tau, S, STilde };

struct Gen {
  Letter letter = Letter::A;
  int index = 0;  // 1..m-1 for S and STilde

  static constexpr Gen a() { return {Letter::A, 0}; }
  static constexpr Gen a_inv() { return {Letter::AInv, 0}; }
  static constexpr Gen tau() { return {Letter::Tau, 0}; }
  static constexpr Gen s(int i) { return {Letter::S, i}; }
  static constexpr Gen s_tilde(int i) { return {Letter::STilde, i}; }

  /// Every letter except a is an involution.
  constexpr Gen inverse() const {
    if (letter == Letter::A) return a_inv();
    if (letter == Letter::AInv) return a();
    return *this;
  }

  friend constexpr bool operator==(const Gen&, const Gen&) = default;
};

using Word = std::vector<Gen>;

inline void check_gen(const Gen& g, int m) {
  if ((g.letter == Letter::S || g.letter == Letter::STilde) && (g.index < 1 || g.index > m - 1)) {
    throw Error(Errc::IndexOutOfRange, "generator index " + std::to_string(g.index) + " outside 1.." +
                                           std::to_string(m - 1));
  }
}

inline Word operator+(Word x, const Word& y) {
  x.insert(x.end(), y.begin(), y.end());
  return x;
}

inline Word inverse(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(it->inverse());
  return out;
}

/// w^k, k may be negative.
inline Word power(const Word& w, int k) {
  const Word base = k < 0 ? inverse(w) : w;
  Word out;
  for (int i = 0; i < (k < 0 ? -k : k); ++i) out = out + base;
  return out;
}

/// x^g = g^-1 x g
inline Word conjugate(const Word& x, const Word& g) { return inverse(g) + x + g; }

/// [x, y] = x^-1 y^-1 x y
inline Word commutator(const Word& x, const Word& y) { return inverse(x) + inverse(y) + x + y; }

/// b_1 = a, b_i = b_{i-1}^{s~_{i-1}}.
inline Word b_word(int i, int m) {
  if (i < 1 || i > m) throw Error(Errc::IndexOutOfRange, "b index " + std::to_string(i) + " outside 1.." + std::to_string(m));
  Word w{Gen::a()};
  for (int j = 1; j < i; ++j) w = conjugate(w, {Gen::s_tilde(j)});
  return w;
}

/// b_i^k as a single conjugate of a^k.
inline Word b_power(int i, int k, int m) {
  if (i < 1 || i > m) throw Error(Errc::IndexOutOfRange, "b index " + std::to_string(i) + " outside 1.." + std::to_string(m));
  Word conj;
  for (int j = 1; j < i; ++j) conj.push_back(Gen::s_tilde(j));
  return conjugate(power({Gen::a()}, k), conj);
}

/// Rewrites a word with an even number of tau letters into the letters
/// a, a^-1, s_i of y(m), using s~_i = tau s_i, tau s_i = s_i tau, tau a tau = a^-1.
inline Word eliminate_tau(const Word& w) {
  Word out;
  bool odd = false;
  for (const Gen& g : w) {
    switch (g.letter) {
      case Letter::Tau: odd = !odd; break;
      case Letter::STilde:
        odd = !odd;
        out.push_back(Gen::s(g.index));
        break;
      case Letter::S: out.push_back(g); break;
      case Letter::A: out.push_back(odd ? Gen::a_inv() : Gen::a()); break;
      case Letter::AInv: out.push_back(odd ? Gen::a() : Gen::a_inv()); break;
    }
  }
  if (odd) throw Error(Errc::BadParams, "word has odd tau-parity and does not lie in y(m)");
  return out;
}

/// a = A, A = a^-1, t = tau, s<i> = s_i, S<i> = s~_i
inline std::string to_string(const Word& w) {
  std::string out;
  for (const Gen& g : w) {
    switch (g.letter) {
      case Letter::A: out += 'a'; break;
      case Letter::AInv: out += 'A'; break;
      case Letter::Tau: out += 't'; break;
      case Letter::S: out += 's' + std::to_string(g.index); break;
      case Letter::STilde: out += 'S' + std::to_string(g.index); break;
    }
  }
  return out;
}

inline Word parse_word(std::string_view text) {
  Word w;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i++];
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    if (c == 'a') {
      w.push_back(Gen::a());
    } else if (c == 'A') {
      w.push_back(Gen::a_inv());
    } else if (c == 't') {
      w.push_back(Gen::tau());
    } else if (c == 's' || c == 'S') {
      std::size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      if (j == i) throw Error(Errc::BadParams, "missing index after '" + std::string(1, c) + "'");
      const int idx = std::stoi(std::string(text.substr(i, j - i)));
      w.push_back(c == 's' ? Gen::s(idx) : Gen::s_tilde(idx));
      i = j;
    } else {
      throw Error(Errc::BadParams, "unknown letter '" + std::string(1, c) + "'");
    }
  }
  return w;
}

// ---------------------------------------------------------------------------
// Relation schedules

enum class Flavor { Y, y, y_tilde };

inline std::string_view flavor_name(Flavor f) {
  switch (f) {
    case Flavor::Y: return "Y";
    case Flavor::y: return "y";
    case Flavor::y_tilde: return "y-tilde";
  }
  return "?";
}

struct Relator {
  std::string name;
  Word word;
};

struct RelationSchedule {
  int m = 0;
  int K = 0;
  Flavor flavor = Flavor::y;
  std::vector<Relator> relators;

  const Relator* find(std::string_view name) const {
    for (const auto& r : relators) {
      if (r.name == name) return &r;
    }
    return nullptr;
  }
};

/// Relators truncated at |k| <= K for the Z-indexed families.
inline RelationSchedule schedule(int m, int K, Flavor flavor) {
  if (m < 3 || K < 1) {
    throw Error(Errc::BadParams, "schedule needs m >= 3 and K >= 1, got m=" + std::to_string(m) +
                                     " K=" + std::to_string(K));
  }
  RelationSchedule out{m, K, flavor, {}};
  auto add = [&](std::string name, Word w) { out.relators.push_back({std::move(name), std::move(w)}); };

  if (flavor == Flavor::Y) {
    for (int i = 1; i <= m; ++i) {
      for (int j = 1; j <= m; ++j) {
        if (i == j) continue;
        for (int k = -K; k <= K; ++k) {
          if (k == 0) continue;
          add("pair_" + std::to_string(i) + "_" + std::to_string(j) + "_k" + std::to_string(k),
              power(b_power(i, k, m) + b_power(j, k, m), 2));
        }
      }
    }
    return out;
  }

  // Coxeter relations of S_m on s_1..s_{m-1}
  for (int i = 1; i < m; ++i) add("sq_" + std::to_string(i), {Gen::s(i), Gen::s(i)});
  for (int i = 1; i + 1 < m; ++i) {
    add("braid_" + std::to_string(i) + std::to_string(i + 1), power({Gen::s(i), Gen::s(i + 1)}, 3));
  }
  for (int i = 1; i < m; ++i) {
    for (int j = i + 2; j < m; ++j) {
      add("far_" + std::to_string(i) + std::to_string(j), power({Gen::s(i), Gen::s(j)}, 2));
    }
  }
  // [s_1, s_1^{a^k}]
  for (int k = 1; k <= K; ++k) {
    add("comm_k" + std::to_string(k), commutator({Gen::s(1)}, conjugate({Gen::s(1)}, power({Gen::a()}, k))));
  }
  // a^{s_i} = a^-1
  for (int i = 2; i < m; ++i) add("inv_s" + std::to_string(i), {Gen::s(i), Gen::a(), Gen::s(i), Gen::a()});

  if (flavor == Flavor::y_tilde) {
    add("tau_sq", {Gen::tau(), Gen::tau()});
    for (int i = 1; i < m; ++i) {
      add("tau_comm_s" + std::to_string(i), commutator({Gen::tau()}, {Gen::s(i)}));
    }
    add("tau_inverts_a", {Gen::tau(), Gen::a(), Gen::tau(), Gen::a()});
  }
  return out;
}

// ---------------------------------------------------------------------------
// Evaluation in a representation

template <class R>
concept Representation = requires(const R& rep, Gen g) {
  typename R::element_type;
  { rep.identity() } -> std::convertible_to<typename R::element_type>;
  { rep.image(g) } -> std::convertible_to<typename R::element_type>;
  { rep.m() } -> std::convertible_to<int>;
};

/// Product of the letter images in word order.
template <Representation R>
typename R::element_type evaluate(const Word& word, const R& rep) {
  typename R::element_type acc = rep.identity();
  for (const Gen& g : word) {
    check_gen(g, rep.m());
    acc = acc * rep.image(g);
  }
  return acc;
}

/// Uniform random word over all letters of y~(m) (or y(m) when with_tau is false).
template <class Rng>
Word random_word(Rng& rng, int m, int max_len, bool with_tau = true) {
  std::uniform_int_distribution<int> len_dist(0, max_len);
  const int letters = with_tau ? 3 + 2 * (m - 1) : 2 + (m - 1);
  std::uniform_int_distribution<int> pick(0, letters - 1);
  Word w;
  const int len = len_dist(rng);
  for (int i = 0; i < len; ++i) {
    int c = pick(rng);
    if (c == 0) {
      w.push_back(Gen::a());
    } else if (c == 1) {
      w.push_back(Gen::a_inv());
    } else if (with_tau && c == 2) {
      w.push_back(Gen::tau());
    } else {
      c -= with_tau ? 3 : 2;
      if (c < m - 1) {
        w.push_back(Gen::s(c + 1));
      } else {
        w.push_back(Gen::s_tilde(c - (m - 1) + 1));
      }
    }
  }
  return w;
}

}  // namespace ytwo

#endif  // YTWO_PRESENTATION_HPP
