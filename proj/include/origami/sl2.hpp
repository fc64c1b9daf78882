#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "origami/bigint.hpp"
#include "origami/error.hpp"
#include "origami/perm.hpp"

namespace origami {

/// Generators of SL(2,Z) acting on origamis. Tp is T' = [[1,0],[1,1]].
enum class Gen { T, TInv, Tp, TpInv, S, SInv };

inline Gen inverse(Gen g) {
  switch (g) {
    case Gen::T: return Gen::TInv;
    case Gen::TInv: return Gen::T;
    case Gen::Tp: return Gen::TpInv;
    case Gen::TpInv: return Gen::Tp;
    case Gen::S: return Gen::SInv;
    case Gen::SInv: return Gen::S;
  }
  return g;
}

inline const char* gen_name(Gen g) {
  switch (g) {
    case Gen::T: return "T";
    case Gen::TInv: return "T^-1";
    case Gen::Tp: return "T'";
    case Gen::TpInv: return "T'^-1";
    case Gen::S: return "S";
    case Gen::SInv: return "S^-1";
  }
  return "?";
}

using Word = std::vector<Gen>;

inline std::string word_to_string(const Word& w) {
  if (w.empty()) return "I";
  std::string out;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (k) out += ' ';
    out += gen_name(w[k]);
  }
  return out;
}

/// 2x2 integer matrix [[a,b],[c,d]] with unit determinant.
struct MatZ {
  BigInt a = 1, b = 0, c = 0, d = 1;

  static MatZ identity() { return {}; }
  static MatZ minus_identity() { return {-1, 0, 0, -1}; }
  static MatZ T() { return {1, 1, 0, 1}; }
  static MatZ Tp() { return {1, 0, 1, 1}; }
  static MatZ S() { return {0, -1, 1, 0}; }
  static MatZ T_power(const BigInt& k) { return {1, k, 0, 1}; }
  static MatZ Tp_power(const BigInt& k) { return {1, 0, k, 1}; }

  static MatZ of(Gen g) {
    switch (g) {
      case Gen::T: return T();
      case Gen::TInv: return {1, -1, 0, 1};
      case Gen::Tp: return Tp();
      case Gen::TpInv: return {1, 0, -1, 1};
      case Gen::S: return S();
      case Gen::SInv: return {0, 1, -1, 0};
    }
    return {};
  }

  BigInt det() const { return a * d - b * c; }
  MatZ inverse() const { return {d, -b, -c, a}; }
  bool is_identity() const { return a == 1 && b == 0 && c == 0 && d == 1; }

  friend MatZ operator*(const MatZ& x, const MatZ& y) {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c,
            x.c * y.b + x.d * y.d};
  }
  friend bool operator==(const MatZ&, const MatZ&) = default;
};

inline std::string to_string(const MatZ& m) {
  return "[[" + m.a.str() + "," + m.b.str() + "],[" + m.c.str() + "," + m.d.str() + "]]";
}

/// Parses "[[a,b],[c,d]]" (whitespace-insensitive); the determinant must be 1.
inline MatZ parse_matrix(std::string_view text) {
  std::vector<BigInt> values;
  std::string cleaned;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) cleaned += ch;
  if (cleaned.size() < 2 || cleaned.substr(0, 2) != "[[" ||
      cleaned.substr(cleaned.size() - 2) != "]]")
    throw InputError("matrix literal must look like [[a,b],[c,d]]");
  std::string number;
  for (char ch : cleaned) {
    if (ch == '-' || std::isdigit(static_cast<unsigned char>(ch))) {
      number += ch;
    } else if (!number.empty()) {
      values.emplace_back(number);
      number.clear();
    }
  }
  if (values.size() != 4) throw InputError("matrix literal needs four entries");
  MatZ m{values[0], values[1], values[2], values[3]};
  if (m.det() != 1) throw InputError("matrix determinant is not 1");
  return m;
}

/// Product of the generator matrices; the leftmost letter acts last.
inline MatZ word_to_matrix(const Word& word) {
  MatZ m;
  for (Gen g : word) m = m * MatZ::of(g);
  return m;
}

/// Factor [[1,k],[0,1]] (T) or [[1,0],[k,1]] (T') raised to a signed power.
struct GenPower {
  Gen gen = Gen::T;  // T or Tp
  BigInt exponent = 0;
};

/// Run-length word in T, T' whose product is `m`, found by the Euclidean
/// algorithm on the first column. -I is spelled as (T^-1 T' T^-1)^2.
inline std::vector<GenPower> matrix_to_power_word(const MatZ& m) {
  if (m.det() != 1) throw InputError("matrix_to_word: determinant is not 1");
  MatZ cur = m;
  std::vector<GenPower> prefix;  // m = product(prefix) * cur at every step
  auto push = [&](Gen g, const BigInt& k) {
    if (k == 0) return;
    if (!prefix.empty() && prefix.back().gen == g) {
      prefix.back().exponent += k;
      if (prefix.back().exponent == 0) prefix.pop_back();
    } else {
      prefix.push_back({g, k});
    }
  };
  while (cur.c != 0) {
    if (cur.a == 0) {
      // T*cur has first column (c, c)
      cur = MatZ::T() * cur;
      push(Gen::T, -1);
      continue;
    }
    if (abs(cur.a) > abs(cur.c)) {
      BigInt q = cur.a / cur.c;
      cur = MatZ::T_power(-q) * cur;
      push(Gen::T, q);
    } else {
      BigInt q = cur.c / cur.a;
      cur = MatZ::Tp_power(-q) * cur;
      push(Gen::Tp, q);
    }
  }
  // cur = [[a,b],[0,a]] with a = +-1
  if (cur.a == 1) {
    push(Gen::T, cur.b);
  } else {
    for (int rep = 0; rep < 2; ++rep) {
      push(Gen::T, -1);
      push(Gen::Tp, 1);
      push(Gen::T, -1);
    }
    push(Gen::T, -cur.b);
  }
  return prefix;
}

inline MatZ power_word_to_matrix(const std::vector<GenPower>& w) {
  MatZ m;
  for (const auto& f : w) m = m * (f.gen == Gen::T ? MatZ::T_power(f.exponent) : MatZ::Tp_power(f.exponent));
  return m;
}

/// Letter-by-letter word in T^{+-1}, T'^{+-1} whose product is `m`.
inline Word matrix_to_word(const MatZ& m) {
  Word out;
  for (const auto& f : matrix_to_power_word(m)) {
    Gen letter = f.exponent < 0 ? inverse(f.gen) : f.gen;
    BigInt count = abs(f.exponent);
    for (BigInt i = 0; i < count; ++i) out.push_back(letter);
  }
  return out;
}

/// Element of SL(2, Z/mZ); entries are residues in [0, m).
struct MatMod {
  std::uint64_t m = 1;
  std::uint64_t a = 0, b = 0, c = 0, d = 0;

  static MatMod identity(std::uint64_t m) { return reduce(MatZ::identity(), m); }

  static MatMod reduce(const MatZ& x, std::uint64_t m) {
    if (m == 0) throw InputError("modulus must be positive");
    return {m, mod_u64(x.a, m), mod_u64(x.b, m), mod_u64(x.c, m), mod_u64(x.d, m)};
  }

  MatMod reduced(std::uint64_t q) const {
    return {q, a % q, b % q, c % q, d % q};
  }

  friend MatMod operator*(const MatMod& x, const MatMod& y) {
    if (x.m != y.m) throw InputError("MatMod: modulus mismatch");
    auto mul = [m = x.m](std::uint64_t u, std::uint64_t v) {
      return static_cast<std::uint64_t>(static_cast<unsigned __int128>(u) * v % m);
    };
    auto add = [m = x.m](std::uint64_t u, std::uint64_t v) { return (u + v) % m; };
    return {x.m, add(mul(x.a, y.a), mul(x.b, y.c)), add(mul(x.a, y.b), mul(x.b, y.d)),
            add(mul(x.c, y.a), mul(x.d, y.c)), add(mul(x.c, y.b), mul(x.d, y.d))};
  }

  std::uint64_t det() const {
    auto p1 = static_cast<unsigned __int128>(a) * d % m;
    auto p2 = static_cast<unsigned __int128>(b) * c % m;
    return static_cast<std::uint64_t>((p1 + m - p2) % m);
  }

  bool is_identity() const { return a == 1 % m && b == 0 && c == 0 && d == 1 % m; }

  friend bool operator==(const MatMod&, const MatMod&) = default;
};

/// |SL(2, Z/mZ)| = m^3 prod_{p | m} (1 - p^-2).
inline BigInt sl2_order(std::uint64_t m) {
  if (m == 0) throw InputError("sl2_order: m must be positive");
  BigInt order = 1;
  for (auto [p, k] : factorize(m)) {
    BigInt q = 1;
    for (unsigned i = 0; i + 2 < 3 * k; ++i) q *= p;  // p^(3k-2)
    order *= q * (BigInt(p) * p - 1);
  }
  return order;
}

/// Disjoint union of (Z/q)^2 over the prime-power factors q of m.
struct CrtDomain {
  std::uint64_t modulus = 1;
  std::vector<std::uint64_t> prime_powers;  // ascending
  std::vector<std::size_t> offsets;
  std::size_t total_points = 0;

  explicit CrtDomain(std::uint64_t m) : modulus(m) {
    if (m == 0) throw InputError("CrtDomain: modulus must be positive");
    for (auto [p, k] : factorize(m)) {
      std::uint64_t q = 1;
      for (unsigned i = 0; i < k; ++i) q *= p;
      prime_powers.push_back(q);
    }
    std::sort(prime_powers.begin(), prime_powers.end());
    for (std::uint64_t q : prime_powers) {
      offsets.push_back(total_points);
      total_points += q * q;
    }
  }

  /// Degree of the permutation representation; 1 for m = 1 so Perm stays non-empty.
  std::size_t degree() const { return total_points == 0 ? 1 : total_points; }

  /// Index of the vector (x, y) in the block of prime power index `block`.
  std::size_t point(std::size_t block, std::uint64_t x, std::uint64_t y) const {
    return offsets[block] + x * prime_powers[block] + y;
  }
};

inline std::size_t crt_domain_size(std::uint64_t m) { return CrtDomain(m).total_points; }

/// v -> (M mod q) v on each block.
inline Perm perm_rep(const MatMod& mat, const CrtDomain& dom) {
  if (dom.modulus % mat.m != 0 && mat.m % dom.modulus != 0)
    throw InputError("perm_rep: modulus incompatible with domain");
  std::vector<Point> images(dom.degree());
  if (dom.total_points == 0) return Perm::identity(1);
  for (std::size_t blk = 0; blk < dom.prime_powers.size(); ++blk) {
    std::uint64_t q = dom.prime_powers[blk];
    MatMod r = mat.reduced(q);
    for (std::uint64_t x = 0; x < q; ++x)
      for (std::uint64_t y = 0; y < q; ++y) {
        std::uint64_t nx = (r.a * x + r.b * y) % q;
        std::uint64_t ny = (r.c * x + r.d * y) % q;
        images[dom.point(blk, x, y)] = static_cast<Point>(dom.point(blk, nx, ny));
      }
  }
  return Perm::from_images(std::move(images));
}

inline Perm perm_rep(const MatZ& mat, const CrtDomain& dom) {
  return perm_rep(MatMod::reduce(mat, dom.modulus), dom);
}

/// Largest divisor t of N with the same prime divisors as n.
inline std::uint64_t mpde(std::uint64_t n, std::uint64_t N) {
  if (n == 0 || N == 0 || N % n != 0) throw InputError("mpde: n must divide N");
  std::uint64_t t = 1;
  for (auto [p, k] : factorize(N))
    if (n % p == 0)
      for (unsigned i = 0; i < k; ++i) t *= p;
  return t;
}

/// The unique residue class mod N*M (coprime) matching x mod N and y mod M.
inline std::uint64_t crt_combine(std::uint64_t x, std::uint64_t N, std::uint64_t y, std::uint64_t M) {
  // x + N * ((y - x) * N^-1 mod M)
  auto inv_mod = [](std::int64_t a, std::int64_t m) {
    std::int64_t g = m, x0 = 0, x1 = 1, aa = a % m;
    if (m == 1) return std::int64_t{0};
    while (aa) {
      std::int64_t q = g / aa;
      std::int64_t t = g - q * aa;
      g = aa;
      aa = t;
      t = x0 - q * x1;
      x0 = x1;
      x1 = t;
    }
    if (g != 1) throw InputError("crt_combine: moduli not coprime");
    return ((x0 % m) + m) % m;
  };
  if (M == 1) return x % N;
  std::int64_t diff = (static_cast<std::int64_t>(y % M) - static_cast<std::int64_t>(x % M)) %
                      static_cast<std::int64_t>(M);
  if (diff < 0) diff += static_cast<std::int64_t>(M);
  auto inv = static_cast<unsigned __int128>(inv_mod(static_cast<std::int64_t>(N % M), static_cast<std::int64_t>(M)));
  auto k = static_cast<std::uint64_t>(static_cast<unsigned __int128>(diff) * inv % M);
  return x % N + N * k;
}

/// The element of SL(2, Z/NMZ) that is `x` mod N and `y` mod M.
inline MatMod crt_matrix(const MatZ& x, std::uint64_t N, const MatZ& y, std::uint64_t M) {
  MatMod xn = MatMod::reduce(x, N), ym = MatMod::reduce(y, M);
  return {N * M, crt_combine(xn.a, N, ym.a, M), crt_combine(xn.b, N, ym.b, M),
          crt_combine(xn.c, N, ym.c, M), crt_combine(xn.d, N, ym.d, M)};
}

}  // namespace origami
