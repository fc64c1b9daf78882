#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "origami/bigint.hpp"
#include "origami/error.hpp"
#include "origami/origami.hpp"
#include "origami/perm.hpp"
#include "origami/sl2.hpp"

namespace origami {

/// The six permutation-pair transforms:
///   T: (a, b a^-1)      T': (b^-1 a, b)     S: (b^-1, a)
///   T^-1: (a, b a)      T'^-1: (b a, b)     S^-1: (b, a^-1)
inline Origami apply_generator(const Origami& o, Gen g) {
  const Perm& a = o.sigma_a();
  const Perm& b = o.sigma_b();
  switch (g) {
    case Gen::T: return Origami::make(a, b * a.inverse());
    case Gen::TInv: return Origami::make(a, b * a);
    case Gen::Tp: return Origami::make(b.inverse() * a, b);
    case Gen::TpInv: return Origami::make(b * a, b);
    case Gen::S: return Origami::make(b.inverse(), a);
    case Gen::SInv: return Origami::make(b, a.inverse());
  }
  throw InputError("apply_generator: unknown generator");
}

/// T^k: (a, b a^-k); T'^k: (b^-k a, b).
inline Origami apply_power(const Origami& o, const GenPower& f) {
  const Perm& a = o.sigma_a();
  const Perm& b = o.sigma_b();
  const Perm& base = f.gen == Gen::T ? a : b;
  std::uint64_t order = 1;
  for (std::size_t len : base.cycle_lengths()) order = lcm_u64(order, len);
  // only the exponent modulo the order of the permutation matters
  long long k = BigInt(f.exponent % order).convert_to<long long>();
  if (f.gen == Gen::T) return Origami::make(a, b * power(a, -k));
  if (f.gen == Gen::Tp) return Origami::make(power(b, -k) * a, b);
  throw InputError("apply_power: only T and T' powers are supported");
}

/// Rightmost letter acts first.
inline Origami apply_word(const Origami& o, const Word& w) {
  Origami cur = o;
  for (auto it = w.rbegin(); it != w.rend(); ++it) cur = apply_generator(cur, *it);
  return cur;
}

inline Origami apply_matrix(const Origami& o, const MatZ& m) {
  if (m.det() != 1) throw InputError("apply_matrix: determinant is not 1");
  auto word = matrix_to_power_word(m);
  Origami cur = o;
  for (auto it = word.rbegin(); it != word.rend(); ++it) cur = apply_power(cur, *it);
  return cur;
}

inline bool isomorphic(const Origami& x, const Origami& y) {
  return x.squares() == y.squares() && canonical_form(x) == canonical_form(y);
}

/// SL(2,Z)-orbit of an origami with its coset permutations. Point i is
/// path_matrix[i] applied to point 0; the BFS tree uses the generator order
/// T, T^-1, T', T'^-1 and discovery order numbers the points.
struct OrbitTable {
  std::vector<Origami> points;
  std::vector<CanonicalForm> encodings;
  Perm sigma_T;
  Perm sigma_Tp;
  std::vector<Word> path_word;
  std::vector<MatZ> path_matrix;
  std::vector<std::optional<std::pair<std::size_t, Gen>>> parent;  // (predecessor, generator)
  std::unordered_map<CanonicalForm, std::size_t, CanonicalFormHash> index;

  std::size_t d() const { return points.size(); }

  std::optional<std::size_t> find(const Origami& o) const {
    auto it = index.find(canonical_form(o));
    if (it == index.end()) return std::nullopt;
    return it->second;
  }

  /// sigma_S = sigma_T^-1 sigma_T' sigma_T^-1, from S = T^-1 T' T^-1.
  Perm sigma_S() const {
    Perm t_inv = sigma_T.inverse();
    return t_inv * sigma_Tp * t_inv;
  }
};

constexpr std::size_t kDefaultOrbitBudget = 2'000'000;

inline OrbitTable orbit(const Origami& o, std::size_t max_points = kDefaultOrbitBudget) {
  if (!is_reduced(o)) throw NotReducedError("orbit: origami is not reduced (period lattice index " +
                                            std::to_string(period_lattice(o).index) + ")");
  OrbitTable t;
  auto add_point = [&](Origami x, CanonicalForm code, Word w, MatZ m,
                       std::optional<std::pair<std::size_t, Gen>> parent) {
    std::size_t idx = t.points.size();
    if (idx >= max_points) throw BudgetExceeded("orbit: more than " + std::to_string(max_points) + " points");
    t.index.emplace(code, idx);
    t.points.push_back(std::move(x));
    t.encodings.push_back(std::move(code));
    t.path_word.push_back(std::move(w));
    t.path_matrix.push_back(std::move(m));
    t.parent.push_back(parent);
    return idx;
  };
  add_point(o, canonical_form(o), {}, MatZ::identity(), std::nullopt);

  constexpr Gen order[] = {Gen::T, Gen::TInv, Gen::Tp, Gen::TpInv};
  std::vector<Point> img_T, img_Tinv, img_Tp, img_Tpinv;
  for (std::size_t i = 0; i < t.points.size(); ++i) {
    for (Gen g : order) {
      Origami next = apply_generator(t.points[i], g);
      CanonicalForm code = canonical_form(next);
      std::size_t j;
      if (auto it = t.index.find(code); it != t.index.end()) {
        j = it->second;
      } else {
        Word w{g};
        w.insert(w.end(), t.path_word[i].begin(), t.path_word[i].end());
        j = add_point(std::move(next), std::move(code), std::move(w), MatZ::of(g) * t.path_matrix[i],
                      std::make_pair(i, g));
      }
      auto p = static_cast<Point>(j);
      switch (g) {
        case Gen::T: img_T.push_back(p); break;
        case Gen::TInv: img_Tinv.push_back(p); break;
        case Gen::Tp: img_Tp.push_back(p); break;
        default: img_Tpinv.push_back(p); break;
      }
    }
  }
  t.sigma_T = Perm::from_images(std::move(img_T));
  t.sigma_Tp = Perm::from_images(std::move(img_Tp));
  if (t.sigma_T.inverse() != Perm::from_images(std::move(img_Tinv)) ||
      t.sigma_Tp.inverse() != Perm::from_images(std::move(img_Tpinv)))
    throw StructuralError("orbit: inverse generators do not act as inverses");
  return t;
}

/// Stabilizer of point 0 (the Veech group of the base origami).
struct VeechGroupData {
  std::size_t d = 0;
  std::vector<MatZ> generators;  // one Schreier generator per non-tree edge
  bool contains_minus_identity = false;
  CanonicalForm base;

  /// Generators including -I when it lies in the group.
  std::vector<MatZ> generators_with_sign() const {
    std::vector<MatZ> g = generators;
    if (contains_minus_identity) g.push_back(MatZ::minus_identity());
    return g;
  }
};

/// Schreier's lemma on the coset graph with edges i -> sigma_g(i), g in {T, T'}:
/// each non-tree edge yields A_j^-1 g A_i.
inline VeechGroupData veech_generators(const OrbitTable& t) {
  VeechGroupData v;
  v.d = t.d();
  v.base = t.encodings.at(0);
  for (std::size_t i = 0; i < t.d(); ++i) {
    for (Gen g : {Gen::T, Gen::Tp}) {
      const Perm& sigma = g == Gen::T ? t.sigma_T : t.sigma_Tp;
      std::size_t j = sigma(static_cast<Point>(i));
      bool tree = (t.parent[j] && t.parent[j]->first == i && t.parent[j]->second == g) ||
                  (t.parent[i] && t.parent[i]->first == j && t.parent[i]->second == inverse(g));
      if (tree) continue;
      v.generators.push_back(t.path_matrix[j].inverse() * MatZ::of(g) * t.path_matrix[i]);
    }
  }
  if (v.generators.size() != t.d() + 1)
    throw StructuralError("veech_generators: expected d+1 Schreier generators");
  v.contains_minus_identity = isomorphic(apply_matrix(t.points[0], MatZ::minus_identity()), t.points[0]);
  return v;
}

/// Generators of the Veech group of orbit point i: A_i G A_i^-1.
inline std::vector<MatZ> conjugate_generators(const VeechGroupData& v, const OrbitTable& t, std::size_t i) {
  std::vector<MatZ> out;
  const MatZ& a = t.path_matrix.at(i);
  MatZ a_inv = a.inverse();
  for (const MatZ& g : v.generators_with_sign()) out.push_back(a * g * a_inv);
  return out;
}

}  // namespace origami
