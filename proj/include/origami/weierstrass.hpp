#pragma once

#include <string>
#include <vector>

#include "origami/error.hpp"
#include "origami/origami.hpp"
#include "origami/perm.hpp"

namespace origami {

/// The square permutation of the affine involution with derivative -I:
/// pi sigma_a = sigma_a^-1 pi, pi sigma_b = sigma_b^-1 pi, pi^2 = id.
/// Every candidate pi(1) is propagated along both relations; exactly one
/// consistent involution must survive.
inline Perm weierstrass_involution(const Origami& o) {
  if (genus(o) != 2) throw InputError("weierstrass_involution: origami is not of genus 2");
  if (!is_reduced(o)) throw InputError("weierstrass_involution: origami is not reduced");
  std::size_t n = o.squares();
  const Perm& a = o.sigma_a();
  const Perm& b = o.sigma_b();
  const Perm a_inv = a.inverse(), b_inv = b.inverse();
  constexpr Point unset = static_cast<Point>(-1);

  std::vector<Perm> solutions;
  for (Point candidate = 0; candidate < n; ++candidate) {
    std::vector<Point> pi(n, unset);
    pi[0] = candidate;
    std::vector<Point> queue{0};
    bool ok = true;
    for (std::size_t k = 0; k < queue.size() && ok; ++k) {
      Point x = queue[k];
      const std::pair<Point, Point> forced[] = {{a(x), a_inv(pi[x])}, {b(x), b_inv(pi[x])}};
      for (auto [y, value] : forced) {
        if (pi[y] == unset) {
          pi[y] = value;
          queue.push_back(y);
        } else if (pi[y] != value) {
          ok = false;
          break;
        }
      }
    }
    if (!ok) continue;
    std::vector<bool> hit(n, false);
    for (Point x = 0; x < n && ok; ++x) {
      if (hit[pi[x]]) ok = false;
      hit[pi[x]] = true;
    }
    if (!ok) continue;
    Perm p = Perm::from_images(pi);
    if (!(p * p).is_identity()) continue;
    solutions.push_back(std::move(p));
  }
  if (solutions.empty()) throw StructuralError("weierstrass_involution: no involution found");
  if (solutions.size() > 1)
    throw StructuralError("weierstrass_involution: " + std::to_string(solutions.size()) +
                          " candidate involutions");
  return solutions.front();
}

/// Number of square vertices fixed by the involution. The bottom-left corner
/// of square i goes to the top-right corner of pi(i), which is the
/// bottom-left corner of sigma_b(sigma_a(pi(i))).
inline int integer_weierstrass_count(const Origami& o) {
  Perm pi = weierstrass_involution(o);
  auto classes = corner_map(o).cycles();
  std::vector<std::size_t> class_of(o.squares());
  for (std::size_t c = 0; c < classes.size(); ++c)
    for (Point x : classes[c]) class_of[x - 1] = c;

  constexpr std::size_t unset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> image(classes.size(), unset);
  for (Point i = 0; i < o.squares(); ++i) {
    std::size_t target = class_of[o.sigma_b()(o.sigma_a()(pi(i)))];
    std::size_t& slot = image[class_of[i]];
    if (slot == unset) slot = target;
    else if (slot != target) throw StructuralError("integer_weierstrass_count: vertex map ill-defined");
  }
  int fixed = 0;
  for (std::size_t c = 0; c < classes.size(); ++c) fixed += image[c] == c;
  return fixed;
}

enum class H2Orbit { SingleOrbit, A, B };

inline const char* to_string(H2Orbit k) {
  switch (k) {
    case H2Orbit::SingleOrbit: return "single";
    case H2Orbit::A: return "A";
    case H2Orbit::B: return "B";
  }
  return "?";
}

/// Orbit type of a reduced origami in the stratum (2): one orbit for even n
/// or n = 3, otherwise A (one integer Weierstrass point) or B (three).
inline H2Orbit classify_h2_orbit(const Origami& o) {
  if (stratum(o) != std::vector<int>{2}) throw InputError("classify_h2_orbit: stratum is not (2)");
  if (!is_reduced(o)) throw InputError("classify_h2_orbit: origami is not reduced");
  std::size_t n = o.squares();
  int count = integer_weierstrass_count(o);
  if (count < 1 || count > 3) throw StructuralError("classify_h2_orbit: integer Weierstrass count out of range");
  if (n % 2 == 0 || n == 3) return H2Orbit::SingleOrbit;
  if (count == 2) throw StructuralError("classify_h2_orbit: two integer Weierstrass points with odd n");
  return count == 1 ? H2Orbit::A : H2Orbit::B;
}

}  // namespace origami
