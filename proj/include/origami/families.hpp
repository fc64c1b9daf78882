#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "origami/error.hpp"
#include "origami/origami.hpp"
#include "origami/perm.hpp"

namespace origami {

/// L-shaped origami: squares 1..a form the bottom row, a+1..a+b-1 stack above square 1.
inline Origami L(std::size_t a, std::size_t b) {
  if (a < 2 || b < 2) throw InputError("L(a,b) needs a, b >= 2");
  std::size_t n = a + b - 1;
  std::vector<Point> row, column{1};
  for (Point i = 1; i <= a; ++i) row.push_back(i);
  for (Point i = static_cast<Point>(a + 1); i <= n; ++i) column.push_back(i);
  return Origami::make(Perm::from_cycles({row}, n), Perm::from_cycles({column}, n));
}

/// sigma_a = (1,...,j), sigma_b = (1,2).
inline Origami Cr2(std::size_t j) {
  if (j < 2) throw InputError("Cr2(j) needs j >= 2");
  std::vector<Point> row;
  for (Point i = 1; i <= j; ++i) row.push_back(i);
  return Origami::make(Perm::from_cycles({row}, j), Perm::from_cycles({{1, 2}}, j));
}

/// sigma_a = (1,4,...,3g-5,3g-2,3g-1,...,n), sigma_b = (1,2,3)(4,5,6)...(3g-5,3g-4,3g-3).
inline Origami Ogn(std::size_t g, std::size_t n) {
  if (g < 3) throw InputError("O(g,n) needs g >= 3");
  if (n < 3 * g - 2) throw InputError("O(g,n) needs n >= 3g-2");
  std::vector<Point> row;
  for (Point x = 1; x <= 3 * g - 5; x += 3) row.push_back(x);
  for (Point x = static_cast<Point>(3 * g - 2); x <= n; ++x) row.push_back(x);
  std::vector<std::vector<Point>> triples;
  for (Point x = 1; x <= 3 * g - 5; x += 3) triples.push_back({x, x + 1, x + 2});
  return Origami::make(Perm::from_cycles({row}, n), Perm::from_cycles(triples, n));
}

constexpr std::size_t kEnumerationMaxSquares = 8;

/// All reduced origamis with n squares up to isomorphism, sorted by canonical
/// form; optionally only those in the given stratum (descending zero orders).
inline std::vector<Origami> enumerate_origamis(std::size_t n,
                                               const std::optional<std::vector<int>>& filter = {}) {
  if (n == 0) throw InputError("enumerate_origamis: n must be positive");
  if (n > kEnumerationMaxSquares)
    throw BudgetExceeded("enumerate_origamis: n > " + std::to_string(kEnumerationMaxSquares));

  // sigma_a runs over one representative per cycle type (partitions of n)
  std::vector<Perm> class_reps;
  std::vector<std::size_t> parts;
  auto gen_partitions = [&](auto&& self, std::size_t remaining, std::size_t max_part) -> void {
    if (remaining == 0) {
      std::vector<std::vector<Point>> cycles;
      Point next = 1;
      for (std::size_t p : parts) {
        std::vector<Point> c;
        for (std::size_t k = 0; k < p; ++k) c.push_back(next++);
        cycles.push_back(std::move(c));
      }
      class_reps.push_back(Perm::from_cycles(cycles, n));
      return;
    }
    for (std::size_t p = std::min(remaining, max_part); p >= 1; --p) {
      parts.push_back(p);
      self(self, remaining - p, p);
      parts.pop_back();
    }
  };
  gen_partitions(gen_partitions, n, n);

  std::set<CanonicalForm> found;
  std::vector<Point> images(n);
  for (const Perm& a : class_reps) {
    std::iota(images.begin(), images.end(), Point{0});
    do {
      Perm b = Perm::from_images(images);
      const Perm gens[] = {a, b};
      if (!is_transitive(gens, n)) continue;
      Origami o = Origami::make(a, b);
      if (!is_reduced(o)) continue;
      if (filter && stratum(o) != *filter) continue;
      found.insert(canonical_form(o));
    } while (std::next_permutation(images.begin(), images.end()));
  }
  std::vector<Origami> out;
  for (const auto& c : found) out.push_back(canonical_origami(c));
  return out;
}

}  // namespace origami
