#pragma once

#include <cstdint>
#include <span>
#include <unordered_set>
#include <utility>
#include <vector>

#include "origami/bigint.hpp"
#include "origami/error.hpp"
#include "origami/perm.hpp"

namespace origami {

/// Base and strong generating set built by deterministic Schreier-Sims.
///
/// Level k holds the generators of the pointwise stabilizer of base[0..k-1]
/// that were inserted there, the orbit of base[k] under them and a coset
/// representative (plus its inverse) for every orbit point. The base is
/// chosen adaptively: a new level takes the first point moved by the
/// generator that created it. The result depends only on the order of the
/// input generators.
class Bsgs {
 public:
  Bsgs(std::size_t degree, std::span<const Perm> generators) : degree_(degree) {
    if (degree == 0) throw InputError("Bsgs: degree must be positive");
    std::unordered_set<Perm, PermHash> seen;
    for (const Perm& g : generators) {
      if (g.degree() != degree) throw InputError("Bsgs: generator degree mismatch");
      if (g.is_identity() || !seen.insert(g).second) continue;
      if (!contains_from(0, g)) insert(0, g);
    }
  }

  explicit Bsgs(std::span<const Perm> generators)
      : Bsgs(generators.empty() ? 0 : generators.front().degree(), generators) {}

  std::size_t domain_size() const { return degree_; }

  std::vector<Point> base() const {
    std::vector<Point> b;
    for (const auto& level : levels_) b.push_back(level.base);
    return b;
  }

  /// Union of the level generators, in insertion order.
  std::vector<Perm> strong_generators() const {
    std::vector<Perm> out;
    std::unordered_set<Perm, PermHash> seen;
    for (const auto& level : levels_)
      for (const Perm& g : level.gens)
        if (seen.insert(g).second) out.push_back(g);
    return out;
  }

  std::vector<std::size_t> orbit_sizes() const {
    std::vector<std::size_t> sizes;
    for (const auto& level : levels_) sizes.push_back(level.orbit.size());
    return sizes;
  }

  BigInt order() const {
    BigInt o = 1;
    for (const auto& level : levels_) o *= level.orbit.size();
    return o;
  }

  bool contains(const Perm& p) const {
    if (p.degree() != degree_) throw InputError("Bsgs::contains: domain mismatch");
    return contains_from(0, p);
  }

 private:
  struct Level {
    Point base = 0;
    std::vector<Perm> gens;
    std::vector<Point> orbit;
    std::vector<std::int32_t> slot;  // orbit index per point, -1 if absent
    std::vector<Perm> reps;          // reps[k] maps base to orbit[k]
    std::vector<Perm> reps_inv;
    std::vector<std::pair<std::size_t, std::size_t>> pending;  // (orbit index, gen index)
    std::size_t pending_head = 0;
  };

  bool contains_from(std::size_t k, Perm g) const {
    for (std::size_t j = k; j < levels_.size(); ++j) {
      const Level& level = levels_[j];
      std::int32_t s = level.slot[g(level.base)];
      if (s < 0) return false;
      g = level.reps_inv[static_cast<std::size_t>(s)] * g;
    }
    return g.is_identity();
  }

  void insert(std::size_t k, const Perm& g) {
    if (k == levels_.size()) {
      Level level;
      Point moved = 0;
      while (g(moved) == moved) ++moved;
      level.base = moved;
      level.slot.assign(degree_, -1);
      level.slot[moved] = 0;
      level.orbit.push_back(moved);
      level.reps.push_back(Perm::identity(degree_));
      level.reps_inv.push_back(Perm::identity(degree_));
      levels_.push_back(std::move(level));
    }
    Level& level = levels_[k];
    level.gens.push_back(g);
    std::size_t gi = level.gens.size() - 1;
    for (std::size_t oi = 0; oi < level.orbit.size(); ++oi) level.pending.emplace_back(oi, gi);
    process(k);
  }

  // Drains the pending (orbit point, generator) pairs of level k. Deeper levels
  // are complete whenever a membership test against them is made.
  void process(std::size_t k) {
    while (levels_[k].pending_head < levels_[k].pending.size()) {
      auto [oi, gi] = levels_[k].pending[levels_[k].pending_head++];
      Level& level = levels_[k];
      const Perm g = level.gens[gi];
      Point p = level.orbit[oi];
      Point q = g(p);
      if (level.slot[q] < 0) {
        Perm rep = g * level.reps[oi];
        level.slot[q] = static_cast<std::int32_t>(level.orbit.size());
        level.orbit.push_back(q);
        level.reps_inv.push_back(rep.inverse());
        level.reps.push_back(std::move(rep));
        std::size_t new_oi = level.orbit.size() - 1;
        for (std::size_t h = 0; h < level.gens.size(); ++h) level.pending.emplace_back(new_oi, h);
        continue;
      }
      Perm schreier = level.reps_inv[static_cast<std::size_t>(level.slot[q])] * g * level.reps[oi];
      if (schreier.is_identity()) continue;
      if (!contains_from(k + 1, schreier)) insert(k + 1, schreier);
    }
  }

  std::size_t degree_;
  std::vector<Level> levels_;
};

inline Bsgs bsgs_order(std::span<const Perm> gens) {
  if (gens.empty()) throw InputError("bsgs_order: empty generator list");
  return Bsgs(gens);
}

inline bool bsgs_contains(const Bsgs& b, const Perm& p) { return b.contains(p); }

}  // namespace origami
