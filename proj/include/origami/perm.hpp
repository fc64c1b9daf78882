#pragma once

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstdint>
#include <numeric>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "origami/error.hpp"

namespace origami {

using Point = std::uint32_t;

/// A bijection of {0, ..., degree-1}. Labels are 1-based in every textual form.
class Perm {
 public:
  Perm() = default;

  static Perm identity(std::size_t degree) {
    Perm p;
    p.images_.resize(degree);
    std::iota(p.images_.begin(), p.images_.end(), Point{0});
    return p;
  }

  /// Zero-based image table; throws InputError unless it is a bijection.
  static Perm from_images(std::vector<Point> images) {
    std::vector<bool> seen(images.size(), false);
    for (Point x : images) {
      if (x >= images.size() || seen[x]) throw InputError("image table is not a bijection");
      seen[x] = true;
    }
    Perm p;
    p.images_ = std::move(images);
    return p;
  }

  /// One-based image table, as used in the JSON input format.
  static Perm from_images_1based(std::span<const long long> images) {
    std::vector<Point> zero_based;
    zero_based.reserve(images.size());
    for (long long x : images) {
      if (x < 1) throw InputError("permutation images must be >= 1");
      zero_based.push_back(static_cast<Point>(x - 1));
    }
    return from_images(std::move(zero_based));
  }

  /// Build from 1-based cycles on `degree` points.
  static Perm from_cycles(const std::vector<std::vector<Point>>& cycles, std::size_t degree) {
    Perm p = identity(degree);
    std::vector<bool> used(degree, false);
    for (const auto& cycle : cycles) {
      for (std::size_t k = 0; k < cycle.size(); ++k) {
        Point from = cycle[k];
        Point to = cycle[(k + 1) % cycle.size()];
        if (from < 1 || from > degree) throw InputError("cycle label out of range");
        if (used[from - 1]) throw InputError("label repeated in cycle notation");
        used[from - 1] = true;
        p.images_[from - 1] = to - 1;
      }
    }
    return p;
  }

  std::size_t degree() const { return images_.size(); }
  Point operator()(Point i) const { return images_[i]; }
  Point operator[](Point i) const { return images_[i]; }
  const std::vector<Point>& images() const { return images_; }

  bool is_identity() const {
    for (Point i = 0; i < images_.size(); ++i)
      if (images_[i] != i) return false;
    return true;
  }

  Perm inverse() const {
    Perm q;
    q.images_.resize(images_.size());
    for (Point i = 0; i < images_.size(); ++i) q.images_[images_[i]] = i;
    return q;
  }

  /// Cycles with 1-based labels, each starting at its smallest point, ordered by that point.
  std::vector<std::vector<Point>> cycles() const {
    std::vector<std::vector<Point>> out;
    std::vector<bool> seen(images_.size(), false);
    for (Point start = 0; start < images_.size(); ++start) {
      if (seen[start]) continue;
      std::vector<Point> cycle;
      for (Point x = start; !seen[x]; x = images_[x]) {
        seen[x] = true;
        cycle.push_back(x + 1);
      }
      out.push_back(std::move(cycle));
    }
    return out;
  }

  std::vector<std::size_t> cycle_lengths() const {
    std::vector<std::size_t> lengths;
    for (const auto& c : cycles()) lengths.push_back(c.size());
    return lengths;
  }

  /// Length of the cycle containing the 0-based point `i`.
  std::size_t cycle_length_at(Point i) const {
    std::size_t len = 1;
    for (Point x = images_[i]; x != i; x = images_[x]) ++len;
    return len;
  }

  std::size_t moved_point_count() const {
    std::size_t c = 0;
    for (Point i = 0; i < images_.size(); ++i) c += images_[i] != i;
    return c;
  }

  friend bool operator==(const Perm&, const Perm&) = default;
  friend auto operator<=>(const Perm&, const Perm&) = default;

 private:
  std::vector<Point> images_;
};

/// i -> p(q(i)): q acts first.
inline Perm compose(const Perm& p, const Perm& q) {
  if (p.degree() != q.degree()) throw InputError("compose: degree mismatch");
  std::vector<Point> images(p.degree());
  for (Point i = 0; i < images.size(); ++i) images[i] = p(q(i));
  return Perm::from_images(std::move(images));
}

inline Perm operator*(const Perm& p, const Perm& q) { return compose(p, q); }

inline Perm power(const Perm& p, long long k) {
  Perm base = k < 0 ? p.inverse() : p;
  unsigned long long e = k < 0 ? static_cast<unsigned long long>(-k) : static_cast<unsigned long long>(k);
  Perm result = Perm::identity(p.degree());
  while (e) {
    if (e & 1) result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

/// q^-1 p q, i.e. relabel p along q.
inline Perm conjugate(const Perm& p, const Perm& q) { return q.inverse() * p * q; }

/// Orbit of a 0-based point under the generated group, in BFS order.
inline std::vector<Point> orbit_of(std::span<const Perm> gens, Point start, std::size_t n) {
  std::vector<bool> seen(n, false);
  std::vector<Point> orbit{start};
  seen[start] = true;
  for (std::size_t k = 0; k < orbit.size(); ++k) {
    for (const Perm& g : gens) {
      Point y = g(orbit[k]);
      if (!seen[y]) {
        seen[y] = true;
        orbit.push_back(y);
      }
    }
  }
  return orbit;
}

inline bool is_transitive(std::span<const Perm> gens, std::size_t n) {
  if (n == 0) return false;
  for (const Perm& g : gens)
    if (g.degree() != n) throw InputError("is_transitive: degree mismatch");
  if (n == 1) return true;
  return orbit_of(gens, 0, n).size() == n;
}

/// "(1,4,7)(2,5)" with fixed points omitted; "()" for the identity.
inline std::string to_cycle_string(const Perm& p) {
  std::string out;
  for (const auto& cycle : p.cycles()) {
    if (cycle.size() < 2) continue;
    out += '(';
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      if (k) out += ',';
      out += std::to_string(cycle[k]);
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

/// Parse whitespace-insensitive cycle notation. Returns the cycles and the largest label seen.
inline std::vector<std::vector<Point>> parse_cycle_list(std::string_view text, Point& max_label) {
  std::vector<std::vector<Point>> cycles;
  max_label = 0;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(') throw InputError("expected '(' in cycle notation: " + std::string(text));
    ++i;
    std::vector<Point> cycle;
    skip_ws();
    if (i < text.size() && text[i] == ')') {
      ++i;
      skip_ws();
      continue;
    }
    while (true) {
      skip_ws();
      std::size_t start = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      if (start == i) throw InputError("expected a label in cycle notation: " + std::string(text));
      unsigned long label = std::stoul(std::string(text.substr(start, i - start)));
      if (label == 0 || label > 1'000'000) throw InputError("cycle label out of range");
      cycle.push_back(static_cast<Point>(label));
      max_label = std::max<Point>(max_label, static_cast<Point>(label));
      skip_ws();
      if (i >= text.size()) throw InputError("unterminated cycle: " + std::string(text));
      if (text[i] == ',') {
        ++i;
        continue;
      }
      if (text[i] == ')') {
        ++i;
        break;
      }
      throw InputError("unexpected character in cycle notation: " + std::string(text));
    }
    cycles.push_back(std::move(cycle));
    skip_ws();
  }
  return cycles;
}

/// Parse cycle notation on `degree` points; degree 0 means "largest label".
inline Perm parse_perm(std::string_view text, std::size_t degree = 0) {
  Point max_label = 0;
  auto cycles = parse_cycle_list(text, max_label);
  if (degree == 0) degree = std::max<std::size_t>(max_label, 1);
  if (max_label > degree) throw InputError("cycle label exceeds degree");
  return Perm::from_cycles(cycles, degree);
}

struct PermHash {
  std::size_t operator()(const Perm& p) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (Point x : p.images()) h = (h ^ x) * 1099511628211ull;
    return h;
  }
};

}  // namespace origami
