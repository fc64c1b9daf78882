#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "origami/error.hpp"
#include "origami/perm.hpp"

namespace origami {

/// A square-tiled surface: sigma_a sends a square to its right neighbour,
/// sigma_b to its upper neighbour. The pair is always transitive.
class Origami {
 public:
  static Origami make(Perm sigma_a, Perm sigma_b) {
    if (sigma_a.degree() != sigma_b.degree()) throw InputError("origami: degree mismatch");
    const Perm gens[] = {sigma_a, sigma_b};
    if (!is_transitive(gens, sigma_a.degree()))
      throw InputError("origami: permutation pair is not transitive");
    return Origami(std::move(sigma_a), std::move(sigma_b));
  }

  std::size_t squares() const { return a_.degree(); }
  const Perm& sigma_a() const { return a_; }
  const Perm& sigma_b() const { return b_; }

  friend bool operator==(const Origami&, const Origami&) = default;

 private:
  Origami(Perm a, Perm b) : a_(std::move(a)), b_(std::move(b)) {}
  Perm a_, b_;
};

/// "(1,4,7,8,9)|(1,2,3)(4,5,6)", optionally followed by "n=<int>".
inline Origami parse_origami(std::string_view text) {
  std::size_t degree = 0;
  std::string body(text);
  if (auto pos = body.find("n="); pos != std::string::npos) {
    std::string tail = body.substr(pos + 2);
    char* end = nullptr;
    long v = std::strtol(tail.c_str(), &end, 10);
    if (end == tail.c_str() || v <= 0) throw InputError("bad n=<int> override");
    degree = static_cast<std::size_t>(v);
    body = body.substr(0, pos);
  }
  auto bar = body.find('|');
  if (bar == std::string::npos) throw InputError("origami must be written as <sigma_a>|<sigma_b>");
  Point max_a = 0, max_b = 0;
  auto cycles_a = parse_cycle_list(std::string_view(body).substr(0, bar), max_a);
  auto cycles_b = parse_cycle_list(std::string_view(body).substr(bar + 1), max_b);
  std::size_t inferred = std::max<std::size_t>({max_a, max_b, 1});
  if (degree == 0) degree = inferred;
  if (inferred > degree) throw InputError("cycle label exceeds n");
  return Origami::make(Perm::from_cycles(cycles_a, degree), Perm::from_cycles(cycles_b, degree));
}

inline std::string to_string(const Origami& o) {
  std::string s = to_cycle_string(o.sigma_a()) + "|" + to_cycle_string(o.sigma_b());
  // the degree cannot be inferred when the top label is a common fixed point
  Point top = static_cast<Point>(o.squares() - 1);
  if (o.squares() > 1 && o.sigma_a()(top) == top && o.sigma_b()(top) == top)
    s += " n=" + std::to_string(o.squares());
  return s;
}

// ---------------------------------------------------------------------------
// Vertices, genus, stratum

struct VertexData {
  std::vector<std::vector<Point>> classes;  // 1-based square labels, by bottom-left corner
  std::vector<std::size_t> cone_angle_multiples;  // cone angle / pi
  std::vector<std::size_t> zero_orders;
};

/// Cycles of u = sigma_b sigma_a sigma_b^-1 sigma_a^-1 (rightmost first): the
/// bottom-left corner of square i and of u(i) are the same surface point.
inline Perm corner_map(const Origami& o) {
  const Perm& a = o.sigma_a();
  const Perm& b = o.sigma_b();
  return b * a * b.inverse() * a.inverse();
}

inline VertexData vertex_data(const Origami& o) {
  VertexData v;
  v.classes = corner_map(o).cycles();
  for (const auto& c : v.classes) {
    v.cone_angle_multiples.push_back(2 * c.size());
    v.zero_orders.push_back(c.size() - 1);
  }
  return v;
}

inline int genus(const Origami& o) {
  std::size_t vertices = corner_map(o).cycles().size();
  std::size_t n = o.squares();
  if ((n - vertices) % 2 != 0) throw StructuralError("genus: Euler characteristic parity violated");
  return static_cast<int>(1 + (n - vertices) / 2);
}

/// Non-zero zero orders, descending.
inline std::vector<int> stratum(const Origami& o) {
  std::vector<int> s;
  for (const auto& c : corner_map(o).cycles())
    if (c.size() > 1) s.push_back(static_cast<int>(c.size() - 1));
  std::sort(s.rbegin(), s.rend());
  return s;
}

inline std::string stratum_to_string(const std::vector<int>& s) {
  std::string out = "(";
  for (std::size_t k = 0; k < s.size(); ++k) {
    if (k) out += ',';
    out += std::to_string(s[k]);
  }
  return out + ")";
}

// ---------------------------------------------------------------------------
// Period lattice and reducedness

using Vec2 = std::pair<long long, long long>;

struct PeriodLattice {
  std::vector<Vec2> generators;  // abelianized Schreier generators (zero vectors dropped)
  Vec2 basis_x{0, 0};            // Hermite basis: (x1, y1), (0, y2)
  Vec2 basis_y{0, 0};
  long long index = 0;           // [Z^2 : lattice], 0 if rank < 2
};

/// Hermite normal form of the lattice spanned by `gens` in Z^2 (row style:
/// first basis vector (h11, h12) with h11 > 0, second (0, h22) with h22 > 0).
inline PeriodLattice hermite_lattice(std::vector<Vec2> gens) {
  PeriodLattice lat;
  lat.generators = gens;
  // Unimodular Euclid steps on x keep span{pivot, (0, y_gcd), rest} equal to the lattice.
  Vec2 pivot{0, 0};
  long long y_gcd = 0;
  for (Vec2 v : gens) {
    while (v.first != 0) {
      long long q = pivot.first / v.first;
      pivot = {pivot.first - q * v.first, pivot.second - q * v.second};
      std::swap(pivot, v);
    }
    y_gcd = std::gcd(y_gcd, std::llabs(v.second));
  }
  if (pivot.first < 0) pivot = {-pivot.first, -pivot.second};
  if (pivot.first == 0 || y_gcd == 0) {
    lat.index = 0;
    return lat;
  }
  long long y = ((pivot.second % y_gcd) + y_gcd) % y_gcd;
  lat.basis_x = {pivot.first, y};
  lat.basis_y = {0, y_gcd};
  lat.index = pivot.first * y_gcd;
  return lat;
}

/// Reidemeister-Schreier on the square graph: BFS tree from square 1 under
/// x = sigma_a and y = sigma_b; every edge i -> g(i) contributes the
/// abelianized loop pos(i) + e_g - pos(g(i)).
inline PeriodLattice period_lattice(const Origami& o) {
  std::size_t n = o.squares();
  std::vector<Vec2> pos(n);
  std::vector<bool> seen(n, false);
  std::vector<Point> queue{0};
  seen[0] = true;
  const Perm* moves[2] = {&o.sigma_a(), &o.sigma_b()};
  const Vec2 steps[2] = {{1, 0}, {0, 1}};
  for (std::size_t k = 0; k < queue.size(); ++k) {
    Point i = queue[k];
    for (int g = 0; g < 2; ++g) {
      Point j = (*moves[g])(i);
      if (!seen[j]) {
        seen[j] = true;
        pos[j] = {pos[i].first + steps[g].first, pos[i].second + steps[g].second};
        queue.push_back(j);
      }
    }
  }
  std::vector<Vec2> gens;
  for (Point i = 0; i < n; ++i)
    for (int g = 0; g < 2; ++g) {
      Point j = (*moves[g])(i);
      Vec2 v{pos[i].first + steps[g].first - pos[j].first,
             pos[i].second + steps[g].second - pos[j].second};
      if (v != Vec2{0, 0}) gens.push_back(v);
    }
  return hermite_lattice(std::move(gens));
}

inline bool is_reduced(const Origami& o) { return period_lattice(o).index == 1; }

// ---------------------------------------------------------------------------
// Cylinders

enum class Direction { Horizontal, Vertical };

struct Cylinder {
  Direction direction = Direction::Horizontal;
  std::size_t circumference = 0;
  std::size_t height = 0;
  std::vector<std::vector<Point>> rows;  // bottom to top, 1-based labels
};

/// Maximal cylinders in the given direction. Base rows are cycles of the
/// "along" permutation; a row stacks onto the next one when the "across"
/// permutation maps it setwise onto a row and commutes with "along" on it.
inline std::vector<Cylinder> cylinders(const Origami& o, Direction dir) {
  const Perm& along = dir == Direction::Horizontal ? o.sigma_a() : o.sigma_b();
  const Perm& across = dir == Direction::Horizontal ? o.sigma_b() : o.sigma_a();
  std::size_t n = o.squares();
  auto rows = along.cycles();
  std::vector<std::size_t> row_of(n);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (Point x : rows[r]) row_of[x - 1] = r;

  constexpr std::size_t none = static_cast<std::size_t>(-1);
  std::vector<std::size_t> up(rows.size(), none), down(rows.size(), none);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    std::size_t target = row_of[across(rows[r][0] - 1)];
    if (rows[target].size() != rows[r].size()) continue;
    bool ok = true;
    for (Point x1 : rows[r]) {
      Point x = x1 - 1;
      if (row_of[across(x)] != target || across(along(x)) != along(across(x))) {
        ok = false;
        break;
      }
    }
    if (ok) {
      up[r] = target;
      down[target] = r;
    }
  }

  std::vector<Cylinder> out;
  std::vector<bool> used(rows.size(), false);
  auto emit_from = [&](std::size_t start) {
    Cylinder c;
    c.direction = dir;
    c.circumference = rows[start].size();
    for (std::size_t r = start; r != none && !used[r]; r = up[r]) {
      used[r] = true;
      c.rows.push_back(rows[r]);
    }
    c.height = c.rows.size();
    out.push_back(std::move(c));
  };
  for (std::size_t r = 0; r < rows.size(); ++r)
    if (!used[r] && down[r] == none) emit_from(r);
  // what is left is a closed stack of rows (the whole surface is one cylinder)
  for (std::size_t r = 0; r < rows.size(); ++r)
    if (!used[r]) emit_from(r);
  return out;
}

/// (circumference, height) pairs, sorted.
inline std::vector<std::pair<std::size_t, std::size_t>> cylinder_shape(const Origami& o, Direction dir) {
  std::vector<std::pair<std::size_t, std::size_t>> shape;
  for (const auto& c : cylinders(o, dir)) shape.emplace_back(c.circumference, c.height);
  std::sort(shape.begin(), shape.end());
  return shape;
}

// ---------------------------------------------------------------------------
// Canonical form

/// Relabeled (sigma_a, sigma_b) image tables, concatenated; equal iff the
/// origamis are isomorphic (simultaneously conjugate).
struct CanonicalForm {
  std::vector<Point> code;

  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

struct CanonicalFormHash {
  std::size_t operator()(const CanonicalForm& c) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (Point x : c.code) h = (h ^ x) * 1099511628211ull;
    return h;
  }
};

namespace detail {

// Labels squares in first-visit order of a BFS from `start` following the
// sigma_a edge, then the sigma_b edge. Returns true iff the resulting code
// beats `best`.
inline bool relabel_from(const Origami& o, Point start, std::vector<Point>& label,
                         std::vector<Point>& order, std::vector<Point>& code,
                         const std::vector<Point>* best) {
  std::size_t n = o.squares();
  constexpr Point unset = static_cast<Point>(-1);
  std::fill(label.begin(), label.end(), unset);
  order.clear();
  label[start] = 0;
  order.push_back(start);
  for (std::size_t k = 0; k < order.size(); ++k) {
    Point x = order[k];
    for (const Perm* p : {&o.sigma_a(), &o.sigma_b()}) {
      Point y = (*p)(x);
      if (label[y] == unset) {
        label[y] = static_cast<Point>(order.size());
        order.push_back(y);
      }
    }
  }
  code.assign(2 * n, 0);
  for (Point i = 0; i < n; ++i) {
    code[i] = label[o.sigma_a()(order[i])];
    code[n + i] = label[o.sigma_b()(order[i])];
  }
  return best == nullptr || code < *best;
}

}  // namespace detail

inline CanonicalForm canonical_form(const Origami& o) {
  std::size_t n = o.squares();
  std::vector<Point> label(n), order, code, best;
  for (Point s = 0; s < n; ++s) {
    if (detail::relabel_from(o, s, label, order, code, best.empty() ? nullptr : &best))
      best.swap(code);
  }
  return CanonicalForm{std::move(best)};
}

/// The origami whose image tables are the canonical code.
inline Origami canonical_origami(const CanonicalForm& c) {
  std::size_t n = c.code.size() / 2;
  std::vector<Point> a(c.code.begin(), c.code.begin() + static_cast<std::ptrdiff_t>(n));
  std::vector<Point> b(c.code.begin() + static_cast<std::ptrdiff_t>(n), c.code.end());
  return Origami::make(Perm::from_images(std::move(a)), Perm::from_images(std::move(b)));
}

inline std::string to_string(const CanonicalForm& c) { return to_string(canonical_origami(c)); }

/// Relabel both permutations along `q` (square i becomes q(i)).
inline Origami relabel(const Origami& o, const Perm& q) {
  return Origami::make(q * o.sigma_a() * q.inverse(), q * o.sigma_b() * q.inverse());
}

}  // namespace origami
