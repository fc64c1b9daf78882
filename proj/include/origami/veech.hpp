#pragma once

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

#include "origami/action.hpp"
#include "origami/bigint.hpp"
#include "origami/error.hpp"
#include "origami/perm.hpp"

namespace origami {

/// Cusps of the Veech group read off the coset permutation sigma_T.
struct CuspData {
  struct Cusp {
    std::size_t representative = 0;  // smallest orbit point in the sigma_T cycle
    std::size_t width = 0;
  };
  std::vector<Cusp> cusps;
  std::size_t width_infinity = 0;
  std::size_t width_zero = 0;
  std::uint64_t level = 1;
  /// Set when -I is not in the group; widths are then sigma_T cycle lengths,
  /// which may be twice the projective width of an irregular cusp.
  bool minus_identity_missing = false;

  std::vector<std::size_t> widths() const {
    std::vector<std::size_t> w;
    for (const auto& c : cusps) w.push_back(c.width);
    std::sort(w.rbegin(), w.rend());
    return w;
  }
};

/// (width at infinity, width at 0) of the Veech group of orbit point i.
inline std::pair<std::size_t, std::size_t> cusp_pair_at(const OrbitTable& t, std::size_t i) {
  auto p = static_cast<Point>(i);
  return {t.sigma_T.cycle_length_at(p), t.sigma_Tp.cycle_length_at(p)};
}

inline CuspData cusp_data(const OrbitTable& t, std::size_t base = 0) {
  CuspData c;
  for (const auto& cycle : t.sigma_T.cycles()) {
    c.cusps.push_back({cycle.front() - 1, cycle.size()});
    c.level = lcm_u64(c.level, cycle.size());
  }
  std::tie(c.width_infinity, c.width_zero) = cusp_pair_at(t, base);
  Perm s = t.sigma_S();
  c.minus_identity_missing = !(s * s).is_identity();
  return c;
}

/// Data of H/Gamma from the action on orbit points modulo sigma_{S^2}.
struct CurveProfile {
  std::size_t mu = 0;  // index in PSL(2,Z)
  std::size_t e2 = 0;
  std::size_t e3 = 0;
  std::size_t s = 0;   // cusps
  long long genus = 0;
};

namespace detail {

// Classes of orbit points under sigma_{S^2} (size 1 or 2) and the induced
// action of a permutation on them.
struct ProjectiveClasses {
  std::vector<std::size_t> class_of;
  std::size_t count = 0;

  explicit ProjectiveClasses(const Perm& s_squared) : class_of(s_squared.degree()) {
    for (const auto& cycle : s_squared.cycles()) {
      for (Point x : cycle) class_of[x - 1] = count;
      ++count;
    }
  }

  Perm induced(const Perm& p) const {
    std::vector<Point> images(count);
    for (Point x = 0; x < class_of.size(); ++x) images[class_of[x]] = static_cast<Point>(class_of[p(x)]);
    return Perm::from_images(std::move(images));
  }
};

inline std::size_t fixed_points(const Perm& p) {
  std::size_t f = 0;
  for (Point x = 0; x < p.degree(); ++x) f += p(x) == x;
  return f;
}

}  // namespace detail

/// genus = 1 + mu/12 - e2/4 - e3/3 - s/2, with the elliptic order-3 element
/// taken as S T (T S gives the same counts).
inline CurveProfile curve_profile(const OrbitTable& t) {
  Perm s = t.sigma_S();
  detail::ProjectiveClasses classes(s * s);
  CurveProfile p;
  p.mu = classes.count;
  p.e2 = detail::fixed_points(classes.induced(s));
  p.e3 = detail::fixed_points(classes.induced(s * t.sigma_T));
  p.s = classes.induced(t.sigma_T).cycles().size();
  long long twelve_g = 12 + static_cast<long long>(p.mu) - 3 * static_cast<long long>(p.e2) -
                       4 * static_cast<long long>(p.e3) - 6 * static_cast<long long>(p.s);
  if (twelve_g % 12 != 0 || twelve_g < 0)
    throw StructuralError("curve_profile: genus formula is not a non-negative integer");
  p.genus = twelve_g / 12;
  if (detail::fixed_points(classes.induced(t.sigma_T * s)) != p.e3)
    throw StructuralError("curve_profile: S T and T S give different e3");
  return p;
}

}  // namespace origami
