#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "origami/action.hpp"
#include "origami/bigint.hpp"
#include "origami/bsgs.hpp"
#include "origami/error.hpp"
#include "origami/sl2.hpp"
#include "origami/veech.hpp"

namespace origami {

constexpr std::size_t kDefaultPointBudget = 5000;

inline void check_point_budget(std::uint64_t m, std::size_t budget) {
  std::size_t pts = crt_domain_size(m);
  if (pts > budget)
    throw BudgetExceeded("modulus " + std::to_string(m) + " needs " + std::to_string(pts) +
                         " points, budget is " + std::to_string(budget));
}

/// p_m of a finitely generated subgroup of SL(2,Z), as a permutation group
/// on the CRT domain of m.
class ImageGroup {
 public:
  ImageGroup(const std::vector<MatZ>& gens, std::uint64_t m, std::size_t budget = kDefaultPointBudget)
      : domain_(m) {
    check_point_budget(m, budget);
    std::set<std::tuple<std::uint64_t, std::uint64_t, std::uint64_t, std::uint64_t>> seen;
    for (const MatZ& g : gens) {
      if (g.det() != 1) throw InputError("image_order: generator determinant is not 1");
      MatMod r = MatMod::reduce(g, m);
      if (r.is_identity() || !seen.emplace(r.a, r.b, r.c, r.d).second) continue;
      perms_.push_back(perm_rep(r, domain_));
    }
    if (perms_.empty()) perms_.push_back(Perm::identity(domain_.degree()));
    bsgs_ = std::make_unique<Bsgs>(domain_.degree(), perms_);
  }

  std::uint64_t modulus() const { return domain_.modulus; }
  const CrtDomain& domain() const { return domain_; }
  const Bsgs& bsgs() const { return *bsgs_; }
  BigInt order() const { return bsgs_->order(); }

  bool contains(const MatMod& x) const {
    if (x.m != domain_.modulus) throw InputError("ImageGroup::contains: modulus mismatch");
    return bsgs_->contains(perm_rep(x, domain_));
  }
  bool contains(const MatZ& x) const { return contains(MatMod::reduce(x, domain_.modulus)); }

 private:
  CrtDomain domain_;
  std::vector<Perm> perms_;
  std::unique_ptr<Bsgs> bsgs_;
};

/// |p_m(<gens>)|.
inline BigInt image_order(const std::vector<MatZ>& gens, std::uint64_t m,
                          std::size_t budget = kDefaultPointBudget) {
  if (m == 0) throw InputError("image_order: m must be positive");
  if (m == 1) return 1;
  return ImageGroup(gens, m, budget).order();
}

struct DeficiencyResult {
  std::uint64_t m = 1;
  BigInt image_order = 1;
  std::uint64_t e = 1;  // level index [SL(2,Z/m) : p_m(Gamma)]
  std::uint64_t f = 1;  // deficiency d / e
  std::uint64_t d = 1;
};

inline DeficiencyResult deficiency_from_order(std::size_t d, std::uint64_t m, const BigInt& order) {
  DeficiencyResult r;
  r.m = m;
  r.d = d;
  r.image_order = order;
  BigInt full = sl2_order(m);
  if (full % order != 0) throw StructuralError("deficiency: image order does not divide |SL(2,Z/m)|");
  BigInt e = full / order;
  if (BigInt(d) % e != 0) throw StructuralError("deficiency: level index does not divide d");
  r.e = e.convert_to<std::uint64_t>();
  r.f = d / r.e;
  return r;
}

inline DeficiencyResult deficiency(const VeechGroupData& v, std::uint64_t m,
                                   std::size_t budget = kDefaultPointBudget) {
  return deficiency_from_order(v.d, m, image_order(v.generators_with_sign(), m, budget));
}

inline bool is_congruence(const VeechGroupData& v, const CuspData& c,
                          std::size_t budget = kDefaultPointBudget) {
  return deficiency(v, c.level, budget).f == 1;
}

inline bool is_totally_noncongruence(const VeechGroupData& v, const CuspData& c,
                                     std::size_t budget = kDefaultPointBudget) {
  return deficiency(v, c.level, budget).e == 1;
}

// ---------------------------------------------------------------------------
// Minimality of the deficiency at the level

struct Theorem1Report {
  std::uint64_t level = 1;
  std::uint64_t f_level = 1;
  std::map<std::uint64_t, std::uint64_t> f;  // m -> f_m, for every m evaluated
  std::vector<std::uint64_t> skipped;        // over the point budget
  std::vector<std::string> violations;
  std::size_t divisibility_pairs_checked = 0;

  bool ok() const { return violations.empty(); }
};

/// Checks f_m >= f_l for m <= m_max, f_{ka} | f_a for every pair with
/// ka <= m_max, and f_{kl} = f_l for k in {2,3,4}.
inline Theorem1Report verify_theorem1(const VeechGroupData& v, const CuspData& c, std::uint64_t m_max,
                                      std::size_t budget = kDefaultPointBudget) {
  Theorem1Report rep;
  rep.level = c.level;
  auto f_of = [&](std::uint64_t m) -> std::optional<std::uint64_t> {
    if (auto it = rep.f.find(m); it != rep.f.end()) return it->second;
    if (crt_domain_size(m) > budget) {
      rep.skipped.push_back(m);
      return std::nullopt;
    }
    std::uint64_t f = deficiency(v, m, budget).f;
    rep.f[m] = f;
    return f;
  };
  auto fl = f_of(c.level);
  if (!fl) throw BudgetExceeded("verify_theorem1: level exceeds the point budget");
  rep.f_level = *fl;
  for (std::uint64_t m = 1; m <= m_max; ++m) {
    auto fm = f_of(m);
    if (fm && *fm < rep.f_level)
      rep.violations.push_back("f_" + std::to_string(m) + " = " + std::to_string(*fm) + " < f_l = " +
                               std::to_string(rep.f_level));
  }
  for (std::uint64_t a = 1; a <= m_max; ++a)
    for (std::uint64_t k = 2; k * a <= m_max; ++k) {
      auto fa = f_of(a), fka = f_of(k * a);
      if (!fa || !fka) continue;
      ++rep.divisibility_pairs_checked;
      if (*fa % *fka != 0)
        rep.violations.push_back("f_" + std::to_string(k * a) + " = " + std::to_string(*fka) +
                                 " does not divide f_" + std::to_string(a) + " = " + std::to_string(*fa));
    }
  for (std::uint64_t k : {2, 3, 4}) {
    auto fkl = f_of(k * c.level);
    if (fkl && *fkl != rep.f_level)
      rep.violations.push_back("f_" + std::to_string(k * c.level) + " = " + std::to_string(*fkl) +
                               " differs from f_l = " + std::to_string(rep.f_level));
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Certificates

enum class CertificateKind { CoprimeCusp, ParabolicHull, TheStep, Lemma13 };

inline const char* to_string(CertificateKind k) {
  switch (k) {
    case CertificateKind::CoprimeCusp: return "CoprimeCusp";
    case CertificateKind::ParabolicHull: return "ParabolicHull";
    case CertificateKind::TheStep: return "TheStep";
    case CertificateKind::Lemma13: return "Lemma13";
  }
  return "?";
}

/// Witness data for a containment claim about p_l(Gamma_point), where
/// Gamma_point is the Veech group of orbit point `point` (0 = base). The
/// claim is that every matrix in `members` lies in that image.
struct Certificate {
  CertificateKind kind = CertificateKind::CoprimeCusp;
  std::uint64_t l = 1;
  std::size_t point = 0;
  std::size_t point_i = 0;
  std::size_t point_j = 0;
  std::pair<std::size_t, std::size_t> pair_i{0, 0};
  std::pair<std::size_t, std::size_t> pair_j{0, 0};
  std::uint64_t n1 = 1, n2 = 1;
  std::uint64_t N = 1, M = 1;
  std::uint64_t g1 = 0, g2 = 0;
  std::vector<MatMod> members;
  bool verdict = false;

  friend bool operator==(const Certificate&, const Certificate&) = default;
};

namespace detail {

inline bool all_members(const ImageGroup& img, const std::vector<MatMod>& xs) {
  for (const MatMod& x : xs)
    if (!img.contains(x)) return false;
  return true;
}

// (I mod N, X mod M) for X in {T, T'}, as elements mod N*M.
inline std::vector<MatMod> unipotents_on_second_factor(std::uint64_t N, std::uint64_t M) {
  return {crt_matrix(MatZ::identity(), N, MatZ::T(), M), crt_matrix(MatZ::identity(), N, MatZ::Tp(), M)};
}

}  // namespace detail

/// Re-checks a certificate by sifting its members through a freshly built
/// image of the relevant Veech group.
inline bool verify_certificate(const Certificate& cert, const VeechGroupData& v, const OrbitTable& t,
                               std::size_t budget = kDefaultPointBudget) {
  if (cert.l == 0) return false;
  ImageGroup img(conjugate_generators(v, t, cert.point), cert.l, budget);
  for (const MatMod& x : cert.members)
    if (x.m != cert.l || x.det() != 1 % cert.l) return false;
  return detail::all_members(img, cert.members);
}

/// Two orbit points whose cusp-width pairs have coprime lcms. The members are
/// the four CRT unipotents generating SL(2,Z/N) x SL(2,Z/M) = SL(2,Z/l), so
/// a verified certificate proves p_l(Gamma) is everything.
inline std::optional<Certificate> coprime_cusp_certificate(const OrbitTable& t, const CuspData& c) {
  std::vector<std::uint64_t> n_of(t.d());
  for (std::size_t i = 0; i < t.d(); ++i) {
    auto [a, b] = cusp_pair_at(t, i);
    n_of[i] = lcm_u64(a, b);
  }
  for (std::size_t i = 0; i < t.d(); ++i)
    for (std::size_t j = i + 1; j < t.d(); ++j) {
      if (std::gcd(n_of[i], n_of[j]) != 1) continue;
      Certificate cert;
      cert.kind = CertificateKind::CoprimeCusp;
      cert.l = c.level;
      cert.point = 0;
      cert.point_i = i;
      cert.point_j = j;
      cert.pair_i = cusp_pair_at(t, i);
      cert.pair_j = cusp_pair_at(t, j);
      cert.n1 = n_of[i];
      cert.n2 = n_of[j];
      cert.N = mpde(cert.n1, c.level);
      cert.M = c.level / cert.N;
      cert.members = detail::unipotents_on_second_factor(cert.N, cert.M);
      for (const MatMod& x : detail::unipotents_on_second_factor(cert.M, cert.N)) cert.members.push_back(x);
      return cert;
    }
  return std::nullopt;
}

/// p_l(Gamma) contains {I} x SL(2,Z/M) whenever N M = l, gcd(N, M) = 1 and
/// lcm(width_inf, width_zero) | N.
inline Certificate check_thestep(const VeechGroupData& v, const OrbitTable& t, const CuspData& c,
                                 std::uint64_t N, std::uint64_t M, std::size_t budget = kDefaultPointBudget) {
  if (N == 0 || M == 0 || N * M != c.level) throw InputError("check_thestep: N*M must equal the level");
  if (std::gcd(N, M) != 1) throw InputError("check_thestep: N and M must be coprime");
  std::uint64_t n = lcm_u64(c.width_infinity, c.width_zero);
  if (N % n != 0) throw InputError("check_thestep: lcm of the cusp-width pair must divide N");
  Certificate cert;
  cert.kind = CertificateKind::TheStep;
  cert.l = c.level;
  cert.point = 0;
  cert.pair_i = {c.width_infinity, c.width_zero};
  cert.n1 = n;
  cert.N = N;
  cert.M = M;
  cert.members = detail::unipotents_on_second_factor(N, M);
  cert.verdict = M == 1 || verify_certificate(cert, v, t, budget);
  return cert;
}

/// With (a1, b1) at point i and (a2, b2) at point j: N = mpde_l(lcm(a1, b1)),
/// g1 = gcd(a2, N), g2 = gcd(b2, N); [[1,g1],[0,1]] and [[1,0],[g2,1]] lie in
/// p_l(Gamma_j).
inline Certificate check_lemma13(const VeechGroupData& v, const OrbitTable& t, const CuspData& c,
                                 std::size_t i, std::size_t j, std::size_t budget = kDefaultPointBudget) {
  if (i >= t.d() || j >= t.d()) throw InputError("check_lemma13: orbit point out of range");
  Certificate cert;
  cert.kind = CertificateKind::Lemma13;
  cert.l = c.level;
  cert.point = j;
  cert.point_i = i;
  cert.point_j = j;
  cert.pair_i = cusp_pair_at(t, i);
  cert.pair_j = cusp_pair_at(t, j);
  cert.n1 = lcm_u64(cert.pair_i.first, cert.pair_i.second);
  cert.n2 = lcm_u64(cert.pair_j.first, cert.pair_j.second);
  cert.N = mpde(cert.n1, c.level);
  cert.M = c.level / cert.N;
  cert.g1 = std::gcd<std::uint64_t>(cert.pair_j.first, cert.N);
  cert.g2 = std::gcd<std::uint64_t>(cert.pair_j.second, cert.N);
  cert.members = {MatMod::reduce(MatZ::T_power(cert.g1), c.level),
                  MatMod::reduce(MatZ::Tp_power(cert.g2), c.level)};
  cert.verdict = verify_certificate(cert, v, t, budget);
  return cert;
}

/// Order of the image mod m of the group generated by the conjugated cusp
/// parabolics A_i^-1 T^{a_i} A_i and A_i^-1 T'^{b_i} A_i over all orbit points.
inline BigInt parabolic_hull(const OrbitTable& t, std::uint64_t m, std::size_t budget = kDefaultPointBudget) {
  if (m == 1) return 1;
  std::vector<MatZ> gens;
  for (std::size_t i = 0; i < t.d(); ++i) {
    auto [a, b] = cusp_pair_at(t, i);
    const MatZ& A = t.path_matrix[i];
    MatZ A_inv = A.inverse();
    gens.push_back(A_inv * MatZ::T_power(a) * A);
    gens.push_back(A_inv * MatZ::Tp_power(b) * A);
  }
  return image_order(gens, m, budget);
}

}  // namespace origami
