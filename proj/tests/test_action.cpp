#include <gtest/gtest.h>

#include <map>
#include <random>

#include "test_support.hpp"

using namespace origami;

namespace {

std::vector<Origami> pool() {
  return {L(2, 2), L(3, 3), L(4, 2), Cr2(6), Ogn(3, 8), parse_origami("(1,2,3)(4,5)|(1,4)(2,5,6)")};
}

}  // namespace

TEST(ApplyGenerator, PaperTables) {
  Origami l = L(2, 2);
  Origami t = apply_generator(l, Gen::T);
  EXPECT_EQ(t.sigma_a(), parse_perm("(1,2)", 3));
  EXPECT_EQ(t.sigma_b(), parse_perm("(1,2,3)", 3));
  Origami o = Ogn(3, 9);
  Origami tpi = apply_generator(o, Gen::TpInv);
  EXPECT_EQ(tpi.sigma_a(), o.sigma_b() * o.sigma_a());
  EXPECT_EQ(tpi.sigma_b(), o.sigma_b());
}

TEST(ApplyGenerator, InversePairsUndo) {
  for (const Origami& o : pool())
    for (Gen g : {Gen::T, Gen::TInv, Gen::Tp, Gen::TpInv, Gen::S, Gen::SInv})
      EXPECT_EQ(apply_generator(apply_generator(o, g), inverse(g)), o);
}

TEST(ApplyGenerator, SAgreesWithItsTWord) {
  for (const Origami& o : pool()) {
    EXPECT_TRUE(isomorphic(apply_generator(o, Gen::S), apply_word(o, {Gen::TInv, Gen::Tp, Gen::TInv})));
    EXPECT_TRUE(isomorphic(apply_generator(o, Gen::S), apply_matrix(o, MatZ::S())));
  }
}

TEST(ApplyMatrix, Examples) {
  for (const Origami& o : pool()) EXPECT_TRUE(isomorphic(apply_matrix(o, MatZ::identity()), o));
  EXPECT_TRUE(isomorphic(apply_matrix(Cr2(6), MatZ::minus_identity()), Cr2(6)));
  EXPECT_THROW(apply_matrix(L(2, 2), MatZ{2, 0, 0, 1}), InputError);
}

TEST(ApplyMatrix, IdentityWordsActTrivially) {
  std::mt19937 rng(31);
  auto origamis = pool();
  int done = 0;
  for (int attempt = 0; done < 200 && attempt < 100000; ++attempt) {
    Word w = testing_support::random_word(2 + attempt % 9, rng);
    // close the word up to the identity: append the inverse of its product
    MatZ m = word_to_matrix(w);
    Word closing = matrix_to_word(m.inverse());
    if (w.size() + closing.size() > 10) continue;
    w.insert(w.end(), closing.begin(), closing.end());
    ASSERT_TRUE(word_to_matrix(w).is_identity());
    for (const Origami& o : origamis) EXPECT_TRUE(isomorphic(apply_word(o, w), o)) << word_to_string(w);
    ++done;
  }
  EXPECT_EQ(done, 200);
}

TEST(ApplyMatrix, DependsOnlyOnTheMatrix) {
  std::mt19937 rng(41);
  for (int k = 0; k < 50; ++k) {
    Word w = testing_support::random_word(1 + k % 12, rng);
    for (const Origami& o : pool()) EXPECT_TRUE(isomorphic(apply_word(o, w), apply_matrix(o, word_to_matrix(w))));
  }
}

TEST(ApplyMatrix, ActionIsALeftAction) {
  std::mt19937 rng(43);
  for (int k = 0; k < 30; ++k) {
    MatZ a = word_to_matrix(testing_support::random_word(5, rng));
    MatZ b = word_to_matrix(testing_support::random_word(5, rng));
    for (const Origami& o : pool())
      EXPECT_TRUE(isomorphic(apply_matrix(o, a * b), apply_matrix(apply_matrix(o, b), a)));
  }
}

TEST(Orbit, SizesFromTable) {
  EXPECT_EQ(orbit(L(2, 2)).d(), 3u);
  EXPECT_EQ(orbit(L(3, 3)).d(), 9u);
  EXPECT_EQ(orbit(L(4, 2)).d(), 18u);
  EXPECT_THROW(orbit(parse_origami("(1,2)|(1,2)")), NotReducedError);
}

TEST(Orbit, RegressionExampleOne) {
  // pinned after the first computation
  EXPECT_EQ(orbit(Ogn(3, 9)).d(), 90u);
}

TEST(Orbit, BothParitiesMatchTable) {
  const std::map<std::size_t, std::pair<std::size_t, std::size_t>> d_by_n = {
      {3, {3, 3}},     {4, {9, 9}},     {5, {9, 18}},      {6, {36, 36}},  {7, {36, 54}},
      {8, {108, 108}}, {9, {81, 108}},  {10, {216, 216}},  {11, {180, 225}}};
  for (std::size_t a = 2; a <= 10; ++a)
    for (std::size_t b = 2; a + b - 1 <= 11; ++b) {
      std::size_t n = a + b - 1;
      Origami o = L(a, b);
      std::size_t expected = d_by_n.at(n).first;
      if (n % 2 == 1 && n >= 5 && classify_h2_orbit(o) == H2Orbit::A) expected = d_by_n.at(n).second;
      EXPECT_EQ(orbit(o).d(), expected) << "L(" << a << "," << b << ")";
    }
}

TEST(Orbit, TablesAreConsistent) {
  for (const Origami& o : pool()) {
    OrbitTable t = orbit(o);
    EXPECT_TRUE(t.path_matrix[0].is_identity());
    EXPECT_TRUE(t.path_word[0].empty());
    for (std::size_t i = 0; i < t.d(); ++i) {
      EXPECT_EQ(word_to_matrix(t.path_word[i]), t.path_matrix[i]);
      EXPECT_TRUE(isomorphic(apply_matrix(o, t.path_matrix[i]), t.points[i]));
      auto p = static_cast<Point>(i);
      EXPECT_EQ(t.find(apply_generator(t.points[i], Gen::T)), t.sigma_T(p));
      EXPECT_EQ(t.find(apply_generator(t.points[i], Gen::Tp)), t.sigma_Tp(p));
      EXPECT_EQ(t.find(apply_generator(t.points[i], Gen::S)), t.sigma_S()(p));
      EXPECT_TRUE(t.find(apply_generator(t.points[i], Gen::SInv)).has_value());
      EXPECT_EQ(t.find(apply_word(t.points[i], {Gen::T, Gen::TInv})), i);
      EXPECT_EQ(t.find(apply_word(t.points[i], {Gen::Tp, Gen::S, Gen::SInv, Gen::TpInv})), i);
    }
  }
}

TEST(Orbit, BudgetGuard) { EXPECT_THROW(orbit(L(4, 2), 10), BudgetExceeded); }

TEST(VeechGenerators, StabilizeTheBase) {
  for (const Origami& o : pool()) {
    OrbitTable t = orbit(o);
    VeechGroupData v = veech_generators(t);
    EXPECT_EQ(v.generators.size(), t.d() + 1);
    for (const MatZ& g : v.generators) {
      EXPECT_EQ(g.det(), 1);
      EXPECT_TRUE(isomorphic(apply_matrix(o, g), o)) << to_string(g);
    }
  }
}

TEST(VeechGenerators, MinusIdentity) {
  EXPECT_TRUE(veech_generators(orbit(L(3, 3))).contains_minus_identity);
  EXPECT_TRUE(veech_generators(orbit(Cr2(6))).contains_minus_identity);
}

TEST(VeechGenerators, ConjugatesStabilizeOrbitPoints) {
  OrbitTable t = orbit(L(4, 2));
  VeechGroupData v = veech_generators(t);
  for (std::size_t i : {std::size_t{1}, std::size_t{5}, t.d() - 1})
    for (const MatZ& g : conjugate_generators(v, t, i)) EXPECT_TRUE(isomorphic(apply_matrix(t.points[i], g), t.points[i]));
}

TEST(VeechGenerators, TorusIsFullGroup) {
  Origami torus = Origami::make(Perm::identity(1), Perm::identity(1));
  OrbitTable t = orbit(torus);
  EXPECT_EQ(t.d(), 1u);
  VeechGroupData v = veech_generators(t);
  for (std::uint64_t m = 1; m <= 12; ++m) EXPECT_EQ(image_order(v.generators_with_sign(), m), sl2_order(m));
}
