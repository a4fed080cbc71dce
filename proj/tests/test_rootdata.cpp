#include <gtest/gtest.h>

#include <set>

#include "nilhecke/errors.hpp"
#include "nilhecke/json_io.hpp"
#include "nilhecke/verify.hpp"
#include "nilhecke/weyl_group.hpp"

using namespace nilhecke;

namespace {

// Order of a finite Weyl group from its Cartan type, independent of the
// enumeration: |W| for A_n is (n+1)!, B_2 = 8, G_2 = 12.
struct Expected {
  std::string name;
  std::size_t order;
  std::size_t positive_roots;
};

}  // namespace

TEST(RootDatum, PresetsAreValid) {
  const std::vector<Expected> table = {{"U2", 2, 1},  {"U3", 6, 3},   {"U4", 24, 6},  {"SU2", 2, 1},
                                       {"SU3", 6, 3}, {"SO3", 2, 1},  {"PSU3", 6, 3}, {"Sp2", 8, 4}};
  for (const auto& e : table) {
    const WeylGroup g(preset_datum(e.name));
    EXPECT_EQ(g.order(), e.order) << e.name;
    EXPECT_EQ(g.num_positive_roots(), e.positive_roots) << e.name;
    EXPECT_EQ(static_cast<std::size_t>(g.max_length()), e.positive_roots) << e.name;
  }
}

TEST(RootDatum, CartanMatrices) {
  // C[i][j] = <alpha_i, alpha_j^vee>.
  EXPECT_EQ(preset_datum("Sp2").cartan_matrix(), (IntMat{{2, -1}, {-2, 2}}));
  EXPECT_EQ(preset_datum("U3").cartan_matrix(), (IntMat{{2, -1}, {-1, 2}}));
  EXPECT_EQ(preset_datum("PSU3").cartan_matrix(), (IntMat{{2, -1}, {-1, 2}}));
  EXPECT_EQ(preset_datum("SO3").cartan_matrix(), (IntMat{{2}}));
  EXPECT_EQ(g2_datum().cartan_matrix(), (IntMat{{2, -1}, {-3, 2}}));
}

TEST(RootDatum, ErrorsOnBadInput) {
  EXPECT_THROW(preset_datum("E8"), UnknownPreset);
  EXPECT_THROW(make_datum("bad", {{1, 0}, {0, 1}}, {{1, 0}, {0, 2}}), InvalidCartanData);
  EXPECT_THROW(make_datum("bad", {{1, 0}}, {{2, 0}, {0, 2}}), InvalidCartanData);
  EXPECT_THROW(make_datum("bad", {{1, 0}, {0, 1}}, {{2, -4}, {-1, 2}}), InvalidCartanData);
  EXPECT_THROW(parse_character("e7", preset_datum("U3")), ParseError);
}

TEST(RootDatum, ReadsDatumFiles) {
  const RootDatum g2 = json_io::read_datum_file(std::string(TEST_DATA_DIR) + "/g2.json");
  EXPECT_EQ(WeylGroup(g2).order(), 12u);
  EXPECT_EQ(json_io::read_datum_file(std::string(TEST_DATA_DIR) + "/sp2.json"), preset_datum("Sp2"));
  EXPECT_THROW(json_io::read_datum_file(std::string(TEST_DATA_DIR) + "/bad_cartan.json"), InvalidCartanData);
  EXPECT_THROW(WeylGroup(json_io::read_datum_file(std::string(TEST_DATA_DIR) + "/affine.json")), GroupNotFinite);
  EXPECT_THROW(json_io::read_datum_file("/nonexistent.json"), ParseError);
}

TEST(WeylGroup, LengthEqualsInversions) {
  for (const auto& name : preset_names()) {
    const WeylGroup g(preset_datum(name));
    for (std::size_t w = 0; w < g.order(); ++w) {
      EXPECT_EQ(g.element(w).length, g.inversion_count(w));
      EXPECT_EQ(g.element(w).length, static_cast<int>(g.element(w).word.size()));
      EXPECT_EQ(g.from_word(g.element(w).word), w);
      EXPECT_EQ(g.element(w).det, g.element(w).length % 2 == 0 ? 1 : -1);
    }
  }
}

TEST(WeylGroup, GroupAxioms) {
  const WeylGroup g(preset_datum("Sp2"));
  for (std::size_t a = 0; a < g.order(); ++a) {
    EXPECT_EQ(g.multiply(a, g.inverse(a)), g.identity());
    for (std::size_t b = 0; b < g.order(); ++b) {
      for (std::size_t c = 0; c < g.order(); ++c) {
        EXPECT_EQ(g.multiply(g.multiply(a, b), c), g.multiply(a, g.multiply(b, c)));
      }
    }
  }
  // w0 is an involution sending every positive root to a negative one.
  EXPECT_EQ(g.multiply(g.longest(), g.longest()), g.identity());
}

TEST(WeylGroup, ReducedWordsOfLongestElement) {
  // S_3: two reduced words of w0; B_2: two; S_4: sixteen.
  EXPECT_EQ(WeylGroup(preset_datum("U3")).all_reduced_words(5).size(), 2u);
  const WeylGroup sp(preset_datum("Sp2"));
  EXPECT_EQ(sp.all_reduced_words(sp.longest()).size(), 2u);
  const WeylGroup u4(preset_datum("U4"));
  EXPECT_EQ(u4.all_reduced_words(u4.longest()).size(), 16u);
  // Cached words are lexicographically minimal.
  for (std::size_t w = 0; w < u4.order(); ++w) {
    const auto words = u4.all_reduced_words(w);
    EXPECT_EQ(*std::min_element(words.begin(), words.end()), u4.element(w).word);
  }
}

TEST(WeylGroup, BruhatOrder) {
  const WeylGroup g(preset_datum("U3"));
  const std::size_t s1 = g.from_word({0}), s2 = g.from_word({1}), s12 = g.from_word({0, 1});
  EXPECT_TRUE(g.bruhat_leq(s1, s12));
  EXPECT_TRUE(g.bruhat_leq(s2, s12));
  EXPECT_FALSE(g.bruhat_leq(s12, s1));
  EXPECT_FALSE(g.bruhat_leq(s12, g.from_word({1, 0})));
  for (std::size_t w = 0; w < g.order(); ++w) {
    EXPECT_TRUE(g.bruhat_leq(g.identity(), w));
    EXPECT_TRUE(g.bruhat_leq(w, g.longest()));
  }
  // Number of Bruhat relations in S_3 (pairs u <= w): 19.
  int pairs = 0;
  for (std::size_t u = 0; u < g.order(); ++u) {
    for (std::size_t w = 0; w < g.order(); ++w) pairs += g.bruhat_leq(u, w);
  }
  EXPECT_EQ(pairs, 19);
}

TEST(WeylGroup, Roots) {
  const WeylGroup g(preset_datum("Sp2"));
  std::set<IntVec> pos;
  for (std::size_t b = 0; b < g.num_positive_roots(); ++b) pos.insert(g.roots()[b].vec);
  EXPECT_EQ(pos, (std::set<IntVec>{{1, -1}, {0, 2}, {1, 1}, {2, 0}}));
  EXPECT_THROW(g.find_root({1, 0}), NotARoot);
  EXPECT_EQ(g.discriminant(Ring::integers()).to_string({"e1", "e2"}), "4*e1^3*e2 - 4*e1*e2^3");
}

TEST(WeylGroup, ReflectionSubgroups) {
  const WeylGroup g(preset_datum("Sp2"));
  const auto quat = g.reflection_subgroup({g.find_root({2, 0}), g.find_root({0, 2})});
  EXPECT_EQ(quat.order(), 4u);
  EXPECT_FALSE(quat.is_parabolic);
  EXPECT_TRUE(quat.is_closed);
  const auto par = g.reflection_subgroup({g.find_root({1, -1})});
  EXPECT_TRUE(par.is_parabolic);
  EXPECT_EQ(g.full_subgroup().order(), 8u);
  EXPECT_EQ(g.trivial_subgroup().order(), 1u);
  // Short roots of B_2 generate a subsystem that is not closed: (1,-1) + (1,1) = (2,0).
  const auto d2 = g.reflection_subgroup({g.find_root({1, -1}), g.find_root({1, 1})});
  EXPECT_FALSE(d2.is_closed);
  EXPECT_EQ(g.order() % d2.order(), 0u);
}

TEST(WeylGroup, G2FromRawData) {
  const WeylGroup g(g2_datum());
  EXPECT_EQ(g.order(), 12u);
  EXPECT_EQ(g.num_positive_roots(), 6u);
  EXPECT_EQ(g.all_reduced_words(g.longest()).size(), 2u);
}
