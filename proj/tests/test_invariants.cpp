#include <gtest/gtest.h>

#include <memory>

#include "nilhecke/errors.hpp"
#include "nilhecke/fixtures.hpp"
#include "nilhecke/invariants.hpp"

using namespace nilhecke;

namespace {

std::shared_ptr<const WeylGroup> group(const std::string& name) {
  return std::make_shared<const WeylGroup>(preset_datum(name));
}

std::shared_ptr<const DemazureCalculus> calc(const std::string& name, const Ring& ring) {
  return std::make_shared<const DemazureCalculus>(group(name), ring);
}

Polynomial P(const DemazureCalculus& c, const std::string& text) {
  return parse_polynomial(text, c.group().datum().var_names, c.ring());
}

std::vector<std::size_t> counts(std::initializer_list<std::size_t> v) { return v; }

}  // namespace

TEST(QuotientModule, DimensionsOfSModP1) {
  const auto c = calc("U2", Ring::integers_mod(2));
  const QuotientModule m(c, {P(*c, "e1 + e2")}, 4);
  for (int d = 0; d <= 4; ++d) EXPECT_EQ(m.dim(d), 1u);
  EXPECT_TRUE(m.reduce(P(*c, "e1 + e2")).is_zero());
  EXPECT_EQ(m.reduce(P(*c, "e1^2")), m.reduce(P(*c, "e2^2")));
}

TEST(QuotientModule, RejectsBadRelations) {
  const auto c = calc("U2", Ring::integers_mod(2));
  EXPECT_THROW(QuotientModule(c, {P(*c, "e1")}, 3), InvalidRelation);
  EXPECT_THROW(QuotientModule(c, {P(*c, "e1^2 + e2")}, 3), InvalidRelation);
  const auto z = calc("U2", Ring::integers());
  EXPECT_THROW(QuotientModule(z, {P(*z, "e1 + e2")}, 3), UnsupportedRing);
  const auto z4 = calc("U2", Ring::integers_mod(4));
  EXPECT_THROW(invariants_graded(QuotientModule(z4, {}, 2), InvariantKind::W), UnsupportedRing);
}

TEST(Invariants, PolynomialInvariantsOfU3) {
  const auto c = calc("U3", Ring::rationals());
  const QuotientModule m(c, {}, 6);
  // Partitions into parts 1, 2, 3: 1, 1, 2, 3, 4, 5, 7.
  EXPECT_EQ(invariants_graded(m, InvariantKind::W).dims(), counts({1, 1, 2, 3, 4, 5, 7}));
  EXPECT_EQ(invariants_graded(m, InvariantKind::ID).dims(), counts({1, 1, 2, 3, 4, 5, 7}));
}

TEST(Invariants, StrictnessOverF2ModuloP1) {
  const auto c = calc("U2", Ring::integers_mod(2));
  const QuotientModule m(c, {P(*c, "e1 + e2")}, 3);
  const auto aw = invariants_graded(m, InvariantKind::W).dims();
  const auto aid = invariants_graded(m, InvariantKind::ID).dims();
  EXPECT_EQ(aw, counts({1, 1, 1, 1}));
  EXPECT_EQ(aid, counts({1, 0, 1, 0}));
}

TEST(Invariants, BaseVersusInvariantsSU2) {
  const auto cmp = base_vs_invariants(group("SU2"), Ring::integers_mod(2), 5);
  EXPECT_EQ(cmp.base, counts({1, 0, 1, 0, 1, 0}));
  EXPECT_EQ(cmp.invariants, counts({1, 1, 1, 1, 1, 1}));
  EXPECT_EQ(cmp.strict_degrees, (std::vector<int>{1, 3, 5}));
  const auto q = base_vs_invariants(group("SU2"), Ring::rationals(), 5);
  EXPECT_TRUE(q.strict_degrees.empty());
}

TEST(Invariants, PsiIsAProjectionInModules) {
  const Ring f2 = Ring::integers_mod(2);
  const auto g = group("U2");
  const auto fam = schubert_family(g, f2);
  const QuotientModule m(fam.calc, {P(*fam.calc, "e1 + e2")}, 4);
  for (int d = 0; d <= 4; ++d) {
    for (const auto& e : m.basis_monomials(d)) {
      const Polynomial a = Polynomial::monomial(f2, e);
      const Polynomial pa = module_psi(m, fam, a);
      EXPECT_EQ(module_psi(m, fam, pa), pa);
    }
  }
}

TEST(Invariants, DecompositionOfU2ModP1) {
  const Ring f2 = Ring::integers_mod(2);
  const auto fam = schubert_family(group("U2"), f2);
  const QuotientModule m(fam.calc, {P(*fam.calc, "e1 + e2")}, 3);
  const auto dec = decompose_AW(m, fam);
  EXPECT_EQ(dec.id_part.dims(), counts({1, 0, 1, 0}));
  EXPECT_EQ(dec.j_part.dims(), counts({0, 1, 0, 1}));
}

TEST(Invariants, NoJPartWithoutRelations) {
  for (const auto& name : {"U3", "Sp2", "SO3"}) {
    const auto fam = schubert_family(group(name), Ring::rationals());
    const auto dec = decompose_AW(QuotientModule(fam.calc, {}, 5), fam);
    for (auto d : dec.j_part.dims()) EXPECT_EQ(d, 0u) << name;
  }
}

TEST(Invariants, MatrixBasisOrder) {
  const auto g = group("U3");
  std::vector<Word> words;
  for (auto w : matrix_basis_order(*g)) words.push_back(g->element(w).word);
  EXPECT_EQ(words, (std::vector<Word>{{0, 1, 0}, {0, 1}, {1, 0}, {1}, {0}, {}}));
}

TEST(Invariants, WordMatricesMultiply) {
  const auto g = group("U3");
  const auto basis = std::make_shared<const SWBasis>(g, Ring::integers());
  const SchubertExpander ex(schubert_family(g, Ring::integers()), basis);
  const auto order = matrix_basis_order(*g);
  const auto m1 = reflection_matrix(ex, 0, order);
  const auto m2 = reflection_matrix(ex, 1, order);
  EXPECT_EQ(word_matrix(ex, {0, 1}, order), matrix_product(m1, m2));
  // Reflections are involutions: M_i^2 = Id.
  const auto sq = matrix_product(m1, m1);
  for (std::size_t i = 0; i < sq.size(); ++i) {
    for (std::size_t j = 0; j < sq.size(); ++j) EXPECT_EQ(sq[i][j].is_zero(), i != j);
  }
}

TEST(Invariants, IdealMembership) {
  const std::vector<std::string> names = {"p1", "p2", "p3"};
  const SimpleIdeal ideal{2, "p1*p2 + p3", "p3"};
  auto poly = [&](const std::string& s) { return parse_polynomial(s, names, Ring::integers()); };
  EXPECT_TRUE(ideal_contains(ideal, poly("2*p1"), names));
  EXPECT_TRUE(ideal_contains(ideal, poly("p1*p2 + p3"), names));
  EXPECT_TRUE(ideal_contains(ideal, poly("p1^2*p2 + p1*p3 + 4"), names));
  EXPECT_FALSE(ideal_contains(ideal, poly("p3"), names));
  EXPECT_FALSE(ideal_contains(ideal, poly("1"), names));
}

TEST(Invariants, EveryTableRowPasses) {
  for (const auto& row : fixtures::table_rows()) {
    const auto report = table_row_check(row, 6);
    EXPECT_TRUE(report.forward_ok) << row.group << ": " << report.first_failure;
    EXPECT_TRUE(report.converse_ok) << row.group << ": " << report.first_failure;
  }
}

TEST(Invariants, TableCheckDetectsAWrongIdeal) {
  TableRow row = fixtures::table_row("U2");
  row.generators[0].ideal = SimpleIdeal{2, "", ""};
  EXPECT_FALSE(table_row_check(row, 6).forward_ok);
  TableRow wrong_class = fixtures::table_row("U2");
  wrong_class.generators[0].coeffs = {{{}, "1"}};
  EXPECT_FALSE(table_row_check(wrong_class, 6).pass());
}
