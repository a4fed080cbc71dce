// Acceptance suite: one test per criterion, each printed as a single
// PASS/FAIL line. Expected values below are transcribed independently of the
// library fixtures.
#include <gtest/gtest.h>

#include <cstdio>
#include <memory>
#include <string>

#include "nilhecke/homogeneous.hpp"
#include "nilhecke/invariants.hpp"
#include "nilhecke/schubert.hpp"
#include "nilhecke/verify.hpp"

using namespace nilhecke;

namespace {

std::shared_ptr<const WeylGroup> group(const std::string& name) {
  return std::make_shared<const WeylGroup>(preset_datum(name));
}

// Detail lines gathered by the running test, printed under its result line.
std::string g_detail;

void note(const std::string& line) { g_detail += "    " + line + "\n"; }

using Listing = std::vector<std::pair<std::string, std::string>>;  // word "121" -> polynomial

Word word_of(const std::string& digits) {
  Word w;
  for (char c : digits) w.push_back(c - '1');
  return w;
}

void expect_family(const std::string& name, const Listing& expected) {
  const auto g = group(name);
  const auto fam = schubert_family(g, Ring::integers());
  ASSERT_EQ(expected.size(), g->order());
  for (const auto& [w, text] : expected) {
    EXPECT_EQ(fam[g->from_word(word_of(w))], parse_polynomial(text, g->datum().var_names, Ring::integers()))
        << name << " S_" << w;
  }
}

using Table = std::vector<std::vector<std::string>>;

void expect_matrix(const std::string& name, int generator, const Table& expected) {
  const auto g = group(name);
  const auto basis = std::make_shared<const SWBasis>(g, Ring::integers());
  const SchubertExpander ex(schubert_family(g, Ring::integers()), basis);
  const auto m = reflection_matrix(ex, generator - 1, matrix_basis_order(*g));
  ASSERT_EQ(m.size(), expected.size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m.size(); ++j) {
      EXPECT_EQ(m[i][j], parse_polynomial(expected[i][j], basis->names(), Ring::integers()))
          << name << " M" << generator << " entry (" << i + 1 << "," << j + 1 << ")";
    }
  }
}

void expect_suite(const std::string& suite, const VerifyOptions& options = {}) {
  const auto results = run_suite(suite, options);
  ASSERT_EQ(results.size(), 1u);
  EXPECT_TRUE(results[0].pass) << results[0].detail;
  note(results[0].detail);
}

class CriterionPrinter : public testing::EmptyTestEventListener {
  void OnTestEnd(const testing::TestInfo& info) override {
    const std::string name = info.name();
    std::printf("criterion %2d: %s  %s\n", std::stoi(name.substr(1, 2)),
                info.result()->Passed() ? "PASS" : "FAIL", name.substr(4).c_str());
    std::fputs(g_detail.c_str(), stdout);
    g_detail.clear();
    std::fflush(stdout);
  }
};

}  // namespace

TEST(Acceptance, C01_SchubertLists) {
  expect_family("U2", {{"1", "e1"}, {"", "1"}});
  expect_family("U3", {{"121", "e1^2*e2"}, {"12", "e1*e2"}, {"21", "e1^2"}, {"2", "e1 + e2"}, {"1", "e1"}, {"", "1"}});
  expect_family("Sp2", {{"1212", "e1^3*e2"},
                        {"212", "e1^2*e2 + e1*e2^2"},
                        {"121", "e1^3"},
                        {"12", "e1^2 + e1*e2 + e2^2"},
                        {"21", "e1^2"},
                        {"2", "e1 + e2"},
                        {"1", "e1"},
                        {"", "1"}});
}

TEST(Acceptance, C02_ReflectionMatrices) {
  expect_matrix("U2", 1, {{"-1", "0"}, {"p1", "1"}});
  expect_matrix("U3", 1,
                {{"-1", "0", "0", "0", "0", "0"},
                 {"p1", "1", "-1", "0", "0", "0"},
                 {"0", "0", "-1", "0", "0", "0"},
                 {"0", "0", "p1", "1", "1", "0"},
                 {"0", "0", "0", "0", "-1", "0"},
                 {"-p3", "0", "-p2", "0", "0", "1"}});
  expect_matrix("U3", 2,
                {{"-1", "0", "0", "0", "0", "0"},
                 {"0", "-1", "0", "0", "0", "0"},
                 {"0", "-1", "1", "0", "0", "0"},
                 {"0", "0", "0", "-1", "0", "0"},
                 {"p2", "p1", "0", "1", "1", "0"},
                 {"-p3", "0", "0", "p1", "0", "1"}});
  expect_matrix("Sp2", 1,
                {{"-1", "0", "0", "0", "0", "0", "0", "0"},
                 {"0", "1", "-1", "0", "0", "0", "0", "0"},
                 {"0", "0", "-1", "0", "0", "0", "0", "0"},
                 {"p1", "0", "0", "1", "0", "0", "0", "0"},
                 {"0", "0", "0", "0", "-1", "0", "0", "0"},
                 {"0", "0", "p1", "0", "0", "1", "1", "0"},
                 {"0", "0", "0", "0", "0", "0", "-1", "0"},
                 {"-p1^2", "0", "0", "0", "p1", "0", "0", "1"}});
  expect_matrix("Sp2", 2,
                {{"-1", "0", "0", "0", "0", "0", "0", "0"},
                 {"0", "-1", "0", "0", "0", "0", "0", "0"},
                 {"0", "-2", "1", "0", "0", "0", "0", "0"},
                 {"0", "0", "0", "-1", "0", "0", "0", "0"},
                 {"0", "0", "0", "0", "1", "0", "0", "0"},
                 {"0", "0", "0", "0", "0", "-1", "0", "0"},
                 {"0", "2*p1", "0", "0", "0", "2", "1", "0"},
                 {"0", "0", "0", "2*p1", "0", "0", "0", "1"}});
}

TEST(Acceptance, C03_TorsionIndices) {
  const std::vector<std::pair<std::string, long>> column = {{"U2", 1},  {"U3", 1},   {"SU2", 1}, {"SU3", 1},
                                                            {"SO3", 2}, {"PSU3", 3}, {"Sp2", 1}};
  for (const auto& [name, t] : column) EXPECT_EQ(torsion_index(WeylGroup(preset_datum(name))), t) << name;
}

TEST(Acceptance, C04_Antisymmetrizer) { expect_suite("antisymmetrizer"); }

TEST(Acceptance, C05_WordIndependenceAndBraids) { expect_suite("braid"); }

TEST(Acceptance, C06_NilHeckeRelations) { expect_suite("nilhecke"); }

TEST(Acceptance, C07_Leibniz) { expect_suite("leibniz"); }

TEST(Acceptance, C08_DualBasis) { expect_suite("duality"); }

TEST(Acceptance, C09_PsiProjection) { expect_suite("psi"); }

TEST(Acceptance, C10_DiscriminantIdentity) { expect_suite("discriminant"); }

TEST(Acceptance, C11_InvariantTable) {
  const Word w0_u3 = word_of("121"), w0_sp2 = word_of("1212");
  const std::vector<TableRow> rows = {
      {"U2", 1, {{{{word_of("1"), "1"}}, {2, "p1", "p1"}}}, "(2, d)"},
      {"U3",
       1,
       {{{{w0_u3, "1"}, {word_of("21"), "p1"}, {word_of("2"), "p2"}, {word_of("1"), "p1^2"}},
         {2, "p1*p2 + p3", "p3"}}},
       "(2, d)"},
      {"SU2", 1, {{{{word_of("1"), "1"}}, {2, "", ""}}}, "(2)"},
      {"SU3", 1, {{{{w0_u3, "1"}, {word_of("2"), "q2"}}, {2, "q3", "q3"}}}, "(2, d)"},
      {"SO3", 2, {}, "(1)"},
      {"PSU3", 3, {{{{w0_u3, "1"}, {word_of("2"), "q2"}}, {2, "q3", "q3"}}}, "(2, d)"},
      {"Sp2",
       1,
       {{{{w0_sp2, "1"}}, {2, "p1", "p1"}},
        {{{word_of("212"), "1"}}, {2, "", ""}},
        {{{word_of("12"), "1"}}, {2, "", ""}},
        {{{word_of("21"), "1"}}, {2, "p1", "p1"}},
        {{{word_of("2"), "1"}}, {2, "", ""}}},
       "(2)"},
  };
  for (const auto& row : rows) {
    const auto report = table_row_check(row, 8);
    EXPECT_TRUE(report.forward_ok) << row.group << ": " << report.first_failure;
    EXPECT_TRUE(report.converse_ok) << row.group << ": " << report.first_failure;
    note(row.group + ": " + (report.pass() ? "ok" : report.first_failure));
  }
}

TEST(Acceptance, C12_StrictnessWitnesses) {
  // (i) U2 over F2 modulo p1.
  {
    const auto g = group("U2");
    const Ring f2 = Ring::integers_mod(2);
    const auto calc = std::make_shared<const DemazureCalculus>(g, f2);
    const QuotientModule m(calc, {parse_polynomial("e1 + e2", g->datum().var_names, f2)}, 4);
    const auto aw = invariants_graded(m, InvariantKind::W).dims();
    const auto aid = invariants_graded(m, InvariantKind::ID).dims();
    EXPECT_EQ(aw[1], 1u);
    EXPECT_EQ(aid[1], 0u);
  }
  // (ii) SU2 over F2: 1,0,1,0,... against 1,1,1,1,...
  {
    const auto cmp = base_vs_invariants(group("SU2"), Ring::integers_mod(2), 8);
    EXPECT_EQ(cmp.base, (std::vector<std::size_t>{1, 0, 1, 0, 1, 0, 1, 0, 1}));
    EXPECT_EQ(cmp.invariants, (std::vector<std::size_t>{1, 1, 1, 1, 1, 1, 1, 1, 1}));
  }
  // (iii) J-part vanishes over Q and over Z (with t(G) inverted) for every preset.
  for (const auto& name : {"U2", "U3", "U4", "SU2", "SU3", "SO3", "PSU3", "Sp2"}) {
    const auto g = group(name);
    const long t = torsion_index(*g);
    for (const Ring& ring : {Ring::rationals(), t == 1 ? Ring::integers() : Ring::localized_at({t})}) {
      const auto fam = schubert_family(g, ring);
      const auto dec = decompose_AW(QuotientModule(fam.calc, {}, 8), fam);
      for (auto d : dec.j_part.dims()) EXPECT_EQ(d, 0u) << name << " over " << ring.to_string();
    }
  }
}

TEST(Acceptance, C13_HomogeneousSpaces) {
  const WeylGroup sp(preset_datum("Sp2"));
  const auto quat = parse_subgroup(sp, "2e1,2e2");
  const auto q = quotient_poincare(sp, quat, Ring::rationals(), 8);
  EXPECT_EQ(q.to_string(), "1 + t^4");
  EXPECT_EQ(q.total(), 2);
  const WeylGroup u3(preset_datum("U3"));
  EXPECT_EQ(quotient_poincare(u3, parse_subgroup(u3, "e1-e2"), Ring::rationals(), 8).to_string(), "1 + t^2 + t^4");
  const auto coset = coset_length_series(sp, quat);
  EXPECT_EQ(coset.to_string(), "1 + t^2");
  EXPECT_FALSE(coset.warnings.empty());
  // Degreewise to cohomological degree 12.
  const Ring f2 = Ring::integers_mod(2);
  const auto via_z = tensor_square_dims(sp, quat, f2, 6, TensorRoute::Integral);
  const auto direct = tensor_square_dims(sp, quat, f2, 6, TensorRoute::Direct);
  EXPECT_EQ(via_z.coeffs, (std::vector<long>{1, 0, 0, 0, 3, 0, 0, 0, 5, 0, 0, 0, 7}));
  EXPECT_EQ(direct.coeffs, (std::vector<long>{1, 0, 3, 0, 5, 0, 7, 0, 9, 0, 11, 0, 13}));
  note("F2 via Z: " + via_z.to_string());
  note("F2 direct: " + direct.to_string());
}

TEST(Acceptance, C14_SchubertExpansion) { expect_suite("expansion"); }

int main(int argc, char** argv) {
  testing::InitGoogleTest(&argc, argv);
  testing::TestEventListeners& listeners = testing::UnitTest::GetInstance()->listeners();
  listeners.Append(new CriterionPrinter);
  return RUN_ALL_TESTS();
}
