#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "nilhecke/errors.hpp"
#include "nilhecke/linalg.hpp"
#include "nilhecke/polynomial.hpp"

using namespace nilhecke;

namespace {

const std::vector<std::string> kNames = {"e1", "e2", "e3"};

Polynomial P(const std::string& text, const Ring& ring = Ring::integers()) {
  return parse_polynomial(text, kNames, ring);
}

}  // namespace

TEST(Ring, ParsesDescriptors) {
  EXPECT_EQ(Ring::parse("Z"), Ring::integers());
  EXPECT_EQ(Ring::parse("Q"), Ring::rationals());
  EXPECT_EQ(Ring::parse("Z/5").modulus(), 5);
  EXPECT_EQ(Ring::parse("Z[1/6]").primes(), (std::vector<long>{2, 3}));
  EXPECT_EQ(Ring::parse("Z[1/2, 1/3]"), Ring::parse("Z[1/6]"));
  EXPECT_THROW(Ring::parse("R"), ParseError);
  EXPECT_THROW(Ring::parse("Z[2]"), ParseError);
  EXPECT_THROW(Ring::parse("Z/x"), ParseError);
}

TEST(Ring, FieldsAndUnits) {
  EXPECT_TRUE(Ring::integers_mod(7).is_field());
  EXPECT_FALSE(Ring::integers_mod(6).is_field());
  EXPECT_FALSE(Ring::integers().is_field());
  EXPECT_TRUE(Ring::parse("Z[1/2]").inverts(8));
  EXPECT_FALSE(Ring::parse("Z[1/2]").inverts(6));
  EXPECT_TRUE(Ring::integers_mod(5).is_unit(3));
  EXPECT_FALSE(Ring::integers_mod(6).is_unit(3));
  EXPECT_EQ(Ring::integers_mod(7).inverse(3), Scalar(5));
  EXPECT_THROW(Ring::integers().inverse(2), NotInRing);
}

TEST(Ring, NormalizeEnforcesMembership) {
  EXPECT_EQ(Ring::integers_mod(5).normalize(Scalar(-1)), Scalar(4));
  EXPECT_EQ(Ring::integers_mod(5).normalize(Scalar(1, 2)), Scalar(3));
  EXPECT_THROW(Ring::integers().normalize(Scalar(1, 2)), NotInRing);
  EXPECT_THROW(Ring::parse("Z[1/2]").normalize(Scalar(1, 3)), NotInRing);
  EXPECT_EQ(Ring::parse("Z[1/2]").normalize(Scalar(3, 4)), Scalar(3, 4));
}

TEST(Ring, CanonicalMaps) {
  EXPECT_TRUE(Ring::integers().has_map_to(Ring::integers_mod(4)));
  EXPECT_TRUE(Ring::integers().has_map_to(Ring::rationals()));
  EXPECT_FALSE(Ring::rationals().has_map_to(Ring::integers()));
  EXPECT_TRUE(Ring::parse("Z[1/2]").has_map_to(Ring::integers_mod(3)));
  EXPECT_FALSE(Ring::parse("Z[1/2]").has_map_to(Ring::integers_mod(2)));
}

TEST(Ring, ArithmeticModM) {
  const Ring r = Ring::integers_mod(6);
  EXPECT_EQ(r.add(4, 5), Scalar(3));
  EXPECT_EQ(r.mul(4, 3), Scalar(0));
  EXPECT_EQ(r.neg(1), Scalar(5));
}

TEST(Scalar, TextRoundTrip) {
  for (const auto& s : {"-3", "0", "5/6", "-7/4"}) EXPECT_EQ(scalar_to_string(scalar_from_string(s)), s);
  EXPECT_EQ(prime_factors(360), (std::vector<long>{2, 3, 5}));
  EXPECT_TRUE(is_prime(97));
  EXPECT_FALSE(is_prime(91));
}

TEST(Polynomial, ParseAndPrint) {
  const Polynomial f = P("e1^2*e2 - 3*e1*e2 + 1");
  EXPECT_EQ(f.to_string(kNames), "e1^2*e2 - 3*e1*e2 + 1");
  EXPECT_EQ(f.degree(), 3);
  EXPECT_FALSE(f.is_homogeneous());
  EXPECT_EQ(f.homogeneous_part(2), P("-3*e1*e2"));
  EXPECT_EQ(f.constant_term(), Scalar(1));
  EXPECT_EQ(P("(e1 + e2)^2"), P("e1^2 + 2*e1*e2 + e2^2"));
  EXPECT_THROW(P("e4"), ParseError);
  EXPECT_THROW(P("e1 +"), ParseError);
  EXPECT_THROW(P("1/2*e1"), NotInRing);
}

TEST(Polynomial, TermsAreLexDescending) {
  const Polynomial f = P("e3 + e1*e3 + e2^2 + e1^2");
  std::vector<Exponent> seen;
  for (const auto& [e, c] : f.terms()) seen.push_back(e);
  EXPECT_EQ(seen, (std::vector<Exponent>{Exponent{2, 0, 0}, Exponent{1, 0, 1}, Exponent{0, 2, 0}, Exponent{0, 0, 1}}));
}

TEST(Polynomial, RingAxiomsOnRandomSamples) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> c(-4, 4);
  auto rand_poly = [&] {
    Polynomial f(Ring::integers(), 3);
    for (int t = 0; t < 4; ++t) f.add_term(Exponent{c(rng) & 3, c(rng) & 1, c(rng) & 2}, c(rng));
    return f;
  };
  for (int k = 0; k < 50; ++k) {
    const Polynomial a = rand_poly(), b = rand_poly(), d = rand_poly();
    EXPECT_EQ(a * (b + d), a * b + a * d);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a * b) * d, a * (b * d));
    EXPECT_TRUE((a - a).is_zero());
  }
}

TEST(Polynomial, ArithmeticModTwo) {
  const Ring f2 = Ring::integers_mod(2);
  EXPECT_EQ(P("(e1 + e2)^2", f2), P("e1^2 + e2^2", f2));
  EXPECT_TRUE(P("2*e1", f2).is_zero());
}

TEST(Polynomial, RingMismatchIsAnError) {
  EXPECT_THROW(P("e1") + P("e1", Ring::rationals()), RingMismatch);
}

TEST(Polynomial, SubstituteAndChangeRing) {
  const Polynomial f = P("e1^2 - e2");
  const Polynomial g = f.substitute({P("e1 + e2"), P("e3"), P("e3")});
  EXPECT_EQ(g, P("e1^2 + 2*e1*e2 + e2^2 - e3"));
  EXPECT_EQ(change_ring(P("3*e1 + 4"), Ring::integers_mod(3)), P("1", Ring::integers_mod(3)));
  EXPECT_THROW(change_ring(P("1/2*e1", Ring::rationals()), Ring::integers()), NoCanonicalMap);
  EXPECT_EQ(lift_to_integers(P("e1 - 1", Ring::integers_mod(5))), P("e1 + 4"));
}

TEST(Polynomial, ExactLinearDivision) {
  const Polynomial alpha = P("e1 - e2");
  const Polynomial q = P("e1^2 + 3*e2*e3");
  EXPECT_EQ(exact_divide_linear(q * alpha, alpha), q);
  EXPECT_THROW(exact_divide_linear(P("e1"), alpha), NotDivisible);
  EXPECT_THROW(exact_divide_linear(P("e1"), P("2*e1 + 2*e2")), NotDivisible);
  EXPECT_EQ(exact_divide_linear(P("e1", Ring::parse("Z[1/2]")), P("2*e1", Ring::parse("Z[1/2]"))),
            Polynomial::constant(Ring::parse("Z[1/2]"), 3, Scalar(1, 2)));
}

TEST(Polynomial, MonomialCounts) {
  for (int d = 0; d <= 6; ++d) {
    // C(d + 2, 2) monomials in three variables.
    EXPECT_EQ(monomials_of_degree(3, d).size(), static_cast<std::size_t>((d + 1) * (d + 2) / 2));
  }
}

namespace {

long gcd_all(const std::vector<long>& v) {
  long g = 0;
  for (long x : v) g = std::gcd(g, x);
  return g;
}

}  // namespace

TEST(Linalg, SmithInvariantsMatchMinorGcds) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> e(-9, 9);
  for (int k = 0; k < 40; ++k) {
    linalg::IntMatrix m(2, linalg::IntVector(2));
    std::vector<long> entries;
    for (auto& row : m) {
      for (auto& x : row) {
        const long v = e(rng);
        x = v;
        entries.push_back(v);
      }
    }
    const long d1 = gcd_all(entries);
    const long det = std::labs(m[0][0].get_si() * m[1][1].get_si() - m[0][1].get_si() * m[1][0].get_si());
    std::vector<mpz_class> expected;
    if (d1 != 0) expected.push_back(d1);
    if (det != 0) expected.push_back(det / d1);
    EXPECT_EQ(linalg::smith_invariants(m, 2), expected);
  }
}

TEST(Linalg, KernelAndRankOverFields) {
  const linalg::Matrix m = {{1, 2, 3}, {2, 4, 6}, {1, 0, 1}};
  EXPECT_EQ(linalg::rank(m, 3, Ring::rationals()), 2u);
  const auto ker = linalg::kernel(m, 3, Ring::rationals());
  ASSERT_EQ(ker.size(), 1u);
  const auto image = linalg::mat_vec(m, ker[0], Ring::rationals());
  for (const auto& x : image) EXPECT_EQ(x, 0);
  // Mod 2 the second row vanishes and the other two coincide.
  EXPECT_EQ(linalg::rank(m, 3, Ring::integers_mod(2)), 1u);
}

TEST(Linalg, SolveAndInverse) {
  const linalg::Matrix a = {{2, 1}, {1, 1}};
  const auto inv = linalg::inverse(a, Ring::rationals());
  ASSERT_TRUE(inv.has_value());
  EXPECT_EQ((*inv)[0], (linalg::Vector{1, -1}));
  const auto x = linalg::solve(a, 2, {3, 2}, Ring::rationals());
  ASSERT_TRUE(x.has_value());
  EXPECT_EQ(*x, (linalg::Vector{1, 1}));
  EXPECT_FALSE(linalg::inverse({{1, 1}, {1, 1}}, Ring::rationals()).has_value());
  EXPECT_FALSE(linalg::solve({{1, 1}, {1, 1}}, 2, {1, 2}, Ring::rationals()).has_value());
}

TEST(Linalg, IntegerKernelIsSaturated) {
  // x + y + 2z = 0: the kernel lattice contains (1,1,-1) although 2x + 2y + 4z
  // has the same rational kernel.
  const auto ker = linalg::integer_kernel({{2, 2, 4}}, 3);
  ASSERT_EQ(ker.size(), 2u);
  EXPECT_EQ(linalg::smith_invariants(ker, 3), (std::vector<mpz_class>{1, 1}));
  for (const auto& v : ker) EXPECT_EQ(2 * v[0] + 2 * v[1] + 4 * v[2], 0);
}

TEST(Linalg, EchelonBasisMembership) {
  linalg::EchelonBasis e(Ring::integers_mod(3), 3);
  EXPECT_TRUE(e.insert({1, 1, 0}));
  EXPECT_TRUE(e.insert({0, 1, 1}));
  EXPECT_FALSE(e.insert({1, 2, 1}));
  EXPECT_TRUE(e.contains({2, 1, 2}));
  EXPECT_FALSE(e.contains({2, 0, 2}));
  EXPECT_EQ(e.free_columns(), (std::vector<std::size_t>{2}));
}
