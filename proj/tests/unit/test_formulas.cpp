#include <gtest/gtest.h>

#include <algorithm>

#include "kfin/error.hpp"
#include "kfin/formulas.hpp"
#include "kfin/torsion.hpp"
#include "oracles.hpp"

using namespace kfin;

TEST(NumberTheory, SmallValues) {
  EXPECT_EQ(euler_phi(1), 1u);
  EXPECT_EQ(euler_phi(6), 2u);
  EXPECT_EQ(euler_phi(12), 4u);
  EXPECT_EQ(euler_phi(999999937), 999999936u);
  EXPECT_EQ(lcm(4, 6), 12u);
  EXPECT_EQ(divisors(6), (std::vector<std::uint64_t>{1, 2, 3, 6}));
  EXPECT_EQ(divisors(1), (std::vector<std::uint64_t>{1}));
  EXPECT_EQ(divisors(36), (std::vector<std::uint64_t>{1, 2, 3, 4, 6, 9, 12, 18, 36}));
  EXPECT_THROW(euler_phi(0), InvalidArgument);
  EXPECT_THROW(divisors(0), InvalidArgument);
  EXPECT_THROW(lcm(0, 3), InvalidArgument);
}

TEST(NumberTheory, PhiMatchesCoprimeCount) {
  for (std::uint64_t n = 1; n <= 300; ++n) {
    std::uint64_t coprime = 0;
    for (std::uint64_t k = 1; k <= n; ++k) coprime += gcd(k, n) == 1;
    ASSERT_EQ(euler_phi(n), coprime) << n;
  }
}

TEST(AbelianFormula, SpecExamples) {
  EXPECT_EQ(ffin_abelian({6}).value, 4);
  EXPECT_EQ(ffin_abelian({2, 2}).value, 4);
  EXPECT_EQ(ffin_abelian({6}, 3).value, 4);
  EXPECT_EQ(ffin_abelian({}).value, 1);
}

TEST(AbelianFormula, SingleFactorIsDivisorCount) {
  for (std::uint64_t n = 1; n <= 1000; ++n) {
    ASSERT_EQ(ffin_abelian({n}).value, static_cast<unsigned long>(oracle::divisor_count_by_scan(n))) << n;
  }
}

TEST(AbelianFormula, SymmetricInArguments) {
  std::vector<std::uint64_t> args{2, 6, 4};
  const auto expected = ffin_abelian(args).value;
  std::sort(args.begin(), args.end());
  do {
    EXPECT_EQ(ffin_abelian(args).value, expected);
  } while (std::next_permutation(args.begin(), args.end()));
}

TEST(AbelianFormula, CoprimeProductsMatchCyclic) {
  for (std::uint64_t m = 1; m <= 12; ++m) {
    for (std::uint64_t n = 1; n <= 12; ++n) {
      if (gcd(m, n) != 1) continue;
      EXPECT_EQ(ffin_abelian({m, n}).value, ffin_abelian({m * n}).value);
      EXPECT_EQ(compute_ffin(*Group::from_text("Z/" + std::to_string(m) + " x Z/" + std::to_string(n))).f_value,
                compute_ffin(*Group::from_text("Z/" + std::to_string(m * n))).f_value);
    }
  }
}

TEST(DihedralFormula, SpecExamples) {
  EXPECT_EQ(ffin_dihedral(3).value, 3);
  EXPECT_EQ(ffin_dihedral(4).value, 5);
  EXPECT_EQ(ffin_infinite_dihedral().value, 3);
  EXPECT_EQ(ffin_dihedral(3).value, compute_ffin(*Group::from_text("S3")).f_value);
  EXPECT_THROW(ffin_dihedral(1), InvalidArgument);
}

TEST(Partitions, RecurrenceMatchesListing) {
  for (int n = 0; n <= 30; ++n) {
    ASSERT_EQ(partition_count(n), static_cast<unsigned long>(oracle::partitions_by_listing(n))) << n;
  }
  EXPECT_EQ(partition_count(100).get_str(), "190569292");
  EXPECT_EQ(partition_count(200).get_str(), "3972999029388");
  EXPECT_THROW(partition_count(201), InvalidArgument);
}

TEST(SymmetricFormula, SpecExamples) {
  EXPECT_EQ(ffin_symmetric(1).value, 1);
  EXPECT_EQ(ffin_symmetric(4).value, 5);
  EXPECT_EQ(ffin_symmetric(5).value, 7);
  for (const char* spec : {"S4", "S5"}) {
    const auto g = Group::from_text(spec);
    EXPECT_EQ(oracle::count_conjugacy_classes(*g), compute_ffin(*g).f_value);
  }
}

TEST(CrossValidate, SpecExamples) {
  for (const auto& [spec, value] : std::vector<std::pair<std::string, unsigned long>>{
           {"Z/12", 6}, {"D10", 6}, {"S6", 11}}) {
    const auto cv = cross_validate(spec);
    ASSERT_TRUE(cv.formula_value && cv.brute_force_value) << spec;
    EXPECT_EQ(*cv.formula_value, value) << spec;
    EXPECT_EQ(*cv.brute_force_value, value) << spec;
    EXPECT_TRUE(cv.agree);
    EXPECT_TRUE(cv.brute_force_exact);
  }
}

TEST(CrossValidate, FlagsInexactAndMissingPaths) {
  const auto dinf = cross_validate("Dinf");
  EXPECT_TRUE(dinf.agree);
  EXPECT_FALSE(dinf.brute_force_exact);
  EXPECT_FALSE(dinf.note.empty());

  const auto big = cross_validate("S9");
  EXPECT_TRUE(big.formula_value);
  EXPECT_FALSE(big.brute_force_value);
  EXPECT_FALSE(big.agree);

  const auto perm = cross_validate("perm:(1 2 3)");
  EXPECT_FALSE(perm.formula_value);
  EXPECT_EQ(perm.brute_force_value, 2u);  // cyclic of order 3
}

TEST(FormulaFor, Dispatch) {
  EXPECT_EQ(formula_for(parse_group_spec("Z/4 x Z^2"))->formula_name, "abelian-divisor-totient");
  EXPECT_EQ(formula_for(parse_group_spec("D5"))->formula_name, "dihedral-divisors");
  EXPECT_EQ(formula_for(parse_group_spec("S3"))->formula_name, "partition-count");
  EXPECT_FALSE(formula_for(parse_group_spec("D5 x Z/2")));
  EXPECT_FALSE(formula_for(parse_group_spec("Heis")));
}
