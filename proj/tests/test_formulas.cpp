#include <gtest/gtest.h>

#include "kappa/formulas.hpp"
#include "kappa/group.hpp"
#include "kappa/matrix_tree.hpp"

using namespace kappa;

namespace {

FactoredNat fn(std::initializer_list<std::pair<std::uint64_t, std::uint64_t>> pes) {
  FactoredNat f;
  for (auto [p, e] : pes) f *= FactoredNat::prime_power(p, e);
  return f;
}

BigInt oracle(const GroupSpec& spec) { return kappa_matrix_tree(power_graph(build_group(spec))); }

}  // namespace

TEST(Cayley, Values) {
  EXPECT_EQ(kappa_cayley(4).value(), 16);
  EXPECT_EQ(kappa_cayley(2).value(), 1);
  EXPECT_EQ(kappa_cayley(1).value(), 1);
  EXPECT_EQ(kappa_cayley(7).value(), 16807);
  EXPECT_THROW(kappa_cayley(0), DomainError);
}

TEST(Quaternion, Values) {
  EXPECT_EQ(kappa_quaternion(3), FactoredNat::prime_power(2, 11));
  EXPECT_EQ(kappa_quaternion(4), FactoredNat::prime_power(2, 31));
  EXPECT_EQ(kappa_quaternion(5), FactoredNat::prime_power(2, 81));
  EXPECT_EQ(kappa_quaternion(5).value(), oracle(GroupSpec::quaternion(5)));
  EXPECT_THROW(kappa_quaternion(2), DomainError);
}

TEST(Epo, Values) {
  EXPECT_EQ(kappa_epo({{3, 4}}), FactoredNat::prime_power(3, 4));
  EXPECT_EQ(kappa_epo({{2, 3}, {3, 1}}), FactoredNat::of(3));
  EXPECT_EQ(kappa_epo({{2, 17}}), FactoredNat{});
  EXPECT_THROW(kappa_epo({{4, 1}}), DomainError);
  EXPECT_THROW(kappa_epo({{3, 0}}), DomainError);
}

TEST(CliqueReplacedFormula, Values) {
  for (std::uint64_t t = 1; t <= 4; ++t)
    for (std::uint64_t x = 1; x <= 3; ++x)
      EXPECT_EQ(kappa_clique_replaced_formula(CliqueReplacedSpec(complete_graph(t), std::vector<std::uint64_t>(t, x))),
                kappa_cayley(t * x));
  EXPECT_EQ(kappa_clique_replaced_formula(cyclic_divisor_spec(6)), fn({{2, 2}, {3, 3}, {5, 1}}));
  EXPECT_EQ(kappa_clique_replaced_formula(CliqueReplacedSpec(path_graph(2), {1, 1})), FactoredNat{});
}

TEST(SMatrix, Values) {
  EXPECT_EQ(kappa_clique_replaced_smatrix(CliqueReplacedSpec(path_graph(3), {1, 1, 1})), FactoredNat{});
  EXPECT_EQ(kappa_clique_replaced_smatrix(CliqueReplacedSpec(complete_graph(2), {2, 3})), FactoredNat::prime_power(5, 3));
  EXPECT_EQ(kappa_clique_replaced_smatrix(CliqueReplacedSpec(complete_graph(3), {1, 1, 1})), FactoredNat::of(3));
}

TEST(SMatrix, QuotientRowsSumToZero) {
  const CliqueReplacedSpec spec(path_graph(4), {1, 3, 2, 5});
  const IntMatrix s = s_matrix(spec);
  for (std::size_t p = 0; p < 4; ++p) {
    BigInt row = 0;
    for (std::size_t q = 0; q < 4; ++q) row += s(p, q);
    EXPECT_EQ(row, 0);
  }
  EXPECT_EQ(s(1, 0), -1);
  EXPECT_EQ(s(0, 1), -3);
}

TEST(SMatrix, LiteralTableDisagreesOnUnequalSizes) {
  // Weights x_max(p,q) make S symmetric; on K2[2,3] that gives 150, not 125.
  const CliqueReplacedSpec spec(complete_graph(2), {2, 3});
  EXPECT_EQ(kappa_clique_replaced_smatrix(spec, SMatrixConvention::literal_table).value(), 150);
  EXPECT_EQ(kappa_matrix_tree(clique_replaced(spec)), 125);
  // With equal sizes both conventions coincide.
  const CliqueReplacedSpec even(path_graph(3), {2, 2, 2});
  EXPECT_EQ(kappa_clique_replaced_smatrix(even, SMatrixConvention::literal_table), kappa_clique_replaced_smatrix(even));
}

TEST(PathClosedForm, AsDisplayed) {
  const std::vector<std::uint64_t> ones{1, 1, 1};
  EXPECT_EQ(kappa_clique_replaced_path(ones).value(), 3);  // the path itself has one spanning tree
  EXPECT_EQ(kappa_matrix_tree(path_graph(3)), 1);
  const std::vector<std::uint64_t> x{1, 2, 1};
  EXPECT_EQ(kappa_matrix_tree(clique_replaced(CliqueReplacedSpec(path_graph(3), x))), 8);
  EXPECT_EQ(kappa_clique_replaced_path(x).value(), 32);
}

TEST(PathClosedForm, ExceedsOracleByVertexCount) {
  // The displayed closed form is n times the spanning-tree count.
  for (const auto& x : std::vector<std::vector<std::uint64_t>>{{1, 1, 1}, {2, 1, 3}, {1, 2, 2, 1}, {3, 1, 4, 1, 5}, {2, 2, 2, 2, 2, 2}}) {
    const CliqueReplacedSpec spec(path_graph(x.size()), x);
    EXPECT_EQ(kappa_clique_replaced_path(x).value(), kappa_matrix_tree(clique_replaced(spec)) * spec.n());
  }
}

TEST(PathClosedForm, ShortPathsDelegateToCayley) {
  const std::vector<std::uint64_t> two{2, 2};
  EXPECT_EQ(kappa_clique_replaced_path(two).value(), 16);
  const std::vector<std::uint64_t> one{5};
  EXPECT_EQ(kappa_clique_replaced_path(one), kappa_cayley(5));
  const std::vector<std::uint64_t> bad{1, 0, 1};
  EXPECT_THROW(kappa_clique_replaced_path(bad), DomainError);
}

TEST(Cyclic, Values) {
  EXPECT_EQ(kappa_cyclic(8), FactoredNat::prime_power(2, 18));
  EXPECT_EQ(kappa_cyclic(6).value(), 540);
  EXPECT_EQ(kappa_cyclic(1), FactoredNat{});
  EXPECT_EQ(kappa_cyclic(30), kappa_clique_replaced_formula(cyclic_divisor_spec(30)));
  EXPECT_THROW(kappa_cyclic(0), DomainError);
}

TEST(Psl2, Values) {
  EXPECT_EQ(kappa_psl2(2, 2), fn({{3, 10}, {5, 18}}));
  EXPECT_EQ(kappa_psl2(7, 1), fn({{2, 84}, {3, 28}, {7, 40}}));
  EXPECT_EQ(kappa_psl2(3, 2), fn({{2, 180}, {3, 40}, {5, 108}}));
  EXPECT_EQ(kappa_psl2(5, 1), kappa_psl2(2, 2));
  EXPECT_THROW(kappa_psl2(2, 1), DomainError);
  EXPECT_THROW(kappa_psl2(3, 1), DomainError);
}

TEST(Heisenberg, Values) {
  EXPECT_EQ(kappa_heisenberg(3), FactoredNat::prime_power(3, 13));
  EXPECT_EQ(kappa_heisenberg(5), FactoredNat::prime_power(5, 93));
  EXPECT_EQ(kappa_heisenberg(3).value(), oracle(GroupSpec::heisenberg(3)));
  EXPECT_THROW(kappa_heisenberg(2), DomainError);
  EXPECT_THROW(kappa_heisenberg(9), DomainError);
}

TEST(Extraspecial, DeterminantSettlesTheStructure) {
  const ExtraspecialReport r = kappa_extraspecial_exp_p2(3);
  const BigInt det = oracle(GroupSpec::extraspecial_exp_p2(3));
  // Determinant value, confirmed by an independent exact computation.
  EXPECT_EQ(det, fn({{3, 37}, {7, 2}}).value());
  EXPECT_EQ(r.actual_structure_value.value(), det);
  EXPECT_EQ(r.published_structure_value, FactoredNat::prime_power(3, 49));
  EXPECT_NE(r.published_structure_value.value(), det);
  EXPECT_EQ(r.statement_exponent, 46u);
  EXPECT_EQ(r.proof_exponent, 47u);
  EXPECT_FALSE(r.published_matches_statement());
  EXPECT_FALSE(r.published_matches_proof());
  EXPECT_FALSE(r.actual_matches_statement());
  EXPECT_FALSE(r.actual_matches_proof());
}

TEST(Extraspecial, FiveAgreesWithDeterminant) {
  const ExtraspecialReport r = kappa_extraspecial_exp_p2(5);
  EXPECT_EQ(r.actual_structure_value.value(), oracle(GroupSpec::extraspecial_exp_p2(5)));
  EXPECT_EQ(r.published_structure_value, FactoredNat::prime_power(5, 245));
}

TEST(Frobenius, Values) {
  EXPECT_EQ(kappa_frobenius_pq(2, 3), FactoredNat::of(3));
  EXPECT_EQ(kappa_frobenius_pq(3, 7), fn({{3, 7}, {7, 5}}));
  EXPECT_EQ(kappa_frobenius_pq(5, 11), fn({{5, 33}, {11, 9}}));
  EXPECT_EQ(kappa_frobenius_pq(3, 7).value(), oracle(GroupSpec::frobenius_pq(3, 7)));
  EXPECT_THROW(kappa_frobenius_pq(3, 11), DomainError);
  EXPECT_THROW(kappa_frobenius_pq(7, 3), DomainError);
}

TEST(TiCover, Values) {
  const FactoredNat single[] = {FactoredNat::prime_power(3, 10)};
  EXPECT_EQ(ti_cover_product(single), FactoredNat::prime_power(3, 10));
  // A5: five Klein four-groups, ten subgroups of order 3, six of order 5.
  const FactoredNat a5[] = {kappa_epo({{2, 3}}).pow(5), kappa_cayley(3).pow(10), kappa_cayley(5).pow(6)};
  EXPECT_EQ(ti_cover_product(a5), fn({{3, 10}, {5, 18}}));
  const std::vector<FactoredNat> copies(7, FactoredNat::of(11));
  EXPECT_EQ(ti_cover_product(copies), FactoredNat::prime_power(11, 7));
}
