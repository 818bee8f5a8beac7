#include <random>

#include <gtest/gtest.h>

#include "kappa/factored.hpp"
#include "kappa/number_theory.hpp"

using namespace kappa;

TEST(NumberTheory, Basics) {
  EXPECT_TRUE(nt::is_prime(2));
  EXPECT_TRUE(nt::is_prime(1000000007));
  EXPECT_FALSE(nt::is_prime(1));
  EXPECT_FALSE(nt::is_prime(3215031751ULL));  // strong pseudoprime to bases 2, 3, 5, 7
  EXPECT_EQ(nt::euler_phi(36), 12u);
  EXPECT_EQ(nt::divisors_desc(12), (std::vector<std::uint64_t>{12, 6, 4, 3, 2, 1}));
  EXPECT_EQ(nt::prime_power(27), (std::optional<std::pair<std::uint64_t, std::uint64_t>>{{3, 3}}));
  EXPECT_FALSE(nt::prime_power(12));
  EXPECT_EQ(nt::multiplicative_order(2, 7), 3u);
}

TEST(FactoredNat, Text) {
  EXPECT_EQ(FactoredNat{}.to_string(), "1");
  EXPECT_EQ(FactoredNat::zero().to_string(), "0");
  EXPECT_EQ(FactoredNat::of(540).to_string(), "2^2 * 3^3 * 5^1");
  EXPECT_EQ(FactoredNat::factor(BigInt(2 * 1009) * 1009, 1000).to_string(), "2^1 * 1018081");
}

TEST(FactoredNat, ResidualPrimeIsCertified) {
  const FactoredNat f = FactoredNat::factor(BigInt(4) * 1000003, 10);
  EXPECT_TRUE(f.fully_factored());
  EXPECT_EQ(f.exponent(1000003), 1u);
}

TEST(FactoredNat, Arithmetic) {
  const FactoredNat a = FactoredNat::of(12);
  const FactoredNat b = FactoredNat::of(18);
  EXPECT_EQ((a * b).value(), 216);
  EXPECT_EQ(a.pow(5).value(), 248832);
  EXPECT_EQ((a * b).divide(b), a);
  EXPECT_THROW(a.divide(FactoredNat::of(5)), ConsistencyError);
  EXPECT_THROW(a.divide(FactoredNat::zero()), DomainError);
  EXPECT_TRUE((a * FactoredNat::zero()).is_zero());
  EXPECT_THROW(FactoredNat::prime_power(4, 1), DomainError);
}

TEST(FactoredNat, DivideThroughResidual) {
  const FactoredNat big = FactoredNat::factor(BigInt(1018081) * 6, 100);
  EXPECT_EQ(big.divide(FactoredNat::of(3)).value(), BigInt(1018081) * 2);
}

TEST(FactoredNat, RoundTripRandom) {
  std::mt19937_64 rng(1);
  for (int t = 0; t < 200; ++t) {
    BigInt n = 1;
    for (int i = 0; i < 6; ++i) n *= static_cast<unsigned long>(1 + rng() % 5000);
    const FactoredNat f = FactoredNat::factor(n, 1000);
    EXPECT_EQ(f.value(), n);
    for (auto [p, e] : f.primes()) {
      EXPECT_TRUE(nt::is_prime(p));
      EXPECT_GE(e, 1u);
    }
  }
}
