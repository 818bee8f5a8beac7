#pragma once

// Closed-form spanning-tree counts. Every function returns a FactoredNat and
// has a matrix-tree counterpart it is checked against in the test suites.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "kappa/errors.hpp"
#include "kappa/factored.hpp"
#include "kappa/graph.hpp"
#include "kappa/linalg.hpp"
#include "kappa/number_theory.hpp"
#include "kappa/spectra.hpp"

namespace kappa {

/// Default trial-division bound used when factoring brute-force results.
inline std::uint64_t default_factor_bound(std::uint64_t vertices) { return std::max<std::uint64_t>(vertices, 1000); }

/// n^(n-2); 1 for n in {1, 2}.
inline FactoredNat kappa_cayley(std::uint64_t n) {
  if (n == 0) throw DomainError("kappa_cayley: n must be >= 1");
  if (n <= 2) return FactoredNat{};
  return FactoredNat::of(n).pow(n - 2);
}

/// Generalized quaternion group of order 2^n: 2^((2^(n-2) - 1)(2n + 1) + 4).
inline FactoredNat kappa_quaternion(std::uint64_t n) {
  if (n < 3) throw DomainError("kappa_quaternion: n must be >= 3");
  if (n > 60) throw DomainError("kappa_quaternion: n too large");
  const std::uint64_t e = ((std::uint64_t{1} << (n - 2)) - 1) * (2 * n + 1) + 4;
  return FactoredNat::prime_power(2, e);
}

/// Groups whose non-identity elements all have prime order:
/// prod_p p^((p - 2) c_p), c_p = number of cyclic subgroups of order p.
inline FactoredNat kappa_epo(const std::map<std::uint64_t, std::uint64_t>& counts) {
  FactoredNat out;
  for (auto [p, c] : counts) {
    if (!nt::is_prime(p)) throw DomainError("kappa_epo: key " + std::to_string(p) + " is not prime");
    if (c == 0) throw DomainError("kappa_epo: class count for " + std::to_string(p) + " must be >= 1");
    out *= FactoredNat::prime_power(p, (p - 2) * c);
  }
  return out;
}

/// Product rule for a group covered by subgroups meeting pairwise in the
/// identity: kappa(G) is the product of the parts' complexities.
inline FactoredNat ti_cover_product(std::span<const FactoredNat> parts) {
  FactoredNat out;
  for (const auto& p : parts) out *= p;
  return out;
}

namespace detail {

/// det(diag(lambda) + A) restricted to `vertices`, expanded as
/// prod lambda + sum over nonempty S of det A(S) * prod_{i not in S} lambda_i.
/// Singletons and subsets containing a vertex isolated within `vertices`
/// contribute zero and are skipped.
inline BigRat lambda_subset_sum(const IntMatrix& adjacency, const std::vector<BigRat>& lambda,
                                std::span<const std::size_t> vertices) {
  const std::size_t k = vertices.size();
  if (k > 24) throw DomainError("lambda_subset_sum: too many base vertices for subset enumeration");

  std::uint32_t isolated = 0;
  for (std::size_t a = 0; a < k; ++a) {
    bool any = false;
    for (std::size_t b = 0; b < k; ++b)
      if (a != b && adjacency(vertices[a], vertices[b]) != 0) any = true;
    if (!any) isolated |= 1U << a;
  }

  BigRat all = 1;
  for (std::size_t a = 0; a < k; ++a) all *= lambda[vertices[a]];
  BigRat sum = all;

  std::vector<std::size_t> idx;
  for (std::uint32_t mask = 1; mask < (1U << k); ++mask) {
    if (std::popcount(mask) < 2 || (mask & isolated) != 0) continue;
    idx.clear();
    for (std::size_t a = 0; a < k; ++a)
      if (mask & (1U << a)) idx.push_back(vertices[a]);
    const BigInt det = det_bareiss(adjacency.principal_submatrix(idx));
    if (det == 0) continue;
    BigRat term = det;
    for (std::size_t a = 0; a < k; ++a)
      if (!(mask & (1U << a))) term *= lambda[vertices[a]];
    sum += term;
  }
  return sum;
}

inline FactoredNat to_factored(const BigRat& value, const char* who, std::uint64_t bound) {
  if (value.get_den() != 1) throw ConsistencyError(std::string(who) + ": result is not an integer (" + value.get_str() + ")");
  if (value < 0) throw ConsistencyError(std::string(who) + ": negative result");
  return FactoredNat::factor(value.get_num(), bound);
}

inline BigInt pow_ui(std::uint64_t base, std::uint64_t e) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), base, e);
  return r;
}

}  // namespace detail

/// Clique-replaced graph complexity:
///   prod m_i^x_i * (psi + sum_L det A_{comp}(L) prod_{i not in L} lambda_i) / (psi n^2)
/// where L ranges over the vertex subsets of the base complement.
inline FactoredNat kappa_clique_replaced_formula(const CliqueReplacedSpec& spec, std::uint64_t factor_bound = 0) {
  const std::size_t k = spec.k();
  const IntMatrix comp = adjacency_matrix(complement(spec.base()));
  std::vector<BigRat> lambda(k);
  std::vector<std::size_t> all(k);
  BigInt prod_m = 1;
  for (std::size_t i = 0; i < k; ++i) {
    lambda[i] = spec.lambda(i);
    all[i] = i;
    prod_m *= detail::pow_ui(spec.m(i), spec.sizes()[i]);
  }
  const BigRat bracket = detail::lambda_subset_sum(comp, lambda, all);
  const BigInt n = static_cast<unsigned long>(spec.n());
  const BigRat value = BigRat(prod_m) * bracket / (spec.psi() * BigRat(n * n));
  return detail::to_factored(value, "kappa_clique_replaced_formula", factor_bound ? factor_bound : default_factor_bound(spec.n()));
}

/// Off-diagonal weight convention for the k x k block-quotient matrix S.
enum class SMatrixConvention {
  /// s_pq = -x_q for adjacent p, q: row p of S is the block-row sum of the
  /// Laplacian (the equitable-partition quotient).
  quotient,
  /// s_pq = -x_max(p,q): the entry table read literally. Symmetric, and not
  /// equal to the quotient unless all sizes agree; kept for auditing.
  literal_table,
};

inline IntMatrix s_matrix(const CliqueReplacedSpec& spec, SMatrixConvention convention = SMatrixConvention::quotient) {
  const std::size_t k = spec.k();
  IntMatrix s(k, k);
  for (std::size_t p = 0; p < k; ++p) {
    BigInt row = 0;
    for (std::size_t q : spec.base().neighbors(p)) {
      const std::size_t w = convention == SMatrixConvention::quotient ? q : std::max(p, q);
      s(p, q) = -BigInt(static_cast<unsigned long>(spec.sizes()[w]));
      row += s(p, q);
    }
    s(p, p) = -row;
  }
  return s;
}

/// kappa = prod m_j^(x_j - 1) * sum_j det S_(j) / n.
inline FactoredNat kappa_clique_replaced_smatrix(const CliqueReplacedSpec& spec,
                                                 SMatrixConvention convention = SMatrixConvention::quotient,
                                                 std::uint64_t factor_bound = 0) {
  const IntMatrix s = s_matrix(spec, convention);
  BigInt minors = 0;
  for (std::size_t j = 0; j < spec.k(); ++j) minors += det_bareiss(s.without(j));
  BigInt prod_m = 1;
  for (std::size_t i = 0; i < spec.k(); ++i) prod_m *= detail::pow_ui(spec.m(i), spec.sizes()[i] - 1);
  const BigRat value = make_rat(prod_m * minors, BigInt(static_cast<unsigned long>(spec.n())));
  return detail::to_factored(value, "kappa_clique_replaced_smatrix", factor_bound ? factor_bound : default_factor_bound(spec.n()));
}

/// Closed form for a clique-replaced path P_k[x_1..x_k], exactly as displayed:
///   (x1+x2)^(x1-1) prod_{j=2}^{k-1} (x_{j-1}+x_j+x_{j+1})^(x_j-1) (x_{k-1}+x_k)^(x_k-1) (x2...x_{k-1}) sum x_j
/// For k <= 2 the expanded graph is complete and Cayley's count is returned.
inline FactoredNat kappa_clique_replaced_path(std::span<const std::uint64_t> x) {
  const std::size_t k = x.size();
  if (k == 0) throw DomainError("kappa_clique_replaced_path: need at least one block");
  for (auto v : x)
    if (v == 0) throw DomainError("kappa_clique_replaced_path: block sizes must be positive");
  const std::uint64_t total = std::accumulate(x.begin(), x.end(), std::uint64_t{0});
  if (k <= 2) return kappa_cayley(total);

  FactoredNat out = FactoredNat::of(x[0] + x[1]).pow(x[0] - 1);
  for (std::size_t j = 1; j + 1 < k; ++j) out *= FactoredNat::of(x[j - 1] + x[j] + x[j + 1]).pow(x[j] - 1);
  out *= FactoredNat::of(x[k - 2] + x[k - 1]).pow(x[k - 1] - 1);
  for (std::size_t j = 1; j + 1 < k; ++j) out *= FactoredNat::of(x[j]);
  out *= FactoredNat::of(total);
  return out;
}

/// Complexity of the power graph of Z_n. Prime powers use p^(m(p^m - 2));
/// otherwise the divisor-graph form with phi-sized blocks, where d_1 = n and
/// d_k = 1 are universal and drop out of the subset sum:
///   prod m_i^phi(d_i) * (Phi + sum_L det A_{comp}(L) prod lambda_i) / (Phi n^2),
/// Phi = prod_{i=2}^{k-1} lambda_i, L over subsets of comp minus {d_1, d_k}.
inline FactoredNat kappa_cyclic(std::uint64_t n, std::uint64_t factor_bound = 0) {
  if (n == 0) throw DomainError("kappa_cyclic: n must be >= 1");
  if (n == 1) return FactoredNat{};
  if (auto pp = nt::prime_power(n)) {
    const auto [p, m] = *pp;
    return FactoredNat::prime_power(p, m * (n - 2));
  }
  const CliqueReplacedSpec spec = cyclic_divisor_spec(n);
  const std::size_t k = spec.k();
  const IntMatrix comp = adjacency_matrix(complement(spec.base()));
  std::vector<BigRat> lambda(k);
  BigInt prod_m = 1;
  for (std::size_t i = 0; i < k; ++i) {
    lambda[i] = spec.lambda(i);
    prod_m *= detail::pow_ui(spec.m(i), spec.sizes()[i]);
  }
  std::vector<std::size_t> middle;
  BigRat phi = 1;
  for (std::size_t i = 1; i + 1 < k; ++i) {
    middle.push_back(i);
    phi *= lambda[i];
  }
  const BigRat bracket = detail::lambda_subset_sum(comp, lambda, middle);
  const BigInt nn = BigInt(static_cast<unsigned long>(n)) * static_cast<unsigned long>(n);
  const BigRat value = BigRat(prod_m) * bracket / (phi * BigRat(nn));
  return detail::to_factored(value, "kappa_cyclic", factor_bound ? factor_bound : default_factor_bound(n));
}

/// PSL(2, q), q = p^n, via the cover by q + 1 Sylow p-subgroups and the
/// conjugates of the cyclic subgroups of orders (q - 1)/k and (q + 1)/k:
///   p^((q^2-1)(p-2)/(p-1)) * kappa(Z_{(q-1)/k})^(q(q+1)/2) * kappa(Z_{(q+1)/k})^(q(q-1)/2).
inline FactoredNat kappa_psl2(std::uint64_t p, std::uint64_t n) {
  if (!nt::is_prime(p) || n == 0) throw DomainError("kappa_psl2: need p prime and n >= 1");
  if ((p == 2 && n == 1) || (p == 3 && n == 1))
    throw DomainError("kappa_psl2: the product formula does not hold for (p, n) = (2, 1) or (3, 1)");
  const std::uint64_t q = nt::ipow(p, n);
  const std::uint64_t k = std::gcd(q - 1, std::uint64_t{2});
  const std::uint64_t sylow_count = q + 1;
  const std::uint64_t split_count = q * (q + 1) / 2;
  const std::uint64_t nonsplit_count = q * (q - 1) / 2;

  // kappa(E_q) = p^((p-2)(q-1)/(p-1)) for each Sylow p-subgroup.
  const FactoredNat sylow = FactoredNat::prime_power(p, (p - 2) * ((q - 1) / (p - 1)));
  const FactoredNat parts[] = {
      sylow.pow(sylow_count),
      kappa_cyclic((q - 1) / k).pow(split_count),
      kappa_cyclic((q + 1) / k).pow(nonsplit_count),
  };
  return ti_cover_product(parts);
}

/// Heisenberg group H_p (odd p): p^((p-2)(p^2+p+1)).
inline FactoredNat kappa_heisenberg(std::uint64_t p) {
  if (!nt::is_prime(p) || p == 2) throw DomainError("kappa_heisenberg: p must be an odd prime");
  return FactoredNat::prime_power(p, (p - 2) * (p * p + p + 1));
}

/// Spectral evaluation of the published join form of the exponent-p^2
/// extraspecial group, compared against the two exponents in circulation.
struct ExtraspecialReport {
  std::uint64_t p = 0;
  /// kappa of K(p) * (p+1)#K(p^2-p), from its Laplacian spectrum.
  FactoredNat published_structure_value;
  /// kappa from the clique expression of the actual power graph.
  FactoredNat actual_structure_value;
  std::uint64_t statement_exponent = 0;  // 2p^3 - p - 5
  std::uint64_t proof_exponent = 0;      // 2p^3 - p - 4

  static bool is_p_power(const FactoredNat& v, std::uint64_t p, std::uint64_t e) {
    return v == FactoredNat::prime_power(p, e);
  }
  bool published_matches_statement() const { return is_p_power(published_structure_value, p, statement_exponent); }
  bool published_matches_proof() const { return is_p_power(published_structure_value, p, proof_exponent); }
  bool actual_matches_statement() const { return is_p_power(actual_structure_value, p, statement_exponent); }
  bool actual_matches_proof() const { return is_p_power(actual_structure_value, p, proof_exponent); }
};

inline ExtraspecialReport kappa_extraspecial_exp_p2(std::uint64_t p) {
  if (!nt::is_prime(p) || p == 2) throw DomainError("kappa_extraspecial_exp_p2: p must be an odd prime");
  ExtraspecialReport r;
  r.p = p;
  r.published_structure_value = kappa_from_spectrum(spectrum(published_extraspecial_expr(p)));
  r.actual_structure_value = kappa_from_spectrum(spectrum(family_expr(GroupSpec::extraspecial_exp_p2(p))));
  r.statement_exponent = 2 * p * p * p - p - 5;
  r.proof_exponent = 2 * p * p * p - p - 4;
  return r;
}

/// Frobenius group with kernel F and complement H: kappa_G(F) * kappa_G(H)^|F|.
inline FactoredNat kappa_frobenius(const FactoredNat& kappa_kernel, const FactoredNat& kappa_complement,
                                   std::uint64_t kernel_order) {
  return kappa_kernel * kappa_complement.pow(kernel_order);
}

/// Nonabelian group of order pq (p < q primes, p | q - 1): q^(q-2) p^((p-2)q).
inline FactoredNat kappa_frobenius_pq(std::uint64_t p, std::uint64_t q) {
  if (!nt::is_prime(p) || !nt::is_prime(q) || p >= q || (q - 1) % p != 0)
    throw DomainError("kappa_frobenius_pq: need primes p < q with p | q - 1");
  return kappa_frobenius(kappa_cayley(q), kappa_cayley(p), q);
}

}  // namespace kappa
