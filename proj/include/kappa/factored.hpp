#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "kappa/errors.hpp"
#include "kappa/linalg.hpp"
#include "kappa/number_theory.hpp"

namespace kappa {

/// Exact natural number: residual * prod p^e over certified primes p.
/// The value 0 is represented by residual 0 and no prime factors.
class FactoredNat {
 public:
  FactoredNat() = default;  // 1

  static FactoredNat zero() {
    FactoredNat z;
    z.residual_ = 0;
    return z;
  }

  static FactoredNat prime_power(std::uint64_t p, std::uint64_t e) {
    if (!nt::is_prime(p)) throw DomainError("FactoredNat: " + std::to_string(p) + " is not prime");
    FactoredNat f;
    if (e > 0) f.primes_[p] = e;
    return f;
  }

  /// Factors a machine integer completely.
  static FactoredNat of(std::uint64_t n) {
    if (n == 0) return zero();
    FactoredNat f;
    for (auto [p, e] : nt::factorize(n)) f.primes_[p] = e;
    return f;
  }

  /// Trial division by every prime <= bound; what remains is the residual.
  static FactoredNat factor(BigInt n, std::uint64_t bound) {
    if (n < 0) throw DomainError("FactoredNat::factor: negative input");
    if (n == 0) return zero();
    FactoredNat f;
    for (std::uint64_t p = 2; p <= bound && n > 1; ++p) {
      if (!nt::is_prime(p)) continue;
      std::uint64_t e = 0;
      while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
        mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
        ++e;
      }
      if (e > 0) f.primes_[p] = e;
    }
    f.residual_ = n;
    if (f.residual_ > 1 && f.residual_.fits_ulong_p() && nt::is_prime(f.residual_.get_ui())) {
      f.primes_[f.residual_.get_ui()] += 1;
      f.residual_ = 1;
    }
    return f;
  }

  bool is_zero() const { return residual_ == 0; }
  bool fully_factored() const { return residual_ == 1; }
  const std::map<std::uint64_t, std::uint64_t>& primes() const noexcept { return primes_; }
  const BigInt& residual() const noexcept { return residual_; }

  std::uint64_t exponent(std::uint64_t p) const {
    auto it = primes_.find(p);
    return it == primes_.end() ? 0 : it->second;
  }

  BigInt value() const {
    BigInt v = residual_;
    BigInt pw;
    for (auto [p, e] : primes_) {
      mpz_ui_pow_ui(pw.get_mpz_t(), p, e);
      v *= pw;
    }
    return v;
  }

  FactoredNat& operator*=(const FactoredNat& o) {
    if (is_zero() || o.is_zero()) return *this = zero();
    for (auto [p, e] : o.primes_) primes_[p] += e;
    residual_ *= o.residual_;
    return *this;
  }

  friend FactoredNat operator*(FactoredNat a, const FactoredNat& b) { return a *= b; }

  FactoredNat pow(std::uint64_t k) const {
    if (k == 0) return FactoredNat{};
    if (is_zero()) return zero();
    FactoredNat out;
    for (auto [p, e] : primes_) out.primes_[p] = e * k;
    mpz_pow_ui(out.residual_.get_mpz_t(), residual_.get_mpz_t(), k);
    return out;
  }

  /// Exact quotient; throws ConsistencyError when `o` does not divide *this.
  FactoredNat divide(const FactoredNat& o) const {
    if (o.is_zero()) throw DomainError("FactoredNat::divide: division by zero");
    if (is_zero()) return zero();
    FactoredNat out = *this;
    for (auto [p, e] : o.primes_) {
      auto it = out.primes_.find(p);
      if (it == out.primes_.end() || it->second < e) {
        // Fall back to the integer route when the factor hides in the residual.
        return exact_integer_divide(o);
      }
      it->second -= e;
      if (it->second == 0) out.primes_.erase(it);
    }
    if (o.residual_ != 1) {
      if (out.residual_ % o.residual_ != 0) return exact_integer_divide(o);
      out.residual_ /= o.residual_;
    }
    return out;
  }

  /// Canonical text: `p^e * q^f [* R]` ascending; `1` for one, `0` for zero.
  std::string to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (auto [p, e] : primes_) {
      if (!out.empty()) out += " * ";
      out += std::to_string(p) + "^" + std::to_string(e);
    }
    if (residual_ != 1) {
      if (!out.empty()) out += " * ";
      out += residual_.get_str();
    }
    return out.empty() ? "1" : out;
  }

  friend bool operator==(const FactoredNat& a, const FactoredNat& b) {
    if (a.fully_factored() && b.fully_factored()) return a.primes_ == b.primes_;
    return a.value() == b.value();
  }

 private:
  FactoredNat exact_integer_divide(const FactoredNat& o) const {
    const BigInt num = value();
    const BigInt den = o.value();
    if (num % den != 0) throw ConsistencyError("FactoredNat::divide: inexact division");
    std::uint64_t bound = 2;
    for (auto [p, e] : primes_) bound = std::max(bound, p);
    return factor(num / den, bound);
  }

  std::map<std::uint64_t, std::uint64_t> primes_;
  BigInt residual_ = 1;
};

}  // namespace kappa
