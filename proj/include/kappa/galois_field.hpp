#pragma once

// GF(p^n) with elements encoded as integers 0..q-1: the base-p digits are the
// polynomial coefficients, lowest degree first.

#include <cstdint>
#include <string>
#include <vector>

#include "kappa/errors.hpp"
#include "kappa/number_theory.hpp"

namespace kappa {

class GaloisField {
 public:
  /// Element handle; `value` is the base-p encoding of the coefficient vector.
  struct Element {
    std::uint32_t value = 0;
    friend bool operator==(Element, Element) = default;
  };

  GaloisField(std::uint32_t p, std::uint32_t n) : p_(p), n_(n) {
    if (!nt::is_prime(p)) throw DomainError("GaloisField: characteristic " + std::to_string(p) + " is not prime");
    if (n == 0) throw DomainError("GaloisField: degree must be positive");
    const std::uint64_t q = nt::ipow(p, n);
    if (q > 1024) throw DomainError("GaloisField: field order " + std::to_string(q) + " too large");
    q_ = static_cast<std::uint32_t>(q);
    modulus_ = smallest_irreducible(p, n);
    build_tables();
  }

  std::uint32_t characteristic() const noexcept { return p_; }
  std::uint32_t degree() const noexcept { return n_; }
  std::uint32_t order() const noexcept { return q_; }
  /// Monic modulus, constant term first (length n + 1).
  const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }

  Element zero() const noexcept { return {0}; }
  Element one() const noexcept { return {1}; }
  Element element(std::uint32_t value) const {
    if (value >= q_) throw DomainError("GaloisField::element: value out of range");
    return {value};
  }
  std::vector<std::uint32_t> coefficients(Element a) const { return digits(a.value); }

  Element add(Element a, Element b) const { return {add_[a.value * q_ + b.value]}; }
  Element neg(Element a) const { return {neg_[a.value]}; }
  Element sub(Element a, Element b) const { return add(a, neg(b)); }
  Element mul(Element a, Element b) const { return {mul_[a.value * q_ + b.value]}; }
  Element inv(Element a) const {
    if (a.value == 0) throw DomainError("GaloisField::inv: zero has no inverse");
    return {inv_[a.value]};
  }

  /// Multiplicative order of a nonzero element.
  std::uint32_t multiplicative_order(Element a) const {
    if (a.value == 0) throw DomainError("GaloisField::multiplicative_order: zero");
    std::uint32_t k = 1;
    for (Element x = a; x.value != 1; x = mul(x, a)) ++k;
    return k;
  }

  /// Lexicographically smallest monic irreducible of degree n over GF(p),
  /// comparing coefficient tuples (c_0, ..., c_{n-1}) low degree first.
  static std::vector<std::uint32_t> smallest_irreducible(std::uint32_t p, std::uint32_t n) {
    const std::uint64_t count = nt::ipow(p, n);
    for (std::uint64_t code = 0; code < count; ++code) {
      std::vector<std::uint32_t> f(n + 1);
      std::uint64_t c = code;
      for (std::uint32_t i = 0; i < n; ++i) {
        f[i] = static_cast<std::uint32_t>(c % p);
        c /= p;
      }
      f[n] = 1;
      if (is_irreducible(f, p)) return f;
    }
    throw DomainError("GaloisField: no irreducible polynomial found");
  }

  /// Trial division by every monic polynomial of degree 1..deg/2.
  static bool is_irreducible(const std::vector<std::uint32_t>& f, std::uint32_t p) {
    const std::size_t deg = f.size() - 1;
    if (deg <= 1) return deg == 1;
    for (std::size_t d = 1; d <= deg / 2; ++d) {
      const std::uint64_t count = nt::ipow(p, d);
      for (std::uint64_t code = 0; code < count; ++code) {
        std::vector<std::uint32_t> g(d + 1);
        std::uint64_t c = code;
        for (std::size_t i = 0; i < d; ++i) {
          g[i] = static_cast<std::uint32_t>(c % p);
          c /= p;
        }
        g[d] = 1;
        if (remainder_is_zero(f, g, p)) return false;
      }
    }
    return true;
  }

 private:
  static bool remainder_is_zero(std::vector<std::uint32_t> f, const std::vector<std::uint32_t>& monic, std::uint32_t p) {
    const std::size_t d = monic.size() - 1;
    for (std::size_t top = f.size(); top-- > d;) {
      const std::uint32_t lead = f[top];
      if (lead == 0) continue;
      for (std::size_t i = 0; i <= d; ++i) {
        std::size_t pos = top - d + i;
        f[pos] = static_cast<std::uint32_t>((f[pos] + static_cast<std::uint64_t>(p - lead) * monic[i]) % p);
      }
    }
    for (std::size_t i = 0; i < d; ++i)
      if (f[i] != 0) return false;
    return true;
  }

  std::vector<std::uint32_t> digits(std::uint32_t v) const {
    std::vector<std::uint32_t> d(n_);
    for (std::uint32_t i = 0; i < n_; ++i) {
      d[i] = v % p_;
      v /= p_;
    }
    return d;
  }

  std::uint32_t encode(const std::vector<std::uint32_t>& d) const {
    std::uint32_t v = 0;
    for (std::uint32_t i = n_; i-- > 0;) v = v * p_ + d[i];
    return v;
  }

  std::uint32_t slow_mul(std::uint32_t a, std::uint32_t b) const {
    const auto da = digits(a);
    const auto db = digits(b);
    std::vector<std::uint64_t> prod(2 * n_ - 1, 0);
    for (std::uint32_t i = 0; i < n_; ++i)
      for (std::uint32_t j = 0; j < n_; ++j) prod[i + j] = (prod[i + j] + static_cast<std::uint64_t>(da[i]) * db[j]) % p_;
    for (std::size_t top = prod.size(); top-- > n_;) {
      const std::uint64_t lead = prod[top];
      if (lead == 0) continue;
      for (std::uint32_t i = 0; i <= n_; ++i) {
        std::size_t pos = top - n_ + i;
        prod[pos] = (prod[pos] + (p_ - lead) * modulus_[i]) % p_;
      }
    }
    std::vector<std::uint32_t> r(n_);
    for (std::uint32_t i = 0; i < n_; ++i) r[i] = static_cast<std::uint32_t>(prod[i]);
    return encode(r);
  }

  void build_tables() {
    const std::size_t q = q_;
    add_.resize(q * q);
    mul_.resize(q * q);
    neg_.resize(q);
    inv_.assign(q, 0);
    for (std::uint32_t a = 0; a < q_; ++a) {
      const auto da = digits(a);
      std::vector<std::uint32_t> dn(n_);
      for (std::uint32_t i = 0; i < n_; ++i) dn[i] = (p_ - da[i]) % p_;
      neg_[a] = encode(dn);
      for (std::uint32_t b = 0; b < q_; ++b) {
        const auto db = digits(b);
        std::vector<std::uint32_t> ds(n_);
        for (std::uint32_t i = 0; i < n_; ++i) ds[i] = (da[i] + db[i]) % p_;
        add_[a * q + b] = encode(ds);
        mul_[a * q + b] = b < a ? mul_[b * q + a] : slow_mul(a, b);
      }
    }
    for (std::uint32_t a = 1; a < q_; ++a)
      for (std::uint32_t b = 1; b < q_; ++b)
        if (mul_[a * q + b] == 1) {
          inv_[a] = b;
          break;
        }
  }

  std::uint32_t p_;
  std::uint32_t n_;
  std::uint32_t q_ = 0;
  std::vector<std::uint32_t> modulus_;
  std::vector<std::uint32_t> add_;
  std::vector<std::uint32_t> mul_;
  std::vector<std::uint32_t> neg_;
  std::vector<std::uint32_t> inv_;
};

}  // namespace kappa
