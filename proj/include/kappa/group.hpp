#pragma once

// Finite groups as Cayley tables over indices 0..n-1 (0 is always the
// identity), the named families they are built from, and power graphs.

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <fstream>
#include <istream>
#include <map>
#include <optional>
#include <random>
#include <span>
#include <sstream>
#include <string>
#include <unordered_map>
#include <utility>
#include <variant>
#include <vector>

#include "kappa/errors.hpp"
#include "kappa/galois_field.hpp"
#include "kappa/graph.hpp"
#include "kappa/number_theory.hpp"

namespace kappa {

using Element = std::uint32_t;

/// Upper bound on group order for materialized groups.
inline constexpr std::size_t kMaxGroupOrder = 5000;

class FiniteGroup {
 public:
  /// Validates the table and precomputes element orders and cyclic subgroups.
  /// `table[g * n + h]` is g*h; element 0 must be the identity.
  FiniteGroup(std::size_t n, std::vector<Element> table, std::vector<std::string> labels = {})
      : n_(n), table_(std::move(table)), labels_(std::move(labels)) {
    validate();
    compute_cyclic_subgroups();
  }

  std::size_t order() const noexcept { return n_; }
  Element identity() const noexcept { return 0; }
  Element mul(Element a, Element b) const { return table_[static_cast<std::size_t>(a) * n_ + b]; }
  Element inverse(Element a) const { return inverse_[a]; }
  const std::vector<Element>& table() const noexcept { return table_; }

  /// g^k by repeated squaring.
  Element power(Element g, std::uint64_t k) const {
    Element result = identity();
    Element base = g;
    while (k > 0) {
      if (k & 1U) result = mul(result, base);
      base = mul(base, base);
      k >>= 1U;
    }
    return result;
  }

  std::uint64_t element_order(Element g) const { return cyclic_[g].size(); }

  /// Elements of <g> in power order g^0, g^1, ..., g^(o(g)-1).
  const std::vector<Element>& cyclic_subgroup(Element g) const { return cyclic_[g]; }

  bool in_cyclic_subgroup(Element x, Element g) const {
    return (membership_[static_cast<std::size_t>(g) * words_ + x / 64] >> (x % 64)) & 1U;
  }

  bool is_abelian() const {
    for (Element a = 0; a < n_; ++a)
      for (Element b = a + 1; b < n_; ++b)
        if (mul(a, b) != mul(b, a)) return false;
    return true;
  }

  std::string label(Element g) const { return labels_.empty() ? std::to_string(g) : labels_[g]; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }

 private:
  void validate() {
    if (n_ == 0) throw ValidationError("group table: order must be positive");
    if (n_ > kMaxGroupOrder)
      throw ValidationError("group table: order " + std::to_string(n_) + " exceeds limit " + std::to_string(kMaxGroupOrder));
    if (table_.size() != n_ * n_) throw ValidationError("group table: expected n*n entries");
    if (!labels_.empty() && labels_.size() != n_) throw ValidationError("group table: label count mismatch");
    for (Element v : table_)
      if (v >= n_) throw ValidationError("closure: product index " + std::to_string(v) + " out of range");
    for (Element g = 0; g < n_; ++g)
      if (mul(0, g) != g || mul(g, 0) != g) throw ValidationError("identity: element 0 is not a two-sided identity (fails at " + std::to_string(g) + ")");

    inverse_.assign(n_, 0);
    for (Element g = 0; g < n_; ++g) {
      std::optional<Element> inv;
      for (Element h = 0; h < n_; ++h)
        if (mul(g, h) == 0) {
          inv = h;
          break;
        }
      if (!inv || mul(*inv, g) != 0) throw ValidationError("inverse: element " + std::to_string(g) + " has no two-sided inverse");
      inverse_[g] = *inv;
    }

    auto check_triple = [this](Element a, Element b, Element c) {
      if (mul(mul(a, b), c) != mul(a, mul(b, c)))
        throw ValidationError("associativity: fails at (" + std::to_string(a) + ", " + std::to_string(b) + ", " +
                              std::to_string(c) + ")");
    };
    if (n_ <= 256) {
      for (Element a = 0; a < n_; ++a)
        for (Element b = 0; b < n_; ++b)
          for (Element c = 0; c < n_; ++c) check_triple(a, b, c);
    } else {
      std::mt19937_64 rng(n_);
      const std::uint64_t samples = 10ULL * n_ * n_;
      for (std::uint64_t s = 0; s < samples; ++s)
        check_triple(static_cast<Element>(rng() % n_), static_cast<Element>(rng() % n_), static_cast<Element>(rng() % n_));
    }
  }

  void compute_cyclic_subgroups() {
    words_ = (n_ + 63) / 64;
    cyclic_.resize(n_);
    membership_.assign(n_ * words_, 0);
    for (Element g = 0; g < n_; ++g) {
      Element x = 0;
      do {
        cyclic_[g].push_back(x);
        membership_[static_cast<std::size_t>(g) * words_ + x / 64] |= std::uint64_t{1} << (x % 64);
        x = mul(x, g);
      } while (x != 0);
      if (n_ % cyclic_[g].size() != 0)
        throw ConsistencyError("element order " + std::to_string(cyclic_[g].size()) + " does not divide group order");
    }
  }

  std::size_t n_;
  std::vector<Element> table_;
  std::vector<std::string> labels_;
  std::vector<Element> inverse_;
  std::size_t words_ = 0;
  std::vector<std::vector<Element>> cyclic_;
  std::vector<std::uint64_t> membership_;
};

// ---------------------------------------------------------------------------
// Group specifications

enum class Family {
  cyclic,
  elementary,
  dihedral,
  quaternion,
  heisenberg,
  extraspecial_exp_p2,
  psl2,
  frobenius_pq,
  cayley_table,
};

struct GroupSpec {
  Family family = Family::cyclic;
  std::vector<std::uint64_t> params;
  std::string path;  // cayley_table only

  static GroupSpec cyclic(std::uint64_t n) { return make(Family::cyclic, {n}); }
  static GroupSpec elementary(std::uint64_t p, std::uint64_t n) { return make(Family::elementary, {p, n}); }
  static GroupSpec dihedral(std::uint64_t n) { return make(Family::dihedral, {n}); }
  static GroupSpec quaternion(std::uint64_t n) { return make(Family::quaternion, {n}); }
  static GroupSpec heisenberg(std::uint64_t p) { return make(Family::heisenberg, {p}); }
  static GroupSpec extraspecial_exp_p2(std::uint64_t p) { return make(Family::extraspecial_exp_p2, {p}); }
  static GroupSpec psl2(std::uint64_t p, std::uint64_t n) { return make(Family::psl2, {p, n}); }
  static GroupSpec frobenius_pq(std::uint64_t p, std::uint64_t q) { return make(Family::frobenius_pq, {p, q}); }
  static GroupSpec cayley_table(std::string path) {
    GroupSpec s;
    s.family = Family::cayley_table;
    s.path = std::move(path);
    return s;
  }

  /// Throws DomainError when the family parameters are out of range.
  void validate() const;

  /// Order without building the group (not available for Cayley tables).
  std::uint64_t order() const;

  std::string to_string() const;

 private:
  static GroupSpec make(Family f, std::vector<std::uint64_t> params) {
    GroupSpec s;
    s.family = f;
    s.params = std::move(params);
    s.validate();
    return s;
  }
};

namespace detail {

inline const std::vector<std::pair<std::string, Family>>& family_names() {
  static const std::vector<std::pair<std::string, Family>> names = {
      {"cyclic", Family::cyclic},
      {"elementary", Family::elementary},
      {"dihedral", Family::dihedral},
      {"quaternion", Family::quaternion},
      {"heisenberg", Family::heisenberg},
      {"extraspecial", Family::extraspecial_exp_p2},
      {"psl2", Family::psl2},
      {"frobenius", Family::frobenius_pq},
      {"table", Family::cayley_table},
  };
  return names;
}

inline std::size_t arity(Family f) {
  switch (f) {
    case Family::elementary:
    case Family::psl2:
    case Family::frobenius_pq:
      return 2;
    case Family::cayley_table:
      return 0;
    default:
      return 1;
  }
}

inline void require(bool ok, const std::string& what) {
  if (!ok) throw DomainError(what);
}

}  // namespace detail

inline const char* kGroupSpecGrammar =
    "group spec grammar: family:param[:param]\n"
    "  cyclic:n            cyclic group of order n (n >= 1)\n"
    "  elementary:p:n      elementary abelian group of order p^n\n"
    "  dihedral:n          dihedral group of order 2n (n >= 1)\n"
    "  quaternion:n        generalized quaternion group of order 2^n (n >= 3)\n"
    "  heisenberg:p        Heisenberg group H_p of order p^3 (odd prime p)\n"
    "  extraspecial:p      extraspecial group A_p of order p^3, exponent p^2 (odd prime p)\n"
    "  psl2:p:n            PSL(2, q), q = p^n >= 4\n"
    "  frobenius:p:q       nonabelian group of order pq (primes p < q, p | q-1)\n"
    "  table:path          Cayley table file";

inline void GroupSpec::validate() const {
  using detail::require;
  if (family != Family::cayley_table && params.size() != detail::arity(family))
    throw DomainError("group spec: wrong number of parameters for " + to_string());
  switch (family) {
    case Family::cyclic:
    case Family::dihedral:
      require(params[0] >= 1, "group spec: order parameter must be >= 1");
      break;
    case Family::elementary:
      require(nt::is_prime(params[0]), "elementary: p must be prime");
      require(params[1] >= 1, "elementary: n must be >= 1");
      break;
    case Family::quaternion:
      require(params[0] >= 3, "quaternion: n must be >= 3");
      require(params[0] < 63, "quaternion: n too large");
      break;
    case Family::heisenberg:
    case Family::extraspecial_exp_p2:
      require(nt::is_prime(params[0]) && params[0] % 2 == 1, "p must be an odd prime");
      break;
    case Family::psl2: {
      require(nt::is_prime(params[0]), "psl2: p must be prime");
      require(params[1] >= 1, "psl2: n must be >= 1");
      const std::uint64_t q = nt::ipow(params[0], params[1]);
      require(q >= 4, "psl2: q = p^n must be >= 4");
      break;
    }
    case Family::frobenius_pq:
      require(nt::is_prime(params[0]) && nt::is_prime(params[1]), "frobenius: p and q must be prime");
      require(params[0] < params[1], "frobenius: need p < q");
      require((params[1] - 1) % params[0] == 0, "frobenius: p must divide q - 1");
      break;
    case Family::cayley_table:
      require(!path.empty(), "table: missing path");
      break;
  }
}

inline std::uint64_t GroupSpec::order() const {
  switch (family) {
    case Family::cyclic:
      return params[0];
    case Family::elementary:
      return nt::ipow(params[0], params[1]);
    case Family::dihedral:
      return 2 * params[0];
    case Family::quaternion:
      return nt::ipow(2, params[0]);
    case Family::heisenberg:
    case Family::extraspecial_exp_p2:
      return nt::ipow(params[0], 3);
    case Family::psl2: {
      const std::uint64_t q = nt::ipow(params[0], params[1]);
      return q * (q - 1) * (q + 1) / std::gcd(q - 1, std::uint64_t{2});
    }
    case Family::frobenius_pq:
      return params[0] * params[1];
    case Family::cayley_table:
      break;
  }
  throw DomainError("GroupSpec::order: unknown for Cayley tables");
}

inline std::string GroupSpec::to_string() const {
  std::string out;
  for (const auto& [name, f] : detail::family_names())
    if (f == family) out = name;
  if (family == Family::cayley_table) return out + ":" + path;
  for (auto p : params) out += ":" + std::to_string(p);
  return out;
}

/// Parses `family:param[:param]`, e.g. `cyclic:12`, `psl2:3:2`, `table:g.tbl`.
inline GroupSpec parse_group_spec(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw ParseError("cannot parse group spec '" + text + "'\n" + kGroupSpecGrammar);
  const std::string name = text.substr(0, colon);
  const std::string rest = text.substr(colon + 1);
  std::optional<Family> family;
  for (const auto& [n, f] : detail::family_names())
    if (n == name) family = f;
  if (!family) throw ParseError("unknown group family '" + name + "'\n" + kGroupSpecGrammar);
  if (*family == Family::cayley_table) return GroupSpec::cayley_table(rest);

  GroupSpec spec;
  spec.family = *family;
  std::stringstream ss(rest);
  std::string field;
  while (std::getline(ss, field, ':')) {
    if (field.empty() || field.find_first_not_of("0123456789") != std::string::npos)
      throw ParseError("bad parameter '" + field + "' in group spec '" + text + "'\n" + kGroupSpecGrammar);
    spec.params.push_back(std::stoull(field));
  }
  if (spec.params.size() != detail::arity(spec.family))
    throw ParseError("wrong parameter count in group spec '" + text + "'\n" + kGroupSpecGrammar);
  spec.validate();
  return spec;
}

// ---------------------------------------------------------------------------
// Cayley table files: line 1 `n`, then n rows of n 0-based indices; row g
// lists g*h for h = 0..n-1; element 0 is the identity.

inline FiniteGroup read_cayley_table(std::istream& in) {
  long long n = 0;
  if (!(in >> n) || n <= 0) throw ParseError("Cayley table: first token must be a positive order");
  if (static_cast<std::size_t>(n) > kMaxGroupOrder)
    throw ValidationError("Cayley table: order " + std::to_string(n) + " exceeds limit " + std::to_string(kMaxGroupOrder));
  const auto order = static_cast<std::size_t>(n);
  std::vector<Element> table(order * order);
  for (std::size_t i = 0; i < order * order; ++i) {
    long long v = 0;
    if (!(in >> v)) throw ParseError("Cayley table: expected " + std::to_string(order * order) + " entries, got " + std::to_string(i));
    if (v < 0 || v >= n) throw ValidationError("closure: entry " + std::to_string(v) + " out of range");
    table[i] = static_cast<Element>(v);
  }
  std::string extra;
  if (in >> extra) throw ParseError("Cayley table: trailing content '" + extra + "'");
  return FiniteGroup(order, std::move(table));
}

inline FiniteGroup read_cayley_table_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open Cayley table file '" + path + "'");
  return read_cayley_table(in);
}

inline void write_cayley_table(std::ostream& out, const FiniteGroup& g) {
  out << g.order() << '\n';
  for (Element a = 0; a < g.order(); ++a) {
    for (Element b = 0; b < g.order(); ++b) out << (b ? " " : "") << g.mul(a, b);
    out << '\n';
  }
}

// ---------------------------------------------------------------------------
// Family constructions. Each builds a concrete representation, lists its
// elements with the identity first and flattens multiplication to a table.

namespace detail {

template <typename Rep, typename Mul, typename Label>
FiniteGroup flatten(const std::vector<Rep>& elements, Mul mul, Label label) {
  const std::size_t n = elements.size();
  if (n > kMaxGroupOrder) throw DomainError("group order " + std::to_string(n) + " exceeds limit " + std::to_string(kMaxGroupOrder));
  std::map<Rep, Element> index;
  for (std::size_t i = 0; i < n; ++i) index.emplace(elements[i], static_cast<Element>(i));
  std::vector<Element> table(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      auto it = index.find(mul(elements[a], elements[b]));
      if (it == index.end()) throw ConsistencyError("group construction: product left the element set");
      table[a * n + b] = it->second;
    }
  std::vector<std::string> labels;
  labels.reserve(n);
  for (const auto& e : elements) labels.push_back(label(e));
  return FiniteGroup(n, std::move(table), std::move(labels));
}

inline void check_order(std::uint64_t n) {
  if (n > kMaxGroupOrder) throw DomainError("group order " + std::to_string(n) + " exceeds limit " + std::to_string(kMaxGroupOrder));
}

inline FiniteGroup build_cyclic(std::uint64_t n) {
  check_order(n);
  std::vector<std::uint64_t> els(n);
  for (std::uint64_t i = 0; i < n; ++i) els[i] = i;
  return flatten(els, [n](std::uint64_t a, std::uint64_t b) { return (a + b) % n; },
                 [](std::uint64_t a) { return std::to_string(a); });
}

inline FiniteGroup build_elementary(std::uint64_t p, std::uint64_t dim) {
  const std::uint64_t n = nt::ipow(p, dim);
  check_order(n);
  std::vector<std::uint64_t> els(n);
  for (std::uint64_t i = 0; i < n; ++i) els[i] = i;
  auto mul = [p, dim](std::uint64_t a, std::uint64_t b) {
    std::uint64_t out = 0;
    std::uint64_t scale = 1;
    for (std::uint64_t i = 0; i < dim; ++i) {
      out += ((a % p + b % p) % p) * scale;
      a /= p;
      b /= p;
      scale *= p;
    }
    return out;
  };
  auto label = [p, dim](std::uint64_t a) {
    std::string s = "(";
    for (std::uint64_t i = 0; i < dim; ++i) {
      s += (i ? "," : "") + std::to_string(a % p);
      a /= p;
    }
    return s + ")";
  };
  return flatten(els, mul, label);
}

inline std::string word_label(std::uint64_t a, std::uint64_t b) {
  if (a == 0 && b == 0) return "1";
  std::string s;
  if (a == 1) s += "x";
  if (a > 1) s += "x^" + std::to_string(a);
  if (b == 1) s += "y";
  return s;
}

// x^a y^b with x^n = y^2 = 1, y x y^-1 = x^-1.
inline FiniteGroup build_dihedral(std::uint64_t n) {
  check_order(2 * n);
  using Rep = std::pair<std::uint64_t, std::uint64_t>;
  std::vector<Rep> els;
  for (std::uint64_t b = 0; b < 2; ++b)
    for (std::uint64_t a = 0; a < n; ++a) els.emplace_back(a, b);
  auto mul = [n](Rep l, Rep r) {
    const std::uint64_t a = l.second == 0 ? (l.first + r.first) % n : (l.first + n - r.first) % n;
    return Rep{a, (l.second + r.second) % 2};
  };
  return flatten(els, mul, [](Rep e) { return word_label(e.first, e.second); });
}

// x^a y^b with x^(2^(n-1)) = 1, y^2 = x^(2^(n-2)), y x y^-1 = x^-1.
inline FiniteGroup build_quaternion(std::uint64_t n) {
  const std::uint64_t order = nt::ipow(2, n);
  check_order(order);
  const std::uint64_t half = order / 2;  // order of x
  using Rep = std::pair<std::uint64_t, std::uint64_t>;
  std::vector<Rep> els;
  for (std::uint64_t b = 0; b < 2; ++b)
    for (std::uint64_t a = 0; a < half; ++a) els.emplace_back(a, b);
  auto mul = [half](Rep l, Rep r) {
    if (l.second == 0) return Rep{(l.first + r.first) % half, r.second};
    // x^a y x^c y^d = x^(a-c) y^(1+d)
    const std::uint64_t a = (l.first + half - r.first) % half;
    if (r.second == 0) return Rep{a, 1};
    return Rep{(a + half / 2) % half, 0};
  };
  return flatten(els, mul, [](Rep e) { return word_label(e.first, e.second); });
}

// Lower unitriangular 3x3 matrices [[1,0,0],[x,1,0],[z,y,1]] over GF(p).
inline FiniteGroup build_heisenberg(std::uint64_t p) {
  check_order(p * p * p);
  using Rep = std::array<std::uint64_t, 3>;  // x, y, z
  std::vector<Rep> els;
  for (std::uint64_t z = 0; z < p; ++z)
    for (std::uint64_t y = 0; y < p; ++y)
      for (std::uint64_t x = 0; x < p; ++x) els.push_back({x, y, z});
  auto mul = [p](const Rep& a, const Rep& b) {
    return Rep{(a[0] + b[0]) % p, (a[1] + b[1]) % p, (a[2] + a[1] * b[0] + b[2]) % p};
  };
  auto label = [](const Rep& e) {
    return "[" + std::to_string(e[0]) + "," + std::to_string(e[1]) + "," + std::to_string(e[2]) + "]";
  };
  return flatten(els, mul, label);
}

// Affine maps t -> a t + b on Z_{p^2} with a = 1 (mod p); composition (f*g)(t) = f(g(t)).
inline FiniteGroup build_extraspecial_exp_p2(std::uint64_t p) {
  check_order(p * p * p);
  const std::uint64_t m = p * p;
  using Rep = std::pair<std::uint64_t, std::uint64_t>;  // a, b
  std::vector<Rep> els;
  for (std::uint64_t i = 0; i < p; ++i)
    for (std::uint64_t b = 0; b < m; ++b) els.emplace_back(1 + i * p, b);
  auto mul = [m](Rep f, Rep g) { return Rep{f.first * g.first % m, (f.first * g.second + f.second) % m}; };
  auto label = [](Rep e) { return std::to_string(e.first) + "t+" + std::to_string(e.second); };
  return flatten(els, mul, label);
}

// 2x2 determinant-one matrices over GF(q) modulo +-I. Each class {M, -M} is
// represented by the member whose first nonzero entry (row-major) has the
// smaller field encoding.
inline FiniteGroup build_psl2(std::uint64_t p, std::uint64_t n) {
  const GaloisField field(static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(n));
  check_order(GroupSpec::psl2(p, n).order());
  using F = GaloisField::Element;
  using Rep = std::array<std::uint32_t, 4>;
  auto canonical = [&field](Rep m) {
    Rep neg;
    for (std::size_t i = 0; i < 4; ++i) neg[i] = field.neg(F{m[i]}).value;
    for (std::size_t i = 0; i < 4; ++i) {
      if (m[i] == 0) continue;
      return neg[i] < m[i] ? neg : m;
    }
    return m;
  };
  const std::uint32_t q = field.order();
  std::vector<Rep> els;
  const Rep identity = canonical({1, 0, 0, 1});
  els.push_back(identity);
  std::map<Rep, bool> seen{{identity, true}};
  for (std::uint32_t a = 0; a < q; ++a)
    for (std::uint32_t b = 0; b < q; ++b)
      for (std::uint32_t c = 0; c < q; ++c)
        for (std::uint32_t d = 0; d < q; ++d) {
          const F det = field.sub(field.mul(F{a}, F{d}), field.mul(F{b}, F{c}));
          if (det.value != 1) continue;
          const Rep m = canonical({a, b, c, d});
          if (seen.emplace(m, true).second) els.push_back(m);
        }
  auto mul = [&field, &canonical](const Rep& l, const Rep& r) {
    auto dot = [&field](std::uint32_t x1, std::uint32_t y1, std::uint32_t x2, std::uint32_t y2) {
      return field.add(field.mul(F{x1}, F{y1}), field.mul(F{x2}, F{y2})).value;
    };
    return canonical({dot(l[0], r[0], l[1], r[2]), dot(l[0], r[1], l[1], r[3]), dot(l[2], r[0], l[3], r[2]),
                      dot(l[2], r[1], l[3], r[3])});
  };
  auto label = [](const Rep& m) {
    return "[" + std::to_string(m[0]) + "," + std::to_string(m[1]) + ";" + std::to_string(m[2]) + "," +
           std::to_string(m[3]) + "]";
  };
  return flatten(els, mul, label);
}

/// Smallest residue in Z_q^* of multiplicative order p.
inline std::uint64_t frobenius_action_generator(std::uint64_t p, std::uint64_t q) {
  for (std::uint64_t a = 2; a < q; ++a)
    if (nt::multiplicative_order(a, q) == p) return a;
  throw DomainError("frobenius: no element of order p in Z_q^*");
}

// Z_q x| Z_p: (u, v)(u', v') = (u + a^v u', v + v').
inline FiniteGroup build_frobenius_pq(std::uint64_t p, std::uint64_t q) {
  check_order(p * q);
  const std::uint64_t a = frobenius_action_generator(p, q);
  std::vector<std::uint64_t> apow(p);
  apow[0] = 1;
  for (std::uint64_t i = 1; i < p; ++i) apow[i] = apow[i - 1] * a % q;
  using Rep = std::pair<std::uint64_t, std::uint64_t>;
  std::vector<Rep> els;
  for (std::uint64_t v = 0; v < p; ++v)
    for (std::uint64_t u = 0; u < q; ++u) els.emplace_back(u, v);
  auto mul = [&apow, p, q](Rep l, Rep r) { return Rep{(l.first + apow[l.second] * r.first) % q, (l.second + r.second) % p}; };
  auto label = [](Rep e) { return "(" + std::to_string(e.first) + "," + std::to_string(e.second) + ")"; };
  return flatten(els, mul, label);
}

}  // namespace detail

inline FiniteGroup build_group(const GroupSpec& spec) {
  spec.validate();
  const auto& a = spec.params;
  switch (spec.family) {
    case Family::cyclic:
      return detail::build_cyclic(a[0]);
    case Family::elementary:
      return detail::build_elementary(a[0], a[1]);
    case Family::dihedral:
      return detail::build_dihedral(a[0]);
    case Family::quaternion:
      return detail::build_quaternion(a[0]);
    case Family::heisenberg:
      return detail::build_heisenberg(a[0]);
    case Family::extraspecial_exp_p2:
      return detail::build_extraspecial_exp_p2(a[0]);
    case Family::psl2:
      return detail::build_psl2(a[0], a[1]);
    case Family::frobenius_pq:
      return detail::build_frobenius_pq(a[0], a[1]);
    case Family::cayley_table:
      return read_cayley_table_file(spec.path);
  }
  throw DomainError("build_group: unknown family");
}

// ---------------------------------------------------------------------------
// Power graphs

/// P(G, X): vertices X (all of G when empty), u ~ v iff u in <v> or v in <u>.
/// X must contain the identity.
inline SimpleGraph power_graph(const FiniteGroup& g, std::span<const Element> subset = {}) {
  std::vector<Element> vertices(subset.begin(), subset.end());
  if (vertices.empty()) {
    vertices.resize(g.order());
    for (Element i = 0; i < g.order(); ++i) vertices[i] = i;
  } else {
    for (Element v : vertices)
      if (v >= g.order()) throw DomainError("power_graph: element " + std::to_string(v) + " out of range");
    if (std::find(vertices.begin(), vertices.end(), g.identity()) == vertices.end())
      throw DomainError("power_graph: vertex subset must contain the identity");
  }
  SimpleGraph out(vertices.size());
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i + 1; j < vertices.size(); ++j)
      if (g.in_cyclic_subgroup(vertices[i], vertices[j]) || g.in_cyclic_subgroup(vertices[j], vertices[i])) out.add_edge(i, j);
  std::vector<std::string> labels;
  labels.reserve(vertices.size());
  for (Element v : vertices) labels.push_back(g.label(v));
  out.set_labels(std::move(labels));
  return out;
}

/// Number of cyclic subgroups of each prime order, for groups in which every
/// non-identity element has prime order.
inline std::map<std::uint64_t, std::uint64_t> epo_class_counts(const FiniteGroup& g) {
  std::map<std::uint64_t, std::uint64_t> elements_of_order;
  for (Element x = 1; x < g.order(); ++x) {
    const std::uint64_t o = g.element_order(x);
    if (!nt::is_prime(o))
      throw DomainError("epo_class_counts: element " + g.label(x) + " has composite order " + std::to_string(o));
    ++elements_of_order[o];
  }
  std::map<std::uint64_t, std::uint64_t> counts;
  for (auto [p, count] : elements_of_order) counts[p] = count / (p - 1);
  return counts;
}

inline bool is_epo(const FiniteGroup& g) {
  for (Element x = 1; x < g.order(); ++x)
    if (!nt::is_prime(g.element_order(x))) return false;
  return true;
}

}  // namespace kappa
