#pragma once

// Integer Laplacian spectra of graphs built from cliques by disjoint union and
// join. Every eigenvalue stays an integer, so the whole calculus is exact.

#include <cctype>
#include <cstdint>
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "kappa/errors.hpp"
#include "kappa/factored.hpp"
#include "kappa/graph.hpp"
#include "kappa/group.hpp"
#include "kappa/number_theory.hpp"

namespace kappa {

/// Immutable expression tree: K(n) leaves, n-ary disjoint unions with copy
/// counts, and binary joins. Subtrees are shared.
class CliqueExpr {
 public:
  enum class Kind { clique, disjoint_union, join };

  static CliqueExpr clique(std::uint64_t n) {
    if (n == 0) throw DomainError("CliqueExpr: clique size must be >= 1");
    auto node = std::make_shared<Node>();
    node->kind = Kind::clique;
    node->size = n;
    node->vertices = n;
    return CliqueExpr(std::move(node));
  }

  /// Disjoint union of `copies` copies of each expression.
  static CliqueExpr disjoint_union(std::vector<std::pair<CliqueExpr, std::uint64_t>> terms) {
    if (terms.empty()) throw DomainError("CliqueExpr: empty union");
    auto node = std::make_shared<Node>();
    node->kind = Kind::disjoint_union;
    for (const auto& [e, c] : terms) {
      if (c == 0) throw DomainError("CliqueExpr: copy count must be >= 1");
      node->vertices += e.vertex_count() * c;
    }
    node->terms = std::move(terms);
    return CliqueExpr(std::move(node));
  }

  static CliqueExpr join(CliqueExpr a, CliqueExpr b) {
    auto node = std::make_shared<Node>();
    node->kind = Kind::join;
    node->vertices = a.vertex_count() + b.vertex_count();
    node->lhs = std::move(a.node_);
    node->rhs = std::move(b.node_);
    return CliqueExpr(std::move(node));
  }

  Kind kind() const noexcept { return node_->kind; }
  std::uint64_t vertex_count() const noexcept { return node_->vertices; }
  /// Clique size (leaves only).
  std::uint64_t clique_size() const noexcept { return node_->size; }
  const std::vector<std::pair<CliqueExpr, std::uint64_t>>& terms() const noexcept { return node_->terms; }
  CliqueExpr lhs() const { return CliqueExpr(node_->lhs); }
  CliqueExpr rhs() const { return CliqueExpr(node_->rhs); }

  std::uint64_t edge_count() const {
    switch (kind()) {
      case Kind::clique:
        return node_->size * (node_->size - 1) / 2;
      case Kind::disjoint_union: {
        std::uint64_t e = 0;
        for (const auto& [t, c] : terms()) e += t.edge_count() * c;
        return e;
      }
      case Kind::join:
        return lhs().edge_count() + rhs().edge_count() + lhs().vertex_count() * rhs().vertex_count();
    }
    return 0;
  }

  /// Text form accepted by parse_clique_expr.
  std::string to_string() const {
    switch (kind()) {
      case Kind::clique:
        return "K(" + std::to_string(node_->size) + ")";
      case Kind::disjoint_union: {
        std::string out;
        for (const auto& [t, c] : terms()) {
          if (!out.empty()) out += "+";
          const std::string inner = t.kind() == Kind::clique ? t.to_string() : "(" + t.to_string() + ")";
          out += c == 1 ? inner : std::to_string(c) + "#" + inner;
        }
        return out;
      }
      case Kind::join: {
        auto side = [](const CliqueExpr& e) {
          return e.kind() == Kind::disjoint_union && !(e.terms().size() == 1 && e.terms()[0].second == 1)
                     ? "(" + e.to_string() + ")"
                     : e.to_string();
        };
        return side(lhs()) + "*" + side(rhs());
      }
    }
    return {};
  }

 private:
  struct Node {
    Kind kind = Kind::clique;
    std::uint64_t size = 0;
    std::uint64_t vertices = 0;
    std::vector<std::pair<CliqueExpr, std::uint64_t>> terms;
    std::shared_ptr<const Node> lhs;
    std::shared_ptr<const Node> rhs;
  };

  explicit CliqueExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

inline const char* kCliqueExprGrammar =
    "clique expression grammar:\n"
    "  expr   := term ('+' term)*        disjoint union\n"
    "  term   := factor ('*' factor)*    join\n"
    "  factor := [count '#'] atom        count disjoint copies\n"
    "  atom   := 'K(' n ')' | '(' expr ')'\n"
    "  example: K(2)*(K(6)+4#K(2))";

namespace detail {

class ExprParser {
 public:
  explicit ExprParser(std::string text) : s_(std::move(text)) {}

  CliqueExpr parse() {
    CliqueExpr e = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return e;
  }

 private:
  CliqueExpr expr() {
    std::vector<std::pair<CliqueExpr, std::uint64_t>> parts;
    parts.push_back(copies_term());
    while (accept('+')) parts.push_back(copies_term());
    if (parts.size() == 1 && parts[0].second == 1) return parts[0].first;
    return CliqueExpr::disjoint_union(std::move(parts));
  }

  // A term with an optional leading copy count applied to its first factor.
  std::pair<CliqueExpr, std::uint64_t> copies_term() {
    auto [first, count] = factor();
    if (!peek('*')) return {first, count};
    CliqueExpr acc = count == 1 ? first : CliqueExpr::disjoint_union({{first, count}});
    while (accept('*')) {
      auto [next, c] = factor();
      acc = CliqueExpr::join(acc, c == 1 ? next : CliqueExpr::disjoint_union({{next, c}}));
    }
    return {acc, 1};
  }

  std::pair<CliqueExpr, std::uint64_t> factor() {
    skip_ws();
    std::uint64_t count = 1;
    if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      count = number();
      if (count == 0) fail("copy count must be >= 1");
      if (!accept('#')) fail("expected '#' after copy count");
    }
    return {atom(), count};
  }

  CliqueExpr atom() {
    if (accept('(')) {
      CliqueExpr e = expr();
      if (!accept(')')) fail("expected ')'");
      return e;
    }
    if (accept('K')) {
      if (!accept('(')) fail("expected '(' after K");
      const std::uint64_t n = number();
      if (n == 0) fail("clique size must be >= 1");
      if (!accept(')')) fail("expected ')'");
      return CliqueExpr::clique(n);
    }
    fail("expected 'K(' or '('");
  }

  std::uint64_t number() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number");
    if (pos_ - start > 18) fail("number too large");
    return std::stoull(s_.substr(start, pos_ - start));
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip_ws();
    return pos_ < s_.size() && s_[pos_] == c;
  }
  bool accept(char c) {
    if (!peek(c)) return false;
    ++pos_;
    return true;
  }
  [[noreturn]] void fail(const std::string& what) {
    throw ParseError("clique expression '" + s_ + "' at offset " + std::to_string(pos_) + ": " + what + "\n" +
                     kCliqueExprGrammar);
  }

  std::string s_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline CliqueExpr parse_clique_expr(const std::string& text) { return detail::ExprParser(text).parse(); }

/// Laplacian spectrum as run-length pairs eigenvalue -> multiplicity.
class IntSpectrum {
 public:
  IntSpectrum() = default;
  explicit IntSpectrum(std::map<std::uint64_t, std::uint64_t> runs) : runs_(std::move(runs)) {
    std::erase_if(runs_, [](const auto& kv) { return kv.second == 0; });
  }

  const std::map<std::uint64_t, std::uint64_t>& runs() const noexcept { return runs_; }

  std::uint64_t multiplicity(std::uint64_t eigenvalue) const {
    auto it = runs_.find(eigenvalue);
    return it == runs_.end() ? 0 : it->second;
  }

  std::uint64_t size() const {
    std::uint64_t n = 0;
    for (auto [v, m] : runs_) n += m;
    return n;
  }

  BigInt trace() const {
    BigInt t = 0;
    for (auto [v, m] : runs_) t += BigInt(static_cast<unsigned long>(v)) * static_cast<unsigned long>(m);
    return t;
  }

  /// Expanded eigenvalues in weakly decreasing order.
  std::vector<std::uint64_t> expanded() const {
    std::vector<std::uint64_t> out;
    for (auto it = runs_.rbegin(); it != runs_.rend(); ++it) out.insert(out.end(), it->second, it->first);
    return out;
  }

  /// `{8^2, 4^3, 2^2, 0^1}`: eigenvalue^multiplicity, decreasing.
  std::string to_string() const {
    std::string out = "{";
    for (auto it = runs_.rbegin(); it != runs_.rend(); ++it) {
      if (out.size() > 1) out += ", ";
      out += std::to_string(it->first) + "^" + std::to_string(it->second);
    }
    return out + "}";
  }

  friend bool operator==(const IntSpectrum&, const IntSpectrum&) = default;

 private:
  std::map<std::uint64_t, std::uint64_t> runs_;
};

/// Laplacian spectrum by the clique, union and join rules.
inline IntSpectrum spectrum(const CliqueExpr& e) {
  using Kind = CliqueExpr::Kind;
  switch (e.kind()) {
    case Kind::clique: {
      const std::uint64_t n = e.clique_size();
      std::map<std::uint64_t, std::uint64_t> runs{{0, 1}};
      if (n > 1) runs[n] = n - 1;
      return IntSpectrum(std::move(runs));
    }
    case Kind::disjoint_union: {
      std::map<std::uint64_t, std::uint64_t> runs;
      for (const auto& [t, c] : e.terms()) {
        const IntSpectrum part = spectrum(t);
        for (auto [v, m] : part.runs()) runs[v] += m * c;
      }
      return IntSpectrum(std::move(runs));
    }
    case Kind::join: {
      const CliqueExpr a = e.lhs();
      const CliqueExpr b = e.rhs();
      const std::uint64_t m = a.vertex_count();
      const std::uint64_t n = b.vertex_count();
      std::map<std::uint64_t, std::uint64_t> runs{{0, 1}};
      runs[m + n] += 1;
      // Each side loses one copy of its smallest eigenvalue, which must be 0.
      auto absorb = [&runs](const IntSpectrum& s, std::uint64_t shift) {
        bool dropped = false;
        for (auto [v, mult] : s.runs()) {
          if (!dropped) {
            if (v != 0) throw ConsistencyError("spectrum: join operand has no zero eigenvalue");
            dropped = true;
            --mult;
          }
          if (mult > 0) runs[v + shift] += mult;
        }
      };
      absorb(spectrum(a), n);
      absorb(spectrum(b), m);
      return IntSpectrum(std::move(runs));
    }
  }
  throw DomainError("spectrum: unknown expression kind");
}

/// Materializes the expression; vertices are laid out left to right.
inline SimpleGraph expr_to_graph(const CliqueExpr& e) {
  using Kind = CliqueExpr::Kind;
  if (e.vertex_count() > kMaxGroupOrder) throw DomainError("expr_to_graph: expression too large to materialize");
  switch (e.kind()) {
    case Kind::clique:
      return complete_graph(e.clique_size());
    case Kind::disjoint_union: {
      SimpleGraph g(0);
      for (const auto& [t, c] : e.terms()) {
        const SimpleGraph part = expr_to_graph(t);
        for (std::uint64_t i = 0; i < c; ++i) g = disjoint_union(g, part);
      }
      return g;
    }
    case Kind::join:
      return join(expr_to_graph(e.lhs()), expr_to_graph(e.rhs()));
  }
  throw DomainError("expr_to_graph: unknown expression kind");
}

/// Number of universal vertices of the realized graph, without building it.
inline std::uint64_t universal_vertex_count(const CliqueExpr& e) {
  using Kind = CliqueExpr::Kind;
  switch (e.kind()) {
    case Kind::clique:
      return e.clique_size();
    case Kind::disjoint_union:
      if (e.terms().size() == 1 && e.terms()[0].second == 1) return universal_vertex_count(e.terms()[0].first);
      return 0;
    case Kind::join:
      return universal_vertex_count(e.lhs()) + universal_vertex_count(e.rhs());
  }
  return 0;
}

/// kappa = (product of nonzero eigenvalues) / n. A spectrum with more than
/// one zero (disconnected graph) gives 0.
inline FactoredNat kappa_from_spectrum(const IntSpectrum& s) {
  const std::uint64_t n = s.size();
  if (n == 0) throw DomainError("kappa_from_spectrum: empty spectrum");
  if (s.multiplicity(0) == 0) throw DomainError("kappa_from_spectrum: spectrum has no zero eigenvalue");
  if (s.multiplicity(0) > 1) return FactoredNat::zero();
  FactoredNat product;
  for (auto [v, m] : s.runs())
    if (v != 0) product *= FactoredNat::of(v).pow(m);
  try {
    return product.divide(FactoredNat::of(n));
  } catch (const ConsistencyError&) {
    throw ConsistencyError("kappa_from_spectrum: eigenvalue product not divisible by n = " + std::to_string(n));
  }
}

// ---------------------------------------------------------------------------
// Clique expressions of power graphs for the catalogued families.

namespace detail {

/// K(hub) joined with a disjoint union of cliques given as (size, count)
/// pairs; equal sizes are merged.
inline CliqueExpr star_of_cliques(std::uint64_t hub, const std::vector<std::pair<std::uint64_t, std::uint64_t>>& blocks) {
  std::map<std::uint64_t, std::uint64_t> merged;
  for (auto [size, count] : blocks) merged[size] += count;
  std::vector<std::pair<CliqueExpr, std::uint64_t>> terms;
  for (auto [size, count] : merged) terms.emplace_back(CliqueExpr::clique(size), count);
  return CliqueExpr::join(CliqueExpr::clique(hub), CliqueExpr::disjoint_union(std::move(terms)));
}

/// K(1) * (+_p c_p K(p-1)) for an EPO group with the given class counts.
inline CliqueExpr epo_expr(const std::map<std::uint64_t, std::uint64_t>& counts) {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> blocks;
  for (auto [p, c] : counts) blocks.emplace_back(p - 1, c);
  return star_of_cliques(1, blocks);
}

}  // namespace detail

/// EPO class counts derived from the family parameters (no group is built).
inline std::map<std::uint64_t, std::uint64_t> family_epo_counts(const GroupSpec& spec) {
  const auto& a = spec.params;
  switch (spec.family) {
    case Family::elementary:
      return {{a[0], (nt::ipow(a[0], a[1]) - 1) / (a[0] - 1)}};
    case Family::heisenberg:
      return {{a[0], a[0] * a[0] + a[0] + 1}};
    case Family::frobenius_pq: {
      std::map<std::uint64_t, std::uint64_t> c{{a[1], 1}};
      c[a[0]] += a[1];
      return c;
    }
    case Family::cyclic:
      if (nt::is_prime(a[0])) return {{a[0], 1}};
      break;
    case Family::psl2: {
      const std::uint64_t p = a[0];
      const std::uint64_t q = nt::ipow(p, a[1]);
      const std::uint64_t k = std::gcd(q - 1, std::uint64_t{2});
      const std::uint64_t r = (q - 1) / k;
      const std::uint64_t s = (q + 1) / k;
      if (!nt::is_prime(r) || !nt::is_prime(s)) break;
      std::map<std::uint64_t, std::uint64_t> c;
      c[p] += (q + 1) * ((q - 1) / (p - 1));
      c[r] += q * (q + 1) / 2;
      c[s] += q * (q - 1) / 2;
      return c;
    }
    default:
      break;
  }
  throw DomainError("family_epo_counts: " + spec.to_string() + " is not an EPO family member");
}

/// Clique expression of the power graph of a catalogued family member.
/// Supported: cyclic of prime-power order, elementary abelian, generalized
/// quaternion, Heisenberg, frobenius_pq, psl2 when EPO (q in {4, 5}),
/// dihedral of prime-power degree, and the exponent-p^2 extraspecial group.
inline CliqueExpr family_expr(const GroupSpec& spec) {
  spec.validate();
  const auto& a = spec.params;
  switch (spec.family) {
    case Family::cyclic:
      if (a[0] == 1 || nt::prime_power(a[0])) return CliqueExpr::clique(a[0]);
      break;
    case Family::quaternion: {
      const std::uint64_t n = a[0];
      return detail::star_of_cliques(2, {{nt::ipow(2, n - 1) - 2, 1}, {2, nt::ipow(2, n - 2)}});
    }
    case Family::dihedral: {
      const std::uint64_t n = a[0];
      if (n == 1) return CliqueExpr::clique(2);
      if (!nt::prime_power(n)) break;
      return detail::star_of_cliques(1, {{n - 1, 1}, {1, n}});
    }
    case Family::extraspecial_exp_p2: {
      // Only the identity is universal. The p cyclic subgroups of order p^2
      // share the centre, so the non-identity central elements are joined to
      // their generators; the p non-central subgroups of order p hang off the
      // identity alone.
      const std::uint64_t p = a[0];
      const CliqueExpr core = CliqueExpr::join(CliqueExpr::clique(p - 1),
                                               CliqueExpr::disjoint_union({{CliqueExpr::clique(p * p - p), p}}));
      return CliqueExpr::join(CliqueExpr::clique(1),
                              CliqueExpr::disjoint_union({{core, 1}, {CliqueExpr::clique(p - 1), p}}));
    }
    case Family::elementary:
    case Family::heisenberg:
    case Family::frobenius_pq:
    case Family::psl2:
      return detail::epo_expr(family_epo_counts(spec));
    case Family::cayley_table:
      break;
  }
  throw DomainError("family_expr: no clique expression for " + spec.to_string());
}

/// K(p) * (p+1)#K(p^2-p): the join form asserted in the literature for the
/// exponent-p^2 extraspecial group of order p^3.
inline CliqueExpr published_extraspecial_expr(std::uint64_t p) {
  if (!nt::is_prime(p) || p % 2 == 0) throw DomainError("published_extraspecial_expr: p must be an odd prime");
  return detail::star_of_cliques(p, {{p * p - p, p + 1}});
}

}  // namespace kappa
