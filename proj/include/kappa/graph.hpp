#pragma once

// Simple undirected graphs and the constructions built from them: complement,
// disjoint union, join, induced subgraphs, divisor graphs and clique-replaced
// graphs.

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "kappa/errors.hpp"
#include "kappa/linalg.hpp"
#include "kappa/number_theory.hpp"

namespace kappa {

using Vertex = std::size_t;

/// Undirected simple graph on vertices 0..n-1, stored as packed adjacency rows.
class SimpleGraph {
 public:
  SimpleGraph() = default;
  explicit SimpleGraph(std::size_t n) : n_(n), words_((n + 63) / 64), bits_(n * words_, 0) {}

  std::size_t size() const noexcept { return n_; }

  void add_edge(Vertex u, Vertex v) {
    check(u);
    check(v);
    if (u == v) throw DomainError("SimpleGraph::add_edge: self-loop at " + std::to_string(u));
    set_bit(u, v);
    set_bit(v, u);
  }

  bool has_edge(Vertex u, Vertex v) const {
    check(u);
    check(v);
    return (bits_[u * words_ + v / 64] >> (v % 64)) & 1U;
  }

  std::size_t degree(Vertex u) const {
    check(u);
    std::size_t d = 0;
    for (std::size_t w = 0; w < words_; ++w) d += std::popcount(bits_[u * words_ + w]);
    return d;
  }

  std::vector<Vertex> neighbors(Vertex u) const {
    check(u);
    std::vector<Vertex> out;
    for (std::size_t w = 0; w < words_; ++w) {
      std::uint64_t word = bits_[u * words_ + w];
      while (word != 0) {
        out.push_back(w * 64 + static_cast<std::size_t>(std::countr_zero(word)));
        word &= word - 1;
      }
    }
    return out;
  }

  std::size_t edge_count() const {
    std::size_t twice = 0;
    for (std::uint64_t word : bits_) twice += std::popcount(word);
    return twice / 2;
  }

  /// Edges as (u, v) with u < v, lexicographic.
  std::vector<std::pair<Vertex, Vertex>> edges() const {
    std::vector<std::pair<Vertex, Vertex>> out;
    for (Vertex u = 0; u < n_; ++u)
      for (Vertex v : neighbors(u))
        if (u < v) out.emplace_back(u, v);
    return out;
  }

  const std::vector<std::string>& labels() const noexcept { return labels_; }
  void set_labels(std::vector<std::string> labels) {
    if (!labels.empty() && labels.size() != n_) throw DimensionError("SimpleGraph::set_labels: size mismatch");
    labels_ = std::move(labels);
  }
  std::string label(Vertex v) const { return labels_.empty() ? std::to_string(v) : labels_[v]; }

  friend bool operator==(const SimpleGraph& a, const SimpleGraph& b) {
    return a.n_ == b.n_ && a.bits_ == b.bits_;
  }

 private:
  void check(Vertex v) const {
    if (v >= n_) throw DomainError("SimpleGraph: vertex " + std::to_string(v) + " out of range");
  }
  void set_bit(Vertex u, Vertex v) { bits_[u * words_ + v / 64] |= std::uint64_t{1} << (v % 64); }

  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
  std::vector<std::string> labels_;
};

inline SimpleGraph complete_graph(std::size_t n) {
  SimpleGraph g(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

inline SimpleGraph empty_graph(std::size_t n) { return SimpleGraph(n); }

inline SimpleGraph path_graph(std::size_t n) {
  SimpleGraph g(n);
  for (Vertex v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

inline SimpleGraph cycle_graph(std::size_t n) {
  SimpleGraph g = path_graph(n);
  if (n >= 3) g.add_edge(n - 1, 0);
  return g;
}

inline SimpleGraph complement(const SimpleGraph& g) {
  SimpleGraph out(g.size());
  for (Vertex u = 0; u < g.size(); ++u)
    for (Vertex v = u + 1; v < g.size(); ++v)
      if (!g.has_edge(u, v)) out.add_edge(u, v);
  out.set_labels(g.labels());
  return out;
}

/// Vertex-disjoint union; vertices of b are shifted by a.size().
inline SimpleGraph disjoint_union(const SimpleGraph& a, const SimpleGraph& b) {
  SimpleGraph out(a.size() + b.size());
  for (auto [u, v] : a.edges()) out.add_edge(u, v);
  for (auto [u, v] : b.edges()) out.add_edge(a.size() + u, a.size() + v);
  return out;
}

/// Disjoint union plus every edge between the two sides.
inline SimpleGraph join(const SimpleGraph& a, const SimpleGraph& b) {
  SimpleGraph out = disjoint_union(a, b);
  for (Vertex u = 0; u < a.size(); ++u)
    for (Vertex v = 0; v < b.size(); ++v) out.add_edge(u, a.size() + v);
  return out;
}

inline SimpleGraph induced_subgraph(const SimpleGraph& g, std::span<const Vertex> vertices) {
  for (Vertex v : vertices)
    if (v >= g.size()) throw DomainError("induced_subgraph: vertex " + std::to_string(v) + " out of range");
  SimpleGraph out(vertices.size());
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i + 1; j < vertices.size(); ++j)
      if (g.has_edge(vertices[i], vertices[j])) out.add_edge(i, j);
  if (!g.labels().empty()) {
    std::vector<std::string> labels;
    for (Vertex v : vertices) labels.push_back(g.label(v));
    out.set_labels(std::move(labels));
  }
  return out;
}

inline bool is_connected(const SimpleGraph& g) {
  if (g.size() <= 1) return true;
  std::vector<bool> seen(g.size(), false);
  std::vector<Vertex> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    Vertex u = stack.back();
    stack.pop_back();
    for (Vertex v : g.neighbors(u)) {
      if (seen[v]) continue;
      seen[v] = true;
      ++reached;
      stack.push_back(v);
    }
  }
  return reached == g.size();
}

/// Vertices adjacent to every other vertex.
inline std::vector<Vertex> universal_vertices(const SimpleGraph& g) {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.size(); ++v)
    if (g.degree(v) + 1 == g.size()) out.push_back(v);
  return out;
}

inline IntMatrix adjacency_matrix(const SimpleGraph& g) {
  IntMatrix a(g.size(), g.size());
  for (auto [u, v] : g.edges()) {
    a(u, v) = 1;
    a(v, u) = 1;
  }
  return a;
}

inline IntMatrix laplacian_matrix(const SimpleGraph& g) {
  IntMatrix l(g.size(), g.size());
  for (Vertex u = 0; u < g.size(); ++u) {
    l(u, u) = static_cast<unsigned long>(g.degree(u));
    for (Vertex v : g.neighbors(u)) l(u, v) = -1;
  }
  return l;
}

/// Divisor graph D(n): divisors of n, largest first; adjacency is divisibility.
/// Vertex labels carry the divisor values.
inline SimpleGraph divisor_graph(std::uint64_t n) {
  const auto divisors = nt::divisors_desc(n);
  SimpleGraph g(divisors.size());
  for (std::size_t i = 0; i < divisors.size(); ++i)
    for (std::size_t j = i + 1; j < divisors.size(); ++j)
      if (divisors[i] % divisors[j] == 0) g.add_edge(i, j);
  std::vector<std::string> labels;
  for (auto d : divisors) labels.push_back(std::to_string(d));
  g.set_labels(std::move(labels));
  return g;
}

/// Base graph plus a positive size per base vertex, with the derived
/// quantities m_i = x_i + sum_{j ~ i} x_j, lambda_i = m_i / x_i and
/// psi = prod lambda_i.
class CliqueReplacedSpec {
 public:
  CliqueReplacedSpec(SimpleGraph base, std::vector<std::uint64_t> sizes)
      : base_(std::move(base)), sizes_(std::move(sizes)) {
    if (base_.size() == 0) throw DomainError("CliqueReplacedSpec: base graph is empty");
    if (sizes_.size() != base_.size())
      throw DimensionError("CliqueReplacedSpec: " + std::to_string(sizes_.size()) + " sizes for " +
                           std::to_string(base_.size()) + " base vertices");
    if (!is_connected(base_)) throw DomainError("CliqueReplacedSpec: base graph is disconnected");
    for (auto x : sizes_)
      if (x == 0) throw DomainError("CliqueReplacedSpec: block sizes must be positive");

    total_ = std::accumulate(sizes_.begin(), sizes_.end(), std::uint64_t{0});
    m_.resize(sizes_.size());
    psi_ = 1;
    for (Vertex i = 0; i < base_.size(); ++i) {
      m_[i] = sizes_[i];
      for (Vertex j : base_.neighbors(i)) m_[i] += sizes_[j];
      psi_ *= lambda(i);
    }
  }

  const SimpleGraph& base() const noexcept { return base_; }
  const std::vector<std::uint64_t>& sizes() const noexcept { return sizes_; }
  std::size_t k() const noexcept { return sizes_.size(); }
  /// Vertex count of the expanded graph.
  std::uint64_t n() const noexcept { return total_; }
  std::uint64_t m(std::size_t i) const { return m_.at(i); }
  BigRat lambda(std::size_t i) const {
    return make_rat(BigInt(static_cast<unsigned long>(m_.at(i))), BigInt(static_cast<unsigned long>(sizes_.at(i))));
  }
  const BigRat& psi() const noexcept { return psi_; }

  /// Index of the first expanded vertex of block i.
  std::uint64_t block_offset(std::size_t i) const {
    return std::accumulate(sizes_.begin(), sizes_.begin() + static_cast<std::ptrdiff_t>(i), std::uint64_t{0});
  }

 private:
  SimpleGraph base_;
  std::vector<std::uint64_t> sizes_;
  std::uint64_t total_ = 0;
  std::vector<std::uint64_t> m_;
  BigRat psi_;
};

/// Expands each base vertex i into a clique of size x_i (blocks laid out
/// consecutively in base-vertex order) and joins blocks along base edges.
inline SimpleGraph clique_replaced(const CliqueReplacedSpec& spec) {
  const auto& base = spec.base();
  std::vector<std::uint64_t> offset(spec.k() + 1, 0);
  for (std::size_t i = 0; i < spec.k(); ++i) offset[i + 1] = offset[i] + spec.sizes()[i];

  SimpleGraph g(spec.n());
  for (std::size_t i = 0; i < spec.k(); ++i) {
    for (auto a = offset[i]; a < offset[i + 1]; ++a)
      for (auto b = a + 1; b < offset[i + 1]; ++b) g.add_edge(a, b);
    for (Vertex j : base.neighbors(i)) {
      if (j < i) continue;
      for (auto a = offset[i]; a < offset[i + 1]; ++a)
        for (auto b = offset[j]; b < offset[j + 1]; ++b) g.add_edge(a, b);
    }
  }
  std::vector<std::string> labels;
  labels.reserve(spec.n());
  for (std::size_t i = 0; i < spec.k(); ++i)
    for (std::uint64_t r = 0; r < spec.sizes()[i]; ++r)
      labels.push_back(base.label(i) + "." + std::to_string(r + 1));
  g.set_labels(std::move(labels));
  return g;
}

/// The power graph of Z_n as a clique-replaced divisor graph: D(n) with
/// block sizes phi(d_i).
inline CliqueReplacedSpec cyclic_divisor_spec(std::uint64_t n) {
  SimpleGraph base = divisor_graph(n);
  std::vector<std::uint64_t> sizes;
  for (auto d : nt::divisors_desc(n)) sizes.push_back(nt::euler_phi(d));
  return CliqueReplacedSpec(std::move(base), std::move(sizes));
}

}  // namespace kappa
