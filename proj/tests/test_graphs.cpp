#include <algorithm>
#include <random>
#include <sstream>

#include <gtest/gtest.h>

#include "kappa/graph.hpp"
#include "kappa/graph_io.hpp"
#include "kappa/group.hpp"
#include "kappa/number_theory.hpp"

using namespace kappa;

TEST(Graph, RejectsSelfLoopsAndRange) {
  SimpleGraph g(3);
  EXPECT_THROW(g.add_edge(1, 1), DomainError);
  EXPECT_THROW(g.add_edge(0, 3), DomainError);
  g.add_edge(0, 1);
  g.add_edge(1, 0);
  EXPECT_EQ(g.edge_count(), 1u);
}

TEST(Complement, Examples) {
  EXPECT_EQ(complement(complete_graph(4)), empty_graph(4));
  SimpleGraph ac(3);
  ac.add_edge(0, 2);
  EXPECT_EQ(complement(path_graph(3)), ac);

  std::mt19937_64 rng(3);
  for (int t = 0; t < 20; ++t) {
    SimpleGraph g(1 + rng() % 9);
    for (Vertex u = 0; u < g.size(); ++u)
      for (Vertex v = u + 1; v < g.size(); ++v)
        if (rng() % 3 == 0) g.add_edge(u, v);
    EXPECT_EQ(complement(complement(g)), g);
  }
}

TEST(JoinUnion, Examples) {
  EXPECT_EQ(join(complete_graph(1), complete_graph(1)), complete_graph(2));
  const SimpleGraph u = disjoint_union(complete_graph(3), complete_graph(2));
  EXPECT_EQ(u.size(), 5u);
  EXPECT_EQ(u.edge_count(), 4u);
}

TEST(JoinUnion, QuaternionShape) {
  const SimpleGraph k2 = complete_graph(2);
  const SimpleGraph j = join(k2, disjoint_union(disjoint_union(k2, k2), k2));
  EXPECT_EQ(j.size(), 8u);
  EXPECT_EQ(j.edge_count(), 1u + 3u + 12u);
  const SimpleGraph pq = power_graph(build_group(GroupSpec::quaternion(3)));
  EXPECT_EQ(pq.edge_count(), j.edge_count());
  std::vector<std::size_t> da, db;
  for (Vertex v = 0; v < 8; ++v) {
    da.push_back(j.degree(v));
    db.push_back(pq.degree(v));
  }
  std::sort(da.begin(), da.end());
  std::sort(db.begin(), db.end());
  EXPECT_EQ(da, db);
}

TEST(InducedSubgraph, Examples) {
  const SimpleGraph c5 = cycle_graph(5);
  const std::vector<Vertex> all{0, 1, 2, 3, 4};
  EXPECT_EQ(induced_subgraph(c5, all), c5);
  const std::vector<Vertex> one{3};
  EXPECT_EQ(induced_subgraph(c5, one), complete_graph(1));
  const std::vector<Vertex> three{1, 2, 3};
  EXPECT_EQ(induced_subgraph(c5, three), path_graph(3));
  const std::vector<Vertex> bad{7};
  EXPECT_THROW(induced_subgraph(c5, bad), DomainError);
}

TEST(DivisorGraph, Examples) {
  const SimpleGraph d6 = divisor_graph(6);
  ASSERT_EQ(d6.size(), 4u);
  EXPECT_EQ(d6.labels(), (std::vector<std::string>{"6", "3", "2", "1"}));
  EXPECT_EQ(d6.edge_count(), 5u);
  EXPECT_FALSE(d6.has_edge(1, 2));
  EXPECT_EQ(divisor_graph(7), complete_graph(2));
  const SimpleGraph d12 = divisor_graph(12);
  EXPECT_EQ(d12.degree(0), 5u);
  EXPECT_EQ(d12.degree(d12.size() - 1), 5u);
}

TEST(DivisorGraph, ExtremesAreUniversal) {
  for (std::uint64_t n = 2; n <= 60; ++n) {
    const SimpleGraph d = divisor_graph(n);
    EXPECT_EQ(d.degree(0), d.size() - 1) << n;
    EXPECT_EQ(d.degree(d.size() - 1), d.size() - 1) << n;
  }
}

TEST(CliqueReplaced, Examples) {
  EXPECT_EQ(clique_replaced(CliqueReplacedSpec(complete_graph(3), {2, 2, 2})), complete_graph(6));
  EXPECT_EQ(clique_replaced(CliqueReplacedSpec(path_graph(2), {1, 1})), complete_graph(2));
}

TEST(CliqueReplaced, SpecValidation) {
  EXPECT_THROW(CliqueReplacedSpec(empty_graph(2), {1, 1}), DomainError);
  EXPECT_THROW(CliqueReplacedSpec(path_graph(2), {1, 0}), DomainError);
  EXPECT_THROW(CliqueReplacedSpec(path_graph(2), {1}), DimensionError);
}

TEST(CliqueReplaced, DerivedQuantities) {
  const CliqueReplacedSpec s(path_graph(3), {1, 2, 3});
  EXPECT_EQ(s.n(), 6u);
  EXPECT_EQ(s.m(0), 3u);
  EXPECT_EQ(s.m(1), 6u);
  EXPECT_EQ(s.m(2), 5u);
  EXPECT_EQ(s.lambda(2), BigRat(5, 3));
  EXPECT_EQ(s.psi(), BigRat(3) * BigRat(3) * BigRat(5, 3));
  EXPECT_EQ(s.block_offset(2), 3u);
}

TEST(CliqueReplaced, BlockDegrees) {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 30; ++t) {
    const std::size_t k = 1 + rng() % 5;
    SimpleGraph base = path_graph(k);
    for (Vertex u = 0; u < k; ++u)
      for (Vertex v = u + 2; v < k; ++v)
        if (rng() % 2) base.add_edge(u, v);
    std::vector<std::uint64_t> xs(k);
    for (auto& x : xs) x = 1 + rng() % 4;
    const CliqueReplacedSpec spec(base, xs);
    const SimpleGraph g = clique_replaced(spec);
    for (std::size_t i = 0; i < k; ++i)
      for (std::uint64_t r = 0; r < xs[i]; ++r) EXPECT_EQ(g.degree(spec.block_offset(i) + r), spec.m(i) - 1);
  }
}

TEST(CliqueReplaced, CyclicPowerGraphMatchesDivisorForm) {
  // Group elements sorted by (decreasing order, index) line up with the
  // blocks of D(n)[phi(d_1), ..., phi(d_k)].
  for (std::uint64_t n : {1, 6, 12, 30, 36}) {
    const FiniteGroup g = build_group(GroupSpec::cyclic(n));
    std::vector<Element> perm(n);
    for (Element i = 0; i < n; ++i) perm[i] = i;
    std::stable_sort(perm.begin(), perm.end(),
                     [&](Element a, Element b) { return g.element_order(a) > g.element_order(b); });
    const SimpleGraph pg = induced_subgraph(power_graph(g), std::vector<Vertex>(perm.begin(), perm.end()));
    EXPECT_EQ(pg, clique_replaced(cyclic_divisor_spec(n))) << n;
  }
}

TEST(Universal, Examples) {
  EXPECT_EQ(universal_vertices(power_graph(build_group(GroupSpec::cyclic(6)))).size(), 3u);
  EXPECT_EQ(universal_vertices(power_graph(build_group(GroupSpec::quaternion(4)))).size(), 2u);
  EXPECT_EQ(universal_vertices(complete_graph(5)).size(), 5u);
}

TEST(EdgeList, RoundTrip) {
  const SimpleGraph g = divisor_graph(12);
  std::stringstream ss;
  write_edge_list(ss, g);
  EXPECT_EQ(read_edge_list(ss), g);
}

TEST(EdgeList, RejectsMalformed) {
  std::istringstream reversed("3\n2 1\n");
  EXPECT_THROW(read_edge_list(reversed), ParseError);
  std::istringstream range("3\n0 3\n");
  EXPECT_THROW(read_edge_list(range), ParseError);
  std::istringstream dup("3\n0 1\n0 1\n");
  EXPECT_THROW(read_edge_list(dup), ParseError);
  std::istringstream empty("");
  EXPECT_THROW(read_edge_list(empty), ParseError);
  std::istringstream comments("# path\n3\n\n0 1\n1 2\n");
  EXPECT_EQ(read_edge_list(comments), path_graph(3));
}

TEST(Dot, IncludesLabels) {
  std::ostringstream os;
  write_dot(os, divisor_graph(6), "D6");
  const std::string dot = os.str();
  EXPECT_NE(dot.find("graph \"D6\" {"), std::string::npos);
  EXPECT_NE(dot.find("0 [label=\"6\"];"), std::string::npos);
  EXPECT_NE(dot.find("0 -- 1;"), std::string::npos);
}
