#include <algorithm>

#include <gtest/gtest.h>

#include "kappa/group.hpp"
#include "kappa/matrix_tree.hpp"
#include "kappa/spectra.hpp"

using namespace kappa;

namespace {

IntSpectrum spec_of(std::vector<std::uint64_t> values) {
  std::map<std::uint64_t, std::uint64_t> runs;
  for (auto v : values) ++runs[v];
  return IntSpectrum(runs);
}

std::vector<std::size_t> sorted_degrees(const SimpleGraph& g) {
  std::vector<std::size_t> d;
  for (Vertex v = 0; v < g.size(); ++v) d.push_back(g.degree(v));
  std::sort(d.begin(), d.end());
  return d;
}

}  // namespace

TEST(Spectrum, Clique) {
  EXPECT_EQ(spectrum(CliqueExpr::clique(4)), spec_of({4, 4, 4, 0}));
  EXPECT_EQ(spectrum(CliqueExpr::clique(1)), spec_of({0}));
}

TEST(Spectrum, QuaternionJoin) {
  const CliqueExpr e = parse_clique_expr("K(2)*3#K(2)");
  EXPECT_EQ(spectrum(e), spec_of({8, 8, 4, 4, 4, 2, 2, 0}));
  EXPECT_EQ(kappa_from_spectrum(spectrum(e)), FactoredNat::prime_power(2, 11));
}

TEST(Spectrum, SymmetricGroupS3) {
  const CliqueExpr e = parse_clique_expr("K(1)*(3#K(1)+K(2))");
  EXPECT_EQ(spectrum(e), spec_of({6, 3, 1, 1, 1, 0}));
  EXPECT_EQ(kappa_from_spectrum(spectrum(e)), FactoredNat::of(3));
}

TEST(Spectrum, JoinAddsExactlyOneCopyOfTotal) {
  // K(2) * K(3) = K(5): the join contributes one 5 beyond the shifted sides.
  const IntSpectrum s = spectrum(CliqueExpr::join(CliqueExpr::clique(2), CliqueExpr::clique(3)));
  EXPECT_EQ(s, spectrum(CliqueExpr::clique(5)));
}

TEST(Spectrum, Invariants) {
  for (const char* text : {"K(3)*(K(2)+K(4))", "2#(K(1)*2#K(2))+K(3)", "K(1)*((K(2)*3#K(6))+3#K(2))"}) {
    const CliqueExpr e = parse_clique_expr(text);
    const IntSpectrum s = spectrum(e);
    const SimpleGraph g = expr_to_graph(e);
    EXPECT_EQ(s.size(), e.vertex_count());
    EXPECT_EQ(s.trace(), 2 * BigInt(static_cast<unsigned long>(g.edge_count())));
    EXPECT_EQ(e.edge_count(), g.edge_count());
    // Multiplicity of zero counts components.
    std::size_t components = 0;
    std::vector<bool> seen(g.size());
    for (Vertex v = 0; v < g.size(); ++v) {
      if (seen[v]) continue;
      ++components;
      std::vector<Vertex> stack{v};
      seen[v] = true;
      while (!stack.empty()) {
        const Vertex u = stack.back();
        stack.pop_back();
        for (Vertex w : g.neighbors(u)) {
          if (seen[w]) continue;
          seen[w] = true;
          stack.push_back(w);
        }
      }
    }
    EXPECT_EQ(s.multiplicity(0), components) << text;
  }
}

TEST(KappaFromSpectrum, Examples) {
  for (std::uint64_t n = 1; n <= 9; ++n)
    EXPECT_EQ(kappa_from_spectrum(spectrum(CliqueExpr::clique(n))).value(), kappa_matrix_tree(complete_graph(n)));
  EXPECT_EQ(kappa_from_spectrum(spec_of({8, 8, 4, 4, 4, 2, 2, 0})), FactoredNat::prime_power(2, 11));
  EXPECT_EQ(kappa_from_spectrum(spec_of({6, 3, 1, 1, 1, 0})), FactoredNat::of(3));
}

TEST(KappaFromSpectrum, DisconnectedIsZero) {
  EXPECT_TRUE(kappa_from_spectrum(spec_of({2, 0, 0})).is_zero());
}

TEST(KappaFromSpectrum, InexactDivisionIsConsistencyError) {
  EXPECT_THROW(kappa_from_spectrum(spec_of({5, 0})), ConsistencyError);
}

TEST(ParseExpr, Grammar) {
  EXPECT_EQ(parse_clique_expr("K(2)*(K(6)+4#K(2))").to_string(), "K(2)*(K(6)+4#K(2))");
  EXPECT_EQ(parse_clique_expr(" K(1) * K(2) + K(3) ").vertex_count(), 6u);
  // '*' binds tighter than '+'.
  EXPECT_EQ(parse_clique_expr("K(1)*K(2)+K(3)").kind(), CliqueExpr::Kind::disjoint_union);
  EXPECT_THROW(parse_clique_expr("K(0)"), ParseError);
  EXPECT_THROW(parse_clique_expr("K(2"), ParseError);
  EXPECT_THROW(parse_clique_expr("L(2)"), ParseError);
  EXPECT_THROW(parse_clique_expr("K(2) K(3)"), ParseError);
  EXPECT_THROW(parse_clique_expr("0#K(2)"), ParseError);
}

TEST(ParseExpr, RoundTripThroughText) {
  for (const char* text : {"K(2)*(K(6)+4#K(2))", "K(1)*((K(2)*3#K(6))+3#K(2))", "2#(K(1)*K(2))"}) {
    const CliqueExpr e = parse_clique_expr(text);
    EXPECT_EQ(parse_clique_expr(e.to_string()).to_string(), e.to_string());
    EXPECT_EQ(expr_to_graph(parse_clique_expr(e.to_string())), expr_to_graph(e));
  }
}

TEST(FamilyExpr, Quaternion) {
  EXPECT_EQ(family_expr(GroupSpec::quaternion(4)).to_string(), "K(2)*(4#K(2)+K(6))");
}

TEST(FamilyExpr, Elementary) {
  EXPECT_EQ(family_expr(GroupSpec::elementary(3, 2)).to_string(), "K(1)*(4#K(2))");
}

TEST(FamilyExpr, ExtraspecialActualStructure) {
  // Only the identity is universal; the non-central subgroups of order p
  // hang off the identity alone.
  EXPECT_EQ(family_expr(GroupSpec::extraspecial_exp_p2(3)).to_string(), "K(1)*((K(2)*(3#K(6)))+3#K(2))");
  EXPECT_EQ(published_extraspecial_expr(3).to_string(), "K(3)*(4#K(6))");
}

TEST(FamilyExpr, MatchesConstructedPowerGraph) {
  // Same vertex count, edge count, degree sequence, universal count and
  // spanning-tree count as the power graph built from the group table.
  const std::vector<GroupSpec> specs = {
      GroupSpec::quaternion(3),     GroupSpec::quaternion(4),       GroupSpec::elementary(2, 3),
      GroupSpec::elementary(3, 2),  GroupSpec::heisenberg(3),       GroupSpec::extraspecial_exp_p2(3),
      GroupSpec::frobenius_pq(3, 7), GroupSpec::psl2(2, 2),         GroupSpec::psl2(5, 1),
      GroupSpec::cyclic(9),         GroupSpec::dihedral(8),         GroupSpec::dihedral(9),
  };
  for (const auto& spec : specs) {
    const CliqueExpr e = family_expr(spec);
    const SimpleGraph a = expr_to_graph(e);
    const SimpleGraph b = power_graph(build_group(spec));
    EXPECT_EQ(a.size(), b.size()) << spec.to_string();
    EXPECT_EQ(a.edge_count(), b.edge_count()) << spec.to_string();
    EXPECT_EQ(sorted_degrees(a), sorted_degrees(b)) << spec.to_string();
    EXPECT_EQ(universal_vertex_count(e), universal_vertices(b).size()) << spec.to_string();
    EXPECT_EQ(kappa_from_spectrum(spectrum(e)).value(), kappa_matrix_tree(b)) << spec.to_string();
  }
}

TEST(FamilyExpr, PublishedExtraspecialFormIsNotThePowerGraph) {
  const SimpleGraph published = expr_to_graph(published_extraspecial_expr(3));
  const SimpleGraph actual = power_graph(build_group(GroupSpec::extraspecial_exp_p2(3)));
  EXPECT_EQ(published.size(), actual.size());
  EXPECT_NE(sorted_degrees(published), sorted_degrees(actual));
  EXPECT_EQ(universal_vertices(published).size(), 3u);
  EXPECT_EQ(universal_vertices(actual).size(), 1u);
}

TEST(FamilyExpr, Unsupported) {
  EXPECT_THROW(family_expr(GroupSpec::cyclic(6)), DomainError);
  EXPECT_THROW(family_expr(GroupSpec::psl2(7, 1)), DomainError);
  EXPECT_THROW(family_epo_counts(GroupSpec::quaternion(3)), DomainError);
}

TEST(UniversalVertexCount, MatchesRealizedGraph) {
  for (const char* text : {"K(3)", "K(1)*3#K(1)", "K(2)*(K(1)+K(1))", "(K(1)*K(1))*K(2)", "K(2)+K(2)", "K(3)*K(4)"}) {
    const CliqueExpr e = parse_clique_expr(text);
    EXPECT_EQ(universal_vertex_count(e), universal_vertices(expr_to_graph(e)).size()) << text;
  }
}
