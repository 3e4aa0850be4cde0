#include <gtest/gtest.h>

#include <numeric>

#include "betashift/bowen_franks.hpp"
#include "betashift/catalog.hpp"
#include "betashift/covers.hpp"
#include "betashift/fiber_reduce.hpp"
#include "betashift/moves.hpp"
#include "support.hpp"

using namespace betashift;
using betashift::test::G;

namespace {

UnlabeledGraph U(std::size_t n, std::vector<std::pair<VertexId, VertexId>> edges) {
  UnlabeledGraph g;
  g.vertex_count = n;
  g.edges = std::move(edges);
  for (std::size_t i = 0; i < n; ++i) g.names.push_back("u" + std::to_string(i));
  return g;
}

BowenFranks bf(const UnlabeledGraph& g) { return bowen_franks(adjacency_matrix(g)); }

bool essential(const UnlabeledGraph& g) {
  for (VertexId v = 0; v < g.vertex_count; ++v) {
    if (g.in_degree(v) == 0 || g.out_degree(v) == 0) return false;
  }
  return true;
}

// Strongly connected components with at least one edge inside.
std::size_t nontrivial_components(const UnlabeledGraph& g) {
  std::size_t n = g.vertex_count;
  std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
  for (const auto& [s, d] : g.edges) reach[s][d] = true;
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) reach[i][j] = reach[i][j] || (reach[i][k] && reach[k][j]);
    }
  }
  std::vector<bool> seen(n, false);
  std::size_t count = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (seen[i] || !reach[i][i]) continue;
    ++count;
    for (std::size_t j = 0; j < n; ++j) {
      if (reach[i][j] && reach[j][i]) seen[j] = true;
    }
  }
  return count;
}

UnlabeledGraph random_essential(std::size_t n) {
  std::uniform_int_distribution<VertexId> pick(0, static_cast<VertexId>(n - 1));
  std::uniform_int_distribution<int> extra(0, static_cast<int>(2 * n));
  std::vector<std::pair<VertexId, VertexId>> edges;
  std::vector<VertexId> cycle(n);
  std::iota(cycle.begin(), cycle.end(), 0);
  std::shuffle(cycle.begin(), cycle.end(), test::rng());
  for (std::size_t i = 0; i < n; ++i) edges.emplace_back(cycle[i], cycle[(i + 1) % n]);
  for (int e = extra(test::rng()); e > 0; --e) edges.emplace_back(pick(test::rng()), pick(test::rng()));
  return U(n, std::move(edges));
}

}  // namespace

TEST(Contract, PathBecomesEdge) {
  UnlabeledGraph g = U(3, {{0, 1}, {1, 2}, {2, 0}, {0, 0}});
  ASSERT_TRUE(contractible(g, 1));
  UnlabeledGraph h = contract_unit_vertex(g, 1);
  EXPECT_EQ(h.vertex_count, 2u);
  EXPECT_EQ(h.edges.size(), 3u);
  EXPECT_EQ(bf(g), bf(h));
}

TEST(Contract, LoopRejected) {
  UnlabeledGraph g = U(1, {{0, 0}});
  EXPECT_FALSE(contractible(g, 0));
  EXPECT_ERROR_CODE(contract_unit_vertex(g, 0), ErrorCode::kPrecondition);
}

TEST(Contract, FischerChainVertex) {
  UnlabeledGraph g = underlying_graph(fischer_cover(G("11(10)")).graph);
  std::vector<VertexId> eligible;
  for (VertexId v = 0; v < g.vertex_count; ++v) {
    if (contractible(g, v)) eligible.push_back(v);
  }
  EXPECT_EQ(eligible, (std::vector<VertexId>{3}));
  EXPECT_EQ(bf(contract_unit_vertex(g, 3)), bf(g));
}

TEST(Amalgamate, MergesTwins) {
  UnlabeledGraph g = U(4, {{0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 0}, {3, 1}, {2, 2}, {3, 3}});
  UnlabeledGraph h = in_amalgamate(g, 0, 1);
  EXPECT_EQ(h.vertex_count, 3u);
  EXPECT_EQ(h.out_degree(0), 2u);
  EXPECT_EQ(bf(g), bf(h));
  EXPECT_ERROR_CODE(in_amalgamate(g, 0, 2), ErrorCode::kOutNeighborhoodMismatch);
}

TEST(Moves, PreserveBowenFranksOnRandomGraphs) {
  std::size_t applied = 0;
  for (int trial = 0; trial < 200; ++trial) {
    UnlabeledGraph g = random_essential(2 + static_cast<std::size_t>(trial % 7));
    ASSERT_TRUE(essential(g));
    for (VertexId v = 0; v < g.vertex_count; ++v) {
      if (!contractible(g, v)) continue;
      ASSERT_EQ(bf(contract_unit_vertex(g, v)), bf(g));
      ++applied;
    }
    for (VertexId u = 0; u < g.vertex_count; ++u) {
      for (VertexId w = u + 1; w < g.vertex_count; ++w) {
        if (g.out_targets(u) != g.out_targets(w)) continue;
        ASSERT_EQ(bf(in_amalgamate(g, u, w)), bf(g));
        ++applied;
      }
    }
  }
  EXPECT_GT(applied, 50u);
}

TEST(Moves, CommuteWithInvolution) {
  FiberProductCover c = fiber_product_cover(G("11(110)"));
  UnlabeledGraph g = underlying_graph(c);
  for (VertexId v = 0; v < g.vertex_count; ++v) {
    if (!contractible(g, v)) continue;
    UnlabeledGraph a = contract_unit_vertex(g, v);
    UnlabeledGraph b = contract_unit_vertex(g, (*g.involution)[v]);
    EXPECT_TRUE(isomorphic(a, b));
    const auto& inv = *a.involution;
    for (VertexId x = 0; x < a.vertex_count; ++x) EXPECT_EQ(inv[inv[x]], x);
  }
}

TEST(Reduce, Examples) {
  ReductionResult a = reduce_fiber_cover(G("1(10)"));
  EXPECT_EQ(a.graph.vertex_count, 3u);
  EXPECT_EQ(a.graph.edges.size(), 6u);
  EXPECT_EQ(bf(a.graph).group_string(), "Z^2");
  EXPECT_TRUE(a.log.bf_preserved());

  ReductionResult b = reduce_fiber_cover(G("11(110)"));
  EXPECT_EQ(b.graph.vertex_count, 6u);
  EXPECT_EQ(b.graph.edges.size(), 12u);
  EXPECT_EQ(bf(b.graph).group_string(), "Z/2 + Z^2");

  ReductionResult c = reduce_fiber_cover(G("11(10)"), true);
  EXPECT_EQ(c.graph.vertex_count, 3u);
  EXPECT_EQ(c.graph.edges.size(), 6u);
  ASSERT_FALSE(c.log.steps.empty());
  for (const ReductionStep& s : c.log.steps) {
    ASSERT_TRUE(s.graph_after.has_value());
    EXPECT_EQ(s.graph_after->vertex_count, s.vertices_after);
  }

  EXPECT_ERROR_CODE(reduce_fiber_cover(G("(10)")), ErrorCode::kNotStrictlySofic);
  EXPECT_ERROR_CODE(reduce_fiber_cover(G("2(01)")), ErrorCode::kNotBinary);
}

TEST(Reduce, NormalFormOnEnumeration) {
  for (const GeneratingSequence& g : enumerate_generating(4, 5, 1)) {
    if (classify(g) == ShiftClass::kSft) continue;
    ReductionResult r = reduce_fiber_cover(g);
    BigInt s = period_sum(g).S;
    std::size_t S = static_cast<std::size_t>(s);
    ASSERT_EQ(r.graph.vertex_count, 3 * S) << g.to_string();
    ASSERT_EQ(r.graph.edges.size(), 6 * S) << g.to_string();
    ASSERT_TRUE(r.log.bf_preserved()) << g.to_string();
    ASSERT_TRUE(bf(r.graph).same_group(cyclic_plus_free(s, 2, 0))) << g.to_string();
    ASSERT_TRUE(essential(r.graph));
    ASSERT_EQ(nontrivial_components(r.graph), 3u) << g.to_string();
    const auto& inv = *r.graph.involution;
    std::size_t fixed = 0;
    for (VertexId v = 0; v < r.graph.vertex_count; ++v) fixed += inv[v] == v;
    ASSERT_EQ(fixed, S) << g.to_string();
    ASSERT_TRUE(isomorphic(r.graph, reduce_fiber_cover(canonical_form(g).form).graph));
  }
}

TEST(Isomorphic, Basics) {
  UnlabeledGraph a = U(2, {{0, 1}, {1, 0}, {0, 0}});
  UnlabeledGraph b = U(2, {{1, 0}, {0, 1}, {1, 1}});
  UnlabeledGraph c = U(2, {{1, 0}, {0, 1}, {1, 1}, {1, 1}});
  EXPECT_TRUE(isomorphic(a, b));
  EXPECT_FALSE(isomorphic(a, c));
  a.involution = std::vector<VertexId>{0, 1};
  b.involution = std::vector<VertexId>{1, 0};
  EXPECT_FALSE(isomorphic(a, b));
}

TEST(Equivariant, Examples) {
  EquivariantReport a = equivariant_fiber_compare(G("1(10)"), G("11(10)"));
  EXPECT_TRUE(a.equivalent);
  EXPECT_TRUE(a.reduced_isomorphic);
  EquivariantReport b = equivariant_fiber_compare(G("1(110)"), G("11(110)"));
  EXPECT_TRUE(b.equivalent);
  EXPECT_TRUE(b.reduced_isomorphic);
  EquivariantReport c = equivariant_fiber_compare(G("11(10)"), G("11(110)"));
  EXPECT_FALSE(c.equivalent);
  EXPECT_FALSE(c.reduced_isomorphic);
  EXPECT_TRUE(equivariant_fiber_compare(G("2(01)"), G("1(10)")).equivalent);
  EXPECT_ERROR_CODE(equivariant_fiber_compare(G("(10)"), G("1(10)")), ErrorCode::kNotStrictlySofic);
}

TEST(Dot, Unlabeled) {
  std::string dot = to_dot(reduce_fiber_cover(G("1(10)")).graph);
  EXPECT_NE(dot.find("digraph"), std::string::npos);
}
