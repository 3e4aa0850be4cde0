#pragma once

// Symbol contraction and in-amalgamation on unlabeled graphs, and the
// reduction of the fiber product cover's underlying graph to normal form.

#include <optional>
#include <string>
#include <vector>

#include "betashift/bowen_franks.hpp"
#include "betashift/covers.hpp"
#include "betashift/integer_matrix.hpp"
#include "betashift/sequence.hpp"

namespace betashift {

struct UnlabeledGraph {
  std::size_t vertex_count = 0;
  std::vector<std::pair<VertexId, VertexId>> edges;
  std::optional<std::vector<VertexId>> involution;
  std::vector<std::string> names;

  std::size_t out_degree(VertexId v) const;
  std::size_t in_degree(VertexId v) const;
  // Sorted out-neighbour multiset.
  std::vector<VertexId> out_targets(VertexId v) const;
};

UnlabeledGraph underlying_graph(const FiberProductCover& cover);
UnlabeledGraph underlying_graph(const LabeledGraph& graph);

IntegerMatrix adjacency_matrix(const UnlabeledGraph& g);

// In- and out-degree 1 and no loop.
bool contractible(const UnlabeledGraph& g, VertexId v);

// Replaces a -> v -> b by a -> b and removes v. With an involution the image
// of v is contracted as well. Throws Error{kPrecondition}.
UnlabeledGraph contract_unit_vertex(const UnlabeledGraph& g, VertexId v);

// Merges w into u when both emit edges to the same multiset of vertices;
// edges into w are redirected to u and w's own out-edges are dropped. With
// an involution the image pair is merged as well. Throws
// Error{kOutNeighborhoodMismatch}.
UnlabeledGraph in_amalgamate(const UnlabeledGraph& g, VertexId u, VertexId w);

struct ReductionStep {
  enum class Op { kContract, kAmalgamate };
  Op op;
  std::vector<VertexId> args;  // vertex ids in the graph before the step
  std::size_t vertices_after = 0;
  std::size_t edges_after = 0;
  BowenFranks bf_before;
  BowenFranks bf_after;
  std::optional<UnlabeledGraph> graph_after;
};

struct ReductionLog {
  std::vector<ReductionStep> steps;
  bool bf_preserved() const;
};

struct ReductionResult {
  GeneratingSequence canonical;  // the sequence whose fiber cover was reduced
  UnlabeledGraph start;
  UnlabeledGraph graph;
  ReductionLog log;
};

// Non-periodic binary g. Contracts the lowest contractible vertex until none
// is left, then performs the unique in-amalgamation (up to the involution),
// and repeats. Throws Error{kNotStrictlySofic}, Error{kNotBinary} or
// Error{kAmbiguousAmalgamation}.
ReductionResult reduce_fiber_cover(const GeneratingSequence& g, bool keep_intermediates = false);

// Graph isomorphism preserving edge multiplicities, and the involutions when
// both graphs carry one.
bool isomorphic(const UnlabeledGraph& a, const UnlabeledGraph& b);

struct EquivariantReport {
  BigInt S1;
  BigInt S2;
  bool equivalent = false;          // S1 == S2
  bool reduced_isomorphic = false;  // reduced graphs with involution
};

// Non-periodic inputs; non-binary inputs are binarized first. Throws
// Error{kNotStrictlySofic}.
EquivariantReport equivariant_fiber_compare(const GeneratingSequence& g1,
                                            const GeneratingSequence& g2);

std::string to_dot(const UnlabeledGraph& g, const std::string& graph_name = "G");

}  // namespace betashift
