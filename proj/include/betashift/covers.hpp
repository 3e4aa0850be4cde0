#pragma once

// Loop graph, right Fischer cover and fiber product cover of a sofic
// beta-shift, given by its generating sequence g = b p^inf.

#include <optional>
#include <vector>

#include "betashift/labeled_graph.hpp"
#include "betashift/sequence.hpp"

namespace betashift {

struct TruncatedLoopGraph {
  LabeledGraph graph;
  // Label of the forward edge out of the last vertex, which leaves the
  // truncation.
  Digit dangling_label = 0;
};

// Vertices v1..v_depth; edges labeled k < g_i return to v1 and the edge
// labeled g_i moves on to v_{i+1}. Throws Error{kDepthTooSmall} if
// depth < n + p.
TruncatedLoopGraph standard_loop_graph(const GeneratingSequence& g, std::size_t depth);

struct FischerCover {
  LabeledGraph graph;
  std::size_t n = 0;
  std::size_t p = 0;
};

// Vertex i - 1 is v_i. The edge labeled g_{n+p} out of v_{n+p} wraps to
// v_{n+1}, or to v1 when g is purely periodic.
FischerCover fischer_cover(const GeneratingSequence& g);

// The Krieger cover of a sofic beta-shift coincides with its Fischer
// cover; this returns fischer_cover(g).
FischerCover krieger_cover(const GeneratingSequence& g);

struct FiberProductCover {
  LabeledGraph graph;
  std::vector<VertexId> involution;
  std::vector<VertexId> diagonal;
  // Pair (u, v) of Fischer vertices behind each vertex.
  std::vector<std::pair<VertexId, VertexId>> pairs;
  // True for periodic g, where only the diagonal survives.
  bool diagonal_only = false;
};

// Maximal essential subgraph of the fiber product of the Fischer cover with
// itself. Diagonal vertices come first in Fischer order, then the
// off-diagonal vertices named v_j' and v_j''.
FiberProductCover fiber_product_cover(const GeneratingSequence& g);

struct MultiplicityWitness {
  Word word;  // greatest rotation of a primitive cyclic word
  std::size_t count = 0;
};

struct MultiplicityReport {
  std::size_t max_preimages = 0;
  std::vector<MultiplicityWitness> witnesses;
};

// For each primitive cyclic word w with |w| <= max_period, counts the
// bi-infinite paths in the Fischer cover labeled w^inf at a fixed phase.
// Throws Error{kPrecondition} if max_period < p.
MultiplicityReport covering_multiplicity(const GeneratingSequence& g, std::size_t max_period);

}  // namespace betashift
