#pragma once

// Finite directed multigraphs with digit labels.

#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "betashift/sequence.hpp"

namespace betashift {

using VertexId = std::size_t;

struct LabeledEdge {
  VertexId src = 0;
  VertexId dst = 0;
  Digit label = 0;

  auto operator<=>(const LabeledEdge&) const = default;
};

class LabeledGraph {
 public:
  // Names default to v1, v2, ... Throws Error{kPrecondition} on an edge
  // endpoint out of range or a name list of the wrong size.
  LabeledGraph(std::size_t vertex_count, std::vector<LabeledEdge> edges,
               std::vector<std::string> names = {});

  std::size_t vertex_count() const { return vertex_count_; }
  const std::vector<LabeledEdge>& edges() const { return edges_; }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(VertexId v) const { return names_[v]; }

  std::size_t out_degree(VertexId v) const;
  std::size_t in_degree(VertexId v) const;
  // Indices into edges(), in edge order.
  std::vector<std::size_t> out_edges(VertexId v) const;

  // Every vertex emits and receives at least one edge.
  bool is_essential() const;

  // Edge sets compared as sorted multisets; names are ignored.
  bool same_edges(const LabeledGraph& other) const;

 private:
  std::size_t vertex_count_;
  std::vector<LabeledEdge> edges_;
  std::vector<std::string> names_;
};

bool right_resolving_check(const LabeledGraph& g);

// Moore refinement on (label, target class) signatures; true iff it ends
// with singleton classes.
bool follower_separated_check(const LabeledGraph& g);

// Label words of all paths with exactly length edges.
std::set<Word> path_language(const LabeledGraph& g, std::size_t length);

// entry[i][j] = sorted labels of edges i -> j.
std::vector<std::vector<Word>> symbolic_adjacency(const LabeledGraph& g);

// Rows like "(0 | 1 | .)", labels of one entry joined by '+'.
std::vector<std::string> format_symbolic_adjacency(const LabeledGraph& g);

std::string to_dot(const LabeledGraph& g, const std::string& graph_name = "G");

}  // namespace betashift
