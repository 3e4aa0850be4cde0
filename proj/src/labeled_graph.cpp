#include "betashift/labeled_graph.hpp"

#include <algorithm>
#include <sstream>

#include "betashift/error.hpp"

namespace betashift {

LabeledGraph::LabeledGraph(std::size_t vertex_count, std::vector<LabeledEdge> edges,
                           std::vector<std::string> names)
    : vertex_count_(vertex_count), edges_(std::move(edges)), names_(std::move(names)) {
  for (const LabeledEdge& e : edges_) {
    if (e.src >= vertex_count_ || e.dst >= vertex_count_) {
      throw Error(ErrorCode::kPrecondition, "edge endpoint out of range");
    }
  }
  if (names_.empty()) {
    for (std::size_t v = 0; v < vertex_count_; ++v) names_.push_back("v" + std::to_string(v + 1));
  } else if (names_.size() != vertex_count_) {
    throw Error(ErrorCode::kPrecondition, "vertex name count does not match vertex count");
  }
}

std::size_t LabeledGraph::out_degree(VertexId v) const {
  return static_cast<std::size_t>(
      std::count_if(edges_.begin(), edges_.end(), [v](const LabeledEdge& e) { return e.src == v; }));
}

std::size_t LabeledGraph::in_degree(VertexId v) const {
  return static_cast<std::size_t>(
      std::count_if(edges_.begin(), edges_.end(), [v](const LabeledEdge& e) { return e.dst == v; }));
}

std::vector<std::size_t> LabeledGraph::out_edges(VertexId v) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    if (edges_[i].src == v) out.push_back(i);
  }
  return out;
}

bool LabeledGraph::is_essential() const {
  std::vector<bool> emits(vertex_count_), receives(vertex_count_);
  for (const LabeledEdge& e : edges_) {
    emits[e.src] = true;
    receives[e.dst] = true;
  }
  for (std::size_t v = 0; v < vertex_count_; ++v) {
    if (!emits[v] || !receives[v]) return false;
  }
  return true;
}

bool LabeledGraph::same_edges(const LabeledGraph& other) const {
  if (vertex_count_ != other.vertex_count_) return false;
  std::vector<LabeledEdge> a = edges_, b = other.edges_;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

bool right_resolving_check(const LabeledGraph& g) {
  std::set<std::pair<VertexId, Digit>> seen;
  for (const LabeledEdge& e : g.edges()) {
    if (!seen.emplace(e.src, e.label).second) return false;
  }
  return true;
}

bool follower_separated_check(const LabeledGraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::size_t> cls(n, 0);
  std::size_t class_count = n == 0 ? 0 : 1;
  for (;;) {
    std::map<std::pair<std::size_t, std::set<std::pair<Digit, std::size_t>>>, std::size_t> ids;
    std::vector<std::size_t> next(n);
    for (VertexId v = 0; v < n; ++v) {
      std::set<std::pair<Digit, std::size_t>> sig;
      for (std::size_t i : g.out_edges(v)) sig.emplace(g.edges()[i].label, cls[g.edges()[i].dst]);
      auto key = std::make_pair(cls[v], std::move(sig));
      next[v] = ids.emplace(std::move(key), ids.size()).first->second;
    }
    cls = std::move(next);
    if (ids.size() == class_count) break;
    class_count = ids.size();
  }
  return class_count == n;
}

std::set<Word> path_language(const LabeledGraph& g, std::size_t length) {
  // word -> set of terminal vertices
  std::map<Word, std::set<VertexId>> frontier;
  std::set<VertexId> all;
  for (VertexId v = 0; v < g.vertex_count(); ++v) all.insert(v);
  frontier[Word{}] = all;
  for (std::size_t step = 0; step < length; ++step) {
    std::map<Word, std::set<VertexId>> next;
    for (const auto& [word, ends] : frontier) {
      for (const LabeledEdge& e : g.edges()) {
        if (!ends.count(e.src)) continue;
        Word w = word;
        w.push_back(e.label);
        next[std::move(w)].insert(e.dst);
      }
    }
    frontier = std::move(next);
  }
  std::set<Word> out;
  for (auto& entry : frontier) out.insert(entry.first);
  return out;
}

std::vector<std::vector<Word>> symbolic_adjacency(const LabeledGraph& g) {
  std::vector<std::vector<Word>> m(g.vertex_count(), std::vector<Word>(g.vertex_count()));
  for (const LabeledEdge& e : g.edges()) m[e.src][e.dst].push_back(e.label);
  for (auto& row : m) {
    for (Word& entry : row) std::sort(entry.begin(), entry.end());
  }
  return m;
}

std::vector<std::string> format_symbolic_adjacency(const LabeledGraph& g) {
  std::vector<std::string> rows;
  for (const auto& row : symbolic_adjacency(g)) {
    std::string text = "(";
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j > 0) text += " | ";
      if (row[j].empty()) {
        text += ".";
        continue;
      }
      for (std::size_t k = 0; k < row[j].size(); ++k) {
        if (k > 0) text += "+";
        text += format_word(std::span<const Digit>(&row[j][k], 1));
      }
    }
    rows.push_back(text + ")");
  }
  return rows;
}

std::string to_dot(const LabeledGraph& g, const std::string& graph_name) {
  std::ostringstream out;
  out << "digraph \"" << graph_name << "\" {\n";
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    out << "  n" << v << " [label=\"" << g.name(v) << "\"];\n";
  }
  for (const LabeledEdge& e : g.edges()) {
    out << "  n" << e.src << " -> n" << e.dst << " [label=\"" << e.label << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace betashift
