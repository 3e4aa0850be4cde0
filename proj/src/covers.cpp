#include "betashift/covers.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include "betashift/error.hpp"

namespace betashift {

TruncatedLoopGraph standard_loop_graph(const GeneratingSequence& g, std::size_t depth) {
  if (depth < g.n() + g.p()) {
    throw Error(ErrorCode::kDepthTooSmall, "depth " + std::to_string(depth) +
                                               " is below n + p = " +
                                               std::to_string(g.n() + g.p()));
  }
  std::vector<LabeledEdge> edges;
  for (std::size_t i = 0; i < depth; ++i) {
    Digit gi = g.at(i);
    for (Digit k = 0; k < gi; ++k) edges.push_back({i, 0, k});
    if (i + 1 < depth) edges.push_back({i, i + 1, gi});
  }
  return {LabeledGraph(depth, std::move(edges)), g.at(depth - 1)};
}

FischerCover fischer_cover(const GeneratingSequence& g) {
  const std::size_t n = g.n();
  const std::size_t p = g.p();
  const std::size_t size = n + p;
  std::vector<LabeledEdge> edges;
  for (std::size_t i = 0; i < size; ++i) {
    Digit gi = g.at(i);
    for (Digit k = 0; k < gi; ++k) edges.push_back({i, 0, k});
    VertexId next = i + 1 < size ? i + 1 : n;
    edges.push_back({i, next, gi});
  }
  FischerCover cover{LabeledGraph(size, std::move(edges)), n, p};
  if (!right_resolving_check(cover.graph) || !follower_separated_check(cover.graph)) {
    throw Error(ErrorCode::kPrecondition,
                "Fischer cover of " + g.to_string() + " failed its presentation checks");
  }
  return cover;
}

FischerCover krieger_cover(const GeneratingSequence& g) { return fischer_cover(g); }

FiberProductCover fiber_product_cover(const GeneratingSequence& g) {
  const FischerCover fischer = fischer_cover(g);
  const LabeledGraph& f = fischer.graph;
  const std::size_t m = f.vertex_count();
  auto id = [m](VertexId u, VertexId v) { return u * m + v; };

  std::vector<LabeledEdge> edges;
  for (const LabeledEdge& a : f.edges()) {
    for (const LabeledEdge& b : f.edges()) {
      if (a.label == b.label) edges.push_back({id(a.src, b.src), id(a.dst, b.dst), a.label});
    }
  }

  std::vector<bool> alive(m * m, true);
  for (bool changed = true; changed;) {
    changed = false;
    std::vector<std::size_t> out(m * m), in(m * m);
    for (const LabeledEdge& e : edges) {
      if (alive[e.src] && alive[e.dst]) {
        ++out[e.src];
        ++in[e.dst];
      }
    }
    for (std::size_t v = 0; v < m * m; ++v) {
      if (alive[v] && (out[v] == 0 || in[v] == 0)) {
        alive[v] = false;
        changed = true;
      }
    }
  }

  // Diagonal first, then (period coordinate, primed before double primed).
  std::vector<std::pair<VertexId, VertexId>> order;
  for (VertexId u = 0; u < m; ++u) {
    if (alive[id(u, u)]) order.emplace_back(u, u);
  }
  std::vector<std::tuple<bool, VertexId, VertexId>> off;
  for (VertexId u = 0; u < m; ++u) {
    for (VertexId v = 0; v < m; ++v) {
      if (u != v && alive[id(u, v)]) off.emplace_back(u > v, std::max(u, v), std::min(u, v));
    }
  }
  std::sort(off.begin(), off.end());
  for (auto [swapped, hi, lo] : off) {
    order.push_back(swapped ? std::make_pair(hi, lo) : std::make_pair(lo, hi));
  }

  std::map<VertexId, VertexId> index;
  for (VertexId i = 0; i < order.size(); ++i) index[id(order[i].first, order[i].second)] = i;

  FiberProductCover cover{LabeledGraph(0, {}), {}, {}, order, false};
  std::vector<LabeledEdge> kept;
  for (const LabeledEdge& e : edges) {
    auto s = index.find(e.src);
    auto d = index.find(e.dst);
    if (s != index.end() && d != index.end()) kept.push_back({s->second, d->second, e.label});
  }
  std::sort(kept.begin(), kept.end());

  std::vector<std::string> names;
  std::map<std::string, int> used;
  for (auto [u, v] : order) {
    std::string name = u == v ? f.name(u) : u < v ? f.name(v) + "'" : f.name(u) + "''";
    names.push_back(name);
    ++used[name];
  }
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (used[names[i]] > 1) {
      names[i] = "(" + f.name(order[i].first) + "," + f.name(order[i].second) + ")";
    }
  }

  for (VertexId i = 0; i < order.size(); ++i) {
    auto [u, v] = order[i];
    cover.involution.push_back(index.at(id(v, u)));
    if (u == v) cover.diagonal.push_back(i);
  }
  cover.diagonal_only = cover.diagonal.size() == order.size();
  cover.graph = LabeledGraph(order.size(), std::move(kept), std::move(names));
  return cover;
}

namespace {

Word greatest_rotation(const Word& w) {
  Word best = w;
  Word r = w;
  for (std::size_t i = 1; i < w.size(); ++i) {
    std::rotate(r.begin(), r.begin() + 1, r.end());
    best = std::max(best, r);
  }
  return best;
}

bool is_primitive(const Word& w) {
  const std::size_t n = w.size();
  for (std::size_t d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    bool repeats = true;
    for (std::size_t i = d; i < n && repeats; ++i) repeats = w[i] == w[i - d];
    if (repeats) return false;
  }
  return true;
}

// Vertices lying on a cycle of the partial map "follow w".
std::size_t periodic_points(const LabeledGraph& f, const Word& w) {
  const std::size_t m = f.vertex_count();
  std::map<std::pair<VertexId, Digit>, VertexId> step;
  for (const LabeledEdge& e : f.edges()) step[{e.src, e.label}] = e.dst;
  std::vector<std::optional<VertexId>> image(m);
  for (VertexId v = 0; v < m; ++v) {
    VertexId at = v;
    bool ok = true;
    for (Digit a : w) {
      auto it = step.find({at, a});
      if (it == step.end()) {
        ok = false;
        break;
      }
      at = it->second;
    }
    if (ok) image[v] = at;
  }
  std::size_t count = 0;
  for (VertexId v = 0; v < m; ++v) {
    VertexId at = v;
    for (std::size_t k = 0; k < m; ++k) {
      if (!image[at]) break;
      at = *image[at];
      if (at == v) {
        ++count;
        break;
      }
    }
  }
  return count;
}

}  // namespace

MultiplicityReport covering_multiplicity(const GeneratingSequence& g, std::size_t max_period) {
  if (max_period < g.p()) {
    throw Error(ErrorCode::kPrecondition, "max_period " + std::to_string(max_period) +
                                              " is below the period length " +
                                              std::to_string(g.p()));
  }
  const LabeledGraph f = fischer_cover(g).graph;
  const Digit base = g.max_digit() + 1;
  MultiplicityReport report;
  for (std::size_t len = 1; len <= max_period; ++len) {
    Word w(len, 0);
    for (;;) {
      if (is_primitive(w) && greatest_rotation(w) == w) {
        std::size_t count = periodic_points(f, w);
        if (count > report.max_preimages) {
          report.max_preimages = count;
          report.witnesses.clear();
        }
        if (count > 0 && count == report.max_preimages) report.witnesses.push_back({w, count});
      }
      std::size_t i = len;
      while (i > 0 && w[i - 1] + 1 == base) w[--i] = 0;
      if (i == 0) break;
      ++w[i - 1];
    }
  }
  return report;
}

}  // namespace betashift
