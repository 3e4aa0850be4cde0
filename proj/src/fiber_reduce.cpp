#include "betashift/fiber_reduce.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "betashift/error.hpp"
#include "betashift/moves.hpp"

namespace betashift {

std::size_t UnlabeledGraph::out_degree(VertexId v) const {
  return static_cast<std::size_t>(
      std::count_if(edges.begin(), edges.end(), [v](const auto& e) { return e.first == v; }));
}

std::size_t UnlabeledGraph::in_degree(VertexId v) const {
  return static_cast<std::size_t>(
      std::count_if(edges.begin(), edges.end(), [v](const auto& e) { return e.second == v; }));
}

std::vector<VertexId> UnlabeledGraph::out_targets(VertexId v) const {
  std::vector<VertexId> out;
  for (const auto& [s, d] : edges) {
    if (s == v) out.push_back(d);
  }
  std::sort(out.begin(), out.end());
  return out;
}

UnlabeledGraph underlying_graph(const LabeledGraph& graph) {
  UnlabeledGraph g;
  g.vertex_count = graph.vertex_count();
  for (const LabeledEdge& e : graph.edges()) g.edges.emplace_back(e.src, e.dst);
  g.names = graph.names();
  return g;
}

UnlabeledGraph underlying_graph(const FiberProductCover& cover) {
  UnlabeledGraph g = underlying_graph(cover.graph);
  g.involution = cover.involution;
  return g;
}

IntegerMatrix adjacency_matrix(const UnlabeledGraph& g) {
  IntegerMatrix a(g.vertex_count, g.vertex_count);
  for (const auto& [s, d] : g.edges) a.at(s, d) += 1;
  return a;
}

namespace {

// Drops vertex v, which must have no edges left, and renumbers.
UnlabeledGraph remove_isolated(const UnlabeledGraph& g, VertexId v) {
  auto re = [v](VertexId x) { return x > v ? x - 1 : x; };
  UnlabeledGraph out;
  out.vertex_count = g.vertex_count - 1;
  for (const auto& [s, d] : g.edges) {
    if (s == v || d == v) throw Error(ErrorCode::kPrecondition, "vertex still has edges");
    out.edges.emplace_back(re(s), re(d));
  }
  for (VertexId x = 0; x < g.vertex_count; ++x) {
    if (x != v) out.names.push_back(g.names[x]);
  }
  if (g.involution) {
    std::vector<VertexId> inv;
    for (VertexId x = 0; x < g.vertex_count; ++x) {
      if (x == v) continue;
      if ((*g.involution)[x] == v) {
        throw Error(ErrorCode::kPrecondition, "removed vertex is the image of a kept vertex");
      }
      inv.push_back(re((*g.involution)[x]));
    }
    out.involution = std::move(inv);
  }
  return out;
}

UnlabeledGraph contract_one(const UnlabeledGraph& g, VertexId v) {
  if (v >= g.vertex_count || !contractible(g, v)) {
    throw Error(ErrorCode::kPrecondition,
                "vertex " + std::to_string(v) + " does not have a single in- and out-edge");
  }
  UnlabeledGraph h = g;
  VertexId a = 0, b = 0;
  std::vector<std::pair<VertexId, VertexId>> kept;
  for (const auto& [s, d] : h.edges) {
    if (d == v) {
      a = s;
    } else if (s == v) {
      b = d;
    } else {
      kept.emplace_back(s, d);
    }
  }
  kept.emplace_back(a, b);
  h.edges = std::move(kept);
  return h;
}

// Merges w into u without involution handling; w keeps no edges.
UnlabeledGraph merge_into(const UnlabeledGraph& g, VertexId u, VertexId w) {
  if (u == w || u >= g.vertex_count || w >= g.vertex_count) {
    throw Error(ErrorCode::kPrecondition, "in-amalgamation needs two distinct vertices");
  }
  if (g.out_targets(u) != g.out_targets(w)) {
    throw Error(ErrorCode::kOutNeighborhoodMismatch,
                g.names[u] + " and " + g.names[w] + " emit edges to different vertices");
  }
  UnlabeledGraph h = g;
  h.edges.clear();
  for (const auto& [s, d] : g.edges) {
    if (s == w) continue;
    h.edges.emplace_back(s, d == w ? u : d);
  }
  return h;
}

}  // namespace

bool contractible(const UnlabeledGraph& g, VertexId v) {
  std::size_t in = 0, out = 0;
  for (const auto& [s, d] : g.edges) {
    if (s == v && d == v) return false;
    if (s == v) ++out;
    if (d == v) ++in;
  }
  return in == 1 && out == 1;
}

UnlabeledGraph contract_unit_vertex(const UnlabeledGraph& g, VertexId v) {
  UnlabeledGraph h = contract_one(g, v);
  if (!g.involution || (*g.involution)[v] == v) return remove_isolated(h, v);
  VertexId w = (*g.involution)[v];
  h = contract_one(h, w);
  // Detach v and w from the involution before removing them.
  UnlabeledGraph bare = h;
  std::vector<VertexId> inv = *h.involution;
  inv[v] = v;
  inv[w] = w;
  bare.involution = inv;
  VertexId hi = std::max(v, w), lo = std::min(v, w);
  return remove_isolated(remove_isolated(bare, hi), lo);
}

UnlabeledGraph in_amalgamate(const UnlabeledGraph& g, VertexId u, VertexId w) {
  UnlabeledGraph h = merge_into(g, u, w);
  std::vector<VertexId> drop{w};
  if (h.involution) {
    std::vector<VertexId> inv = *h.involution;
    VertexId iu = inv[u], iw = inv[w];
    if (std::set<VertexId>{iu, iw} == std::set<VertexId>{u, w}) {
      // The pair is its own image; the merged vertex is fixed.
      inv[u] = u;
    } else if (iu == u || iw == w || iu == w || iw == u) {
      throw Error(ErrorCode::kPrecondition, "amalgamation pair is not equivariant");
    } else {
      h = merge_into(h, iu, iw);
      drop.push_back(iw);
      inv[iw] = iw;
    }
    inv[w] = w;
    h.involution = std::move(inv);
  }
  std::sort(drop.rbegin(), drop.rend());
  for (VertexId x : drop) h = remove_isolated(h, x);
  return h;
}

bool ReductionLog::bf_preserved() const {
  return std::all_of(steps.begin(), steps.end(),
                     [](const ReductionStep& s) { return s.bf_before == s.bf_after; });
}

namespace {

std::optional<std::pair<VertexId, VertexId>> amalgamation_pair(const UnlabeledGraph& g) {
  std::set<std::set<std::pair<VertexId, VertexId>>> orbits;
  std::optional<std::pair<VertexId, VertexId>> first;
  for (VertexId u = 0; u < g.vertex_count; ++u) {
    for (VertexId w = u + 1; w < g.vertex_count; ++w) {
      if (g.out_targets(u) != g.out_targets(w)) continue;
      std::set<std::pair<VertexId, VertexId>> orbit{{u, w}};
      if (g.involution) {
        VertexId a = (*g.involution)[u], b = (*g.involution)[w];
        orbit.emplace(std::min(a, b), std::max(a, b));
      }
      orbits.insert(orbit);
      if (!first) first = std::make_pair(u, w);
    }
  }
  if (orbits.size() > 1) {
    std::string pairs;
    for (const auto& orbit : orbits) {
      auto [u, w] = *orbit.begin();
      pairs += " {" + g.names[u] + "," + g.names[w] + "}";
    }
    throw Error(ErrorCode::kAmbiguousAmalgamation, "several amalgamation pairs:" + pairs);
  }
  return first;
}

}  // namespace

ReductionResult reduce_fiber_cover(const GeneratingSequence& g, bool keep_intermediates) {
  if (classify(g) != ShiftClass::kStrictlySofic) {
    throw Error(ErrorCode::kNotStrictlySofic, g.to_string() + " is purely periodic");
  }
  if (!g.is_binary()) {
    throw Error(ErrorCode::kNotBinary, g.to_string() + " is not over {0,1}; binarize first");
  }
  GeneratingSequence canonical = canonical_form(g).form;
  UnlabeledGraph graph = underlying_graph(fiber_product_cover(canonical));
  ReductionResult result{canonical, graph, graph, {}};

  auto record = [&](ReductionStep::Op op, std::vector<VertexId> args, UnlabeledGraph next) {
    ReductionStep step{op, std::move(args), next.vertex_count, next.edges.size(),
                       bowen_franks(adjacency_matrix(result.graph)),
                       bowen_franks(adjacency_matrix(next)), std::nullopt};
    if (keep_intermediates) step.graph_after = next;
    result.log.steps.push_back(std::move(step));
    result.graph = std::move(next);
  };

  for (;;) {
    bool contracted = false;
    for (VertexId v = 0; v < result.graph.vertex_count; ++v) {
      if (!contractible(result.graph, v)) continue;
      std::vector<VertexId> args{v};
      if (result.graph.involution && (*result.graph.involution)[v] != v) {
        args.push_back((*result.graph.involution)[v]);
      }
      record(ReductionStep::Op::kContract, args, contract_unit_vertex(result.graph, v));
      contracted = true;
      break;
    }
    if (contracted) continue;
    auto pair = amalgamation_pair(result.graph);
    if (!pair) break;
    std::vector<VertexId> args{pair->first, pair->second};
    if (result.graph.involution) {
      VertexId a = (*result.graph.involution)[pair->first];
      VertexId b = (*result.graph.involution)[pair->second];
      if (std::minmax(a, b) != std::minmax(pair->first, pair->second)) {
        args.push_back(a);
        args.push_back(b);
      }
    }
    record(ReductionStep::Op::kAmalgamate, args,
           in_amalgamate(result.graph, pair->first, pair->second));
  }
  return result;
}

bool isomorphic(const UnlabeledGraph& a, const UnlabeledGraph& b) {
  if (a.vertex_count != b.vertex_count || a.edges.size() != b.edges.size()) return false;
  const bool with_inv = a.involution && b.involution;
  const std::size_t n = a.vertex_count;
  IntegerMatrix ma = adjacency_matrix(a), mb = adjacency_matrix(b);

  // Joint colour refinement over both graphs.
  auto fixed = [&](const UnlabeledGraph& g, VertexId v) {
    return with_inv && (*g.involution)[v] == v;
  };
  std::vector<std::size_t> ca(n), cb(n);
  {
    std::map<std::tuple<std::size_t, std::size_t, bool>, std::size_t> ids;
    auto colour = [&](const UnlabeledGraph& g, VertexId v) {
      auto key = std::make_tuple(g.out_degree(v), g.in_degree(v), fixed(g, v));
      return ids.emplace(key, ids.size()).first->second;
    };
    for (VertexId v = 0; v < n; ++v) ca[v] = colour(a, v);
    for (VertexId v = 0; v < n; ++v) cb[v] = colour(b, v);
  }
  for (;;) {
    using Sig = std::tuple<std::size_t, std::map<std::pair<std::size_t, BigInt>, int>,
                           std::map<std::pair<std::size_t, BigInt>, int>>;
    std::map<Sig, std::size_t> ids;
    auto refine = [&](const IntegerMatrix& m, const std::vector<std::size_t>& c) {
      std::vector<std::size_t> next(n);
      for (VertexId v = 0; v < n; ++v) {
        Sig sig{c[v], {}, {}};
        for (VertexId x = 0; x < n; ++x) {
          if (m.at(v, x) != 0) ++std::get<1>(sig)[{c[x], m.at(v, x)}];
          if (m.at(x, v) != 0) ++std::get<2>(sig)[{c[x], m.at(x, v)}];
        }
        next[v] = ids.emplace(std::move(sig), ids.size()).first->second;
      }
      return next;
    };
    std::size_t before = std::set<std::size_t>(ca.begin(), ca.end()).size();
    std::vector<std::size_t> na = refine(ma, ca), nb = refine(mb, cb);
    ca = std::move(na);
    cb = std::move(nb);
    if (std::set<std::size_t>(ca.begin(), ca.end()).size() == before) break;
  }
  std::vector<std::size_t> sa = ca, sb = cb;
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  if (sa != sb) return false;

  std::vector<std::optional<VertexId>> map(n);
  std::vector<bool> used(n);
  auto consistent = [&](VertexId x, VertexId y) {
    if (ca[x] != cb[y] || used[y]) return false;
    if (ma.at(x, x) != mb.at(y, y)) return false;
    for (VertexId z = 0; z < n; ++z) {
      if (!map[z]) continue;
      if (ma.at(x, z) != mb.at(y, *map[z]) || ma.at(z, x) != mb.at(*map[z], y)) return false;
    }
    return true;
  };
  std::function<bool(VertexId)> search = [&](VertexId x) -> bool {
    while (x < n && map[x]) ++x;
    if (x == n) return true;
    for (VertexId y = 0; y < n; ++y) {
      if (!consistent(x, y)) continue;
      map[x] = y;
      used[y] = true;
      std::optional<VertexId> paired;
      bool ok = true;
      if (with_inv) {
        VertexId ix = (*a.involution)[x], iy = (*b.involution)[y];
        if (ix == x) {
          ok = iy == y;
        } else if (iy == y) {
          ok = false;
        } else if (map[ix]) {
          ok = *map[ix] == iy;
        } else if (consistent(ix, iy)) {
          map[ix] = iy;
          used[iy] = true;
          paired = ix;
        } else {
          ok = false;
        }
      }
      if (ok && search(x + 1)) return true;
      if (paired) {
        used[*map[*paired]] = false;
        map[*paired].reset();
      }
      map[x].reset();
      used[y] = false;
    }
    return false;
  };
  return search(0);
}

EquivariantReport equivariant_fiber_compare(const GeneratingSequence& g1,
                                            const GeneratingSequence& g2) {
  for (const GeneratingSequence* g : {&g1, &g2}) {
    if (classify(*g) != ShiftClass::kStrictlySofic) {
      throw Error(ErrorCode::kNotStrictlySofic, g->to_string() + " is purely periodic");
    }
  }
  auto binary = [](const GeneratingSequence& g) { return g.is_binary() ? g : binarize(g).after; };
  EquivariantReport report;
  report.S1 = period_sum(g1).S;
  report.S2 = period_sum(g2).S;
  report.equivalent = report.S1 == report.S2;
  report.reduced_isomorphic =
      isomorphic(reduce_fiber_cover(binary(g1)).graph, reduce_fiber_cover(binary(g2)).graph);
  return report;
}

std::string to_dot(const UnlabeledGraph& g, const std::string& graph_name) {
  std::ostringstream out;
  out << "digraph \"" << graph_name << "\" {\n";
  for (VertexId v = 0; v < g.vertex_count; ++v) {
    out << "  n" << v << " [label=\"" << g.names[v] << "\"];\n";
  }
  for (const auto& [s, d] : g.edges) out << "  n" << s << " -> n" << d << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace betashift
