#include "betashift/json_io.hpp"

#include <limits>

#include "betashift/error.hpp"

namespace betashift {

Json to_json(const BigInt& value) {
  if (value >= std::numeric_limits<std::int64_t>::min() &&
      value <= std::numeric_limits<std::int64_t>::max()) {
    return static_cast<std::int64_t>(value);
  }
  return value.str();
}

Json to_json(const Rational& value) { return value.str(); }

namespace {

const char* sign_text(int sign) { return sign < 0 ? "-" : sign > 0 ? "+" : "0"; }

Json edges_json(const LabeledGraph& g) {
  Json edges = Json::array();
  for (const LabeledEdge& e : g.edges()) {
    edges.push_back({{"src", e.src}, {"dst", e.dst}, {"label", e.label}});
  }
  return edges;
}

BigInt bigint_from_json(const Json& j) {
  if (j.is_number_integer()) return BigInt(j.get<std::int64_t>());
  if (j.is_string()) return BigInt(j.get<std::string>());
  throw Error(ErrorCode::kMalformed, "expected an integer, got " + j.dump());
}

MoveKind move_kind_from_string(const std::string& text) {
  for (MoveKind kind : {MoveKind::kBinarize, MoveKind::kDeleteZero, MoveKind::kInsertZero,
                        MoveKind::kRotateNormalize, MoveKind::kSftCanonical}) {
    if (to_string(kind) == text) return kind;
  }
  throw Error(ErrorCode::kMalformed, "unknown move kind '" + text + "'");
}

}  // namespace

Json to_json(const LabeledGraph& g) {
  return {{"vertices", g.names()}, {"edges", edges_json(g)}};
}

Json to_json(const FiberProductCover& c) {
  Json j = to_json(c.graph);
  j["involution"] = c.involution;
  j["diagonal"] = c.diagonal;
  j["diagonal_only"] = c.diagonal_only;
  return j;
}

Json to_json(const UnlabeledGraph& g) {
  Json edges = Json::array();
  for (const auto& [s, d] : g.edges) edges.push_back({{"src", s}, {"dst", d}});
  Json j{{"vertices", g.names}, {"edges", edges}};
  if (g.involution) j["involution"] = *g.involution;
  return j;
}

Json to_json(const BowenFranks& bf) {
  Json torsion = Json::array();
  for (const BigInt& t : bf.torsion) torsion.push_back(to_json(t));
  return {{"torsion", torsion},
          {"rank", bf.free_rank},
          {"sign", sign_text(bf.det_sign)},
          {"group", bf.group_string()}};
}

Json to_json(const ClosedFormReport& r) {
  Json j{{"S", to_json(r.sums.S)},
         {"N", to_json(r.sums.N)},
         {"bf_fischer", to_json(r.bf_fischer)},
         {"matches", r.matches}};
  if (r.bf_fiber) j["bf_fiber"] = to_json(*r.bf_fiber);
  if (r.expansion_digit_sum) j["expansion_digit_sum"] = to_json(*r.expansion_digit_sum);
  if (!r.mismatches.empty()) j["mismatches"] = r.mismatches;
  return j;
}

Json to_json(const Move& m) {
  Json params = Json::object();
  for (const auto& [key, value] : m.params) params[key] = value;
  return {{"kind", std::string(to_string(m.kind))},
          {"params", params},
          {"before", m.before.to_string()},
          {"after", m.after.to_string()}};
}

Json to_json(const MoveTrace& t) {
  Json moves = Json::array();
  for (const Move& m : t.moves) moves.push_back(to_json(m));
  return moves;
}

Json to_json(const Verdict& v) {
  Json j{{"outcome", std::string(to_string(v.outcome))},
         {"invariants",
          {{"S1", to_json(v.S1)},
           {"S2", to_json(v.S2)},
           {"class1", std::string(to_string(v.class1))},
           {"class2", std::string(to_string(v.class2))}}}};
  if (v.traces) {
    j["traces"] = {to_json(v.traces->first), to_json(v.traces->second)};
    j["common_form"] = v.traces->first.end().to_string();
  }
  if (v.witness) {
    j["witness"] = {{"invariant", v.witness->invariant},
                    {"values", {v.witness->value1, v.witness->value2}},
                    {"background_theory", v.witness->background_theory}};
  }
  if (v.reduced_pair) {
    j["reduced_pair"] = {v.reduced_pair->first.to_string(), v.reduced_pair->second.to_string()};
  }
  return j;
}

Json to_json(const ReductionLog& log) {
  Json steps = Json::array();
  for (const ReductionStep& s : log.steps) {
    Json step{{"op", s.op == ReductionStep::Op::kContract ? "Contract" : "Amalgamate"},
              {"args", s.args},
              {"vertices_after", s.vertices_after},
              {"edges_after", s.edges_after},
              {"bf_after", to_json(s.bf_after)}};
    if (!(s.bf_before == s.bf_after)) step["bf_before"] = to_json(s.bf_before);
    steps.push_back(std::move(step));
  }
  return steps;
}

Json to_json(const ExpansionResult& e) {
  Json status{{"kind", e.status.to_string()}};
  switch (e.status.kind) {
    case ExpansionStatus::Kind::kFinite:
      status = {{"kind", "Finite"}, {"k", e.status.k}};
      break;
    case ExpansionStatus::Kind::kEventuallyPeriodic:
      status = {{"kind", "EventuallyPeriodic"}, {"n", e.status.n}, {"p", e.status.p}};
      break;
    case ExpansionStatus::Kind::kTruncated:
      status = {{"kind", "Truncated"}, {"max_digits", e.status.max_digits}};
      break;
  }
  return {{"digits", e.digits}, {"status", status}};
}

Json to_json(const MultiplicityReport& r) {
  Json witnesses = Json::array();
  for (const MultiplicityWitness& w : r.witnesses) {
    witnesses.push_back({{"word", format_word(w.word)}, {"count", w.count}});
  }
  return {{"max_preimages", r.max_preimages}, {"witnesses", witnesses}};
}

LabeledGraph labeled_graph_from_json(const Json& j) {
  try {
    auto names = j.at("vertices").get<std::vector<std::string>>();
    std::vector<LabeledEdge> edges;
    for (const Json& e : j.at("edges")) {
      edges.push_back({e.at("src").get<VertexId>(), e.at("dst").get<VertexId>(),
                       e.at("label").get<Digit>()});
    }
    const std::size_t count = names.size();
    return LabeledGraph(count, std::move(edges), std::move(names));
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::kMalformed, std::string("graph JSON: ") + e.what());
  }
}

BowenFranks bowen_franks_from_json(const Json& j) {
  try {
    BowenFranks bf;
    for (const Json& t : j.at("torsion")) bf.torsion.push_back(bigint_from_json(t));
    bf.free_rank = j.at("rank").get<std::size_t>();
    std::string sign = j.at("sign").get<std::string>();
    bf.det_sign = sign == "-" ? -1 : sign == "+" ? 1 : 0;
    return bf;
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::kMalformed, std::string("Bowen-Franks JSON: ") + e.what());
  }
}

MoveTrace trace_from_json(const GeneratingSequence& start, const Json& j) {
  try {
    MoveTrace trace{start, {}};
    for (const Json& m : j) {
      std::vector<std::pair<std::string, std::int64_t>> params;
      for (const auto& [key, value] : m.at("params").items()) {
        params.emplace_back(key, value.get<std::int64_t>());
      }
      trace.push(Move{move_kind_from_string(m.at("kind").get<std::string>()), std::move(params),
                      GeneratingSequence::parse(m.at("before").get<std::string>()),
                      GeneratingSequence::parse(m.at("after").get<std::string>())});
    }
    return trace;
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::kMalformed, std::string("trace JSON: ") + e.what());
  }
}

}  // namespace betashift
