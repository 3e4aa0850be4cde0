#pragma once

// JSON renderings of the library's results.

#include <json.hpp>

#include "betashift/bowen_franks.hpp"
#include "betashift/covers.hpp"
#include "betashift/decide.hpp"
#include "betashift/expansion.hpp"
#include "betashift/fiber_reduce.hpp"
#include "betashift/moves.hpp"

namespace betashift {

using Json = nlohmann::json;

// A number when it fits in 64 bits, otherwise a decimal string.
Json to_json(const BigInt& value);
Json to_json(const Rational& value);  // "a/b"

Json to_json(const LabeledGraph& g);        // {vertices, edges:[{src,dst,label}]}
Json to_json(const FiberProductCover& c);   // graph fields + involution, diagonal
Json to_json(const UnlabeledGraph& g);      // {vertices, edges:[{src,dst}], involution?}
Json to_json(const BowenFranks& bf);        // {torsion, rank, sign}
Json to_json(const ClosedFormReport& r);    // {S, N, bf_fischer, bf_fiber?, matches}
Json to_json(const Move& m);                // {kind, params, before, after}
Json to_json(const MoveTrace& t);           // [move, ...]
Json to_json(const Verdict& v);             // {outcome, invariants, traces?|witness?|reduced_pair?}
Json to_json(const ReductionLog& log);      // [{op, args, vertices_after, edges_after, bf_after}]
Json to_json(const ExpansionResult& e);     // {digits, status}
Json to_json(const MultiplicityReport& r);  // {max_preimages, witnesses}

// Inverses used to check round trips. Throw Error{kMalformed}.
LabeledGraph labeled_graph_from_json(const Json& j);
BowenFranks bowen_franks_from_json(const Json& j);
MoveTrace trace_from_json(const GeneratingSequence& start, const Json& j);

}  // namespace betashift
