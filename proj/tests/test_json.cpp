#include <gtest/gtest.h>

#include "betashift/catalog.hpp"
#include "betashift/json_io.hpp"
#include "support.hpp"

using namespace betashift;
using betashift::test::G;

TEST(Json, BigIntFallsBackToString) {
  EXPECT_EQ(to_json(BigInt(42)), Json(42));
  BigInt big = BigInt(1) << 80;
  EXPECT_EQ(to_json(big), Json(big.str()));
  EXPECT_EQ(to_json(Rational(3, 4)), Json("3/4"));
}

TEST(Json, GraphRoundTrip) {
  for (const GeneratingSequence& g : standard_catalog()) {
    LabeledGraph f = fischer_cover(g).graph;
    LabeledGraph back = labeled_graph_from_json(Json::parse(to_json(f).dump()));
    EXPECT_TRUE(back.same_edges(f));
    EXPECT_EQ(back.names(), f.names());
  }
}

TEST(Json, BowenFranksRoundTrip) {
  for (const GeneratingSequence& g : standard_catalog()) {
    ClosedFormReport r = verify_closed_forms(g);
    Json j = Json::parse(to_json(r).dump());
    EXPECT_EQ(bowen_franks_from_json(j.at("bf_fischer")), r.bf_fischer);
    EXPECT_EQ(j.at("matches"), true);
    if (r.bf_fiber) {
      EXPECT_EQ(bowen_franks_from_json(j.at("bf_fiber")), *r.bf_fiber);
    }
  }
}

TEST(Json, TraceRoundTrip) {
  GeneratingSequence g = G("1101101(0101100)");
  MoveTrace trace{g, {}};
  trace.push(delete_zero(g));
  trace.push(insert_zero(trace.end(), 5));
  trace.push(insert_zero(trace.end(), 3));
  Json j = to_json(trace);
  ASSERT_EQ(j.size(), 3u);
  EXPECT_EQ(j[0].at("kind"), "DeleteZero");
  EXPECT_EQ(j[1].at("params").at("k"), 5);
  EXPECT_EQ(j[2].at("after"), "11(101100)");
  EXPECT_EQ(trace_from_json(g, Json::parse(j.dump())), trace);
  EXPECT_ERROR_CODE(trace_from_json(g, Json::parse(R"([{"kind":"Nope"}])")), ErrorCode::kMalformed);
}

TEST(Json, VerdictSchema) {
  Json eq = to_json(compare(G("(110)"), G("(20)")));
  EXPECT_EQ(eq.at("outcome"), "Equivalent");
  EXPECT_EQ(eq.at("invariants").at("S1"), 2);
  EXPECT_EQ(eq.at("invariants").at("class2"), "SFT");
  EXPECT_EQ(eq.at("traces").size(), 2u);

  Json unknown = to_json(compare(G("1(110)"), G("11(110)")));
  EXPECT_EQ(unknown.at("reduced_pair"), Json({"1(110)", "11(110)"}));
  EXPECT_FALSE(unknown.contains("traces"));

  Json distinct = to_json(compare(G("11(10)"), G("11(110)")));
  EXPECT_EQ(distinct.at("witness").at("invariant"), "S");
  EXPECT_EQ(distinct.at("witness").at("values"), Json({"1", "2"}));
}

TEST(Json, ReductionLogSchema) {
  Json log = to_json(reduce_fiber_cover(G("11(110)")).log);
  ASSERT_TRUE(log.is_array());
  for (const Json& step : log) {
    EXPECT_TRUE(step.at("op") == "Contract" || step.at("op") == "Amalgamate");
    EXPECT_TRUE(step.contains("args"));
    EXPECT_TRUE(step.contains("vertices_after"));
    EXPECT_TRUE(step.contains("edges_after"));
    EXPECT_EQ(step.at("bf_after").at("group"), "Z/2 + Z^2");
    EXPECT_FALSE(step.contains("bf_before"));
  }
  EXPECT_EQ(log.back().at("vertices_after"), 6);
}

TEST(Json, ExpansionSchema) {
  Json j = to_json(beta_expansion_of_one(AlgebraicNumber::integer(3)));
  EXPECT_EQ(j.at("digits"), Json({3}));
  EXPECT_EQ(j.at("status").at("kind"), "Finite");
  EXPECT_EQ(j.at("status").at("k"), 1);
}

TEST(Json, MalformedGraph) {
  EXPECT_ERROR_CODE(labeled_graph_from_json(Json::parse(R"({"vertices":["a"]})")),
                    ErrorCode::kMalformed);
}
