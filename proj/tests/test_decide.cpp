#include <gtest/gtest.h>

#include "betashift/bowen_franks.hpp"
#include "betashift/catalog.hpp"
#include "betashift/decide.hpp"
#include "support.hpp"

using namespace betashift;
using betashift::test::G;

TEST(Compare, Pins) {
  Verdict a = compare(G("(110)"), G("(20)"));
  EXPECT_EQ(a.outcome, Outcome::kEquivalent);
  ASSERT_TRUE(a.traces.has_value());
  EXPECT_EQ(replay(a.traces->first), replay(a.traces->second));
  EXPECT_EQ(a.traces->first.end().to_string(), "(110)");

  Verdict b = compare(G("1(110)"), G("11(110)"));
  EXPECT_EQ(b.outcome, Outcome::kUnknown);
  ASSERT_TRUE(b.reduced_pair.has_value());
  EXPECT_EQ(b.reduced_pair->first.to_string(), "1(110)");
  EXPECT_EQ(b.reduced_pair->second.to_string(), "11(110)");

  Verdict c = compare(G("11(10)"), G("11(110)"));
  EXPECT_EQ(c.outcome, Outcome::kDistinct);
  ASSERT_TRUE(c.witness.has_value());
  EXPECT_EQ(c.witness->invariant, "S");
  EXPECT_EQ(c.witness->value1, "1");
  EXPECT_EQ(c.witness->value2, "2");
  EXPECT_FALSE(c.witness->background_theory);
}

TEST(Compare, ClassWitness) {
  Verdict v = compare(G("(10)"), G("1(10)"));
  EXPECT_EQ(v.outcome, Outcome::kDistinct);
  EXPECT_EQ(v.witness->invariant, "class");
  EXPECT_TRUE(v.witness->background_theory);
}

TEST(Compare, StrictlySoficEquivalent) {
  Verdict v = compare(G("11(10)"), G("1(10)"));
  EXPECT_EQ(v.outcome, Outcome::kEquivalent);
  EXPECT_EQ(replay(v.traces->first), replay(v.traces->second));
  Verdict w = compare(G("1101101(0101100)"), G("11111(1011000)"));
  EXPECT_EQ(w.outcome, Outcome::kEquivalent);
  EXPECT_EQ(w.traces->first.end().to_string(), "11(1011000)");
}

// Rotations alone cannot change the period length, so pairs joined only
// through delete_zero stay undecided.
TEST(Compare, RotationOnlyCanonicalFormsStayUnknown) {
  Verdict v = compare(G("1101101(0101100)"), G("11(101100)"));
  EXPECT_EQ(v.outcome, Outcome::kUnknown);
  EXPECT_EQ(v.reduced_pair->first.to_string(), "11(1011000)");
  EXPECT_EQ(v.reduced_pair->second.to_string(), "11(101100)");
  Verdict w = compare(G("2(01)"), G("1(10)"));
  EXPECT_EQ(w.outcome, Outcome::kUnknown);
  EXPECT_EQ(w.reduced_pair->first.to_string(), "1(100)");
}

TEST(Compare, NonBinaryInputs) {
  EXPECT_EQ(compare(G("(2)"), G("(110)")).outcome, Outcome::kEquivalent);
  EXPECT_EQ(compare(G("21(10)"), G("1(100)")).outcome, Outcome::kEquivalent);
}

TEST(Compare, CatalogPairProperties) {
  std::vector<GeneratingSequence> all = enumerate_generating(3, 3, 1);
  for (const GeneratingSequence& a : all) {
    for (const GeneratingSequence& b : all) {
      Verdict v = compare(a, b);
      Verdict w = compare(b, a);
      ASSERT_EQ(v.outcome, w.outcome) << a.to_string() << " " << b.to_string();
      ASSERT_EQ(v.S1, period_sum(a).S);
      switch (v.outcome) {
        case Outcome::kEquivalent:
          ASSERT_EQ(v.S1, v.S2);
          ASSERT_EQ(v.class1, v.class2);
          ASSERT_EQ(replay(v.traces->first), replay(v.traces->second));
          ASSERT_EQ(v.traces->first.start, a);
          ASSERT_EQ(v.traces->second.start, b);
          break;
        case Outcome::kDistinct:
          ASSERT_NE(v.witness->value1, v.witness->value2);
          ASSERT_EQ(v.witness->value1, w.witness->value2);
          break;
        case Outcome::kUnknown:
          ASSERT_EQ(v.S1, v.S2);
          ASSERT_EQ(v.class1, ShiftClass::kStrictlySofic);
          ASSERT_NE(v.reduced_pair->first, v.reduced_pair->second);
          break;
      }
      if (a == b) {
        ASSERT_EQ(v.outcome, Outcome::kEquivalent);
      }
    }
  }
}

TEST(FullShiftClass, Examples) {
  EXPECT_EQ(full_shift_class(G("(10)")), 2);
  EXPECT_EQ(full_shift_class(G("(1)")), 2);
  EXPECT_EQ(full_shift_class(G("(110)")), 3);
  EXPECT_ERROR_CODE(full_shift_class(G("1(10)")), ErrorCode::kNotSft);
}
