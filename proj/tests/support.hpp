#pragma once

#include <random>
#include <string_view>

#include "betashift/sequence.hpp"

namespace betashift::test {

inline GeneratingSequence G(std::string_view text) { return GeneratingSequence::parse(text); }

inline std::mt19937& rng() {
  static std::mt19937 engine(20260915u);
  return engine;
}

}  // namespace betashift::test

#include <gtest/gtest.h>

#include "betashift/error.hpp"

#define EXPECT_ERROR_CODE(expr, expected_code)                                  \
  do {                                                                          \
    try {                                                                       \
      (void)(expr);                                                             \
      ADD_FAILURE() << #expr " did not throw";                                  \
    } catch (const ::betashift::Error& e_) {                                    \
      EXPECT_EQ(::betashift::to_string(e_.code()),                              \
                ::betashift::to_string(expected_code))                          \
          << e_.what();                                                         \
    }                                                                           \
  } while (0)
