#include "betashift/catalog.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include "betashift/error.hpp"

namespace betashift {

namespace {

// Calls f on every word of the given length over 0..max_digit.
template <typename F>
void for_each_word(std::size_t length, Digit max_digit, F&& f) {
  Word w(length, 0);
  for (;;) {
    f(w);
    std::size_t i = length;
    while (i > 0 && w[i - 1] == max_digit) w[--i] = 0;
    if (i == 0) return;
    ++w[i - 1];
  }
}

}  // namespace

std::vector<GeneratingSequence> enumerate_generating(std::size_t max_pre, std::size_t max_period,
                                                     Digit max_digit) {
  std::map<std::tuple<std::size_t, std::size_t, std::string>, GeneratingSequence> found;
  for (std::size_t n = 0; n <= max_pre; ++n) {
    for (std::size_t p = 1; p <= max_period; ++p) {
      for_each_word(n, max_digit, [&](const Word& pre) {
        for_each_word(p, max_digit, [&](const Word& per) {
          try {
            GeneratingSequence g = validate_generating(EventuallyPeriodicSeq(pre, per));
            found.emplace(std::make_tuple(g.n(), g.p(), g.to_string()), g);
          } catch (const Error&) {
          }
        });
      });
    }
  }
  std::vector<GeneratingSequence> out;
  for (auto& entry : found) out.push_back(entry.second);
  return out;
}

const std::vector<GeneratingSequence>& standard_catalog() {
  static const std::vector<GeneratingSequence> catalog = [] {
    std::vector<GeneratingSequence> out;
    for (const char* text :
         {"(1)", "(2)", "(10)", "(20)", "(21)", "(110)", "(100)", "(1100)", "(210)", "(1110)",
          "1(10)", "11(10)", "111(10)", "1(110)", "11(110)", "1(100)", "2(01)", "21(10)",
          "11(101100)", "1101101(0101100)"}) {
      out.push_back(GeneratingSequence::parse(text));
    }
    return out;
  }();
  return catalog;
}

}  // namespace betashift
