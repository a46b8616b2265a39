#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qmull/word_parser.hpp"

using namespace qmull;

TEST_CASE("tokens") {
  const Split sp{2, 1};
  CHECK(parse_word("", sp).empty());
  CHECK(parse_word("   ", sp).empty());
  CHECK(parse_word("E(1,2,3)", sp) == Word{GenSymbol::root(1, 2, 3)});
  CHECK(parse_word("K(2,-1)", sp) == Word{GenSymbol::kpow(2, 0, -1)});
  CHECK(parse_word("K(2,+1)", sp) == Word{GenSymbol::kpow(2, 0, 1)});
  CHECK(parse_word("K2(1,3,2)", sp) == Word{GenSymbol::kpow(1, 3, 2)});
  CHECK(parse_word("KB(3,-2,1)", sp) == Word{GenSymbol::kbinom(3, 0, -2, 1)});
  CHECK(parse_word("KB2(1,2,0,2)", sp) == Word{GenSymbol::kbinom(1, 2, 0, 2)});
  CHECK(parse_word(" E(1,2,1)  E( 2 , 1 , 1 ) ", sp) ==
        Word{GenSymbol::root(1, 2, 1), GenSymbol::root(2, 1, 1)});
}

TEST_CASE("errors carry a column") {
  const Split sp{2, 1};
  auto col = [&](const std::string& s) {
    try {
      parse_word(s, sp);
    } catch (const WordParseError& e) {
      return static_cast<int>(e.position());
    }
    return -1;
  };
  CHECK(col("E(1,2,1)E(2,1,1)") == 8);
  CHECK(col("E(1,4,1)") >= 0);
  CHECK(col("E(1,1,1)") == 0);
  CHECK(col("E(1,2,0)") == 0);
  CHECK(col("E(2,3,2)") == 0);  // odd root
  CHECK(col("KB(1,0,-1)") == 0);
  CHECK(col("K2(2,2,1)") == 0);
  CHECK(col("X(1,2)") == 0);
  CHECK(col("E(1,2") >= 0);
  CHECK(col("E(1,2,x)") == 6);
  CHECK(col("E(1,2,99999999999)") >= 0);
  CHECK_THROWS_AS(parse_word("E(1,2,1) junk", sp), std::invalid_argument);
  try {
    parse_word("E(1,2,1) Q", sp);
  } catch (const WordParseError& e) {
    CHECK(std::string(e.what()).rfind("column 10:", 0) == 0);
  }
}

TEST_CASE("format and parse round trip") {
  std::mt19937_64 rng(5);
  for (int m = 0; m <= 3; ++m)
    for (int n = 0; m + n <= 4; ++n) {
      if (m + n < 2) continue;
      const Split sp{m, n};
      const int N = m + n;
      for (int k = 0; k < 50; ++k) {
        Word w;
        for (int len = static_cast<int>(rng() % 6); len > 0; --len) {
          const int a = 1 + static_cast<int>(rng() % N);
          int b = 1 + static_cast<int>(rng() % N);
          if (b == a) b = a % N + 1;
          switch (rng() % 5) {
            case 0:
              w.push_back(GenSymbol::root(a, b, sp.parity(a) != sp.parity(b) ? 1 : 1 + static_cast<int>(rng() % 3)));
              break;
            case 1:
              w.push_back(GenSymbol::kpow(a, 0, rng() % 2 ? 1 : -1));
              break;
            case 2:
              w.push_back(GenSymbol::kpow(a, b, static_cast<int>(rng() % 5) - 2 ?: 1));
              break;
            case 3:
              w.push_back(GenSymbol::kbinom(a, 0, static_cast<int>(rng() % 7) - 3, static_cast<int>(rng() % 3)));
              break;
            default:
              w.push_back(GenSymbol::kbinom(a, b, static_cast<int>(rng() % 7) - 3, static_cast<int>(rng() % 3)));
          }
        }
        const std::string s = format_word(w);
        CHECK_MESSAGE(parse_word(s, sp) == w, s);
      }
    }
}
