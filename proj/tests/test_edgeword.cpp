#include <gtest/gtest.h>

#include <random>

#include "surfcls/edgeword.hpp"
#include "surfcls/error.hpp"

using namespace surfcls;

namespace {

EdgeSym P(const char* n) { return EdgeSym(n); }
EdgeSym M(const char* n) { return EdgeSym(n, Sign::Minus); }

Word random_word(std::mt19937_64& rng) {
  static const char* names[] = {"a", "b", "c", "x1", "y_2"};
  std::vector<EdgeSym> v;
  std::size_t n = rng() % 8;
  for (std::size_t i = 0; i < n; ++i) v.emplace_back(names[rng() % 5], rng() % 2 ? Sign::Plus : Sign::Minus);
  return Word(v);
}

}  // namespace

TEST(EdgeWord, ParseBasic) {
  EXPECT_EQ(parse_word("a b a' b'"), (Word{P("a"), P("b"), M("a"), M("b")}));
  EXPECT_TRUE(parse_word("").empty());
  EXPECT_EQ(parse_word("a1 a1"), (Word{P("a1"), P("a1")}));
  EXPECT_EQ(parse_word("a # comment b\n c'"), (Word{P("a"), M("c")}));
}

TEST(EdgeWord, ParseErrors) {
  for (const char* bad : {"'", "a ''", "1a", "a-b", "_x", "a b$"}) {
    try {
      parse_word(bad);
      ADD_FAILURE() << bad;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::MalformedToken) << bad;
    }
  }
  EXPECT_NO_THROW(parse_word("_x", true));
  try {
    parse_word("a b ?");
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("position 3"), std::string::npos);
  }
}

TEST(EdgeWord, Inverse) {
  EXPECT_EQ(inverse_word(Word{P("a"), P("b"), P("c")}), (Word{M("c"), M("b"), M("a")}));
  EXPECT_TRUE(inverse_word(Word{}).empty());
  std::mt19937_64 rng(1);
  for (int i = 0; i < 200; ++i) {
    Word w = random_word(rng);
    EXPECT_EQ(inverse_word(inverse_word(w)), w);
  }
  EXPECT_EQ(P("a").inverse().inverse(), P("a"));
}

TEST(EdgeWord, CyclicEqual) {
  Word abc{P("a"), P("b"), P("c")};
  EXPECT_TRUE(cyclic_equal(abc, Word{P("b"), P("c"), P("a")}));
  EXPECT_FALSE(cyclic_equal(abc, Word{P("c"), P("b"), P("a")}));
  EXPECT_TRUE(cyclic_equal(Word{}, Word{}));
  EXPECT_FALSE(cyclic_equal(abc, Word{P("a"), P("b")}));
}

TEST(EdgeWord, CyclicCanonical) {
  EXPECT_EQ(cyclic_canonical(Word{P("b"), P("a"), P("c")}), (Word{P("a"), P("c"), P("b")}));
  EXPECT_EQ(cyclic_canonical(Word{P("a")}), Word{P("a")});
  EXPECT_EQ(cyclic_canonical(Word{M("a"), P("a")}), (Word{P("a"), M("a")}));
  std::mt19937_64 rng(2);
  for (int i = 0; i < 200; ++i) {
    Word w = random_word(rng);
    if (w.empty()) continue;
    Word c = cyclic_canonical(w);
    EXPECT_TRUE(cyclic_equal(c, w));
    for (std::size_t k = 0; k < w.size(); ++k) EXPECT_LE(c, rotate(w, static_cast<std::ptrdiff_t>(k)));
    EXPECT_EQ(cyclic_canonical(rotate(w, 3)), c);
  }
}

TEST(EdgeWord, FormatRoundTrip) {
  EXPECT_EQ(format_word(Word{P("a"), M("b")}), "a b'");
  EXPECT_EQ(format_word(Word{}), "");
  std::mt19937_64 rng(3);
  for (int i = 0; i < 200; ++i) {
    Word w = random_word(rng);
    EXPECT_EQ(parse_word(format_word(w)), w);
  }
}

TEST(EdgeWord, SymbolOrder) {
  EXPECT_LT(P("a"), M("a"));
  EXPECT_LT(M("a"), P("b"));
  EXPECT_THROW(EdgeSym("1x"), Error);
}

TEST(EdgeWord, RotateSlice) {
  Word w = parse_word("a b c d");
  EXPECT_EQ(rotate(w, 1), parse_word("b c d a"));
  EXPECT_EQ(rotate(w, -1), parse_word("d a b c"));
  EXPECT_EQ(slice(w, 1, 3), parse_word("b c"));
  EXPECT_EQ(w.at_cyclic(-1), P("d"));
}
