#include <gtest/gtest.h>

#include <random>
#include <set>

#include "oracles.hpp"
#include "surfcls/cellcomplex.hpp"
#include "surfcls/error.hpp"
#include "surfcls/rewrite.hpp"

using namespace surfcls;

namespace {

CellComplex K(std::vector<std::pair<std::string, std::string>> f) {
  std::vector<Face> v;
  for (auto& [n, w] : f) v.push_back({n, parse_word(w)});
  return CellComplex::build(v);
}

CellComplex fig1() { return K({{"A", "a b c"}, {"B", "b e d'"}, {"C", "a d f'"}}); }

std::set<std::string> succ_set(const CellComplex& k, const char* sym) {
  std::set<std::string> out;
  EdgeSym s = parse_word(sym)[0];
  auto all = successors(k);
  for (const auto& x : all.at(s)) out.insert(format_word(Word{x}));
  return out;
}

ErrorCode build_error(std::vector<std::pair<std::string, std::string>> f) {
  try {
    K(f);
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::IoError;  // sentinel: no error
}

}  // namespace

TEST(CellComplex, BuildValid) {
  EXPECT_NO_THROW(K({{"A", "a b a' b'"}}));
  CellComplex k = fig1();
  EXPECT_EQ(k.faces().size(), 3u);
  EXPECT_EQ(k.edges().size(), 6u);
  EXPECT_TRUE(k.is_inner_edge("a"));
  EXPECT_TRUE(k.is_border_edge("c"));
  EXPECT_EQ(k.border_edge_count(), 3u);
}

TEST(CellComplex, BuildErrors) {
  EXPECT_EQ(build_error({{"A", "a a a"}}), ErrorCode::EdgeMultiplicity);
  EXPECT_EQ(build_error({}), ErrorCode::EmptyFaceSet);
  EXPECT_EQ(build_error({{"A", "a"}, {"A", "a"}}), ErrorCode::DuplicateFace);
  EXPECT_EQ(build_error({{"A", "a b"}, {"B", "c d"}}), ErrorCode::Disconnected);
  try {
    K({{"A", "a a a"}});
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("'a'"), std::string::npos);
    EXPECT_NE(std::string(e.what()).find("3"), std::string::npos);
  }
  try {
    K({{"A", "a b"}, {"B", "c d"}, {"C", "c"}});
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("{A}"), std::string::npos) << e.what();
    EXPECT_NE(std::string(e.what()).find("B,C"), std::string::npos) << e.what();
  }
}

TEST(CellComplex, Successors) {
  CellComplex k = fig1();
  EXPECT_EQ(succ_set(k, "a"), (std::set<std::string>{"b", "d"}));
  CellComplex t = K({{"A", "a b a' b'"}});
  EXPECT_EQ(succ_set(t, "a"), (std::set<std::string>{"b", "b'"}));
  CellComplex s = K({{"A", "a a'"}});
  EXPECT_EQ(successors(s).at(parse_word("a")[0]).size(), 2u);
  EXPECT_EQ(succ_set(s, "a"), (std::set<std::string>{"a'"}));
}

TEST(CellComplex, Vertices) {
  auto vs = vertices(fig1());
  ASSERT_EQ(vs.size(), 4u);
  std::multiset<std::string> inner, border;
  for (const auto& v : vs) {
    std::set<std::string> m;
    for (const auto& s : v.members) m.insert(format_word(Word{s}));
    std::string key;
    for (const auto& x : m) key += x + " ";
    (v.kind == VertexKind::Inner ? inner : border).insert(key);
  }
  EXPECT_EQ(inner, (std::multiset<std::string>{"a b' d' "}));
  EXPECT_EQ(border, (std::multiset<std::string>{"d e f ", "b c' e' ", "a' c f' "}));

  auto tv = vertices(K({{"A", "a b a' b'"}}));
  ASSERT_EQ(tv.size(), 1u);
  EXPECT_EQ(tv[0].kind, VertexKind::Inner);
  EXPECT_EQ(tv[0].members.size(), 4u);

  auto nv = vertices(K({{"A", ""}}));
  ASSERT_EQ(nv.size(), 1u);
  EXPECT_EQ(nv[0].kind, VertexKind::Null);
  EXPECT_EQ(format_vertex(nv[0]), "null");
}

TEST(CellComplex, InnerVertexSuccessorProperty) {
  // every member of an inner cycle has the inverses of both neighbours as successors
  for (auto k : {fig1(), K({{"A", "a b a' b'"}}), K({{"A", "a b c"}, {"B", "c' b' a'"}})}) {
    auto succ = successors(k);
    for (const auto& v : vertices(k)) {
      if (v.kind != VertexKind::Inner) continue;
      std::size_t n = v.members.size();
      for (std::size_t i = 0; i < n; ++i) {
        std::multiset<EdgeSym> want{v.members[(i + n - 1) % n].inverse(), v.members[(i + 1) % n].inverse()};
        std::multiset<EdgeSym> got(succ.at(v.members[i]).begin(), succ.at(v.members[i]).end());
        if (n == 1) want = {v.members[0].inverse(), v.members[0].inverse()};
        EXPECT_EQ(got, want);
      }
    }
  }
}

TEST(CellComplex, Euler) {
  EXPECT_EQ(euler_characteristic(K({{"A", "a b a' b'"}})), 0);
  EXPECT_EQ(euler_characteristic(K({{"A", ""}})), 2);
  EXPECT_EQ(euler_characteristic(fig1()), 1);
}

TEST(CellComplex, Contours) {
  auto c = contours(fig1());
  ASSERT_EQ(c.size(), 1u);
  EXPECT_EQ(c[0].edges.size(), 3u);
  EXPECT_EQ(format_word(Word(c[0].edges)), "c f e'");
  EXPECT_TRUE(contours(K({{"A", "a b a' b'"}})).empty());
  EXPECT_EQ(contours(K({{"A", "a b a c"}})).size(), 1u);
  EXPECT_EQ(contours(K({{"A", "a b a' c"}})).size(), 2u);
}

TEST(CellComplex, ContourConsecutiveProperty) {
  // a_i and a_{i+1}' share a border vertex
  for (auto k : {fig1(), K({{"A", "a b a' c"}}), K({{"A", "a b c d e"}, {"B", "e' f"}})}) {
    SlotGraph g(k);
    for (const auto& c : contours(k)) {
      std::size_t n = c.edges.size();
      for (std::size_t i = 0; i < n; ++i) {
        std::size_t v = g.vertex_of(c.edges[i]);
        EXPECT_EQ(v, g.vertex_of(c.edges[(i + 1) % n].inverse()));
        EXPECT_EQ(g.vertices()[v].kind, VertexKind::Border);
      }
    }
  }
}

TEST(CellComplex, Orientability) {
  EXPECT_TRUE(is_orientable(K({{"A", "a b a' b'"}})));
  EXPECT_FALSE(is_orientable(K({{"A", "a a"}})));
  EXPECT_TRUE(is_orientable(K({{"A", "a b c"}})));
  EXPECT_TRUE(is_orientable(fig1()));
}

TEST(CellComplex, OrientabilityBruteForceOracle) {
  std::mt19937_64 rng(11);
  int checked = 0;
  for (int i = 0; i < 120; ++i) {
    NormalForm f{i % 2 ? NormalKind::TypeII : NormalKind::TypeI, 1 + i % 3, i % 3};
    CellComplex k = scramble(canonical_complex(f), rng(), 25);
    if (k.faces().size() > 14) continue;
    EXPECT_EQ(is_orientable(k), oracle::orientable_brute(k));
    ++checked;
  }
  EXPECT_GT(checked, 60);
}

TEST(CellComplex, InvariantReport) {
  auto t = invariant_report(K({{"A", "a b a' b'"}}));
  EXPECT_TRUE(t.orientable);
  EXPECT_EQ(t.num_contours, 0u);
  EXPECT_EQ(t.euler, 0);
  auto kb = invariant_report(K({{"A", "a b a b'"}}));
  EXPECT_FALSE(kb.orientable);
  EXPECT_EQ(kb.euler, 0);
  auto pp = invariant_report(K({{"A", "a a"}}));
  EXPECT_FALSE(pp.orientable);
  EXPECT_EQ(pp.num_contours, 0u);
  EXPECT_EQ(pp.euler, 1);
  EXPECT_EQ(pp.n0 - pp.n1 + pp.n2, 1u);
}

TEST(CellComplex, SameComplex) {
  EXPECT_TRUE(same_complex(K({{"A", "a b c"}}), K({{"A", "c' b' a'"}})));
  EXPECT_TRUE(same_complex(K({{"A", "a b c"}}), K({{"A", "b c a"}})));
  EXPECT_FALSE(same_complex(K({{"A", "a b c"}}), K({{"A", "a c b"}})));
}
