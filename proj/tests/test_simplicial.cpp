#include <gtest/gtest.h>

#include <random>

#include "figures.hpp"
#include "surfcls/classify.hpp"
#include "surfcls/error.hpp"
#include "surfcls/simplicial.hpp"

using namespace surfcls;

namespace {

FgAbelianGroup Z(std::size_t r, std::vector<std::int64_t> t = {}) { return FgAbelianGroup{r, t}; }

CellComplex K1(const char* w) { return CellComplex::build({{"A", parse_word(w)}}); }

bool has_prefix(const SurfaceReport& r, const char* p) {
  for (const auto& v : r.violations)
    if (v.rfind(p, 0) == 0) return true;
  return false;
}

}  // namespace

TEST(Simplicial, Build) {
  auto t = SimplicialComplex2::build(figs::tetrahedron());
  EXPECT_EQ(t.vertices().size(), 4u);
  EXPECT_EQ(t.edges().size(), 6u);
  EXPECT_EQ(t.triangles().size(), 4u);
  auto one = SimplicialComplex2::build({{"a", "b", "c"}});
  EXPECT_EQ(one.vertices().size(), 3u);
  EXPECT_EQ(one.edges().size(), 3u);
  try {
    SimplicialComplex2::build({{"a", "a", "b"}});
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DegenerateTriangle);
  }
  // order and duplicates do not matter
  auto d = SimplicialComplex2::build({{"c", "b", "a"}, {"a", "b", "c"}});
  EXPECT_EQ(d.triangles().size(), 1u);
  EXPECT_EQ(d.triangles()[0], (STriangle{"a", "b", "c"}));
}

TEST(Simplicial, ValidateClosed) {
  EXPECT_TRUE(validate_closed_surface(SimplicialComplex2::build(figs::tetrahedron())).ok);
  auto tor = SimplicialComplex2::build(figs::torus());
  EXPECT_TRUE(validate_closed_surface(tor).ok);
  EXPECT_EQ(tor.vertices().size(), 9u);
  EXPECT_EQ(tor.edges().size(), 27u);
  EXPECT_EQ(tor.triangles().size(), 18u);
  EXPECT_TRUE(validate_closed_surface(SimplicialComplex2::build(figs::projective_plane())).ok);
  EXPECT_TRUE(validate_closed_surface(SimplicialComplex2::build(figs::klein_bottle())).ok);
  // the literal drawing repeats a triangle, which collapses in a set of simplices
  auto drawn = SimplicialComplex2::build(figs::projective_plane_as_drawn());
  EXPECT_EQ(drawn.triangles().size(), 17u);
  EXPECT_TRUE(has_prefix(validate_closed_surface(drawn), "D1"));
  auto r = validate_closed_surface(SimplicialComplex2::build({{"a", "b", "c"}}));
  EXPECT_FALSE(r.ok);
  EXPECT_TRUE(has_prefix(r, "D1"));
}

TEST(Simplicial, ValidateBordered) {
  EXPECT_TRUE(validate_bordered_surface(SimplicialComplex2::build({{"a", "b", "c"}})).ok);
  auto t = figs::tetrahedron();
  t.pop_back();
  auto disk = SimplicialComplex2::build(t);
  EXPECT_TRUE(validate_bordered_surface(disk).ok);
  EXPECT_FALSE(validate_closed_surface(disk).ok);
  auto bow = validate_bordered_surface(SimplicialComplex2::build({{"a", "b", "c"}, {"a", "d", "e"}}));
  EXPECT_FALSE(bow.ok);
  EXPECT_FALSE(bow.violations.empty());
  // three triangles on one edge
  auto fin = validate_bordered_surface(SimplicialComplex2::build({{"a", "b", "c"}, {"a", "b", "d"}, {"a", "b", "e"}}));
  EXPECT_FALSE(fin.ok);
  // disconnected
  auto two = validate_bordered_surface(SimplicialComplex2::build({{"a", "b", "c"}, {"d", "e", "f"}}));
  EXPECT_FALSE(two.ok);
}

TEST(Simplicial, BoundaryMatrices) {
  auto c = boundary_matrices(SimplicialComplex2::build({{"a", "b", "c"}}));
  ASSERT_EQ(c.basis1, (std::vector<SEdge>{{"a", "b"}, {"a", "c"}, {"b", "c"}}));
  // column over (ab, ac, bc) is (+1, -1, +1)
  EXPECT_EQ(c.d2(0, 0), 1);
  EXPECT_EQ(c.d2(1, 0), -1);
  EXPECT_EQ(c.d2(2, 0), 1);
  // edge ab: -1 at a, +1 at b
  EXPECT_EQ(c.d1(0, 0), -1);
  EXPECT_EQ(c.d1(1, 0), 1);
  EXPECT_EQ(c.d1(2, 0), 0);
  for (auto tri : {figs::torus(), figs::projective_plane(), figs::klein_bottle(), figs::tetrahedron()}) {
    auto d = boundary_matrices(SimplicialComplex2::build(tri));
    EXPECT_TRUE(multiply(d.d1, d.d2).is_zero());
  }
}

TEST(Simplicial, BoundarySquaredRandom) {
  std::mt19937_64 rng(31);
  const char* names[] = {"p", "q", "r", "s", "t", "u", "v"};
  for (int i = 0; i < 100; ++i) {
    std::vector<STriangle> tris;
    std::size_t n = 1 + rng() % 10;
    while (tris.size() < n) {
      std::size_t a = rng() % 7, b = rng() % 7, c = rng() % 7;
      if (a == b || b == c || a == c) continue;
      tris.push_back({names[a], names[b], names[c]});
    }
    auto d = boundary_matrices(SimplicialComplex2::build(tris));
    EXPECT_TRUE(multiply(d.d1, d.d2).is_zero());
  }
}

TEST(Simplicial, HomologyFigures) {
  auto h = homology(SimplicialComplex2::build(figs::tetrahedron()));
  EXPECT_EQ(h, (Homology{Z(1), Z(0), Z(1)}));
  h = homology(SimplicialComplex2::build(figs::torus()));
  EXPECT_EQ(h, (Homology{Z(1), Z(2), Z(1)}));
  h = homology(SimplicialComplex2::build(figs::projective_plane()));
  EXPECT_EQ(h, (Homology{Z(1), Z(0, {2}), Z(0)}));
  h = homology(SimplicialComplex2::build(figs::klein_bottle()));
  EXPECT_EQ(h, (Homology{Z(1), Z(1, {2}), Z(0)}));
  // two components
  h = homology(SimplicialComplex2::build({{"a", "b", "c"}, {"d", "e", "f"}}));
  EXPECT_EQ(h.h0, Z(2));
}

TEST(Simplicial, Euler) {
  EXPECT_EQ(euler_simplicial(SimplicialComplex2::build(figs::tetrahedron())), 2);
  EXPECT_EQ(euler_simplicial(SimplicialComplex2::build(figs::torus())), 0);
  EXPECT_EQ(euler_simplicial(SimplicialComplex2::build(figs::projective_plane())), 1);
  EXPECT_EQ(euler_simplicial(SimplicialComplex2::build(figs::klein_bottle())), 0);
  auto s = SimplicialComplex2::build(figs::klein_bottle());
  EXPECT_EQ(betti_euler(homology(s)), euler_simplicial(s));
}

TEST(Simplicial, ToCellComplex) {
  auto k = to_cell_complex(SimplicialComplex2::build(figs::torus()));
  EXPECT_TRUE(is_orientable(k));
  EXPECT_EQ(contours(k).size(), 0u);
  EXPECT_EQ(classify(k).name, "torus");
  EXPECT_FALSE(is_orientable(to_cell_complex(SimplicialComplex2::build(figs::klein_bottle()))));
  EXPECT_EQ(classify(to_cell_complex(SimplicialComplex2::build(figs::projective_plane()))).name, "projective plane");
}

TEST(Simplicial, Refine) {
  auto r = refine_to_triangulation(K1("a b c"));
  EXPECT_TRUE(validate_bordered_surface(r.simplicial).ok);
  EXPECT_EQ(euler_simplicial(r.simplicial), 1);

  r = refine_to_triangulation(K1("a b a' b'"));
  EXPECT_TRUE(validate_closed_surface(r.simplicial).ok);
  EXPECT_EQ(euler_simplicial(r.simplicial), 0);
  EXPECT_EQ(homology(r.simplicial).h1, Z(2));

  r = refine_to_triangulation(K1("a a"));
  EXPECT_EQ(euler_simplicial(r.simplicial), 1);
  EXPECT_EQ(homology(r.simplicial).h1, Z(0, {2}));

  // degenerate shapes: empty word, single edge, x x' spike
  for (const char* w : {"", "a", "a a'", "x a a' b x'"}) {
    auto s = refine_to_triangulation(K1(w)).simplicial;
    auto h = homology(s);
    EXPECT_EQ(h.h1, h1_from_normal_form(classify(K1(w)).form)) << w;
    EXPECT_EQ(euler_simplicial(s), invariant_report(K1(w)).euler) << w;
  }
}

TEST(Simplicial, RefineScrambled) {
  for (int i = 0; i < 20; ++i) {
    NormalForm f{i % 2 ? NormalKind::TypeII : NormalKind::TypeI, 1 + (i / 2) % 3, (i / 6) % 3};
    CellComplex k = scramble(canonical_complex(f), static_cast<std::uint64_t>(i), 20);
    auto r = refine_to_triangulation(k);
    auto h = homology(r.simplicial);
    EXPECT_EQ(h.h1, h1_from_normal_form(f));
    EXPECT_EQ(betti_euler(h), euler_of(f));
    EXPECT_EQ(is_orientable(to_cell_complex(r.simplicial)), f.kind == NormalKind::TypeI);
  }
}
