#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "surfcls/classify.hpp"
#include "surfcls/error.hpp"

using namespace surfcls;

namespace {

CellComplex K1(const char* w) { return CellComplex::build({{"A", parse_word(w)}}); }
NormalForm nf(NormalKind k, int p, int q) { return NormalForm{k, p, q}; }
constexpr NormalKind I = NormalKind::TypeI;
constexpr NormalKind II = NormalKind::TypeII;

}  // namespace

TEST(Classify, Examples) {
  SurfaceClass t = classify(K1("a b a' b'"));
  EXPECT_TRUE(t.orientable);
  EXPECT_EQ(t.q, 0);
  EXPECT_EQ(t.euler, 0);
  EXPECT_EQ(t.form, nf(I, 1, 0));
  EXPECT_EQ(t.genus, 1);
  EXPECT_EQ(t.name, "torus");

  SurfaceClass kb = classify(K1("a b a b'"));
  EXPECT_FALSE(kb.orientable);
  EXPECT_EQ(kb.form, nf(II, 2, 0));
  EXPECT_EQ(kb.name, "Klein bottle");

  SurfaceClass m = classify(K1("a b a c"));
  EXPECT_FALSE(m.orientable);
  EXPECT_EQ(m.q, 1);
  EXPECT_EQ(m.euler, 0);
  EXPECT_EQ(m.form, nf(II, 1, 1));
  EXPECT_EQ(m.name, "Möbius strip");

  EXPECT_EQ(classify(K1("a a")).name, "projective plane");
  EXPECT_EQ(classify(K1("")).name, "sphere");
  EXPECT_EQ(classify(K1("a")).name, "closed disk");
}

TEST(Classify, Names) {
  EXPECT_EQ(surface_name(nf(I, 0, 2)), "annulus");
  EXPECT_EQ(surface_name(nf(I, 3, 0)), "connected sum of 3 tori");
  EXPECT_EQ(surface_name(nf(II, 4, 0)), "connected sum of 4 projective planes");
  EXPECT_EQ(surface_name(nf(I, 2, 3)), "orientable, genus 2, 3 boundary circles");
  EXPECT_EQ(surface_name(nf(II, 1, 2)), "nonorientable, genus 1, 2 boundary circles");
  EXPECT_EQ(surface_name(nf(I, 1, 1)), "orientable, genus 1, 1 boundary circle");
}

TEST(Classify, FromInvariants) {
  EXPECT_EQ(normal_form_from_invariants(true, 0, 2), nf(I, 0, 0));
  EXPECT_EQ(normal_form_from_invariants(false, 0, 0), nf(II, 2, 0));
  EXPECT_EQ(normal_form_from_invariants(true, 2, -2), nf(I, 1, 2));
  for (auto bad : {std::tuple{true, 0L, 1L}, {false, 0L, 2L}, {true, 0L, 4L}, {true, -1L, 0L}}) {
    try {
      normal_form_from_invariants(std::get<0>(bad), std::get<1>(bad), std::get<2>(bad));
      ADD_FAILURE();
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::InfeasibleInvariants);
    }
  }
  for (int p = 0; p <= 4; ++p)
    for (int q = 0; q <= 3; ++q) {
      EXPECT_EQ(normal_form_from_invariants(true, q, euler_of(nf(I, p, q))), nf(I, p, q));
      if (p) EXPECT_EQ(normal_form_from_invariants(false, q, euler_of(nf(II, p, q))), nf(II, p, q));
    }
}

TEST(Classify, GenusFormula) {
  for (int p = 0; p <= 4; ++p)
    for (int q = 0; q <= 3; ++q) {
      SurfaceClass a = surface_class(nf(I, p, q));
      EXPECT_EQ(a.genus, (2 - a.euler - q) / 2);
      EXPECT_TRUE(a.orientable);
      if (!p) continue;
      SurfaceClass b = surface_class(nf(II, p, q));
      EXPECT_EQ(b.genus, 2 - b.euler - q);
      EXPECT_FALSE(b.orientable);
    }
}

TEST(Classify, FundamentalGroup) {
  auto g = fundamental_group(nf(I, 2, 0));
  EXPECT_EQ(g.generators, (std::vector<std::string>{"a1", "b1", "a2", "b2"}));
  ASSERT_EQ(g.relators.size(), 1u);
  EXPECT_EQ(format_word(g.relators[0]), "a1 b1 a1' b1' a2 b2 a2' b2'");
  EXPECT_EQ(format_presentation(g), "< a1, b1, a2, b2 | a1 b1 a1' b1' a2 b2 a2' b2' >");
  auto s = fundamental_group(nf(I, 0, 0));
  EXPECT_TRUE(s.generators.empty());
  EXPECT_EQ(abelianize(s), (FgAbelianGroup{0, {}}));
  auto m = fundamental_group(nf(II, 1, 1));
  EXPECT_EQ(m.generators.size(), 1u);
  EXPECT_TRUE(m.relators.empty());
  for (int p = 0; p <= 3; ++p)
    for (int q = 0; q <= 3; ++q) {
      EXPECT_EQ(fundamental_group(nf(I, p, q)).relators.size(), q == 0 ? 1u : 0u);
      EXPECT_EQ(fundamental_group(nf(I, p, q)).generators.size(), static_cast<std::size_t>(q ? 2 * p + q - 1 : 2 * p));
    }
}

TEST(Classify, H1) {
  EXPECT_EQ(h1_from_normal_form(nf(I, 1, 0)), (FgAbelianGroup{2, {}}));
  EXPECT_EQ(h1_from_normal_form(nf(II, 2, 0)), (FgAbelianGroup{1, {2}}));
  EXPECT_EQ(h1_from_normal_form(nf(I, 0, 2)), (FgAbelianGroup{1, {}}));
  EXPECT_EQ(h1_from_normal_form(nf(II, 1, 0)), (FgAbelianGroup{0, {2}}));
}

TEST(Classify, AbelianizationAgreesAndCountsHoms) {
  for (int p = 0; p <= 3; ++p)
    for (int q = 0; q <= 2; ++q)
      for (NormalKind k : {I, II}) {
        if (k == II && p == 0) continue;
        NormalForm f = nf(k, p, q);
        Presentation pr = fundamental_group(f);
        FgAbelianGroup h = h1_from_normal_form(f);
        EXPECT_EQ(abelianize(pr), h) << format_normal_form(f);
        for (int m : {2, 3, 4})
          EXPECT_EQ(oracle::hom_count(pr, m), oracle::hom_count_predicted(h, m)) << format_normal_form(f) << " m=" << m;
      }
}

TEST(Classify, ConnectedSum) {
  SurfaceClass t = surface_class(nf(I, 1, 0)), pp = surface_class(nf(II, 1, 0)), s = surface_class(nf(I, 0, 0));
  SurfaceClass tt = connected_sum(t, t);
  EXPECT_EQ(tt.form, nf(I, 2, 0));
  EXPECT_EQ(tt.euler, -2);
  EXPECT_EQ(connected_sum(pp, pp).name, "Klein bottle");
  EXPECT_EQ(connected_sum(pp, t).form, nf(II, 3, 0));
  EXPECT_EQ(connected_sum(t, s), t);
  EXPECT_EQ(connected_sum(s, pp), pp);
  std::vector<SurfaceClass> all;
  for (int p = 0; p <= 2; ++p) all.push_back(surface_class(nf(I, p, 0)));
  for (int p = 1; p <= 2; ++p) all.push_back(surface_class(nf(II, p, 0)));
  for (const auto& a : all)
    for (const auto& b : all) {
      EXPECT_EQ(connected_sum(a, b), connected_sum(b, a));
      for (const auto& c : all) EXPECT_EQ(connected_sum(connected_sum(a, b), c), connected_sum(a, connected_sum(b, c)));
    }
  try {
    connected_sum(t, surface_class(nf(I, 0, 1)));
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::BorderedNotSupported);
  }
}

TEST(Classify, AgreesWithInvariantsOnScrambles) {
  std::mt19937_64 rng(404);
  for (int i = 0; i < 40; ++i) {
    NormalForm f = nf(i % 2 ? II : I, 1 + i % 3, (i / 3) % 3);
    CellComplex k = scramble(canonical_complex(f), rng(), 30);
    InvariantReport r = invariant_report(k);
    SurfaceClass c = classify(k);
    EXPECT_EQ(c.form, normal_form_from_invariants(r.orientable, static_cast<long>(r.num_contours), r.euler));
    EXPECT_EQ(c.form, f);
  }
}
