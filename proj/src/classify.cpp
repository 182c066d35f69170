#include "surfcls/classify.hpp"

#include <map>

#include "surfcls/error.hpp"

namespace surfcls {

NormalForm normal_form_from_invariants(bool orientable, long q, long euler) {
  long g = 2 - euler - q;
  if (q < 0) throw Error(ErrorCode::InfeasibleInvariants, "negative contour count");
  if (orientable) {
    if (g < 0 || g % 2 != 0) {
      throw Error(ErrorCode::InfeasibleInvariants,
                  "no orientable surface has chi=" + std::to_string(euler) + " and q=" + std::to_string(q));
    }
    return NormalForm{NormalKind::TypeI, static_cast<int>(g / 2), static_cast<int>(q)};
  }
  if (g < 1) {
    throw Error(ErrorCode::InfeasibleInvariants,
                "no nonorientable surface has chi=" + std::to_string(euler) + " and q=" + std::to_string(q));
  }
  return NormalForm{NormalKind::TypeII, static_cast<int>(g), static_cast<int>(q)};
}

std::string surface_name(const NormalForm& f) {
  const bool one = f.kind == NormalKind::TypeI;
  if (f.q == 0) {
    if (one) {
      if (f.p == 0) return "sphere";
      if (f.p == 1) return "torus";
      return "connected sum of " + std::to_string(f.p) + " tori";
    }
    if (f.p == 1) return "projective plane";
    if (f.p == 2) return "Klein bottle";
    return "connected sum of " + std::to_string(f.p) + " projective planes";
  }
  if (one && f.p == 0 && f.q == 1) return "closed disk";
  if (one && f.p == 0 && f.q == 2) return "annulus";
  if (!one && f.p == 1 && f.q == 1) return "M\xC3\xB6" "bius strip";
  return std::string(one ? "orientable" : "nonorientable") + ", genus " + std::to_string(f.p) + ", " +
         std::to_string(f.q) + (f.q == 1 ? " boundary circle" : " boundary circles");
}

SurfaceClass surface_class(const NormalForm& f) {
  SurfaceClass s;
  s.orientable = f.kind == NormalKind::TypeI;
  s.q = f.q;
  s.euler = euler_of(f);
  s.form = f;
  s.genus = f.p;
  s.name = surface_name(f);
  s.canonical_word = canonical_word(f);
  return s;
}

SurfaceClass classify(const CellComplex& k, const NormalizationResult& n) {
  InvariantReport r = invariant_report(k);
  NormalForm expected = normal_form_from_invariants(r.orientable, static_cast<long>(r.num_contours), r.euler);
  if (!(expected == n.normal)) {
    throw Error(ErrorCode::InternalInvariantViolation,
                "normal form " + format_normal_form(n.normal) + " disagrees with the invariants");
  }
  SurfaceClass s = surface_class(n.normal);
  s.canonical_word = n.canonical_word;
  return s;
}

SurfaceClass classify(const CellComplex& k) { return classify(k, normalize(k)); }

Presentation fundamental_group(const NormalForm& f) {
  Presentation p;
  std::vector<EdgeSym> rel;
  for (int i = 1; i <= f.p; ++i) {
    std::string a = "a" + std::to_string(i);
    p.generators.push_back(a);
    if (f.kind == NormalKind::TypeI) {
      std::string b = "b" + std::to_string(i);
      p.generators.push_back(b);
      rel.insert(rel.end(), {EdgeSym(a), EdgeSym(b), EdgeSym(a, Sign::Minus), EdgeSym(b, Sign::Minus)});
    } else {
      rel.insert(rel.end(), {EdgeSym(a), EdgeSym(a)});
    }
  }
  if (f.q == 0) {
    p.relators.emplace_back(std::move(rel));
  } else {
    for (int j = 1; j < f.q; ++j) p.generators.push_back("d" + std::to_string(j));
  }
  return p;
}

std::string format_presentation(const Presentation& p) {
  std::string s = "<";
  for (std::size_t i = 0; i < p.generators.size(); ++i) s += (i ? ", " : " ") + p.generators[i];
  s += " |";
  for (std::size_t i = 0; i < p.relators.size(); ++i) {
    s += (i ? ", " : " ") + (p.relators[i].empty() ? std::string("1") : format_word(p.relators[i]));
  }
  return s + " >";
}

FgAbelianGroup h1_from_normal_form(const NormalForm& f) {
  const bool one = f.kind == NormalKind::TypeI;
  if (f.q == 0) {
    if (one) return FgAbelianGroup{static_cast<std::size_t>(2 * f.p), {}};
    return FgAbelianGroup{static_cast<std::size_t>(f.p - 1), {2}};
  }
  return FgAbelianGroup{static_cast<std::size_t>((one ? 2 * f.p : f.p) + f.q - 1), {}};
}

FgAbelianGroup abelianize(const Presentation& p) {
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < p.generators.size(); ++i) index[p.generators[i]] = i;
  IntMatrix m(p.generators.size(), p.relators.size());
  for (std::size_t j = 0; j < p.relators.size(); ++j) {
    for (const auto& s : p.relators[j]) {
      auto it = index.find(s.name());
      if (it == index.end()) throw Error(ErrorCode::ParseError, "relator uses unknown generator " + s.name());
      m(it->second, j) += static_cast<int>(s.sign());
    }
  }
  return cokernel(p.generators.size(), m);
}

SurfaceClass connected_sum(const SurfaceClass& s1, const SurfaceClass& s2) {
  if (s1.q != 0 || s2.q != 0) {
    throw Error(ErrorCode::BorderedNotSupported, "connected sums are defined here for closed surfaces only");
  }
  return surface_class(normal_form_from_invariants(s1.orientable && s2.orientable, 0, s1.euler + s2.euler - 2));
}

}  // namespace surfcls
