#pragma once

// Classification of surfaces from cell complexes: normal form, name, genus,
// fundamental group presentation, first homology, connected sums.

#include <string>
#include <vector>

#include "surfcls/cellcomplex.hpp"
#include "surfcls/intlinalg.hpp"
#include "surfcls/rewrite.hpp"

namespace surfcls {

struct SurfaceClass {
  bool orientable = true;
  int q = 0;
  long euler = 2;
  NormalForm form;
  int genus = 0;
  std::string name;
  Word canonical_word;

  friend bool operator==(const SurfaceClass&, const SurfaceClass&) = default;
};

struct Presentation {
  std::vector<std::string> generators;
  std::vector<Word> relators;  // zero or one
};

// Throws InfeasibleInvariants when no surface has these invariants.
NormalForm normal_form_from_invariants(bool orientable, long q, long euler);

std::string surface_name(const NormalForm& f);
// Class data for a normal form, without any complex behind it.
SurfaceClass surface_class(const NormalForm& f);

SurfaceClass classify(const CellComplex& k);
// Same, reusing an existing normalization.
SurfaceClass classify(const CellComplex& k, const NormalizationResult& n);

Presentation fundamental_group(const NormalForm& f);
std::string format_presentation(const Presentation& p);
FgAbelianGroup h1_from_normal_form(const NormalForm& f);
// Abelianization of a presentation, through the cokernel of the exponent
// sums of its relators.
FgAbelianGroup abelianize(const Presentation& p);

// Closed surfaces only; throws BorderedNotSupported otherwise.
SurfaceClass connected_sum(const SurfaceClass& s1, const SurfaceClass& s2);

}  // namespace surfcls
