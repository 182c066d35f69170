#pragma once

// Elementary subdivisions (P1, P2 and their inverses), composite word rules
// and normalization of a cell complex to its canonical single-face form.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "surfcls/cellcomplex.hpp"
#include "surfcls/edgeword.hpp"

namespace surfcls {

enum class MoveKind { P1, P1Inv, P2, P2Inv, Composite };

std::string_view move_kind_name(MoveKind k) noexcept;

// One rewrite step.  `params` is enough to re-apply the move to `before`
// with replay(); `rule` names the composite rule (empty otherwise).
struct Move {
  MoveKind kind = MoveKind::P1;
  std::string rule;
  std::vector<std::string> params;
  std::vector<Face> before;
  std::vector<Face> after;
};

// "<kind> <params> | <before-words> => <after-words>"
std::string format_move(const Move& m);

enum class NormalKind { TypeI, TypeII };

struct NormalForm {
  NormalKind kind = NormalKind::TypeI;
  int p = 0;
  int q = 0;

  friend bool operator==(const NormalForm&, const NormalForm&) = default;
};

long euler_of(const NormalForm& f) noexcept;
std::string format_normal_form(const NormalForm& f);

// a1 b1 a1' b1' ... c1 h1 c1' ... (type I) or a1 a1 ... c1 h1 c1' ... (type II).
Word canonical_word(const NormalForm& f);
// Single face "A" carrying canonical_word(f).
CellComplex canonical_complex(const NormalForm& f);

struct NormalizationResult {
  NormalForm normal;
  Word canonical_word;
  std::vector<Move> trace;
};

// P1: a -> b c everywhere (a' -> c' b').
CellComplex apply_p1(const CellComplex& k, std::string_view a, const std::string& b,
                     const std::string& c);
// P1 inverse: contracts the string b c into the fresh edge g.  Requires b, c
// on distinct edges and the class of b to be exactly {b, c'}.
CellComplex apply_p1_inverse(const CellComplex& k, const EdgeSym& b, const EdgeSym& c,
                             const std::string& g);
// P2: face a1..an becomes a1..ap d (keeps the name) and d' a(p+1)..an (named
// new_face, inserted right after).  1 <= p < n; p = 0 is accepted on an
// empty word and yields the faces d and d'.
CellComplex apply_p2(const CellComplex& k, std::string_view face, std::size_t p,
                     const std::string& d, const std::string& new_face);
// P2 inverse: merges A1 = X d and A2 = d' Y into X Y under A1's name.  A2 is
// inverted first when d occurs with the same sign in both.
CellComplex apply_p2_inverse(const CellComplex& k, std::string_view a1, std::string_view a2,
                             std::string_view d);

// Composite rules on one face.  Rules: reorient, cancel, crosscap, handle,
// handle-to-crosscaps, group-loops, rename.  See rewrite.cpp for params.
CellComplex apply_composite(const CellComplex& k, std::string_view rule,
                            const std::vector<std::string>& params);

// Re-applies m to k (k should equal m.before).
CellComplex replay(const CellComplex& k, const Move& m);

NormalizationResult normalize(const CellComplex& k);

std::optional<NormalForm> is_canonical(const CellComplex& k);

// n_moves random elementary moves, deterministic in seed.  Moves are
// appended to trace when given.
CellComplex scramble(const CellComplex& k, std::uint64_t seed, std::size_t n_moves,
                     std::vector<Move>* trace = nullptr);

}  // namespace surfcls
