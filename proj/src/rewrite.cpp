#include "surfcls/rewrite.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "surfcls/classify.hpp"
#include "surfcls/error.hpp"

namespace surfcls {

namespace {

[[noreturn]] void internal(const std::string& what) {
  throw Error(ErrorCode::InternalInvariantViolation, what);
}

std::string sym_text(const EdgeSym& s) { return format_word(Word{s}); }

EdgeSym sym_from(std::string_view text) {
  Word w = parse_word(text, true);
  if (w.size() != 1) {
    throw Error(ErrorCode::ParseError, "expected one edge symbol, got '" + std::string(text) + "'");
  }
  return w[0];
}

std::size_t index_from(const std::string& s) {
  std::size_t used = 0;
  unsigned long v = 0;
  try {
    v = std::stoul(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != s.size() || s.empty()) {
    throw Error(ErrorCode::BadPosition, "bad position '" + s + "'");
  }
  return v;
}

void require_fresh_edge(const CellComplex& k, const std::string& name) {
  if (!is_identifier(name)) {
    throw Error(ErrorCode::ParseError, "illegal edge name '" + name + "'");
  }
  if (k.has_edge(name)) {
    throw Error(ErrorCode::NameCollision, "edge '" + name + "' already exists");
  }
}

void require_params(const std::vector<std::string>& p, std::size_t n, std::string_view rule) {
  if (p.size() != n) {
    throw Error(ErrorCode::ParseError, std::string(rule) + " expects " + std::to_string(n) +
                                           " parameters, got " + std::to_string(p.size()));
  }
}

std::size_t face_or_throw(const CellComplex& k, std::string_view name) {
  auto i = k.face_index(name);
  if (!i) throw Error(ErrorCode::FaceNotFound, "no face '" + std::string(name) + "'");
  return *i;
}

void append(std::vector<EdgeSym>& out, const Word& w, std::size_t b, std::size_t e) {
  for (std::size_t i = b; i < e; ++i) out.push_back(w[i]);
}

void append_inverse(std::vector<EdgeSym>& out, const Word& w, std::size_t b, std::size_t e) {
  for (std::size_t i = e; i > b; --i) out.push_back(w[i - 1].inverse());
}

CellComplex replace_face_word(const CellComplex& k, std::size_t fi, Word w) {
  auto faces = k.faces();
  faces[fi].word = std::move(w);
  return CellComplex::build(std::move(faces));
}

std::size_t offset(std::size_t pos, std::size_t origin, std::size_t n) {
  return (pos + n - origin) % n;
}

// Positions of the composite rules are taken in the face word as stored and
// must lie in [0, n).
std::size_t pos_param(const std::string& s, std::size_t n) {
  std::size_t v = index_from(s);
  if (v >= n) throw Error(ErrorCode::BadPosition, "position " + s + " out of range");
  return v;
}

bool is_loop_at(const CellComplex& k, const Word& w, std::size_t i) {
  if (i + 3 > w.size()) return false;
  return w[i + 2] == w[i].inverse() && w[i + 1].name() != w[i].name() &&
         k.is_border_edge(w[i + 1].name());
}

}  // namespace

std::string_view move_kind_name(MoveKind k) noexcept {
  switch (k) {
    case MoveKind::P1: return "P1";
    case MoveKind::P1Inv: return "P1inv";
    case MoveKind::P2: return "P2";
    case MoveKind::P2Inv: return "P2inv";
    case MoveKind::Composite: return "Composite";
  }
  return "?";
}

std::string format_move(const Move& m) {
  auto faces_text = [](const std::vector<Face>& fs) {
    std::string s;
    for (std::size_t i = 0; i < fs.size(); ++i) {
      if (i) s += "; ";
      s += fs[i].name + ": " + format_word(fs[i].word);
    }
    return s;
  };
  std::string out(move_kind_name(m.kind));
  if (m.kind == MoveKind::Composite) out += "(" + m.rule + ")";
  for (const auto& p : m.params) out += " " + p;
  out += " | " + faces_text(m.before) + " => " + faces_text(m.after);
  return out;
}

long euler_of(const NormalForm& f) noexcept {
  return f.kind == NormalKind::TypeI ? 2L - 2L * f.p - f.q : 2L - f.p - f.q;
}

std::string format_normal_form(const NormalForm& f) {
  return std::string(f.kind == NormalKind::TypeI ? "I" : "II") + " p=" + std::to_string(f.p) +
         " q=" + std::to_string(f.q);
}

Word canonical_word(const NormalForm& f) {
  std::vector<EdgeSym> w;
  for (int i = 1; i <= f.p; ++i) {
    EdgeSym a("a" + std::to_string(i));
    if (f.kind == NormalKind::TypeI) {
      EdgeSym b("b" + std::to_string(i));
      w.insert(w.end(), {a, b, a.inverse(), b.inverse()});
    } else {
      w.insert(w.end(), {a, a});
    }
  }
  for (int j = 1; j <= f.q; ++j) {
    EdgeSym c("c" + std::to_string(j));
    w.insert(w.end(), {c, EdgeSym("h" + std::to_string(j)), c.inverse()});
  }
  return Word(std::move(w));
}

CellComplex canonical_complex(const NormalForm& f) {
  if (f.p < 0 || f.q < 0 || (f.kind == NormalKind::TypeII && f.p < 1)) {
    throw Error(ErrorCode::InfeasibleInvariants, "no canonical complex " + format_normal_form(f));
  }
  return CellComplex::build({Face{"A", canonical_word(f)}});
}

// ---------------------------------------------------------------------------
// Elementary moves

CellComplex apply_p1(const CellComplex& k, std::string_view a, const std::string& b,
                     const std::string& c) {
  if (!k.has_edge(a)) throw Error(ErrorCode::EdgeNotFound, "no edge '" + std::string(a) + "'");
  require_fresh_edge(k, b);
  require_fresh_edge(k, c);
  if (b == c) throw Error(ErrorCode::NameCollision, "P1 needs two distinct fresh names");
  auto faces = k.faces();
  EdgeSym sb(b), sc(c);
  for (auto& f : faces) {
    std::vector<EdgeSym> w;
    for (const auto& s : f.word) {
      if (s.name() != a) {
        w.push_back(s);
      } else if (s.positive()) {
        w.insert(w.end(), {sb, sc});
      } else {
        w.insert(w.end(), {sc.inverse(), sb.inverse()});
      }
    }
    f.word = Word(std::move(w));
  }
  return CellComplex::build(std::move(faces));
}

CellComplex apply_p1_inverse(const CellComplex& k, const EdgeSym& b, const EdgeSym& c,
                             const std::string& g) {
  if (!k.has_edge(b.name())) throw Error(ErrorCode::EdgeNotFound, "no edge '" + b.name() + "'");
  if (!k.has_edge(c.name())) throw Error(ErrorCode::EdgeNotFound, "no edge '" + c.name() + "'");
  if (b.name() == c.name()) {
    throw Error(ErrorCode::NotContractible, "P1 inverse needs two distinct edges");
  }
  require_fresh_edge(k, g);
  SlotGraph sg(k);
  const auto& members = sg.vertices()[sg.vertex_of(b)].members;
  std::set<EdgeSym> cls(members.begin(), members.end());
  if (cls != std::set<EdgeSym>{b, c.inverse()}) {
    throw Error(ErrorCode::NotContractible,
                "(" + sym_text(b) + ", " + sym_text(c.inverse()) + ") is not a vertex");
  }
  EdgeSym sg_pos(g), b_inv = b.inverse(), c_inv = c.inverse();
  auto faces = k.faces();
  for (auto& f : faces) {
    const Word& w = f.word;
    std::size_t n = w.size();
    if (n == 0) continue;
    auto is_pair = [&](std::size_t i) {
      const EdgeSym& x = w.at_cyclic(static_cast<std::ptrdiff_t>(i));
      const EdgeSym& y = w.at_cyclic(static_cast<std::ptrdiff_t>(i) + 1);
      return (x == b && y == c) || (x == c_inv && y == b_inv);
    };
    // Start where no pair straddles the cut.
    std::size_t start = 0;
    while (start < n && is_pair((start + n - 1) % n)) ++start;
    if (start == n) start = 0;
    Word r = rotate(w, static_cast<std::ptrdiff_t>(start));
    std::vector<EdgeSym> out;
    for (std::size_t i = 0; i < n;) {
      if (i + 1 < n && r[i] == b && r[i + 1] == c) {
        out.push_back(sg_pos);
        i += 2;
      } else if (i + 1 < n && r[i] == c_inv && r[i + 1] == b_inv) {
        out.push_back(sg_pos.inverse());
        i += 2;
      } else {
        out.push_back(r[i]);
        ++i;
      }
    }
    for (const auto& s : out) {
      if (s.name() == b.name() || s.name() == c.name()) {
        throw Error(ErrorCode::NotContractible,
                    "edge '" + s.name() + "' occurs outside the string " + sym_text(b) + " " +
                        sym_text(c));
      }
    }
    f.word = Word(std::move(out));
  }
  return CellComplex::build(std::move(faces));
}

CellComplex apply_p2(const CellComplex& k, std::string_view face, std::size_t p,
                     const std::string& d, const std::string& new_face) {
  std::size_t fi = face_or_throw(k, face);
  require_fresh_edge(k, d);
  if (!is_identifier(new_face)) {
    throw Error(ErrorCode::ParseError, "illegal face name '" + new_face + "'");
  }
  if (k.has_face(new_face)) {
    throw Error(ErrorCode::NameCollision, "face '" + new_face + "' already exists");
  }
  const Word& w = k.faces()[fi].word;
  std::size_t n = w.size();
  if (n == 0 ? p != 0 : (p < 1 || p >= n)) {
    throw Error(ErrorCode::BadPosition, "cannot split a word of length " + std::to_string(n) +
                                            " at " + std::to_string(p));
  }
  EdgeSym sd(d);
  std::vector<EdgeSym> w1, w2{sd.inverse()};
  append(w1, w, 0, p);
  w1.push_back(sd);
  append(w2, w, p, n);
  auto faces = k.faces();
  faces[fi].word = Word(std::move(w1));
  faces.insert(faces.begin() + static_cast<std::ptrdiff_t>(fi) + 1, Face{new_face, Word(std::move(w2))});
  return CellComplex::build(std::move(faces));
}

CellComplex apply_p2_inverse(const CellComplex& k, std::string_view a1, std::string_view a2,
                             std::string_view d) {
  std::size_t i1 = face_or_throw(k, a1);
  std::size_t i2 = face_or_throw(k, a2);
  if (i1 == i2) throw Error(ErrorCode::NotMergeable, "cannot merge a face with itself");
  auto find = [&](const Word& w) {
    std::size_t pos = w.size(), count = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (w[i].name() == d) {
        pos = i;
        ++count;
      }
    }
    return count == 1 ? pos : w.size();
  };
  Word w1 = k.faces()[i1].word;
  Word w2 = k.faces()[i2].word;
  std::size_t p1 = find(w1), p2 = find(w2);
  if (p1 == w1.size() || p2 == w2.size()) {
    throw Error(ErrorCode::NotMergeable, "edge '" + std::string(d) + "' is not shared by faces " +
                                             std::string(a1) + " and " + std::string(a2));
  }
  if (w1[p1].sign() == w2[p2].sign()) {
    w2 = inverse_word(w2);
    p2 = w2.size() - 1 - p2;
  }
  Word r1 = rotate(w1, static_cast<std::ptrdiff_t>(p1) + 1);  // X d
  Word r2 = rotate(w2, static_cast<std::ptrdiff_t>(p2));      // d' Y
  std::vector<EdgeSym> out;
  append(out, r1, 0, r1.size() - 1);
  append(out, r2, 1, r2.size());
  auto faces = k.faces();
  faces[i1].word = Word(std::move(out));
  faces.erase(faces.begin() + static_cast<std::ptrdiff_t>(i2));
  return CellComplex::build(std::move(faces));
}

// ---------------------------------------------------------------------------
// Composite rules.  Positions refer to the face word before the move.
//
//   reorient F k fwd|inv        rotate (the inverse of) the word left by k
//   cancel F i                  x x' at i, i+1 removed
//   crosscap F i j b            a X a Y -> b b Y' X
//   handle F i j k l c d        a U b V a' X b' Y -> c d c' d' Y X V U
//   handle-to-crosscaps F i j d e f
//                               a a X b c b' c' Y -> d d X e e f f Y
//   group-loops F i j e         c h c' X d k d' Y -> e h e' d k d' Y X
//   rename old=new[']...        simultaneous renaming of edges

CellComplex apply_composite(const CellComplex& k, std::string_view rule,
                            const std::vector<std::string>& params) {
  if (rule == "rename") {
    std::map<std::string, std::pair<std::string, bool>> map;
    std::set<std::string> targets;
    for (const auto& p : params) {
      auto eq = p.find('=');
      if (eq == std::string::npos) throw Error(ErrorCode::ParseError, "bad rename '" + p + "'");
      std::string from = p.substr(0, eq);
      EdgeSym to = sym_from(p.substr(eq + 1));
      if (!k.has_edge(from)) throw Error(ErrorCode::EdgeNotFound, "no edge '" + from + "'");
      if (!targets.insert(to.name()).second || !map.emplace(from, std::pair{to.name(), !to.positive()}).second) {
        throw Error(ErrorCode::NameCollision, "rename is not injective at '" + p + "'");
      }
    }
    for (const auto& e : k.edges()) {
      if (!map.count(e) && targets.count(e)) {
        throw Error(ErrorCode::NameCollision, "rename target '" + e + "' already exists");
      }
    }
    auto faces = k.faces();
    for (auto& f : faces) {
      std::vector<EdgeSym> w;
      for (const auto& s : f.word) {
        auto it = map.find(s.name());
        if (it == map.end()) {
          w.push_back(s);
        } else {
          Sign sign = it->second.second ? flip(s.sign()) : s.sign();
          w.emplace_back(it->second.first, sign);
        }
      }
      f.word = Word(std::move(w));
    }
    return CellComplex::build(std::move(faces));
  }

  if (params.empty()) throw Error(ErrorCode::ParseError, "composite rule needs a face");
  std::size_t fi = face_or_throw(k, params[0]);
  const Word& w = k.faces()[fi].word;
  std::size_t n = w.size();
  std::vector<EdgeSym> out;

  if (rule == "reorient") {
    require_params(params, 3, rule);
    if (params[2] != "fwd" && params[2] != "inv") {
      throw Error(ErrorCode::ParseError, "reorient expects fwd or inv");
    }
    std::size_t r = n == 0 ? 0 : pos_param(params[1], n);
    Word base = params[2] == "inv" ? inverse_word(w) : w;
    return replace_face_word(k, fi, rotate(base, static_cast<std::ptrdiff_t>(r)));
  }
  if (rule == "cancel") {
    require_params(params, 2, rule);
    std::size_t i = pos_param(params[1], n);
    std::size_t j = (i + 1) % n;
    if (n < 2 || w[j] != w[i].inverse()) {
      throw Error(ErrorCode::BadPosition, "no cancelling pair at " + params[1]);
    }
    // Keep the cyclic order starting after the pair.
    Word r = rotate(w, static_cast<std::ptrdiff_t>(i) + 2);
    return replace_face_word(k, fi, slice(r, 0, n - 2));
  }
  if (rule == "crosscap") {
    require_params(params, 4, rule);
    std::size_t i = pos_param(params[1], n), j = pos_param(params[2], n);
    if (i == j || w[i] != w[j]) throw Error(ErrorCode::BadPosition, "crosscap needs a X a Y");
    require_fresh_edge(k, params[3]);
    Word r = rotate(w, static_cast<std::ptrdiff_t>(i));
    std::size_t oj = offset(j, i, n);
    EdgeSym b(params[3]);
    out = {b, b};
    append_inverse(out, r, oj + 1, n);
    append(out, r, 1, oj);
    return replace_face_word(k, fi, Word(std::move(out)));
  }
  if (rule == "handle") {
    require_params(params, 7, rule);
    std::size_t i = pos_param(params[1], n);
    std::size_t oj = offset(pos_param(params[2], n), i, n);
    std::size_t ok = offset(pos_param(params[3], n), i, n);
    std::size_t ol = offset(pos_param(params[4], n), i, n);
    Word r = rotate(w, static_cast<std::ptrdiff_t>(i));
    if (!(0 < oj && oj < ok && ok < ol) || r[ok] != r[0].inverse() || r[ol] != r[oj].inverse() ||
        r[0].name() == r[oj].name()) {
      throw Error(ErrorCode::BadPosition, "handle needs a U b V a' X b' Y");
    }
    require_fresh_edge(k, params[5]);
    require_fresh_edge(k, params[6]);
    EdgeSym c(params[5]), d(params[6]);
    out = {c, d, c.inverse(), d.inverse()};
    append(out, r, ol + 1, n);
    append(out, r, ok + 1, ol);
    append(out, r, oj + 1, ok);
    append(out, r, 1, oj);
    return replace_face_word(k, fi, Word(std::move(out)));
  }
  if (rule == "handle-to-crosscaps") {
    require_params(params, 6, rule);
    std::size_t i = pos_param(params[1], n);
    std::size_t oj = offset(pos_param(params[2], n), i, n);
    Word r = rotate(w, static_cast<std::ptrdiff_t>(i));
    if (n < 6 || r[1] != r[0] || oj < 2 || oj + 4 > n || r[oj + 2] != r[oj].inverse() ||
        r[oj + 3] != r[oj + 1].inverse() || r[oj].name() == r[oj + 1].name()) {
      throw Error(ErrorCode::BadPosition, "handle-to-crosscaps needs a a X b c b' c' Y");
    }
    for (std::size_t t = 3; t < 6; ++t) require_fresh_edge(k, params[t]);
    EdgeSym d(params[3]), e(params[4]), f(params[5]);
    out = {d, d};
    append(out, r, 2, oj);
    out.insert(out.end(), {e, e, f, f});
    append(out, r, oj + 4, n);
    return replace_face_word(k, fi, Word(std::move(out)));
  }
  if (rule == "group-loops") {
    require_params(params, 4, rule);
    std::size_t i = pos_param(params[1], n);
    std::size_t oj = offset(pos_param(params[2], n), i, n);
    Word r = rotate(w, static_cast<std::ptrdiff_t>(i));
    if (!is_loop_at(k, r, 0) || oj < 3 || !is_loop_at(k, r, oj)) {
      throw Error(ErrorCode::BadPosition, "group-loops needs c h c' X d k d' Y");
    }
    require_fresh_edge(k, params[3]);
    EdgeSym e(params[3]);
    out = {e, r[1], e.inverse()};
    append(out, r, oj, n);
    append(out, r, 3, oj);
    return replace_face_word(k, fi, Word(std::move(out)));
  }
  throw Error(ErrorCode::ParseError, "unknown composite rule '" + std::string(rule) + "'");
}

CellComplex replay(const CellComplex& k, const Move& m) {
  const auto& p = m.params;
  switch (m.kind) {
    case MoveKind::P1:
      require_params(p, 3, "P1");
      return apply_p1(k, p[0], p[1], p[2]);
    case MoveKind::P1Inv:
      require_params(p, 3, "P1inv");
      return apply_p1_inverse(k, sym_from(p[0]), sym_from(p[1]), p[2]);
    case MoveKind::P2:
      require_params(p, 4, "P2");
      return apply_p2(k, p[0], index_from(p[1]), p[2], p[3]);
    case MoveKind::P2Inv:
      require_params(p, 3, "P2inv");
      return apply_p2_inverse(k, p[0], p[1], p[2]);
    case MoveKind::Composite:
      return apply_composite(k, m.rule, p);
  }
  internal("unknown move kind");
}

// ---------------------------------------------------------------------------
// Normalization

namespace {

enum class Tok { Plain, CC, H, L };

struct Token {
  Tok kind;
  std::vector<EdgeSym> syms;
};

Token inverse_token(const Token& t) {
  std::vector<EdgeSym> s;
  for (auto it = t.syms.rbegin(); it != t.syms.rend(); ++it) s.push_back(it->inverse());
  return Token{t.kind, std::move(s)};
}

Word tokens_word(const std::vector<Token>& ts) {
  std::vector<EdgeSym> out;
  for (const auto& t : ts) out.insert(out.end(), t.syms.begin(), t.syms.end());
  return Word(std::move(out));
}

std::size_t token_pos(const std::vector<Token>& ts, std::size_t idx) {
  std::size_t p = 0;
  for (std::size_t i = 0; i < idx; ++i) p += ts[i].syms.size();
  return p;
}

// Tokens rotated to start at idx.
std::vector<Token> rotated(const std::vector<Token>& ts, std::size_t idx) {
  std::vector<Token> r(ts.begin() + static_cast<std::ptrdiff_t>(idx), ts.end());
  r.insert(r.end(), ts.begin(), ts.begin() + static_cast<std::ptrdiff_t>(idx));
  return r;
}

void append_tokens(std::vector<Token>& out, const std::vector<Token>& r, std::size_t b,
                   std::size_t e) {
  for (std::size_t i = b; i < e; ++i) out.push_back(r[i]);
}

void append_inverse_tokens(std::vector<Token>& out, const std::vector<Token>& r, std::size_t b,
                           std::size_t e) {
  for (std::size_t i = e; i > b; --i) out.push_back(inverse_token(r[i - 1]));
}

// Merges adjacent plain tokens x x and x y x' y' (no wrap-around).
void combine_plain(std::vector<Token>& ts) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < ts.size() && !changed; ++i) {
      if (ts[i].kind != Tok::Plain) continue;
      const EdgeSym& x = ts[i].syms[0];
      if (i + 1 < ts.size() && ts[i + 1].kind == Tok::Plain && ts[i + 1].syms[0] == x) {
        ts[i] = Token{Tok::CC, {x, x}};
        ts.erase(ts.begin() + static_cast<std::ptrdiff_t>(i) + 1);
        changed = true;
      } else if (i + 3 < ts.size() && ts[i + 1].kind == Tok::Plain &&
                 ts[i + 2].kind == Tok::Plain && ts[i + 3].kind == Tok::Plain) {
        const EdgeSym& y = ts[i + 1].syms[0];
        if (x.name() != y.name() && ts[i + 2].syms[0] == x.inverse() &&
            ts[i + 3].syms[0] == y.inverse()) {
          ts[i] = Token{Tok::H, {x, y, x.inverse(), y.inverse()}};
          ts.erase(ts.begin() + static_cast<std::ptrdiff_t>(i) + 1,
                   ts.begin() + static_cast<std::ptrdiff_t>(i) + 4);
          changed = true;
        }
      }
    }
  }
}

class Normalizer {
 public:
  explicit Normalizer(const CellComplex& k) : k_(k), inv_(invariant_report(k)) {}

  NormalizationResult run();

 private:
  CellComplex k_;
  InvariantReport inv_;
  std::vector<Move> trace_;
  int next_edge_ = 1;
  int next_face_ = 1;

  std::string fresh_edge() {
    for (;;) {
      std::string s = "_g" + std::to_string(next_edge_++);
      if (!k_.has_edge(s)) return s;
    }
  }
  std::string fresh_face() {
    for (;;) {
      std::string s = "_F" + std::to_string(next_face_++);
      if (!k_.has_face(s)) return s;
    }
  }

  void apply(MoveKind kind, std::string rule, std::vector<std::string> params);
  void cancel_pairs();
  void ensure_inner_vertex();
  void reduce_inner_vertices();
  void reduce_border_vertices();
  void eliminate(const EdgeSym& b1, const EdgeSym& b2);
  void merge_faces();
  void check_single_vertex_form();
  NormalForm token_phase();
};

void Normalizer::apply(MoveKind kind, std::string rule, std::vector<std::string> params) {
  Move m{kind, std::move(rule), std::move(params), k_.faces(), {}};
  CellComplex next = replay(k_, m);
  m.after = next.faces();
  InvariantReport r = invariant_report(next);
  if (r.orientable != inv_.orientable || r.num_contours != inv_.num_contours ||
      r.euler != inv_.euler) {
    internal("move changed the invariants: " + format_move(m));
  }
  k_ = std::move(next);
  trace_.push_back(std::move(m));
}

// Step 1: remove x x' from boundaries.  When (x) is the only inner vertex
// of a complex with border, the pair stays (it is the inner vertex the
// later steps need).
void Normalizer::cancel_pairs() {
  for (;;) {
    SlotGraph g(k_);
    bool guarded = k_.border_edge_count() > 0 && g.inner_vertex_count() == 1;
    if (guarded) return;
    bool applied = false;
    for (const auto& f : k_.faces()) {
      std::size_t n = f.word.size();
      for (std::size_t i = 0; i < n && n >= 2; ++i) {
        if (f.word[(i + 1) % n] == f.word[i].inverse()) {
          apply(MoveKind::Composite, "cancel", {f.name, std::to_string(i)});
          applied = true;
          break;
        }
      }
      if (applied) break;
    }
    if (!applied) return;
  }
}

void Normalizer::ensure_inner_vertex() {
  if (k_.is_null_sphere()) return;
  if (SlotGraph(k_).inner_vertex_count() > 0) return;
  for (const auto& e : k_.edges()) {
    if (k_.is_inner_edge(e)) {
      std::string b = fresh_edge(), c = fresh_edge();
      apply(MoveKind::P1, "", {e, b, c});
      return;
    }
  }
  // Every edge is a border edge: a single face with distinct edges.
  if (k_.faces().size() != 1) internal("all-border complex with several faces");
  if (k_.faces()[0].word.size() == 1) {
    std::string b = fresh_edge(), c = fresh_edge();
    apply(MoveKind::P1, "", {k_.edges()[0], b, c});
  }
  std::string d = fresh_edge(), f = fresh_face();
  apply(MoveKind::P2, "", {k_.faces()[0].name, "1", d, f});
  std::string b = fresh_edge(), c = fresh_edge();
  apply(MoveKind::P1, "", {d, b, c});
}

// Removes b2 from the vertex of b1 (b2 a neighbour of b1 there, on an inner
// edge): cut b1 b2' off its face and glue it along b2.
void Normalizer::eliminate(const EdgeSym& b1, const EdgeSym& b2) {
  SlotGraph g(k_);
  std::optional<SlotGraph::Slot> slot;
  for (const auto& s : g.slots(b1)) {
    if (g.successor(s) == b2.inverse()) {
      slot = s;
      break;
    }
  }
  if (!slot) internal(sym_text(b2) + " is not a neighbour of " + sym_text(b1));
  std::string face = k_.faces()[slot->face].name;
  std::size_t n = k_.faces()[slot->face].word.size();
  if (slot->inverted || slot->pos != 0) {
    apply(MoveKind::Composite, "reorient",
          {face, std::to_string(slot->pos), slot->inverted ? "inv" : "fwd"});
  }
  if (n > 2) {
    std::string c = fresh_edge(), f = fresh_face();
    apply(MoveKind::P2, "", {face, "2", c, f});
  }
  std::string other;
  for (const auto& f : k_.faces()) {
    if (f.name == face) continue;
    for (const auto& s : f.word) {
      if (s.name() == b2.name()) other = f.name;
    }
    if (!other.empty()) break;
  }
  if (other.empty()) internal("no face to glue along " + b2.name());
  apply(MoveKind::P2Inv, "", {face, other, b2.name()});
}

// Step 2, inner part: one inner vertex left.
void Normalizer::reduce_inner_vertices() {
  for (std::size_t guard = 0;; ++guard) {
    if (guard > 100000) internal("inner vertex reduction does not terminate");
    SlotGraph g(k_);
    if (g.inner_vertex_count() < 2) return;
    const Vertex* alpha = nullptr;
    for (const auto& v : g.vertices()) {
      if (v.kind == VertexKind::Inner) {
        alpha = &v;
        break;
      }
    }
    std::set<EdgeSym> members(alpha->members.begin(), alpha->members.end());
    std::optional<EdgeSym> b1;
    for (const auto& m : members) {
      if (!members.count(m.inverse())) {
        b1 = m;
        break;
      }
    }
    if (!b1) internal("inner vertex closed under inversion next to other vertices");
    for (;;) {
      SlotGraph h(k_);
      std::size_t size = h.vertices()[h.vertex_of(*b1)].members.size();
      if (size <= 1) break;
      EdgeSym b2 = h.successor(h.slots(*b1)[0]).inverse();
      eliminate(*b1, b2);
      SlotGraph after(k_);
      if (after.vertices()[after.vertex_of(*b1)].members.size() != size - 1) {
        internal("elimination did not shrink the vertex of " + sym_text(*b1));
      }
    }
    std::size_t before = g.inner_vertex_count();
    cancel_pairs();
    if (SlotGraph(k_).inner_vertex_count() >= before) {
      internal("inner vertex of " + sym_text(*b1) + " survived its cancellation");
    }
  }
}

namespace {

bool is_loop_vertex(const Vertex& v) {
  return v.kind == VertexKind::Border && v.members.size() == 3 &&
         v.members.back() == v.members.front().inverse();
}

}  // namespace

// Step 2, border part: every border vertex becomes (h, c, h').
void Normalizer::reduce_border_vertices() {
  for (std::size_t guard = 0;; ++guard) {
    if (guard > 100000) internal("border vertex reduction does not terminate");
    SlotGraph g(k_);
    std::set<EdgeSym> alpha;
    for (const auto& v : g.vertices()) {
      if (v.kind == VertexKind::Inner) alpha.insert(v.members.begin(), v.members.end());
    }
    bool all_loops = true;
    bool progressed = false;
    for (const auto& v : g.vertices()) {
      if (v.kind != VertexKind::Border || is_loop_vertex(v)) continue;
      all_loops = false;
      if (v.members.size() == 2) {
        const EdgeSym& h = v.members.front();
        const EdgeSym& k = v.members.back();
        if (h == k.inverse()) internal("border vertex (" + sym_text(h) + ", " + sym_text(k) + ")");
        std::string fresh = fresh_edge();
        apply(MoveKind::P1Inv, "", {sym_text(h), sym_text(k.inverse()), fresh});
        progressed = true;
        break;
      }
      std::optional<EdgeSym> bi;
      for (std::size_t i = 1; i + 1 < v.members.size(); ++i) {
        if (alpha.count(v.members[i].inverse())) {
          bi = v.members[i];
          break;
        }
      }
      if (!bi) continue;
      // Shrink to (h, bi, k).
      for (;;) {
        SlotGraph h(k_);
        const auto& ms = h.vertices()[h.vertex_of(*bi)].members;
        if (ms.size() <= 3) break;
        std::size_t at = static_cast<std::size_t>(std::find(ms.begin(), ms.end(), *bi) - ms.begin());
        EdgeSym b2 = at >= 2 ? ms[at - 1] : ms[at + 1];
        eliminate(*bi, b2);
      }
      SlotGraph h2(k_);
      Vertex now = h2.vertices()[h2.vertex_of(*bi)];
      if (now.members.size() != 3) internal("border vertex did not shrink to three members");
      EdgeSym h = now.members.front(), k = now.members.back();
      if (k != h.inverse()) {
        eliminate(h, *bi);
        std::string fresh = fresh_edge();
        apply(MoveKind::P1Inv, "", {sym_text(h), sym_text(k.inverse()), fresh});
      }
      progressed = true;
      break;
    }
    if (all_loops) return;
    if (!progressed) internal("no border vertex adjacent to the inner vertex");
  }
}

// Step 3, first half: glue all faces into one.
void Normalizer::merge_faces() {
  while (k_.faces().size() > 1) {
    const Face& f0 = k_.faces()[0];
    std::string other, edge;
    for (const auto& s : f0.word) {
      for (std::size_t j = 1; j < k_.faces().size() && other.empty(); ++j) {
        for (const auto& t : k_.faces()[j].word) {
          if (t.name() == s.name()) {
            other = k_.faces()[j].name;
            edge = s.name();
            break;
          }
        }
      }
      if (!other.empty()) break;
    }
    if (other.empty()) internal("first face shares no edge");
    apply(MoveKind::P2Inv, "", {f0.name, other, edge});
  }
}

void Normalizer::check_single_vertex_form() {
  if (k_.faces().size() != 1) internal("more than one face after merging");
  if (k_.is_null_sphere()) return;
  SlotGraph g(k_);
  if (g.inner_vertex_count() != 1) {
    internal(std::to_string(g.inner_vertex_count()) + " inner vertices after reduction");
  }
  for (const auto& v : g.vertices()) {
    if (v.kind == VertexKind::Border && !is_loop_vertex(v)) {
      internal("border vertex " + format_vertex(v) + " is not a loop");
    }
  }
}

// Steps 3 and 4 on the single face, with loops c h c' held as opaque tokens.
NormalForm Normalizer::token_phase() {
  const std::string face = k_.faces()[0].name;
  std::vector<Token> ts;
  {
    const Word& w = k_.faces()[0].word;
    std::size_t n = w.size();
    std::size_t start = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (is_loop_at(k_, rotate(w, static_cast<std::ptrdiff_t>(i)), 0)) {
        start = i;
        break;
      }
    }
    if (start != 0) apply(MoveKind::Composite, "reorient", {face, std::to_string(start), "fwd"});
    const Word& r = k_.faces()[0].word;
    for (std::size_t i = 0; i < n;) {
      if (is_loop_at(k_, r, i)) {
        ts.push_back(Token{Tok::L, {r[i], r[i + 1], r[i + 2]}});
        i += 3;
      } else {
        ts.push_back(Token{Tok::Plain, {r[i]}});
        ++i;
      }
    }
    combine_plain(ts);
  }

  auto commit = [&](std::string rule, std::vector<std::string> params, std::vector<Token> next) {
    apply(MoveKind::Composite, std::move(rule), std::move(params));
    combine_plain(next);
    if (tokens_word(next) != k_.faces()[0].word) internal("token view out of step with the word");
    ts = std::move(next);
  };
  auto mate_of = [&](std::size_t i) {
    for (std::size_t j = 0; j < ts.size(); ++j) {
      if (j != i && ts[j].kind == Tok::Plain && ts[j].syms[0].name() == ts[i].syms[0].name()) {
        return j;
      }
    }
    internal("unpaired symbol " + sym_text(ts[i].syms[0]));
  };
  auto pos = [&](std::size_t idx) { return std::to_string(token_pos(ts, idx)); };

  // Cross-caps, then handles, until no plain symbol is left.
  for (;;) {
    std::size_t n = ts.size();
    std::optional<std::pair<std::size_t, std::size_t>> cap;
    std::optional<std::size_t> first_plain;
    for (std::size_t i = 0; i < n; ++i) {
      if (ts[i].kind != Tok::Plain) continue;
      if (!first_plain) first_plain = i;
      std::size_t j = mate_of(i);
      if (ts[j].syms[0] == ts[i].syms[0]) {
        cap = std::pair{i, j};
        break;
      }
    }
    if (cap) {
      auto [i, j] = *cap;
      auto r = rotated(ts, i);
      std::size_t oj = offset(j, i, n);
      std::string b = fresh_edge();
      EdgeSym sb(b);
      std::vector<Token> next{Token{Tok::CC, {sb, sb}}};
      append_inverse_tokens(next, r, oj + 1, n);
      append_tokens(next, r, 1, oj);
      commit("crosscap", {face, pos(i), pos(j), b}, std::move(next));
      continue;
    }
    if (!first_plain) break;
    std::size_t i = *first_plain;
    auto r = rotated(ts, i);
    std::size_t ok = offset(mate_of(i), i, n);
    std::optional<std::pair<std::size_t, std::size_t>> partner;
    for (std::size_t t = 1; t < ok && !partner; ++t) {
      if (r[t].kind != Tok::Plain) continue;
      std::size_t m = offset(mate_of((i + t) % n), i, n);
      if (m > ok) partner = std::pair{t, m};
    }
    if (!partner) internal("no handle partner for " + sym_text(r[0].syms[0]));
    auto [oj, ol] = *partner;
    std::string c = fresh_edge(), d = fresh_edge();
    EdgeSym sc(c), sd(d);
    std::vector<Token> next{Token{Tok::H, {sc, sd, sc.inverse(), sd.inverse()}}};
    append_tokens(next, r, ol + 1, n);
    append_tokens(next, r, ok + 1, ol);
    append_tokens(next, r, oj + 1, ok);
    append_tokens(next, r, 1, oj);
    commit("handle",
           {face, pos(i), pos((i + oj) % n), pos((i + ok) % n), pos((i + ol) % n), c, d},
           std::move(next));
  }

  auto count = [&](Tok kind) {
    return static_cast<int>(std::count_if(ts.begin(), ts.end(), [&](const Token& t) { return t.kind == kind; }));
  };
  auto first = [&](Tok kind) {
    return static_cast<std::size_t>(std::find_if(ts.begin(), ts.end(), [&](const Token& t) { return t.kind == kind; }) - ts.begin());
  };

  // A handle next to a cross-cap is two more cross-caps.
  while (count(Tok::CC) > 0 && count(Tok::H) > 0) {
    std::size_t n = ts.size(), i = first(Tok::CC), j = first(Tok::H);
    auto r = rotated(ts, i);
    std::size_t oj = offset(j, i, n);
    std::string d = fresh_edge(), e = fresh_edge(), f = fresh_edge();
    EdgeSym sd(d), se(e), sf(f);
    std::vector<Token> next{Token{Tok::CC, {sd, sd}}};
    append_tokens(next, r, 1, oj);
    next.push_back(Token{Tok::CC, {se, se}});
    next.push_back(Token{Tok::CC, {sf, sf}});
    append_tokens(next, r, oj + 1, n);
    commit("handle-to-crosscaps", {face, pos(i), pos(j), d, e, f}, std::move(next));
  }

  // Group the loops into one run.
  auto loop_runs = [&]() {
    // (start, length) of maximal cyclic runs of loops
    std::vector<std::pair<std::size_t, std::size_t>> runs;
    std::size_t n = ts.size();
    if (count(Tok::L) == static_cast<int>(n)) {
      if (n) runs.emplace_back(0, n);
      return runs;
    }
    for (std::size_t i = 0; i < n; ++i) {
      bool is_l = ts[i].kind == Tok::L;
      bool prev_l = ts[(i + n - 1) % n].kind == Tok::L;
      if (is_l && !prev_l) {
        std::size_t len = 0;
        while (ts[(i + len) % n].kind == Tok::L) ++len;
        runs.emplace_back(i, len);
      }
    }
    return runs;
  };
  for (std::size_t guard = 0;; ++guard) {
    if (guard > 100000) internal("loop grouping does not terminate");
    auto runs = loop_runs();
    if (runs.size() <= 1) break;
    std::size_t n = ts.size();
    std::size_t best = 0;
    for (std::size_t r = 1; r < runs.size(); ++r) {
      if (runs[r].second < runs[best].second) best = r;
    }
    std::size_t i = (runs[best].first + runs[best].second - 1) % n;
    std::size_t j = runs[(best + 1) % runs.size()].first;
    auto r = rotated(ts, i);
    std::size_t oj = offset(j, i, n);
    std::string e = fresh_edge();
    EdgeSym se(e);
    std::vector<Token> next{Token{Tok::L, {se, r[0].syms[1], se.inverse()}}};
    append_tokens(next, r, oj, n);
    append_tokens(next, r, 1, oj);
    commit("group-loops", {face, pos(i), pos(j), e}, std::move(next));
  }

  if (count(Tok::Plain) != 0 || (count(Tok::CC) > 0 && count(Tok::H) > 0)) {
    internal("mixed tokens left after the handle and cross-cap rules");
  }

  // Loops last, then rename to the canonical alphabet.
  auto runs = loop_runs();
  if (!runs.empty() && runs[0].second != ts.size()) {
    std::size_t t = (runs[0].first + runs[0].second) % ts.size();
    if (t != 0) {
      std::size_t p = token_pos(ts, t);
      apply(MoveKind::Composite, "reorient", {face, std::to_string(p), "fwd"});
      ts = rotated(ts, t);
    }
  }
  NormalForm nf;
  nf.kind = count(Tok::CC) > 0 ? NormalKind::TypeII : NormalKind::TypeI;
  nf.p = nf.kind == NormalKind::TypeII ? count(Tok::CC) : count(Tok::H);
  nf.q = count(Tok::L);
  std::vector<std::string> renames;
  auto map_to = [&](const EdgeSym& s, const std::string& target) {
    renames.push_back(s.name() + "=" + target + (s.positive() ? "" : "'"));
  };
  int pi = 0, li = 0;
  for (const auto& t : ts) {
    if (t.kind == Tok::L) {
      ++li;
      map_to(t.syms[0], "c" + std::to_string(li));
      map_to(t.syms[1], "h" + std::to_string(li));
    } else {
      ++pi;
      map_to(t.syms[0], "a" + std::to_string(pi));
      if (t.kind == Tok::H) map_to(t.syms[1], "b" + std::to_string(pi));
    }
  }
  if (!renames.empty() && k_.faces()[0].word != canonical_word(nf)) {
    apply(MoveKind::Composite, "rename", std::move(renames));
  }
  return nf;
}

NormalizationResult Normalizer::run() {
  NormalForm nf;
  if (!k_.is_null_sphere()) {
    cancel_pairs();
  }
  if (!k_.is_null_sphere()) {
    ensure_inner_vertex();
    reduce_inner_vertices();
    reduce_border_vertices();
    merge_faces();
  }
  check_single_vertex_form();
  nf = token_phase();
  Word w = k_.faces()[0].word;
  if (w != canonical_word(nf)) internal("final word " + format_word(w) + " is not canonical");
  NormalForm expected =
      normal_form_from_invariants(inv_.orientable, static_cast<long>(inv_.num_contours), inv_.euler);
  if (!(expected == nf)) {
    internal("normal form " + format_normal_form(nf) + " disagrees with the invariants (" +
             format_normal_form(expected) + ")");
  }
  return NormalizationResult{nf, std::move(w), std::move(trace_)};
}

}  // namespace

NormalizationResult normalize(const CellComplex& k) { return Normalizer(k).run(); }

std::optional<NormalForm> is_canonical(const CellComplex& k) {
  if (k.faces().size() != 1) return std::nullopt;
  const Word& w0 = k.faces()[0].word;
  std::size_t n = w0.size();
  if (n == 0) return NormalForm{NormalKind::TypeI, 0, 0};
  for (std::size_t rot = 0; rot < n; ++rot) {
    Word w = rotate(w0, static_cast<std::ptrdiff_t>(rot));
    int handles = 0, caps = 0, loops = 0;
    std::size_t i = 0;
    while (i < n) {
      if (i + 4 <= n && w[i].name() != w[i + 1].name() && w[i + 2] == w[i].inverse() &&
          w[i + 3] == w[i + 1].inverse()) {
        ++handles;
        i += 4;
      } else if (i + 2 <= n && w[i] == w[i + 1]) {
        ++caps;
        i += 2;
      } else {
        break;
      }
    }
    while (is_loop_at(k, w, i)) {
      ++loops;
      i += 3;
    }
    if (i == n && !(handles > 0 && caps > 0)) {
      if (caps > 0) return NormalForm{NormalKind::TypeII, caps, loops};
      return NormalForm{NormalKind::TypeI, handles, loops};
    }
  }
  return std::nullopt;
}

CellComplex scramble(const CellComplex& k, std::uint64_t seed, std::size_t n_moves,
                     std::vector<Move>* trace) {
  std::mt19937_64 rng(seed);
  auto pick = [&](std::size_t n) {
    return static_cast<std::size_t>(std::uniform_int_distribution<std::size_t>(0, n - 1)(rng));
  };
  CellComplex cur = k;
  InvariantReport inv = invariant_report(k);
  int edge_counter = 1, face_counter = 1;
  auto fresh_edge = [&]() {
    for (;;) {
      std::string s = "_g" + std::to_string(edge_counter++);
      if (!cur.has_edge(s)) return s;
    }
  };
  auto fresh_face = [&]() {
    for (;;) {
      std::string s = "_F" + std::to_string(face_counter++);
      if (!cur.has_face(s)) return s;
    }
  };

  for (std::size_t step = 0; step < n_moves; ++step) {
    std::vector<Move> options[4];
    for (const auto& e : cur.edges()) {
      options[0].push_back(Move{MoveKind::P1, "", {e}, {}, {}});
    }
    for (const auto& f : cur.faces()) {
      std::size_t n = f.word.size();
      if (n == 0) options[1].push_back(Move{MoveKind::P2, "", {f.name, "0"}, {}, {}});
      for (std::size_t p = 1; p < n; ++p) {
        options[1].push_back(Move{MoveKind::P2, "", {f.name, std::to_string(p)}, {}, {}});
      }
    }
    SlotGraph g(cur);
    for (const auto& v : g.vertices()) {
      if (v.members.size() != 2) continue;
      const EdgeSym& x = v.members[0];
      const EdgeSym& y = v.members[1];
      if (x.name() == y.name()) continue;
      options[2].push_back(Move{MoveKind::P1Inv, "", {sym_text(x), sym_text(y.inverse())}, {}, {}});
      options[2].push_back(Move{MoveKind::P1Inv, "", {sym_text(y), sym_text(x.inverse())}, {}, {}});
    }
    const auto& fs = cur.faces();
    for (std::size_t i = 0; i < fs.size(); ++i) {
      for (std::size_t j = i + 1; j < fs.size(); ++j) {
        for (const auto& s : fs[i].word) {
          bool shared = std::any_of(fs[j].word.begin(), fs[j].word.end(),
                                    [&](const EdgeSym& t) { return t.name() == s.name(); });
          if (shared) options[3].push_back(Move{MoveKind::P2Inv, "", {fs[i].name, fs[j].name, s.name()}, {}, {}});
        }
      }
    }
    std::vector<std::size_t> kinds;
    for (std::size_t t = 0; t < 4; ++t) {
      if (!options[t].empty()) kinds.push_back(t);
    }
    std::size_t kind = kinds[pick(kinds.size())];
    Move m = options[kind][pick(options[kind].size())];
    switch (m.kind) {
      case MoveKind::P1: {
        std::string b = fresh_edge(), c = fresh_edge();
        m.params.insert(m.params.end(), {b, c});
        break;
      }
      case MoveKind::P1Inv: m.params.push_back(fresh_edge()); break;
      case MoveKind::P2: {
        std::string d = fresh_edge(), f = fresh_face();
        m.params.insert(m.params.end(), {d, f});
        break;
      }
      default: break;
    }
    m.before = cur.faces();
    CellComplex next = replay(cur, m);
    m.after = next.faces();
    InvariantReport r = invariant_report(next);
    if (r.orientable != inv.orientable || r.num_contours != inv.num_contours || r.euler != inv.euler) {
      internal("scramble move changed the invariants: " + format_move(m));
    }
    cur = std::move(next);
    if (trace) trace->push_back(std::move(m));
  }
  return cur;
}

}  // namespace surfcls
