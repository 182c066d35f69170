#include "surfcls/simplicial.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <set>

#include "surfcls/error.hpp"

namespace surfcls {

namespace {

std::string edge_text(const SEdge& e) { return "{" + e[0] + "," + e[1] + "}"; }

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

template <class T>
std::size_t index_of(const std::vector<T>& sorted, const T& x) {
  return static_cast<std::size_t>(std::lower_bound(sorted.begin(), sorted.end(), x) - sorted.begin());
}

// Triangles per edge, in edge order.
std::vector<int> edge_degrees(const SimplicialComplex2& k) {
  std::vector<int> deg(k.edges().size(), 0);
  for (const auto& t : k.triangles()) {
    for (const SEdge& e : {SEdge{t[0], t[1]}, SEdge{t[0], t[2]}, SEdge{t[1], t[2]}}) {
      ++deg[index_of(k.edges(), e)];
    }
  }
  return deg;
}

bool connected(const SimplicialComplex2& k) {
  const auto& vs = k.vertices();
  std::vector<std::size_t> parent(vs.size());
  std::iota(parent.begin(), parent.end(), 0);
  for (const auto& e : k.edges()) {
    parent[find_root(parent, index_of(vs, e[0]))] = find_root(parent, index_of(vs, e[1]));
  }
  for (std::size_t i = 1; i < vs.size(); ++i) {
    if (find_root(parent, i) != find_root(parent, 0)) return false;
  }
  return true;
}

struct Link {
  std::map<std::string, std::vector<std::string>> adj;  // link vertex -> neighbours
  std::size_t triangles = 0;
};

std::map<std::string, Link> links(const SimplicialComplex2& k) {
  std::map<std::string, Link> out;
  for (const auto& t : k.triangles()) {
    for (int i = 0; i < 3; ++i) {
      const std::string& u = t[(i + 1) % 3];
      const std::string& w = t[(i + 2) % 3];
      Link& l = out[t[i]];
      l.adj[u].push_back(w);
      l.adj[w].push_back(u);
      ++l.triangles;
    }
  }
  return out;
}

bool link_connected(const Link& l) {
  if (l.adj.empty()) return true;
  std::set<std::string> seen{l.adj.begin()->first};
  std::vector<std::string> stack{l.adj.begin()->first};
  while (!stack.empty()) {
    std::string u = stack.back();
    stack.pop_back();
    for (const auto& w : l.adj.at(u)) {
      if (seen.insert(w).second) stack.push_back(w);
    }
  }
  return seen.size() == l.adj.size();
}

SurfaceReport validate(const SimplicialComplex2& k, bool bordered) {
  SurfaceReport r;
  auto fail = [&](std::string msg) {
    r.ok = false;
    r.violations.push_back(std::move(msg));
  };
  auto deg = edge_degrees(k);
  for (std::size_t i = 0; i < deg.size(); ++i) {
    bool good = bordered ? (deg[i] == 1 || deg[i] == 2) : deg[i] == 2;
    if (!good) {
      fail("D1: edge " + edge_text(k.edges()[i]) + " lies in " + std::to_string(deg[i]) +
           " triangle(s)");
    }
  }
  for (const auto& [v, l] : links(k)) {
    std::size_t ends = 0;
    bool branching = false;
    for (const auto& [u, nb] : l.adj) {
      if (nb.size() == 1) ++ends;
      if (nb.size() > 2) branching = true;
    }
    if (branching) {
      fail("D2: triangles around vertex " + v + " do not form a single fan");
      continue;
    }
    if (ends == 0) {
      if (!link_connected(l)) {
        fail("D2: triangles around vertex " + v + " form several cycles");
      } else if (l.triangles < 3) {
        fail("D2: vertex " + v + " lies in only " + std::to_string(l.triangles) + " triangles");
      }
    } else if (!bordered) {
      fail("D2: triangles around vertex " + v + " do not close up");
    } else if (ends != 2 || !link_connected(l)) {
      fail("D3: triangles around border vertex " + v + " do not form a single sequence");
    }
  }
  if (!connected(k)) fail(std::string(bordered ? "D4" : "D3") + ": complex is not connected");
  return r;
}

}  // namespace

SimplicialComplex2 SimplicialComplex2::build(const std::vector<STriangle>& triangles) {
  if (triangles.empty()) throw Error(ErrorCode::EmptyFaceSet, "no triangles");
  std::set<STriangle> ts;
  std::set<SEdge> es;
  std::set<std::string> vs;
  for (STriangle t : triangles) {
    for (const auto& v : t) {
      if (v.empty()) throw Error(ErrorCode::ParseError, "empty vertex name");
    }
    std::sort(t.begin(), t.end());
    if (t[0] == t[1] || t[1] == t[2]) {
      throw Error(ErrorCode::DegenerateTriangle,
                  "triangle " + t[0] + " " + t[1] + " " + t[2] + " repeats a vertex");
    }
    ts.insert(t);
    es.insert({t[0], t[1]});
    es.insert({t[0], t[2]});
    es.insert({t[1], t[2]});
    vs.insert(t.begin(), t.end());
  }
  SimplicialComplex2 k;
  k.vertices_.assign(vs.begin(), vs.end());
  k.edges_.assign(es.begin(), es.end());
  k.triangles_.assign(ts.begin(), ts.end());
  return k;
}

SurfaceReport validate_closed_surface(const SimplicialComplex2& k) { return validate(k, false); }
SurfaceReport validate_bordered_surface(const SimplicialComplex2& k) { return validate(k, true); }

ChainComplexData boundary_matrices(const SimplicialComplex2& k) {
  ChainComplexData c{k.vertices(), k.edges(), k.triangles(),
                     IntMatrix(k.vertices().size(), k.edges().size()),
                     IntMatrix(k.edges().size(), k.triangles().size())};
  for (std::size_t j = 0; j < c.basis1.size(); ++j) {
    const auto& e = c.basis1[j];
    c.d1(index_of(c.basis0, e[0]), j) -= 1;
    c.d1(index_of(c.basis0, e[1]), j) += 1;
  }
  for (std::size_t j = 0; j < c.basis2.size(); ++j) {
    const auto& t = c.basis2[j];
    c.d2(index_of(c.basis1, SEdge{t[1], t[2]}), j) += 1;
    c.d2(index_of(c.basis1, SEdge{t[0], t[2]}), j) -= 1;
    c.d2(index_of(c.basis1, SEdge{t[0], t[1]}), j) += 1;
  }
  if (!multiply(c.d1, c.d2).is_zero()) {
    throw Error(ErrorCode::InternalInvariantViolation, "boundary of a boundary is not zero");
  }
  return c;
}

Homology homology(const ChainComplexData& c) {
  Homology h;
  h.h0 = cokernel(c.basis0.size(), c.d1);
  std::size_t r1 = rank(c.d1);
  auto f2 = smith_normal_form(c.d2);
  std::size_t r2 = f2.size();
  h.h1.free_rank = c.basis1.size() - r1 - r2;
  for (auto x : f2) {
    if (x > 1) h.h1.torsion.push_back(x);
  }
  h.h2.free_rank = c.basis2.size() - r2;
  return h;
}

Homology homology(const SimplicialComplex2& k) { return homology(boundary_matrices(k)); }

long betti_euler(const Homology& h) {
  return static_cast<long>(h.h0.free_rank) - static_cast<long>(h.h1.free_rank) +
         static_cast<long>(h.h2.free_rank);
}

long euler_simplicial(const SimplicialComplex2& k) {
  long chi = static_cast<long>(k.vertices().size()) - static_cast<long>(k.edges().size()) +
             static_cast<long>(k.triangles().size());
  long betti = betti_euler(homology(k));
  if (chi != betti) {
    throw Error(ErrorCode::InternalInvariantViolation,
                "Euler characteristic " + std::to_string(chi) + " differs from Betti sum " +
                    std::to_string(betti));
  }
  return chi;
}

CellComplex to_cell_complex(const SimplicialComplex2& k) {
  std::vector<Face> faces;
  auto sym = [&](const std::string& a, const std::string& b) {
    bool forward = a < b;
    SEdge e = forward ? SEdge{a, b} : SEdge{b, a};
    return EdgeSym("e" + std::to_string(index_of(k.edges(), e) + 1), forward ? Sign::Plus : Sign::Minus);
  };
  for (std::size_t i = 0; i < k.triangles().size(); ++i) {
    const auto& t = k.triangles()[i];
    faces.push_back(Face{"t" + std::to_string(i + 1),
                         Word{sym(t[0], t[1]), sym(t[1], t[2]), sym(t[2], t[0])}});
  }
  return CellComplex::build(std::move(faces));
}

// ---------------------------------------------------------------------------
// Refinement

namespace {

class Names {
 public:
  Names(std::string prefix, std::set<std::string> used)
      : prefix_(std::move(prefix)), used_(std::move(used)) {}
  std::string next() {
    for (;;) {
      std::string s = prefix_ + std::to_string(++n_);
      if (used_.insert(s).second) return s;
    }
  }

 private:
  std::string prefix_;
  std::set<std::string> used_;
  int n_ = 0;
};

// P1 on every edge at once.
std::vector<Face> split_edges(const std::vector<Face>& faces, Names& edges) {
  std::map<std::string, std::pair<EdgeSym, EdgeSym>> halves;
  std::vector<Face> out;
  for (const auto& f : faces) {
    std::vector<EdgeSym> w;
    for (const auto& s : f.word) {
      auto it = halves.find(s.name());
      if (it == halves.end()) {
        it = halves.emplace(s.name(), std::pair{EdgeSym(edges.next()), EdgeSym(edges.next())}).first;
      }
      const auto& [b, c] = it->second;
      if (s.positive()) {
        w.insert(w.end(), {b, c});
      } else {
        w.insert(w.end(), {c.inverse(), b.inverse()});
      }
    }
    out.push_back(Face{f.name, Word(std::move(w))});
  }
  return out;
}

// Face a1..an becomes triangles a_i e_i e_(i-1)' around a new centre, e_i
// running from the end of a_i to the centre.
std::vector<Face> cone_faces(const std::vector<Face>& faces, Names& edges, Names& names) {
  std::vector<Face> out;
  for (const auto& f : faces) {
    std::size_t n = f.word.size();
    std::vector<EdgeSym> spokes;
    for (std::size_t i = 0; i < n; ++i) spokes.emplace_back(edges.next());
    for (std::size_t i = 0; i < n; ++i) {
      out.push_back(Face{names.next(), Word{f.word[i], spokes[i], spokes[(i + n - 1) % n].inverse()}});
    }
  }
  return out;
}

// Hexagon s0..s5 (a triangle with split sides) into three corner triangles
// and the middle one.
std::vector<Face> quarter(const std::vector<Face>& hexagons, Names& edges, Names& names) {
  std::vector<Face> out;
  for (const auto& f : hexagons) {
    const Word& s = f.word;
    if (s.size() != 6) {
      throw Error(ErrorCode::InternalInvariantViolation, "face " + f.name + " is not a split triangle");
    }
    EdgeSym d(edges.next()), e(edges.next()), g(edges.next());
    out.push_back(Face{names.next(), Word{s[1], s[2], d}});
    out.push_back(Face{names.next(), Word{s[3], s[4], e}});
    out.push_back(Face{names.next(), Word{s[5], s[0], g}});
    out.push_back(Face{names.next(), Word{d.inverse(), e.inverse(), g.inverse()}});
  }
  return out;
}

CellComplex checked_build(std::vector<Face> faces, long chi, const char* stage) {
  CellComplex k = CellComplex::build(std::move(faces));
  if (euler_characteristic(k) != chi) {
    throw Error(ErrorCode::InternalInvariantViolation,
                std::string("refinement stage '") + stage + "' changed the Euler characteristic");
  }
  return k;
}

// Triangles of a refined complex, or nothing when it is not yet simplicial.
std::optional<std::vector<STriangle>> as_triangles(const CellComplex& k) {
  SlotGraph g(k);
  auto name = [&](const EdgeSym& s) { return "v" + std::to_string(g.vertex_of(s) + 1); };
  std::set<std::pair<std::string, std::string>> edge_ends;
  for (const auto& e : k.edges()) {
    EdgeSym s(e);
    std::string a = name(s.inverse()), b = name(s);
    if (a == b) return std::nullopt;
    if (!edge_ends.insert(std::minmax(a, b)).second) return std::nullopt;
  }
  std::vector<STriangle> ts;
  std::set<STriangle> seen;
  for (const auto& f : k.faces()) {
    if (f.word.size() != 3) return std::nullopt;
    STriangle t{name(f.word[0]), name(f.word[1]), name(f.word[2])};
    std::sort(t.begin(), t.end());
    if (t[0] == t[1] || t[1] == t[2] || !seen.insert(t).second) return std::nullopt;
    ts.push_back(t);
  }
  return ts;
}

}  // namespace

Refinement refine_to_triangulation(const CellComplex& k) {
  const long chi = euler_characteristic(k);
  std::set<std::string> edge_names(k.edges().begin(), k.edges().end());
  std::set<std::string> face_names;
  for (const auto& f : k.faces()) face_names.insert(f.name);
  Names edges("_r", edge_names), names("_T", face_names);

  std::vector<Face> faces = k.faces();
  if (k.is_null_sphere()) {
    EdgeSym d(edges.next());
    faces = {Face{faces[0].name, Word{d}}, Face{names.next(), Word{d.inverse()}}};
  }
  faces = split_edges(faces, edges);
  checked_build(faces, chi, "split");
  faces = cone_faces(faces, edges, names);
  CellComplex cur = checked_build(faces, chi, "cone");
  faces = quarter(split_edges(cur.faces(), edges), edges, names);
  cur = checked_build(faces, chi, "subdivide");
  // A vertex with a single corner (the tip of x x') sits in two triangles
  // and quartering never changes that; another split-and-cone round does.
  for (int round = 0;; ++round) {
    if (auto ts = as_triangles(cur)) {
      SimplicialComplex2 s = SimplicialComplex2::build(*ts);
      bool bordered = cur.border_edge_count() > 0;
      SurfaceReport rep = bordered ? validate_bordered_surface(s) : validate_closed_surface(s);
      if (!rep.ok) {
        throw Error(ErrorCode::InternalInvariantViolation,
                    "refined complex is not a surface triangulation: " + rep.violations.front());
      }
      long schi = static_cast<long>(s.vertices().size()) - static_cast<long>(s.edges().size()) +
                  static_cast<long>(s.triangles().size());
      if (schi != chi) {
        throw Error(ErrorCode::InternalInvariantViolation, "triangulation changed the Euler characteristic");
      }
      return Refinement{std::move(cur), std::move(s)};
    }
    if (round >= 2) {
      throw Error(ErrorCode::InternalInvariantViolation, "refinement did not reach a simplicial complex");
    }
    faces = cone_faces(split_edges(cur.faces(), edges), edges, names);
    cur = checked_build(faces, chi, "cone");
  }
}

}  // namespace surfcls
