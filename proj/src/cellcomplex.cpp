#include "surfcls/cellcomplex.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

#include "surfcls/error.hpp"

namespace surfcls {

namespace {

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

}  // namespace

CellComplex CellComplex::build(std::vector<Face> faces) {
  if (faces.empty()) {
    throw Error(ErrorCode::EmptyFaceSet, "a cell complex needs at least one face");
  }
  CellComplex k;
  std::set<std::string, std::less<>> names;
  for (const auto& f : faces) {
    if (!is_identifier(f.name)) {
      throw Error(ErrorCode::ParseError, "illegal face name '" + f.name + "'");
    }
    if (!names.insert(f.name).second) {
      throw Error(ErrorCode::DuplicateFace, "duplicate face '" + f.name + "'");
    }
    for (const auto& s : f.word) {
      auto [it, inserted] = k.counts_.try_emplace(s.name(), 0);
      if (inserted) k.edges_.push_back(s.name());
      ++it->second;
    }
  }
  for (const auto& e : k.edges_) {
    int c = k.counts_.at(e);
    if (c > 2) {
      throw Error(ErrorCode::EdgeMultiplicity,
                  "edge '" + e + "' occurs " + std::to_string(c) +
                      " times (must be 1 or 2)");
    }
  }

  // Connectivity: faces sharing an edge are joined.
  std::vector<std::size_t> parent(faces.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::map<std::string, std::size_t, std::less<>> first_face;
  for (std::size_t i = 0; i < faces.size(); ++i) {
    for (const auto& s : faces[i].word) {
      auto [it, inserted] = first_face.try_emplace(s.name(), i);
      if (!inserted) {
        parent[find_root(parent, i)] = find_root(parent, it->second);
      }
    }
  }
  std::size_t root0 = find_root(parent, 0);
  for (std::size_t i = 1; i < faces.size(); ++i) {
    if (find_root(parent, i) != root0) {
      std::string a, b;
      for (std::size_t j = 0; j < faces.size(); ++j) {
        std::string& side = find_root(parent, j) == root0 ? a : b;
        if (find_root(parent, j) == root0 || find_root(parent, j) == find_root(parent, i)) {
          if (!side.empty()) side += ",";
          side += faces[j].name;
        }
      }
      throw Error(ErrorCode::Disconnected,
                  "complex is disconnected: {" + a + "} and {" + b + "}");
    }
  }
  k.faces_ = std::move(faces);
  return k;
}

std::optional<std::size_t> CellComplex::face_index(std::string_view name) const {
  for (std::size_t i = 0; i < faces_.size(); ++i) {
    if (faces_[i].name == name) return i;
  }
  return std::nullopt;
}

const Face& CellComplex::face(std::string_view name) const {
  auto i = face_index(name);
  if (!i) throw Error(ErrorCode::FaceNotFound, "no face '" + std::string(name) + "'");
  return faces_[*i];
}

bool CellComplex::has_edge(std::string_view name) const {
  return counts_.find(name) != counts_.end();
}

int CellComplex::occurrences(std::string_view edge) const {
  auto it = counts_.find(edge);
  return it == counts_.end() ? 0 : it->second;
}

std::size_t CellComplex::border_edge_count() const {
  return static_cast<std::size_t>(std::count_if(
      counts_.begin(), counts_.end(), [](const auto& kv) { return kv.second == 1; }));
}

bool same_complex(const CellComplex& a, const CellComplex& b) {
  if (a.faces().size() != b.faces().size()) return false;
  for (const auto& f : a.faces()) {
    auto j = b.face_index(f.name);
    if (!j) return false;
    const Word& w = b.faces()[*j].word;
    if (!cyclic_equal(f.word, w) && !cyclic_equal(f.word, inverse_word(w))) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// SlotGraph

SlotGraph::SlotGraph(const CellComplex& k) : complex_(&k) {
  words_.reserve(2 * k.faces().size());
  for (const auto& f : k.faces()) {
    words_.push_back(f.word);
    words_.push_back(inverse_word(f.word));
  }
  for (std::size_t fi = 0; fi < k.faces().size(); ++fi) {
    for (int inv = 0; inv < 2; ++inv) {
      const Word& w = words_[2 * fi + static_cast<std::size_t>(inv)];
      for (std::size_t p = 0; p < w.size(); ++p) {
        slots_[w[p]].push_back(Slot{fi, inv == 1, p});
      }
    }
  }
  trace_vertices();
}

const EdgeSym& SlotGraph::symbol(const Slot& s) const { return word_of(s)[s.pos]; }

const EdgeSym& SlotGraph::successor(const Slot& s) const {
  const Word& w = word_of(s);
  return w[(s.pos + 1) % w.size()];
}

SlotGraph::Slot SlotGraph::partner(const Slot& s) const {
  auto n = static_cast<std::ptrdiff_t>(word_of(s).size());
  auto j = ((n - 2 - static_cast<std::ptrdiff_t>(s.pos)) % n + n) % n;
  return Slot{s.face, !s.inverted, static_cast<std::size_t>(j)};
}

const std::vector<SlotGraph::Slot>& SlotGraph::slots(const EdgeSym& s) const {
  auto it = slots_.find(s);
  if (it == slots_.end()) {
    throw Error(ErrorCode::EdgeNotFound, "no edge '" + s.name() + "'");
  }
  return it->second;
}

std::size_t SlotGraph::vertex_of(const EdgeSym& s) const {
  auto it = vertex_index_.find(s);
  if (it == vertex_index_.end()) {
    throw Error(ErrorCode::EdgeNotFound, "no edge '" + s.name() + "'");
  }
  return it->second;
}

std::size_t SlotGraph::inner_vertex_count() const {
  return static_cast<std::size_t>(std::count_if(
      vertices_.begin(), vertices_.end(),
      [](const Vertex& v) { return v.kind == VertexKind::Inner; }));
}

void SlotGraph::trace_vertices() {
  if (complex_->is_null_sphere()) {
    vertices_.push_back(Vertex{VertexKind::Null, {}});
    return;
  }
  std::set<EdgeSym> seen;

  // Walks from `start` leaving through `out`, until a border symbol or the
  // start symbol is reached.
  auto walk = [&](const EdgeSym& start, Slot out, std::vector<EdgeSym>& chain) {
    chain.push_back(start);
    seen.insert(start);
    for (;;) {
      Slot in = partner(out);
      const EdgeSym& next = symbol(in);
      if (next == start) return;
      chain.push_back(next);
      seen.insert(next);
      const auto& sl = slots_.at(next);
      if (sl.size() == 1) return;
      out = sl[0] == in ? sl[1] : sl[0];
    }
  };

  // Border chains first: their endpoints are the symbols with one slot.
  for (const auto& [sym, sl] : slots_) {
    if (sl.size() != 1 || seen.count(sym)) continue;
    Vertex v{VertexKind::Border, {}};
    walk(sym, sl[0], v.members);
    // Start from the lesser endpoint.
    if (v.members.back() < v.members.front()) {
      std::reverse(v.members.begin(), v.members.end());
    }
    vertices_.push_back(std::move(v));
  }
  for (const auto& [sym, sl] : slots_) {
    if (seen.count(sym)) continue;
    // sym is the least unseen symbol; head toward the smaller neighbour.
    const EdgeSym& n0 = symbol(partner(sl[0]));
    const EdgeSym& n1 = symbol(partner(sl[1]));
    Slot out = n1 < n0 ? sl[1] : sl[0];
    Vertex v{VertexKind::Inner, {}};
    walk(sym, out, v.members);
    vertices_.push_back(std::move(v));
  }
  std::sort(vertices_.begin(), vertices_.end(), [](const Vertex& a, const Vertex& b) {
    return *std::min_element(a.members.begin(), a.members.end()) <
           *std::min_element(b.members.begin(), b.members.end());
  });
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    for (const auto& m : vertices_[i].members) vertex_index_[m] = i;
  }
}

// ---------------------------------------------------------------------------

std::map<EdgeSym, std::vector<EdgeSym>> successors(const CellComplex& k) {
  std::map<EdgeSym, std::vector<EdgeSym>> out;
  for (const auto& f : k.faces()) {
    for (const Word& w : {f.word, inverse_word(f.word)}) {
      for (std::size_t i = 0; i < w.size(); ++i) {
        out[w[i]].push_back(w[(i + 1) % w.size()]);
      }
    }
  }
  return out;
}

std::vector<Vertex> vertices(const CellComplex& k) { return SlotGraph(k).vertices(); }

std::vector<Contour> contours(const CellComplex& k) {
  SlotGraph g(k);
  const auto& vs = g.vertices();
  auto next = [&](const EdgeSym& a) {
    const Vertex& v = vs[g.vertex_of(a)];
    const EdgeSym& other = v.members.front() == a ? v.members.back() : v.members.front();
    return other.inverse();
  };
  std::vector<Contour> out;
  std::set<std::string> visited;
  for (const auto& e : k.edges()) {
    if (!k.is_border_edge(e) || visited.count(e)) continue;
    Contour c;
    EdgeSym start(e, Sign::Plus);
    EdgeSym cur = start;
    do {
      c.edges.push_back(cur);
      visited.insert(cur.name());
      cur = next(cur);
    } while (cur != start && c.edges.size() <= 2 * k.edges().size());
    out.push_back(std::move(c));
  }
  return out;
}

bool is_orientable(const CellComplex& k) {
  // Occurrences (face, sign) of every edge over the chosen face words.
  std::map<std::string, std::vector<std::pair<std::size_t, int>>> occ;
  for (std::size_t i = 0; i < k.faces().size(); ++i) {
    for (const auto& s : k.faces()[i].word) {
      occ[s.name()].emplace_back(i, static_cast<int>(s.sign()));
    }
  }
  // parity[a] * parity[b] must equal the required relation on every edge.
  std::vector<std::vector<std::pair<std::size_t, int>>> adj(k.faces().size());
  for (const auto& [name, list] : occ) {
    if (list.size() != 2) continue;
    auto [fa, sa] = list[0];
    auto [fb, sb] = list[1];
    if (fa == fb) {
      if (sa == sb) return false;
      continue;
    }
    int rel = -sa * sb;
    adj[fa].emplace_back(fb, rel);
    adj[fb].emplace_back(fa, rel);
  }
  std::vector<int> eps(k.faces().size(), 0);
  for (std::size_t s = 0; s < eps.size(); ++s) {
    if (eps[s]) continue;
    eps[s] = 1;
    std::deque<std::size_t> queue{s};
    while (!queue.empty()) {
      std::size_t f = queue.front();
      queue.pop_front();
      for (auto [g, rel] : adj[f]) {
        int want = eps[f] * rel;
        if (!eps[g]) {
          eps[g] = want;
          queue.push_back(g);
        } else if (eps[g] != want) {
          return false;
        }
      }
    }
  }
  return true;
}

long euler_characteristic(const CellComplex& k) {
  SlotGraph g(k);
  return static_cast<long>(g.vertices().size()) - static_cast<long>(k.edges().size()) +
         static_cast<long>(k.faces().size());
}

InvariantReport invariant_report(const CellComplex& k) {
  InvariantReport r;
  r.orientable = is_orientable(k);
  r.num_contours = contours(k).size();
  r.n0 = SlotGraph(k).vertices().size();
  r.n1 = k.edges().size();
  r.n2 = k.faces().size();
  r.euler = static_cast<long>(r.n0) - static_cast<long>(r.n1) + static_cast<long>(r.n2);
  return r;
}

std::string format_vertex(const Vertex& v) {
  switch (v.kind) {
    case VertexKind::Null: return "null";
    case VertexKind::Inner: return "inner(" + format_word(Word(v.members)) + ")";
    case VertexKind::Border: return "border(" + format_word(Word(v.members)) + ")";
  }
  return {};
}

}  // namespace surfcls
