#pragma once

// Cell complexes given by faces and their boundary words, together with the
// combinatorial structures derived from them: vertices (classes of oriented
// edges with a common terminal point), contours, orientability and the
// Euler-Poincare characteristic.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "surfcls/edgeword.hpp"

namespace surfcls {

struct Face {
  std::string name;
  Word word;

  friend bool operator==(const Face&, const Face&) = default;
};

class CellComplex {
 public:
  // Validates the face list.  Throws Error with EmptyFaceSet, DuplicateFace,
  // EdgeMultiplicity (an edge used 3+ times across the face words) or
  // Disconnected.
  static CellComplex build(std::vector<Face> faces);

  const std::vector<Face>& faces() const noexcept { return faces_; }
  // Edge names in order of first appearance.
  const std::vector<std::string>& edges() const noexcept { return edges_; }

  std::optional<std::size_t> face_index(std::string_view name) const;
  const Face& face(std::string_view name) const;
  bool has_edge(std::string_view name) const;
  bool has_face(std::string_view name) const { return face_index(name).has_value(); }
  // Total occurrences of e and e' across the face words (1 or 2).
  int occurrences(std::string_view edge) const;
  bool is_border_edge(std::string_view edge) const { return occurrences(edge) == 1; }
  bool is_inner_edge(std::string_view edge) const { return occurrences(edge) == 2; }
  std::size_t border_edge_count() const;

  // Single face with empty boundary.
  bool is_null_sphere() const noexcept {
    return faces_.size() == 1 && faces_.front().word.empty();
  }

  friend bool operator==(const CellComplex&, const CellComplex&) = default;

 private:
  CellComplex() = default;

  std::vector<Face> faces_;
  std::vector<std::string> edges_;
  std::map<std::string, int, std::less<>> counts_;
};

// Same complex up to the choice of orientation and starting point of each
// face word (faces matched by name).
bool same_complex(const CellComplex& a, const CellComplex& b);

enum class VertexKind { Inner, Border, Null };

struct Vertex {
  VertexKind kind = VertexKind::Inner;
  // Cyclic for Inner, a chain from one border symbol to the other for
  // Border, empty for Null.
  std::vector<EdgeSym> members;
};

struct Contour {
  std::vector<EdgeSym> edges;
};

struct InvariantReport {
  bool orientable = true;
  std::size_t num_contours = 0;
  long euler = 0;
  std::size_t n0 = 0;
  std::size_t n1 = 0;
  std::size_t n2 = 0;

  friend bool operator==(const InvariantReport&, const InvariantReport&) = default;
};

// Successors of every oriented symbol, read over each face word and its
// inverse.  One entry per occurrence, so an inner symbol always has two.
std::map<EdgeSym, std::vector<EdgeSym>> successors(const CellComplex& k);

// Vertices sorted by least member.  [Null] for the single empty face.
std::vector<Vertex> vertices(const CellComplex& k);

std::vector<Contour> contours(const CellComplex& k);
bool is_orientable(const CellComplex& k);
long euler_characteristic(const CellComplex& k);
InvariantReport invariant_report(const CellComplex& k);

std::string format_vertex(const Vertex& v);

// Occurrence-level view of a complex.  Every occurrence of a symbol in a face
// word or in the inverse of a face word is a slot; the slot of x followed by
// y is linked to the slot of y' followed by x', and vertices are the
// connected components of this linking.  Used by the rewrite engine.
class SlotGraph {
 public:
  struct Slot {
    std::size_t face = 0;
    bool inverted = false;  // slot lives in the inverse of the face word
    std::size_t pos = 0;

    friend bool operator==(const Slot&, const Slot&) = default;
  };

  explicit SlotGraph(const CellComplex& k);

  const std::vector<Vertex>& vertices() const noexcept { return vertices_; }
  // Index into vertices() of the vertex containing s.
  std::size_t vertex_of(const EdgeSym& s) const;
  bool contains(const EdgeSym& s) const { return vertex_index_.count(s) != 0; }
  // Slots of s (1 for border symbols, 2 for inner ones).
  const std::vector<Slot>& slots(const EdgeSym& s) const;
  // Symbol following the slot in its word.
  const EdgeSym& successor(const Slot& slot) const;
  std::size_t inner_vertex_count() const;

 private:
  const CellComplex* complex_;
  std::vector<Word> words_;  // face i -> words_[2i], inverse -> words_[2i+1]
  std::map<EdgeSym, std::vector<Slot>> slots_;
  std::vector<Vertex> vertices_;
  std::map<EdgeSym, std::size_t> vertex_index_;

  const Word& word_of(const Slot& s) const {
    return words_[2 * s.face + (s.inverted ? 1 : 0)];
  }
  Slot partner(const Slot& s) const;
  const EdgeSym& symbol(const Slot& s) const;
  void trace_vertices();
};

}  // namespace surfcls
