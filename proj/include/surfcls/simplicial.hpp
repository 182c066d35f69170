#pragma once

// Abstract 2-dimensional simplicial complexes: surface validation, boundary
// matrices, homology, and triangulation of cell complexes.

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "surfcls/cellcomplex.hpp"
#include "surfcls/intlinalg.hpp"

namespace surfcls {

using SEdge = std::array<std::string, 2>;
using STriangle = std::array<std::string, 3>;

class SimplicialComplex2 {
 public:
  // Each triple needs three distinct vertices (DegenerateTriangle).
  // Duplicates collapse.  Vertices and edges are the closure.
  static SimplicialComplex2 build(const std::vector<STriangle>& triangles);

  // All sorted ascending; simplices list their vertices ascending.
  const std::vector<std::string>& vertices() const noexcept { return vertices_; }
  const std::vector<SEdge>& edges() const noexcept { return edges_; }
  const std::vector<STriangle>& triangles() const noexcept { return triangles_; }

 private:
  std::vector<std::string> vertices_;
  std::vector<SEdge> edges_;
  std::vector<STriangle> triangles_;
};

struct SurfaceReport {
  bool ok = true;
  std::vector<std::string> violations;
};

// D1 every edge in two triangles, D2 every vertex star a single cycle of
// m >= 3 triangles, D3 connected.
SurfaceReport validate_closed_surface(const SimplicialComplex2& k);
// Edges in one or two triangles; interior vertices as above, vertices on
// border edges have a fan that is a single path between two border edges;
// connected.
SurfaceReport validate_bordered_surface(const SimplicialComplex2& k);

struct ChainComplexData {
  std::vector<std::string> basis0;
  std::vector<SEdge> basis1;
  std::vector<STriangle> basis2;
  IntMatrix d1;  // |V| x |E|
  IntMatrix d2;  // |E| x |T|
};

ChainComplexData boundary_matrices(const SimplicialComplex2& k);

struct Homology {
  FgAbelianGroup h0, h1, h2;

  friend bool operator==(const Homology&, const Homology&) = default;
};

Homology homology(const SimplicialComplex2& k);
Homology homology(const ChainComplexData& c);

// |V| - |E| + |T|, checked against the alternating sum of Betti numbers.
long euler_simplicial(const SimplicialComplex2& k);
long betti_euler(const Homology& h);

// Each triangle as a face whose edges are shared by name; used to ask the
// cell-complex layer about orientability and contours.
CellComplex to_cell_complex(const SimplicialComplex2& k);

struct Refinement {
  CellComplex refined;
  SimplicialComplex2 simplicial;
};

// Split every edge, cone every face from a centre, split each triangle into
// four (repeated until the result is a simplicial complex), then read off
// vertices as classes of the refined complex.
Refinement refine_to_triangulation(const CellComplex& k);

}  // namespace surfcls
