#pragma once

// Triangulations read off the classical 4x4-vertex grid pictures: every
// square (i,j) is cut along its diagonal from (i,j) to (i+1,j+1).  Border
// labels carry the identifications.

#include <algorithm>
#include <array>
#include <utility>
#include <string>
#include <vector>

#include "surfcls/simplicial.hpp"

namespace figs {

using Grid = std::array<std::array<const char*, 4>, 4>;  // rows top to bottom

// flip: squares (i,j) cut along the other diagonal instead.
inline std::vector<surfcls::STriangle> from_grid(const Grid& g, std::vector<std::pair<int, int>> flip = {}) {
  std::vector<surfcls::STriangle> out;
  for (int j = 0; j < 3; ++j)
    for (int i = 0; i < 3; ++i) {
      std::string p = g[j][i], q = g[j][i + 1], r = g[j + 1][i + 1], s = g[j + 1][i];
      if (std::find(flip.begin(), flip.end(), std::pair{i, j}) != flip.end()) {
        out.push_back({q, p, s});
        out.push_back({q, r, s});
      } else {
        out.push_back({p, q, r});
        out.push_back({p, s, r});
      }
    }
  return out;
}

inline std::vector<surfcls::STriangle> torus() {
  return from_grid({{{"a", "b", "c", "a"}, {"e", "i", "j", "e"}, {"d", "f", "g", "d"}, {"a", "b", "c", "a"}}});
}

// Drawn literally, the two corner squares holding a, b and f both produce
// the triangle {a,b,f}; cutting those squares the other way keeps every
// label and identification and gives an honest simplicial complex.
inline std::vector<surfcls::STriangle> projective_plane_as_drawn() {
  return from_grid({{{"d", "c", "b", "a"}, {"e", "j", "k", "f"}, {"f", "g", "h", "e"}, {"a", "b", "c", "d"}}});
}

inline std::vector<surfcls::STriangle> projective_plane() {
  return from_grid({{{"d", "c", "b", "a"}, {"e", "j", "k", "f"}, {"f", "g", "h", "e"}, {"a", "b", "c", "d"}}},
                   {{2, 0}, {0, 2}});
}

inline std::vector<surfcls::STriangle> klein_bottle() {
  return from_grid({{{"a", "b", "c", "a"}, {"e", "i", "j", "d"}, {"d", "f", "g", "e"}, {"a", "b", "c", "a"}}});
}

inline std::vector<surfcls::STriangle> tetrahedron() {
  return {{"a", "b", "c"}, {"a", "b", "d"}, {"a", "c", "d"}, {"b", "c", "d"}};
}

}  // namespace figs
