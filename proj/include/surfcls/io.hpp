#pragma once

// Text file formats.
//
//   cell complex   optional `surface <name>` line, then `face <Name> : <word>`
//                  lines (word may be empty)
//   simplicial     `triangle v1 v2 v3` lines
//   IFS            `a b c d e f` per line, one map each
//   points         `x,y` per line
//
// `#` starts a comment in all of them; blank lines are ignored.  Parse
// failures throw Error(ParseError) with a "line N:" prefix.

#include <string>
#include <string_view>
#include <vector>

#include "surfcls/cellcomplex.hpp"
#include "surfcls/planegeom.hpp"
#include "surfcls/simplicial.hpp"

namespace surfcls {

struct CellFile {
  std::string surface;  // empty when the header is absent
  CellComplex complex;
};

CellFile parse_cell_complex(std::string_view text);
std::string format_cell_complex(const CellComplex& k, std::string_view surface = {});

std::vector<STriangle> parse_simplicial(std::string_view text);
std::string format_simplicial(const SimplicialComplex2& s);

IFS parse_ifs(std::string_view text);
std::vector<Vec2> parse_points(std::string_view text);

// True when the first significant line starts with `triangle`.
bool looks_simplicial(std::string_view text);

std::string read_file(const std::string& path);   // IoError
void write_file(const std::string& path, std::string_view data);  // IoError

}  // namespace surfcls
