#include "surfcls/io.hpp"

#include <cerrno>
#include <cmath>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <sstream>

#include "surfcls/error.hpp"

namespace surfcls {

namespace {

struct Line {
  std::size_t number;
  std::string text;  // comment stripped, trimmed
};

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::vector<Line> significant_lines(std::string_view text) {
  std::vector<Line> out;
  std::size_t n = 0, pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    ++n;
    std::string_view raw = text.substr(pos, nl - pos);
    if (auto h = raw.find('#'); h != std::string_view::npos) raw = raw.substr(0, h);
    std::string t = trim(raw);
    if (!t.empty()) out.push_back({n, std::move(t)});
    pos = nl + 1;
  }
  return out;
}

[[noreturn]] void fail(std::size_t line, const std::string& msg) {
  throw Error(ErrorCode::ParseError, "line " + std::to_string(line) + ": " + msg);
}

std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream is(s);
  std::vector<std::string> out;
  for (std::string t; is >> t;) out.push_back(t);
  return out;
}

double parse_double(const std::string& tok, std::size_t line) {
  const char* b = tok.c_str();
  char* end = nullptr;
  errno = 0;
  double v = std::strtod(b, &end);
  if (end == b || *end != '\0' || errno == ERANGE || !std::isfinite(v)) fail(line, "bad number '" + tok + "'");
  return v;
}

}  // namespace

CellFile parse_cell_complex(std::string_view text) {
  std::string surface;
  std::vector<Face> faces;
  bool first = true;
  for (const Line& l : significant_lines(text)) {
    std::string kw = l.text.substr(0, l.text.find_first_of(" \t"));
    std::string rest = trim(std::string_view(l.text).substr(kw.size()));
    if (kw == "surface") {
      if (!first) fail(l.number, "'surface' header must come first");
      if (rest.empty()) fail(l.number, "'surface' needs a name");
      surface = rest;
    } else if (kw == "face") {
      auto colon = rest.find(':');
      if (colon == std::string::npos) fail(l.number, "expected 'face <Name> : <word>'");
      std::string name = trim(std::string_view(rest).substr(0, colon));
      if (!is_user_identifier(name)) fail(l.number, "illegal face name '" + name + "'");
      try {
        faces.push_back({name, parse_word(std::string_view(rest).substr(colon + 1))});
      } catch (const Error& e) {
        throw Error(e.code(), "line " + std::to_string(l.number) + ": " + e.what());
      }
    } else {
      fail(l.number, "unknown keyword '" + kw + "'");
    }
    first = false;
  }
  if (faces.empty()) throw Error(ErrorCode::EmptyFaceSet, "no faces in input");
  return CellFile{surface, CellComplex::build(std::move(faces))};
}

std::string format_cell_complex(const CellComplex& k, std::string_view surface) {
  std::string out;
  if (!surface.empty()) out += "surface " + std::string(surface) + "\n";
  for (const Face& f : k.faces()) {
    out += "face " + f.name + " :";
    if (!f.word.empty()) out += " " + format_word(f.word);
    out += "\n";
  }
  return out;
}

std::vector<STriangle> parse_simplicial(std::string_view text) {
  std::vector<STriangle> out;
  for (const Line& l : significant_lines(text)) {
    auto toks = split_ws(l.text);
    if (toks.size() != 4 || toks[0] != "triangle") fail(l.number, "expected 'triangle v1 v2 v3'");
    out.push_back({toks[1], toks[2], toks[3]});
  }
  if (out.empty()) throw Error(ErrorCode::EmptyFaceSet, "no triangles in input");
  return out;
}

std::string format_simplicial(const SimplicialComplex2& s) {
  std::string out = "# " + std::to_string(s.vertices().size()) + " vertices, " +
                    std::to_string(s.edges().size()) + " edges, " + std::to_string(s.triangles().size()) +
                    " triangles\n";
  for (const STriangle& t : s.triangles()) out += "triangle " + t[0] + " " + t[1] + " " + t[2] + "\n";
  return out;
}

IFS parse_ifs(std::string_view text) {
  std::vector<AffineMap2> maps;
  for (const Line& l : significant_lines(text)) {
    auto toks = split_ws(l.text);
    if (toks.size() != 6) fail(l.number, "expected six numbers 'a b c d e f'");
    double v[6];
    for (int i = 0; i < 6; ++i) v[i] = parse_double(toks[static_cast<std::size_t>(i)], l.number);
    maps.push_back({v[0], v[1], v[2], v[3], v[4], v[5]});
  }
  return make_ifs(std::move(maps));
}

std::vector<Vec2> parse_points(std::string_view text) {
  std::vector<Vec2> out;
  for (const Line& l : significant_lines(text)) {
    auto comma = l.text.find(',');
    if (comma == std::string::npos || l.text.find(',', comma + 1) != std::string::npos)
      fail(l.number, "expected 'x,y'");
    out.push_back({parse_double(trim(std::string_view(l.text).substr(0, comma)), l.number),
                   parse_double(trim(std::string_view(l.text).substr(comma + 1)), l.number)});
  }
  return out;
}

bool looks_simplicial(std::string_view text) {
  auto lines = significant_lines(text);
  return !lines.empty() && lines.front().text.rfind("triangle", 0) == 0;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, "cannot read '" + path + "': " + std::strerror(errno));
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, std::string_view data) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::IoError, "cannot write '" + path + "': " + std::strerror(errno));
  out.write(data.data(), static_cast<std::streamsize>(data.size()));
  if (!out) throw Error(ErrorCode::IoError, "write to '" + path + "' failed");
}

}  // namespace surfcls
