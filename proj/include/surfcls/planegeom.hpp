#pragma once

// Plane geometry: affine iterated function systems, Hausdorff distance on
// finite point sets, winding numbers of closed polygonal curves.

#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace surfcls {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Vec2&, const Vec2&) = default;
  friend auto operator<=>(const Vec2&, const Vec2&) = default;
};

// x' = a x + b y + e,  y' = c x + d y + f
struct AffineMap2 {
  double a = 1, b = 0, c = 0, d = 1, e = 0, f = 0;

  Vec2 operator()(Vec2 p) const noexcept { return {a * p.x + b * p.y + e, c * p.x + d * p.y + f}; }
  friend bool operator==(const AffineMap2&, const AffineMap2&) = default;
};

// Largest singular value of the linear part.
double contraction_ratio(const AffineMap2& m);

struct IFS {
  std::vector<AffineMap2> maps;
  double lambda = 0.0;  // max contraction ratio
};

// Throws InvalidIfs if maps is empty, a coefficient is not finite, or some
// map is not contracting.
IFS make_ifs(std::vector<AffineMap2> maps);

struct Segment {
  Vec2 p, q;
  friend bool operator==(const Segment&, const Segment&) = default;
};
struct Polygon {
  std::vector<Vec2> pts;
  friend bool operator==(const Polygon&, const Polygon&) = default;
};
using Primitive = std::variant<Vec2, Segment, Polygon>;

struct Scene {
  std::vector<Primitive> primitives;
  friend bool operator==(const Scene&, const Scene&) = default;
};

// Polygons need 3+ vertices, segments distinct endpoints (InvalidScene).
void check_scene(const Scene& s);

// Map-major: all images under maps[0], then maps[1], ...
Scene ifs_step(const IFS& sys, const Scene& s);
Scene ifs_iterate(const IFS& sys, const Scene& s, std::size_t n);

// The five single systems.  UnknownPreset otherwise.
IFS preset(std::string_view name);

// A system together with its starting figure.  Every preset name plus
// "snowflake", which is three conjugated Koch systems, one per side of an
// equilateral triangle run clockwise so the bumps point outward.
struct SeededSystem {
  IFS sys;
  Scene seed;
};
std::vector<SeededSystem> fractal_preset(std::string_view name);
const std::vector<std::string>& fractal_preset_names();
Scene render_iterate(const std::vector<SeededSystem>& parts, std::size_t n);

// Exact; EmptySet when either side is empty.  Uses a uniform grid for the
// nearest-neighbour queries.
double hausdorff_distance(const std::vector<Vec2>& a, const std::vector<Vec2>& b);
// Quadratic reference version.
double hausdorff_distance_brute(const std::vector<Vec2>& a, const std::vector<Vec2>& b);

// Points of a scene; segments and polygon edges sampled with spacing at
// most `spacing`.
std::vector<Vec2> sample_scene(const Scene& s, double spacing);

// delta_n = D(A_n, A_{n+1}) for n < steps.  Throws InternalInvariantViolation
// if delta_{n+1} > lambda delta_n + tol or delta_n > lambda^n delta_0 + tol.
std::vector<double> certify_convergence(const IFS& sys, const std::vector<Vec2>& a0,
                                        std::size_t steps, double tol = 1e-9);

struct WindingResult {
  long index = 0;
  double raw = 0.0;       // angle sum / 2 pi before rounding
  std::size_t pieces = 0; // segments after refinement
};

// Closed polygon given by its vertices (last joins first).  InvalidCurve for
// fewer than 3 points or repeated consecutive points, PointOnCurve when z0
// is within 1e-9 * bbox diagonal of the curve, RefinementLimit past 40
// bisections of one segment.
WindingResult winding(const std::vector<Vec2>& curve, Vec2 z0);
long winding_number(const std::vector<Vec2>& curve, Vec2 z0);

// Deterministic SVG, viewBox = bounding box padded by 5%, y up.
void render_svg(const Scene& s, std::ostream& out);
std::string render_svg(const Scene& s);

}  // namespace surfcls
