#include "surfcls/planegeom.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <limits>
#include <ostream>
#include <sstream>

#include "surfcls/error.hpp"

namespace surfcls {

namespace {

constexpr double kPi = 3.14159265358979323846;
const double kS3 = std::sqrt(3.0);

double dist2(Vec2 p, Vec2 q) {
  double dx = p.x - q.x, dy = p.y - q.y;
  return dx * dx + dy * dy;
}

bool finite(const AffineMap2& m) {
  for (double v : {m.a, m.b, m.c, m.d, m.e, m.f})
    if (!std::isfinite(v)) return false;
  return true;
}

AffineMap2 compose(const AffineMap2& g, const AffineMap2& h) {  // g after h
  AffineMap2 r;
  r.a = g.a * h.a + g.b * h.c;
  r.b = g.a * h.b + g.b * h.d;
  r.c = g.c * h.a + g.d * h.c;
  r.d = g.c * h.b + g.d * h.d;
  r.e = g.a * h.e + g.b * h.f + g.e;
  r.f = g.c * h.e + g.d * h.f + g.f;
  return r;
}

// Similarity sending (-1,0) to p and (1,0) to q, and its inverse.
AffineMap2 side_map(Vec2 p, Vec2 q) {
  double ux = (q.x - p.x) / 2, uy = (q.y - p.y) / 2;
  return {ux, -uy, uy, ux, (p.x + q.x) / 2, (p.y + q.y) / 2};
}
AffineMap2 inverse_similarity(const AffineMap2& s) {
  double n = s.a * s.a + s.c * s.c;
  AffineMap2 r{s.a / n, s.c / n, -s.c / n, s.a / n, 0, 0};
  r.e = -(r.a * s.e + r.b * s.f);
  r.f = -(r.c * s.e + r.d * s.f);
  return r;
}

struct Bbox {
  double x0 = std::numeric_limits<double>::infinity(), y0 = x0;
  double x1 = -x0, y1 = -x0;
  void add(Vec2 p) {
    x0 = std::min(x0, p.x);
    y0 = std::min(y0, p.y);
    x1 = std::max(x1, p.x);
    y1 = std::max(y1, p.y);
  }
  double diag() const { return std::hypot(x1 - x0, y1 - y0); }
};

template <class F>
void for_each_vertex(const Primitive& pr, F&& f) {
  if (auto* p = std::get_if<Vec2>(&pr)) {
    f(*p);
  } else if (auto* s = std::get_if<Segment>(&pr)) {
    f(s->p);
    f(s->q);
  } else {
    for (Vec2 v : std::get<Polygon>(pr).pts) f(v);
  }
}

Primitive map_primitive(const AffineMap2& m, const Primitive& pr) {
  if (auto* p = std::get_if<Vec2>(&pr)) return m(*p);
  if (auto* s = std::get_if<Segment>(&pr)) return Segment{m(s->p), m(s->q)};
  Polygon out;
  for (Vec2 v : std::get<Polygon>(pr).pts) out.pts.push_back(m(v));
  return out;
}

// Uniform grid over a point set for exact nearest-neighbour queries.
class Grid {
 public:
  explicit Grid(const std::vector<Vec2>& pts) : pts_(pts) {
    for (Vec2 p : pts) box_.add(p);
    double w = box_.x1 - box_.x0, h = box_.y1 - box_.y0;
    double n = static_cast<double>(pts.size());
    // about one point per cell, and at most ~3n cells
    cell_ = std::max(std::sqrt(w * h / n), std::max(w, h) / n);
    if (!(cell_ > 0)) cell_ = 1;
    nx_ = static_cast<long>(w / cell_) + 1;
    ny_ = static_cast<long>(h / cell_) + 1;
    start_.assign(static_cast<std::size_t>(nx_ * ny_) + 1, 0);
    for (Vec2 p : pts) ++start_[index(p) + 1];
    for (std::size_t i = 1; i < start_.size(); ++i) start_[i] += start_[i - 1];
    items_.resize(pts.size());
    std::vector<std::size_t> fill(start_.begin(), start_.end() - 1);
    for (std::size_t i = 0; i < pts.size(); ++i) items_[fill[index(pts[i])]++] = i;
  }

  double nearest2(Vec2 q) const {
    long cx = std::clamp(static_cast<long>(std::floor((q.x - box_.x0) / cell_)), 0L, nx_ - 1);
    long cy = std::clamp(static_cast<long>(std::floor((q.y - box_.y0) / cell_)), 0L, ny_ - 1);
    double best = std::numeric_limits<double>::infinity();
    long rmax = std::max({cx, nx_ - 1 - cx, cy, ny_ - 1 - cy});
    for (long r = 0; r <= rmax; ++r) {
      for (long x = cx - r; x <= cx + r; ++x) {
        if (x < 0 || x >= nx_) continue;
        bool edge_col = (x == cx - r || x == cx + r);
        for (long y = cy - r; y <= cy + r; y += (edge_col || r == 0) ? 1 : 2 * r) {
          if (y < 0 || y >= ny_) continue;
          std::size_t c = static_cast<std::size_t>(y * nx_ + x);
          for (std::size_t k = start_[c]; k < start_[c + 1]; ++k)
            best = std::min(best, dist2(q, pts_[items_[k]]));
        }
      }
      double reach = static_cast<double>(r) * cell_;
      if (best <= reach * reach) break;
    }
    return best;
  }

 private:
  std::size_t index(Vec2 p) const {
    long x = std::min(static_cast<long>((p.x - box_.x0) / cell_), nx_ - 1);
    long y = std::min(static_cast<long>((p.y - box_.y0) / cell_), ny_ - 1);
    return static_cast<std::size_t>(y * nx_ + x);
  }

  const std::vector<Vec2>& pts_;
  Bbox box_;
  double cell_ = 1;
  long nx_ = 1, ny_ = 1;
  std::vector<std::size_t> start_, items_;
};

double directed2(const std::vector<Vec2>& a, const std::vector<Vec2>& b) {
  Grid g(b);
  double worst = 0;
  for (Vec2 p : a) worst = std::max(worst, g.nearest2(p));
  return worst;
}

std::vector<Vec2> dedup(std::vector<Vec2> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  std::string s = buf;
  if (s == "-0.000000") s = "0.000000";
  return s;
}

}  // namespace

double contraction_ratio(const AffineMap2& m) {
  double s = std::hypot(m.a + m.d, m.c - m.b);
  double t = std::hypot(m.a - m.d, m.b + m.c);
  return (s + t) / 2;
}

IFS make_ifs(std::vector<AffineMap2> maps) {
  if (maps.empty()) throw Error(ErrorCode::InvalidIfs, "system has no maps");
  IFS out;
  for (std::size_t i = 0; i < maps.size(); ++i) {
    if (!finite(maps[i])) throw Error(ErrorCode::InvalidIfs, "map " + std::to_string(i + 1) + " has a non-finite coefficient");
    double r = contraction_ratio(maps[i]);
    if (!(r < 1.0))
      throw Error(ErrorCode::InvalidIfs, "map " + std::to_string(i + 1) + " is not contracting (ratio " + num(r) + ")");
    out.lambda = std::max(out.lambda, r);
  }
  out.maps = std::move(maps);
  return out;
}

void check_scene(const Scene& s) {
  for (std::size_t i = 0; i < s.primitives.size(); ++i) {
    const Primitive& pr = s.primitives[i];
    if (auto* seg = std::get_if<Segment>(&pr); seg && seg->p == seg->q)
      throw Error(ErrorCode::InvalidScene, "primitive " + std::to_string(i + 1) + ": segment endpoints coincide");
    if (auto* pg = std::get_if<Polygon>(&pr); pg && pg->pts.size() < 3)
      throw Error(ErrorCode::InvalidScene, "primitive " + std::to_string(i + 1) + ": polygon needs 3 vertices");
  }
}

Scene ifs_step(const IFS& sys, const Scene& s) {
  Scene out;
  out.primitives.reserve(sys.maps.size() * s.primitives.size());
  for (const AffineMap2& m : sys.maps)
    for (const Primitive& pr : s.primitives) out.primitives.push_back(map_primitive(m, pr));
  return out;
}

Scene ifs_iterate(const IFS& sys, const Scene& s, std::size_t n) {
  Scene cur = s;
  for (std::size_t i = 0; i < n; ++i) cur = ifs_step(sys, cur);
  return cur;
}

IFS preset(std::string_view name) {
  const double h = 0.5, q = 0.25;
  if (name == "sierpinski-gasket")
    return make_ifs({{h, 0, 0, h, -q, 0}, {h, 0, 0, h, q, 0}, {h, 0, 0, h, 0, kS3 / 4}});
  if (name == "sierpinski-dragon")
    return make_ifs({{-q, -kS3 / 4, kS3 / 4, -q, 0.75, kS3 / 4},
                     {-q, kS3 / 4, -kS3 / 4, -q, -0.75, kS3 / 4},
                     {h, 0, 0, h, 0, kS3 / 2}});
  if (name == "heighway") return make_ifs({{h, -h, h, h, 0, 0}, {-h, -h, h, -h, 0, 1}});
  if (name == "koch")
    return make_ifs({{1.0 / 3, 0, 0, 1.0 / 3, -2.0 / 3, 0},
                     {1.0 / 6, -kS3 / 6, kS3 / 6, 1.0 / 6, -1.0 / 6, kS3 / 6},
                     {1.0 / 6, kS3 / 6, -kS3 / 6, 1.0 / 6, 1.0 / 6, kS3 / 6},
                     {1.0 / 3, 0, 0, 1.0 / 3, 2.0 / 3, 0}});
  if (name == "hilbert")
    return make_ifs({{h, 0, 0, h, -h, 1}, {h, 0, 0, h, h, 1}, {0, -h, h, 0, 1, h}, {0, h, -h, 0, -1, h}});
  throw Error(ErrorCode::UnknownPreset, "unknown preset '" + std::string(name) + "'");
}

const std::vector<std::string>& fractal_preset_names() {
  static const std::vector<std::string> names{"sierpinski-gasket", "sierpinski-dragon", "heighway",
                                              "koch", "snowflake", "hilbert"};
  return names;
}

std::vector<SeededSystem> fractal_preset(std::string_view name) {
  auto seg = [](Vec2 p, Vec2 q) { return Scene{{Segment{p, q}}}; };
  if (name == "sierpinski-gasket") {
    Vec2 a{-0.5, 0}, b{0.5, 0}, c{0, kS3 / 2};
    return {{preset(name), Scene{{Segment{a, b}, Segment{b, c}, Segment{c, a}}}}};
  }
  if (name == "sierpinski-dragon" || name == "koch") return {{preset(name), seg({-1, 0}, {1, 0})}};
  if (name == "heighway") return {{preset(name), seg({0, 0}, {0, 1})}};
  if (name == "hilbert") return {{preset(name), Scene{{Segment{{-1, 0}, {0, 1}}, Segment{{0, 1}, {1, 0}}}}}};
  if (name == "snowflake") {
    IFS koch = preset("koch");
    Vec2 a{-1, 0}, c{0, kS3}, b{1, 0};
    std::vector<SeededSystem> parts;
    for (auto [p, q] : {std::pair{a, c}, std::pair{c, b}, std::pair{b, a}}) {
      AffineMap2 s = side_map(p, q), si = inverse_similarity(s);
      std::vector<AffineMap2> maps;
      for (const AffineMap2& m : koch.maps) maps.push_back(compose(s, compose(m, si)));
      parts.push_back({make_ifs(std::move(maps)), seg(p, q)});
    }
    return parts;
  }
  throw Error(ErrorCode::UnknownPreset, "unknown preset '" + std::string(name) + "'");
}

Scene render_iterate(const std::vector<SeededSystem>& parts, std::size_t n) {
  Scene out;
  for (const SeededSystem& part : parts) {
    Scene s = ifs_iterate(part.sys, part.seed, n);
    out.primitives.insert(out.primitives.end(), s.primitives.begin(), s.primitives.end());
  }
  return out;
}

double hausdorff_distance(const std::vector<Vec2>& a, const std::vector<Vec2>& b) {
  if (a.empty() || b.empty()) throw Error(ErrorCode::EmptySet, "Hausdorff distance of an empty set");
  return std::sqrt(std::max(directed2(a, b), directed2(b, a)));
}

double hausdorff_distance_brute(const std::vector<Vec2>& a, const std::vector<Vec2>& b) {
  if (a.empty() || b.empty()) throw Error(ErrorCode::EmptySet, "Hausdorff distance of an empty set");
  auto dir = [](const std::vector<Vec2>& x, const std::vector<Vec2>& y) {
    double worst = 0;
    for (Vec2 p : x) {
      double best = std::numeric_limits<double>::infinity();
      for (Vec2 q : y) best = std::min(best, dist2(p, q));
      worst = std::max(worst, best);
    }
    return worst;
  };
  return std::sqrt(std::max(dir(a, b), dir(b, a)));
}

std::vector<Vec2> sample_scene(const Scene& s, double spacing) {
  std::vector<Vec2> out;
  auto edge = [&](Vec2 p, Vec2 q) {
    double len = std::sqrt(dist2(p, q));
    std::size_t k = spacing > 0 ? static_cast<std::size_t>(std::ceil(len / spacing)) : 1;
    k = std::max<std::size_t>(k, 1);
    for (std::size_t i = 0; i < k; ++i) {
      double t = static_cast<double>(i) / static_cast<double>(k);
      out.push_back({p.x + t * (q.x - p.x), p.y + t * (q.y - p.y)});
    }
  };
  for (const Primitive& pr : s.primitives) {
    if (auto* p = std::get_if<Vec2>(&pr)) {
      out.push_back(*p);
    } else if (auto* sg = std::get_if<Segment>(&pr)) {
      edge(sg->p, sg->q);
      out.push_back(sg->q);
    } else {
      const auto& pts = std::get<Polygon>(pr).pts;
      for (std::size_t i = 0; i < pts.size(); ++i) edge(pts[i], pts[(i + 1) % pts.size()]);
    }
  }
  return out;
}

std::vector<double> certify_convergence(const IFS& sys, const std::vector<Vec2>& a0, std::size_t steps,
                                        double tol) {
  if (a0.empty()) throw Error(ErrorCode::EmptySet, "empty starting set");
  auto step = [&](const std::vector<Vec2>& a) {
    std::vector<Vec2> out;
    out.reserve(a.size() * sys.maps.size());
    for (const AffineMap2& m : sys.maps)
      for (Vec2 p : a) out.push_back(m(p));
    return dedup(std::move(out));
  };
  std::vector<double> delta;
  std::vector<Vec2> cur = dedup(a0);
  std::vector<Vec2> next = step(cur);
  for (std::size_t n = 0; n < steps; ++n) {
    double d = hausdorff_distance(cur, next);
    if (n > 0 && d > sys.lambda * delta.back() + tol)
      throw Error(ErrorCode::InternalInvariantViolation,
                  "contraction bound fails at step " + std::to_string(n) + ": " + num(d));
    if (n > 0 && d > std::pow(sys.lambda, static_cast<double>(n)) * delta.front() + tol)
      throw Error(ErrorCode::InternalInvariantViolation, "geometric bound fails at step " + std::to_string(n));
    delta.push_back(d);
    if (n + 1 < steps) {
      cur = std::move(next);
      next = step(cur);
    }
  }
  return delta;
}

WindingResult winding(const std::vector<Vec2>& curve, Vec2 z0) {
  const std::size_t n = curve.size();
  if (n < 3) throw Error(ErrorCode::InvalidCurve, "closed curve needs at least 3 points");
  Bbox box;
  for (std::size_t i = 0; i < n; ++i) {
    if (!std::isfinite(curve[i].x) || !std::isfinite(curve[i].y))
      throw Error(ErrorCode::InvalidCurve, "non-finite point at index " + std::to_string(i + 1));
    if (curve[i] == curve[(i + 1) % n])
      throw Error(ErrorCode::InvalidCurve, "repeated consecutive point at index " + std::to_string(i + 1));
    box.add(curve[i]);
  }
  const double eps = 1e-9 * box.diag();
  for (std::size_t i = 0; i < n; ++i) {
    Vec2 p = curve[i], q = curve[(i + 1) % n];
    double dx = q.x - p.x, dy = q.y - p.y;
    double t = std::clamp(((z0.x - p.x) * dx + (z0.y - p.y) * dy) / (dx * dx + dy * dy), 0.0, 1.0);
    if (std::sqrt(dist2(z0, {p.x + t * dx, p.y + t * dy})) <= eps)
      throw Error(ErrorCode::PointOnCurve, "point lies on segment " + std::to_string(i + 1));
  }

  using C = std::complex<double>;
  const C z(z0.x, z0.y);
  WindingResult res;
  double total = 0;
  struct Piece {
    C p, q;
    int depth;
  };
  std::vector<Piece> stack;
  for (std::size_t i = 0; i < n; ++i) {
    stack.push_back({C(curve[i].x, curve[i].y), C(curve[(i + 1) % n].x, curve[(i + 1) % n].y), 0});
    while (!stack.empty()) {
      Piece pc = stack.back();
      stack.pop_back();
      C w = (pc.q - z) / (pc.p - z);
      if (std::abs(w - 1.0) < 1.0) {
        total += std::arg(w);
        ++res.pieces;
        continue;
      }
      if (pc.depth >= 40)
        throw Error(ErrorCode::RefinementLimit, "segment " + std::to_string(i + 1) + " needs more than 40 bisections");
      C mid = (pc.p + pc.q) / 2.0;
      stack.push_back({mid, pc.q, pc.depth + 1});
      stack.push_back({pc.p, mid, pc.depth + 1});
    }
  }
  res.raw = total / (2 * kPi);
  res.index = std::lround(res.raw);
  if (std::abs(res.raw - static_cast<double>(res.index)) >= 1e-6)
    throw Error(ErrorCode::InternalInvariantViolation, "winding residual too large: " + num(res.raw));
  return res;
}

long winding_number(const std::vector<Vec2>& curve, Vec2 z0) { return winding(curve, z0).index; }

void render_svg(const Scene& s, std::ostream& out) {
  if (s.primitives.empty()) throw Error(ErrorCode::InvalidScene, "nothing to render");
  Bbox box;
  for (const Primitive& pr : s.primitives) for_each_vertex(pr, [&](Vec2 p) { box.add({p.x, -p.y}); });
  double w = box.x1 - box.x0, h = box.y1 - box.y0;
  double ext = std::max(w, h);
  if (!(ext > 0)) ext = 1;
  double px = w > 0 ? 0.05 * w : 0.05 * ext, py = h > 0 ? 0.05 * h : 0.05 * ext;
  double vx = box.x0 - px, vy = box.y0 - py, vw = w + 2 * px, vh = h + 2 * py;
  double stroke = 0.002 * std::max(vw, vh), radius = 0.004 * std::max(vw, vh);

  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << num(vx) << ' ' << num(vy) << ' ' << num(vw)
      << ' ' << num(vh) << "\">\n";
  out << "<g stroke=\"black\" stroke-width=\"" << num(stroke) << "\" stroke-linejoin=\"round\">\n";
  for (const Primitive& pr : s.primitives) {
    if (auto* p = std::get_if<Vec2>(&pr)) {
      out << "<circle cx=\"" << num(p->x) << "\" cy=\"" << num(-p->y) << "\" r=\"" << num(radius)
          << "\" fill=\"black\" stroke=\"none\"/>\n";
    } else if (auto* sg = std::get_if<Segment>(&pr)) {
      out << "<path fill=\"none\" d=\"M " << num(sg->p.x) << ' ' << num(-sg->p.y) << " L " << num(sg->q.x) << ' '
          << num(-sg->q.y) << "\"/>\n";
    } else {
      const auto& pts = std::get<Polygon>(pr).pts;
      out << "<path fill=\"#999999\" d=\"M";
      for (std::size_t i = 0; i < pts.size(); ++i)
        out << (i ? " L " : " ") << num(pts[i].x) << ' ' << num(-pts[i].y);
      out << " Z\"/>\n";
    }
  }
  out << "</g>\n</svg>\n";
}

std::string render_svg(const Scene& s) {
  std::ostringstream os;
  render_svg(s, os);
  return os.str();
}

}  // namespace surfcls
