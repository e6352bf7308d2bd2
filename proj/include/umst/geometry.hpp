#pragma once

// Planar uncertainty regions and extremal distances between them.
// Regions are trivial points, open axis-aligned rectangles, or open
// disks; distances are taken over closures, which attain both extremes.

#include <cmath>
#include <random>
#include <variant>

#include "umst/area.hpp"
#include "umst/errors.hpp"

namespace umst {

struct Point {
  double x = 0;
  double y = 0;
};

inline double distance(const Point& a, const Point& b) { return std::hypot(a.x - b.x, a.y - b.y); }

struct Rect {  // open interior (x0, x0+width) x (y0, y0+height)
  double x0 = 0;
  double y0 = 0;
  double width = 0;
  double height = 0;
};

struct Disk {  // open
  Point center;
  double radius = 0;
};

struct Region {
  std::variant<Point, Rect, Disk> shape;

  Region() : shape(Point{}) {}
  Region(Point p) : shape(p) {}
  Region(Rect r) : shape(r) {}
  Region(Disk d) : shape(d) {}

  bool is_trivial() const { return std::holds_alternative<Point>(shape); }

  const char* kind() const {
    if (std::holds_alternative<Point>(shape)) return "point";
    if (std::holds_alternative<Rect>(shape)) return "rect";
    return "disk";
  }

  // strict interior membership (trivial regions contain exactly their point)
  bool contains(const Point& p) const {
    if (auto* pt = std::get_if<Point>(&shape)) return pt->x == p.x && pt->y == p.y;
    if (auto* r = std::get_if<Rect>(&shape))
      return p.x > r->x0 && p.x < r->x0 + r->width && p.y > r->y0 && p.y < r->y0 + r->height;
    const Disk& d = std::get<Disk>(shape);
    return distance(d.center, p) < d.radius;
  }
};

inline void validate_region(const Region& r) {
  auto finite = [](double v) { return std::isfinite(v); };
  if (auto* p = std::get_if<Point>(&r.shape)) {
    if (!finite(p->x) || !finite(p->y)) throw Error(ErrorCode::BadInput, "non-finite point");
    return;
  }
  if (auto* rc = std::get_if<Rect>(&r.shape)) {
    if (!finite(rc->x0) || !finite(rc->y0) || !(rc->width > 0) || !(rc->height > 0))
      throw Error(ErrorCode::BadInput, "rect needs positive width and height");
    return;
  }
  const Disk& d = std::get<Disk>(r.shape);
  if (!finite(d.center.x) || !finite(d.center.y) || !(d.radius > 0))
    throw Error(ErrorCode::BadInput, "disk needs a positive radius");
}

inline Point clamp_to_closure(const Region& r, const Point& p) {
  if (auto* pt = std::get_if<Point>(&r.shape)) return *pt;
  if (auto* rc = std::get_if<Rect>(&r.shape))
    return Point{std::clamp(p.x, rc->x0, rc->x0 + rc->width),
                 std::clamp(p.y, rc->y0, rc->y0 + rc->height)};
  const Disk& d = std::get<Disk>(r.shape);
  double dist = distance(d.center, p);
  if (dist <= d.radius) return p;
  double s = d.radius / dist;
  return Point{d.center.x + (p.x - d.center.x) * s, d.center.y + (p.y - d.center.y) * s};
}

inline double min_distance(const Region& a, const Point& p) {
  return distance(clamp_to_closure(a, p), p);
}

inline double max_distance(const Region& a, const Point& p) {
  if (auto* pt = std::get_if<Point>(&a.shape)) return distance(*pt, p);
  if (auto* rc = std::get_if<Rect>(&a.shape)) {
    double dx = std::max(std::abs(p.x - rc->x0), std::abs(p.x - (rc->x0 + rc->width)));
    double dy = std::max(std::abs(p.y - rc->y0), std::abs(p.y - (rc->y0 + rc->height)));
    return std::hypot(dx, dy);
  }
  const Disk& d = std::get<Disk>(a.shape);
  return distance(d.center, p) + d.radius;
}

inline double min_distance(const Region& a, const Region& b) {
  if (b.is_trivial()) return min_distance(a, std::get<Point>(b.shape));
  if (a.is_trivial()) return min_distance(b, std::get<Point>(a.shape));
  if (auto* ra = std::get_if<Rect>(&a.shape)) {
    if (auto* rb = std::get_if<Rect>(&b.shape)) {
      double dx = std::max({0.0, ra->x0 - (rb->x0 + rb->width), rb->x0 - (ra->x0 + ra->width)});
      double dy = std::max({0.0, ra->y0 - (rb->y0 + rb->height), rb->y0 - (ra->y0 + ra->height)});
      return std::hypot(dx, dy);
    }
    const Disk& db = std::get<Disk>(b.shape);
    return std::max(0.0, min_distance(a, db.center) - db.radius);
  }
  const Disk& da = std::get<Disk>(a.shape);
  if (auto* rb = std::get_if<Rect>(&b.shape)) {
    (void)rb;
    return std::max(0.0, min_distance(b, da.center) - da.radius);
  }
  const Disk& db = std::get<Disk>(b.shape);
  return std::max(0.0, distance(da.center, db.center) - da.radius - db.radius);
}

inline double max_distance(const Region& a, const Region& b) {
  if (b.is_trivial()) return max_distance(a, std::get<Point>(b.shape));
  if (a.is_trivial()) return max_distance(b, std::get<Point>(a.shape));
  if (auto* ra = std::get_if<Rect>(&a.shape)) {
    if (auto* rb = std::get_if<Rect>(&b.shape)) {
      double best = 0;
      for (double ax : {ra->x0, ra->x0 + ra->width})
        for (double ay : {ra->y0, ra->y0 + ra->height})
          for (double bx : {rb->x0, rb->x0 + rb->width})
            for (double by : {rb->y0, rb->y0 + rb->height})
              best = std::max(best, std::hypot(ax - bx, ay - by));
      return best;
    }
    const Disk& db = std::get<Disk>(b.shape);
    return max_distance(a, db.center) + db.radius;
  }
  const Disk& da = std::get<Disk>(a.shape);
  if (std::holds_alternative<Rect>(b.shape)) return max_distance(b, da.center) + da.radius;
  const Disk& db = std::get<Disk>(b.shape);
  return distance(da.center, db.center) + da.radius + db.radius;
}

inline bool closures_disjoint(const Region& a, const Region& b) { return min_distance(a, b) > 0; }

// The set of possible distances between two regions, as an uncertainty
// area: trivial iff both regions are trivial, otherwise fully open (the
// extremes need boundary points, which open regions do not contain).
inline Area region_distance_area(const Region& a, const Region& b) {
  if (!closures_disjoint(a, b))
    throw Error(ErrorCode::UnsupportedGeometry, "regions with overlapping closures");
  if (a.is_trivial() && b.is_trivial())
    return Area::trivial(weight_from_double(
        distance(std::get<Point>(a.shape), std::get<Point>(b.shape))));
  return Area::open(weight_from_double(min_distance(a, b)),
                    weight_from_double(max_distance(a, b)));
}

// Uniform-ish point strictly inside the region, inset from the boundary
// by `inset` (a fraction of the region's size).
inline Point random_interior_point(const Region& r, std::mt19937_64& rng, double inset = 0.1) {
  if (auto* pt = std::get_if<Point>(&r.shape)) return *pt;
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  if (auto* rc = std::get_if<Rect>(&r.shape)) {
    double u = inset + (1 - 2 * inset) * unit(rng);
    double v = inset + (1 - 2 * inset) * unit(rng);
    return Point{rc->x0 + rc->width * u, rc->y0 + rc->height * v};
  }
  const Disk& d = std::get<Disk>(r.shape);
  double rad = d.radius * (1 - inset) * std::sqrt(unit(rng));
  double ang = 2 * M_PI * unit(rng);
  return Point{d.center.x + rad * std::cos(ang), d.center.y + rad * std::sin(ang)};
}

}  // namespace umst
