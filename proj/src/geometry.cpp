#include "biplanar/geometry.hpp"

#include <array>

#include "biplanar/errors.hpp"

namespace biplanar {

Point operator+(const Point& a, const Point& b) {
  return Point{a.x + b.x, a.y + b.y};
}
Point operator-(const Point& a, const Point& b) {
  return Point{a.x - b.x, a.y - b.y};
}

Rational cross(const Point& p, const Point& q, const Point& r) {
  return (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x);
}

Rational dot(const Point& p, const Point& q, const Point& r) {
  return (q.x - p.x) * (r.x - p.x) + (q.y - p.y) * (r.y - p.y);
}

Rational dist2(const Point& a, const Point& b) {
  return (b.x - a.x) * (b.x - a.x) + (b.y - a.y) * (b.y - a.y);
}

Orientation orientation(const Point& p, const Point& q, const Point& r) {
  const Rational c = cross(p, q, r);
  if (c > 0) return Orientation::Left;
  if (c < 0) return Orientation::Right;
  return Orientation::Collinear;
}

namespace {

// p is known collinear with seg's endpoints; is it within the closed segment?
bool on_segment_collinear(const Point& p, const Segment& seg) {
  const Rational minx = seg.a.x < seg.b.x ? seg.a.x : seg.b.x;
  const Rational maxx = seg.a.x < seg.b.x ? seg.b.x : seg.a.x;
  const Rational miny = seg.a.y < seg.b.y ? seg.a.y : seg.b.y;
  const Rational maxy = seg.a.y < seg.b.y ? seg.b.y : seg.a.y;
  return minx <= p.x && p.x <= maxx && miny <= p.y && p.y <= maxy;
}

Point line_intersection_point(const Segment& s, const Segment& t) {
  const Point r = s.b - s.a;
  const Point q = t.b - t.a;
  const Rational denom = r.x * q.y - r.y * q.x;
  // Caller guarantees non-parallel.
  const Point ca = t.a - s.a;
  const Rational u = (ca.x * q.y - ca.y * q.x) / denom;
  return Point{s.a.x + u * r.x, s.a.y + u * r.y};
}

}  // namespace

Intersection segment_intersection(const Segment& s, const Segment& t) {
  const Orientation d1 = orientation(t.a, t.b, s.a);
  const Orientation d2 = orientation(t.a, t.b, s.b);
  const Orientation d3 = orientation(s.a, s.b, t.a);
  const Orientation d4 = orientation(s.a, s.b, t.b);

  if (d1 == Orientation::Collinear && d2 == Orientation::Collinear) {
    // All four points on one line: interval analysis along the longer axis.
    // Collect containment of endpoints.
    std::vector<Point> hits;
    auto add_unique = [&hits](const Point& p) {
      for (const auto& h : hits)
        if (h == p) return;
      hits.push_back(p);
    };
    if (on_segment_collinear(s.a, t)) add_unique(s.a);
    if (on_segment_collinear(s.b, t)) add_unique(s.b);
    if (on_segment_collinear(t.a, s)) add_unique(t.a);
    if (on_segment_collinear(t.b, s)) add_unique(t.b);
    if (hits.empty()) return {IntersectKind::None, std::nullopt};
    if (hits.size() == 1) return {IntersectKind::Touch, hits[0]};
    return {IntersectKind::Overlap, std::nullopt};
  }

  const bool s_straddles = (d1 != d2) && d1 != Orientation::Collinear &&
                           d2 != Orientation::Collinear;
  const bool t_straddles = (d3 != d4) && d3 != Orientation::Collinear &&
                           d4 != Orientation::Collinear;
  if (s_straddles && t_straddles) {
    return {IntersectKind::ProperCross, line_intersection_point(s, t)};
  }

  // Touch cases: an endpoint of one segment lies on the other.
  if (d1 == Orientation::Collinear && on_segment_collinear(s.a, t))
    return {IntersectKind::Touch, s.a};
  if (d2 == Orientation::Collinear && on_segment_collinear(s.b, t))
    return {IntersectKind::Touch, s.b};
  if (d3 == Orientation::Collinear && on_segment_collinear(t.a, s))
    return {IntersectKind::Touch, t.a};
  if (d4 == Orientation::Collinear && on_segment_collinear(t.b, s))
    return {IntersectKind::Touch, t.b};
  return {IntersectKind::None, std::nullopt};
}

bool strictly_convex(const std::vector<Point>& polygon) {
  if (polygon.size() < 3)
    throw PreconditionError("strictly_convex needs at least 3 points");
  const size_t n = polygon.size();
  Orientation sign = Orientation::Collinear;
  for (size_t i = 0; i < n; ++i) {
    const Orientation o =
        orientation(polygon[i], polygon[(i + 1) % n], polygon[(i + 2) % n]);
    if (o == Orientation::Collinear) return false;
    if (sign == Orientation::Collinear) sign = o;
    if (o != sign) return false;
  }
  return true;
}

bool strictly_inside_convex(const std::vector<Point>& polygon, const Point& p) {
  const size_t n = polygon.size();
  Orientation sign = Orientation::Collinear;
  for (size_t i = 0; i < n; ++i) {
    const Orientation o = orientation(polygon[i], polygon[(i + 1) % n], p);
    if (o == Orientation::Collinear) return false;
    if (sign == Orientation::Collinear) sign = o;
    if (o != sign) return false;
  }
  return true;
}

bool inside_or_on_convex(const std::vector<Point>& polygon, const Point& p) {
  const size_t n = polygon.size();
  Orientation sign = Orientation::Collinear;
  for (size_t i = 0; i < n; ++i) {
    const Orientation o = orientation(polygon[i], polygon[(i + 1) % n], p);
    if (o == Orientation::Collinear) {
      if (on_segment_collinear(p, Segment{polygon[i], polygon[(i + 1) % n]}))
        return true;  // exactly on the boundary
      return false;   // on the supporting line but outside the edge
    }
    if (sign == Orientation::Collinear) sign = o;
    if (o != sign) return false;
  }
  return true;
}

AffineMap AffineMap::identity() {
  return AffineMap{Rational(1), Rational(0), Rational(0),
                   Rational(1), Rational(0), Rational(0)};
}

Point apply_map(const AffineMap& m, const Point& p) {
  return Point{m.a * p.x + m.b * p.y + m.e, m.c * p.x + m.d * p.y + m.f};
}

Rational map_determinant(const AffineMap& m) { return m.a * m.d - m.b * m.c; }

AffineMap affine_from_triples(const Point& p1, const Point& p2, const Point& p3,
                              const Point& q1, const Point& q2,
                              const Point& q3) {
  // Solve [x y 1] * [a c; b d; e f] = [x' y'] by Cramer's rule.
  const Rational det = cross(p1, p2, p3);
  if (det == 0)
    throw PreconditionError("affine map from collinear source points");
  auto solve = [&](const Rational& r1, const Rational& r2,
                   const Rational& r3) {
    // Solve a*x_i + b*y_i + e = r_i for (a, b, e).
    const Rational da = r1 * (p2.y - p3.y) + r2 * (p3.y - p1.y) +
                        r3 * (p1.y - p2.y);
    const Rational db = p1.x * (r2 - r3) + p2.x * (r3 - r1) + p3.x * (r1 - r2);
    const Rational de = p1.x * (p2.y * r3 - p3.y * r2) +
                        p2.x * (p3.y * r1 - p1.y * r3) +
                        p3.x * (p1.y * r2 - p2.y * r1);
    return std::array<Rational, 3>{da / det, db / det, de / det};
  };
  const auto abe = solve(q1.x, q2.x, q3.x);
  const auto cdf = solve(q1.y, q2.y, q3.y);
  AffineMap m{abe[0], abe[1], cdf[0], cdf[1], abe[2], cdf[2]};
  if (map_determinant(m) == 0)
    throw PreconditionError("affine map with zero determinant");
  return m;
}

}  // namespace biplanar
