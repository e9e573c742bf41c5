#pragma once

#include <optional>
#include <vector>

#include "biplanar/rational.hpp"

namespace biplanar {

struct Point {
  Rational x;
  Rational y;
  bool operator==(const Point& o) const { return x == o.x && y == o.y; }
  bool operator!=(const Point& o) const { return !(*this == o); }
};

Point operator+(const Point& a, const Point& b);
Point operator-(const Point& a, const Point& b);

// Segment with distinct endpoints (checked where it matters).
struct Segment {
  Point a;
  Point b;
};

enum class Orientation { Left, Right, Collinear };

// Sign of the exact cross product (q - p) x (r - p).
Orientation orientation(const Point& p, const Point& q, const Point& r);
// The cross product itself, for callers that need magnitudes.
Rational cross(const Point& p, const Point& q, const Point& r);
// Dot product (q - p) . (r - p).
Rational dot(const Point& p, const Point& q, const Point& r);
// Squared Euclidean distance.
Rational dist2(const Point& a, const Point& b);

enum class IntersectKind { None, ProperCross, Touch, Overlap };

struct Intersection {
  IntersectKind kind = IntersectKind::None;
  // Present for ProperCross and Touch.
  std::optional<Point> point;
};

// Exact segment intersection classification.
//  ProperCross: interiors meet in exactly one point (returned exactly).
//  Touch: the intersection is a single point that is an endpoint of at least
//         one of the segments.
//  Overlap: the intersection is a (degenerate or not) segment of positive
//           length.
Intersection segment_intersection(const Segment& s, const Segment& t);

// True iff the closed polygon (>= 3 points, given in order) is strictly
// convex: every consecutive triple turns the same way, none collinear.
// Throws PreconditionError for < 3 points.
bool strictly_convex(const std::vector<Point>& polygon);

// True iff p lies strictly inside the strictly convex polygon (any
// orientation).
bool strictly_inside_convex(const std::vector<Point>& polygon, const Point& p);
// True iff p lies inside or on the boundary of the convex polygon.
bool inside_or_on_convex(const std::vector<Point>& polygon, const Point& p);

// x' = a*x + b*y + e ; y' = c*x + d*y + f.
struct AffineMap {
  Rational a, b, c, d, e, f;
  static AffineMap identity();
};

Point apply_map(const AffineMap& m, const Point& p);
Rational map_determinant(const AffineMap& m);
// The unique affine map sending p1->q1, p2->q2, p3->q3.
// Throws PreconditionError if p1,p2,p3 are collinear or the map degenerates.
AffineMap affine_from_triples(const Point& p1, const Point& p2, const Point& p3,
                              const Point& q1, const Point& q2,
                              const Point& q3);

inline Point ipoint(long x, long y) {
  return Point{Rational(x), Rational(y)};
}

}  // namespace biplanar
