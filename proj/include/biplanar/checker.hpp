#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "biplanar/drawing.hpp"
#include "biplanar/geometry.hpp"
#include "biplanar/graph.hpp"

namespace biplanar {

// One proper crossing between two edge segments, with its exact point.
struct EdgeCross {
  int e1 = -1, e2 = -1;  // edge indices, e1 < e2
  Point at;
  bool operator==(const EdgeCross& o) const = default;
};

// Exact census of a straight-line drawing plus every verifiable
// post-condition the engine promises. Degeneracies (coincident vertices, an
// edge through a foreign vertex, touching or overlapping non-adjacent
// segments) are hard errors listed in `degeneracies`.
struct CrossingReport {
  std::vector<EdgeCross> crossings;        // sorted by (e1, e2)
  std::vector<std::vector<int>> crossers;  // edge -> sorted crossing edges
  std::vector<std::string> degeneracies;
  std::vector<std::pair<int, int>> color_conflicts;  // same-color crossings
  std::vector<int> fan_violations;  // edges crossed >=3 without a common
                                    // vertex among their crossers
  Point bbox_min, bbox_max;
  // Squared lengths, exact; min/max over all maximal crossing-free
  // segments of edges that are uncrossed in the *input* graph.
  std::optional<Rational> min_uncrossed_seg_len2;
  std::optional<Rational> max_uncrossed_seg_len2;
  int max_digit_count = 0;  // over all coordinates

  bool valid() const { return degeneracies.empty(); }
  bool biplanar() const { return color_conflicts.empty(); }
  bool tri_fan() const { return fan_violations.empty(); }
  bool certified() const { return valid() && biplanar() && tri_fan(); }
};

// All-pairs exact intersection census over the edges selected by `mask`
// (empty mask = all edges). Positions of *all* vertices must be present.
CrossingReport census(const Drawing& d, const EmbeddedGraph& g,
                      const std::vector<bool>& mask = {});

// Pass iff no two same-colored edges properly cross; the failing pairs are
// in report.color_conflicts.
bool check_biplanar(const CrossingReport& r);

// Pass iff every edge crossed at least three times is crossed only by
// edges sharing a common endpoint.
bool check_tri_fan(const CrossingReport& r);

enum class OuterShape { RightIsosceles, ObtuseIsosceles };

// Result of verifying every clause of the specialized-drawing contract.
struct SpecializedCheck {
  bool pass = false;
  std::vector<std::string> failures;
};

// Verifies: outer face is the isosceles triangle (v1,v2,t2) with the given
// angle shape at t2 and all other vertices strictly inside; all edges at v2
// (and t2) are black; the drawing is 1-planar once edge (v1,t1) is removed
// and also once vertex t2 is removed; every edge crossing (v1,t1) is
// crossed at most twice. With t1 absent the drawing itself must be
// 1-planar.
SpecializedCheck check_specialized(const SpecializedDrawing& sd,
                                   const EmbeddedGraph& g,
                                   OuterShape shape);

// Grid/size report: bounding-box extent against the promised bound and the
// >= 1 lower bound on uncrossed-edge segment lengths, all exact.
struct BoundsReport {
  bool box_ok = false;
  bool seg_len_ok = false;
  BigInt width, height;
  BigInt width_bound, height_bound;
  std::optional<Rational> min_seg_len2;
  int max_digit_count = 0;
};

BoundsReport check_bounds(const CrossingReport& r, const BigInt& width_bound,
                          const BigInt& height_bound);

std::string report_to_json(const CrossingReport& r, const EmbeddedGraph& g);

}  // namespace biplanar
