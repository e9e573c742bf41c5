#pragma once

#include <string>
#include <vector>

#include "biplanar/geometry.hpp"
#include "biplanar/graph.hpp"

namespace biplanar {

enum class Color { Black, Red };

// A straight-line drawing of an EmbeddedGraph: positions indexed by vertex,
// colors indexed by edge. Segments are implicit; all crossing structure is
// recomputed from positions by the checker.
struct Drawing {
  std::vector<Point> pos;
  std::vector<Color> colors;

  bool operator==(const Drawing& o) const = default;
};

// Role vertices of a specialized drawing: the outer face is the isosceles
// triangle (v1, v2, t2); every edge at v2 is black; when t1 is present the
// edge (v1, t1) may be red and crossed by the fan of edges at t2.
struct Roles {
  int v1 = -1, v2 = -1, t1 = -1, t2 = -1;
};

struct SpecializedDrawing {
  Drawing drawing;
  Roles roles;
};

Drawing apply_map(const AffineMap& m, const Drawing& d);

std::string drawing_to_json(const Drawing& d, const EmbeddedGraph& g);
Drawing drawing_from_json(const std::string& text, const EmbeddedGraph& g);

std::string color_name(Color c);

}  // namespace biplanar
