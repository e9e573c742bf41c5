#pragma once

#include <cstdint>

#include "biplanar/graph.hpp"

namespace biplanar {

// The six-vertex W-configuration: base edge (v1,v2) on the outer face, two
// crossing pairs (v1,u2)x(v2,u1) and (v1,t2)x(t1,v2) whose second crossing
// lies on the outer face.
EmbeddedGraph gen_k6w();

// Depth-d chain of W-configurations: gadget k+1 is substituted into the
// uncrossed top edge (t1,t2) of gadget k, hanging into the face between
// that edge and gadget k's outer crossing. depth >= 1; depth 1 = gen_k6w.
// n = 6 + 4(depth-1).
EmbeddedGraph gen_nested_w(int depth);

// Random stacked triangulation on n >= 3 vertices, then up to `crossings`
// random quadrangle crossings: a pair of adjacent inner faces (a,b,c),
// (b,a,d) gets the new edge (c,d) crossing the shared edge (a,b). Face
// pairs are used at most once, so all remaining faces stay triangles and
// the four kite edges always exist. The crossing count is capped at n-3 so
// m <= 4n-9; fewer crossings may be placed when candidates run out.
// Deterministic for a fixed seed.
EmbeddedGraph gen_random_triangulation(int n, std::uint64_t seed,
                                       int crossings);

// An eight-vertex W-instance whose interior contains the triangle
// (s,t1,t2) separating vertex w from the rest; exercises the drawing path
// for W-components where no tops-last ordering applies.
EmbeddedGraph gen_w_separating_triangle();

// The cube with a crossing pair of diagonals in every face: n = 8,
// m = 24 = 4n-8. One edge above the density bound drawable by the convex
// skeleton construction, so the engine must reject it.
EmbeddedGraph gen_crossed_cube();

}  // namespace biplanar
