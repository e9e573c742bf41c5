#pragma once

#include <map>
#include <utility>
#include <vector>

#include "biplanar/graph.hpp"

namespace biplanar {

// Combinatorial map of a connected plane graph given by counterclockwise
// rotations. Each directed edge (dart) u->v belongs to exactly one facial
// walk; the walk successor of u->v is (v, w) where w precedes u in the ccw
// rotation at v. With that rule inner faces come out counterclockwise and
// the outer face clockwise, and the face of a dart lies to its left.
struct PlanarMap {
  struct Dart {
    int u = -1, v = -1;
  };

  int n = 0;
  std::vector<std::vector<int>> rot;  // ccw neighbor lists
  std::vector<Dart> darts;
  std::vector<int> twin_of;        // dart -> reverse dart
  std::vector<int> next_in_face;   // dart -> successor on its facial walk
  std::vector<int> face_of;        // dart -> face index
  std::vector<std::vector<int>> faces;  // face -> darts along the walk

  // Builds darts and faces from rot; checks the adjacency is symmetric,
  // simple and loop-free. Throws InternalError on inconsistent input.
  void build();

  int m() const { return static_cast<int>(darts.size()) / 2; }
  int f() const { return static_cast<int>(faces.size()); }
  int degree(int v) const { return static_cast<int>(rot[v].size()); }
  int dart(int u, int v) const;  // -1 when absent
  // Euler's formula V - E + F == 2 (requires connectivity, checked).
  bool is_sphere_embedding() const;

 private:
  std::map<std::pair<int, int>, int> dart_ids_;
};

// Connectivity predicates on an adjacency structure (rotation lists work).
bool is_connected(int n, const std::vector<std::vector<int>>& adj);
bool is_biconnected(int n, const std::vector<std::vector<int>>& adj);
// Brute-force 3-connectivity: n >= 4 and no cut pair. Intended for the
// moderate sizes this engine handles.
bool is_triconnected(int n, const std::vector<std::vector<int>>& adj);

// The planarization of a 1-planar embedded graph: every crossing pair is
// replaced by a degree-4 dummy vertex splitting both edges. The rotation of
// the dummy for crossing (a,b) x (c,d) is (a, c, b, d); original rotations
// keep their positions with crossed neighbors substituted by dummies.
struct Planarization {
  PlanarMap map;
  int n_orig = 0;                      // vertices 0..n_orig-1 are real
  std::vector<int> dummy_of_crossing;  // crossing index -> dummy vertex
  std::vector<int> crossing_of_dummy;  // vertex -> crossing index or -1
  // Edge (u,v) of the map (normalized) -> edge id in the source graph.
  std::map<std::pair<int, int>, int> parent_edge;
  int outer_face = -1;

  bool is_dummy(int v) const { return v >= n_orig; }
  int parent_of(int u, int v) const;
  // The cyclic parent-edge sequence along a facial walk.
  std::vector<int> face_parent_edges(int face) const;
  // Number of corners of a face (walk length).
  int face_size(int face) const {
    return static_cast<int>(map.faces[face].size());
  }
};

// Builds the planarization and resolves the declared outer face: a facial
// walk matching the declared parent-edge multiset, refined by cyclic
// sequence (either direction) when several match. With no declaration the
// face of the first dart of vertex 0 is used. Throws ParseError when the
// declaration matches no face or remains ambiguous, or when the rotation
// system is not a sphere embedding.
Planarization planarize(const EmbeddedGraph& g);

}  // namespace biplanar
