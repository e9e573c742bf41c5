#pragma once

#include <map>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace biplanar {

// A crossing pair of edges (a,b) x (c,d). The endpoint order carries the
// orientation of the crossing: walking counterclockwise around the crossing
// point one meets the edge ends toward a, c, b, d in this order.
struct Crossing {
  int a = -1, b = -1, c = -1, d = -1;
  std::pair<int, int> edge1() const {
    return a < b ? std::make_pair(a, b) : std::make_pair(b, a);
  }
  std::pair<int, int> edge2() const {
    return c < d ? std::make_pair(c, d) : std::make_pair(d, c);
  }
  bool operator==(const Crossing& o) const = default;
};

// A 1-planar embedded graph: vertices, edges, a rotation system (per-vertex
// counterclockwise cyclic order of neighbors) and crossing pairs. Vertex ids
// are opaque strings; internally vertices are dense indices.
struct EmbeddedGraph {
  std::vector<std::string> names;                    // index -> id
  std::unordered_map<std::string, int> index_of;     // id -> index
  std::vector<std::pair<int, int>> edges;            // normalized u < v
  std::map<std::pair<int, int>, int> edge_ids;       // (u,v) -> edge index
  std::vector<std::vector<int>> rotation;            // ccw neighbor lists
  std::vector<Crossing> crossings;
  // Declared outer facial walk of the planarization, as the cyclic sequence
  // of parent edges met along the walk; empty = defaulted.
  std::vector<std::pair<int, int>> outer_edges;

  int n() const { return static_cast<int>(names.size()); }
  int m() const { return static_cast<int>(edges.size()); }
  int add_vertex(const std::string& name);
  // Returns the edge id; edges are stored normalized.
  int add_edge(int u, int v);
  bool has_edge(int u, int v) const;
  int edge_index(int u, int v) const;  // -1 when absent
  // Index into crossings of the pair containing edge e, or -1.
  int crossing_of_edge(int e) const;
  bool edge_crossed(int u, int v) const;
  std::vector<int> crossed_edge_flags() const;  // edge id -> 0/1

  bool operator==(const EmbeddedGraph& o) const;
};

// Parse the line-oriented text format:
//   v <id>
//   e <id> <id>
//   rot <id> : <neighbor ids in ccw cyclic order>
//   x <id>-<id> <id>-<id>
//   outer <id>-<id> <id>-<id> ...
//   # comment
// Throws ParseError listing every violated invariant.
EmbeddedGraph parse_graph(const std::string& text);
std::string serialize_graph(const EmbeddedGraph& g);

// JSON equivalent with field names vertices/edges/rotation/crossings/
// outer_face.
EmbeddedGraph graph_from_json(const std::string& text);
std::string graph_to_json(const EmbeddedGraph& g);

// Validates all EmbeddedGraph invariants (simplicity, 1-planarity of the
// crossing list, rotation consistency, connected sphere embedding via the
// planarization's Euler formula, outer face resolvable). Throws ParseError
// with the full list of violations.
void validate_graph(const EmbeddedGraph& g);

// The subgraph with all crossed edges removed and rotations restricted.
EmbeddedGraph skeleton_graph(const EmbeddedGraph& g);

// Induced sub-embedding on a vertex subset: edges with both ends kept,
// rotations restricted, crossings with all four endpoints kept. Straddling
// crossing pairs (exactly one edge surviving) raise PreconditionError.
// old_of[i] gives the source index of new vertex i.
EmbeddedGraph induced_subembedding(const EmbeddedGraph& g,
                                   const std::vector<int>& vertices,
                                   std::vector<int>* old_of = nullptr);

}  // namespace biplanar
