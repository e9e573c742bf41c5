#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>
#include <string>
#include <vector>

#include "biplanar/errors.hpp"
#include "biplanar/graph.hpp"
#include "biplanar/planar_map.hpp"

using namespace biplanar;

namespace {

// Independent face counter: traces facial walks with the mirrored successor
// rule (next neighbor clockwise instead of counterclockwise). The face count
// of a sphere embedding is invariant under reflection, so this must agree
// with PlanarMap while sharing none of its code.
int count_faces_mirror(const std::vector<std::vector<int>>& rot) {
  std::map<std::pair<int, int>, int> pos;
  for (int v = 0; v < static_cast<int>(rot.size()); ++v)
    for (int i = 0; i < static_cast<int>(rot[v].size()); ++i)
      pos[{v, rot[v][i]}] = i;
  std::set<std::pair<int, int>> done;
  int faces = 0;
  for (const auto& [key, unused] : pos) {
    (void)unused;
    if (done.count(key)) continue;
    ++faces;
    std::pair<int, int> cur = key;
    while (!done.count(cur)) {
      done.insert(cur);
      auto [u, v] = cur;
      int deg = static_cast<int>(rot[v].size());
      int w = rot[v][(pos[{v, u}] + 1) % deg];
      cur = {v, w};
    }
  }
  return faces;
}

const char* kK4 = R"(# complete graph on four vertices, plane embedding
v a
v b
v c
v d
e a b
e a c
e a d
e b c
e b d
e c d
rot a : b d c
rot b : c d a
rot c : a d b
rot d : c a b
outer a-b b-c c-a
)";

const char* kK5 = R"(v a
v b
v c
v d
v e
e a b
e a c
e a d
e a e
e b c
e b d
e b e
e c d
e c e
e d e
rot a : b d c e
rot b : c d a e
rot c : a d b e
rot d : c a e b
rot e : c b d a
x d-e a-b
outer a-c c-e e-a
)";

// A W-configuration on six vertices: base (v1,v2), two crossing pairs
// whose crossings lie on the outer face side of the base.
const char* kW6 = R"(v v1
v v2
v u1
v u2
v t1
v t2
e v1 v2
e v1 u1
e v1 u2
e v1 t1
e v1 t2
e v2 u1
e v2 u2
e v2 t1
e v2 t2
e u1 u2
e u1 t1
e u2 t2
e t1 t2
rot v1 : v2 u2 u1 t1 t2
rot v2 : v1 t1 t2 u2 u1
rot u1 : u2 t1 v1 v2
rot u2 : t2 u1 v1 v2
rot t1 : t2 v2 v1 u1
rot t2 : t1 u2 v2 v1
x v1-u2 v2-u1
x v1-t2 t1-v2
outer v1-t2 t1-v2 v1-v2
)";

}  // namespace

TEST_CASE("K4 parses, planarizes with zero dummies, round-trips") {
  EmbeddedGraph g = parse_graph(kK4);
  CHECK(g.n() == 4);
  CHECK(g.m() == 6);
  CHECK(g.crossings.empty());

  Planarization p = planarize(g);
  CHECK(p.dummy_of_crossing.empty());
  CHECK(p.map.n == 4);
  CHECK(p.map.m() == 6);
  CHECK(p.map.f() == 4);
  CHECK(p.map.f() == count_faces_mirror(p.map.rot));
  CHECK(p.outer_face >= 0);
  // The declared outer walk is the triangle a,b,c.
  std::set<int> corners;
  for (int d : p.map.faces[p.outer_face]) corners.insert(p.map.darts[d].u);
  CHECK(corners == std::set<int>{g.index_of.at("a"), g.index_of.at("b"),
                                 g.index_of.at("c")});

  EmbeddedGraph again = parse_graph(serialize_graph(g));
  CHECK(again == g);
  EmbeddedGraph viaJson = graph_from_json(graph_to_json(g));
  CHECK(viaJson == g);

  EmbeddedGraph s = skeleton_graph(g);
  CHECK(s.m() == g.m());
  CHECK(s.rotation == g.rotation);
}

TEST_CASE("K5 with one crossing: Euler counts V=6 E=12 F=8") {
  EmbeddedGraph g = parse_graph(kK5);
  CHECK(g.n() == 5);
  CHECK(g.m() == 10);
  CHECK(g.crossings.size() == 1);

  Planarization p = planarize(g);
  CHECK(p.dummy_of_crossing.size() == 1);
  CHECK(p.map.n == 6);
  CHECK(p.map.m() == 12);
  CHECK(p.map.f() == 8);
  CHECK(p.map.f() == count_faces_mirror(p.map.rot));
  CHECK(p.map.n - p.map.m() + p.map.f() == 2);
  int dummy = p.dummy_of_crossing[0];
  CHECK(p.map.degree(dummy) == 4);
  CHECK(p.crossing_of_dummy[dummy] == 0);

  // Dummy rotation alternates between fragments of the two crossed edges.
  int e1 = g.edge_index(g.crossings[0].a, g.crossings[0].b);
  int e2 = g.edge_index(g.crossings[0].c, g.crossings[0].d);
  std::vector<int> around;
  for (int w : p.map.rot[dummy]) around.push_back(p.parent_of(dummy, w));
  REQUIRE(around.size() == 4);
  CHECK(around[0] == around[2]);
  CHECK(around[1] == around[3]);
  CHECK(((around[0] == e1 && around[1] == e2) ||
         (around[0] == e2 && around[1] == e1)));

  EmbeddedGraph s = skeleton_graph(g);
  CHECK(s.m() == 8);

  EmbeddedGraph again = parse_graph(serialize_graph(g));
  CHECK(again == g);
  CHECK(graph_from_json(graph_to_json(g)) == g);
}

TEST_CASE("six-vertex W-configuration: two dummies, four edges leave skeleton") {
  EmbeddedGraph g = parse_graph(kW6);
  CHECK(g.n() == 6);
  CHECK(g.m() == 13);
  Planarization p = planarize(g);
  CHECK(p.dummy_of_crossing.size() == 2);
  CHECK(p.map.n == 8);
  CHECK(p.map.m() == 17);
  CHECK(p.map.n - p.map.m() + p.map.f() == 2);
  CHECK(p.map.f() == count_faces_mirror(p.map.rot));

  EmbeddedGraph s = skeleton_graph(g);
  CHECK(s.m() == 9);
  CHECK(g.m() - s.m() == 4);

  // The resolved outer face is the triangle v1, x2, v2 where x2 is the
  // dummy of the second crossing pair.
  std::set<int> corners;
  for (int d : p.map.faces[p.outer_face]) corners.insert(p.map.darts[d].u);
  std::set<int> expect = {g.index_of.at("v1"), g.index_of.at("v2"),
                          p.dummy_of_crossing[1]};
  CHECK(corners == expect);

  CHECK(parse_graph(serialize_graph(g)) == g);
  CHECK(graph_from_json(graph_to_json(g)) == g);
}

TEST_CASE("edge in two crossing pairs is rejected") {
  std::string text = R"(v a
v b
v c
v d
v e
v f
e a b
e c d
e e f
e a c
e a d
e b c
rot a : b c d
rot b : a c
rot c : d a b
rot d : c a
rot e : f
rot f : e
x a-b c-d
x a-b e-f
)";
  CHECK_THROWS_WITH_AS(parse_graph(text),
                       doctest::Contains("more than one crossing pair"),
                       ParseError);
}

TEST_CASE("crossing edges sharing an endpoint are rejected") {
  std::string text = R"(v a
v b
v c
e a b
e a c
e b c
x a-b a-c
)";
  CHECK_THROWS_WITH_AS(parse_graph(text), doctest::Contains("endpoint"),
                       ParseError);
}

TEST_CASE("parse errors are accumulated and carry line numbers") {
  std::string text = R"(v a
v a
e a b
frob a
)";
  try {
    parse_graph(text);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    std::string msg = e.what();
    CHECK(msg.find("line 2") != std::string::npos);
    CHECK(msg.find("duplicate vertex") != std::string::npos);
    CHECK(msg.find("unknown vertex 'b'") != std::string::npos);
    CHECK(msg.find("unknown statement 'frob'") != std::string::npos);
  }
}

TEST_CASE("disconnected graphs are rejected") {
  std::string text = R"(v a
v b
v c
v d
e a b
e c d
)";
  CHECK_THROWS_WITH_AS(parse_graph(text), doctest::Contains("not connected"),
                       ParseError);
}

TEST_CASE("rotation system failing the Euler check is rejected") {
  // K4 with one rotation list twisted: not a sphere embedding.
  std::string text = R"(v a
v b
v c
v d
e a b
e a c
e a d
e b c
e b d
e c d
rot a : b c d
rot b : c d a
rot c : a d b
rot d : c a b
)";
  CHECK_THROWS_WITH_AS(parse_graph(text), doctest::Contains("Euler"),
                       ParseError);
}

TEST_CASE("missing rotation on a high-degree vertex is rejected") {
  std::string text = R"(v a
v b
v c
v d
e a b
e a c
e a d
e b c
e b d
e c d
rot b : c d a
rot c : a d b
rot d : c a b
)";
  CHECK_THROWS_WITH_AS(parse_graph(text),
                       doctest::Contains("no rotation statement"), ParseError);
}

TEST_CASE("connectivity predicates") {
  // Path a-b-c: connected, not biconnected.
  std::vector<std::vector<int>> path = {{1}, {0, 2}, {1}};
  CHECK(is_connected(3, path));
  CHECK_FALSE(is_biconnected(3, path));
  // Triangle: biconnected, not triconnected (n < 4).
  std::vector<std::vector<int>> tri = {{1, 2}, {0, 2}, {0, 1}};
  CHECK(is_biconnected(3, tri));
  CHECK_FALSE(is_triconnected(3, tri));
  // K4: triconnected.
  std::vector<std::vector<int>> k4 = {
      {1, 2, 3}, {0, 2, 3}, {0, 1, 3}, {0, 1, 2}};
  CHECK(is_triconnected(4, k4));
  // Two triangles glued at an edge: biconnected, not triconnected.
  std::vector<std::vector<int>> glued = {
      {1, 2, 3}, {0, 2, 3}, {0, 1}, {0, 1}};
  CHECK(is_biconnected(4, glued));
  CHECK_FALSE(is_triconnected(4, glued));
}

TEST_CASE("induced sub-embedding keeps rotations and interior crossings") {
  EmbeddedGraph g = parse_graph(kW6);
  int v1 = g.index_of.at("v1"), v2 = g.index_of.at("v2");
  int u1 = g.index_of.at("u1"), u2 = g.index_of.at("u2");

  std::vector<int> old_of;
  EmbeddedGraph s = induced_subembedding(g, {v1, v2, u1, u2}, &old_of);
  CHECK(s.n() == 4);
  // Kept edges: v1v2, v1u1, v2u2, u1u2 and the crossed pair v1u2, v2u1.
  CHECK(s.m() == 6);
  CHECK(s.crossings.size() == 1);
  CHECK(old_of.size() == 4);
  for (int i = 0; i < 4; ++i) CHECK(g.names[old_of[i]] == s.names[i]);
  // Rotation order is inherited: at v1 the surviving neighbors keep their
  // cyclic order v2, u2, u1.
  std::vector<std::string> rot_v1;
  for (int w : s.rotation[s.index_of.at("v1")]) rot_v1.push_back(s.names[w]);
  CHECK(rot_v1 == std::vector<std::string>{"v2", "u2", "u1"});

  // Dropping u2 but keeping v2 and u1 cuts exactly one edge of the first
  // crossing pair: that straddle must be rejected.
  int t1 = g.index_of.at("t1");
  CHECK_THROWS_AS(induced_subembedding(g, {v1, v2, u1, t1}),
                  PreconditionError);
}

TEST_CASE("JSON parse rejects malformed input with an error") {
  CHECK_THROWS_AS(graph_from_json("{not json"), ParseError);
  CHECK_THROWS_AS(graph_from_json(R"({"vertices": ["a"]})"), ParseError);
}
