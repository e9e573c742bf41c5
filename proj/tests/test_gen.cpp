#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <vector>

#include "biplanar/errors.hpp"
#include "biplanar/gen.hpp"
#include "biplanar/graph.hpp"
#include "biplanar/planar_map.hpp"

using namespace biplanar;

namespace {

// Are all of `targets` unreachable from `from` once `removed` is deleted?
bool separates(const EmbeddedGraph& g, const std::vector<int>& removed,
               int from, int target) {
  std::vector<bool> skip(g.n(), false);
  for (int r : removed) skip[r] = true;
  std::vector<bool> vis(g.n(), false);
  std::vector<int> stack = {from};
  vis[from] = true;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : g.rotation[v])
      if (!skip[w] && !vis[w]) {
        vis[w] = true;
        stack.push_back(w);
      }
  }
  return !vis[target];
}

}  // namespace

TEST_CASE("k6w: six vertices, two crossing pairs, W at the outer face") {
  EmbeddedGraph g = gen_k6w();
  CHECK(g.n() == 6);
  CHECK(g.m() == 13);
  CHECK(g.crossings.size() == 2);
  Planarization p = planarize(g);
  CHECK(p.map.n == 8);
  CHECK(p.map.n - p.map.m() + p.map.f() == 2);
  // The outer face carries the dummy of the second pair.
  std::set<int> corners;
  for (int d : p.map.faces[p.outer_face]) corners.insert(p.map.darts[d].u);
  CHECK(corners.count(p.dummy_of_crossing[1]) == 1);
  CHECK(parse_graph(serialize_graph(g)) == g);
}

TEST_CASE("nested-w sizes and validity for depth 1..5") {
  EmbeddedGraph base = gen_k6w();
  CHECK(gen_nested_w(1) == base);
  for (int d = 1; d <= 5; ++d) {
    EmbeddedGraph g = gen_nested_w(d);
    CHECK(g.n() == 6 + 4 * (d - 1));
    CHECK(g.m() == 13 + 12 * (d - 1));
    CHECK(static_cast<int>(g.crossings.size()) == 2 * d);
    // validate_graph ran inside gen; serialization round-trips.
    CHECK(parse_graph(serialize_graph(g)) == g);
    Planarization p = planarize(g);
    CHECK(p.map.n - p.map.m() + p.map.f() == 2);
  }
  CHECK_THROWS_AS(gen_nested_w(0), PreconditionError);
}

TEST_CASE("nested-w: each gadget hangs at the previous top edge") {
  EmbeddedGraph g = gen_nested_w(3);
  int t1 = g.index_of.at("t1"), t2 = g.index_of.at("t2");
  int u1_2 = g.index_of.at("u1_2");
  // Removing the first gadget's top edge endpoints cuts off gadget 2+.
  CHECK(separates(g, {t1, t2}, g.index_of.at("v1"), u1_2));
  CHECK(separates(g, {g.index_of.at("t1_2"), g.index_of.at("t2_2")}, t1,
                  g.index_of.at("u1_3")));
}

TEST_CASE("random triangulation without crossings is maximal planar") {
  EmbeddedGraph g = gen_random_triangulation(10, 42, 0);
  CHECK(g.n() == 10);
  CHECK(g.m() == 3 * 10 - 6);
  CHECK(g.crossings.empty());
  CHECK(is_triconnected(g.n(), g.rotation));
  Planarization p = planarize(g);
  for (int f = 0; f < p.map.f(); ++f) CHECK(p.face_size(f) == 3);

  // Determinism per seed.
  CHECK(gen_random_triangulation(10, 42, 0) == g);
  CHECK_FALSE(gen_random_triangulation(10, 43, 0) == g);
}

TEST_CASE("random triangulation with quadrangle crossings stays planar-maximal") {
  for (std::uint64_t seed : {1ULL, 7ULL, 99ULL}) {
    EmbeddedGraph g = gen_random_triangulation(20, seed, 5);
    CHECK(g.n() == 20);
    CHECK(g.crossings.size() <= 5);
    CHECK(g.crossings.size() >= 1);
    CHECK(g.m() == 3 * 20 - 6 + static_cast<int>(g.crossings.size()));
    Planarization p = planarize(g);
    CHECK(p.map.n - p.map.m() + p.map.f() == 2);
    // Quadrangle crossings keep every planarization face a triangle.
    for (int f = 0; f < p.map.f(); ++f) CHECK(p.face_size(f) == 3);
    CHECK(parse_graph(serialize_graph(g)) == g);
    // The outer face stays the initial uncrossed triangle.
    std::set<int> corners;
    for (int d : p.map.faces[p.outer_face]) corners.insert(p.map.darts[d].u);
    CHECK(corners == std::set<int>{0, 1, 2});
  }
  // The crossing cap n-3 binds.
  EmbeddedGraph h = gen_random_triangulation(8, 3, 100);
  CHECK(h.crossings.size() <= 5);
  CHECK(h.m() <= 4 * 8 - 9);
}

TEST_CASE("separating-triangle W-instance") {
  EmbeddedGraph g = gen_w_separating_triangle();
  CHECK(g.n() == 8);
  CHECK(g.m() == 20);
  CHECK(g.crossings.size() == 2);
  int s = g.index_of.at("s"), t1 = g.index_of.at("t1"),
      t2 = g.index_of.at("t2"), w = g.index_of.at("w");
  CHECK(g.has_edge(s, t1));
  CHECK(g.has_edge(s, t2));
  CHECK(g.has_edge(t1, t2));
  CHECK(separates(g, {s, t1, t2}, g.index_of.at("v1"), w));
  Planarization p = planarize(g);
  CHECK(p.map.n - p.map.m() + p.map.f() == 2);
}

TEST_CASE("crossed cube sits exactly at 4n-8 edges") {
  EmbeddedGraph g = gen_crossed_cube();
  CHECK(g.n() == 8);
  CHECK(g.m() == 24);
  CHECK(g.m() == 4 * g.n() - 8);
  CHECK(g.crossings.size() == 6);
  Planarization p = planarize(g);
  CHECK(p.map.n == 14);
  CHECK(p.map.m() == 36);
  CHECK(p.map.f() == 24);
  // Every planarization face is a kite triangle.
  for (int f = 0; f < p.map.f(); ++f) CHECK(p.face_size(f) == 3);
}
