#include "biplanar/gen.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "biplanar/errors.hpp"
#include "biplanar/planar_map.hpp"

namespace biplanar {

namespace {

const char* kK6WText = R"(v v1
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

// Inserts `block` into rot immediately before the first occurrence of
// `before`.
void insert_before(std::vector<int>& rot, int before,
                   const std::vector<int>& block) {
  for (std::size_t i = 0; i < rot.size(); ++i) {
    if (rot[i] == before) {
      rot.insert(rot.begin() + static_cast<long>(i), block.begin(),
                 block.end());
      return;
    }
  }
  throw InternalError("rotation insertion anchor not found");
}

}  // namespace

EmbeddedGraph gen_k6w() { return parse_graph(kK6WText); }

EmbeddedGraph gen_nested_w(int depth) {
  if (depth < 1) throw PreconditionError("nested-w depth must be >= 1");
  EmbeddedGraph g = gen_k6w();
  // Hosts of the next substitution: the top edge of the current deepest
  // gadget, oriented (P, Q) = (t1-role, t2-role).
  int P = g.index_of.at("t1");
  int Q = g.index_of.at("t2");
  for (int k = 2; k <= depth; ++k) {
    std::string suf = "_" + std::to_string(k);
    int c3 = g.add_vertex("u1" + suf);  // u1-role
    int c4 = g.add_vertex("u2" + suf);  // u2-role
    int c5 = g.add_vertex("t1" + suf);  // t1-role
    int c6 = g.add_vertex("t2" + suf);  // t2-role
    for (int w : {c3, c4, c5, c6}) {
      g.add_edge(P, w);
      g.add_edge(Q, w);
    }
    g.add_edge(c3, c4);
    g.add_edge(c3, c5);
    g.add_edge(c4, c6);
    g.add_edge(c5, c6);
    // The gadget hangs into the face between edge (P,Q) and the previous
    // gadget's outer crossing: at P that face sits between neighbors Q and
    // the crossed Q-role partner, at Q between the crossed P-role partner
    // and P. The new fans preserve the pattern rotations of gen_k6w.
    insert_before(g.rotation[P], g.rotation[P][1], {c4, c3, c5, c6});
    insert_before(g.rotation[Q], P, {c5, c6, c4, c3});
    g.rotation[c3] = {c4, c5, P, Q};
    g.rotation[c4] = {c6, c3, P, Q};
    g.rotation[c5] = {c6, Q, P, c3};
    g.rotation[c6] = {c5, c4, Q, P};
    g.crossings.push_back({P, c4, Q, c3});
    g.crossings.push_back({P, c6, c5, Q});
    P = c5;
    Q = c6;
  }
  validate_graph(g);
  return g;
}

namespace {

struct Rng {
  std::mt19937_64 gen;
  explicit Rng(std::uint64_t seed) : gen(seed) {}
  // Unbiased enough for test-data purposes and fully deterministic across
  // platforms, unlike std::uniform_int_distribution.
  int below(int k) { return static_cast<int>(gen() % static_cast<unsigned long long>(k)); }
};

}  // namespace

EmbeddedGraph gen_random_triangulation(int n, std::uint64_t seed,
                                       int crossings) {
  if (n < 3) throw PreconditionError("triangulation needs n >= 3");
  if (crossings < 0) throw PreconditionError("crossing count must be >= 0");
  Rng rng(seed);
  EmbeddedGraph g;
  for (int i = 0; i < n; ++i) g.add_vertex("p" + std::to_string(i));
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(0, 2);
  g.rotation[0] = {1, 2};
  g.rotation[1] = {2, 0};
  g.rotation[2] = {0, 1};
  // Counterclockwise inner faces; the outer face (0,2,1) is never split.
  std::vector<std::array<int, 3>> faces = {{0, 1, 2}};

  auto insert_between = [&](int at, int after, int before, int w) {
    // Inserts w into rot[at] in the corner between neighbors after/before,
    // which are cyclically adjacent there.
    auto& rot = g.rotation[at];
    int deg = static_cast<int>(rot.size());
    for (int i = 0; i < deg; ++i) {
      if (rot[i] == after && rot[(i + 1) % deg] == before) {
        rot.insert(rot.begin() + i + 1, w);
        return;
      }
    }
    throw InternalError("triangulation corner not found");
  };

  for (int w = 3; w < n; ++w) {
    int fi = rng.below(static_cast<int>(faces.size()));
    auto [a, b, c] = faces[fi];
    g.add_edge(a, w);
    g.add_edge(b, w);
    g.add_edge(c, w);
    g.rotation.resize(g.n());
    g.rotation[w] = {a, b, c};
    // At corner a of ccw face (a,b,c) the walk enters from c and leaves to
    // b, so the new neighbor sits between b and c.
    insert_between(a, b, c, w);
    insert_between(b, c, a, w);
    insert_between(c, a, b, w);
    faces[fi] = {a, b, w};
    faces.push_back({b, c, w});
    faces.push_back({c, a, w});
  }

  int want = std::min(crossings, n - 3);
  if (want > 0) {
    // Candidate quadrangles: all pairs of inner faces sharing an edge.
    std::map<std::pair<int, int>, std::vector<int>> faces_at;
    for (int fi = 0; fi < static_cast<int>(faces.size()); ++fi) {
      for (int i = 0; i < 3; ++i) {
        int u = faces[fi][i], v = faces[fi][(i + 1) % 3];
        faces_at[u < v ? std::make_pair(u, v) : std::make_pair(v, u)]
            .push_back(fi);
      }
    }
    std::vector<std::pair<int, int>> shared;
    for (const auto& [e, fs] : faces_at)
      if (fs.size() == 2) shared.push_back(e);
    // Deterministic Fisher-Yates.
    for (int i = static_cast<int>(shared.size()) - 1; i > 0; --i)
      std::swap(shared[i], shared[rng.below(i + 1)]);

    std::vector<bool> face_used(faces.size(), false);
    int placed = 0;
    for (const auto& [u, v] : shared) {
      if (placed == want) break;
      const auto& fs = faces_at.at({u, v});
      int f1 = fs[0], f2 = fs[1];
      if (face_used[f1] || face_used[f2]) continue;
      // Orient f1 as (a,b,c) with shared edge (a,b); then f2 = (b,a,d).
      int a = -1, b = -1, c = -1, d = -1;
      for (int i = 0; i < 3; ++i) {
        int p = faces[f1][i], q = faces[f1][(i + 1) % 3];
        if ((p == u && q == v) || (p == v && q == u)) {
          a = p;
          b = q;
          c = faces[f1][(i + 2) % 3];
        }
      }
      for (int i = 0; i < 3; ++i)
        if (faces[f2][i] != a && faces[f2][i] != b) d = faces[f2][i];
      if (c == d || g.has_edge(c, d)) continue;
      face_used[f1] = true;
      face_used[f2] = true;
      g.add_edge(c, d);
      // New edge (c,d) crosses (a,b) inside the quadrangle (a,d,b,c): at c
      // it lies in the corner between a and b, at d between b and a.
      insert_between(c, a, b, d);
      insert_between(d, b, a, c);
      // Counterclockwise around the crossing point: a, d, b, c.
      g.crossings.push_back({a, b, d, c});
      ++placed;
    }
  }

  g.outer_edges = {{0, 1}, {1, 2}, {0, 2}};
  validate_graph(g);
  return g;
}

EmbeddedGraph gen_w_separating_triangle() {
  return parse_graph(R"(v v1
v v2
v u1
v u2
v t1
v t2
v s
v w
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
e s u1
e s u2
e s t1
e s t2
e w s
e w t1
e w t2
rot v1 : v2 u2 u1 t1 t2
rot v2 : v1 t1 t2 u2 u1
rot u1 : u2 s t1 v1 v2
rot u2 : t2 s u1 v1 v2
rot t1 : t2 v2 v1 u1 s w
rot t2 : t1 w s u2 v2 v1
rot s : t2 w t1 u1 u2
rot w : t2 t1 s
x v1-u2 v2-u1
x v1-t2 t1-v2
outer v1-t2 t1-v2 v1-v2
)");
}

EmbeddedGraph gen_crossed_cube() {
  return parse_graph(R"(v a
v b
v c
v d
v e
v f
v g
v h
e a b
e b c
e c d
e d a
e e f
e f g
e g h
e h e
e a e
e b f
e c g
e d h
e a c
e b d
e a f
e b e
e b g
e c f
e c h
e d g
e d e
e a h
e e g
e f h
rot a : b f e h d c
rot b : c g f e a d
rot c : d h g f b a
rot d : c b a e h g
rot e : f g h d a b
rot f : c g h e a b
rot g : c d h e f b
rot h : g c d a e f
x a-f b-e
x b-g c-f
x c-h d-g
x d-e a-h
x e-g f-h
x a-c d-b
outer a-c c-d b-d
)");
}

}  // namespace biplanar
