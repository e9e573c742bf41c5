#include "biplanar/planar_map.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "biplanar/errors.hpp"

namespace biplanar {

void PlanarMap::build() {
  n = static_cast<int>(rot.size());
  darts.clear();
  twin_of.clear();
  next_in_face.clear();
  face_of.clear();
  faces.clear();
  dart_ids_.clear();

  for (int u = 0; u < n; ++u) {
    std::set<int> seen;
    for (int v : rot[u]) {
      if (v < 0 || v >= n) throw InternalError("rotation index out of range");
      if (v == u) throw InternalError("loop in rotation system");
      if (!seen.insert(v).second)
        throw InternalError("repeated neighbor in rotation system");
      int id = static_cast<int>(darts.size());
      darts.push_back({u, v});
      dart_ids_[{u, v}] = id;
    }
  }
  twin_of.assign(darts.size(), -1);
  for (std::size_t d = 0; d < darts.size(); ++d) {
    auto it = dart_ids_.find({darts[d].v, darts[d].u});
    if (it == dart_ids_.end())
      throw InternalError("asymmetric rotation system");
    twin_of[d] = it->second;
  }

  // Position of u within rot[v], for the facial-walk successor rule.
  std::map<std::pair<int, int>, int> pos;
  for (int v = 0; v < n; ++v)
    for (std::size_t i = 0; i < rot[v].size(); ++i)
      pos[{v, rot[v][i]}] = static_cast<int>(i);

  next_in_face.assign(darts.size(), -1);
  for (std::size_t d = 0; d < darts.size(); ++d) {
    int u = darts[d].u, v = darts[d].v;
    int deg = degree(v);
    int i = pos[{v, u}];
    int w = rot[v][(i - 1 + deg) % deg];
    next_in_face[d] = dart_ids_[{v, w}];
  }

  face_of.assign(darts.size(), -1);
  for (std::size_t d = 0; d < darts.size(); ++d) {
    if (face_of[d] >= 0) continue;
    int fid = static_cast<int>(faces.size());
    faces.emplace_back();
    int cur = static_cast<int>(d);
    while (face_of[cur] < 0) {
      face_of[cur] = fid;
      faces[fid].push_back(cur);
      cur = next_in_face[cur];
    }
    if (cur != static_cast<int>(d))
      throw InternalError("facial walk does not close");
  }
}

int PlanarMap::dart(int u, int v) const {
  auto it = dart_ids_.find({u, v});
  return it == dart_ids_.end() ? -1 : it->second;
}

bool PlanarMap::is_sphere_embedding() const {
  if (!is_connected(n, rot)) return false;
  return n - m() + f() == 2;
}

bool is_connected(int n, const std::vector<std::vector<int>>& adj) {
  if (n == 0) return false;
  std::vector<bool> vis(n, false);
  std::vector<int> stack = {0};
  vis[0] = true;
  int count = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : adj[v])
      if (!vis[w]) {
        vis[w] = true;
        ++count;
        stack.push_back(w);
      }
  }
  return count == n;
}

namespace {

bool connected_avoiding(int n, const std::vector<std::vector<int>>& adj,
                        const std::vector<int>& removed) {
  std::vector<bool> skip(n, false);
  for (int r : removed) skip[r] = true;
  int start = -1, want = 0;
  for (int v = 0; v < n; ++v)
    if (!skip[v]) {
      if (start < 0) start = v;
      ++want;
    }
  if (start < 0) return true;
  std::vector<bool> vis(n, false);
  std::vector<int> stack = {start};
  vis[start] = true;
  int count = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : adj[v])
      if (!skip[w] && !vis[w]) {
        vis[w] = true;
        ++count;
        stack.push_back(w);
      }
  }
  return count == want;
}

}  // namespace

bool is_biconnected(int n, const std::vector<std::vector<int>>& adj) {
  if (n < 3) {
    return n == 2 && !adj[0].empty();
  }
  if (!is_connected(n, adj)) return false;
  for (int v = 0; v < n; ++v)
    if (!connected_avoiding(n, adj, {v})) return false;
  return true;
}

bool is_triconnected(int n, const std::vector<std::vector<int>>& adj) {
  if (n < 4) return false;
  if (!is_biconnected(n, adj)) return false;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!connected_avoiding(n, adj, {u, v})) return false;
  return true;
}

int Planarization::parent_of(int u, int v) const {
  auto key = u < v ? std::make_pair(u, v) : std::make_pair(v, u);
  auto it = parent_edge.find(key);
  return it == parent_edge.end() ? -1 : it->second;
}

std::vector<int> Planarization::face_parent_edges(int face) const {
  std::vector<int> out;
  for (int d : map.faces[face])
    out.push_back(parent_of(map.darts[d].u, map.darts[d].v));
  return out;
}

namespace {

// Does cyclic sequence a equal b up to rotation, in either direction?
bool cyclic_equal(const std::vector<int>& a, std::vector<int> b) {
  if (a.size() != b.size()) return false;
  if (a.empty()) return true;
  for (int dir = 0; dir < 2; ++dir) {
    for (std::size_t shift = 0; shift < b.size(); ++shift) {
      bool ok = true;
      for (std::size_t i = 0; i < a.size() && ok; ++i)
        ok = a[i] == b[(i + shift) % b.size()];
      if (ok) return true;
    }
    std::reverse(b.begin(), b.end());
  }
  return false;
}

}  // namespace

Planarization planarize(const EmbeddedGraph& g) {
  Planarization p;
  p.n_orig = g.n();
  p.map.rot = g.rotation;
  p.crossing_of_dummy.assign(g.n(), -1);

  // Substitute every crossed neighbor entry in place by the dummy, so the
  // rotation positions stay in 1:1 correspondence with the source graph.
  for (std::size_t xi = 0; xi < g.crossings.size(); ++xi) {
    const Crossing& x = g.crossings[xi];
    int dummy = static_cast<int>(p.map.rot.size());
    p.dummy_of_crossing.push_back(dummy);
    p.crossing_of_dummy.push_back(static_cast<int>(xi));
    p.map.rot.push_back({x.a, x.c, x.b, x.d});
    auto substitute = [&](int at, int from, int to) {
      bool done = false;
      for (int& w : p.map.rot[at])
        if (w == from && !done) {
          w = to;
          done = true;
        }
      if (!done)
        throw ParseError("crossing references edge " + g.names[at] +
                         "-" + g.names[from] + " absent from the rotation");
    };
    substitute(x.a, x.b, dummy);
    substitute(x.b, x.a, dummy);
    substitute(x.c, x.d, dummy);
    substitute(x.d, x.c, dummy);
    int e1 = g.edge_index(x.a, x.b), e2 = g.edge_index(x.c, x.d);
    auto norm = [](int u, int v) {
      return u < v ? std::make_pair(u, v) : std::make_pair(v, u);
    };
    p.parent_edge[norm(x.a, dummy)] = e1;
    p.parent_edge[norm(x.b, dummy)] = e1;
    p.parent_edge[norm(x.c, dummy)] = e2;
    p.parent_edge[norm(x.d, dummy)] = e2;
  }
  std::vector<int> crossed = g.crossed_edge_flags();
  for (int e = 0; e < g.m(); ++e)
    if (!crossed[e]) p.parent_edge[g.edges[e]] = e;

  p.map.build();
  if (!p.map.is_sphere_embedding())
    throw ParseError(
        "rotation system is not a plane embedding (Euler check failed: V=" +
        std::to_string(p.map.n) + " E=" + std::to_string(p.map.m()) +
        " F=" + std::to_string(p.map.f()) + ")");

  if (g.outer_edges.empty()) {
    if (p.map.rot.empty() || p.map.rot[0].empty())
      throw ParseError("cannot default the outer face of an edgeless graph");
    p.outer_face = p.map.face_of[p.map.dart(0, p.map.rot[0][0])];
    return p;
  }

  std::vector<int> declared;
  for (const auto& [u, v] : g.outer_edges) declared.push_back(g.edge_index(u, v));
  std::vector<int> declared_sorted = declared;
  std::sort(declared_sorted.begin(), declared_sorted.end());

  std::vector<int> multiset_hits;
  for (int f = 0; f < p.map.f(); ++f) {
    std::vector<int> pe = p.face_parent_edges(f);
    std::sort(pe.begin(), pe.end());
    if (pe == declared_sorted) multiset_hits.push_back(f);
  }
  if (multiset_hits.empty())
    throw ParseError("declared outer face matches no facial walk");
  if (multiset_hits.size() == 1) {
    p.outer_face = multiset_hits[0];
    return p;
  }
  std::vector<int> seq_hits;
  for (int f : multiset_hits)
    if (cyclic_equal(declared, p.face_parent_edges(f))) seq_hits.push_back(f);
  if (seq_hits.size() != 1)
    throw ParseError("declared outer face is ambiguous (" +
                     std::to_string(multiset_hits.size()) +
                     " facial walks match)");
  p.outer_face = seq_hits[0];
  return p;
}

}  // namespace biplanar
