#include "biplanar/graph.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <tuple>

#include <json.hpp>

#include "biplanar/errors.hpp"
#include "biplanar/planar_map.hpp"

namespace biplanar {

namespace {

std::pair<int, int> norm(int u, int v) {
  return u < v ? std::make_pair(u, v) : std::make_pair(v, u);
}

}  // namespace

int EmbeddedGraph::add_vertex(const std::string& name) {
  auto it = index_of.find(name);
  if (it != index_of.end()) return it->second;
  int idx = n();
  index_of.emplace(name, idx);
  names.push_back(name);
  rotation.emplace_back();
  return idx;
}

int EmbeddedGraph::add_edge(int u, int v) {
  auto key = norm(u, v);
  auto it = edge_ids.find(key);
  if (it != edge_ids.end()) return it->second;
  int id = m();
  edge_ids.emplace(key, id);
  edges.push_back(key);
  return id;
}

bool EmbeddedGraph::has_edge(int u, int v) const {
  return edge_ids.count(norm(u, v)) > 0;
}

int EmbeddedGraph::edge_index(int u, int v) const {
  auto it = edge_ids.find(norm(u, v));
  return it == edge_ids.end() ? -1 : it->second;
}

int EmbeddedGraph::crossing_of_edge(int e) const {
  for (std::size_t i = 0; i < crossings.size(); ++i) {
    const Crossing& x = crossings[i];
    if (edge_index(x.a, x.b) == e || edge_index(x.c, x.d) == e)
      return static_cast<int>(i);
  }
  return -1;
}

bool EmbeddedGraph::edge_crossed(int u, int v) const {
  int e = edge_index(u, v);
  return e >= 0 && crossing_of_edge(e) >= 0;
}

std::vector<int> EmbeddedGraph::crossed_edge_flags() const {
  std::vector<int> flags(m(), 0);
  for (const Crossing& x : crossings) {
    int e1 = edge_index(x.a, x.b);
    int e2 = edge_index(x.c, x.d);
    if (e1 >= 0) flags[e1] = 1;
    if (e2 >= 0) flags[e2] = 1;
  }
  return flags;
}

bool EmbeddedGraph::operator==(const EmbeddedGraph& o) const {
  return names == o.names && edges == o.edges && rotation == o.rotation &&
         crossings == o.crossings && outer_edges == o.outer_edges;
}

namespace {

struct Collector {
  std::vector<std::string> problems;
  void add(int line, const std::string& msg) {
    if (line > 0)
      problems.push_back("line " + std::to_string(line) + ": " + msg);
    else
      problems.push_back(msg);
  }
  void raise_if_any() const {
    if (problems.empty()) return;
    std::string all;
    for (const auto& p : problems) {
      if (!all.empty()) all += "\n";
      all += p;
    }
    throw ParseError(all);
  }
};

// Checks everything that does not need the rotation system to be a sphere
// embedding yet; structural problems are accumulated so a single error can
// list all of them.
void check_structure(const EmbeddedGraph& g, Collector& errs) {
  // Simplicity of the edge list.
  for (const auto& [u, v] : g.edges) {
    if (u == v) errs.add(0, "loop at vertex '" + g.names[u] + "'");
  }
  // Rotation lists: each vertex lists exactly its neighbors, once each.
  std::vector<std::set<int>> nbrs(g.n());
  for (const auto& [u, v] : g.edges) {
    nbrs[u].insert(v);
    nbrs[v].insert(u);
  }
  for (int v = 0; v < g.n(); ++v) {
    std::set<int> seen;
    for (int w : g.rotation[v]) {
      if (!nbrs[v].count(w))
        errs.add(0, "rotation of '" + g.names[v] + "' lists non-neighbor '" +
                        g.names[w] + "'");
      if (!seen.insert(w).second)
        errs.add(0, "rotation of '" + g.names[v] + "' repeats '" +
                        g.names[w] + "'");
    }
    for (int w : nbrs[v]) {
      if (!seen.count(w))
        errs.add(0, "rotation of '" + g.names[v] + "' misses neighbor '" +
                        g.names[w] + "'");
    }
  }
  // Crossing pairs: edges exist, are distinct, share no endpoint, and no
  // edge appears in more than one pair.
  std::set<int> crossed;
  for (const Crossing& x : g.crossings) {
    int e1 = g.edge_index(x.a, x.b);
    int e2 = g.edge_index(x.c, x.d);
    if (e1 < 0)
      errs.add(0, "crossing references missing edge " + g.names[x.a] + "-" +
                      g.names[x.b]);
    if (e2 < 0)
      errs.add(0, "crossing references missing edge " + g.names[x.c] + "-" +
                      g.names[x.d]);
    if (e1 >= 0 && e2 >= 0) {
      if (e1 == e2) {
        errs.add(0, "crossing pairs edge " + g.names[x.a] + "-" +
                        g.names[x.b] + " with itself");
        continue;
      }
      std::set<int> ends = {x.a, x.b, x.c, x.d};
      if (ends.size() != 4)
        errs.add(0, "crossing edges " + g.names[x.a] + "-" + g.names[x.b] +
                        " and " + g.names[x.c] + "-" + g.names[x.d] +
                        " share an endpoint");
      for (int e : {e1, e2}) {
        if (!crossed.insert(e).second) {
          const auto& [u, v] = g.edges[e];
          errs.add(0, "edge " + g.names[u] + "-" + g.names[v] +
                          " appears in more than one crossing pair");
        }
      }
    }
  }
  // Declared outer walk references existing edges.
  for (const auto& [u, v] : g.outer_edges) {
    if (g.edge_index(u, v) < 0)
      errs.add(0, "outer face references missing edge " + g.names[u] + "-" +
                      g.names[v]);
  }
}

}  // namespace

void validate_graph(const EmbeddedGraph& g) {
  Collector errs;
  if (g.n() == 0) errs.add(0, "graph has no vertices");
  check_structure(g, errs);
  errs.raise_if_any();
  if (!is_connected(g.n(), g.rotation)) {
    errs.add(0, "graph is not connected");
    errs.raise_if_any();
  }
  // planarize() checks the Euler formula and resolves the outer face; its
  // ParseErrors propagate with their own messages.
  planarize(g);
}

namespace {

std::vector<std::string> split_ws(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

// Parses "<id>-<id>" into two vertex names; splits on the last '-' that
// leaves both sides nonempty, preferring the first so names with dashes in
// the tail still work when unambiguous.
bool split_edge_token(const std::string& tok, std::string& a,
                      std::string& b,
                      const std::unordered_map<std::string, int>& known) {
  for (std::size_t i = 1; i < tok.size(); ++i) {
    if (tok[i] != '-') continue;
    std::string lhs = tok.substr(0, i), rhs = tok.substr(i + 1);
    if (lhs.empty() || rhs.empty()) continue;
    if (known.count(lhs) && known.count(rhs)) {
      a = lhs;
      b = rhs;
      return true;
    }
  }
  // Fall back to the first '-' even when the names are unknown, so the
  // error message can name them.
  auto pos = tok.find('-');
  if (pos == std::string::npos || pos == 0 || pos + 1 == tok.size())
    return false;
  a = tok.substr(0, pos);
  b = tok.substr(pos + 1);
  return true;
}

}  // namespace

EmbeddedGraph parse_graph(const std::string& text) {
  EmbeddedGraph g;
  Collector errs;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;

  auto need_vertex = [&](const std::string& name, int ln) -> int {
    auto it = g.index_of.find(name);
    if (it != g.index_of.end()) return it->second;
    errs.add(ln, "unknown vertex '" + name + "'");
    return -1;
  };

  struct PendingRot {
    int line;
    std::string vertex;
    std::vector<std::string> nbrs;
  };
  struct PendingX {
    int line;
    std::string a, b, c, d;
  };
  std::vector<PendingRot> rots;
  std::vector<PendingX> xs;
  std::vector<std::pair<int, std::vector<std::pair<std::string, std::string>>>>
      outers;
  std::vector<std::tuple<int, std::string, std::string>> edge_stmts;

  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    auto toks = split_ws(line);
    if (toks.empty()) continue;
    const std::string& kw = toks[0];
    if (kw == "v") {
      if (toks.size() != 2) {
        errs.add(lineno, "expected 'v <id>'");
        continue;
      }
      if (g.index_of.count(toks[1]))
        errs.add(lineno, "duplicate vertex '" + toks[1] + "'");
      else
        g.add_vertex(toks[1]);
    } else if (kw == "e") {
      if (toks.size() != 3) {
        errs.add(lineno, "expected 'e <id> <id>'");
        continue;
      }
      edge_stmts.emplace_back(lineno, toks[1], toks[2]);
    } else if (kw == "rot") {
      if (toks.size() < 3 || toks[2] != ":") {
        errs.add(lineno, "expected 'rot <id> : <neighbors>'");
        continue;
      }
      rots.push_back({lineno, toks[1],
                      std::vector<std::string>(toks.begin() + 3, toks.end())});
    } else if (kw == "x") {
      if (toks.size() != 3) {
        errs.add(lineno, "expected 'x <id>-<id> <id>-<id>'");
        continue;
      }
      PendingX px;
      px.line = lineno;
      if (!split_edge_token(toks[1], px.a, px.b, g.index_of) ||
          !split_edge_token(toks[2], px.c, px.d, g.index_of)) {
        errs.add(lineno, "malformed edge token in crossing");
        continue;
      }
      xs.push_back(px);
    } else if (kw == "outer") {
      std::vector<std::pair<std::string, std::string>> walk;
      bool ok = true;
      for (std::size_t i = 1; i < toks.size(); ++i) {
        std::string a, b;
        if (!split_edge_token(toks[i], a, b, g.index_of)) {
          errs.add(lineno, "malformed edge token '" + toks[i] + "' in outer");
          ok = false;
          break;
        }
        walk.emplace_back(a, b);
      }
      if (ok && walk.empty()) {
        errs.add(lineno, "outer declaration lists no edges");
        ok = false;
      }
      if (ok) {
        std::vector<std::pair<int, std::vector<std::pair<std::string,
                                                          std::string>>>>::
            value_type entry{lineno, walk};
        outers.push_back(entry);
      }
    } else {
      errs.add(lineno, "unknown statement '" + kw + "'");
    }
  }

  for (const auto& [ln, an, bn] : edge_stmts) {
    int u = need_vertex(an, ln), v = need_vertex(bn, ln);
    if (u < 0 || v < 0) continue;
    if (u == v) {
      errs.add(ln, "loop at vertex '" + an + "'");
      continue;
    }
    if (g.has_edge(u, v)) {
      errs.add(ln, "duplicate edge " + an + "-" + bn);
      continue;
    }
    g.add_edge(u, v);
  }
  std::vector<bool> has_rot(g.n(), false);
  for (const auto& pr : rots) {
    int v = need_vertex(pr.vertex, pr.line);
    if (v < 0) continue;
    if (has_rot[v]) {
      errs.add(pr.line, "duplicate rotation for '" + pr.vertex + "'");
      continue;
    }
    has_rot[v] = true;
    for (const auto& wn : pr.nbrs) {
      int w = need_vertex(wn, pr.line);
      if (w >= 0) g.rotation[v].push_back(w);
    }
  }
  // Degree <= 2 leaves the cyclic order unique; derive missing rotations
  // there, require them elsewhere.
  std::vector<std::vector<int>> nbrs(g.n());
  for (const auto& [u, v] : g.edges) {
    nbrs[u].push_back(v);
    nbrs[v].push_back(u);
  }
  for (int v = 0; v < g.n(); ++v) {
    if (has_rot[v]) continue;
    if (nbrs[v].size() <= 2) {
      g.rotation[v] = nbrs[v];
      std::sort(g.rotation[v].begin(), g.rotation[v].end());
    } else {
      errs.add(0, "vertex '" + g.names[v] + "' has degree " +
                      std::to_string(nbrs[v].size()) +
                      " but no rotation statement");
    }
  }
  for (const auto& px : xs) {
    Crossing x;
    x.a = need_vertex(px.a, px.line);
    x.b = need_vertex(px.b, px.line);
    x.c = need_vertex(px.c, px.line);
    x.d = need_vertex(px.d, px.line);
    if (x.a < 0 || x.b < 0 || x.c < 0 || x.d < 0) continue;
    g.crossings.push_back(x);
  }
  if (outers.size() > 1)
    errs.add(outers[1].first, "more than one outer declaration");
  if (!outers.empty()) {
    for (const auto& [an, bn] : outers[0].second) {
      int u = need_vertex(an, outers[0].first);
      int v = need_vertex(bn, outers[0].first);
      if (u >= 0 && v >= 0) g.outer_edges.emplace_back(u, v);
    }
  }
  errs.raise_if_any();
  validate_graph(g);
  return g;
}

std::string serialize_graph(const EmbeddedGraph& g) {
  std::ostringstream out;
  for (const auto& name : g.names) out << "v " << name << "\n";
  for (const auto& [u, v] : g.edges)
    out << "e " << g.names[u] << " " << g.names[v] << "\n";
  for (int v = 0; v < g.n(); ++v) {
    if (g.rotation[v].empty()) continue;
    out << "rot " << g.names[v] << " :";
    for (int w : g.rotation[v]) out << " " << g.names[w];
    out << "\n";
  }
  for (const Crossing& x : g.crossings)
    out << "x " << g.names[x.a] << "-" << g.names[x.b] << " " << g.names[x.c]
        << "-" << g.names[x.d] << "\n";
  if (!g.outer_edges.empty()) {
    out << "outer";
    for (const auto& [u, v] : g.outer_edges)
      out << " " << g.names[u] << "-" << g.names[v];
    out << "\n";
  }
  return out.str();
}

EmbeddedGraph graph_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  EmbeddedGraph g;
  Collector errs;
  try {
    for (const auto& v : j.at("vertices")) {
      std::string name = v.get<std::string>();
      if (g.index_of.count(name))
        errs.add(0, "duplicate vertex '" + name + "'");
      else
        g.add_vertex(name);
    }
    auto vid = [&](const nlohmann::json& node) -> int {
      std::string name = node.get<std::string>();
      auto it = g.index_of.find(name);
      if (it != g.index_of.end()) return it->second;
      errs.add(0, "unknown vertex '" + name + "'");
      return -1;
    };
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) {
        errs.add(0, "edge entries must be two-element arrays");
        continue;
      }
      int u = vid(e[0]), v = vid(e[1]);
      if (u < 0 || v < 0) continue;
      if (u == v) {
        errs.add(0, "loop at vertex '" + g.names[u] + "'");
        continue;
      }
      if (g.has_edge(u, v)) {
        errs.add(0, "duplicate edge " + g.names[u] + "-" + g.names[v]);
        continue;
      }
      g.add_edge(u, v);
    }
    if (j.contains("rotation")) {
      for (const auto& [name, lst] : j.at("rotation").items()) {
        auto it = g.index_of.find(name);
        if (it == g.index_of.end()) {
          errs.add(0, "rotation for unknown vertex '" + name + "'");
          continue;
        }
        for (const auto& wn : lst) {
          int w = vid(wn);
          if (w >= 0) g.rotation[it->second].push_back(w);
        }
      }
    }
    if (j.contains("crossings")) {
      for (const auto& xr : j.at("crossings")) {
        if (!xr.is_array() || xr.size() != 2 || !xr[0].is_array() ||
            !xr[1].is_array() || xr[0].size() != 2 || xr[1].size() != 2) {
          errs.add(0, "crossing entries must pair two edges");
          continue;
        }
        Crossing x;
        x.a = vid(xr[0][0]);
        x.b = vid(xr[0][1]);
        x.c = vid(xr[1][0]);
        x.d = vid(xr[1][1]);
        if (x.a < 0 || x.b < 0 || x.c < 0 || x.d < 0) continue;
        g.crossings.push_back(x);
      }
    }
    if (j.contains("outer_face")) {
      for (const auto& er : j.at("outer_face")) {
        if (!er.is_array() || er.size() != 2) {
          errs.add(0, "outer_face entries must be two-element arrays");
          continue;
        }
        int u = vid(er[0]), v = vid(er[1]);
        if (u >= 0 && v >= 0) g.outer_edges.emplace_back(u, v);
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid graph JSON: ") + e.what());
  }
  // Derive rotations of low-degree vertices exactly like the text parser.
  std::vector<std::vector<int>> nbrs(g.n());
  for (const auto& [u, v] : g.edges) {
    nbrs[u].push_back(v);
    nbrs[v].push_back(u);
  }
  for (int v = 0; v < g.n(); ++v) {
    if (!g.rotation[v].empty() || nbrs[v].empty()) continue;
    if (nbrs[v].size() <= 2) {
      g.rotation[v] = nbrs[v];
      std::sort(g.rotation[v].begin(), g.rotation[v].end());
    } else {
      errs.add(0, "vertex '" + g.names[v] + "' has degree " +
                      std::to_string(nbrs[v].size()) + " but no rotation");
    }
  }
  errs.raise_if_any();
  validate_graph(g);
  return g;
}

std::string graph_to_json(const EmbeddedGraph& g) {
  nlohmann::json j;
  j["vertices"] = g.names;
  auto& je = j["edges"] = nlohmann::json::array();
  for (const auto& [u, v] : g.edges)
    je.push_back({g.names[u], g.names[v]});
  auto& jr = j["rotation"] = nlohmann::json::object();
  for (int v = 0; v < g.n(); ++v) {
    if (g.rotation[v].empty()) continue;
    nlohmann::json lst = nlohmann::json::array();
    for (int w : g.rotation[v]) lst.push_back(g.names[w]);
    jr[g.names[v]] = lst;
  }
  auto& jx = j["crossings"] = nlohmann::json::array();
  for (const Crossing& x : g.crossings) {
    nlohmann::json pair = nlohmann::json::array();
    pair.push_back(nlohmann::json::array({g.names[x.a], g.names[x.b]}));
    pair.push_back(nlohmann::json::array({g.names[x.c], g.names[x.d]}));
    jx.push_back(pair);
  }
  if (!g.outer_edges.empty()) {
    auto& jo = j["outer_face"] = nlohmann::json::array();
    for (const auto& [u, v] : g.outer_edges)
      jo.push_back({g.names[u], g.names[v]});
  }
  return j.dump(2) + "\n";
}

EmbeddedGraph skeleton_graph(const EmbeddedGraph& g) {
  std::vector<int> crossed = g.crossed_edge_flags();
  EmbeddedGraph s;
  for (const auto& name : g.names) s.add_vertex(name);
  for (int e = 0; e < g.m(); ++e)
    if (!crossed[e]) s.add_edge(g.edges[e].first, g.edges[e].second);
  for (int v = 0; v < g.n(); ++v)
    for (int w : g.rotation[v])
      if (!crossed[g.edge_index(v, w)]) s.rotation[v].push_back(w);
  return s;
}

EmbeddedGraph induced_subembedding(const EmbeddedGraph& g,
                                   const std::vector<int>& vertices,
                                   std::vector<int>* old_of) {
  std::vector<int> new_of(g.n(), -1);
  EmbeddedGraph s;
  for (int v : vertices) {
    if (new_of[v] >= 0) continue;
    new_of[v] = s.add_vertex(g.names[v]);
  }
  if (old_of) {
    old_of->assign(s.n(), -1);
    for (int v = 0; v < g.n(); ++v)
      if (new_of[v] >= 0) (*old_of)[new_of[v]] = v;
  }
  for (const auto& [u, v] : g.edges)
    if (new_of[u] >= 0 && new_of[v] >= 0) s.add_edge(new_of[u], new_of[v]);
  for (int v = 0; v < g.n(); ++v) {
    if (new_of[v] < 0) continue;
    for (int w : g.rotation[v])
      if (new_of[w] >= 0) s.rotation[new_of[v]].push_back(new_of[w]);
  }
  for (const Crossing& x : g.crossings) {
    bool in1 = new_of[x.a] >= 0 && new_of[x.b] >= 0;
    bool in2 = new_of[x.c] >= 0 && new_of[x.d] >= 0;
    if (in1 && in2) {
      s.crossings.push_back(
          {new_of[x.a], new_of[x.b], new_of[x.c], new_of[x.d]});
    } else if (in1 || in2) {
      throw PreconditionError(
          "crossing pair " + g.names[x.a] + "-" + g.names[x.b] + " x " +
          g.names[x.c] + "-" + g.names[x.d] +
          " straddles the selected component");
    }
  }
  return s;
}

}  // namespace biplanar
