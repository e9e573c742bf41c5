#include "biplanar/drawing.hpp"

#include <json.hpp>

#include "biplanar/errors.hpp"
#include "biplanar/rational.hpp"

namespace biplanar {

Drawing apply_map(const AffineMap& m, const Drawing& d) {
  Drawing out = d;
  for (Point& p : out.pos) p = apply_map(m, p);
  return out;
}

std::string color_name(Color c) { return c == Color::Red ? "red" : "black"; }

std::string drawing_to_json(const Drawing& d, const EmbeddedGraph& g) {
  nlohmann::json j;
  auto& jp = j["positions"] = nlohmann::json::object();
  for (int v = 0; v < g.n(); ++v) {
    jp[g.names[v]] = {{"x", rat_to_string(d.pos[v].x)},
                      {"y", rat_to_string(d.pos[v].y)}};
  }
  auto& je = j["edges"] = nlohmann::json::array();
  for (int e = 0; e < g.m(); ++e) {
    const auto& [u, v] = g.edges[e];
    nlohmann::json entry;
    entry["ends"] = nlohmann::json::array({g.names[u], g.names[v]});
    entry["color"] = color_name(d.colors[e]);
    je.push_back(entry);
  }
  return j.dump(2) + "\n";
}

Drawing drawing_from_json(const std::string& text, const EmbeddedGraph& g) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid drawing JSON: ") + e.what());
  }
  Drawing d;
  d.pos.assign(g.n(), Point{});
  d.colors.assign(g.m(), Color::Black);
  std::vector<bool> seen(g.n(), false);
  try {
    for (const auto& [name, pt] : j.at("positions").items()) {
      auto it = g.index_of.find(name);
      if (it == g.index_of.end())
        throw ParseError("drawing positions unknown vertex '" + name + "'");
      d.pos[it->second] = {rat_from_string(pt.at("x").get<std::string>()),
                           rat_from_string(pt.at("y").get<std::string>())};
      seen[it->second] = true;
    }
    for (int v = 0; v < g.n(); ++v)
      if (!seen[v])
        throw ParseError("drawing misses position of vertex '" + g.names[v] +
                         "'");
    if (j.contains("edges")) {
      for (const auto& entry : j.at("edges")) {
        const auto& ends = entry.at("ends");
        std::string un = ends.at(0).get<std::string>();
        std::string vn = ends.at(1).get<std::string>();
        auto iu = g.index_of.find(un);
        auto iv = g.index_of.find(vn);
        if (iu == g.index_of.end() || iv == g.index_of.end())
          throw ParseError("drawing edge references unknown vertex");
        int e = g.edge_index(iu->second, iv->second);
        if (e < 0)
          throw ParseError("drawing colors missing edge " + un + "-" + vn);
        std::string c = entry.at("color").get<std::string>();
        if (c != "black" && c != "red")
          throw ParseError("unknown edge color '" + c + "'");
        d.colors[e] = c == "red" ? Color::Red : Color::Black;
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid drawing JSON: ") + e.what());
  }
  return d;
}

}  // namespace biplanar
