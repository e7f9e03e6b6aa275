// Text and JSON rendering of diagrams.
#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

#include "json.hpp"
#include "tits/diagram.hpp"

namespace tits {

namespace {

// Longest simple path in a forest component, starting from its smallest
// endpoint; ties go to the lexicographically smaller path.
std::vector<int> spine(const DynkinDiagram& d, const VertexSet& comp) {
  std::vector<int> best;
  std::function<void(std::vector<int>&)> walk = [&](std::vector<int>& path) {
    if (path.size() > best.size()) best = path;
    for (int u : d.neighbors(path.back())) {
      if (!std::binary_search(comp.begin(), comp.end(), u)) continue;
      if (std::find(path.begin(), path.end(), u) != path.end()) continue;
      path.push_back(u);
      walk(path);
      path.pop_back();
    }
  };
  for (int v : comp) {
    std::vector<int> path{v};
    walk(path);
  }
  return best;
}

std::string bond(const DynkinDiagram& d, int u, int v) {
  const int m = d.multiplicity(u, v);
  if (m <= 1) return "---";
  const char line = m == 2 ? '=' : '#';
  // arrow points from the long root to the short root
  const char tip = d.pairing(u, v) < -1 ? '<' : '>';
  if (d.pairing(u, v) == d.pairing(v, u)) return std::string(3, line);
  return std::string(1, line) + tip + line;
}

std::string token(int v, const VertexSet& circled) {
  if (std::binary_search(circled.begin(), circled.end(), v)) return "(" + std::to_string(v) + ")";
  return " " + std::to_string(v) + " ";
}

}  // namespace

std::string render_ascii(const DynkinDiagram& d, const VertexSet& circled, const std::vector<VertexSet>& twisted_orbits) {
  std::ostringstream os;
  VertexSet all = d.vertices();
  std::vector<int> path = spine(d, all);
  if (d.edges().size() + 1 == all.size()) {
    std::string top, below;
    std::map<int, std::size_t> column;
    for (std::size_t k = 0; k < path.size(); ++k) {
      if (k) top += bond(d, path[k - 1], path[k]);
      column[path[k]] = top.size() + 1;
      top += token(path[k], circled);
    }
    os << top << "\n";
    std::vector<std::pair<std::size_t, int>> hanging;
    for (int v : all)
      if (!column.count(v))
        for (int u : d.neighbors(v))
          if (column.count(u)) hanging.emplace_back(column[u], v);
    if (!hanging.empty()) {
      std::string bar(top.size(), ' '), low(top.size() + 4, ' ');
      for (auto [col, v] : hanging) {
        bar[col] = '|';
        const std::string t = token(v, circled);
        low.replace(col - 1, t.size(), t);
      }
      while (!low.empty() && low.back() == ' ') low.pop_back();
      os << bar << "\n" << low << "\n";
    }
  } else {
    for (auto [u, v] : d.edges()) os << token(u, circled) << bond(d, u, v) << token(v, circled) << "\n";
  }
  for (const auto& orb : twisted_orbits)
    if (orb.size() > 1) os << "  * orbit " << format_set(orb) << "\n";
  return os.str();
}

std::string diagram_json(const DynkinDiagram& d) {
  nlohmann::json j;
  j["vertices"] = d.vertices();
  nlohmann::json edges = nlohmann::json::array(), mult = nlohmann::json::array();
  for (auto [u, v] : d.edges()) {
    edges.push_back({u, v});
    mult.push_back(d.multiplicity(u, v));
  }
  j["edges"] = edges;
  j["multiplicities"] = mult;
  nlohmann::json arrows = nlohmann::json::array();
  for (auto [l, s] : d.arrows()) arrows.push_back({l, s});
  j["arrows"] = arrows;
  j["affine"] = d.affine();
  return j.dump();
}

}  // namespace tits
