// Component splitting and Bourbaki recognition of induced subdiagrams.
#include <algorithm>
#include <functional>
#include <optional>
#include <stdexcept>

#include "tits/diagram.hpp"
#include "tits/rootkit.hpp"

namespace tits {

namespace {

std::vector<VertexSet> connected_components(const DynkinDiagram& d, const VertexSet& subset) {
  std::vector<VertexSet> out;
  std::vector<bool> seen(static_cast<std::size_t>(d.max_label()) + 1, false);
  for (int start : subset) {
    if (seen[start]) continue;
    VertexSet comp;
    std::vector<int> stack{start};
    seen[start] = true;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (int u : subset)
        if (!seen[u] && u != v && d.pairing(v, u) != 0) {
          seen[u] = true;
          stack.push_back(u);
        }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

std::vector<CartanType> candidate_types(int k) {
  std::vector<CartanType> out;
  for (Kind kind : {Kind::A, Kind::B, Kind::C, Kind::D, Kind::E, Kind::F, Kind::G})
    if (is_valid_type(kind, k)) out.push_back({kind, k});
  return out;
}

// Sort key for choosing among the labelings of one type.
std::vector<int> labeling_key(const CartanType& t, const std::vector<int>& m) {
  if (t.kind != Kind::D) return {m.begin() + 1, m.end()};
  std::vector<int> key{m[t.rank]};
  key.insert(key.end(), m.begin() + 1, m.end() - 1);
  return key;
}

}  // namespace

std::vector<std::vector<int>> component_labelings(const DynkinDiagram& d, const VertexSet& vertices,
                                                  const CartanType& type) {
  const int k = type.rank;
  std::vector<std::vector<int>> out;
  if (static_cast<int>(vertices.size()) != k) return out;
  const IntMatrix& c = root_system(type.kind, k).cartan;
  std::vector<int> m(static_cast<std::size_t>(k) + 1, 0);
  std::vector<bool> used(vertices.size(), false);
  std::function<void(int)> rec = [&](int i) {
    if (i > k) {
      out.push_back(m);
      return;
    }
    for (std::size_t s = 0; s < vertices.size(); ++s) {
      if (used[s]) continue;
      const int v = vertices[s];
      bool ok = true;
      for (int j = 1; j < i && ok; ++j)
        ok = c[i - 1][j - 1] == d.pairing(v, m[j]) && c[j - 1][i - 1] == d.pairing(m[j], v);
      if (!ok) continue;
      used[s] = true;
      m[i] = v;
      rec(i + 1);
      used[s] = false;
    }
  };
  rec(1);
  std::sort(out.begin(), out.end(), [&](const auto& a, const auto& b) {
    return labeling_key(type, a) < labeling_key(type, b);
  });
  return out;
}

std::vector<Component> induced_subdiagram(const DynkinDiagram& d, const VertexSet& subset) {
  std::vector<Component> out;
  for (auto& comp : connected_components(d, subset)) {
    // B2 and C2 share a graph; the smaller labeling wins, then kind order.
    std::optional<Component> best;
    for (const auto& t : candidate_types(static_cast<int>(comp.size()))) {
      auto maps = component_labelings(d, comp, t);
      if (maps.empty()) continue;
      if (!best || maps.front() < best->bourbaki) best = Component{comp, t, maps.front()};
    }
    if (!best) throw std::runtime_error("subdiagram " + format_set(comp) + " is not of finite type");
    out.push_back(std::move(*best));
  }
  return out;
}

}  // namespace tits
