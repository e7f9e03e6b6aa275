#include "tits/diagram.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

#include "json.hpp"
#include "tits/rootkit.hpp"

namespace tits {

DynkinDiagram::DynkinDiagram(VertexSet vertices, IntMatrix pairing, bool affine)
    : vertices_(std::move(vertices)), pairing_(std::move(pairing)), affine_(affine) {
  if (!std::is_sorted(vertices_.begin(), vertices_.end()))
    throw std::invalid_argument("diagram vertices must be sorted");
  slot_.assign(static_cast<std::size_t>(max_label()) + 1, -1);
  for (std::size_t k = 0; k < vertices_.size(); ++k) slot_[vertices_[k]] = static_cast<int>(k);
}

bool DynkinDiagram::has_vertex(int v) const {
  return v >= 0 && v < static_cast<int>(slot_.size()) && slot_[v] >= 0;
}

int DynkinDiagram::slot(int v) const {
  if (!has_vertex(v)) throw std::out_of_range("vertex " + std::to_string(v) + " not in diagram");
  return slot_[v];
}

std::int64_t DynkinDiagram::pairing(int u, int v) const { return pairing_[slot(u)][slot(v)]; }

int DynkinDiagram::multiplicity(int u, int v) const {
  if (u == v) return 0;
  return static_cast<int>(pairing(u, v) * pairing(v, u));
}

std::vector<std::pair<int, int>> DynkinDiagram::edges() const {
  std::vector<std::pair<int, int>> out;
  for (std::size_t a = 0; a < vertices_.size(); ++a)
    for (std::size_t b = a + 1; b < vertices_.size(); ++b)
      if (pairing_[a][b] != 0) out.emplace_back(vertices_[a], vertices_[b]);
  return out;
}

std::vector<std::pair<int, int>> DynkinDiagram::arrows() const {
  std::vector<std::pair<int, int>> out;
  for (auto [u, v] : edges()) {
    if (multiplicity(u, v) < 2 || pairing(u, v) == pairing(v, u)) continue;
    // <alpha_u^vee, alpha_v> = -m means alpha_v is the long root
    if (pairing(u, v) < -1)
      out.emplace_back(v, u);
    else
      out.emplace_back(u, v);
  }
  return out;
}

std::vector<int> DynkinDiagram::neighbors(int v) const {
  std::vector<int> out;
  for (int u : vertices_)
    if (u != v && pairing(v, u) != 0) out.push_back(u);
  return out;
}

DynkinDiagram DynkinDiagram::restrict(const VertexSet& subset) const {
  IntMatrix m(subset.size(), IntVec(subset.size()));
  for (std::size_t a = 0; a < subset.size(); ++a)
    for (std::size_t b = 0; b < subset.size(); ++b) m[a][b] = pairing(subset[a], subset[b]);
  return DynkinDiagram(subset, std::move(m), affine_ && std::binary_search(subset.begin(), subset.end(), 0));
}

int Component::index_of(int label) const {
  for (std::size_t k = 1; k < bourbaki.size(); ++k)
    if (bourbaki[k] == label) return static_cast<int>(k);
  throw std::out_of_range("label " + std::to_string(label) + " not in component");
}

DynkinDiagram build(Kind kind, int rank) {
  const auto& rs = root_system(kind, rank);
  VertexSet v(static_cast<std::size_t>(rank));
  for (int i = 0; i < rank; ++i) v[i] = i + 1;
  return DynkinDiagram(v, rs.cartan, false);
}

DynkinDiagram extend(const DynkinDiagram& d) {
  if (d.affine()) throw std::invalid_argument("diagram is already affine");
  const auto comps = induced_subdiagram(d, d.vertices());
  if (comps.size() != 1) throw std::invalid_argument("extend expects an irreducible diagram");
  const Component& c = comps.front();
  const int n = c.type.rank;
  const auto& rs = root_system(c.type.kind, n);
  const IntVec& theta = rs.highest_root;
  const std::int64_t long_len = *std::max_element(rs.root_lengths.begin(), rs.root_lengths.end());

  // theta^vee = sum_k theta_k (len_k / len_theta) alpha_k^vee
  IntMatrix m(static_cast<std::size_t>(n) + 1, IntVec(static_cast<std::size_t>(n) + 1, 0));
  m[0][0] = 2;
  for (int j = 0; j < n; ++j) {
    std::int64_t a0j = 0, aj0 = 0;
    for (int k = 0; k < n; ++k) {
      a0j -= theta[k] * rs.root_lengths[k] * rs.cartan[k][j];
      aj0 -= theta[k] * rs.cartan[j][k];
    }
    m[0][j + 1] = a0j / long_len;
    m[j + 1][0] = aj0;
    for (int k = 0; k < n; ++k) m[j + 1][k + 1] = rs.cartan[j][k];
  }
  // relabel template rows to the diagram's labels
  IntMatrix out(static_cast<std::size_t>(n) + 1, IntVec(static_cast<std::size_t>(n) + 1, 0));
  std::vector<int> label_of(static_cast<std::size_t>(n) + 1, 0);
  for (int k = 1; k <= n; ++k) label_of[k] = c.bourbaki[k];
  VertexSet sorted = d.vertices();
  sorted.insert(sorted.begin(), 0);
  auto pos = [&](int label) {
    return static_cast<std::size_t>(std::lower_bound(sorted.begin(), sorted.end(), label) - sorted.begin());
  };
  for (int a = 0; a <= n; ++a)
    for (int b = 0; b <= n; ++b) out[pos(label_of[a])][pos(label_of[b])] = m[a][b];
  return DynkinDiagram(sorted, std::move(out), true);
}

// ---------------------------------------------------------------------------
// Permutations

Perm identity_perm(int max_label) {
  Perm p(static_cast<std::size_t>(max_label) + 1);
  for (int i = 0; i <= max_label; ++i) p[i] = i;
  return p;
}

Perm compose(const Perm& a, const Perm& b) {
  Perm out(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) out[i] = a[b[i]];
  return out;
}

Perm inverse(const Perm& p) {
  Perm out(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) out[p[i]] = static_cast<int>(i);
  return out;
}

VertexSet permute_set(const Perm& p, const VertexSet& s) {
  VertexSet out;
  out.reserve(s.size());
  for (int v : s) out.push_back(p[v]);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Perm> automorphisms(const DynkinDiagram& d) {
  const auto& V = d.vertices();
  std::vector<Perm> out;
  Perm p = identity_perm(d.max_label());
  std::vector<bool> used(static_cast<std::size_t>(d.max_label()) + 1, false);
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == V.size()) {
      out.push_back(p);
      return;
    }
    const int v = V[k];
    for (int w : V) {
      if (used[w]) continue;
      if (d.affine() && (v == 0) != (w == 0)) continue;
      bool ok = d.neighbors(v).size() == d.neighbors(w).size();
      for (std::size_t j = 0; j < k && ok; ++j) {
        const int u = V[j];
        ok = d.pairing(u, v) == d.pairing(p[u], w) && d.pairing(v, u) == d.pairing(w, p[u]);
      }
      if (!ok) continue;
      used[w] = true;
      p[v] = w;
      rec(k + 1);
      used[w] = false;
      p[v] = v;
    }
  };
  rec(0);
  std::sort(out.begin(), out.end());
  return out;
}

StarAction generate_action(const std::vector<Perm>& generators, int max_label) {
  std::set<Perm> elems{identity_perm(max_label)};
  std::vector<Perm> frontier(elems.begin(), elems.end());
  while (!frontier.empty()) {
    std::vector<Perm> next;
    for (const auto& x : frontier)
      for (const auto& g : generators) {
        Perm y = compose(g, x);
        if (elems.insert(y).second) next.push_back(std::move(y));
      }
    frontier = std::move(next);
  }
  return StarAction{generators, std::vector<Perm>(elems.begin(), elems.end())};
}

StarAction conjugate_action(const StarAction& a, const Perm& phi) {
  const Perm inv = inverse(phi);
  StarAction out;
  for (const auto& g : a.generators) out.generators.push_back(compose(phi, compose(g, inv)));
  for (const auto& g : a.elements) out.elements.push_back(compose(phi, compose(g, inv)));
  std::sort(out.elements.begin(), out.elements.end());
  return out;
}

std::vector<StarAction> subgroups_up_to_conjugacy(const std::vector<Perm>& aut_group) {
  if (aut_group.empty()) return {};
  const int max_label = static_cast<int>(aut_group.front().size()) - 1;
  // Aut(D) has order at most 6, so every subgroup is generated by two elements.
  std::set<std::vector<Perm>> subgroups;
  for (const auto& g : aut_group)
    for (const auto& h : aut_group) subgroups.insert(generate_action({g, h}, max_label).elements);

  std::set<std::vector<Perm>> seen;
  std::vector<StarAction> reps;
  for (const auto& s : subgroups) {
    if (seen.count(s)) continue;
    std::vector<Perm> best = s;
    for (const auto& phi : aut_group) {
      const Perm inv = inverse(phi);
      std::vector<Perm> c;
      for (const auto& g : s) c.push_back(compose(phi, compose(g, inv)));
      std::sort(c.begin(), c.end());
      seen.insert(c);
      best = std::min(best, c);
    }
    std::vector<Perm> gens;
    for (const auto& g : best) {
      const auto cur = generate_action(gens, max_label).elements;
      if (!std::binary_search(cur.begin(), cur.end(), g)) gens.push_back(g);
    }
    reps.push_back(StarAction{gens, best});
  }
  std::sort(reps.begin(), reps.end(), [](const StarAction& a, const StarAction& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.elements < b.elements;
  });
  return reps;
}

StarAction standard_gamma(Kind kind, int rank, std::size_t order) {
  for (auto& s : subgroups_up_to_conjugacy(automorphisms(build(kind, rank))))
    if (s.order() == order) return s;
  throw std::domain_error(CartanType{kind, rank}.name() + " has no diagram symmetry group of order " +
                          std::to_string(order));
}

bool is_invariant(const StarAction& a, const VertexSet& subset) {
  for (const auto& g : a.elements)
    if (permute_set(g, subset) != subset) return false;
  return true;
}

OrbitPartition orbits(const StarAction& a, const VertexSet& subset) {
  if (!is_invariant(a, subset)) throw std::domain_error("vertex set " + format_set(subset) + " is not star-invariant");
  OrbitPartition out;
  std::set<int> done;
  for (int v : subset) {
    if (done.count(v)) continue;
    std::set<int> orb;
    for (const auto& g : a.elements) orb.insert(g[v]);
    done.insert(orb.begin(), orb.end());
    out.blocks.emplace_back(orb.begin(), orb.end());
  }
  return out;
}

VertexSet set_difference(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

VertexSet set_union(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::string format_set(const VertexSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
  return out + "}";
}

}  // namespace tits
