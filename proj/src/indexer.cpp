#include "tits/indexer.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <stdexcept>

#include "json.hpp"
#include "tits/rootkit.hpp"

namespace tits {

namespace {

struct Ambient {
  DynkinDiagram diagram;
  DynkinDiagram extended;
  std::vector<Perm> aut;
};

const Ambient& ambient(Kind kind, int rank) {
  static std::mutex mu;
  static std::map<CartanType, std::unique_ptr<Ambient>> cache;
  require_valid_type(kind, rank);
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[CartanType{kind, rank}];
  if (!slot) {
    auto a = std::make_unique<Ambient>();
    a->diagram = build(kind, rank);
    a->extended = extend(a->diagram);
    a->aut = automorphisms(a->diagram);
    slot = std::move(a);
  }
  return *slot;
}

const std::vector<int>& cached_opposition(const CartanType& t) {
  static std::mutex mu;
  static std::map<CartanType, std::vector<int>> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(t);
    if (it != cache.end()) return it->second;
  }
  auto sigma = opposition_involution(t.kind, t.rank);
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(t, std::move(sigma)).first->second;
}

AdmissibilityReport check(Kind kind, int rank, const StarAction& gamma, const VertexSet& circled, bool stop_early) {
  if (!is_invariant(gamma, circled))
    throw std::domain_error("circled set " + format_set(circled) + " is not invariant under the star action");
  AdmissibilityReport report;
  if (circled.empty()) return report;
  const Ambient& amb = ambient(kind, rank);
  const VertexSet jhat = set_union(circled, {0});
  const VertexSet rest = set_difference(amb.extended.vertices(), jhat);

  std::vector<VertexSet> test_orbits{{0}};
  for (auto& b : orbits(gamma, circled).blocks) test_orbits.push_back(b);
  for (const auto& orbit : test_orbits) {
    OrbitWitness w;
    w.orbit = orbit;
    w.test_vertices = set_union(rest, orbit);
    w.components = induced_subdiagram(amb.extended, w.test_vertices);
    for (int v : orbit) {
      for (const auto& c : w.components) {
        if (!std::binary_search(c.vertices.begin(), c.vertices.end(), v)) continue;
        const auto& sigma = cached_opposition(c.type);
        w.image.push_back(c.bourbaki[sigma[c.index_of(v)]]);
      }
    }
    std::sort(w.image.begin(), w.image.end());
    w.invariant = w.image == orbit;
    report.admissible = report.admissible && w.invariant;
    report.witnesses.push_back(std::move(w));
    if (stop_early && !report.admissible) break;
  }
  return report;
}

bool same_group(const StarAction& a, const StarAction& b) { return a.elements == b.elements; }

VertexSet range_multiples(int d, int r) {
  VertexSet s;
  for (int k = 1; k <= r; ++k) s.push_back(k * d);
  return s;
}

VertexSet normalized(VertexSet s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

// Circled sets of the closed-form list for the standard star action.
std::vector<VertexSet> closed_form_sets(Kind kind, int n, std::size_t order) {
  std::vector<VertexSet> out{{}};
  VertexSet all = range_multiples(1, n);
  auto even_or_one = [](int d) { return d == 1 || d % 2 == 0; };
  switch (kind) {
    case Kind::A:
      for (int d = 1; d <= n + 1; ++d) {
        if ((n + 1) % d != 0) continue;
        if (order == 1) {
          out.push_back(range_multiples(d, (n + 1) / d - 1));
        } else {
          for (int r = 1; 2 * r * d <= n + 1; ++r) {
            VertexSet s = range_multiples(d, r);
            for (int k = 1; k <= r; ++k) s.push_back(n + 1 - k * d);
            out.push_back(normalized(s));
          }
        }
      }
      break;
    case Kind::B:
    case Kind::C:
      for (int d = 1; d <= n; ++d) {
        if (kind == Kind::B && !even_or_one(d)) continue;
        for (int r = 1; r * d <= n; ++r) out.push_back(range_multiples(d, r));
      }
      break;
    case Kind::D:
      if (order >= 3) {
        out.push_back({2});
        out.push_back(all);
        break;
      }
      for (int d = 1; d <= n; ++d) {
        if (!even_or_one(d)) continue;
        for (int r = 1; r * d <= n; ++r) {
          const int top = r * d;
          if (order == 1 && top != n - 1) out.push_back(range_multiples(d, r));
          if (order == 2 && top <= n - 2) out.push_back(range_multiples(d, r));
          if (order == 2 && top == n - 1) {
            VertexSet s = range_multiples(d, r - 1);
            s.push_back(n - 1);
            s.push_back(n);
            out.push_back(normalized(s));
          }
        }
      }
      break;
    case Kind::E:
      if (n == 6) {
        out.insert(out.end(), {{2}, {1, 6}, {2, 4}, all});
        if (order == 2) out.push_back({1, 2, 6});
      } else if (n == 7) {
        out.insert(out.end(), {{1}, {6}, {7}, {1, 3}, {1, 6}, {1, 6, 7}, {1, 3, 4, 6}, all});
      } else {
        out.insert(out.end(), {{1}, {8}, {1, 8}, {7, 8}, {1, 6, 7, 8}, all});
      }
      break;
    case Kind::F: out.insert(out.end(), {{1}, {4}, {1, 4}, all}); break;
    case Kind::G: out.insert(out.end(), {{2}, all}); break;
  }
  return out;
}

IndexCatalog from_sets(Kind kind, int rank, const StarAction& gamma, const std::vector<VertexSet>& sets,
                       const std::string& provenance) {
  std::set<VertexSet> canon;
  for (const auto& s : sets) canon.insert(canonical_circled(kind, rank, gamma, s));
  std::vector<VertexSet> ordered(canon.begin(), canon.end());
  std::stable_sort(ordered.begin(), ordered.end(),
                   [](const VertexSet& a, const VertexSet& b) { return a.size() < b.size(); });
  IndexCatalog cat;
  cat.provenance = provenance;
  for (const auto& s : ordered) cat.entries.push_back(make_index(kind, rank, gamma, s));
  return cat;
}

}  // namespace

std::vector<VertexSet> IndexCatalog::circled_sets() const {
  std::vector<VertexSet> out;
  for (const auto& e : entries) out.push_back(e.circled);
  return out;
}

AdmissibilityReport is_admissible(Kind kind, int rank, const StarAction& gamma, const VertexSet& circled) {
  return check(kind, rank, gamma, circled, false);
}

VertexSet canonical_circled(Kind kind, int rank, const StarAction& gamma, const VertexSet& circled) {
  VertexSet best = circled;
  for (const auto& phi : ambient(kind, rank).aut) {
    if (!same_group(conjugate_action(gamma, phi), gamma)) continue;
    best = std::min(best, permute_set(phi, circled));
  }
  return best;
}

TitsIndex make_index(Kind kind, int rank, const StarAction& gamma, const VertexSet& circled) {
  if (!is_invariant(gamma, circled))
    throw std::domain_error("circled set " + format_set(circled) + " is not invariant under the star action");
  // move Gamma onto the standard subgroup of its order
  const StarAction standard = standard_gamma(kind, rank, gamma.order());
  for (const auto& phi : ambient(kind, rank).aut) {
    if (!same_group(conjugate_action(gamma, phi), standard)) continue;
    TitsIndex idx{{kind, rank}, standard, canonical_circled(kind, rank, standard, permute_set(phi, circled)), ""};
    idx.label = tits_label(idx);
    return idx;
  }
  TitsIndex idx{{kind, rank}, gamma, canonical_circled(kind, rank, gamma, circled), ""};
  idx.label = tits_label(idx);
  return idx;
}

VertexSet presentation_circled(const TitsIndex& index) {
  const int n = index.type.rank;
  VertexSet j = index.circled;
  if (index.type.kind != Kind::D) return j;
  const bool has_a = std::binary_search(j.begin(), j.end(), n - 1);
  const bool has_b = std::binary_search(j.begin(), j.end(), n);
  if (has_a && !has_b) {
    j.back() = n;  // n - 1 is the largest element here
  }
  return j;
}

IndexCatalog enumerate(Kind kind, int rank, const StarAction& gamma) {
  const auto blocks = orbits(gamma, ambient(kind, rank).diagram.vertices()).blocks;
  std::vector<VertexSet> admissible;
  const std::size_t total = std::size_t{1} << blocks.size();
  for (std::size_t mask = 0; mask < total; ++mask) {
    VertexSet j;
    for (std::size_t b = 0; b < blocks.size(); ++b)
      if (mask >> b & 1U) j.insert(j.end(), blocks[b].begin(), blocks[b].end());
    std::sort(j.begin(), j.end());
    if (check(kind, rank, gamma, j, true).admissible) admissible.push_back(std::move(j));
  }
  return from_sets(kind, rank, gamma, admissible, "enumerated");
}

IndexCatalog closed_form(Kind kind, int rank, const StarAction& gamma) {
  const std::size_t order = gamma.order();
  const StarAction standard = standard_gamma(kind, rank, order);
  std::vector<VertexSet> sets = closed_form_sets(kind, rank, order);
  if (!same_group(standard, gamma)) {
    bool found = false;
    for (const auto& phi : ambient(kind, rank).aut) {
      if (!same_group(conjugate_action(standard, phi), gamma)) continue;
      for (auto& s : sets) s = permute_set(phi, s);
      found = true;
      break;
    }
    if (!found) throw std::domain_error("star action is not a subgroup of the diagram symmetries");
  }
  return from_sets(kind, rank, gamma, sets, "closed-form");
}

std::size_t subsystem_root_count(Kind kind, int rank, const VertexSet& vertices) {
  std::size_t total = 0;
  for (const auto& c : induced_subdiagram(ambient(kind, rank).diagram, vertices))
    total += 2 * root_system(c.type.kind, c.type.rank).positive_roots.size();
  return total;
}

RelativeSystem relative_system(const TitsIndex& index) {
  const Kind kind = index.type.kind;
  const int rank = index.type.rank;
  if (!check(kind, rank, index.gamma, index.circled, true).admissible)
    throw std::domain_error("index " + format_set(index.circled) + " is not admissible");
  RelativeSystem rel;
  rel.orbits = orbits(index.gamma, index.circled).blocks;
  rel.relative_rank = static_cast<int>(rel.orbits.size());
  const std::size_t r = rel.orbits.size();

  std::set<IntVec> psi;
  for (const auto& root : root_system(kind, rank).positive_roots) {
    IntVec v(r, 0);
    for (std::size_t o = 0; o < r; ++o)
      for (int i : rel.orbits[o]) v[o] += root[i - 1];
    if (std::all_of(v.begin(), v.end(), [](std::int64_t x) { return x == 0; })) continue;
    psi.insert(v);
    for (auto& x : v) x = -x;
    psi.insert(v);
  }
  rel.relative_roots.assign(psi.begin(), psi.end());
  if (r == 0) {
    rel.recognized_type = "0";
    return rel;
  }

  auto doubled = [](IntVec v) {
    for (auto& x : v) x *= 2;
    return v;
  };
  std::set<IntVec> reduced;
  for (const auto& v : psi) {
    if (psi.count(doubled(v))) rel.non_reduced = true;
    bool divisible = std::all_of(v.begin(), v.end(), [](std::int64_t x) { return x % 2 == 0; });
    if (divisible) {
      IntVec half = v;
      for (auto& x : half) x /= 2;
      if (psi.count(half)) continue;
    }
    reduced.insert(v);
  }
  IntMatrix cartan(r, IntVec(r, 0));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      if (i == j) {
        cartan[i][j] = 2;
        continue;
      }
      IntVec v(r, 0);
      v[j] = 1;
      std::int64_t k = 0;
      for (;;) {
        v[i] += 1;
        if (!reduced.count(v)) break;
        ++k;
      }
      cartan[i][j] = -k;
    }
  VertexSet labels;
  for (std::size_t i = 1; i <= r; ++i) labels.push_back(static_cast<int>(i));
  DynkinDiagram rd(labels, cartan, false);
  const auto comps = induced_subdiagram(rd, labels);
  if (comps.size() != 1) throw std::logic_error("relative root system is not irreducible");
  rel.recognized_type = rel.non_reduced ? "BC" + std::to_string(r) : comps.front().type.name();
  return rel;
}

std::string tits_label(const TitsIndex& index) {
  const Kind kind = index.type.kind;
  const int n = index.type.rank;
  const std::size_t order = index.gamma.order();
  const Ambient& amb = ambient(kind, n);
  const int relrank = static_cast<int>(orbits(index.gamma, index.circled).blocks.size());
  std::string label;
  if (amb.aut.size() > 1) label += std::to_string(order);
  label += index.type.name() + "_" + std::to_string(relrank) + "_";

  const bool parenthesized = kind == Kind::A || kind == Kind::C || (kind == Kind::D && order <= 2);
  if (parenthesized) {
    const VertexSet j = presentation_circled(index);
    if (!j.empty())
      label += "(" + std::to_string(j.front()) + ")";
    else if (kind == Kind::A && order == 1)
      label += "(" + std::to_string(n + 1) + ")";
    else
      label += "(-)";
    return label;
  }
  const VertexSet kernel = set_difference(amb.diagram.vertices(), index.circled);
  const std::size_t sup = subsystem_root_count(kind, n, kernel) + static_cast<std::size_t>(n - relrank);
  label += std::to_string(sup);
  if (kind == Kind::E && n == 6 && order == 2 && relrank == 2 && sup == 16)
    label += std::binary_search(index.circled.begin(), index.circled.end(), 1) ? "a" : "b";
  return label;
}

std::string catalog_json(const IndexCatalog& catalog) {
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& e : catalog.entries) {
    const RelativeSystem rel = relative_system(e);
    nlohmann::json j;
    j["type"] = std::string(1, kind_char(e.type.kind));
    j["rank"] = e.type.rank;
    j["gamma_order"] = e.gamma_order();
    j["circled"] = e.circled;
    j["orbits"] = rel.orbits;
    j["label"] = e.label;
    j["relative_rank"] = rel.relative_rank;
    j["relative_type"] = rel.recognized_type;
    entries.push_back(std::move(j));
  }
  nlohmann::json out;
  out["provenance"] = catalog.provenance;
  out["entries"] = std::move(entries);
  return out.dump(2);
}

}  // namespace tits
