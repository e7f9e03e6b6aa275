// Anisotropic kernel blocks and the linear relations between Tits classes.
#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>

#include "brauer_internal.hpp"

namespace tits {

bool BrauerKey::operator<(const BrauerKey& o) const {
  return std::tie(block, atom, res, cores, conjugate) < std::tie(o.block, o.atom, o.res, o.cores, o.conjugate);
}

namespace detail {

const CocenterGroup& cocenter_of(const CartanType& t) {
  static std::mutex mu;
  static std::map<CartanType, CocenterGroup> cache;
  std::lock_guard lock(mu);
  auto it = cache.find(t);
  if (it == cache.end()) it = cache.emplace(t, cocenter(t.kind, t.rank)).first;
  return it->second;
}

std::pair<std::size_t, IntVec> act_class(const KernelBlock& b, const Perm& g, std::size_t c, const IntVec& x) {
  const Component& from = b.components[c];
  const int head = g[from.bourbaki[1]];
  std::size_t to = b.components.size();
  for (std::size_t k = 0; k < b.components.size(); ++k)
    if (std::binary_search(b.components[k].vertices.begin(), b.components[k].vertices.end(), head)) to = k;
  if (to == b.components.size()) throw std::logic_error("automorphism does not preserve the block");
  const auto& cg = cocenter_of(b.type);
  if (cg.is_zero(x)) return {to, x};
  const Weight w = minuscule_representative(x, b.type.kind, b.type.rank);
  IntVec moved(w.coords.size(), 0);
  for (int k = 1; k <= b.type.rank; ++k)
    moved[static_cast<std::size_t>(b.components[to].index_of(g[from.bourbaki[k]]) - 1)] = w.coords[k - 1];
  return {to, cg.project(moved)};
}

Subgroup stabilizer_of(const KernelBlock& b, const Subgroup& group, std::size_t c, const IntVec& x) {
  Subgroup out;
  for (const auto& g : group) {
    auto [to, y] = act_class(b, g, c, x);
    if (to == c && y == x) out.push_back(g);
  }
  return out;
}

int minuscule_index(const CartanType& t, const IntVec& x) {
  if (cocenter_of(t).is_zero(x)) return 0;
  const Weight w = minuscule_representative(x, t.kind, t.rank);
  for (std::size_t k = 0; k < w.coords.size(); ++k)
    if (w.coords[k] != 0) return static_cast<int>(k) + 1;
  return 0;
}

IntVec scale(const CocenterGroup& g, const IntVec& x, std::int64_t m) {
  IntVec out(x.size());
  for (std::size_t k = 0; k < x.size(); ++k) out[k] = x[k] * m;
  return g.reduce(out);
}

IntVec add(const CocenterGroup& g, const IntVec& x, const IntVec& y) {
  IntVec out(x.size());
  for (std::size_t k = 0; k < x.size(); ++k) out[k] = x[k] + y[k];
  return g.reduce(out);
}

}  // namespace detail

using namespace detail;

namespace {

// Permutation of Bourbaki indices induced by g on a stable component.
std::vector<int> induced_twist(const std::vector<int>& labeling, const Perm& g) {
  std::vector<int> pi(labeling.size(), 0);
  for (std::size_t k = 1; k < labeling.size(); ++k) {
    const int image = g[labeling[k]];
    pi[k] = static_cast<int>(std::find(labeling.begin() + 1, labeling.end(), image) - labeling.begin());
  }
  return pi;
}

bool standard_twist(const CartanType& t, const std::vector<int>& pi) {
  const int r = t.rank;
  bool identity = true;
  for (int k = 1; k <= r; ++k) identity = identity && pi[k] == k;
  if (identity) return true;
  for (int k = 1; k <= r; ++k) {
    int expect = k;
    if (t.kind == Kind::A) expect = r + 1 - k;
    if (t.kind == Kind::D && k >= r - 1) expect = 2 * r - 1 - k;
    if (t.kind == Kind::E && t.rank == 6) {
      static const int flip[] = {0, 6, 2, 5, 4, 3, 1};
      expect = flip[k];
    }
    if (pi[k] != expect) return false;
  }
  return true;
}

bool classical_ambient(const TitsIndex& index) {
  const Kind k = index.type.kind;
  if (k == Kind::D && index.type.rank == 4 && index.gamma_order() > 2) return false;
  return k == Kind::A || k == Kind::B || k == Kind::C || k == Kind::D;
}

}  // namespace

KernelShape kernel_shape(const TitsIndex& index) {
  KernelShape shape;
  shape.index = index;
  shape.circled = presentation_circled(index);
  const int n = index.type.rank;
  const DynkinDiagram d = build(index.type.kind, n);
  const Subgroup& gamma = index.gamma.elements;
  VertexSet all;
  for (int v = 1; v <= n; ++v) all.push_back(v);
  auto comps = induced_subdiagram(d, set_difference(all, shape.circled));

  std::vector<bool> used(comps.size(), false);
  for (std::size_t i = 0; i < comps.size(); ++i) {
    if (used[i]) continue;
    KernelBlock b;
    b.id = static_cast<int>(shape.blocks.size());
    b.type = comps[i].type;
    Component rep = comps[i];
    for (const auto& g : gamma)
      if (permute_set(g, rep.vertices) == rep.vertices) b.stabilizer.push_back(g);
    auto labelings = component_labelings(d, rep.vertices, rep.type);
    if (classical_ambient(index)) {
      // follow the ambient numbering along the tail
      std::sort(labelings.begin(), labelings.end());
      rep.bourbaki = labelings.front();
    }
    if (b.stabilizer.size() > 1) {
      for (const auto& lab : labelings) {
        bool ok = true;
        for (const auto& g : b.stabilizer) ok = ok && standard_twist(rep.type, induced_twist(lab, g));
        if (ok) {
          rep.bourbaki = lab;
          break;
        }
      }
      for (const auto& g : b.stabilizer) {
        const auto pi = induced_twist(rep.bourbaki, g);
        for (int k = 1; k <= rep.type.rank; ++k) b.twisted = b.twisted || pi[k] != k;
      }
    }
    b.components.push_back(rep);
    b.carriers.push_back(identity_perm(n));
    used[i] = true;
    for (std::size_t j = i + 1; j < comps.size(); ++j) {
      if (used[j]) continue;
      for (const auto& g : gamma) {
        if (permute_set(g, rep.vertices) != comps[j].vertices) continue;
        Component c = comps[j];
        for (int k = 1; k <= rep.type.rank; ++k) c.bourbaki[k] = g[rep.bourbaki[k]];
        b.components.push_back(c);
        b.carriers.push_back(g);
        used[j] = true;
        break;
      }
    }
    b.base = field_name(index.gamma, d, b.stabilizer);
    if (classical_ambient(index) && b.a_type()) {
      const int top = shape.circled.empty() ? 0 : shape.circled.back();
      if (index.type.kind == Kind::A)
        b.spacing = index.gamma.is_trivial() || b.components.size() > 1;
      else
        b.spacing = rep.vertices.back() < top;
    }
    shape.blocks.push_back(std::move(b));
  }
  return shape;
}

std::string field_name(const StarAction& gamma, const DynkinDiagram& d, const Subgroup& s) {
  if (s == gamma.elements) return "R";
  for (int v : d.vertices()) {
    Subgroup stab;
    for (const auto& g : gamma.elements)
      if (g[v] == v) stab.push_back(g);
    if (stab == s) return "R'";
  }
  return "R_" + std::to_string(gamma.order() / std::max<std::size_t>(1, s.size()));
}

std::vector<std::vector<IntVec>> restrict_weight(const Weight& w, const KernelShape& shape) {
  std::vector<std::vector<IntVec>> out;
  for (const auto& b : shape.blocks) {
    const auto& cg = cocenter_of(b.type);
    std::vector<IntVec> per;
    for (const auto& c : b.components) {
      IntVec local(static_cast<std::size_t>(b.type.rank), 0);
      for (int k = 1; k <= b.type.rank; ++k) local[k - 1] = w.coords[static_cast<std::size_t>(c.bourbaki[k] - 1)];
      per.push_back(cg.project(local));
    }
    out.push_back(std::move(per));
  }
  return out;
}

std::vector<BrauerExpression> orbit_relations(const KernelShape& shape) {
  const auto& idx = shape.index;
  std::vector<BrauerExpression> out;
  for (const auto& orbit : orbits(idx.gamma, shape.circled).blocks) {
    const int i = orbit.front();
    BrauerExpression e;
    e.source = "orbit " + format_set(orbit);
    for (const auto& g : idx.gamma.elements)
      if (g[i] == i) e.base.push_back(g);
    const auto restricted = restrict_weight(alpha_in_omega(idx.type.kind, idx.type.rank, i), shape);
    for (std::size_t bi = 0; bi < shape.blocks.size(); ++bi) {
      const KernelBlock& b = shape.blocks[bi];
      const auto& cg = cocenter_of(b.type);
      std::vector<std::pair<std::size_t, IntVec>> terms;
      for (std::size_t c = 0; c < b.components.size(); ++c)
        if (!cg.is_zero(restricted[bi][c])) terms.emplace_back(c, restricted[bi][c]);
      std::vector<bool> done(terms.size(), false);
      for (std::size_t t = 0; t < terms.size(); ++t) {
        if (done[t]) continue;
        // collect the orbit of this term under the relation's field group
        std::vector<std::size_t> members;
        for (const auto& h : e.base) {
          auto image = act_class(b, h, terms[t].first, terms[t].second);
          for (std::size_t u = 0; u < terms.size(); ++u)
            if (!done[u] && terms[u] == image) {
              done[u] = true;
              members.push_back(u);
            }
        }
        std::size_t best = members.front();
        for (std::size_t u : members) {
          const auto key_u = std::make_pair(terms[u].first, minuscule_index(b.type, terms[u].second));
          const auto key_b = std::make_pair(terms[best].first, minuscule_index(b.type, terms[best].second));
          if (key_u < key_b) best = u;
        }
        const auto& [c, x] = terms[best];
        BrauerTerm term;
        term.key.block = b.id;
        term.key.atom = stabilizer_of(b, idx.gamma.elements, c, x);
        term.key.res = stabilizer_of(b, e.base, c, x);
        term.key.cores = e.base;
        term.key.conjugate = c != 0;
        term.cls = x;
        e.terms.push_back(std::move(term));
      }
    }
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<BrauerExpression> order_relations(const KernelShape& shape) {
  const auto& idx = shape.index;
  const CocenterGroup ambient = cocenter(idx.type.kind, idx.type.rank);
  std::vector<BrauerExpression> out;
  for (const auto& b : shape.blocks) {
    const auto& cg = cocenter_of(b.type);
    const Component& rep = b.components.front();
    for (int k = 1; k <= b.type.rank; ++k) {
      IntVec unit(static_cast<std::size_t>(b.type.rank), 0);
      unit[static_cast<std::size_t>(k - 1)] = 1;
      const IntVec kappa = cg.project(unit);
      if (cg.is_zero(kappa)) continue;
      if (stabilizer_of(b, b.stabilizer, 0, kappa) != b.stabilizer) continue;
      const int v = rep.bourbaki[k];
      Weight omega{IntVec(static_cast<std::size_t>(idx.type.rank), 0)};
      omega.coords[static_cast<std::size_t>(v - 1)] = 1;
      const IntVec cls = scale(cg, kappa, class_order(omega, ambient));
      if (cg.is_zero(cls)) continue;
      BrauerExpression e;
      e.source = "order omega_" + std::to_string(v);
      e.base = b.stabilizer;
      e.terms.push_back({BrauerKey{b.id, b.stabilizer, b.stabilizer, b.stabilizer, false}, cls});
      out.push_back(std::move(e));
    }
  }
  return out;
}

}  // namespace tits
