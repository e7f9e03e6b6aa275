#pragma once

#include <string>
#include <utility>
#include <vector>

#include "tits/types.hpp"

namespace tits {

/// Vertex permutation indexed by label; entry 0 is the affine vertex (always
/// fixed) or unused for finite diagrams.
using Perm = std::vector<int>;
using VertexSet = std::vector<int>;  // sorted, duplicate-free

/// Colored graph stored through its generalized Cartan matrix.
///
/// `pairing(u, v)` is <alpha_u^vee, alpha_v>; an edge exists iff it is
/// nonzero, with multiplicity pairing(u, v) * pairing(v, u).
class DynkinDiagram {
 public:
  DynkinDiagram() = default;
  DynkinDiagram(VertexSet vertices, IntMatrix pairing, bool affine);

  const VertexSet& vertices() const { return vertices_; }
  bool affine() const { return affine_; }
  int max_label() const { return vertices_.empty() ? 0 : vertices_.back(); }
  bool has_vertex(int v) const;
  std::int64_t pairing(int u, int v) const;
  int multiplicity(int u, int v) const;
  std::vector<std::pair<int, int>> edges() const;
  /// (long, short) endpoints of every multiple edge.
  std::vector<std::pair<int, int>> arrows() const;
  std::vector<int> neighbors(int v) const;
  DynkinDiagram restrict(const VertexSet& subset) const;

 private:
  int slot(int v) const;
  VertexSet vertices_;
  IntMatrix pairing_;
  std::vector<int> slot_;  // label -> row, -1 if absent
  bool affine_ = false;
};

struct StarAction {
  std::vector<Perm> generators;
  std::vector<Perm> elements;  // sorted; elements.front() is the identity

  std::size_t order() const { return elements.size(); }
  bool is_trivial() const { return elements.size() <= 1; }
};

struct OrbitPartition {
  std::vector<VertexSet> blocks;
};

struct Component {
  VertexSet vertices;
  CartanType type;
  /// bourbaki[k] is the original label sitting at Bourbaki vertex k (index 0 unused).
  std::vector<int> bourbaki;
  /// Inverse map: original label -> Bourbaki index.
  int index_of(int label) const;
};

DynkinDiagram build(Kind kind, int rank);
/// Adds vertex 0 = -theta to an irreducible finite diagram in Bourbaki labels.
DynkinDiagram extend(const DynkinDiagram& d);

Perm identity_perm(int max_label);
Perm compose(const Perm& a, const Perm& b);  // a after b
Perm inverse(const Perm& p);
VertexSet permute_set(const Perm& p, const VertexSet& s);

std::vector<Perm> automorphisms(const DynkinDiagram& d);
StarAction generate_action(const std::vector<Perm>& generators, int max_label);
StarAction conjugate_action(const StarAction& a, const Perm& phi);
std::vector<StarAction> subgroups_up_to_conjugacy(const std::vector<Perm>& aut_group);
/// Convenience: the subgroup representative of the given order (throws if absent).
StarAction standard_gamma(Kind kind, int rank, std::size_t order);

bool is_invariant(const StarAction& a, const VertexSet& subset);
OrbitPartition orbits(const StarAction& a, const VertexSet& subset);

/// Connected components with canonical type recognition, ordered by their
/// smallest vertex. Throws std::runtime_error if a component is not of
/// finite type.
std::vector<Component> induced_subdiagram(const DynkinDiagram& d, const VertexSet& subset);

/// Every Bourbaki labeling of a component of the given type (used to pick a
/// labeling compatible with a twist).
std::vector<std::vector<int>> component_labelings(const DynkinDiagram& d, const VertexSet& vertices,
                                                  const CartanType& type);

VertexSet set_difference(const VertexSet& a, const VertexSet& b);
VertexSet set_union(const VertexSet& a, const VertexSet& b);
std::string format_set(const VertexSet& s);

std::string render_ascii(const DynkinDiagram& d, const VertexSet& circled,
                         const std::vector<VertexSet>& twisted_orbits = {});
std::string diagram_json(const DynkinDiagram& d);

}  // namespace tits
