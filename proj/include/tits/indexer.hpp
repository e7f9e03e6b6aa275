#pragma once

#include <string>
#include <vector>

#include "tits/diagram.hpp"

namespace tits {

struct TitsIndex {
  CartanType type;
  StarAction gamma;
  VertexSet circled;  // canonical (lexicographically smallest) representative
  std::string label;

  std::size_t gamma_order() const { return gamma.order(); }
};

struct OrbitWitness {
  VertexSet orbit;  // may be {0}, the affine vertex
  VertexSet test_vertices;
  std::vector<Component> components;
  VertexSet image;
  bool invariant = false;
};

struct AdmissibilityReport {
  bool admissible = true;
  std::vector<OrbitWitness> witnesses;
};

struct IndexCatalog {
  std::vector<TitsIndex> entries;
  std::string provenance;  // "enumerated" or "closed-form"

  std::vector<VertexSet> circled_sets() const;
};

struct RelativeSystem {
  int relative_rank = 0;
  std::vector<VertexSet> orbits;
  std::vector<IntVec> relative_roots;  // sorted, closed under negation
  std::string recognized_type;         // e.g. "A2", "BC2", "0"
  bool non_reduced = false;
};

/// Throws std::domain_error if J is not Gamma-invariant.
AdmissibilityReport is_admissible(Kind kind, int rank, const StarAction& gamma, const VertexSet& circled);

/// Lexicographically smallest image of J under automorphisms normalizing Gamma.
VertexSet canonical_circled(Kind kind, int rank, const StarAction& gamma, const VertexSet& circled);

/// Builds a canonical index with its label. Does not check admissibility.
TitsIndex make_index(Kind kind, int rank, const StarAction& gamma, const VertexSet& circled);

/// Circled set as written in the classical families: for D_n the fork end
/// n is preferred over n-1 when only one of them is circled.
VertexSet presentation_circled(const TitsIndex& index);

IndexCatalog enumerate(Kind kind, int rank, const StarAction& gamma);
IndexCatalog closed_form(Kind kind, int rank, const StarAction& gamma);

RelativeSystem relative_system(const TitsIndex& index);
std::string tits_label(const TitsIndex& index);

/// Number of roots (positive and negative) of the subsystem spanned by the
/// given vertices.
std::size_t subsystem_root_count(Kind kind, int rank, const VertexSet& vertices);

std::string catalog_json(const IndexCatalog& catalog);

}  // namespace tits
