#pragma once

#include <string>
#include <vector>

#include "tits/indexer.hpp"
#include "tits/rootkit.hpp"

namespace tits {

using Subgroup = std::vector<Perm>;  // sorted element list

/// One Gamma-orbit of components of the anisotropic kernel.
struct KernelBlock {
  int id = 0;
  CartanType type;
  /// components[0] is the representative (smallest vertex); the others carry
  /// the labeling transported from it by carriers[k].
  std::vector<Component> components;
  std::vector<Perm> carriers;
  Subgroup stabilizer;  // Stab_Gamma(representative)
  std::string base;     // field label of the stabilizer
  bool twisted = false; // stabilizer acts nontrivially on the representative
  bool spacing = false; // classical A-block between circled vertices
  std::string name;     // E, A, A1, H, ...

  bool a_type() const { return type.kind == Kind::A && !twisted; }
  int a_degree() const { return type.rank + 1; }
  std::size_t degree() const { return components.size(); }
};

/// Formal symbol cores_{F(cores)/F(rel)} res_{F(res)} beta_{block, F(atom)}.
struct BrauerKey {
  int block = 0;
  Subgroup atom;   // field of definition of the class
  Subgroup res;    // field after restriction
  Subgroup cores;  // field of the expression
  bool conjugate = false;

  bool operator==(const BrauerKey&) const = default;
  bool operator<(const BrauerKey& o) const;
};

struct BrauerTerm {
  BrauerKey key;
  IntVec cls;  // residues in the cocenter of the block type
};

struct BrauerExpression {
  std::string source;  // "orbit {..}" or "order omega_k"
  Subgroup base;
  std::vector<BrauerTerm> terms;
  bool derived = false;  // added for deduction only, never rendered
};

struct KernelShape {
  TitsIndex index;
  VertexSet circled;  // presentation circled set
  std::vector<KernelBlock> blocks;
};

struct Verdict {
  std::string label;
  bool excluded = false;
  std::string rule;  // R1, R2 or R5 when excluded
  std::vector<std::string> trace;
  std::vector<std::string> conditions;  // sorted

  std::string to_json() const;
};

KernelShape kernel_shape(const TitsIndex& index);

/// Per-component cocenter classes of the restriction of an ambient weight,
/// in block order then component order.
std::vector<std::vector<IntVec>> restrict_weight(const Weight& w, const KernelShape& shape);

std::vector<BrauerExpression> orbit_relations(const KernelShape& shape);
std::vector<BrauerExpression> order_relations(const KernelShape& shape);

Verdict decide(const TitsIndex& index);

/// decide() applied to every admissible index of the closed-form catalog.
std::vector<std::pair<TitsIndex, Verdict>> classified_verdicts(Kind kind, int rank, const StarAction& gamma);

/// Same, over the brute-force enumeration.
std::vector<std::pair<TitsIndex, Verdict>> enumerated_verdicts(Kind kind, int rank, const StarAction& gamma);

std::string field_name(const StarAction& gamma, const DynkinDiagram& d, const Subgroup& s);
std::string render_expression(const KernelShape& shape, const BrauerExpression& e);

}  // namespace tits
