#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tits/types.hpp"

namespace tits {

/// Integer weight in the fundamental-weight basis (omega_1 .. omega_rank).
struct Weight {
  IntVec coords;

  bool operator==(const Weight&) const = default;
  bool is_zero() const;
};

/// Finite abelian group Lambda / Lambda_r with its projection from weights.
///
/// Residues are reported modulo the invariant factors greater than one, in
/// nondecreasing order.
class CocenterGroup {
 public:
  CocenterGroup() = default;
  CocenterGroup(IntVec invariant_factors, IntMatrix projection);

  const IntVec& invariant_factors() const { return factors_; }
  std::size_t order() const;
  bool is_trivial() const { return factors_.empty(); }

  /// Residue tuple of a weight (one entry per invariant factor).
  IntVec project(const Weight& w) const;
  IntVec project(const IntVec& omega_coords) const;
  IntVec reduce(IntVec residues) const;
  std::int64_t element_order(const IntVec& residues) const;
  IntVec negate(const IntVec& residues) const;
  bool is_zero(const IntVec& residues) const;

 private:
  IntVec factors_;
  IntMatrix projection_;  // rows of the SNF left transform with factor > 1
};

/// Cartan data for one irreducible type, Bourbaki numbering.
///
/// `cartan[j][i]` is the coefficient of omega_j in alpha_i, so column i is the
/// simple root alpha_i written in the omega basis.
struct RootSystemData {
  CartanType type;
  IntMatrix cartan;
  IntVec root_lengths;              // squared lengths, shortest = 1
  std::vector<IntVec> positive_roots;  // simple-root coordinates
  IntVec highest_root;

  int rank() const { return type.rank; }
  std::size_t dimension() const { return 2 * positive_roots.size() + type.rank; }
};

IntMatrix cartan_matrix(Kind kind, int rank);
IntVec root_lengths(Kind kind, int rank);

/// alpha_i (1-based) in the omega basis.
Weight alpha_in_omega(Kind kind, int rank, int i);

/// Positive roots ordered by height, then lexicographically.
std::vector<IntVec> positive_roots(Kind kind, int rank);

/// Cached root system; references stay valid for the program lifetime.
const RootSystemData& root_system(Kind kind, int rank);

/// Reduced word for the longest Weyl element (1-based simple reflections,
/// first applied first).
std::vector<int> longest_element_word(Kind kind, int rank);

/// Permutation sigma (1-based, index 0 unused) with sigma(i) = j iff
/// -w_0(alpha_i) = alpha_j.
std::vector<int> opposition_involution(Kind kind, int rank);

CocenterGroup cocenter(Kind kind, int rank);

std::int64_t class_order(const Weight& w, const CocenterGroup& g);

/// The minuscule weight of the class, or zero for the trivial class.
/// Throws std::logic_error if the class has no (or more than one)
/// minuscule representative.
Weight minuscule_representative(const IntVec& residues, Kind kind, int rank);

/// Reflection helpers used by the property tests.
IntVec reflect_root(const IntMatrix& cartan, const IntVec& root, int i);
IntVec reflect_weight(const IntMatrix& cartan, const IntVec& weight, int i);

/// Pairing <lambda, beta^vee> for a weight (omega basis) and a root
/// (simple-root coordinates).
std::int64_t coroot_pairing(const RootSystemData& rs, const IntVec& weight, const IntVec& root);

/// Debug dump {kind, rank, cartan, positive_roots}.
std::string root_system_json(Kind kind, int rank);

}  // namespace tits
