#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace tits {

using IntVec = std::vector<std::int64_t>;
using IntMatrix = std::vector<IntVec>;

/// Irreducible (reduced) Cartan-Killing type.
enum class Kind { A, B, C, D, E, F, G };

char kind_char(Kind k);
Kind parse_kind(const std::string& s);

/// A (kind, rank) pair naming one irreducible root system.
struct CartanType {
  Kind kind = Kind::A;
  int rank = 1;

  bool operator==(const CartanType&) const = default;
  auto operator<=>(const CartanType&) const = default;

  std::string name() const;  // e.g. "E7", "D4"
};

/// True when (kind, rank) names an irreducible reduced type in the
/// standard range (A1.., B2.., C2.., D4.., E6-8, F4, G2).
bool is_valid_type(Kind kind, int rank);

/// Throws std::domain_error for invalid types.
void require_valid_type(Kind kind, int rank);

}  // namespace tits
