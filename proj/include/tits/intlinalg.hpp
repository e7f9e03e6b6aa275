#pragma once

#include "tits/types.hpp"

namespace tits {

/// Smith normal form of an integer matrix together with the left transform.
///
/// `left * input * right == diag(diagonal)` for some unimodular `right`
/// (not retained). Diagonal entries are nonnegative and each divides the
/// next.
struct SmithForm {
  IntVec diagonal;
  IntMatrix left;
};

SmithForm smith_normal_form(const IntMatrix& m);

std::int64_t floor_mod(std::int64_t a, std::int64_t m);
std::int64_t gcd64(std::int64_t a, std::int64_t b);
std::int64_t lcm64(std::int64_t a, std::int64_t b);

/// Determinant by fraction-free elimination (Bareiss).
std::int64_t determinant(const IntMatrix& m);

/// Sublattice of Z^n given by generators, kept in row echelon form.
class Lattice {
 public:
  explicit Lattice(std::size_t dim) : dim_(dim) {}

  std::size_t dim() const { return dim_; }
  void add(const IntVec& v);
  bool contains(IntVec v) const;

 private:
  std::size_t dim_;
  IntMatrix rows_;  // echelon; rows_[k] has its leading entry positive
  std::vector<std::size_t> pivots_;
};

}  // namespace tits
