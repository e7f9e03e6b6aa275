#pragma once

#include <utility>

#include "tits/brauer.hpp"
#include "tits/rootkit.hpp"

namespace tits::detail {

const CocenterGroup& cocenter_of(const CartanType& t);

/// Image of (component c, class x) of a block under a diagram automorphism.
std::pair<std::size_t, IntVec> act_class(const KernelBlock& b, const Perm& g, std::size_t c, const IntVec& x);

/// Elements of `group` fixing (component c, class x).
Subgroup stabilizer_of(const KernelBlock& b, const Subgroup& group, std::size_t c, const IntVec& x);

/// Bourbaki index of the minuscule weight of a class (0 for the trivial class).
int minuscule_index(const CartanType& t, const IntVec& x);

IntVec scale(const CocenterGroup& g, const IntVec& x, std::int64_t m);
IntVec add(const CocenterGroup& g, const IntVec& x, const IntVec& y);

}  // namespace tits::detail
