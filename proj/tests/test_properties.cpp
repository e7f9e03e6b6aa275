#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "tits/brauer.hpp"
#include "tits/intlinalg.hpp"

using namespace tits;

namespace {

std::vector<CartanType> types_up_to(int max_rank) {
  std::vector<CartanType> out;
  for (Kind k : {Kind::A, Kind::B, Kind::C, Kind::D, Kind::E, Kind::F, Kind::G})
    for (int n = 1; n <= max_rank; ++n)
      if (is_valid_type(k, n)) out.push_back({k, n});
  return out;
}

}  // namespace

TEST_CASE("simple reflections permute the other positive roots") {
  for (const auto& t : types_up_to(8)) {
    const auto& rs = root_system(t.kind, t.rank);
    const std::set<IntVec> pos(rs.positive_roots.begin(), rs.positive_roots.end());
    for (int i = 1; i <= t.rank; ++i)
      for (const auto& r : rs.positive_roots) {
        const IntVec s = reflect_root(rs.cartan, r, i);
        IntVec unit(static_cast<std::size_t>(t.rank), 0);
        unit[static_cast<std::size_t>(i - 1)] = 1;
        if (r == unit) continue;
        CHECK_MESSAGE(pos.count(s), t.name(), " s_", i);
      }
  }
}

TEST_CASE("opposition is an involutive diagram automorphism") {
  for (const auto& t : types_up_to(10)) {
    const auto sigma = opposition_involution(t.kind, t.rank);
    const auto aut = automorphisms(build(t.kind, t.rank));
    CHECK(std::find(aut.begin(), aut.end(), sigma) != aut.end());
    CHECK(compose(sigma, sigma) == identity_perm(t.rank));
  }
}

TEST_CASE("cocenter order equals the Cartan determinant") {
  for (const auto& t : types_up_to(12))
    CHECK(static_cast<std::int64_t>(cocenter(t.kind, t.rank).order()) == std::llabs(determinant(cartan_matrix(t.kind, t.rank))));
}

TEST_CASE("relative rank counts the distinguished orbits") {
  for (const auto& t : types_up_to(9))
    for (const auto& g : subgroups_up_to_conjugacy(automorphisms(build(t.kind, t.rank))))
      for (const auto& idx : closed_form(t.kind, t.rank, g).entries)
        CHECK(relative_system(idx).relative_rank == static_cast<int>(orbits(idx.gamma, idx.circled).blocks.size()));
}

TEST_CASE("labels and verdicts are invariant under diagram automorphisms") {
  std::mt19937_64 rng(99);
  const auto types = types_up_to(8);
  for (int trial = 0; trial < 200; ++trial) {
    const auto& t = types[rng() % types.size()];
    const auto gs = subgroups_up_to_conjugacy(automorphisms(build(t.kind, t.rank)));
    const auto& g = gs[rng() % gs.size()];
    const auto entries = closed_form(t.kind, t.rank, g).entries;
    const auto& idx = entries[rng() % entries.size()];
    const auto aut = automorphisms(build(t.kind, t.rank));
    const auto& phi = aut[rng() % aut.size()];
    const auto moved = make_index(t.kind, t.rank, conjugate_action(g, phi), permute_set(phi, idx.circled));
    CHECK(moved.label == idx.label);
    const auto a = decide(idx), b = decide(moved);
    CHECK(a.excluded == b.excluded);
    CHECK(a.conditions == b.conditions);
  }
}

TEST_CASE("every closed-form entry is admissible") {
  for (const auto& t : types_up_to(10))
    for (const auto& g : subgroups_up_to_conjugacy(automorphisms(build(t.kind, t.rank))))
      for (const auto& idx : closed_form(t.kind, t.rank, g).entries)
        CHECK_MESSAGE(is_admissible(t.kind, t.rank, g, idx.circled).admissible, idx.label);
}
