#include <set>

#include "doctest.h"
#include "tits/indexer.hpp"

using namespace tits;

namespace {

std::set<VertexSet> closed(Kind k, int n, std::size_t order) {
  const auto c = closed_form(k, n, standard_gamma(k, n, order)).circled_sets();
  return {c.begin(), c.end()};
}

}  // namespace

TEST_CASE("inner type A indices are indexed by divisors") {
  CHECK(closed(Kind::A, 5, 1) == std::set<VertexSet>{{}, {3}, {2, 4}, {1, 2, 3, 4, 5}});
  CHECK(closed(Kind::A, 6, 1).size() == 2);
  CHECK(closed(Kind::A, 11, 1).size() == 6);
}

TEST_CASE("exceptional catalogs") {
  CHECK(closed(Kind::E, 8, 1).size() == 7);
  CHECK(closed(Kind::E, 7, 1).size() == 9);
  CHECK(closed(Kind::E, 6, 1).size() == 5);
  CHECK(closed(Kind::E, 6, 2).size() == 6);
  CHECK(closed(Kind::F, 4, 1) == std::set<VertexSet>{{}, {1}, {4}, {1, 4}, {1, 2, 3, 4}});
  CHECK(closed(Kind::G, 2, 1) == std::set<VertexSet>{{}, {2}, {1, 2}});
  CHECK(closed(Kind::D, 4, 3) == std::set<VertexSet>{{}, {2}, {1, 2, 3, 4}});
}

TEST_CASE("admissibility witnesses") {
  const auto g = standard_gamma(Kind::E, 7, 1);
  const auto ok = is_admissible(Kind::E, 7, g, {1, 6, 7});
  CHECK(ok.admissible);
  CHECK(ok.witnesses.size() == 4);  // three orbits plus the affine vertex
  const auto bad = is_admissible(Kind::E, 7, g, {2});
  CHECK_FALSE(bad.admissible);
  CHECK_THROWS_AS(is_admissible(Kind::A, 4, standard_gamma(Kind::A, 4, 2), {1}), std::domain_error);
}

TEST_CASE("canonical representatives") {
  const auto g = standard_gamma(Kind::A, 5, 1);
  CHECK(canonical_circled(Kind::A, 5, g, {5}) == VertexSet{1});
  CHECK(canonical_circled(Kind::E, 6, standard_gamma(Kind::E, 6, 1), {6}) == VertexSet{1});
  CHECK(canonical_circled(Kind::D, 4, standard_gamma(Kind::D, 4, 1), {4}) == VertexSet{1});
}

TEST_CASE("relative root systems") {
  auto rel = [](Kind k, int n, std::size_t o, const VertexSet& j) {
    return relative_system(make_index(k, n, standard_gamma(k, n, o), j));
  };
  CHECK(rel(Kind::E, 7, 1, {1, 3, 4, 6}).recognized_type == "F4");
  CHECK(rel(Kind::E, 7, 1, {1, 6, 7}).recognized_type == "C3");
  CHECK(rel(Kind::D, 4, 3, {1, 2, 3, 4}).recognized_type == "G2");
  CHECK(rel(Kind::E, 6, 2, {2, 4}).recognized_type == "G2");
  CHECK(rel(Kind::A, 5, 2, {1, 5}).non_reduced);
  CHECK(rel(Kind::A, 5, 2, {1, 2, 3, 4, 5}).recognized_type == "C3");
  CHECK(rel(Kind::B, 4, 1, {}).relative_rank == 0);
}

TEST_CASE("labels") {
  auto label = [](Kind k, int n, std::size_t o, const VertexSet& j) {
    return make_index(k, n, standard_gamma(k, n, o), j).label;
  };
  CHECK(label(Kind::E, 8, 1, {1, 6, 7, 8}) == "E8_4_28");
  CHECK(label(Kind::E, 6, 2, {2, 4}) == "2E6_2_16b");
  CHECK(label(Kind::E, 6, 2, {1, 2, 6}) == "2E6_2_16a");
  CHECK(label(Kind::A, 5, 1, {2, 4}) == "1A5_2_(2)");
  CHECK(label(Kind::A, 5, 2, {}) == "2A5_0_(-)");
  CHECK(label(Kind::A, 5, 1, {}) == "1A5_0_(6)");
  CHECK(label(Kind::B, 4, 1, {2, 4}) == "B4_2_6");
  CHECK(label(Kind::C, 4, 1, {2, 4}) == "C4_2_(2)");
  CHECK(label(Kind::D, 4, 3, {2}) == "3D4_1_9");
}

TEST_CASE("D presentation prefers the fork end n") {
  const auto idx = make_index(Kind::D, 6, standard_gamma(Kind::D, 6, 1), {5});
  CHECK(presentation_circled(idx) == VertexSet{6});
}

TEST_CASE("subsystem root counts") {
  CHECK(subsystem_root_count(Kind::E, 8, {2, 3, 4, 5, 6, 7, 8}) == 84);
  CHECK(subsystem_root_count(Kind::E, 7, {}) == 0);
  CHECK(subsystem_root_count(Kind::F, 4, {2, 3}) == 8);
}

TEST_CASE("catalog JSON") {
  const auto j = catalog_json(closed_form(Kind::G, 2, standard_gamma(Kind::G, 2, 1)));
  CHECK(j.find("G2_2_0") != std::string::npos);
  CHECK(j.find("closed-form") != std::string::npos);
}
