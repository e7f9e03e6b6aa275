#include <set>

#include "doctest.h"
#include "tits/diagram.hpp"

using namespace tits;

TEST_CASE("finite diagrams") {
  const auto e6 = build(Kind::E, 6);
  CHECK(e6.vertices() == VertexSet{1, 2, 3, 4, 5, 6});
  CHECK(e6.neighbors(4) == std::vector<int>{2, 3, 5});
  CHECK(e6.edges().size() == 5);
  const auto f4 = build(Kind::F, 4);
  CHECK(f4.multiplicity(2, 3) == 2);
  CHECK(f4.arrows() == std::vector<std::pair<int, int>>{{2, 3}});
  CHECK(build(Kind::G, 2).multiplicity(1, 2) == 3);
  CHECK(build(Kind::C, 3).arrows() == std::vector<std::pair<int, int>>{{3, 2}});
}

TEST_CASE("extended diagrams attach -theta") {
  CHECK(extend(build(Kind::E, 8)).neighbors(0) == std::vector<int>{8});
  CHECK(extend(build(Kind::E, 7)).neighbors(0) == std::vector<int>{1});
  CHECK(extend(build(Kind::E, 6)).neighbors(0) == std::vector<int>{2});
  CHECK(extend(build(Kind::A, 4)).neighbors(0) == std::vector<int>{1, 4});
  CHECK(extend(build(Kind::C, 3)).multiplicity(0, 1) == 2);
  CHECK(extend(build(Kind::G, 2)).neighbors(0) == std::vector<int>{2});
}

TEST_CASE("automorphism groups") {
  CHECK(automorphisms(build(Kind::A, 1)).size() == 1);
  CHECK(automorphisms(build(Kind::A, 5)).size() == 2);
  CHECK(automorphisms(build(Kind::B, 5)).size() == 1);
  CHECK(automorphisms(build(Kind::D, 4)).size() == 6);
  CHECK(automorphisms(build(Kind::D, 7)).size() == 2);
  CHECK(automorphisms(build(Kind::E, 6)).size() == 2);
  CHECK(automorphisms(build(Kind::E, 8)).size() == 1);
  std::multiset<std::size_t> orders;
  for (const auto& s : subgroups_up_to_conjugacy(automorphisms(build(Kind::D, 4)))) orders.insert(s.order());
  CHECK(orders == std::multiset<std::size_t>{1, 2, 3, 6});
}

TEST_CASE("permutations") {
  const Perm p{0, 2, 3, 1};
  CHECK(compose(p, inverse(p)) == identity_perm(3));
  CHECK(compose(p, p) == Perm{0, 3, 1, 2});
  CHECK(permute_set(p, {1, 2}) == VertexSet{2, 3});
}

TEST_CASE("orbits of the star action") {
  const auto g = standard_gamma(Kind::A, 5, 2);
  CHECK(orbits(g, {1, 3, 5}).blocks == std::vector<VertexSet>{{1, 5}, {3}});
  CHECK(is_invariant(g, {2, 4}));
  CHECK_FALSE(is_invariant(g, {1, 2}));
  CHECK_THROWS_AS(orbits(g, {1, 2}), std::domain_error);
  const auto tri = standard_gamma(Kind::D, 4, 3);
  CHECK(orbits(tri, {1, 2, 3, 4}).blocks == std::vector<VertexSet>{{1, 3, 4}, {2}});
}

TEST_CASE("induced subdiagrams are recognized") {
  const auto e8 = build(Kind::E, 8);
  auto comps = induced_subdiagram(e8, {2, 3, 4, 5, 6, 7, 8});
  REQUIRE(comps.size() == 1);
  CHECK(comps[0].type == CartanType{Kind::D, 7});
  comps = induced_subdiagram(build(Kind::E, 7), {2, 3, 4, 5});
  REQUIRE(comps.size() == 1);
  CHECK(comps[0].type == CartanType{Kind::D, 4});
  CHECK(comps[0].bourbaki[2] == 4);
  comps = induced_subdiagram(build(Kind::F, 4), {2, 3});
  REQUIRE(comps.size() == 1);
  CHECK(comps[0].type == CartanType{Kind::B, 2});
  comps = induced_subdiagram(build(Kind::F, 4), {1, 2, 4});
  REQUIRE(comps.size() == 2);
  CHECK(comps[0].type == CartanType{Kind::A, 2});
  CHECK(comps[1].type == CartanType{Kind::A, 1});
  comps = induced_subdiagram(build(Kind::C, 5), {3, 4, 5});
  CHECK(comps[0].type == CartanType{Kind::C, 3});
  comps = induced_subdiagram(build(Kind::B, 5), {4, 5});
  CHECK(comps[0].type == CartanType{Kind::B, 2});
}

TEST_CASE("extended diagram subsets of finite type") {
  const auto a = extend(build(Kind::A, 4));
  const auto comps = induced_subdiagram(a, {0, 1, 4});
  REQUIRE(comps.size() == 1);
  CHECK(comps[0].type == CartanType{Kind::A, 3});
  CHECK(comps[0].index_of(0) == 2);
  CHECK_THROWS_AS(induced_subdiagram(a, {0, 1, 2, 3, 4}), std::runtime_error);
}

TEST_CASE("set helpers and rendering") {
  CHECK(set_difference({1, 2, 3, 4}, {2, 4}) == VertexSet{1, 3});
  CHECK(set_union({1, 4}, {2, 4}) == VertexSet{1, 2, 4});
  CHECK(format_set({2, 3}) == "{2,3}");
  CHECK(format_set({}) == "{}");
  const std::string art = render_ascii(build(Kind::E, 6), {1, 6});
  CHECK(art.find("(1)") != std::string::npos);
  CHECK(art.find("(6)") != std::string::npos);
  CHECK(art.find(" 2") != std::string::npos);
  CHECK(diagram_json(build(Kind::G, 2)).find("\"vertices\"") != std::string::npos);
}
