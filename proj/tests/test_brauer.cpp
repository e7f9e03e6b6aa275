#include "doctest.h"
#include "json.hpp"
#include "tits/brauer.hpp"

using namespace tits;

namespace {

TitsIndex index_of(Kind k, int n, std::size_t o, const VertexSet& j) {
  return make_index(k, n, standard_gamma(k, n, o), j);
}

}  // namespace

TEST_CASE("kernel blocks of an inner D7 index") {
  const auto shape = kernel_shape(index_of(Kind::D, 7, 1, {2, 4}));
  REQUIRE(shape.blocks.size() == 3);
  CHECK(shape.blocks[0].type == CartanType{Kind::A, 1});
  CHECK(shape.blocks[0].spacing);
  CHECK(shape.blocks[2].type == CartanType{Kind::A, 3});
  CHECK_FALSE(shape.blocks[2].spacing);
  CHECK(shape.blocks[2].components[0].bourbaki[2] == 5);
  const auto rels = orbit_relations(shape);
  REQUIRE(rels.size() == 2);
  CHECK(render_expression(shape, rels[0]) == "[E1]+[E2]=0");
  CHECK(render_expression(shape, rels[1]) == "[E2]+2[A]=0");
}

TEST_CASE("restriction of weights to kernel components") {
  const auto shape = kernel_shape(index_of(Kind::D, 7, 1, {2, 4}));
  const auto r = restrict_weight(alpha_in_omega(Kind::D, 7, 4), shape);
  REQUIRE(r.size() == 3);
  CHECK(r[0][0] == IntVec{0});
  CHECK(r[1][0] == IntVec{1});
  CHECK(r[2][0] == IntVec{2});
}

TEST_CASE("Gamma-orbits of components form one block") {
  const auto shape = kernel_shape(index_of(Kind::A, 5, 2, {3}));
  REQUIRE(shape.blocks.size() == 1);
  CHECK(shape.blocks[0].degree() == 2);
  CHECK(shape.blocks[0].base == "R'");
  CHECK_FALSE(shape.blocks[0].twisted);
}

TEST_CASE("twisted blocks") {
  const auto shape = kernel_shape(index_of(Kind::E, 6, 2, {1, 6}));
  REQUIRE(shape.blocks.size() == 1);
  CHECK(shape.blocks[0].type == CartanType{Kind::D, 4});
  CHECK(shape.blocks[0].twisted);
  CHECK(shape.blocks[0].base == "R");
}

TEST_CASE("field names") {
  const auto g = standard_gamma(Kind::D, 4, 6);
  const auto d = build(Kind::D, 4);
  CHECK(field_name(g, d, g.elements) == "R");
  Subgroup stab;
  for (const auto& p : g.elements)
    if (p[1] == 1) stab.push_back(p);
  CHECK(field_name(g, d, stab) == "R'");
  CHECK(field_name(g, d, {g.elements.front()}) == "R_6");
}

TEST_CASE("order relations come from stable classes") {
  const auto shape = kernel_shape(index_of(Kind::E, 7, 1, {7}));
  const auto rels = order_relations(shape);
  // omega_1, omega_3, omega_5, omega_6 of the E6 kernel carry nonzero classes
  CHECK(rels.size() == 4);
}

TEST_CASE("verdicts") {
  const auto g2 = decide(index_of(Kind::G, 2, 1, {2}));
  CHECK(g2.excluded);
  CHECK(g2.rule == "R1");
  const auto e7 = decide(index_of(Kind::E, 7, 1, {1, 6, 7}));
  CHECK_FALSE(e7.excluded);
  const auto j = nlohmann::json::parse(e7.to_json());
  CHECK(j.at("verdict") == "conditions");
  CHECK(j.at("label") == "E7_3_28");
  CHECK_FALSE(j.contains("rule"));
  CHECK(j.at("trace").size() >= 2);
}

TEST_CASE("catalog helpers") {
  const auto rows = classified_verdicts(Kind::F, 4, standard_gamma(Kind::F, 4, 1));
  CHECK(rows.size() == 5);
  int excluded = 0;
  for (const auto& [idx, v] : rows) excluded += v.excluded ? 1 : 0;
  CHECK(excluded == 2);
  CHECK(enumerated_verdicts(Kind::F, 4, standard_gamma(Kind::F, 4, 1)).size() == 6);
}
