// Fixed values transcribed from the classification tables and the worked
// examples; the engine must reproduce them exactly.
#include <algorithm>

#include "doctest.h"
#include "tits/brauer.hpp"
#include "tits/candim.hpp"

using namespace tits;

namespace {

Verdict verdict(Kind k, int n, std::size_t o, const VertexSet& j) {
  return decide(make_index(k, n, standard_gamma(k, n, o), j));
}

bool has(const Verdict& v, const std::string& c) {
  return std::find(v.conditions.begin(), v.conditions.end(), c) != v.conditions.end();
}

}  // namespace

TEST_CASE("exceptional exclusions") {
  CHECK(verdict(Kind::E, 6, 1, {2}).excluded);
  CHECK(verdict(Kind::E, 7, 1, {1, 3}).excluded);
  CHECK(verdict(Kind::F, 4, 1, {1}).excluded);
  CHECK(verdict(Kind::F, 4, 1, {1, 4}).excluded);
  CHECK(verdict(Kind::G, 2, 1, {2}).excluded);
  CHECK_FALSE(verdict(Kind::F, 4, 1, {4}).excluded);
  CHECK_FALSE(verdict(Kind::E, 8, 1, {1, 6, 7, 8}).excluded);
}

TEST_CASE("exclusion rules") {
  CHECK(verdict(Kind::E, 6, 1, {2}).rule == "R1");
  CHECK(verdict(Kind::E, 7, 1, {1, 3}).rule == "R1");
  CHECK(verdict(Kind::F, 4, 1, {1}).rule == "R2");
  CHECK(verdict(Kind::F, 4, 1, {1, 4}).rule == "R2");
}

TEST_CASE("classical refinements") {
  CHECK(verdict(Kind::B, 5, 1, {2, 4}).excluded);
  CHECK(verdict(Kind::C, 6, 1, {3, 6}).excluded);
  CHECK_FALSE(verdict(Kind::C, 6, 1, {4}).excluded);
  CHECK(has(verdict(Kind::D, 7, 1, {2, 4}), "2[A]=[E]"));
  CHECK(has(verdict(Kind::D, 6, 1, {2, 4}), "[A1]+[A2]=[E]"));
}

TEST_CASE("labels of surviving exceptional indices") {
  CHECK(verdict(Kind::E, 7, 1, {1, 3, 4, 6}).label == "E7_4_9");
  CHECK(verdict(Kind::E, 8, 1, {1, 8}).label == "E8_2_66");
  CHECK(verdict(Kind::E, 6, 2, {2}).label == "2E6_1_35");
  CHECK(verdict(Kind::D, 4, 3, {1, 2, 3, 4}).label == "3D4_2_2");
}

TEST_CASE("canonical dimensions") {
  const auto t = CandimTable::load(data_dir() + "/candim.json");
  CHECK(t.max_candim("E7_1_78", 2) == 3);
  CHECK(t.max_candim("E7_1_66", 2) == 9);
  CHECK(t.max_candim("E8_8_0", 2) == 0);
  CHECK_FALSE(t.max_candim("G2_0_14", 3).has_value());
}
