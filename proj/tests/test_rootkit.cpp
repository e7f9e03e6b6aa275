#include <algorithm>

#include "doctest.h"
#include "tits/intlinalg.hpp"
#include "tits/rootkit.hpp"

using namespace tits;

TEST_CASE("Cartan matrix columns are simple roots in the omega basis") {
  const IntMatrix g2 = cartan_matrix(Kind::G, 2);
  // alpha_1 short, alpha_2 long: alpha_2 = -3 omega_1 + 2 omega_2
  CHECK(g2[0][1] == -3);
  CHECK(g2[1][0] == -1);
  CHECK(alpha_in_omega(Kind::B, 3, 3).coords == IntVec{0, -1, 2});
  CHECK(alpha_in_omega(Kind::C, 3, 3).coords == IntVec{0, -2, 2});
  CHECK(alpha_in_omega(Kind::A, 1, 1).coords == IntVec{2});
}

TEST_CASE("root lengths put the short roots at length one") {
  CHECK(root_lengths(Kind::B, 3) == IntVec{2, 2, 1});
  CHECK(root_lengths(Kind::C, 3) == IntVec{1, 1, 2});
  CHECK(root_lengths(Kind::G, 2) == IntVec{1, 3});
  CHECK(root_lengths(Kind::F, 4) == IntVec{2, 2, 1, 1});
}

TEST_CASE("number of positive roots") {
  for (int n = 1; n <= 10; ++n) CHECK(positive_roots(Kind::A, n).size() == static_cast<std::size_t>(n * (n + 1) / 2));
  for (int n = 2; n <= 10; ++n) CHECK(positive_roots(Kind::B, n).size() == static_cast<std::size_t>(n * n));
  for (int n = 4; n <= 10; ++n) CHECK(positive_roots(Kind::D, n).size() == static_cast<std::size_t>(n * (n - 1)));
  CHECK(positive_roots(Kind::E, 6).size() == 36);
  CHECK(positive_roots(Kind::E, 7).size() == 63);
  CHECK(positive_roots(Kind::E, 8).size() == 120);
  CHECK(positive_roots(Kind::F, 4).size() == 24);
  CHECK(positive_roots(Kind::G, 2).size() == 6);
}

TEST_CASE("dimensions and highest roots") {
  CHECK(root_system(Kind::E, 8).dimension() == 248);
  CHECK(root_system(Kind::E, 7).dimension() == 133);
  CHECK(root_system(Kind::F, 4).dimension() == 52);
  CHECK(root_system(Kind::E, 8).highest_root == IntVec{2, 3, 4, 6, 5, 4, 3, 2});
  CHECK(root_system(Kind::G, 2).highest_root == IntVec{3, 2});
  CHECK(root_system(Kind::A, 4).highest_root == IntVec{1, 1, 1, 1});
}

TEST_CASE("cocenter invariant factors") {
  CHECK(cocenter(Kind::A, 5).invariant_factors() == IntVec{6});
  CHECK(cocenter(Kind::B, 4).invariant_factors() == IntVec{2});
  CHECK(cocenter(Kind::C, 4).invariant_factors() == IntVec{2});
  CHECK(cocenter(Kind::D, 6).invariant_factors() == IntVec{2, 2});
  CHECK(cocenter(Kind::D, 5).invariant_factors() == IntVec{4});
  CHECK(cocenter(Kind::E, 6).invariant_factors() == IntVec{3});
  CHECK(cocenter(Kind::E, 7).invariant_factors() == IntVec{2});
  CHECK(cocenter(Kind::E, 8).is_trivial());
  CHECK(cocenter(Kind::F, 4).is_trivial());
  CHECK(cocenter(Kind::G, 2).order() == 1);
}

TEST_CASE("class orders") {
  const auto a5 = cocenter(Kind::A, 5);
  CHECK(class_order(Weight{{1, 0, 0, 0, 0}}, a5) == 6);
  CHECK(class_order(Weight{{0, 1, 0, 0, 0}}, a5) == 3);
  CHECK(class_order(Weight{{0, 0, 1, 0, 0}}, a5) == 2);
  CHECK(class_order(alpha_in_omega(Kind::A, 5, 2), a5) == 1);
  const auto d5 = cocenter(Kind::D, 5);
  CHECK(class_order(Weight{{0, 0, 0, 0, 1}}, d5) == 4);
  CHECK(class_order(Weight{{1, 0, 0, 0, 0}}, d5) == 2);
}

TEST_CASE("minuscule representatives") {
  const auto e6 = cocenter(Kind::E, 6);
  const IntVec c1 = e6.project(Weight{{1, 0, 0, 0, 0, 0}});
  const IntVec c6 = e6.project(Weight{{0, 0, 0, 0, 0, 1}});
  CHECK(minuscule_representative(c1, Kind::E, 6).coords == IntVec{1, 0, 0, 0, 0, 0});
  CHECK(minuscule_representative(c6, Kind::E, 6).coords == IntVec{0, 0, 0, 0, 0, 1});
  const auto e7 = cocenter(Kind::E, 7);
  const IntVec c2 = e7.project(Weight{{0, 1, 0, 0, 0, 0, 0}});
  CHECK(minuscule_representative(c2, Kind::E, 7).coords == IntVec{0, 0, 0, 0, 0, 0, 1});
  CHECK(minuscule_representative(IntVec{0}, Kind::E, 7).is_zero());
  const auto b3 = cocenter(Kind::B, 3);
  CHECK(minuscule_representative(b3.project(Weight{{1, 0, 1}}), Kind::B, 3).coords == IntVec{0, 0, 1});
}

TEST_CASE("opposition involution") {
  CHECK(opposition_involution(Kind::A, 4) == std::vector<int>{0, 4, 3, 2, 1});
  CHECK(opposition_involution(Kind::D, 5) == std::vector<int>{0, 1, 2, 3, 5, 4});
  CHECK(opposition_involution(Kind::D, 6) == std::vector<int>{0, 1, 2, 3, 4, 5, 6});
  CHECK(opposition_involution(Kind::E, 6) == std::vector<int>{0, 6, 2, 5, 4, 3, 1});
  CHECK(opposition_involution(Kind::E, 7) == std::vector<int>{0, 1, 2, 3, 4, 5, 6, 7});
}

TEST_CASE("invalid types are rejected") {
  CHECK_THROWS_AS(require_valid_type(Kind::D, 3), std::domain_error);
  CHECK_THROWS_AS(require_valid_type(Kind::E, 9), std::domain_error);
  CHECK_THROWS_AS(cartan_matrix(Kind::G, 3), std::domain_error);
  CHECK_FALSE(is_valid_type(Kind::B, 1));
  CHECK(is_valid_type(Kind::C, 2));
}

TEST_CASE("Smith normal form and lattices") {
  CHECK(determinant(cartan_matrix(Kind::A, 4)) == 5);
  CHECK(determinant(cartan_matrix(Kind::E, 8)) == 1);
  Lattice l(2);
  l.add({2, 0});
  l.add({1, 3});
  CHECK(l.contains({3, 3}));
  CHECK(l.contains({0, 6}));
  CHECK_FALSE(l.contains({0, 3}));
  CHECK(gcd64(12, -18) == 6);
  CHECK(floor_mod(-1, 4) == 3);
}
