#include <catch2/catch_amalgamated.hpp>

#include "noetherlab/abelian.hpp"

using namespace nlab;

TEST_CASE("make_group basics") {
  auto triv = make_group({});
  CHECK(triv->order() == 1);
  CHECK(triv->exponent() == 1);

  auto k4 = make_group({2, 2});
  CHECK(k4->order() == 4);
  CHECK(k4->exponent() == 2);

  auto z3z3 = make_group({3, 3});
  CHECK(z3z3->order() == 9);
  CHECK(z3z3->exponent() == 3);

  CHECK_THROWS_AS(make_group({2, 3}), input_error);  // not a divisibility chain
  CHECK_THROWS_AS(make_group({1}), input_error);
  CHECK_THROWS_AS(make_group({0, 2}), input_error);
}

TEST_CASE("element arithmetic") {
  auto z5 = make_group({5});
  GroupElement a(z5, std::vector<long>{3}), b(z5, std::vector<long>{4});
  CHECK((a + b).coords() == std::vector<long>{2});

  auto k4 = make_group({2, 2});
  GroupElement x(k4, std::vector<long>{1, 0});
  CHECK((x + x).is_zero());

  auto z7 = make_group({7});
  GroupElement t(z7, std::vector<long>{3});
  CHECK((-t).coords() == std::vector<long>{4});

  auto z4 = make_group({4});
  GroupElement u(z4, 1);
  CHECK_THROWS_AS(u + a, input_error);  // mismatched parents
}

TEST_CASE("element_order") {
  auto z6 = make_group({6});
  CHECK(GroupElement(z6, std::vector<long>{0}).order() == 1);
  CHECK(GroupElement(z6, std::vector<long>{2}).order() == 3);

  auto z2z4 = make_group({2, 4});
  CHECK(GroupElement(z2z4, std::vector<long>{1, 0}).order() == 2);
  CHECK(GroupElement(z2z4, std::vector<long>{0, 1}).order() == 4);
  CHECK(GroupElement(z2z4, std::vector<long>{1, 1}).order() == 4);
}

TEST_CASE("enumerate_elements order and completeness") {
  auto k4 = make_group({2, 2});
  auto elems = enumerate_elements(k4);
  REQUIRE(elems.size() == 4);
  CHECK(elems[0].coords() == std::vector<long>{0, 0});
  CHECK(elems[1].coords() == std::vector<long>{0, 1});
  CHECK(elems[2].coords() == std::vector<long>{1, 0});
  CHECK(elems[3].coords() == std::vector<long>{1, 1});

  CHECK(enumerate_elements(make_group({5})).size() == 5);
  CHECK(enumerate_elements(make_group({})).size() == 1);
  CHECK_THROWS_AS(enumerate_elements(make_group({1000}), 10), budget_error);
}

TEST_CASE("unit_action") {
  auto z7 = make_group({7});
  GroupElement one(z7, std::vector<long>{1});
  CHECK(one.unit_image(2).coords() == std::vector<long>{2});
  CHECK_THROWS_AS(one.unit_image(7), input_error);

  for (auto A : {make_group({7}), make_group({2, 4}), make_group({3, 3})}) {
    auto elems = enumerate_elements(A);
    for (long u : A->units_mod_exponent()) {
      // u = 1 must be the identity, every unit must act bijectively
      std::vector<bool> hit(elems.size(), false);
      for (auto& e : elems) {
        auto img = e.unit_image(u);
        if (u == 1) CHECK(img == e);
        CHECK_FALSE(hit[img.index()]);
        hit[img.index()] = true;
      }
    }
  }
}

TEST_CASE("group axioms hold exhaustively for small groups") {
  for (auto A : {make_group({6}), make_group({2, 2}), make_group({2, 4})}) {
    auto elems = enumerate_elements(A);
    for (auto& a : elems) {
      CHECK(-(-a) == a);
      CHECK((a + (-a)).is_zero());
      CHECK(a + GroupElement(A, 0L) == a);
      CHECK(a.parent()->order() % a.order() == 0);
      for (auto& b : elems) {
        CHECK(a + b == b + a);
        for (auto& c : elems) CHECK((a + b) + c == a + (b + c));
      }
    }
  }
}

TEST_CASE("parse_group_literal") {
  CHECK(parse_group_literal("Z7")->invariant_factors() == std::vector<long>{7});
  CHECK(parse_group_literal("Z2xZ2xZ2")->invariant_factors() == std::vector<long>{2, 2, 2});
  CHECK(parse_group_literal("Z2xZ4")->invariant_factors() == std::vector<long>{2, 4});
  CHECK(parse_group_literal("Z6xZ2")->invariant_factors() == std::vector<long>{2, 6});
  CHECK(parse_group_literal("Z12")->invariant_factors() == std::vector<long>{12});
  CHECK(parse_group_literal("Z3xZ6")->invariant_factors() == std::vector<long>{3, 6});
  CHECK(parse_group_literal("Z1")->order() == 1);
  CHECK_THROWS_AS(parse_group_literal("Q8"), input_error);
  CHECK_THROWS_AS(parse_group_literal("Zx"), input_error);
}
