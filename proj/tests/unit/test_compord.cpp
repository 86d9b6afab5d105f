#include <catch_amalgamated.hpp>

#include <map>
#include <string>
#include <tuple>

#include "finsheaf/compord/decompose.hpp"
#include "finsheaf/compord/spaces.hpp"
#include "finsheaf/order/enumerate.hpp"

using namespace finsheaf;
using namespace finsheaf::compord;

namespace {

std::vector<subset> sets(std::initializer_list<subset> l) { return l; }

poset vee() { return poset::from_relations(3, {{0, 1}, {0, 2}}); }
poset wedge() { return poset::from_relations(3, {{0, 2}, {1, 2}}); }
poset square() { return poset::from_relations(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}}); }

}  // namespace

TEST_CASE("spaces validate as topologies") {
  CHECK_THROWS_WITH(space(2, sets({0b00, 0b01})), Catch::Matchers::ContainsSubstring("whole space"));
  CHECK_THROWS_WITH(space(3, sets({0b000, 0b001, 0b010, 0b111})),
                    Catch::Matchers::ContainsSubstring("not closed"));
  CHECK_THROWS_AS(space(2, sets({0b000, 0b100, 0b011})), error);
  space s(2, sets({0b11, 0b00, 0b10, 0b10}));
  CHECK(s.opens() == sets({0b00, 0b10, 0b11}));
  CHECK(s.is_t0());
  CHECK_FALSE(space(2, sets({0b00, 0b11})).is_t0());
}

TEST_CASE("down and up spaces of a 2-chain") {
  auto c2 = poset::chain(2);
  CHECK(down_space(c2).opens() == sets({0b00, 0b01, 0b11}));
  CHECK(up_space(c2).opens() == sets({0b00, 0b10, 0b11}));
  auto a3 = poset::antichain(3);
  CHECK(down_space(a3).opens().size() == 8);
  CHECK(up_space(a3).opens().size() == 8);
}

TEST_CASE("specialization order recovers the poset from X^up") {
  for (auto const& p : order::posets_up_to_iso(4)) {
    CHECK(specialization_order(up_space(p)) == p);
  }
  CHECK_THROWS_WITH(specialization_order(space(2, sets({0b00, 0b11}))),
                    Catch::Matchers::ContainsSubstring("same neighbourhoods"));
}

TEST_CASE("compact saturated sets") {
  space sierpinski(2, sets({0b00, 0b10, 0b11}));
  CHECK(compact_saturated(sierpinski).sets == sets({0b00, 0b10, 0b11}));
  space discrete(2, sets({0b00, 0b01, 0b10, 0b11}));
  CHECK(compact_saturated(discrete).sets.size() == 4);
  auto c2 = poset::chain(2);
  CHECK(compact_saturated(up_space(c2)).sets == up_space(c2).opens());
  CHECK_THROWS_AS(compact_saturated(space(2, sets({0b00, 0b11}))), error);
}

TEST_CASE("complement duality between down-opens and saturated up-sets") {
  for (std::size_t n = 0; n <= 4; ++n) {
    for (auto const& p : order::posets_up_to_iso(n)) {
      CHECK(complement_duality_check(p));
    }
  }
}

TEST_CASE("Hofmann-Mislove on small spaces") {
  space sierpinski(2, sets({0b00, 0b10, 0b11}));
  auto r = hofmann_mislove_check(sierpinski);
  CHECK(r.holds);
  CHECK(order::scott_open_filters(opens_lattice(sierpinski).lat).size() == 3);
  CHECK(hofmann_mislove_check(space(1, sets({0b0, 0b1}))).holds);
  for (std::size_t n = 0; n <= 4; ++n) {
    for (auto const& p : order::labeled_posets(n)) {
      auto res = hofmann_mislove_check(up_space(p));
      INFO(res.failure);
      CHECK(res.holds);
    }
  }
  CHECK_THROWS_AS(hofmann_mislove_check(space(2, sets({0b00, 0b11}))), error);
}

TEST_CASE("closed_commute examples") {
  auto c2 = poset::chain(2);
  auto c3 = poset::chain(3);
  auto r = closed_commute(c2, 0b01, 0b10);
  CHECK_FALSE(r.commute);
  CHECK(r.witness == "0<=1");
  CHECK(r.pushout_agrees);
  auto s = closed_commute(c3, 0b011, 0b110);
  CHECK(s.commute);
  CHECK(s.pushout_agrees);
  CHECK(closed_commute(c3, 0b101, 0b101).commute);
  // {0,2} and {1}: 0 ≤ 1 with nothing in between from the empty intersection.
  CHECK_FALSE(closed_commute(c3, 0b101, 0b010).commute);
  CHECK(closed_commute(vee(), 0b011, 0b101).commute);
}

TEST_CASE("closed_commute criterion agrees with the poset pushout") {
  for (std::size_t n = 0; n <= 4; ++n) {
    for (auto const& p : order::posets_up_to_iso(n)) {
      for (subset c1 = 0; c1 <= full_subset(n); ++c1) {
        for (subset c2 = 0; c2 <= full_subset(n); ++c2) {
          auto r = closed_commute(p, c1, c2);
          CHECK(r.pushout_agrees);
          CHECK(r.commute == closed_commute(p, c2, c1).commute);
        }
      }
    }
  }
}

TEST_CASE("interpolating decompositions") {
  auto c2 = poset::chain(2);
  auto a2 = poset::antichain(2);
  CHECK_FALSE(interpolating_check({0, 1}, c2, a2));
  CHECK(interpolating_check({0, 0}, c2, a2));
  CHECK(interpolating_check({1, 1}, c2, a2));
  for (auto const& p : {c2, poset::chain(3), vee(), wedge(), square()}) {
    std::vector<elem> id(p.size());
    for (elem i = 0; i < p.size(); ++i) {
      id[i] = i;
    }
    CHECK(interpolating_check(id, p, p));
    CHECK(interpolating_check(std::vector<elem>(p.size(), 0), p, p));
  }
  CHECK_THROWS_WITH(interpolating_check({0}, c2, c2), Catch::Matchers::ContainsSubstring("values"));
  CHECK_THROWS_AS(interpolating_check({0, 2}, c2, c2), error);
}

TEST_CASE("decomposition bijection examples") {
  auto one = decomposition_bijection_check(poset::chain(1), poset::chain(1));
  CHECK(one.interpolating == 1);
  CHECK(one.commuting_frame_homs == 1);
  CHECK(one.bijection);

  auto c2 = decomposition_bijection_check(poset::chain(2), poset::chain(2));
  CHECK(c2.bijection);
  CHECK(c2.interpolating == 4);
  CHECK(c2.commuting_frame_homs == 4);

  auto ca = decomposition_bijection_check(poset::chain(2), poset::antichain(2));
  CHECK(ca.bijection);
  CHECK(ca.interpolating == 2);
  CHECK(ca.frame_homs == 4);
  CHECK(std::find(ca.decompositions.begin(), ca.decompositions.end(), std::vector<elem>{0, 1}) ==
        ca.decompositions.end());

  CHECK_THROWS_AS(decomposition_bijection_check(poset::chain(5), poset::chain(1)), cap_exceeded);
  CHECK(decomposition_bijection_check(poset::chain(5), poset::chain(1), 5).bijection);
}

TEST_CASE("decomposition counts match the independent enumerator") {
  // From tests/oracle/decompositions.py: {interpolating, frame homs}.
  std::map<std::pair<std::string, std::string>, std::pair<std::size_t, std::size_t>> golden{
      {{"chain2", "chain2"}, {4, 4}},       {{"chain2", "antichain2"}, {2, 4}},
      {{"chain2", "vee"}, {7, 9}},          {{"chain2", "bool4"}, {14, 16}},
      {{"chain3", "antichain2"}, {2, 8}},   {{"chain3", "vee"}, {15, 27}},
      {{"chain3", "wedge"}, {17, 27}},      {{"chain3", "bool4"}, {48, 64}},
      {{"vee", "vee"}, {17, 27}},           {{"vee", "bool4"}, {50, 64}},
      {{"wedge", "bool4"}, {50, 64}},       {{"bool4", "antichain2"}, {2, 16}},
      {{"antichain2", "bool4"}, {16, 16}},
  };
  std::map<std::string, poset> named{{"chain2", poset::chain(2)}, {"antichain2", poset::antichain(2)},
                                     {"chain3", poset::chain(3)}, {"vee", vee()},
                                     {"wedge", wedge()},          {"bool4", square()}};
  for (auto const& [key, want] : golden) {
    INFO(key.first << " -> " << key.second);
    auto r = decomposition_bijection_check(named.at(key.first), named.at(key.second));
    CHECK(r.bijection);
    CHECK(r.interpolating == want.first);
    CHECK(r.commuting_frame_homs == want.first);
    CHECK(r.frame_homs == want.second);
    CHECK(r.functions == want.second);
  }
}

TEST_CASE("decomposition DOT output") {
  auto dot = decomposition_dot(poset::chain(2), poset::antichain(2), {0, 0});
  CHECK(dot.find("digraph decomposition") == 0);
  CHECK(dot.find("x0 -> x1 [arrowhead=none]") != std::string::npos);
  CHECK(dot.find("x1 -> y0 [style=dashed, label=\"q\"") != std::string::npos);
}
