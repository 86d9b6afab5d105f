#include <catch_amalgamated.hpp>

#include <algorithm>
#include <map>

#include "finsheaf/gelfand/gelfand.hpp"

using namespace finsheaf;
using namespace finsheaf::gelfand;

namespace {

// Divisor d of n ↦ the ideal (d) of Z/n.
subset div_ideal(std::size_t n, std::size_t d) {
  subset s = 0;
  for (std::size_t x = 0; x < n; x += d) {
    s |= bit(x);
  }
  return s;
}

std::vector<std::size_t> sorted_stalks(gelfand_representation_result const& g) {
  std::vector<std::size_t> out;
  for (auto const& s : g.stalks) {
    out.push_back(s.stalk_size);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("rings from tables") {
  auto z1 = make_zn(1);
  CHECK(z1.size() == 1);
  CHECK(z1.one() == z1.zero());
  auto z4 = make_zn(4);
  CHECK(z4.ref()->table(op_add).size() == 16);
  CHECK(z4.mul(3, 3) == 1);
  CHECK_THROWS_AS(make_zn(0), error);
  // Z/2 tables with a broken distributive law.
  CHECK_THROWS_WITH(make_ring(2, {0, 1, 1, 0}, {0, 0, 0, 0}, 0, 1, "bad"),
                    Catch::Matchers::ContainsSubstring("neutral"));
  CHECK_THROWS_WITH(make_ring(2, {0, 1, 1, 0}, {1, 0, 0, 1}, 0, 1, "bad"),
                    Catch::Matchers::ContainsSubstring("distributivity"));
}

TEST_CASE("Z/6 is isomorphic to Z/2 x Z/3") {
  auto p = ring_product(make_zn(2), make_zn(3));
  CHECK(ring_isomorphism(make_zn(6), p).has_value());
  CHECK_FALSE(ring_isomorphism(make_zn(4), ring_product(make_zn(2), make_zn(2))).has_value());
  CHECK(parse_ring_spec("zn:12").size() == 12);
  CHECK(parse_ring_spec("product:zn:2,zn:3").size() == 6);
  CHECK_THROWS_AS(parse_ring_spec("q:3"), error);
}

TEST_CASE("ideal lattice of Z/12") {
  auto r = make_zn(12);
  auto il = ideal_lattice(r);
  REQUIRE(il.ideals.size() == 6);
  std::map<std::size_t, bool> prime;
  std::map<std::size_t, bool> maximal;
  for (std::size_t d : {1, 2, 3, 4, 6, 12}) {
    auto i = il.index_of(div_ideal(12, d));
    prime[d] = il.prime[i];
    maximal[d] = il.maximal[i];
  }
  CHECK(prime == std::map<std::size_t, bool>{{1, false}, {2, true}, {3, true}, {4, false}, {6, false}, {12, false}});
  CHECK(maximal == prime);
  auto rid = radical_ideals(r, il);
  std::vector<subset> want{div_ideal(12, 1), div_ideal(12, 2), div_ideal(12, 3), div_ideal(12, 6)};
  std::sort(want.begin(), want.end());
  CHECK(rid == want);
  CHECK(radical(r, il, bit(0)) == div_ideal(12, 6));
  CHECK(nil_radical_of(r, bit(0)) == div_ideal(12, 6));
  for (auto i : il.ideals) {
    CHECK(is_ideal(r, i));
    CHECK(radical(r, il, i) == nil_radical_of(r, i));
    CHECK(congruence_ideal(r, ideal_congruence(r, i)) == i);
  }
  CHECK(ideal_lattice(make_zn(5)).ideals.size() == 2);
  CHECK_THROWS_AS(ideal_lattice(make_zn(65)), cap_exceeded);
}

TEST_CASE("ideal lattice is the congruence lattice") {
  for (std::size_t n : {4, 6, 8, 12}) {
    auto r = make_zn(n);
    auto il = ideal_lattice(r);
    auto con = alg::congruence_lattice(*r.ref());
    CHECK(con.cons.size() == il.ideals.size());
    for (auto i : il.ideals) {
      CHECK(std::find(con.cons.begin(), con.cons.end(), ideal_congruence(r, i)) != con.cons.end());
    }
  }
}

TEST_CASE("Gelfand predicates") {
  for (std::size_t n : {1, 5, 12, 36}) {
    auto g = is_gelfand(make_zn(n));
    CHECK(g.syntactic);
    CHECK(g.semantic);
    CHECK(g.frame_normal);
  }
  auto g = is_gelfand(ring_product(make_zn(4), make_zn(3)));
  CHECK(g.all());
}

TEST_CASE("Jacobson radical ideals") {
  auto j12 = jacobson_radical_ideals(make_zn(12));
  std::vector<subset> want{div_ideal(12, 1), div_ideal(12, 2), div_ideal(12, 3), div_ideal(12, 6)};
  std::sort(want.begin(), want.end());
  CHECK(j12.ideals == want);
  auto j8 = jacobson_radical_ideals(make_zn(8));
  std::vector<subset> want8{div_ideal(8, 2), div_ideal(8, 1)};
  std::sort(want8.begin(), want8.end());
  CHECK(j8.ideals == want8);
  CHECK(jacobson_radical_ideals(make_zn(7)).ideals.size() == 2);
  for (std::size_t n : {8, 12, 30}) {
    auto j = jacobson_radical_ideals(make_zn(n));
    CHECK(order::compact_regular_check(j.lat).regular);
    CHECK(order::lawson_selfdual_check(j.lat).holds);
    auto sub = sublattice_report(make_zn(n), j);
    CHECK(sub.all_pass());
  }
}

TEST_CASE("frame checks on small lattices") {
  CHECK(order::compact_regular_check(order::lattices::boolean(2)).regular);
  CHECK(order::lawson_selfdual_check(order::lattices::boolean(3)).holds);
  auto c3 = order::compact_regular_check(order::lattices::chain(3));
  CHECK_FALSE(c3.regular);
  CHECK(c3.witness == elem{1});
  CHECK(order::compact_regular_check(order::lattices::chain(1)).regular);
  CHECK_THROWS_AS(order::compact_regular_check(order::lattices::m3()), error);
}

TEST_CASE("Gelfand representation of Z/12") {
  auto g = gelfand_representation(make_zn(12));
  INFO(g.checks.items.size());
  for (auto const& i : g.checks.items) {
    INFO(i.name << ": " << i.witness);
    CHECK(i.pass);
  }
  CHECK(g.jrid.ideals.size() == 4);
  CHECK(g.rep.sheaf.at(g.rep.sheaf.base().top())->size() == 12);
  CHECK(sorted_stalks(g) == std::vector<std::size_t>{3, 4});
  for (auto const& s : g.stalks) {
    if (s.maximal == div_ideal(12, 2)) {
      CHECK(s.o_m == div_ideal(12, 4));
    } else {
      CHECK(s.o_m == div_ideal(12, 3));
    }
  }
  // The bare inclusion JRId ↪ Id misses the empty supremum: JRId starts at (6).
  CHECK_FALSE(g.inclusion.passed("empty_supremum"));
  CHECK(g.inclusion.find("empty_supremum")->witness.find("PreservationFailure") == 0);
  CHECK(g.inclusion.passed("binary_joins_are_sums"));
}

TEST_CASE("Gelfand representation of fields and Z/6") {
  auto f = gelfand_representation(make_zn(5));
  CHECK(f.pass());
  CHECK(sorted_stalks(f) == std::vector<std::size_t>{5});
  CHECK(f.inclusion.all_pass());
  auto s = gelfand_representation(make_zn(6));
  CHECK(s.pass());
  CHECK(sorted_stalks(s) == std::vector<std::size_t>{2, 3});
  CHECK(s.inclusion.all_pass());
}

TEST_CASE("stalk sizes match the independent divisor computation") {
  // From tests/oracle/gelfand.py.
  std::map<std::size_t, std::vector<std::size_t>> golden{
      {8, {8}},         {9, {9}},        {18, {2, 9}},    {24, {3, 8}},
      {30, {2, 3, 5}},  {36, {4, 9}},    {48, {3, 16}},   {60, {3, 4, 5}},
  };
  for (auto const& [n, want] : golden) {
    auto g = gelfand_representation(make_zn(n));
    INFO(n);
    CHECK(g.pass());
    CHECK(sorted_stalks(g) == want);
  }
}

TEST_CASE("Z/n pipeline and R = product of stalks") {
  for (std::size_t n = 1; n <= 60; ++n) {
    auto r = make_zn(n);
    INFO(n);
    CHECK(is_gelfand(r).all());
    auto g = gelfand_representation(r);
    CHECK(g.pass());
    std::size_t prod = 1;
    for (auto const& s : g.stalks) {
      prod *= s.stalk_size;
    }
    CHECK(prod == n);
    bool squarefree = true;
    for (std::size_t p = 2; p * p <= n; ++p) {
      squarefree = squarefree && n % (p * p) != 0;
    }
    CHECK(g.inclusion.passed("empty_supremum") == squarefree);
  }
}

TEST_CASE("Pierce decomposition") {
  auto p6 = pierce_decomposition(make_zn(6));
  CHECK(p6.pass());
  CHECK(p6.idempotents == std::vector<elem>{0, 1, 3, 4});
  auto factors = pierce_factors(make_zn(6), p6);
  REQUIRE(factors.size() == 2);
  auto prod = ring_product(factors[0], factors[1]);
  CHECK(ring_isomorphism(prod, ring_product(make_zn(2), make_zn(3))).has_value());
  CHECK(ring_isomorphism(prod, make_zn(6)).has_value());

  auto p4 = pierce_decomposition(make_zn(4));
  CHECK(p4.pass());
  CHECK(p4.idempotents == std::vector<elem>{0, 1});
  CHECK(p4.factor_sizes == std::vector<std::size_t>{4});

  auto b = pierce_decomposition(ring_product(make_zn(2), make_zn(2)));
  CHECK(b.pass());
  CHECK(b.factor_sizes == std::vector<std::size_t>{2, 2});
  CHECK(b.e_ideals.lat.size() == 4);
}
