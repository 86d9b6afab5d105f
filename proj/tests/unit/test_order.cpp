#include <catch_amalgamated.hpp>

#include <sstream>

#include "finsheaf/order/frame.hpp"
#include "finsheaf/order/io.hpp"
#include "finsheaf/order/lattice.hpp"
#include "finsheaf/order/maps.hpp"
#include "finsheaf/order/poset.hpp"

using namespace finsheaf;
using namespace finsheaf::order;

namespace {

std::vector<std::vector<bool>> identity(std::size_t n) {
  std::vector<std::vector<bool>> m(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) {
    m[i][i] = true;
  }
  return m;
}

template <typename F>
std::string kind_of(F&& f) {
  try {
    f();
  } catch (error const& e) {
    return e.kind();
  }
  return "none";
}

}  // namespace

TEST_CASE("check_poset accepts antichains and chains") {
  auto a = poset::from_matrix(identity(3));
  CHECK(a.size() == 3);
  CHECK_FALSE(a.comparable(0, 1));

  std::vector<std::vector<bool>> up = {{1, 1, 1}, {0, 1, 1}, {0, 0, 1}};
  auto c = poset::from_matrix(up);
  CHECK(c.lt(0, 2));
  CHECK(c.covers(0, 1));
  CHECK_FALSE(c.covers(0, 2));
}

TEST_CASE("check_poset reports the violated axiom with indices") {
  auto m = identity(3);
  m[0][1] = m[1][0] = true;
  try {
    (void)poset::from_matrix(m);
    FAIL("expected an error");
  } catch (poset_error const& e) {
    CHECK(e.kind() == "NotAntisymmetric");
    CHECK(e.witness()[0] == 0);
    CHECK(e.witness()[1] == 1);
  }

  auto r = identity(3);
  r[2][2] = false;
  CHECK(kind_of([&] { (void)poset::from_matrix(r); }) == "NotReflexive");

  auto t = identity(3);
  t[0][1] = t[1][2] = true;
  try {
    (void)poset::from_matrix(t);
    FAIL("expected an error");
  } catch (poset_error const& e) {
    CHECK(e.kind() == "NotTransitive");
    CHECK(e.witness() == std::array<std::size_t, 3>{0, 1, 2});
  }
}

TEST_CASE("check_lattice on the 2x2 Boolean lattice") {
  auto l = lattices::bool4();
  CHECK(l.meet(1, 2) == 0);
  CHECK(l.join(1, 2) == 3);
  CHECK(l.bot() == 0);
  CHECK(l.top() == 3);
  CHECK(l.is_distributive());
}

TEST_CASE("check_lattice rejects missing bounds and joins") {
  // ⊥ below two incomparable maximal elements, one more element below one
  // of them: no top.
  CHECK(kind_of([] { (void)lattice::from_relations(4, {{0, 1}, {0, 2}, {1, 3}}); }) == "NoTop");
  CHECK(kind_of([] { (void)lattice::from_relations(3, {{0, 2}, {1, 2}}); }) == "NoBottom");
  // Bowtie with bounds: two lower elements both below two upper ones.
  CHECK(kind_of([] {
          (void)lattice::from_relations(
              6, {{0, 1}, {0, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 5}, {4, 5}});
        }) == "NoJoin");
  try {
    (void)lattice::from_relations(6, {{0, 1}, {0, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 5}, {4, 5}});
  } catch (lattice_error const& e) {
    CHECK(e.x() == 1);
    CHECK(e.y() == 2);
  }
}

TEST_CASE("N5 tables by exhaustive glb/lub scan") {
  auto l = lattices::n5();
  // Hand-derived tables for 0=⊥, 1<2 on one side, 3 alone, 4=⊤.
  std::vector<std::vector<elem>> meet = {
      {0, 0, 0, 0, 0}, {0, 1, 1, 0, 1}, {0, 1, 2, 0, 2}, {0, 0, 0, 3, 3}, {0, 1, 2, 3, 4}};
  std::vector<std::vector<elem>> join = {
      {0, 1, 2, 3, 4}, {1, 1, 2, 4, 4}, {2, 2, 2, 4, 4}, {3, 4, 4, 3, 4}, {4, 4, 4, 4, 4}};
  for (elem x = 0; x < 5; ++x) {
    for (elem y = 0; y < 5; ++y) {
      CHECK(l.meet(x, y) == meet[x][y]);
      CHECK(l.join(x, y) == join[x][y]);
    }
  }
  CHECK_FALSE(l.is_distributive());
  CHECK_FALSE(lattices::m3().is_distributive());
}

TEST_CASE("opposite swaps meets, joins and bounds") {
  auto l = lattices::n5();
  auto o = l.opposite();
  CHECK(o.top() == l.bot());
  CHECK(o.meet(1, 3) == l.join(1, 3));
  CHECK(o.leq(2, 1));
}

TEST_CASE("down-set lattice indexing") {
  auto p = poset::from_relations(3, {{0, 1}, {0, 2}});
  auto [l, sets] = lattices::down_sets(p);
  REQUIRE(sets == std::vector<subset>{0b000, 0b001, 0b011, 0b101, 0b111});
  CHECK(l.join(2, 3) == 4);
  CHECK(l.meet(2, 3) == 1);
}

TEST_CASE("normal frames") {
  CHECK(is_normal_frame(lattices::chain(1)).normal);
  CHECK(is_normal_frame(lattices::chain(4)).normal);
  CHECK(is_normal_frame(lattices::bool4()).normal);
  auto p = poset::from_relations(3, {{0, 1}, {0, 2}});  // x=0, y=1, z=2
  auto [l, sets] = lattices::down_sets(p);
  auto r = is_normal_frame(l);
  CHECK_FALSE(r.normal);
  REQUIRE(r.witness.has_value());
  CHECK(sets[r.witness->first] == 0b011);   // {x,y}
  CHECK(sets[r.witness->second] == 0b101);  // {x,z}
  CHECK(kind_of([] { (void)is_normal_frame(lattices::n5()); }) == "NotDistributive");
}

TEST_CASE("compact regular frames and Lawson self-duality") {
  for (std::size_t k = 0; k <= 3; ++k) {
    auto b = lattices::boolean(k);
    CHECK(compact_regular_check(b).regular);
    CHECK(lawson_selfdual_check(b).holds);
  }
  auto c = compact_regular_check(lattices::chain(3));
  CHECK_FALSE(c.regular);
  CHECK(c.witness == elem{1});
  CHECK_FALSE(lawson_selfdual_check(lattices::chain(3)).holds);
  CHECK(kind_of([] { (void)compact_regular_check(lattices::m3()); }) == "NotFrame");
}

TEST_CASE("enumerate_monotone_maps counts") {
  auto c2 = lattices::chain(2);
  CHECK(enumerate_monotone_maps(c2, c2).size() == 3);
  auto both = enumerate_monotone_maps(c2, c2, {true, true, false});
  REQUIRE(both.size() == 1);
  CHECK(both[0].val == std::vector<elem>{0, 1});
  auto one = lattices::chain(1);
  for (bool fi : {false, true}) {
    for (bool as : {false, true}) {
      CHECK(enumerate_monotone_maps(lattices::n5(), one, {fi, as, false}).size() == 1);
    }
  }
  // Contravariant reading: P^op → Q.
  auto contra = enumerate_monotone_maps(c2, c2, {true, true, false}, true);
  REQUIRE(contra.size() == 1);
  CHECK(contra[0].val == std::vector<elem>{1, 0});
  CHECK(contra[0].contravariant);
}

TEST_CASE("monotone maps are produced in lexicographic order and are monotone") {
  auto p = lattices::bool4();
  auto q = lattices::chain(3);
  auto maps = enumerate_monotone_maps(p, q);
  for (std::size_t i = 1; i < maps.size(); ++i) {
    CHECK(maps[i - 1].val < maps[i].val);
  }
  for (auto const& m : maps) {
    CHECK(is_monotone(p.order(), q.order(), m.val));
  }
  // Brute-force recount over all 3^4 value arrays.
  std::size_t brute = 0;
  for (elem a = 0; a < 3; ++a)
    for (elem b = 0; b < 3; ++b)
      for (elem c = 0; c < 3; ++c)
        for (elem d = 0; d < 3; ++d)
          brute += is_monotone(p.order(), q.order(), {a, b, c, d}) ? 1 : 0;
  CHECK(maps.size() == brute);
}

TEST_CASE("text format round trip and parse errors") {
  std::istringstream in("# pentagon\nlattice 5\n0<1\n1<2\n2<4\n0<3\n3<4\n");
  auto l = read_lattice(in);
  CHECK(l.order() == lattices::n5().order());
  std::istringstream again(write_lattice(l.order()));
  CHECK(read_lattice(again).order() == l.order());

  std::istringstream bad("order 3\n110\n011\n001\n");
  try {
    (void)read_poset(bad);
    FAIL("expected parse error");
  } catch (parse_error const& e) {
    CHECK(e.kind() == "ParseError");
    CHECK(std::string(e.what()).find("NotTransitive") != std::string::npos);
  }
  std::istringstream junk("lattice 3\n0<x\n");
  try {
    (void)read_poset(junk);
    FAIL("expected parse error");
  } catch (parse_error const& e) {
    CHECK(e.line() == 2);
  }
  auto dot = to_dot(lattices::bool4().order());
  CHECK(dot.find("0 -> 1;") != std::string::npos);
  CHECK(dot.find("0 -> 3;") == std::string::npos);
}
