#include <catch_amalgamated.hpp>

#include <sstream>

#include "finsheaf/alg/algebra.hpp"
#include "finsheaf/alg/congruence.hpp"
#include "finsheaf/alg/limits.hpp"
#include "finsheaf/order/enumerate.hpp"

using namespace finsheaf;
using namespace finsheaf::alg;

namespace {

algebra_ref z4() { return share(algebras::cyclic_group(4)); }
algebra_ref z2() { return share(algebras::cyclic_group(2)); }

homomorphism mod2() { return make_homomorphism(z4(), z2(), {0, 1, 0, 1}); }

congruence p01_2() { return congruence::from_blocks(3, {{0, 1}, {2}}); }
congruence p0_12() { return congruence::from_blocks(3, {{0}, {1, 2}}); }

bool is_group(algebra const& g) {
  std::size_t const n = g.size();
  for (elem a = 0; a < n; ++a) {
    for (elem b = 0; b < n; ++b) {
      for (elem c = 0; c < n; ++c) {
        elem ab_c = g.apply(0, {g.apply(0, {a, b}), c});
        elem a_bc = g.apply(0, {a, g.apply(0, {b, c})});
        if (ab_c != a_bc) {
          return false;
        }
      }
    }
    if (g.apply(0, {a, g.apply(1, {a})}) != g.constant(2)) {
      return false;
    }
    if (g.apply(0, {a, g.constant(2)}) != a) {
      return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("built-in groups satisfy the group axioms") {
  auto gs = algebras::groups_up_to_8();
  CHECK(gs.size() == 14);
  for (auto const& g : gs) {
    INFO(g.name());
    CHECK(is_group(g));
  }
}

TEST_CASE("homomorphisms are validated") {
  CHECK_NOTHROW(mod2());
  CHECK_THROWS_AS(make_homomorphism(z4(), z2(), {0, 1, 1, 0}), error);
}

TEST_CASE("image factorization") {
  // Surjective with ascending least preimages: (h, identity).
  auto h = mod2();
  auto f = image_factorization(h);
  CHECK(f.e.map == h.map);
  CHECK(f.m.map == std::vector<elem>{0, 1});
  CHECK(*f.m.dom == *h.cod);

  // Constant map onto an idempotent.
  auto s2 = share(algebras::chain_semilattice(2));
  auto s3 = share(algebras::chain_semilattice(3));
  auto c = make_homomorphism(s2, s3, {2, 2});
  auto fc = image_factorization(c);
  CHECK(fc.e.cod->size() == 1);
  CHECK(compose(fc.m, fc.e).map == c.map);

  // Inclusion: (identity, h).
  auto incl = make_homomorphism(s2, s3, {0, 2});
  auto fi = image_factorization(incl);
  CHECK(fi.e.map == std::vector<elem>{0, 1});
  CHECK(fi.m.map == incl.map);
  CHECK(fi.m.injective());
  CHECK(fi.e.surjective());
}

TEST_CASE("kernel congruences") {
  CHECK(kernel_congruence(identity_hom(z4())).is_diagonal());
  auto k = kernel_congruence(mod2());
  CHECK(k.blocks() == std::vector<std::vector<elem>>{{0, 2}, {1, 3}});
  auto s3 = share(algebras::set(3));
  auto one = share(algebras::set(1));
  CHECK(kernel_congruence(make_homomorphism(s3, one, {0, 0, 0})).is_all());
}

TEST_CASE("generated congruences") {
  auto a = algebras::cyclic_group(4);
  CHECK(congruence_generated(a, {}).is_diagonal());
  CHECK(congruence_generated(a, {{0, 2}}).blocks() == std::vector<std::vector<elem>>{{0, 2}, {1, 3}});
  CHECK(congruence_generated(a, {{0, 1}}).is_all());
}

TEST_CASE("congruence lattices") {
  CHECK(congruence_lattice(algebras::set(2)).cons.size() == 2);
  auto p3 = congruence_lattice(algebras::set(3));
  CHECK(p3.cons.size() == 5);
  CHECK(order::isomorphic(p3.lat.order(), order::lattices::m3().order()));
  auto z = congruence_lattice(algebras::cyclic_group(4));
  REQUIRE(z.cons.size() == 3);
  CHECK(z.cons[0].is_diagonal());
  CHECK(z.cons[1].blocks() == std::vector<std::vector<elem>>{{0, 2}, {1, 3}});
  CHECK(z.cons[2].is_all());
  CHECK(order::isomorphic(z.lat.order(), order::lattices::chain(3).order()));
  CHECK(z.diagonal() == 0);
}

TEST_CASE("partition route and principal-join route agree") {
  congruence_caps join_route;
  join_route.partition_enumeration = 0;
  for (auto const& g : algebras::groups_up_to_8()) {
    CHECK(all_congruences(g) == all_congruences(g, join_route));
  }
  for (std::size_t n = 1; n <= 4; ++n) {
    CHECK(all_congruences(algebras::set(n)) == all_congruences(algebras::set(n), join_route));
    CHECK(all_congruences(algebras::chain_semilattice(n)) ==
          all_congruences(algebras::chain_semilattice(n), join_route));
  }
  congruence_caps tiny;
  tiny.partition_enumeration = 2;
  tiny.carrier = 3;
  CHECK_THROWS_WITH(congruence_lattice(algebras::set(4), tiny),
                    Catch::Matchers::ContainsSubstring("carrier"));
}

TEST_CASE("relation composition and commuting") {
  auto r = compose_relations(p01_2(), p0_12());
  CHECK(r.at(0, 2));
  CHECK_FALSE(r.at(2, 0));
  CHECK_FALSE(commute(p01_2(), p0_12()));
  auto d = congruence::diagonal(3);
  CHECK(compose_relations(d, p01_2()) == relation::of(p01_2()));
  CHECK(commute(d, p01_2()));
  auto z = algebras::cyclic_group(4);
  CHECK_THROWS_WITH(commute(z, p01_2(), p0_12()), Catch::Matchers::ContainsSubstring("size"));
}

TEST_CASE("all congruences of every group of order at most 8 commute") {
  for (auto const& g : algebras::groups_up_to_8()) {
    auto cons = all_congruences(g);
    for (auto const& a : cons) {
      for (auto const& b : cons) {
        CHECK(commute(a, b));
      }
    }
  }
}

TEST_CASE("quotients") {
  auto a = z4();
  auto qd = quotient(a, congruence::diagonal(4));
  CHECK(qd.proj.bijective());
  CHECK(*qd.alg == *a);
  auto qa = quotient(a, congruence::all(4));
  CHECK(qa.alg->size() == 1);
  auto q = quotient(a, kernel_congruence(mod2()));
  CHECK(*q.alg == *z2());
  CHECK(kernel_congruence(q.proj) == kernel_congruence(mod2()));
  auto empty = share(algebras::set(0));
  CHECK(quotient(empty, congruence::all(0)).alg->size() == 0);
}

TEST_CASE("pushouts of quotient spans") {
  auto s3 = share(algebras::set(3));
  auto po = pushout_of_quotients(s3, p01_2(), p0_12());
  CHECK(po.alg->size() == 1);
  auto po2 = pushout_of_quotients(s3, p01_2(), congruence::diagonal(3));
  CHECK(*po2.alg == *po2.q1.alg);
  CHECK(po2.eta1.bijective());
  auto k = kernel_congruence(mod2());
  auto po3 = pushout_of_quotients(z4(), k, k);
  CHECK(*po3.alg == *z2());
  // The square commutes.
  for (elem x = 0; x < 3; ++x) {
    CHECK(po.eta1(po.q1.proj(x)) == po.eta2(po.q2.proj(x)));
  }
}

TEST_CASE("pullbacks") {
  auto b = z2();
  auto t = share(algebras::trivial(group_signature()));
  auto to_t = make_homomorphism(b, t, {0, 0});
  auto p = pullback(to_t, to_t);
  CHECK(p.alg->size() == 4);
  CHECK(isomorphic(p.alg, share(algebras::z2xz2())));
  auto pi = pullback(identity_hom(b), identity_hom(b));
  CHECK(isomorphic(pi.alg, b));
  auto pb = pullback(mod2(), identity_hom(z2()));
  CHECK(isomorphic(pb.alg, z4()));
  CHECK_THROWS_WITH(pullback(mod2(), to_t), Catch::Matchers::ContainsSubstring("codomain"));
}

TEST_CASE("commuting report") {
  auto s3 = share(algebras::set(3));
  auto r = commuting_equivalences_report(s3, p01_2(), p0_12());
  CHECK_FALSE(r.composites);
  CHECK_FALSE(r.sup_kernel);
  CHECK_FALSE(r.regular);
  CHECK_FALSE(r.pullback);
  auto same = commuting_equivalences_report(s3, p01_2(), p01_2());
  CHECK(same.agree());
  CHECK(same.value());
  for (auto const& g : algebras::groups_up_to_8()) {
    auto gr = share(g);
    auto cons = all_congruences(g);
    for (auto const& a : cons) {
      for (auto const& b : cons) {
        auto rr = commuting_equivalences_report(gr, a, b);
        CHECK(rr.agree());
        CHECK(rr.value());
      }
    }
  }
}

TEST_CASE("algebra text format") {
  std::istringstream in("algebra 2\nsig mul/2 inv/1 e/0\n0 1\n1 0\n0 1\n0\n");
  auto a = read_algebra(in);
  CHECK(a == algebras::cyclic_group(2));
  std::istringstream back(write_algebra(algebras::quaternion_group()));
  CHECK(read_algebra(back) == algebras::quaternion_group());
  std::istringstream bad("algebra 2\nsig f/1\n0 5\n");
  CHECK_THROWS_WITH(read_algebra(bad), Catch::Matchers::ContainsSubstring("out of range"));
  std::istringstream trunc("algebra 2\nsig f/2\n0 1\n");
  CHECK_THROWS_WITH(read_algebra(trunc), Catch::Matchers::ContainsSubstring("line"));
  CHECK_THROWS_AS(algebra(group_signature(), 0, {{}, {}, {}}), error);
}
