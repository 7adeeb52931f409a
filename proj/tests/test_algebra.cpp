#include <doctest.h>

#include <algorithm>
#include <set>

#include "hofib/algebra.hpp"

using namespace hofib;
using namespace hofib::alg;

TEST_CASE("group tables: Z2, S3, products") {
  auto z2 = FinGroup::cyclic(2);
  ValidationReport rep;
  z2.check(rep);
  CHECK(rep.ok());
  CHECK(z2.is_abelian());

  auto s3 = FinGroup::symmetric(3);
  rep = {};
  s3.check(rep);
  CHECK(rep.ok());
  CHECK(s3.size() == 6);
  CHECK(!s3.is_abelian());

  auto k4 = FinGroup::direct_product(z2, z2);
  rep = {};
  k4.check(rep);
  CHECK(rep.ok());
  CHECK(k4.size() == 4);
}

TEST_CASE("one-object groupoid with Z2 table is valid") {
  auto g = FiniteGroupoid::from_group(FinGroup::cyclic(2));
  CHECK(validate_groupoid(g).ok());
}

TEST_CASE("corrupted associativity entry is reported with the offending triple") {
  auto g = FiniteGroupoid::from_group(FinGroup::cyclic(3));
  // 1 after 1 should be 2; corrupt it to 0.
  g.set_comp(1, 1, 0);
  auto rep = validate_category(g);
  CHECK(!rep.ok());
  bool found = false;
  for (const auto& v : rep.violations)
    if (v.axiom == "associativity" || v.axiom == "left-unit" ||
        v.axiom == "right-unit")
      found = true;
  CHECK(found);
}

TEST_CASE("PGroup over indiscrete groupoid with fiber Z3, identity transport") {
  auto base = std::make_shared<FiniteGroupoid>(FiniteGroupoid::indiscrete(2));
  auto pg = PGroup::constant(base, FinGroup::cyclic(3));
  CHECK(validate_pgroup(pg).ok());
}

TEST_CASE("free category on the linear graph 0->1->2 is [2] with 6 morphisms") {
  auto c = free_category(FiniteGraph::linear(2));
  CHECK(c.n_obj() == 3);
  CHECK(c.n_mor() == 6);  // oracle: 3 identities + (01),(12),(012)
  CHECK(validate_category(c).ok());

  auto s = FiniteCategory::simplex(2);
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      CHECK(c.hom(a, b).size() == s.hom(a, b).size());
}

TEST_CASE("free category on linear graphs is isomorphic to the ordinal, p <= 6") {
  for (int p = 0; p <= 6; ++p) {
    auto c = free_category(FiniteGraph::linear(p));
    auto s = FiniteCategory::simplex(p);
    REQUIRE(c.n_obj() == s.n_obj());
    REQUIRE(c.n_mor() == s.n_mor());
    // Hom-sets are all 0/1 here, so matching cardinalities pin down an
    // isomorphism via the vertex bijection.
    for (int a = 0; a < c.n_obj(); ++a)
      for (int b = 0; b < c.n_obj(); ++b)
        REQUIRE(c.hom(a, b).size() == s.hom(a, b).size());
    CHECK(validate_category(c).ok());
  }
}

TEST_CASE("free category on a single vertex is the terminal category") {
  FiniteGraph g;
  g.name = "pt";
  g.vertices = {"v"};
  auto c = free_category(g);
  CHECK(c.n_obj() == 1);
  CHECK(c.n_mor() == 1);
}

TEST_CASE("free category rejects a loop edge") {
  FiniteGraph g;
  g.name = "loop";
  g.vertices = {"v"};
  g.edges.push_back({"e", 0, 0});
  CHECK_THROWS_AS(free_category(g), std::invalid_argument);
}

TEST_CASE("groupoid fibration checks") {
  auto e2 = std::make_shared<FiniteGroupoid>(FiniteGroupoid::indiscrete(2));

  SUBCASE("identity is a fibration") {
    CHECK(groupoid_fibration(GroupoidFunctor::identity(e2)));
  }
  SUBCASE("inclusion of one object into the indiscrete groupoid is not") {
    auto pt = std::make_shared<FiniteGroupoid>(FiniteGroupoid::discrete({"x0"}));
    GroupoidFunctor incl;
    incl.src = pt;
    incl.dst = e2;
    incl.obj_map = {0};
    incl.mor_map = {e2->identity[0]};
    ValidationReport rep;
    incl.check(rep);
    REQUIRE(rep.ok());
    CHECK(!groupoid_fibration(incl));  // the crossing arrow has no lift
  }
  SUBCASE("surjective group homomorphism Z4 -> Z2 is a fibration") {
    auto z4 = FinGroup::cyclic(4);
    auto z2 = FinGroup::cyclic(2);
    GroupHom h = {0, 1, 0, 1};
    REQUIRE(is_homomorphism(z4, z2, h));
    auto f = GroupoidFunctor::from_group_hom(z4, z2, h);
    CHECK(groupoid_fibration(f));
  }
}

TEST_CASE("pullback groupoid") {
  SUBCASE("pullback of identity with identity is the diagonal") {
    auto g = std::make_shared<FiniteGroupoid>(
        FiniteGroupoid::from_group(FinGroup::cyclic(2)));
    auto pb = pullback_groupoid(GroupoidFunctor::identity(g),
                                GroupoidFunctor::identity(g));
    CHECK(pb.groupoid->n_obj() == 1);
    CHECK(pb.groupoid->n_mor() == 2);
    CHECK(validate_groupoid(*pb.groupoid).ok());
  }
  SUBCASE("identity of Z2 against the point gives the trivial group") {
    auto z2 = FinGroup::cyclic(2);
    auto f = GroupoidFunctor::from_group_hom(z2, z2, {0, 1});
    auto one = FinGroup::trivial();
    auto g = GroupoidFunctor::from_group_hom(one, z2, {0});
    g.dst = f.dst;  // shared codomain instance
    auto pb = pullback_groupoid(f, g);
    CHECK(pb.groupoid->n_obj() == 1);
    CHECK(pb.groupoid->n_mor() == 1);
  }
  SUBCASE("distinct-object inclusions into the indiscrete groupoid: empty") {
    auto e2 = std::make_shared<FiniteGroupoid>(FiniteGroupoid::indiscrete(2));
    auto pt = std::make_shared<FiniteGroupoid>(FiniteGroupoid::discrete({"p"}));
    GroupoidFunctor f{pt, e2, {0}, {e2->identity[0]}};
    GroupoidFunctor g{pt, e2, {1}, {e2->identity[1]}};
    auto pb = pullback_groupoid(f, g);
    CHECK(pb.groupoid->n_obj() == 0);
    CHECK(pb.groupoid->n_mor() == 0);
  }
  SUBCASE("universal property on small test cones, mediating functor unique") {
    auto z4 = FinGroup::cyclic(4);
    auto z2 = FinGroup::cyclic(2);
    auto f = GroupoidFunctor::from_group_hom(z4, z2, {0, 1, 0, 1});
    auto f2 = GroupoidFunctor::from_group_hom(z4, z2, {0, 1, 0, 1});
    f2.dst = f.dst;
    auto pb = pullback_groupoid(f, f2);
    REQUIRE(validate_groupoid(*pb.groupoid).ok());

    // Cone: Z2 -> Z4 x_{Z2} Z4 sending the generator to (2,2).
    auto k = std::make_shared<FiniteGroupoid>(
        FiniteGroupoid::from_group(FinGroup::cyclic(2)));
    GroupoidFunctor left{k, f.src, {0}, {0, 2}};
    GroupoidFunctor right{k, f2.src, {0}, {0, 2}};
    {
      ValidationReport r1, r2;
      left.check(r1);
      right.check(r2);
      REQUIRE(r1.ok());
      REQUIRE(r2.ok());
    }
    // Enumerate every functor K -> PB whose projections are the cone legs.
    int count = 0;
    const auto& PB = *pb.groupoid;
    for (int m = 0; m < PB.n_mor(); ++m) {
      if (PB.mors[m].src != 0 || PB.mors[m].dst != 0) continue;
      std::vector<int> mm(2);
      mm[0] = PB.identity[0];
      mm[1] = m;
      if (PB.compose(m, m) != PB.identity[0]) continue;
      bool commutes = true;
      for (int x = 0; x < 2; ++x) {
        if (pb.proj1.mor_map[mm[x]] != left.mor_map[x]) commutes = false;
        if (pb.proj2.mor_map[mm[x]] != right.mor_map[x]) commutes = false;
      }
      if (commutes) ++count;
    }
    CHECK(count == 1);
  }
}

TEST_CASE("fibrations are closed under composition on small instances") {
  auto z4 = FinGroup::cyclic(4);
  auto z2 = FinGroup::cyclic(2);
  auto f = GroupoidFunctor::from_group_hom(z4, z2, {0, 1, 0, 1});
  GroupoidFunctor g = GroupoidFunctor::from_group_hom(z2, z2, {0, 1});
  g.src = f.dst;
  GroupoidFunctor gf;
  gf.src = f.src;
  gf.dst = g.dst;
  gf.obj_map = {0};
  for (int m = 0; m < 4; ++m) gf.mor_map.push_back(g.mor_map[f.mor_map[m]]);
  CHECK(groupoid_fibration(f));
  CHECK(groupoid_fibration(g));
  CHECK(groupoid_fibration(gf));
}
