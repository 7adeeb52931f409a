#include <doctest.h>

#include <map>
#include <set>
#include <vector>

#include "hofib/monoidal.hpp"
#include "hofib/nerve.hpp"
#include "oracles.hpp"

using namespace hofib;
using namespace hofib::bicat;
using namespace hofib::nerve;

namespace {

BicatPtr sigma_group(int n) {
  return monoidal::delooping(
      monoidal::MonoidalCategory::from_group(alg::FinGroup::cyclic(n)));
}

BicatPtr sigma_toy(bool skew) {
  auto m = skew ? monoidal::MonoidalCategory::cocycle_toy_skewed()
                : monoidal::MonoidalCategory::cocycle_toy();
  return monoidal::delooping(m);
}

// The one-object poset bicategory {s <= t} with join as composition; its
// single non-identity 2-cell is not invertible.
BicatPtr poset_bicat() {
  auto b = std::make_shared<FiniteBicategory>();
  b->name = "JoinPoset";
  b->objects = {"*"};
  b->cells1 = {{"s", 0, 0}, {"t", 0, 0}};
  b->cells2 = {{"1s", 0, 0}, {"1t", 1, 1}, {"s<t", 0, 1}};
  b->id1 = {0};
  b->id2 = {0, 1};
  b->set_vcomp(0, 0, 0);
  b->set_vcomp(1, 1, 1);
  b->set_vcomp(2, 0, 2);
  b->set_vcomp(1, 2, 2);
  auto join1 = [](int g, int f) { return g | f; };
  for (int g = 0; g < 2; ++g)
    for (int f = 0; f < 2; ++f) b->set_hcomp1(g, f, join1(g, f));
  auto cell_tgt = [](int c) { return c == 2 ? 1 : c; };
  auto cell_src = [](int c) { return c == 2 ? 0 : c; };
  for (int c2 = 0; c2 < 3; ++c2)
    for (int c1 = 0; c1 < 3; ++c1) {
      int s = join1(cell_src(c2), cell_src(c1));
      int d = join1(cell_tgt(c2), cell_tgt(c1));
      b->set_hcomp2(c2, c1, s == d ? (s == 0 ? 0 : 1) : 2);
    }
  for (int f3 = 0; f3 < 2; ++f3)
    for (int f2 = 0; f2 < 2; ++f2)
      for (int f1 = 0; f1 < 2; ++f1) {
        int v = join1(join1(f3, f2), f1);
        b->set_assoc(f3, f2, f1, v == 0 ? 0 : 1);
      }
  b->lunit = {0, 1};
  b->runit = {0, 1};
  b->finalize();
  return b;
}

}  // namespace

TEST_CASE("poset bicategory validates and has a non-invertible 2-cell") {
  auto b = poset_bicat();
  CHECK(validate_bicategory(*b).ok());
  CHECK(b->inv2(2) < 0);
}

TEST_CASE("geometric nerve of a discrete bicategory equals the ordinary nerve") {
  auto cats = std::vector<alg::FiniteCategory>{
      alg::FiniteCategory::simplex(2),
      alg::free_category(alg::FiniteGraph::linear(3)),
      alg::FiniteGroupoid::indiscrete(2)};
  for (const auto& c : cats) {
    auto B = discrete_bicategory(c);
    auto oracle = ordinary_nerve_sset(c, 4);
    for (auto v : {Variant::Lax, Variant::NormalLax, Variant::Oplax,
                   Variant::NormalOplax}) {
      auto gn = geometric_nerve(B, v, 4);
      REQUIRE(validate_simplicial(gn.sset).ok());
      for (int n = 0; n <= 4; ++n) {
        INFO(c.name << " dim " << n);
        CHECK(gn.sset.size(n) == oracle.size(n));
      }
      // cells are determined by their consecutive-edge chains
      std::map<std::vector<int>, int> chain_ix;
      for (int x = 0; x < gn.sset.size(4); ++x) {
        std::vector<int> chain;
        for (int k = 0; k < 4; ++k) chain.push_back(gn.simplices[4][x].e(k, k + 1));
        CHECK(chain_ix.emplace(chain, x).second);
      }
    }
  }
}

TEST_CASE("geometric nerve of the terminal bicategory has one cell per dim") {
  auto B = simplex_bicategory(0);
  for (auto v : {Variant::Lax, Variant::NormalLax, Variant::Oplax,
                 Variant::NormalOplax}) {
    auto gn = geometric_nerve(B, v, 4);
    for (int n = 0; n <= 4; ++n) CHECK(gn.sset.size(n) == 1);
    CHECK(validate_simplicial(gn.sset).ok());
  }
}

TEST_CASE("geometric nerve simplicial identities across variants and targets") {
  std::vector<BicatPtr> targets = {sigma_group(2), sigma_group(3),
                                   sigma_toy(false), sigma_toy(true),
                                   poset_bicat()};
  for (auto B : targets)
    for (auto v : {Variant::Lax, Variant::NormalLax, Variant::Oplax,
                   Variant::NormalOplax}) {
      auto gn = geometric_nerve(B, v, 4);
      auto rep = validate_simplicial(gn.sset);
      INFO(B->name << " " << rep.summary());
      CHECK(rep.ok());
    }
}

TEST_CASE("normal nerves include into the full ones naturally") {
  for (auto B : {sigma_group(2), sigma_toy(true), poset_bicat()}) {
    auto full = geometric_nerve(B, Variant::Lax, 3);
    auto norm = geometric_nerve(B, Variant::NormalLax, 3);
    std::vector<std::vector<int>> m(4);
    for (int n = 0; n <= 3; ++n)
      for (int x = 0; x < norm.sset.size(n); ++x)
        m[n].push_back(full.index_of(n, norm.sset.cells[n][x]));
    CHECK(check_simplicial_injection(norm.sset, full.sset, m).ok());

    auto fullo = geometric_nerve(B, Variant::Oplax, 3);
    auto normo = geometric_nerve(B, Variant::NormalOplax, 3);
    std::vector<std::vector<int>> mo(4);
    for (int n = 0; n <= 3; ++n)
      for (int x = 0; x < normo.sset.size(n); ++x)
        mo[n].push_back(fullo.index_of(n, normo.sset.cells[n][x]));
    CHECK(check_simplicial_injection(normo.sset, fullo.sset, mo).ok());
  }
}

TEST_CASE("restriction agrees with compose_lax along cofaces") {
  auto B = sigma_toy(true);
  auto gn = geometric_nerve(B, Variant::Lax, 3);
  REQUIRE(!gn.simplices[3].empty());
  const auto& x = gn.simplices[3][0];
  for (int i = 0; i <= 3; ++i) {
    Mono d = Mono::coface(3, i);
    auto direct = x.restrict_along(d);
    alg::CatFunctor cf;
    auto s2 = alg::FiniteCategory::simplex(2);
    auto s3 = alg::FiniteCategory::simplex(3);
    cf.src = std::make_shared<alg::FiniteCategory>(s2);
    cf.dst = std::make_shared<alg::FiniteCategory>(s3);
    cf.obj_map = d.v;
    for (int m = 0; m < s2.n_mor(); ++m) {
      const auto& mm = s2.mors[m];
      cf.mor_map.push_back(s3.mor_index(
          tup({std::to_string(d.v[mm.src]), std::to_string(d.v[mm.dst])})));
    }
    auto df = discrete_functor(cf, simplex_bicategory(2), simplex_bicategory(3),
                               Dir::Lax);
    auto via_compose = compose_lax(x.as_lax(), df);
    auto back = SimplexFunctor::from_lax(via_compose);
    CHECK(back.key() == direct.key());
  }
}

TEST_CASE("kan check: groupoid nerves fill all horns, category nerves fail outer") {
  auto e2 = alg::FiniteGroupoid::indiscrete(2);
  auto gnerve = ordinary_nerve_sset(e2, 3);
  for (int n = 1; n <= 3; ++n)
    for (int k = 0; k <= n; ++k) {
      auto rep = kan_check(gnerve, n, k);
      INFO("n=" << n << " k=" << k);
      CHECK(rep.all_filled());
    }

  auto arrow = alg::FiniteCategory::simplex(1);
  auto anerve = ordinary_nerve_sset(arrow, 3);
  bool some_outer_fails = !kan_check(anerve, 1, 0).all_filled() ||
                          !kan_check(anerve, 1, 1).all_filled() ||
                          !kan_check(anerve, 2, 0).all_filled() ||
                          !kan_check(anerve, 2, 2).all_filled();
  CHECK(some_outer_fails);
  // inner horns of a nerve always fill
  CHECK(kan_check(anerve, 2, 1).all_filled());
}

TEST_CASE("grothendieck nerve: levels, faces, cocycle") {
  for (auto B : {sigma_group(2), sigma_toy(true)}) {
    auto psn = grothendieck_nerve(B, 3);
    auto rep = check_grothendieck_nerve(psn);
    INFO(rep.summary());
    CHECK(rep.ok());

    CHECK(psn.level[0].cat.n_obj() == B->n_obj());
    CHECK(psn.level[0].cat.n_mor() == B->n_obj());

    // face formula on a 3-simplex: d_2 composes the middle entries
    // (diagram order: tuple (u1,u2,u3), d_2 = (u1, u3 o u2)).
    Mono d2 = Mono::coface(3, 2);
    const auto& L3 = psn.level[3];
    const auto& act = psn.act(d2);
    for (int X = 0; X < L3.cat.n_obj(); ++X) {
      const auto& t = L3.obj_tuple[X];
      const auto& img = psn.level[2].obj_tuple[act.obj_map[X]];
      CHECK(img[0] == t[0]);
      CHECK(img[1] == B->hcomp1(t[2], t[1]));
    }
    // degeneracy: s_1 inserts an identity after the first entry
    Mono s1 = Mono::codegeneracy(2, 1);
    const auto& L2 = psn.level[2];
    const auto& acts = psn.act(s1);
    for (int X = 0; X < L2.cat.n_obj(); ++X) {
      const auto& t = L2.obj_tuple[X];
      const auto& img = psn.level[3].obj_tuple[acts.obj_map[X]];
      CHECK(img[0] == t[0]);
      CHECK(img[1] == B->id1[L2.obj_chain[X][1]]);
      CHECK(img[2] == t[1]);
    }
  }
}

TEST_CASE("nerve of a lax functor: coherence and strict functoriality") {
  auto b2 = sigma_group(2);
  auto b4 = sigma_group(4);
  LaxMorphism dbl;
  dbl.name = "x2";
  dbl.dir = Dir::Lax;
  dbl.src = b2;
  dbl.dst = b4;
  dbl.map0 = {0};
  dbl.map1 = {0, 2};
  dbl.map2 = {0, 2};
  for (int g = 0; g < 2; ++g)
    for (int f = 0; f < 2; ++f)
      dbl.set_comp_cell(g, f, b4->id2[b4->hcomp1(dbl.map1[g], dbl.map1[f])]);
  dbl.unit_cell = {b4->id2[b4->id1[0]]};
  REQUIRE(validate_lax(dbl).ok());
  LaxMorphism mod2;
  mod2.name = "mod2";
  mod2.dir = Dir::Lax;
  mod2.src = b4;
  mod2.dst = b2;
  mod2.map0 = {0};
  mod2.map1 = {0, 1, 0, 1};
  mod2.map2 = {0, 1, 0, 1};
  for (int g = 0; g < 4; ++g)
    for (int f = 0; f < 4; ++f)
      mod2.set_comp_cell(g, f, b2->id2[b2->hcomp1(mod2.map1[g], mod2.map1[f])]);
  mod2.unit_cell = {b2->id2[b2->id1[0]]};
  REQUIRE(validate_lax(mod2).ok());

  auto n2 = grothendieck_nerve(b2, 2);
  auto n4 = grothendieck_nerve(b4, 2);
  auto nf = nerve_of_lax(dbl, n2, n4);
  CHECK(check_nerve_of_lax(nf).ok());
  auto ng = nerve_of_lax(mod2, n4, n2);
  CHECK(check_nerve_of_lax(ng).ok());
  CHECK(check_nerve_functoriality(dbl, mod2, n2, n4, n2).ok());
}

TEST_CASE("nerve of a non-strict homomorphism between deloopings") {
  auto T = sigma_toy(true);
  auto nt = grothendieck_nerve(T, 2);
  auto idt = LaxMorphism::identity(T, Dir::Lax);
  auto nf = nerve_of_lax(idt, nt, nt);
  CHECK(check_nerve_of_lax(nf).ok());
  // b : [0] -> T has a genuinely non-identity structure cell (skewed lunit)
  auto s0 = grothendieck_nerve(simplex_bicategory(0), 2);
  auto bhat = object_homomorphism(0, T, Dir::Lax);
  auto nb = nerve_of_lax(bhat, s0, nt);
  auto rep = check_nerve_of_lax(nb);
  INFO(rep.summary());
  CHECK(rep.ok());
  CHECK(check_nerve_functoriality(bhat, idt, s0, nt, nt).ok());
}

TEST_CASE("free-category adjunction over graphs") {
  std::vector<alg::FiniteGraph> graphs = {alg::FiniteGraph::linear(1),
                                          alg::FiniteGraph::linear(2),
                                          alg::FiniteGraph::linear(3)};
  alg::FiniteGraph y;
  y.name = "Y";
  y.vertices = {"a", "b", "c", "d"};
  y.edges = {{"e0", 0, 1}, {"e1", 1, 2}, {"e2", 1, 3}};
  graphs.push_back(y);

  for (const auto& g : graphs)
    for (auto B : {sigma_group(2), sigma_toy(true)}) {
      auto rep = check_graph_adjunction(g, B);
      INFO(g.name << " -> " << B->name << ": " << rep.summary());
      CHECK(rep.ok());
    }
}

TEST_CASE("level adjunction hom-set bijection for p <= 3") {
  for (auto B : {sigma_group(2), sigma_toy(false)}) {
    for (int p = 0; p <= 3; ++p) {
      auto rep = check_level_adjunction(B, p);
      INFO(B->name << " p=" << p << ": " << rep.summary());
      CHECK(rep.ok());
    }
  }
}

TEST_CASE("icon category and nerve projection") {
  for (auto B : {sigma_group(2), sigma_toy(false)}) {
    auto ic = icon_category(B, 2);
    CHECK(alg::validate_category(ic.cat).ok());
    auto rep = check_nerve_projection(B, 2);
    INFO(B->name << ": " << rep.summary());
    CHECK(rep.ok());
  }
}

TEST_CASE("icon category at level 0 of a discrete bicategory is discrete") {
  auto B = sigma_group(3);
  auto ic = icon_category(B, 0);
  CHECK(ic.cat.n_obj() == 1);
  CHECK(ic.cat.n_mor() == 1);
}

TEST_CASE("resource ceiling raises an explicit error") {
  auto B = sigma_group(4);
  CHECK_THROWS_AS(geometric_nerve(B, Variant::Lax, 4, 10),
                  hofib::ResourceLimitError);
}
