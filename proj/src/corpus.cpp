#include "hofib/corpus.hpp"

#include <stdexcept>

namespace hofib::wb {

using alg::FinGroup;
using alg::FiniteGroupoid;
using bicat::Dir;
using bicat::LaxMorphism;
using monoidal::MonoidalCategory;
using xmod::CrossedModule;
using xmod::XmodMorphism;

namespace {

// Strict morphism between deloopings of discrete groups, from a group hom.
LaxMorphism sigma_hom(bicat::BicatPtr src, bicat::BicatPtr dst,
                      const alg::GroupHom& h, const Id& name, Dir dir) {
  LaxMorphism f;
  f.name = name;
  f.dir = dir;
  f.src = src;
  f.dst = dst;
  f.map0 = {0};
  f.map1 = h;
  f.map2 = h;  // identity 2-cells follow their 1-cells in a discrete delooping
  for (int g = 0; g < src->n1(); ++g)
    for (int k = 0; k < src->n1(); ++k)
      if (src->h_composable1(g, k))
        f.set_comp_cell(g, k, dst->id2[dst->hcomp1(f.map1[g], f.map1[k])]);
  for (int a = 0; a < src->n_obj(); ++a)
    f.unit_cell.push_back(dst->id2[dst->id1[f.map0[a]]]);
  return f;
}

XmodMorphism conj_quotient(std::shared_ptr<const CrossedModule> z4,
                           std::shared_ptr<const CrossedModule> z2,
                           const Id& name) {
  XmodMorphism q;
  q.name = name;
  q.src = z4;
  q.dst = z2;
  q.F.src = z4->g.base;
  q.F.dst = z2->g.base;
  q.F.obj_map = {0};
  q.F.mor_map = {0, 1, 0, 1};
  q.phi = {{0, 1, 0, 1}};
  return q;
}

}  // namespace

Corpus generate_corpus(const CorpusSpec& spec) {
  Corpus c;
  const std::string tag = spec.seed == 0 ? "" : "@s" + std::to_string(spec.seed);
  auto nm = [&](const std::string& s) { return s + tag; };

  auto z2 = FinGroup::cyclic(2);
  auto z3 = FinGroup::cyclic(3);
  auto z4 = FinGroup::cyclic(4);
  auto k4 = FinGroup::direct_product(z2, z2);
  auto s3 = FinGroup::symmetric(3);
  if (spec.wants("groups")) {
    c.groups = {{nm("Z2"), z2}, {nm("Z3"), z3}, {nm("Z4"), z4},
                {nm("K4"), k4}, {nm("S3"), s3}};
  }

  auto bz2 = std::make_shared<FiniteGroupoid>(FiniteGroupoid::from_group(z2));
  auto bz3 = std::make_shared<FiniteGroupoid>(FiniteGroupoid::from_group(z3));
  auto e2 = std::make_shared<FiniteGroupoid>(FiniteGroupoid::indiscrete(2));
  auto e3 = std::make_shared<FiniteGroupoid>(FiniteGroupoid::indiscrete(3));
  if (spec.wants("groupoids")) {
    c.groupoids = {{nm("BZ2"), bz2}, {nm("BZ3"), bz3}, {nm("E2"), e2},
                   {nm("E3"), e3}};
  }

  if (spec.wants("graphs")) {
    for (int p = 1; p <= 3; ++p) c.graphs.push_back(alg::FiniteGraph::linear(p));
    alg::FiniteGraph y;
    y.name = nm("Y");
    y.vertices = {"a", "b", "c", "d"};
    y.edges = {{"e0", 0, 1}, {"e1", 1, 2}, {"e2", 1, 3}};
    c.graphs.push_back(y);
  }

  // monoidal categories and their deloopings
  auto add_monoidal = [&](const Id& name, MonoidalCategory m) {
    auto sp = std::make_shared<MonoidalCategory>(std::move(m));
    c.monoidals.push_back({nm(name), sp, monoidal::delooping(*sp)});
    return c.monoidals.back();
  };
  auto mz2 = add_monoidal("DiscZ2", MonoidalCategory::from_group(z2));
  auto mz3 = add_monoidal("DiscZ3", MonoidalCategory::from_group(z3));
  auto mz4 = add_monoidal("DiscZ4", MonoidalCategory::from_group(z4));
  auto mk4 = add_monoidal("DiscK4", MonoidalCategory::from_group(k4));
  auto ms3 = add_monoidal("DiscS3", MonoidalCategory::from_group(s3));
  auto mtoy = add_monoidal("TwistZ2", MonoidalCategory::cocycle_toy());
  auto mskew = add_monoidal("TwistZ2Skew", MonoidalCategory::cocycle_toy_skewed());
  auto mtrunc = add_monoidal("TruncAdd3", MonoidalCategory::truncated_addition(3));

  // the thin join poset with one non-invertible 2-cell, as a monoidal category
  MonoidalCategory join;
  join.name = "JoinPoset";
  join.cat.name = join.name;
  join.cat.objects = {"s", "t"};
  join.cat.mors = {{"1s", 0, 0}, {"1t", 1, 1}, {"s<t", 0, 1}};
  join.cat.identity = {0, 1};
  join.cat.set_comp(0, 0, 0);
  join.cat.set_comp(1, 1, 1);
  join.cat.set_comp(2, 0, 2);
  join.cat.set_comp(1, 2, 2);
  join.tensor_obj = {{0, 1}, {1, 1}};
  auto jmor = [&](int u, int v) {
    auto msrc = [&](int w) { return w == 2 ? 0 : w; };
    auto mdst = [&](int w) { return w == 2 ? 1 : w; };
    int s = join.tensor_obj[msrc(u)][msrc(v)];
    int d = join.tensor_obj[mdst(u)][mdst(v)];
    return s == d ? join.cat.identity[s] : 2;
  };
  for (int u = 0; u < 3; ++u)
    for (int v = 0; v < 3; ++v) join.set_tensor_mor(u, v, jmor(u, v));
  join.unit = 0;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int d = 0; d < 2; ++d)
        join.assoc_[pack3(a, b, d)] =
            join.cat.identity[join.tensor_obj[join.tensor_obj[a][b]][d]];
  join.lunit = {0, 1};
  join.runit = {0, 1};
  auto mjoin = add_monoidal("JoinPoset", std::move(join));

  if (spec.wants("bicategories")) {
    c.bicategories = {{nm("Sigma.Z2"), mz2.sigma},
                      {nm("Sigma.Z3"), mz3.sigma},
                      {nm("Sigma.Z4"), mz4.sigma},
                      {nm("Sigma.TwistZ2"), mtoy.sigma},
                      {nm("Sigma.TwistZ2Skew"), mskew.sigma},
                      {nm("Sigma.JoinPoset"), mjoin.sigma}};
    // discrete bicategory on the indiscrete groupoid
    c.bicategories.push_back({nm("Disc.E2"), bicat::discrete_bicategory(*e2)});
  }

  // crossed modules (all within nerve bounds at N = 4)
  auto add_x = [&](CrossedModule x) {
    auto sp = std::make_shared<CrossedModule>(std::move(x));
    c.xmods.push_back({nm(sp->name), sp});
    return sp;
  };
  std::shared_ptr<const CrossedModule> x_bz2, x_e2, x_a2, x_a3, x_ak4, x_zz0,
      x_zz2, x_zz3;
  if (spec.wants("xmods") || spec.wants("xmod_pairs")) {
    x_bz2 = add_x(CrossedModule::trivial_fibers(bz2, "(1,BZ2,1)"));
    x_e2 = add_x(CrossedModule::trivial_fibers(e2, "(1,E2,1)"));
    x_a2 = add_x(CrossedModule::abelian(z2));
    x_a3 = add_x(CrossedModule::abelian(z3));
    x_ak4 = add_x(CrossedModule::abelian(k4));
    {
      CrossedModule zz0;
      zz0.name = "(Z2,Z2,0)";
      zz0.g = alg::PGroup::constant(bz2, z2);
      zz0.boundary = {std::vector<int>(2, bz2->identity[0])};
      x_zz0 = add_x(std::move(zz0));
    }
    x_zz2 = add_x(CrossedModule::conjugation(z2));
    x_zz3 = add_x(CrossedModule::conjugation(z3));
  }
  if (spec.wants("bicategories") && x_zz0 && x_zz2) {
    c.bicategories.push_back({nm("beta(Z2,Z2,0)"), xmod::beta(*x_zz0).bi});
    c.bicategories.push_back({nm("beta(Z2,Z2,id)"), xmod::beta(*x_zz2).bi});
  }

  if (spec.wants("comma")) {
    for (const auto& nb : c.bicategories)
      c.comma_pairs.push_back({nm("id|id:") + nb.name,
                               LaxMorphism::identity(nb.b, Dir::Lax),
                               LaxMorphism::identity(nb.b, Dir::Oplax)});
    // doubling against itself on Sigma Z4
    auto dbl = sigma_hom(mz2.sigma, mz4.sigma, {0, 2}, nm("x2"), Dir::Lax);
    auto dblo = sigma_hom(mz2.sigma, mz4.sigma, {0, 2}, nm("x2o"), Dir::Oplax);
    c.comma_pairs.push_back({nm("x2|x2"), dbl, dblo});
    // object homomorphisms into the skewed toy
    c.comma_pairs.push_back(
        {nm("b|b':skew"), bicat::object_homomorphism(0, mskew.sigma, Dir::Lax),
         bicat::object_homomorphism(0, mskew.sigma, Dir::Oplax)});
    // a genuinely non-pseudo lax functor into the join poset
    LaxMorphism ft;
    ft.name = nm("const.t");
    ft.dir = Dir::Lax;
    ft.src = mz2.sigma;
    ft.dst = mjoin.sigma;
    ft.map0 = {0};
    ft.map1 = {1, 1};
    ft.map2 = {mjoin.sigma->id2[1], mjoin.sigma->id2[1]};
    for (int g = 0; g < 2; ++g)
      for (int k = 0; k < 2; ++k)
        ft.set_comp_cell(g, k, mjoin.sigma->id2[1]);
    ft.unit_cell = {mjoin.sigma->cell2_index("s<t")};
    c.comma_pairs.push_back(
        {nm("const.t|id"), ft, LaxMorphism::identity(mjoin.sigma, Dir::Oplax)});
  }

  if (spec.wants("lax_pairs")) {
    auto dbl = sigma_hom(mz2.sigma, mz4.sigma, {0, 2}, nm("x2"), Dir::Lax);
    auto mod2 = sigma_hom(mz4.sigma, mz2.sigma, {0, 1, 0, 1}, nm("mod2"), Dir::Lax);
    c.lax_pairs.push_back({nm("mod2.x2"), mod2, dbl});
    LaxMorphism ft;
    ft.name = nm("const.t");
    ft.dir = Dir::Lax;
    ft.src = mz2.sigma;
    ft.dst = mjoin.sigma;
    ft.map0 = {0};
    ft.map1 = {1, 1};
    ft.map2 = {mjoin.sigma->id2[1], mjoin.sigma->id2[1]};
    for (int g = 0; g < 2; ++g)
      for (int k = 0; k < 2; ++k)
        ft.set_comp_cell(g, k, mjoin.sigma->id2[1]);
    ft.unit_cell = {mjoin.sigma->cell2_index("s<t")};
    c.lax_pairs.push_back({nm("const.t.mod2"), ft, mod2});
    c.lax_pairs.push_back(
        {nm("bhat.id"),
         bicat::object_homomorphism(0, mskew.sigma, Dir::Lax),
         LaxMorphism::identity(bicat::simplex_bicategory(0), Dir::Lax)});
  }

  if (spec.wants("xmod_pairs")) {
    // Example (i): group homomorphisms with trivial fibers; F = id on Z2,
    // F' the inclusion of the point.
    auto one = add_x(CrossedModule::trivial_fibers(
        std::make_shared<FiniteGroupoid>(FiniteGroupoid::from_group(FinGroup::trivial())),
        "(1,1,1)"));
    {
      XmodMorphism idm = XmodMorphism::identity(x_bz2);
      XmodMorphism pt;
      pt.name = nm("pt->BZ2");
      pt.src = one;
      pt.dst = x_bz2;
      pt.F.src = one->g.base;
      pt.F.dst = x_bz2->g.base;
      pt.F.obj_map = {0};
      pt.F.mor_map = {x_bz2->base().identity[0]};
      pt.phi = {{0}};
      c.xmod_pairs.push_back({nm("example-i"), idm, pt, 0, 0, true});
    }
    // Example (ii): abelian phi = phi' = id on (Z2,1,0).
    {
      XmodMorphism idm = XmodMorphism::identity(x_a2);
      c.xmod_pairs.push_back({nm("example-ii"), idm, idm, 0, 0, true});
    }
    // conjugation quotient (Z4,Z4,id) -> (Z2,Z2,id)
    auto x_zz4 = std::make_shared<CrossedModule>(CrossedModule::conjugation(z4));
    {
      auto q = conj_quotient(x_zz4, x_zz2, nm("conj-mod2"));
      c.xmod_pairs.push_back({nm("conj-q|q"), q, q, 0, 0, true});
      c.xmod_pairs.push_back(
          {nm("conj-q|id"), q, XmodMorphism::identity(x_zz2), 0, 0, true});
    }
    // abelian quotient (Z4,1,0) -> (Z2,1,0)
    {
      auto a4 = add_x(CrossedModule::abelian(z4));
      XmodMorphism qa;
      qa.name = nm("ab-mod2");
      qa.src = a4;
      qa.dst = x_a2;
      qa.F.src = a4->g.base;
      qa.F.dst = x_a2->g.base;
      qa.F.obj_map = {0};
      qa.F.mor_map = {0};
      qa.phi = {{0, 1, 0, 1}};
      c.xmod_pairs.push_back({nm("ab-q|q"), qa, qa, 0, 0, true});
    }
    // non-fibration pair: the unit inclusion into (Z2,1,0) on both legs
    {
      auto pt0 = add_x(CrossedModule::abelian(FinGroup::trivial()));
      XmodMorphism inc;
      inc.name = nm("inc");
      inc.src = pt0;
      inc.dst = x_a2;
      inc.F.src = pt0->g.base;
      inc.F.dst = x_a2->g.base;
      inc.F.obj_map = {0};
      inc.F.mor_map = {0};
      inc.phi = {{0}};
      c.xmod_pairs.push_back({nm("nonfib"), inc, inc, 0, 0, false});
    }
  }

  if (spec.wants("monoidal_pairs")) {
    auto idz2 = monoidal::monoidal_identity(mz2.m, mz2.sigma);
    auto idz4 = monoidal::monoidal_identity(mz4.m, mz4.sigma);
    auto idtoy = monoidal::monoidal_identity(mtoy.m, mtoy.sigma);
    auto idskew = monoidal::monoidal_identity(mskew.m, mskew.sigma);
    c.monoidal_pairs.push_back({nm("idZ2|idZ2"), idz2, idz2});
    c.monoidal_pairs.push_back({nm("idtoy|idtoy"), idtoy, idtoy});
    c.monoidal_pairs.push_back({nm("idskew|idskew"), idskew, idskew});
    std::unordered_map<std::uint64_t, int> comp;
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b)
        comp[pack2(a, b)] = mz4.m->cat.identity[(2 * a + 2 * b) % 4];
    auto dblm = monoidal::monoidal_functor(mz2.m, mz2.sigma, mz4.m, mz4.sigma,
                                           nm("x2"), {0, 2}, {0, 2}, comp,
                                           mz4.m->cat.identity[0]);
    c.monoidal_pairs.push_back({nm("x2|idZ4"), dblm, idz4});
  }

  (void)mtrunc;
  (void)ms3;
  (void)mk4;
  (void)e3;
  (void)bz3;
  return c;
}

}  // namespace hofib::wb
