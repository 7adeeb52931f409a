#include "hofib/suites.hpp"

#include <atomic>
#include <functional>
#include <thread>

#include "hofib/comma.hpp"
#include "hofib/nerve.hpp"

namespace hofib::wb {

using bicat::Dir;
using bicat::LaxMorphism;

namespace {

struct Check {
  std::string name;
  std::string law;
  std::function<std::pair<bool, std::string>()> run;
};

std::pair<bool, std::string> from_report(const ValidationReport& rep) {
  return {rep.ok(), rep.ok() ? "" : rep.summary()};
}

void run_all(std::vector<Check>& checks, SuiteResult& out, int jobs) {
  out.checks.resize(checks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= checks.size()) break;
      CheckResult r;
      r.name = checks[i].name;
      r.law = checks[i].law;
      try {
        auto [pass, details] = checks[i].run();
        r.pass = pass;
        r.details = details;
      } catch (const ResourceLimitError& e) {
        r.pass = false;
        r.details = std::string("resource limit: ") + e.what();
      } catch (const std::exception& e) {
        r.pass = false;
        r.details = std::string("error: ") + e.what();
      }
      out.checks[i] = std::move(r);
    }
  };
  int n = std::max(1, jobs);
  if (n == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < n; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
}

// --- check builders per suite ---------------------------------------------------

void axioms_checks(const Corpus& c, const SuiteOptions& opt,
                   std::vector<Check>& out) {
  for (const auto& [name, g] : c.groups)
    out.push_back({"group:" + name, "group axioms", [g = g]() {
                     ValidationReport rep;
                     rep.subject = g.name;
                     g.check(rep);
                     return from_report(rep);
                   }});
  for (const auto& [name, g] : c.groupoids)
    out.push_back({"groupoid:" + name, "category and inverse axioms",
                   [g = g]() { return from_report(alg::validate_groupoid(*g)); }});
  bool injected = false;
  for (const auto& nb : c.bicategories) {
    bool poison = !injected && opt.inject == "pentagon" &&
                  nb.b->n1() >= 2 && nb.b->n_obj() == 1;
    injected = injected || poison;
    out.push_back(
        {"bicategory:" + nb.name,
         "vertical categories, interchange, constraint naturality, pentagon, triangle",
         [b = nb.b, poison]() {
           if (!poison) return from_report(bicat::validate_bicategory(*b));
           auto bad = std::make_shared<bicat::FiniteBicategory>(*b);
           // retarget one associator to a wrong parallel cell
           auto key = bad->assoc_.begin()->first;
           int cur = bad->assoc_.begin()->second;
           int swap = -1;
           for (int c2 = 0; c2 < bad->n2() && swap < 0; ++c2)
             if (c2 != cur && bad->cells2[c2].src == bad->cells2[cur].src &&
                 bad->cells2[c2].dst == bad->cells2[cur].dst)
               swap = c2;
           if (swap < 0) {
             // no parallel cell available: corrupt to a self-identity instead
             bad->assoc_[key] = bad->id2[bad->cells2[cur].src];
           } else {
             bad->assoc_[key] = swap;
           }
           bad->finalize();
           return from_report(bicat::validate_bicategory(*bad));
         }});
  }
  for (const auto& e : c.xmods)
    out.push_back({"xmod:" + e.name, "equivariance and the Peiffer identity",
                   [x = e.x]() { return from_report(xmod::validate_xmod(*x)); }});
  for (const auto& e : c.monoidals)
    out.push_back({"monoidal:" + e.name,
                   "tensor functoriality and monoidal coherence",
                   [m = e.m]() { return from_report(monoidal::validate_monoidal(*m)); }});
  // closure: beta of every corpus crossed module validates as a bicategory
  for (const auto& e : c.xmods)
    out.push_back({"closure:beta:" + e.name,
                   "constructed 2-groupoids satisfy every bicategory axiom",
                   [x = e.x]() {
                     return from_report(xmod::validate_two_groupoid(*xmod::beta(*x).bi));
                   }});
}

void comma_checks(const Corpus& c, const SuiteOptions& opt,
                  std::vector<Check>& out) {
  for (const auto& pr : c.comma_pairs) {
    out.push_back({"comma:" + pr.name,
                   "homotopy-fibre product bicategory axioms (full suite)",
                   [pr]() {
                     auto cr = comma::comma(pr.F, pr.Fp);
                     auto rep = bicat::validate_bicategory(*cr.c.bi);
                     ValidationReport rp = bicat::validate_lax(cr.proj.P);
                     ValidationReport rpp = bicat::validate_lax(cr.proj.Pp);
                     rep.absorb(rp);
                     rep.absorb(rpp);
                     if (!cr.proj.P.strict() || !cr.proj.Pp.strict())
                       rep.fail("projection-not-strict", pr.name);
                     // comparison-cell well-formedness for every 1-cell
                     const auto& B = *pr.F.dst;
                     for (int h = 0; h < cr.c.bi->n1(); ++h) {
                       const auto& one = cr.c.ones[h];
                       const auto& o0 = cr.c.objs[cr.c.bi->cells1[h].src];
                       const auto& o1 = cr.c.objs[cr.c.bi->cells1[h].dst];
                       if (B.cells2[one.beta].src !=
                               B.hcomp1(pr.Fp.map1[one.up], o0.f) ||
                           B.cells2[one.beta].dst !=
                               B.hcomp1(o1.f, pr.F.map1[one.u]))
                         rep.fail("comparison-cell-shape", cr.c.bi->cells1[h].id);
                     }
                     return from_report(rep);
                   }});
    out.push_back({"pullback-squares:" + pr.name,
                   "strict pullback squares with unique mediating morphism",
                   [pr]() {
                     auto bl = comma::bar_lift(pr.F, pr.Fp);
                     ValidationReport rep;
                     rep.subject = pr.name;
                     auto r1 = bicat::validate_lax(bl.bar_f);
                     auto r2 = bicat::validate_lax(bl.bar_fp);
                     rep.absorb(r1);
                     rep.absorb(r2);
                     auto lhs = bicat::compose_lax(bl.bf.proj.P, bl.bar_f);
                     auto rhs = bicat::compose_lax(pr.F, bl.ff.proj.P);
                     if (!bicat::lax_equal(lhs, rhs))
                       rep.fail("first-square-not-commuting", pr.name);
                     auto lhs2 = bicat::compose_lax(bl.fb.proj.Pp, bl.bar_fp);
                     auto rhs2 = bicat::compose_lax(pr.Fp, bl.ff.proj.Pp);
                     if (!bicat::lax_equal(lhs2, rhs2))
                       rep.fail("second-square-not-commuting", pr.name);
                     // mediating morphism from a point cone, plus uniqueness
                     if (bl.ff.c.bi->n_obj() > 0) {
                       auto E = bicat::object_homomorphism(0, bl.ff.c.bi, Dir::Lax);
                       auto L = bicat::compose_lax(bl.ff.proj.P, E);
                       auto M = bicat::compose_lax(bl.bar_f, E);
                       auto N = comma::mediating(bl, L, M);
                       auto rn = bicat::validate_lax(N);
                       rep.absorb(rn);
                       if (!bicat::lax_equal(bicat::compose_lax(bl.ff.proj.P, N), L))
                         rep.fail("mediating-projection-P", pr.name);
                       if (!bicat::lax_equal(bicat::compose_lax(bl.bar_f, N), M))
                         rep.fail("mediating-projection-bar", pr.name);
                       if (comma::count_mediating_candidates(bl, L, M) != 1)
                         rep.fail("mediating-not-unique", pr.name);
                     }
                     return from_report(rep);
                   }});
  }
  for (const auto& nb : c.bicategories)
    out.push_back({"hom-iso:" + nb.name,
                   "the comma of two objects is their hom-category",
                   [b = nb.b]() {
                     ValidationReport rep;
                     rep.subject = b->name;
                     for (int x = 0; x < b->n_obj(); ++x)
                       for (int y = 0; y < b->n_obj(); ++y) {
                         auto r = comma::check_hom_isomorphism(b, x, y);
                         rep.absorb(r);
                       }
                     return from_report(rep);
                   }});
  for (const auto& nb : c.bicategories) {
    out.push_back({"translate:" + nb.name,
                   "translation 2-functors and their composite comparison",
                   [b = nb.b]() {
                     ValidationReport rep;
                     rep.subject = b->name;
                     auto idb = LaxMorphism::identity(b, Dir::Lax);
                     for (int p = 0; p < b->n1(); ++p) {
                       auto tr = comma::translate_lower(idb, p);
                       auto r = bicat::validate_lax(tr.functor);
                       rep.absorb(r);
                       if (!tr.functor.strict())
                         rep.fail("translation-not-strict", b->cells1[p].id);
                     }
                     for (int p = 0; p < b->n1(); ++p)
                       for (int q = 0; q < b->n1(); ++q) {
                         if (b->cells1[q].dst != b->cells1[p].src) continue;
                         auto res = comma::compare_translate_composite(idb, p, q);
                         if (!res.assoc_conjugate)
                           rep.fail("translate-composite-comparison",
                                    tup({b->cells1[p].id, b->cells1[q].id}));
                       }
                     return from_report(rep);
                   }});
  }
  for (const auto& pr : c.comma_pairs)
    out.push_back({"inclusions:" + pr.name,
                   "fibre inclusions are normal homomorphisms over the projections",
                   [pr]() {
                     ValidationReport rep;
                     rep.subject = pr.name;
                     auto ff = comma::comma(pr.F, pr.Fp);
                     for (int a = 0; a < pr.F.src->n_obj(); ++a) {
                       auto inc = comma::inclusion_J(a, ff);
                       auto r = bicat::validate_lax(inc.J);
                       rep.absorb(r);
                       if (!inc.J.normal()) rep.fail("J-not-normal", pr.name);
                       for (int X = 0; X < inc.fibre.c.bi->n_obj(); ++X)
                         if (ff.proj.P.map0[inc.J.map0[X]] != a)
                           rep.fail("J-projection-not-constant", pr.name);
                     }
                     for (int ap = 0; ap < pr.Fp.src->n_obj(); ++ap) {
                       auto inc = comma::inclusion_Jp(ap, ff);
                       auto r = bicat::validate_lax(inc.J);
                       rep.absorb(r);
                       if (!inc.J.normal()) rep.fail("J'-not-normal", pr.name);
                     }
                     return from_report(rep);
                   }});
  // comma2 and its symmetry on the lax pairs with common target
  out.push_back({"comma2:swap", "two-sided comma bicategories swap symmetrically",
                 [&c]() {
                   ValidationReport rep;
                   rep.subject = "comma2";
                   int done = 0;
                   for (const auto& nb : c.bicategories) {
                     if (nb.b->n1() > 4) continue;  // keep the doubled nesting small
                     auto f = LaxMorphism::identity(nb.b, Dir::Lax);
                     auto bh = bicat::object_homomorphism(0, nb.b, Dir::Lax);
                     auto r1 = comma::comma2_swap_check(f, bh);
                     rep.absorb(r1);
                     auto c2 = comma::comma2(f, bh);
                     auto r2 = bicat::validate_bicategory(*c2.outer.c.bi);
                     rep.absorb(r2);
                     ++done;
                     if (done >= 3) break;
                   }
                   if (done == 0) rep.fail("no-instances", "comma2");
                   return from_report(rep);
                 }});
  (void)opt;
  // property B certificates on bigroupoid-like corpus entries
  for (const auto& nb : c.bicategories) {
    bool all_two_iso = true;
    for (int t = 0; t < nb.b->n2(); ++t)
      if (nb.b->inv2(t) < 0) all_two_iso = false;
    bool one_iso = true;
    for (int f = 0; f < nb.b->n1(); ++f) {
      bool inv = false;
      for (int g : nb.b->hom1(nb.b->cells1[f].dst, nb.b->cells1[f].src)) {
        for (int cc : nb.b->cells2_between(nb.b->hcomp1(f, g),
                                           nb.b->id1[nb.b->cells1[f].dst]))
          if (nb.b->inv2(cc) >= 0) inv = true;
      }
      if (!inv) one_iso = false;
    }
    if (!(all_two_iso && one_iso)) continue;
    out.push_back({"property-b:" + nb.name,
                   "translations are biequivalences on bigroupoids (certificate)",
                   [b = nb.b]() -> std::pair<bool, std::string> {
                     auto res = comma::property_B_witness(
                         LaxMorphism::identity(b, Dir::Lax));
                     if (res.holds_sufficient) return {true, ""};
                     std::string w;
                     for (const auto& s : res.witnesses) w += s + "; ";
                     return {false, w};
                   }});
  }
  // the canonical transformations out of the projections
  for (const auto& pr : c.comma_pairs)
    out.push_back({"omega:" + pr.name,
                   "projection comparison transformations satisfy the coherence axioms",
                   [pr]() {
                     ValidationReport rep;
                     rep.subject = pr.name;
                     auto bf = comma::comma(
                         LaxMorphism::identity(pr.F.dst, Dir::Lax), pr.Fp);
                     auto om = comma::omega_upper(bf, pr.Fp);
                     auto r1 = bicat::validate_transformation(om.omega);
                     rep.absorb(r1);
                     auto fb = comma::comma(
                         pr.F, LaxMorphism::identity(pr.F.dst, Dir::Oplax));
                     auto om2 = comma::omega_lower(fb, pr.F);
                     auto r2 = bicat::validate_transformation(om2.omega);
                     rep.absorb(r2);
                     return from_report(rep);
                   }});
}

void nerve_checks(const Corpus& c, const SuiteOptions& opt,
                  std::vector<Check>& out) {
  using nerve::Variant;
  for (const auto& nb : c.bicategories)
    for (auto v : {Variant::Lax, Variant::NormalLax, Variant::Oplax,
                   Variant::NormalOplax}) {
      std::string vn = v == Variant::Lax          ? "lax"
                       : v == Variant::NormalLax  ? "normal-lax"
                       : v == Variant::Oplax      ? "oplax"
                                                  : "normal-oplax";
      out.push_back({"geom-nerve:" + nb.name + ":" + vn,
                     "simplicial identities of the geometric nerve (N = 4)",
                     [b = nb.b, v, &opt]() {
                       auto gn = nerve::geometric_nerve(b, v, 4, opt.max_cells);
                       return from_report(nerve::validate_simplicial(gn.sset));
                     }});
    }
  out.push_back({"geom-nerve:discrete-agrees-with-ordinary",
                 "nerves of a discrete bicategory reduce to the ordinary nerve",
                 [&opt]() -> std::pair<bool, std::string> {
                   auto e2 = alg::FiniteGroupoid::indiscrete(2);
                   auto b = bicat::discrete_bicategory(e2);
                   auto oracle = nerve::ordinary_nerve_sset(e2, 4);
                   for (auto v : {Variant::Lax, Variant::NormalLax,
                                  Variant::Oplax, Variant::NormalOplax}) {
                     auto gn = nerve::geometric_nerve(b, v, 4, opt.max_cells);
                     for (int n = 0; n <= 4; ++n)
                       if (gn.sset.size(n) != oracle.size(n))
                         return {false, "cell count mismatch at dim " +
                                            std::to_string(n)};
                   }
                   return {true, ""};
                 }});
  for (const auto& nb : c.bicategories)
    out.push_back(
        {"nerve-inclusion:" + nb.name,
         "the normal nerves include injectively into the full ones",
         [b = nb.b, &opt]() {
           ValidationReport rep;
           rep.subject = b->name;
           auto full = nerve::geometric_nerve(b, Variant::Lax, 3, opt.max_cells);
           auto norm =
               nerve::geometric_nerve(b, Variant::NormalLax, 3, opt.max_cells);
           std::vector<std::vector<int>> m(4);
           for (int n = 0; n <= 3; ++n)
             for (int x = 0; x < norm.sset.size(n); ++x)
               m[n].push_back(full.index_of(n, norm.sset.cells[n][x]));
           auto r = nerve::check_simplicial_injection(norm.sset, full.sset, m);
           rep.absorb(r);
           return from_report(rep);
         }});
  // naturality of the inclusion on a strict pair, lax and oplax sides
  out.push_back(
      {"nerve-inclusion:naturality",
       "nerve inclusions commute with the maps induced by normal morphisms",
       [&c, &opt]() -> std::pair<bool, std::string> {
         int done = 0;
         for (const auto& pr : c.lax_pairs) {
           const auto& F = pr.F;
           if (!F.normal()) continue;
           auto full_s =
               nerve::geometric_nerve(F.src, Variant::Lax, 3, opt.max_cells);
           auto norm_s =
               nerve::geometric_nerve(F.src, Variant::NormalLax, 3, opt.max_cells);
           auto full_d =
               nerve::geometric_nerve(F.dst, Variant::Lax, 3, opt.max_cells);
           auto norm_d =
               nerve::geometric_nerve(F.dst, Variant::NormalLax, 3, opt.max_cells);
           for (int n = 0; n <= 3; ++n)
             for (int x = 0; x < norm_s.sset.size(n); ++x) {
               auto img = nerve::compose_simplex(F, norm_s.simplices[n][x]);
               // through the inclusion then the induced map on full nerves
               int via_full = full_d.index_of(n, img.key());
               int via_norm = norm_d.index_of(n, img.key());
               if (full_d.sset.cells[n][via_full] !=
                   norm_d.sset.cells[n][via_norm])
                 return {false, "naturality square broken at dim " +
                                    std::to_string(n)};
             }
           ++done;
         }
         return {done > 0, done > 0 ? "" : "no normal morphisms in the corpus"};
       }});
  // Kan behaviour of nerves of groupoids vs plain categories
  out.push_back({"kan:groupoid-vs-category",
                 "groupoid nerves fill all horns; a non-groupoid misses one",
                 []() -> std::pair<bool, std::string> {
                   auto e2 = alg::FiniteGroupoid::indiscrete(2);
                   auto gn = nerve::ordinary_nerve_sset(e2, 3);
                   for (int n = 1; n <= 3; ++n)
                     for (int k = 0; k <= n; ++k)
                       if (!nerve::kan_check(gn, n, k).all_filled())
                         return {false, "groupoid horn unfilled"};
                   auto arrow = alg::FiniteCategory::simplex(1);
                   auto an = nerve::ordinary_nerve_sset(arrow, 3);
                   bool outer_fails = !nerve::kan_check(an, 2, 0).all_filled() ||
                                      !nerve::kan_check(an, 2, 2).all_filled();
                   if (!outer_fails) return {false, "outer horn unexpectedly filled"};
                   if (!nerve::kan_check(an, 2, 1).all_filled())
                     return {false, "inner horn of a nerve must fill"};
                   return {true, ""};
                 }});
}

void appendix_checks(const Corpus& c, const SuiteOptions& opt,
                     std::vector<Check>& out) {
  // adjunction checks per graph x small bicategory
  std::vector<Corpus::NamedBicat> small;
  for (const auto& nb : c.bicategories)
    if (nb.b->n1() <= 4 && nb.b->n_obj() <= 2) small.push_back(nb);
  for (const auto& g : c.graphs)
    for (const auto& nb : small)
      out.push_back({"adjunction:" + g.name + ":" + nb.name,
                     "free regeneration is left adjoint to restriction "
                     "(RJ = 1, nu J = 1, R nu = 1)",
                     [g, b = nb.b, &opt]() {
                       return from_report(
                           nerve::check_graph_adjunction(g, b, opt.max_cells));
                     }});
  for (const auto& nb : small)
    for (int p = 0; p <= 3; ++p)
      out.push_back({"level-adjunction:" + nb.name + ":p" + std::to_string(p),
                     "hom-set bijection of the level adjunction",
                     [b = nb.b, p, &opt]() {
                       return from_report(
                           nerve::check_level_adjunction(b, p, opt.max_cells));
                     }});
  for (const auto& nb : c.bicategories)
    out.push_back({"pseudo-simplicial:" + nb.name,
                   "pseudo-simplicial nerve constraint cocycle (N = 3)",
                   [b = nb.b, &opt]() {
                     auto psn = nerve::grothendieck_nerve(b, 3, opt.max_cells);
                     return from_report(nerve::check_grothendieck_nerve(psn));
                   }});
  for (const auto& pr : c.lax_pairs)
    out.push_back({"nerve-functoriality:" + pr.name,
                   "induced simplicial maps compose strictly",
                   [pr, &opt]() {
                     auto nb = nerve::grothendieck_nerve(pr.F.src, 2, opt.max_cells);
                     auto nc = nerve::grothendieck_nerve(pr.F.dst, 2, opt.max_cells);
                     auto nd = nerve::grothendieck_nerve(pr.G.dst, 2, opt.max_cells);
                     auto rep =
                         nerve::check_nerve_functoriality(pr.F, pr.G, nb, nc, nd);
                     auto nf = nerve::nerve_of_lax(pr.F, nb, nc);
                     auto r2 = nerve::check_nerve_of_lax(nf);
                     rep.absorb(r2);
                     return from_report(rep);
                   }});
  for (const auto& nb : small)
    out.push_back({"icon-projection:" + nb.name,
                   "icon categories project laxly onto the nerve levels",
                   [b = nb.b, &opt]() {
                     return from_report(
                         nerve::check_nerve_projection(b, 2, opt.max_cells));
                   }});
}

void xmod_checks(const Corpus& c, const SuiteOptions& opt,
                 std::vector<Check>& out) {
  for (const auto& e : c.xmods) {
    out.push_back({"xmod-core:" + e.name,
                   "boundary kernel central, image normal, groups well-formed",
                   [x = e.x]() {
                     ValidationReport rep = xmod::validate_xmod(*x);
                     // pi computes Coker/Ker; quotient construction throws if
                     // the image fails to be normal
                     auto prof = xmod::pi(*x);
                     for (const auto& g : prof.pi2)
                       if (!g.is_abelian()) rep.fail("pi2-not-abelian", g.name);
                     return from_report(rep);
                   }});
    out.push_back({"beta-roundtrip:" + e.name,
                   "the 2-groupoid correspondence is invertible up to isomorphism",
                   [x = e.x]() {
                     auto rep = xmod::check_beta_roundtrip(*x);
                     auto b = xmod::beta(*x);
                     auto r2 = xmod::check_beta_inverse_roundtrip(*b.bi);
                     rep.absorb(r2);
                     return from_report(rep);
                   }});
    out.push_back({"nerve-comparison:" + e.name,
                   "unitary geometric nerve of beta matches the crossed-module "
                   "nerve through dimension 4",
                   [x = e.x, &opt]() {
                     return from_report(xmod::compare_nerves(*x, 4, opt.max_cells));
                   }});
    out.push_back({"kan:" + e.name,
                   "crossed-module nerves fill all horns for n <= 3",
                   [x = e.x, &opt]() -> std::pair<bool, std::string> {
                     auto nx = xmod::xmod_nerve(*x, 4, opt.max_cells);
                     for (int n = 1; n <= 3; ++n)
                       for (int k = 0; k <= n; ++k) {
                         auto rep = nerve::kan_check(nx.sset, n, k);
                         if (!rep.all_filled())
                           return {false, "unfilled horn (n=" + std::to_string(n) +
                                              ",k=" + std::to_string(k) + ")"};
                       }
                     return {true, ""};
                   }});
    out.push_back({"loops:" + e.name,
                   "loop groupoid components and isotropy recover pi1 and pi2",
                   [x = e.x]() -> std::pair<bool, std::string> {
                     for (int a = 0; a < x->base().n_obj(); ++a) {
                       auto eg = xmod::endo_groupoid(*x, a);
                       if (!eg.report.ok()) return {false, eg.report.summary()};
                     }
                     return {true, ""};
                   }});
  }
  for (const auto& pr : c.xmod_pairs) {
    out.push_back({"hpb:" + pr.name,
                   "homotopy pullback crossed module and its projections validate",
                   [pr]() {
                     auto hpb = xmod::homotopy_pullback_xmod(pr.m1, pr.m2);
                     auto rep = xmod::validate_xmod(*hpb.x);
                     auto r1 = xmod::validate_xmod_morphism(hpb.proj1);
                     auto r2 = xmod::validate_xmod_morphism(hpb.proj2);
                     rep.absorb(r1);
                     rep.absorb(r2);
                     return from_report(rep);
                   }});
    out.push_back({"pullback:" + pr.name,
                   "strict pullback and the canonical comparison validate",
                   [pr]() {
                     auto pb = xmod::pullback_xmod(pr.m1, pr.m2);
                     auto hpb = xmod::homotopy_pullback_xmod(pr.m1, pr.m2);
                     auto rep = xmod::validate_xmod(*pb.x);
                     auto J = xmod::canonical_comparison(pb, hpb, pr.m1, pr.m2);
                     auto r = xmod::validate_xmod_morphism(J);
                     rep.absorb(r);
                     return from_report(rep);
                   }});
    if (pr.has_fibration_leg)
      out.push_back(
          {"fibration-comparison:" + pr.name,
           "with a fibration leg the canonical comparison is a pi-equivalence",
           [pr]() -> std::pair<bool, std::string> {
             bool f1 = xmod::fibration_xmod(pr.m1);
             bool f2 = xmod::fibration_xmod(pr.m2);
             if (!f1 && !f2) return {false, "no fibration leg after all"};
             auto pb = xmod::pullback_xmod(pr.m1, pr.m2);
             auto hpb = xmod::homotopy_pullback_xmod(pr.m1, pr.m2);
             auto J = xmod::canonical_comparison(pb, hpb, pr.m1, pr.m2);
             auto we = xmod::weak_equivalence(J);
             if (we.is_weak_equivalence) return {true, ""};
             std::string w;
             for (const auto& s : we.witnesses) w += s + "; ";
             return {false, w};
           }});
  }
}

void mv_checks(const Corpus& c, std::vector<Check>& out) {
  for (const auto& pr : c.xmod_pairs)
    out.push_back({"mayer-vietoris:" + pr.name,
                   "long-sequence exactness at every joint",
                   [pr]() -> std::pair<bool, std::string> {
                     auto rep = xmod::mv_check(pr.m1, pr.m2, pr.bp_a, pr.bp_ap);
                     if (rep.exact) return {true, ""};
                     std::string w;
                     for (const auto& s : rep.failures) w += s + "; ";
                     return {false, w};
                   }});
}

void monoidal_checks(const Corpus& c, std::vector<Check>& out) {
  for (const auto& pr : c.monoidal_pairs)
    out.push_back({"fibre-identification:" + pr.name,
                   "the tensor fibre product equals the comma of deloopings",
                   [pr]() {
                     return from_report(
                         monoidal::check_fibre_identification(pr.F, pr.Fp));
                   }});
  for (const auto& e : c.monoidals) {
    bool discrete_group = e.name.find("Disc") != std::string::npos;
    if (discrete_group)
      out.push_back({"regularity:" + e.name,
                     "finite-group deloopings are regular categorical groups",
                     [m = e.m]() -> std::pair<bool, std::string> {
                       auto res = monoidal::regularity_check(*m);
                       if (res.regular && res.categorical_group) return {true, ""};
                       std::string w;
                       for (const auto& s : res.witnesses) w += s + "; ";
                       return {false, w};
                     }});
  }
  out.push_back({"regularity:truncated-monoid",
                 "a non-group monoid is reported non-regular",
                 []() -> std::pair<bool, std::string> {
                   auto res = monoidal::regularity_check(
                       monoidal::MonoidalCategory::truncated_addition(3));
                   return {!res.regular, res.regular ? "unexpectedly regular" : ""};
                 }});
  out.push_back(
      {"tensor-translation:skew",
       "tensor translations are strict 2-endofunctors of the unit fibres",
       [&c]() {
         ValidationReport rep;
         rep.subject = "tensor-translation";
         for (const auto& e : c.monoidals) {
           if (e.m->cat.n_obj() > 2) continue;
           bool invertible = true;
           for (int u = 0; u < e.m->cat.n_mor(); ++u) {
             bool ok = false;
             for (int v : e.m->cat.hom(e.m->cat.mors[u].dst, e.m->cat.mors[u].src))
               if (e.m->cat.compose(v, u) ==
                       e.m->cat.identity[e.m->cat.mors[u].src] &&
                   e.m->cat.compose(u, v) ==
                       e.m->cat.identity[e.m->cat.mors[u].dst])
                 ok = true;
             if (!ok) invertible = false;
           }
           if (!invertible) continue;  // translations need the unit isos only,
                                       // but keep to group-like instances
           auto f = monoidal::monoidal_identity(e.m, e.sigma);
           auto unit = monoidal::unit_monoidal_functor(e.m, e.sigma);
           auto fib_l = monoidal::monoidal_fibre(f, unit);
           auto fib_r = monoidal::monoidal_fibre(unit, f);
           for (int m0 = 0; m0 < e.m->cat.n_obj(); ++m0) {
             auto tl = monoidal::tensor_translation(*e.m, m0,
                                                    monoidal::Side::Left, f, fib_l);
             auto r1 = bicat::validate_lax(tl);
             rep.absorb(r1);
             if (!tl.strict()) rep.fail("left-translation-not-strict", e.name);
             auto tr = monoidal::tensor_translation(
                 *e.m, m0, monoidal::Side::Right, f, fib_r);
             auto r2 = bicat::validate_lax(tr);
             rep.absorb(r2);
           }
         }
         return from_report(rep);
       }});
}

}  // namespace

std::vector<std::string> suite_names() {
  return {"axioms", "comma", "nerve", "appendix", "xmod", "mv", "monoidal", "all"};
}

SuiteResult run_suite(const std::string& name, const SuiteOptions& opt) {
  CorpusSpec spec;
  spec.seed = opt.seed;
  spec.max_cells = opt.max_cells;
  Corpus corpus = generate_corpus(spec);

  std::vector<Check> checks;
  bool all = name == "all";
  if (all || name == "axioms") axioms_checks(corpus, opt, checks);
  if (all || name == "comma") comma_checks(corpus, opt, checks);
  if (all || name == "nerve") nerve_checks(corpus, opt, checks);
  if (all || name == "appendix") appendix_checks(corpus, opt, checks);
  if (all || name == "xmod") xmod_checks(corpus, opt, checks);
  if (all || name == "mv") mv_checks(corpus, checks);
  if (all || name == "monoidal") monoidal_checks(corpus, checks);
  if (checks.empty() && !all)
    throw std::invalid_argument("unknown suite: " + name);

  SuiteResult out;
  out.suite = name;
  run_all(checks, out, opt.jobs);
  return out;
}

nlohmann::json report_json(const SuiteResult& r, const SuiteOptions& opt) {
  nlohmann::json j;
  j["schema"] = "report.v1";
  j["suite"] = r.suite;
  j["seed"] = opt.seed;
  j["options"] = {{"max_cells", opt.max_cells}, {"jobs", opt.jobs}};
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : r.checks) {
    nlohmann::json e;
    e["name"] = c.name;
    e["law"] = c.law;
    e["status"] = c.pass ? "pass" : "fail";
    e["details"] = c.details;
    checks.push_back(e);
  }
  j["checks"] = checks;
  j["summary"] = {{"total", r.checks.size()},
                  {"failed", r.failed()},
                  {"status", r.ok() ? "pass" : "fail"}};
  return j;
}

}  // namespace hofib::wb
