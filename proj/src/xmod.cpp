#include "hofib/xmod.hpp"

#include "hofib/nerve.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

namespace hofib::xmod {

using alg::FinGroup;
using alg::FiniteGroupoid;
using alg::GroupHom;
using bicat::FiniteBicategory;

// --- constructors ------------------------------------------------------------

CrossedModule CrossedModule::trivial_fibers(
    std::shared_ptr<const FiniteGroupoid> p, const Id& name) {
  CrossedModule x;
  x.name = name;
  x.g = alg::PGroup::trivial(p);
  x.boundary.resize(p->n_obj());
  for (int a = 0; a < p->n_obj(); ++a) x.boundary[a] = {p->identity[a]};
  return x;
}

CrossedModule CrossedModule::abelian(const FinGroup& a) {
  auto pt = std::make_shared<FiniteGroupoid>(
      FiniteGroupoid::from_group(FinGroup::trivial()));
  CrossedModule x;
  x.name = "(" + a.name + ",1,0)";
  x.g = alg::PGroup::constant(pt, a);
  x.boundary = {std::vector<int>(a.size(), pt->identity[0])};
  return x;
}

CrossedModule CrossedModule::conjugation(const FinGroup& g) {
  auto base = std::make_shared<FiniteGroupoid>(FiniteGroupoid::from_group(g));
  CrossedModule x;
  x.name = "(" + g.name + "," + g.name + ",id)";
  x.g.name = x.name + ".fibers";
  x.g.base = base;
  x.g.fiber.assign(1, g);
  x.g.action.resize(g.size());
  for (int h = 0; h < g.size(); ++h) {
    x.g.action[h].resize(g.size());
    for (int e = 0; e < g.size(); ++e)
      x.g.action[h][e] = g.op(g.op(h, e), g.inv[h]);
  }
  x.boundary.resize(1);
  x.boundary[0].resize(g.size());
  for (int e = 0; e < g.size(); ++e) x.boundary[0][e] = e;
  return x;
}

XmodMorphism XmodMorphism::identity(std::shared_ptr<const CrossedModule> x) {
  XmodMorphism m;
  m.name = "1_" + x->name;
  m.src = m.dst = x;
  m.F = alg::GroupoidFunctor::identity(x->g.base);
  for (int a = 0; a < x->base().n_obj(); ++a) {
    GroupHom h(x->g.fiber[a].size());
    for (std::size_t i = 0; i < h.size(); ++i) h[i] = static_cast<int>(i);
    m.phi.push_back(std::move(h));
  }
  return m;
}

// --- validation ----------------------------------------------------------------

ValidationReport validate_xmod(const CrossedModule& x) {
  ValidationReport rep;
  rep.subject = x.name;
  auto base_rep = alg::validate_groupoid(x.base());
  rep.absorb(base_rep);
  x.g.check(rep);
  if (!rep.schema_errors.empty()) return rep;
  const auto& P = x.base();
  if (static_cast<int>(x.boundary.size()) != P.n_obj()) {
    rep.schema("boundary-shape", x.name);
    return rep;
  }
  for (int a = 0; a < P.n_obj(); ++a) {
    if (static_cast<int>(x.boundary[a].size()) != x.g.fiber[a].size()) {
      rep.schema("boundary-shape", P.objects[a]);
      return rep;
    }
    for (int e : x.boundary[a])
      if (e < 0 || e >= P.n_mor() || P.mors[e].src != a || P.mors[e].dst != a) {
        rep.schema("boundary-not-endo", P.objects[a]);
        return rep;
      }
  }
  for (int a = 0; a < P.n_obj(); ++a) {
    const auto& G = x.g.fiber[a];
    for (int g1 = 0; g1 < G.size(); ++g1)
      for (int g2 = 0; g2 < G.size(); ++g2)
        if (x.dd(a, G.op(g1, g2)) != P.compose(x.dd(a, g1), x.dd(a, g2)))
          rep.fail("boundary-not-homomorphism",
                   tup({P.objects[a], G.elems[g1], G.elems[g2]}));
    if (x.dd(a, G.unit) != P.identity[a]) rep.fail("boundary-unit", P.objects[a]);
  }
  for (int p = 0; p < P.n_mor(); ++p) {
    int a = P.mors[p].src, b = P.mors[p].dst;
    for (int g = 0; g < x.g.fiber[a].size(); ++g) {
      int lhs = x.dd(b, x.g.act(p, g));
      int rhs = P.compose(P.compose(p, x.dd(a, g)), P.inverse[p]);
      if (lhs != rhs)
        rep.fail("equivariance", tup({P.mors[p].id, x.g.fiber[a].elems[g]}),
                 P.mors[lhs].id, P.mors[rhs].id);
    }
  }
  for (int a = 0; a < P.n_obj(); ++a) {
    const auto& G = x.g.fiber[a];
    for (int g = 0; g < G.size(); ++g)
      for (int gp = 0; gp < G.size(); ++gp) {
        int lhs = x.g.act(x.dd(a, g), gp);
        int rhs = G.op(G.op(g, gp), G.inv[g]);
        if (lhs != rhs)
          rep.fail("peiffer", tup({P.objects[a], G.elems[g], G.elems[gp]}),
                   G.elems[lhs], G.elems[rhs]);
      }
  }
  if (!rep.ok()) return rep;
  // consequence: Ker dd is central
  for (int a = 0; a < P.n_obj(); ++a) {
    const auto& G = x.g.fiber[a];
    for (int g = 0; g < G.size(); ++g) {
      if (x.dd(a, g) != P.identity[a]) continue;
      for (int h = 0; h < G.size(); ++h)
        if (G.op(g, h) != G.op(h, g))
          rep.fail("kernel-not-central",
                   tup({P.objects[a], G.elems[g], G.elems[h]}));
    }
  }
  return rep;
}

ValidationReport validate_xmod_morphism(const XmodMorphism& m) {
  ValidationReport rep;
  rep.subject = m.name.empty() ? "xmod-morphism" : m.name;
  m.F.check(rep);
  if (!rep.ok()) return rep;
  const auto& P = m.src->base();
  for (int a = 0; a < P.n_obj(); ++a) {
    int fa = m.F.obj_map[a];
    if (!alg::is_homomorphism(m.src->g.fiber[a], m.dst->g.fiber[fa], m.phi[a]))
      rep.fail("phi-not-homomorphism", P.objects[a]);
  }
  if (!rep.ok()) return rep;
  for (int p = 0; p < P.n_mor(); ++p) {
    int a = P.mors[p].src, b = P.mors[p].dst;
    for (int g = 0; g < m.src->g.fiber[a].size(); ++g)
      if (m.phi[b][m.src->g.act(p, g)] !=
          m.dst->g.act(m.F.mor_map[p], m.phi[a][g]))
        rep.fail("phi-naturality", P.mors[p].id);
  }
  for (int a = 0; a < P.n_obj(); ++a)
    for (int g = 0; g < m.src->g.fiber[a].size(); ++g)
      if (m.F.mor_map[m.src->dd(a, g)] != m.dst->dd(m.F.obj_map[a], m.phi[a][g]))
        rep.fail("boundary-square",
                 tup({P.objects[a], m.src->g.fiber[a].elems[g]}));
  return rep;
}

ValidationReport validate_two_groupoid(const FiniteBicategory& b) {
  ValidationReport rep = validate_bicategory(b);
  rep.subject = b.name + ":two-groupoid";
  if (!rep.ok()) return rep;
  for (const auto& [k, v] : b.assoc_)
    if (v != b.id2[b.cells2[v].src]) rep.fail("assoc-not-identity", b.cells2[v].id);
  for (int f = 0; f < b.n1(); ++f) {
    if (b.lunit[f] != b.id2[b.cells2[b.lunit[f]].src])
      rep.fail("lunit-not-identity", b.cells1[f].id);
    if (b.runit[f] != b.id2[b.cells2[b.runit[f]].src])
      rep.fail("runit-not-identity", b.cells1[f].id);
    bool invertible = false;
    for (int g : b.hom1(b.cells1[f].dst, b.cells1[f].src))
      if (b.hcomp1(f, g) == b.id1[b.cells1[f].dst] &&
          b.hcomp1(g, f) == b.id1[b.cells1[f].src])
        invertible = true;
    if (!invertible) rep.fail("1-cell-not-invertible", b.cells1[f].id);
  }
  for (int c = 0; c < b.n2(); ++c)
    if (b.inv2(c) < 0) rep.fail("2-cell-not-invertible", b.cells2[c].id);
  return rep;
}

// --- beta ------------------------------------------------------------------------

int BetaResult::find_two(int src1, int dst1, int gelem) const {
  for (int t = 0; t < bi->n2(); ++t)
    if (bi->cells2[t].src == src1 && bi->cells2[t].dst == dst1 &&
        two_elem[t] == gelem)
      return t;
  throw std::out_of_range("beta: 2-cell not found");
}

BetaResult beta(const CrossedModule& x) {
  const auto& P = x.base();
  BetaResult out;
  out.bi = std::make_shared<FiniteBicategory>();
  auto& b = *out.bi;
  b.name = "beta(" + x.name + ")";
  b.objects = P.objects;
  for (const auto& m : P.mors) b.cells1.push_back({m.id, m.src, m.dst});
  b.id1 = P.identity;

  std::map<std::array<int, 3>, int> tix;
  for (int q = 0; q < P.n_mor(); ++q)
    for (int pbar = 0; pbar < P.n_mor(); ++pbar) {
      if (P.mors[q].src != P.mors[pbar].src || P.mors[q].dst != P.mors[pbar].dst)
        continue;
      int a = P.mors[q].src;
      for (int g = 0; g < x.g.fiber[a].size(); ++g) {
        if (P.compose(pbar, x.dd(a, g)) != q) continue;
        tix[{q, pbar, g}] = b.n2();
        out.two_elem.push_back(g);
        b.cells2.push_back(
            {tup({P.mors[q].id, P.mors[pbar].id, x.g.fiber[a].elems[g]}), q, pbar});
      }
    }
  b.id2.resize(b.n1());
  for (int f = 0; f < b.n1(); ++f)
    b.id2[f] = tix.at({f, f, x.g.fiber[P.mors[f].src].unit});
  for (int t2 = 0; t2 < b.n2(); ++t2)
    for (int t1 = 0; t1 < b.n2(); ++t1) {
      if (b.cells2[t1].dst == b.cells2[t2].src) {
        int a = P.mors[b.cells2[t1].src].src;
        int g = x.g.fiber[a].op(out.two_elem[t2], out.two_elem[t1]);
        b.set_vcomp(t2, t1, tix.at({b.cells2[t1].src, b.cells2[t2].dst, g}));
      }
      if (b.h_composable2(t2, t1)) {
        int a0 = P.mors[b.cells2[t1].src].src;
        int pbar1 = b.cells2[t1].dst;
        int moved = x.g.act(P.inverse[pbar1], out.two_elem[t2]);
        int g = x.g.fiber[a0].op(moved, out.two_elem[t1]);
        int s = P.compose(b.cells2[t2].src, b.cells2[t1].src);
        int d = P.compose(b.cells2[t2].dst, b.cells2[t1].dst);
        b.set_hcomp2(t2, t1, tix.at({s, d, g}));
      }
    }
  for (int g2 = 0; g2 < b.n1(); ++g2)
    for (int f1 = 0; f1 < b.n1(); ++f1)
      if (b.h_composable1(g2, f1)) b.set_hcomp1(g2, f1, P.compose(g2, f1));
  for (int f3 = 0; f3 < b.n1(); ++f3)
    for (int f2 = 0; f2 < b.n1(); ++f2) {
      if (!b.h_composable1(f3, f2)) continue;
      for (int f1 = 0; f1 < b.n1(); ++f1)
        if (b.h_composable1(f2, f1))
          b.set_assoc(f3, f2, f1, b.id2[P.compose(P.compose(f3, f2), f1)]);
    }
  b.lunit.resize(b.n1());
  b.runit.resize(b.n1());
  for (int f = 0; f < b.n1(); ++f) {
    b.lunit[f] = b.id2[f];
    b.runit[f] = b.id2[f];
  }
  b.finalize();
  return out;
}

bicat::LaxMorphism beta_on_morphism(const XmodMorphism& m, const BetaResult& bsrc,
                                    const BetaResult& bdst) {
  bicat::LaxMorphism f;
  f.name = "beta(" + m.name + ")";
  f.dir = bicat::Dir::Lax;
  f.src = bsrc.bi;
  f.dst = bdst.bi;
  f.map0 = m.F.obj_map;
  f.map1 = m.F.mor_map;
  const auto& P = m.src->base();
  for (int t = 0; t < bsrc.bi->n2(); ++t) {
    int a = P.mors[bsrc.bi->cells2[t].src].src;
    f.map2.push_back(bdst.find_two(f.map1[bsrc.bi->cells2[t].src],
                                   f.map1[bsrc.bi->cells2[t].dst],
                                   m.phi[a][bsrc.two_elem[t]]));
  }
  for (int g = 0; g < bsrc.bi->n1(); ++g)
    for (int h = 0; h < bsrc.bi->n1(); ++h)
      if (bsrc.bi->h_composable1(g, h))
        f.set_comp_cell(g, h, bdst.bi->id2[bdst.bi->hcomp1(f.map1[g], f.map1[h])]);
  for (int a = 0; a < bsrc.bi->n_obj(); ++a)
    f.unit_cell.push_back(bdst.bi->id2[bdst.bi->id1[f.map0[a]]]);
  return f;
}

CrossedModule beta_inverse(const FiniteBicategory& k, const Id& name) {
  auto tg = validate_two_groupoid(k);
  if (!tg.ok())
    throw std::invalid_argument(
        "beta_inverse: input is not a strict 2-groupoid: " + tg.summary());
  auto P = std::make_shared<FiniteGroupoid>();
  P->name = name + ".base";
  P->objects = k.objects;
  for (const auto& c : k.cells1) P->mors.push_back({c.id, c.src, c.dst});
  P->identity = k.id1;
  for (int g = 0; g < k.n1(); ++g)
    for (int f = 0; f < k.n1(); ++f)
      if (k.h_composable1(g, f)) P->set_comp(g, f, k.hcomp1(g, f));
  P->inverse.assign(k.n1(), -1);
  for (int f = 0; f < k.n1(); ++f)
    for (int g : k.hom1(k.cells1[f].dst, k.cells1[f].src))
      if (k.hcomp1(f, g) == k.id1[k.cells1[f].dst] &&
          k.hcomp1(g, f) == k.id1[k.cells1[f].src]) {
        P->inverse[f] = g;
        break;
      }

  CrossedModule x;
  x.name = name;
  x.g.name = name + ".fibers";
  x.g.base = P;
  std::vector<std::vector<int>> elems(P->n_obj());
  std::vector<int> fiber_ix(k.n2(), -1);
  for (int t = 0; t < k.n2(); ++t) {
    int a = k.cells1[k.cells2[t].src].src;
    if (k.cells2[t].dst == k.id1[a]) {
      fiber_ix[t] = static_cast<int>(elems[a].size());
      elems[a].push_back(t);
    }
  }
  for (int a = 0; a < P->n_obj(); ++a) {
    FinGroup G;
    G.name = name + ".G(" + P->objects[a] + ")";
    const int n = static_cast<int>(elems[a].size());
    G.mul.assign(n, std::vector<int>(n, -1));
    G.inv.assign(n, -1);
    for (int i = 0; i < n; ++i) G.elems.push_back(k.cells2[elems[a][i]].id);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        int prod = k.hcomp2(elems[a][i], elems[a][j]);
        if (fiber_ix[prod] < 0)
          throw std::invalid_argument("beta_inverse: fiber not closed");
        G.mul[i][j] = fiber_ix[prod];
      }
    G.unit = fiber_ix[k.id2[k.id1[a]]];
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (G.mul[i][j] == G.unit && G.mul[j][i] == G.unit) G.inv[i] = j;
    x.g.fiber.push_back(std::move(G));
  }
  x.g.action.resize(P->n_mor());
  for (int p = 0; p < P->n_mor(); ++p) {
    int a = P->mors[p].src;
    x.g.action[p].resize(elems[a].size());
    for (std::size_t i = 0; i < elems[a].size(); ++i) {
      int moved = k.hcomp2(k.hcomp2(k.id2[p], elems[a][i]), k.id2[P->inverse[p]]);
      if (fiber_ix[moved] < 0)
        throw std::invalid_argument("beta_inverse: transport leaves the fiber");
      x.g.action[p][i] = fiber_ix[moved];
    }
  }
  x.boundary.resize(P->n_obj());
  for (int a = 0; a < P->n_obj(); ++a)
    for (int t : elems[a]) x.boundary[a].push_back(k.cells2[t].src);
  return x;
}

ValidationReport check_beta_roundtrip(const CrossedModule& x) {
  ValidationReport rep;
  rep.subject = "beta-roundtrip(" + x.name + ")";
  auto b = beta(x);
  auto tg = validate_two_groupoid(*b.bi);
  rep.absorb(tg);
  if (!rep.ok()) return rep;
  CrossedModule y = beta_inverse(*b.bi, x.name + "~");
  auto yrep = validate_xmod(y);
  rep.absorb(yrep);
  const auto& P = x.base();
  const auto& Py = y.base();
  if (P.n_obj() != Py.n_obj() || P.n_mor() != Py.n_mor()) {
    rep.fail("base-mismatch", rep.subject);
    return rep;
  }
  for (int m2 = 0; m2 < P.n_mor(); ++m2)
    for (int m1 = 0; m1 < P.n_mor(); ++m1)
      if (P.composable(m2, m1) && P.compose(m2, m1) != Py.compose(m2, m1))
        rep.fail("base-composition", tup({P.mors[m2].id, P.mors[m1].id}));
  auto iso_at = [&](int a, int g) {
    int t = b.find_two(x.dd(a, g), P.identity[a], g);
    for (std::size_t i = 0; i < y.g.fiber[a].elems.size(); ++i)
      if (y.g.fiber[a].elems[i] == b.bi->cells2[t].id) return static_cast<int>(i);
    return -1;
  };
  for (int a = 0; a < P.n_obj(); ++a) {
    const auto& G = x.g.fiber[a];
    if (G.size() != y.g.fiber[a].size()) {
      rep.fail("fiber-size", P.objects[a]);
      continue;
    }
    GroupHom iso(G.size());
    for (int g = 0; g < G.size(); ++g) {
      iso[g] = iso_at(a, g);
      if (iso[g] < 0) rep.fail("fiber-element-missing", G.elems[g]);
    }
    if (!rep.ok()) continue;
    if (!alg::is_isomorphism(G, y.g.fiber[a], iso))
      rep.fail("fiber-not-isomorphic", P.objects[a]);
    for (int g = 0; g < G.size(); ++g)
      if (y.dd(a, iso[g]) != x.dd(a, g)) rep.fail("boundary-mismatch", G.elems[g]);
    for (int p = 0; p < P.n_mor(); ++p) {
      if (P.mors[p].src != a) continue;
      int bx = P.mors[p].dst;
      for (int g = 0; g < G.size(); ++g)
        if (y.g.act(p, iso[g]) != iso_at(bx, x.g.act(p, g)))
          rep.fail("transport-mismatch", tup({P.mors[p].id, G.elems[g]}));
    }
  }
  return rep;
}

ValidationReport check_beta_inverse_roundtrip(const FiniteBicategory& k) {
  ValidationReport rep;
  rep.subject = "beta-inverse-roundtrip(" + k.name + ")";
  CrossedModule x = beta_inverse(k, k.name + "~");
  auto xrep = validate_xmod(x);
  rep.absorb(xrep);
  if (!rep.ok()) return rep;
  auto z = beta(x);
  const auto& Z = *z.bi;
  if (Z.n_obj() != k.n_obj() || Z.n1() != k.n1() || Z.n2() != k.n2()) {
    rep.fail("cell-counts", rep.subject);
    return rep;
  }
  const auto& P = x.base();
  std::vector<std::vector<int>> elems(P.n_obj());
  for (int a = 0; a < P.n_obj(); ++a)
    for (const auto& e : x.g.fiber[a].elems) elems[a].push_back(k.cell2_index(e));
  std::vector<int> m2(Z.n2(), -1);
  for (int t = 0; t < Z.n2(); ++t) {
    int a = P.mors[Z.cells2[t].src].src;
    int alpha = elems[a][z.two_elem[t]];
    m2[t] = k.hcomp2(k.id2[Z.cells2[t].dst], alpha);
  }
  std::vector<bool> hit(k.n2(), false);
  for (int t : m2) {
    if (hit[t]) rep.fail("2-cell-map-not-injective", rep.subject);
    hit[t] = true;
  }
  for (int t2 = 0; t2 < Z.n2(); ++t2)
    for (int t1 = 0; t1 < Z.n2(); ++t1) {
      if (Z.cells2[t1].dst == Z.cells2[t2].src &&
          m2[Z.vcomp(t2, t1)] != k.vcomp(m2[t2], m2[t1]))
        rep.fail("vcomp-mismatch", tup({Z.cells2[t2].id, Z.cells2[t1].id}));
      if (Z.h_composable2(t2, t1) &&
          m2[Z.hcomp2(t2, t1)] != k.hcomp2(m2[t2], m2[t1]))
        rep.fail("hcomp2-mismatch", tup({Z.cells2[t2].id, Z.cells2[t1].id}));
    }
  for (int f = 0; f < Z.n1(); ++f)
    if (m2[Z.id2[f]] != k.id2[f]) rep.fail("id2-mismatch", Z.cells1[f].id);
  return rep;
}

// --- homotopy pullback ------------------------------------------------------------

int HomotopyPullback::find_obj(int a, int q, int ap) const {
  for (std::size_t i = 0; i < obj.size(); ++i)
    if (obj[i] == std::array<int, 3>{a, q, ap}) return static_cast<int>(i);
  throw std::out_of_range("homotopy pullback: object not found");
}

int HomotopyPullback::find_mor(int src, int p, int h, int pp) const {
  const auto& P = x->base();
  for (int i = 0; i < P.n_mor(); ++i)
    if (P.mors[i].src == src && mor[i] == std::array<int, 3>{p, h, pp})
      return i;
  throw std::out_of_range("homotopy pullback: morphism not found");
}

HomotopyPullback homotopy_pullback_xmod(const XmodMorphism& m1,
                                        const XmodMorphism& m2) {
  if (m1.dst.get() != m2.dst.get())
    throw std::invalid_argument("homotopy_pullback_xmod: codomain mismatch");
  const auto& P = m1.src->base();
  const auto& Pp = m2.src->base();
  const auto& Q = m1.dst->base();
  const auto& H = m1.dst->g;

  HomotopyPullback out;
  auto base = std::make_shared<FiniteGroupoid>();
  base->name = "(" + m1.name + "|" + m2.name + ").base";
  std::map<std::array<int, 3>, int> oix;
  for (int a = 0; a < P.n_obj(); ++a)
    for (int ap = 0; ap < Pp.n_obj(); ++ap)
      for (int q : Q.hom(m1.F.obj_map[a], m2.F.obj_map[ap])) {
        oix[{a, q, ap}] = base->n_obj();
        out.obj.push_back({a, q, ap});
        base->objects.push_back(tup({P.objects[a], Q.mors[q].id, Pp.objects[ap]}));
      }
  std::map<std::array<int, 4>, int> mix;  // (srcObj, p, h, p')
  for (int X = 0; X < base->n_obj(); ++X) {
    auto [a0, q0, ap0] = out.obj[X];
    for (int p : P.mors_from(a0))
      for (int pp : Pp.mors_from(ap0)) {
        int a1 = P.mors[p].dst, ap1 = Pp.mors[pp].dst;
        for (int q1 : Q.hom(m1.F.obj_map[a1], m2.F.obj_map[ap1])) {
          int Y = oix.at({a1, q1, ap1});
          int needed = Q.compose(
              Q.inverse[m1.F.mor_map[p]],
              Q.compose(Q.inverse[q1], Q.compose(m2.F.mor_map[pp], q0)));
          int fa0 = m1.F.obj_map[a0];
          for (int h = 0; h < H.fiber[fa0].size(); ++h) {
            if (m1.dst->dd(fa0, h) != needed) continue;
            mix[{X, p, h, pp}] = base->n_mor();
            out.mor.push_back({p, h, pp});
            base->mors.push_back(
                {tup({base->objects[X], base->objects[Y], P.mors[p].id,
                      H.fiber[fa0].elems[h], Pp.mors[pp].id}),
                 X, Y});
          }
        }
      }
  }
  base->identity.resize(base->n_obj());
  for (int X = 0; X < base->n_obj(); ++X) {
    auto [a, q, ap] = out.obj[X];
    base->identity[X] =
        mix.at({X, P.identity[a], H.fiber[m1.F.obj_map[a]].unit, Pp.identity[ap]});
  }
  base->inverse.resize(base->n_mor());
  for (int m = 0; m < base->n_mor(); ++m) {
    int X = base->mors[m].src;
    auto [p, h, pp] = out.mor[m];
    int fa0 = m1.F.obj_map[out.obj[X][0]];
    int hinv = m1.dst->g.act(m1.F.mor_map[p], m1.dst->g.fiber[fa0].inv[h]);
    base->inverse[m] =
        mix.at({base->mors[m].dst, P.inverse[p], hinv, Pp.inverse[pp]});
    for (int n = 0; n < base->n_mor(); ++n) {
      if (base->mors[n].src != base->mors[m].dst) continue;
      auto [p2, h2, pp2] = out.mor[n];
      int moved = m1.dst->g.act(Q.inverse[m1.F.mor_map[p]], h2);
      int hc = m1.dst->g.fiber[fa0].op(moved, h);
      base->set_comp(n, m,
                     mix.at({X, P.compose(p2, p), hc, Pp.compose(pp2, pp)}));
    }
  }

  auto x = std::make_shared<CrossedModule>();
  x->name = "(" + m1.name + "|" + m2.name + ")";
  x->g.name = x->name + ".fibers";
  x->g.base = base;
  for (int X = 0; X < base->n_obj(); ++X) {
    auto [a, q, ap] = out.obj[X];
    x->g.fiber.push_back(
        FinGroup::direct_product(m1.src->g.fiber[a], m2.src->g.fiber[ap]));
  }
  x->g.action.resize(base->n_mor());
  for (int m = 0; m < base->n_mor(); ++m) {
    int X = base->mors[m].src, Y = base->mors[m].dst;
    auto [p, h, pp] = out.mor[m];
    auto [a0, q0, ap0] = out.obj[X];
    int n1 = m1.src->g.fiber[a0].size();
    int n2 = m2.src->g.fiber[ap0].size();
    int n2d = m2.src->g.fiber[out.obj[Y][2]].size();
    x->g.action[m].resize(n1 * n2);
    for (int g1 = 0; g1 < n1; ++g1)
      for (int g2 = 0; g2 < n2; ++g2)
        x->g.action[m][g1 * n2 + g2] =
            m1.src->g.act(p, g1) * n2d + m2.src->g.act(pp, g2);
  }
  x->boundary.resize(base->n_obj());
  for (int X = 0; X < base->n_obj(); ++X) {
    auto [a, q, ap] = out.obj[X];
    int fa = m1.F.obj_map[a];
    const auto& HF = m1.dst->g.fiber[fa];
    int n1 = m1.src->g.fiber[a].size();
    int n2 = m2.src->g.fiber[ap].size();
    x->boundary[X].resize(n1 * n2);
    for (int g1 = 0; g1 < n1; ++g1)
      for (int g2 = 0; g2 < n2; ++g2) {
        int hpart = HF.op(HF.inv[m1.phi[a][g1]],
                          m1.dst->g.act(Q.inverse[q], m2.phi[ap][g2]));
        x->boundary[X][g1 * n2 + g2] =
            mix.at({X, m1.src->dd(a, g1), hpart, m2.src->dd(ap, g2)});
      }
  }
  out.x = x;

  out.proj1.name = "proj1(" + x->name + ")";
  out.proj1.src = x;
  out.proj1.dst = m1.src;
  out.proj1.F.src = base;
  out.proj1.F.dst = m1.src->g.base;
  out.proj2.name = "proj2(" + x->name + ")";
  out.proj2.src = x;
  out.proj2.dst = m2.src;
  out.proj2.F.src = base;
  out.proj2.F.dst = m2.src->g.base;
  for (int X = 0; X < base->n_obj(); ++X) {
    out.proj1.F.obj_map.push_back(out.obj[X][0]);
    out.proj2.F.obj_map.push_back(out.obj[X][2]);
  }
  for (int m = 0; m < base->n_mor(); ++m) {
    out.proj1.F.mor_map.push_back(out.mor[m][0]);
    out.proj2.F.mor_map.push_back(out.mor[m][2]);
  }
  for (int X = 0; X < base->n_obj(); ++X) {
    auto [a, q, ap] = out.obj[X];
    int n1 = m1.src->g.fiber[a].size();
    int n2 = m2.src->g.fiber[ap].size();
    GroupHom h1(n1 * n2), h2(n1 * n2);
    for (int g1 = 0; g1 < n1; ++g1)
      for (int g2 = 0; g2 < n2; ++g2) {
        h1[g1 * n2 + g2] = g1;
        h2[g1 * n2 + g2] = g2;
      }
    out.proj1.phi.push_back(std::move(h1));
    out.proj2.phi.push_back(std::move(h2));
  }
  return out;
}

// --- strict pullback ----------------------------------------------------------------

StrictPullback pullback_xmod(const XmodMorphism& m1, const XmodMorphism& m2) {
  if (m1.dst.get() != m2.dst.get())
    throw std::invalid_argument("pullback_xmod: codomain mismatch");
  auto gp = alg::pullback_groupoid(m1.F, m2.F);
  StrictPullback out;
  out.obj = gp.obj_pair;
  out.mor = gp.mor_pair;
  auto x = std::make_shared<CrossedModule>();
  x->name = "(" + m1.name + "x" + m2.name + ")";
  x->g.name = x->name + ".fibers";
  x->g.base = gp.groupoid;
  out.fib.resize(gp.groupoid->n_obj());
  for (int X = 0; X < gp.groupoid->n_obj(); ++X) {
    auto [a, ap] = gp.obj_pair[X];
    const auto& G1 = m1.src->g.fiber[a];
    const auto& G2 = m2.src->g.fiber[ap];
    FinGroup G;
    G.name = x->name + ".G(" + gp.groupoid->objects[X] + ")";
    for (int g1 = 0; g1 < G1.size(); ++g1)
      for (int g2 = 0; g2 < G2.size(); ++g2)
        if (m1.phi[a][g1] == m2.phi[ap][g2]) {
          out.fib[X].push_back({g1, g2});
          G.elems.push_back(tup({G1.elems[g1], G2.elems[g2]}));
        }
    const int n = static_cast<int>(out.fib[X].size());
    auto find = [&](int g1, int g2) {
      for (int i = 0; i < n; ++i)
        if (out.fib[X][i] == std::make_pair(g1, g2)) return i;
      throw std::out_of_range("pullback fiber lookup");
    };
    G.mul.assign(n, std::vector<int>(n));
    G.inv.resize(n);
    for (int i = 0; i < n; ++i) {
      G.inv[i] = find(G1.inv[out.fib[X][i].first], G2.inv[out.fib[X][i].second]);
      for (int j = 0; j < n; ++j)
        G.mul[i][j] = find(G1.op(out.fib[X][i].first, out.fib[X][j].first),
                           G2.op(out.fib[X][i].second, out.fib[X][j].second));
    }
    G.unit = find(G1.unit, G2.unit);
    x->g.fiber.push_back(std::move(G));
  }
  x->g.action.resize(gp.groupoid->n_mor());
  for (int m = 0; m < gp.groupoid->n_mor(); ++m) {
    int X = gp.groupoid->mors[m].src, Y = gp.groupoid->mors[m].dst;
    auto [p, pp] = gp.mor_pair[m];
    x->g.action[m].resize(out.fib[X].size());
    for (std::size_t i = 0; i < out.fib[X].size(); ++i) {
      int g1 = m1.src->g.act(p, out.fib[X][i].first);
      int g2 = m2.src->g.act(pp, out.fib[X][i].second);
      int pos = -1;
      for (std::size_t j = 0; j < out.fib[Y].size(); ++j)
        if (out.fib[Y][j] == std::make_pair(g1, g2)) pos = static_cast<int>(j);
      x->g.action[m][i] = pos;
    }
  }
  x->boundary.resize(gp.groupoid->n_obj());
  for (int X = 0; X < gp.groupoid->n_obj(); ++X) {
    auto [a, ap] = gp.obj_pair[X];
    for (auto [g1, g2] : out.fib[X]) {
      int d1 = m1.src->dd(a, g1), d2 = m2.src->dd(ap, g2);
      int pos = -1;
      for (int m = 0; m < gp.groupoid->n_mor(); ++m)
        if (gp.mor_pair[m] == std::make_pair(d1, d2) &&
            gp.groupoid->mors[m].src == X)
          pos = m;
      x->boundary[X].push_back(pos);
    }
  }
  out.x = x;
  out.proj1.name = "p1(" + x->name + ")";
  out.proj1.src = x;
  out.proj1.dst = m1.src;
  out.proj1.F = gp.proj1;
  out.proj2.name = "p2(" + x->name + ")";
  out.proj2.src = x;
  out.proj2.dst = m2.src;
  out.proj2.F = gp.proj2;
  for (int X = 0; X < gp.groupoid->n_obj(); ++X) {
    GroupHom h1, h2;
    for (auto [g1, g2] : out.fib[X]) {
      h1.push_back(g1);
      h2.push_back(g2);
    }
    out.proj1.phi.push_back(std::move(h1));
    out.proj2.phi.push_back(std::move(h2));
  }
  return out;
}

XmodMorphism canonical_comparison(const StrictPullback& pb,
                                  const HomotopyPullback& hpb,
                                  const XmodMorphism& m1,
                                  const XmodMorphism& m2) {
  const auto& Q = m1.dst->base();
  const auto& H = m1.dst->g;
  XmodMorphism J;
  J.name = "canonical(" + pb.x->name + ")";
  J.src = pb.x;
  J.dst = hpb.x;
  J.F.src = pb.x->g.base;
  J.F.dst = hpb.x->g.base;
  for (auto [a, ap] : pb.obj)
    J.F.obj_map.push_back(hpb.find_obj(a, Q.identity[m1.F.obj_map[a]], ap));
  for (std::size_t m = 0; m < pb.mor.size(); ++m) {
    auto [p, pp] = pb.mor[m];
    int X = J.F.obj_map[pb.x->base().mors[m].src];
    int fa0 = m1.F.obj_map[pb.obj[pb.x->base().mors[m].src].first];
    J.F.mor_map.push_back(hpb.find_mor(X, p, H.fiber[fa0].unit, pp));
  }
  for (std::size_t X = 0; X < pb.obj.size(); ++X) {
    auto [a, ap] = pb.obj[X];
    int n2 = m2.src->g.fiber[ap].size();
    GroupHom h;
    for (auto [g1, g2] : pb.fib[X]) h.push_back(g1 * n2 + g2);
    J.phi.push_back(std::move(h));
  }
  return J;
}

bool fibration_xmod(const XmodMorphism& m) {
  if (!alg::groupoid_fibration(m.F)) return false;
  const auto& P = m.src->base();
  for (int a = 0; a < P.n_obj(); ++a) {
    std::vector<bool> hit(m.dst->g.fiber[m.F.obj_map[a]].size(), false);
    for (int g = 0; g < m.src->g.fiber[a].size(); ++g) hit[m.phi[a][g]] = true;
    for (bool b : hit)
      if (!b) return false;
  }
  return true;
}

// --- homotopy groups --------------------------------------------------------------

int HomotopyProfile::pi1_of_mor(const FiniteGroupoid& base, int a, int mor) const {
  (void)base;
  for (std::size_t i = 0; i < aut_mors[a].size(); ++i)
    if (aut_mors[a][i] == mor) return pi1_class[a][i];
  throw std::out_of_range("pi1_of_mor: not an automorphism at the object");
}

std::optional<int> HomotopyProfile::pi2_of_elem(int a, int gelem) const {
  for (std::size_t i = 0; i < pi2_elems[a].size(); ++i)
    if (pi2_elems[a][i] == gelem) return static_cast<int>(i);
  return std::nullopt;
}

HomotopyProfile pi(const CrossedModule& x) {
  const auto& P = x.base();
  HomotopyProfile prof;
  prof.pi0 = P.components(&prof.pi0_reps);
  for (int a = 0; a < P.n_obj(); ++a) {
    FinGroup aut = P.aut_group(a);
    std::vector<int> aut_mor;
    for (int m : P.hom(a, a)) aut_mor.push_back(m);
    // image of the boundary inside aut (local indices)
    std::vector<int> img;
    for (int g = 0; g < x.g.fiber[a].size(); ++g) {
      int m = x.dd(a, g);
      for (std::size_t i = 0; i < aut_mor.size(); ++i)
        if (aut_mor[i] == m) img.push_back(static_cast<int>(i));
    }
    std::sort(img.begin(), img.end());
    img.erase(std::unique(img.begin(), img.end()), img.end());
    auto quo = alg::quotient_by(aut, img, x.name + ".pi1(" + P.objects[a] + ")");
    prof.pi1.push_back(quo.group);
    prof.pi1_class.push_back(quo.rep);
    prof.aut_mors.push_back(std::move(aut_mor));
    // pi2 = kernel of the boundary
    std::vector<int> kmembers;
    for (int g = 0; g < x.g.fiber[a].size(); ++g)
      if (x.dd(a, g) == P.identity[a]) kmembers.push_back(g);
    prof.pi2.push_back(alg::subgroup(x.g.fiber[a], kmembers,
                                     x.name + ".pi2(" + P.objects[a] + ")"));
    prof.pi2_elems.push_back(std::move(kmembers));
  }
  return prof;
}

ProfileMorphism induced_pi(const XmodMorphism& m, const HomotopyProfile& ps,
                           const HomotopyProfile& pd) {
  ProfileMorphism out;
  const auto& P = m.src->base();
  out.pi0_map.resize(ps.pi0_reps.size());
  for (std::size_t c = 0; c < ps.pi0_reps.size(); ++c)
    out.pi0_map[c] = pd.pi0[m.F.obj_map[ps.pi0_reps[c]]];
  // consistency over whole components
  for (int a = 0; a < P.n_obj(); ++a)
    if (pd.pi0[m.F.obj_map[a]] != out.pi0_map[ps.pi0[a]]) {
      out.well_defined = false;
      out.issues.push_back("pi0 not constant on the component of " + P.objects[a]);
    }
  for (int a = 0; a < P.n_obj(); ++a) {
    int fa = m.F.obj_map[a];
    GroupHom h1(ps.pi1[a].size(), -1);
    for (std::size_t i = 0; i < ps.aut_mors[a].size(); ++i) {
      int cls = ps.pi1_class[a][i];
      int img = pd.pi1_of_mor(m.dst->base(), fa, m.F.mor_map[ps.aut_mors[a][i]]);
      if (h1[cls] >= 0 && h1[cls] != img) {
        out.well_defined = false;
        out.issues.push_back("pi1 map not well-defined at " + P.objects[a]);
      }
      h1[cls] = img;
    }
    if (!alg::is_homomorphism(ps.pi1[a], pd.pi1[fa], h1)) {
      out.well_defined = false;
      out.issues.push_back("pi1 map not a homomorphism at " + P.objects[a]);
    }
    out.pi1_map.push_back(std::move(h1));

    GroupHom h2;
    for (int ke : ps.pi2_elems[a]) {
      auto img = pd.pi2_of_elem(fa, m.phi[a][ke]);
      if (!img) {
        out.well_defined = false;
        out.issues.push_back("pi2 image escapes the kernel at " + P.objects[a]);
        h2.push_back(0);
      } else {
        h2.push_back(*img);
      }
    }
    if (out.well_defined &&
        !alg::is_homomorphism(ps.pi2[a], pd.pi2[fa], h2)) {
      out.well_defined = false;
      out.issues.push_back("pi2 map not a homomorphism at " + P.objects[a]);
    }
    out.pi2_map.push_back(std::move(h2));
  }
  return out;
}

WeakEquivalenceResult weak_equivalence(const XmodMorphism& m) {
  WeakEquivalenceResult res;
  auto ps = pi(*m.src);
  auto pd = pi(*m.dst);
  auto ind = induced_pi(m, ps, pd);
  if (!ind.well_defined) {
    res.is_weak_equivalence = false;
    res.witnesses = ind.issues;
    return res;
  }
  // pi0 bijection
  std::vector<bool> hit(pd.pi0_reps.size(), false);
  for (int c : ind.pi0_map) {
    if (hit[c]) {
      res.is_weak_equivalence = false;
      res.witnesses.push_back("pi0 not injective");
    }
    hit[c] = true;
  }
  for (bool b : hit)
    if (!b) {
      res.is_weak_equivalence = false;
      res.witnesses.push_back("pi0 not surjective");
      break;
    }
  const auto& P = m.src->base();
  for (int a = 0; a < P.n_obj(); ++a) {
    int fa = m.F.obj_map[a];
    if (!alg::is_isomorphism(ps.pi1[a], pd.pi1[fa], ind.pi1_map[a])) {
      res.is_weak_equivalence = false;
      res.witnesses.push_back("pi1 not an isomorphism at " + P.objects[a]);
    }
    if (!alg::is_isomorphism(ps.pi2[a], pd.pi2[fa], ind.pi2_map[a])) {
      res.is_weak_equivalence = false;
      res.witnesses.push_back("pi2 not an isomorphism at " + P.objects[a]);
    }
  }
  return res;
}

// --- nerve -------------------------------------------------------------------------

namespace {

Id cell_key(const CrossedModule& x, const XmodNerve::Cell& c) {
  const auto& P = x.base();
  std::vector<Id> parts;
  for (int v : c.verts) parts.push_back(P.objects[v]);
  for (int p : c.p) parts.push_back(P.mors[p].id);
  std::size_t gi = 0;
  int n = static_cast<int>(c.verts.size()) - 1;
  for (int i = 0; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = j + 1; k <= n; ++k)
        parts.push_back(x.g.fiber[c.verts[i]].elems[c.g[gi++]]);
  return tup(parts);
}

// pair index (i,j), i<j, in lex order for dimension n
int pix(int n, int i, int j) {
  int ix = 0;
  for (int a = 0; a < i; ++a) ix += n - a;
  return ix + (j - i - 1);
}

int tix3(int n, int i, int j, int k) {
  int ix = 0;
  for (int a = 0; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b)
      for (int c = b + 1; c <= n; ++c) {
        if (a == i && b == j && c == k) return ix;
        ++ix;
      }
  throw std::out_of_range("tix3");
}

// Reindex a cell along a monotone map a : [q] -> [n].
XmodNerve::Cell reindex_cell(const CrossedModule& x, const XmodNerve::Cell& c,
                             const std::vector<int>& a) {
  const auto& P = x.base();
  int n = static_cast<int>(c.verts.size()) - 1;
  int q = static_cast<int>(a.size()) - 1;
  XmodNerve::Cell out;
  for (int i = 0; i <= q; ++i) out.verts.push_back(c.verts[a[i]]);
  for (int i = 0; i <= q; ++i)
    for (int j = i + 1; j <= q; ++j) {
      int pi = a[i] == a[j] ? P.identity[c.verts[a[i]]]
                            : c.p[pix(n, a[i], a[j])];
      out.p.push_back(pi);
    }
  for (int i = 0; i <= q; ++i)
    for (int j = i + 1; j <= q; ++j)
      for (int k = j + 1; k <= q; ++k) {
        int gi;
        if (a[i] == a[j] || a[j] == a[k])
          gi = x.g.fiber[c.verts[a[i]]].unit;
        else
          gi = c.g[tix3(n, a[i], a[j], a[k])];
        out.g.push_back(gi);
      }
  return out;
}

}  // namespace

XmodNerve xmod_nerve(const CrossedModule& x, int N, std::size_t max_cells) {
  const auto& P = x.base();
  XmodNerve out;
  out.cells.resize(N + 1);
  out.sset.name = "nerve(" + x.name + ")";
  out.sset.N = N;
  out.sset.cells.resize(N + 1);
  out.sset.face.resize(N + 1);
  out.sset.degen.resize(N + 1);
  std::vector<std::map<Id, int>> ix(N + 1);

  for (int n = 0; n <= N; ++n) {
    // enumerate vertices, then p, then g
    std::vector<int> verts(n + 1);
    std::function<void(int)> rec_verts;
    std::vector<int> pvals(n * (n + 1) / 2, -1);

    // triples with i == 0 are chosen; the rest are derived via the cocycle
    std::vector<std::array<int, 3>> free_tris, derived_tris;
    for (int i = 0; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j)
        for (int k = j + 1; k <= n; ++k)
          (i == 0 ? free_tris : derived_tris).push_back({i, j, k});

    auto solutions = [&](int i, int j, int k) {
      std::vector<int> sols;
      int needed = P.compose(
          P.inverse[pvals[pix(n, i, k)]],
          P.compose(pvals[pix(n, j, k)], pvals[pix(n, i, j)]));
      for (int g = 0; g < x.g.fiber[verts[i]].size(); ++g)
        if (x.dd(verts[i], g) == needed) sols.push_back(g);
      return sols;
    };

    std::vector<int> gvals((n + 1) * n * (n - 1) / 6, -1);
    auto check_quads = [&]() {
      // all cocycle conditions and boundary conditions on derived entries
      for (int i = 0; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
          for (int k = j + 1; k <= n; ++k)
            for (int l = k + 1; l <= n; ++l) {
              const auto& G = x.g.fiber[verts[i]];
              int gijk = gvals[tix3(n, i, j, k)];
              int gikl = gvals[tix3(n, i, k, l)];
              int gijl = gvals[tix3(n, i, j, l)];
              int gjkl = gvals[tix3(n, j, k, l)];
              int moved = x.g.act(P.inverse[pvals[pix(n, i, j)]], gjkl);
              int val = G.op(G.op(G.op(G.inv[gijk], G.inv[gikl]), gijl), moved);
              if (val != G.unit) return false;
            }
      for (const auto& t : derived_tris) {
        auto [i, j, k] = t;
        int needed = P.compose(
            P.inverse[pvals[pix(n, i, k)]],
            P.compose(pvals[pix(n, j, k)], pvals[pix(n, i, j)]));
        if (x.dd(verts[i], gvals[tix3(n, i, j, k)]) != needed) return false;
      }
      return true;
    };

    std::function<void(std::size_t)> rec_g = [&](std::size_t t) {
      if (t == free_tris.size()) {
        // derive the rest via the cocycle with first index 0
        for (const auto& tri : derived_tris) {
          auto [i, j, k] = tri;
          const auto& G0 = x.g.fiber[verts[0]];
          int g0ik = gvals[tix3(n, 0, i, k)];
          int g0jk = gvals[tix3(n, 0, j, k)];
          int g0ij = gvals[tix3(n, 0, i, j)];
          int val = G0.op(G0.op(G0.inv[g0ik], g0jk), g0ij);
          gvals[tix3(n, i, j, k)] = x.g.act(pvals[pix(n, 0, i)], val);
        }
        if (!check_quads()) return;
        XmodNerve::Cell cell;
        cell.verts = verts;
        cell.p = pvals;
        cell.g = gvals;
        Id key = cell_key(x, cell);
        ix[n][key] = static_cast<int>(out.cells[n].size());
        out.cells[n].push_back(std::move(cell));
        out.sset.cells[n].push_back(key);
        if (out.cells[n].size() > max_cells)
          throw ResourceLimitError("xmod_nerve: cell ceiling exceeded", max_cells);
        return;
      }
      auto [i, j, k] = free_tris[t];
      for (int g : solutions(i, j, k)) {
        gvals[tix3(n, i, j, k)] = g;
        rec_g(t + 1);
      }
    };

    // order pairs by (j, i) so each completed triangle prunes
    std::vector<std::pair<int, int>> pair_slots;
    for (int j = 1; j <= n; ++j)
      for (int i = 0; i < j; ++i) pair_slots.push_back({i, j});
    std::function<void(std::size_t)> rec_p = [&](std::size_t t) {
      if (t == pair_slots.size()) {
        if (n < 2) {
          XmodNerve::Cell cell;
          cell.verts = verts;
          cell.p = pvals;
          Id key = cell_key(x, cell);
          ix[n][key] = static_cast<int>(out.cells[n].size());
          out.cells[n].push_back(std::move(cell));
          out.sset.cells[n].push_back(key);
          if (out.cells[n].size() > max_cells)
            throw ResourceLimitError("xmod_nerve: cell ceiling exceeded",
                                     max_cells);
        } else {
          rec_g(0);
        }
        return;
      }
      auto [i, j] = pair_slots[t];
      for (int p : P.hom(verts[i], verts[j])) {
        pvals[pix(n, i, j)] = p;
        bool ok = true;
        for (int i0 = 0; i0 < i && ok; ++i0)
          if (solutions(i0, i, j).empty()) ok = false;
        if (ok) rec_p(t + 1);
      }
      pvals[pix(n, i, j)] = -1;
    };

    rec_verts = [&](int i) {
      if (i > n) {
        rec_p(0);
        return;
      }
      for (int a = 0; a < P.n_obj(); ++a) {
        verts[i] = a;
        rec_verts(i + 1);
      }
    };
    rec_verts(0);
  }

  for (int n = 1; n <= N; ++n) {
    out.sset.face[n].assign(n + 1, std::vector<int>(out.sset.size(n)));
    for (int i = 0; i <= n; ++i) {
      std::vector<int> a;
      for (int v = 0; v <= n; ++v)
        if (v != i) a.push_back(v);
      for (int c = 0; c < out.sset.size(n); ++c) {
        auto cell = reindex_cell(x, out.cells[n][c], a);
        out.sset.face[n][i][c] = ix[n - 1].at(cell_key(x, cell));
      }
    }
  }
  for (int n = 0; n < N; ++n) {
    out.sset.degen[n].assign(n + 1, std::vector<int>(out.sset.size(n)));
    for (int i = 0; i <= n; ++i) {
      std::vector<int> a;
      for (int v = 0; v <= n; ++v) {
        a.push_back(v);
        if (v == i) a.push_back(v);
      }
      for (int c = 0; c < out.sset.size(n); ++c) {
        auto cell = reindex_cell(x, out.cells[n][c], a);
        out.sset.degen[n][i][c] = ix[n + 1].at(cell_key(x, cell));
      }
    }
  }
  return out;
}

ValidationReport compare_nerves(const CrossedModule& x, int N,
                                std::size_t max_cells) {
  ValidationReport rep;
  rep.subject = "compare-nerves(" + x.name + ")";
  auto nx = xmod_nerve(x, N, max_cells);
  auto b = beta(x);
  auto gn = nerve::geometric_nerve(b.bi, nerve::Variant::NormalLax, N, max_cells);
  const auto& P = x.base();

  // dimensionwise bijection: simplex -> (verts, p, g) system
  std::vector<std::vector<int>> m(N + 1);
  for (int n = 0; n <= N; ++n) {
    if (gn.sset.size(n) != nx.sset.size(n)) {
      rep.fail("cell-count", std::to_string(n),
               std::to_string(gn.sset.size(n)), std::to_string(nx.sset.size(n)));
      return rep;
    }
    std::map<Id, int> nx_ix;
    for (int c = 0; c < nx.sset.size(n); ++c) nx_ix[nx.sset.cells[n][c]] = c;
    for (int s = 0; s < gn.sset.size(n); ++s) {
      const auto& f = gn.simplices[n][s];
      XmodNerve::Cell cell;
      for (int i = 0; i <= n; ++i) cell.verts.push_back(f.vertex[i]);
      for (int i = 0; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) cell.p.push_back(f.e(i, j));
      for (int i = 0; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
          for (int k = j + 1; k <= n; ++k)
            cell.g.push_back(b.two_elem[f.c(i, j, k)]);
      auto it = nx_ix.find(cell_key(x, cell));
      if (it == nx_ix.end()) {
        rep.fail("missing-counterpart", gn.sset.cells[n][s]);
        return rep;
      }
      m[n].push_back(it->second);
    }
    std::vector<bool> hit(nx.sset.size(n), false);
    for (int c : m[n]) {
      if (hit[c]) rep.fail("not-injective", std::to_string(n));
      hit[c] = true;
    }
  }
  for (int n = 1; n <= N; ++n)
    for (int i = 0; i <= n; ++i)
      for (int s = 0; s < gn.sset.size(n); ++s)
        if (m[n - 1][gn.sset.d(n, i, s)] != nx.sset.d(n, i, m[n][s]))
          rep.fail("face-mismatch",
                   tup({Id(std::to_string(n)), Id(std::to_string(i)),
                        gn.sset.cells[n][s]}));
  for (int n = 0; n < N; ++n)
    for (int i = 0; i <= n; ++i)
      for (int s = 0; s < gn.sset.size(n); ++s)
        if (m[n + 1][gn.sset.s(n, i, s)] != nx.sset.s(n, i, m[n][s]))
          rep.fail("degeneracy-mismatch",
                   tup({Id(std::to_string(n)), Id(std::to_string(i)),
                        gn.sset.cells[n][s]}));
  (void)P;
  return rep;
}

// --- Mayer-Vietoris ----------------------------------------------------------------

MvReport mv_check(const XmodMorphism& m1, const XmodMorphism& m2, int a, int ap) {
  MvReport out;
  if (m1.F.obj_map[a] != m2.F.obj_map[ap])
    throw std::invalid_argument("mv_check: no valid basepoint (F a != F' a')");
  int b = m1.F.obj_map[a];
  const auto& Q = m1.dst->base();
  auto hpb = homotopy_pullback_xmod(m1, m2);
  int X0 = hpb.find_obj(a, Q.identity[b], ap);

  auto prof_h = pi(*hpb.x);
  auto prof_1 = pi(*m1.src);
  auto prof_2 = pi(*m2.src);
  auto prof_b = pi(*m1.dst);

  const auto& PI2H = prof_h.pi2[X0];
  const auto& K1 = prof_1.pi2[a];
  const auto& K2 = prof_2.pi2[ap];
  const auto& KB = prof_b.pi2[b];
  const auto& G1 = m1.src->g.fiber[a];
  const auto& G2 = m2.src->g.fiber[ap];
  const auto& HB = m1.dst->g.fiber[b];
  int n2 = G2.size();

  // f1 : pi2(hpb) -> pi2 x pi2'
  auto f1 = [&](int e) {
    int pair = prof_h.pi2_elems[X0][e];
    int g1 = pair / n2, g2 = pair % n2;
    return std::make_pair(*prof_1.pi2_of_elem(a, g1), *prof_2.pi2_of_elem(ap, g2));
  };
  // f2 : pi2 x pi2' -> pi2(B): (g,g') -> phi' g' . (phi g)^{-1}
  auto f2 = [&](int e1, int e2) {
    int g1 = prof_1.pi2_elems[a][e1];
    int g2 = prof_2.pi2_elems[ap][e2];
    int v = HB.op(m2.phi[ap][g2], HB.inv[m1.phi[a][g1]]);
    return *prof_b.pi2_of_elem(b, v);
  };
  // delta2 : pi2(B) -> pi1(hpb): h -> [(1_a, h, 1_{a'})]
  const auto& P1 = m1.src->base();
  const auto& P2 = m2.src->base();
  auto delta2 = [&](int e) {
    int h = prof_b.pi2_elems[b][e];
    int mor = hpb.find_mor(X0, P1.identity[a], h, P2.identity[ap]);
    return prof_h.pi1_of_mor(hpb.x->base(), X0, mor);
  };
  // f3 : pi1(hpb) -> pi1 x pi1'
  // f4 : pi1 x pi1' -> pi1(B): ([p],[p']) -> [F'p' . (Fp)^{-1}]
  // delta1 : pi1(B) -> pi0(hpb): [q] -> component of (a, q, a')
  auto delta1_of_mor = [&](int q) {
    return prof_h.pi0[hpb.find_obj(a, q, ap)];
  };

  auto joint = [&](const std::string& name, const std::set<std::string>& image,
                   const std::set<std::string>& kernel) {
    if (image == kernel) {
      out.joints.push_back(name + ": exact (" + std::to_string(image.size()) +
                           " elements)");
    } else {
      out.exact = false;
      out.failures.push_back(name + ": image has " + std::to_string(image.size()) +
                             " elements, kernel has " +
                             std::to_string(kernel.size()));
    }
  };

  // joint at pi2 x pi2'
  {
    std::set<std::string> image, kernel;
    for (int e = 0; e < PI2H.size(); ++e) {
      auto [e1, e2] = f1(e);
      image.insert(std::to_string(e1) + "," + std::to_string(e2));
    }
    for (int e1 = 0; e1 < K1.size(); ++e1)
      for (int e2 = 0; e2 < K2.size(); ++e2)
        if (f2(e1, e2) == KB.unit)
          kernel.insert(std::to_string(e1) + "," + std::to_string(e2));
    joint("pi2xpi2'", image, kernel);
  }
  // joint at pi2(B)
  {
    std::set<std::string> image, kernel;
    for (int e1 = 0; e1 < K1.size(); ++e1)
      for (int e2 = 0; e2 < K2.size(); ++e2)
        image.insert(std::to_string(f2(e1, e2)));
    int base_pi1 = prof_h.pi1[X0].unit;
    for (int e = 0; e < KB.size(); ++e)
      if (delta2(e) == base_pi1) kernel.insert(std::to_string(e));
    joint("pi2B", image, kernel);
  }
  // joint at pi1(hpb)
  {
    std::set<std::string> image, kernel;
    for (int e = 0; e < KB.size(); ++e) image.insert(std::to_string(delta2(e)));
    // kernel of f3
    for (std::size_t i = 0; i < prof_h.aut_mors[X0].size(); ++i) {
      int mor = prof_h.aut_mors[X0][i];
      auto [p, h, pp] = hpb.mor[mor];
      int c1 = prof_1.pi1_of_mor(P1, a, p);
      int c2 = prof_2.pi1_of_mor(P2, ap, pp);
      if (c1 == prof_1.pi1[a].unit && c2 == prof_2.pi1[ap].unit)
        kernel.insert(std::to_string(prof_h.pi1_class[X0][i]));
    }
    joint("pi1hpb", image, kernel);
  }
  // joint at pi1 x pi1'
  {
    std::set<std::string> image, kernel;
    for (std::size_t i = 0; i < prof_h.aut_mors[X0].size(); ++i) {
      auto [p, h, pp] = hpb.mor[prof_h.aut_mors[X0][i]];
      image.insert(std::to_string(prof_1.pi1_of_mor(P1, a, p)) + "," +
                   std::to_string(prof_2.pi1_of_mor(P2, ap, pp)));
    }
    for (std::size_t i = 0; i < prof_1.aut_mors[a].size(); ++i)
      for (std::size_t j = 0; j < prof_2.aut_mors[ap].size(); ++j) {
        int p = prof_1.aut_mors[a][i];
        int pp = prof_2.aut_mors[ap][j];
        int q = Q.compose(m2.F.mor_map[pp], Q.inverse[m1.F.mor_map[p]]);
        if (prof_b.pi1_of_mor(Q, b, q) == prof_b.pi1[b].unit)
          kernel.insert(std::to_string(prof_1.pi1_class[a][i]) + "," +
                        std::to_string(prof_2.pi1_class[ap][j]));
      }
    joint("pi1xpi1'", image, kernel);
  }
  // joint at pi1(B)
  {
    std::set<std::string> image, kernel;
    for (std::size_t i = 0; i < prof_1.aut_mors[a].size(); ++i)
      for (std::size_t j = 0; j < prof_2.aut_mors[ap].size(); ++j) {
        int p = prof_1.aut_mors[a][i];
        int pp = prof_2.aut_mors[ap][j];
        int q = Q.compose(m2.F.mor_map[pp], Q.inverse[m1.F.mor_map[p]]);
        image.insert(std::to_string(prof_b.pi1_of_mor(Q, b, q)));
      }
    int base_comp = prof_h.pi0[X0];
    for (std::size_t i = 0; i < prof_b.aut_mors[b].size(); ++i) {
      int q = prof_b.aut_mors[b][i];
      if (delta1_of_mor(q) == base_comp)
        kernel.insert(std::to_string(prof_b.pi1_class[b][i]));
    }
    joint("pi1B", image, kernel);
  }
  // joint at pi0(hpb)
  {
    std::set<std::string> image, kernel;
    for (std::size_t i = 0; i < prof_b.aut_mors[b].size(); ++i)
      image.insert(std::to_string(delta1_of_mor(prof_b.aut_mors[b][i])));
    for (std::size_t c = 0; c < prof_h.pi0_reps.size(); ++c) {
      int rep_obj = prof_h.pi0_reps[c];
      auto [oa, oq, oap] = hpb.obj[rep_obj];
      auto prof_1_comp = prof_1.pi0[oa];
      auto prof_2_comp = prof_2.pi0[oap];
      if (prof_1_comp == prof_1.pi0[a] && prof_2_comp == prof_2.pi0[ap])
        kernel.insert(std::to_string(c));
    }
    joint("pi0hpb", image, kernel);
  }
  // delta1 well-definedness over coset members (recorded, not assumed)
  for (std::size_t i = 0; i < prof_b.aut_mors[b].size(); ++i)
    for (std::size_t j = 0; j < prof_b.aut_mors[b].size(); ++j)
      if (prof_b.pi1_class[b][i] == prof_b.pi1_class[b][j] &&
          delta1_of_mor(prof_b.aut_mors[b][i]) !=
              delta1_of_mor(prof_b.aut_mors[b][j])) {
        out.exact = false;
        out.failures.push_back("delta1 not constant on a pi1 class");
      }
  return out;
}

// --- loop groupoid ------------------------------------------------------------------

EndoGroupoid endo_groupoid(const CrossedModule& x, int a) {
  const auto& P = x.base();
  const auto& G = x.g.fiber[a];
  EndoGroupoid out;
  auto& E = out.groupoid;
  E.name = x.name + ".loops(" + P.objects[a] + ")";
  std::vector<int> objs = P.hom(a, a);
  std::map<int, int> obj_ix;
  for (int m : objs) {
    obj_ix[m] = E.n_obj();
    E.objects.push_back(P.mors[m].id);
  }
  std::map<std::pair<int, int>, int> mor_ix;  // (dst q, g)
  for (int q : objs)
    for (int g = 0; g < G.size(); ++g) {
      int p = P.compose(q, x.dd(a, g));
      mor_ix[{q, g}] = E.n_mor();
      out.arrows.push_back({q, g});
      E.mors.push_back({tup({P.mors[q].id, G.elems[g]}), obj_ix.at(p), obj_ix.at(q)});
    }
  E.identity.resize(E.n_obj());
  for (int q : objs) E.identity[obj_ix.at(q)] = mor_ix.at({q, G.unit});
  E.inverse.resize(E.n_mor());
  for (int m = 0; m < E.n_mor(); ++m) {
    auto [q, g] = out.arrows[m];
    int p = P.compose(q, x.dd(a, g));
    E.inverse[m] = mor_ix.at({p, G.inv[g]});
  }
  for (int m2 = 0; m2 < E.n_mor(); ++m2)
    for (int m1 = 0; m1 < E.n_mor(); ++m1) {
      if (E.mors[m1].dst != E.mors[m2].src) continue;
      auto [q2, g2] = out.arrows[m2];
      auto [q1, g1] = out.arrows[m1];
      E.set_comp(m2, m1, mor_ix.at({q2, G.op(g2, g1)}));
    }

  auto& rep = out.report;
  rep.subject = E.name;
  auto grep = alg::validate_groupoid(E);
  rep.absorb(grep);

  auto prof = pi(x);
  // pi0(E) ~ pi1(x, a)
  std::vector<int> reps;
  auto comp = E.components(&reps);
  if (static_cast<int>(reps.size()) != prof.pi1[a].size())
    rep.fail("pi0-pi1-size", E.name);
  else {
    // the bijection sends the component of the object p to the class of p
    std::map<int, int> comp_to_class;
    for (std::size_t o = 0; o < objs.size(); ++o) {
      int cls = prof.pi1_of_mor(P, a, objs[o]);
      auto it = comp_to_class.find(comp[o]);
      if (it != comp_to_class.end() && it->second != cls)
        rep.fail("pi0-pi1-not-constant", E.objects[o]);
      comp_to_class[comp[o]] = cls;
    }
    std::set<int> classes;
    for (auto& [c, cls] : comp_to_class) classes.insert(cls);
    if (static_cast<int>(classes.size()) != prof.pi1[a].size())
      rep.fail("pi0-pi1-not-bijective", E.name);
  }
  // Aut(1_a) ~ pi2(x, a)
  int one = obj_ix.at(P.identity[a]);
  std::vector<int> loops = E.hom(one, one);
  if (static_cast<int>(loops.size()) != prof.pi2[a].size())
    rep.fail("aut1-pi2-size", E.name);
  else {
    // arrows 1 -> 1 are exactly (1_a, g) with g in the kernel; the map
    // (1_a, g) -> g must be a group isomorphism
    for (int l2 : loops)
      for (int l1 : loops) {
        auto [q2, g2] = out.arrows[l2];
        auto [q1, g1] = out.arrows[l1];
        int prod = E.compose(l2, l1);
        auto [qp, gp] = out.arrows[prod];
        if (gp != G.op(g2, g1)) rep.fail("aut1-pi2-not-homomorphic", E.mors[l1].id);
      }
  }
  return out;
}

}  // namespace hofib::xmod
