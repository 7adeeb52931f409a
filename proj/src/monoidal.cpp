#include "hofib/monoidal.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <stdexcept>

#include "hofib/comma.hpp"

namespace hofib::monoidal {

using bicat::BicatPtr;
using bicat::Dir;
using bicat::FiniteBicategory;
using bicat::LaxMorphism;

int MonoidalCategory::tensor_mor(int u, int v) const {
  auto it = tensor_mor_.find(pack2(u, v));
  if (it == tensor_mor_.end())
    throw std::out_of_range(name + ": tensor of morphisms undefined");
  return it->second;
}

MonoidalCategory MonoidalCategory::from_group(const alg::FinGroup& g) {
  MonoidalCategory m;
  m.name = "Disc(" + g.name + ")";
  m.cat.name = m.name;
  m.cat.objects = g.elems;
  for (int i = 0; i < g.size(); ++i) {
    m.cat.mors.push_back({tup({"1", g.elems[i]}), i, i});
    m.cat.identity.push_back(i);
    m.cat.set_comp(i, i, i);
  }
  m.tensor_obj.assign(g.size(), std::vector<int>(g.size()));
  for (int a = 0; a < g.size(); ++a)
    for (int b = 0; b < g.size(); ++b) {
      m.tensor_obj[a][b] = g.op(a, b);
      m.set_tensor_mor(a, b, g.op(a, b));
    }
  m.unit = g.unit;
  for (int a = 0; a < g.size(); ++a)
    for (int b = 0; b < g.size(); ++b)
      for (int c = 0; c < g.size(); ++c)
        m.assoc_[pack3(a, b, c)] = g.op(g.op(a, b), c);
  m.lunit.resize(g.size());
  m.runit.resize(g.size());
  for (int a = 0; a < g.size(); ++a) {
    m.lunit[a] = a;
    m.runit[a] = a;
  }
  return m;
}

MonoidalCategory MonoidalCategory::cocycle_toy() {
  // Objects 0,1 with addition mod 2; hom(m,m) = Z/2; the associativity
  // component at (m3,m2,m1) is the automorphism tagged m3*m2*m1 of
  // m3+m2+m1. The pentagon for this constraint is the 3-cocycle identity
  // of c(x,y,z) = xyz over Z/2.
  MonoidalCategory m;
  m.name = "TwistZ2";
  m.cat.name = m.name;
  m.cat.objects = {"0", "1"};
  // morphism index: 2*obj + tag
  for (int o = 0; o < 2; ++o)
    for (int t = 0; t < 2; ++t)
      m.cat.mors.push_back({tup({m.cat.objects[o], std::to_string(t)}), o, o});
  m.cat.identity = {0, 2};
  for (int o = 0; o < 2; ++o)
    for (int t1 = 0; t1 < 2; ++t1)
      for (int t2 = 0; t2 < 2; ++t2)
        m.cat.set_comp(2 * o + t2, 2 * o + t1, 2 * o + ((t1 + t2) % 2));
  m.tensor_obj = {{0, 1}, {1, 0}};
  for (int o1 = 0; o1 < 2; ++o1)
    for (int t1 = 0; t1 < 2; ++t1)
      for (int o2 = 0; o2 < 2; ++o2)
        for (int t2 = 0; t2 < 2; ++t2)
          m.set_tensor_mor(2 * o1 + t1, 2 * o2 + t2,
                           2 * ((o1 + o2) % 2) + ((t1 + t2) % 2));
  m.unit = 0;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c) {
        int obj = (a + b + c) % 2;
        int twist = a * b * c;
        m.assoc_[pack3(a, b, c)] = 2 * obj + twist;
      }
  m.lunit = {0, 2};
  m.runit = {0, 2};
  return m;
}

MonoidalCategory MonoidalCategory::cocycle_toy_skewed() {
  MonoidalCategory m = cocycle_toy();
  m.name = "TwistZ2Skew";
  m.cat.name = m.name;
  // l_m = r_m = the nontrivial automorphism of m, for every object m.
  m.lunit = {1, 3};
  m.runit = {1, 3};
  return m;
}

MonoidalCategory MonoidalCategory::truncated_addition(int n) {
  MonoidalCategory m;
  m.name = "TruncAdd" + std::to_string(n);
  m.cat.name = m.name;
  for (int i = 0; i < n; ++i) {
    m.cat.objects.push_back(std::to_string(i));
    m.cat.mors.push_back({tup({"1", std::to_string(i)}), i, i});
    m.cat.identity.push_back(i);
    m.cat.set_comp(i, i, i);
  }
  auto add = [n](int a, int b) { return std::min(a + b, n - 1); };
  m.tensor_obj.assign(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      m.tensor_obj[a][b] = add(a, b);
      m.set_tensor_mor(a, b, add(a, b));
    }
  m.unit = 0;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) m.assoc_[pack3(a, b, c)] = add(add(a, b), c);
  m.lunit.resize(n);
  m.runit.resize(n);
  for (int a = 0; a < n; ++a) {
    m.lunit[a] = a;
    m.runit[a] = a;
  }
  return m;
}

std::shared_ptr<FiniteBicategory> delooping(const MonoidalCategory& m) {
  auto b = std::make_shared<FiniteBicategory>();
  b->name = "Sigma(" + m.name + ")";
  b->objects = {"*"};
  for (const auto& o : m.cat.objects) b->cells1.push_back({o, 0, 0});
  for (const auto& mo : m.cat.mors) b->cells2.push_back({mo.id, mo.src, mo.dst});
  b->id1 = {m.unit};
  b->id2 = m.cat.identity;
  for (int v = 0; v < m.cat.n_mor(); ++v)
    for (int u = 0; u < m.cat.n_mor(); ++u)
      if (m.cat.composable(v, u)) b->set_vcomp(v, u, m.cat.compose(v, u));
  const int nobj = m.cat.n_obj();
  for (int g = 0; g < nobj; ++g)
    for (int f = 0; f < nobj; ++f) b->set_hcomp1(g, f, m.tensor(g, f));
  for (int v = 0; v < m.cat.n_mor(); ++v)
    for (int u = 0; u < m.cat.n_mor(); ++u)
      b->set_hcomp2(v, u, m.tensor_mor(v, u));
  for (const auto& [k, r] : m.assoc_) b->assoc_[k] = r;
  b->lunit = m.lunit;
  b->runit = m.runit;
  b->finalize();
  return b;
}

ValidationReport validate_monoidal(const MonoidalCategory& m) {
  // Single source of truth: the monoidal axioms are the bicategory axioms
  // of the delooping.
  ValidationReport rep = validate_bicategory(*delooping(m));
  rep.subject = m.name;
  ValidationReport cat = alg::validate_category(m.cat);
  rep.absorb(cat);
  return rep;
}

MonoidalFunctor monoidal_functor(std::shared_ptr<const MonoidalCategory> src,
                                 BicatPtr sigma_src,
                                 std::shared_ptr<const MonoidalCategory> dst,
                                 BicatPtr sigma_dst, const Id& name,
                                 const std::vector<int>& obj_map,
                                 const std::vector<int>& mor_map,
                                 const std::unordered_map<std::uint64_t, int>& comp,
                                 int unit_iso) {
  MonoidalFunctor f;
  f.name = name;
  f.src = std::move(src);
  f.dst = std::move(dst);
  f.sigma.name = "Sigma(" + name + ")";
  f.sigma.dir = Dir::Lax;
  f.sigma.src = std::move(sigma_src);
  f.sigma.dst = std::move(sigma_dst);
  f.sigma.map0 = {0};
  f.sigma.map1 = obj_map;
  f.sigma.map2 = mor_map;
  f.sigma.comp_cell_ = comp;
  f.sigma.unit_cell = {unit_iso};
  return f;
}

MonoidalFunctor monoidal_identity(std::shared_ptr<const MonoidalCategory> m,
                                  BicatPtr sigma) {
  MonoidalFunctor f;
  f.name = "1_" + m->name;
  f.src = f.dst = std::move(m);
  f.sigma = LaxMorphism::identity(std::move(sigma), Dir::Lax);
  return f;
}

LaxMorphism unit_functor(const MonoidalCategory&, BicatPtr sigma, Dir dir) {
  return bicat::object_homomorphism(0, std::move(sigma), dir);
}

MonoidalCategory terminal_monoidal() {
  MonoidalCategory m;
  m.name = "[0]";
  m.cat.name = "[0]";
  m.cat.objects = {"I"};
  m.cat.mors.push_back({"1I", 0, 0});
  m.cat.identity = {0};
  m.cat.set_comp(0, 0, 0);
  m.tensor_obj = {{0}};
  m.set_tensor_mor(0, 0, 0);
  m.unit = 0;
  m.assoc_[pack3(0, 0, 0)] = 0;
  m.lunit = {0};
  m.runit = {0};
  return m;
}

MonoidalFunctor unit_monoidal_functor(std::shared_ptr<const MonoidalCategory> m,
                                      BicatPtr sigma) {
  auto t = std::make_shared<MonoidalCategory>(terminal_monoidal());
  auto ts = delooping(*t);
  MonoidalFunctor f;
  f.name = "I:" + m->name;
  f.src = t;
  f.dst = m;
  f.sigma = bicat::object_homomorphism(0, sigma, Dir::Lax);
  f.sigma.src = ts;  // rebase onto the delooped terminal monoidal category
  return f;
}

namespace {

// inverse of an invertible morphism in the underlying category
int inv_mor(const alg::FiniteCategory& c, int u) {
  for (int v : c.hom(c.mors[u].dst, c.mors[u].src))
    if (c.compose(v, u) == c.identity[c.mors[u].src] &&
        c.compose(u, v) == c.identity[c.mors[u].dst])
      return v;
  throw std::out_of_range(c.name + ": morphism not invertible: " + c.mors[u].id);
}

}  // namespace

int MonoidalFibre::find_obj(int m) const {
  for (std::size_t i = 0; i < objs.size(); ++i)
    if (objs[i] == m) return static_cast<int>(i);
  throw std::out_of_range("monoidal fibre: object not found");
}

int MonoidalFibre::find_one(int src, int dst, int n, int f, int np) const {
  for (int h = 0; h < bi->n1(); ++h)
    if (bi->cells1[h].src == src && bi->cells1[h].dst == dst && ones[h].n == n &&
        ones[h].f == f && ones[h].np == np)
      return h;
  throw std::out_of_range("monoidal fibre: 1-cell not found");
}

MonoidalFibre monoidal_fibre(const MonoidalFunctor& F, const MonoidalFunctor& Fp) {
  if (F.dst.get() != Fp.dst.get())
    throw std::invalid_argument("monoidal_fibre: codomain mismatch");
  const auto& M = *F.dst;
  const auto& N = *F.src;
  const auto& Np = *Fp.src;
  const auto& c = M.cat;
  // maps of the two functors on objects/morphisms of their sources
  const auto& Fm = F.sigma;
  const auto& Fpm = Fp.sigma;

  MonoidalFibre out;
  out.bi = std::make_shared<bicat::FiniteBicategory>();
  auto& b = *out.bi;
  b.name = "(" + F.name + "|x|" + Fp.name + ")";
  for (int m = 0; m < c.n_obj(); ++m) {
    out.objs.push_back(m);
    b.objects.push_back(c.objects[m]);
  }
  // 1-cells (n, f, n') : m0 -> m1 with f : F'n' x m0 -> m1 x Fn
  for (int m0 = 0; m0 < c.n_obj(); ++m0)
    for (int m1 = 0; m1 < c.n_obj(); ++m1)
      for (int n = 0; n < N.cat.n_obj(); ++n)
        for (int np = 0; np < Np.cat.n_obj(); ++np) {
          int lhs = M.tensor(Fpm.map1[np], m0);
          int rhs = M.tensor(m1, Fm.map1[n]);
          for (int f : c.hom(lhs, rhs)) {
            out.ones.push_back({n, f, np});
            b.cells1.push_back({tup({c.objects[m0], c.objects[m1],
                                     N.cat.objects[n], c.mors[f].id,
                                     Np.cat.objects[np]}),
                                m0, m1});
          }
        }
  // identity 1-cell at m: (I, 1r_m, I)
  b.id1.resize(b.n_obj());
  for (int m = 0; m < c.n_obj(); ++m) {
    int cell = c.compose(
        M.tensor_mor(c.identity[m], Fm.unit_cell[0]),
        c.compose(inv_mor(c, M.runit[m]),
                  c.compose(M.lunit[m],
                            M.tensor_mor(inv_mor(c, Fpm.unit_cell[0]),
                                         c.identity[m]))));
    b.id1[m] = out.find_one(m, m, N.unit, cell, Np.unit);
  }
  // horizontal composition of 1-cells
  for (int h2 = 0; h2 < b.n1(); ++h2)
    for (int h1 = 0; h1 < b.n1(); ++h1) {
      if (b.cells1[h1].dst != b.cells1[h2].src) continue;
      const auto& o1 = out.ones[h1];
      const auto& o2 = out.ones[h2];
      int m0 = b.cells1[h1].src, m1 = b.cells1[h1].dst, m2 = b.cells1[h2].dst;
      int Fn1 = Fm.map1[o1.n], Fn2 = Fm.map1[o2.n];
      int Fpn1 = Fpm.map1[o1.np], Fpn2 = Fpm.map1[o2.np];
      int pasted = c.compose(
          M.tensor_mor(c.identity[m2], Fm.comp_cell(o2.n, o1.n)),
          c.compose(
              M.assoc(m2, Fn2, Fn1),
              c.compose(
                  M.tensor_mor(o2.f, c.identity[Fn1]),
                  c.compose(
                      inv_mor(c, M.assoc(Fpn2, m1, Fn1)),
                      c.compose(
                          M.tensor_mor(c.identity[Fpn2], o1.f),
                          c.compose(M.assoc(Fpn2, Fpn1, m0),
                                    M.tensor_mor(
                                        inv_mor(c, Fpm.comp_cell(o2.np, o1.np)),
                                        c.identity[m0])))))));
      b.set_hcomp1(h2, h1,
                   out.find_one(m0, m2, N.tensor(o2.n, o1.n), pasted,
                                Np.tensor(o2.np, o1.np)));
    }
  // 2-cells (u, u') with the compatibility square
  std::map<std::array<int, 4>, int> tix;
  for (int h1 = 0; h1 < b.n1(); ++h1)
    for (int h2 = 0; h2 < b.n1(); ++h2) {
      if (b.cells1[h1].src != b.cells1[h2].src ||
          b.cells1[h1].dst != b.cells1[h2].dst)
        continue;
      const auto& p = out.ones[h1];
      const auto& q = out.ones[h2];
      int m0 = b.cells1[h1].src, m1 = b.cells1[h1].dst;
      for (int u : N.cat.hom(p.n, q.n))
        for (int up : Np.cat.hom(p.np, q.np)) {
          int lhs = c.compose(q.f, M.tensor_mor(Fpm.map2[up], c.identity[m0]));
          int rhs = c.compose(M.tensor_mor(c.identity[m1], Fm.map2[u]), p.f);
          if (lhs != rhs) continue;
          tix[{h1, h2, u, up}] = b.n2();
          out.twos.push_back({u, up});
          b.cells2.push_back({tup({b.cells1[h1].id, b.cells1[h2].id,
                                   N.cat.mors[u].id, Np.cat.mors[up].id}),
                              h1, h2});
        }
    }
  b.id2.resize(b.n1());
  for (int h = 0; h < b.n1(); ++h)
    b.id2[h] = tix.at({h, h, N.cat.identity[out.ones[h].n],
                       Np.cat.identity[out.ones[h].np]});
  for (int t2 = 0; t2 < b.n2(); ++t2)
    for (int t1 = 0; t1 < b.n2(); ++t1) {
      if (b.cells2[t1].dst == b.cells2[t2].src) {
        int u = N.cat.compose(out.twos[t2].first, out.twos[t1].first);
        int up = Np.cat.compose(out.twos[t2].second, out.twos[t1].second);
        b.set_vcomp(t2, t1, tix.at({b.cells2[t1].src, b.cells2[t2].dst, u, up}));
      }
      if (b.h_composable2(t2, t1)) {
        int u = M.tensor_mor(0, 0);  // placeholder avoided below
        (void)u;
        int un = N.tensor_mor(out.twos[t2].first, out.twos[t1].first);
        int unp = Np.tensor_mor(out.twos[t2].second, out.twos[t1].second);
        int s1 = b.hcomp1(b.cells2[t2].src, b.cells2[t1].src);
        int d1 = b.hcomp1(b.cells2[t2].dst, b.cells2[t1].dst);
        b.set_hcomp2(t2, t1, tix.at({s1, d1, un, unp}));
      }
    }
  for (int h3 = 0; h3 < b.n1(); ++h3)
    for (int h2 = 0; h2 < b.n1(); ++h2) {
      if (!b.h_composable1(h3, h2)) continue;
      for (int h1 = 0; h1 < b.n1(); ++h1) {
        if (!b.h_composable1(h2, h1)) continue;
        int an = N.assoc(out.ones[h3].n, out.ones[h2].n, out.ones[h1].n);
        int anp = Np.assoc(out.ones[h3].np, out.ones[h2].np, out.ones[h1].np);
        int s1 = b.hcomp1(b.hcomp1(h3, h2), h1);
        int d1 = b.hcomp1(h3, b.hcomp1(h2, h1));
        b.set_assoc(h3, h2, h1, tix.at({s1, d1, an, anp}));
      }
    }
  b.lunit.resize(b.n1());
  b.runit.resize(b.n1());
  for (int h = 0; h < b.n1(); ++h) {
    int X = b.cells1[h].src, Y = b.cells1[h].dst;
    b.lunit[h] = tix.at({b.hcomp1(b.id1[Y], h), h, N.lunit[out.ones[h].n],
                         Np.lunit[out.ones[h].np]});
    b.runit[h] = tix.at({b.hcomp1(h, b.id1[X]), h, N.runit[out.ones[h].n],
                         Np.runit[out.ones[h].np]});
  }
  b.finalize();
  return out;
}

ValidationReport check_fibre_identification(const MonoidalFunctor& F,
                                            const MonoidalFunctor& Fp) {
  ValidationReport rep;
  rep.subject = "fibre-identification(" + F.name + "," + Fp.name + ")";
  auto direct = monoidal_fibre(F, Fp);
  auto cc = hofib::comma::comma(F.sigma, Fp.sigma.as_dir(Dir::Oplax));
  const auto& D = *direct.bi;
  const auto& C = *cc.c.bi;
  if (D.n_obj() != C.n_obj() || D.n1() != C.n1() || D.n2() != C.n2()) {
    rep.fail("cell-counts", rep.subject);
    return rep;
  }
  // canonical identification: comma 0-cell (*, m, *) -> m
  std::vector<int> m0(C.n_obj()), m1(C.n1()), m2(C.n2());
  for (int X = 0; X < C.n_obj(); ++X) m0[X] = direct.find_obj(cc.c.objs[X].f);
  for (int h = 0; h < C.n1(); ++h) {
    const auto& o = cc.c.ones[h];
    m1[h] = direct.find_one(m0[C.cells1[h].src], m0[C.cells1[h].dst], o.u, o.beta,
                            o.up);
  }
  for (int t = 0; t < C.n2(); ++t) {
    const auto& w = cc.c.twos[t];
    bool found = false;
    for (int cand : D.cells2_between(m1[C.cells2[t].src], m1[C.cells2[t].dst]))
      if (direct.twos[cand] == std::make_pair(w.alpha, w.alphap)) {
        m2[t] = cand;
        found = true;
        break;
      }
    if (!found) {
      rep.fail("2-cell-missing", C.cells2[t].id);
      return rep;
    }
  }
  // transport every table
  for (int h2 = 0; h2 < C.n1(); ++h2)
    for (int h1 = 0; h1 < C.n1(); ++h1)
      if (C.h_composable1(h2, h1) &&
          m1[C.hcomp1(h2, h1)] != D.hcomp1(m1[h2], m1[h1]))
        rep.fail("hcomp1-mismatch", tup({C.cells1[h2].id, C.cells1[h1].id}));
  for (int t2 = 0; t2 < C.n2(); ++t2)
    for (int t1 = 0; t1 < C.n2(); ++t1) {
      if (C.cells2[t1].dst == C.cells2[t2].src &&
          m2[C.vcomp(t2, t1)] != D.vcomp(m2[t2], m2[t1]))
        rep.fail("vcomp-mismatch", tup({C.cells2[t2].id, C.cells2[t1].id}));
      if (C.h_composable2(t2, t1) &&
          m2[C.hcomp2(t2, t1)] != D.hcomp2(m2[t2], m2[t1]))
        rep.fail("hcomp2-mismatch", tup({C.cells2[t2].id, C.cells2[t1].id}));
    }
  for (int X = 0; X < C.n_obj(); ++X)
    if (m1[C.id1[X]] != D.id1[m0[X]]) rep.fail("id1-mismatch", C.objects[X]);
  for (int h = 0; h < C.n1(); ++h) {
    if (m2[C.id2[h]] != D.id2[m1[h]]) rep.fail("id2-mismatch", C.cells1[h].id);
    if (m2[C.lunit[h]] != D.lunit[m1[h]]) rep.fail("lunit-mismatch", C.cells1[h].id);
    if (m2[C.runit[h]] != D.runit[m1[h]]) rep.fail("runit-mismatch", C.cells1[h].id);
  }
  for (const auto& [key, val] : C.assoc_) {
    int f3 = static_cast<int>(key >> 42);
    int f2 = static_cast<int>((key >> 21) & ((1u << 21) - 1));
    int f1 = static_cast<int>(key & ((1u << 21) - 1));
    if (m2[val] != D.assoc(m1[f3], m1[f2], m1[f1]))
      rep.fail("assoc-mismatch",
               tup({C.cells1[f3].id, C.cells1[f2].id, C.cells1[f1].id}));
  }
  return rep;
}

bicat::LaxMorphism tensor_translation(const MonoidalCategory& m, int mobj,
                                      Side side, const MonoidalFunctor& F,
                                      const MonoidalFibre& fib) {
  const auto& c = m.cat;
  const auto& b = *fib.bi;
  bicat::LaxMorphism t;
  t.name = (side == Side::Left ? "(" + c.objects[mobj] + " x -)"
                               : "(- x " + c.objects[mobj] + ")");
  t.dir = Dir::Lax;
  t.src = fib.bi;
  t.dst = fib.bi;
  auto t_obj = [&](int x) {
    return side == Side::Left ? m.tensor(mobj, x) : m.tensor(x, mobj);
  };
  for (int X = 0; X < b.n_obj(); ++X)
    t.map0.push_back(fib.find_obj(t_obj(fib.objs[X])));
  for (int h = 0; h < b.n1(); ++h) {
    const auto& o = fib.ones[h];
    int m0 = fib.objs[b.cells1[h].src];
    int m1 = fib.objs[b.cells1[h].dst];
    int cell;
    if (side == Side::Left) {
      // m (.) f = a^{-1} . (1 x f) . (1 x l^{-1}) . l
      int Fn = F.sigma.map1[o.n];
      cell = c.compose(
          inv_mor(c, m.assoc(mobj, m1, Fn)),
          c.compose(m.tensor_mor(c.identity[mobj], o.f),
                    c.compose(m.tensor_mor(c.identity[mobj],
                                           inv_mor(c, m.lunit[m0])),
                              m.lunit[m.tensor(mobj, m0)])));
    } else {
      // g (.) m = r^{-1} . (r x 1) . (g x 1) . a^{-1}
      int Fpn = F.sigma.map1[o.np];
      cell = c.compose(
          inv_mor(c, m.runit[m.tensor(m1, mobj)]),
          c.compose(m.tensor_mor(m.runit[m1], c.identity[mobj]),
                    c.compose(m.tensor_mor(o.f, c.identity[mobj]),
                              inv_mor(c, m.assoc(Fpn, m0, mobj)))));
    }
    t.map1.push_back(fib.find_one(t.map0[b.cells1[h].src],
                                  t.map0[b.cells1[h].dst], o.n, cell, o.np));
  }
  for (int w = 0; w < b.n2(); ++w) {
    auto [u, up] = fib.twos[w];
    int h1 = t.map1[b.cells2[w].src];
    int h2 = t.map1[b.cells2[w].dst];
    bool found = false;
    for (int cand : b.cells2_between(h1, h2))
      if (fib.twos[cand] == std::make_pair(u, up)) {
        t.map2.push_back(cand);
        found = true;
        break;
      }
    if (!found) throw std::out_of_range("tensor_translation: missing 2-cell");
  }
  for (int h2 = 0; h2 < b.n1(); ++h2)
    for (int h1 = 0; h1 < b.n1(); ++h1)
      if (b.h_composable1(h2, h1))
        t.set_comp_cell(h2, h1, b.id2[b.hcomp1(t.map1[h2], t.map1[h1])]);
  for (int X = 0; X < b.n_obj(); ++X)
    t.unit_cell.push_back(b.id2[t.map1[b.id1[X]]]);
  return t;
}

RegularityResult regularity_check(const MonoidalCategory& m) {
  RegularityResult res;
  const auto& c = m.cat;
  const int nobj = c.n_obj();

  // iso[x][y]: an isomorphism x -> y exists in the underlying category.
  std::vector<std::vector<bool>> iso(nobj, std::vector<bool>(nobj, false));
  std::vector<bool> mor_invertible(c.n_mor(), false);
  for (int u = 0; u < c.n_mor(); ++u)
    for (int v = 0; v < c.n_mor(); ++v) {
      if (c.mors[u].dst != c.mors[v].src || c.mors[u].src != c.mors[v].dst)
        continue;
      if (c.compose(v, u) == c.identity[c.mors[u].src] &&
          c.compose(u, v) == c.identity[c.mors[v].src]) {
        iso[c.mors[u].src][c.mors[u].dst] = true;
        mor_invertible[u] = true;
      }
    }
  for (int x = 0; x < nobj; ++x) iso[x][x] = true;

  auto check_translation = [&](int mobj, bool left) {
    auto t_obj = [&](int x) { return left ? m.tensor(mobj, x) : m.tensor(x, mobj); };
    auto t_mor = [&](int u) {
      int one = c.identity[mobj];
      return left ? m.tensor_mor(one, u) : m.tensor_mor(u, one);
    };
    for (int y = 0; y < nobj; ++y) {
      bool hit = false;
      for (int x = 0; x < nobj && !hit; ++x)
        if (iso[t_obj(x)][y]) hit = true;
      if (!hit) {
        res.regular = false;
        res.witnesses.push_back("translation(" + c.objects[mobj] +
                                (left ? ",left" : ",right") + ") misses object " +
                                c.objects[y]);
        return;
      }
    }
    for (int x = 0; x < nobj; ++x)
      for (int y = 0; y < nobj; ++y) {
        auto dom = c.hom(x, y);
        auto cod = c.hom(t_obj(x), t_obj(y));
        std::vector<int> image;
        for (int u : dom) image.push_back(t_mor(u));
        for (std::size_t i = 0; i < image.size(); ++i)
          for (std::size_t j = 0; j < i; ++j)
            if (image[i] == image[j]) {
              res.regular = false;
              res.witnesses.push_back("translation(" + c.objects[mobj] +
                                      ") not faithful on hom(" + c.objects[x] +
                                      "," + c.objects[y] + ")");
              return;
            }
        for (int v : cod)
          if (std::find(image.begin(), image.end(), v) == image.end()) {
            res.regular = false;
            res.witnesses.push_back("translation(" + c.objects[mobj] +
                                    ") not full on hom(" + c.objects[x] + "," +
                                    c.objects[y] + ")");
            return;
          }
      }
  };
  for (int mobj = 0; mobj < nobj; ++mobj) {
    check_translation(mobj, true);
    check_translation(mobj, false);
  }

  for (int u = 0; u < c.n_mor(); ++u)
    if (!mor_invertible[u]) {
      res.categorical_group = false;
      res.witnesses.push_back("morphism not invertible: " + c.mors[u].id);
      break;
    }
  for (int x = 0; x < nobj && res.categorical_group; ++x) {
    bool has_inverse = false;
    for (int y = 0; y < nobj && !has_inverse; ++y)
      if (iso[m.tensor(x, y)][m.unit] && iso[m.tensor(y, x)][m.unit])
        has_inverse = true;
    if (!has_inverse) {
      res.categorical_group = false;
      res.witnesses.push_back("object not weakly invertible: " + c.objects[x]);
    }
  }
  return res;
}

}  // namespace hofib::monoidal
