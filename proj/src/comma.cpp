#include "hofib/comma.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <functional>
#include <tuple>

namespace hofib::comma {

using bicat::LaxTransformation;

namespace {

struct CommaIndex {
  std::map<std::tuple<int, int, int>, int> obj;
  std::map<std::tuple<int, int, int, int, int>, int> one;   // srcO,dstO,u,beta,up
  std::map<std::tuple<int, int, int, int>, int> two;        // srcOne,dstOne,al,alp
};

// inv2 lookup that throws instead of returning -1; every cell inverted here
// is a constraint or a structure iso.
int inv_cell(const bicat::FiniteBicategory& B, int c, const char* what) {
  int r = B.inv2(c);
  if (r < 0)
    throw std::out_of_range(B.name + ": missing inverse for " + what + " (" +
                            B.cells2[c].id + ")");
  return r;
}

}  // namespace

int CommaBicategory::find_obj(int a, int f, int ap) const {
  for (int i = 0; i < static_cast<int>(objs.size()); ++i)
    if (objs[i].a == a && objs[i].f == f && objs[i].ap == ap) return i;
  throw std::out_of_range(bi->name + ": no 0-cell with the given components");
}

int CommaBicategory::find_one(int obj_src, int obj_dst, int u, int beta,
                              int up) const {
  for (int i = 0; i < static_cast<int>(ones.size()); ++i) {
    const auto& c1 = bi->cells1[i];
    if (c1.src == obj_src && c1.dst == obj_dst && ones[i].u == u &&
        ones[i].beta == beta && ones[i].up == up)
      return i;
  }
  throw std::out_of_range(bi->name + ": no 1-cell with the given components");
}

CommaResult comma(const LaxMorphism& F, const LaxMorphism& Fp) {
  if (F.dir != Dir::Lax || Fp.dir != Dir::Oplax)
    throw std::invalid_argument("comma: need a lax and an oplax functor");
  if (F.dst.get() != Fp.dst.get())
    throw std::invalid_argument("comma: mismatched targets");
  const auto& A = *F.src;
  const auto& Ap = *Fp.src;
  const auto& B = *F.dst;

  CommaResult out;
  auto& C = out.c;
  C.F = F;
  C.Fp = Fp;
  C.bi = std::make_shared<bicat::FiniteBicategory>();
  auto& bi = *C.bi;
  bi.name = "(" + F.name + "|" + Fp.name + ")";
  CommaIndex ix;

  // 0-cells (a, f, a').
  for (int a = 0; a < A.n_obj(); ++a)
    for (int ap = 0; ap < Ap.n_obj(); ++ap)
      for (int f : B.hom1(F.map0[a], Fp.map0[ap])) {
        ix.obj[{a, f, ap}] = bi.n_obj();
        C.objs.push_back({a, f, ap});
        bi.objects.push_back(tup({A.objects[a], B.cells1[f].id, Ap.objects[ap]}));
      }

  // 1-cells (u, beta, u') : beta : F'u' o f0 => f1 o Fu.
  for (int X = 0; X < bi.n_obj(); ++X)
    for (int Y = 0; Y < bi.n_obj(); ++Y) {
      const auto& ox = C.objs[X];
      const auto& oy = C.objs[Y];
      for (int u : A.hom1(ox.a, oy.a))
        for (int up : Ap.hom1(ox.ap, oy.ap)) {
          int lhs = B.hcomp1(Fp.map1[up], ox.f);
          int rhs = B.hcomp1(oy.f, F.map1[u]);
          for (int beta : B.cells2_between(lhs, rhs)) {
            ix.one[{X, Y, u, beta, up}] = bi.n1();
            C.ones.push_back({u, beta, up});
            bi.cells1.push_back(
                {tup({bi.objects[X], bi.objects[Y], A.cells1[u].id,
                      B.cells2[beta].id, Ap.cells1[up].id}),
                 X, Y});
          }
        }
    }

  // Horizontal composition of 1-cells.
  for (int h2 = 0; h2 < bi.n1(); ++h2)
    for (int h1 = 0; h1 < bi.n1(); ++h1) {
      if (bi.cells1[h1].dst != bi.cells1[h2].src) continue;
      const auto& c1 = C.ones[h1];
      const auto& c2 = C.ones[h2];
      const auto& o0 = C.objs[bi.cells1[h1].src];
      const auto& o1 = C.objs[bi.cells1[h1].dst];
      const auto& o2 = C.objs[bi.cells1[h2].dst];
      int u21 = A.hcomp1(c2.u, c1.u);
      int up21 = Ap.hcomp1(c2.up, c1.up);
      int Fu1 = F.map1[c1.u], Fu2 = F.map1[c2.u];
      int Fpu1 = Fp.map1[c1.up], Fpu2 = Fp.map1[c2.up];
      int pasted = B.vchain(
          {B.hcomp2(B.id2[o2.f], F.comp_cell(c2.u, c1.u)),
           B.assoc(o2.f, Fu2, Fu1),
           B.hcomp2(c2.beta, B.id2[Fu1]),
           inv_cell(B, B.assoc(Fpu2, o1.f, Fu1), "assoc"),
           B.hcomp2(B.id2[Fpu2], c1.beta),
           B.assoc(Fpu2, Fpu1, o0.f),
           B.hcomp2(Fp.comp_cell(c2.up, c1.up), B.id2[o0.f])});
      auto it = ix.one.find({bi.cells1[h1].src, bi.cells1[h2].dst, u21, pasted, up21});
      if (it == ix.one.end())
        throw std::out_of_range(bi.name + ": pasted composite not a 1-cell");
      bi.set_hcomp1(h2, h1, it->second);
    }

  // Identity 1-cells.
  bi.id1.resize(bi.n_obj());
  for (int X = 0; X < bi.n_obj(); ++X) {
    const auto& o = C.objs[X];
    int one_cell = B.vchain(
        {B.hcomp2(B.id2[o.f], F.unit_cell[o.a]),
         inv_cell(B, B.runit[o.f], "runit"), B.lunit[o.f],
         B.hcomp2(Fp.unit_cell[o.ap], B.id2[o.f])});
    bi.id1[X] = ix.one.at({X, X, A.id1[o.a], one_cell, Ap.id1[o.ap]});
  }

  // 2-cells (alpha, alpha') subject to the compatibility square.
  for (int h1 = 0; h1 < bi.n1(); ++h1)
    for (int h2 = 0; h2 < bi.n1(); ++h2) {
      if (bi.cells1[h1].src != bi.cells1[h2].src ||
          bi.cells1[h1].dst != bi.cells1[h2].dst)
        continue;
      const auto& p = C.ones[h1];
      const auto& q = C.ones[h2];
      const auto& o0 = C.objs[bi.cells1[h1].src];
      const auto& o1 = C.objs[bi.cells1[h1].dst];
      for (int alpha : A.cells2_between(p.u, q.u))
        for (int alphap : Ap.cells2_between(p.up, q.up)) {
          int lhs = B.vcomp(q.beta, B.hcomp2(Fp.map2[alphap], B.id2[o0.f]));
          int rhs = B.vcomp(B.hcomp2(B.id2[o1.f], F.map2[alpha]), p.beta);
          if (lhs != rhs) continue;
          ix.two[{h1, h2, alpha, alphap}] = bi.n2();
          C.twos.push_back({alpha, alphap});
          bi.cells2.push_back({tup({bi.cells1[h1].id, bi.cells1[h2].id,
                                    A.cells2[alpha].id, Ap.cells2[alphap].id}),
                               h1, h2});
        }
    }

  // Identity 2-cells, vertical and horizontal composition of 2-cells.
  bi.id2.resize(bi.n1());
  for (int h = 0; h < bi.n1(); ++h)
    bi.id2[h] = ix.two.at({h, h, A.id2[C.ones[h].u], Ap.id2[C.ones[h].up]});
  for (int t2 = 0; t2 < bi.n2(); ++t2)
    for (int t1 = 0; t1 < bi.n2(); ++t1) {
      if (bi.cells2[t1].dst == bi.cells2[t2].src) {
        int al = A.vcomp(C.twos[t2].alpha, C.twos[t1].alpha);
        int alp = Ap.vcomp(C.twos[t2].alphap, C.twos[t1].alphap);
        bi.set_vcomp(t2, t1, ix.two.at({bi.cells2[t1].src, bi.cells2[t2].dst, al, alp}));
      }
      if (bi.h_composable2(t2, t1)) {
        int al = A.hcomp2(C.twos[t2].alpha, C.twos[t1].alpha);
        int alp = Ap.hcomp2(C.twos[t2].alphap, C.twos[t1].alphap);
        int src1 = bi.hcomp1(bi.cells2[t2].src, bi.cells2[t1].src);
        int dst1 = bi.hcomp1(bi.cells2[t2].dst, bi.cells2[t1].dst);
        bi.set_hcomp2(t2, t1, ix.two.at({src1, dst1, al, alp}));
      }
    }

  // Constraints, inherited componentwise.
  for (int h3 = 0; h3 < bi.n1(); ++h3)
    for (int h2 = 0; h2 < bi.n1(); ++h2) {
      if (!bi.h_composable1(h3, h2)) continue;
      for (int h1 = 0; h1 < bi.n1(); ++h1) {
        if (!bi.h_composable1(h2, h1)) continue;
        int al = A.assoc(C.ones[h3].u, C.ones[h2].u, C.ones[h1].u);
        int alp = Ap.assoc(C.ones[h3].up, C.ones[h2].up, C.ones[h1].up);
        int src1 = bi.hcomp1(bi.hcomp1(h3, h2), h1);
        int dst1 = bi.hcomp1(h3, bi.hcomp1(h2, h1));
        bi.set_assoc(h3, h2, h1, ix.two.at({src1, dst1, al, alp}));
      }
    }
  bi.lunit.resize(bi.n1());
  bi.runit.resize(bi.n1());
  for (int h = 0; h < bi.n1(); ++h) {
    int X = bi.cells1[h].src, Y = bi.cells1[h].dst;
    bi.lunit[h] = ix.two.at({bi.hcomp1(bi.id1[Y], h), h, A.lunit[C.ones[h].u],
                             Ap.lunit[C.ones[h].up]});
    bi.runit[h] = ix.two.at({bi.hcomp1(h, bi.id1[X]), h, A.runit[C.ones[h].u],
                             Ap.runit[C.ones[h].up]});
  }
  bi.finalize();

  // Projections.
  auto& P = out.proj.P;
  P.name = "P." + bi.name;
  P.dir = Dir::Lax;
  P.src = C.bi;
  P.dst = F.src;
  auto& Pp = out.proj.Pp;
  Pp.name = "P'." + bi.name;
  Pp.dir = Dir::Oplax;
  Pp.src = C.bi;
  Pp.dst = Fp.src;
  for (const auto& o : C.objs) {
    P.map0.push_back(o.a);
    Pp.map0.push_back(o.ap);
  }
  for (const auto& o : C.ones) {
    P.map1.push_back(o.u);
    Pp.map1.push_back(o.up);
  }
  for (const auto& t : C.twos) {
    P.map2.push_back(t.alpha);
    Pp.map2.push_back(t.alphap);
  }
  for (int h2 = 0; h2 < bi.n1(); ++h2)
    for (int h1 = 0; h1 < bi.n1(); ++h1) {
      if (!bi.h_composable1(h2, h1)) continue;
      P.set_comp_cell(h2, h1, A.id2[A.hcomp1(C.ones[h2].u, C.ones[h1].u)]);
      Pp.set_comp_cell(h2, h1, Ap.id2[Ap.hcomp1(C.ones[h2].up, C.ones[h1].up)]);
    }
  for (int X = 0; X < bi.n_obj(); ++X) {
    P.unit_cell.push_back(A.id2[A.id1[C.objs[X].a]]);
    Pp.unit_cell.push_back(Ap.id2[Ap.id1[C.objs[X].ap]]);
  }
  return out;
}

CommaResult fibre(const LaxMorphism& F, int b) {
  return comma(F, bicat::object_homomorphism(b, F.dst, Dir::Oplax));
}

CommaResult fibre(int b, const LaxMorphism& Fp) {
  return comma(bicat::object_homomorphism(b, Fp.dst, Dir::Lax), Fp);
}

namespace {

// p (.) beta for the lower translation.
int lower_cell(const bicat::FiniteBicategory& B, int p, int f0, int f1, int Fu,
               int beta) {
  return B.vchain({inv_cell(B, B.assoc(p, f1, Fu), "assoc"),
                   B.hcomp2(B.id2[p], beta),
                   B.hcomp2(B.id2[p], inv_cell(B, B.lunit[f0], "lunit")),
                   B.lunit[B.hcomp1(p, f0)]});
}

// beta (.) p for the upper translation.
int upper_cell(const bicat::FiniteBicategory& B, int p, int f0, int f1, int Fpu,
               int beta) {
  return B.vchain({inv_cell(B, B.runit[B.hcomp1(f1, p)], "runit"),
                   B.hcomp2(B.runit[f1], B.id2[p]),
                   B.hcomp2(beta, B.id2[p]),
                   inv_cell(B, B.assoc(Fpu, f0, p), "assoc")});
}

LaxMorphism translate_lower_on(const CommaResult& src, const CommaResult& dst,
                               const LaxMorphism& F, int p) {
  const auto& B = *F.dst;
  LaxMorphism t;
  t.name = "(" + B.cells1[p].id + ")_*";
  t.dir = Dir::Lax;
  t.src = src.c.bi;
  t.dst = dst.c.bi;
  for (const auto& o : src.c.objs)
    t.map0.push_back(dst.c.find_obj(o.a, B.hcomp1(p, o.f), o.ap));
  const auto& sbi = *src.c.bi;
  for (int h = 0; h < sbi.n1(); ++h) {
    const auto& c = src.c.ones[h];
    const auto& o0 = src.c.objs[sbi.cells1[h].src];
    const auto& o1 = src.c.objs[sbi.cells1[h].dst];
    int cell = lower_cell(B, p, o0.f, o1.f, F.map1[c.u], c.beta);
    t.map1.push_back(dst.c.find_one(t.map0[sbi.cells1[h].src],
                                    t.map0[sbi.cells1[h].dst], c.u, cell, c.up));
  }
  const auto& dbi = *dst.c.bi;
  for (int w = 0; w < sbi.n2(); ++w) {
    const auto& tw = src.c.twos[w];
    int h1 = t.map1[sbi.cells2[w].src];
    int h2 = t.map1[sbi.cells2[w].dst];
    // componentwise: same (alpha, alpha')
    bool found = false;
    for (int cand : dbi.cells2_between(h1, h2))
      if (dst.c.twos[cand].alpha == tw.alpha &&
          dst.c.twos[cand].alphap == tw.alphap) {
        t.map2.push_back(cand);
        found = true;
        break;
      }
    if (!found) throw std::out_of_range("translate: missing image 2-cell");
  }
  for (int h2 = 0; h2 < sbi.n1(); ++h2)
    for (int h1 = 0; h1 < sbi.n1(); ++h1)
      if (sbi.h_composable1(h2, h1))
        t.set_comp_cell(h2, h1, dbi.id2[dbi.hcomp1(t.map1[h2], t.map1[h1])]);
  for (int X = 0; X < sbi.n_obj(); ++X)
    t.unit_cell.push_back(dbi.id2[t.map1[sbi.id1[X]]]);
  return t;
}

LaxMorphism translate_upper_on(const CommaResult& src, const CommaResult& dst,
                               const LaxMorphism& Fp, int p) {
  const auto& B = *Fp.dst;
  LaxMorphism t;
  t.name = "(" + B.cells1[p].id + ")^*";
  t.dir = Dir::Lax;
  t.src = src.c.bi;
  t.dst = dst.c.bi;
  for (const auto& o : src.c.objs)
    t.map0.push_back(dst.c.find_obj(o.a, B.hcomp1(o.f, p), o.ap));
  const auto& sbi = *src.c.bi;
  for (int h = 0; h < sbi.n1(); ++h) {
    const auto& c = src.c.ones[h];
    const auto& o0 = src.c.objs[sbi.cells1[h].src];
    const auto& o1 = src.c.objs[sbi.cells1[h].dst];
    int cell = upper_cell(B, p, o0.f, o1.f, Fp.map1[c.up], c.beta);
    t.map1.push_back(dst.c.find_one(t.map0[sbi.cells1[h].src],
                                    t.map0[sbi.cells1[h].dst], c.u, cell, c.up));
  }
  const auto& dbi = *dst.c.bi;
  for (int w = 0; w < sbi.n2(); ++w) {
    const auto& tw = src.c.twos[w];
    int h1 = t.map1[sbi.cells2[w].src];
    int h2 = t.map1[sbi.cells2[w].dst];
    bool found = false;
    for (int cand : dbi.cells2_between(h1, h2))
      if (dst.c.twos[cand].alpha == tw.alpha &&
          dst.c.twos[cand].alphap == tw.alphap) {
        t.map2.push_back(cand);
        found = true;
        break;
      }
    if (!found) throw std::out_of_range("translate: missing image 2-cell");
  }
  for (int h2 = 0; h2 < sbi.n1(); ++h2)
    for (int h1 = 0; h1 < sbi.n1(); ++h1)
      if (sbi.h_composable1(h2, h1))
        t.set_comp_cell(h2, h1, dbi.id2[dbi.hcomp1(t.map1[h2], t.map1[h1])]);
  for (int X = 0; X < sbi.n_obj(); ++X)
    t.unit_cell.push_back(dbi.id2[t.map1[sbi.id1[X]]]);
  return t;
}

}  // namespace

Translation translate_lower(const LaxMorphism& F, int p) {
  const auto& B = *F.dst;
  Translation tr;
  tr.src = fibre(F, B.cells1[p].src);
  tr.dst = fibre(F, B.cells1[p].dst);
  tr.functor = translate_lower_on(tr.src, tr.dst, F, p);
  return tr;
}

Translation translate_upper(int p, const LaxMorphism& Fp) {
  const auto& B = *Fp.dst;
  Translation tr;
  tr.src = fibre(B.cells1[p].dst, Fp);
  tr.dst = fibre(B.cells1[p].src, Fp);
  tr.functor = translate_upper_on(tr.src, tr.dst, Fp, p);
  return tr;
}

TranslationCompare compare_translate_composite(const LaxMorphism& F, int p, int q) {
  const auto& B = *F.dst;
  if (B.cells1[q].dst != B.cells1[p].src)
    throw std::invalid_argument("compare_translate_composite: p, q not composable");
  TranslationCompare res;
  int pq = B.hcomp1(p, q);
  auto f0 = fibre(F, B.cells1[q].src);
  const auto& sbi = *f0.c.bi;
  for (int h = 0; h < sbi.n1(); ++h) {
    const auto& c = f0.c.ones[h];
    const auto& o0 = f0.c.objs[sbi.cells1[h].src];
    const auto& o1 = f0.c.objs[sbi.cells1[h].dst];
    int Fu = F.map1[c.u];
    int via_pq = lower_cell(B, pq, o0.f, o1.f, Fu, c.beta);
    int qb = lower_cell(B, q, o0.f, o1.f, Fu, c.beta);
    int via_steps =
        lower_cell(B, p, B.hcomp1(q, o0.f), B.hcomp1(q, o1.f), Fu, qb);
    if (B.hcomp1(pq, o0.f) == B.hcomp1(p, B.hcomp1(q, o0.f)) &&
        B.hcomp1(pq, o1.f) == B.hcomp1(p, B.hcomp1(q, o1.f))) {
      if (via_pq != via_steps) res.strictly_equal = false;
    } else {
      res.strictly_equal = false;
    }
    // Conjugation through the associativity constraint:
    //   (a_{p,q,f1} o 1_{Fu}) . ((pq)(.)beta) = (p(.)(q(.)beta)) . (1 o a_{p,q,f0})
    int one_b2 = B.id1[B.cells1[p].dst];
    int lhs = B.vcomp(B.hcomp2(B.assoc(p, q, o1.f), B.id2[Fu]), via_pq);
    int rhs = B.vcomp(via_steps, B.hcomp2(B.id2[one_b2], B.assoc(p, q, o0.f)));
    if (lhs != rhs) {
      res.assoc_conjugate = false;
      res.mismatches.push_back(sbi.cells1[h].id);
    }
  }
  return res;
}

BarLift bar_lift(const LaxMorphism& F, const LaxMorphism& Fp) {
  BarLift out;
  out.ff = comma(F, Fp);
  out.bf = comma(LaxMorphism::identity(F.dst, Dir::Lax), Fp);
  out.fb = comma(F, LaxMorphism::identity(F.dst, Dir::Oplax));
  const auto& A = *F.src;
  const auto& Ap = *Fp.src;
  const auto& ff = out.ff.c;
  const auto& bf = out.bf.c;
  const auto& fb = out.fb.c;

  auto& bar = out.bar_f;
  bar.name = "bar(" + F.name + ")";
  bar.dir = Dir::Lax;
  bar.src = ff.bi;
  bar.dst = bf.bi;
  for (const auto& o : ff.objs)
    bar.map0.push_back(bf.find_obj(F.map0[o.a], o.f, o.ap));
  for (int h = 0; h < ff.bi->n1(); ++h) {
    const auto& c = ff.ones[h];
    bar.map1.push_back(bf.find_one(bar.map0[ff.bi->cells1[h].src],
                                   bar.map0[ff.bi->cells1[h].dst], F.map1[c.u],
                                   c.beta, c.up));
  }
  for (int w = 0; w < ff.bi->n2(); ++w) {
    const auto& t = ff.twos[w];
    int h1 = bar.map1[ff.bi->cells2[w].src];
    int h2 = bar.map1[ff.bi->cells2[w].dst];
    bool found = false;
    for (int cand : bf.bi->cells2_between(h1, h2))
      if (bf.twos[cand].alpha == F.map2[t.alpha] &&
          bf.twos[cand].alphap == t.alphap) {
        bar.map2.push_back(cand);
        found = true;
        break;
      }
    if (!found) throw std::out_of_range("bar_lift: missing 2-cell image");
  }
  for (int h2 = 0; h2 < ff.bi->n1(); ++h2)
    for (int h1 = 0; h1 < ff.bi->n1(); ++h1) {
      if (!ff.bi->h_composable1(h2, h1)) continue;
      // structure cell (Fhat_{u2,u1}, identity)
      int src1 = bf.bi->hcomp1(bar.map1[h2], bar.map1[h1]);
      int dst1 = bar.map1[ff.bi->hcomp1(h2, h1)];
      int want_a = F.comp_cell(ff.ones[h2].u, ff.ones[h1].u);
      int want_ap = Ap.id2[Ap.hcomp1(ff.ones[h2].up, ff.ones[h1].up)];
      bool found = false;
      for (int cand : bf.bi->cells2_between(src1, dst1))
        if (bf.twos[cand].alpha == want_a && bf.twos[cand].alphap == want_ap) {
          bar.set_comp_cell(h2, h1, cand);
          found = true;
          break;
        }
      if (!found) throw std::out_of_range("bar_lift: missing structure cell");
    }
  for (int X = 0; X < ff.bi->n_obj(); ++X) {
    int src1 = bf.bi->id1[bar.map0[X]];
    int dst1 = bar.map1[ff.bi->id1[X]];
    int want_a = F.unit_cell[ff.objs[X].a];
    int want_ap = Ap.id2[Ap.id1[ff.objs[X].ap]];
    bool found = false;
    for (int cand : bf.bi->cells2_between(src1, dst1))
      if (bf.twos[cand].alpha == want_a && bf.twos[cand].alphap == want_ap) {
        bar.unit_cell.push_back(cand);
        found = true;
        break;
      }
    if (!found) throw std::out_of_range("bar_lift: missing unit cell");
  }

  auto& barp = out.bar_fp;
  barp.name = "bar(" + Fp.name + ")";
  barp.dir = Dir::Oplax;
  barp.src = ff.bi;
  barp.dst = fb.bi;
  for (const auto& o : ff.objs)
    barp.map0.push_back(fb.find_obj(o.a, o.f, Fp.map0[o.ap]));
  for (int h = 0; h < ff.bi->n1(); ++h) {
    const auto& c = ff.ones[h];
    barp.map1.push_back(fb.find_one(barp.map0[ff.bi->cells1[h].src],
                                    barp.map0[ff.bi->cells1[h].dst], c.u, c.beta,
                                    Fp.map1[c.up]));
  }
  for (int w = 0; w < ff.bi->n2(); ++w) {
    const auto& t = ff.twos[w];
    int h1 = barp.map1[ff.bi->cells2[w].src];
    int h2 = barp.map1[ff.bi->cells2[w].dst];
    bool found = false;
    for (int cand : fb.bi->cells2_between(h1, h2))
      if (fb.twos[cand].alpha == t.alpha &&
          fb.twos[cand].alphap == Fp.map2[t.alphap]) {
        barp.map2.push_back(cand);
        found = true;
        break;
      }
    if (!found) throw std::out_of_range("bar_lift: missing 2-cell image");
  }
  for (int h2 = 0; h2 < ff.bi->n1(); ++h2)
    for (int h1 = 0; h1 < ff.bi->n1(); ++h1) {
      if (!ff.bi->h_composable1(h2, h1)) continue;
      // oplax: barp(x2 o x1) => barp(x2) o barp(x1), components (1, Fphat)
      int src1 = barp.map1[ff.bi->hcomp1(h2, h1)];
      int dst1 = fb.bi->hcomp1(barp.map1[h2], barp.map1[h1]);
      int want_a = A.id2[A.hcomp1(ff.ones[h2].u, ff.ones[h1].u)];
      int want_ap = Fp.comp_cell(ff.ones[h2].up, ff.ones[h1].up);
      bool found = false;
      for (int cand : fb.bi->cells2_between(src1, dst1))
        if (fb.twos[cand].alpha == want_a && fb.twos[cand].alphap == want_ap) {
          barp.set_comp_cell(h2, h1, cand);
          found = true;
          break;
        }
      if (!found) throw std::out_of_range("bar_lift: missing structure cell");
    }
  for (int X = 0; X < ff.bi->n_obj(); ++X) {
    int src1 = barp.map1[ff.bi->id1[X]];
    int dst1 = fb.bi->id1[barp.map0[X]];
    int want_a = A.id2[A.id1[ff.objs[X].a]];
    int want_ap = Fp.unit_cell[ff.objs[X].ap];
    bool found = false;
    for (int cand : fb.bi->cells2_between(src1, dst1))
      if (fb.twos[cand].alpha == want_a && fb.twos[cand].alphap == want_ap) {
        barp.unit_cell.push_back(cand);
        found = true;
        break;
      }
    if (!found) throw std::out_of_range("bar_lift: missing unit cell");
  }
  return out;
}

LaxMorphism mediating(const BarLift& squares, const LaxMorphism& L,
                      const LaxMorphism& M) {
  const auto& F = squares.ff.c.F;
  const auto& ff = squares.ff.c;
  const auto& bf = squares.bf.c;
  const auto& P_bf = squares.bf.proj.P;
  if (L.dir != Dir::Lax || M.dir != Dir::Lax)
    throw std::invalid_argument("mediating: both cone legs must be lax");
  if (L.src.get() != M.src.get())
    throw std::invalid_argument("mediating: cone legs must share their source");
  if (M.dst.get() != bf.bi.get() || L.dst.get() != F.src.get())
    throw std::invalid_argument("mediating: cone legs have wrong targets");
  const auto& D = *L.src;
  // F . L = P . M must hold strictly.
  auto FL = bicat::compose_lax(F, L);
  auto PM = bicat::compose_lax(P_bf, M);
  if (!bicat::lax_equal(FL, PM))
    throw std::invalid_argument("mediating: F.L != P.M");

  LaxMorphism N;
  N.name = "N(" + L.name + "," + M.name + ")";
  N.dir = Dir::Lax;
  N.src = L.src;
  N.dst = ff.bi;
  for (int d = 0; d < D.n_obj(); ++d) {
    const auto& mo = bf.objs[M.map0[d]];
    N.map0.push_back(ff.find_obj(L.map0[d], mo.f, mo.ap));
  }
  for (int h = 0; h < D.n1(); ++h) {
    const auto& mh = bf.ones[M.map1[h]];
    N.map1.push_back(ff.find_one(N.map0[D.cells1[h].src], N.map0[D.cells1[h].dst],
                                 L.map1[h], mh.beta, mh.up));
  }
  for (int w = 0; w < D.n2(); ++w) {
    const auto& mw = bf.twos[M.map2[w]];
    int h1 = N.map1[D.cells2[w].src];
    int h2 = N.map1[D.cells2[w].dst];
    bool found = false;
    for (int cand : ff.bi->cells2_between(h1, h2))
      if (ff.twos[cand].alpha == L.map2[w] && ff.twos[cand].alphap == mw.alphap) {
        N.map2.push_back(cand);
        found = true;
        break;
      }
    if (!found) throw std::out_of_range("mediating: missing 2-cell");
  }
  for (int h2 = 0; h2 < D.n1(); ++h2)
    for (int h1 = 0; h1 < D.n1(); ++h1) {
      if (!D.h_composable1(h2, h1)) continue;
      const auto& mcell = bf.twos[M.comp_cell(h2, h1)];
      int src1 = ff.bi->hcomp1(N.map1[h2], N.map1[h1]);
      int dst1 = N.map1[D.hcomp1(h2, h1)];
      bool found = false;
      for (int cand : ff.bi->cells2_between(src1, dst1))
        if (ff.twos[cand].alpha == L.comp_cell(h2, h1) &&
            ff.twos[cand].alphap == mcell.alphap) {
          N.set_comp_cell(h2, h1, cand);
          found = true;
          break;
        }
      if (!found) throw std::out_of_range("mediating: missing structure cell");
    }
  for (int d = 0; d < D.n_obj(); ++d) {
    const auto& mcell = bf.twos[M.unit_cell[d]];
    int src1 = ff.bi->id1[N.map0[d]];
    int dst1 = N.map1[D.id1[d]];
    bool found = false;
    for (int cand : ff.bi->cells2_between(src1, dst1))
      if (ff.twos[cand].alpha == L.unit_cell[d] &&
          ff.twos[cand].alphap == mcell.alphap) {
        N.unit_cell.push_back(cand);
        found = true;
        break;
      }
    if (!found) throw std::out_of_range("mediating: missing unit cell");
  }
  return N;
}

int count_mediating_candidates(const BarLift& squares, const LaxMorphism& L,
                               const LaxMorphism& M) {
  const auto& ff = squares.ff.c;
  const auto& P = squares.ff.proj.P;
  const auto& bar = squares.bar_f;
  const auto& D = *L.src;

  // Per-slot candidate lists under the two projections.
  std::vector<std::vector<int>> obj_cand(D.n_obj()), one_cand(D.n1()),
      two_cand(D.n2());
  for (int d = 0; d < D.n_obj(); ++d)
    for (int X = 0; X < ff.bi->n_obj(); ++X)
      if (P.map0[X] == L.map0[d] && bar.map0[X] == M.map0[d])
        obj_cand[d].push_back(X);
  for (int h = 0; h < D.n1(); ++h)
    for (int Y = 0; Y < ff.bi->n1(); ++Y)
      if (P.map1[Y] == L.map1[h] && bar.map1[Y] == M.map1[h])
        one_cand[h].push_back(Y);
  for (int w = 0; w < D.n2(); ++w)
    for (int Z = 0; Z < ff.bi->n2(); ++Z)
      if (P.map2[Z] == L.map2[w] && bar.map2[Z] == M.map2[w])
        two_cand[w].push_back(Z);

  // The instances used for the uniqueness check are tiny, so a full
  // cartesian scan with validation is affordable.
  long long combos = 1;
  for (const auto& v : obj_cand) combos *= static_cast<long long>(v.size());
  for (const auto& v : one_cand) combos *= static_cast<long long>(v.size());
  for (const auto& v : two_cand) combos *= static_cast<long long>(v.size());
  if (combos > 100000)
    throw ResourceLimitError("count_mediating_candidates: instance too large",
                             100000);

  int count = 0;
  std::vector<int> pick_obj(D.n_obj()), pick_one(D.n1()), pick_two(D.n2());
  std::function<void(int)> rec = [&](int slot) {
    int no = D.n_obj(), n1 = D.n1(), n2c = D.n2();
    if (slot == no + n1 + n2c) {
      LaxMorphism N;
      N.dir = Dir::Lax;
      N.src = L.src;
      N.dst = ff.bi;
      N.map0 = pick_obj;
      N.map1 = pick_one;
      N.map2 = pick_two;
      // Structure cells: a candidate works when the *composite* structure
      // cells of P.N and bar.N match those of L and M (the projections are
      // not both strict, so the whiskered formula matters).
      const auto& BA = *P.dst;
      const auto& BM = *bar.dst;
      bool ok = true;
      std::vector<std::vector<int>> comp_choices;
      std::vector<std::pair<int, int>> comp_slots;
      for (int h2 = 0; h2 < D.n1() && ok; ++h2)
        for (int h1 = 0; h1 < D.n1() && ok; ++h1) {
          if (!D.h_composable1(h2, h1)) continue;
          int src1 = ff.bi->hcomp1(N.map1[h2], N.map1[h1]);
          int dst1 = N.map1[D.hcomp1(h2, h1)];
          std::vector<int> hits;
          for (int cand : ff.bi->cells2_between(src1, dst1)) {
            int via_p = BA.vcomp(P.map2[cand],
                                 P.comp_cell(N.map1[h2], N.map1[h1]));
            int via_bar = BM.vcomp(bar.map2[cand],
                                   bar.comp_cell(N.map1[h2], N.map1[h1]));
            if (via_p == L.comp_cell(h2, h1) && via_bar == M.comp_cell(h2, h1))
              hits.push_back(cand);
          }
          if (hits.empty()) ok = false;
          comp_slots.push_back({h2, h1});
          comp_choices.push_back(std::move(hits));
        }
      std::vector<std::vector<int>> unit_choices;
      for (int d = 0; d < D.n_obj() && ok; ++d) {
        int src1 = ff.bi->id1[N.map0[d]];
        int dst1 = N.map1[D.id1[d]];
        std::vector<int> hits;
        for (int cand : ff.bi->cells2_between(src1, dst1)) {
          int via_p = BA.vcomp(P.map2[cand], P.unit_cell[N.map0[d]]);
          int via_bar = BM.vcomp(bar.map2[cand], bar.unit_cell[N.map0[d]]);
          if (via_p == L.unit_cell[d] && via_bar == M.unit_cell[d])
            hits.push_back(cand);
        }
        if (hits.empty()) ok = false;
        unit_choices.push_back(std::move(hits));
      }
      if (!ok) return;
      std::function<void(std::size_t)> pick = [&](std::size_t s) {
        if (s == comp_choices.size() + unit_choices.size()) {
          if (validate_lax(N).ok()) ++count;
          return;
        }
        if (s < comp_choices.size()) {
          for (int cand : comp_choices[s]) {
            N.set_comp_cell(comp_slots[s].first, comp_slots[s].second, cand);
            pick(s + 1);
          }
        } else {
          std::size_t d = s - comp_choices.size();
          N.unit_cell.resize(D.n_obj());
          for (int cand : unit_choices[d]) {
            N.unit_cell[d] = cand;
            pick(s + 1);
          }
        }
      };
      pick(0);
      return;
    }
    const std::vector<int>* cands;
    if (slot < no)
      cands = &obj_cand[slot];
    else if (slot < no + n1)
      cands = &one_cand[slot - no];
    else
      cands = &two_cand[slot - no - n1];
    for (int c : *cands) {
      if (slot < no)
        pick_obj[slot] = c;
      else if (slot < no + n1)
        pick_one[slot - no] = c;
      else
        pick_two[slot - no - n1] = c;
      rec(slot + 1);
    }
  };
  rec(0);
  return count;
}

Inclusion inclusion_J(int a, const CommaResult& ff) {
  const auto& F = ff.c.F;
  const auto& Fp = ff.c.Fp;
  const auto& A = *F.src;
  const auto& Ap = *Fp.src;
  const auto& B = *F.dst;
  Inclusion out;
  out.fibre = fibre(F.map0[a], Fp);
  const auto& fa = out.fibre.c;

  auto& J = out.J;
  J.name = "J(" + A.objects[a] + ")";
  J.dir = Dir::Lax;
  J.src = fa.bi;
  J.dst = ff.c.bi;
  for (const auto& o : fa.objs) J.map0.push_back(ff.c.find_obj(a, o.f, o.ap));
  for (int h = 0; h < fa.bi->n1(); ++h) {
    const auto& c = fa.ones[h];
    const auto& o1 = fa.objs[fa.bi->cells1[h].dst];
    // iota(beta,u') = (1_{f1} o Fhat_a) . beta
    int cell = B.vcomp(B.hcomp2(B.id2[o1.f], F.unit_cell[a]), c.beta);
    J.map1.push_back(ff.c.find_one(J.map0[fa.bi->cells1[h].src],
                                   J.map0[fa.bi->cells1[h].dst], A.id1[a], cell,
                                   c.up));
  }
  for (int w = 0; w < fa.bi->n2(); ++w) {
    const auto& t = fa.twos[w];
    int h1 = J.map1[fa.bi->cells2[w].src];
    int h2 = J.map1[fa.bi->cells2[w].dst];
    bool found = false;
    for (int cand : ff.c.bi->cells2_between(h1, h2))
      if (ff.c.twos[cand].alpha == A.id2[A.id1[a]] &&
          ff.c.twos[cand].alphap == t.alphap) {
        J.map2.push_back(cand);
        found = true;
        break;
      }
    if (!found) throw std::out_of_range("inclusion_J: missing 2-cell");
  }
  for (int h2 = 0; h2 < fa.bi->n1(); ++h2)
    for (int h1 = 0; h1 < fa.bi->n1(); ++h1) {
      if (!fa.bi->h_composable1(h2, h1)) continue;
      int src1 = ff.c.bi->hcomp1(J.map1[h2], J.map1[h1]);
      int dst1 = J.map1[fa.bi->hcomp1(h2, h1)];
      int want_a = A.lunit[A.id1[a]];
      int want_ap = Ap.id2[Ap.hcomp1(fa.ones[h2].up, fa.ones[h1].up)];
      bool found = false;
      for (int cand : ff.c.bi->cells2_between(src1, dst1))
        if (ff.c.twos[cand].alpha == want_a && ff.c.twos[cand].alphap == want_ap) {
          J.set_comp_cell(h2, h1, cand);
          found = true;
          break;
        }
      if (!found) throw std::out_of_range("inclusion_J: missing structure cell");
    }
  for (int X = 0; X < fa.bi->n_obj(); ++X)
    J.unit_cell.push_back(ff.c.bi->id2[ff.c.bi->id1[J.map0[X]]]);
  return out;
}

Inclusion inclusion_Jp(int ap, const CommaResult& ff) {
  const auto& F = ff.c.F;
  const auto& Fp = ff.c.Fp;
  const auto& A = *F.src;
  const auto& Ap = *Fp.src;
  const auto& B = *F.dst;
  Inclusion out;
  out.fibre = fibre(F, Fp.map0[ap]);
  const auto& fa = out.fibre.c;

  auto& J = out.J;
  J.name = "J'(" + Ap.objects[ap] + ")";
  J.dir = Dir::Lax;
  J.src = fa.bi;
  J.dst = ff.c.bi;
  for (const auto& o : fa.objs) J.map0.push_back(ff.c.find_obj(o.a, o.f, ap));
  for (int h = 0; h < fa.bi->n1(); ++h) {
    const auto& c = fa.ones[h];
    const auto& o0 = fa.objs[fa.bi->cells1[h].src];
    // iota'(u,beta) = beta . (Fphat_{a'} o 1_{f0})
    int cell = B.vcomp(c.beta, B.hcomp2(Fp.unit_cell[ap], B.id2[o0.f]));
    J.map1.push_back(ff.c.find_one(J.map0[fa.bi->cells1[h].src],
                                   J.map0[fa.bi->cells1[h].dst], c.u, cell,
                                   Ap.id1[ap]));
  }
  for (int w = 0; w < fa.bi->n2(); ++w) {
    const auto& t = fa.twos[w];
    int h1 = J.map1[fa.bi->cells2[w].src];
    int h2 = J.map1[fa.bi->cells2[w].dst];
    bool found = false;
    for (int cand : ff.c.bi->cells2_between(h1, h2))
      if (ff.c.twos[cand].alphap == Ap.id2[Ap.id1[ap]] &&
          ff.c.twos[cand].alpha == t.alpha) {
        J.map2.push_back(cand);
        found = true;
        break;
      }
    if (!found) throw std::out_of_range("inclusion_Jp: missing 2-cell");
  }
  for (int h2 = 0; h2 < fa.bi->n1(); ++h2)
    for (int h1 = 0; h1 < fa.bi->n1(); ++h1) {
      if (!fa.bi->h_composable1(h2, h1)) continue;
      int src1 = ff.c.bi->hcomp1(J.map1[h2], J.map1[h1]);
      int dst1 = J.map1[fa.bi->hcomp1(h2, h1)];
      int want_a = A.id2[A.hcomp1(fa.ones[h2].u, fa.ones[h1].u)];
      int want_ap = Ap.lunit[Ap.id1[ap]];
      bool found = false;
      for (int cand : ff.c.bi->cells2_between(src1, dst1))
        if (ff.c.twos[cand].alpha == want_a && ff.c.twos[cand].alphap == want_ap) {
          J.set_comp_cell(h2, h1, cand);
          found = true;
          break;
        }
      if (!found) throw std::out_of_range("inclusion_Jp: missing structure cell");
    }
  for (int X = 0; X < fa.bi->n_obj(); ++X)
    J.unit_cell.push_back(ff.c.bi->id2[ff.c.bi->id1[J.map0[X]]]);
  return out;
}

Comma2Result comma2(const LaxMorphism& F, const LaxMorphism& G) {
  if (F.dir != Dir::Lax || G.dir != Dir::Lax)
    throw std::invalid_argument("comma2: both functors must be lax");
  if (F.dst.get() != G.dst.get())
    throw std::invalid_argument("comma2: mismatched targets");
  Comma2Result out;
  out.gb = comma(G, LaxMorphism::identity(G.dst, Dir::Oplax));
  out.outer = comma(F, out.gb.proj.Pp);
  out.P = out.outer.proj.P;
  out.Q = bicat::compose_lax(out.gb.proj.P, out.outer.proj.Pp.as_dir(Dir::Lax));
  return out;
}

ValidationReport comma2_swap_check(const LaxMorphism& F, const LaxMorphism& G) {
  ValidationReport rep;
  rep.subject = "comma2-swap(" + F.name + "," + G.name + ")";
  auto c1 = comma2(F, G);
  auto c2 = comma2(G, F);
  const auto& b1 = *c1.outer.c.bi;
  const auto& b2 = *c2.outer.c.bi;
  if (b1.n_obj() != b2.n_obj() || b1.n1() != b2.n1() || b1.n2() != b2.n2()) {
    rep.fail("swap-cardinality", rep.subject);
    return rep;
  }
  // Object map: (a, f, (c, g, b)) -> (c, g, (a, f, b)).
  std::vector<int> m0(b1.n_obj()), m1(b1.n1()), m2(b1.n2());
  for (int X = 0; X < b1.n_obj(); ++X) {
    const auto& o = c1.outer.c.objs[X];
    const auto& inner = c1.gb.c.objs[o.ap];  // (c, g, b)
    int target_inner = c2.gb.c.find_obj(o.a, o.f, inner.ap);
    m0[X] = c2.outer.c.find_obj(inner.a, inner.f, target_inner);
  }
  for (int h = 0; h < b1.n1(); ++h) {
    const auto& c = c1.outer.c.ones[h];             // (u, beta, U')
    const auto& iu = c1.gb.c.ones[c.up];            // (v, beta', p)
    int X = b1.cells1[h].src, Y = b1.cells1[h].dst;
    const auto& oX = c1.outer.c.objs[X];
    const auto& oY = c1.outer.c.objs[Y];
    int innerX = c2.gb.c.find_obj(oX.a, oX.f, c1.gb.c.objs[oX.ap].ap);
    int innerY = c2.gb.c.find_obj(oY.a, oY.f, c1.gb.c.objs[oY.ap].ap);
    int w = c2.gb.c.find_one(innerX, innerY, c.u, c.beta, iu.up);
    m1[h] = c2.outer.c.find_one(m0[X], m0[Y], iu.u, iu.beta, w);
  }
  for (int t = 0; t < b1.n2(); ++t) {
    const auto& tw = c1.outer.c.twos[t];            // (alpha, (rho, delta))
    const auto& itw = c1.gb.c.twos[tw.alphap];
    int h1 = m1[b1.cells2[t].src], h2 = m1[b1.cells2[t].dst];
    bool found = false;
    for (int cand : b2.cells2_between(h1, h2)) {
      const auto& cw = c2.outer.c.twos[cand];
      const auto& icw = c2.gb.c.twos[cw.alphap];
      if (cw.alpha == itw.alpha && icw.alpha == tw.alpha &&
          icw.alphap == itw.alphap) {
        m2[t] = cand;
        found = true;
        break;
      }
    }
    if (!found) {
      rep.fail("swap-2cell-missing", b1.cells2[t].id);
      return rep;
    }
  }
  // Bijectivity.
  auto is_perm = [](const std::vector<int>& v, int n) {
    std::vector<bool> hit(n, false);
    for (int x : v) {
      if (x < 0 || x >= n || hit[x]) return false;
      hit[x] = true;
    }
    return true;
  };
  if (!is_perm(m0, b2.n_obj())) rep.fail("swap-not-bijective-0", rep.subject);
  if (!is_perm(m1, b2.n1())) rep.fail("swap-not-bijective-1", rep.subject);
  if (!is_perm(m2, b2.n2())) rep.fail("swap-not-bijective-2", rep.subject);
  // Strict 2-functor: all tables transported.
  for (int h2c = 0; h2c < b1.n1(); ++h2c)
    for (int h1c = 0; h1c < b1.n1(); ++h1c)
      if (b1.h_composable1(h2c, h1c) &&
          m1[b1.hcomp1(h2c, h1c)] != b2.hcomp1(m1[h2c], m1[h1c]))
        rep.fail("swap-hcomp1", tup({b1.cells1[h2c].id, b1.cells1[h1c].id}));
  for (int t2 = 0; t2 < b1.n2(); ++t2)
    for (int t1 = 0; t1 < b1.n2(); ++t1) {
      if (b1.cells2[t1].dst == b1.cells2[t2].src &&
          m2[b1.vcomp(t2, t1)] != b2.vcomp(m2[t2], m2[t1]))
        rep.fail("swap-vcomp", tup({b1.cells2[t2].id, b1.cells2[t1].id}));
      if (b1.h_composable2(t2, t1) &&
          m2[b1.hcomp2(t2, t1)] != b2.hcomp2(m2[t2], m2[t1]))
        rep.fail("swap-hcomp2", tup({b1.cells2[t2].id, b1.cells2[t1].id}));
    }
  for (int X = 0; X < b1.n_obj(); ++X)
    if (m1[b1.id1[X]] != b2.id1[m0[X]]) rep.fail("swap-id1", b1.objects[X]);
  for (int h = 0; h < b1.n1(); ++h) {
    if (m2[b1.id2[h]] != b2.id2[m1[h]]) rep.fail("swap-id2", b1.cells1[h].id);
    if (m2[b1.lunit[h]] != b2.lunit[m1[h]]) rep.fail("swap-lunit", b1.cells1[h].id);
    if (m2[b1.runit[h]] != b2.runit[m1[h]]) rep.fail("swap-runit", b1.cells1[h].id);
  }
  for (const auto& [key, val] : b1.assoc_) {
    int f3 = static_cast<int>(key >> 42);
    int f2 = static_cast<int>((key >> 21) & ((1u << 21) - 1));
    int f1 = static_cast<int>(key & ((1u << 21) - 1));
    if (m2[val] != b2.assoc(m1[f3], m1[f2], m1[f1]))
      rep.fail("swap-assoc", tup({b1.cells1[f3].id, b1.cells1[f2].id,
                                  b1.cells1[f1].id}));
  }
  return rep;
}

namespace {

// Internal equivalence search: 1-cells e : X -> Y, e' : Y -> X with
// invertible 2-cells e o e' ~ 1_Y and e' o e ~ 1_X.
bool internally_equivalent(const bicat::FiniteBicategory& b, int X, int Y) {
  for (int e : b.hom1(X, Y))
    for (int ep : b.hom1(Y, X)) {
      bool unit_Y = false, unit_X = false;
      for (int c : b.cells2_between(b.hcomp1(e, ep), b.id1[Y]))
        if (b.inv2(c) >= 0) unit_Y = true;
      for (int c : b.cells2_between(b.hcomp1(ep, e), b.id1[X]))
        if (b.inv2(c) >= 0) unit_X = true;
      if (unit_Y && unit_X) return true;
    }
  return false;
}

bool local_equivalence(const bicat::FiniteBicategory& sbi,
                       const bicat::FiniteBicategory& dbi, const LaxMorphism& t,
                       std::string& why) {
  for (int X = 0; X < sbi.n_obj(); ++X)
    for (int Y = 0; Y < sbi.n_obj(); ++Y) {
      // faithful + full on 2-cells
      for (int h1 : sbi.hom1(X, Y))
        for (int h2 : sbi.hom1(X, Y)) {
          const auto& dom = sbi.cells2_between(h1, h2);
          const auto& cod = dbi.cells2_between(t.map1[h1], t.map1[h2]);
          std::vector<int> image;
          for (int c : dom) image.push_back(t.map2[c]);
          std::sort(image.begin(), image.end());
          if (std::adjacent_find(image.begin(), image.end()) != image.end()) {
            why = "not faithful at " + sbi.cells1[h1].id;
            return false;
          }
          for (int c : cod)
            if (!std::binary_search(image.begin(), image.end(), c)) {
              why = "not full at " + sbi.cells1[h1].id;
              return false;
            }
        }
      // essentially surjective on each hom-category
      for (int g : dbi.hom1(t.map0[X], t.map0[Y])) {
        bool hit = false;
        for (int h : sbi.hom1(X, Y)) {
          for (int c : dbi.cells2_between(t.map1[h], g))
            if (dbi.inv2(c) >= 0) hit = true;
          if (hit) break;
        }
        if (!hit) {
          why = "hom not essentially surjective at " + dbi.cells1[g].id;
          return false;
        }
      }
    }
  // essential surjectivity on objects, up to internal equivalence
  for (int W = 0; W < dbi.n_obj(); ++W) {
    bool hit = false;
    for (int X = 0; X < sbi.n_obj() && !hit; ++X)
      if (internally_equivalent(dbi, t.map0[X], W)) hit = true;
    if (!hit) {
      why = "object not reached up to equivalence: " + dbi.objects[W];
      return false;
    }
  }
  return true;
}

}  // namespace

PropertyBResult property_B_witness(const LaxMorphism& F) {
  PropertyBResult res;
  const auto& B = *F.dst;
  // Fibres per object, shared by all translations.
  std::vector<CommaResult> fib;
  fib.reserve(B.n_obj());
  for (int b = 0; b < B.n_obj(); ++b) fib.push_back(fibre(F, b));
  for (int p = 0; p < B.n1(); ++p) {
    const auto& src = fib[B.cells1[p].src];
    const auto& dst = fib[B.cells1[p].dst];
    LaxMorphism t = translate_lower_on(src, dst, F, p);
    std::string why;
    if (!local_equivalence(*src.c.bi, *dst.c.bi, t, why)) {
      res.holds_sufficient = false;
      res.witnesses.push_back("translation along " + B.cells1[p].id + ": " + why);
    }
  }
  return res;
}

OmegaData omega_upper(const CommaResult& bf, const LaxMorphism& Fp) {
  OmegaData out;
  out.from = std::make_shared<LaxMorphism>(bf.proj.P.as_dir(Dir::Oplax));
  out.to = std::make_shared<LaxMorphism>(bicat::compose_lax(Fp, bf.proj.Pp));
  out.omega.name = "omega(" + bf.c.bi->name + ")";
  out.omega.kind = LaxTransformation::Kind::Lax;
  out.omega.from = out.from.get();
  out.omega.to = out.to.get();
  for (const auto& o : bf.c.objs) out.omega.comp0.push_back(o.f);
  for (const auto& c : bf.c.ones) out.omega.natcell.push_back(c.beta);
  return out;
}

OmegaData omega_lower(const CommaResult& fb, const LaxMorphism& F) {
  OmegaData out;
  out.from = std::make_shared<LaxMorphism>(bicat::compose_lax(F, fb.proj.P));
  out.to = std::make_shared<LaxMorphism>(fb.proj.Pp.as_dir(Dir::Lax));
  out.omega.name = "omega'(" + fb.c.bi->name + ")";
  out.omega.kind = LaxTransformation::Kind::Lax;
  out.omega.from = out.from.get();
  out.omega.to = out.to.get();
  for (const auto& o : fb.c.objs) out.omega.comp0.push_back(o.f);
  for (const auto& c : fb.c.ones) out.omega.natcell.push_back(c.beta);
  return out;
}

ValidationReport check_hom_isomorphism(BicatPtr B, int b, int bp) {
  ValidationReport rep;
  rep.subject = "(" + B->objects[b] + "|" + B->objects[bp] + ")~hom";
  auto cc = comma(bicat::object_homomorphism(b, B, Dir::Lax),
                  bicat::object_homomorphism(bp, B, Dir::Oplax));
  const auto& bi = *cc.c.bi;
  // Discreteness of the hom-categories.
  for (int t = 0; t < bi.n2(); ++t)
    if (bi.cells2[t].src != bi.cells2[t].dst)
      rep.fail("comma-not-discrete", bi.cells2[t].id);
  // Phi on objects: (., f, .) -> f, a bijection with hom(b,b').
  const auto& homset = B->hom1(b, bp);
  if (static_cast<int>(homset.size()) != bi.n_obj())
    rep.fail("object-count", rep.subject);
  // Phi on 1-cells: beta -> runit . beta . lunit^{-1}.
  auto phi = [&](int h) {
    const auto& o0 = cc.c.objs[bi.cells1[h].src];
    const auto& o1 = cc.c.objs[bi.cells1[h].dst];
    return B->vchain({B->runit[o1.f], cc.c.ones[h].beta,
                      B->inv2(B->lunit[o0.f])});
  };
  // Bijective on each hom-set.
  for (int X = 0; X < bi.n_obj(); ++X)
    for (int Y = 0; Y < bi.n_obj(); ++Y) {
      std::vector<int> image;
      for (int h : bi.hom1(X, Y)) image.push_back(phi(h));
      std::sort(image.begin(), image.end());
      if (std::adjacent_find(image.begin(), image.end()) != image.end())
        rep.fail("phi-not-injective", tup({bi.objects[X], bi.objects[Y]}));
      const auto& expect = B->cells2_between(cc.c.objs[X].f, cc.c.objs[Y].f);
      if (image.size() != expect.size())
        rep.fail("phi-not-surjective", tup({bi.objects[X], bi.objects[Y]}));
    }
  // Functoriality: composition and identities.
  for (int h2 = 0; h2 < bi.n1(); ++h2)
    for (int h1 = 0; h1 < bi.n1(); ++h1) {
      if (!bi.h_composable1(h2, h1)) continue;
      int lhs = phi(bi.hcomp1(h2, h1));
      int rhs = B->vcomp(phi(h2), phi(h1));
      if (lhs != rhs)
        rep.fail("phi-composition", tup({bi.cells1[h2].id, bi.cells1[h1].id}),
                 B->cells2[lhs].id, B->cells2[rhs].id);
    }
  for (int X = 0; X < bi.n_obj(); ++X) {
    int lhs = phi(bi.id1[X]);
    int rhs = B->id2[cc.c.objs[X].f];
    if (lhs != rhs) rep.fail("phi-identity", bi.objects[X]);
  }
  return rep;
}

}  // namespace hofib::comma
