#include "hofib/simplex.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace hofib::nerve {

using bicat::Dir;
using bicat::FiniteBicategory;
using bicat::LaxMorphism;

Id Mono::key() const {
  std::vector<Id> parts{std::to_string(q), std::to_string(p)};
  for (int x : v) parts.push_back(std::to_string(x));
  return tup(parts);
}

Mono Mono::identity(int p) {
  Mono m;
  m.q = m.p = p;
  for (int i = 0; i <= p; ++i) m.v.push_back(i);
  return m;
}

Mono Mono::coface(int p, int i) {
  Mono m;
  m.q = p - 1;
  m.p = p;
  for (int x = 0; x <= p; ++x)
    if (x != i) m.v.push_back(x);
  return m;
}

Mono Mono::codegeneracy(int p, int i) {
  Mono m;
  m.q = p + 1;
  m.p = p;
  for (int x = 0; x <= p; ++x) {
    m.v.push_back(x);
    if (x == i) m.v.push_back(x);
  }
  return m;
}

Mono Mono::compose(const Mono& a, const Mono& b) {
  if (b.p != a.q) throw std::invalid_argument("Mono::compose: mismatch");
  Mono m;
  m.q = b.q;
  m.p = a.p;
  for (int x : b.v) m.v.push_back(a.v[x]);
  return m;
}

bool Mono::operator<(const Mono& o) const {
  if (q != o.q) return q < o.q;
  if (p != o.p) return p < o.p;
  return v < o.v;
}

std::vector<Mono> all_monotone(int q, int p) {
  std::vector<Mono> out;
  Mono m;
  m.q = q;
  m.p = p;
  m.v.assign(q + 1, 0);
  std::function<void(int, int)> rec = [&](int pos, int low) {
    if (pos == q + 1) {
      out.push_back(m);
      return;
    }
    for (int x = low; x <= p; ++x) {
      m.v[pos] = x;
      rec(pos + 1, x);
    }
  };
  rec(0, 0);
  return out;
}

Id SimplexFunctor::key() const {
  std::vector<Id> parts;
  parts.push_back(dir == Dir::Lax ? "lax" : "oplax");
  for (int i = 0; i <= p; ++i) parts.push_back(B->objects[vertex[i]]);
  for (int i = 0; i <= p; ++i)
    for (int j = i; j <= p; ++j) parts.push_back(B->cells1[e(i, j)].id);
  for (int i = 0; i <= p; ++i)
    for (int j = i; j <= p; ++j)
      for (int k = j; k <= p; ++k) parts.push_back(B->cells2[c(i, j, k)].id);
  for (int i = 0; i <= p; ++i) parts.push_back(B->cells2[unit[i]].id);
  return tup(parts);
}

bool SimplexFunctor::normal() const {
  for (int i = 0; i <= p; ++i) {
    if (e(i, i) != B->id1[vertex[i]]) return false;
    if (unit[i] != B->id2[B->id1[vertex[i]]]) return false;
  }
  return true;
}

SimplexFunctor SimplexFunctor::restrict_along(const Mono& a) const {
  if (a.p != p) throw std::invalid_argument("restrict_along: wrong codomain");
  SimplexFunctor out;
  out.dir = dir;
  out.p = a.q;
  out.B = B;
  out.vertex.resize(a.q + 1);
  out.edge.assign((a.q + 1) * (a.q + 1), -1);
  out.comp.assign((a.q + 1) * (a.q + 1) * (a.q + 1), -1);
  out.unit.resize(a.q + 1);
  for (int i = 0; i <= a.q; ++i) {
    out.vertex[i] = vertex[a.v[i]];
    out.unit[i] = unit[a.v[i]];
  }
  for (int i = 0; i <= a.q; ++i)
    for (int j = i; j <= a.q; ++j) out.e(i, j) = e(a.v[i], a.v[j]);
  for (int i = 0; i <= a.q; ++i)
    for (int j = i; j <= a.q; ++j)
      for (int k = j; k <= a.q; ++k) out.c(i, j, k) = c(a.v[i], a.v[j], a.v[k]);
  return out;
}

namespace {
// 1-cell index of the morphism (i <= j) inside simplex_bicategory(p).
int simplex_mor_index(int p, int i, int j) {
  // FiniteCategory::simplex pushes (i,j) with i ascending, then j.
  int before = 0;
  for (int a = 0; a < i; ++a) before += p + 1 - a;
  return before + (j - i);
}
}  // namespace

LaxMorphism SimplexFunctor::as_lax() const {
  LaxMorphism m;
  m.name = "simplex" + std::to_string(p);
  m.dir = dir;
  m.src = bicat::simplex_bicategory(p);
  m.dst = B;
  m.map0 = vertex;
  m.map1.assign(m.src->n1(), -1);
  m.map2.assign(m.src->n2(), -1);
  for (int i = 0; i <= p; ++i)
    for (int j = i; j <= p; ++j) {
      int ix = simplex_mor_index(p, i, j);
      m.map1[ix] = e(i, j);
      m.map2[ix] = B->id2[e(i, j)];  // identity 2-cells track 1-cells
    }
  for (int i = 0; i <= p; ++i)
    for (int j = i; j <= p; ++j)
      for (int k = j; k <= p; ++k)
        m.set_comp_cell(simplex_mor_index(p, j, k), simplex_mor_index(p, i, j),
                        c(i, j, k));
  for (int i = 0; i <= p; ++i) m.unit_cell.push_back(unit[i]);
  return m;
}

SimplexFunctor SimplexFunctor::from_lax(const LaxMorphism& m) {
  int p = m.src->n_obj() - 1;
  SimplexFunctor f;
  f.dir = m.dir;
  f.p = p;
  f.B = m.dst;
  f.vertex = m.map0;
  f.edge.assign((p + 1) * (p + 1), -1);
  f.comp.assign((p + 1) * (p + 1) * (p + 1), -1);
  f.unit = m.unit_cell;
  for (int i = 0; i <= p; ++i)
    for (int j = i; j <= p; ++j)
      f.e(i, j) = m.map1[simplex_mor_index(p, i, j)];
  for (int i = 0; i <= p; ++i)
    for (int j = i; j <= p; ++j)
      for (int k = j; k <= p; ++k)
        f.c(i, j, k) = m.comp_cell(simplex_mor_index(p, j, k),
                                   simplex_mor_index(p, i, j));
  return f;
}

std::vector<SimplexFunctor> enumerate_simplices(bicat::BicatPtr B, int p, Dir dir,
                                                bool normal,
                                                std::size_t max_candidates) {
  const auto& Bb = *B;
  std::vector<SimplexFunctor> out;
  std::size_t candidates = 0;

  SimplexFunctor f;
  f.dir = dir;
  f.p = p;
  f.B = B;
  f.vertex.assign(p + 1, -1);
  f.edge.assign((p + 1) * (p + 1), -1);
  f.comp.assign((p + 1) * (p + 1) * (p + 1), -1);
  f.unit.assign(p + 1, -1);

  // Slots for strict edges ordered by span then start.
  std::vector<std::pair<int, int>> edge_slots;
  for (int s = 1; s <= p; ++s)
    for (int i = 0; i + s <= p; ++i) edge_slots.push_back({i, i + s});
  // Strictly increasing triples, ordered so that once (j,k,l) is placed all
  // quadruples (i,j,k,l) are fully assigned and can prune the search.
  std::vector<std::array<int, 3>> tri_slots;
  for (int k = 0; k <= p; ++k)
    for (int j = 0; j < k; ++j)
      for (int i = 0; i < j; ++i) tri_slots.push_back({i, j, k});

  auto bump = [&]() {
    if (++candidates > max_candidates)
      throw ResourceLimitError("enumerate_simplices: candidate ceiling exceeded",
                               max_candidates);
  };

  // Degenerate structure cells are pinned by the unit axioms whenever the
  // whiskered unit cell is invertible; otherwise every parallel candidate is
  // tried and the final validation filters.
  auto finish = [&](SimplexFunctor g) {
    bump();
    struct Slot {
      int i, j, k;
      std::vector<int> cands;
    };
    std::vector<Slot> open;
    bool dead = false;
    auto derive = [&](int ff, int whisk, bool left_unit) -> std::vector<int> {
      // left_unit: pair (x_jj, x_ij), else pair (x_ij, x_ii).
      int unit_constraint = left_unit ? Bb.lunit[ff] : Bb.runit[ff];
      if (dir == Dir::Lax) {
        int iv = Bb.inv2(whisk);
        if (iv >= 0) return {Bb.vcomp(unit_constraint, iv)};
        std::vector<int> cands;
        int pasted = Bb.cells2[whisk].dst;  // Ff o x_ii (resp. x_jj o Ff)
        for (int c : Bb.cells2_between(pasted, ff)) cands.push_back(c);
        return cands;
      }
      int ci = Bb.inv2(unit_constraint);
      int wi = Bb.inv2(whisk);
      if (ci >= 0 && wi >= 0) return {Bb.vcomp(wi, ci)};
      std::vector<int> cands;
      int pasted = Bb.cells2[whisk].src;
      for (int c : Bb.cells2_between(ff, pasted)) cands.push_back(c);
      return cands;
    };
    for (int i = 0; i <= p && !dead; ++i)
      for (int j = i; j <= p && !dead; ++j) {
        int ff = g.e(i, j);
        auto r_cands = derive(ff, Bb.hcomp2(Bb.id2[ff], g.unit[i]), false);
        if (r_cands.size() == 1)
          g.c(i, i, j) = r_cands[0];
        else if (r_cands.empty())
          dead = true;
        else
          open.push_back({i, i, j, r_cands});
        if (i == j) continue;  // (i,i,i) handled once above
        auto l_cands = derive(ff, Bb.hcomp2(g.unit[j], Bb.id2[ff]), true);
        if (l_cands.size() == 1)
          g.c(i, j, j) = l_cands[0];
        else if (l_cands.empty())
          dead = true;
        else
          open.push_back({i, j, j, l_cands});
      }
    if (dead) return;
    std::function<void(std::size_t)> rec_open = [&](std::size_t t) {
      if (t == open.size()) {
        if (validate_lax(g.as_lax()).ok()) out.push_back(g);
        return;
      }
      for (int c : open[t].cands) {
        g.c(open[t].i, open[t].j, open[t].k) = c;
        rec_open(t + 1);
      }
    };
    rec_open(0);
  };

  // Coherence of the strictly increasing quadruple (i,j,k,l); all four
  // participating structure cells must already be assigned.
  auto quad_ok = [&](const SimplexFunctor& g, int i, int j, int k, int l) {
    if (dir == Dir::Lax) {
      int lhs = Bb.vchain({g.c(i, k, l), Bb.hcomp2(Bb.id2[g.e(k, l)], g.c(i, j, k)),
                           Bb.assoc(g.e(k, l), g.e(j, k), g.e(i, j))});
      int rhs = Bb.vcomp(g.c(i, j, l), Bb.hcomp2(g.c(j, k, l), Bb.id2[g.e(i, j)]));
      return lhs == rhs;
    }
    int lhs = Bb.vcomp(Bb.hcomp2(Bb.id2[g.e(k, l)], g.c(i, j, k)), g.c(i, k, l));
    int rhs = Bb.vchain({Bb.assoc(g.e(k, l), g.e(j, k), g.e(i, j)),
                         Bb.hcomp2(g.c(j, k, l), Bb.id2[g.e(i, j)]), g.c(i, j, l)});
    return lhs == rhs;
  };

  // Enumerate structure cells on strictly increasing triples.
  std::function<void(SimplexFunctor&, std::size_t)> rec_tri =
      [&](SimplexFunctor& g, std::size_t t) {
        if (t == tri_slots.size()) {
          finish(g);
          return;
        }
        auto [i, j, k] = tri_slots[t];
        int pasted = Bb.hcomp1(g.e(j, k), g.e(i, j));
        const auto& cands = dir == Dir::Lax
                                ? Bb.cells2_between(pasted, g.e(i, k))
                                : Bb.cells2_between(g.e(i, k), pasted);
        for (int c : cands) {
          g.c(i, j, k) = c;
          bool ok = true;
          for (int i0 = 0; i0 < i && ok; ++i0) ok = quad_ok(g, i0, i, j, k);
          if (ok) rec_tri(g, t + 1);
        }
        g.c(i, j, k) = -1;
      };

  // Units (and loops at vertices, for the non-normal variants).
  std::function<void(SimplexFunctor&, int)> rec_unit = [&](SimplexFunctor& g,
                                                           int i) {
    if (i > p) {
      rec_tri(g, 0);
      return;
    }
    if (normal) {
      g.e(i, i) = Bb.id1[g.vertex[i]];
      g.unit[i] = Bb.id2[Bb.id1[g.vertex[i]]];
      rec_unit(g, i + 1);
      return;
    }
    for (int loop : Bb.hom1(g.vertex[i], g.vertex[i])) {
      g.e(i, i) = loop;
      const auto& cands = dir == Dir::Lax
                              ? Bb.cells2_between(Bb.id1[g.vertex[i]], loop)
                              : Bb.cells2_between(loop, Bb.id1[g.vertex[i]]);
      for (int u : cands) {
        g.unit[i] = u;
        rec_unit(g, i + 1);
      }
    }
  };

  // Strict edges by span, pruned by 2-cell existence against the adjacent
  // split (i, i+1, j).
  std::function<void(SimplexFunctor&, std::size_t)> rec_edge =
      [&](SimplexFunctor& g, std::size_t t) {
        if (t == edge_slots.size()) {
          rec_unit(g, 0);
          return;
        }
        auto [i, j] = edge_slots[t];
        for (int cand : Bb.hom1(g.vertex[i], g.vertex[j])) {
          if (j - i >= 2) {
            int pasted = Bb.hcomp1(g.e(i + 1, j), g.e(i, i + 1));
            const auto& between = dir == Dir::Lax
                                      ? Bb.cells2_between(pasted, cand)
                                      : Bb.cells2_between(cand, pasted);
            if (between.empty()) continue;
          }
          g.e(i, j) = cand;
          rec_edge(g, t + 1);
        }
        g.e(i, j) = -1;
      };

  std::function<void(int)> rec_vertex = [&](int i) {
    if (i > p) {
      rec_edge(f, 0);
      return;
    }
    for (int b = 0; b < Bb.n_obj(); ++b) {
      f.vertex[i] = b;
      rec_vertex(i + 1);
    }
  };
  rec_vertex(0);

  std::sort(out.begin(), out.end(),
            [](const SimplexFunctor& a, const SimplexFunctor& b) {
              return a.key() < b.key();
            });
  return out;
}

SimplexFunctor compose_simplex(const LaxMorphism& F, const SimplexFunctor& x) {
  if (F.dir != x.dir)
    throw std::invalid_argument("compose_simplex: direction mismatch");
  if (F.src.get() != x.B.get())
    throw std::invalid_argument("compose_simplex: not composable");
  const auto& C = *F.dst;
  SimplexFunctor out;
  out.dir = x.dir;
  out.p = x.p;
  out.B = F.dst;
  out.vertex.resize(x.p + 1);
  out.edge.assign((x.p + 1) * (x.p + 1), -1);
  out.comp.assign((x.p + 1) * (x.p + 1) * (x.p + 1), -1);
  out.unit.resize(x.p + 1);
  for (int i = 0; i <= x.p; ++i) out.vertex[i] = F.map0[x.vertex[i]];
  for (int i = 0; i <= x.p; ++i)
    for (int j = i; j <= x.p; ++j) out.e(i, j) = F.map1[x.e(i, j)];
  for (int i = 0; i <= x.p; ++i)
    for (int j = i; j <= x.p; ++j)
      for (int k = j; k <= x.p; ++k) {
        int inner = F.map2[x.c(i, j, k)];
        int outer = F.comp_cell(x.e(j, k), x.e(i, j));
        out.c(i, j, k) = x.dir == Dir::Lax ? C.vcomp(inner, outer)
                                           : C.vcomp(outer, inner);
      }
  for (int i = 0; i <= x.p; ++i) {
    int inner = F.map2[x.unit[i]];
    int outer = F.unit_cell[x.vertex[i]];
    out.unit[i] =
        x.dir == Dir::Lax ? C.vcomp(inner, outer) : C.vcomp(outer, inner);
  }
  return out;
}

int or_composite1(const FiniteBicategory& B, const std::vector<int>& u,
                  int base_obj) {
  if (u.empty()) return B.id1[base_obj];
  int acc = u[0];
  for (std::size_t m = 1; m < u.size(); ++m) acc = B.hcomp1(u[m], acc);
  return acc;
}

int or_composite2(const FiniteBicategory& B, const std::vector<int>& w,
                  int base_obj) {
  if (w.empty()) return B.id2[B.id1[base_obj]];
  int acc = w[0];
  for (std::size_t m = 1; m < w.size(); ++m) acc = B.hcomp2(w[m], acc);
  return acc;
}

SimplexFunctor generated_by_chain(bicat::BicatPtr B, const std::vector<int>& chain,
                                  int base_obj_if_empty) {
  const auto& Bb = *B;
  int p = static_cast<int>(chain.size());
  SimplexFunctor f;
  f.dir = Dir::Lax;
  f.p = p;
  f.B = B;
  f.vertex.resize(p + 1);
  f.edge.assign((p + 1) * (p + 1), -1);
  f.comp.assign((p + 1) * (p + 1) * (p + 1), -1);
  f.unit.resize(p + 1);
  if (p == 0) {
    f.vertex[0] = base_obj_if_empty;
  } else {
    f.vertex[0] = Bb.cells1[chain[0]].src;
    for (int i = 0; i < p; ++i) f.vertex[i + 1] = Bb.cells1[chain[i]].dst;
  }
  for (int i = 0; i <= p; ++i) {
    f.unit[i] = Bb.id2[Bb.id1[f.vertex[i]]];
    for (int j = i; j <= p; ++j) {
      std::vector<int> seg(chain.begin() + i, chain.begin() + j);
      f.e(i, j) = or_composite1(Bb, seg, f.vertex[i]);
    }
  }
  // Structure cells: identities on (j = i+1 or degenerate via l/r), and the
  // associativity recursion on longer right factors.
  std::function<int(int, int, int)> jc = [&](int i, int j, int k) -> int {
    if (i == j && j == k) return Bb.runit[Bb.id1[f.vertex[i]]];
    if (j == k) return Bb.lunit[f.e(i, j)];   // pair (1, f)
    if (i == j) return Bb.runit[f.e(i, k)];   // pair (f, 1)
    if (k == j + 1) return Bb.id2[f.e(i, k)];
    // peel the last edge: a = (j -> k), last = chain[k-1]
    int last = chain[k - 1];
    int rest = jc(i, j, k - 1);
    return Bb.vcomp(Bb.hcomp2(Bb.id2[last], rest),
                    Bb.assoc(last, f.e(j, k - 1), f.e(i, j)));
  };
  for (int i = 0; i <= p; ++i)
    for (int j = i; j <= p; ++j)
      for (int k = j; k <= p; ++k) f.c(i, j, k) = jc(i, j, k);
  return f;
}

int nu_cell(const SimplexFunctor& F, int i, int j) {
  const auto& B = *F.B;
  if (i == j) return F.unit[i];
  if (j == i + 1) return B.id2[F.e(i, j)];
  int rest = nu_cell(F, i, j - 1);
  return B.vcomp(F.c(i, j - 1, j), B.hcomp2(B.id2[F.e(j - 1, j)], rest));
}

}  // namespace hofib::nerve
