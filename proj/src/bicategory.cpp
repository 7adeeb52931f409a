#include "hofib/bicategory.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace hofib::bicat {

const std::vector<int> FiniteBicategory::empty_{};

int FiniteBicategory::vcomp(int b, int a) const {
  auto it = vcomp_.find(pack2(b, a));
  if (it == vcomp_.end())
    throw std::out_of_range(name + ": vcomp undefined (" + cells2[b].id + "," +
                            cells2[a].id + ")");
  return it->second;
}

int FiniteBicategory::hcomp1(int g, int f) const {
  auto it = hcomp1_.find(pack2(g, f));
  if (it == hcomp1_.end())
    throw std::out_of_range(name + ": hcomp1 undefined (" + cells1[g].id + "," +
                            cells1[f].id + ")");
  return it->second;
}

int FiniteBicategory::hcomp2(int b2, int b1) const {
  auto it = hcomp2_.find(pack2(b2, b1));
  if (it == hcomp2_.end())
    throw std::out_of_range(name + ": hcomp2 undefined (" + cells2[b2].id + "," +
                            cells2[b1].id + ")");
  return it->second;
}

int FiniteBicategory::assoc(int f3, int f2, int f1) const {
  auto it = assoc_.find(pack3(f3, f2, f1));
  if (it == assoc_.end())
    throw std::out_of_range(name + ": assoc undefined (" + cells1[f3].id + "," +
                            cells1[f2].id + "," + cells1[f1].id + ")");
  return it->second;
}

int FiniteBicategory::vchain(std::initializer_list<int> cells) const {
  int acc = -1;
  // initializer list is written left-to-right as "last applied first".
  std::vector<int> v(cells);
  for (auto it = v.rbegin(); it != v.rend(); ++it)
    acc = (acc < 0) ? *it : vcomp(*it, acc);
  return acc;
}

int FiniteBicategory::object_index(const Id& id) const {
  auto it = ix0_.find(id);
  if (it == ix0_.end()) throw std::out_of_range(name + ": no object " + id);
  return it->second;
}

int FiniteBicategory::cell1_index(const Id& id) const {
  auto it = ix1_.find(id);
  if (it == ix1_.end()) throw std::out_of_range(name + ": no 1-cell " + id);
  return it->second;
}

int FiniteBicategory::cell2_index(const Id& id) const {
  auto it = ix2_.find(id);
  if (it == ix2_.end()) throw std::out_of_range(name + ": no 2-cell " + id);
  return it->second;
}

std::optional<int> FiniteBicategory::find_cell1(const Id& id) const {
  auto it = ix1_.find(id);
  if (it == ix1_.end()) return std::nullopt;
  return it->second;
}

const std::vector<int>& FiniteBicategory::hom1(int a, int b) const {
  std::size_t key = static_cast<std::size_t>(a) * n_obj() + b;
  return hom1_[key];
}

const std::vector<int>& FiniteBicategory::cells2_between(int f, int g) const {
  auto it = between_.find(pack2(f, g));
  return it == between_.end() ? empty_ : it->second;
}

const std::vector<int>& FiniteBicategory::cells2_from(int f) const {
  return from_[f];
}

void FiniteBicategory::finalize() {
  ix0_.clear();
  ix1_.clear();
  ix2_.clear();
  for (int i = 0; i < n_obj(); ++i) ix0_[objects[i]] = i;
  for (int i = 0; i < n1(); ++i) ix1_[cells1[i].id] = i;
  for (int i = 0; i < n2(); ++i) ix2_[cells2[i].id] = i;
  hom1_.assign(static_cast<std::size_t>(n_obj()) * n_obj(), {});
  for (int i = 0; i < n1(); ++i)
    hom1_[static_cast<std::size_t>(cells1[i].src) * n_obj() + cells1[i].dst]
        .push_back(i);
  between_.clear();
  from_.assign(n1(), {});
  for (int i = 0; i < n2(); ++i) {
    between_[pack2(cells2[i].src, cells2[i].dst)].push_back(i);
    from_[cells2[i].src].push_back(i);
  }
  // Vertical inverses (two-sided), where they exist.
  inv2_.assign(n2(), -1);
  for (int b = 0; b < n2(); ++b) {
    for (int c : cells2_between(cells2[b].dst, cells2[b].src)) {
      auto cb = vcomp_.find(pack2(c, b));
      auto bc = vcomp_.find(pack2(b, c));
      if (cb != vcomp_.end() && bc != vcomp_.end() &&
          cb->second == id2[cells2[b].src] && bc->second == id2[cells2[b].dst]) {
        inv2_[b] = c;
        break;
      }
    }
  }
}

void FiniteBicategory::check_schema(ValidationReport& rep) const {
  std::set<Id> seen;
  for (const auto& o : objects)
    if (!seen.insert(o).second) rep.schema("duplicate-object-id", o);
  seen.clear();
  for (const auto& c : cells1) {
    if (!seen.insert(c.id).second) rep.schema("duplicate-1cell-id", c.id);
    if (c.src < 0 || c.src >= n_obj() || c.dst < 0 || c.dst >= n_obj())
      rep.schema("dangling-1cell-endpoint", c.id);
  }
  seen.clear();
  for (const auto& c : cells2) {
    if (!seen.insert(c.id).second) rep.schema("duplicate-2cell-id", c.id);
    if (c.src < 0 || c.src >= n1() || c.dst < 0 || c.dst >= n1()) {
      rep.schema("dangling-2cell-endpoint", c.id);
      continue;
    }
    if (cells1[c.src].src != cells1[c.dst].src ||
        cells1[c.src].dst != cells1[c.dst].dst)
      rep.schema("2cell-not-parallel", c.id);
  }
  if (!rep.schema_errors.empty()) return;

  if (static_cast<int>(id1.size()) != n_obj() ||
      static_cast<int>(id2.size()) != n1() ||
      static_cast<int>(lunit.size()) != n1() ||
      static_cast<int>(runit.size()) != n1()) {
    rep.schema("table-shape", name);
    return;
  }
  for (int a = 0; a < n_obj(); ++a)
    if (cells1[id1[a]].src != a || cells1[id1[a]].dst != a)
      rep.schema("identity-1cell-endpoints", objects[a]);
  for (int f = 0; f < n1(); ++f)
    if (cells2[id2[f]].src != f || cells2[id2[f]].dst != f)
      rep.schema("identity-2cell-endpoints", cells1[f].id);

  for (int b = 0; b < n2(); ++b)
    for (int a = 0; a < n2(); ++a) {
      bool comp = v_composable(b, a);
      bool has = vcomp_.count(pack2(b, a)) > 0;
      if (comp && !has)
        rep.schema("missing-vcomp", tup({cells2[b].id, cells2[a].id}));
      else if (!comp && has)
        rep.schema("vcomp-of-uncomposable", tup({cells2[b].id, cells2[a].id}));
      else if (comp) {
        int r = vcomp_.at(pack2(b, a));
        if (cells2[r].src != cells2[a].src || cells2[r].dst != cells2[b].dst)
          rep.schema("vcomp-endpoints", tup({cells2[b].id, cells2[a].id}));
      }
    }
  for (int g = 0; g < n1(); ++g)
    for (int f = 0; f < n1(); ++f) {
      bool comp = h_composable1(g, f);
      bool has = hcomp1_.count(pack2(g, f)) > 0;
      if (comp && !has)
        rep.schema("missing-hcomp1", tup({cells1[g].id, cells1[f].id}));
      else if (!comp && has)
        rep.schema("hcomp1-of-uncomposable", tup({cells1[g].id, cells1[f].id}));
      else if (comp) {
        int r = hcomp1_.at(pack2(g, f));
        if (cells1[r].src != cells1[f].src || cells1[r].dst != cells1[g].dst)
          rep.schema("hcomp1-endpoints", tup({cells1[g].id, cells1[f].id}));
      }
    }
  for (int b2 = 0; b2 < n2(); ++b2)
    for (int b1 = 0; b1 < n2(); ++b1) {
      bool comp = h_composable2(b2, b1);
      bool has = hcomp2_.count(pack2(b2, b1)) > 0;
      if (comp && !has)
        rep.schema("missing-hcomp2", tup({cells2[b2].id, cells2[b1].id}));
      else if (!comp && has)
        rep.schema("hcomp2-of-uncomposable", tup({cells2[b2].id, cells2[b1].id}));
      else if (comp) {
        int r = hcomp2_.at(pack2(b2, b1));
        int fsrc = hcomp1_.at(pack2(cells2[b2].src, cells2[b1].src));
        int fdst = hcomp1_.at(pack2(cells2[b2].dst, cells2[b1].dst));
        if (cells2[r].src != fsrc || cells2[r].dst != fdst)
          rep.schema("hcomp2-endpoints", tup({cells2[b2].id, cells2[b1].id}));
      }
    }
  for (int f3 = 0; f3 < n1(); ++f3)
    for (int f2 = 0; f2 < n1(); ++f2) {
      if (!h_composable1(f3, f2)) continue;
      for (int f1 = 0; f1 < n1(); ++f1) {
        bool comp = h_composable1(f2, f1);
        bool has = assoc_.count(pack3(f3, f2, f1)) > 0;
        if (comp && !has)
          rep.schema("missing-assoc",
                     tup({cells1[f3].id, cells1[f2].id, cells1[f1].id}));
        else if (comp) {
          int r = assoc_.at(pack3(f3, f2, f1));
          int lhs = hcomp1_.at(pack2(hcomp1_.at(pack2(f3, f2)), f1));
          int rhs = hcomp1_.at(pack2(f3, hcomp1_.at(pack2(f2, f1))));
          if (cells2[r].src != lhs || cells2[r].dst != rhs)
            rep.schema("assoc-endpoints",
                       tup({cells1[f3].id, cells1[f2].id, cells1[f1].id}));
        }
      }
    }
  for (int f = 0; f < n1(); ++f) {
    int l = lunit[f], r = runit[f];
    if (cells2[l].src != hcomp1_.at(pack2(id1[cells1[f].dst], f)) ||
        cells2[l].dst != f)
      rep.schema("lunit-endpoints", cells1[f].id);
    if (cells2[r].src != hcomp1_.at(pack2(f, id1[cells1[f].src])) ||
        cells2[r].dst != f)
      rep.schema("runit-endpoints", cells1[f].id);
  }
}

void FiniteBicategory::check_axioms(ValidationReport& rep) const {
  // Vertical categories.
  for (int a = 0; a < n2(); ++a) {
    int l = vcomp(id2[cells2[a].dst], a);
    if (l != a) rep.fail("vertical-left-unit", cells2[a].id, cells2[l].id, cells2[a].id);
    int r = vcomp(a, id2[cells2[a].src]);
    if (r != a) rep.fail("vertical-right-unit", cells2[a].id, cells2[r].id, cells2[a].id);
  }
  for (int c = 0; c < n2(); ++c)
    for (int b = 0; b < n2(); ++b) {
      if (!v_composable(c, b)) continue;
      for (int a = 0; a < n2(); ++a) {
        if (!v_composable(b, a)) continue;
        int lhs = vcomp(vcomp(c, b), a);
        int rhs = vcomp(c, vcomp(b, a));
        if (lhs != rhs)
          rep.fail("vertical-associativity",
                   tup({cells2[c].id, cells2[b].id, cells2[a].id}), cells2[lhs].id,
                   cells2[rhs].id);
      }
    }
  // Horizontal composition is a functor on hom-categories.
  for (int g = 0; g < n1(); ++g)
    for (int f = 0; f < n1(); ++f)
      if (h_composable1(g, f)) {
        int lhs = hcomp2(id2[g], id2[f]);
        if (lhs != id2[hcomp1(g, f)])
          rep.fail("hcomp-identity", tup({cells1[g].id, cells1[f].id}),
                   cells2[lhs].id, cells2[id2[hcomp1(g, f)]].id);
      }
  for (int b2 = 0; b2 < n2(); ++b2)
    for (int a2 = 0; a2 < n2(); ++a2) {
      if (!v_composable(b2, a2)) continue;
      for (int b1 = 0; b1 < n2(); ++b1) {
        if (!h_composable2(b2, b1)) continue;
        for (int a1 = 0; a1 < n2(); ++a1) {
          if (!v_composable(b1, a1)) continue;
          int lhs = hcomp2(vcomp(b2, a2), vcomp(b1, a1));
          int rhs = vcomp(hcomp2(b2, b1), hcomp2(a2, a1));
          if (lhs != rhs)
            rep.fail("interchange",
                     tup({cells2[b2].id, cells2[a2].id, cells2[b1].id,
                          cells2[a1].id}),
                     cells2[lhs].id, cells2[rhs].id);
        }
      }
    }
  // Constraint cells are isos.
  for (const auto& [key, a] : assoc_)
    if (inv2(a) < 0) rep.fail("assoc-not-iso", cells2[a].id);
  for (int f = 0; f < n1(); ++f) {
    if (inv2(lunit[f]) < 0) rep.fail("lunit-not-iso", cells1[f].id);
    if (inv2(runit[f]) < 0) rep.fail("runit-not-iso", cells1[f].id);
  }
  if (!rep.violations.empty()) return;  // naturality needs the inverses

  // Naturality of l and r.
  for (int al = 0; al < n2(); ++al) {
    int f = cells2[al].src, g = cells2[al].dst;
    int lhs = vcomp(lunit[g], hcomp2(id2[id1[cells1[f].dst]], al));
    int rhs = vcomp(al, lunit[f]);
    if (lhs != rhs)
      rep.fail("lunit-naturality", cells2[al].id, cells2[lhs].id, cells2[rhs].id);
    lhs = vcomp(runit[g], hcomp2(al, id2[id1[cells1[f].src]]));
    rhs = vcomp(al, runit[f]);
    if (lhs != rhs)
      rep.fail("runit-naturality", cells2[al].id, cells2[lhs].id, cells2[rhs].id);
  }
  // Naturality of assoc.
  for (int a3 = 0; a3 < n2(); ++a3)
    for (int a2 = 0; a2 < n2(); ++a2) {
      if (!h_composable2(a3, a2)) continue;
      for (int a1 = 0; a1 < n2(); ++a1) {
        if (!h_composable2(a2, a1)) continue;
        int f3 = cells2[a3].src, f2 = cells2[a2].src, f1 = cells2[a1].src;
        int g3 = cells2[a3].dst, g2 = cells2[a2].dst, g1 = cells2[a1].dst;
        int lhs = vcomp(assoc(g3, g2, g1), hcomp2(hcomp2(a3, a2), a1));
        int rhs = vcomp(hcomp2(a3, hcomp2(a2, a1)), assoc(f3, f2, f1));
        if (lhs != rhs)
          rep.fail("assoc-naturality",
                   tup({cells2[a3].id, cells2[a2].id, cells2[a1].id}),
                   cells2[lhs].id, cells2[rhs].id);
      }
    }
  // Pentagon.
  for (int f4 = 0; f4 < n1(); ++f4)
    for (int f3 = 0; f3 < n1(); ++f3) {
      if (!h_composable1(f4, f3)) continue;
      for (int f2 = 0; f2 < n1(); ++f2) {
        if (!h_composable1(f3, f2)) continue;
        for (int f1 = 0; f1 < n1(); ++f1) {
          if (!h_composable1(f2, f1)) continue;
          int lhs = vcomp(assoc(f4, f3, hcomp1(f2, f1)), assoc(hcomp1(f4, f3), f2, f1));
          int rhs = vchain({hcomp2(id2[f4], assoc(f3, f2, f1)),
                            assoc(f4, hcomp1(f3, f2), f1),
                            hcomp2(assoc(f4, f3, f2), id2[f1])});
          if (lhs != rhs)
            rep.fail("pentagon",
                     tup({cells1[f4].id, cells1[f3].id, cells1[f2].id,
                          cells1[f1].id}),
                     cells2[lhs].id, cells2[rhs].id);
        }
      }
    }
  // Triangle.
  for (int f2 = 0; f2 < n1(); ++f2)
    for (int f1 = 0; f1 < n1(); ++f1) {
      if (!h_composable1(f2, f1)) continue;
      int b = cells1[f1].dst;
      int lhs = vcomp(hcomp2(id2[f2], lunit[f1]), assoc(f2, id1[b], f1));
      int rhs = hcomp2(runit[f2], id2[f1]);
      if (lhs != rhs)
        rep.fail("triangle", tup({cells1[f2].id, cells1[f1].id}), cells2[lhs].id,
                 cells2[rhs].id);
    }
}

ValidationReport validate_bicategory(const FiniteBicategory& b) {
  ValidationReport rep;
  rep.subject = b.name;
  b.check_schema(rep);
  if (rep.schema_errors.empty()) b.check_axioms(rep);
  return rep;
}

// --- LaxMorphism ---------------------------------------------------------------

int LaxMorphism::comp_cell(int f2, int f1) const {
  auto it = comp_cell_.find(pack2(f2, f1));
  if (it == comp_cell_.end())
    throw std::out_of_range(name + ": structure cell undefined (" +
                            src->cells1[f2].id + "," + src->cells1[f1].id + ")");
  return it->second;
}

bool LaxMorphism::normal() const {
  for (int a = 0; a < src->n_obj(); ++a)
    if (unit_cell[a] != dst->id2[dst->id1[map0[a]]] ||
        map1[src->id1[a]] != dst->id1[map0[a]])
      return false;
  return true;
}

bool LaxMorphism::pseudo() const {
  for (const auto& [k, c] : comp_cell_)
    if (dst->inv2(c) < 0) return false;
  for (int a = 0; a < src->n_obj(); ++a)
    if (dst->inv2(unit_cell[a]) < 0) return false;
  return true;
}

bool LaxMorphism::strict() const {
  for (const auto& [k, c] : comp_cell_)
    if (c != dst->id2[dst->cells2[c].src]) return false;
  for (int a = 0; a < src->n_obj(); ++a)
    if (unit_cell[a] != dst->id2[dst->cells2[unit_cell[a]].src]) return false;
  return true;
}

LaxMorphism LaxMorphism::as_dir(Dir d) const {
  if (d == dir) return *this;
  LaxMorphism out = *this;
  out.dir = d;
  for (auto& [k, c] : out.comp_cell_) {
    int inv = dst->inv2(c);
    if (inv < 0)
      throw std::invalid_argument(name + ": cannot flip non-invertible structure cell");
    c = inv;
  }
  for (auto& c : out.unit_cell) {
    int inv = dst->inv2(c);
    if (inv < 0)
      throw std::invalid_argument(name + ": cannot flip non-invertible unit cell");
    c = inv;
  }
  return out;
}

LaxMorphism LaxMorphism::identity(BicatPtr b, Dir d) {
  LaxMorphism f;
  f.name = "1_" + b->name;
  f.dir = d;
  f.src = f.dst = b;
  f.map0.resize(b->n_obj());
  f.map1.resize(b->n1());
  f.map2.resize(b->n2());
  for (int i = 0; i < b->n_obj(); ++i) f.map0[i] = i;
  for (int i = 0; i < b->n1(); ++i) f.map1[i] = i;
  for (int i = 0; i < b->n2(); ++i) f.map2[i] = i;
  for (int g = 0; g < b->n1(); ++g)
    for (int fq = 0; fq < b->n1(); ++fq)
      if (b->h_composable1(g, fq))
        f.set_comp_cell(g, fq, b->id2[b->hcomp1(g, fq)]);
  for (int a = 0; a < b->n_obj(); ++a)
    f.unit_cell.push_back(b->id2[b->id1[a]]);
  return f;
}

ValidationReport validate_lax(const LaxMorphism& F) {
  ValidationReport rep;
  rep.subject = F.name.empty() ? "laxmorphism" : F.name;
  const auto& A = *F.src;
  const auto& B = *F.dst;
  if (static_cast<int>(F.map0.size()) != A.n_obj() ||
      static_cast<int>(F.map1.size()) != A.n1() ||
      static_cast<int>(F.map2.size()) != A.n2() ||
      static_cast<int>(F.unit_cell.size()) != A.n_obj()) {
    rep.schema("lax-table-shape", rep.subject);
    return rep;
  }
  for (int f = 0; f < A.n1(); ++f) {
    int ff = F.map1[f];
    if (ff < 0 || ff >= B.n1()) {
      rep.schema("map1-range", A.cells1[f].id);
      return rep;
    }
    if (B.cells1[ff].src != F.map0[A.cells1[f].src] ||
        B.cells1[ff].dst != F.map0[A.cells1[f].dst])
      rep.fail("map1-endpoints", A.cells1[f].id);
  }
  for (int c = 0; c < A.n2(); ++c) {
    int cc = F.map2[c];
    if (cc < 0 || cc >= B.n2()) {
      rep.schema("map2-range", A.cells2[c].id);
      return rep;
    }
    if (B.cells2[cc].src != F.map1[A.cells2[c].src] ||
        B.cells2[cc].dst != F.map1[A.cells2[c].dst])
      rep.fail("map2-endpoints", A.cells2[c].id);
  }
  if (!rep.violations.empty()) return rep;

  // Structure cell endpoints.
  for (int g = 0; g < A.n1(); ++g)
    for (int f = 0; f < A.n1(); ++f) {
      if (!A.h_composable1(g, f)) continue;
      if (!F.comp_cell_.count(pack2(g, f))) {
        rep.schema("missing-structure-cell", tup({A.cells1[g].id, A.cells1[f].id}));
        continue;
      }
      int c = F.comp_cell(g, f);
      int outer = B.hcomp1(F.map1[g], F.map1[f]);
      int inner = F.map1[A.hcomp1(g, f)];
      int want_src = F.dir == Dir::Lax ? outer : inner;
      int want_dst = F.dir == Dir::Lax ? inner : outer;
      if (B.cells2[c].src != want_src || B.cells2[c].dst != want_dst)
        rep.fail("structure-cell-endpoints", tup({A.cells1[g].id, A.cells1[f].id}));
    }
  for (int a = 0; a < A.n_obj(); ++a) {
    int c = F.unit_cell[a];
    int one = B.id1[F.map0[a]];
    int img = F.map1[A.id1[a]];
    int want_src = F.dir == Dir::Lax ? one : img;
    int want_dst = F.dir == Dir::Lax ? img : one;
    if (B.cells2[c].src != want_src || B.cells2[c].dst != want_dst)
      rep.fail("unit-cell-endpoints", A.objects[a]);
  }
  if (!rep.ok()) return rep;

  // Local functors: identities and vertical composition.
  for (int f = 0; f < A.n1(); ++f)
    if (F.map2[A.id2[f]] != B.id2[F.map1[f]])
      rep.fail("hom-functor-identity", A.cells1[f].id);
  for (int b = 0; b < A.n2(); ++b)
    for (int a = 0; a < A.n2(); ++a) {
      if (!A.v_composable(b, a)) continue;
      if (F.map2[A.vcomp(b, a)] != B.vcomp(F.map2[b], F.map2[a]))
        rep.fail("hom-functor-composition", tup({A.cells2[b].id, A.cells2[a].id}));
    }
  // Naturality of the structure cells in both arguments.
  for (int b2 = 0; b2 < A.n2(); ++b2)
    for (int b1 = 0; b1 < A.n2(); ++b1) {
      if (!A.h_composable2(b2, b1)) continue;
      int f2 = A.cells2[b2].src, f1 = A.cells2[b1].src;
      int g2 = A.cells2[b2].dst, g1 = A.cells2[b1].dst;
      int lhs, rhs;
      if (F.dir == Dir::Lax) {
        lhs = B.vcomp(F.map2[A.hcomp2(b2, b1)], F.comp_cell(f2, f1));
        rhs = B.vcomp(F.comp_cell(g2, g1), B.hcomp2(F.map2[b2], F.map2[b1]));
      } else {
        lhs = B.vcomp(B.hcomp2(F.map2[b2], F.map2[b1]), F.comp_cell(f2, f1));
        rhs = B.vcomp(F.comp_cell(g2, g1), F.map2[A.hcomp2(b2, b1)]);
      }
      if (lhs != rhs)
        rep.fail("structure-naturality", tup({A.cells2[b2].id, A.cells2[b1].id}),
                 B.cells2[lhs].id, B.cells2[rhs].id);
    }
  // Associativity coherence.
  for (int f3 = 0; f3 < A.n1(); ++f3)
    for (int f2 = 0; f2 < A.n1(); ++f2) {
      if (!A.h_composable1(f3, f2)) continue;
      for (int f1 = 0; f1 < A.n1(); ++f1) {
        if (!A.h_composable1(f2, f1)) continue;
        int lhs, rhs;
        if (F.dir == Dir::Lax) {
          lhs = B.vchain({F.comp_cell(f3, A.hcomp1(f2, f1)),
                          B.hcomp2(B.id2[F.map1[f3]], F.comp_cell(f2, f1)),
                          B.assoc(F.map1[f3], F.map1[f2], F.map1[f1])});
          rhs = B.vchain({F.map2[A.assoc(f3, f2, f1)],
                          F.comp_cell(A.hcomp1(f3, f2), f1),
                          B.hcomp2(F.comp_cell(f3, f2), B.id2[F.map1[f1]])});
        } else {
          lhs = B.vchain({B.hcomp2(B.id2[F.map1[f3]], F.comp_cell(f2, f1)),
                          F.comp_cell(f3, A.hcomp1(f2, f1)),
                          F.map2[A.assoc(f3, f2, f1)]});
          rhs = B.vchain({B.assoc(F.map1[f3], F.map1[f2], F.map1[f1]),
                          B.hcomp2(F.comp_cell(f3, f2), B.id2[F.map1[f1]]),
                          F.comp_cell(A.hcomp1(f3, f2), f1)});
        }
        if (lhs != rhs)
          rep.fail("hexagon-coherence",
                   tup({A.cells1[f3].id, A.cells1[f2].id, A.cells1[f1].id}),
                   B.cells2[lhs].id, B.cells2[rhs].id);
      }
    }
  // Unit coherence.
  for (int f = 0; f < A.n1(); ++f) {
    int a = A.cells1[f].src, b = A.cells1[f].dst;
    int Ff = F.map1[f];
    int lhs, rhs;
    if (F.dir == Dir::Lax) {
      lhs = B.vchain({F.map2[A.lunit[f]], F.comp_cell(A.id1[b], f),
                      B.hcomp2(F.unit_cell[b], B.id2[Ff])});
      rhs = B.lunit[Ff];
      if (lhs != rhs)
        rep.fail("left-unit-coherence", A.cells1[f].id, B.cells2[lhs].id,
                 B.cells2[rhs].id);
      lhs = B.vchain({F.map2[A.runit[f]], F.comp_cell(f, A.id1[a]),
                      B.hcomp2(B.id2[Ff], F.unit_cell[a])});
      rhs = B.runit[Ff];
      if (lhs != rhs)
        rep.fail("right-unit-coherence", A.cells1[f].id, B.cells2[lhs].id,
                 B.cells2[rhs].id);
    } else {
      lhs = B.vchain({B.lunit[Ff], B.hcomp2(F.unit_cell[b], B.id2[Ff]),
                      F.comp_cell(A.id1[b], f)});
      rhs = F.map2[A.lunit[f]];
      if (lhs != rhs)
        rep.fail("left-unit-coherence", A.cells1[f].id, B.cells2[lhs].id,
                 B.cells2[rhs].id);
      lhs = B.vchain({B.runit[Ff], B.hcomp2(B.id2[Ff], F.unit_cell[a]),
                      F.comp_cell(f, A.id1[a])});
      rhs = F.map2[A.runit[f]];
      if (lhs != rhs)
        rep.fail("right-unit-coherence", A.cells1[f].id, B.cells2[lhs].id,
                 B.cells2[rhs].id);
    }
  }
  return rep;
}

// --- transformations -------------------------------------------------------

ValidationReport validate_transformation(const LaxTransformation& t) {
  ValidationReport rep;
  rep.subject = t.name.empty() ? "transformation" : t.name;
  const auto& F = *t.from;
  const auto& G = *t.to;
  const auto& A = *F.src;
  const auto& B = *F.dst;
  if (F.src.get() != G.src.get() || F.dst.get() != G.dst.get() ||
      F.dir != G.dir) {
    rep.schema("transformation-frame", rep.subject);
    return rep;
  }
  if (static_cast<int>(t.comp0.size()) != A.n_obj() ||
      static_cast<int>(t.natcell.size()) != A.n1()) {
    rep.schema("transformation-table-shape", rep.subject);
    return rep;
  }
  for (int a = 0; a < A.n_obj(); ++a) {
    int c = t.comp0[a];
    if (B.cells1[c].src != F.map0[a] || B.cells1[c].dst != G.map0[a])
      rep.fail("component-endpoints", A.objects[a]);
  }
  if (!rep.violations.empty()) return rep;
  for (int f = 0; f < A.n1(); ++f) {
    int a0 = A.cells1[f].src, a1 = A.cells1[f].dst;
    int c = t.natcell[f];
    int lhs1 = B.hcomp1(G.map1[f], t.comp0[a0]);
    int rhs1 = B.hcomp1(t.comp0[a1], F.map1[f]);
    int want_src = t.kind == LaxTransformation::Kind::Lax ? lhs1 : rhs1;
    int want_dst = t.kind == LaxTransformation::Kind::Lax ? rhs1 : lhs1;
    if (B.cells2[c].src != want_src || B.cells2[c].dst != want_dst)
      rep.fail("naturality-cell-endpoints", A.cells1[f].id);
  }
  if (!rep.violations.empty()) return rep;

  const bool lax_kind = t.kind == LaxTransformation::Kind::Lax;
  // Naturality in 2-cells.
  for (int b = 0; b < A.n2(); ++b) {
    int f = A.cells2[b].src, g = A.cells2[b].dst;
    int a0 = A.cells1[f].src, a1 = A.cells1[f].dst;
    int lhs, rhs;
    if (lax_kind) {
      lhs = B.vcomp(t.natcell[g], B.hcomp2(G.map2[b], B.id2[t.comp0[a0]]));
      rhs = B.vcomp(B.hcomp2(B.id2[t.comp0[a1]], F.map2[b]), t.natcell[f]);
    } else {
      lhs = B.vcomp(t.natcell[g], B.hcomp2(B.id2[t.comp0[a1]], F.map2[b]));
      rhs = B.vcomp(B.hcomp2(G.map2[b], B.id2[t.comp0[a0]]), t.natcell[f]);
    }
    if (lhs != rhs)
      rep.fail("naturality-2cell", A.cells2[b].id, B.cells2[lhs].id,
               B.cells2[rhs].id);
  }

  auto inv = [&](int cell, const char* what) {
    int iv = B.inv2(cell);
    if (iv < 0)
      throw std::out_of_range(rep.subject + ": required inverse missing for " +
                              std::string(what));
    return iv;
  };
  const bool lax_fun = F.dir == Dir::Lax;

  // Composition coherence; the zig-zag through the naturality cells is
  // shared by all variants.
  for (int f2 = 0; f2 < A.n1(); ++f2)
    for (int f1 = 0; f1 < A.n1(); ++f1) {
      if (!A.h_composable1(f2, f1)) continue;
      int a0 = A.cells1[f1].src, a1 = A.cells1[f1].dst, a2 = A.cells1[f2].dst;
      int Ff1 = F.map1[f1], Ff2 = F.map1[f2];
      int Gf1 = G.map1[f1], Gf2 = G.map1[f2];
      int c0 = t.comp0[a0], c1 = t.comp0[a1], c2 = t.comp0[a2];
      int Fhat = F.comp_cell(f2, f1), Ghat = G.comp_cell(f2, f1);
      int acell = t.natcell[A.hcomp1(f2, f1)];
      int lhs, rhs;
      if (lax_kind) {
        // zig : (Gf2 o Gf1) o c0 => c2 o (Ff2 o Ff1)
        int zig = B.vchain({B.assoc(c2, Ff2, Ff1),
                            B.hcomp2(t.natcell[f2], B.id2[Ff1]),
                            inv(B.assoc(Gf2, c1, Ff1), "assoc"),
                            B.hcomp2(B.id2[Gf2], t.natcell[f1]),
                            B.assoc(Gf2, Gf1, c0)});
        if (lax_fun) {
          lhs = B.vcomp(acell, B.hcomp2(Ghat, B.id2[c0]));
          rhs = B.vcomp(B.hcomp2(B.id2[c2], Fhat), zig);
        } else {
          lhs = B.vcomp(B.hcomp2(B.id2[c2], Fhat), acell);
          rhs = B.vcomp(zig, B.hcomp2(Ghat, B.id2[c0]));
        }
      } else {
        // zag : c2 o (Ff2 o Ff1) => (Gf2 o Gf1) o c0
        int zag = B.vchain({inv(B.assoc(Gf2, Gf1, c0), "assoc"),
                            B.hcomp2(B.id2[Gf2], t.natcell[f1]),
                            B.assoc(Gf2, c1, Ff1),
                            B.hcomp2(t.natcell[f2], B.id2[Ff1]),
                            inv(B.assoc(c2, Ff2, Ff1), "assoc")});
        if (lax_fun) {
          lhs = B.vcomp(acell, B.hcomp2(B.id2[c2], Fhat));
          rhs = B.vcomp(B.hcomp2(Ghat, B.id2[c0]), zag);
        } else {
          lhs = B.vcomp(B.hcomp2(Ghat, B.id2[c0]), acell);
          rhs = B.vcomp(zag, B.hcomp2(B.id2[c2], Fhat));
        }
      }
      if (lhs != rhs)
        rep.fail("composition-coherence", tup({A.cells1[f2].id, A.cells1[f1].id}),
                 B.cells2[lhs].id, B.cells2[rhs].id);
    }

  // Unit coherence.
  for (int a = 0; a < A.n_obj(); ++a) {
    int ca = t.comp0[a];
    int Fu = F.unit_cell[a], Gu = G.unit_cell[a];
    int nat1 = t.natcell[A.id1[a]];
    int lhs, rhs;
    if (lax_kind) {
      if (lax_fun) {
        // 1_{Ga} o ca => ca o F1_a
        lhs = B.vcomp(nat1, B.hcomp2(Gu, B.id2[ca]));
        rhs = B.vchain({B.hcomp2(B.id2[ca], Fu), inv(B.runit[ca], "runit"),
                        B.lunit[ca]});
      } else {
        // G1_a o ca => ca o 1_{Fa}
        lhs = B.vcomp(B.hcomp2(B.id2[ca], Fu), nat1);
        rhs = B.vchain({inv(B.runit[ca], "runit"), B.lunit[ca],
                        B.hcomp2(Gu, B.id2[ca])});
      }
    } else {
      if (lax_fun) {
        // ca o 1_{Fa} => G1_a o ca
        lhs = B.vcomp(nat1, B.hcomp2(B.id2[ca], Fu));
        rhs = B.vchain({B.hcomp2(Gu, B.id2[ca]), inv(B.lunit[ca], "lunit"),
                        B.runit[ca]});
      } else {
        // ca o F1_a => 1_{Ga} o ca
        lhs = B.vcomp(B.hcomp2(Gu, B.id2[ca]), nat1);
        rhs = B.vchain({inv(B.lunit[ca], "lunit"), B.runit[ca],
                        B.hcomp2(B.id2[ca], Fu)});
      }
    }
    if (lhs != rhs)
      rep.fail("unit-coherence", A.objects[a], B.cells2[lhs].id, B.cells2[rhs].id);
  }
  return rep;
}

ValidationReport validate_icon(const IconMorphism& icon) {
  ValidationReport rep;
  rep.subject = icon.name.empty() ? "icon" : icon.name;
  const auto& F = *icon.from;
  const auto& G = *icon.to;
  const auto& A = *F.src;
  const auto& B = *F.dst;
  if (F.src.get() != G.src.get() || F.dst.get() != G.dst.get() ||
      F.dir != G.dir) {
    rep.schema("icon-frame", rep.subject);
    return rep;
  }
  for (int a = 0; a < A.n_obj(); ++a)
    if (F.map0[a] != G.map0[a]) {
      rep.schema("icon-objects-disagree", A.objects[a]);
      return rep;
    }
  if (static_cast<int>(icon.cell.size()) != A.n1()) {
    rep.schema("icon-table-shape", rep.subject);
    return rep;
  }
  for (int f = 0; f < A.n1(); ++f) {
    int c = icon.cell[f];
    if (B.cells2[c].src != F.map1[f] || B.cells2[c].dst != G.map1[f])
      rep.fail("icon-cell-endpoints", A.cells1[f].id);
  }
  if (!rep.violations.empty()) return rep;
  // Naturality with respect to source 2-cells.
  for (int b = 0; b < A.n2(); ++b) {
    int f = A.cells2[b].src, g = A.cells2[b].dst;
    int lhs = B.vcomp(icon.cell[g], F.map2[b]);
    int rhs = B.vcomp(G.map2[b], icon.cell[f]);
    if (lhs != rhs)
      rep.fail("icon-naturality", A.cells2[b].id, B.cells2[lhs].id,
               B.cells2[rhs].id);
  }
  // Compatibility with the structure cells.
  for (int g = 0; g < A.n1(); ++g)
    for (int f = 0; f < A.n1(); ++f) {
      if (!A.h_composable1(g, f)) continue;
      int lhs, rhs;
      if (F.dir == Dir::Lax) {
        lhs = B.vcomp(G.comp_cell(g, f), B.hcomp2(icon.cell[g], icon.cell[f]));
        rhs = B.vcomp(icon.cell[A.hcomp1(g, f)], F.comp_cell(g, f));
      } else {
        lhs = B.vcomp(B.hcomp2(icon.cell[g], icon.cell[f]), F.comp_cell(g, f));
        rhs = B.vcomp(G.comp_cell(g, f), icon.cell[A.hcomp1(g, f)]);
      }
      if (lhs != rhs)
        rep.fail("icon-composition-square", tup({A.cells1[g].id, A.cells1[f].id}),
                 B.cells2[lhs].id, B.cells2[rhs].id);
    }
  for (int a = 0; a < A.n_obj(); ++a) {
    int lhs, rhs;
    if (F.dir == Dir::Lax) {
      lhs = B.vcomp(icon.cell[A.id1[a]], F.unit_cell[a]);
      rhs = G.unit_cell[a];
    } else {
      lhs = B.vcomp(G.unit_cell[a], icon.cell[A.id1[a]]);
      rhs = F.unit_cell[a];
    }
    if (lhs != rhs)
      rep.fail("icon-unit-triangle", A.objects[a], B.cells2[lhs].id,
               B.cells2[rhs].id);
  }
  return rep;
}

// --- constructors ----------------------------------------------------------

std::shared_ptr<FiniteBicategory> discrete_bicategory(const alg::FiniteCategory& c) {
  auto b = std::make_shared<FiniteBicategory>();
  b->name = "Disc(" + c.name + ")";
  b->objects = c.objects;
  for (const auto& m : c.mors) b->cells1.push_back({m.id, m.src, m.dst});
  for (int f = 0; f < c.n_mor(); ++f) {
    b->cells2.push_back({tup({"1", c.mors[f].id}), f, f});
    b->id2.push_back(f);
    b->set_vcomp(f, f, f);
  }
  b->id1 = c.identity;
  for (const auto& [key, gf] : c.comp_) {
    int g = static_cast<int>(key >> 21);
    int f = static_cast<int>(key & ((1u << 21) - 1));
    b->set_hcomp1(g, f, gf);
    b->set_hcomp2(g, f, gf);
  }
  for (int g = 0; g < c.n_mor(); ++g)
    for (int f = 0; f < c.n_mor(); ++f) {
      if (!c.composable(g, f)) continue;
      for (int e = 0; e < c.n_mor(); ++e)
        if (c.composable(e, c.compose(g, f)))
          b->set_assoc(e, g, f, b->id2[c.compose(c.compose(e, g), f)]);
    }
  b->lunit.resize(c.n_mor());
  b->runit.resize(c.n_mor());
  for (int f = 0; f < c.n_mor(); ++f) {
    b->lunit[f] = b->id2[f];
    b->runit[f] = b->id2[f];
  }
  b->finalize();
  return b;
}

BicatPtr simplex_bicategory(int p) {
  static std::map<int, BicatPtr> cache;
  auto it = cache.find(p);
  if (it != cache.end()) return it->second;
  auto b = discrete_bicategory(alg::FiniteCategory::simplex(p));
  cache[p] = b;
  return b;
}

LaxMorphism object_homomorphism(int bobj, BicatPtr B, Dir dir) {
  LaxMorphism f;
  f.name = "obj(" + B->objects[bobj] + ")";
  f.dir = dir;
  f.src = simplex_bicategory(0);
  f.dst = B;
  f.map0 = {bobj};
  f.map1 = {B->id1[bobj]};
  f.map2 = {B->id2[B->id1[bobj]]};
  int l = B->lunit[B->id1[bobj]];  // 1_b o 1_b => 1_b
  int cell = dir == Dir::Lax ? l : B->inv2(l);
  f.set_comp_cell(0, 0, cell);
  f.unit_cell = {B->id2[B->id1[bobj]]};
  return f;
}

LaxMorphism discrete_functor(const alg::CatFunctor& f, BicatPtr src, BicatPtr dst,
                             Dir dir) {
  LaxMorphism m;
  m.name = "Disc(functor)";
  m.dir = dir;
  m.src = std::move(src);
  m.dst = std::move(dst);
  m.map0 = f.obj_map;
  m.map1 = f.mor_map;
  m.map2 = f.mor_map;  // identity 2-cells track their 1-cells
  const auto& A = *m.src;
  const auto& B = *m.dst;
  for (int g = 0; g < A.n1(); ++g)
    for (int h = 0; h < A.n1(); ++h)
      if (A.h_composable1(g, h))
        m.set_comp_cell(g, h, B.id2[B.hcomp1(m.map1[g], m.map1[h])]);
  for (int a = 0; a < A.n_obj(); ++a)
    m.unit_cell.push_back(B.id2[B.id1[m.map0[a]]]);
  return m;
}

LaxMorphism compose_lax(const LaxMorphism& G, const LaxMorphism& F) {
  if (G.dir != F.dir)
    throw std::invalid_argument("compose_lax: direction mismatch (" + G.name +
                                " after " + F.name + ")");
  if (G.src.get() != F.dst.get())
    throw std::invalid_argument("compose_lax: " + G.name + " after " + F.name +
                                " not composable");
  const auto& B = *G.dst;
  LaxMorphism h;
  h.name = G.name + "." + F.name;
  h.dir = F.dir;
  h.src = F.src;
  h.dst = G.dst;
  h.map0.resize(F.map0.size());
  for (std::size_t i = 0; i < F.map0.size(); ++i) h.map0[i] = G.map0[F.map0[i]];
  h.map1.resize(F.map1.size());
  for (std::size_t i = 0; i < F.map1.size(); ++i) h.map1[i] = G.map1[F.map1[i]];
  h.map2.resize(F.map2.size());
  for (std::size_t i = 0; i < F.map2.size(); ++i) h.map2[i] = G.map2[F.map2[i]];
  const auto& A = *F.src;
  for (int g = 0; g < A.n1(); ++g)
    for (int f = 0; f < A.n1(); ++f) {
      if (!A.h_composable1(g, f)) continue;
      int c;
      if (F.dir == Dir::Lax)
        c = B.vcomp(G.map2[F.comp_cell(g, f)], G.comp_cell(F.map1[g], F.map1[f]));
      else
        c = B.vcomp(G.comp_cell(F.map1[g], F.map1[f]), G.map2[F.comp_cell(g, f)]);
      h.set_comp_cell(g, f, c);
    }
  h.unit_cell.resize(A.n_obj());
  for (int a = 0; a < A.n_obj(); ++a) {
    if (F.dir == Dir::Lax)
      h.unit_cell[a] = B.vcomp(G.map2[F.unit_cell[a]], G.unit_cell[F.map0[a]]);
    else
      h.unit_cell[a] = B.vcomp(G.unit_cell[F.map0[a]], G.map2[F.unit_cell[a]]);
  }
  return h;
}

bool lax_equal(const LaxMorphism& a, const LaxMorphism& b) {
  if (a.dir != b.dir || a.src.get() != b.src.get() || a.dst.get() != b.dst.get())
    return false;
  if (a.map0 != b.map0 || a.map1 != b.map1 || a.map2 != b.map2) return false;
  if (a.unit_cell != b.unit_cell) return false;
  if (a.comp_cell_.size() != b.comp_cell_.size()) return false;
  for (const auto& [k, v] : a.comp_cell_) {
    auto it = b.comp_cell_.find(k);
    if (it == b.comp_cell_.end() || it->second != v) return false;
  }
  return true;
}

}  // namespace hofib::bicat
