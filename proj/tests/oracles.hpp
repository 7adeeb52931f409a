#pragma once

// Independent oracles used by the test suites. These deliberately avoid the
// bicategorical machinery: the classical comma category and the ordinary
// nerve are built by direct enumeration so they can cross-check the general
// constructions.

#include <map>
#include <tuple>
#include <vector>

#include "hofib/algebra.hpp"

namespace oracles {

using hofib::Id;
using hofib::tup;
using hofib::alg::CatFunctor;
using hofib::alg::FiniteCategory;

struct ClassicalComma {
  FiniteCategory cat;
  // object -> (a, f, a'), morphism -> (u, u')
  std::vector<std::tuple<int, int, int>> objs;
  std::vector<std::pair<int, int>> mors;
};

// Comma category F|G of two ordinary functors with common target.
inline ClassicalComma classical_comma(const CatFunctor& F, const CatFunctor& G) {
  const auto& A = *F.src;
  const auto& Ap = *G.src;
  const auto& B = *F.dst;
  ClassicalComma out;
  out.cat.name = "classical-comma";
  std::map<std::tuple<int, int, int>, int> oix;
  for (int a = 0; a < A.n_obj(); ++a)
    for (int ap = 0; ap < Ap.n_obj(); ++ap)
      for (int f : B.hom(F.obj_map[a], G.obj_map[ap])) {
        oix[{a, f, ap}] = out.cat.n_obj();
        out.objs.push_back({a, f, ap});
        out.cat.objects.push_back(
            tup({A.objects[a], B.mors[f].id, Ap.objects[ap]}));
      }
  std::map<std::tuple<int, int, int>, int> mix;  // (srcObj, u, up)
  for (int X = 0; X < out.cat.n_obj(); ++X) {
    auto [a0, f0, ap0] = out.objs[X];
    for (int u : A.mors_from(a0))
      for (int up : Ap.mors_from(ap0)) {
        // G(up) . f0 = f1 . F(u) for some (necessarily unique) f1 target
        int lhs = B.compose(G.mor_map[up], f0);
        for (int f1 : B.hom(F.obj_map[A.mors[u].dst], G.obj_map[Ap.mors[up].dst]))
          if (B.compose(f1, F.mor_map[u]) == lhs) {
            int Y = oix.at({A.mors[u].dst, f1, Ap.mors[up].dst});
            mix[{X, u, up}] = out.cat.n_mor();
            out.mors.push_back({u, up});
            out.cat.mors.push_back(
                {tup({out.cat.objects[X], A.mors[u].id, Ap.mors[up].id}), X, Y});
          }
      }
  }
  out.cat.identity.resize(out.cat.n_obj());
  for (int X = 0; X < out.cat.n_obj(); ++X) {
    auto [a, f, ap] = out.objs[X];
    out.cat.identity[X] = mix.at({X, A.identity[a], Ap.identity[ap]});
  }
  for (int m2 = 0; m2 < out.cat.n_mor(); ++m2)
    for (int m1 = 0; m1 < out.cat.n_mor(); ++m1) {
      if (!out.cat.composable(m2, m1)) continue;
      auto [u2, up2] = out.mors[m2];
      auto [u1, up1] = out.mors[m1];
      out.cat.set_comp(m2, m1,
                       mix.at({out.cat.mors[m1].src, A.compose(u2, u1),
                               Ap.compose(up2, up1)}));
    }
  return out;
}

// Ordinary nerve of a category: chains of composable morphisms. Cell ids are
// the tuples of morphism ids (vertex id in dimension 0).
struct OrdinaryNerve {
  std::vector<std::vector<Id>> cells;  // per dimension
};

inline OrdinaryNerve ordinary_nerve(const FiniteCategory& c, int N) {
  OrdinaryNerve out;
  out.cells.resize(N + 1);
  for (const auto& o : c.objects) out.cells[0].push_back(tup({o}));
  std::vector<std::vector<int>> chains;  // current chains as morphism lists
  for (int m = 0; m < c.n_mor(); ++m) chains.push_back({m});
  for (int n = 1; n <= N; ++n) {
    for (const auto& ch : chains) {
      std::vector<Id> parts;
      for (int m : ch) parts.push_back(c.mors[m].id);
      out.cells[n].push_back(tup(parts));
    }
    std::vector<std::vector<int>> next;
    for (const auto& ch : chains)
      for (int m = 0; m < c.n_mor(); ++m)
        if (c.mors[m].src == c.mors[ch.back()].dst) {
          auto e = ch;
          e.push_back(m);
          next.push_back(std::move(e));
        }
    chains = std::move(next);
  }
  return out;
}

}  // namespace oracles
