#pragma once

#include <optional>
#include <vector>

#include "hofib/bicategory.hpp"

namespace hofib::nerve {

// A monotone map [q] -> [p].
struct Mono {
  int q = 0, p = 0;            // domain [q], codomain [p]
  std::vector<int> v;          // size q+1, weakly increasing into 0..p

  Id key() const;
  static Mono identity(int p);
  static Mono coface(int p, int i);        // [p-1] -> [p] skipping i
  static Mono codegeneracy(int p, int i);  // [p+1] -> [p] repeating i
  // Composite a . b : [n] -> [p] for b : [n] -> [q], a : [q] -> [p].
  static Mono compose(const Mono& a, const Mono& b);
  bool operator<(const Mono& o) const;
  bool operator==(const Mono& o) const { return q == o.q && p == o.p && v == o.v; }
};

std::vector<Mono> all_monotone(int q, int p);

// A lax or oplax functor [p] -> B in dense form: one object per vertex, one
// 1-cell per pair i <= j, one structure 2-cell per triple i <= j <= k and
// one unit 2-cell per vertex.
struct SimplexFunctor {
  bicat::Dir dir = bicat::Dir::Lax;
  int p = 0;
  bicat::BicatPtr B;
  std::vector<int> vertex;  // p+1
  std::vector<int> edge;    // (p+1)^2, valid at i <= j
  std::vector<int> comp;    // (p+1)^3, valid at i <= j <= k
  std::vector<int> unit;    // p+1

  int e(int i, int j) const { return edge[i * (p + 1) + j]; }
  int& e(int i, int j) { return edge[i * (p + 1) + j]; }
  int c(int i, int j, int k) const { return comp[(i * (p + 1) + j) * (p + 1) + k]; }
  int& c(int i, int j, int k) { return comp[(i * (p + 1) + j) * (p + 1) + k]; }

  Id key() const;
  bool normal() const;

  // Precomposition with a monotone map (reindexing).
  SimplexFunctor restrict_along(const Mono& a) const;
  // The same lax functor as a LaxMorphism out of simplex_bicategory(p).
  bicat::LaxMorphism as_lax() const;
  static SimplexFunctor from_lax(const bicat::LaxMorphism& m);
};

// Enumerates all (normal) lax/oplax functors [p] -> B, deterministically
// ordered by key. Throws ResourceLimitError past max_candidates.
std::vector<SimplexFunctor> enumerate_simplices(bicat::BicatPtr B, int p,
                                                bicat::Dir dir, bool normal,
                                                std::size_t max_candidates);

// F . x for a lax/oplax morphism F out of x's target.
SimplexFunctor compose_simplex(const bicat::LaxMorphism& F,
                               const SimplexFunctor& x);

// Iterated right-nested horizontal composite of the 1-cells u[0],...,u[m-1]
// read in diagram order (u[0] first); empty lists need the base object.
int or_composite1(const bicat::FiniteBicategory& B, const std::vector<int>& u,
                  int base_obj);
int or_composite2(const bicat::FiniteBicategory& B, const std::vector<int>& w,
                  int base_obj);

// The unitary pseudo-functor [p] -> B generated by a chain of 1-cells
// u[0] : x0 -> x1, ..., u[p-1] : x_{p-1} -> x_p.
SimplexFunctor generated_by_chain(bicat::BicatPtr B, const std::vector<int>& chain,
                                  int base_obj_if_empty);

// Counit component: the 2-cell from the freely regenerated composite to F's
// own value at the morphism i <= j of [p].
int nu_cell(const SimplexFunctor& F, int i, int j);

}  // namespace hofib::nerve
