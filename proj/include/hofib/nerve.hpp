#pragma once

#include <map>
#include <memory>
#include <vector>

#include "hofib/algebra.hpp"
#include "hofib/bicategory.hpp"
#include "hofib/simplex.hpp"
#include "hofib/sset.hpp"

namespace hofib::nerve {

inline constexpr std::size_t kDefaultMaxCells = 200000;

enum class Variant { Lax, NormalLax, Oplax, NormalOplax };

// Geometric nerve: p-simplices are the (normal) lax/oplax functors [p] -> B;
// faces and degeneracies act by precomposition with cofaces/codegeneracies.
struct GeometricNerve {
  Variant variant;
  bicat::BicatPtr B;
  TruncatedSimplicialSet sset;
  std::vector<std::vector<SimplexFunctor>> simplices;  // per dimension

  int index_of(int dim, const Id& key) const;
};
GeometricNerve geometric_nerve(bicat::BicatPtr B, Variant v, int N,
                               std::size_t max_cells = kDefaultMaxCells);

// The level categories of the pseudo-simplicial nerve: objects are tuples of
// 1-cells along an object chain (diagram order), morphisms tuples of 2-cells.
struct NerveLevel {
  alg::FiniteCategory cat;
  std::vector<std::vector<int>> obj_chain;   // object chain per object (p+1)
  std::vector<std::vector<int>> obj_tuple;   // 1-cell tuple per object (p)
  std::vector<std::vector<int>> mor_tuple;   // 2-cell tuple per morphism (p)
  std::vector<int> mor_src, mor_dst;

  int find_obj(const std::vector<int>& tuple, const std::vector<int>& chain) const;
};

struct LevelFunctor {
  std::vector<int> obj_map, mor_map;
};

// Pseudo-simplicial nerve truncated at N: level categories, the functor for
// every monotone map between levels, and the constraint isos for every
// composable pair.
struct PseudoSimplicialNerve {
  int N = 0;
  bicat::BicatPtr B;
  std::vector<NerveLevel> level;
  std::map<Mono, LevelFunctor> action;
  // chi[a,b] : per object of level a.p, a morphism of level b.q... stored as
  // component list indexed by the objects of the outer level.
  std::map<std::pair<Mono, Mono>, std::vector<int>> constraint;

  const LevelFunctor& act(const Mono& a) const { return action.at(a); }
};
PseudoSimplicialNerve grothendieck_nerve(bicat::BicatPtr B, int N,
                                         std::size_t max_cells = kDefaultMaxCells);

// Exhaustive checks on the pseudo-simplicial nerve: functoriality of each
// action on its level, unit constraints, invertibility of every constraint
// component, naturality, and the cocycle square for all composable triples.
ValidationReport check_grothendieck_nerve(const PseudoSimplicialNerve& N);

// The lax simplicial functor induced on pseudo-simplicial nerves by a lax
// functor F : B -> B'. Components per level plus a constraint component for
// every monotone map.
struct NerveOfLax {
  int N = 0;
  const PseudoSimplicialNerve* src = nullptr;
  const PseudoSimplicialNerve* dst = nullptr;
  std::vector<LevelFunctor> component;                 // per level p
  std::map<Mono, std::vector<int>> constraint;         // per mono, per object
};
NerveOfLax nerve_of_lax(const bicat::LaxMorphism& F, const PseudoSimplicialNerve& src,
                        const PseudoSimplicialNerve& dst);
ValidationReport check_nerve_of_lax(const NerveOfLax& nf);
// Strict functoriality: nerve(F') . nerve(F) = nerve(F'F), nerve(1) = 1.
ValidationReport check_nerve_functoriality(const bicat::LaxMorphism& F,
                                           const bicat::LaxMorphism& G,
                                           const PseudoSimplicialNerve& nb,
                                           const PseudoSimplicialNerve& nc,
                                           const PseudoSimplicialNerve& nd);

// Adjunction checks for a specific bicategory: J(f) validates as a unitary
// pseudo-functor for every graph map f; RJ = 1; nu at J-images is the
// identity; the restriction of nu to basic edges is the identity.
ValidationReport check_graph_adjunction(const alg::FiniteGraph& g,
                                        bicat::BicatPtr B,
                                        std::size_t max_cells = kDefaultMaxCells);

// Hom-set bijection of the level adjunction on [p]: icons J(x) => F against
// graph-map morphisms x => R(F), enumerated and matched both ways.
ValidationReport check_level_adjunction(bicat::BicatPtr B, int p,
                                        std::size_t max_cells = kDefaultMaxCells);

// The category of lax functors [p] -> B and icons.
struct IconCategory {
  alg::FiniteCategory cat;
  std::vector<SimplexFunctor> objs;
  std::vector<std::vector<int>> icon_cells;  // per morphism: per [p]-morphism slot
};
IconCategory icon_category(bicat::BicatPtr B, int p,
                           std::size_t max_cells = kDefaultMaxCells);

// The projection from the icon category levels to the nerve levels, with its
// constraint cells; checked against the nerve constraints.
ValidationReport check_nerve_projection(bicat::BicatPtr B, int N,
                                        std::size_t max_cells = kDefaultMaxCells);

// Ordinary nerve of a category as a truncated simplicial set (used as the
// comparison target for discrete bicategories and crossed-module nerves).
TruncatedSimplicialSet ordinary_nerve_sset(const alg::FiniteCategory& c, int N);

}  // namespace hofib::nerve
