#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "hofib/algebra.hpp"
#include "hofib/bicategory.hpp"
#include "hofib/sset.hpp"

namespace hofib::xmod {

// A crossed module of groupoids: base groupoid P, P-group G, and an
// equivariant boundary into the isotropy groups satisfying the Peiffer
// identity.
struct CrossedModule {
  Id name;
  alg::PGroup g;                            // carries the base groupoid
  std::vector<std::vector<int>> boundary;   // per object: fiber elem -> endo mor

  const alg::FiniteGroupoid& base() const { return *g.base; }
  int dd(int a, int gelem) const { return boundary[a][gelem]; }

  static CrossedModule trivial_fibers(std::shared_ptr<const alg::FiniteGroupoid> p,
                                      const Id& name);
  // (A, 1, 0): an abelian group over the one-object trivial groupoid.
  static CrossedModule abelian(const alg::FinGroup& a);
  // (G, G, id) with the conjugation action.
  static CrossedModule conjugation(const alg::FinGroup& g);
};

struct XmodMorphism {
  Id name;
  std::shared_ptr<const CrossedModule> src, dst;
  alg::GroupoidFunctor F;
  std::vector<alg::GroupHom> phi;  // per source object

  static XmodMorphism identity(std::shared_ptr<const CrossedModule> x);
};

ValidationReport validate_xmod(const CrossedModule& x);
ValidationReport validate_xmod_morphism(const XmodMorphism& m);

// The strict 2-groupoid invariants: identity constraints, strictly
// invertible 1-cells, invertible 2-cells.
ValidationReport validate_two_groupoid(const bicat::FiniteBicategory& b);

// beta : crossed modules -> strict 2-groupoids. 2-cells q => pbar are the
// fiber elements g with pbar . dd(g) = q.
struct BetaResult {
  std::shared_ptr<bicat::FiniteBicategory> bi;
  std::vector<int> two_elem;  // per 2-cell: fiber element
  int find_two(int src1, int dst1, int gelem) const;
};
BetaResult beta(const CrossedModule& x);
bicat::LaxMorphism beta_on_morphism(const XmodMorphism& m, const BetaResult& bsrc,
                                    const BetaResult& bdst);

// Inverse construction on strict 2-groupoids; throws std::invalid_argument
// when the input fails the two-groupoid invariants.
CrossedModule beta_inverse(const bicat::FiniteBicategory& k, const Id& name);

// Round-trip comparisons, as explicit isomorphisms that are then verified.
ValidationReport check_beta_roundtrip(const CrossedModule& x);
ValidationReport check_beta_inverse_roundtrip(const bicat::FiniteBicategory& k);

// Homotopy pullback crossed module with its projections.
struct HomotopyPullback {
  std::shared_ptr<CrossedModule> x;
  XmodMorphism proj1, proj2;
  // provenance
  std::vector<std::array<int, 3>> obj;  // (a, q, a')
  std::vector<std::array<int, 3>> mor;  // (p, h, p')
  int find_obj(int a, int q, int ap) const;
  int find_mor(int src, int p, int h, int pp) const;
};
HomotopyPullback homotopy_pullback_xmod(const XmodMorphism& m1,
                                        const XmodMorphism& m2);

// Strict pullback with the canonical comparison into the homotopy pullback.
struct StrictPullback {
  std::shared_ptr<CrossedModule> x;
  XmodMorphism proj1, proj2;
  std::vector<std::pair<int, int>> obj, mor;      // component pairs
  std::vector<std::vector<std::pair<int, int>>> fib;  // per object: element pairs
};
StrictPullback pullback_xmod(const XmodMorphism& m1, const XmodMorphism& m2);
XmodMorphism canonical_comparison(const StrictPullback& pb,
                                  const HomotopyPullback& hpb,
                                  const XmodMorphism& m1, const XmodMorphism& m2);

// Both fibration conditions, checked exhaustively.
bool fibration_xmod(const XmodMorphism& m);

// pi0 components, pi1 = coker dd, pi2 = ker dd per object.
struct HomotopyProfile {
  std::vector<int> pi0;            // object -> component
  std::vector<int> pi0_reps;       // component -> representative object
  std::vector<alg::FinGroup> pi1;  // per object
  std::vector<std::vector<int>> aut_mors;   // per object: local index -> morphism
  std::vector<std::vector<int>> pi1_class;  // per object: local aut index -> pi1 elem
  std::vector<alg::FinGroup> pi2;           // per object
  std::vector<std::vector<int>> pi2_elems;  // per object: pi2 index -> fiber elem

  int pi1_of_mor(const alg::FiniteGroupoid& base, int a, int mor) const;
  std::optional<int> pi2_of_elem(int a, int gelem) const;
};
HomotopyProfile pi(const CrossedModule& x);

struct ProfileMorphism {
  std::vector<int> pi0_map;              // src component -> dst component
  std::vector<alg::GroupHom> pi1_map;    // per src object
  std::vector<alg::GroupHom> pi2_map;    // per src object
  bool well_defined = true;
  std::vector<std::string> issues;
};
ProfileMorphism induced_pi(const XmodMorphism& m, const HomotopyProfile& ps,
                           const HomotopyProfile& pd);

struct WeakEquivalenceResult {
  bool is_weak_equivalence = true;
  std::vector<std::string> witnesses;
};
WeakEquivalenceResult weak_equivalence(const XmodMorphism& m);

// Nerve of a crossed module: simplices are systems (g_{ijk}, p_{ij}, a_i)
// with the boundary condition and the cocycle identity.
struct XmodNerve {
  nerve::TruncatedSimplicialSet sset;
  struct Cell {
    std::vector<int> verts;  // a_i
    std::vector<int> p;      // p_{ij}, i<j, lex order
    std::vector<int> g;      // g_{ijk}, i<j<k, lex order
  };
  std::vector<std::vector<Cell>> cells;
};
XmodNerve xmod_nerve(const CrossedModule& x, int N,
                     std::size_t max_cells = 200000);

// Dimensionwise comparison of the unitary geometric nerve of beta(x) with
// the crossed-module nerve; emits and verifies the explicit bijections.
ValidationReport compare_nerves(const CrossedModule& x, int N,
                                std::size_t max_cells = 200000);

// Exactness of the long sequence at every joint, over the basepoint
// (a, 1, a') which requires F a = F' a'.
struct MvReport {
  bool exact = true;
  std::vector<std::string> failures;
  std::vector<std::string> joints;  // human-readable per-joint summary
};
MvReport mv_check(const XmodMorphism& m1, const XmodMorphism& m2, int a, int ap);

// Loop groupoid at an object, with its comparison isomorphisms.
struct EndoGroupoid {
  alg::FiniteGroupoid groupoid;
  std::vector<std::pair<int, int>> arrows;  // (dst object q, fiber element g)
  ValidationReport report;                  // pi0 ~ pi1 and Aut(1) ~ pi2 checks
};
EndoGroupoid endo_groupoid(const CrossedModule& x, int a);

}  // namespace hofib::xmod
