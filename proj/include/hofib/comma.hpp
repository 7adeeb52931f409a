#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "hofib/bicategory.hpp"

namespace hofib::comma {

using bicat::BicatPtr;
using bicat::Dir;
using bicat::FiniteBicategory;
using bicat::LaxMorphism;

// The homotopy-fibre product bicategory of a lax functor F and an oplax
// functor F' with common target. Cells carry their constituents:
//   0-cell (a, f, a'), 1-cell (u, beta, u'), 2-cell (alpha, alpha').
struct CommaBicategory {
  std::shared_ptr<FiniteBicategory> bi;
  LaxMorphism F, Fp;  // the inputs (Fp oplax)
  struct Obj {
    int a, f, ap;
  };
  struct One {
    int u, beta, up;
  };
  struct Two {
    int alpha, alphap;
  };
  std::vector<Obj> objs;
  std::vector<One> ones;
  std::vector<Two> twos;

  int find_obj(int a, int f, int ap) const;
  int find_one(int obj_src, int obj_dst, int u, int beta, int up) const;
};

// Projection 2-functors P : F|F' -> A and P' : F|F' -> A'. Both strict;
// stored in the direction they are used by the pullback squares.
struct CommaProjections {
  LaxMorphism P;   // lax
  LaxMorphism Pp;  // oplax
};

struct CommaResult {
  CommaBicategory c;
  CommaProjections proj;
};

// Requires F.dir == Lax, Fp.dir == Oplax and F.dst == Fp.dst.
CommaResult comma(const LaxMorphism& F, const LaxMorphism& Fp);

// Homotopy fibres F|b and b|F'.
CommaResult fibre(const LaxMorphism& F, int b);
CommaResult fibre(int b, const LaxMorphism& Fp);

// The 2-functors p_* : F|b0 -> F|b1 and p^* : b1|F' -> b0|F' induced by a
// 1-cell p : b0 -> b1 of the common target.
struct Translation {
  CommaResult src, dst;
  LaxMorphism functor;  // strict 2-functor between the comma bicategories
};
Translation translate_lower(const LaxMorphism& F, int p);   // p_*
Translation translate_upper(int p, const LaxMorphism& Fp);  // p^*

// Composite comparison for p_* ; q_*: strict equality flag plus the
// conjugation equation through the associativity constraints.
struct TranslationCompare {
  bool strictly_equal = true;
  bool assoc_conjugate = true;
  std::vector<std::string> mismatches;
};
TranslationCompare compare_translate_composite(const LaxMorphism& F, int p, int q);

// The two strictly commuting squares through B|F' and F|B, their mediating
// morphism, and the canonical transformations out of the projections.
struct BarLift {
  CommaResult ff;        // F | F'
  CommaResult bf;        // B | F'
  CommaResult fb;        // F | B
  LaxMorphism bar_f;     // lax  F|F' -> B|F'
  LaxMorphism bar_fp;    // oplax F|F' -> F|B
};
BarLift bar_lift(const LaxMorphism& F, const LaxMorphism& Fp);

// Mediating morphism for the first pullback square: given lax L : D -> A and
// M : D -> B|F' with F.L = P.M strictly, produces N : D -> F|F' with
// P.N = L and bar_f.N = M. Throws std::invalid_argument when F.L != P.M.
LaxMorphism mediating(const BarLift& squares, const LaxMorphism& L,
                      const LaxMorphism& M);

// Enumerates all lax morphisms N : [p]-shaped source -> F|F' with the given
// projections; used for uniqueness checks on small instances.
int count_mediating_candidates(const BarLift& squares, const LaxMorphism& L,
                               const LaxMorphism& M);

// The normal homomorphisms J : Fa|F' -> F|F' and J' : F|F'a' -> F|F'.
struct Inclusion {
  CommaResult fibre;  // the source comma bicategory
  LaxMorphism J;
};
Inclusion inclusion_J(int a, const CommaResult& ff);
Inclusion inclusion_Jp(int ap, const CommaResult& ff);

// F|2 G = F | P'(G|B) for two lax functors with common target.
struct Comma2Result {
  CommaResult gb;     // G | B
  CommaResult outer;  // F | P'
  LaxMorphism P;      // projection to source of F
  LaxMorphism Q;      // projection to source of G
};
Comma2Result comma2(const LaxMorphism& F, const LaxMorphism& G);

// Verifies the swap isomorphism comma2(F,G) ~ comma2(G,F); returns an empty
// report when the explicit strict bijective 2-functor exists.
ValidationReport comma2_swap_check(const LaxMorphism& F, const LaxMorphism& G);

// Sufficient-condition certificate for the lower translation family: true
// means every p_* is a biequivalence (checked exhaustively), which certifies
// the lax functor's translation property; false is inconclusive.
struct PropertyBResult {
  bool holds_sufficient = true;
  std::vector<std::string> witnesses;
};
PropertyBResult property_B_witness(const LaxMorphism& F);

// The canonical transformations omega : P => F'P' on B|F' and
// omega' : FP => P' on F|B (validated as transformations; the first one
// lives between oplax casts).
struct OmegaData {
  std::shared_ptr<LaxMorphism> from, to;
  bicat::LaxTransformation omega;
};
OmegaData omega_upper(const CommaResult& bf, const LaxMorphism& Fp);
OmegaData omega_lower(const CommaResult& fb, const LaxMorphism& F);

// Explicit isomorphism b|b' ~ B(b,b'): checks that the assignment
// beta |-> runit . beta . lunit^{-1} is a bijective functor from the
// (2-discrete) comma bicategory to the hom-category.
ValidationReport check_hom_isomorphism(BicatPtr B, int b, int bp);

}  // namespace hofib::comma
