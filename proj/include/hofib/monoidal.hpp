#pragma once

#include <memory>
#include <optional>
#include <unordered_map>
#include <vector>

#include "hofib/algebra.hpp"
#include "hofib/bicategory.hpp"

namespace hofib::monoidal {

// A monoidal category as full tables over a finite underlying category.
// assoc(m3,m2,m1) : (m3 x m2) x m1 -> m3 x (m2 x m1); lunit(m) : I x m -> m;
// runit(m) : m x I -> m.
struct MonoidalCategory {
  Id name;
  alg::FiniteCategory cat;
  std::vector<std::vector<int>> tensor_obj;
  std::unordered_map<std::uint64_t, int> tensor_mor_;  // (u, v) -> u x v
  int unit = 0;
  std::unordered_map<std::uint64_t, int> assoc_;  // (m3,m2,m1) -> morphism
  std::vector<int> lunit, runit;                  // per object

  int tensor(int m, int n) const { return tensor_obj[m][n]; }
  int tensor_mor(int u, int v) const;
  void set_tensor_mor(int u, int v, int r) { tensor_mor_[pack2(u, v)] = r; }
  int assoc(int m3, int m2, int m1) const { return assoc_.at(pack3(m3, m2, m1)); }

  // Group G as a discrete monoidal category.
  static MonoidalCategory from_group(const alg::FinGroup& g);
  // Objects Z/2, every object with automorphism group Z/2, and the
  // associativity constraint twisted by the 3-cocycle c(x,y,z) = xyz.
  static MonoidalCategory cocycle_toy();
  // Same underlying data with the unit constraints l = r set to the
  // nontrivial automorphisms; the triangle still holds, so this exercises
  // every l/r path in downstream constructions.
  static MonoidalCategory cocycle_toy_skewed();
  // Finite commutative monoid as a discrete monoidal category
  // (truncated addition: a+b saturates at n-1).
  static MonoidalCategory truncated_addition(int n);
};

// A (strong) monoidal functor, kept as its delooped homomorphism plus the
// delooped source/target so the monoidal vocabulary stays available.
struct MonoidalFunctor {
  Id name;
  std::shared_ptr<const MonoidalCategory> src, dst;
  bicat::LaxMorphism sigma;  // homomorphism between the deloopings
};

// One-object bicategory with hom-category M and horizontal composition the
// tensor.
std::shared_ptr<bicat::FiniteBicategory> delooping(const MonoidalCategory& m);

// Validation goes through the delooping: the monoidal axioms are exactly
// the bicategory axioms of Sigma M.
ValidationReport validate_monoidal(const MonoidalCategory& m);

// Builds the monoidal functor determined by object/morphism maps and
// structure isos comp(n2,n1) : Fn2 x Fn1 -> F(n2 x n1), unit_iso : I -> FI.
MonoidalFunctor monoidal_functor(std::shared_ptr<const MonoidalCategory> src,
                                 bicat::BicatPtr sigma_src,
                                 std::shared_ptr<const MonoidalCategory> dst,
                                 bicat::BicatPtr sigma_dst, const Id& name,
                                 const std::vector<int>& obj_map,
                                 const std::vector<int>& mor_map,
                                 const std::unordered_map<std::uint64_t, int>& comp,
                                 int unit_iso);

MonoidalFunctor monoidal_identity(std::shared_ptr<const MonoidalCategory> m,
                                  bicat::BicatPtr sigma);

// The distinguished monoidal functor I : [0] -> M picking the unit object,
// with structure iso lunit(I) = runit(I).
bicat::LaxMorphism unit_functor(const MonoidalCategory& m, bicat::BicatPtr sigma,
                                bicat::Dir dir);

// The terminal monoidal category [0]; source of the unit functor.
MonoidalCategory terminal_monoidal();

// The distinguished monoidal functor I : [0] -> M as a MonoidalFunctor.
MonoidalFunctor unit_monoidal_functor(std::shared_ptr<const MonoidalCategory> m,
                                      bicat::BicatPtr sigma);

// The homotopy-fibre product bicategory of two monoidal functors, built
// directly from the tensor formulas. 0-cells are the objects of the common
// target; 1-cells (n, f, n') with f : F'n' x m0 -> m1 x F n.
struct MonoidalFibre {
  std::shared_ptr<bicat::FiniteBicategory> bi;
  struct One {
    int n, f, np;
  };
  std::vector<int> objs;        // 0-cell -> object of M
  std::vector<One> ones;
  std::vector<std::pair<int, int>> twos;  // (u, u')
  int find_obj(int m) const;
  int find_one(int src, int dst, int n, int f, int np) const;
};
MonoidalFibre monoidal_fibre(const MonoidalFunctor& F, const MonoidalFunctor& Fp);

// Cell-for-cell identification with comma(Sigma F, Sigma F') under the
// canonical encoding; reports every table mismatch.
ValidationReport check_fibre_identification(const MonoidalFunctor& F,
                                            const MonoidalFunctor& Fp);

// The 2-endofunctor m x - of F|I (side = left) or - x m of I|F (right).
enum class Side { Left, Right };
bicat::LaxMorphism tensor_translation(const MonoidalCategory& m, int mobj,
                                      Side side, const MonoidalFunctor& F,
                                      const MonoidalFibre& fib);

struct RegularityResult {
  bool regular = true;
  bool categorical_group = true;
  std::vector<std::string> witnesses;  // failing instances
};

// regular: every m x - and - x m is an equivalence of the underlying
// category (checked exhaustively). categorical_group additionally asks all
// objects to be invertible up to iso and all morphisms invertible. A true
// answer certifies the corresponding sufficient condition; false is
// inconclusive for any stronger property.
RegularityResult regularity_check(const MonoidalCategory& m);

}  // namespace hofib::monoidal
