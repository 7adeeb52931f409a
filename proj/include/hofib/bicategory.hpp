#pragma once

#include <memory>
#include <optional>
#include <unordered_map>
#include <vector>

#include "hofib/algebra.hpp"
#include "hofib/ids.hpp"
#include "hofib/report.hpp"

namespace hofib::bicat {

// A finite bicategory as full tables. 2-cells live only between parallel
// 1-cells; that is enforced at schema level.
//
// Conventions: vcomp(b, a) is "b after a"; hcomp(g, f) is "g of f" (f is the
// first factor). assoc(f3,f2,f1) : (f3.f2).f1 => f3.(f2.f1),
// lunit(f) : 1.f => f, runit(f) : f.1 => f.
struct FiniteBicategory {
  Id name;
  std::vector<Id> objects;
  struct C1 {
    Id id;
    int src, dst;  // object indices
  };
  struct C2 {
    Id id;
    int src, dst;  // parallel 1-cell indices
  };
  std::vector<C1> cells1;
  std::vector<C2> cells2;
  std::vector<int> id1;  // per object
  std::vector<int> id2;  // per 1-cell
  std::unordered_map<std::uint64_t, int> vcomp_;   // (b, a) -> b.a
  std::unordered_map<std::uint64_t, int> hcomp1_;  // (g, f) -> g o f
  std::unordered_map<std::uint64_t, int> hcomp2_;  // (b2, b1) -> b2 o b1
  std::unordered_map<std::uint64_t, int> assoc_;   // (f3, f2, f1)
  std::vector<int> lunit, runit;  // per 1-cell

  int n_obj() const { return static_cast<int>(objects.size()); }
  int n1() const { return static_cast<int>(cells1.size()); }
  int n2() const { return static_cast<int>(cells2.size()); }

  void set_vcomp(int b, int a, int r) { vcomp_[pack2(b, a)] = r; }
  void set_hcomp1(int g, int f, int r) { hcomp1_[pack2(g, f)] = r; }
  void set_hcomp2(int b2, int b1, int r) { hcomp2_[pack2(b2, b1)] = r; }
  void set_assoc(int f3, int f2, int f1, int r) { assoc_[pack3(f3, f2, f1)] = r; }

  int vcomp(int b, int a) const;
  int hcomp1(int g, int f) const;
  int hcomp2(int b2, int b1) const;
  int assoc(int f3, int f2, int f1) const;
  // Composes a vertical chain right-to-left: vchain({c,b,a}) = c.(b.a).
  int vchain(std::initializer_list<int> cells) const;

  // Vertical inverse, or -1; filled by finalize().
  int inv2(int b) const { return inv2_[b]; }
  bool v_composable(int b, int a) const { return cells2[a].dst == cells2[b].src; }
  bool h_composable1(int g, int f) const {
    return cells1[f].dst == cells1[g].src;
  }
  bool h_composable2(int b2, int b1) const {
    return h_composable1(cells2[b2].src, cells2[b1].src);
  }

  int object_index(const Id& id) const;
  int cell1_index(const Id& id) const;
  int cell2_index(const Id& id) const;
  std::optional<int> find_cell1(const Id& id) const;

  const std::vector<int>& hom1(int a, int b) const;  // 1-cells a -> b
  const std::vector<int>& cells2_between(int f, int g) const;  // 2-cells f => g
  const std::vector<int>& cells2_from(int f) const;            // 2-cells out of f

  // Builds the id->index maps and hom indexes. Must be called after the
  // tables are filled and before any lookup helper is used.
  void finalize();

  void check_schema(ValidationReport& rep) const;
  void check_axioms(ValidationReport& rep) const;

 private:
  std::unordered_map<Id, int> ix0_, ix1_, ix2_;
  std::vector<std::vector<int>> hom1_;                       // (a,b) packed
  std::unordered_map<std::uint64_t, std::vector<int>> between_;
  std::vector<std::vector<int>> from_;
  std::vector<int> inv2_;
  static const std::vector<int> empty_;
};

using BicatPtr = std::shared_ptr<const FiniteBicategory>;

enum class Dir { Lax, Oplax };

// A lax or oplax functor between finite bicategories, with its structure
// 2-cells. For Dir::Lax, comp_cell(f2,f1) : Ff2 o Ff1 => F(f2 o f1) and
// unit_cell(b) : 1_Fb => F(1_b); for Dir::Oplax both are reversed.
struct LaxMorphism {
  Id name;
  Dir dir = Dir::Lax;
  BicatPtr src, dst;
  std::vector<int> map0, map1, map2;
  std::unordered_map<std::uint64_t, int> comp_cell_;
  std::vector<int> unit_cell;

  int comp_cell(int f2, int f1) const;
  void set_comp_cell(int f2, int f1, int c) { comp_cell_[pack2(f2, f1)] = c; }

  bool normal() const;  // all unit cells are identities
  bool pseudo() const;  // all structure cells invertible
  bool strict() const;  // all structure cells identities

  // Reinterprets with the structure cells inverted; requires pseudo().
  LaxMorphism as_dir(Dir d) const;

  static LaxMorphism identity(BicatPtr b, Dir d = Dir::Lax);
};

// Transformation between two morphisms with the same direction. For
// kind Lax the naturality cell at f : b0 -> b1 is
//   natcell(f) : G f o comp0(b0) => comp0(b1) o F f,
// for kind Oplax it points the other way.
struct LaxTransformation {
  Id name;
  enum class Kind { Lax, Oplax } kind = Kind::Lax;
  const LaxMorphism* from = nullptr;
  const LaxMorphism* to = nullptr;
  std::vector<int> comp0;    // per source object: 1-cell of target bicategory
  std::vector<int> natcell;  // per source 1-cell: 2-cell of target bicategory
};

// Icon: all object components are identities; one 2-cell per source 1-cell,
// cell(f) : F f => G f.
struct IconMorphism {
  Id name;
  const LaxMorphism* from = nullptr;
  const LaxMorphism* to = nullptr;
  std::vector<int> cell;
};

// --- operations --------------------------------------------------------------

ValidationReport validate_bicategory(const FiniteBicategory& b);
ValidationReport validate_lax(const LaxMorphism& f);
ValidationReport validate_transformation(const LaxTransformation& t);
ValidationReport validate_icon(const IconMorphism& icon);

// A category as a bicategory with discrete hom-categories.
std::shared_ptr<FiniteBicategory> discrete_bicategory(const alg::FiniteCategory& c);

// The ordinal [p] as a discrete bicategory (cached per p).
BicatPtr simplex_bicategory(int p);

// The normal homomorphism [0] -> B picking b, with structure cell
// lunit(1_b) (inverted for the oplax orientation).
LaxMorphism object_homomorphism(int b, BicatPtr B, Dir dir = Dir::Lax);

// A functor between categories as a strict morphism between their discrete
// bicategories (which must be the given instances).
LaxMorphism discrete_functor(const alg::CatFunctor& f, BicatPtr src,
                             BicatPtr dst, Dir dir = Dir::Lax);

// Composite G after F; both must have the same direction and G.src == F.dst.
LaxMorphism compose_lax(const LaxMorphism& G, const LaxMorphism& F);

bool lax_equal(const LaxMorphism& a, const LaxMorphism& b);

}  // namespace hofib::bicat
