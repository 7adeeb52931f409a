#pragma once

#include <vector>

#include "hofib/ids.hpp"
#include "hofib/report.hpp"

namespace hofib::alg {

// A finite group as a full multiplication table.
struct FinGroup {
  Id name;
  std::vector<Id> elems;
  std::vector<std::vector<int>> mul;  // mul[a][b] = a * b
  int unit = 0;
  std::vector<int> inv;

  int size() const { return static_cast<int>(elems.size()); }
  int op(int a, int b) const { return mul[a][b]; }
  int index_of(const Id& e) const;

  bool is_abelian() const;
  void check(ValidationReport& rep) const;

  static FinGroup trivial(const Id& name = "1");
  static FinGroup cyclic(int n);
  // Symmetric group on n letters; elements are permutation words like "120".
  static FinGroup symmetric(int n);
  static FinGroup direct_product(const FinGroup& a, const FinGroup& b);
};

// Group homomorphism given element-wise; domain/codomain sizes are implied.
using GroupHom = std::vector<int>;

bool is_homomorphism(const FinGroup& src, const FinGroup& dst, const GroupHom& h);

// Subgroup on the given ambient element indices (must be closed); keeps the
// ambient element ids.
FinGroup subgroup(const FinGroup& g, std::vector<int> members, const Id& name);

// Kernel of a homomorphism as a subgroup of `src`.
FinGroup kernel(const FinGroup& src, const FinGroup& dst, const GroupHom& h);

// Quotient of `g` by a (checked) normal subgroup. Coset representatives are
// chosen by sorted-id order; `rep` maps each ambient element to its coset
// index in the quotient.
struct Quotient {
  FinGroup group;
  std::vector<int> rep;  // ambient element -> quotient element
};
Quotient quotient_by(const FinGroup& g, const std::vector<int>& normal_members,
                     const Id& name);

// True when h : src -> dst is a group isomorphism.
bool is_isomorphism(const FinGroup& src, const FinGroup& dst, const GroupHom& h);

}  // namespace hofib::alg
