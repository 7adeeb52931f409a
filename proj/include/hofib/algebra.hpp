#pragma once

#include <memory>
#include <optional>
#include <unordered_map>
#include <vector>

#include "hofib/group.hpp"
#include "hofib/ids.hpp"
#include "hofib/report.hpp"

namespace hofib::alg {

struct FiniteGraph {
  Id name;
  std::vector<Id> vertices;
  struct Edge {
    Id id;
    int src, dst;
  };
  std::vector<Edge> edges;

  bool acyclic() const;
  static FiniteGraph linear(int p);  // 0 -> 1 -> ... -> p
};

struct FiniteCategory {
  Id name;
  std::vector<Id> objects;
  struct Mor {
    Id id;
    int src, dst;
  };
  std::vector<Mor> mors;
  std::vector<int> identity;                 // per object
  std::unordered_map<std::uint64_t, int> comp_;  // (g,f) -> g after f

  int n_obj() const { return static_cast<int>(objects.size()); }
  int n_mor() const { return static_cast<int>(mors.size()); }

  void set_comp(int g, int f, int gf) { comp_[pack2(g, f)] = gf; }
  bool composable(int g, int f) const { return mors[f].dst == mors[g].src; }
  int compose(int g, int f) const;          // throws if missing
  std::optional<int> try_compose(int g, int f) const;

  int object_index(const Id& id) const;
  int mor_index(const Id& id) const;

  // Morphisms a -> b, in index order.
  std::vector<int> hom(int a, int b) const;
  std::vector<int> mors_from(int a) const;

  void check_schema(ValidationReport& rep) const;
  void check_axioms(ValidationReport& rep) const;

  static FiniteCategory simplex(int p);  // the ordinal [p] = {0 < ... < p}
};

struct FiniteGroupoid : FiniteCategory {
  std::vector<int> inverse;  // per morphism

  void check_axioms_groupoid(ValidationReport& rep) const;

  // Aut(a) as a group; element ids are the morphism ids.
  FinGroup aut_group(int a) const;
  // Connected components; comp[i] = component index of object i, components
  // numbered by their smallest-id representative in sorted-id order.
  std::vector<int> components(std::vector<int>* reps = nullptr) const;

  static FiniteGroupoid from_group(const FinGroup& g, const Id& obj = "*");
  static FiniteGroupoid indiscrete(int n_objects);  // exactly one arrow a->b
  static FiniteGroupoid discrete(const std::vector<Id>& objs);
};

// Functor between categories (or groupoids); source/target held by value so
// a functor is self-contained.
struct CatFunctor {
  std::shared_ptr<const FiniteCategory> src, dst;
  std::vector<int> obj_map;
  std::vector<int> mor_map;

  void check(ValidationReport& rep) const;
  static CatFunctor identity(std::shared_ptr<const FiniteCategory> c);
};

struct GroupoidFunctor {
  std::shared_ptr<const FiniteGroupoid> src, dst;
  std::vector<int> obj_map;
  std::vector<int> mor_map;

  void check(ValidationReport& rep) const;
  static GroupoidFunctor identity(std::shared_ptr<const FiniteGroupoid> g);
  static GroupoidFunctor from_group_hom(const FinGroup& a, const FinGroup& b,
                                        const GroupHom& h);
};

// A (left) P-group: a functor from the groupoid into finite groups.
struct PGroup {
  Id name;
  std::shared_ptr<const FiniteGroupoid> base;
  std::vector<FinGroup> fiber;                  // per object
  std::vector<std::vector<int>> action;         // per morphism p: fiber(src)->fiber(dst)

  int act(int p, int g) const { return action[p][g]; }
  void check(ValidationReport& rep) const;

  static PGroup constant(std::shared_ptr<const FiniteGroupoid> base,
                         const FinGroup& g);
  static PGroup trivial(std::shared_ptr<const FiniteGroupoid> base);
};

// --- operations ------------------------------------------------------------

ValidationReport validate_category(const FiniteCategory& c);
ValidationReport validate_groupoid(const FiniteGroupoid& g);
ValidationReport validate_pgroup(const PGroup& pg);

// Free category on an acyclic graph: morphisms are directed paths, ids are
// tuples of edge ids, identities are empty paths. When `paths` is non-null
// it receives the edge list of every morphism, in morphism order.
FiniteCategory free_category(const FiniteGraph& g,
                             std::vector<std::vector<int>>* paths = nullptr);

// Every morphism q : Fa -> b lifts through F to a morphism out of a.
bool groupoid_fibration(const GroupoidFunctor& f);

// Strict pullback groupoid of F : P -> Q <- P' : F'.
struct GroupoidPullback {
  std::shared_ptr<FiniteGroupoid> groupoid;
  GroupoidFunctor proj1, proj2;
  // Underlying pairs, per object and morphism of the pullback.
  std::vector<std::pair<int, int>> obj_pair, mor_pair;
};
GroupoidPullback pullback_groupoid(const GroupoidFunctor& f,
                                   const GroupoidFunctor& g);

}  // namespace hofib::alg
