#pragma once

#include <memory>
#include <set>
#include <string>
#include <vector>

#include "hofib/algebra.hpp"
#include "hofib/bicategory.hpp"
#include "hofib/monoidal.hpp"
#include "hofib/xmod.hpp"

namespace hofib::wb {

// Deterministic corpus of small instances. The seed is reflected in the
// structure names (and so in every downstream report); the mathematical
// content is fixed. Bounds keep every structure small enough for the
// exhaustive suites.
struct CorpusSpec {
  int seed = 0;
  int max_objects = 4;
  int max_cells_per_hom = 12;
  std::set<std::string> generators;  // empty = all kinds
  std::size_t max_cells = 200000;

  bool wants(const std::string& kind) const {
    return generators.empty() || generators.count(kind) > 0;
  }
};

struct Corpus {
  struct NamedBicat {
    Id name;
    bicat::BicatPtr b;
  };
  struct CommaPair {
    Id name;
    bicat::LaxMorphism F;   // lax
    bicat::LaxMorphism Fp;  // oplax
  };
  struct LaxPair {
    Id name;
    bicat::LaxMorphism G, F;  // composable: G after F
  };
  struct XmodEntry {
    Id name;
    std::shared_ptr<const xmod::CrossedModule> x;
  };
  struct XmodPair {
    Id name;
    xmod::XmodMorphism m1, m2;
    int bp_a = 0, bp_ap = 0;  // basepoint objects with F a = F' a'
    bool has_fibration_leg = false;
  };
  struct MonoidalEntry {
    Id name;
    std::shared_ptr<const monoidal::MonoidalCategory> m;
    bicat::BicatPtr sigma;
  };
  struct MonoidalPair {
    Id name;
    monoidal::MonoidalFunctor F, Fp;
  };

  std::vector<std::pair<Id, alg::FinGroup>> groups;
  std::vector<std::pair<Id, std::shared_ptr<alg::FiniteGroupoid>>> groupoids;
  std::vector<alg::FiniteGraph> graphs;
  std::vector<NamedBicat> bicategories;
  std::vector<CommaPair> comma_pairs;
  std::vector<LaxPair> lax_pairs;
  std::vector<XmodEntry> xmods;
  std::vector<XmodPair> xmod_pairs;
  std::vector<MonoidalEntry> monoidals;
  std::vector<MonoidalPair> monoidal_pairs;
};

Corpus generate_corpus(const CorpusSpec& spec);

}  // namespace hofib::wb
