#pragma once

#include <string>
#include <vector>

#include "hofib/ids.hpp"
#include "hofib/report.hpp"

namespace hofib::nerve {

// A simplicial set truncated at dimension N, as explicit cell lists and
// face/degeneracy tables.
//   face[n][i]  : cells[n] -> cells[n-1]   (1 <= n <= N, 0 <= i <= n)
//   degen[n][i] : cells[n] -> cells[n+1]   (0 <= n <  N, 0 <= i <= n)
struct TruncatedSimplicialSet {
  Id name;
  int N = 0;
  std::vector<std::vector<Id>> cells;
  std::vector<std::vector<std::vector<int>>> face;
  std::vector<std::vector<std::vector<int>>> degen;

  int size(int n) const { return static_cast<int>(cells[n].size()); }
  int d(int n, int i, int x) const { return face[n][i][x]; }
  int s(int n, int i, int x) const { return degen[n][i][x]; }
};

// Checks every simplicial identity expressible within the truncation.
ValidationReport validate_simplicial(const TruncatedSimplicialSet& S);

// Horn filling for (n,k)-horns, n <= N. Enumerates all compatible horn
// families and searches fillers exhaustively.
struct KanReport {
  long long horns = 0;
  long long filled = 0;
  std::vector<std::string> unfilled;  // capped sample of failing horns
  bool all_filled() const { return horns == filled; }
};
KanReport kan_check(const TruncatedSimplicialSet& S, int n, int k);

// Injective simplicial map check: `m` maps cells of A dimension-wise into S.
ValidationReport check_simplicial_injection(const TruncatedSimplicialSet& A,
                                            const TruncatedSimplicialSet& S,
                                            const std::vector<std::vector<int>>& m);

}  // namespace hofib::nerve
