#include "hofib/sset.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace hofib::nerve {

ValidationReport validate_simplicial(const TruncatedSimplicialSet& S) {
  ValidationReport rep;
  rep.subject = S.name;
  if (static_cast<int>(S.cells.size()) != S.N + 1) {
    rep.schema("cells-shape", S.name);
    return rep;
  }
  for (int n = 1; n <= S.N; ++n) {
    if (static_cast<int>(S.face[n].size()) != n + 1) {
      rep.schema("face-table-shape", std::to_string(n));
      return rep;
    }
    for (int i = 0; i <= n; ++i)
      for (int x = 0; x < S.size(n); ++x) {
        int y = S.face[n][i][x];
        if (y < 0 || y >= S.size(n - 1)) {
          rep.schema("face-range", S.cells[n][x]);
          return rep;
        }
      }
  }
  for (int n = 0; n < S.N; ++n)
    for (int i = 0; i <= n; ++i)
      for (int x = 0; x < S.size(n); ++x) {
        int y = S.degen[n][i][x];
        if (y < 0 || y >= S.size(n + 1)) {
          rep.schema("degeneracy-range", S.cells[n][x]);
          return rep;
        }
      }

  // d_i d_j = d_{j-1} d_i for i < j
  for (int n = 2; n <= S.N; ++n)
    for (int j = 1; j <= n; ++j)
      for (int i = 0; i < j; ++i)
        for (int x = 0; x < S.size(n); ++x) {
          int lhs = S.d(n - 1, i, S.d(n, j, x));
          int rhs = S.d(n - 1, j - 1, S.d(n, i, x));
          if (lhs != rhs)
            rep.fail("face-face", tup({std::to_string(n), std::to_string(i),
                                       std::to_string(j), S.cells[n][x]}),
                     S.cells[n - 2][lhs], S.cells[n - 2][rhs]);
        }
  // s_i s_j = s_{j+1} s_i for i <= j
  for (int n = 0; n + 2 <= S.N; ++n)
    for (int j = 0; j <= n; ++j)
      for (int i = 0; i <= j; ++i)
        for (int x = 0; x < S.size(n); ++x) {
          int lhs = S.s(n + 1, j + 1, S.s(n, i, x));
          int rhs = S.s(n + 1, i, S.s(n, j, x));
          if (lhs != rhs)
            rep.fail("degen-degen", tup({std::to_string(n), std::to_string(i),
                                         std::to_string(j), S.cells[n][x]}),
                     S.cells[n + 2][lhs], S.cells[n + 2][rhs]);
        }
  // d_i s_j relations
  for (int n = 0; n < S.N; ++n)
    for (int j = 0; j <= n; ++j)
      for (int x = 0; x < S.size(n); ++x) {
        int sx = S.s(n, j, x);
        for (int i = 0; i <= n + 1; ++i) {
          int lhs = S.d(n + 1, i, sx);
          int rhs;
          if (i == j || i == j + 1)
            rhs = x;
          else if (i < j)
            rhs = S.s(n - 1, j - 1, S.d(n, i, x));
          else
            rhs = S.s(n - 1, j, S.d(n, i - 1, x));
          if (lhs != rhs)
            rep.fail("face-degen", tup({std::to_string(n), std::to_string(i),
                                        std::to_string(j), S.cells[n][x]}));
        }
      }
  return rep;
}

KanReport kan_check(const TruncatedSimplicialSet& S, int n, int k) {
  KanReport out;
  if (n < 1 || n > S.N || k < 0 || k > n) return out;

  if (n == 1) {
    // A (1,k)-horn is a single vertex; a filler is a 1-cell whose face
    // opposite to k equals it.
    for (int v = 0; v < S.size(0); ++v) {
      ++out.horns;
      bool hit = false;
      for (int z = 0; z < S.size(1) && !hit; ++z)
        if (S.d(1, 1 - k, z) == v) hit = true;
      if (hit)
        ++out.filled;
      else if (out.unfilled.size() < 5)
        out.unfilled.push_back(S.cells[0][v]);
    }
    return out;
  }

  // Index n-cells by their face tuples without position k.
  std::map<std::vector<int>, int> fillers;
  for (int z = 0; z < S.size(n); ++z) {
    std::vector<int> key;
    for (int i = 0; i <= n; ++i)
      if (i != k) key.push_back(S.d(n, i, z));
    fillers[key] += 1;
  }

  std::vector<int> pos;
  for (int i = 0; i <= n; ++i)
    if (i != k) pos.push_back(i);
  std::vector<int> y(n + 1, -1);
  std::function<void(std::size_t)> rec = [&](std::size_t t) {
    if (t == pos.size()) {
      ++out.horns;
      std::vector<int> key;
      for (int i = 0; i <= n; ++i)
        if (i != k) key.push_back(y[i]);
      if (fillers.count(key))
        ++out.filled;
      else if (out.unfilled.size() < 5) {
        std::vector<Id> parts;
        for (int i = 0; i <= n; ++i)
          if (i != k) parts.push_back(S.cells[n - 1][y[i]]);
        out.unfilled.push_back(tup(parts));
      }
      return;
    }
    int i = pos[t];
    for (int cand = 0; cand < S.size(n - 1); ++cand) {
      bool ok = true;
      for (std::size_t s = 0; s < t && ok; ++s) {
        int j = pos[s];  // j < i
        if (S.d(n - 1, j, cand) != S.d(n - 1, i - 1, y[j])) ok = false;
      }
      if (!ok) continue;
      y[i] = cand;
      rec(t + 1);
      y[i] = -1;
    }
  };
  rec(0);
  return out;
}

ValidationReport check_simplicial_injection(const TruncatedSimplicialSet& A,
                                            const TruncatedSimplicialSet& S,
                                            const std::vector<std::vector<int>>& m) {
  ValidationReport rep;
  rep.subject = A.name + "->" + S.name;
  int N = std::min(A.N, S.N);
  for (int n = 0; n <= N; ++n) {
    std::vector<bool> hit(S.size(n), false);
    for (int x = 0; x < A.size(n); ++x) {
      int y = m[n][x];
      if (y < 0 || y >= S.size(n)) {
        rep.schema("map-range", A.cells[n][x]);
        return rep;
      }
      if (hit[y]) rep.fail("not-injective", A.cells[n][x]);
      hit[y] = true;
    }
  }
  for (int n = 1; n <= N; ++n)
    for (int i = 0; i <= n; ++i)
      for (int x = 0; x < A.size(n); ++x)
        if (m[n - 1][A.d(n, i, x)] != S.d(n, i, m[n][x]))
          rep.fail("face-not-preserved",
                   tup({std::to_string(n), std::to_string(i), A.cells[n][x]}));
  for (int n = 0; n < N; ++n)
    for (int i = 0; i <= n; ++i)
      for (int x = 0; x < A.size(n); ++x)
        if (m[n + 1][A.s(n, i, x)] != S.s(n, i, m[n][x]))
          rep.fail("degeneracy-not-preserved",
                   tup({std::to_string(n), std::to_string(i), A.cells[n][x]}));
  return rep;
}

}  // namespace hofib::nerve
