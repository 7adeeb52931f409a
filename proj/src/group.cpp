#include "hofib/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace hofib::alg {

int FinGroup::index_of(const Id& e) const {
  for (int i = 0; i < size(); ++i)
    if (elems[i] == e) return i;
  throw std::out_of_range("FinGroup " + name + ": no element " + e);
}

bool FinGroup::is_abelian() const {
  for (int a = 0; a < size(); ++a)
    for (int b = 0; b < a; ++b)
      if (mul[a][b] != mul[b][a]) return false;
  return true;
}

void FinGroup::check(ValidationReport& rep) const {
  const int n = size();
  if (static_cast<int>(mul.size()) != n || static_cast<int>(inv.size()) != n ||
      unit < 0 || unit >= n) {
    rep.schema("group-table-shape", name);
    return;
  }
  for (int a = 0; a < n; ++a) {
    if (static_cast<int>(mul[a].size()) != n) {
      rep.schema("group-table-shape", name + ":" + elems[a]);
      return;
    }
    for (int b = 0; b < n; ++b)
      if (mul[a][b] < 0 || mul[a][b] >= n)
        rep.schema("group-entry-range", tup({elems[a], elems[b]}));
  }
  if (!rep.schema_errors.empty()) return;
  for (int a = 0; a < n; ++a) {
    if (mul[unit][a] != a)
      rep.fail("group-left-unit", elems[a], elems[mul[unit][a]], elems[a]);
    if (mul[a][unit] != a)
      rep.fail("group-right-unit", elems[a], elems[mul[a][unit]], elems[a]);
    if (mul[inv[a]][a] != unit || mul[a][inv[a]] != unit)
      rep.fail("group-inverse", elems[a]);
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (mul[mul[a][b]][c] != mul[a][mul[b][c]])
          rep.fail("group-associativity", tup({elems[a], elems[b], elems[c]}),
                   elems[mul[mul[a][b]][c]], elems[mul[a][mul[b][c]]]);
}

FinGroup FinGroup::trivial(const Id& name) {
  FinGroup g;
  g.name = name;
  g.elems = {"e"};
  g.mul = {{0}};
  g.unit = 0;
  g.inv = {0};
  return g;
}

FinGroup FinGroup::cyclic(int n) {
  FinGroup g;
  g.name = "Z" + std::to_string(n);
  g.elems.resize(n);
  g.mul.assign(n, std::vector<int>(n));
  g.inv.resize(n);
  for (int a = 0; a < n; ++a) {
    g.elems[a] = std::to_string(a);
    g.inv[a] = (n - a) % n;
    for (int b = 0; b < n; ++b) g.mul[a][b] = (a + b) % n;
  }
  return g;
}

namespace {
std::string perm_word(const std::vector<int>& p) {
  std::string w;
  for (int v : p) w += std::to_string(v);
  return w;
}
}  // namespace

FinGroup FinGroup::symmetric(int n) {
  std::vector<std::vector<int>> perms;
  std::vector<int> base(n);
  std::iota(base.begin(), base.end(), 0);
  do {
    perms.push_back(base);
  } while (std::next_permutation(base.begin(), base.end()));
  std::sort(perms.begin(), perms.end());

  FinGroup g;
  g.name = "S" + std::to_string(n);
  std::map<std::vector<int>, int> ix;
  for (std::size_t i = 0; i < perms.size(); ++i) {
    g.elems.push_back(perm_word(perms[i]));
    ix[perms[i]] = static_cast<int>(i);
  }
  const int m = static_cast<int>(perms.size());
  g.mul.assign(m, std::vector<int>(m));
  g.inv.resize(m);
  for (int a = 0; a < m; ++a) {
    std::vector<int> ainv(n);
    for (int i = 0; i < n; ++i) ainv[perms[a][i]] = i;
    g.inv[a] = ix.at(ainv);
    for (int b = 0; b < m; ++b) {
      std::vector<int> ab(n);  // (a*b)(i) = a(b(i))
      for (int i = 0; i < n; ++i) ab[i] = perms[a][perms[b][i]];
      g.mul[a][b] = ix.at(ab);
    }
  }
  std::vector<int> idp(n);
  std::iota(idp.begin(), idp.end(), 0);
  g.unit = ix.at(idp);
  return g;
}

FinGroup FinGroup::direct_product(const FinGroup& a, const FinGroup& b) {
  FinGroup g;
  g.name = a.name + "x" + b.name;
  const int na = a.size(), nb = b.size();
  for (int i = 0; i < na; ++i)
    for (int j = 0; j < nb; ++j) g.elems.push_back(tup({a.elems[i], b.elems[j]}));
  const int n = na * nb;
  g.mul.assign(n, std::vector<int>(n));
  g.inv.resize(n);
  auto at = [nb](int i, int j) { return i * nb + j; };
  for (int i = 0; i < na; ++i)
    for (int j = 0; j < nb; ++j) {
      g.inv[at(i, j)] = at(a.inv[i], b.inv[j]);
      for (int k = 0; k < na; ++k)
        for (int l = 0; l < nb; ++l)
          g.mul[at(i, j)][at(k, l)] = at(a.mul[i][k], b.mul[j][l]);
    }
  g.unit = at(a.unit, b.unit);
  return g;
}

bool is_homomorphism(const FinGroup& src, const FinGroup& dst, const GroupHom& h) {
  if (static_cast<int>(h.size()) != src.size()) return false;
  for (int x : h)
    if (x < 0 || x >= dst.size()) return false;
  for (int a = 0; a < src.size(); ++a)
    for (int b = 0; b < src.size(); ++b)
      if (h[src.op(a, b)] != dst.op(h[a], h[b])) return false;
  return h[src.unit] == dst.unit;
}

FinGroup subgroup(const FinGroup& g, std::vector<int> members, const Id& name) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  std::vector<int> back(g.size(), -1);
  for (std::size_t i = 0; i < members.size(); ++i) back[members[i]] = static_cast<int>(i);
  FinGroup s;
  s.name = name;
  const int n = static_cast<int>(members.size());
  s.mul.assign(n, std::vector<int>(n));
  s.inv.resize(n);
  for (int i = 0; i < n; ++i) {
    s.elems.push_back(g.elems[members[i]]);
    if (back[g.inv[members[i]]] < 0)
      throw std::invalid_argument("subgroup not closed under inverse: " + s.name);
    s.inv[i] = back[g.inv[members[i]]];
    for (int j = 0; j < n; ++j) {
      int prod = g.op(members[i], members[j]);
      if (back[prod] < 0)
        throw std::invalid_argument("subgroup not closed under product: " + s.name);
      s.mul[i][j] = back[prod];
    }
  }
  s.unit = back[g.unit];
  if (s.unit < 0) throw std::invalid_argument("subgroup misses the unit: " + s.name);
  return s;
}

FinGroup kernel(const FinGroup& src, const FinGroup& dst, const GroupHom& h) {
  std::vector<int> members;
  for (int a = 0; a < src.size(); ++a)
    if (h[a] == dst.unit) members.push_back(a);
  return subgroup(src, members, "ker(" + src.name + ")");
}

Quotient quotient_by(const FinGroup& g, const std::vector<int>& normal_members,
                     const Id& name) {
  std::vector<bool> in_n(g.size(), false);
  for (int m : normal_members) in_n[m] = true;
  for (int m : normal_members)
    for (int a = 0; a < g.size(); ++a)
      if (!in_n[g.op(g.op(a, m), g.inv[a])])
        throw std::invalid_argument("quotient_by: subgroup is not normal in " + g.name);

  // Cosets; pick as representative the member with the least id.
  std::vector<int> coset_of(g.size(), -1);
  std::vector<int> reps;
  for (int a = 0; a < g.size(); ++a) {
    if (coset_of[a] >= 0) continue;
    std::vector<int> cos;
    for (int m : normal_members) cos.push_back(g.op(a, m));
    int rep = *std::min_element(cos.begin(), cos.end(), [&](int x, int y) {
      return g.elems[x] < g.elems[y];
    });
    for (int c : cos) coset_of[c] = -2 - rep;  // provisional tag by rep
  }
  // Order cosets by representative id.
  std::vector<int> rep_list;
  for (int a = 0; a < g.size(); ++a)
    if (coset_of[a] == -2 - a) rep_list.push_back(a);
  std::sort(rep_list.begin(), rep_list.end(),
            [&](int x, int y) { return g.elems[x] < g.elems[y]; });
  std::vector<int> rep_ix(g.size(), -1);
  for (std::size_t i = 0; i < rep_list.size(); ++i) rep_ix[rep_list[i]] = static_cast<int>(i);

  Quotient q;
  q.rep.assign(g.size(), -1);
  for (int a = 0; a < g.size(); ++a) q.rep[a] = rep_ix[-2 - coset_of[a]];
  q.group.name = name;
  const int n = static_cast<int>(rep_list.size());
  q.group.mul.assign(n, std::vector<int>(n));
  q.group.inv.resize(n);
  for (int i = 0; i < n; ++i) {
    q.group.elems.push_back(g.elems[rep_list[i]]);
    q.group.inv[i] = q.rep[g.inv[rep_list[i]]];
    for (int j = 0; j < n; ++j)
      q.group.mul[i][j] = q.rep[g.op(rep_list[i], rep_list[j])];
  }
  q.group.unit = q.rep[g.unit];
  return q;
}

bool is_isomorphism(const FinGroup& src, const FinGroup& dst, const GroupHom& h) {
  if (src.size() != dst.size()) return false;
  if (!is_homomorphism(src, dst, h)) return false;
  std::vector<bool> hit(dst.size(), false);
  for (int x : h) {
    if (hit[x]) return false;
    hit[x] = true;
  }
  return true;
}

}  // namespace hofib::alg
