#include "hofib/algebra.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

namespace hofib::alg {

// --- FiniteGraph -------------------------------------------------------------

bool FiniteGraph::acyclic() const {
  const int n = static_cast<int>(vertices.size());
  std::vector<std::vector<int>> out(n);
  for (const auto& e : edges) out[e.src].push_back(e.dst);
  std::vector<int> state(n, 0);  // 0 fresh, 1 on stack, 2 done
  std::function<bool(int)> dfs = [&](int v) {
    state[v] = 1;
    for (int w : out[v]) {
      if (state[w] == 1) return false;
      if (state[w] == 0 && !dfs(w)) return false;
    }
    state[v] = 2;
    return true;
  };
  for (int v = 0; v < n; ++v)
    if (state[v] == 0 && !dfs(v)) return false;
  return true;
}

FiniteGraph FiniteGraph::linear(int p) {
  FiniteGraph g;
  g.name = "G" + std::to_string(p);
  for (int i = 0; i <= p; ++i) g.vertices.push_back(std::to_string(i));
  for (int i = 0; i < p; ++i)
    g.edges.push_back({"e" + std::to_string(i), i, i + 1});
  return g;
}

// --- FiniteCategory ----------------------------------------------------------

int FiniteCategory::compose(int g, int f) const {
  auto it = comp_.find(pack2(g, f));
  if (it == comp_.end())
    throw std::out_of_range(name + ": composition undefined for (" + mors[g].id +
                            "," + mors[f].id + ")");
  return it->second;
}

std::optional<int> FiniteCategory::try_compose(int g, int f) const {
  auto it = comp_.find(pack2(g, f));
  if (it == comp_.end()) return std::nullopt;
  return it->second;
}

int FiniteCategory::object_index(const Id& id) const {
  for (int i = 0; i < n_obj(); ++i)
    if (objects[i] == id) return i;
  throw std::out_of_range(name + ": no object " + id);
}

int FiniteCategory::mor_index(const Id& id) const {
  for (int i = 0; i < n_mor(); ++i)
    if (mors[i].id == id) return i;
  throw std::out_of_range(name + ": no morphism " + id);
}

std::vector<int> FiniteCategory::hom(int a, int b) const {
  std::vector<int> out;
  for (int i = 0; i < n_mor(); ++i)
    if (mors[i].src == a && mors[i].dst == b) out.push_back(i);
  return out;
}

std::vector<int> FiniteCategory::mors_from(int a) const {
  std::vector<int> out;
  for (int i = 0; i < n_mor(); ++i)
    if (mors[i].src == a) out.push_back(i);
  return out;
}

void FiniteCategory::check_schema(ValidationReport& rep) const {
  std::set<Id> seen;
  for (const auto& o : objects)
    if (!seen.insert(o).second) rep.schema("duplicate-object-id", o);
  seen.clear();
  for (const auto& m : mors) {
    if (!seen.insert(m.id).second) rep.schema("duplicate-morphism-id", m.id);
    if (m.src < 0 || m.src >= n_obj() || m.dst < 0 || m.dst >= n_obj())
      rep.schema("dangling-endpoint", m.id);
  }
  if (static_cast<int>(identity.size()) != n_obj()) {
    rep.schema("identity-table-shape", name);
    return;
  }
  for (int a = 0; a < n_obj(); ++a) {
    int e = identity[a];
    if (e < 0 || e >= n_mor() || mors[e].src != a || mors[e].dst != a)
      rep.schema("identity-not-endomorphism", objects[a]);
  }
  for (int g = 0; g < n_mor(); ++g)
    for (int f = 0; f < n_mor(); ++f) {
      bool comp = composable(g, f);
      bool has = comp_.count(pack2(g, f)) > 0;
      if (comp && !has)
        rep.schema("missing-composite", tup({mors[g].id, mors[f].id}));
      if (!comp && has)
        rep.schema("composite-of-uncomposable", tup({mors[g].id, mors[f].id}));
      if (comp && has) {
        int gf = comp_.at(pack2(g, f));
        if (gf < 0 || gf >= n_mor() || mors[gf].src != mors[f].src ||
            mors[gf].dst != mors[g].dst)
          rep.schema("composite-endpoints", tup({mors[g].id, mors[f].id}));
      }
    }
}

void FiniteCategory::check_axioms(ValidationReport& rep) const {
  for (int f = 0; f < n_mor(); ++f) {
    int l = compose(identity[mors[f].dst], f);
    if (l != f) rep.fail("left-unit", mors[f].id, mors[l].id, mors[f].id);
    int r = compose(f, identity[mors[f].src]);
    if (r != f) rep.fail("right-unit", mors[f].id, mors[r].id, mors[f].id);
  }
  for (int h = 0; h < n_mor(); ++h)
    for (int g = 0; g < n_mor(); ++g) {
      if (!composable(h, g)) continue;
      for (int f = 0; f < n_mor(); ++f) {
        if (!composable(g, f)) continue;
        int lhs = compose(compose(h, g), f);
        int rhs = compose(h, compose(g, f));
        if (lhs != rhs)
          rep.fail("associativity", tup({mors[h].id, mors[g].id, mors[f].id}),
                   mors[lhs].id, mors[rhs].id);
      }
    }
}

FiniteCategory FiniteCategory::simplex(int p) {
  FiniteCategory c;
  c.name = "[" + std::to_string(p) + "]";
  for (int i = 0; i <= p; ++i) c.objects.push_back(std::to_string(i));
  std::vector<std::vector<int>> ix(p + 1, std::vector<int>(p + 1, -1));
  for (int i = 0; i <= p; ++i)
    for (int j = i; j <= p; ++j) {
      ix[i][j] = c.n_mor();
      c.mors.push_back({tup({std::to_string(i), std::to_string(j)}), i, j});
    }
  c.identity.resize(p + 1);
  for (int i = 0; i <= p; ++i) c.identity[i] = ix[i][i];
  for (int i = 0; i <= p; ++i)
    for (int j = i; j <= p; ++j)
      for (int k = j; k <= p; ++k) c.set_comp(ix[j][k], ix[i][j], ix[i][k]);
  return c;
}

// --- FiniteGroupoid ----------------------------------------------------------

void FiniteGroupoid::check_axioms_groupoid(ValidationReport& rep) const {
  if (static_cast<int>(inverse.size()) != n_mor()) {
    rep.schema("inverse-table-shape", name);
    return;
  }
  for (int f = 0; f < n_mor(); ++f) {
    int g = inverse[f];
    if (g < 0 || g >= n_mor() || mors[g].src != mors[f].dst ||
        mors[g].dst != mors[f].src) {
      rep.schema("inverse-endpoints", mors[f].id);
      continue;
    }
    if (compose(g, f) != identity[mors[f].src])
      rep.fail("inverse-left", mors[f].id);
    if (compose(f, g) != identity[mors[f].dst])
      rep.fail("inverse-right", mors[f].id);
  }
}

FinGroup FiniteGroupoid::aut_group(int a) const {
  FinGroup g;
  g.name = name + ".Aut(" + objects[a] + ")";
  std::vector<int> members = hom(a, a);
  std::vector<int> back(n_mor(), -1);
  for (std::size_t i = 0; i < members.size(); ++i) back[members[i]] = static_cast<int>(i);
  const int n = static_cast<int>(members.size());
  g.mul.assign(n, std::vector<int>(n));
  g.inv.resize(n);
  for (int i = 0; i < n; ++i) {
    g.elems.push_back(mors[members[i]].id);
    g.inv[i] = back[inverse[members[i]]];
    for (int j = 0; j < n; ++j)
      g.mul[i][j] = back[compose(members[i], members[j])];
  }
  g.unit = back[identity[a]];
  return g;
}

std::vector<int> FiniteGroupoid::components(std::vector<int>* reps) const {
  const int n = n_obj();
  std::vector<int> parent(n);
  for (int i = 0; i < n; ++i) parent[i] = i;
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& m : mors) parent[find(m.src)] = find(m.dst);
  // Number components by their least object id.
  std::vector<int> root_rep(n, -1);
  for (int i = 0; i < n; ++i) {
    int r = find(i);
    if (root_rep[r] < 0 || objects[i] < objects[root_rep[r]]) root_rep[r] = i;
  }
  std::vector<int> rep_objs;
  for (int i = 0; i < n; ++i)
    if (find(i) == i) rep_objs.push_back(root_rep[i]);
  std::sort(rep_objs.begin(), rep_objs.end(),
            [&](int x, int y) { return objects[x] < objects[y]; });
  std::vector<int> comp_ix(n, -1);
  for (std::size_t c = 0; c < rep_objs.size(); ++c) comp_ix[find(rep_objs[c])] = static_cast<int>(c);
  std::vector<int> out(n);
  for (int i = 0; i < n; ++i) out[i] = comp_ix[find(i)];
  if (reps) *reps = rep_objs;
  return out;
}

FiniteGroupoid FiniteGroupoid::from_group(const FinGroup& g, const Id& obj) {
  FiniteGroupoid gd;
  gd.name = "B" + g.name;
  gd.objects = {obj};
  for (int i = 0; i < g.size(); ++i) gd.mors.push_back({g.elems[i], 0, 0});
  gd.identity = {g.unit};
  gd.inverse = g.inv;
  for (int a = 0; a < g.size(); ++a)
    for (int b = 0; b < g.size(); ++b) gd.set_comp(a, b, g.op(a, b));
  return gd;
}

FiniteGroupoid FiniteGroupoid::indiscrete(int n) {
  FiniteGroupoid g;
  g.name = "E" + std::to_string(n);
  for (int i = 0; i < n; ++i) g.objects.push_back("x" + std::to_string(i));
  std::vector<std::vector<int>> ix(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      ix[a][b] = g.n_mor();
      g.mors.push_back({tup({g.objects[a], g.objects[b]}), a, b});
    }
  g.identity.resize(n);
  g.inverse.resize(g.n_mor());
  for (int a = 0; a < n; ++a) g.identity[a] = ix[a][a];
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      g.inverse[ix[a][b]] = ix[b][a];
      for (int c = 0; c < n; ++c) g.set_comp(ix[b][c], ix[a][b], ix[a][c]);
    }
  return g;
}

FiniteGroupoid FiniteGroupoid::discrete(const std::vector<Id>& objs) {
  FiniteGroupoid g;
  g.name = "D" + std::to_string(objs.size());
  g.objects = objs;
  for (int i = 0; i < static_cast<int>(objs.size()); ++i) {
    g.mors.push_back({tup({objs[i], objs[i]}), i, i});
    g.identity.push_back(i);
    g.inverse.push_back(i);
    g.set_comp(i, i, i);
  }
  return g;
}

// --- functors ----------------------------------------------------------------

namespace {
template <typename Cat>
void check_functor_tables(const Cat& a, const Cat& b, const std::vector<int>& om,
                          const std::vector<int>& mm, ValidationReport& rep) {
  if (static_cast<int>(om.size()) != a.n_obj() ||
      static_cast<int>(mm.size()) != a.n_mor()) {
    rep.schema("functor-table-shape", rep.subject);
    return;
  }
  for (int f = 0; f < a.n_mor(); ++f) {
    int ff = mm[f];
    if (ff < 0 || ff >= b.n_mor()) {
      rep.schema("functor-image-range", a.mors[f].id);
      continue;
    }
    if (b.mors[ff].src != om[a.mors[f].src] || b.mors[ff].dst != om[a.mors[f].dst])
      rep.fail("functor-endpoints", a.mors[f].id);
  }
  for (int x = 0; x < a.n_obj(); ++x)
    if (mm[a.identity[x]] != b.identity[om[x]])
      rep.fail("functor-identity", a.objects[x]);
  for (int g = 0; g < a.n_mor(); ++g)
    for (int f = 0; f < a.n_mor(); ++f) {
      if (!a.composable(g, f)) continue;
      if (mm[a.compose(g, f)] != b.compose(mm[g], mm[f]))
        rep.fail("functor-composition", tup({a.mors[g].id, a.mors[f].id}));
    }
}
}  // namespace

void CatFunctor::check(ValidationReport& rep) const {
  check_functor_tables(*src, *dst, obj_map, mor_map, rep);
}

CatFunctor CatFunctor::identity(std::shared_ptr<const FiniteCategory> c) {
  CatFunctor f;
  f.src = f.dst = c;
  f.obj_map.resize(c->n_obj());
  f.mor_map.resize(c->n_mor());
  for (int i = 0; i < c->n_obj(); ++i) f.obj_map[i] = i;
  for (int i = 0; i < c->n_mor(); ++i) f.mor_map[i] = i;
  return f;
}

void GroupoidFunctor::check(ValidationReport& rep) const {
  check_functor_tables(*src, *dst, obj_map, mor_map, rep);
}

GroupoidFunctor GroupoidFunctor::identity(std::shared_ptr<const FiniteGroupoid> g) {
  GroupoidFunctor f;
  f.src = f.dst = g;
  f.obj_map.resize(g->n_obj());
  f.mor_map.resize(g->n_mor());
  for (int i = 0; i < g->n_obj(); ++i) f.obj_map[i] = i;
  for (int i = 0; i < g->n_mor(); ++i) f.mor_map[i] = i;
  return f;
}

GroupoidFunctor GroupoidFunctor::from_group_hom(const FinGroup& a, const FinGroup& b,
                                                const GroupHom& h) {
  GroupoidFunctor f;
  f.src = std::make_shared<FiniteGroupoid>(FiniteGroupoid::from_group(a));
  f.dst = std::make_shared<FiniteGroupoid>(FiniteGroupoid::from_group(b));
  f.obj_map = {0};
  f.mor_map = h;
  return f;
}

// --- PGroup --------------------------------------------------------------------

void PGroup::check(ValidationReport& rep) const {
  const auto& P = *base;
  if (static_cast<int>(fiber.size()) != P.n_obj() ||
      static_cast<int>(action.size()) != P.n_mor()) {
    rep.schema("pgroup-table-shape", name);
    return;
  }
  for (int a = 0; a < P.n_obj(); ++a) {
    ValidationReport sub;
    sub.subject = name + ".fiber(" + P.objects[a] + ")";
    fiber[a].check(sub);
    rep.absorb(sub);
  }
  for (int p = 0; p < P.n_mor(); ++p) {
    const auto& m = P.mors[p];
    if (static_cast<int>(action[p].size()) != fiber[m.src].size()) {
      rep.schema("action-table-shape", m.id);
      continue;
    }
    for (int x : action[p])
      if (x < 0 || x >= fiber[m.dst].size()) {
        rep.schema("action-image-range", m.id);
        break;
      }
  }
  if (!rep.schema_errors.empty()) return;
  for (int p = 0; p < P.n_mor(); ++p) {
    const auto& m = P.mors[p];
    if (!is_homomorphism(fiber[m.src], fiber[m.dst], action[p]))
      rep.fail("action-not-homomorphism", m.id);
  }
  for (int a = 0; a < P.n_obj(); ++a) {
    const auto& act = action[P.identity[a]];
    for (int g = 0; g < fiber[a].size(); ++g)
      if (act[g] != g) {
        rep.fail("action-of-identity", P.objects[a]);
        break;
      }
  }
  for (int q = 0; q < P.n_mor(); ++q)
    for (int p = 0; p < P.n_mor(); ++p) {
      if (!P.composable(q, p)) continue;
      const auto& fst = action[p];
      const auto& snd = action[q];
      const auto& both = action[P.compose(q, p)];
      for (int g = 0; g < fiber[P.mors[p].src].size(); ++g)
        if (both[g] != snd[fst[g]]) {
          rep.fail("action-composition", tup({P.mors[q].id, P.mors[p].id}));
          break;
        }
    }
}

PGroup PGroup::constant(std::shared_ptr<const FiniteGroupoid> base, const FinGroup& g) {
  PGroup pg;
  pg.name = "const." + g.name;
  pg.base = base;
  pg.fiber.assign(base->n_obj(), g);
  pg.action.resize(base->n_mor());
  for (int p = 0; p < base->n_mor(); ++p) {
    pg.action[p].resize(g.size());
    for (int i = 0; i < g.size(); ++i) pg.action[p][i] = i;
  }
  return pg;
}

PGroup PGroup::trivial(std::shared_ptr<const FiniteGroupoid> base) {
  return constant(std::move(base), FinGroup::trivial());
}

// --- operations ----------------------------------------------------------------

ValidationReport validate_category(const FiniteCategory& c) {
  ValidationReport rep;
  rep.subject = c.name;
  c.check_schema(rep);
  if (rep.schema_errors.empty()) c.check_axioms(rep);
  return rep;
}

ValidationReport validate_groupoid(const FiniteGroupoid& g) {
  ValidationReport rep = validate_category(g);
  if (rep.schema_errors.empty()) g.check_axioms_groupoid(rep);
  return rep;
}

ValidationReport validate_pgroup(const PGroup& pg) {
  ValidationReport rep;
  rep.subject = pg.name;
  ValidationReport base = validate_groupoid(*pg.base);
  rep.absorb(base);
  pg.check(rep);
  return rep;
}

FiniteCategory free_category(const FiniteGraph& g,
                             std::vector<std::vector<int>>* out_paths) {
  if (!g.acyclic())
    throw std::invalid_argument("free_category(" + g.name +
                                "): graph has a cycle, free category is infinite");
  FiniteCategory c;
  c.name = "Free(" + g.name + ")";
  c.objects = g.vertices;

  // Paths as edge-id sequences; identity at v encoded as the 1-tuple (v).
  struct Path {
    std::vector<int> edges;
    int src, dst;
  };
  std::vector<Path> paths;
  for (int v = 0; v < static_cast<int>(g.vertices.size()); ++v)
    paths.push_back({{}, v, v});
  std::size_t frontier_begin = 0;
  while (frontier_begin < paths.size()) {
    std::size_t frontier_end = paths.size();
    for (std::size_t i = frontier_begin; i < frontier_end; ++i)
      for (int e = 0; e < static_cast<int>(g.edges.size()); ++e)
        if (g.edges[e].src == paths[i].dst) {
          Path ext = paths[i];
          ext.edges.push_back(e);
          ext.dst = g.edges[e].dst;
          paths.push_back(std::move(ext));
        }
    frontier_begin = frontier_end;
  }
  auto path_id = [&](const Path& p) {
    if (p.edges.empty()) return tup({g.vertices[p.src]});
    std::vector<Id> parts;
    for (int e : p.edges) parts.push_back(g.edges[e].id);
    return tup(parts);
  };
  // Deterministic ordering: by length, then id.
  std::sort(paths.begin(), paths.end(), [&](const Path& a, const Path& b) {
    if (a.edges.size() != b.edges.size()) return a.edges.size() < b.edges.size();
    return path_id(a) < path_id(b);
  });
  std::unordered_map<Id, int> ix;
  if (out_paths) out_paths->clear();
  for (const auto& p : paths) {
    ix[path_id(p)] = c.n_mor();
    c.mors.push_back({path_id(p), p.src, p.dst});
    if (out_paths) out_paths->push_back(p.edges);
  }
  c.identity.resize(c.n_obj());
  for (const auto& p : paths)
    if (p.edges.empty()) c.identity[p.src] = ix.at(path_id(p));
  for (const auto& q : paths)
    for (const auto& p : paths) {
      if (p.dst != q.src) continue;
      Path qp;
      qp.edges = p.edges;
      qp.edges.insert(qp.edges.end(), q.edges.begin(), q.edges.end());
      qp.src = p.src;
      qp.dst = q.dst;
      c.set_comp(ix.at(path_id(q)), ix.at(path_id(p)), ix.at(path_id(qp)));
    }
  return c;
}

bool groupoid_fibration(const GroupoidFunctor& f) {
  const auto& P = *f.src;
  const auto& Q = *f.dst;
  for (int a = 0; a < P.n_obj(); ++a) {
    for (int q : Q.mors_from(f.obj_map[a])) {
      bool lifted = false;
      for (int p : P.mors_from(a))
        if (f.mor_map[p] == q) {
          lifted = true;
          break;
        }
      if (!lifted) return false;
    }
  }
  return true;
}

GroupoidPullback pullback_groupoid(const GroupoidFunctor& f, const GroupoidFunctor& g) {
  if (f.dst->name != g.dst->name || f.dst->n_mor() != g.dst->n_mor())
    throw std::invalid_argument("pullback_groupoid: codomain mismatch");
  const auto& P = *f.src;
  const auto& P2 = *g.src;
  auto pb = std::make_shared<FiniteGroupoid>();
  pb->name = "(" + P.name + "x_" + f.dst->name + P2.name + ")";

  GroupoidPullback out;
  std::unordered_map<std::uint64_t, int> oix, mix;
  for (int a = 0; a < P.n_obj(); ++a)
    for (int b = 0; b < P2.n_obj(); ++b)
      if (f.obj_map[a] == g.obj_map[b]) {
        oix[pack2(a, b)] = pb->n_obj();
        out.obj_pair.push_back({a, b});
        pb->objects.push_back(tup({P.objects[a], P2.objects[b]}));
      }
  for (int p = 0; p < P.n_mor(); ++p)
    for (int q = 0; q < P2.n_mor(); ++q)
      if (f.mor_map[p] == g.mor_map[q]) {
        mix[pack2(p, q)] = pb->n_mor();
        out.mor_pair.push_back({p, q});
        pb->mors.push_back({tup({P.mors[p].id, P2.mors[q].id}),
                            oix.at(pack2(P.mors[p].src, P2.mors[q].src)),
                            oix.at(pack2(P.mors[p].dst, P2.mors[q].dst))});
      }
  pb->identity.resize(pb->n_obj());
  for (int i = 0; i < pb->n_obj(); ++i) {
    auto [a, b] = out.obj_pair[i];
    pb->identity[i] = mix.at(pack2(P.identity[a], P2.identity[b]));
  }
  pb->inverse.resize(pb->n_mor());
  for (int i = 0; i < pb->n_mor(); ++i) {
    auto [p, q] = out.mor_pair[i];
    pb->inverse[i] = mix.at(pack2(P.inverse[p], P2.inverse[q]));
    for (int j = 0; j < pb->n_mor(); ++j) {
      auto [p2, q2] = out.mor_pair[j];
      if (pb->composable(i, j))
        pb->set_comp(i, j, mix.at(pack2(P.compose(p, p2), P2.compose(q, q2))));
    }
  }
  out.groupoid = pb;
  out.proj1.src = pb;
  out.proj1.dst = f.src;
  out.proj2.src = pb;
  out.proj2.dst = g.src;
  for (auto [a, b] : out.obj_pair) {
    out.proj1.obj_map.push_back(a);
    out.proj2.obj_map.push_back(b);
  }
  for (auto [p, q] : out.mor_pair) {
    out.proj1.mor_map.push_back(p);
    out.proj2.mor_map.push_back(q);
  }
  return out;
}

}  // namespace hofib::alg
