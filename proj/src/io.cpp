#include "hofib/io.hpp"

#include <algorithm>
#include <fstream>
#include <map>

namespace hofib::io {

namespace {

// Field access with JSON-pointer error reporting.
const json& at(const json& j, const std::string& key, const std::string& path) {
  auto it = j.find(key);
  if (it == j.end()) throw SchemaError("missing field", path + "/" + key);
  return *it;
}

std::string str(const json& j, const std::string& key, const std::string& path) {
  const auto& v = at(j, key, path);
  if (!v.is_string()) throw SchemaError("expected string", path + "/" + key);
  return v.get<std::string>();
}

void expect_schema(const json& j, const std::string& schema, const std::string& kind) {
  if (str(j, "schema", "") != schema)
    throw SchemaError("unknown schema version '" + str(j, "schema", "") +
                          "', expected " + schema,
                      "/schema");
  if (str(j, "kind", "") != kind)
    throw SchemaError("unexpected kind '" + str(j, "kind", "") + "', expected " +
                          kind,
                      "/kind");
}

json id_map(const std::map<Id, Id>& m) {
  json out = json::object();
  for (const auto& [k, v] : m) out[k] = v;
  return out;
}

}  // namespace

std::string dumps(const json& j) { return j.dump(1) + "\n"; }

json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError("cannot open file " + path, "/");
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw SchemaError(std::string("parse error: ") + e.what(), "/");
  }
  return j;
}

void write_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  out << dumps(j);
}

// --- graph / category / groupoid ---------------------------------------------

json save_graph(const alg::FiniteGraph& g) {
  json j;
  j["schema"] = "groupoid.v1";
  j["kind"] = "graph";
  j["name"] = g.name;
  auto verts = g.vertices;
  std::sort(verts.begin(), verts.end());
  j["vertices"] = verts;
  std::vector<json> edges;
  for (const auto& e : g.edges)
    edges.push_back({{"id", e.id},
                     {"src", g.vertices[e.src]},
                     {"dst", g.vertices[e.dst]}});
  std::sort(edges.begin(), edges.end(),
            [](const json& a, const json& b) { return a["id"] < b["id"]; });
  j["edges"] = edges;
  return j;
}

alg::FiniteGraph load_graph(const json& j) {
  expect_schema(j, "groupoid.v1", "graph");
  alg::FiniteGraph g;
  g.name = str(j, "name", "");
  for (const auto& v : at(j, "vertices", "")) g.vertices.push_back(v.get<Id>());
  auto vix = [&](const Id& id, const std::string& p) {
    for (int i = 0; i < static_cast<int>(g.vertices.size()); ++i)
      if (g.vertices[i] == id) return i;
    throw SchemaError("unknown vertex " + id, p);
  };
  int k = 0;
  for (const auto& e : at(j, "edges", "")) {
    std::string p = "/edges/" + std::to_string(k++);
    g.edges.push_back({str(e, "id", p), vix(str(e, "src", p), p + "/src"),
                       vix(str(e, "dst", p), p + "/dst")});
  }
  return g;
}

namespace {

json save_category_body(const alg::FiniteCategory& c) {
  json j;
  j["name"] = c.name;
  auto objs = c.objects;
  std::sort(objs.begin(), objs.end());
  j["objects"] = objs;
  std::vector<json> mors;
  for (const auto& m : c.mors)
    mors.push_back({{"id", m.id},
                    {"src", c.objects[m.src]},
                    {"dst", c.objects[m.dst]}});
  std::sort(mors.begin(), mors.end(),
            [](const json& a, const json& b) { return a["id"] < b["id"]; });
  j["morphisms"] = mors;
  std::map<Id, Id> idm;
  for (int a = 0; a < c.n_obj(); ++a) idm[c.objects[a]] = c.mors[c.identity[a]].id;
  j["identity"] = id_map(idm);
  std::vector<std::array<Id, 3>> comp;
  for (const auto& [key, gf] : c.comp_) {
    int g = static_cast<int>(key >> 21);
    int f = static_cast<int>(key & ((1u << 21) - 1));
    comp.push_back({c.mors[g].id, c.mors[f].id, c.mors[gf].id});
  }
  std::sort(comp.begin(), comp.end());
  j["compose"] = comp;
  return j;
}

void load_category_body(const json& j, alg::FiniteCategory& c) {
  c.name = str(j, "name", "");
  for (const auto& o : at(j, "objects", "")) c.objects.push_back(o.get<Id>());
  auto oix = [&](const Id& id, const std::string& p) {
    for (int i = 0; i < c.n_obj(); ++i)
      if (c.objects[i] == id) return i;
    throw SchemaError("unknown object " + id, p);
  };
  int k = 0;
  for (const auto& m : at(j, "morphisms", "")) {
    std::string p = "/morphisms/" + std::to_string(k++);
    c.mors.push_back({str(m, "id", p), oix(str(m, "src", p), p + "/src"),
                      oix(str(m, "dst", p), p + "/dst")});
  }
  auto mix = [&](const Id& id, const std::string& p) {
    for (int i = 0; i < c.n_mor(); ++i)
      if (c.mors[i].id == id) return i;
    throw SchemaError("unknown morphism " + id, p);
  };
  c.identity.assign(c.n_obj(), -1);
  for (const auto& [obj, mor] : at(j, "identity", "").items())
    c.identity[oix(obj, "/identity")] = mix(mor.get<Id>(), "/identity");
  for (int a = 0; a < c.n_obj(); ++a)
    if (c.identity[a] < 0)
      throw SchemaError("missing identity for object " + c.objects[a], "/identity");
  k = 0;
  for (const auto& entry : at(j, "compose", "")) {
    std::string p = "/compose/" + std::to_string(k++);
    if (!entry.is_array() || entry.size() != 3)
      throw SchemaError("compose entry must be [g,f,gf]", p);
    c.set_comp(mix(entry[0].get<Id>(), p), mix(entry[1].get<Id>(), p),
               mix(entry[2].get<Id>(), p));
  }
}

}  // namespace

json save_category(const alg::FiniteCategory& c, bool as_groupoid,
                   const alg::FiniteGroupoid* gpd) {
  json j = save_category_body(c);
  j["schema"] = "groupoid.v1";
  j["kind"] = as_groupoid ? "groupoid" : "category";
  if (as_groupoid && gpd) {
    std::map<Id, Id> inv;
    for (int m = 0; m < c.n_mor(); ++m)
      inv[c.mors[m].id] = c.mors[gpd->inverse[m]].id;
    j["inverse"] = id_map(inv);
  }
  return j;
}

json save_groupoid(const alg::FiniteGroupoid& g) {
  return save_category(g, true, &g);
}

alg::FiniteCategory load_category(const json& j) {
  expect_schema(j, "groupoid.v1", "category");
  alg::FiniteCategory c;
  load_category_body(j, c);
  return c;
}

alg::FiniteGroupoid load_groupoid(const json& j) {
  expect_schema(j, "groupoid.v1", "groupoid");
  alg::FiniteGroupoid g;
  load_category_body(j, g);
  g.inverse.assign(g.n_mor(), -1);
  for (const auto& [m, mi] : at(j, "inverse", "").items())
    g.inverse[g.mor_index(m)] = g.mor_index(mi.get<Id>());
  for (int m = 0; m < g.n_mor(); ++m)
    if (g.inverse[m] < 0)
      throw SchemaError("missing inverse for " + g.mors[m].id, "/inverse");
  return g;
}

// --- bicategory ------------------------------------------------------------------

json save_bicategory(const bicat::FiniteBicategory& b) {
  json j;
  j["schema"] = "bicategory.v1";
  j["kind"] = "bicategory";
  j["name"] = b.name;
  auto objs = b.objects;
  std::sort(objs.begin(), objs.end());
  j["objects"] = objs;
  std::vector<json> c1, c2;
  for (const auto& c : b.cells1)
    c1.push_back({{"id", c.id}, {"src", b.objects[c.src]}, {"dst", b.objects[c.dst]}});
  for (const auto& c : b.cells2)
    c2.push_back({{"id", c.id},
                  {"src", b.cells1[c.src].id},
                  {"dst", b.cells1[c.dst].id}});
  auto by_id = [](const json& a, const json& b2) { return a["id"] < b2["id"]; };
  std::sort(c1.begin(), c1.end(), by_id);
  std::sort(c2.begin(), c2.end(), by_id);
  j["cells1"] = c1;
  j["cells2"] = c2;
  std::map<Id, Id> id1m, id2m, lu, ru;
  for (int a = 0; a < b.n_obj(); ++a) id1m[b.objects[a]] = b.cells1[b.id1[a]].id;
  for (int f = 0; f < b.n1(); ++f) {
    id2m[b.cells1[f].id] = b.cells2[b.id2[f]].id;
    lu[b.cells1[f].id] = b.cells2[b.lunit[f]].id;
    ru[b.cells1[f].id] = b.cells2[b.runit[f]].id;
  }
  j["id1"] = id_map(id1m);
  j["id2"] = id_map(id2m);
  j["lunit"] = id_map(lu);
  j["runit"] = id_map(ru);
  auto table2 = [&](const std::unordered_map<std::uint64_t, int>& t, bool two) {
    std::vector<std::array<Id, 3>> rows;
    for (const auto& [key, r] : t) {
      int x = static_cast<int>(key >> 21);
      int y = static_cast<int>(key & ((1u << 21) - 1));
      if (two)
        rows.push_back({b.cells2[x].id, b.cells2[y].id, b.cells2[r].id});
      else
        rows.push_back({b.cells1[x].id, b.cells1[y].id, b.cells1[r].id});
    }
    std::sort(rows.begin(), rows.end());
    return json(rows);
  };
  j["vcomp"] = table2(b.vcomp_, true);
  j["hcomp1"] = table2(b.hcomp1_, false);
  j["hcomp2"] = table2(b.hcomp2_, true);
  std::vector<std::array<Id, 4>> arows;
  for (const auto& [key, r] : b.assoc_) {
    int f3 = static_cast<int>(key >> 42);
    int f2 = static_cast<int>((key >> 21) & ((1u << 21) - 1));
    int f1 = static_cast<int>(key & ((1u << 21) - 1));
    arows.push_back(
        {b.cells1[f3].id, b.cells1[f2].id, b.cells1[f1].id, b.cells2[r].id});
  }
  std::sort(arows.begin(), arows.end());
  j["assoc"] = arows;
  return j;
}

std::shared_ptr<bicat::FiniteBicategory> load_bicategory(const json& j) {
  expect_schema(j, "bicategory.v1", "bicategory");
  auto b = std::make_shared<bicat::FiniteBicategory>();
  b->name = str(j, "name", "");
  for (const auto& o : at(j, "objects", "")) b->objects.push_back(o.get<Id>());
  std::map<Id, int> oix, c1ix, c2ix;
  for (int i = 0; i < b->n_obj(); ++i) oix[b->objects[i]] = i;
  auto lookup = [](const std::map<Id, int>& m, const Id& id, const std::string& p) {
    auto it = m.find(id);
    if (it == m.end()) throw SchemaError("unknown id " + id, p);
    return it->second;
  };
  int k = 0;
  for (const auto& c : at(j, "cells1", "")) {
    std::string p = "/cells1/" + std::to_string(k++);
    c1ix[str(c, "id", p)] = b->n1();
    b->cells1.push_back({str(c, "id", p), lookup(oix, str(c, "src", p), p),
                         lookup(oix, str(c, "dst", p), p)});
  }
  k = 0;
  for (const auto& c : at(j, "cells2", "")) {
    std::string p = "/cells2/" + std::to_string(k++);
    c2ix[str(c, "id", p)] = b->n2();
    b->cells2.push_back({str(c, "id", p), lookup(c1ix, str(c, "src", p), p),
                         lookup(c1ix, str(c, "dst", p), p)});
  }
  b->id1.assign(b->n_obj(), -1);
  for (const auto& [o, f] : at(j, "id1", "").items())
    b->id1[lookup(oix, o, "/id1")] = lookup(c1ix, f.get<Id>(), "/id1");
  b->id2.assign(b->n1(), -1);
  for (const auto& [f, c] : at(j, "id2", "").items())
    b->id2[lookup(c1ix, f, "/id2")] = lookup(c2ix, c.get<Id>(), "/id2");
  b->lunit.assign(b->n1(), -1);
  b->runit.assign(b->n1(), -1);
  for (const auto& [f, c] : at(j, "lunit", "").items())
    b->lunit[lookup(c1ix, f, "/lunit")] = lookup(c2ix, c.get<Id>(), "/lunit");
  for (const auto& [f, c] : at(j, "runit", "").items())
    b->runit[lookup(c1ix, f, "/runit")] = lookup(c2ix, c.get<Id>(), "/runit");
  for (int a = 0; a < b->n_obj(); ++a)
    if (b->id1[a] < 0) throw SchemaError("missing id1 entry", "/id1");
  for (int f = 0; f < b->n1(); ++f)
    if (b->id2[f] < 0 || b->lunit[f] < 0 || b->runit[f] < 0)
      throw SchemaError("missing unit data for " + b->cells1[f].id, "/id2");
  k = 0;
  for (const auto& row : at(j, "vcomp", "")) {
    std::string p = "/vcomp/" + std::to_string(k++);
    b->set_vcomp(lookup(c2ix, row[0].get<Id>(), p), lookup(c2ix, row[1].get<Id>(), p),
                 lookup(c2ix, row[2].get<Id>(), p));
  }
  k = 0;
  for (const auto& row : at(j, "hcomp1", "")) {
    std::string p = "/hcomp1/" + std::to_string(k++);
    b->set_hcomp1(lookup(c1ix, row[0].get<Id>(), p),
                  lookup(c1ix, row[1].get<Id>(), p),
                  lookup(c1ix, row[2].get<Id>(), p));
  }
  k = 0;
  for (const auto& row : at(j, "hcomp2", "")) {
    std::string p = "/hcomp2/" + std::to_string(k++);
    b->set_hcomp2(lookup(c2ix, row[0].get<Id>(), p),
                  lookup(c2ix, row[1].get<Id>(), p),
                  lookup(c2ix, row[2].get<Id>(), p));
  }
  k = 0;
  for (const auto& row : at(j, "assoc", "")) {
    std::string p = "/assoc/" + std::to_string(k++);
    b->set_assoc(lookup(c1ix, row[0].get<Id>(), p), lookup(c1ix, row[1].get<Id>(), p),
                 lookup(c1ix, row[2].get<Id>(), p),
                 lookup(c2ix, row[3].get<Id>(), p));
  }
  b->finalize();
  return b;
}

json save_laxmorphism(const bicat::LaxMorphism& f) {
  json j;
  j["schema"] = "bicategory.v1";
  j["kind"] = "laxmorphism";
  j["name"] = f.name;
  j["direction"] = f.dir == bicat::Dir::Lax ? "lax" : "oplax";
  j["source"] = save_bicategory(*f.src);
  j["target"] = save_bicategory(*f.dst);
  std::map<Id, Id> m0, m1, m2, uc;
  for (int a = 0; a < f.src->n_obj(); ++a)
    m0[f.src->objects[a]] = f.dst->objects[f.map0[a]];
  for (int x = 0; x < f.src->n1(); ++x)
    m1[f.src->cells1[x].id] = f.dst->cells1[f.map1[x]].id;
  for (int x = 0; x < f.src->n2(); ++x)
    m2[f.src->cells2[x].id] = f.dst->cells2[f.map2[x]].id;
  for (int a = 0; a < f.src->n_obj(); ++a)
    uc[f.src->objects[a]] = f.dst->cells2[f.unit_cell[a]].id;
  j["map0"] = id_map(m0);
  j["map1"] = id_map(m1);
  j["map2"] = id_map(m2);
  j["unit_cells"] = id_map(uc);
  std::vector<std::array<Id, 3>> rows;
  for (const auto& [key, c] : f.comp_cell_) {
    int g = static_cast<int>(key >> 21);
    int h = static_cast<int>(key & ((1u << 21) - 1));
    rows.push_back({f.src->cells1[g].id, f.src->cells1[h].id,
                    f.dst->cells2[c].id});
  }
  std::sort(rows.begin(), rows.end());
  j["comp_cells"] = rows;
  return j;
}

bicat::LaxMorphism load_laxmorphism(const json& j) {
  expect_schema(j, "bicategory.v1", "laxmorphism");
  bicat::LaxMorphism f;
  f.name = str(j, "name", "");
  std::string dir = str(j, "direction", "");
  if (dir != "lax" && dir != "oplax")
    throw SchemaError("direction must be lax or oplax", "/direction");
  f.dir = dir == "lax" ? bicat::Dir::Lax : bicat::Dir::Oplax;
  f.src = load_bicategory(at(j, "source", ""));
  f.dst = load_bicategory(at(j, "target", ""));
  f.map0.assign(f.src->n_obj(), -1);
  for (const auto& [a, b] : at(j, "map0", "").items())
    f.map0[f.src->object_index(a)] = f.dst->object_index(b.get<Id>());
  f.map1.assign(f.src->n1(), -1);
  for (const auto& [a, b] : at(j, "map1", "").items())
    f.map1[f.src->cell1_index(a)] = f.dst->cell1_index(b.get<Id>());
  f.map2.assign(f.src->n2(), -1);
  for (const auto& [a, b] : at(j, "map2", "").items())
    f.map2[f.src->cell2_index(a)] = f.dst->cell2_index(b.get<Id>());
  for (const auto& row : at(j, "comp_cells", ""))
    f.set_comp_cell(f.src->cell1_index(row[0].get<Id>()),
                    f.src->cell1_index(row[1].get<Id>()),
                    f.dst->cell2_index(row[2].get<Id>()));
  f.unit_cell.assign(f.src->n_obj(), -1);
  for (const auto& [a, c] : at(j, "unit_cells", "").items())
    f.unit_cell[f.src->object_index(a)] = f.dst->cell2_index(c.get<Id>());
  return f;
}

// --- crossed modules ----------------------------------------------------------------

namespace {
json save_group(const alg::FinGroup& g) {
  json j;
  j["name"] = g.name;
  auto elems = g.elems;
  std::sort(elems.begin(), elems.end());
  j["elems"] = elems;
  j["unit"] = g.elems[g.unit];
  std::vector<std::array<Id, 3>> mul;
  for (int a = 0; a < g.size(); ++a)
    for (int b = 0; b < g.size(); ++b)
      mul.push_back({g.elems[a], g.elems[b], g.elems[g.mul[a][b]]});
  std::sort(mul.begin(), mul.end());
  j["mul"] = mul;
  return j;
}

alg::FinGroup load_group(const json& j, const std::string& path) {
  alg::FinGroup g;
  g.name = str(j, "name", path);
  for (const auto& e : at(j, "elems", path)) g.elems.push_back(e.get<Id>());
  const int n = g.size();
  g.mul.assign(n, std::vector<int>(n, -1));
  for (const auto& row : at(j, "mul", path)) {
    g.mul[g.index_of(row[0].get<Id>())][g.index_of(row[1].get<Id>())] =
        g.index_of(row[2].get<Id>());
  }
  g.unit = g.index_of(at(j, "unit", path).get<Id>());
  g.inv.assign(n, -1);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (g.mul[a][b] == g.unit && g.mul[b][a] == g.unit) g.inv[a] = b;
  for (int a = 0; a < n; ++a)
    if (g.inv[a] < 0)
      throw SchemaError("element without inverse: " + g.elems[a], path + "/mul");
  return g;
}
}  // namespace

json save_xmod(const xmod::CrossedModule& x) {
  json j;
  j["schema"] = "xmod.v1";
  j["kind"] = "xmod";
  j["name"] = x.name;
  j["base"] = save_groupoid(x.base());
  const auto& P = x.base();
  json fibers = json::object(), action = json::object(), boundary = json::object();
  for (int a = 0; a < P.n_obj(); ++a) {
    fibers[P.objects[a]] = save_group(x.g.fiber[a]);
    json bd = json::object();
    for (int g = 0; g < x.g.fiber[a].size(); ++g)
      bd[x.g.fiber[a].elems[g]] = P.mors[x.dd(a, g)].id;
    boundary[P.objects[a]] = bd;
  }
  for (int p = 0; p < P.n_mor(); ++p) {
    json act = json::object();
    const auto& src = x.g.fiber[P.mors[p].src];
    const auto& dst = x.g.fiber[P.mors[p].dst];
    for (int g = 0; g < src.size(); ++g)
      act[src.elems[g]] = dst.elems[x.g.act(p, g)];
    action[P.mors[p].id] = act;
  }
  j["fibers"] = fibers;
  j["action"] = action;
  j["boundary"] = boundary;
  return j;
}

xmod::CrossedModule load_xmod(const json& j) {
  expect_schema(j, "xmod.v1", "xmod");
  xmod::CrossedModule x;
  x.name = str(j, "name", "");
  auto base = std::make_shared<alg::FiniteGroupoid>(load_groupoid(at(j, "base", "")));
  x.g.name = x.name + ".fibers";
  x.g.base = base;
  const auto& P = *base;
  x.g.fiber.resize(P.n_obj());
  for (const auto& [obj, grp] : at(j, "fibers", "").items())
    x.g.fiber[P.object_index(obj)] = load_group(grp, "/fibers/" + obj);
  x.g.action.resize(P.n_mor());
  for (const auto& [mor, act] : at(j, "action", "").items()) {
    int p = P.mor_index(mor);
    const auto& src = x.g.fiber[P.mors[p].src];
    const auto& dst = x.g.fiber[P.mors[p].dst];
    x.g.action[p].assign(src.size(), -1);
    for (const auto& [e, img] : act.items())
      x.g.action[p][src.index_of(e)] = dst.index_of(img.get<Id>());
  }
  x.boundary.resize(P.n_obj());
  for (const auto& [obj, bd] : at(j, "boundary", "").items()) {
    int a = P.object_index(obj);
    x.boundary[a].assign(x.g.fiber[a].size(), -1);
    for (const auto& [e, mor] : bd.items())
      x.boundary[a][x.g.fiber[a].index_of(e)] = P.mor_index(mor.get<Id>());
  }
  return x;
}

json save_xmod_morphism(const xmod::XmodMorphism& m) {
  json j;
  j["schema"] = "xmod.v1";
  j["kind"] = "xmod_morphism";
  j["name"] = m.name;
  j["source"] = save_xmod(*m.src);
  j["target"] = save_xmod(*m.dst);
  const auto& P = m.src->base();
  const auto& Q = m.dst->base();
  std::map<Id, Id> fo, fm;
  for (int a = 0; a < P.n_obj(); ++a) fo[P.objects[a]] = Q.objects[m.F.obj_map[a]];
  for (int p = 0; p < P.n_mor(); ++p) fm[P.mors[p].id] = Q.mors[m.F.mor_map[p]].id;
  j["fmap_obj"] = id_map(fo);
  j["fmap_mor"] = id_map(fm);
  json phi = json::object();
  for (int a = 0; a < P.n_obj(); ++a) {
    json h = json::object();
    for (int g = 0; g < m.src->g.fiber[a].size(); ++g)
      h[m.src->g.fiber[a].elems[g]] =
          m.dst->g.fiber[m.F.obj_map[a]].elems[m.phi[a][g]];
    phi[P.objects[a]] = h;
  }
  j["phi"] = phi;
  return j;
}

xmod::XmodMorphism load_xmod_morphism(const json& j) {
  expect_schema(j, "xmod.v1", "xmod_morphism");
  xmod::XmodMorphism m;
  m.name = str(j, "name", "");
  auto src = std::make_shared<xmod::CrossedModule>(load_xmod(at(j, "source", "")));
  auto dst = std::make_shared<xmod::CrossedModule>(load_xmod(at(j, "target", "")));
  m.src = src;
  m.dst = dst;
  const auto& P = src->base();
  const auto& Q = dst->base();
  m.F.src = src->g.base;
  m.F.dst = dst->g.base;
  m.F.obj_map.assign(P.n_obj(), -1);
  for (const auto& [a, b] : at(j, "fmap_obj", "").items())
    m.F.obj_map[P.object_index(a)] = Q.object_index(b.get<Id>());
  m.F.mor_map.assign(P.n_mor(), -1);
  for (const auto& [p, q] : at(j, "fmap_mor", "").items())
    m.F.mor_map[P.mor_index(p)] = Q.mor_index(q.get<Id>());
  m.phi.resize(P.n_obj());
  for (const auto& [obj, h] : at(j, "phi", "").items()) {
    int a = P.object_index(obj);
    m.phi[a].assign(src->g.fiber[a].size(), -1);
    for (const auto& [e, img] : h.items())
      m.phi[a][src->g.fiber[a].index_of(e)] =
          dst->g.fiber[m.F.obj_map[a]].index_of(img.get<Id>());
  }
  return m;
}

// --- monoidal --------------------------------------------------------------------

json save_monoidal(const monoidal::MonoidalCategory& m) {
  json j = save_category_body(m.cat);
  j["schema"] = "monoidal.v1";
  j["kind"] = "monoidal";
  j["name"] = m.name;
  j["unit"] = m.cat.objects[m.unit];
  std::vector<std::array<Id, 3>> tobj, tmor;
  for (int a = 0; a < m.cat.n_obj(); ++a)
    for (int b = 0; b < m.cat.n_obj(); ++b)
      tobj.push_back({m.cat.objects[a], m.cat.objects[b],
                      m.cat.objects[m.tensor(a, b)]});
  std::sort(tobj.begin(), tobj.end());
  j["tensor_obj"] = tobj;
  for (const auto& [key, r] : m.tensor_mor_) {
    int u = static_cast<int>(key >> 21);
    int v = static_cast<int>(key & ((1u << 21) - 1));
    tmor.push_back({m.cat.mors[u].id, m.cat.mors[v].id, m.cat.mors[r].id});
  }
  std::sort(tmor.begin(), tmor.end());
  j["tensor_mor"] = tmor;
  std::vector<std::array<Id, 4>> arows;
  for (const auto& [key, r] : m.assoc_) {
    int a = static_cast<int>(key >> 42);
    int b = static_cast<int>((key >> 21) & ((1u << 21) - 1));
    int c = static_cast<int>(key & ((1u << 21) - 1));
    arows.push_back({m.cat.objects[a], m.cat.objects[b], m.cat.objects[c],
                     m.cat.mors[r].id});
  }
  std::sort(arows.begin(), arows.end());
  j["assoc"] = arows;
  std::map<Id, Id> lu, ru;
  for (int a = 0; a < m.cat.n_obj(); ++a) {
    lu[m.cat.objects[a]] = m.cat.mors[m.lunit[a]].id;
    ru[m.cat.objects[a]] = m.cat.mors[m.runit[a]].id;
  }
  j["lunit"] = id_map(lu);
  j["runit"] = id_map(ru);
  return j;
}

monoidal::MonoidalCategory load_monoidal(const json& j) {
  expect_schema(j, "monoidal.v1", "monoidal");
  monoidal::MonoidalCategory m;
  load_category_body(j, m.cat);
  m.name = str(j, "name", "");
  m.unit = m.cat.object_index(at(j, "unit", "").get<Id>());
  const int n = m.cat.n_obj();
  m.tensor_obj.assign(n, std::vector<int>(n, -1));
  for (const auto& row : at(j, "tensor_obj", ""))
    m.tensor_obj[m.cat.object_index(row[0].get<Id>())]
                [m.cat.object_index(row[1].get<Id>())] =
        m.cat.object_index(row[2].get<Id>());
  for (const auto& row : at(j, "tensor_mor", ""))
    m.set_tensor_mor(m.cat.mor_index(row[0].get<Id>()),
                     m.cat.mor_index(row[1].get<Id>()),
                     m.cat.mor_index(row[2].get<Id>()));
  for (const auto& row : at(j, "assoc", ""))
    m.assoc_[pack3(m.cat.object_index(row[0].get<Id>()),
                   m.cat.object_index(row[1].get<Id>()),
                   m.cat.object_index(row[2].get<Id>()))] =
        m.cat.mor_index(row[3].get<Id>());
  m.lunit.assign(n, -1);
  m.runit.assign(n, -1);
  for (const auto& [o, mor] : at(j, "lunit", "").items())
    m.lunit[m.cat.object_index(o)] = m.cat.mor_index(mor.get<Id>());
  for (const auto& [o, mor] : at(j, "runit", "").items())
    m.runit[m.cat.object_index(o)] = m.cat.mor_index(mor.get<Id>());
  return m;
}

json save_monoidal_functor(const monoidal::MonoidalFunctor& f) {
  json j;
  j["schema"] = "monoidal.v1";
  j["kind"] = "monoidal_functor";
  j["name"] = f.name;
  j["source"] = save_monoidal(*f.src);
  j["target"] = save_monoidal(*f.dst);
  std::map<Id, Id> om, mm;
  for (int n = 0; n < f.src->cat.n_obj(); ++n)
    om[f.src->cat.objects[n]] = f.dst->cat.objects[f.sigma.map1[n]];
  for (int u = 0; u < f.src->cat.n_mor(); ++u)
    mm[f.src->cat.mors[u].id] = f.dst->cat.mors[f.sigma.map2[u]].id;
  j["obj_map"] = id_map(om);
  j["mor_map"] = id_map(mm);
  std::vector<std::array<Id, 3>> comp;
  for (const auto& [key, c] : f.sigma.comp_cell_) {
    int a = static_cast<int>(key >> 21);
    int b = static_cast<int>(key & ((1u << 21) - 1));
    comp.push_back({f.src->cat.objects[a], f.src->cat.objects[b],
                    f.dst->cat.mors[c].id});
  }
  std::sort(comp.begin(), comp.end());
  j["comp_isos"] = comp;
  j["unit_iso"] = f.dst->cat.mors[f.sigma.unit_cell[0]].id;
  return j;
}

monoidal::MonoidalFunctor load_monoidal_functor(const json& j) {
  expect_schema(j, "monoidal.v1", "monoidal_functor");
  auto src = std::make_shared<monoidal::MonoidalCategory>(
      load_monoidal(at(j, "source", "")));
  auto dst = std::make_shared<monoidal::MonoidalCategory>(
      load_monoidal(at(j, "target", "")));
  auto ssig = monoidal::delooping(*src);
  auto dsig = monoidal::delooping(*dst);
  std::vector<int> om(src->cat.n_obj(), -1), mm(src->cat.n_mor(), -1);
  for (const auto& [a, b] : at(j, "obj_map", "").items())
    om[src->cat.object_index(a)] = dst->cat.object_index(b.get<Id>());
  for (const auto& [u, v] : at(j, "mor_map", "").items())
    mm[src->cat.mor_index(u)] = dst->cat.mor_index(v.get<Id>());
  std::unordered_map<std::uint64_t, int> comp;
  for (const auto& row : at(j, "comp_isos", ""))
    comp[pack2(src->cat.object_index(row[0].get<Id>()),
               src->cat.object_index(row[1].get<Id>()))] =
        dst->cat.mor_index(row[2].get<Id>());
  int unit = dst->cat.mor_index(at(j, "unit_iso", "").get<Id>());
  return monoidal::monoidal_functor(src, ssig, dst, dsig, str(j, "name", ""), om,
                                    mm, comp, unit);
}

// --- simplicial sets ----------------------------------------------------------------

json save_sset(const nerve::TruncatedSimplicialSet& s) {
  json j;
  j["schema"] = "sset.v1";
  j["kind"] = "sset";
  j["name"] = s.name;
  j["N"] = s.N;
  json cells = json::array();
  for (int n = 0; n <= s.N; ++n) {
    auto level = s.cells[n];
    std::sort(level.begin(), level.end());
    cells.push_back(level);
  }
  j["cells"] = cells;
  json faces = json::array(), degens = json::array();
  for (int n = 1; n <= s.N; ++n) {
    json per_i = json::array();
    for (int i = 0; i <= n; ++i) {
      std::map<Id, Id> mp;
      for (int x = 0; x < s.size(n); ++x)
        mp[s.cells[n][x]] = s.cells[n - 1][s.d(n, i, x)];
      per_i.push_back(id_map(mp));
    }
    faces.push_back(per_i);
  }
  for (int n = 0; n < s.N; ++n) {
    json per_i = json::array();
    for (int i = 0; i <= n; ++i) {
      std::map<Id, Id> mp;
      for (int x = 0; x < s.size(n); ++x)
        mp[s.cells[n][x]] = s.cells[n + 1][s.s(n, i, x)];
      per_i.push_back(id_map(mp));
    }
    degens.push_back(per_i);
  }
  j["faces"] = faces;
  j["degeneracies"] = degens;
  return j;
}

nerve::TruncatedSimplicialSet load_sset(const json& j) {
  expect_schema(j, "sset.v1", "sset");
  nerve::TruncatedSimplicialSet s;
  s.name = str(j, "name", "");
  s.N = at(j, "N", "").get<int>();
  s.cells.resize(s.N + 1);
  std::vector<std::map<Id, int>> ix(s.N + 1);
  const auto& cells = at(j, "cells", "");
  if (static_cast<int>(cells.size()) != s.N + 1)
    throw SchemaError("cells must have N+1 levels", "/cells");
  for (int n = 0; n <= s.N; ++n)
    for (const auto& c : cells[n]) {
      ix[n][c.get<Id>()] = static_cast<int>(s.cells[n].size());
      s.cells[n].push_back(c.get<Id>());
    }
  s.face.resize(s.N + 1);
  s.degen.resize(s.N + 1);
  const auto& faces = at(j, "faces", "");
  for (int n = 1; n <= s.N; ++n) {
    s.face[n].assign(n + 1, std::vector<int>(s.size(n), -1));
    for (int i = 0; i <= n; ++i)
      for (const auto& [from, to] : faces[n - 1][i].items())
        s.face[n][i][ix[n].at(from)] = ix[n - 1].at(to.get<Id>());
  }
  const auto& degens = at(j, "degeneracies", "");
  for (int n = 0; n < s.N; ++n) {
    s.degen[n].assign(n + 1, std::vector<int>(s.size(n), -1));
    for (int i = 0; i <= n; ++i)
      for (const auto& [from, to] : degens[n][i].items())
        s.degen[n][i][ix[n].at(from)] = ix[n + 1].at(to.get<Id>());
  }
  return s;
}

ValidationReport validate_file(const json& j) {
  std::string schema = str(j, "schema", "");
  std::string kind = str(j, "kind", "");
  if (schema == "groupoid.v1") {
    if (kind == "graph") {
      auto g = load_graph(j);
      ValidationReport rep;
      rep.subject = g.name;
      if (!g.acyclic()) rep.fail("graph-cyclic", g.name);
      return rep;
    }
    if (kind == "category") return alg::validate_category(load_category(j));
    if (kind == "groupoid") return alg::validate_groupoid(load_groupoid(j));
  } else if (schema == "bicategory.v1") {
    if (kind == "bicategory") return bicat::validate_bicategory(*load_bicategory(j));
    if (kind == "laxmorphism") return bicat::validate_lax(load_laxmorphism(j));
  } else if (schema == "xmod.v1") {
    if (kind == "xmod") return xmod::validate_xmod(load_xmod(j));
    if (kind == "xmod_morphism")
      return xmod::validate_xmod_morphism(load_xmod_morphism(j));
  } else if (schema == "monoidal.v1") {
    if (kind == "monoidal") return monoidal::validate_monoidal(load_monoidal(j));
  } else if (schema == "sset.v1") {
    if (kind == "sset") return nerve::validate_simplicial(load_sset(j));
  }
  throw SchemaError("unknown schema/kind " + schema + "/" + kind, "/schema");
}

}  // namespace hofib::io
