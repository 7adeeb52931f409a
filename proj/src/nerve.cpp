#include "hofib/nerve.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace hofib::nerve {

using bicat::Dir;
using bicat::FiniteBicategory;
using bicat::LaxMorphism;

// --- ordinary nerve ----------------------------------------------------------

TruncatedSimplicialSet ordinary_nerve_sset(const alg::FiniteCategory& c, int N) {
  TruncatedSimplicialSet S;
  S.name = "N(" + c.name + ")";
  S.N = N;
  S.cells.resize(N + 1);
  S.face.resize(N + 1);
  S.degen.resize(N + 1);

  // chains[n][x] = morphism list of the x-th n-cell
  std::vector<std::vector<std::vector<int>>> chains(N + 1);
  std::vector<std::map<std::vector<int>, int>> ix(N + 1);
  for (int o = 0; o < c.n_obj(); ++o) {
    chains[0].push_back({o});  // encode a vertex as a singleton list
    ix[0][{o}] = o;
    S.cells[0].push_back(tup({c.objects[o]}));
  }
  for (int n = 1; n <= N; ++n) {
    if (n == 1) {
      for (int m = 0; m < c.n_mor(); ++m) {
        ix[1][{m}] = static_cast<int>(chains[1].size());
        chains[1].push_back({m});
        S.cells[1].push_back(tup({c.mors[m].id}));
      }
    } else {
      for (const auto& ch : chains[n - 1])
        for (int m = 0; m < c.n_mor(); ++m)
          if (c.mors[m].src == c.mors[ch.back()].dst) {
            auto e = ch;
            e.push_back(m);
            std::vector<Id> parts;
            for (int mm : e) parts.push_back(c.mors[mm].id);
            ix[n][e] = static_cast<int>(chains[n].size());
            chains[n].push_back(e);
            S.cells[n].push_back(tup(parts));
          }
    }
  }
  for (int n = 1; n <= N; ++n) {
    S.face[n].assign(n + 1, std::vector<int>(S.size(n)));
    for (int x = 0; x < S.size(n); ++x) {
      const auto& ch = chains[n][x];
      for (int i = 0; i <= n; ++i) {
        std::vector<int> f;
        if (n == 1) {
          int v = i == 0 ? c.mors[ch[0]].dst : c.mors[ch[0]].src;
          f = {v};
        } else if (i == 0) {
          f.assign(ch.begin() + 1, ch.end());
        } else if (i == n) {
          f.assign(ch.begin(), ch.end() - 1);
        } else {
          f.assign(ch.begin(), ch.end());
          int comp = c.compose(f[i], f[i - 1]);
          f.erase(f.begin() + i);
          f[i - 1] = comp;
        }
        S.face[n][i][x] = ix[n - 1].at(f);
      }
    }
  }
  for (int n = 0; n < N; ++n) {
    S.degen[n].assign(n + 1, std::vector<int>(S.size(n)));
    for (int x = 0; x < S.size(n); ++x) {
      const auto& ch = chains[n][x];
      for (int i = 0; i <= n; ++i) {
        std::vector<int> f;
        if (n == 0) {
          f = {c.identity[ch[0]]};
        } else {
          f = ch;
          int v = i == 0 ? c.mors[ch[0]].src : c.mors[ch[i - 1]].dst;
          f.insert(f.begin() + i, c.identity[v]);
        }
        S.degen[n][i][x] = ix[n + 1].at(f);
      }
    }
  }
  return S;
}

// --- geometric nerve ---------------------------------------------------------

int GeometricNerve::index_of(int dim, const Id& key) const {
  for (int i = 0; i < static_cast<int>(simplices[dim].size()); ++i)
    if (sset.cells[dim][i] == key) return i;
  throw std::out_of_range("geometric nerve: unknown cell key");
}

GeometricNerve geometric_nerve(bicat::BicatPtr B, Variant v, int N,
                               std::size_t max_cells) {
  GeometricNerve out;
  out.variant = v;
  out.B = B;
  Dir dir = (v == Variant::Lax || v == Variant::NormalLax) ? Dir::Lax : Dir::Oplax;
  bool normal = v == Variant::NormalLax || v == Variant::NormalOplax;

  out.simplices.resize(N + 1);
  out.sset.name = "geom-nerve(" + B->name + ")";
  out.sset.N = N;
  out.sset.cells.resize(N + 1);
  out.sset.face.resize(N + 1);
  out.sset.degen.resize(N + 1);
  std::vector<std::map<Id, int>> ix(N + 1);
  for (int p = 0; p <= N; ++p) {
    out.simplices[p] = enumerate_simplices(B, p, dir, normal, max_cells);
    for (int i = 0; i < static_cast<int>(out.simplices[p].size()); ++i) {
      Id k = out.simplices[p][i].key();
      ix[p][k] = i;
      out.sset.cells[p].push_back(k);
    }
  }
  for (int p = 1; p <= N; ++p) {
    out.sset.face[p].assign(p + 1, std::vector<int>(out.sset.size(p)));
    for (int i = 0; i <= p; ++i) {
      Mono d = Mono::coface(p, i);
      for (int x = 0; x < out.sset.size(p); ++x) {
        auto restricted = out.simplices[p][x].restrict_along(d);
        auto it = ix[p - 1].find(restricted.key());
        if (it == ix[p - 1].end())
          throw std::out_of_range("geometric nerve: face not enumerated");
        out.sset.face[p][i][x] = it->second;
      }
    }
  }
  for (int p = 0; p < N; ++p) {
    out.sset.degen[p].assign(p + 1, std::vector<int>(out.sset.size(p)));
    for (int i = 0; i <= p; ++i) {
      Mono s = Mono::codegeneracy(p, i);
      for (int x = 0; x < out.sset.size(p); ++x) {
        auto degenerated = out.simplices[p][x].restrict_along(s);
        auto it = ix[p + 1].find(degenerated.key());
        if (it == ix[p + 1].end())
          throw std::out_of_range("geometric nerve: degeneracy not enumerated");
        out.sset.degen[p][i][x] = it->second;
      }
    }
  }
  return out;
}

// --- pseudo-simplicial nerve ---------------------------------------------------

namespace {

std::vector<int> level_mor_key(int src, int dst, const std::vector<int>& cells) {
  std::vector<int> k{src, dst};
  k.insert(k.end(), cells.begin(), cells.end());
  return k;
}

struct LevelIndex {
  std::map<std::vector<int>, int> obj;  // chain ++ tuple
  std::map<std::vector<int>, int> mor;
};

NerveLevel build_level(const FiniteBicategory& B, int p, LevelIndex& ix,
                       std::size_t max_cells) {
  NerveLevel L;
  L.cat.name = "nerve-level-" + std::to_string(p);
  // objects: chains (x_0..x_p) with a 1-cell tuple (diagram order)
  std::vector<int> chain(p + 1);
  std::vector<int> tuple(p);
  std::function<void(int)> rec_tuple = [&](int k) {
    if (k == p) {
      std::vector<int> key = chain;
      key.insert(key.end(), tuple.begin(), tuple.end());
      ix.obj[key] = L.cat.n_obj();
      L.obj_chain.push_back(chain);
      L.obj_tuple.push_back(tuple);
      std::vector<Id> parts;
      for (int i = 0; i <= p; ++i) parts.push_back(B.objects[chain[i]]);
      for (int i = 0; i < p; ++i) parts.push_back(B.cells1[tuple[i]].id);
      L.cat.objects.push_back(tup(parts));
      if (L.cat.objects.size() > max_cells)
        throw ResourceLimitError("nerve level objects exceed ceiling", max_cells);
      return;
    }
    for (int f : B.hom1(chain[k], chain[k + 1])) {
      tuple[k] = f;
      rec_tuple(k + 1);
    }
  };
  std::function<void(int)> rec_chain = [&](int k) {
    if (k == p + 1) {
      rec_tuple(0);
      return;
    }
    for (int b = 0; b < B.n_obj(); ++b) {
      chain[k] = b;
      rec_chain(k + 1);
    }
  };
  rec_chain(0);

  // morphisms: componentwise 2-cell tuples between objects on the same chain
  for (int X = 0; X < L.cat.n_obj(); ++X)
    for (int Y = 0; Y < L.cat.n_obj(); ++Y) {
      if (L.obj_chain[X] != L.obj_chain[Y]) continue;
      std::vector<int> w(p);
      std::function<void(int)> rec_mor = [&](int k) {
        if (k == p) {
          auto key = level_mor_key(X, Y, w);
          ix.mor[key] = L.cat.n_mor();
          L.mor_tuple.push_back(w);
          L.mor_src.push_back(X);
          L.mor_dst.push_back(Y);
          std::vector<Id> parts{L.cat.objects[X], L.cat.objects[Y]};
          for (int i = 0; i < p; ++i) parts.push_back(B.cells2[w[i]].id);
          L.cat.mors.push_back({tup(parts), X, Y});
          if (L.cat.mors.size() > max_cells)
            throw ResourceLimitError("nerve level morphisms exceed ceiling",
                                     max_cells);
          return;
        }
        for (int c : B.cells2_between(L.obj_tuple[X][k], L.obj_tuple[Y][k])) {
          w[k] = c;
          rec_mor(k + 1);
        }
      };
      rec_mor(0);
    }
  L.cat.identity.resize(L.cat.n_obj());
  for (int X = 0; X < L.cat.n_obj(); ++X) {
    std::vector<int> w(p);
    for (int k = 0; k < p; ++k) w[k] = B.id2[L.obj_tuple[X][k]];
    L.cat.identity[X] = ix.mor.at(level_mor_key(X, X, w));
  }
  for (int m2 = 0; m2 < L.cat.n_mor(); ++m2)
    for (int m1 = 0; m1 < L.cat.n_mor(); ++m1) {
      if (!L.cat.composable(m2, m1)) continue;
      std::vector<int> w(p);
      for (int k = 0; k < p; ++k)
        w[k] = B.vcomp(L.mor_tuple[m2][k], L.mor_tuple[m1][k]);
      L.cat.set_comp(m2, m1,
                     ix.mor.at(level_mor_key(L.mor_src[m1], L.mor_dst[m2], w)));
    }
  return L;
}

}  // namespace

int NerveLevel::find_obj(const std::vector<int>& tuple,
                         const std::vector<int>& chain) const {
  for (int X = 0; X < cat.n_obj(); ++X)
    if (obj_tuple[X] == tuple && obj_chain[X] == chain) return X;
  throw std::out_of_range("nerve level: object not found");
}

PseudoSimplicialNerve grothendieck_nerve(bicat::BicatPtr B, int N,
                                         std::size_t max_cells) {
  PseudoSimplicialNerve out;
  out.N = N;
  out.B = B;
  std::vector<LevelIndex> ix(N + 1);
  for (int p = 0; p <= N; ++p)
    out.level.push_back(build_level(*B, p, ix[p], max_cells));

  const auto& Bb = *B;
  // actions for every monotone map between truncation levels
  for (int p = 0; p <= N; ++p)
    for (int q = 0; q <= N; ++q)
      for (const auto& a : all_monotone(q, p)) {
        LevelFunctor F;
        const auto& Lp = out.level[p];
        const auto& Lq = out.level[q];
        for (int X = 0; X < Lp.cat.n_obj(); ++X) {
          std::vector<int> chain(q + 1), tuple(q);
          for (int i = 0; i <= q; ++i) chain[i] = Lp.obj_chain[X][a.v[i]];
          for (int k = 0; k < q; ++k) {
            if (a.v[k] == a.v[k + 1])
              tuple[k] = Bb.id1[chain[k]];
            else {
              std::vector<int> seg(Lp.obj_tuple[X].begin() + a.v[k],
                                   Lp.obj_tuple[X].begin() + a.v[k + 1]);
              tuple[k] = or_composite1(Bb, seg, chain[k]);
            }
          }
          std::vector<int> key = chain;
          key.insert(key.end(), tuple.begin(), tuple.end());
          F.obj_map.push_back(ix[q].obj.at(key));
        }
        for (int m = 0; m < Lp.cat.n_mor(); ++m) {
          int X = Lp.mor_src[m], Y = Lp.mor_dst[m];
          std::vector<int> w(q);
          for (int k = 0; k < q; ++k) {
            if (a.v[k] == a.v[k + 1])
              w[k] = Bb.id2[Bb.id1[Lp.obj_chain[X][a.v[k]]]];
            else {
              std::vector<int> seg(Lp.mor_tuple[m].begin() + a.v[k],
                                   Lp.mor_tuple[m].begin() + a.v[k + 1]);
              w[k] = or_composite2(Bb, seg, Lp.obj_chain[X][a.v[k]]);
            }
          }
          F.mor_map.push_back(ix[q].mor.at(
              level_mor_key(F.obj_map[X], F.obj_map[Y], w)));
        }
        out.action[a] = std::move(F);
      }

  // constraints chi_{a,b} for composable pairs within the truncation
  for (int p = 0; p <= N; ++p)
    for (int q = 0; q <= N; ++q)
      for (int n = 0; n <= N; ++n)
        for (const auto& a : all_monotone(q, p))
          for (const auto& b : all_monotone(n, q)) {
            std::vector<int> comp;
            const auto& Lp = out.level[p];
            const auto& act_a = out.action.at(a);
            const auto& act_b = out.action.at(b);
            const auto& act_ab = out.action.at(Mono::compose(a, b));
            for (int X = 0; X < Lp.cat.n_obj(); ++X) {
              auto J = generated_by_chain(B, Lp.obj_tuple[X],
                                          Lp.obj_chain[X].front());
              auto y = J.restrict_along(a);
              std::vector<int> w(n);
              for (int k = 0; k < n; ++k) w[k] = nu_cell(y, b.v[k], b.v[k + 1]);
              int src = act_b.obj_map[act_a.obj_map[X]];
              int dst = act_ab.obj_map[X];
              comp.push_back(ix[n].mor.at(level_mor_key(src, dst, w)));
            }
            out.constraint[{a, b}] = std::move(comp);
          }
  return out;
}

ValidationReport check_grothendieck_nerve(const PseudoSimplicialNerve& N) {
  ValidationReport rep;
  rep.subject = "grothendieck-nerve(" + N.B->name + ")";
  for (int p = 0; p <= N.N; ++p) {
    auto lr = alg::validate_category(N.level[p].cat);
    rep.absorb(lr);
  }
  const auto& Bb = *N.B;
  // actions are functors
  for (const auto& [a, F] : N.action) {
    const auto& Lp = N.level[a.p].cat;
    const auto& Lq = N.level[a.q].cat;
    for (int X = 0; X < Lp.n_obj(); ++X)
      if (F.mor_map[Lp.identity[X]] != Lq.identity[F.obj_map[X]])
        rep.fail("action-identity", a.key() + "@" + Lp.objects[X]);
    for (int m2 = 0; m2 < Lp.n_mor(); ++m2)
      for (int m1 = 0; m1 < Lp.n_mor(); ++m1)
        if (Lp.composable(m2, m1) &&
            F.mor_map[Lp.compose(m2, m1)] !=
                Lq.compose(F.mor_map[m2], F.mor_map[m1]))
          rep.fail("action-composition", a.key());
    if (a.q == a.p && a.v == Mono::identity(a.p).v) {
      for (int X = 0; X < Lp.n_obj(); ++X)
        if (F.obj_map[X] != X) rep.fail("identity-action", a.key());
    }
  }
  // constraints: unit, iso, naturality, cocycle
  for (const auto& [key, comp] : N.constraint) {
    const auto& [a, b] = key;
    const auto& Ln = N.level[b.q];
    bool a_is_id = a.q == a.p && a.v == Mono::identity(a.p).v;
    bool b_is_id = b.q == b.p && b.v == Mono::identity(b.p).v;
    for (std::size_t X = 0; X < comp.size(); ++X) {
      // every component invertible (componentwise 2-cell inverses)
      for (int c : Ln.mor_tuple[comp[X]])
        if (Bb.inv2(c) < 0)
          rep.fail("constraint-not-iso", a.key() + "," + b.key());
      if ((a_is_id || b_is_id) &&
          comp[X] != Ln.cat.identity[Ln.mor_src[comp[X]]])
        rep.fail("unit-constraint-not-identity", a.key() + "," + b.key());
    }
    // naturality in level-p morphisms
    const auto& Lp = N.level[a.p].cat;
    const auto& act_a = N.act(a);
    const auto& act_b = N.act(b);
    const auto& act_ab = N.act(Mono::compose(a, b));
    for (int m = 0; m < Lp.n_mor(); ++m) {
      int X = N.level[a.p].mor_src[m], Y = N.level[a.p].mor_dst[m];
      int lhs = Ln.cat.compose(comp[Y], act_b.mor_map[act_a.mor_map[m]]);
      int rhs = Ln.cat.compose(act_ab.mor_map[m], comp[X]);
      if (lhs != rhs)
        rep.fail("constraint-naturality", a.key() + "," + b.key());
    }
  }
  // cocycle squares
  for (const auto& [keyab, chi_ab] : N.constraint) {
    const auto& [a, b] = keyab;
    for (int m = 0; m <= N.N; ++m)
      for (const auto& c : all_monotone(m, b.q)) {
        const auto& chi_abc = N.constraint.at({Mono::compose(a, b), c});
        const auto& chi_bc = N.constraint.at({b, c});
        const auto& chi_a_bc = N.constraint.at({a, Mono::compose(b, c)});
        const auto& act_a = N.act(a);
        const auto& act_c = N.act(c);
        const auto& Lm = N.level[m].cat;
        for (int X = 0; X < N.level[a.p].cat.n_obj(); ++X) {
          int lhs = Lm.compose(chi_abc[X], act_c.mor_map[chi_ab[X]]);
          int rhs = Lm.compose(chi_a_bc[X], chi_bc[act_a.obj_map[X]]);
          if (lhs != rhs)
            rep.fail("cocycle", a.key() + "," + b.key() + "," + c.key(),
                     Lm.mors[lhs].id, Lm.mors[rhs].id);
        }
      }
  }
  return rep;
}

// --- nerve of a lax functor ----------------------------------------------------

NerveOfLax nerve_of_lax(const LaxMorphism& F, const PseudoSimplicialNerve& src,
                        const PseudoSimplicialNerve& dst) {
  if (F.dir != Dir::Lax)
    throw std::invalid_argument("nerve_of_lax: functor must be lax");
  NerveOfLax out;
  out.N = std::min(src.N, dst.N);
  out.src = &src;
  out.dst = &dst;
  const auto& Bb = *F.src;
  (void)Bb;
  for (int p = 0; p <= out.N; ++p) {
    LevelFunctor C;
    const auto& Lp = src.level[p];
    const auto& Lq = dst.level[p];
    for (int X = 0; X < Lp.cat.n_obj(); ++X) {
      std::vector<int> chain(p + 1), tuple(p);
      for (int i = 0; i <= p; ++i) chain[i] = F.map0[Lp.obj_chain[X][i]];
      for (int k = 0; k < p; ++k) tuple[k] = F.map1[Lp.obj_tuple[X][k]];
      C.obj_map.push_back(Lq.find_obj(tuple, chain));
    }
    for (int m = 0; m < Lp.cat.n_mor(); ++m) {
      int X = Lp.mor_src[m], Y = Lp.mor_dst[m];
      std::vector<int> w(p);
      for (int k = 0; k < p; ++k) w[k] = F.map2[Lp.mor_tuple[m][k]];
      // locate in dst level
      bool found = false;
      for (int mm : dst.level[p].cat.hom(C.obj_map[X], C.obj_map[Y]))
        if (dst.level[p].mor_tuple[mm] == w) {
          C.mor_map.push_back(mm);
          found = true;
          break;
        }
      if (!found) throw std::out_of_range("nerve_of_lax: missing morphism image");
    }
    out.component.push_back(std::move(C));
  }
  for (int p = 0; p <= out.N; ++p)
    for (int q = 0; q <= out.N; ++q)
      for (const auto& a : all_monotone(q, p)) {
        std::vector<int> comp;
        const auto& Lp = src.level[p];
        for (int X = 0; X < Lp.cat.n_obj(); ++X) {
          auto J = generated_by_chain(F.src, Lp.obj_tuple[X],
                                      Lp.obj_chain[X].front());
          auto z = compose_simplex(F, J);
          std::vector<int> w(q);
          for (int k = 0; k < q; ++k) w[k] = nu_cell(z, a.v[k], a.v[k + 1]);
          int s = dst.act(a).obj_map[out.component[p].obj_map[X]];
          int d = out.component[q].obj_map[src.act(a).obj_map[X]];
          bool found = false;
          for (int mm : dst.level[q].cat.hom(s, d))
            if (dst.level[q].mor_tuple[mm] == w) {
              comp.push_back(mm);
              found = true;
              break;
            }
          if (!found)
            throw std::out_of_range("nerve_of_lax: missing constraint cell");
        }
        out.constraint[a] = std::move(comp);
      }
  return out;
}

ValidationReport check_nerve_of_lax(const NerveOfLax& nf) {
  ValidationReport rep;
  rep.subject = "nerve-of-lax";
  const auto& src = *nf.src;
  const auto& dst = *nf.dst;
  // components are functors
  for (int p = 0; p <= nf.N; ++p) {
    const auto& Lp = src.level[p].cat;
    const auto& Lq = dst.level[p].cat;
    const auto& C = nf.component[p];
    for (int X = 0; X < Lp.n_obj(); ++X)
      if (C.mor_map[Lp.identity[X]] != Lq.identity[C.obj_map[X]])
        rep.fail("component-identity", std::to_string(p));
    for (int m2 = 0; m2 < Lp.n_mor(); ++m2)
      for (int m1 = 0; m1 < Lp.n_mor(); ++m1)
        if (Lp.composable(m2, m1) &&
            C.mor_map[Lp.compose(m2, m1)] !=
                Lq.compose(C.mor_map[m2], C.mor_map[m1]))
          rep.fail("component-composition", std::to_string(p));
  }
  // identity mono: constraint is the identity
  for (int p = 0; p <= nf.N; ++p) {
    const auto& comp = nf.constraint.at(Mono::identity(p));
    const auto& Lq = dst.level[p].cat;
    for (std::size_t X = 0; X < comp.size(); ++X)
      if (comp[X] != Lq.identity[Lq.mors[comp[X]].src])
        rep.fail("identity-constraint", std::to_string(p));
  }
  // naturality of each constraint
  for (const auto& [a, comp] : nf.constraint) {
    const auto& Lp = src.level[a.p].cat;
    const auto& Ln = dst.level[a.q].cat;
    for (int m = 0; m < Lp.n_mor(); ++m) {
      int X = src.level[a.p].mor_src[m], Y = src.level[a.p].mor_dst[m];
      int lhs = Ln.compose(comp[Y],
                           dst.act(a).mor_map[nf.component[a.p].mor_map[m]]);
      int rhs = Ln.compose(nf.component[a.q].mor_map[src.act(a).mor_map[m]],
                           comp[X]);
      if (lhs != rhs) rep.fail("constraint-naturality", a.key());
    }
  }
  // coherence against the two cocycles
  for (const auto& [a, compa] : nf.constraint) {
    for (int m = 0; m <= nf.N; ++m)
      for (const auto& b : all_monotone(m, a.q)) {
        const auto& Lm = dst.level[m].cat;
        const auto& ab = nf.constraint.at(Mono::compose(a, b));
        const auto& compb = nf.constraint.at(b);
        const auto& chi_src = src.constraint.at({a, b});
        const auto& chi_dst = dst.constraint.at({a, b});
        for (int X = 0; X < src.level[a.p].cat.n_obj(); ++X) {
          int lhs = Lm.compose(
              nf.component[m].mor_map[chi_src[X]],
              Lm.compose(compb[src.act(a).obj_map[X]],
                         dst.act(b).mor_map[compa[X]]));
          int rhs = Lm.compose(ab[X], chi_dst[nf.component[a.p].obj_map[X]]);
          if (lhs != rhs) rep.fail("lax-simplicial-coherence", a.key() + "," + b.key());
        }
      }
  }
  return rep;
}

ValidationReport check_nerve_functoriality(const LaxMorphism& F,
                                           const LaxMorphism& G,
                                           const PseudoSimplicialNerve& nb,
                                           const PseudoSimplicialNerve& nc,
                                           const PseudoSimplicialNerve& nd) {
  ValidationReport rep;
  rep.subject = "nerve-functoriality(" + G.name + "." + F.name + ")";
  auto nf = nerve_of_lax(F, nb, nc);
  auto ng = nerve_of_lax(G, nc, nd);
  auto ngf = nerve_of_lax(bicat::compose_lax(G, F), nb, nd);
  int N = std::min(nf.N, ng.N);
  for (int p = 0; p <= N; ++p) {
    for (std::size_t X = 0; X < ngf.component[p].obj_map.size(); ++X)
      if (ngf.component[p].obj_map[X] !=
          ng.component[p].obj_map[nf.component[p].obj_map[X]])
        rep.fail("composite-objects", std::to_string(p));
    for (std::size_t m = 0; m < ngf.component[p].mor_map.size(); ++m)
      if (ngf.component[p].mor_map[m] !=
          ng.component[p].mor_map[nf.component[p].mor_map[m]])
        rep.fail("composite-morphisms", std::to_string(p));
  }
  for (const auto& [a, comp] : ngf.constraint) {
    const auto& Lm = nd.level[a.q].cat;
    const auto& cf = nf.constraint.at(a);
    const auto& cg = ng.constraint.at(a);
    for (std::size_t X = 0; X < comp.size(); ++X) {
      int rhs = Lm.compose(ng.component[a.q].mor_map[cf[X]],
                           cg[nf.component[a.p].obj_map[X]]);
      if (comp[X] != rhs)
        rep.fail("composite-constraint", a.key(), Lm.mors[comp[X]].id,
                 Lm.mors[rhs].id);
    }
  }
  // nerve of the identity is the identity
  auto n1 = nerve_of_lax(LaxMorphism::identity(F.src, Dir::Lax), nb, nb);
  for (int p = 0; p <= n1.N; ++p) {
    for (std::size_t X = 0; X < n1.component[p].obj_map.size(); ++X)
      if (n1.component[p].obj_map[X] != static_cast<int>(X))
        rep.fail("identity-nerve-objects", std::to_string(p));
    for (std::size_t m = 0; m < n1.component[p].mor_map.size(); ++m)
      if (n1.component[p].mor_map[m] != static_cast<int>(m))
        rep.fail("identity-nerve-morphisms", std::to_string(p));
  }
  for (const auto& [a, comp] : n1.constraint) {
    const auto& Lm = nb.level[a.q].cat;
    for (std::size_t X = 0; X < comp.size(); ++X)
      if (comp[X] != Lm.identity[Lm.mors[comp[X]].src])
        rep.fail("identity-nerve-constraint", a.key());
  }
  return rep;
}

// --- free-category adjunction ---------------------------------------------------

namespace {

struct PathCat {
  alg::FiniteCategory cat;
  std::vector<std::vector<int>> paths;
};

// J(f) for a graph map f into B, over the discrete bicategory of the free
// category.
LaxMorphism j_of_graph_map(const alg::FiniteGraph& g, const PathCat& I,
                           bicat::BicatPtr discI, bicat::BicatPtr B,
                           const std::vector<int>& vmap,
                           const std::vector<int>& emap) {
  const auto& Bb = *B;
  LaxMorphism J;
  J.name = "J(graph-map)";
  J.dir = Dir::Lax;
  J.src = discI;
  J.dst = B;
  J.map0 = vmap;
  J.map1.resize(I.cat.n_mor());
  J.map2.resize(I.cat.n_mor());
  for (int m = 0; m < I.cat.n_mor(); ++m) {
    std::vector<int> cells;
    for (int e : I.paths[m]) cells.push_back(emap[e]);
    J.map1[m] = or_composite1(Bb, cells, vmap[I.cat.mors[m].src]);
    J.map2[m] = Bb.id2[J.map1[m]];
  }
  std::function<int(const std::vector<int>&, const std::vector<int>&, int)> jc =
      [&](const std::vector<int>& a, const std::vector<int>& b, int src_obj) -> int {
    // structure cell for the composable pair (a after b), paths of edges
    auto val = [&](const std::vector<int>& path, int obj) {
      std::vector<int> cells;
      for (int e : path) cells.push_back(emap[e]);
      return or_composite1(Bb, cells, obj);
    };
    int mid_obj = b.empty() ? src_obj : g.edges[b.back()].dst;
    if (a.empty()) return Bb.lunit[val(b, src_obj)];
    if (b.empty()) return Bb.runit[val(a, mid_obj)];
    if (a.size() == 1) {
      std::vector<int> ab = b;
      ab.push_back(a[0]);
      return Bb.id2[val(ab, src_obj)];
    }
    std::vector<int> aprefix(a.begin(), a.end() - 1);
    std::vector<int> abp = b;
    abp.insert(abp.end(), aprefix.begin(), aprefix.end());
    int last = emap[a.back()];
    return Bb.vcomp(
        Bb.hcomp2(Bb.id2[last], jc(aprefix, b, src_obj)),
        Bb.assoc(last, val(aprefix, mid_obj), val(b, src_obj)));
  };
  for (int m2 = 0; m2 < I.cat.n_mor(); ++m2)
    for (int m1 = 0; m1 < I.cat.n_mor(); ++m1) {
      if (!I.cat.composable(m2, m1)) continue;
      int src_obj = vmap[I.cat.mors[m1].src];
      J.set_comp_cell(m2, m1, jc(I.paths[m2], I.paths[m1], src_obj));
    }
  for (int v = 0; v < I.cat.n_obj(); ++v)
    J.unit_cell.push_back(Bb.id2[Bb.id1[vmap[v]]]);
  return J;
}

// Counit components of an arbitrary lax functor F over Disc(I).
std::vector<int> nu_components(const PathCat& I, const LaxMorphism& F) {
  const auto& Bb = *F.dst;
  std::vector<int> out(I.cat.n_mor(), -1);
  // morphism index by path content
  std::map<std::vector<int>, int> by_path;
  for (int m = 0; m < I.cat.n_mor(); ++m) by_path[I.paths[m]] = m;
  std::function<int(int)> nu = [&](int m) -> int {
    if (out[m] >= 0) return out[m];
    const auto& path = I.paths[m];
    int res;
    if (path.empty())
      res = F.unit_cell[I.cat.mors[m].src];
    else if (path.size() == 1)
      res = Bb.id2[F.map1[m]];
    else {
      std::vector<int> prefix(path.begin(), path.end() - 1);
      int mp = by_path.at(prefix);
      int mlast = by_path.at(std::vector<int>{path.back()});
      res = Bb.vcomp(F.comp_cell(mlast, mp),
                     Bb.hcomp2(Bb.id2[F.map1[mlast]], nu(mp)));
    }
    out[m] = res;
    return res;
  };
  for (int m = 0; m < I.cat.n_mor(); ++m) nu(m);
  return out;
}

}  // namespace

ValidationReport check_graph_adjunction(const alg::FiniteGraph& g,
                                        bicat::BicatPtr B, std::size_t max_cells) {
  ValidationReport rep;
  rep.subject = "graph-adjunction(" + g.name + "," + B->name + ")";
  PathCat I;
  I.cat = alg::free_category(g, &I.paths);
  auto discI = bicat::discrete_bicategory(I.cat);
  const auto& Bb = *B;

  // enumerate graph maps
  std::vector<std::vector<int>> vmaps;
  {
    std::vector<int> v(g.vertices.size());
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
      if (i == g.vertices.size()) {
        vmaps.push_back(v);
        return;
      }
      for (int b = 0; b < Bb.n_obj(); ++b) {
        v[i] = b;
        rec(i + 1);
      }
    };
    rec(0);
  }
  std::size_t count = 0;
  for (const auto& vmap : vmaps) {
    std::vector<int> emap(g.edges.size(), -1);
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
      if (i == g.edges.size()) {
        if (++count > max_cells)
          throw ResourceLimitError("graph maps exceed ceiling", max_cells);
        auto J = j_of_graph_map(g, I, discI, B, vmap, emap);
        auto jrep = validate_lax(J);
        if (!jrep.ok()) {
          rep.fail("j-image-not-valid", J.name);
          return;
        }
        if (!J.normal() || !J.pseudo())
          rep.fail("j-image-not-unitary-pseudo", J.name);
        // RJ = 1: the restriction returns the same graph map.
        for (std::size_t e = 0; e < g.edges.size(); ++e) {
          std::vector<int> single{static_cast<int>(e)};
          int m = -1;
          for (int mm = 0; mm < I.cat.n_mor(); ++mm)
            if (I.paths[mm] == single) m = mm;
          if (J.map1[m] != emap[e]) rep.fail("RJ-not-identity", g.edges[e].id);
        }
        // nu at J(f) is the identity icon.
        auto nu = nu_components(I, J);
        for (int m = 0; m < I.cat.n_mor(); ++m)
          if (nu[m] != Bb.id2[J.map1[m]]) {
            rep.fail("nuJ-not-identity", I.cat.mors[m].id);
            break;
          }
      } else {
        for (int c : Bb.hom1(vmap[g.edges[i].src], vmap[g.edges[i].dst])) {
          emap[i] = c;
          rec(i + 1);
        }
      }
    };
    rec(0);
  }
  return rep;
}

ValidationReport check_level_adjunction(bicat::BicatPtr B, int p,
                                        std::size_t max_cells) {
  ValidationReport rep;
  rep.subject = "level-adjunction(" + B->name + ",[" + std::to_string(p) + "])";
  const auto& Bb = *B;
  auto laxes = enumerate_simplices(B, p, Dir::Lax, false, max_cells);

  // graph maps of the linear graph = 1-cell chains
  struct Chain {
    std::vector<int> verts;
    std::vector<int> cells;
  };
  std::vector<Chain> chains;
  {
    Chain c;
    c.verts.assign(p + 1, -1);
    c.cells.assign(p, -1);
    std::function<void(int)> rec = [&](int i) {
      if (i == p) {
        chains.push_back(c);
        return;
      }
      for (int f : Bb.hom1(c.verts[i], c.verts[i + 1])) {
        c.cells[i] = f;
        rec(i + 1);
      }
    };
    std::function<void(int)> recv = [&](int i) {
      if (i == p + 1) {
        rec(0);
        return;
      }
      for (int b = 0; b < Bb.n_obj(); ++b) {
        c.verts[i] = b;
        recv(i + 1);
      }
    };
    recv(0);
  }

  // icons J(x) => F, enumerated by DFS over the morphism slots of [p]
  auto enumerate_icons = [&](const SimplexFunctor& F, const SimplexFunctor& G) {
    std::vector<std::pair<int, int>> slots;
    for (int s = 0; s <= p; ++s)
      for (int i = 0; i + s <= p; ++i) slots.push_back({i, i + s});
    std::sort(slots.begin(), slots.end(), [](auto x, auto y) {
      return (x.second - x.first) < (y.second - y.first);
    });
    std::vector<std::vector<int>> result;
    std::vector<int> phi((p + 1) * (p + 1), -1);
    auto at = [&](int i, int j) -> int& { return phi[i * (p + 1) + j]; };
    std::function<void(std::size_t)> rec = [&](std::size_t t) {
      if (t == slots.size()) {
        result.push_back(phi);
        return;
      }
      auto [i, j] = slots[t];
      for (int c : Bb.cells2_between(F.e(i, j), G.e(i, j))) {
        at(i, j) = c;
        bool ok = true;
        if (i == j)  // unit triangle
          ok = Bb.vcomp(c, F.unit[i]) == G.unit[i];
        // composition squares with fully assigned participants
        for (int m = i; m <= j && ok; ++m) {
          if (at(i, m) < 0 || at(m, j) < 0) continue;
          int lhs = Bb.vcomp(G.c(i, m, j), Bb.hcomp2(at(m, j), at(i, m)));
          int rhs = Bb.vcomp(at(i, j), F.c(i, m, j));
          if (lhs != rhs) ok = false;
        }
        if (ok) rec(t + 1);
      }
      at(i, j) = -1;
    };
    rec(0);
    return result;
  };

  for (const auto& ch : chains) {
    auto Jx = generated_by_chain(B, ch.cells, ch.verts[0]);
    for (const auto& F : laxes) {
      if (F.vertex != ch.verts) continue;
      // hom in the graph-map category: per-edge 2-cells x_e => (RF)_e
      std::vector<std::vector<int>> edge_choices(p);
      long long homg = 1;
      for (int k = 0; k < p; ++k) {
        for (int c : Bb.cells2_between(ch.cells[k], F.e(k, k + 1)))
          edge_choices[k].push_back(c);
        homg *= static_cast<long long>(edge_choices[k].size());
      }
      auto icons = enumerate_icons(Jx, F);
      if (static_cast<long long>(icons.size()) != homg) {
        rep.fail("hom-set-sizes", F.key());
        continue;
      }
      // fwd: restrict; bwd: nu_F . J(phi); check both round-trips.
      // J(phi) component at (i,j) = or-composite of the per-edge cells.
      std::vector<int> pick(p, 0);
      std::function<void(int)> walk = [&](int k) {
        if (k == p) {
          // bwd
          std::vector<int> icon((p + 1) * (p + 1), -1);
          for (int i = 0; i <= p; ++i)
            for (int j = i; j <= p; ++j) {
              std::vector<int> w;
              for (int m = i; m < j; ++m) w.push_back(edge_choices[m][pick[m]]);
              int jphi = or_composite2(Bb, w, ch.verts[i]);
              icon[i * (p + 1) + j] = Bb.vcomp(nu_cell(F, i, j), jphi);
            }
          // must be one of the enumerated icons
          bool found = false;
          for (const auto& ic : icons)
            if (ic == icon) found = true;
          if (!found) {
            rep.fail("bwd-not-icon", F.key());
            return;
          }
          // fwd . bwd = id
          for (int m = 0; m < p; ++m)
            if (icon[m * (p + 1) + m + 1] != edge_choices[m][pick[m]])
              rep.fail("fwd-bwd-roundtrip", F.key());
          return;
        }
        for (std::size_t c = 0; c < edge_choices[k].size(); ++c) {
          pick[k] = static_cast<int>(c);
          walk(k + 1);
        }
      };
      if (p > 0) walk(0);
      // bwd . fwd = id: icons are determined by their restriction (the fwd
      // map is injective since the counts match and fwd is surjective-by-
      // roundtrip; verify injectivity directly).
      std::map<std::vector<int>, int> seen;
      for (const auto& ic : icons) {
        std::vector<int> restr;
        for (int m = 0; m < p; ++m) restr.push_back(ic[m * (p + 1) + m + 1]);
        if (seen.count(restr)) rep.fail("fwd-not-injective", F.key());
        seen[restr] = 1;
      }
    }
  }
  return rep;
}

// --- icon category and nerve projection ------------------------------------------

IconCategory icon_category(bicat::BicatPtr B, int p, std::size_t max_cells) {
  const auto& Bb = *B;
  IconCategory out;
  out.cat.name = "icons([" + std::to_string(p) + "]," + B->name + ")";
  out.objs = enumerate_simplices(B, p, Dir::Lax, false, max_cells);
  for (const auto& f : out.objs) out.cat.objects.push_back(f.key());

  std::vector<std::pair<int, int>> slots;
  for (int s = 0; s <= p; ++s)
    for (int i = 0; i + s <= p; ++i) slots.push_back({i, i + s});

  auto icons_between = [&](const SimplexFunctor& F, const SimplexFunctor& G) {
    std::vector<std::vector<int>> result;
    if (F.vertex != G.vertex) return result;
    for (auto [i, j] : slots)
      if (Bb.cells2_between(F.e(i, j), G.e(i, j)).empty()) return result;
    std::vector<int> phi((p + 1) * (p + 1), -1);
    auto at = [&](int i, int j) -> int& { return phi[i * (p + 1) + j]; };
    std::function<void(std::size_t)> rec = [&](std::size_t t) {
      if (t == slots.size()) {
        result.push_back(phi);
        return;
      }
      auto [i, j] = slots[t];
      for (int c : Bb.cells2_between(F.e(i, j), G.e(i, j))) {
        at(i, j) = c;
        bool ok = true;
        if (i == j) ok = Bb.vcomp(c, F.unit[i]) == G.unit[i];
        for (int m = i; m <= j && ok; ++m) {
          if (at(i, m) < 0 || at(m, j) < 0) continue;
          int lhs = Bb.vcomp(G.c(i, m, j), Bb.hcomp2(at(m, j), at(i, m)));
          int rhs = Bb.vcomp(at(i, j), F.c(i, m, j));
          if (lhs != rhs) ok = false;
        }
        if (ok) rec(t + 1);
      }
      at(i, j) = -1;
    };
    rec(0);
    return result;
  };

  std::map<std::vector<int>, int> mor_ix;  // (src,dst,phi...) -> index
  for (int X = 0; X < out.cat.n_obj(); ++X)
    for (int Y = 0; Y < out.cat.n_obj(); ++Y) {
      for (auto& phi : icons_between(out.objs[X], out.objs[Y])) {
        std::vector<int> key{X, Y};
        key.insert(key.end(), phi.begin(), phi.end());
        mor_ix[key] = out.cat.n_mor();
        std::vector<Id> parts{out.cat.objects[X], out.cat.objects[Y]};
        for (auto [i, j] : slots)
          parts.push_back(Bb.cells2[phi[i * (p + 1) + j]].id);
        out.cat.mors.push_back({tup(parts), X, Y});
        out.icon_cells.push_back(std::move(phi));
        if (out.cat.mors.size() > max_cells)
          throw ResourceLimitError("icon category exceeds ceiling", max_cells);
      }
    }
  out.cat.identity.resize(out.cat.n_obj());
  for (int X = 0; X < out.cat.n_obj(); ++X) {
    std::vector<int> phi((p + 1) * (p + 1), -1);
    for (auto [i, j] : slots) phi[i * (p + 1) + j] = Bb.id2[out.objs[X].e(i, j)];
    std::vector<int> key{X, X};
    key.insert(key.end(), phi.begin(), phi.end());
    out.cat.identity[X] = mor_ix.at(key);
  }
  for (int m2 = 0; m2 < out.cat.n_mor(); ++m2)
    for (int m1 = 0; m1 < out.cat.n_mor(); ++m1) {
      if (!out.cat.composable(m2, m1)) continue;
      std::vector<int> phi((p + 1) * (p + 1), -1);
      for (auto [i, j] : slots)
        phi[i * (p + 1) + j] = Bb.vcomp(out.icon_cells[m2][i * (p + 1) + j],
                                        out.icon_cells[m1][i * (p + 1) + j]);
      std::vector<int> key{out.cat.mors[m1].src, out.cat.mors[m2].dst};
      key.insert(key.end(), phi.begin(), phi.end());
      out.cat.set_comp(m2, m1, mor_ix.at(key));
    }
  return out;
}

ValidationReport check_nerve_projection(bicat::BicatPtr B, int N,
                                        std::size_t max_cells) {
  ValidationReport rep;
  rep.subject = "nerve-projection(" + B->name + ")";
  auto psn = grothendieck_nerve(B, N, max_cells);
  const auto& Bb = *B;

  std::vector<IconCategory> icat;
  for (int p = 0; p <= N; ++p) icat.push_back(icon_category(B, p, max_cells));
  for (int p = 0; p <= N; ++p) {
    auto cr = alg::validate_category(icat[p].cat);
    rep.absorb(cr);
  }

  // R_p : icons -> nerve level p
  std::vector<LevelFunctor> R(N + 1);
  for (int p = 0; p <= N; ++p) {
    for (const auto& f : icat[p].objs) {
      std::vector<int> tuple(p);
      for (int k = 0; k < p; ++k) tuple[k] = f.e(k, k + 1);
      R[p].obj_map.push_back(psn.level[p].find_obj(tuple, f.vertex));
    }
    for (int m = 0; m < icat[p].cat.n_mor(); ++m) {
      int X = icat[p].cat.mors[m].src, Y = icat[p].cat.mors[m].dst;
      std::vector<int> w(p);
      for (int k = 0; k < p; ++k)
        w[k] = icat[p].icon_cells[m][k * (p + 1) + k + 1];
      bool found = false;
      for (int mm : psn.level[p].cat.hom(R[p].obj_map[X], R[p].obj_map[Y]))
        if (psn.level[p].mor_tuple[mm] == w) {
          R[p].mor_map.push_back(mm);
          found = true;
          break;
        }
      if (!found) {
        rep.fail("projection-image-missing", icat[p].cat.mors[m].id);
        return rep;
      }
    }
    // functor laws
    for (int X = 0; X < icat[p].cat.n_obj(); ++X)
      if (R[p].mor_map[icat[p].cat.identity[X]] !=
          psn.level[p].cat.identity[R[p].obj_map[X]])
        rep.fail("projection-identity", std::to_string(p));
    for (int m2 = 0; m2 < icat[p].cat.n_mor(); ++m2)
      for (int m1 = 0; m1 < icat[p].cat.n_mor(); ++m1)
        if (icat[p].cat.composable(m2, m1) &&
            R[p].mor_map[icat[p].cat.compose(m2, m1)] !=
                psn.level[p].cat.compose(R[p].mor_map[m2], R[p].mor_map[m1]))
          rep.fail("projection-composition", std::to_string(p));
  }

  // R-hat at a : [q] -> [p]: per lax functor x, the nerve-level morphism
  // with components nu_x(a(k-1),a(k)).
  for (int p = 0; p <= N; ++p)
    for (int q = 0; q <= N; ++q)
      for (const auto& a : all_monotone(q, p)) {
        std::vector<int> rhat;
        for (const auto& x : icat[p].objs) {
          std::vector<int> w(q);
          for (int k = 0; k < q; ++k) w[k] = nu_cell(x, a.v[k], a.v[k + 1]);
          int X = static_cast<int>(&x - icat[p].objs.data());
          int s = psn.act(a).obj_map[R[p].obj_map[X]];
          // target: R_q(a* x)
          auto ax = x.restrict_along(a);
          std::vector<int> tuple(q);
          for (int k = 0; k < q; ++k) tuple[k] = ax.e(k, k + 1);
          int d = psn.level[q].find_obj(tuple, ax.vertex);
          bool found = false;
          for (int mm : psn.level[q].cat.hom(s, d))
            if (psn.level[q].mor_tuple[mm] == w) {
              rhat.push_back(mm);
              found = true;
              break;
            }
          if (!found) {
            rep.fail("rhat-missing", a.key());
            return rep;
          }
        }
        // identity mono: R-hat = 1
        bool a_is_id = a.q == a.p && a.v == Mono::identity(a.p).v;
        if (a_is_id)
          for (std::size_t X = 0; X < rhat.size(); ++X)
            if (rhat[X] !=
                psn.level[a.q].cat.identity[psn.level[a.q].mor_src[rhat[X]]])
              rep.fail("rhat-identity", a.key());
        // coherence square against chi, for every b : [n] -> [q]
        for (int n = 0; n <= N; ++n)
          for (const auto& b : all_monotone(n, a.q)) {
            const auto& Lm = psn.level[n].cat;
            const auto& chi = psn.constraint.at({a, b});
            for (int X = 0; X < icat[p].cat.n_obj(); ++X) {
              // lhs: Ner_b(rhat_a[X]) then rhat_b at a* x
              auto ax = icat[p].objs[X].restrict_along(a);
              std::vector<int> w(n);
              for (int k = 0; k < n; ++k) w[k] = nu_cell(ax, b.v[k], b.v[k + 1]);
              // rhat_b at the object a* x: same formula with nu of ax
              std::vector<int> tuple(n);
              auto bax = ax.restrict_along(b);
              for (int k = 0; k < n; ++k) tuple[k] = bax.e(k, k + 1);
              int dd = psn.level[n].find_obj(tuple, bax.vertex);
              int ss = psn.act(b).obj_map[psn.level[a.q].mor_dst[rhat[X]]];
              int rhat_b_ax = -1;
              for (int mm : psn.level[n].cat.hom(ss, dd))
                if (psn.level[n].mor_tuple[mm] == w) {
                  rhat_b_ax = mm;
                  break;
                }
              if (rhat_b_ax < 0) {
                rep.fail("rhat-b-missing", b.key());
                return rep;
              }
              int lhs = Lm.compose(rhat_b_ax, psn.act(b).mor_map[rhat[X]]);
              // rhs: chi_{a,b} at R_p x, then rhat_{ab}
              auto abx = icat[p].objs[X].restrict_along(Mono::compose(a, b));
              std::vector<int> w2(n);
              for (int k = 0; k < n; ++k) {
                auto ab = Mono::compose(a, b);
                w2[k] = nu_cell(icat[p].objs[X], ab.v[k], ab.v[k + 1]);
              }
              std::vector<int> tuple2(n);
              for (int k = 0; k < n; ++k) tuple2[k] = abx.e(k, k + 1);
              int d2 = psn.level[n].find_obj(tuple2, abx.vertex);
              int s2 = psn.act(Mono::compose(a, b)).obj_map[R[p].obj_map[X]];
              int rhat_ab = -1;
              for (int mm : psn.level[n].cat.hom(s2, d2))
                if (psn.level[n].mor_tuple[mm] == w2) {
                  rhat_ab = mm;
                  break;
                }
              if (rhat_ab < 0) {
                rep.fail("rhat-ab-missing", a.key() + b.key());
                return rep;
              }
              int rhs = Lm.compose(rhat_ab, chi[R[p].obj_map[X]]);
              if (lhs != rhs)
                rep.fail("projection-coherence", a.key() + "," + b.key(),
                         Lm.mors[lhs].id, Lm.mors[rhs].id);
            }
          }
      }
  (void)Bb;
  return rep;
}

}  // namespace hofib::nerve
