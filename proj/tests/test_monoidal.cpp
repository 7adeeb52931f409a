#include <doctest.h>

#include "hofib/comma.hpp"
#include "hofib/monoidal.hpp"

using namespace hofib;
using namespace hofib::monoidal;
using bicat::Dir;
using bicat::LaxMorphism;

namespace {

struct Pack {
  std::shared_ptr<const MonoidalCategory> m;
  bicat::BicatPtr sigma;
};

Pack pack(MonoidalCategory m) {
  auto sp = std::make_shared<MonoidalCategory>(std::move(m));
  return {sp, delooping(*sp)};
}

}  // namespace

TEST_CASE("monoidal validation through the delooping") {
  CHECK(validate_monoidal(MonoidalCategory::from_group(alg::FinGroup::cyclic(2))).ok());
  CHECK(validate_monoidal(MonoidalCategory::cocycle_toy()).ok());
  CHECK(validate_monoidal(MonoidalCategory::cocycle_toy_skewed()).ok());
  CHECK(validate_monoidal(MonoidalCategory::truncated_addition(3)).ok());
  CHECK(validate_monoidal(terminal_monoidal()).ok());
}

TEST_CASE("delooping of a discrete group: identities as 2-cells, roundtrip hom") {
  auto m = MonoidalCategory::from_group(alg::FinGroup::cyclic(2));
  auto b = delooping(m);
  CHECK(b->n_obj() == 1);
  CHECK(b->n1() == 2);
  CHECK(b->n2() == 2);
  // the hom-category at (*,*) is the underlying category
  CHECK(static_cast<int>(b->hom1(0, 0).size()) == m.cat.n_obj());
}

TEST_CASE("delooping transports a nontrivial associator verbatim") {
  auto m = MonoidalCategory::cocycle_toy();
  auto b = delooping(m);
  CHECK(b->assoc(1, 1, 1) == m.assoc(1, 1, 1));
  CHECK(validate_bicategory(*b).ok());
}

TEST_CASE("monoidal fibre equals the comma of the deloopings, cell for cell") {
  auto z2 = pack(MonoidalCategory::from_group(alg::FinGroup::cyclic(2)));
  auto z4 = pack(MonoidalCategory::from_group(alg::FinGroup::cyclic(4)));
  auto toy = pack(MonoidalCategory::cocycle_toy());
  auto skew = pack(MonoidalCategory::cocycle_toy_skewed());

  SUBCASE("identity pair on a discrete group") {
    auto f = monoidal_identity(z2.m, z2.sigma);
    CHECK(check_fibre_identification(f, f).ok());
    auto fib = monoidal_fibre(f, f);
    CHECK(validate_bicategory(*fib.bi).ok());
    // 0-cells are the group elements; 1-cells (n, n') with n' m0 = m1 n
    CHECK(fib.bi->n_obj() == 2);
    for (int h = 0; h < fib.bi->n1(); ++h) {
      const auto& o = fib.ones[h];
      int m0 = fib.objs[fib.bi->cells1[h].src];
      int m1 = fib.objs[fib.bi->cells1[h].dst];
      CHECK(z2.m->tensor(o.np, m0) == z2.m->tensor(m1, o.n));
    }
  }
  SUBCASE("toy and skewed toy identity pairs") {
    auto f = monoidal_identity(toy.m, toy.sigma);
    CHECK(check_fibre_identification(f, f).ok());
    auto g = monoidal_identity(skew.m, skew.sigma);
    CHECK(check_fibre_identification(g, g).ok());
    CHECK(validate_bicategory(*monoidal_fibre(g, g).bi).ok());
  }
  SUBCASE("doubling functor against the identity") {
    std::unordered_map<std::uint64_t, int> comp;
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b)
        comp[pack2(a, b)] = z4.m->cat.identity[(2 * a + 2 * b) % 4];
    auto dbl = monoidal_functor(z2.m, z2.sigma, z4.m, z4.sigma, "x2", {0, 2},
                                {0, 2}, comp, z4.m->cat.identity[0]);
    REQUIRE(validate_lax(dbl.sigma).ok());
    auto idm = monoidal_identity(z4.m, z4.sigma);
    CHECK(check_fibre_identification(dbl, idm).ok());
    CHECK(check_fibre_identification(idm, dbl).ok());
  }
}

TEST_CASE("fibre over the unit functor and tensor translations") {
  auto z2 = pack(MonoidalCategory::from_group(alg::FinGroup::cyclic(2)));
  auto toy = pack(MonoidalCategory::cocycle_toy_skewed());
  for (auto& pk : {z2, toy}) {
    auto f = monoidal_identity(pk.m, pk.sigma);
    auto unit = unit_monoidal_functor(pk.m, pk.sigma);
    CHECK(check_fibre_identification(f, unit).ok());
    auto fib_left = monoidal_fibre(f, unit);
    CHECK(validate_bicategory(*fib_left.bi).ok());
    auto fib_right = monoidal_fibre(unit, f);
    CHECK(validate_bicategory(*fib_right.bi).ok());
    for (int mobj = 0; mobj < pk.m->cat.n_obj(); ++mobj) {
      auto tl = tensor_translation(*pk.m, mobj, Side::Left, f, fib_left);
      auto rep = validate_lax(tl);
      INFO(pk.m->name << " left " << mobj << ": " << rep.summary());
      CHECK(rep.ok());
      CHECK(tl.strict());
      // object map is m0 -> m (x) m0
      for (int X = 0; X < fib_left.bi->n_obj(); ++X)
        CHECK(fib_left.objs[tl.map0[X]] == pk.m->tensor(mobj, fib_left.objs[X]));
      auto tr = tensor_translation(*pk.m, mobj, Side::Right, f, fib_right);
      auto rep2 = validate_lax(tr);
      INFO(pk.m->name << " right " << mobj << ": " << rep2.summary());
      CHECK(rep2.ok());
      // for a group-like M the translations are bijective on every cell level
      std::vector<bool> hit(fib_left.bi->n_obj(), false);
      for (int X : tl.map0) hit[X] = true;
      bool all = true;
      for (bool h : hit) all = all && h;
      CHECK(all);
    }
  }
}

TEST_CASE("unit translation acts by unit whiskering on objects") {
  auto toy = pack(MonoidalCategory::cocycle_toy_skewed());
  auto f = monoidal_identity(toy.m, toy.sigma);
  auto unit = unit_monoidal_functor(toy.m, toy.sigma);
  auto fib = monoidal_fibre(f, unit);
  auto tl = tensor_translation(*toy.m, toy.m->unit, Side::Left, f, fib);
  for (int X = 0; X < fib.bi->n_obj(); ++X)
    CHECK(fib.objs[tl.map0[X]] == toy.m->tensor(toy.m->unit, fib.objs[X]));
}

TEST_CASE("regularity certification") {
  SUBCASE("discrete group monoidal categories are regular categorical groups") {
    for (int n : {2, 3, 4}) {
      auto res = regularity_check(MonoidalCategory::from_group(alg::FinGroup::cyclic(n)));
      CHECK(res.regular);
      CHECK(res.categorical_group);
    }
    auto res = regularity_check(MonoidalCategory::from_group(alg::FinGroup::symmetric(3)));
    CHECK(res.regular);
    CHECK(res.categorical_group);
  }
  SUBCASE("the cocycle toys are categorical groups") {
    CHECK(regularity_check(MonoidalCategory::cocycle_toy()).categorical_group);
    CHECK(regularity_check(MonoidalCategory::cocycle_toy_skewed()).categorical_group);
  }
  SUBCASE("a truncated addition monoid is not regular") {
    auto res = regularity_check(MonoidalCategory::truncated_addition(3));
    CHECK(!res.regular);
    CHECK(!res.witnesses.empty());
  }
  SUBCASE("the terminal monoidal category is trivially regular") {
    auto res = regularity_check(terminal_monoidal());
    CHECK(res.regular);
    CHECK(res.categorical_group);
  }
}
