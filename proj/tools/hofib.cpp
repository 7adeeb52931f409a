// hofib: workbench for finite bicategories, comma constructions, nerves,
// monoidal categories, and crossed modules of groupoids.
//
// Exit codes: 0 all checks passed, 1 check failure, 2 schema/resource error.

#include <cstdlib>
#include <iostream>

#include <CLI11.hpp>

#include "hofib/comma.hpp"
#include "hofib/io.hpp"
#include "hofib/nerve.hpp"
#include "hofib/suites.hpp"

using namespace hofib;
using io::json;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitSchemaOrResource = 2;

std::size_t max_cells_default() {
  if (const char* env = std::getenv("HOFIB_MAX_CELLS")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return 200000;
}

int report_validation(const ValidationReport& rep) {
  std::cout << rep.summary() << "\n";
  return rep.ok() ? kExitPass : kExitCheckFailure;
}

// Loaded morphisms reference their own target instances; when two files
// carry byte-identical canonical targets the instances can be shared so the
// pairwise constructions accept them.
void unify_targets(bicat::LaxMorphism& f, bicat::LaxMorphism& g) {
  if (io::dumps(io::save_bicategory(*f.dst)) !=
      io::dumps(io::save_bicategory(*g.dst)))
    throw SchemaError("the two morphisms have different targets", "/target");
  g.dst = f.dst;
}

void unify_targets(xmod::XmodMorphism& f, xmod::XmodMorphism& g) {
  if (io::dumps(io::save_xmod(*f.dst)) != io::dumps(io::save_xmod(*g.dst)))
    throw SchemaError("the two morphisms have different targets", "/target");
  g.dst = f.dst;
  g.F.dst = f.dst->g.base;
}

nerve::Variant parse_variant(const std::string& v) {
  if (v == "lax") return nerve::Variant::Lax;
  if (v == "normal-lax") return nerve::Variant::NormalLax;
  if (v == "oplax") return nerve::Variant::Oplax;
  if (v == "normal-oplax") return nerve::Variant::NormalOplax;
  throw CLI::ValidationError("--variant",
                             "must be lax|normal-lax|oplax|normal-oplax");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"workbench for finite bicategories, homotopy-fibre products, "
               "nerves, monoidal categories and crossed modules"};
  app.require_subcommand(1);
  std::size_t max_cells = max_cells_default();
  app.add_option("--max-cells", max_cells,
                 "enumeration ceiling (env HOFIB_MAX_CELLS)");

  // validate
  std::string validate_path;
  auto* sc_validate = app.add_subcommand("validate", "validate a structure file");
  sc_validate->add_option("file", validate_path)->required();

  // comma
  std::string comma_lax, comma_oplax, comma_out;
  auto* sc_comma = app.add_subcommand("comma", "homotopy-fibre product bicategory");
  sc_comma->add_option("--lax", comma_lax)->required();
  sc_comma->add_option("--oplax", comma_oplax)->required();
  sc_comma->add_option("-o,--out", comma_out);

  // fibre
  std::string fibre_lax, fibre_oplax, fibre_obj, fibre_out;
  auto* sc_fibre = app.add_subcommand("fibre", "homotopy-fibre bicategory");
  sc_fibre->add_option("--lax", fibre_lax);
  sc_fibre->add_option("--oplax", fibre_oplax);
  sc_fibre->add_option("--object", fibre_obj)->required();
  sc_fibre->add_option("-o,--out", fibre_out);

  // translate
  std::string tr_lax, tr_cell, tr_out;
  std::string tr_side = "lower";
  auto* sc_translate =
      app.add_subcommand("translate", "translation 2-functor along a 1-cell");
  sc_translate->add_option("--lax", tr_lax)->required();
  sc_translate->add_option("--cell", tr_cell)->required();
  sc_translate->add_option("--side", tr_side)->check(CLI::IsMember({"lower", "upper"}));
  sc_translate->add_option("-o,--out", tr_out);

  // comma2
  std::string c2_f, c2_g, c2_out;
  auto* sc_comma2 = app.add_subcommand("comma2", "two-sided lax comma bicategory");
  sc_comma2->add_option("--lax", c2_f)->required();
  sc_comma2->add_option("--lax2", c2_g)->required();
  sc_comma2->add_option("-o,--out", c2_out);

  // bprop
  std::string bp_lax;
  auto* sc_bprop =
      app.add_subcommand("bprop", "translation biequivalence certificate");
  sc_bprop->add_option("--lax", bp_lax)->required();

  // nerve
  std::string nerve_file, nerve_out, nerve_variant = "normal-lax";
  int nerve_dim = 4;
  auto* sc_nerve = app.add_subcommand("nerve", "geometric nerve of a bicategory");
  sc_nerve->add_option("file", nerve_file)->required();
  sc_nerve->add_option("--variant", nerve_variant);
  sc_nerve->add_option("--dim", nerve_dim);
  sc_nerve->add_option("-o,--out", nerve_out);

  // gnerve
  std::string gnerve_file;
  int gnerve_dim = 3;
  auto* sc_gnerve =
      app.add_subcommand("gnerve", "pseudo-simplicial nerve cocycle check");
  sc_gnerve->add_option("file", gnerve_file)->required();
  sc_gnerve->add_option("--dim", gnerve_dim);

  // adjunction
  std::string adj_graph, adj_bicat;
  auto* sc_adj =
      app.add_subcommand("adjunction", "free-category adjunction checks");
  sc_adj->add_option("--graph", adj_graph)->required();
  sc_adj->add_option("--bicategory", adj_bicat)->required();

  // kan
  std::string kan_file;
  int kan_n = 2, kan_k = 1;
  auto* sc_kan = app.add_subcommand("kan", "horn filling report");
  sc_kan->add_option("file", kan_file)->required();
  sc_kan->add_option("--dim", kan_n);
  sc_kan->add_option("--horn", kan_k);

  // xmod verbs
  auto* sc_xmod = app.add_subcommand("xmod", "crossed module operations");
  sc_xmod->require_subcommand(1);
  std::string x_file, x_file2, x_out, x_obj, x_obj2;
  int x_dim = 4;
  auto* xv_validate = sc_xmod->add_subcommand("validate");
  xv_validate->add_option("file", x_file)->required();
  auto* xv_beta = sc_xmod->add_subcommand("beta");
  xv_beta->add_option("file", x_file)->required();
  xv_beta->add_option("-o,--out", x_out);
  auto* xv_hpb = sc_xmod->add_subcommand("hpb");
  xv_hpb->add_option("first", x_file)->required();
  xv_hpb->add_option("second", x_file2)->required();
  xv_hpb->add_option("-o,--out", x_out);
  auto* xv_pullback = sc_xmod->add_subcommand("pullback");
  xv_pullback->add_option("first", x_file)->required();
  xv_pullback->add_option("second", x_file2)->required();
  xv_pullback->add_option("-o,--out", x_out);
  auto* xv_pi = sc_xmod->add_subcommand("pi");
  xv_pi->add_option("file", x_file)->required();
  auto* xv_weq = sc_xmod->add_subcommand("weq");
  xv_weq->add_option("file", x_file)->required();
  auto* xv_fib = sc_xmod->add_subcommand("fib");
  xv_fib->add_option("file", x_file)->required();
  auto* xv_nerve = sc_xmod->add_subcommand("nerve");
  xv_nerve->add_option("file", x_file)->required();
  xv_nerve->add_option("--dim", x_dim);
  xv_nerve->add_option("-o,--out", x_out);
  auto* xv_cmp = sc_xmod->add_subcommand("compare-nerves");
  xv_cmp->add_option("file", x_file)->required();
  xv_cmp->add_option("--dim", x_dim);
  auto* xv_mv = sc_xmod->add_subcommand("mv");
  xv_mv->add_option("first", x_file)->required();
  xv_mv->add_option("second", x_file2)->required();
  xv_mv->add_option("--at", x_obj)->required();
  xv_mv->add_option("--at2", x_obj2)->required();
  auto* xv_endo = sc_xmod->add_subcommand("endo");
  xv_endo->add_option("file", x_file)->required();
  xv_endo->add_option("--object", x_obj)->required();

  // monoidal verbs
  auto* sc_mon = app.add_subcommand("monoidal", "monoidal category operations");
  sc_mon->require_subcommand(1);
  std::string m_file, m_file2, m_out, m_obj;
  std::string m_side = "left";
  auto* mv_validate = sc_mon->add_subcommand("validate");
  mv_validate->add_option("file", m_file)->required();
  auto* mv_sigma = sc_mon->add_subcommand("sigma");
  mv_sigma->add_option("file", m_file)->required();
  mv_sigma->add_option("-o,--out", m_out);
  auto* mv_fibre = sc_mon->add_subcommand("fibre");
  mv_fibre->add_option("first", m_file)->required();
  mv_fibre->add_option("second", m_file2)->required();
  mv_fibre->add_option("-o,--out", m_out);
  auto* mv_translate = sc_mon->add_subcommand("translate");
  mv_translate->add_option("file", m_file)->required();
  mv_translate->add_option("--object", m_obj)->required();
  mv_translate->add_option("--side", m_side)->check(CLI::IsMember({"left", "right"}));
  auto* mv_reg = sc_mon->add_subcommand("regularity");
  mv_reg->add_option("file", m_file)->required();

  // run
  std::string run_suite_name;
  int run_seed = 0, run_jobs = 1;
  bool run_json = false;
  std::string run_inject;
  auto* sc_run = app.add_subcommand("run", "run a verification suite");
  sc_run->add_option("suite", run_suite_name)
      ->required()
      ->check(CLI::IsMember(wb::suite_names()));
  sc_run->add_option("--seed", run_seed);
  sc_run->add_option("--jobs", run_jobs);
  sc_run->add_flag("--json", run_json);
  sc_run->add_option("--inject", run_inject)
      ->description("fault injection for self-tests");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*sc_validate)
      return report_validation(io::validate_file(io::read_file(validate_path)));

    if (*sc_comma) {
      auto F = io::load_laxmorphism(io::read_file(comma_lax));
      auto G = io::load_laxmorphism(io::read_file(comma_oplax));
      unify_targets(F, G);
      auto cr = comma::comma(F, G);
      auto rep = bicat::validate_bicategory(*cr.c.bi);
      if (!comma_out.empty()) io::write_file(comma_out, io::save_bicategory(*cr.c.bi));
      return report_validation(rep);
    }
    if (*sc_fibre) {
      if (fibre_lax.empty() == fibre_oplax.empty())
        throw SchemaError("need exactly one of --lax/--oplax", "/");
      comma::CommaResult cr = [&]() {
        if (!fibre_lax.empty()) {
          auto F = io::load_laxmorphism(io::read_file(fibre_lax));
          return comma::fibre(F, F.dst->object_index(fibre_obj));
        }
        auto G = io::load_laxmorphism(io::read_file(fibre_oplax));
        return comma::fibre(G.dst->object_index(fibre_obj), G);
      }();
      auto rep = bicat::validate_bicategory(*cr.c.bi);
      if (!fibre_out.empty()) io::write_file(fibre_out, io::save_bicategory(*cr.c.bi));
      return report_validation(rep);
    }
    if (*sc_translate) {
      auto F = io::load_laxmorphism(io::read_file(tr_lax));
      int p = F.dst->cell1_index(tr_cell);
      auto tr = tr_side == "lower" ? comma::translate_lower(F, p)
                                   : comma::translate_upper(p, F);
      auto rep = bicat::validate_lax(tr.functor);
      if (!tr_out.empty()) io::write_file(tr_out, io::save_laxmorphism(tr.functor));
      return report_validation(rep);
    }
    if (*sc_comma2) {
      auto F = io::load_laxmorphism(io::read_file(c2_f));
      auto G = io::load_laxmorphism(io::read_file(c2_g));
      unify_targets(F, G);
      auto c2 = comma::comma2(F, G);
      auto rep = bicat::validate_bicategory(*c2.outer.c.bi);
      if (!c2_out.empty())
        io::write_file(c2_out, io::save_bicategory(*c2.outer.c.bi));
      return report_validation(rep);
    }
    if (*sc_bprop) {
      auto F = io::load_laxmorphism(io::read_file(bp_lax));
      auto res = comma::property_B_witness(F);
      if (res.holds_sufficient) {
        std::cout << "certified: every lower translation is a biequivalence\n";
        return kExitPass;
      }
      std::cout << "inconclusive:\n";
      for (const auto& w : res.witnesses) std::cout << "  " << w << "\n";
      return kExitCheckFailure;
    }
    if (*sc_nerve) {
      auto B = io::load_bicategory(io::read_file(nerve_file));
      auto gn = nerve::geometric_nerve(B, parse_variant(nerve_variant), nerve_dim,
                                       max_cells);
      auto rep = nerve::validate_simplicial(gn.sset);
      if (!nerve_out.empty()) io::write_file(nerve_out, io::save_sset(gn.sset));
      return report_validation(rep);
    }
    if (*sc_gnerve) {
      auto B = io::load_bicategory(io::read_file(gnerve_file));
      auto psn = nerve::grothendieck_nerve(B, gnerve_dim, max_cells);
      return report_validation(nerve::check_grothendieck_nerve(psn));
    }
    if (*sc_adj) {
      auto g = io::load_graph(io::read_file(adj_graph));
      auto B = io::load_bicategory(io::read_file(adj_bicat));
      return report_validation(nerve::check_graph_adjunction(g, B, max_cells));
    }
    if (*sc_kan) {
      auto S = io::load_sset(io::read_file(kan_file));
      auto rep = nerve::kan_check(S, kan_n, kan_k);
      std::cout << "horns: " << rep.horns << ", filled: " << rep.filled << "\n";
      for (const auto& h : rep.unfilled) std::cout << "  unfilled: " << h << "\n";
      return rep.all_filled() ? kExitPass : kExitCheckFailure;
    }

    if (*sc_xmod) {
      if (*xv_validate)
        return report_validation(
            xmod::validate_xmod(io::load_xmod(io::read_file(x_file))));
      if (*xv_beta) {
        auto x = io::load_xmod(io::read_file(x_file));
        auto b = xmod::beta(x);
        auto rep = xmod::validate_two_groupoid(*b.bi);
        if (!x_out.empty()) io::write_file(x_out, io::save_bicategory(*b.bi));
        return report_validation(rep);
      }
      if (*xv_hpb || *xv_pullback) {
        auto m1 = io::load_xmod_morphism(io::read_file(x_file));
        auto m2 = io::load_xmod_morphism(io::read_file(x_file2));
        unify_targets(m1, m2);
        if (*xv_hpb) {
          auto hpb = xmod::homotopy_pullback_xmod(m1, m2);
          auto rep = xmod::validate_xmod(*hpb.x);
          if (!x_out.empty()) io::write_file(x_out, io::save_xmod(*hpb.x));
          return report_validation(rep);
        }
        auto pb = xmod::pullback_xmod(m1, m2);
        auto rep = xmod::validate_xmod(*pb.x);
        if (!x_out.empty()) io::write_file(x_out, io::save_xmod(*pb.x));
        return report_validation(rep);
      }
      if (*xv_pi) {
        auto x = io::load_xmod(io::read_file(x_file));
        auto prof = xmod::pi(x);
        json j;
        j["pi0"] = prof.pi0_reps.size();
        json per = json::object();
        for (int a = 0; a < x.base().n_obj(); ++a)
          per[x.base().objects[a]] = {{"pi1", prof.pi1[a].size()},
                                      {"pi2", prof.pi2[a].size()}};
        j["groups"] = per;
        std::cout << io::dumps(j);
        return kExitPass;
      }
      if (*xv_weq) {
        auto m = io::load_xmod_morphism(io::read_file(x_file));
        auto res = xmod::weak_equivalence(m);
        std::cout << (res.is_weak_equivalence ? "weak equivalence\n"
                                              : "not a weak equivalence\n");
        for (const auto& w : res.witnesses) std::cout << "  " << w << "\n";
        return res.is_weak_equivalence ? kExitPass : kExitCheckFailure;
      }
      if (*xv_fib) {
        auto m = io::load_xmod_morphism(io::read_file(x_file));
        bool f = xmod::fibration_xmod(m);
        std::cout << (f ? "fibration\n" : "not a fibration\n");
        return f ? kExitPass : kExitCheckFailure;
      }
      if (*xv_nerve) {
        auto x = io::load_xmod(io::read_file(x_file));
        auto nx = xmod::xmod_nerve(x, x_dim, max_cells);
        auto rep = nerve::validate_simplicial(nx.sset);
        if (!x_out.empty()) io::write_file(x_out, io::save_sset(nx.sset));
        return report_validation(rep);
      }
      if (*xv_cmp) {
        auto x = io::load_xmod(io::read_file(x_file));
        return report_validation(xmod::compare_nerves(x, x_dim, max_cells));
      }
      if (*xv_mv) {
        auto m1 = io::load_xmod_morphism(io::read_file(x_file));
        auto m2 = io::load_xmod_morphism(io::read_file(x_file2));
        unify_targets(m1, m2);
        auto rep = xmod::mv_check(m1, m2, m1.src->base().object_index(x_obj),
                                  m2.src->base().object_index(x_obj2));
        for (const auto& jline : rep.joints) std::cout << jline << "\n";
        for (const auto& f : rep.failures) std::cout << "FAIL " << f << "\n";
        return rep.exact ? kExitPass : kExitCheckFailure;
      }
      if (*xv_endo) {
        auto x = io::load_xmod(io::read_file(x_file));
        auto e = xmod::endo_groupoid(x, x.base().object_index(x_obj));
        return report_validation(e.report);
      }
    }

    if (*sc_mon) {
      if (*mv_validate)
        return report_validation(
            monoidal::validate_monoidal(io::load_monoidal(io::read_file(m_file))));
      if (*mv_sigma) {
        auto m = io::load_monoidal(io::read_file(m_file));
        auto b = monoidal::delooping(m);
        auto rep = bicat::validate_bicategory(*b);
        if (!m_out.empty()) io::write_file(m_out, io::save_bicategory(*b));
        return report_validation(rep);
      }
      if (*mv_fibre) {
        auto F = io::load_monoidal_functor(io::read_file(m_file));
        auto G = io::load_monoidal_functor(io::read_file(m_file2));
        if (io::dumps(io::save_monoidal(*F.dst)) !=
            io::dumps(io::save_monoidal(*G.dst)))
          throw SchemaError("the two functors have different targets", "/target");
        G.dst = F.dst;
        G.sigma.dst = F.sigma.dst;
        auto fib = monoidal::monoidal_fibre(F, G);
        auto rep = bicat::validate_bicategory(*fib.bi);
        ValidationReport ident = monoidal::check_fibre_identification(F, G);
        rep.absorb(ident);
        if (!m_out.empty()) io::write_file(m_out, io::save_bicategory(*fib.bi));
        return report_validation(rep);
      }
      if (*mv_translate) {
        auto m = std::make_shared<monoidal::MonoidalCategory>(
            io::load_monoidal(io::read_file(m_file)));
        auto sigma = monoidal::delooping(*m);
        auto f = monoidal::monoidal_identity(m, sigma);
        auto unit = monoidal::unit_monoidal_functor(m, sigma);
        auto side = m_side == "left" ? monoidal::Side::Left : monoidal::Side::Right;
        auto fib = side == monoidal::Side::Left ? monoidal::monoidal_fibre(f, unit)
                                                : monoidal::monoidal_fibre(unit, f);
        auto t = monoidal::tensor_translation(*m, m->cat.object_index(m_obj), side,
                                              f, fib);
        return report_validation(bicat::validate_lax(t));
      }
      if (*mv_reg) {
        auto m = io::load_monoidal(io::read_file(m_file));
        auto res = monoidal::regularity_check(m);
        std::cout << "regular: " << (res.regular ? "yes" : "no")
                  << ", categorical group: "
                  << (res.categorical_group ? "yes" : "no") << "\n";
        for (const auto& w : res.witnesses) std::cout << "  " << w << "\n";
        return kExitPass;
      }
    }

    if (*sc_run) {
      wb::SuiteOptions opt;
      opt.seed = run_seed;
      opt.jobs = run_jobs;
      opt.max_cells = max_cells;
      opt.inject = run_inject;
      auto res = wb::run_suite(run_suite_name, opt);
      if (run_json) {
        std::cout << io::dumps(wb::report_json(res, opt));
      } else {
        for (const auto& ck : res.checks) {
          std::cout << (ck.pass ? "[PASS] " : "[FAIL] ") << ck.name << " -- "
                    << ck.law << "\n";
          if (!ck.pass && !ck.details.empty())
            std::cout << "       " << ck.details << "\n";
        }
        std::cout << res.checks.size() << " checks, " << res.failed()
                  << " failed\n";
      }
      return res.ok() ? kExitPass : kExitCheckFailure;
    }
  } catch (const SchemaError& e) {
    std::cerr << "schema error: " << e.what() << "\n";
    return kExitSchemaOrResource;
  } catch (const ResourceLimitError& e) {
    std::cerr << "resource error: " << e.what() << "\n";
    return kExitSchemaOrResource;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitSchemaOrResource;
  }
  return kExitPass;
}
