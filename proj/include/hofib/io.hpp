#pragma once

#include <string>

#include <json.hpp>

#include "hofib/algebra.hpp"
#include "hofib/bicategory.hpp"
#include "hofib/monoidal.hpp"
#include "hofib/sset.hpp"
#include "hofib/xmod.hpp"

namespace hofib::io {

using nlohmann::json;

// Serialization to the versioned interchange schemas. All cell references
// are by id; arrays are sorted so that emitted files are canonical
// (load . save is the identity on canonical form).

json save_graph(const alg::FiniteGraph& g);
json save_category(const alg::FiniteCategory& c, bool as_groupoid = false,
                   const alg::FiniteGroupoid* gpd = nullptr);
json save_groupoid(const alg::FiniteGroupoid& g);
json save_bicategory(const bicat::FiniteBicategory& b);
json save_laxmorphism(const bicat::LaxMorphism& f);
json save_xmod(const xmod::CrossedModule& x);
json save_xmod_morphism(const xmod::XmodMorphism& m);
json save_monoidal(const monoidal::MonoidalCategory& m);
json save_monoidal_functor(const monoidal::MonoidalFunctor& f);
json save_sset(const nerve::TruncatedSimplicialSet& s);

alg::FiniteGraph load_graph(const json& j);
alg::FiniteCategory load_category(const json& j);
alg::FiniteGroupoid load_groupoid(const json& j);
std::shared_ptr<bicat::FiniteBicategory> load_bicategory(const json& j);
bicat::LaxMorphism load_laxmorphism(const json& j);
xmod::CrossedModule load_xmod(const json& j);
xmod::XmodMorphism load_xmod_morphism(const json& j);
monoidal::MonoidalCategory load_monoidal(const json& j);
monoidal::MonoidalFunctor load_monoidal_functor(const json& j);
nerve::TruncatedSimplicialSet load_sset(const json& j);

// Canonical textual form used everywhere a file or report is emitted.
std::string dumps(const json& j);

json read_file(const std::string& path);
void write_file(const std::string& path, const json& j);

// Dispatches on "schema"/"kind" and runs the structural validator.
ValidationReport validate_file(const json& j);

}  // namespace hofib::io
