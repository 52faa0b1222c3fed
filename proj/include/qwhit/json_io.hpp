#pragma once
// JSON interchange forms. QPoly: ascending coefficient list. SymPoly:
// list of {"x": exponents, "q": coefficients} sorted by exponent vector.
// Patterns/fillings: {"n", "rows"}; overlays sorted by (j, i) with parts
// padded to the box height.

#include <json.hpp>

#include "qwhit/bijections.hpp"
#include "qwhit/character.hpp"
#include "qwhit/filling.hpp"
#include "qwhit/gt_pattern.hpp"
#include "qwhit/pop.hpp"
#include "qwhit/qpoly.hpp"
#include "qwhit/report.hpp"
#include "qwhit/sympoly.hpp"

namespace qwhit {

nlohmann::json to_json(const QPoly& p);
QPoly qpoly_from_json(const nlohmann::json& j);

nlohmann::json to_json(const SymPoly& p);

nlohmann::json to_json(const GTPattern& T);
GTPattern gt_from_json(const nlohmann::json& j);

nlohmann::json to_json(const Filling& F);
Filling filling_from_json(const nlohmann::json& j);

nlohmann::json to_json(const OverlaidPattern& p);
OverlaidPattern pop_from_json(const nlohmann::json& j);

nlohmann::json to_json(const CheckReport& r);
nlohmann::json to_json(const CharacterResult& r);

}  // namespace qwhit
