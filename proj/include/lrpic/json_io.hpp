#pragma once

// JSON encodings:
//   Partition   [3,1,1]
//   Cell        [row, col]
//   SkewShape   {"outer":[...],"inner":[...]}
//   Tableau     {"shape":[3,2],"rows":[[1,2,2],[3,4]]}
//   Word        {"letters":[...],"cells":[[r,c],...]}
//   TotalOrder  {"cells":[[r,c],...]}
//   Picture     {"pairs":[[[1,1],[1,4]],...]}
//   LRInstance  {"lambda":[...],"mu":[...],"nu":[...],"rank":n}
// Decoding validates through the normal constructors, so malformed values
// throw lrpic::Error (or nlohmann::json::exception for type errors).

#include <json.hpp>

#include "lrpic/lr.hpp"
#include "lrpic/order.hpp"
#include "lrpic/pictures.hpp"
#include "lrpic/shapes.hpp"
#include "lrpic/tableaux.hpp"

namespace lrpic {

using nlohmann::json;

void to_json(json& j, const Cell& c);
void from_json(const json& j, Cell& c);
void to_json(json& j, const Partition& p);
void from_json(const json& j, Partition& p);
void to_json(json& j, const SkewShape& s);
void from_json(const json& j, SkewShape& s);
void to_json(json& j, const Tableau& t);
void from_json(const json& j, Tableau& t);
void to_json(json& j, const Word& w);
void from_json(const json& j, Word& w);
void to_json(json& j, const TotalOrder& o);
void from_json(const json& j, TotalOrder& o);
void to_json(json& j, const Picture& f);
void from_json(const json& j, Picture& f);
void to_json(json& j, const LRInstance& inst);
void from_json(const json& j, LRInstance& inst);

/// {"instance":{...},"counts":{"pictures":..,"crystals":..,"lattice":..},
///  "bijection":"ok"|"failed","counterexample":null|"..."}
json count_report(const LRInstance& inst, const CountTriple& counts, const BijectionReport& bijection);

}  // namespace lrpic
