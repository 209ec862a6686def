#pragma once

#include <json.hpp>

#include "ospo/brauer.hpp"
#include "ospo/insertion.hpp"
#include "ospo/laurent.hpp"
#include "ospo/module.hpp"
#include "ospo/partition.hpp"
#include "ospo/rational.hpp"
#include "ospo/spo_tableau.hpp"
#include "ospo/tableau.hpp"
#include "ospo/tensor.hpp"

namespace ospo {

using Json = nlohmann::ordered_json;

// int64 when it fits, decimal string otherwise
Json rat_parts(const Rat& r);  // {"num":..,"den":..}
Rat rat_from_parts(const Json& j);

Json to_json(const Partition& p);
Partition partition_from_json(const Json& j);
Json to_json(const LaurentPoly& p);  // [{exponents, num, den}], print order
LaurentPoly poly_from_json(const Json& j, std::shared_ptr<const VarNames> vars);
Json to_json(const BrauerDiagram& d);  // [[1,-4],[2,-1],...]
BrauerDiagram diagram_from_json(int k, const Json& j);
Json to_json(const OneFactor& f);
Json to_json(const TensorVector& v, const ModuleData& M);
Json to_json(const StandardTableau& T);
Json to_json(const Filling& T, const Alphabet& A);  // rows of tokens, null for the hole
Filling filling_from_json(const Json& j, const Alphabet& A);
Json to_json(const UpDownChain& chain);
UpDownChain chain_from_json(const Json& j);

// accepts "[2,1]", "(2,1)", "2,1", "2 1", "" and "()" for the empty partition
Partition parse_partition(std::string_view text);
// JSON list of partitions or "((),(1),(2))"
UpDownChain parse_chain(std::string_view text);
// JSON rows or the bracket form "[[t1,v2],[t2]]"
Filling parse_tableau_arg(std::string_view text, const Alphabet& A);

}  // namespace ospo
