#pragma once

#include <nlohmann/json.hpp>

#include "borel/betti.hpp"
#include "borel/chain.hpp"
#include "borel/decompose.hpp"
#include "borel/errors.hpp"
#include "borel/extended_degree.hpp"
#include "borel/ideal.hpp"
#include "borel/invariants.hpp"

namespace borel {

// Insertion-ordered JSON everywhere: identical inputs must serialize to
// byte-identical output. -inf is always the string "-inf", never a number.
using Json = nlohmann::ordered_json;

Json degree_to_json(ExtendedDegree d);
Json degrees_to_json(const std::vector<ExtendedDegree>& v);

Json ideal_to_json(const MonomialIdeal& I);
MonomialIdeal ideal_from_json(const Json& j);

Json check_to_json(const BorelTypeCheck& c);
Json decomposition_to_json(const Decomposition& d);
Json chain_to_json(const SequentialChain& c);
Json report_to_json(const InvariantReport& r);
Json betti_to_json(const BettiTable& t);
Json comparison_to_json(const RouteComparison& c, const MonomialIdeal& I);
Json error_to_json(const Error& e);

std::string render_report_table(const InvariantReport& r);

}  // namespace borel
