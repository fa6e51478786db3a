#pragma once

#include <string>

#include "borel/ideal.hpp"

namespace borel {

// Parses the ideal source grammar
//
//   vars <name>(,<name>)* ; <term>(, <term>)*
//   term   := "1" | factor ("*" factor)*
//   factor := name ("^" exponent)?
//
// or, when the input starts with '{', the JSON form
// {"vars": [...], "gens": [[e1,...,en], ...]}. An empty term list gives the
// zero ideal. Generators are minimalized, so parse/print round-trips are
// stable. Errors carry the byte position of the offending token.
MonomialIdeal parse_ideal(const std::string& text);

}  // namespace borel
