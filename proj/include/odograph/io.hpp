#pragma once

// Text and JSON formats shared by the CLI and the tests.

#include "odograph/ideals.hpp"
#include "odograph/kgraph.hpp"

#include "json.hpp"

#include <string>
#include <vector>

namespace odograph {

using Json = nlohmann::ordered_json;

/// {"n":[2,3],"theta":"standard"} or {"n":[2,2],"theta":{"(1,2)":[["0,0","0,1"],...]}}
/// where row s, column t of a table holds "t',s'". A missing theta means
/// standard. Throws Parse or NotBijective.
SpecPtr spec_from_json(const Json& doc);
Json spec_to_json(const KGraphSpec& spec);

/// "2,3" or "[2,3]".
std::vector<unsigned long> parse_sizes(const std::string& text);
/// "1,0" or "(1,0)"; the rank must match.
Degree parse_degree(const std::string& text, std::size_t rank);

/// Whitespace-separated letters "x1:0 x2:1" (1-based color, 0-based
/// letter). "" and "()" are the empty word.
Word parse_word(const SpecPtr& spec, const std::string& text);
/// Inverse of parse_word; the empty word prints as "()".
std::string format_word(const Word& word);

Json degree_to_json(const Degree& d);
Json bigint_to_json(const BigInt& v);

/// {"degree":[1,1],"codes":["0","4"]}
Json ideal_to_json(const ConstructibleIdeal& ideal);
ConstructibleIdeal ideal_from_json(const SpecPtr& spec, const Json& doc);

}  // namespace odograph
