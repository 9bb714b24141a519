#pragma once

#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "bvforms/superform.hpp"

namespace bvf {

class HbarForm;

// Grammar (explicit '*', no juxtaposition):
//   expr   := term (('+' | '-') term)*
//   term   := unary ('*' unary)*
//   unary  := '-' unary | power
//   power  := atom ('^' INT)?
//   atom   := INT ('/' INT)? | x<i> | p<i> | dx<i> | dp<i> | h | '(' expr ')'
// When n is not given it is the largest generator index in the text (at
// least 1). Errors are ParseError carrying a 0-based character position.
HbarForm parse_hbar(std::string_view text, std::optional<int> n = std::nullopt);

// As parse_hbar but rejects any h-dependence.
SuperForm parse(std::string_view text, std::optional<int> n = std::nullopt);

// Largest generator index mentioned in the text; 0 when there is none.
int max_generator_index(std::string_view text);

std::string print(const Monomial& m);
std::string print(const SuperForm& f);
std::string print(const HbarForm& z);

// [{"monomial": "x1*dx1", "coeff": "3/2"}, ...]
nlohmann::json to_json(const SuperForm& f);
SuperForm superform_from_json(const nlohmann::json& j, int n);

}  // namespace bvf
