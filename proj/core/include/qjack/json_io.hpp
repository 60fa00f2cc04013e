#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "qjack/symexpr.hpp"

namespace qjack {

// {"num": [...], "den": [...]}: decimal coefficient strings in ascending
// degree; the zero polynomial is the empty array.  Canonical form in, out.
nlohmann::ordered_json ratfun_to_json(const RatFun& f);
RatFun ratfun_from_json(const nlohmann::json& j);

// {"basis": "q", "terms": [{"partition": "2,1", "coeff": {...}}, ...]} with
// terms in the container order (weight ascending, reverse-lexicographically
// descending inside a weight), so serialization is deterministic.
nlohmann::ordered_json symexpr_to_json(const SymExpr& f);
SymExpr symexpr_from_json(const nlohmann::json& j);

// "3", "-5/2".  Throws std::invalid_argument on malformed input and
// std::domain_error on a zero denominator.
BigRat parse_rational(const std::string& text);

// Arithmetic expressions in the field variable: integers, 'a', + - * / ^,
// parentheses, and juxtaposition as multiplication ("2a^2", "(1+a)(1-a)").
RatFun parse_ratfun_text(const std::string& text);

} // namespace qjack
