#pragma once

#include <map>
#include <span>
#include <string>

#include "gysincalc/multipoly.hpp"

namespace gysincalc::polyring {

/// Renders a polynomial in the canonical term order.  Each term appears as
/// "c * v1^a1*v2^a2" with the coefficient always explicit, terms joined by
/// " + " or " - " according to sign.  The zero polynomial renders as "0".
std::string to_canonical_string(const MultiPoly& p,
                                std::span<const std::string> names);

/// Parses an expression over named variables into a MultiPoly with
/// `num_vars` slots.  `vars` maps every accepted spelling to its slot.
///
/// Grammar: sums/differences of products of factors; a factor is an integer,
/// a rational "p/q", a variable, or a parenthesised expression, optionally
/// raised to a nonnegative integer power with '^'.  Multiplication is
/// explicit ('*').  Errors carry the offending position.
MultiPoly parse_polynomial(const std::string& text,
                           const std::map<std::string, std::size_t>& vars,
                           std::size_t num_vars);

}  // namespace gysincalc::polyring
