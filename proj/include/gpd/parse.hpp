#pragma once

#include <string_view>
#include <vector>

#include "gpd/groupoid_expr.hpp"
#include "gpd/hyper.hpp"
#include "gpd/species.hpp"

namespace gpd {

// empty | unit | discrete(n) | cyclic(m) | u(e, ...) | x(e, ...)
// Whitespace-insensitive; errors are ParseError with a character position.
GroupoidExpr parse_groupoid_expr(std::string_view text);

// zero | one | singleton | sets | Z | sum(F,G) | had(F,G) | prod(F,G) |
// comp(F,G) | H(p/q,...;p/q,...) | Halt(p/q,...;p/q,...)
// H is the product interpretation of the hypergeometric species and Halt the
// alternative one; either parameter list may be empty.
Species parse_species_expr(std::string_view text, const ExpansionCaps& caps = {});

// Comma-separated p/q (or p) with positive integers; "" is the empty list.
std::vector<PositiveFraction> parse_fraction_list(std::string_view text);

}  // namespace gpd
