#pragma once

#include <string>
#include <string_view>

#include "qhopf/algebra.hpp"

namespace qhopf {

/// Parses the element grammar
///
///   elem   := term (('+'|'-') term)*
///   term   := product ('#' product)*          tensor legs
///   product:= power ('*' power)*
///   power  := atom ['^' int]
///   atom   := int ['/' int] | 'h' | name | '(' elem ')'
///
/// A pure scalar result (or a scalar leg) is lifted to c * 1^{(x) arity}.
/// Throws ParseError / UnknownGenerator with the byte offset of the problem.
TensorElement parse_element(std::string_view text, const AlgebraPtr& algebra, int arity);

/// Deterministic rendering in the same grammar, e.g. "h^2 * (x # y) + h^2 * (y # x)".
/// parse_element(print_element(a), ..., a.arity()) == a.
std::string print_element(const TensorElement& a);

/// Renders one monomial leg: "1", "x", "F^2*H".
std::string print_monomial(const GeneratorTable& gens, const Exponent* exps);

}  // namespace qhopf
