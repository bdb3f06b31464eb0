#pragma once

#include <string>
#include <string_view>

#include "ternary/element.hpp"

namespace ternary {

/// Canonical text form: terms in graded-lexicographic order joined by " + ",
/// each `coeff*e[i]^k*...` with 1-based positions and exponents in {1,2}.
/// Exact coefficients keep w = exp(2*pi*i/3) as the token `w`; unit
/// coefficients on monomials are omitted. The zero element prints as "0".
std::string to_text(const ExactElement& z);
std::string to_text(const Element& z);

/// Structured record {"terms":[{"coeff":[re,im],"index":[[pos,exp],...]}]}
/// with terms in canonical order. Exact coefficients are converted to
/// double precision on emission.
std::string to_json_text(const ExactElement& z);
std::string to_json_text(const Element& z);

/// Parse the structured record form.
ExactElement exact_element_from_json(std::string_view text);
Element float_element_from_json(std::string_view text);

}  // namespace ternary
