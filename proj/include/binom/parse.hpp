#ifndef BINOM_PARSE_HPP
#define BINOM_PARSE_HPP

#include <stdexcept>
#include <string>

#include "binom/poly.hpp"

namespace binom {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Grammar:
//   expr   := term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := base ('^' uint)?
//   base   := int | <var> | '(' expr ')'
// Whitespace is insignificant. `var` is 't' for polynomials and 'x' for
// field-defining minimal polynomials. A leading sign is accepted.
PolyZ parse_poly(const std::string& text, char var);

// Canonical form: descending exponents, '-' folded into the separator,
// unit coefficients elided, no whitespace. Round-trips through parse_poly.
std::string poly_to_string(const PolyZ& f, char var);
std::string poly_to_string(const PolyQ& f, char var);

} // namespace binom

#endif
