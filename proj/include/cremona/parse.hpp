#pragma once

#include "cremona/ratpoly.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cremona {

struct ParseError : std::runtime_error {
    ParseError(size_t position, const std::string& message);
    size_t position;
};

// Grammar over the variable t:
//   expr     := term (('+'|'-') term)*
//   term     := factor ('*' factor)*
//   factor   := base ('^' natural)?
//   base     := rational | 't' | '(' expr ')' | '-' base
//   rational := integer ('/' positive-integer)?
// Note that '-' belongs to base, so "-t^2" is (-t)^2; printing never emits
// that form. Decimal literals are rejected with a hint to use fractions.
RatPoly parse_poly(const std::string& text);

}
