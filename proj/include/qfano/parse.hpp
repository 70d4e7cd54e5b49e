#pragma once

#include <functional>
#include <optional>
#include <string_view>

#include "qfano/poly.hpp"

namespace qfano {

// Looks up named polynomials (q12, f3, Pf1234, ...) before ring variables.
using PolyResolver = std::function<std::optional<Poly>(std::string_view)>;

// Parses + - * / ^ and parentheses over integer literals and identifiers.
// Division is only allowed by a nonzero constant. Throws std::invalid_argument.
Poly parse_poly(std::string_view text, const RingPtr& ring, const PolyResolver& resolve = {});

}  // namespace qfano
