#pragma once

// JSON form of GSpec: the string "id" for the identity, otherwise
// {"weights": [s_1, ..., s_k], "children": [g_1, ..., g_k]}.

#include <string>
#include <string_view>

#include "zerofree/semigroup.hpp"

namespace zerofree {

/// Throws Parse on malformed JSON, InvalidArgument / ArityMismatch on bad
/// weights or arity.
GSpec parse_gspec(std::string_view json);
std::string gspec_to_json(const GSpec& g);

}  // namespace zerofree
