#pragma once

// Small regular-expression engine used to build reference DFAs.
//
// Syntax: single-character literals from the alphabet, `|`, concatenation,
// postfix `*`, `+`, `?`, and parentheses.  An empty operand denotes the empty
// word, so `()` is ε and `a|` is a ∪ ε.

#include <string_view>

#include "revfa/core.hpp"

namespace revfa {

/// Thompson NFA followed by the subset construction.  The result is a
/// possibly partial DFA with states named d0, d1, ... in discovery order.
/// Throws std::invalid_argument on a syntax error or a symbol outside the
/// alphabet.
OneWayMachine regex_to_dfa(std::string_view pattern, const Alphabet& alphabet);

}  // namespace revfa
