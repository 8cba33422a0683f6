#pragma once

// Line-oriented text format for every machine kind, and DOT export.
//
//   @kind {1dfa|1rfa|1perfa|mrfa|sdfa|srfa|2perfa|srfa2}   (srfa2: both-sides sRFA)
//   @alphabet a b
//   @states q0 q1                 one-way machines
//   @states+ p0 p1 / @states- q0  sweeping machines
//   @initial q0 [q1 ...]          several only for mrfa
//   @accept q0 ...                may be empty
//   @trans a q0 -> q1             one-way
//   @trans a + p0 -> p1           sweeping, + or - selects δ⁺ or δ⁻
//   @left q0 -> p1                ⊢ transitions, from the initial state or Q-
//   @right p1 -> q0               ⊣ transitions, from Q+
//
// `#` starts a comment.  Diagnostics carry a line number and a stable code:
//   E001 unknown-keyword      E002 undeclared-state    E003 duplicate-source
//   E004 unknown-symbol       E005 duplicate-directive E006 missing-directive
//   E007 malformed-line       E008 class-violation     E009 duplicate-state-name

#include <cstddef>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "revfa/core.hpp"

namespace revfa {

class ParseError : public std::invalid_argument {
public:
    ParseError(std::size_t line, std::string code, const std::string& message);

    std::size_t line() const { return line_; }
    const std::string& code() const { return code_; }

private:
    std::size_t line_;
    std::string code_;
};

/// With `strict`, a machine violating its declared class is an E008 error;
/// otherwise it is returned for inspection by `validate`.
Machine parse_machine(std::string_view text, bool strict = true);

/// Canonical text.  Throws std::invalid_argument for a both-sides machine not
/// declared as sRFA, which the format cannot express.
std::string emit_machine(const Machine& m);

/// The @kind keyword for `m`.
std::string kind_keyword(const Machine& m);

Machine load_machine(const std::filesystem::path& path, bool strict = true);
void save_machine(const std::filesystem::path& path, const Machine& m);

/// Graphviz text.  Sweeping machines draw Q+ and Q- as separate clusters and
/// end-marker transitions as ⊢/⊣ edges; parallel edges are merged.
std::string to_dot(const Machine& m);

}  // namespace revfa
