#pragma once

// Catalog of concrete automata together with reference DFAs built from
// regular expressions.  Every witness is checked against its reference when
// it is constructed.
//
//   singleton-a       1RFA for {a}
//   mod3-two-accept   1PerFA for (aaa)* ∪ a(aaa)*
//   even-or-a         sRFA for (aa)* ∪ {a}
//   even-or-a-mrfa    unary MRFA with two initial states for (aa)* ∪ {a}
//   a-star-or-b-star  MRFA for a* ∪ b*
//   Lk-union          MRFA with k initial states for (ab)* ∪ ... ∪ (ab^k)*
//   Lk-srfa           both-sides sRFA for the union over i < k of (ab^i)* b a^i

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "revfa/core.hpp"

namespace revfa {

inline constexpr std::size_t witness_min_k = 2;
inline constexpr std::size_t witness_max_k = 6;

struct WitnessSpec {
    std::string name;
    std::optional<std::size_t> k;
    Machine machine;
    /// Regular expression describing the language.
    std::string regex;
    /// DFA compiled from `regex`, independent of `machine`.
    OneWayMachine reference;

    bool member(std::string_view word) const;
};

const std::vector<std::string>& witness_names();
bool witness_is_parameterized(std::string_view name);

/// Throws std::invalid_argument on an unknown name or k outside
/// [witness_min_k, witness_max_k].  Parameterized witnesses default to k = 2;
/// k is rejected for the others.
WitnessSpec witness(std::string_view name, std::optional<std::size_t> k = std::nullopt);

/// Every witness, parameterized ones instantiated at `k`.
std::vector<WitnessSpec> witness_catalog(std::size_t k = witness_min_k);

/// The languages of the two parameterized families.
std::string lk_union_regex(std::size_t k);
std::string lk_srfa_regex(std::size_t k);

}  // namespace revfa
