#pragma once

// Finite partial injections between indexed sets.  Behavior functions of
// sweeping automata (maps from Q- into Q+) are values of this type.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace revfa {

class PartialInjection {
public:
    using Pair = std::pair<std::size_t, std::size_t>;

    PartialInjection() = default;
    /// Empty injection from a `domain_size`-set into a `codomain_size`-set.
    PartialInjection(std::size_t domain_size, std::size_t codomain_size);
    /// Throws std::invalid_argument when pairs repeat a source or target or
    /// leave the index ranges.
    PartialInjection(std::size_t domain_size, std::size_t codomain_size, std::vector<Pair> pairs);

    static PartialInjection identity(std::size_t n);

    std::size_t domain_size() const { return domain_size_; }
    std::size_t codomain_size() const { return codomain_size_; }

    /// Source-ordered (source, target) pairs.
    const std::vector<Pair>& pairs() const { return pairs_; }

    std::optional<std::size_t> operator()(std::size_t x) const;
    std::optional<std::size_t> preimage(std::size_t y) const;

    bool defined_at(std::size_t x) const { return (*this)(x).has_value(); }
    bool is_total_bijection() const;

    /// Number of sources on which the injection is defined.
    std::size_t size() const { return pairs_.size(); }

    friend auto operator<=>(const PartialInjection&, const PartialInjection&) = default;

private:
    std::size_t domain_size_ = 0;
    std::size_t codomain_size_ = 0;
    std::vector<Pair> pairs_;
};

/// outer ∘ inner.  Throws std::invalid_argument on a dimension mismatch.
PartialInjection compose(const PartialInjection& outer, const PartialInjection& inner);

PartialInjection inverse(const PartialInjection& f);

/// f restricted to `subset`; throws std::invalid_argument when `subset`
/// leaves Dom f.
PartialInjection restrict(const PartialInjection& f, const std::set<std::size_t>& subset);

std::set<std::size_t> domain(const PartialInjection& f);
std::set<std::size_t> image(const PartialInjection& f);
std::size_t domain_size_of(const PartialInjection& f);

/// f(S) for the points of S in Dom f.
std::set<std::size_t> apply(const PartialInjection& f, const std::set<std::size_t>& subset);

/// Every partial injection from an m-set into an n-set, each exactly once.
/// Order: domains as sorted index lists in lexicographic order ({} < {0} <
/// {0,1} < {1} ...), then target tuples in lexicographic order.
std::vector<PartialInjection> enumerate_partial_injections(std::size_t m, std::size_t n);

/// Σ_s C(m,s)·C(n,s)·s!
std::uint64_t count_partial_injections(std::size_t m, std::size_t n);

std::uint64_t binomial(std::uint64_t n, std::uint64_t k);
std::uint64_t factorial(std::uint64_t n);

/// Debug rendering, e.g. "{0→2,1→0}".
std::string to_string(const PartialInjection& f);

}  // namespace revfa
