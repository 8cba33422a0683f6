#include "revfa/funcmath.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace revfa {

PartialInjection::PartialInjection(std::size_t domain_size, std::size_t codomain_size)
    : domain_size_(domain_size), codomain_size_(codomain_size) {}

PartialInjection::PartialInjection(std::size_t domain_size, std::size_t codomain_size, std::vector<Pair> pairs)
    : domain_size_(domain_size), codomain_size_(codomain_size), pairs_(std::move(pairs)) {
    std::sort(pairs_.begin(), pairs_.end());
    std::vector<bool> hit(codomain_size_, false);
    for (std::size_t i = 0; i < pairs_.size(); ++i) {
        auto [x, y] = pairs_[i];
        if (x >= domain_size_ || y >= codomain_size_) {
            throw std::invalid_argument("partial injection pair out of range");
        }
        if (i > 0 && pairs_[i - 1].first == x) throw std::invalid_argument("partial injection repeats a source");
        if (hit[y]) throw std::invalid_argument("partial injection repeats a target");
        hit[y] = true;
    }
}

PartialInjection PartialInjection::identity(std::size_t n) {
    std::vector<Pair> pairs;
    for (std::size_t i = 0; i < n; ++i) pairs.emplace_back(i, i);
    return PartialInjection(n, n, std::move(pairs));
}

std::optional<std::size_t> PartialInjection::operator()(std::size_t x) const {
    auto it = std::lower_bound(pairs_.begin(), pairs_.end(), Pair{x, 0});
    if (it != pairs_.end() && it->first == x) return it->second;
    return std::nullopt;
}

std::optional<std::size_t> PartialInjection::preimage(std::size_t y) const {
    for (const auto& [a, b] : pairs_) {
        if (b == y) return a;
    }
    return std::nullopt;
}

bool PartialInjection::is_total_bijection() const {
    return domain_size_ == codomain_size_ && pairs_.size() == domain_size_;
}

PartialInjection compose(const PartialInjection& outer, const PartialInjection& inner) {
    if (inner.codomain_size() != outer.domain_size()) {
        throw std::invalid_argument("compose: inner codomain size " + std::to_string(inner.codomain_size()) +
                                    " differs from outer domain size " + std::to_string(outer.domain_size()));
    }
    std::vector<PartialInjection::Pair> pairs;
    for (const auto& [x, y] : inner.pairs()) {
        if (auto z = outer(y)) pairs.emplace_back(x, *z);
    }
    return PartialInjection(inner.domain_size(), outer.codomain_size(), std::move(pairs));
}

PartialInjection inverse(const PartialInjection& f) {
    std::vector<PartialInjection::Pair> pairs;
    for (const auto& [x, y] : f.pairs()) pairs.emplace_back(y, x);
    return PartialInjection(f.codomain_size(), f.domain_size(), std::move(pairs));
}

PartialInjection restrict(const PartialInjection& f, const std::set<std::size_t>& subset) {
    std::vector<PartialInjection::Pair> pairs;
    for (auto x : subset) {
        auto y = f(x);
        if (!y) throw std::invalid_argument("restrict: index " + std::to_string(x) + " is outside Dom f");
        pairs.emplace_back(x, *y);
    }
    return PartialInjection(f.domain_size(), f.codomain_size(), std::move(pairs));
}

std::set<std::size_t> domain(const PartialInjection& f) {
    std::set<std::size_t> out;
    for (const auto& p : f.pairs()) out.insert(p.first);
    return out;
}

std::set<std::size_t> image(const PartialInjection& f) {
    std::set<std::size_t> out;
    for (const auto& p : f.pairs()) out.insert(p.second);
    return out;
}

std::size_t domain_size_of(const PartialInjection& f) { return f.size(); }

std::set<std::size_t> apply(const PartialInjection& f, const std::set<std::size_t>& subset) {
    std::set<std::size_t> out;
    for (auto x : subset) {
        if (auto y = f(x)) out.insert(*y);
    }
    return out;
}

std::vector<PartialInjection> enumerate_partial_injections(std::size_t m, std::size_t n) {
    std::vector<PartialInjection> out;
    std::vector<std::size_t> sources;
    std::vector<std::size_t> targets;
    std::vector<bool> used(n, false);

    // Assign targets to the current domain in lexicographic order.
    std::function<void(std::size_t)> arrange = [&](std::size_t i) {
        if (i == sources.size()) {
            std::vector<PartialInjection::Pair> pairs;
            for (std::size_t j = 0; j < sources.size(); ++j) pairs.emplace_back(sources[j], targets[j]);
            out.emplace_back(m, n, std::move(pairs));
            return;
        }
        for (std::size_t t = 0; t < n; ++t) {
            if (used[t]) continue;
            used[t] = true;
            targets.push_back(t);
            arrange(i + 1);
            targets.pop_back();
            used[t] = false;
        }
    };

    // Domains as sorted lists in lexicographic order: a prefix precedes its extensions.
    std::function<void(std::size_t)> domains = [&](std::size_t next) {
        if (sources.size() <= n) arrange(0);
        for (std::size_t x = next; x < m; ++x) {
            sources.push_back(x);
            domains(x + 1);
            sources.pop_back();
        }
    };
    domains(0);
    return out;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    std::uint64_t r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

std::uint64_t factorial(std::uint64_t n) {
    std::uint64_t r = 1;
    for (std::uint64_t i = 2; i <= n; ++i) r *= i;
    return r;
}

std::uint64_t count_partial_injections(std::size_t m, std::size_t n) {
    std::uint64_t total = 0;
    for (std::size_t s = 0; s <= std::min(m, n); ++s) total += binomial(m, s) * binomial(n, s) * factorial(s);
    return total;
}

std::string to_string(const PartialInjection& f) {
    std::string s = "{";
    for (std::size_t i = 0; i < f.pairs().size(); ++i) {
        if (i) s += ",";
        s += std::to_string(f.pairs()[i].first) + "→" + std::to_string(f.pairs()[i].second);
    }
    return s + "}";
}

}  // namespace revfa
