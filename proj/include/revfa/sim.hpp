#pragma once

// Simulation of one-way and sweeping machines with full configuration traces.
//
// Sweeping positions run over 0..k+1 for an input of length k: 0 is the left
// end-marker, k+1 the right one.  A sweeping computation accepts when it can
// make no further step while standing on an end-marker where acceptance is
// effective (the right one; also the left one for minus states in
// both-sides mode) in an accepting state.
//
// Pass counting: a trace has one pass plus one more for every reversal of the
// head direction.  The initial move off the left end-marker opens the first
// pass, so an input of length k accepted after a single left-to-right sweep
// has one pass even when k = 0.

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "revfa/core.hpp"

namespace revfa {

enum class Verdict { accept, reject_undefined, reject_nonaccepting, reject_loop };

std::string_view to_string(Verdict v);

struct Configuration {
    Side side = Side::plus;
    StateId state;
    std::size_t position = 0;

    friend auto operator<=>(const Configuration&, const Configuration&) = default;
};

struct Trace {
    std::vector<Configuration> configurations;
    Verdict verdict = Verdict::reject_undefined;
    std::size_t pass_count = 0;

    bool accepted() const { return verdict == Verdict::accept; }
};

/// One-way run from `start`; positions count symbols consumed.
Trace run_one_way(const OneWayMachine& m, std::string_view input, StateId start);

struct MultiRun {
    bool accepted = false;
    std::vector<std::pair<StateId, Trace>> traces;  // one per initial state
};

/// Existential run over all initial states.
MultiRun run_mrfa(const OneWayMachine& m, std::string_view input);

Trace run_sweeping(const SweepingMachine& m, std::string_view input);

std::size_t count_passes(const Trace& trace);

/// Acceptance of any machine kind.
bool accepts(const Machine& m, std::string_view input);
bool accepts(const OneWayMachine& m, std::string_view input);
bool accepts(const SweepingMachine& m, std::string_view input);

/// One configuration per line, `state @ position`, then a verdict footer.
std::string format_trace(const SweepingMachine& m, const Trace& trace);
std::string format_trace(const OneWayMachine& m, const Trace& trace);

}  // namespace revfa
