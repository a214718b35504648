#pragma once

// Shared recurrence-driven solvers. Every engine iterates a deterministic
// step function and stops at the first state it has seen before; the first
// repeat necessarily closes the minimal cycle, so classification is exact.

#include <map>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "cogmap/core.hpp"

namespace cogmap::detail {

// Step: State -> State. Key: State -> light comparable value.
template <class State, class Step, class Key>
BasicHiddenPattern<State> iterate_pattern(State seed, Step step, Key key,
                                          std::size_t max_iters) {
    BasicHiddenPattern<State> out;
    out.trace.push_back(std::move(seed));
    using KeyType = std::remove_cvref_t<decltype(key(out.trace.front()))>;
    std::map<KeyType, std::size_t> seen;
    seen.emplace(key(out.trace.front()), 0);

    for (std::size_t iter = 1; iter <= max_iters; ++iter) {
        State next = step(out.trace.back());
        auto hit = seen.find(key(next));
        if (hit != seen.end()) {
            out.cycle_entry = hit->second;
            out.states.assign(out.trace.begin() + static_cast<std::ptrdiff_t>(out.cycle_entry),
                              out.trace.end());
            out.kind = out.states.size() == 1 ? PatternKind::fixed_point
                                              : PatternKind::limit_cycle;
            return out;
        }
        seen.emplace(key(next), out.trace.size());
        out.trace.push_back(std::move(next));
    }
    throw IterationCapError("no recurrence within " + std::to_string(max_iters) +
                                " iterations",
                            max_iters);
}

// Minimal period of the cyclic sequence `cycle` (its length is a period).
template <class State>
std::size_t minimal_rotation_period(const std::vector<State>& cycle) {
    const std::size_t n = cycle.size();
    for (std::size_t p = 1; p < n; ++p) {
        if (n % p != 0) continue;
        bool ok = true;
        for (std::size_t i = 0; ok && i + p < n; ++i) {
            if (!(cycle[i] == cycle[i + p])) ok = false;
        }
        if (ok) return p;
    }
    return n;
}

// Alternating two-space iteration. `fwd` maps a domain state to the range
// state produced from it; `bwd` maps a range state back. Recurrence is
// detected on domain states; range states ride along index-aligned.
template <class State, class Fwd, class Bwd, class Key>
BasicHiddenPair<State> iterate_pair(State d0, Fwd fwd, Bwd bwd, Key key,
                                    std::size_t max_iters) {
    std::vector<State> dom;
    std::vector<State> rng;
    dom.push_back(std::move(d0));
    rng.push_back(fwd(dom.front()));
    using KeyType = std::remove_cvref_t<decltype(key(dom.front()))>;
    std::map<KeyType, std::size_t> seen;
    seen.emplace(key(dom.front()), 0);

    std::size_t cycle_entry = 0;
    bool closed = false;
    for (std::size_t iter = 1; iter <= max_iters && !closed; ++iter) {
        State next = bwd(rng.back());
        auto hit = seen.find(key(next));
        if (hit != seen.end()) {
            cycle_entry = hit->second;
            closed = true;
            break;
        }
        seen.emplace(key(next), dom.size());
        dom.push_back(std::move(next));
        rng.push_back(fwd(dom.back()));
    }
    if (!closed) {
        throw IterationCapError("no domain-state recurrence within " +
                                    std::to_string(max_iters) + " iterations",
                                max_iters);
    }

    BasicHiddenPair<State> out;
    const auto entry = static_cast<std::ptrdiff_t>(cycle_entry);
    out.domain_pattern.trace = dom;
    out.domain_pattern.cycle_entry = cycle_entry;
    out.domain_pattern.states.assign(dom.begin() + entry, dom.end());
    out.domain_pattern.kind = out.domain_pattern.states.size() == 1
                                  ? PatternKind::fixed_point
                                  : PatternKind::limit_cycle;

    std::vector<State> range_cycle(rng.begin() + entry, rng.end());
    const std::size_t range_period = minimal_rotation_period(range_cycle);
    out.period_mismatch = range_period != range_cycle.size();
    range_cycle.resize(range_period, range_cycle.front());
    out.range_pattern.trace = rng;
    out.range_pattern.cycle_entry = cycle_entry;
    out.range_pattern.states = std::move(range_cycle);
    out.range_pattern.kind = out.range_pattern.states.size() == 1
                                 ? PatternKind::fixed_point
                                 : PatternKind::limit_cycle;
    return out;
}

} // namespace cogmap::detail
