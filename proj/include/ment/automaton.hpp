#pragma once

#include "ment/angles.hpp"

#include <string>
#include <vector>

namespace ment {

// Markov partition of the circle by the forward orbits of the forbidden-arc
// endpoints (plus 0 and 1/2), restricted to cells outside the forbidden arcs.
struct MarkovAutomaton {
    std::vector<Angle> points;               // the invariant set E, sorted
    std::vector<Arc> cells;                  // arcs between consecutive points of E
    std::vector<bool> allowed;               // per cell
    std::vector<std::size_t> states;         // surviving cell indices after pruning
    std::vector<std::vector<std::size_t>> succ; // transitions between surviving states
    std::size_t pruned = 0;                  // allowed cells removed as dead ends
};

MarkovAutomaton build_automaton(const std::vector<Arc>& forbidden);

// Human-readable dump: one line per state with its arc, then "i j 1" triples.
std::string dump(const MarkovAutomaton& a);

} // namespace ment
