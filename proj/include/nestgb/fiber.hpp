#pragma once

#include <cstdint>
#include <vector>

#include "nestgb/toric.hpp"

namespace nestgb {

// Random walk on the fiber of the initial state's image: basis binomials act
// as moves (subtract lead, add tail, or the reverse), uniform proposal,
// rejecting steps that would go negative.  states[0] is the initial state;
// one entry is appended per step, rejections repeat the current state.
// Deterministic given the seed.
std::vector<Monomial> fiber_walk(const Presentation& pres, const MarkedBasis& moves,
                                 const Monomial& initial, std::uint64_t steps, std::uint64_t seed);

}  // namespace nestgb
