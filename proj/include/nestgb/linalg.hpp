#pragma once

#include <optional>
#include <vector>

#include "nestgb/rational.hpp"

namespace nestgb {

// One inequality  coeff . x >= rhs  over rational unknowns.
struct LinearConstraint {
    std::vector<Rational> coeff;
    Rational rhs;
};

// Exact Fourier-Motzkin feasibility.  Returns a feasible point or nullopt.
// The variable elimination order is chosen greedily (fewest pos*neg pairs);
// rows are kept primitive-integer and deduplicated to tame growth.
std::optional<std::vector<Rational>> fm_feasible(std::size_t nvars,
                                                 const std::vector<LinearConstraint>& rows);

// Z-basis of { v : M v = 0 } for an integer matrix given by rows.
// Unimodular column elimination on [M; I]; the identity columns under the
// zeroed M-columns span the full kernel lattice, not just a finite-index
// sublattice.
std::vector<std::vector<Integer>> integer_kernel(const std::vector<std::vector<Integer>>& rows,
                                                 std::size_t ncols);

}  // namespace nestgb
