#pragma once

#include <vector>

#include "nestgb/nested.hpp"
#include "nestgb/toric.hpp"

namespace nestgb {

// All degree-tau monomials in t_1..t_d whose window sums over [from_i, to_i]
// lie in [lo_i, hi_i].  Indices are 1-based as in the file format.
struct SegreVeroneseSpec {
    int d = 0;
    int tau = 2;
    std::vector<int> lo;    // c_i
    std::vector<int> hi;    // b_i
    std::vector<int> from;  // p_i
    std::vector<int> to;    // q_i

    std::size_t constraints() const { return lo.size(); }
    void validate() const;
};

// Members in lex-descending order; reports an infeasible constraint set
// distinctly from other errors.
Configuration sv_configuration(const SegreVeroneseSpec& spec);

// Index strings are weakly increasing sequences over 1..d.
std::vector<int> sort_string(std::vector<int> s, int d);

// Presentation with variables x_{j_1...j_tau} named by the sorted index
// string of each member.
Presentation sv_presentation(const Configuration& config);

// The sorting Groebner basis: for every pair of members, interleave the two
// index strings, sort, and split into odd/even subsequences; nonsorted pairs
// become leads.  A rewrite leaving the configuration is a hard error.
MarkedBasis sorting_gb(const Configuration& config, const Presentation& pres);

// The quadratic basis for nested configurations over a Segre-Veronese base:
// types are rewritten by the sorting operator, group factors by the inner
// bases, lower indices weakly increasing inside equal-type blocks.  When all
// inner initial ideals are squarefree the emitted leads are checked to be
// squarefree too.
MarkedBasis main2_basis(const NestedSystem& sys, const ReduceOptions& opts = {});

}  // namespace nestgb
