#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nestgb/groebner.hpp"
#include "nestgb/ring.hpp"

namespace nestgb {

// A duplicate-free monomial set admitting a nonnegative rational weight w
// with w . exponents(m) = 1 for every member.
struct Configuration {
    Ring ring;
    std::vector<Monomial> members;
    std::optional<std::vector<Rational>> weight;
};

// Finds a weight certificate by exact LP feasibility, or throws.
Configuration check_configuration(Ring ring, std::vector<Monomial> members);

// Exact recheck of the stored certificate (throws on violation).
void validate_weight(const Configuration& config);

// pi : K[source] -> K[target], source variable k |-> members[k], extended
// multiplicatively.
struct Presentation {
    Ring source;
    Ring target;
    std::vector<Monomial> members;
};

// Default source variable names are `x_[<member text>]`; pass `names` to
// override (one per member).  The VariableInfo overload also carries display
// index tuples.
Presentation make_presentation(const Configuration& config,
                               std::vector<std::string> names = {});
Presentation make_presentation(const Configuration& config, std::vector<VariableInfo> vars);

Monomial evaluate(const Presentation& pres, const Monomial& m);

// Generating set of ker(pi): integer lattice kernel of the exponent matrix,
// then saturation with respect to every source variable by iterated
// Groebner computations.  Requires a weight certificate.
std::vector<Binomial> toric_generators(const Configuration& config, const Presentation& pres,
                                       const ReduceOptions& opts = {});

// Dumber second oracle: buckets all source monomials of degree <= bound by
// pi image and returns representative-vs-other difference binomials.
// Complete for ideal membership up to the bound.
std::vector<Binomial> kernel_enumerate(const Configuration& config, const Presentation& pres,
                                       int degree_bound, std::size_t bucket_cap = 2'000'000);

}  // namespace nestgb
