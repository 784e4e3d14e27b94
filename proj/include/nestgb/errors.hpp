#pragma once

#include <stdexcept>
#include <string>

namespace nestgb {

// Input text that does not conform to a file format or to monomial syntax.
struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A caller violated an operation's contract (ring mismatch, duplicate
// members, shared inner variables, infeasible constraints, ...).
struct precondition_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A requested verification failed hard: incoherent marking, reduction step
// bound exceeded, or two independent routes disagreeing.
struct verification_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A broken internal invariant.  Never caught by the CLI.
struct internal_error : std::logic_error {
    using std::logic_error::logic_error;
};

inline void internal_check(bool cond, const char* msg) {
    if (!cond) throw internal_error(msg);
}

}  // namespace nestgb
