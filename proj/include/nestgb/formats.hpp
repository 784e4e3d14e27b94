#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "nestgb/groebner.hpp"
#include "nestgb/segre_veronese.hpp"
#include "nestgb/toric.hpp"

namespace nestgb {

// Line-based text formats.  `#` starts a comment, blank lines are skipped,
// parse errors carry <name>:<line>.

// Configuration:    ring: t1 t2 ... / one member per line / optional weight:
Configuration parse_configuration(std::istream& in, const std::string& name);
void print_configuration(std::ostream& out, const Configuration& config);

// Segre-Veronese:   sv: d=4 tau=2  /  range p..q min c max b  per constraint
SegreVeroneseSpec parse_sv_spec(std::istream& in, const std::string& name);
void print_sv_spec(std::ostream& out, const SegreVeroneseSpec& spec);

// Nested system:    base: then a configuration or sv section; inner i: per group
struct NestedInput {
    Configuration base;
    std::optional<SegreVeroneseSpec> base_spec;  // set when base was given as sv
    std::vector<Configuration> inner;
};
NestedInput parse_nested_input(std::istream& in, const std::string& name);
void print_nested_input(std::ostream& out, const NestedInput& input);

// Marked bases:     LEAD -> TAIL  per line, ring supplied by the caller
MarkedBasis parse_basis(std::istream& in, const std::string& name, const Ring& ring);
void print_basis(std::ostream& out, const MarkedBasis& basis);

// Observed counts:  <variable> <count>  per line, omitted variables are 0
Monomial parse_observed(std::istream& in, const std::string& name, const Ring& ring);
void print_observed(std::ostream& out, const Monomial& observed);

// States file: one monomial per line.
void print_states(std::ostream& out, const std::vector<Monomial>& states);

// Whole file as bytes; used so one read feeds both digest and parser.
std::string slurp_file(const std::string& path);

// Convenience wrappers that open the file and tag errors with its path.
Configuration load_configuration(const std::string& path);
SegreVeroneseSpec load_sv_spec(const std::string& path);
NestedInput load_nested_input(const std::string& path);
MarkedBasis load_basis(const std::string& path, const Ring& ring);
Monomial load_observed(const std::string& path, const Ring& ring);

}  // namespace nestgb
