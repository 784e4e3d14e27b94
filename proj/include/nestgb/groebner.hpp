#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "nestgb/linalg.hpp"
#include "nestgb/ring.hpp"

namespace nestgb {

// Pure-difference binomial lhs - rhs with no distinguished term.
struct Binomial {
    Monomial lhs, rhs;
    bool is_zero() const { return lhs == rhs; }
};

// Rewrite rule lead -> tail; lead != tail.
struct MarkedBinomial {
    Monomial lead, tail;
};

enum class Provenance { Constructed, MarkedOnly };

struct MarkedBasis {
    Ring ring;
    std::vector<MarkedBinomial> elements;
    Provenance provenance = Provenance::MarkedOnly;
    std::optional<MonomialOrder> order;  // set when provenance is Constructed

    std::size_t size() const { return elements.size(); }
    bool empty() const { return elements.empty(); }
};

MarkedBasis make_marked_basis(Ring ring, std::vector<MarkedBinomial> elements);

struct ReduceOptions {
    std::size_t max_steps = 1'000'000;
};

// Repeatedly replaces a divisor equal to some lead by the corresponding
// tail (first applicable rule in basis order) until no lead divides.
// Exceeding the step bound signals an incoherent marking.
Monomial normal_form(const Monomial& m, const MarkedBasis& basis, const ReduceOptions& opts = {});

// Strategy hook: `pick` selects among the indices of currently applicable
// rules.  Used to check that verified bases are confluent.
Monomial normal_form(const Monomial& m, const MarkedBasis& basis,
                     const std::function<std::size_t(const std::vector<std::size_t>&)>& pick,
                     const ReduceOptions& opts = {});

// Reduces both sides; nullopt when they coincide, otherwise the binomial of
// the two normal forms with the `order`-larger side as lead.
std::optional<MarkedBinomial> normal_form_binomial(const Binomial& f, const MarkedBasis& basis,
                                                   const MonomialOrder& order,
                                                   const ReduceOptions& opts = {});

// (L/lead f) tail f - (L/lead g) tail g with L = lcm(lead f, lead g);
// nullopt when the two products coincide.
std::optional<Binomial> s_pair(const MarkedBinomial& f, const MarkedBinomial& g);

// Reduced Groebner basis of the binomial ideal generated by `gens`:
// autoreduced, deterministic element order (leads ascending under `order`).
// Generators must be homogeneous.
MarkedBasis buchberger(const std::vector<Binomial>& gens, const MonomialOrder& order,
                       const ReduceOptions& opts = {});

// Nonnegative rational weights with weights.lead > weights.tail strictly for
// every element; witnesses that some monomial order realizes the marking.
struct WeightCertificate {
    Ring ring;
    std::vector<Rational> weights;
};

std::optional<WeightCertificate> verify_marking(const MarkedBasis& basis);

// The weight order realizing a certificate (ties broken by `tie`).
MonomialOrder certified_order(const WeightCertificate& cert, OrderKind tie = OrderKind::GrevLex);

// True iff (a) every element of G lies in the ideal, (b) every S-pair of G
// reduces to zero modulo G, and (c) every generator reduces to zero modulo G.
// Requires a coherent marking (throws verification_error otherwise).  When
// `eval` is given, (a) uses image equality instead of reduction modulo a
// Buchberger basis of the generators.
bool is_groebner_basis_of(const MarkedBasis& G, const std::vector<Binomial>& ideal_gens,
                          const std::function<Monomial(const Monomial&)>& eval = nullptr,
                          const ReduceOptions& opts = {});

// No lead of the basis divides m.
bool is_standard(const Monomial& m, const MarkedBasis& basis);

bool is_reduced(const MarkedBasis& basis);
bool is_quadratic(const MarkedBasis& basis);

// Marked sets compared as sets of (lead, tail) pairs.
bool equal_as_marked_sets(const MarkedBasis& a, const MarkedBasis& b);

}  // namespace nestgb
