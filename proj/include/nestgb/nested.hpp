#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "nestgb/toric.hpp"

namespace nestgb {

// One member of A(B_1,...,B_d): its monomial over the union ring, its type
// (the A-member given by the sorted upper indices of its factors), and its
// standard expression as (group, inner index) pairs.
struct NestedMember {
    Monomial value;
    std::size_t type_idx = 0;                    // index into base.members
    std::vector<int> type;                       // sorted group indices, 0-based
    std::vector<std::pair<int, int>> factors;    // standard expression
};

struct NestedSystem {
    Configuration base;  // A over K[t]
    Presentation base_pres;
    MarkedBasis base_basis;  // G_0 over the y ring

    std::vector<Configuration> inner;  // B_i over pairwise disjoint rings
    std::vector<Presentation> inner_pres;
    std::vector<MarkedBasis> inner_bases;  // G_i over the z^(i) rings

    Ring union_ring;
    std::vector<std::size_t> group_offset;  // start of group i's variables

    Configuration result;  // A(B_1,...,B_d), sorted per convention (*)
    Presentation result_pres;
    std::vector<NestedMember> members;  // parallel to result.members

    std::map<std::vector<Exponent>, std::size_t> member_by_value;
    std::map<std::vector<int>, std::size_t> type_by_indices;

    int groups() const { return static_cast<int>(inner.size()); }
    // inner-ring monomial of group g as a union-ring monomial
    Monomial embed(const Monomial& m, int g) const;
    // group-g slice of a union-ring monomial
    Monomial project(const Monomial& m, int g) const;
    std::optional<std::size_t> member_index(const Monomial& value) const;
};

// Enumerates all factor choices per A member, deduplicates identical
// products, computes G_0..G_d when not supplied, records standard
// expressions, sorts per convention (*).  Orders default to lex with the
// construction's variable numbering.
NestedSystem build_nested(Configuration A, std::vector<Configuration> inner,
                          std::vector<OrderSpec> orders = {}, const ReduceOptions& opts = {});

// Same construction with caller-supplied bases G_0..G_d; each is validated
// as a reduced Groebner basis of the respective toric ideal.
NestedSystem build_nested_with_bases(Configuration A, std::vector<Configuration> inner,
                                     MarkedBasis base_basis, std::vector<MarkedBasis> inner_bases,
                                     const ReduceOptions& opts = {});

// Standard expression of an arbitrary product of inner members whose type
// lies in A; throws precondition_error when no such factorization exists.
std::vector<std::pair<int, int>> standard_expression(const Monomial& m, const NestedSystem& sys);

// phi_0 : K[x] -> K[y] (j = 0) and phi_j : K[x] -> K[z^(j)] (1 <= j <= d),
// extended multiplicatively from the stored standard expressions.
Monomial phi(const NestedSystem& sys, int j, const Monomial& x_monomial);

// Membership of a homogeneous binomial in I_{A(B_1,...,B_d)}, decided both
// directly (pi images) and through the phi criterion; the two routes must
// agree, and membership forces phi_0(f) to reduce to zero modulo G_0.
bool keylemma_test(const Binomial& f, const NestedSystem& sys, const ReduceOptions& opts = {});

// The explicit quadratic reduced Groebner basis built from all member pairs;
// requires G_0,...,G_d quadratic.  Leads are the rewritten pairs.
MarkedBasis main1_basis(const NestedSystem& sys, const ReduceOptions& opts = {});

}  // namespace nestgb
