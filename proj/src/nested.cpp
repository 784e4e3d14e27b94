#include "nestgb/nested.hpp"

#include <algorithm>
#include <string>

#include "nestgb/errors.hpp"

namespace nestgb {

namespace {

// y_{i_1...i_r} for the sorted index string of an A member, 1-based digits.
// Indices are joined plainly while they stay single-digit.
VariableInfo y_var(const Monomial& base_member, bool wide) {
    VariableInfo v;
    v.name = "y_";
    bool first = true;
    for (std::size_t i = 0; i < base_member.nvars(); ++i) {
        for (Exponent k = 0; k < base_member.exponent(i); ++k) {
            if (wide && !first) v.name += '_';
            v.name += std::to_string(i + 1);
            v.display.push_back(static_cast<int>(i + 1));
            first = false;
        }
    }
    return v;
}

std::vector<int> type_of(const Monomial& base_member) {
    std::vector<int> t;
    for (std::size_t i = 0; i < base_member.nvars(); ++i) {
        if (base_member.exponent(i) > static_cast<Exponent>(1 << 20))
            throw precondition_error("base member degree out of range");
        for (Exponent k = 0; k < base_member.exponent(i); ++k) t.push_back(static_cast<int>(i));
    }
    return t;
}

// Multisets of `count` values from 0..n-1, weakly increasing.
void multisets(int n, int count, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (count == 0) {
        out.push_back(cur);
        return;
    }
    int start = cur.empty() ? 0 : cur.back();
    for (int j = start; j < n; ++j) {
        cur.push_back(j);
        multisets(n, count - 1, cur, out);
        cur.pop_back();
    }
}

Configuration ensure_weight(Configuration c) {
    if (!c.weight) return check_configuration(c.ring, c.members);
    validate_weight(c);
    return c;
}

// Reads a z monomial back into sorted (group, index) pairs.
void append_factors(const Monomial& z, int group, std::vector<std::pair<int, int>>& out) {
    for (std::size_t j = 0; j < z.nvars(); ++j)
        for (Exponent k = 0; k < z.exponent(j); ++k) out.emplace_back(group, static_cast<int>(j));
}

}  // namespace

Monomial NestedSystem::embed(const Monomial& m, int g) const {
    require_same_ring(m.ring(), inner[g].ring, "embed");
    std::vector<Exponent> e(union_ring.size(), 0);
    for (std::size_t j = 0; j < m.nvars(); ++j) e[group_offset[g] + j] = m.exponent(j);
    return Monomial(union_ring, std::move(e));
}

Monomial NestedSystem::project(const Monomial& m, int g) const {
    require_same_ring(m.ring(), union_ring, "project");
    std::vector<Exponent> e(inner[g].ring.size());
    for (std::size_t j = 0; j < e.size(); ++j) e[j] = m.exponent(group_offset[g] + j);
    return Monomial(inner[g].ring, std::move(e));
}

std::optional<std::size_t> NestedSystem::member_index(const Monomial& value) const {
    auto it = member_by_value.find(value.exponents());
    if (it == member_by_value.end()) return std::nullopt;
    return it->second;
}

//////////////////////////////////////////////////////////////////////////
// Construction
//////////////////////////////////////////////////////////////////////////

namespace {

NestedSystem build_core(Configuration A, std::vector<Configuration> inner,
                        std::vector<OrderSpec> orders, std::optional<MarkedBasis> given_base,
                        std::optional<std::vector<MarkedBasis>> given_inner,
                        const ReduceOptions& opts) {
    NestedSystem sys;
    sys.base = ensure_weight(std::move(A));
    std::size_t d = sys.base.ring.size();
    if (inner.size() != d)
        throw precondition_error("need exactly one inner configuration per base variable");
    for (auto& b : inner) sys.inner.push_back(ensure_weight(std::move(b)));

    // Inner rings must be pairwise variable-disjoint; the construction is
    // unsound otherwise.
    {
        std::map<std::string, int> owner;
        for (std::size_t i = 0; i < d; ++i) {
            for (const auto& v : sys.inner[i].ring.variables()) {
                auto [it, fresh] = owner.emplace(v.name, static_cast<int>(i));
                if (!fresh)
                    throw precondition_error("inner configurations share variable '" + v.name +
                                             "' (groups " + std::to_string(it->second + 1) + " and " +
                                             std::to_string(i + 1) + ")");
            }
        }
    }

    if (orders.empty()) orders.assign(d + 1, OrderSpec{});  // lex defaults
    if (orders.size() != d + 1)
        throw precondition_error("expected d+1 monomial orders (G_0..G_d)");

    // Presentations: y over the base, z^(i) per group.
    bool wide = d > 9;
    {
        std::vector<VariableInfo> vars;
        for (const auto& m : sys.base.members) vars.push_back(y_var(m, wide));
        sys.base_pres = make_presentation(sys.base, std::move(vars));
    }
    for (std::size_t i = 0; i < d; ++i) {
        std::vector<VariableInfo> vars;
        for (std::size_t j = 0; j < sys.inner[i].members.size(); ++j)
            vars.push_back(VariableInfo{
                "z" + std::to_string(i + 1) + "_" + std::to_string(j + 1),
                {static_cast<int>(i + 1), static_cast<int>(j + 1)}});
        sys.inner_pres.push_back(make_presentation(sys.inner[i], std::move(vars)));
    }

    // A supplied basis is validated up front: the standard expressions below
    // lean on it being a genuine Groebner basis of the toric ideal.
    auto adopt_basis = [&](MarkedBasis given, const Configuration& c, const Presentation& p,
                           const char* what) {
        require_same_ring(given.ring, p.source, "build_nested (supplied basis ring)");
        auto gens = toric_generators(c, p, opts);
        auto eval = [&](const Monomial& mm) { return evaluate(p, mm); };
        if (!is_groebner_basis_of(given, gens, eval, opts))
            throw precondition_error(std::string("supplied basis is not a Groebner basis of ") +
                                     what);
        return given;
    };
    if (given_base) {
        sys.base_basis = adopt_basis(std::move(*given_base), sys.base, sys.base_pres, "I_A");
    } else {
        sys.base_basis = buchberger(toric_generators(sys.base, sys.base_pres, opts),
                                    orders[0].instantiate(sys.base_pres.source), opts);
    }
    for (std::size_t i = 0; i < d; ++i) {
        if (given_inner) {
            sys.inner_bases.push_back(adopt_basis(std::move((*given_inner)[i]), sys.inner[i],
                                                  sys.inner_pres[i], "an inner toric ideal"));
        } else {
            sys.inner_bases.push_back(buchberger(toric_generators(sys.inner[i], sys.inner_pres[i], opts),
                                                 orders[i + 1].instantiate(sys.inner_pres[i].source),
                                                 opts));
        }
    }

    // Union ring and per-group offsets.
    {
        std::vector<VariableInfo> vars;
        for (std::size_t i = 0; i < d; ++i) {
            sys.group_offset.push_back(vars.size());
            for (const auto& v : sys.inner[i].ring.variables()) vars.push_back(v);
        }
        sys.union_ring = Ring(std::move(vars));
    }

    for (std::size_t a = 0; a < sys.base.members.size(); ++a)
        sys.type_by_indices.emplace(type_of(sys.base.members[a]), a);

    // Enumerate every factor choice of every type, deduplicating identical
    // products.  Distinct types never collide: the number of group-i factors
    // is pinned by B_i's weight certificate.
    struct Raw {
        Monomial value;
        std::size_t type_idx;
        std::vector<std::pair<int, int>> factors;
    };
    std::vector<Raw> raws;
    std::map<std::vector<Exponent>, std::size_t> seen;
    for (std::size_t a = 0; a < sys.base.members.size(); ++a) {
        std::vector<int> type = type_of(sys.base.members[a]);
        if (type.empty()) throw precondition_error("base member of degree zero");
        // per-group multiset choices
        std::vector<int> groups_used;
        std::vector<std::vector<std::vector<int>>> choices;
        for (std::size_t i = 0; i < d; ++i) {
            int c = static_cast<int>(std::count(type.begin(), type.end(), static_cast<int>(i)));
            if (c == 0) continue;
            groups_used.push_back(static_cast<int>(i));
            std::vector<std::vector<int>> sets;
            std::vector<int> cur;
            multisets(static_cast<int>(sys.inner[i].members.size()), c, cur, sets);
            choices.push_back(std::move(sets));
        }
        std::vector<std::size_t> pick(choices.size(), 0);
        for (;;) {
            std::vector<std::pair<int, int>> factors;
            Monomial value = Monomial::unit(sys.union_ring);
            for (std::size_t gi = 0; gi < choices.size(); ++gi) {
                int g = groups_used[gi];
                for (int j : choices[gi][pick[gi]]) {
                    factors.emplace_back(g, j);
                    value = mul(value, sys.embed(sys.inner[g].members[j], g));
                }
            }
            auto it = seen.find(value.exponents());
            if (it == seen.end()) {
                seen.emplace(value.exponents(), raws.size());
                raws.push_back(Raw{std::move(value), a, std::move(factors)});
            } else {
                internal_check(raws[it->second].type_idx == a,
                               "inter-type collision in nested construction");
            }
            // advance the mixed-radix counter
            std::size_t gi = 0;
            while (gi < pick.size() && ++pick[gi] == choices[gi].size()) pick[gi++] = 0;
            if (gi == pick.size()) break;
        }
    }

    // Standard expressions: reduce each group's z monomial and re-read.
    for (auto& r : raws) {
        std::vector<std::pair<int, int>> std_factors;
        for (std::size_t i = 0; i < d; ++i) {
            std::vector<Exponent> ze(sys.inner_pres[i].source.size(), 0);
            for (const auto& [g, j] : r.factors)
                if (g == static_cast<int>(i)) ++ze[j];
            Monomial z(sys.inner_pres[i].source, std::move(ze));
            if (z.is_unit()) continue;
            Monomial nf = normal_form(z, sys.inner_bases[i], opts);
            append_factors(nf, static_cast<int>(i), std_factors);
        }
        r.factors = std::move(std_factors);
        // the product of the standard factors is still the member
        Monomial prod = Monomial::unit(sys.union_ring);
        for (const auto& [g, j] : r.factors) prod = mul(prod, sys.embed(sys.inner[g].members[j], g));
        internal_check(prod == r.value, "standard expression changed the product");
    }

    // Convention (*): t images weakly decreasing in lex; ties refined by the
    // full exponent vector, descending.
    MonomialOrder tlex = MonomialOrder::lex(sys.base.ring);
    std::sort(raws.begin(), raws.end(), [&](const Raw& x, const Raw& y) {
        int c = tlex.compare(sys.base.members[x.type_idx], sys.base.members[y.type_idx]);
        if (c != 0) return c > 0;
        return x.value.exponents() > y.value.exponents();
    });

    // Result configuration with the induced weight: union weight on a
    // group-i variable is w_A[i] * w_{B_i}[var].
    {
        std::vector<Rational> w(sys.union_ring.size());
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < sys.inner[i].ring.size(); ++j)
                w[sys.group_offset[i] + j] = (*sys.base.weight)[i] * (*sys.inner[i].weight)[j];
        std::vector<Monomial> values;
        values.reserve(raws.size());
        for (const auto& r : raws) values.push_back(r.value);
        sys.result = Configuration{sys.union_ring, std::move(values), std::move(w)};
        validate_weight(sys.result);
    }
    sys.result_pres = make_presentation(sys.result);

    for (std::size_t k = 0; k < raws.size(); ++k) {
        NestedMember m;
        m.value = raws[k].value;
        m.type_idx = raws[k].type_idx;
        m.type = type_of(sys.base.members[m.type_idx]);
        m.factors = std::move(raws[k].factors);
        std::sort(m.factors.begin(), m.factors.end());
        sys.member_by_value.emplace(m.value.exponents(), k);
        sys.members.push_back(std::move(m));
    }
    return sys;
}

}  // namespace

NestedSystem build_nested(Configuration A, std::vector<Configuration> inner,
                          std::vector<OrderSpec> orders, const ReduceOptions& opts) {
    return build_core(std::move(A), std::move(inner), std::move(orders), std::nullopt, std::nullopt,
                      opts);
}

NestedSystem build_nested_with_bases(Configuration A, std::vector<Configuration> inner,
                                     MarkedBasis base_basis, std::vector<MarkedBasis> inner_bases,
                                     const ReduceOptions& opts) {
    if (inner_bases.size() != inner.size())
        throw precondition_error("need one inner basis per inner configuration");
    return build_core(std::move(A), std::move(inner), {}, std::move(base_basis),
                      std::move(inner_bases), opts);
}

//////////////////////////////////////////////////////////////////////////
// Standard expressions and the phi maps
//////////////////////////////////////////////////////////////////////////

namespace {

// Factor `p` into exactly `count` members of `b`, indices weakly increasing.
bool factor_into_members(const Configuration& b, const Monomial& p, int count, int start,
                         std::vector<int>& acc) {
    if (count == 0) return p.is_unit();
    for (int j = start; j < static_cast<int>(b.members.size()); ++j) {
        if (!divides(b.members[j], p)) continue;
        acc.push_back(j);
        if (factor_into_members(b, quotient(p, b.members[j]), count - 1, j, acc)) return true;
        acc.pop_back();
    }
    return false;
}

}  // namespace

std::vector<std::pair<int, int>> standard_expression(const Monomial& m, const NestedSystem& sys) {
    require_same_ring(m.ring(), sys.union_ring, "standard_expression");
    if (auto idx = sys.member_index(m)) return sys.members[*idx].factors;

    // Group factor counts are pinned by the inner weight certificates.
    std::size_t d = sys.inner.size();
    std::vector<int> type;
    std::vector<Monomial> parts;
    for (std::size_t i = 0; i < d; ++i) {
        Monomial p = sys.project(m, static_cast<int>(i));
        parts.push_back(p);
        Rational c(0);
        const auto& w = *sys.inner[i].weight;
        for (std::size_t j = 0; j < w.size(); ++j)
            if (p.exponent(j) != 0) c += w[j] * Rational(p.exponent(j));
        if (c.get_den() != 1 || c < 0 || !c.get_num().fits_slong_p())
            throw precondition_error("monomial is not a product of inner members");
        long count = c.get_num().get_si();
        for (long k = 0; k < count; ++k) type.push_back(static_cast<int>(i));
    }
    if (sys.type_by_indices.find(type) == sys.type_by_indices.end())
        throw precondition_error("monomial admits no factorization of a type in A");

    for (std::size_t i = 0; i < d; ++i) {
        int count = static_cast<int>(std::count(type.begin(), type.end(), static_cast<int>(i)));
        std::vector<int> acc;
        if (!factor_into_members(sys.inner[i], parts[i], count, 0, acc))
            throw precondition_error("monomial admits no factorization into inner members");
    }
    // Factorizable with a type in A means the monomial is a member, and the
    // construction enumerated all members.
    throw internal_error("factorizable product missing from the member table");
}

Monomial phi(const NestedSystem& sys, int j, const Monomial& x_monomial) {
    require_same_ring(x_monomial.ring(), sys.result_pres.source, "phi");
    if (j < 0 || j > sys.groups()) throw precondition_error("phi group index out of range");
    if (j == 0) {
        std::vector<Exponent> e(sys.base_pres.source.size(), 0);
        for (std::size_t k = 0; k < x_monomial.nvars(); ++k) {
            Exponent c = x_monomial.exponent(k);
            if (c == 0) continue;
            std::size_t y = sys.members[k].type_idx;
            e[y] = checked_add(e[y], c);
        }
        return Monomial(sys.base_pres.source, std::move(e));
    }
    int g = j - 1;
    std::vector<Exponent> e(sys.inner_pres[g].source.size(), 0);
    for (std::size_t k = 0; k < x_monomial.nvars(); ++k) {
        Exponent c = x_monomial.exponent(k);
        if (c == 0) continue;
        for (const auto& [grp, idx] : sys.members[k].factors)
            if (grp == g) e[idx] = checked_add(e[idx], c);
    }
    return Monomial(sys.inner_pres[g].source, std::move(e));
}

//////////////////////////////////////////////////////////////////////////
// Lemma test and the explicit basis
//////////////////////////////////////////////////////////////////////////

bool keylemma_test(const Binomial& f, const NestedSystem& sys, const ReduceOptions& opts) {
    require_same_ring(f.lhs.ring(), sys.result_pres.source, "keylemma_test");
    require_same_ring(f.rhs.ring(), sys.result_pres.source, "keylemma_test");
    if (f.lhs.degree() != f.rhs.degree())
        throw precondition_error("keylemma_test requires a homogeneous binomial");

    bool direct = evaluate(sys.result_pres, f.lhs) == evaluate(sys.result_pres, f.rhs);

    bool via_phi = true;
    for (int g = 1; g <= sys.groups(); ++g) {
        Monomial u = phi(sys, g, f.lhs);
        Monomial v = phi(sys, g, f.rhs);
        bool image_eq =
            evaluate(sys.inner_pres[g - 1], u) == evaluate(sys.inner_pres[g - 1], v);
        bool nf_zero = normal_form(u, sys.inner_bases[g - 1], opts) ==
                       normal_form(v, sys.inner_bases[g - 1], opts);
        if (image_eq != nf_zero)
            throw verification_error("inner basis membership routes disagree");
        if (!nf_zero) via_phi = false;
    }

    if (direct != via_phi)
        throw verification_error("keylemma routes disagree: direct membership vs phi criterion");
    if (direct) {
        Monomial u0 = normal_form(phi(sys, 0, f.lhs), sys.base_basis, opts);
        Monomial v0 = normal_form(phi(sys, 0, f.rhs), sys.base_basis, opts);
        if (!(u0 == v0))
            throw verification_error("membership holds but phi_0(f) does not lie in I_A");
    }
    return direct;
}

MarkedBasis main1_basis(const NestedSystem& sys, const ReduceOptions& opts) {
    if (!is_quadratic(sys.base_basis))
        throw precondition_error("main1_basis requires a quadratic G_0");
    for (const auto& gi : sys.inner_bases)
        if (!is_quadratic(gi))
            throw precondition_error("main1_basis requires quadratic inner bases");

    std::size_t eta = sys.members.size();
    std::size_t d = sys.inner.size();
    const Ring& xring = sys.result_pres.source;
    MonomialOrder tlex = MonomialOrder::lex(sys.base.ring);

    std::vector<MarkedBinomial> out;
    for (std::size_t a = 0; a < eta; ++a) {
        for (std::size_t b = a; b < eta; ++b) {
            Monomial lead = mul(Monomial::variable(xring, a), Monomial::variable(xring, b));

            // types of the rewritten pair from the G_0 normal form
            Monomial ynf = normal_form(mul(phi(sys, 0, Monomial::variable(xring, a)),
                                           phi(sys, 0, Monomial::variable(xring, b))),
                                       sys.base_basis, opts);
            std::size_t t1 = sys.base.members.size(), t2 = t1;
            for (std::size_t y = 0; y < ynf.nvars(); ++y) {
                for (Exponent k = 0; k < ynf.exponent(y); ++k) {
                    if (t1 == sys.base.members.size()) t1 = y;
                    else t2 = y;
                }
            }
            internal_check(t2 != sys.base.members.size(), "phi_0 normal form is not quadratic");
            // gamma takes the lex-larger type
            std::size_t tg = t1, td = t2;
            if (t1 != t2 && tlex.compare(sys.base.members[t1], sys.base.members[t2]) < 0)
                std::swap(tg, td);

            // combined group factors from the G_j normal forms, smallest
            // lower indices into gamma's slots
            Monomial vg = Monomial::unit(sys.union_ring);
            Monomial vd = Monomial::unit(sys.union_ring);
            for (std::size_t g = 0; g < d; ++g) {
                Monomial znf = normal_form(mul(phi(sys, static_cast<int>(g) + 1, Monomial::variable(xring, a)),
                                               phi(sys, static_cast<int>(g) + 1, Monomial::variable(xring, b))),
                                           sys.inner_bases[g], opts);
                std::vector<int> idx;
                for (std::size_t j = 0; j < znf.nvars(); ++j)
                    for (Exponent k = 0; k < znf.exponent(j); ++k) idx.push_back(static_cast<int>(j));
                Exponent cg = sys.base.members[tg].exponent(g);
                Exponent cd = sys.base.members[td].exponent(g);
                internal_check(static_cast<Exponent>(idx.size()) == cg + cd,
                               "group factor count mismatch in main1 pair");
                for (Exponent k = 0; k < cg; ++k)
                    vg = mul(vg, sys.embed(sys.inner[g].members[idx[k]], static_cast<int>(g)));
                for (Exponent k = cg; k < cg + cd; ++k)
                    vd = mul(vd, sys.embed(sys.inner[g].members[idx[k]], static_cast<int>(g)));
            }
            auto ig = sys.member_index(vg);
            auto id = sys.member_index(vd);
            internal_check(ig && id, "main1 rewrite left the configuration");
            Monomial tail = mul(Monomial::variable(xring, *ig), Monomial::variable(xring, *id));
            if (tail == lead) continue;
            out.push_back(MarkedBinomial{std::move(lead), std::move(tail)});
        }
    }

    MonomialOrder xlex = MonomialOrder::lex(xring);
    std::sort(out.begin(), out.end(), [&](const MarkedBinomial& p, const MarkedBinomial& q) {
        return xlex.compare(p.lead, q.lead) < 0;
    });
    MarkedBasis basis = make_marked_basis(xring, std::move(out));
    internal_check(is_reduced(basis), "main1 basis is not autoreduced");
    return basis;
}

}  // namespace nestgb
