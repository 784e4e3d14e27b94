#include "nestgb/groebner.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <tuple>

#include "nestgb/errors.hpp"

namespace nestgb {

MarkedBasis make_marked_basis(Ring ring, std::vector<MarkedBinomial> elements) {
    for (const auto& e : elements) {
        require_same_ring(e.lead.ring(), ring, "make_marked_basis");
        require_same_ring(e.tail.ring(), ring, "make_marked_basis");
        if (e.lead == e.tail) throw precondition_error("marked binomial with lead == tail");
    }
    MarkedBasis b;
    b.ring = std::move(ring);
    b.elements = std::move(elements);
    return b;
}

//////////////////////////////////////////////////////////////////////////
// Reduction
//////////////////////////////////////////////////////////////////////////

Monomial normal_form(const Monomial& m, const MarkedBasis& basis,
                     const std::function<std::size_t(const std::vector<std::size_t>&)>& pick,
                     const ReduceOptions& opts) {
    require_same_ring(m.ring(), basis.ring, "normal_form");
    Monomial cur = m;
    std::size_t steps = 0;
    std::vector<std::size_t> hits;
    for (;;) {
        hits.clear();
        for (std::size_t i = 0; i < basis.elements.size(); ++i) {
            if (divides(basis.elements[i].lead, cur)) {
                hits.push_back(i);
                if (!pick) break;  // first applicable rule
            }
        }
        if (hits.empty()) return cur;
        std::size_t i = pick ? hits[pick(hits) % hits.size()] : hits.front();
        cur = mul(quotient(cur, basis.elements[i].lead), basis.elements[i].tail);
        if (++steps > opts.max_steps)
            throw verification_error("reduction step bound exceeded (incoherent marking?)");
    }
}

Monomial normal_form(const Monomial& m, const MarkedBasis& basis, const ReduceOptions& opts) {
    return normal_form(m, basis, nullptr, opts);
}

std::optional<MarkedBinomial> normal_form_binomial(const Binomial& f, const MarkedBasis& basis,
                                                   const MonomialOrder& order,
                                                   const ReduceOptions& opts) {
    Monomial a = normal_form(f.lhs, basis, opts);
    Monomial b = normal_form(f.rhs, basis, opts);
    int c = order.compare(a, b);
    if (c == 0) return std::nullopt;
    if (c > 0) return MarkedBinomial{std::move(a), std::move(b)};
    return MarkedBinomial{std::move(b), std::move(a)};
}

std::optional<Binomial> s_pair(const MarkedBinomial& f, const MarkedBinomial& g) {
    require_same_ring(f.lead.ring(), g.lead.ring(), "s_pair");
    Monomial l = lcm(f.lead, g.lead);
    Monomial a = mul(quotient(l, f.lead), f.tail);
    Monomial b = mul(quotient(l, g.lead), g.tail);
    if (a == b) return std::nullopt;
    return Binomial{std::move(a), std::move(b)};
}

//////////////////////////////////////////////////////////////////////////
// Buchberger
//////////////////////////////////////////////////////////////////////////

namespace {

struct PairEntry {
    Exponent deg;
    std::vector<Exponent> lcm_exp;
    std::size_t i, j;
    bool operator>(const PairEntry& o) const {
        return std::tie(deg, lcm_exp, i, j) > std::tie(o.deg, o.lcm_exp, o.i, o.j);
    }
};

void push_pairs(std::priority_queue<PairEntry, std::vector<PairEntry>, std::greater<>>& queue,
                const std::vector<MarkedBinomial>& g, std::size_t fresh) {
    for (std::size_t i = 0; i < fresh; ++i) {
        Monomial l = lcm(g[i].lead, g[fresh].lead);
        queue.push(PairEntry{l.degree(), l.exponents(), i, fresh});
    }
}

// Keep only elements whose lead is divisible by no other kept lead, then
// bring every tail to normal form.  Leads are the minimal generators of the
// initial ideal, so the result is the reduced basis.
MarkedBasis autoreduce(Ring ring, std::vector<MarkedBinomial> g, const MonomialOrder& order,
                       const ReduceOptions& opts) {
    std::sort(g.begin(), g.end(), [&](const MarkedBinomial& a, const MarkedBinomial& b) {
        int c = order.compare(a.lead, b.lead);
        if (c != 0) return c < 0;
        return order.compare(a.tail, b.tail) < 0;
    });
    std::vector<MarkedBinomial> kept;
    for (auto& e : g) {
        bool redundant = false;
        for (const auto& k : kept) {
            if (divides(k.lead, e.lead)) {
                redundant = true;
                break;
            }
        }
        if (!redundant) kept.push_back(std::move(e));
    }
    MarkedBasis basis = make_marked_basis(ring, kept);
    for (auto& e : basis.elements) {
        // A lead never divides its own tail (the tail is order-smaller).
        e.tail = normal_form(e.tail, basis, opts);
        internal_check(e.lead != e.tail, "autoreduction collapsed a basis element");
    }
    basis.provenance = Provenance::Constructed;
    basis.order = order;
    return basis;
}

}  // namespace

MarkedBasis buchberger(const std::vector<Binomial>& gens, const MonomialOrder& order,
                       const ReduceOptions& opts) {
    const Ring& ring = order.ring();
    std::vector<MarkedBinomial> g;
    std::priority_queue<PairEntry, std::vector<PairEntry>, std::greater<>> queue;

    for (const auto& f : gens) {
        require_same_ring(f.lhs.ring(), ring, "buchberger");
        require_same_ring(f.rhs.ring(), ring, "buchberger");
        if (f.lhs.degree() != f.rhs.degree())
            throw precondition_error("buchberger requires homogeneous binomials");
        if (f.is_zero()) continue;
        int c = order.compare(f.lhs, f.rhs);
        g.push_back(c > 0 ? MarkedBinomial{f.lhs, f.rhs} : MarkedBinomial{f.rhs, f.lhs});
        push_pairs(queue, g, g.size() - 1);
    }

    MarkedBasis working = make_marked_basis(ring, g);
    while (!queue.empty()) {
        PairEntry p = queue.top();
        queue.pop();
        const MarkedBinomial& f1 = working.elements[p.i];
        const MarkedBinomial& f2 = working.elements[p.j];
        if (coprime(f1.lead, f2.lead)) continue;  // product criterion
        auto sp = s_pair(f1, f2);
        if (!sp) continue;
        auto red = normal_form_binomial(*sp, working, order, opts);
        if (!red) continue;
        working.elements.push_back(*red);
        push_pairs(queue, working.elements, working.elements.size() - 1);
    }
    return autoreduce(ring, std::move(working.elements), order, opts);
}

//////////////////////////////////////////////////////////////////////////
// Marking verification
//////////////////////////////////////////////////////////////////////////

std::optional<WeightCertificate> verify_marking(const MarkedBasis& basis) {
    std::size_t n = basis.ring.size();
    std::vector<LinearConstraint> rows;
    rows.reserve(basis.elements.size() + n);
    for (const auto& e : basis.elements) {
        // strict separation, homogenized: w . (lead - tail) >= 1
        LinearConstraint c;
        c.coeff.assign(n, Rational(0));
        for (std::size_t k = 0; k < n; ++k)
            c.coeff[k] = Rational(e.lead.exponent(k)) - Rational(e.tail.exponent(k));
        c.rhs = 1;
        rows.push_back(std::move(c));
    }
    for (std::size_t k = 0; k < n; ++k) {
        LinearConstraint c;
        c.coeff.assign(n, Rational(0));
        c.coeff[k] = 1;
        c.rhs = 0;
        rows.push_back(std::move(c));
    }
    auto sol = fm_feasible(n, rows);
    if (!sol) return std::nullopt;
    return WeightCertificate{basis.ring, std::move(*sol)};
}

MonomialOrder certified_order(const WeightCertificate& cert, OrderKind tie) {
    return MonomialOrder::weighted(cert.ring, cert.weights, tie);
}

bool is_standard(const Monomial& m, const MarkedBasis& basis) {
    require_same_ring(m.ring(), basis.ring, "is_standard");
    for (const auto& e : basis.elements)
        if (divides(e.lead, m)) return false;
    return true;
}

bool is_groebner_basis_of(const MarkedBasis& G, const std::vector<Binomial>& ideal_gens,
                          const std::function<Monomial(const Monomial&)>& eval,
                          const ReduceOptions& opts) {
    auto cert = verify_marking(G);
    if (!cert) throw verification_error("is_groebner_basis_of called with incoherent marking");
    MonomialOrder order = certified_order(*cert);

    // (a) every element of G lies in the ideal
    if (eval) {
        for (const auto& e : G.elements)
            if (!(eval(e.lead) == eval(e.tail))) return false;
    } else {
        MarkedBasis oracle = buchberger(ideal_gens, MonomialOrder::grevlex(G.ring), opts);
        for (const auto& e : G.elements)
            if (normal_form_binomial(Binomial{e.lead, e.tail}, oracle, order, opts)) return false;
    }

    // (b) every S-pair of G reduces to zero modulo G
    for (std::size_t i = 0; i < G.elements.size(); ++i) {
        for (std::size_t j = i + 1; j < G.elements.size(); ++j) {
            auto sp = s_pair(G.elements[i], G.elements[j]);
            if (!sp) continue;
            if (normal_form_binomial(*sp, G, order, opts)) return false;
        }
    }

    // (c) every ideal generator reduces to zero modulo G
    for (const auto& f : ideal_gens) {
        if (f.is_zero()) continue;
        if (normal_form_binomial(f, G, order, opts)) return false;
    }
    return true;
}

bool is_reduced(const MarkedBasis& basis) {
    for (std::size_t i = 0; i < basis.elements.size(); ++i) {
        for (std::size_t j = 0; j < basis.elements.size(); ++j) {
            if (i == j) continue;
            if (divides(basis.elements[i].lead, basis.elements[j].lead)) return false;
            if (divides(basis.elements[i].lead, basis.elements[j].tail)) return false;
        }
    }
    return true;
}

bool is_quadratic(const MarkedBasis& basis) {
    for (const auto& e : basis.elements)
        if (e.lead.degree() != 2 || e.tail.degree() != 2) return false;
    return true;
}

bool equal_as_marked_sets(const MarkedBasis& a, const MarkedBasis& b) {
    if (!same_ring(a.ring, b.ring) || a.size() != b.size()) return false;
    auto key = [](const MarkedBasis& basis) {
        std::vector<std::pair<std::vector<Exponent>, std::vector<Exponent>>> k;
        k.reserve(basis.size());
        for (const auto& e : basis.elements) k.emplace_back(e.lead.exponents(), e.tail.exponents());
        std::sort(k.begin(), k.end());
        return k;
    };
    return key(a) == key(b);
}

}  // namespace nestgb
