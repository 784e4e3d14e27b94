#include "nestgb/toric.hpp"

#include <algorithm>
#include <map>

#include "nestgb/errors.hpp"
#include "nestgb/linalg.hpp"

namespace nestgb {

Configuration check_configuration(Ring ring, std::vector<Monomial> members) {
    if (members.empty()) throw precondition_error("empty configuration");
    for (std::size_t i = 0; i < members.size(); ++i) {
        require_same_ring(members[i].ring(), ring, "check_configuration");
        for (std::size_t j = i + 1; j < members.size(); ++j)
            if (members[i] == members[j])
                throw precondition_error("duplicate configuration member " + to_string(members[i]));
    }

    // w >= 0 with w . a = 1 for every member, as two-sided inequalities.
    std::size_t d = ring.size();
    std::vector<LinearConstraint> rows;
    for (const auto& m : members) {
        LinearConstraint ge, le;
        ge.coeff.assign(d, Rational(0));
        le.coeff.assign(d, Rational(0));
        for (std::size_t k = 0; k < d; ++k) {
            ge.coeff[k] = Rational(m.exponent(k));
            le.coeff[k] = -Rational(m.exponent(k));
        }
        ge.rhs = 1;
        le.rhs = -1;
        rows.push_back(std::move(ge));
        rows.push_back(std::move(le));
    }
    for (std::size_t k = 0; k < d; ++k) {
        LinearConstraint c;
        c.coeff.assign(d, Rational(0));
        c.coeff[k] = 1;
        c.rhs = 0;
        rows.push_back(std::move(c));
    }
    auto w = fm_feasible(d, rows);
    if (!w) throw precondition_error("monomial set admits no weight vector (not a configuration)");

    Configuration config{std::move(ring), std::move(members), std::move(*w)};
    validate_weight(config);
    return config;
}

void validate_weight(const Configuration& config) {
    if (!config.weight) throw precondition_error("configuration has no weight certificate");
    const auto& w = *config.weight;
    if (w.size() != config.ring.size()) throw precondition_error("weight length mismatch");
    for (const auto& wi : w)
        if (wi < 0) throw precondition_error("negative weight entry");
    for (const auto& m : config.members) {
        Rational dot(0);
        for (std::size_t k = 0; k < w.size(); ++k)
            if (m.exponent(k) != 0) dot += w[k] * Rational(m.exponent(k));
        if (dot != 1)
            throw precondition_error("weight certificate violated by member " + to_string(m));
    }
}

Presentation make_presentation(const Configuration& config, std::vector<std::string> names) {
    if (names.empty()) {
        names.reserve(config.members.size());
        for (const auto& m : config.members) names.push_back("x_[" + to_string(m) + "]");
    }
    std::vector<VariableInfo> vars;
    vars.reserve(names.size());
    for (auto& n : names) vars.push_back(VariableInfo{std::move(n), {}});
    return make_presentation(config, std::move(vars));
}

Presentation make_presentation(const Configuration& config, std::vector<VariableInfo> vars) {
    if (vars.size() != config.members.size())
        throw precondition_error("presentation name count mismatch");
    Presentation p;
    p.source = Ring(std::move(vars));
    p.target = config.ring;
    p.members = config.members;
    return p;
}

Monomial evaluate(const Presentation& pres, const Monomial& m) {
    require_same_ring(m.ring(), pres.source, "evaluate");
    std::vector<Exponent> e(pres.target.size(), 0);
    for (std::size_t k = 0; k < m.nvars(); ++k) {
        Exponent c = m.exponent(k);
        if (c == 0) continue;
        const Monomial& img = pres.members[k];
        for (std::size_t t = 0; t < e.size(); ++t)
            e[t] = checked_add(e[t], checked_mul(c, img.exponent(t)));
    }
    return Monomial(pres.target, std::move(e));
}

//////////////////////////////////////////////////////////////////////////
// Toric ideal generators
//////////////////////////////////////////////////////////////////////////

namespace {

Binomial binomial_from_kernel_vector(const Ring& ring, const std::vector<Integer>& v) {
    std::vector<Exponent> pos(ring.size(), 0), neg(ring.size(), 0);
    for (std::size_t k = 0; k < v.size(); ++k) {
        if (!v[k].fits_slong_p()) throw std::overflow_error("kernel vector entry overflow");
        long c = v[k].get_si();
        if (c > 0) pos[k] = c;
        else if (c < 0) neg[k] = -c;
    }
    return Binomial{Monomial(ring, std::move(pos)), Monomial(ring, std::move(neg))};
}

// Divide both sides by the largest common power of variable k.
MarkedBinomial strip_variable(const MarkedBinomial& e, std::size_t k) {
    Exponent s = std::min(e.lead.exponent(k), e.tail.exponent(k));
    if (s == 0) return e;
    std::vector<Exponent> a = e.lead.exponents(), b = e.tail.exponents();
    a[k] -= s;
    b[k] -= s;
    return MarkedBinomial{Monomial(e.lead.ring(), std::move(a)), Monomial(e.tail.ring(), std::move(b))};
}

}  // namespace

std::vector<Binomial> toric_generators(const Configuration& config, const Presentation& pres,
                                       const ReduceOptions& opts) {
    validate_weight(config);
    const Ring& ring = pres.source;
    if (pres.members.size() != config.members.size() || !same_ring(pres.target, config.ring))
        throw precondition_error("presentation does not match configuration");

    // Rows of the exponent matrix are target variables; columns are members.
    std::size_t n = config.members.size();
    std::vector<std::vector<Integer>> rows(config.ring.size(), std::vector<Integer>(n, 0));
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t t = 0; t < config.ring.size(); ++t)
            rows[t][j] = static_cast<long>(config.members[j].exponent(t));

    std::vector<Binomial> gens;
    for (const auto& v : integer_kernel(rows, n)) {
        Binomial b = binomial_from_kernel_vector(ring, v);
        if (!b.is_zero()) gens.push_back(std::move(b));
    }

    // Saturate one variable at a time: a weight order with that variable at
    // weight zero puts it into no lead unless it divides the whole binomial.
    for (std::size_t k = 0; k < n && !gens.empty(); ++k) {
        std::vector<Rational> w(n, Rational(1));
        w[k] = 0;
        MonomialOrder order = MonomialOrder::weighted(ring, std::move(w), OrderKind::GrevLex);
        MarkedBasis gb = buchberger(gens, order, opts);
        gens.clear();
        for (const auto& e : gb.elements) {
            MarkedBinomial s = strip_variable(e, k);
            gens.push_back(Binomial{s.lead, s.tail});
        }
    }

    // Soundness: every generator must respect the evaluation map.
    for (const auto& g : gens)
        internal_check(evaluate(pres, g.lhs) == evaluate(pres, g.rhs),
                       "toric generator violates the evaluation map");
    return gens;
}

std::vector<Binomial> kernel_enumerate(const Configuration& config, const Presentation& pres,
                                       int degree_bound, std::size_t bucket_cap) {
    validate_weight(config);
    if (degree_bound < 1) throw precondition_error("degree bound must be >= 1");
    const Ring& ring = pres.source;
    std::size_t n = ring.size();

    std::map<Monomial, std::vector<Monomial>, ExponentsLess> buckets;

    // All exponent vectors with total degree <= bound, lexicographic on the
    // vector, depth-first.
    std::vector<Exponent> cur(n, 0);
    auto flush = [&]() {
        Monomial m(ring, cur);
        Monomial img = evaluate(pres, m);
        auto& bucket = buckets[img];
        bucket.push_back(std::move(m));
        if (buckets.size() > bucket_cap)
            throw precondition_error("kernel_enumerate bucket cap exceeded");
    };
    auto rec = [&](auto&& self, std::size_t pos, int remaining) -> void {
        if (pos + 1 == n) {
            for (int e = remaining; e >= 0; --e) {
                cur[pos] = e;
                flush();
            }
            cur[pos] = 0;
            return;
        }
        for (int e = remaining; e >= 0; --e) {
            cur[pos] = e;
            self(self, pos + 1, remaining - e);
        }
        cur[pos] = 0;
    };
    if (n > 0) rec(rec, 0, degree_bound);

    std::vector<Binomial> out;
    for (auto& [img, bucket] : buckets) {
        for (std::size_t i = 1; i < bucket.size(); ++i)
            out.push_back(Binomial{bucket.front(), bucket[i]});
    }
    for (const auto& g : out)
        internal_check(evaluate(pres, g.lhs) == evaluate(pres, g.rhs),
                       "kernel_enumerate produced an unsound binomial");
    return out;
}

}  // namespace nestgb
