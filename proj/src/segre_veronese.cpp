#include "nestgb/segre_veronese.hpp"

#include <algorithm>
#include <string>

#include "nestgb/errors.hpp"

namespace nestgb {

void SegreVeroneseSpec::validate() const {
    if (d < 1) throw precondition_error("sv spec needs d >= 1");
    if (tau < 2) throw precondition_error("sv spec needs tau >= 2");
    std::size_t n = lo.size();
    if (hi.size() != n || from.size() != n || to.size() != n)
        throw precondition_error("sv spec constraint vectors differ in length");
    for (std::size_t i = 0; i < n; ++i) {
        if (!(0 <= lo[i] && lo[i] <= hi[i]))
            throw precondition_error("sv spec needs 0 <= min <= max");
        if (!(1 <= from[i] && from[i] <= to[i] && to[i] <= d))
            throw precondition_error("sv spec needs 1 <= p <= q <= d");
    }
}

Configuration sv_configuration(const SegreVeroneseSpec& spec) {
    spec.validate();
    std::vector<std::string> names;
    for (int j = 1; j <= spec.d; ++j) names.push_back("t" + std::to_string(j));
    Ring ring(std::move(names));

    std::vector<Monomial> members;
    std::vector<Exponent> f(spec.d, 0);
    // weak compositions of tau, first variable heaviest first: that is
    // exactly lex-descending on the exponent vectors
    auto rec = [&](auto&& self, int pos, int remaining) -> void {
        if (pos + 1 == spec.d) {
            f[pos] = remaining;
            bool ok = true;
            for (std::size_t i = 0; i < spec.constraints() && ok; ++i) {
                Exponent s = 0;
                for (int j = spec.from[i] - 1; j <= spec.to[i] - 1; ++j) s += f[j];
                ok = spec.lo[i] <= s && s <= spec.hi[i];
            }
            if (ok) members.push_back(Monomial(ring, f));
            f[pos] = 0;
            return;
        }
        for (int e = remaining; e >= 0; --e) {
            f[pos] = e;
            self(self, pos + 1, remaining - e);
        }
        f[pos] = 0;
    };
    rec(rec, 0, spec.tau);

    if (members.empty())
        throw precondition_error("sv constraints are infeasible: empty configuration");
    std::vector<Rational> w(spec.d, Rational(1, spec.tau));
    Configuration config{std::move(ring), std::move(members), std::move(w)};
    validate_weight(config);
    return config;
}

std::vector<int> sort_string(std::vector<int> s, int d) {
    for (int v : s)
        if (v < 1 || v > d)
            throw precondition_error("index string entry " + std::to_string(v) + " out of 1.." +
                                     std::to_string(d));
    std::sort(s.begin(), s.end());
    return s;
}

namespace {

std::vector<int> index_string(const Monomial& m) {
    std::vector<int> s;
    for (std::size_t j = 0; j < m.nvars(); ++j)
        for (Exponent k = 0; k < m.exponent(j); ++k) s.push_back(static_cast<int>(j) + 1);
    return s;
}

VariableInfo sv_var(const std::vector<int>& s, bool wide) {
    VariableInfo v;
    v.name = "x_";
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (wide && i) v.name += '_';
        v.name += std::to_string(s[i]);
    }
    v.display = s;
    return v;
}

}  // namespace

Presentation sv_presentation(const Configuration& config) {
    bool wide = config.ring.size() > 9;
    std::vector<VariableInfo> vars;
    for (const auto& m : config.members) vars.push_back(sv_var(index_string(m), wide));
    return make_presentation(config, std::move(vars));
}

MarkedBasis sorting_gb(const Configuration& config, const Presentation& pres) {
    validate_weight(config);
    std::size_t n = config.members.size();
    if (n == 0) throw precondition_error("empty configuration");
    Exponent tau = config.members.front().degree();
    std::map<std::vector<int>, std::size_t> by_string;
    for (std::size_t k = 0; k < n; ++k) {
        if (config.members[k].degree() != tau)
            throw precondition_error("sorting_gb requires a uniform-degree configuration");
        by_string.emplace(index_string(config.members[k]), k);
    }

    const Ring& xring = pres.source;
    std::vector<MarkedBinomial> out;
    for (std::size_t a = 0; a < n; ++a) {
        std::vector<int> sa = index_string(config.members[a]);
        for (std::size_t b = a; b < n; ++b) {
            std::vector<int> sb = index_string(config.members[b]);
            std::vector<int> inter;
            for (std::size_t k = 0; k < sa.size(); ++k) {
                inter.push_back(sa[k]);
                inter.push_back(sb[k]);
            }
            std::vector<int> sorted = sort_string(inter, static_cast<int>(config.ring.size()));
            std::vector<int> odd, even;
            for (std::size_t k = 0; k < sorted.size(); ++k)
                (k % 2 == 0 ? odd : even).push_back(sorted[k]);
            auto io = by_string.find(odd);
            auto ie = by_string.find(even);
            if (io == by_string.end() || ie == by_string.end())
                throw precondition_error("sorted rewrite leaves the configuration (not closed)");
            Monomial lead = mul(Monomial::variable(xring, a), Monomial::variable(xring, b));
            Monomial tail = mul(Monomial::variable(xring, io->second), Monomial::variable(xring, ie->second));
            if (lead == tail) continue;  // the pair was already sorted
            out.push_back(MarkedBinomial{std::move(lead), std::move(tail)});
        }
    }
    MonomialOrder xlex = MonomialOrder::lex(xring);
    std::sort(out.begin(), out.end(), [&](const MarkedBinomial& p, const MarkedBinomial& q) {
        return xlex.compare(p.lead, q.lead) < 0;
    });
    MarkedBasis basis = make_marked_basis(xring, std::move(out));
    internal_check(is_reduced(basis), "sorting basis is not autoreduced");
    return basis;
}

//////////////////////////////////////////////////////////////////////////
// main2
//////////////////////////////////////////////////////////////////////////

namespace {

bool squarefree(const Monomial& m) {
    for (std::size_t i = 0; i < m.nvars(); ++i)
        if (m.exponent(i) > 1) return false;
    return true;
}

bool squarefree_initial(const MarkedBasis& b) {
    for (const auto& e : b.elements)
        if (!squarefree(e.lead)) return false;
    return true;
}

}  // namespace

MarkedBasis main2_basis(const NestedSystem& sys, const ReduceOptions& opts) {
    // Structural Segre-Veronese check: uniform type length and closure of
    // the sorted odd/even type split (the second part also surfaces while
    // rewriting below).
    if (sys.members.empty()) throw precondition_error("empty nested system");
    std::size_t r = sys.members.front().type.size();
    if (r < 2) throw precondition_error("main2_basis requires base degree >= 2");
    for (const auto& m : sys.members)
        if (m.type.size() != r)
            throw precondition_error("base is not Segre-Veronese: mixed member degrees");
    for (const auto& gi : sys.inner_bases)
        if (!is_quadratic(gi))
            throw precondition_error("main2_basis requires quadratic inner bases");

    bool inner_squarefree = true;
    for (const auto& gi : sys.inner_bases) inner_squarefree &= squarefree_initial(gi);

    std::size_t eta = sys.members.size();
    std::size_t d = sys.inner.size();
    const Ring& xring = sys.result_pres.source;

    std::vector<MarkedBinomial> out;
    for (std::size_t a = 0; a < eta; ++a) {
        for (std::size_t b = a; b < eta; ++b) {
            // condition (3): sort the combined upper index string
            std::vector<int> k;
            k.insert(k.end(), sys.members[a].type.begin(), sys.members[a].type.end());
            k.insert(k.end(), sys.members[b].type.begin(), sys.members[b].type.end());
            std::sort(k.begin(), k.end());

            std::vector<int> type_odd, type_even;
            for (std::size_t i = 0; i < k.size(); ++i)
                (i % 2 == 0 ? type_odd : type_even).push_back(k[i]);
            if (sys.type_by_indices.find(type_odd) == sys.type_by_indices.end() ||
                sys.type_by_indices.find(type_even) == sys.type_by_indices.end())
                throw precondition_error("base is not Segre-Veronese: sorted type split leaves A");

            // condition (4): reduce each group's combined z monomial;
            // condition (5): fill each equal-type block weakly increasing
            std::vector<int> lower(k.size());
            for (std::size_t g = 0; g < d; ++g) {
                Monomial znf = normal_form(mul(phi(sys, static_cast<int>(g) + 1, Monomial::variable(xring, a)),
                                               phi(sys, static_cast<int>(g) + 1, Monomial::variable(xring, b))),
                                           sys.inner_bases[g], opts);
                std::vector<int> idx;
                for (std::size_t j = 0; j < znf.nvars(); ++j)
                    for (Exponent c = 0; c < znf.exponent(j); ++c) idx.push_back(static_cast<int>(j));
                std::size_t lo = std::lower_bound(k.begin(), k.end(), static_cast<int>(g)) - k.begin();
                std::size_t hi = std::upper_bound(k.begin(), k.end(), static_cast<int>(g)) - k.begin();
                internal_check(idx.size() == hi - lo, "group factor count mismatch in main2 pair");
                for (std::size_t p = lo; p < hi; ++p) lower[p] = idx[p - lo];
            }

            Monomial vg = Monomial::unit(sys.union_ring);
            Monomial vd = Monomial::unit(sys.union_ring);
            for (std::size_t p = 0; p < k.size(); ++p) {
                Monomial f = sys.embed(sys.inner[k[p]].members[lower[p]], k[p]);
                if (p % 2 == 0) vg = mul(vg, f);
                else vd = mul(vd, f);
            }
            auto ig = sys.member_index(vg);
            auto id = sys.member_index(vd);
            internal_check(ig && id, "main2 rewrite left the configuration");

            Monomial lead = mul(Monomial::variable(xring, a), Monomial::variable(xring, b));
            Monomial tail = mul(Monomial::variable(xring, *ig), Monomial::variable(xring, *id));
            if (lead == tail) continue;
            if (inner_squarefree && a == b)
                throw verification_error("squarefree claim violated: square lead emitted");
            out.push_back(MarkedBinomial{std::move(lead), std::move(tail)});
        }
    }

    MonomialOrder xlex = MonomialOrder::lex(xring);
    std::sort(out.begin(), out.end(), [&](const MarkedBinomial& p, const MarkedBinomial& q) {
        return xlex.compare(p.lead, q.lead) < 0;
    });
    MarkedBasis basis = make_marked_basis(xring, std::move(out));
    internal_check(is_reduced(basis), "main2 basis is not autoreduced");
    return basis;
}

}  // namespace nestgb
