#include "nestgb/linalg.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "nestgb/errors.hpp"

namespace nestgb {

namespace {

// Internal row: integer coefficients plus rhs, meaning coeff . x >= rhs.
struct Row {
    std::vector<Integer> a;
    Integer b;
};

// Divide out the gcd of all entries (keeping signs).
void make_primitive(Row& r) {
    Integer g(0);
    for (const auto& c : r.a) ::mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    ::mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), r.b.get_mpz_t());
    if (g > 1) {
        for (auto& c : r.a) c /= g;
        r.b /= g;
    }
}

// Dedup by full (a, b); identical coefficient vectors with weaker rhs are
// also dropped.
std::vector<Row> normalize(std::vector<Row> rows, bool& infeasible) {
    std::map<std::string, std::size_t> seen;  // coeff-only key -> index
    std::vector<Row> out;
    for (auto& r : rows) {
        bool all_zero = std::all_of(r.a.begin(), r.a.end(), [](const Integer& c) { return c == 0; });
        if (all_zero) {
            if (r.b > 0) infeasible = true;
            continue;  // 0 >= b with b <= 0 is vacuous
        }
        make_primitive(r);
        std::string k;
        for (const auto& c : r.a) {
            k += c.get_str();
            k += ',';
        }
        auto it = seen.find(k);
        if (it == seen.end()) {
            seen.emplace(std::move(k), out.size());
            out.push_back(std::move(r));
        } else if (r.b > out[it->second].b) {
            out[it->second].b = r.b;
        }
    }
    return out;
}

}  // namespace

std::optional<std::vector<Rational>> fm_feasible(std::size_t nvars,
                                                 const std::vector<LinearConstraint>& input) {
    // Clear denominators once.
    std::vector<Row> rows;
    rows.reserve(input.size());
    for (const auto& c : input) {
        if (c.coeff.size() != nvars) throw precondition_error("constraint length mismatch");
        Integer den(1);
        for (const auto& q : c.coeff) ::mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den_mpz_t());
        ::mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.rhs.get_den_mpz_t());
        Row r;
        r.a.reserve(nvars);
        for (const auto& q : c.coeff) r.a.push_back(q.get_num() * (den / q.get_den()));
        r.b = c.rhs.get_num() * (den / c.rhs.get_den());
        rows.push_back(std::move(r));
    }

    bool infeasible = false;
    rows = normalize(std::move(rows), infeasible);
    if (infeasible) return std::nullopt;

    struct Level {
        std::size_t var;
        std::vector<Row> lower;  // a[var] > 0: var >= (b - rest)/a[var]
        std::vector<Row> upper;  // a[var] < 0
    };
    std::vector<Level> levels;
    std::vector<bool> eliminated(nvars, false);

    for (std::size_t round = 0; round < nvars; ++round) {
        // Greedy: eliminate the variable with the fewest lower*upper pairs.
        std::size_t best = nvars;
        std::size_t best_cost = 0;
        for (std::size_t j = 0; j < nvars; ++j) {
            if (eliminated[j]) continue;
            std::size_t pos = 0, neg = 0;
            for (const auto& r : rows) {
                if (r.a[j] > 0) ++pos;
                else if (r.a[j] < 0) ++neg;
            }
            std::size_t cost = pos * neg + pos + neg;
            if (best == nvars || cost < best_cost) {
                best = j;
                best_cost = cost;
            }
        }
        std::size_t j = best;
        eliminated[j] = true;

        Level lvl;
        lvl.var = j;
        std::vector<Row> rest;
        for (auto& r : rows) {
            if (r.a[j] > 0) lvl.lower.push_back(r);
            else if (r.a[j] < 0) lvl.upper.push_back(r);
            else rest.push_back(std::move(r));
        }
        for (const auto& lo : lvl.lower) {
            for (const auto& up : lvl.upper) {
                // lo * (-up.a[j]) + up * (lo.a[j]) cancels x_j.
                Row nr;
                nr.a.resize(nvars);
                Integer f1 = -up.a[j];
                Integer f2 = lo.a[j];
                for (std::size_t k = 0; k < nvars; ++k) nr.a[k] = lo.a[k] * f1 + up.a[k] * f2;
                nr.b = lo.b * f1 + up.b * f2;
                rest.push_back(std::move(nr));
            }
        }
        rows = normalize(std::move(rest), infeasible);
        if (infeasible) return std::nullopt;
        levels.push_back(std::move(lvl));
    }

    // All variables eliminated; normalize() already rejected 0 >= b with b > 0.
    std::vector<Rational> x(nvars, Rational(0));
    for (auto it = levels.rbegin(); it != levels.rend(); ++it) {
        auto bound = [&](const Row& r) -> Rational {
            Rational rest(0);
            for (std::size_t k = 0; k < nvars; ++k) {
                if (k == it->var) continue;
                if (r.a[k] != 0) rest += Rational(r.a[k]) * x[k];
            }
            return (Rational(r.b) - rest) / Rational(r.a[it->var]);
        };
        std::optional<Rational> lo, hi;
        for (const auto& r : it->lower) {
            Rational v = bound(r);
            if (!lo || v > *lo) lo = v;
        }
        for (const auto& r : it->upper) {
            Rational v = bound(r);  // a[var] < 0 flips the inequality
            if (!hi || v < *hi) hi = v;
        }
        if (lo && hi && *lo > *hi) throw internal_error("fm back-substitution out of bounds");
        if (lo) x[it->var] = *lo;
        else if (hi) x[it->var] = std::min(*hi, Rational(0));
        else x[it->var] = 0;
    }

    // Recheck against the original system.
    for (const auto& c : input) {
        Rational lhs(0);
        for (std::size_t k = 0; k < nvars; ++k)
            if (c.coeff[k] != 0) lhs += c.coeff[k] * x[k];
        internal_check(lhs >= c.rhs, "fm certificate violates an input row");
    }
    return x;
}

std::vector<std::vector<Integer>> integer_kernel(const std::vector<std::vector<Integer>>& rows,
                                                 std::size_t ncols) {
    std::vector<std::vector<Integer>> m = rows;
    for (const auto& r : m)
        if (r.size() != ncols) throw precondition_error("matrix row length mismatch");
    // Tracked identity: kernel vectors are read off the transform matrix.
    std::vector<std::vector<Integer>> u(ncols, std::vector<Integer>(ncols, 0));
    for (std::size_t j = 0; j < ncols; ++j) u[j][j] = 1;

    std::vector<bool> pivot_col(ncols, false);

    auto col_addmul = [&](std::size_t dst, std::size_t src, const Integer& f) {
        // column dst += f * column src
        for (auto& row : m) row[dst] += f * row[src];
        for (auto& row : u) row[dst] += f * row[src];
    };

    for (std::size_t r = 0; r < m.size(); ++r) {
        // Euclid across the active columns until at most one nonzero remains
        // in row r.
        for (;;) {
            std::size_t a = ncols, b = ncols;
            for (std::size_t j = 0; j < ncols; ++j) {
                if (pivot_col[j] || m[r][j] == 0) continue;
                if (a == ncols) a = j;
                else { b = j; break; }
            }
            if (b == ncols) {
                if (a != ncols) pivot_col[a] = true;
                break;
            }
            // Reduce the larger entry by the smaller one.
            Integer aa = abs(m[r][a]), bb = abs(m[r][b]);
            std::size_t small = (aa <= bb) ? a : b;
            std::size_t big = (aa <= bb) ? b : a;
            Integer q = m[r][big] / m[r][small];  // truncated division
            col_addmul(big, small, -q);
        }
    }

    std::vector<std::vector<Integer>> kernel;
    for (std::size_t j = 0; j < ncols; ++j) {
        if (pivot_col[j]) continue;
        bool zero = true;
        for (const auto& row : m)
            if (row[j] != 0) { zero = false; break; }
        internal_check(zero, "non-pivot column not zeroed in kernel elimination");
        std::vector<Integer> v(ncols);
        for (std::size_t k = 0; k < ncols; ++k) v[k] = u[k][j];
        kernel.push_back(std::move(v));
    }
    return kernel;
}

}  // namespace nestgb
