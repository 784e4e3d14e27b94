#include "nestgb/ring.hpp"

#include <algorithm>
#include <cctype>

namespace nestgb {

Exponent checked_add(Exponent a, Exponent b) {
    Exponent r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("exponent overflow in add");
    return r;
}

Exponent checked_mul(Exponent a, Exponent b) {
    Exponent r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("exponent overflow in mul");
    return r;
}

//////////////////////////////////////////////////////////////////////////
// Ring
//////////////////////////////////////////////////////////////////////////

Ring::Ring(std::vector<std::string> names) {
    std::vector<VariableInfo> vars;
    vars.reserve(names.size());
    for (auto& n : names) vars.push_back(VariableInfo{std::move(n), {}});
    *this = Ring(std::move(vars));
}

Ring::Ring(std::vector<VariableInfo> vars) {
    auto data = std::make_shared<Data>();
    data->vars = std::move(vars);
    for (std::size_t i = 0; i < data->vars.size(); ++i) {
        const std::string& n = data->vars[i].name;
        if (n.empty()) throw precondition_error("empty variable name");
        if (!data->index.emplace(n, i).second)
            throw precondition_error("duplicate variable name '" + n + "'");
    }
    data_ = std::move(data);
}

std::size_t Ring::size() const { return data_ ? data_->vars.size() : 0; }

const std::string& Ring::name(std::size_t i) const { return data_->vars[i].name; }

const std::vector<VariableInfo>& Ring::variables() const { return data_->vars; }

std::optional<std::size_t> Ring::index_of(std::string_view name) const {
    if (!data_) return std::nullopt;
    auto it = data_->index.find(std::string(name));
    if (it == data_->index.end()) return std::nullopt;
    return it->second;
}

bool Ring::operator==(const Ring& o) const {
    if (data_ == o.data_) return true;
    if (!data_ || !o.data_) return false;
    if (data_->vars.size() != o.data_->vars.size()) return false;
    for (std::size_t i = 0; i < data_->vars.size(); ++i)
        if (data_->vars[i].name != o.data_->vars[i].name) return false;
    return true;
}

bool same_ring(const Ring& a, const Ring& b) { return a == b; }

void require_same_ring(const Ring& a, const Ring& b, const char* where) {
    if (!same_ring(a, b))
        throw precondition_error(std::string("ring mismatch in ") + where);
}

//////////////////////////////////////////////////////////////////////////
// Monomial
//////////////////////////////////////////////////////////////////////////

Monomial::Monomial(Ring ring, std::vector<Exponent> exponents)
    : ring_(std::move(ring)), exp_(std::move(exponents)) {
    if (!ring_.valid()) throw precondition_error("monomial over invalid ring");
    if (exp_.size() != ring_.size())
        throw precondition_error("exponent vector length does not match ring");
    for (Exponent e : exp_)
        if (e < 0) throw precondition_error("negative exponent");
}

Monomial Monomial::unit(const Ring& ring) {
    return Monomial(ring, std::vector<Exponent>(ring.size(), 0));
}

Monomial Monomial::variable(const Ring& ring, std::size_t i) {
    std::vector<Exponent> e(ring.size(), 0);
    e.at(i) = 1;
    return Monomial(ring, std::move(e));
}

Exponent Monomial::degree() const {
    Exponent d = 0;
    for (Exponent e : exp_) d = checked_add(d, e);
    return d;
}

bool Monomial::is_unit() const {
    return std::all_of(exp_.begin(), exp_.end(), [](Exponent e) { return e == 0; });
}

bool Monomial::operator==(const Monomial& o) const {
    return same_ring(ring_, o.ring_) && exp_ == o.exp_;
}

Monomial mul(const Monomial& a, const Monomial& b) {
    require_same_ring(a.ring(), b.ring(), "mul");
    std::vector<Exponent> e(a.nvars());
    for (std::size_t i = 0; i < e.size(); ++i)
        e[i] = checked_add(a.exponent(i), b.exponent(i));
    return Monomial(a.ring(), std::move(e));
}

bool divides(const Monomial& a, const Monomial& b) {
    require_same_ring(a.ring(), b.ring(), "divides");
    for (std::size_t i = 0; i < a.nvars(); ++i)
        if (a.exponent(i) > b.exponent(i)) return false;
    return true;
}

Monomial quotient(const Monomial& b, const Monomial& a) {
    require_same_ring(a.ring(), b.ring(), "quotient");
    std::vector<Exponent> e(b.nvars());
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (a.exponent(i) > b.exponent(i))
            throw precondition_error("quotient of non-divisible monomials");
        e[i] = b.exponent(i) - a.exponent(i);
    }
    return Monomial(b.ring(), std::move(e));
}

Monomial lcm(const Monomial& a, const Monomial& b) {
    require_same_ring(a.ring(), b.ring(), "lcm");
    std::vector<Exponent> e(a.nvars());
    for (std::size_t i = 0; i < e.size(); ++i)
        e[i] = std::max(a.exponent(i), b.exponent(i));
    return Monomial(a.ring(), std::move(e));
}

Monomial gcd(const Monomial& a, const Monomial& b) {
    require_same_ring(a.ring(), b.ring(), "gcd");
    std::vector<Exponent> e(a.nvars());
    for (std::size_t i = 0; i < e.size(); ++i)
        e[i] = std::min(a.exponent(i), b.exponent(i));
    return Monomial(a.ring(), std::move(e));
}

bool coprime(const Monomial& a, const Monomial& b) {
    require_same_ring(a.ring(), b.ring(), "coprime");
    for (std::size_t i = 0; i < a.nvars(); ++i)
        if (a.exponent(i) > 0 && b.exponent(i) > 0) return false;
    return true;
}

Monomial pow(const Monomial& m, Exponent k) {
    if (k < 0) throw precondition_error("negative power");
    std::vector<Exponent> e(m.nvars());
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = checked_mul(m.exponent(i), k);
    return Monomial(m.ring(), std::move(e));
}

bool ExponentsLess::operator()(const Monomial& a, const Monomial& b) const {
    return a.exponents() < b.exponents();
}

//////////////////////////////////////////////////////////////////////////
// Monomial orders
//////////////////////////////////////////////////////////////////////////

namespace {

int cmp_lex(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.nvars(); ++i) {
        if (a.exponent(i) != b.exponent(i)) return a.exponent(i) > b.exponent(i) ? 1 : -1;
    }
    return 0;
}

// Equal degree tie: the rightmost differing exponent decides, smaller wins.
int cmp_revlex_tie(const Monomial& a, const Monomial& b) {
    for (std::size_t i = a.nvars(); i-- > 0;) {
        if (a.exponent(i) != b.exponent(i)) return a.exponent(i) < b.exponent(i) ? 1 : -1;
    }
    return 0;
}

int cmp_simple(OrderKind kind, const Monomial& a, const Monomial& b) {
    switch (kind) {
        case OrderKind::Lex:
            return cmp_lex(a, b);
        case OrderKind::GrLex: {
            Exponent da = a.degree(), db = b.degree();
            if (da != db) return da > db ? 1 : -1;
            return cmp_lex(a, b);
        }
        case OrderKind::GrevLex: {
            Exponent da = a.degree(), db = b.degree();
            if (da != db) return da > db ? 1 : -1;
            return cmp_revlex_tie(a, b);
        }
        default:
            throw internal_error("weighted order used as tie-break");
    }
}

}  // namespace

MonomialOrder MonomialOrder::lex(Ring r) { return MonomialOrder(OrderKind::Lex, std::move(r)); }
MonomialOrder MonomialOrder::grlex(Ring r) { return MonomialOrder(OrderKind::GrLex, std::move(r)); }
MonomialOrder MonomialOrder::grevlex(Ring r) { return MonomialOrder(OrderKind::GrevLex, std::move(r)); }

MonomialOrder MonomialOrder::weighted(Ring r, std::vector<Rational> weights, OrderKind tie) {
    if (tie == OrderKind::Weighted) throw precondition_error("weighted tie-break must be simple");
    MonomialOrder o(OrderKind::Weighted, std::move(r));
    if (weights.size() != o.ring_.size())
        throw precondition_error("weight vector length does not match ring");
    for (const auto& w : weights)
        if (w < 0) throw precondition_error("negative weight in monomial order");
    o.tie_ = tie;
    o.weights_ = std::move(weights);

    // Scale weights to integers once; comparisons then avoid mpq.  The fast
    // path needs weights that fit 32 bits so the 128-bit dot product cannot
    // wrap for any representable exponents.
    Integer den(1);
    for (const auto& w : o.weights_) ::mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), w.get_den_mpz_t());
    o.scaled_big_.reserve(o.weights_.size());
    o.scaled_ok_ = true;
    for (const auto& w : o.weights_) {
        Integer s = w.get_num() * (den / w.get_den());
        if (!s.fits_sint_p()) o.scaled_ok_ = false;
        o.scaled_big_.push_back(s);
    }
    if (o.scaled_ok_) {
        for (const auto& s : o.scaled_big_) o.scaled_.push_back(s.get_si());
    }
    return o;
}

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
    require_same_ring(a.ring(), ring_, "compare");
    require_same_ring(b.ring(), ring_, "compare");
    if (kind_ != OrderKind::Weighted) return cmp_simple(kind_, a, b);

    if (scaled_ok_) {
        __int128 wa = 0, wb = 0;
        for (std::size_t i = 0; i < scaled_.size(); ++i) {
            wa += static_cast<__int128>(scaled_[i]) * a.exponent(i);
            wb += static_cast<__int128>(scaled_[i]) * b.exponent(i);
        }
        if (wa != wb) return wa > wb ? 1 : -1;
    } else {
        Integer wa(0), wb(0);
        for (std::size_t i = 0; i < scaled_big_.size(); ++i) {
            wa += scaled_big_[i] * static_cast<long>(a.exponent(i));
            wb += scaled_big_[i] * static_cast<long>(b.exponent(i));
        }
        int c = ::mpz_cmp(wa.get_mpz_t(), wb.get_mpz_t());
        if (c != 0) return c > 0 ? 1 : -1;
    }
    return cmp_simple(tie_, a, b);
}

int compare(const MonomialOrder& order, const Monomial& a, const Monomial& b) {
    return order.compare(a, b);
}

MonomialOrder OrderSpec::instantiate(Ring r) const {
    switch (kind) {
        case OrderKind::Lex: return MonomialOrder::lex(std::move(r));
        case OrderKind::GrLex: return MonomialOrder::grlex(std::move(r));
        case OrderKind::GrevLex: return MonomialOrder::grevlex(std::move(r));
        case OrderKind::Weighted: return MonomialOrder::weighted(std::move(r), weights, tie);
    }
    throw internal_error("bad order kind");
}

std::string MonomialOrder::describe() const {
    switch (kind_) {
        case OrderKind::Lex: return "lex";
        case OrderKind::GrLex: return "grlex";
        case OrderKind::GrevLex: return "grevlex";
        case OrderKind::Weighted: {
            std::string s = "weighted:";
            for (std::size_t i = 0; i < weights_.size(); ++i) {
                if (i) s += ',';
                s += rational_str(weights_[i]);
            }
            s += ':';
            s += (tie_ == OrderKind::Lex ? "lex" : tie_ == OrderKind::GrLex ? "grlex" : "grevlex");
            return s;
        }
    }
    return "?";
}

//////////////////////////////////////////////////////////////////////////
// Text syntax
//////////////////////////////////////////////////////////////////////////

std::string to_string(const Monomial& m) {
    std::string out;
    for (std::size_t i = 0; i < m.nvars(); ++i) {
        Exponent e = m.exponent(i);
        if (e == 0) continue;
        if (!out.empty()) out += '*';
        out += m.ring().name(i);
        if (e != 1) {
            out += '^';
            out += std::to_string(e);
        }
    }
    return out.empty() ? "1" : out;
}

namespace {

// Splits on '*' outside [...] groups.
std::vector<std::string> split_factors(std::string_view text) {
    std::vector<std::string> out;
    std::string cur;
    int depth = 0;
    for (char c : text) {
        if (c == '[') ++depth;
        if (c == ']') {
            --depth;
            if (depth < 0) throw parse_error("unbalanced ']' in monomial");
        }
        if (c == '*' && depth == 0) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (depth != 0) throw parse_error("unbalanced '[' in monomial");
    out.push_back(cur);
    return out;
}

Exponent parse_exponent(std::string_view text) {
    if (text.empty()) throw parse_error("missing exponent after '^'");
    Exponent v = 0;
    for (char c : text) {
        if (!std::isdigit(static_cast<unsigned char>(c)))
            throw parse_error("bad exponent '" + std::string(text) + "'");
        v = checked_add(checked_mul(v, 10), c - '0');
    }
    return v;
}

}  // namespace

Monomial parse_monomial(const Ring& ring, std::string_view text) {
    // trim
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
    if (text.empty()) throw parse_error("empty monomial");
    if (text == "1") return Monomial::unit(ring);

    std::vector<Exponent> exp(ring.size(), 0);
    for (const std::string& factor : split_factors(text)) {
        if (factor.empty()) throw parse_error("empty factor in monomial '" + std::string(text) + "'");
        // exponent separator: last '^' at bracket depth 0
        std::size_t caret = std::string::npos;
        int depth = 0;
        for (std::size_t i = 0; i < factor.size(); ++i) {
            if (factor[i] == '[') ++depth;
            else if (factor[i] == ']') --depth;
            else if (factor[i] == '^' && depth == 0) caret = i;
        }
        std::string name = factor.substr(0, caret);
        Exponent e = 1;
        if (caret != std::string::npos) e = parse_exponent(std::string_view(factor).substr(caret + 1));
        auto idx = ring.index_of(name);
        if (!idx) throw parse_error("unknown variable '" + name + "'");
        exp[*idx] = checked_add(exp[*idx], e);
    }
    return Monomial(ring, std::move(exp));
}

}  // namespace nestgb
