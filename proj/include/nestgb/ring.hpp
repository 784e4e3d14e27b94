#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "nestgb/errors.hpp"
#include "nestgb/rational.hpp"

namespace nestgb {

using Exponent = std::int64_t;

// Overflow is a hard error, never silent wraparound.
Exponent checked_add(Exponent a, Exponent b);
Exponent checked_mul(Exponent a, Exponent b);

struct VariableInfo {
    std::string name;
    std::vector<int> display;  // optional index tuple, presentation only
};

// An ordered list of distinct variable names.  The order is fixed at
// construction; earlier variables are the larger ones in lex-style orders.
class Ring {
  public:
    Ring() = default;
    explicit Ring(std::vector<std::string> names);
    explicit Ring(std::vector<VariableInfo> vars);

    bool valid() const { return data_ != nullptr; }
    std::size_t size() const;
    const std::string& name(std::size_t i) const;
    const std::vector<VariableInfo>& variables() const;
    std::optional<std::size_t> index_of(std::string_view name) const;

    // Value equality: same variable names in the same order.
    bool operator==(const Ring& o) const;
    bool operator!=(const Ring& o) const { return !(*this == o); }

  private:
    struct Data {
        std::vector<VariableInfo> vars;
        std::unordered_map<std::string, std::size_t> index;
    };
    std::shared_ptr<const Data> data_;
};

bool same_ring(const Ring& a, const Ring& b);
void require_same_ring(const Ring& a, const Ring& b, const char* where);

// Dense nonnegative exponent vector tied to a Ring.
class Monomial {
  public:
    Monomial() = default;
    Monomial(Ring ring, std::vector<Exponent> exponents);

    static Monomial unit(const Ring& ring);
    static Monomial variable(const Ring& ring, std::size_t i);

    const Ring& ring() const { return ring_; }
    const std::vector<Exponent>& exponents() const { return exp_; }
    Exponent exponent(std::size_t i) const { return exp_[i]; }
    std::size_t nvars() const { return exp_.size(); }

    Exponent degree() const;  // checked sum
    bool is_unit() const;

    bool operator==(const Monomial& o) const;
    bool operator!=(const Monomial& o) const { return !(*this == o); }

  private:
    Ring ring_;
    std::vector<Exponent> exp_;
};

Monomial mul(const Monomial& a, const Monomial& b);
bool divides(const Monomial& a, const Monomial& b);  // a | b
Monomial quotient(const Monomial& b, const Monomial& a);  // b / a, requires a | b
Monomial lcm(const Monomial& a, const Monomial& b);
Monomial gcd(const Monomial& a, const Monomial& b);
bool coprime(const Monomial& a, const Monomial& b);
Monomial pow(const Monomial& m, Exponent k);

// Plain positional comparison of exponent vectors, for use as a map key.
// This is *not* a monomial order; use MonomialOrder::compare for algebra.
struct ExponentsLess {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

enum class OrderKind { Lex, GrLex, GrevLex, Weighted };

// lex / grlex / grevlex on the ring's variable order, or a nonnegative
// rational weight vector with one of the former three as tie-break.
class MonomialOrder {
  public:
    static MonomialOrder lex(Ring r);
    static MonomialOrder grlex(Ring r);
    static MonomialOrder grevlex(Ring r);
    static MonomialOrder weighted(Ring r, std::vector<Rational> weights,
                                  OrderKind tie = OrderKind::GrevLex);

    OrderKind kind() const { return kind_; }
    OrderKind tie() const { return tie_; }
    const Ring& ring() const { return ring_; }
    const std::vector<Rational>& weights() const { return weights_; }

    // -1, 0, +1; equal only when the exponent vectors are equal.
    int compare(const Monomial& a, const Monomial& b) const;

    bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }
    bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

    std::string describe() const;  // e.g. "lex", "weighted:1,1/2:grevlex"

  private:
    MonomialOrder(OrderKind k, Ring r) : kind_(k), ring_(std::move(r)) {}

    OrderKind kind_ = OrderKind::GrevLex;
    OrderKind tie_ = OrderKind::GrevLex;
    Ring ring_;
    std::vector<Rational> weights_;
    // weights scaled to a common denominator; fast path when they fit int64
    std::vector<std::int64_t> scaled_;
    bool scaled_ok_ = false;
    std::vector<Integer> scaled_big_;
};

int compare(const MonomialOrder& order, const Monomial& a, const Monomial& b);

// Ring-free order description, instantiated once the ring is known (the
// nested construction builds its presentation rings itself).
struct OrderSpec {
    OrderKind kind = OrderKind::Lex;
    std::vector<Rational> weights;  // Weighted only
    OrderKind tie = OrderKind::GrevLex;

    MonomialOrder instantiate(Ring r) const;
};

// Text syntax: product of `name^k` factors separated by `*`, exponent 1
// omitted, unit monomial spelled `1`.  Names may contain `*`/`^` only inside
// a single [...] group, which keeps x_[t1^2*t2] unambiguous.
std::string to_string(const Monomial& m);
Monomial parse_monomial(const Ring& ring, std::string_view text);

}  // namespace nestgb
