#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace nestgb {

// Exact rational arithmetic everywhere a weight or an LP shows up.
using Rational = mpq_class;
using Integer = mpz_class;

// Parses "p", "-p" or "p/q" (q > 0 after canonicalization).
Rational parse_rational(std::string_view text);

// Canonical text: "p" or "p/q".
std::string rational_str(const Rational& r);

std::string rational_vec_str(const std::vector<Rational>& v);

}  // namespace nestgb
