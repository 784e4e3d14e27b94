#include "nestgb/rational.hpp"

#include <cctype>

#include "nestgb/errors.hpp"

namespace nestgb {

Rational parse_rational(std::string_view text) {
    if (text.empty()) throw parse_error("empty rational");
    for (char c : text) {
        if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '/' || c == '-'))
            throw parse_error("bad rational '" + std::string(text) + "'");
    }
    try {
        Rational r{std::string(text)};
        if (r.get_den() == 0) throw parse_error("zero denominator in '" + std::string(text) + "'");
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument&) {
        throw parse_error("bad rational '" + std::string(text) + "'");
    }
}

std::string rational_str(const Rational& r) {
    return r.get_str();
}

std::string rational_vec_str(const std::vector<Rational>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ' ';
        out += rational_str(v[i]);
    }
    return out;
}

}  // namespace nestgb
