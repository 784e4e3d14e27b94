#include "nestgb/formats.hpp"

#include <cctype>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "nestgb/errors.hpp"

namespace nestgb {

namespace {

struct Line {
    int no;
    std::string text;
};

std::string trim(const std::string& s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

// Significant lines only: comments stripped, blanks dropped.
std::vector<Line> read_lines(std::istream& in) {
    std::vector<Line> out;
    std::string raw;
    int no = 0;
    while (std::getline(in, raw)) {
        ++no;
        auto hash = raw.find('#');
        if (hash != std::string::npos) raw.erase(hash);
        std::string t = trim(raw);
        if (!t.empty()) out.push_back(Line{no, std::move(t)});
    }
    return out;
}

[[noreturn]] void fail(const std::string& name, int line, const std::string& msg) {
    throw parse_error(name + ":" + std::to_string(line) + ": " + msg);
}

std::vector<std::string> split_ws(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream iss(s);
    std::string tok;
    while (iss >> tok) out.push_back(tok);
    return out;
}

bool starts_with(const std::string& s, const std::string& prefix) {
    return s.rfind(prefix, 0) == 0;
}

int parse_int(const std::string& name, int line, const std::string& s) {
    try {
        std::size_t used = 0;
        int v = std::stoi(s, &used);
        if (used != s.size()) fail(name, line, "bad integer '" + s + "'");
        return v;
    } catch (const std::exception&) {
        fail(name, line, "bad integer '" + s + "'");
    }
}

Configuration parse_configuration_lines(const std::vector<Line>& lines, const std::string& name) {
    if (lines.empty()) throw parse_error(name + ": empty configuration");
    if (!starts_with(lines.front().text, "ring:"))
        fail(name, lines.front().no, "expected 'ring: <variables>'");
    std::vector<std::string> vars = split_ws(lines.front().text.substr(5));
    if (vars.empty()) fail(name, lines.front().no, "ring needs at least one variable");
    Ring ring(vars);

    std::vector<Monomial> members;
    std::optional<std::vector<Rational>> weight;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto& [no, text] = lines[i];
        if (starts_with(text, "weight:")) {
            if (weight) fail(name, no, "duplicate weight line");
            std::vector<Rational> w;
            for (const auto& tok : split_ws(text.substr(7))) {
                try {
                    w.push_back(parse_rational(tok));
                } catch (const parse_error& e) {
                    fail(name, no, e.what());
                }
            }
            if (w.size() != ring.size()) fail(name, no, "weight length does not match ring");
            weight = std::move(w);
            continue;
        }
        try {
            members.push_back(parse_monomial(ring, text));
        } catch (const parse_error& e) {
            fail(name, no, e.what());
        } catch (const precondition_error& e) {
            fail(name, no, e.what());
        }
    }
    if (members.empty()) throw parse_error(name + ": configuration has no members");

    if (weight) {
        for (std::size_t i = 0; i < members.size(); ++i)
            for (std::size_t j = i + 1; j < members.size(); ++j)
                if (members[i] == members[j])
                    throw parse_error(name + ": duplicate member " + to_string(members[i]));
        Configuration config{std::move(ring), std::move(members), std::move(weight)};
        validate_weight(config);
        return config;
    }
    return check_configuration(std::move(ring), std::move(members));
}

SegreVeroneseSpec parse_sv_lines(const std::vector<Line>& lines, const std::string& name) {
    if (lines.empty()) throw parse_error(name + ": empty sv spec");
    const auto& [no, head] = lines.front();
    if (!starts_with(head, "sv:")) fail(name, no, "expected 'sv: d=<n> tau=<n>'");
    SegreVeroneseSpec spec;
    bool have_d = false, have_tau = false;
    for (const auto& tok : split_ws(head.substr(3))) {
        auto eq = tok.find('=');
        if (eq == std::string::npos) fail(name, no, "expected key=value, got '" + tok + "'");
        std::string key = tok.substr(0, eq);
        int val = parse_int(name, no, tok.substr(eq + 1));
        if (key == "d") {
            spec.d = val;
            have_d = true;
        } else if (key == "tau") {
            spec.tau = val;
            have_tau = true;
        } else {
            fail(name, no, "unknown sv key '" + key + "'");
        }
    }
    if (!have_d || !have_tau) fail(name, no, "sv line needs both d= and tau=");

    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto& [lno, text] = lines[i];
        auto toks = split_ws(text);
        // range p..q min c max b
        if (toks.size() != 6 || toks[0] != "range" || toks[2] != "min" || toks[4] != "max")
            fail(name, lno, "expected 'range p..q min c max b'");
        auto dots = toks[1].find("..");
        if (dots == std::string::npos) fail(name, lno, "expected p..q");
        spec.from.push_back(parse_int(name, lno, toks[1].substr(0, dots)));
        spec.to.push_back(parse_int(name, lno, toks[1].substr(dots + 2)));
        spec.lo.push_back(parse_int(name, lno, toks[3]));
        spec.hi.push_back(parse_int(name, lno, toks[5]));
    }
    try {
        spec.validate();
    } catch (const precondition_error& e) {
        throw parse_error(name + ": " + e.what());
    }
    return spec;
}

}  // namespace

Configuration parse_configuration(std::istream& in, const std::string& name) {
    return parse_configuration_lines(read_lines(in), name);
}

void print_configuration(std::ostream& out, const Configuration& config) {
    out << "ring:";
    for (const auto& v : config.ring.variables()) out << ' ' << v.name;
    out << '\n';
    for (const auto& m : config.members) out << to_string(m) << '\n';
    if (config.weight) out << "weight: " << rational_vec_str(*config.weight) << '\n';
}

SegreVeroneseSpec parse_sv_spec(std::istream& in, const std::string& name) {
    return parse_sv_lines(read_lines(in), name);
}

void print_sv_spec(std::ostream& out, const SegreVeroneseSpec& spec) {
    out << "sv: d=" << spec.d << " tau=" << spec.tau << '\n';
    for (std::size_t i = 0; i < spec.constraints(); ++i)
        out << "range " << spec.from[i] << ".." << spec.to[i] << " min " << spec.lo[i] << " max "
            << spec.hi[i] << '\n';
}

NestedInput parse_nested_input(std::istream& in, const std::string& name) {
    auto lines = read_lines(in);
    // split into sections at 'base:' / 'inner <k>:' headers
    struct Section {
        std::string header;
        int no;
        std::vector<Line> body;
    };
    std::vector<Section> sections;
    for (const auto& line : lines) {
        bool is_base = line.text == "base:";
        bool is_inner = starts_with(line.text, "inner ") && line.text.back() == ':';
        if (is_base || is_inner) {
            sections.push_back(Section{line.text, line.no, {}});
        } else {
            if (sections.empty()) fail(name, line.no, "expected 'base:' before content");
            sections.back().body.push_back(line);
        }
    }
    if (sections.empty() || sections.front().header != "base:")
        throw parse_error(name + ": nested input must start with 'base:'");

    NestedInput input;
    bool have_base = false;
    int next_inner = 1;
    for (const auto& sec : sections) {
        if (sec.header == "base:") {
            if (have_base) fail(name, sec.no, "duplicate base section");
            have_base = true;
            if (!sec.body.empty() && starts_with(sec.body.front().text, "sv:")) {
                input.base_spec = parse_sv_lines(sec.body, name);
                input.base = sv_configuration(*input.base_spec);
            } else {
                input.base = parse_configuration_lines(sec.body, name);
            }
        } else {
            std::string num = trim(sec.header.substr(6, sec.header.size() - 7));
            int k = parse_int(name, sec.no, num);
            if (k != next_inner)
                fail(name, sec.no, "inner sections must be numbered consecutively from 1");
            ++next_inner;
            input.inner.push_back(parse_configuration_lines(sec.body, name));
        }
    }
    if (input.inner.empty()) throw parse_error(name + ": nested input has no inner sections");
    return input;
}

void print_nested_input(std::ostream& out, const NestedInput& input) {
    out << "base:\n";
    if (input.base_spec) print_sv_spec(out, *input.base_spec);
    else print_configuration(out, input.base);
    for (std::size_t i = 0; i < input.inner.size(); ++i) {
        out << "inner " << (i + 1) << ":\n";
        print_configuration(out, input.inner[i]);
    }
}

MarkedBasis parse_basis(std::istream& in, const std::string& name, const Ring& ring) {
    std::vector<MarkedBinomial> elements;
    for (const auto& [no, text] : read_lines(in)) {
        auto arrow = text.find("->");
        if (arrow == std::string::npos) fail(name, no, "expected 'LEAD -> TAIL'");
        try {
            Monomial lead = parse_monomial(ring, trim(text.substr(0, arrow)));
            Monomial tail = parse_monomial(ring, trim(text.substr(arrow + 2)));
            elements.push_back(MarkedBinomial{std::move(lead), std::move(tail)});
        } catch (const parse_error& e) {
            fail(name, no, e.what());
        } catch (const precondition_error& e) {
            fail(name, no, e.what());
        }
    }
    try {
        return make_marked_basis(ring, std::move(elements));
    } catch (const precondition_error& e) {
        throw parse_error(name + ": " + e.what());
    }
}

void print_basis(std::ostream& out, const MarkedBasis& basis) {
    out << "# " << basis.size() << " binomials\n";
    for (const auto& e : basis.elements)
        out << to_string(e.lead) << " -> " << to_string(e.tail) << '\n';
}

Monomial parse_observed(std::istream& in, const std::string& name, const Ring& ring) {
    std::vector<Exponent> e(ring.size(), 0);
    for (const auto& [no, text] : read_lines(in)) {
        auto split = text.find_last_of(" \t");
        if (split == std::string::npos) fail(name, no, "expected '<variable> <count>'");
        std::string var = trim(text.substr(0, split));
        auto idx = ring.index_of(var);
        if (!idx) fail(name, no, "unknown variable '" + var + "'");
        int count = parse_int(name, no, trim(text.substr(split + 1)));
        if (count < 0) fail(name, no, "negative count");
        e[*idx] = checked_add(e[*idx], count);
    }
    return Monomial(ring, std::move(e));
}

void print_observed(std::ostream& out, const Monomial& observed) {
    for (std::size_t i = 0; i < observed.nvars(); ++i)
        if (observed.exponent(i) != 0)
            out << observed.ring().name(i) << ' ' << observed.exponent(i) << '\n';
}

void print_states(std::ostream& out, const std::vector<Monomial>& states) {
    for (const auto& s : states) out << to_string(s) << '\n';
}

std::string slurp_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw parse_error(path + ": cannot open");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

Configuration load_configuration(const std::string& path) {
    std::istringstream in(slurp_file(path));
    return parse_configuration(in, path);
}

SegreVeroneseSpec load_sv_spec(const std::string& path) {
    std::istringstream in(slurp_file(path));
    return parse_sv_spec(in, path);
}

NestedInput load_nested_input(const std::string& path) {
    std::istringstream in(slurp_file(path));
    return parse_nested_input(in, path);
}

MarkedBasis load_basis(const std::string& path, const Ring& ring) {
    std::istringstream in(slurp_file(path));
    return parse_basis(in, path, ring);
}

Monomial load_observed(const std::string& path, const Ring& ring) {
    std::istringstream in(slurp_file(path));
    return parse_observed(in, path, ring);
}

}  // namespace nestgb
