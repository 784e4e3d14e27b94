// Batch front end: construct configurations and nested systems, compute and
// verify Groebner bases, and run the fiber-walk demo.
//
// Exit codes: 0 success, 2 parse error, 3 precondition violation,
// 4 verification failure.

#include <chrono>
#include <sstream>
#include <fstream>
#include <functional>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "nestgb/errors.hpp"
#include "nestgb/fiber.hpp"
#include "nestgb/formats.hpp"
#include "nestgb/groebner.hpp"
#include "nestgb/nested.hpp"
#include "nestgb/report.hpp"
#include "nestgb/segre_veronese.hpp"
#include "nestgb/toric.hpp"

using namespace nestgb;

namespace {

// --order lex|grlex|grevlex|weighted:<w,...>[:tie]
OrderSpec parse_order_flag(const std::string& text) {
    if (text == "lex") return OrderSpec{OrderKind::Lex, {}, OrderKind::GrevLex};
    if (text == "grlex") return OrderSpec{OrderKind::GrLex, {}, OrderKind::GrevLex};
    if (text == "grevlex") return OrderSpec{OrderKind::GrevLex, {}, OrderKind::GrevLex};
    if (text.rfind("weighted:", 0) == 0) {
        std::string rest = text.substr(9);
        OrderSpec spec;
        spec.kind = OrderKind::Weighted;
        spec.tie = OrderKind::GrevLex;
        auto tie_sep = rest.find(':');
        if (tie_sep != std::string::npos) {
            std::string tie = rest.substr(tie_sep + 1);
            rest.erase(tie_sep);
            if (tie == "lex") spec.tie = OrderKind::Lex;
            else if (tie == "grlex") spec.tie = OrderKind::GrLex;
            else if (tie == "grevlex") spec.tie = OrderKind::GrevLex;
            else throw parse_error("unknown tie-break '" + tie + "'");
        }
        std::size_t start = 0;
        while (start <= rest.size()) {
            auto comma = rest.find(',', start);
            std::string tok =
                rest.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
            spec.weights.push_back(parse_rational(tok));
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
        return spec;
    }
    throw parse_error("unknown order '" + text + "'");
}

void write_file(const std::string& path, const std::function<void(std::ostream&)>& body) {
    std::ofstream out(path);
    if (!out) throw precondition_error("cannot write " + path);
    body(out);
}

struct VerifyOutcome {
    bool ok = true;
    void record(RunReport& report, const std::string& name, bool pass) {
        report.verdicts.emplace_back(name, pass ? "pass" : "fail");
        ok &= pass;
    }
};

// marking certificate + oracle Groebner check + reduced-basis agreement
// under the certified weight order
void verify_constructed(const MarkedBasis& basis, const Configuration& config,
                        const Presentation& pres, RunReport& report, VerifyOutcome& outcome) {
    auto cert = verify_marking(basis);
    outcome.record(report, "marking_certificate", cert.has_value());
    if (!cert) return;
    auto gens = toric_generators(config, pres);
    auto eval = [&](const Monomial& m) { return evaluate(pres, m); };
    outcome.record(report, "oracle_groebner", is_groebner_basis_of(basis, gens, eval));
    MarkedBasis direct = buchberger(gens, certified_order(*cert));
    outcome.record(report, "certified_buchberger_match", equal_as_marked_sets(direct, basis));
}

// one read feeds both the digest and the parser, so pipes work too
template <class Parser>
auto load_input(RunReport& report, const std::string& path, Parser parse) {
    std::string bytes = slurp_file(path);
    report.inputs.emplace_back(path, digest_hex(bytes));
    std::istringstream in(bytes);
    return parse(in, path);
}

int finish(RunReport& report, std::chrono::steady_clock::time_point t0, bool verified_ok) {
    report.wall_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    std::cout << report.to_json() << "\n";
    return verified_ok ? 0 : 4;
}

int run(int argc, char** argv) {
    CLI::App app{"toric-ideal Groebner bases for monomial configurations"};
    app.require_subcommand(1);

    std::string order_flag = "grevlex";
    std::string out_path, config_out, mode = "main1", gb_path, observed_path;
    bool verify_flag = false;
    std::uint64_t seed = 0, steps = 0;

    auto* cmd_toric = app.add_subcommand("toric", "reduced Groebner basis of a toric ideal");
    std::string toric_file;
    cmd_toric->add_option("config", toric_file, "configuration file")->required();
    cmd_toric->add_option("--order", order_flag, "lex|grlex|grevlex|weighted:<w,...>[:tie]");
    cmd_toric->add_option("--out", out_path, "basis output path");
    cmd_toric->add_flag("--verify", verify_flag, "verify marking and basis against the oracle");

    auto* cmd_sv = app.add_subcommand("sv", "Segre-Veronese configuration and sorting basis");
    std::string sv_file;
    cmd_sv->add_option("spec", sv_file, "sv spec file")->required();
    cmd_sv->add_option("--out", out_path, "basis output path");
    cmd_sv->add_option("--config-out", config_out, "write the generated configuration");
    cmd_sv->add_flag("--verify", verify_flag, "verify marking and basis against the oracle");

    auto* cmd_nested = app.add_subcommand("nested", "nested-configuration Groebner bases");
    std::string nested_file;
    cmd_nested->add_option("system", nested_file, "nested system file")->required();
    cmd_nested->add_option("--mode", mode, "main1|main2|oracle")
        ->check(CLI::IsMember({"main1", "main2", "oracle"}));
    cmd_nested->add_option("--order", order_flag, "order for oracle mode");
    cmd_nested->add_option("--out", out_path, "basis output path");
    cmd_nested->add_flag("--verify", verify_flag, "verify marking and basis against the oracle");

    auto* cmd_verify = app.add_subcommand("verify", "verify a basis file against its ideal");
    std::string verify_gb, verify_config, verify_sv, verify_system;
    cmd_verify->add_option("basis", verify_gb, "basis file")->required();
    auto* vc = cmd_verify->add_option("--config", verify_config, "configuration file");
    auto* vs = cmd_verify->add_option("--sv", verify_sv, "sv spec file");
    auto* vn = cmd_verify->add_option("--system", verify_system, "nested system file");
    vc->excludes(vs)->excludes(vn);
    vs->excludes(vn);

    auto* cmd_walk = app.add_subcommand("fiber-walk", "random walk on a fiber");
    std::string walk_file;
    cmd_walk->add_option("config", walk_file, "configuration file")->required();
    cmd_walk->add_option("--observed", observed_path, "observed count file")->required();
    cmd_walk->add_option("--steps", steps, "number of steps")->required();
    cmd_walk->add_option("--seed", seed, "random seed");
    cmd_walk->add_option("--gb", gb_path, "moves file (computed when absent)");
    cmd_walk->add_option("--order", order_flag, "order when computing moves");
    cmd_walk->add_option("--out", out_path, "states output path");

    CLI11_PARSE(app, argc, argv);
    auto t0 = std::chrono::steady_clock::now();

    RunReport report;
    VerifyOutcome outcome;
    for (int i = 0; i < argc; ++i) report.command += std::string(i ? " " : "") + argv[i];

    if (*cmd_toric) {
        Configuration config = load_input(report, toric_file, parse_configuration);
        Presentation pres = make_presentation(config);
        MonomialOrder order = parse_order_flag(order_flag).instantiate(pres.source);
        MarkedBasis basis = buchberger(toric_generators(config, pres), order);
        report.basis_size = basis.size();
        if (verify_flag) verify_constructed(basis, config, pres, report, outcome);
        if (!out_path.empty()) write_file(out_path, [&](std::ostream& o) { print_basis(o, basis); });
        else print_basis(std::cout, basis);
        return finish(report, t0, outcome.ok);
    }

    if (*cmd_sv) {
        SegreVeroneseSpec spec = load_input(report, sv_file, parse_sv_spec);
        Configuration config = sv_configuration(spec);
        Presentation pres = sv_presentation(config);
        MarkedBasis basis = sorting_gb(config, pres);
        report.basis_size = basis.size();
        if (verify_flag) verify_constructed(basis, config, pres, report, outcome);
        if (!config_out.empty())
            write_file(config_out, [&](std::ostream& o) { print_configuration(o, config); });
        if (!out_path.empty()) write_file(out_path, [&](std::ostream& o) { print_basis(o, basis); });
        else print_basis(std::cout, basis);
        return finish(report, t0, outcome.ok);
    }

    if (*cmd_nested) {
        NestedInput input = load_input(report, nested_file, parse_nested_input);
        NestedSystem sys = build_nested(input.base, input.inner);
        MarkedBasis basis;
        if (mode == "main1") {
            basis = main1_basis(sys);
        } else if (mode == "main2") {
            basis = main2_basis(sys);
        } else {
            MonomialOrder order = parse_order_flag(order_flag).instantiate(sys.result_pres.source);
            basis = buchberger(toric_generators(sys.result, sys.result_pres), order);
        }
        report.basis_size = basis.size();
        report.verdicts.emplace_back("members", std::to_string(sys.result.members.size()));
        if (verify_flag) verify_constructed(basis, sys.result, sys.result_pres, report, outcome);
        if (!out_path.empty()) write_file(out_path, [&](std::ostream& o) { print_basis(o, basis); });
        else print_basis(std::cout, basis);
        return finish(report, t0, outcome.ok);
    }

    if (*cmd_verify) {
        std::string gb_bytes = slurp_file(verify_gb);
        report.inputs.emplace_back(verify_gb, digest_hex(gb_bytes));
        Configuration config;
        Presentation pres;
        if (!verify_config.empty()) {
            config = load_input(report, verify_config, parse_configuration);
            pres = make_presentation(config);
        } else if (!verify_sv.empty()) {
            config = sv_configuration(load_input(report, verify_sv, parse_sv_spec));
            pres = sv_presentation(config);
        } else if (!verify_system.empty()) {
            NestedInput input = load_input(report, verify_system, parse_nested_input);
            NestedSystem sys = build_nested(input.base, input.inner);
            config = sys.result;
            pres = sys.result_pres;
        } else {
            throw precondition_error("verify needs one of --config, --sv, --system");
        }
        std::istringstream gb_in(gb_bytes);
        MarkedBasis basis = parse_basis(gb_in, verify_gb, pres.source);
        report.basis_size = basis.size();
        verify_constructed(basis, config, pres, report, outcome);
        return finish(report, t0, outcome.ok);
    }

    if (*cmd_walk) {
        Configuration config = load_input(report, walk_file, parse_configuration);
        Presentation pres = make_presentation(config);
        std::string obs_bytes = slurp_file(observed_path);
        report.inputs.emplace_back(observed_path, digest_hex(obs_bytes));
        MarkedBasis moves;
        if (!gb_path.empty()) {
            std::string gb_bytes = slurp_file(gb_path);
            report.inputs.emplace_back(gb_path, digest_hex(gb_bytes));
            std::istringstream gb_in(gb_bytes);
            moves = parse_basis(gb_in, gb_path, pres.source);
        } else {
            MonomialOrder order = parse_order_flag(order_flag).instantiate(pres.source);
            moves = buchberger(toric_generators(config, pres), order);
        }
        std::istringstream obs_in(obs_bytes);
        Monomial observed = parse_observed(obs_in, observed_path, pres.source);
        auto states = fiber_walk(pres, moves, observed, steps, seed);
        report.basis_size = moves.size();
        report.verdicts.emplace_back("steps", std::to_string(steps));
        report.verdicts.emplace_back("states", std::to_string(states.size()));
        if (!out_path.empty())
            write_file(out_path, [&](std::ostream& o) { print_states(o, states); });
        else print_states(std::cout, states);
        return finish(report, t0, outcome.ok);
    }

    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const precondition_error& e) {
        std::cerr << "precondition violated: " << e.what() << "\n";
        return 3;
    } catch (const std::overflow_error& e) {
        std::cerr << "arithmetic overflow: " << e.what() << "\n";
        return 3;
    } catch (const verification_error& e) {
        std::cerr << "verification failure: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
