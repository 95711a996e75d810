#include "grd/cli.hpp"

#include <memory>
#include <optional>

#include "CLI11.hpp"
#include "grd/report.hpp"

namespace grd {

namespace {

struct CliState {
    std::string format = "text";

    std::string analyze_scheme;
    std::string split_scheme;
    std::string implies_from, implies_to;
    std::string equiv_a, equiv_b;
    std::string canon_scheme;
    std::string div_numerator, div_divisor;
    std::string witness_from, witness_to;
    unsigned witness_scales = 8;
    unsigned witness_cap = 0;  // 0 = default cap
    std::string probe_scheme;
    std::string probe_function = "abs";
    std::string probe_branch = "rational";
    std::string probe_ratio = "1/2";
    unsigned probe_count = 8;
    std::string catalog_name;
};

FunctionSpec parse_function(const std::string& text) {
    if (text == "abs") return FunctionSpec::abs_value();
    if (text == "indicator") return FunctionSpec::indicator_of_rationals();
    if (text == "offrat-identity") return FunctionSpec::zero_on_rationals_identity_off();
    if (text.rfind("pow:", 0) == 0) {
        Rational m = Rational::parse(text.substr(4));
        if (!m.is_integer() || m.sign() <= 0)
            throw ParseError("pow:<m> needs a positive integer", 4);
        return FunctionSpec::power_on_rationals(static_cast<unsigned>(m.numerator().to_u64()));
    }
    if (text.rfind("poly:", 0) == 0) {
        std::vector<Rational> coeffs;
        std::string rest = text.substr(5);
        std::size_t start = 0;
        while (start <= rest.size()) {
            std::size_t comma = rest.find(',', start);
            std::string piece =
                comma == std::string::npos ? rest.substr(start) : rest.substr(start, comma - start);
            coeffs.push_back(Rational::parse(piece));
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
        return FunctionSpec::polynomial(std::move(coeffs));
    }
    throw ParseError("unknown function '" + text +
                     "' (expected abs, indicator, offrat-identity, pow:<m>, poly:<c0,c1,...>)");
}

Branch parse_branch(const std::string& text) {
    if (text == "rational") return Branch::rational;
    if (text == "sqrt2") return Branch::sqrt2;
    if (text == "alternating") return Branch::signed_alternating;
    throw ParseError("unknown branch '" + text + "' (expected rational, sqrt2, alternating)");
}

void emit(const report::Rendered& r, const CliState& st, std::ostream& out) {
    out << (st.format == "machine" ? r.machine : r.text);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact analysis of generalized Riemann difference schemes"};
    app.fallthrough();
    CliState st;
    app.add_option("--format", st.format, "output format")
        ->check(CLI::IsMember({"text", "machine"}))
        ->capture_default_str();

    auto* analyze_cmd = app.add_subcommand("analyze", "order, excess, moments, parity structure");
    analyze_cmd->add_option("scheme", st.analyze_scheme, "scheme literal or catalog:<name>")->required();

    auto* split_cmd = app.add_subcommand("split", "even/odd decomposition");
    split_cmd->add_option("scheme", st.split_scheme)->required();

    auto* implies_cmd = app.add_subcommand("implies", "does --from differentiability imply --to?");
    implies_cmd->add_option("--from", st.implies_from, "antecedent scheme")->required();
    implies_cmd->add_option("--to", st.implies_to, "consequent scheme")->required();

    auto* equiv_cmd = app.add_subcommand("equiv", "equivalence of two schemes with constants");
    equiv_cmd->add_option("a", st.equiv_a)->required();
    equiv_cmd->add_option("b", st.equiv_b)->required();

    auto* canon_cmd = app.add_subcommand("canon", "canonical form of the equivalence class");
    canon_cmd->add_option("scheme", st.canon_scheme)->required();

    auto* divides_cmd = app.add_subcommand("divides", "exact Laurent polynomial division");
    divides_cmd->add_option("numerator", st.div_numerator)->required();
    divides_cmd->add_option("divisor", st.div_divisor)->required();

    auto* witness_cmd = app.add_subcommand("witness", "same-order counterexample function");
    witness_cmd->add_option("--from", st.witness_from, "antecedent scheme")->required();
    witness_cmd->add_option("--to", st.witness_to, "consequent scheme")->required();
    witness_cmd->add_option("--scales", st.witness_scales, "number of scales M")->capture_default_str();
    witness_cmd->add_option("--window-cap", st.witness_cap, "character search height cap (0 = default)");

    auto* probe_cmd = app.add_subcommand("probe", "exact difference quotients along an h-sequence");
    probe_cmd->add_option("scheme", st.probe_scheme)->required();
    probe_cmd->add_option("--function", st.probe_function, "abs | indicator | offrat-identity | pow:<m> | poly:<c0,c1,...>")
        ->capture_default_str();
    probe_cmd->add_option("--branch", st.probe_branch, "rational | sqrt2 | alternating")
        ->capture_default_str();
    probe_cmd->add_option("--ratio", st.probe_ratio, "h ratio in (0,1)")->capture_default_str();
    probe_cmd->add_option("--count", st.probe_count, "number of samples")->capture_default_str();

    auto* catalog_cmd = app.add_subcommand("catalog", "print a named scheme");
    catalog_cmd->add_option("name", st.catalog_name, "riemann(n), symmetric(n), symmetric_centered_1, theorem1(A,r), example3iii")
        ->required();

    app.require_subcommand(1);

    std::vector<const char*> argv;
    argv.push_back("grd");
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return 2;
    }

    try {
        if (analyze_cmd->parsed()) {
            emit(report::analyze(resolve_scheme_input(st.analyze_scheme)), st, out);
        } else if (split_cmd->parsed()) {
            emit(report::split(resolve_scheme_input(st.split_scheme)), st, out);
        } else if (implies_cmd->parsed()) {
            DiffScheme from = resolve_scheme_input(st.implies_from);
            DiffScheme to = resolve_scheme_input(st.implies_to);
            emit(report::implication(grd::implies(from, to)), st, out);
        } else if (equiv_cmd->parsed()) {
            DiffScheme a = resolve_scheme_input(st.equiv_a);
            DiffScheme b = resolve_scheme_input(st.equiv_b);
            emit(report::equivalence(equivalent(a, b)), st, out);
        } else if (canon_cmd->parsed()) {
            emit(report::canonical(canonical_form(resolve_scheme_input(st.canon_scheme))), st, out);
        } else if (divides_cmd->parsed()) {
            LaurentPoly num = parse_laurent(st.div_numerator);
            LaurentPoly div = parse_laurent(st.div_divisor);
            emit(report::division(num, div, exact_divide(num, div)), st, out);
        } else if (witness_cmd->parsed()) {
            DiffScheme from = resolve_scheme_input(st.witness_from);
            DiffScheme to = resolve_scheme_input(st.witness_to);
            std::optional<unsigned> cap;
            if (st.witness_cap > 0) cap = st.witness_cap;
            WitnessFunction w = witness_same_order(from, to, st.witness_scales, cap);
            WitnessCheckReport check = verify_witness(w, from, to);
            emit(report::witness(w, check, to), st, out);
        } else if (probe_cmd->parsed()) {
            DiffScheme s = resolve_scheme_input(st.probe_scheme);
            FunctionSpec f = parse_function(st.probe_function);
            ProbeSequence seq{parse_branch(st.probe_branch), Rational::parse(st.probe_ratio),
                              st.probe_count};
            emit(report::probe_result(probe(s, f, seq), st.probe_function, seq.branch, seq.ratio),
                 st, out);
        } else if (catalog_cmd->parsed()) {
            emit(report::catalog(st.catalog_name, catalog_lookup(st.catalog_name)), st, out);
        }
    } catch (const ParseError& e) {
        err << "parse error: " << e.what();
        if (e.has_position()) err << " (at position " << e.position() << ")";
        err << "\n";
        return 2;
    } catch (const DomainError& e) {
        err << "domain error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}

}  // namespace grd
