#include "grd/report.hpp"

#include <sstream>

#include "json.hpp"

namespace grd::report {

using json = nlohmann::ordered_json;

namespace {

json base(const char* command) {
    json j;
    j["schema_version"] = schema_version;
    j["command"] = command;
    return j;
}

json profile_json(const GrdProfile& p) {
    json j;
    json moments = json::array();
    for (const auto& m : p.moments) moments.push_back(m.to_string());
    j["moments"] = std::move(moments);
    j["first_nonzero_index"] =
        p.first_nonzero_index ? json(*p.first_nonzero_index) : json(nullptr);
    j["first_moment"] = p.first_moment.to_string();
    j["is_grd"] = p.is_grd;
    j["order"] = p.order ? json(*p.order) : json(nullptr);
    j["excess"] = p.excess ? json(*p.excess) : json(nullptr);
    return j;
}

std::string scheme_str(const DiffScheme& s) { return s.to_string(); }

}  // namespace

Rendered analyze(const DiffScheme& s) {
    GrdProfile p = grd_profile(s);
    ParitySplit ps = parity_split(s);

    json j = base("analyze");
    j["scheme"] = scheme_str(s);
    j["profile"] = profile_json(p);
    j["even_part"] = scheme_str(ps.even);
    j["odd_part"] = scheme_str(ps.odd);

    std::ostringstream t;
    t << "scheme: " << scheme_str(s) << "\n";
    t << "is_grd: " << (p.is_grd ? "true" : "false") << "\n";
    if (p.first_nonzero_index)
        t << "first_nonzero_index: " << *p.first_nonzero_index << "\n"
          << "first_moment: " << p.first_moment.to_string() << "\n";
    if (p.is_grd) t << "order: " << *p.order << "\nexcess: " << *p.excess << "\n";
    t << "even_part: " << scheme_str(ps.even) << "\n";
    t << "odd_part: " << scheme_str(ps.odd) << "\n";

    if (p.is_grd) {
        ParityStructure st = parity_structure(s);
        json pj;
        pj["epsilon"] = to_string(epsilon_parity(st.order));
        pj["epsilon_profile"] = profile_json(st.epsilon_profile);
        pj["epsilon_prime_profile"] = profile_json(st.epsilon_prime_profile);
        pj["theorem4_holds"] = st.theorem4_holds;
        j["parity_structure"] = std::move(pj);

        t << "epsilon: " << to_string(epsilon_parity(st.order)) << "\n";
        t << "epsilon_order: "
          << (st.epsilon_profile.order ? std::to_string(*st.epsilon_profile.order) : "none") << "\n";
        t << "epsilon_prime_first_index: "
          << (st.epsilon_prime_profile.first_nonzero_index
                  ? std::to_string(*st.epsilon_prime_profile.first_nonzero_index)
                  : "none")
          << "\n";
        t << "theorem4_holds: " << (st.theorem4_holds ? "true" : "false") << "\n";
    }
    return Rendered{t.str(), j.dump(2) + "\n"};
}

Rendered split(const DiffScheme& s) {
    ParitySplit ps = parity_split(s);
    json j = base("split");
    j["scheme"] = scheme_str(s);
    j["even"] = scheme_str(ps.even);
    j["odd"] = scheme_str(ps.odd);

    std::ostringstream t;
    t << "scheme: " << scheme_str(s) << "\n";
    t << "even: " << scheme_str(ps.even) << "\n";
    t << "odd: " << scheme_str(ps.odd) << "\n";
    return Rendered{t.str(), j.dump(2) + "\n"};
}

Rendered implication(const ImplicationVerdict& v) {
    json j = base("implies");
    j["holds"] = v.holds;
    j["reason"] = to_string(v.reason);
    j["order"] = v.order ? json(*v.order) : json(nullptr);
    if (v.certificate) {
        json c;
        c["epsilon"] = v.certificate->first.to_string();
        c["epsilon_prime"] = v.certificate->second.to_string();
        j["certificate"] = std::move(c);
    } else {
        j["certificate"] = nullptr;
    }

    std::ostringstream t;
    t << "holds: " << (v.holds ? "true" : "false") << "\n";
    t << "reason: " << to_string(v.reason) << "\n";
    if (v.order) t << "order: " << *v.order << "\n";
    if (v.certificate) {
        t << "certificate_epsilon: " << v.certificate->first.to_string() << "\n";
        t << "certificate_epsilon_prime: " << v.certificate->second.to_string() << "\n";
    }
    return Rendered{t.str(), j.dump(2) + "\n"};
}

Rendered equivalence(const EquivalenceVerdict& v) {
    json j = base("equiv");
    j["holds"] = v.holds;
    j["reason"] = to_string(v.reason);
    j["order"] = v.order ? json(*v.order) : json(nullptr);
    if (v.constants) {
        json c;
        c["s"] = v.constants->s.to_string();
        c["A"] = v.constants->A ? json(v.constants->A->to_string()) : json(nullptr);
        c["r"] = v.constants->r ? json(v.constants->r->to_string()) : json(nullptr);
        j["constants"] = std::move(c);
    } else {
        j["constants"] = nullptr;
    }

    std::ostringstream t;
    t << "holds: " << (v.holds ? "true" : "false") << "\n";
    t << "reason: " << to_string(v.reason) << "\n";
    if (v.order) t << "order: " << *v.order << "\n";
    if (v.constants) {
        t << "s: " << v.constants->s.to_string() << "\n";
        if (v.constants->A) t << "A: " << v.constants->A->to_string() << "\n";
        if (v.constants->r) t << "r: " << v.constants->r->to_string() << "\n";
    }
    return Rendered{t.str(), j.dump(2) + "\n"};
}

Rendered canonical(const CanonicalForm& form) {
    json j = base("canon");
    j["order"] = form.order;
    j["epsilon_canon"] = scheme_str(form.epsilon_canon);
    j["epsilon_prime_canon"] = scheme_str(form.epsilon_prime_canon);
    j["representative"] = scheme_str(canonical_representative(form));

    std::ostringstream t;
    t << "order: " << form.order << "\n";
    t << "epsilon_canon: " << scheme_str(form.epsilon_canon) << "\n";
    t << "epsilon_prime_canon: " << scheme_str(form.epsilon_prime_canon) << "\n";
    t << "representative: " << scheme_str(canonical_representative(form)) << "\n";
    return Rendered{t.str(), j.dump(2) + "\n"};
}

Rendered division(const LaurentPoly& numerator, const LaurentPoly& divisor,
                  const std::optional<LaurentPoly>& quotient) {
    json j = base("divides");
    j["numerator"] = numerator.to_string();
    j["divisor"] = divisor.to_string();
    j["divisible"] = quotient.has_value();
    j["quotient"] = quotient ? json(quotient->to_string()) : json(nullptr);

    std::ostringstream t;
    t << "numerator: " << numerator.to_string() << "\n";
    t << "divisor: " << divisor.to_string() << "\n";
    t << "divisible: " << (quotient ? "true" : "false") << "\n";
    if (quotient) t << "quotient: " << quotient->to_string() << "\n";
    return Rendered{t.str(), j.dump(2) + "\n"};
}

Rendered witness(const WitnessFunction& w, const WitnessCheckReport& check,
                 const DiffScheme& consequent) {
    FunctionSpec f = FunctionSpec::witness_table(std::make_shared<WitnessFunction>(w));
    Rational p(static_cast<long>(w.scale_prime));

    json j = base("witness");
    j["p"] = w.scale_prime;
    j["M"] = w.scale_count;
    j["L"] = w.window_radius;
    j["n"] = w.order;
    j["parity"] = to_string(w.parity);
    json chi;
    for (const auto& [prime, value] : w.character) chi[std::to_string(prime)] = value.to_string();
    j["character"] = std::move(chi);
    j["normalizer"] = w.normalizer.to_string();
    json table = json::array();
    for (const auto& [key, value] : w.window_table) {
        json entry;
        entry["sign"] = key.first < 0 ? "-" : "+";
        entry["element"] = key.second.to_string();
        entry["value"] = value.to_string();
        table.push_back(std::move(entry));
    }
    j["table"] = std::move(table);

    std::ostringstream t;
    t << "p: " << w.scale_prime << "\n";
    t << "M: " << w.scale_count << "\n";
    t << "L: " << w.window_radius << "\n";
    t << "n: " << w.order << "\n";
    t << "parity: " << to_string(w.parity) << "\n";
    for (const auto& [prime, value] : w.character)
        t << "chi(" << prime << "): " << value.to_string() << "\n";
    t << "normalizer: " << w.normalizer.to_string() << "\n";
    t << "window_values:" << "\n";
    for (const auto& [key, value] : w.window_table)
        t << "  f(" << (key.first < 0 ? "-" : "+") << key.second.to_string() << " * " << w.scale_prime
          << "^-m) = " << value.to_string() << "\n";

    // Consequent quotients at the scales: exactly p^(n m), unbounded.
    json quots = json::array();
    t << "consequent_quotients:" << "\n";
    for (unsigned m = 1; m <= w.scale_count; ++m) {
        Rational h = p.pow(-static_cast<long>(m));
        QuadExt delta;
        for (const auto& term : consequent.terms())
            delta = delta + QuadExt(term.coeff) * f.eval(QuadExt(term.node * h));
        Rational quotient = delta.rat() / h.pow(static_cast<long>(w.order));
        quots.push_back(quotient.to_string());
        t << "  m=" << m << ": " << quotient.to_string() << "\n";
    }
    j["consequent_quotients"] = std::move(quots);

    json cj;
    cj["passed"] = check.passed;
    cj["checks_run"] = check.checks_run;
    cj["failures"] = check.failures;
    cj["structural_note"] = check.structural_note;
    j["verify"] = std::move(cj);

    t << "verify_passed: " << (check.passed ? "true" : "false") << "\n";
    t << "verify_checks: " << check.checks_run << "\n";
    for (const auto& fmsg : check.failures) t << "  failure: " << fmsg << "\n";
    t << "note: " << check.structural_note << "\n";
    return Rendered{t.str(), j.dump(2) + "\n"};
}

Rendered probe_result(const ProbeReport& r, const std::string& function, Branch branch,
                      const Rational& ratio) {
    json j = base("probe");
    j["function"] = function;
    j["branch"] = to_string(branch);
    j["ratio"] = ratio.to_string();
    json samples = json::array();
    for (const auto& s : r.samples) {
        json e;
        e["h"] = s.h.to_string();
        e["quotient"] = s.quotient.to_string();
        samples.push_back(std::move(e));
    }
    j["samples"] = std::move(samples);
    j["verdict"] = to_string(r.outcome);
    j["limit"] = r.limit ? json(r.limit->to_string()) : json(nullptr);
    if (r.branches) {
        j["branch_values"] = json::array({r.branches->first.to_string(), r.branches->second.to_string()});
    } else {
        j["branch_values"] = nullptr;
    }

    std::ostringstream t;
    t << "function: " << function << "\n";
    t << "branch: " << to_string(branch) << "\n";
    t << "h | quotient" << "\n";
    for (const auto& s : r.samples) t << s.h.to_string() << " | " << s.quotient.to_string() << "\n";
    t << "verdict: " << to_string(r.outcome);
    if (r.limit) t << "(" << r.limit->to_string() << ")";
    if (r.branches)
        t << "(" << r.branches->first.to_string() << ", " << r.branches->second.to_string() << ")";
    t << "\n";
    return Rendered{t.str(), j.dump(2) + "\n"};
}

Rendered catalog(const std::string& name, const DiffScheme& s) {
    json j = base("catalog");
    j["name"] = name;
    j["scheme"] = scheme_str(s);

    std::ostringstream t;
    t << "scheme: " << scheme_str(s) << "\n";
    return Rendered{t.str(), j.dump(2) + "\n"};
}

}  // namespace grd::report
