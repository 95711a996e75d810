#pragma once

#include <optional>
#include <string>

#include "grd/classify.hpp"
#include "grd/witness.hpp"

namespace grd::report {

inline constexpr int schema_version = 1;

// Every command renders both ways from the same verdict data; the CLI picks
// one. `machine` is a JSON document with a top-level "schema_version".
struct Rendered {
    std::string text;
    std::string machine;
};

Rendered analyze(const DiffScheme& s);
Rendered split(const DiffScheme& s);
Rendered implication(const ImplicationVerdict& v);
Rendered equivalence(const EquivalenceVerdict& v);
Rendered canonical(const CanonicalForm& form);
Rendered division(const LaurentPoly& numerator, const LaurentPoly& divisor,
                  const std::optional<LaurentPoly>& quotient);
Rendered witness(const WitnessFunction& w, const WitnessCheckReport& check,
                 const DiffScheme& consequent);
Rendered probe_result(const ProbeReport& r, const std::string& function, Branch branch,
                      const Rational& ratio);
Rendered catalog(const std::string& name, const DiffScheme& s);

}  // namespace grd::report
