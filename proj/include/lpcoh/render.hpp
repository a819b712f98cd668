#pragma once

#include <string>

#include "lpcoh/asymptotics.hpp"
#include "lpcoh/intervals.hpp"
#include "lpcoh/straight.hpp"
#include "lpcoh/strips.hpp"
#include "lpcoh/structure.hpp"
#include "lpcoh/verify.hpp"

namespace lpcoh {

// Markdown views of the JSON reports. Derived output only: nothing ever
// parses these back.
std::string render_md(const PuncturedIntervalSet& s);
std::string render_md(const StripReport& r);
std::string render_md(const StructureReport& r);
std::string render_md(const CanonicalMu& c);
std::string render_md(const BudgetResult& b);
std::string render_md(const LemmaNumMin& m);
std::string render_md(const VerifyReport& r);

// "(lo, hi)" or "(lo, hi) \ {a, b}" with the punctures lying inside.
std::string interval_str(const XRat& lo, const XRat& hi,
                         const std::vector<Rat>& inner_punctures);

} // namespace lpcoh
