#pragma once

#include <json.hpp>

#include "lpcoh/asymptotics.hpp"
#include "lpcoh/heis.hpp"
#include "lpcoh/intervals.hpp"
#include "lpcoh/profile.hpp"
#include "lpcoh/straight.hpp"
#include "lpcoh/strips.hpp"
#include "lpcoh/structure.hpp"
#include "lpcoh/verify.hpp"
#include "lpcoh/weights.hpp"

namespace lpcoh {

using Json = nlohmann::json;

Json to_json(const Rat& r);
Json to_json(const XRat& x);
Json to_json(const RatVec& v);
Json to_json(const PuncturedIntervalSet& s);
Json to_json(const EigProfile& p);
Json to_json(const WeightConfig& w);
Json to_json(const StructureReport& r);
Json to_json(const CanonicalMu& c);
Json to_json(const StripFlags& f);
Json to_json(const StripReport& r);
Json to_json(const LefschetzRank& r);
Json to_json(const DualityCheck& d);
Json to_json(const BudgetResult& b);
Json to_json(const LemmaNumMin& m);
Json to_json(const Sl3Decay& d);
Json to_json(const HeisForm& w);
Json to_json(const CheckResult& c);
Json to_json(const VerifyReport& r);

// Strict readers for the CLI input schemas; malformed content raises
// ParseError, structurally invalid values raise DomainError.
WeightConfig weights_from_json(const Json& j);
EigProfile profile_from_json(const Json& j);

// Parses a whole document, mapping library parse failures onto ParseError.
Json parse_document(const std::string& text);

// Canonical byte rendering used everywhere output must be reproducible.
std::string dump_json(const Json& j);

} // namespace lpcoh
