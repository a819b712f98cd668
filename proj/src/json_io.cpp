#include "lpcoh/json_io.hpp"

#include <sstream>

#include "lpcoh/error.hpp"

namespace lpcoh {

namespace {

std::string bigfloat_str(const BigFloat& v) {
  std::ostringstream os;
  os.precision(30);
  os << v;
  return os.str();
}

Json vec_json(const RatVec& v) {
  Json a = Json::array();
  for (const Rat& r : v) a.push_back(r.str());
  return a;
}

Json condition_json(const BudgetCondition& c) {
  return Json{{"alpha", c.alpha.str()},
              {"beta", c.beta.str()},
              {"threshold", c.threshold.str()}};
}

} // namespace

Json to_json(const Rat& r) { return Json(r.str()); }

Json to_json(const XRat& x) { return Json(x.str()); }

Json to_json(const RatVec& v) { return vec_json(v); }

Json to_json(const PuncturedIntervalSet& s) {
  Json pieces = Json::array();
  for (const auto& pc : s.pieces()) {
    pieces.push_back(Json{{"lo", pc.lo.str()},
                          {"hi", pc.hi.str()},
                          {"status", status_name(pc.status)}});
  }
  Json punct = Json::array();
  for (const Rat& at : s.punctures()) {
    punct.push_back(Json{{"at", at.str()}, {"status", "unknown"}});
  }
  return Json{{"pieces", pieces}, {"punctures", punct}};
}

Json to_json(const EigProfile& p) {
  Json lam = Json::array();
  for (const Rat& l : p.lambdas()) lam.push_back(l.str());
  return Json{{"eigenvalues", lam}, {"h", p.h().str()}};
}

Json to_json(const WeightConfig& w) {
  Json rows = Json::array();
  for (const RatVec& row : w.weights()) rows.push_back(vec_json(row));
  return Json{{"r", w.r()}, {"n", w.n()}, {"weights", rows}};
}

Json to_json(const StructureReport& r) {
  Json j;
  Json cb = Json::array();
  for (const RatVec& v : r.center_basis) cb.push_back(vec_json(v));
  j["center_basis"] = cb;
  j["derived_is_full_rn"] = r.derived_is_full_rn;
  j["abelian_factor"] = r.abelian_factor;
  if (!r.abelian_factor) {
    if (r.reducible_partition) {
      j["reducible_partition"] = Json{{"first", r.reducible_partition->first},
                                      {"second", r.reducible_partition->second}};
    } else {
      j["reducible_partition"] = nullptr;
    }
  }
  if (r.npc_witness) j["npc_witness"] = vec_json(*r.npc_witness);
  if (r.hyperbolic_witness) j["hyperbolic_witness"] = vec_json(*r.hyperbolic_witness);
  return j;
}

Json to_json(const CanonicalMu& c) {
  Json mu = Json::array();
  for (const Rat& m : c.mu) mu.push_back(m.str());
  return Json{{"mu", mu}, {"p_alpha", c.p_alpha.str()}};
}

Json to_json(const StripFlags& f) {
  Json reasons = Json::object();
  if (!f.vanishes_reason.empty()) reasons["vanishes"] = f.vanishes_reason;
  if (!f.hausdorff_reason.empty()) reasons["hausdorff"] = f.hausdorff_reason;
  if (!f.density_reason.empty()) reasons["density"] = f.density_reason;
  if (!f.torsion_reason.empty()) reasons["torsion"] = f.torsion_reason;
  return Json{{"vanishes", f.vanishes},
              {"hausdorff_iso_z", f.hausdorff_iso_z},
              {"boundary_density", f.boundary_density},
              {"torsion_nonzero", f.torsion_nonzero},
              {"reasons", reasons},
              {"dual", Json{{"p", f.dual.first.str()}, {"degree", f.dual.second}}}};
}

Json to_json(const StripReport& r) {
  Json j{{"degree", r.degree}, {"regions", to_json(r.regions)}};
  if (!r.piece_flags.empty()) {
    Json flags = Json::array();
    for (const StripFlags& f : r.piece_flags) flags.push_back(to_json(f));
    j["piece_flags"] = flags;
  }
  return j;
}

Json to_json(const LefschetzRank& r) {
  return Json{{"dim_domain", r.dim_domain},
              {"dim_kernel", r.dim_kernel},
              {"dim_image", r.dim_image}};
}

Json to_json(const DualityCheck& d) {
  return Json{{"equal", d.equal},
              {"image_in_annihilator", d.image_in_annihilator},
              {"dim_kernel", d.dim_kernel},
              {"dim_image", d.dim_image},
              {"dim_annihilator", d.dim_annihilator}};
}

Json to_json(const BudgetResult& b) {
  return Json{{"plus", condition_json(b.plus)},
              {"minus", condition_json(b.minus)},
              {"feasible_p", to_json(b.feasible_p)}};
}

Json to_json(const LemmaNumMin& m) {
  return Json{{"inv_rate", m.inv_rate.str()},
              {"log_arg", bigfloat_str(m.log_arg)},
              {"t_min", bigfloat_str(m.t_min)},
              {"f_min", bigfloat_str(m.f_min)}};
}

Json to_json(const Sl3Decay& d) {
  Json e = Json::array();
  for (const Rat& k : d.exponents) e.push_back(k.str());
  return Json{{"exponents", e}};
}

Json to_json(const HeisForm& w) {
  HeisAlgebra alg(w.m());
  Json terms = Json::array();
  for (const auto& [mask, coeff] : w.comps()) {
    std::string mono;
    for (unsigned bit = 0; bit < alg.ncoframe(); ++bit) {
      if (!(mask & (1u << bit))) continue;
      if (!mono.empty()) mono += "^";
      mono += alg.coframe_name(bit);
    }
    if (mono.empty()) mono = "1";
    terms.push_back(Json{{"monomial", mono}, {"coeff", coeff.str(alg.var_names())}});
  }
  return terms;
}

Json to_json(const CheckResult& c) {
  Json j{{"name", c.name},
         {"trials", c.trials},
         {"failures", c.failures},
         {"passed", c.passed()}};
  if (!c.counterexample.empty()) j["counterexample"] = c.counterexample;
  return j;
}

Json to_json(const VerifyReport& r) {
  Json checks = Json::array();
  for (const CheckResult& c : r.checks) checks.push_back(to_json(c));
  return Json{{"suite", r.suite},
              {"seed", r.seed},
              {"checks", checks},
              {"passed", r.passed()}};
}

WeightConfig weights_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("r") || !j.contains("weights"))
    throw ParseError("weight config must be an object with \"r\" and \"weights\"");
  if (!j["r"].is_number_unsigned() || j["r"].get<std::size_t>() == 0)
    throw ParseError("\"r\" must be a positive integer");
  std::size_t r = j["r"].get<std::size_t>();
  if (!j["weights"].is_array() || j["weights"].empty())
    throw ParseError("\"weights\" must be a nonempty array of rows");
  std::vector<RatVec> rows;
  for (const Json& row : j["weights"]) {
    if (!row.is_array() || row.size() != r)
      throw ParseError("every weight row must list exactly r entries");
    RatVec v;
    for (const Json& e : row) {
      if (!e.is_string()) throw ParseError("weight entries must be rational strings");
      v.push_back(Rat::parse(e.get<std::string>()));
    }
    rows.push_back(std::move(v));
  }
  if (j.contains("n") &&
      (!j["n"].is_number_unsigned() || j["n"].get<std::size_t>() != rows.size()))
    throw ParseError("\"n\" disagrees with the number of weight rows");
  try {
    return WeightConfig(r, std::move(rows));
  } catch (const DomainError& e) {
    // Structural defects in an input file are input errors, not contract
    // violations inside the library.
    throw ParseError(e.what());
  }
}

EigProfile profile_from_json(const Json& j) {
  const Json* arr = nullptr;
  if (j.is_array()) {
    arr = &j;
  } else if (j.is_object() && j.contains("eigenvalues") && j["eigenvalues"].is_array()) {
    arr = &j["eigenvalues"];
  } else {
    throw ParseError("profile must be an array of rationals or {\"eigenvalues\": [...]}");
  }
  std::vector<Rat> lambdas;
  for (const Json& e : *arr) {
    if (!e.is_string()) throw ParseError("eigenvalues must be rational strings");
    lambdas.push_back(Rat::parse(e.get<std::string>()));
  }
  try {
    return EigProfile(std::move(lambdas));
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
}

Json parse_document(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

} // namespace lpcoh
