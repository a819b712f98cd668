#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "lpcoh/asymptotics.hpp"
#include "lpcoh/error.hpp"
#include "lpcoh/json_io.hpp"
#include "lpcoh/render.hpp"
#include "lpcoh/straight.hpp"
#include "lpcoh/strips.hpp"
#include "lpcoh/structure.hpp"
#include "lpcoh/verify.hpp"

namespace {

using namespace lpcoh;

struct Output {
  std::string format = "json";
  std::string out_path;

  void emit(const Json& j, const std::string& md) const {
    const std::string text = format == "md" ? md : dump_json(j);
    if (out_path.empty()) {
      std::cout << text;
      return;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw ParseError("cannot open output file: " + out_path);
    f << text;
  }
};

Json read_file_json(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw ParseError("cannot read input file: " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return parse_document(ss.str());
}

WeightConfig read_weights(const std::string& path) {
  return weights_from_json(read_file_json(path));
}

BigFloat parse_positive_real(const std::string& text, const std::string& flag) {
  try {
    if (text.find('/') != std::string::npos) return to_bigfloat(Rat::parse(text));
    return BigFloat(text);
  } catch (const std::exception&) {
    throw ParseError("cannot parse " + flag + " as a number: " + text);
  }
}

Json reports_json(const std::vector<StripReport>& reports) {
  if (reports.size() == 1) return to_json(reports[0]);
  Json arr = Json::array();
  for (const StripReport& r : reports) arr.push_back(to_json(r));
  return arr;
}

std::string reports_md(const std::vector<StripReport>& reports) {
  std::string md;
  for (const StripReport& r : reports) {
    if (!md.empty()) md += "\n";
    md += render_md(r);
  }
  return md;
}

// The closed-form table parameters are command-line input, so range
// problems are input errors, not library contract violations.
template <typename Fn>
std::vector<StripReport> tabulate(long degree, std::size_t k_max, Fn&& make) {
  std::vector<StripReport> out;
  try {
    if (degree >= 0) {
      out.push_back(make(static_cast<std::size_t>(degree)));
    } else {
      for (std::size_t k = 1; k <= k_max; ++k) out.push_back(make(k));
    }
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
  return out;
}

int run_verify(const std::string& suite, const VerifyOptions& vopt, const Output& out) {
  if (suite == "all") {
    std::vector<VerifyReport> reports = verify_all(vopt);
    bool ok = true;
    Json arr = Json::array();
    std::string md;
    for (const VerifyReport& r : reports) {
      ok = ok && r.passed();
      arr.push_back(to_json(r));
      if (!md.empty()) md += "\n";
      md += render_md(r);
    }
    out.emit(Json{{"passed", ok}, {"reports", arr}}, md);
    return ok ? 0 : 4;
  }
  VerifyReport rep;
  if (suite == "heis")
    rep = verify_heis(vopt);
  else if (suite == "budget")
    rep = verify_budget(vopt);
  else if (suite == "numlemma")
    rep = verify_numlemma(vopt);
  else if (suite == "appendix")
    rep = verify_appendix(vopt);
  else
    throw ParseError("unknown suite \"" + suite +
                     "\" (expected heis, budget, numlemma, appendix or all)");
  out.emit(to_json(rep), render_md(rep));
  return rep.passed() ? 0 : 4;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exponent arithmetic for the L^p-cohomology of diagonal "
               "solvable groups: structure reports, critical exponents, "
               "strip tables and randomized verification suites"};
  app.require_subcommand(1);
  app.fallthrough();

  Output out;
  app.add_option("--format", out.format, "Output format")
      ->check(CLI::IsMember({"json", "md"}));
  app.add_option("--out", out.out_path, "Write the report to a file instead of stdout");

  VerifyOptions vopt;
  app.add_option("--seed", vopt.seed, "Seed for all randomized checks");
  app.add_option("--trials", vopt.trials, "Trial count override for randomized checks");
  bool serial = false;
  app.add_flag("--serial", serial, "Run verification sweeps on one thread");

  int exit_code = 0;

  // analyze <weights.json>
  std::string analyze_path;
  CLI::App* analyze = app.add_subcommand("analyze", "Structural report for a weight configuration");
  analyze->add_option("input", analyze_path, "WeightConfig JSON file")->required();
  analyze->callback([&] {
    StructureReport rep = analyze_structure(read_weights(analyze_path));
    out.emit(to_json(rep), render_md(rep));
  });

  // palpha <weights.json>
  std::string palpha_path;
  CLI::App* palpha_cmd = app.add_subcommand("palpha", "Canonical form and critical exponent of a straight configuration");
  palpha_cmd->add_option("input", palpha_path, "WeightConfig JSON file")->required();
  palpha_cmd->callback([&] {
    CanonicalMu cm = canonicalize(read_weights(palpha_path));
    out.emit(to_json(cm), render_md(cm));
  });

  // qi <a.json> <b.json>
  std::string qi_a, qi_b;
  CLI::App* qi_cmd = app.add_subcommand("qi", "Quasi-isometry test for two straight configurations");
  qi_cmd->add_option("first", qi_a, "WeightConfig JSON file")->required();
  qi_cmd->add_option("second", qi_b, "WeightConfig JSON file")->required();
  qi_cmd->callback([&] {
    WeightConfig a = read_weights(qi_a);
    WeightConfig b = read_weights(qi_b);
    CanonicalMu ca = canonicalize(a);
    CanonicalMu cb = canonicalize(b);
    bool same = quasi_isometric(a, b);
    Json j{{"first", to_json(ca)},
           {"second", to_json(cb)},
           {"quasi_isometric", same},
           {"same_isomorphism_class", same}};
    std::string md = "first: " + render_md(ca) + "second: " + render_md(cb) +
                     (same ? "quasi-isometric (isomorphic)\n"
                           : "not quasi-isometric (p_alpha differs)\n");
    out.emit(j, md);
  });

  // strips <profile.json> --degree K [--abelian-nilpotent]
  std::string strips_path;
  long strips_degree = -1;
  bool strips_abelian = false;
  CLI::App* strips_cmd = app.add_subcommand("strips", "Generic strip classification for an eigenvalue profile");
  strips_cmd->add_option("input", strips_path, "Profile JSON file (array of rationals or {\"eigenvalues\": [...]})")->required();
  strips_cmd->add_option("--degree", strips_degree, "Degree k (all degrees when omitted)");
  strips_cmd->add_flag("--abelian-nilpotent", strips_abelian,
                       "Assume the nilpotent part is abelian (enables the torsion flag)");
  strips_cmd->callback([&] {
    EigProfile profile = profile_from_json(read_file_json(strips_path));
    std::vector<StripReport> reports;
    if (strips_degree >= 0) {
      reports.push_back(strip_report(profile, static_cast<std::size_t>(strips_degree), strips_abelian));
    } else {
      for (std::size_t k = 1; k <= profile.n(); ++k)
        reports.push_back(strip_report(profile, k, strips_abelian));
    }
    out.emit(reports_json(reports), reports_md(reports));
  });

  // table {real | complex | sl3 | salpha}
  CLI::App* table = app.add_subcommand("table", "Closed-form strip tables");
  table->require_subcommand(1);

  long table_n = 0, table_m = 0, table_degree = -1;
  CLI::App* table_real = table->add_subcommand("real", "Constant-profile table (real hyperbolic space)");
  table_real->add_option("--n", table_n, "Dimension parameter n")->required();
  table_real->add_option("--degree", table_degree, "Degree k (all degrees when omitted)");
  table_real->callback([&] {
    auto reports = tabulate(table_degree, static_cast<std::size_t>(table_n),
                            [&](std::size_t k) { return real_hyperbolic_table(static_cast<std::size_t>(table_n), k); });
    out.emit(reports_json(reports), reports_md(reports));
  });

  CLI::App* table_complex = table->add_subcommand("complex", "Profile (1,...,1,2) table (complex hyperbolic space)");
  table_complex->add_option("--m", table_m, "Complex dimension m")->required();
  table_complex->add_option("--degree", table_degree, "Degree k (all degrees when omitted)");
  table_complex->callback([&] {
    auto reports = tabulate(table_degree, static_cast<std::size_t>(2 * table_m - 1),
                            [&](std::size_t k) { return complex_hyperbolic_table(static_cast<std::size_t>(table_m), k); });
    out.emit(reports_json(reports), reports_md(reports));
  });

  CLI::App* table_sl3 = table->add_subcommand("sl3", "Degree-2 table for the rank-one lattice model");
  table_sl3->callback([&] {
    StripReport rep = sl3_degree2();
    out.emit(to_json(rep), render_md(rep));
  });

  std::string salpha_path;
  CLI::App* table_salpha = table->add_subcommand("salpha", "Degree-2 table for a straight configuration");
  table_salpha->add_option("input", salpha_path, "WeightConfig JSON file")->required();
  table_salpha->add_option("--degree", table_degree, "Degree (only 2 is tabulated)");
  table_salpha->callback([&] {
    if (table_degree >= 0 && table_degree != 2)
      throw ParseError("only degree 2 is tabulated for this family");
    StripReport rep = s_alpha_degree2(read_weights(salpha_path));
    out.emit(to_json(rep), render_md(rep));
  });

  // heis verify --m --checks --trials --seed
  CLI::App* heis = app.add_subcommand("heis", "Symbolic checks on the Heisenberg form calculus");
  heis->require_subcommand(1);
  long heis_m = 0;
  std::vector<std::string> heis_checks;
  CLI::App* heis_verify = heis->add_subcommand("verify", "Run the form-calculus suite");
  heis_verify->add_option("--m", heis_m, "Largest m to exercise (Heisenberg dimension 2m-1)");
  heis_verify->add_option("--checks", heis_checks, "Comma-separated check names")->delimiter(',');
  heis_verify->callback([&] {
    VerifyOptions o = vopt;
    o.parallel = !serial;
    if (heis_m > 0) o.m_max = static_cast<std::size_t>(heis_m);
    o.checks = heis_checks;
    VerifyReport rep = verify_heis(o);
    out.emit(to_json(rep), render_md(rep));
    exit_code = rep.passed() ? 0 : 4;
  });

  // budget <weights.json>
  std::string budget_path;
  CLI::App* budget_cmd = app.add_subcommand("budget", "Window conditions for degree-1 nonvanishing over a straight configuration");
  budget_cmd->add_option("input", budget_path, "WeightConfig JSON file")->required();
  budget_cmd->callback([&] {
    CanonicalMu cm = canonicalize(read_weights(budget_path));
    BudgetResult br = budget_nonvanishing(cm);
    out.emit(Json{{"mu", to_json(cm)}, {"nonvanishing", to_json(br)}},
             render_md(cm) + "\n" + render_md(br));
  });

  // lemma-num --a --b --A --B [--numeric-check]
  std::string ln_a, ln_b, ln_A, ln_B;
  bool ln_check = false;
  CLI::App* lemma_cmd = app.add_subcommand("lemma-num", "Closed-form minimum of A e^{-a t} + B e^{b t}");
  lemma_cmd->add_option("--a", ln_a, "Decay exponent a > 0 (rational)")->required();
  lemma_cmd->add_option("--b", ln_b, "Growth exponent b > 0 (rational)")->required();
  lemma_cmd->add_option("--A", ln_A, "Prefactor A > 0")->required();
  lemma_cmd->add_option("--B", ln_B, "Prefactor B > 0")->required();
  lemma_cmd->add_flag("--numeric-check", ln_check, "Cross-check against a bracketing minimizer");
  lemma_cmd->callback([&] {
    Rat a = Rat::parse(ln_a);
    Rat b = Rat::parse(ln_b);
    BigFloat A = parse_positive_real(ln_A, "--A");
    BigFloat B = parse_positive_real(ln_B, "--B");
    LemmaNumMin lm = lemma_num_min(a, b, A, B);
    Json j = to_json(lm);
    std::string md = render_md(lm);
    if (ln_check) {
      BigFloat af = to_bigfloat(a);
      BigFloat bf = to_bigfloat(b);
      auto fp = [&](const BigFloat& t) { return -af * A * exp(-af * t) + bf * B * exp(bf * t); };
      auto f = [&](const BigFloat& t) { return A * exp(-af * t) + B * exp(bf * t); };
      BigFloat lo = -1, hi = 1;
      for (int i = 0; i < 64 && fp(lo) >= 0; ++i) lo *= 2;
      for (int i = 0; i < 64 && fp(hi) <= 0; ++i) hi *= 2;
      BigFloat oracle = bracket_minimize(f, lo, hi, 170);
      BigFloat rel = abs(lm.f_min - oracle) / oracle;
      bool agrees = rel <= BigFloat("1e-9");
      std::ostringstream os;
      os.precision(30);
      os << oracle;
      std::string oracle_str = os.str();
      os.str("");
      os << rel;
      j["numeric_check"] = Json{{"oracle_f_min", oracle_str},
                                {"relative_error", os.str()},
                                {"agrees", agrees}};
      md += "- numeric check: oracle " + oracle_str + (agrees ? " (agrees)\n" : " (DISAGREES)\n");
      if (!agrees) exit_code = 4;
    }
    out.emit(j, md);
  });

  // sl3-decay --p P --pattern fdx|gdy --direction +|-
  std::string sd_p, sd_pattern, sd_direction;
  CLI::App* sl3_cmd = app.add_subcommand("sl3-decay", "Decay certificate for the rank-one lattice model components");
  sl3_cmd->add_option("--p", sd_p, "Exponent p in (2, 4), rational")->required();
  sl3_cmd->add_option("--pattern", sd_pattern, "Component pattern")
      ->required()
      ->check(CLI::IsMember({"fdx", "gdy"}));
  sl3_cmd->add_option("--direction", sd_direction, "Flow direction: plus/+ or minus/-")
      ->required()
      ->check(CLI::IsMember({"+", "-", "plus", "minus"}));
  sl3_cmd->callback([&] {
    Rat p = Rat::parse(sd_p);
    Sl3Pattern pat = sd_pattern == "fdx" ? Sl3Pattern::FDx : Sl3Pattern::GDy;
    Direction dir = (sd_direction == "+" || sd_direction == "plus")
                        ? Direction::PlusInfinity
                        : Direction::MinusInfinity;
    std::optional<Sl3Decay> cert = sl3_decay(pat, p, dir);
    Json j{{"certificate", cert ? to_json(*cert) : Json(nullptr)}};
    std::string md;
    if (cert) {
      md = "decay certificate: exponents (" + cert->exponents[0].str() + ", " +
           cert->exponents[1].str() + ", " + cert->exponents[2].str() + ") * |s|\n";
    } else {
      md = "no decay certificate for this pattern/direction\n";
    }
    out.emit(j, md);
  });

  // verify <suite>
  std::string verify_suite;
  long verify_m = 0;
  std::vector<std::string> verify_checks;
  CLI::App* verify_cmd = app.add_subcommand("verify", "Randomized and exhaustive invariant suites");
  verify_cmd->add_option("suite", verify_suite, "heis, budget, numlemma, appendix or all")->required();
  verify_cmd->add_option("--m", verify_m, "Largest m for the form-calculus suite");
  verify_cmd->add_option("--checks", verify_checks, "Comma-separated check names")->delimiter(',');
  verify_cmd->callback([&] {
    VerifyOptions o = vopt;
    o.parallel = !serial;
    if (verify_m > 0) o.m_max = static_cast<std::size_t>(verify_m);
    o.checks = verify_checks;
    exit_code = run_verify(verify_suite, o, out);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << std::endl;
    return 2;
  } catch (const ContractError& e) {
    std::cerr << "error: " << e.what() << std::endl;
    return 3;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << std::endl;
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << std::endl;
    return 4;
  }
  return exit_code;
}
