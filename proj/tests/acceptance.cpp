// Acceptance gate. Eight criteria, each printing one [PASS] line with its
// runtime; any failure aborts with [FAIL] and a location. Criteria mix
// library calls with spot checks of the installed binary (argv[1]).
//
// Tolerances pinned here: closed-form minimum vs bracketing oracle 1e-9
// relative over 1000 instances; growth-rate slope 1e-6 absolute.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>
#include <vector>

#include "lpcoh/asymptotics.hpp"
#include "lpcoh/heis.hpp"
#include "lpcoh/json_io.hpp"
#include "lpcoh/poly.hpp"
#include "lpcoh/profile.hpp"
#include "lpcoh/rng.hpp"
#include "lpcoh/straight.hpp"
#include "lpcoh/strips.hpp"
#include "lpcoh/structure.hpp"
#include "lpcoh/verify.hpp"

#define REQUIRE(cond, msg)                                                     \
  do {                                                                         \
    if (!(cond)) {                                                             \
      std::cerr << "[FAIL] " << __FILE__ << ":" << __LINE__ << " " << msg      \
                << "\n";                                                       \
      std::exit(1);                                                            \
    }                                                                          \
  } while (0)

namespace {

using namespace lpcoh;
using Piece = PuncturedIntervalSet::Piece;

std::string g_bin;

std::string run_cli(const std::string& args) {
  const std::string cmd = g_bin + " " + args;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr, "popen failed: " << cmd);
  std::string out;
  char buf[4096];
  std::size_t n = 0;
  while ((n = std::fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  int status = pclose(pipe);
  REQUIRE(WIFEXITED(status) && WEXITSTATUS(status) == 0, "nonzero exit: " << cmd);
  return out;
}

double secs_since(const std::chrono::steady_clock::time_point& t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void criterion_pass(int n, const char* what, double secs, double bound) {
  if (bound > 0)
    REQUIRE(secs < bound, "criterion " << n << " took " << secs << "s, bound " << bound << "s");
  std::ostringstream os;
  os << std::fixed << std::setprecision(2) << secs;
  std::cout << "[PASS] criterion " << n << ": " << what << " (" << os.str() << "s)\n";
}

unsigned long long binom(unsigned n, unsigned k) {
  if (k > n) return 0;
  unsigned long long r = 1;
  for (unsigned i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

// Criterion 1: the pinned degree-2 table, its CLI rendering, and the same
// thresholds recovered by the generic classifier on the profile (0,1,1,2).
void criterion1() {
  auto t0 = std::chrono::steady_clock::now();

  StripReport rep = sl3_degree2();
  REQUIRE(rep.degree == 2, "table degree");
  const auto& pcs = rep.regions.pieces();
  REQUIRE(pcs.size() == 2, "table has two pieces");
  REQUIRE((pcs[0] == Piece{XRat(1), XRat(Rat(2)), Status::Zero}), "zero piece (1, 2)");
  REQUIRE((pcs[1] == Piece{XRat(Rat(2)), XRat::infinity(), Status::Nonzero}),
          "nonzero piece (2, inf)");
  REQUIRE((rep.regions.punctures() == std::vector<Rat>{Rat(4, 3), Rat(2), Rat(4)}),
          "punctures 4/3, 2, 4");

  REQUIRE(run_cli("table sl3") == dump_json(to_json(rep)), "CLI output matches the library");

  EigProfile pr({Rat(0), Rat(1), Rat(1), Rat(2)});
  REQUIRE(pr.threshold(EigProfile::Side::UpperSum, 2) == XRat(Rat(4, 3)),
          "vanishing threshold 4/3");
  REQUIRE(pr.threshold(EigProfile::Side::LowerSum, 2) == XRat(Rat(4)),
          "nonvanishing onset 4");
  REQUIRE(classify(pr, 2, Rat(5, 4)).vanishes, "vanishes below 4/3");
  REQUIRE(!classify(pr, 2, Rat(3, 2)).vanishes, "no vanishing above 4/3");
  REQUIRE(classify(pr, 2, Rat(5)).boundary_density, "density beyond 4");
  REQUIRE(!classify(pr, 2, Rat(7, 2)).boundary_density, "no density before 4");

  StripReport gen = strip_report(pr, 2);
  REQUIRE((gen.regions.pieces()[0] == Piece{XRat(1), XRat(Rat(4, 3)), Status::Zero}),
          "generic report starts with the zero band");
  std::size_t flagged = 0, where = 0;
  for (std::size_t i = 0; i < gen.piece_flags.size(); ++i)
    if (gen.piece_flags[i].boundary_density) ++flagged, where = i;
  REQUIRE(flagged == 1 && gen.regions.pieces()[where].lo == XRat(Rat(4)),
          "density band begins at 4");

  criterion_pass(1, "pinned degree-2 table and generic thresholds", secs_since(t0), 1.0);
}

// Criterion 2: 200 random members of the straight family; the critical
// exponent is a [2,3]-valued invariant of linear moves and row order,
// canonical forms are idempotent, and the degree-2 table vanishes on
// (1, 3/2). One instance is round-tripped through the binary.
void criterion2() {
  auto t0 = std::chrono::steady_clock::now();

  SplitMix64 rng(0x5eed2);
  for (std::uint64_t t = 0; t < 200; ++t) {
    WeightConfig cfg = random_straight(rng);
    CanonicalMu cm = canonicalize(cfg);
    REQUIRE(cm.p_alpha >= Rat(2) && cm.p_alpha <= Rat(3),
            "p_alpha in [2, 3] at trial " << t);

    RatMat g = random_invertible(rng, 2);
    std::vector<RatVec> rows = cfg.precompose(g).weights();
    std::rotate(rows.begin(), rows.begin() + static_cast<long>(t % 3), rows.end());
    if (t % 2) std::swap(rows[0], rows[1]);
    REQUIRE(canonicalize(WeightConfig(2, rows)) == cm, "invariance at trial " << t);

    REQUIRE(canonicalize(cm.realize()) == cm, "idempotence at trial " << t);

    StripReport srep = s_alpha_degree2(cfg);
    const Piece& first = srep.regions.pieces()[0];
    REQUIRE(first.lo == XRat(1) && first.status == Status::Zero,
            "leading zero piece at trial " << t);
    REQUIRE(XRat(Rat(3, 2)) <= first.hi, "zero region reaches 3/2 at trial " << t);
    for (const Rat& p : {Rat(5, 4), Rat(4, 3), Rat(7, 5)})
      REQUIRE(srep.regions.status_at(p) == Status::Zero,
              "zero at p = " << p.str() << ", trial " << t);
  }

  namespace fs = std::filesystem;
  fs::path tmp = fs::temp_directory_path() / ("lpcoh_acc_" + std::to_string(getpid()) + ".json");
  CanonicalMu half = canonical_from_gap(Rat(1, 2));
  std::ofstream(tmp) << dump_json(to_json(half.realize()));
  Json j = parse_document(run_cli("table salpha '" + tmp.string() + "'"));
  fs::remove(tmp);
  REQUIRE(j["regions"]["pieces"][0]["hi"] == half.p_alpha.str() &&
              j["regions"]["pieces"][0]["status"] == "zero",
          "CLI zero piece ends at p_alpha");

  criterion_pass(2, "critical exponent invariance and degree-2 vanishing", secs_since(t0), 5.0);
}

// Criterion 3: the s -> +inf window bound coincides with the critical
// exponent on 200 random members, and the two reductions behind the window
// bounds hold as polynomial identities in (p, mu_1, mu_2) after
// substituting mu_3 = -mu_1 - mu_2.
void criterion3() {
  auto t0 = std::chrono::steady_clock::now();

  SplitMix64 rng(0x5eed3);
  for (std::uint64_t t = 0; t < 200; ++t) {
    CanonicalMu cm = canonicalize(random_straight(rng));
    BudgetResult br = budget_nonvanishing(cm);
    REQUIRE(br.plus.threshold == cm.p_alpha, "plus window bound at trial " << t);
    REQUIRE(br.minus.threshold <= Rat(3, 2), "minus window bound at trial " << t);
  }

  const Poly P = Poly::variable(3, 0);
  const Poly M1 = Poly::variable(3, 1);
  const Poly M2 = Poly::variable(3, 2);
  const Poly M3 = -(M1 + M2);
  const Poly two_p_minus_3 = P + P - Poly::constant(3, Rat(3));
  const Poly three_minus_p = Poly::constant(3, Rat(3)) - P;
  REQUIRE(two_p_minus_3 * M2 - three_minus_p * M3 == P * (M2 - M1) + Rat(3) * M1,
          "plus window simplification");
  REQUIRE(three_minus_p * M1 - two_p_minus_3 * M2 == -(P * (M2 - M3)) - Rat(3) * M3,
          "minus window simplification");

  criterion_pass(3, "window bound equals the critical exponent, identities exact",
                 secs_since(t0), 0.0);
}

// Criterion 4: closed-form tables. Constant profiles n = 2..8: nonzero
// exactly on (n/k, n/(k-1)). Profiles (1,..,1,2) for m = 2..6: the two
// middle bands follow the k >= m / k <= m dichotomy and 2m/k is punctured.
void criterion4() {
  auto t0 = std::chrono::steady_clock::now();

  for (long n = 2; n <= 8; ++n) {
    for (long k = 1; k <= n; ++k) {
      StripReport r = real_hyperbolic_table(static_cast<std::size_t>(n),
                                            static_cast<std::size_t>(k));
      Rat lo(n, k);
      XRat hi = k == 1 ? XRat::infinity() : XRat(Rat(n, k - 1));
      std::vector<Piece> expect;
      if (lo > Rat(1)) expect.push_back({XRat(1), XRat(lo), Status::Zero});
      expect.push_back({lo > Rat(1) ? XRat(lo) : XRat(1), hi, Status::Nonzero});
      if (k > 1) expect.push_back({hi, XRat::infinity(), Status::Zero});
      std::vector<Rat> punct;
      if (lo > Rat(1)) punct.push_back(lo);
      if (k > 1) punct.push_back(Rat(n, k - 1));
      REQUIRE(r.regions.pieces() == expect && r.regions.punctures() == punct,
              "constant profile n = " << n << ", k = " << k);
      REQUIRE(r.regions.covers_domain(), "coverage n = " << n << ", k = " << k);
    }
  }

  for (long m = 2; m <= 6; ++m) {
    for (long k = 1; k <= 2 * m - 1; ++k) {
      StripReport r = complex_hyperbolic_table(static_cast<std::size_t>(m),
                                               static_cast<std::size_t>(k));
      Rat t1(2 * m, k + 1), t2(2 * m, k);
      Rat lo1 = std::max(Rat(1), t1);
      Rat mid1 = (lo1 + t2) / Rat(2);
      REQUIRE(r.regions.status_at(mid1) ==
                  (k >= m ? Status::Nonzero : Status::Zero),
              "first band m = " << m << ", k = " << k);
      Rat mid2 = k == 1 ? t2 + Rat(1) : (t2 + Rat(2 * m, k - 1)) / Rat(2);
      REQUIRE(r.regions.status_at(mid2) ==
                  (k <= m ? Status::Nonzero : Status::Zero),
              "second band m = " << m << ", k = " << k);
      if (t1 > Rat(1))
        REQUIRE(r.regions.status_at((Rat(1) + t1) / Rat(2)) == Status::Zero,
                "head zero band m = " << m << ", k = " << k);
      if (k > 1)
        REQUIRE(r.regions.status_at(Rat(2 * m, k - 1) + Rat(1)) == Status::Zero,
                "tail zero band m = " << m << ", k = " << k);
      const auto& punct = r.regions.punctures();
      REQUIRE(std::find(punct.begin(), punct.end(), t2) != punct.end(),
              "puncture at 2m/k for m = " << m << ", k = " << k);
      REQUIRE(r.regions.covers_domain(), "coverage m = " << m << ", k = " << k);
    }
  }

  criterion_pass(4, "closed-form tables for both model families", secs_since(t0), 1.0);
}

// Criterion 5: the wedge-with-d(tau) map on constant forms is injective
// exactly up to degree m-2 and surjective exactly from degree m-2 on, for
// m = 2..5; under the top-degree pairing the annihilator of its kernel is
// its image, for m = 2..4.
void criterion5() {
  auto t0 = std::chrono::steady_clock::now();

  for (std::size_t m = 2; m <= 5; ++m) {
    const unsigned h = static_cast<unsigned>(2 * (m - 1));
    for (std::size_t k = 0; k + 2 <= h; ++k) {
      LefschetzRank lr = lefschetz_rank(m, k);
      REQUIRE(lr.dim_domain == binom(h, static_cast<unsigned>(k)),
              "domain dimension m = " << m << ", k = " << k);
      REQUIRE(lr.dim_kernel + lr.dim_image == lr.dim_domain,
              "rank bookkeeping m = " << m << ", k = " << k);
      REQUIRE((lr.dim_kernel == 0) == (k + 2 <= m),
              "injective iff k <= m - 2, m = " << m << ", k = " << k);
      REQUIRE((lr.dim_image == binom(h, static_cast<unsigned>(k + 2))) == (k + 2 >= m),
              "surjective iff k >= m - 2, m = " << m << ", k = " << k);
    }
  }

  for (std::size_t m = 2; m <= 4; ++m) {
    for (std::size_t k = 2; k <= 2 * m - 2; ++k) {
      DualityCheck dc = duality_orthogonality(m, k);
      REQUIRE(dc.image_in_annihilator, "image pairs to zero, m = " << m << ", k = " << k);
      REQUIRE(dc.equal && dc.dim_annihilator == dc.dim_image,
              "annihilator equals image, m = " << m << ", k = " << k);
    }
  }

  criterion_pass(5, "wedge-map rank windows and pairing orthogonality", secs_since(t0), 10.0);
}

// Criterion 6: form calculus. d^2 = 0 on 500 random polynomial forms;
// the middle-degree obstruction of f dx matches its two-term expansion on
// 100 random f; the paired construction has a zero certificate on 100
// random potentials; the completed form has purely vertical differential
// on 100 random horizontal inputs.
void criterion6() {
  auto t0 = std::chrono::steady_clock::now();

  SplitMix64 rng(0x5eed6);
  for (std::uint64_t t = 0; t < 500; ++t) {
    std::size_t m = 2 + rng.next() % 2;
    unsigned deg = static_cast<unsigned>(rng.next() % 4);
    HeisForm w = random_form(rng, m, deg, 3);
    REQUIRE(differentiate(differentiate(w)).is_zero(), "d^2 = 0 at trial " << t);
  }

  HeisAlgebra alg(2);
  const std::uint32_t dx = 1u << alg.bit_dx(0);
  const std::uint32_t dy = 1u << alg.bit_dy(0);
  const std::uint32_t tau = 1u << alg.bit_tau();
  for (std::uint64_t t = 0; t < 100; ++t) {
    Poly f = random_poly(rng, 3, 3, 4);
    HeisForm theta(2, 1);
    theta.add_term(dx, f);
    HeisForm expect(2, 2);
    expect.add_term(dx | tau, -(alg.Z(f) + alg.X(0, alg.Y(0, f))));
    expect.add_term(dy | tau, -alg.Y(0, alg.Y(0, f)));
    REQUIRE(nullclass_middle(theta) == expect, "obstruction expansion at trial " << t);
  }

  for (std::uint64_t t = 0; t < 100; ++t) {
    Poly u = random_poly(rng, 3, 3, 4);
    REQUIRE(sl3_pair_construct(u).certificate.is_zero(),
            "pair certificate at trial " << t);
  }

  for (std::uint64_t t = 0; t < 100; ++t) {
    std::size_t m = 2 + rng.next() % 2;
    HeisForm phi1 = weight_split(random_form(rng, m, static_cast<unsigned>(m - 1), 3)).first;
    HeisForm phi = vertical_construct(phi1);
    REQUIRE(weight_split(phi).first == phi1, "horizontal part kept at trial " << t);
    REQUIRE(weight_split(differentiate(phi)).first.is_zero(),
            "vertical differential at trial " << t);
  }

  criterion_pass(6, "form calculus identities on random inputs", secs_since(t0), 30.0);
}

// Criterion 7: the exact minimum of A e^{-a t} + B e^{b t} against a local
// ternary-search oracle, 1000 instances, 1e-9 relative; then the growth
// rate of the minimum under A = e^{alpha s}, B = e^{beta s} against the
// closed-form slope, 1e-6, from the difference quotient over s in [10, 40].
void criterion7() {
  auto t0 = std::chrono::steady_clock::now();

  std::uint64_t state = 0xacce7u;
  auto mix = [&state]() {
    state += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  };
  auto ternary = [](const auto& f, BigFloat lo, BigFloat hi) {
    for (int i = 0; i < 170; ++i) {
      BigFloat third = (hi - lo) / 3;
      if (f(lo + third) < f(hi - third)) hi -= third; else lo += third;
    }
    return f((lo + hi) / 2);
  };

  const BigFloat rel_tol("1e-9");
  for (int t = 0; t < 1000; ++t) {
    Rat a(static_cast<long>(4 + mix() % 45), 12);
    Rat b(static_cast<long>(4 + mix() % 45), 12);
    BigFloat A = to_bigfloat(Rat(static_cast<long>(1 + mix() % 64), 8));
    BigFloat B = to_bigfloat(Rat(static_cast<long>(1 + mix() % 64), 8));
    LemmaNumMin lm = lemma_num_min(a, b, A, B);
    BigFloat af = to_bigfloat(a), bf = to_bigfloat(b);
    auto f = [&](const BigFloat& t_) { return A * exp(-af * t_) + B * exp(bf * t_); };
    BigFloat oracle = ternary(f, BigFloat(-16), BigFloat(16));
    REQUIRE(abs(lm.f_min - oracle) / oracle <= rel_tol,
            "minimum off oracle at trial " << t << " (a=" << a.str() << " b=" << b.str() << ")");
  }

  const BigFloat slope_tol("1e-6");
  for (int t = 0; t < 100; ++t) {
    Rat a(static_cast<long>(4 + mix() % 45), 12);
    Rat b(static_cast<long>(4 + mix() % 45), 12);
    Rat alpha = Rat(static_cast<long>(mix() % 33), 8) - Rat(2);
    Rat beta = Rat(static_cast<long>(mix() % 33), 8) - Rat(2);
    BigFloat af = to_bigfloat(alpha), bf = to_bigfloat(beta);
    LemmaNumMin at10 = lemma_num_min(a, b, exp(af * 10), exp(bf * 10));
    LemmaNumMin at40 = lemma_num_min(a, b, exp(af * 40), exp(bf * 40));
    BigFloat slope = (log(at40.f_min) - log(at10.f_min)) / 30;
    REQUIRE(abs(slope - to_bigfloat(rate(a, b, alpha, beta))) <= slope_tol,
            "slope off rate at trial " << t);
  }

  criterion_pass(7, "closed-form minimum and growth rate vs numeric oracles",
                 secs_since(t0), 10.0);
}

// Criterion 8: structural witnesses. A straight triple is irreducible with
// valid curvature and hyperbolic witnesses; the split pair separates into
// {1} and {2}; the (1, -lambda) families have no curvature witness; and
// the complementary partial sums of 1000 random profiles add up to the
// trace.
void criterion8() {
  auto t0 = std::chrono::steady_clock::now();

  WeightConfig straight(2, {RatVec{Rat(-1), Rat(1)}, RatVec{Rat(-1), Rat(0)},
                            RatVec{Rat(-1), Rat(-1)}});
  StructureReport sr = analyze_structure(straight);
  REQUIRE(!sr.reducible_partition.has_value(), "straight triple is irreducible");
  REQUIRE(sr.npc_witness.has_value() && sr.hyperbolic_witness.has_value(),
          "straight triple has both witnesses");
  for (std::size_t i = 0; i < straight.n(); ++i) {
    REQUIRE(straight.eval(i, *sr.npc_witness) <= Rat(-1), "curvature witness row " << i);
    REQUIRE(straight.eval(i, *sr.hyperbolic_witness) == Rat(-1), "hyperbolic witness row " << i);
  }

  StructureReport split =
      analyze_structure(WeightConfig(2, {RatVec{Rat(-1), Rat(0)}, RatVec{Rat(0), Rat(-1)}}));
  REQUIRE(split.reducible_partition.has_value(), "split pair is reducible");
  REQUIRE((split.reducible_partition->first == std::vector<std::size_t>{1} &&
           split.reducible_partition->second == std::vector<std::size_t>{2}),
          "split partition is {1} | {2}");

  for (long lam = 1; lam <= 5; ++lam) {
    WeightConfig sol(1, {RatVec{Rat(1)}, RatVec{Rat(-lam)}});
    REQUIRE(!npc(sol).has_value(), "no curvature witness for lambda = " << lam);
    REQUIRE(zero_in_weight_hull(sol), "hull cross-check for lambda = " << lam);
    REQUIRE(!analyze_structure(sol).npc_witness.has_value(),
            "report agrees for lambda = " << lam);
  }

  SplitMix64 rng(0x5eed8);
  for (int t = 0; t < 1000; ++t) {
    EigProfile pr = random_profile(rng, 8);
    for (std::size_t j = 0; j <= pr.n(); ++j)
      REQUIRE(pr.w(j) + pr.W(pr.n() - j) == pr.h(),
              "partial sums at trial " << t << ", j = " << j);
  }

  criterion_pass(8, "structural witnesses and partial-sum duality", secs_since(t0), 0.0);
}

} // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: acceptance <path-to-binary>\n";
    return 1;
  }
  g_bin = "'" + std::string(argv[1]) + "'";
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  std::cout << "[PASS] acceptance: 8 of 8 criteria\n";
  return 0;
}
