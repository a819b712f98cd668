#pragma once

#include <cstdint>
#include <functional>
#include <gmpxx.h>
#include <optional>
#include <string>
#include <vector>

#include "lpcoh/heis.hpp"
#include "lpcoh/numeric.hpp"
#include "lpcoh/profile.hpp"
#include "lpcoh/rng.hpp"
#include "lpcoh/straight.hpp"
#include "lpcoh/weights.hpp"

namespace lpcoh {

// One property sweep: `trials` independent trials, each seeded from
// (suite seed, check name, trial index). A failing trial contributes its
// message; the reported counterexample is the lowest failing index, so
// serial and parallel runs agree bytewise.
struct CheckResult {
  std::string name;
  std::uint64_t trials = 0;
  std::uint64_t failures = 0;
  std::string counterexample;

  bool passed() const { return failures == 0; }
};

struct VerifyReport {
  std::string suite;
  std::uint64_t seed = 0;
  std::vector<CheckResult> checks;

  bool passed() const;
};

struct VerifyOptions {
  std::uint64_t seed = 0;
  std::uint64_t trials = 0;           // 0: per-check defaults
  std::size_t m_max = 0;              // heis sweeps: cap on m (0: default)
  bool parallel = true;               // OpenMP sweep vs serial reference
  std::vector<std::string> checks;    // empty: every check in the suite
};

VerifyReport verify_heis(const VerifyOptions& opt);
VerifyReport verify_budget(const VerifyOptions& opt);
VerifyReport verify_numlemma(const VerifyOptions& opt);
VerifyReport verify_appendix(const VerifyOptions& opt);
std::vector<VerifyReport> verify_all(const VerifyOptions& opt);

// Returns the failure message for a trial, or nothing on success.
using TrialFn =
    std::function<std::optional<std::string>(std::uint64_t trial, SplitMix64& rng)>;

CheckResult run_check(const std::string& name, std::uint64_t suite_seed,
                      std::uint64_t trials, bool use_parallel, const TrialFn& fn);

// ---- independent oracles, exported for the unit and acceptance tests ----

// Minimum of a strictly convex function by derivative-sign bracketing plus
// ternary search; knows nothing of the closed form it cross-checks.
BigFloat bracket_minimize(const std::function<BigFloat(const BigFloat&)>& f,
                          BigFloat lo, BigFloat hi, int iterations);

// Rank over Q by fraction-free Bareiss elimination on the integer matrix
// obtained by clearing denominators row by row; independent of the rref
// kernel in linalg.
std::size_t bareiss_rank(const std::vector<RatVec>& rows);

// ---- deterministic random generators shared by suites and tests ----

Rat random_rat(SplitMix64& rng, long max_num, long max_den);
Rat random_nonneg_rat(SplitMix64& rng, long max_num, long max_den);
Rat random_pos_rat(SplitMix64& rng, long max_num, long max_den);
EigProfile random_profile(SplitMix64& rng, std::size_t n_max);
// Unit-determinant-free invertible matrix built from elementary factors.
RatMat random_invertible(SplitMix64& rng, std::size_t r);
CanonicalMu random_canonical_mu(SplitMix64& rng);
// Random member of the straight family: canonical rows, then a random
// invertible precomposition and a random row permutation.
WeightConfig random_straight(SplitMix64& rng);
WeightConfig random_weight_config(SplitMix64& rng, std::size_t r, std::size_t n);
Poly random_poly(SplitMix64& rng, std::size_t nvars, unsigned max_deg,
                 std::size_t max_terms);
HeisForm random_form(SplitMix64& rng, std::size_t m, unsigned degree,
                     unsigned max_poly_deg);

} // namespace lpcoh
