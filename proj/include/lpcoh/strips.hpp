#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "lpcoh/intervals.hpp"
#include "lpcoh/profile.hpp"
#include "lpcoh/weights.hpp"

namespace lpcoh {

// Verdicts at a single exponent p in degree k, each with the inequality
// that produced it. "torsion_nonzero" only fires when the caller vouches
// that the nilpotent part is abelian.
struct StripFlags {
  bool vanishes = false;
  bool hausdorff_iso_z = false;
  bool boundary_density = false;
  bool torsion_nonzero = false;
  std::string vanishes_reason;
  std::string hausdorff_reason;
  std::string density_reason;
  std::string torsion_reason;
  std::pair<Rat, std::size_t> dual{Rat(0), 0};

  bool same_verdicts(const StripFlags& o) const {
    return vanishes == o.vanishes && hausdorff_iso_z == o.hausdorff_iso_z &&
           boundary_density == o.boundary_density && torsion_nonzero == o.torsion_nonzero;
  }
};

// pre: 1 <= k <= n, p > 1.
StripFlags classify(const EigProfile& profile, std::size_t k, const Rat& p,
                    bool h_abelian = false);

// Exponent line split into maximal regions of constant verdicts for one
// degree. piece_flags runs parallel to regions.pieces() on generic reports
// and is empty on the closed-form tables.
struct StripReport {
  std::size_t degree = 0;
  PuncturedIntervalSet regions;
  std::vector<StripFlags> piece_flags;
};

// Generic report from the strip inequalities alone. Statuses: Zero where
// vanishing holds, HausdorffOnly where only the Banach-isomorphism strip
// fires, Unknown elsewhere; threshold points become punctures.
StripReport strip_report(const EigProfile& profile, std::size_t k,
                         bool h_abelian = false);

// Closed-form tables. Degrees outside range are a domain error.
StripReport real_hyperbolic_table(std::size_t n, std::size_t k);
StripReport complex_hyperbolic_table(std::size_t m, std::size_t k);

// Degree-2 table for a straight configuration: Zero on (1, p_alpha) minus
// a puncture at 3/2, Nonzero on (p_alpha, +inf) minus one at 3.
StripReport s_alpha_degree2(const WeightConfig& cfg);

// Degree-2 table for the rank-one lattice model: Zero on (1,2) \ {4/3},
// Nonzero on (2, +inf) \ {4}.
StripReport sl3_degree2();

} // namespace lpcoh
