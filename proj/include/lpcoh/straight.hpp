#pragma once

#include <array>

#include "lpcoh/rat.hpp"
#include "lpcoh/weights.hpp"

namespace lpcoh {

// Canonical form of a straight configuration: three collinear spanning
// weights brought to -e1* + mu_i e2* with mu_1 + mu_2 + mu_3 = 0,
// 0 <= mu_2 - mu_3 <= mu_1 - mu_2 and scale fixed by mu_1 - mu_2 = 1.
// The triple is a complete isomorphism invariant of the family.
struct CanonicalMu {
  std::array<Rat, 3> mu;
  Rat p_alpha; // 1 + (mu_1 - mu_3)/(mu_1 - mu_2), always in [2, 3]

  friend bool operator==(const CanonicalMu&, const CanonicalMu&) = default;

  // The configuration (-1, mu_1), (-1, mu_2), (-1, mu_3) realizing this form.
  WeightConfig realize() const;
};

// Membership in the straight family: r = 2, n = 3 (else domain error),
// weights spanning (Q^2)* and lying on one affine line. Such a line misses
// the origin automatically, since a line through 0 would kill the spanning.
bool is_straight(const WeightConfig& cfg);

// Reduces a straight configuration to its CanonicalMu; contract error when
// is_straight fails.
CanonicalMu canonicalize(const WeightConfig& cfg);

// The canonical form with mu_1 - mu_2 = 1 and mu_2 - mu_3 = g; the gap
// g in [0, 1] parametrizes the family, with p_alpha = 2 + g.
CanonicalMu canonical_from_gap(const Rat& g);

// Critical exponent of the degree-1 cohomology for this family.
Rat p_alpha(const WeightConfig& cfg);

// Both are decided by equality of canonical forms: within this family,
// isomorphism, quasi-isometry and equality of p_alpha all coincide.
bool same_isomorphism_class(const WeightConfig& a, const WeightConfig& b);
bool quasi_isometric(const WeightConfig& a, const WeightConfig& b);

} // namespace lpcoh
