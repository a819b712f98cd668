#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lpcoh/intervals.hpp"
#include "lpcoh/numeric.hpp"
#include "lpcoh/profile.hpp"
#include "lpcoh/rat.hpp"
#include "lpcoh/straight.hpp"

namespace lpcoh {

// Pullback eigenvalue of one labeled form component, affine in the flow
// parameters t and s.
struct AffineExponent {
  Rat t, s, c;
  friend bool operator==(const AffineExponent&, const AffineExponent&) = default;
};

struct Component {
  std::string label;
  AffineExponent exponent;
};

using ComponentPattern = std::vector<Component>;

// Leading s-coefficient of a pattern as s -> +inf (max) or s -> -inf (min).
Rat leading_exponent(const ComponentPattern& pattern, bool plus_infinity);

// Decay rate nu_I - h/p of an eigencomponent under the time-one flow
// pullback: the component norm behaves like exp(-t (nu_I - h/p)), where
// nu_I is the eigenvalue of the contracting derivation's induced action
// and h its trace.
Rat pullback_exponent(const Rat& h, const Rat& nu_I, const Rat& p);
Rat pullback_exponent(const EigProfile& profile, const Rat& nu_I, const Rat& p);

// Exact minimization of f(t) = A e^{-a t} + B e^{b t}, a, b > 0, A, B > 0.
// t_min is (1/(a+b)) * log(aA/(bB)); both the exact pieces and a float
// evaluation are returned.
struct LemmaNumMin {
  Rat inv_rate;     // 1/(a+b)
  BigFloat log_arg; // aA/(bB)
  BigFloat t_min;
  BigFloat f_min;
};
LemmaNumMin lemma_num_min(const Rat& a, const Rat& b, const BigFloat& A,
                          const BigFloat& B);

// With A = e^(alpha s), B = e^(beta s), log f_min grows like rate * s:
// rate = (a beta + b alpha)/(a + b).
Rat rate(const Rat& a, const Rat& b, const Rat& alpha, const Rat& beta);

// Budget verdict for degree-1 nonvanishing over a straight configuration:
// both window conditions reduce to lower bounds on p inside (3/2, 3).
struct BudgetCondition {
  Rat beta;      // leading exponent of the primitive side
  Rat alpha;     // leading exponent of the differential side
  Rat threshold; // condition holds iff p > threshold
};

struct BudgetResult {
  BudgetCondition plus;  // s -> +inf window, must be negative
  BudgetCondition minus; // s -> -inf window, must be positive
  PuncturedIntervalSet feasible_p;
};

BudgetResult budget_nonvanishing(const CanonicalMu& mu);

// Sign tests behind the complementary vanishing window. T1 certifies the
// s -> -inf blow-up quantity is positive (holds on all of (3/2, 3)); T3
// certifies the s -> +inf quantity is negative (holds iff p < p_alpha).
enum class VanishingTest { T1, T3 };
bool budget_vanishing(const CanonicalMu& mu, VanishingTest which, const Rat& p);

// Decay certificate for the rank-one lattice model on 2 < p < 4: the
// three pullback terms, after the balancing substitution t = -+ s / (2a),
// decay like exp(-kappa_i |s|) with every kappa_i positive. Only the
// matched pattern/direction pairs admit a certificate.
enum class Sl3Pattern { FDx, GDy };
enum class Direction { MinusInfinity, PlusInfinity };

struct Sl3Decay {
  std::array<Rat, 3> exponents; // kappa for the theta, tau- and Y-terms
};
std::optional<Sl3Decay> sl3_decay(Sl3Pattern pattern, const Rat& p, Direction dir);

// Upper bound min over candidate t of sum_i weight_i * exp(coeff_i * t);
// a finite-candidate stand-in for the inf-over-t norm bounds. Enlarging
// the candidate set can only lower the bound.
BigFloat norm_bound_upper(const std::vector<std::pair<Rat, BigFloat>>& terms,
                          const std::vector<BigFloat>& candidates);

} // namespace lpcoh
