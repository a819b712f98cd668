#include "lpcoh/asymptotics.hpp"

#include <algorithm>

#include "lpcoh/error.hpp"

namespace lpcoh {

Rat leading_exponent(const ComponentPattern& pattern, bool plus_infinity) {
  if (pattern.empty()) throw DomainError("empty component pattern");
  Rat best = pattern.front().exponent.s;
  for (const Component& c : pattern) {
    const Rat& v = c.exponent.s;
    if (plus_infinity ? (v > best) : (v < best)) best = v;
  }
  return best;
}

Rat pullback_exponent(const Rat& h, const Rat& nu_I, const Rat& p) {
  if (!(p > Rat(1))) throw DomainError("exponent must satisfy p > 1");
  return nu_I - h / p;
}

Rat pullback_exponent(const EigProfile& profile, const Rat& nu_I, const Rat& p) {
  return pullback_exponent(profile.h(), nu_I, p);
}

LemmaNumMin lemma_num_min(const Rat& a, const Rat& b, const BigFloat& A,
                          const BigFloat& B) {
  if (!(a > Rat(0)) || !(b > Rat(0))) throw DomainError("rates must be positive");
  if (!(A > 0) || !(B > 0)) throw DomainError("prefactors must be positive");

  LemmaNumMin out;
  out.inv_rate = Rat(1) / (a + b);
  // Rebuild a and b at full precision from the exact fractions.
  BigFloat af = BigFloat(a.num().get_str()) / BigFloat(a.den().get_str());
  BigFloat bf = BigFloat(b.num().get_str()) / BigFloat(b.den().get_str());
  out.log_arg = (af * A) / (bf * B);
  out.t_min = log(out.log_arg) / (af + bf);
  out.f_min = B * exp(bf * out.t_min) * (bf / af + 1);
  return out;
}

Rat rate(const Rat& a, const Rat& b, const Rat& alpha, const Rat& beta) {
  if (!(a > Rat(0)) || !(b > Rat(0))) throw DomainError("rates must be positive");
  return (a * beta + b * alpha) / (a + b);
}

namespace {

// Condition (2p-3) beta + (3-p) alpha  <0 resp. >0, rewritten as
// p (2 beta - alpha) < resp. > 3 (beta - alpha). Over this family the
// p-coefficient has a fixed sign, so both reduce to p > threshold.
Rat lower_threshold(const Rat& beta, const Rat& alpha, bool want_negative) {
  Rat k = Rat(2) * beta - alpha;
  Rat r = Rat(3) * (beta - alpha);
  if (want_negative) {
    if (!(k < Rat(0)))
      throw DomainError("window condition did not reduce to a lower bound");
  } else {
    if (!(k > Rat(0)))
      throw DomainError("window condition did not reduce to a lower bound");
  }
  return r / k;
}

} // namespace

BudgetResult budget_nonvanishing(const CanonicalMu& mu) {
  const Rat &m1 = mu.mu[0], &m2 = mu.mu[1], &m3 = mu.mu[2];

  // theta = f dx with pullback weight mu_1; its primitive partner
  // Theta = g dy + h dz carries mu_2, mu_3; the shared differential has
  // the complementary weights -mu_2 (dx^dz) and -mu_3 (dx^dy).
  ComponentPattern theta{{"f dx", {Rat(0), m1, Rat(0)}}};
  ComponentPattern big_theta{{"g dy", {Rat(0), m2, Rat(0)}},
                             {"h dz", {Rat(0), m3, Rat(0)}}};
  ComponentPattern dtheta{{"G dx^dz", {Rat(0), -m2, Rat(0)}},
                          {"H dx^dy", {Rat(0), -m3, Rat(0)}}};

  BudgetResult out;
  out.plus.beta = leading_exponent(big_theta, true);
  out.plus.alpha = leading_exponent(dtheta, true);
  out.plus.threshold = lower_threshold(out.plus.beta, out.plus.alpha, true);
  out.minus.beta = leading_exponent(theta, false);
  out.minus.alpha = leading_exponent(dtheta, false);
  out.minus.threshold = lower_threshold(out.minus.beta, out.minus.alpha, false);

  Rat lo = std::max({out.plus.threshold, out.minus.threshold, Rat(3, 2)});
  out.feasible_p.add_piece(XRat(lo), XRat(Rat(3)), Status::Nonzero);
  out.feasible_p.normalize();
  return out;
}

bool budget_vanishing(const CanonicalMu& mu, VanishingTest which, const Rat& p) {
  if (!(Rat(3, 2) < p && p < Rat(3)))
    throw DomainError("vanishing window tests require 3/2 < p < 3");
  const Rat &m1 = mu.mu[0], &m2 = mu.mu[1], &m3 = mu.mu[2];

  // p * (a beta + b alpha) with the conjugate-side rates a = 3/p - 1,
  // b = 2 - 3/p equals (3 - p) beta + (2p - 3) alpha.
  auto quantity = [&](const Rat& beta, const Rat& alpha) {
    return (Rat(3) - p) * beta + (Rat(2) * p - Rat(3)) * alpha;
  };

  switch (which) {
    case VanishingTest::T1: {
      // test form f dx: primitive weight mu_1, differential components
      // -mu_2, -mu_3; the s -> -inf side takes minima.
      ComponentPattern prim{{"f dx", {Rat(0), m1, Rat(0)}}};
      ComponentPattern diff{{"G dx^dz", {Rat(0), -m2, Rat(0)}},
                            {"H dx^dy", {Rat(0), -m3, Rat(0)}}};
      return quantity(leading_exponent(prim, false), leading_exponent(diff, false)) >
             Rat(0);
    }
    case VanishingTest::T3: {
      // test form h dz: primitive weight mu_3, differential components
      // -mu_1 (dy^dz), -mu_2 (dx^dz); the s -> +inf side takes maxima.
      ComponentPattern prim{{"h dz", {Rat(0), m3, Rat(0)}}};
      ComponentPattern diff{{"G dx^dz", {Rat(0), -m2, Rat(0)}},
                            {"F dy^dz", {Rat(0), -m1, Rat(0)}}};
      return quantity(leading_exponent(prim, true), leading_exponent(diff, true)) <
             Rat(0);
    }
  }
  throw DomainError("bad vanishing test tag");
}

std::optional<Sl3Decay> sl3_decay(Sl3Pattern pattern, const Rat& p, Direction dir) {
  if (!(Rat(2) < p && p < Rat(4)))
    throw DomainError("decay certificates require 2 < p < 4");

  bool matched = (pattern == Sl3Pattern::FDx && dir == Direction::MinusInfinity) ||
                 (pattern == Sl3Pattern::GDy && dir == Direction::PlusInfinity);
  if (!matched) return std::nullopt;

  Rat a = Rat(4) / p - Rat(1);
  Rat b = Rat(2) - Rat(4) / p;
  Rat c = Rat(3) - Rat(4) / p;

  // t = -+ s/(2a) turns the terms e^{at+-s}, e^{-ct+-s}, e^{-bt} into
  // exp(-kappa_i |s|) with these kappa.
  Sl3Decay out;
  out.exponents = {Rat(1, 2), c / (Rat(2) * a) + Rat(1), b / (Rat(2) * a)};
  for (const Rat& k : out.exponents)
    if (!(k > Rat(0))) return std::nullopt;
  return out;
}

BigFloat norm_bound_upper(const std::vector<std::pair<Rat, BigFloat>>& terms,
                          const std::vector<BigFloat>& candidates) {
  if (candidates.empty()) throw DomainError("candidate set must be nonempty");
  BigFloat best;
  bool first = true;
  for (const BigFloat& t : candidates) {
    BigFloat v = 0;
    for (const auto& [coeff, weight] : terms) {
      BigFloat cf = BigFloat(coeff.num().get_str()) / BigFloat(coeff.den().get_str());
      v += weight * exp(cf * t);
    }
    if (first || v < best) { best = v; first = false; }
  }
  return best;
}

} // namespace lpcoh
