#include "lpcoh/straight.hpp"

#include <algorithm>
#include <functional>

#include "lpcoh/error.hpp"
#include "lpcoh/linalg.hpp"

namespace lpcoh {

WeightConfig CanonicalMu::realize() const {
  std::vector<RatVec> rows;
  for (const Rat& m : mu) rows.push_back({Rat(-1), m});
  return WeightConfig(2, std::move(rows));
}

namespace {

void require_shape(const WeightConfig& cfg) {
  if (cfg.r() != 2 || cfg.n() != 3)
    throw DomainError("straight family requires r = 2 and n = 3");
}

Rat det2(const RatVec& a, const RatVec& b) { return a[0] * b[1] - a[1] * b[0]; }

RatVec sub(const RatVec& a, const RatVec& b) { return {a[0] - b[0], a[1] - b[1]}; }

} // namespace

bool is_straight(const WeightConfig& cfg) {
  require_shape(cfg);
  if (rank(cfg.matrix()) != 2) return false;
  RatVec d1 = sub(cfg.weight(0), cfg.weight(1));
  RatVec d2 = sub(cfg.weight(0), cfg.weight(2));
  return det2(d1, d2) == Rat(0);
}

CanonicalMu canonicalize(const WeightConfig& cfg) {
  if (!is_straight(cfg))
    throw ContractError("configuration is not in the straight family");

  // Affine coordinates t_i along the common line, relative to the centroid.
  RatVec c(2);
  for (std::size_t j = 0; j < 2; ++j)
    c[j] = (cfg.weight(0)[j] + cfg.weight(1)[j] + cfg.weight(2)[j]) / Rat(3);
  RatVec d;
  for (std::size_t i = 1; i < 3 && d.empty(); ++i) {
    RatVec cand = sub(cfg.weight(i), cfg.weight(0));
    if (cand[0] != Rat(0) || cand[1] != Rat(0)) d = cand;
  }
  std::size_t j = (d[0] != Rat(0)) ? 0 : 1;
  std::array<Rat, 3> t;
  for (std::size_t i = 0; i < 3; ++i)
    t[i] = (cfg.weight(i)[j] - c[j]) / d[j];

  std::sort(t.begin(), t.end(), std::greater<Rat>());
  if (t[1] - t[2] > t[0] - t[1]) {
    // Flip the line's orientation so gaps come out ordered.
    for (Rat& v : t) v = -v;
    std::sort(t.begin(), t.end(), std::greater<Rat>());
  }
  Rat scale = t[0] - t[1];
  if (scale == Rat(0))
    throw ContractError("degenerate straight configuration"); // unreachable: spanning forces t[0] > t[1]

  CanonicalMu out;
  for (std::size_t i = 0; i < 3; ++i) out.mu[i] = t[i] / scale;
  out.p_alpha = Rat(1) + (out.mu[0] - out.mu[2]); // mu_1 - mu_2 = 1
  return out;
}

CanonicalMu canonical_from_gap(const Rat& g) {
  if (g < Rat(0) || g > Rat(1))
    throw DomainError("canonical gap must lie in [0, 1]");
  CanonicalMu out;
  out.mu = {(Rat(2) + g) / Rat(3), (g - Rat(1)) / Rat(3),
            -(Rat(1) + Rat(2) * g) / Rat(3)};
  out.p_alpha = Rat(2) + g;
  return out;
}

Rat p_alpha(const WeightConfig& cfg) { return canonicalize(cfg).p_alpha; }

bool same_isomorphism_class(const WeightConfig& a, const WeightConfig& b) {
  return canonicalize(a) == canonicalize(b);
}

bool quasi_isometric(const WeightConfig& a, const WeightConfig& b) {
  return same_isomorphism_class(a, b);
}

} // namespace lpcoh
