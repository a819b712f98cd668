#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "lpcoh/linalg.hpp"
#include "lpcoh/weights.hpp"

namespace lpcoh {

// Element (U, X) of the semidirect product algebra q x| R^n.
struct AlgebraElement {
  RatVec u; // size r
  RatVec x; // size n
  friend bool operator==(const AlgebraElement&, const AlgebraElement&) = default;
};

// [(U,X),(V,Y)] = (0, (w_i(U) Y_i - w_i(V) X_i)_i).
AlgebraElement bracket(const WeightConfig& cfg, const AlgebraElement& a,
                       const AlgebraElement& b);

// Basis of the center's q-part: the joint kernel of all weights. (The
// center of the algebra is that kernel acting trivially; no R^n part since
// every weight is nonzero.)
std::vector<RatVec> center(const WeightConfig& cfg);

// True when the weights do not span (Q^r)*: the group splits off a flat
// abelian factor.
bool has_abelian_factor(const WeightConfig& cfg);

// 1-based index bipartition (I1, I2) with Span(I1) and Span(I2) meeting
// only at 0, when one exists. Requires no abelian factor; exhaustive
// search, capped at n <= 24.
std::optional<std::pair<std::vector<std::size_t>, std::vector<std::size_t>>>
reducible(const WeightConfig& cfg);

// Witness U with w_i(U) <= -1 for all i (negatively curved homogeneous
// model exists), or nullopt. Exact Fourier-Motzkin elimination; r <= 4.
std::optional<RatVec> npc(const WeightConfig& cfg);

// Independent feasibility route: 0 lies in the convex hull of the weights
// iff npc() has no witness. Caratheodory subset enumeration, exact.
bool zero_in_weight_hull(const WeightConfig& cfg);

// Witness U with w_i(U) = -1 for all i, when the affine system is solvable.
std::optional<RatVec> hyperbolic_direction(const WeightConfig& cfg);

struct StructureReport {
  std::vector<RatVec> center_basis;
  bool derived_is_full_rn = false;
  bool abelian_factor = false;
  std::optional<std::pair<std::vector<std::size_t>, std::vector<std::size_t>>>
      reducible_partition;
  std::optional<RatVec> npc_witness;
  std::optional<RatVec> hyperbolic_witness;
};

StructureReport analyze_structure(const WeightConfig& cfg);

} // namespace lpcoh
