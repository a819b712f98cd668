#pragma once

#include <cstddef>
#include <vector>

#include "lpcoh/linalg.hpp"
#include "lpcoh/rat.hpp"

namespace lpcoh {

// Finite list of nonzero covectors w_1..w_n on Q^r: the weights of an
// abelian r-dimensional algebra acting diagonally on R^n. The covector
// list is the whole isomorphism datum for the groups studied here.
class WeightConfig {
public:
  WeightConfig(std::size_t r, std::vector<RatVec> weights);

  std::size_t r() const { return r_; }
  std::size_t n() const { return weights_.size(); }
  const std::vector<RatVec>& weights() const { return weights_; }
  const RatVec& weight(std::size_t i) const { return weights_[i]; }

  // w_i(U)
  Rat eval(std::size_t i, const RatVec& u) const;

  // n x r matrix whose rows are the weights.
  RatMat matrix() const;

  // Right-composition with g in GL_r(Q): each row w becomes w * g.
  WeightConfig precompose(const RatMat& g) const;

  friend bool operator==(const WeightConfig&, const WeightConfig&) = default;

private:
  std::size_t r_;
  std::vector<RatVec> weights_;
};

} // namespace lpcoh
