#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "lpcoh/rat.hpp"

namespace lpcoh {

// Ordered real parts 0 <= lambda_1 <= ... <= lambda_n of the eigenvalues of
// minus the acting derivation, with total weight h = sum lambda_i > 0.
// The standing assumption (contracting action, negative trace) makes every
// lambda nonnegative and h positive.
class EigProfile {
public:
  explicit EigProfile(std::vector<Rat> lambdas);

  std::size_t n() const { return lambdas_.size(); }
  const std::vector<Rat>& lambdas() const { return lambdas_; }
  const Rat& h() const { return h_; }

  // Sum of the k smallest / k largest eigenvalue parts; 0 <= k <= n.
  Rat w(std::size_t k) const;
  Rat W(std::size_t k) const;

  enum class Side { LowerSum, UpperSum }; // w_k vs W_k in the denominator

  // h / w_k or h / W_k as an extended rational (+infinity when the sum is 0).
  XRat threshold(Side side, std::size_t k) const;

  friend bool operator==(const EigProfile&, const EigProfile&) = default;

private:
  std::vector<Rat> lambdas_;
  Rat h_;
};

// Poincare partner of (p, k) in ambient dimension D: (conjugate(p), D - k).
std::pair<Rat, std::size_t> dual_pair(const Rat& p, std::size_t k, std::size_t D);

} // namespace lpcoh
