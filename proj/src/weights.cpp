#include "lpcoh/weights.hpp"

#include "lpcoh/error.hpp"

namespace lpcoh {

WeightConfig::WeightConfig(std::size_t r, std::vector<RatVec> weights)
    : r_(r), weights_(std::move(weights)) {
  if (r_ == 0) throw DomainError("weight configuration needs r >= 1");
  if (weights_.empty()) throw DomainError("weight configuration needs n >= 1");
  for (const RatVec& w : weights_) {
    if (w.size() != r_) throw DomainError("weight row has wrong length");
    bool zero = true;
    for (const Rat& c : w)
      if (c != Rat(0)) { zero = false; break; }
    if (zero) throw DomainError("zero weight row");
  }
}

Rat WeightConfig::eval(std::size_t i, const RatVec& u) const {
  if (u.size() != r_) throw DomainError("direction has wrong length");
  Rat s;
  for (std::size_t j = 0; j < r_; ++j) s += weights_[i][j] * u[j];
  return s;
}

RatMat WeightConfig::matrix() const {
  RatMat m(n(), r_);
  for (std::size_t i = 0; i < n(); ++i)
    for (std::size_t j = 0; j < r_; ++j) m.at(i, j) = weights_[i][j];
  return m;
}

WeightConfig WeightConfig::precompose(const RatMat& g) const {
  if (g.rows() != r_ || g.cols() != r_) throw DomainError("precompose shape mismatch");
  if (!inverse(g)) throw DomainError("precompose requires invertible g");
  std::vector<RatVec> rows;
  rows.reserve(n());
  for (std::size_t i = 0; i < n(); ++i) {
    RatVec nw(r_);
    for (std::size_t j = 0; j < r_; ++j)
      for (std::size_t k = 0; k < r_; ++k) nw[j] += weights_[i][k] * g.at(k, j);
    rows.push_back(std::move(nw));
  }
  return WeightConfig(r_, std::move(rows));
}

} // namespace lpcoh
