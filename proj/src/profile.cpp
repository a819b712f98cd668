#include "lpcoh/profile.hpp"

#include <algorithm>

#include "lpcoh/error.hpp"

namespace lpcoh {

EigProfile::EigProfile(std::vector<Rat> lambdas) : lambdas_(std::move(lambdas)) {
  if (lambdas_.empty()) throw DomainError("eigenvalue profile must be nonempty");
  std::sort(lambdas_.begin(), lambdas_.end());
  if (lambdas_.front() < Rat(0))
    throw DomainError("eigenvalue profile requires nonnegative entries");
  for (const Rat& l : lambdas_) h_ += l;
  if (!(h_ > Rat(0)))
    throw DomainError("eigenvalue profile requires positive total weight");
}

Rat EigProfile::w(std::size_t k) const {
  if (k > n()) throw DomainError("partial sum index out of range");
  Rat s;
  for (std::size_t i = 0; i < k; ++i) s += lambdas_[i];
  return s;
}

Rat EigProfile::W(std::size_t k) const {
  if (k > n()) throw DomainError("partial sum index out of range");
  Rat s;
  for (std::size_t i = 0; i < k; ++i) s += lambdas_[n() - 1 - i];
  return s;
}

XRat EigProfile::threshold(Side side, std::size_t k) const {
  Rat d = (side == Side::LowerSum) ? w(k) : W(k);
  if (d == Rat(0)) return XRat::infinity();
  return XRat(h_ / d);
}

std::pair<Rat, std::size_t> dual_pair(const Rat& p, std::size_t k, std::size_t D) {
  if (k > D) throw DomainError("degree exceeds ambient dimension");
  return {conjugate(p), D - k};
}

} // namespace lpcoh
