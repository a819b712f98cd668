#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "lpcoh/rat.hpp"

namespace lpcoh {

// Norm prefactors in the minimization lemma are modeled with wide floats;
// only exponents must stay exact rationals.
using BigFloat = boost::multiprecision::cpp_bin_float_50;

inline BigFloat to_bigfloat(const Rat& r) {
  return BigFloat(r.num().get_str()) / BigFloat(r.den().get_str());
}

} // namespace lpcoh
