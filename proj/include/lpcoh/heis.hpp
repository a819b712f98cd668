#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <utility>

#include "lpcoh/poly.hpp"

namespace lpcoh {

// Polynomial differential forms on the Heisenberg group of dimension 2m-1
// in exponential coordinates x_1..x_{m-1}, y_1..y_{m-1}, z.
//
// The left-invariant frame is
//   X_i = d/dx_i - (y_i/2) d/dz,  Y_i = d/dy_i + (x_i/2) d/dz,  Z = d/dz,
// with [X_i, Y_i] = Z, and the dual coframe is dx_i, dy_i and the contact
// form tau = dz - (1/2) sum (x_i dy_i - y_i dx_i), so d(tau) = -sum dx_i^dy_i.
//
// Wedge monomials are bitmasks over the coframe ordered
// dx_1 < dy_1 < ... < dx_{m-1} < dy_{m-1} < tau and stored ascending.
class HeisAlgebra {
public:
  explicit HeisAlgebra(std::size_t m);

  std::size_t m() const { return m_; }
  std::size_t nvars() const { return 2 * m_ - 1; }
  std::size_t ncoframe() const { return 2 * m_ - 1; }

  std::size_t var_x(std::size_t i) const { return check_pair(i), i; }
  std::size_t var_y(std::size_t i) const { return check_pair(i), m_ - 1 + i; }
  std::size_t var_z() const { return 2 * m_ - 2; }

  unsigned bit_dx(std::size_t i) const { return check_pair(i), static_cast<unsigned>(2 * i); }
  unsigned bit_dy(std::size_t i) const { return check_pair(i), static_cast<unsigned>(2 * i + 1); }
  unsigned bit_tau() const { return static_cast<unsigned>(2 * m_ - 2); }
  std::uint32_t horizontal_mask() const { return (1u << bit_tau()) - 1; }

  // Left-invariant derivations acting on polynomials.
  Poly X(std::size_t i, const Poly& f) const;
  Poly Y(std::size_t i, const Poly& f) const;
  Poly Z(const Poly& f) const;

  // Derivation matching coframe slot `bit` (X_i for dx_i, Y_i for dy_i, Z
  // for tau).
  Poly derive(unsigned bit, const Poly& f) const;

  std::vector<std::string> var_names() const;
  std::string coframe_name(unsigned bit) const;

private:
  void check_pair(std::size_t i) const;
  std::size_t m_;
};

// Homogeneous-degree differential form with Poly coefficients, canonical
// (sorted masks, zero coefficients pruned).
class HeisForm {
public:
  HeisForm() : m_(2), degree_(0) {}
  HeisForm(std::size_t m, unsigned degree);

  std::size_t m() const { return m_; }
  unsigned degree() const { return degree_; }
  bool is_zero() const { return comps_.empty(); }
  bool is_horizontal() const;
  const std::map<std::uint32_t, Poly>& comps() const { return comps_; }

  void add_term(std::uint32_t mask, const Poly& coeff);
  Poly coeff(std::uint32_t mask) const; // zero poly when absent

  HeisForm operator-() const;
  HeisForm& operator+=(const HeisForm& o);
  HeisForm& operator-=(const HeisForm& o);
  friend HeisForm operator+(HeisForm a, const HeisForm& b) { return a += b; }
  friend HeisForm operator-(HeisForm a, const HeisForm& b) { return a -= b; }
  friend HeisForm operator*(const Rat& c, HeisForm w);
  friend HeisForm operator*(const Poly& f, const HeisForm& w);

  friend HeisForm wedge(const HeisForm& a, const HeisForm& b);

  friend bool operator==(const HeisForm&, const HeisForm&) = default;

  std::string str() const;

private:
  std::size_t m_;
  unsigned degree_;
  std::map<std::uint32_t, Poly> comps_;
};

// Sign of sorting e_A ^ e_B into ascending order; 0 when the masks meet.
int wedge_sign(std::uint32_t a, std::uint32_t b);

// The 2-form d(tau) = -sum dx_i ^ dy_i with constant coefficients.
HeisForm d_tau(std::size_t m);

// Exterior derivative of a polynomial form in the left-invariant coframe.
HeisForm differentiate(const HeisForm& w);

// w = first + second ^ tau with both parts horizontal.
std::pair<HeisForm, HeisForm> weight_split(const HeisForm& w);
HeisForm recombine(const HeisForm& horizontal, const HeisForm& vertical_factor);

// Rank data of the constant-coefficient Lefschetz map
// L_k : Lambda^k -> Lambda^{k+2}, a |-> a ^ d(tau).
struct LefschetzRank {
  std::size_t dim_domain = 0;
  std::size_t dim_kernel = 0;
  std::size_t dim_image = 0;
};
LefschetzRank lefschetz_rank(std::size_t m, std::size_t k);

// Solve eta ^ d(tau) = w for horizontal w of degree m; the middle-degree
// Lefschetz map is bijective, so this always succeeds.
HeisForm lefschetz_inverse(const HeisForm& w);

// Degree k-1 class tester for k < m: true iff the horizontal part of
// d(theta) is a multiple of d(tau) in the Lefschetz sense, i.e. lies in
// the image of L_{k-2} with polynomial coefficients.
bool nullclass_generic(const HeisForm& theta, std::size_t k);

// Middle-degree obstruction d(theta - (-1)^m L^{-1}((d theta)_1) ^ tau)
// for deg theta = m - 1; the class is trivial iff the result is zero.
HeisForm nullclass_middle(const HeisForm& theta);

// Completes horizontal phi_1 of degree m-1 to phi = phi_1 + phi_2 ^ tau
// whose differential is purely vertical.
HeisForm vertical_construct(const HeisForm& phi1);

// Exact check that under the top-degree pairing on horizontal forms,
// the annihilator of Ker L_{l-2} equals Im L_{k-2}, where k + l = 2m.
struct DualityCheck {
  bool equal = false;
  bool image_in_annihilator = false;
  std::size_t dim_kernel = 0;
  std::size_t dim_image = 0;
  std::size_t dim_annihilator = 0;
};
DualityCheck duality_orthogonality(std::size_t m, std::size_t k);

// For m = 2 and a polynomial u, the pair theta = (X u) dx, Theta = -(Y u) dy
// has d(theta) = d(Theta) up to the vertical correction; the certificate is
// the (always zero) middle obstruction of theta - Theta.
struct Sl3Pair {
  HeisForm theta;
  HeisForm big_theta;
  HeisForm certificate;
};
Sl3Pair sl3_pair_construct(const Poly& u);

// Coefficient of the full top-degree monomial dx_1^dy_1^...^tau.
Poly top_coefficient(const HeisForm& w);

} // namespace lpcoh
