#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "lpcoh/rat.hpp"

namespace lpcoh {

// Sparse multivariate polynomial over Rat with a fixed variable count.
// Terms are kept in lexicographic exponent order with no zero coefficients,
// so equality and printing are canonical.
class Poly {
public:
  using Mono = std::vector<unsigned>;

  explicit Poly(std::size_t nvars = 0) : nvars_(nvars) {}
  static Poly constant(std::size_t nvars, const Rat& c);
  static Poly variable(std::size_t nvars, std::size_t i);

  std::size_t nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Mono, Rat>& terms() const { return terms_; }

  void add_term(const Mono& m, const Rat& c);

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const Rat& c, Poly p);

  Poly derivative(std::size_t var) const;

  // Substitute variable var by the given polynomial (used by the symbolic
  // identity checks; not performance critical).
  Poly substitute(std::size_t var, const Poly& value) const;

  unsigned total_degree() const;

  std::string str(const std::vector<std::string>& names) const;

  friend bool operator==(const Poly&, const Poly&) = default;

private:
  std::size_t nvars_;
  std::map<Mono, Rat> terms_;
};

} // namespace lpcoh
