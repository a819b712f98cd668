#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "lpcoh/rat.hpp"

namespace lpcoh {

using RatVec = std::vector<Rat>;

// Dense exact-rational matrix, row major. Sizes here are tiny (weight
// configurations, wedge bases), so plain Gauss-Jordan is enough.
class RatMat {
public:
  RatMat() : rows_(0), cols_(0) {}
  RatMat(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows, RatVec(cols)) {}
  static RatMat identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rat& at(std::size_t i, std::size_t j) { return a_[i][j]; }
  const Rat& at(std::size_t i, std::size_t j) const { return a_[i][j]; }
  RatVec& row(std::size_t i) { return a_[i]; }
  const RatVec& row(std::size_t i) const { return a_[i]; }

  RatMat operator*(const RatMat& o) const;
  RatVec apply(const RatVec& v) const; // A v

  friend bool operator==(const RatMat&, const RatMat&) = default;

private:
  std::size_t rows_, cols_;
  std::vector<RatVec> a_;
};

// Elementary row operation, recorded so the same elimination can be replayed
// on a right-hand side living in another module (e.g. polynomial vectors).
struct RowOp {
  enum class Kind { Swap, Scale, AddMul } kind;
  std::size_t i, j; // Swap(i,j); Scale(i)*=c; AddMul: row(i) += c*row(j)
  Rat c;
};

// In-place reduced row echelon form; returns pivot column per pivot row and
// appends the operations performed to *ops when given.
std::vector<std::size_t> rref(RatMat& m, std::vector<RowOp>* ops = nullptr);

std::size_t rank(RatMat m);

// Basis of { x : A x = 0 }, one vector per free column, deterministic order.
std::vector<RatVec> kernel_basis(const RatMat& a);

// Some solution of A x = b, or nullopt when inconsistent.
std::optional<RatVec> solve(const RatMat& a, const RatVec& b);

std::optional<RatMat> inverse(const RatMat& a);

} // namespace lpcoh
