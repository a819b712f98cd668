#include "lpcoh/linalg.hpp"

#include <utility>

#include "lpcoh/error.hpp"

namespace lpcoh {

RatMat RatMat::identity(std::size_t n) {
  RatMat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Rat(1);
  return m;
}

RatMat RatMat::operator*(const RatMat& o) const {
  if (cols_ != o.rows_) throw DomainError("matrix product shape mismatch");
  RatMat r(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      if (a_[i][k] == Rat(0)) continue;
      for (std::size_t j = 0; j < o.cols_; ++j)
        r.at(i, j) += a_[i][k] * o.at(k, j);
    }
  return r;
}

RatVec RatMat::apply(const RatVec& v) const {
  if (v.size() != cols_) throw DomainError("matrix apply shape mismatch");
  RatVec r(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r[i] += a_[i][j] * v[j];
  return r;
}

std::vector<std::size_t> rref(RatMat& m, std::vector<RowOp>* ops) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m.at(p, c) == Rat(0)) ++p;
    if (p == m.rows()) continue;
    if (p != r) {
      std::swap(m.row(p), m.row(r));
      if (ops) ops->push_back({RowOp::Kind::Swap, p, r, Rat(0)});
    }
    if (m.at(r, c) != Rat(1)) {
      Rat inv = Rat(1) / m.at(r, c);
      for (std::size_t j = 0; j < m.cols(); ++j) m.at(r, j) *= inv;
      if (ops) ops->push_back({RowOp::Kind::Scale, r, r, inv});
    }
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m.at(i, c) == Rat(0)) continue;
      Rat f = -m.at(i, c);
      for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) += f * m.at(r, j);
      if (ops) ops->push_back({RowOp::Kind::AddMul, i, r, f});
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::size_t rank(RatMat m) { return rref(m).size(); }

std::vector<RatVec> kernel_basis(const RatMat& a) {
  RatMat m = a;
  std::vector<std::size_t> pivots = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : pivots) is_pivot[c] = true;

  std::vector<RatVec> basis;
  for (std::size_t fc = 0; fc < m.cols(); ++fc) {
    if (is_pivot[fc]) continue;
    RatVec v(m.cols());
    v[fc] = Rat(1);
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m.at(i, fc);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<RatVec> solve(const RatMat& a, const RatVec& b) {
  if (b.size() != a.rows()) throw DomainError("solve shape mismatch");
  RatMat aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, a.cols()) = b[i];
  }
  std::vector<std::size_t> pivots = rref(aug);
  if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;
  RatVec x(a.cols());
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug.at(i, a.cols());
  return x;
}

std::optional<RatMat> inverse(const RatMat& a) {
  if (a.rows() != a.cols()) throw DomainError("inverse of non-square matrix");
  std::size_t n = a.rows();
  RatMat aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, n + i) = Rat(1);
  }
  // [a | I] always has n pivots; a is invertible only when they all land
  // in the left block.
  std::vector<std::size_t> pivots = rref(aug);
  if (pivots.size() != n || (n > 0 && pivots.back() + 1 != n)) return std::nullopt;
  RatMat inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = aug.at(i, n + j);
  return inv;
}

} // namespace lpcoh
