#include "lpcoh/heis.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

#include "lpcoh/error.hpp"
#include "lpcoh/linalg.hpp"

namespace lpcoh {

HeisAlgebra::HeisAlgebra(std::size_t m) : m_(m) {
  if (m < 2) throw DomainError("Heisenberg model needs m >= 2");
  if (m > 8) throw DomainError("Heisenberg model capped at m <= 8");
}

void HeisAlgebra::check_pair(std::size_t i) const {
  if (i >= m_ - 1) throw DomainError("Heisenberg pair index out of range");
}

Poly HeisAlgebra::X(std::size_t i, const Poly& f) const {
  // d/dx_i - (y_i/2) d/dz
  Poly df = f.derivative(var_x(i));
  Poly dz = f.derivative(var_z());
  return df - Rat(1, 2) * (Poly::variable(nvars(), var_y(i)) * dz);
}

Poly HeisAlgebra::Y(std::size_t i, const Poly& f) const {
  // d/dy_i + (x_i/2) d/dz
  Poly df = f.derivative(var_y(i));
  Poly dz = f.derivative(var_z());
  return df + Rat(1, 2) * (Poly::variable(nvars(), var_x(i)) * dz);
}

Poly HeisAlgebra::Z(const Poly& f) const { return f.derivative(var_z()); }

Poly HeisAlgebra::derive(unsigned bit, const Poly& f) const {
  if (bit == bit_tau()) return Z(f);
  if (bit >= ncoframe()) throw DomainError("coframe slot out of range");
  return (bit % 2 == 0) ? X(bit / 2, f) : Y(bit / 2, f);
}

std::vector<std::string> HeisAlgebra::var_names() const {
  std::vector<std::string> names(nvars());
  for (std::size_t i = 0; i + 1 < m_; ++i) {
    names[var_x(i)] = "x" + std::to_string(i + 1);
    names[var_y(i)] = "y" + std::to_string(i + 1);
  }
  names[var_z()] = "z";
  return names;
}

std::string HeisAlgebra::coframe_name(unsigned bit) const {
  if (bit == bit_tau()) return "tau";
  if (bit >= ncoframe()) throw DomainError("coframe slot out of range");
  return std::string(bit % 2 == 0 ? "dx" : "dy") + std::to_string(bit / 2 + 1);
}

HeisForm::HeisForm(std::size_t m, unsigned degree) : m_(m), degree_(degree) {
  HeisAlgebra alg(m); // validates m
  if (degree > alg.ncoframe()) throw DomainError("form degree out of range");
}

bool HeisForm::is_horizontal() const {
  std::uint32_t tau = 1u << HeisAlgebra(m_).bit_tau();
  for (const auto& [mask, f] : comps_)
    if (mask & tau) return false;
  return true;
}

void HeisForm::add_term(std::uint32_t mask, const Poly& coeff) {
  HeisAlgebra alg(m_);
  if (mask >= (1u << alg.ncoframe())) throw DomainError("wedge mask out of range");
  if (static_cast<unsigned>(std::popcount(mask)) != degree_)
    throw DomainError("wedge mask degree mismatch");
  if (coeff.nvars() != alg.nvars()) throw DomainError("coefficient arity mismatch");
  if (coeff.is_zero()) return;
  auto [it, fresh] = comps_.emplace(mask, coeff);
  if (!fresh) {
    it->second += coeff;
    if (it->second.is_zero()) comps_.erase(it);
  }
}

Poly HeisForm::coeff(std::uint32_t mask) const {
  auto it = comps_.find(mask);
  return it == comps_.end() ? Poly(HeisAlgebra(m_).nvars()) : it->second;
}

HeisForm HeisForm::operator-() const {
  HeisForm w(m_, degree_);
  for (const auto& [mask, f] : comps_) w.comps_.emplace(mask, -f);
  return w;
}

HeisForm& HeisForm::operator+=(const HeisForm& o) {
  if (m_ != o.m_ || degree_ != o.degree_) throw DomainError("form shape mismatch");
  for (const auto& [mask, f] : o.comps_) add_term(mask, f);
  return *this;
}

HeisForm& HeisForm::operator-=(const HeisForm& o) {
  if (m_ != o.m_ || degree_ != o.degree_) throw DomainError("form shape mismatch");
  for (const auto& [mask, f] : o.comps_) add_term(mask, -f);
  return *this;
}

HeisForm operator*(const Rat& c, HeisForm w) {
  if (c == Rat(0)) return HeisForm(w.m_, w.degree_);
  for (auto& [mask, f] : w.comps_) f = c * f;
  return w;
}

HeisForm operator*(const Poly& f, const HeisForm& w) {
  HeisForm out(w.m_, w.degree_);
  for (const auto& [mask, g] : w.comps_) out.add_term(mask, f * g);
  return out;
}

int wedge_sign(std::uint32_t a, std::uint32_t b) {
  if (a & b) return 0;
  int inv = 0;
  for (std::uint32_t rest = b; rest;) {
    unsigned bit = static_cast<unsigned>(std::countr_zero(rest));
    rest &= rest - 1;
    inv += std::popcount(a >> (bit + 1));
  }
  return (inv % 2) ? -1 : 1;
}

HeisForm wedge(const HeisForm& a, const HeisForm& b) {
  if (a.m_ != b.m_) throw DomainError("form shape mismatch");
  // Past the coframe size only the zero form exists: every candidate
  // monomial would repeat a slot and drop out, so clamp the degree and let
  // the loop produce nothing. Keeps the wedge total at boundary degrees.
  const unsigned top = static_cast<unsigned>(2 * a.m_ - 1);
  HeisForm out(a.m_, std::min(a.degree_ + b.degree_, top));
  for (const auto& [ma, fa] : a.comps_)
    for (const auto& [mb, fb] : b.comps_) {
      int s = wedge_sign(ma, mb);
      if (s == 0) continue;
      Poly f = fa * fb;
      out.add_term(ma | mb, s < 0 ? -f : f);
    }
  return out;
}

std::string HeisForm::str() const {
  if (comps_.empty()) return "0";
  HeisAlgebra alg(m_);
  std::vector<std::string> names = alg.var_names();
  std::ostringstream os;
  bool first = true;
  for (const auto& [mask, f] : comps_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << f.str(names) << ")";
    for (std::uint32_t rest = mask; rest;) {
      unsigned bit = static_cast<unsigned>(std::countr_zero(rest));
      rest &= rest - 1;
      os << "*" << alg.coframe_name(bit);
    }
  }
  return os.str();
}

HeisForm d_tau(std::size_t m) {
  HeisAlgebra alg(m);
  HeisForm w(m, 2);
  for (std::size_t i = 0; i + 1 < m; ++i)
    w.add_term((1u << alg.bit_dx(i)) | (1u << alg.bit_dy(i)),
               Poly::constant(alg.nvars(), Rat(-1)));
  return w;
}

HeisForm differentiate(const HeisForm& w) {
  HeisAlgebra alg(w.m());
  // d of a top-degree form is identically zero; clamp the declared degree
  // so the zero result is representable.
  HeisForm out(w.m(),
               std::min(w.degree() + 1, static_cast<unsigned>(alg.ncoframe())));
  const std::uint32_t tau = 1u << alg.bit_tau();
  for (const auto& [mask, f] : w.comps()) {
    // df ^ w_M
    for (unsigned c = 0; c < alg.ncoframe(); ++c) {
      std::uint32_t cb = 1u << c;
      if (mask & cb) continue;
      Poly g = alg.derive(c, f);
      if (g.is_zero()) continue;
      int s = wedge_sign(cb, mask);
      out.add_term(cb | mask, s < 0 ? -g : g);
    }
    // f * d(w_M); only the tau slot has a nonzero differential.
    if (mask & tau) {
      std::uint32_t horiz = mask & ~tau;
      int s0 = (w.degree() % 2) ? 1 : -1; // (-1)^(deg-1), tau sits last
      for (std::size_t i = 0; i + 1 < w.m(); ++i) {
        std::uint32_t pb = (1u << alg.bit_dx(i)) | (1u << alg.bit_dy(i));
        if (horiz & pb) continue;
        int s = -s0 * wedge_sign(horiz, pb); // the extra -1 is d(tau)'s sign
        out.add_term(horiz | pb, s < 0 ? -f : f);
      }
    }
  }
  return out;
}

std::pair<HeisForm, HeisForm> weight_split(const HeisForm& w) {
  HeisAlgebra alg(w.m());
  const std::uint32_t tau = 1u << alg.bit_tau();
  HeisForm first(w.m(), w.degree());
  HeisForm second(w.m(), w.degree() > 0 ? w.degree() - 1 : 0);
  for (const auto& [mask, f] : w.comps()) {
    if (mask & tau)
      second.add_term(mask & ~tau, f); // tau is the top slot: no sign
    else
      first.add_term(mask, f);
  }
  return {std::move(first), std::move(second)};
}

HeisForm recombine(const HeisForm& horizontal, const HeisForm& vertical_factor) {
  if (horizontal.m() != vertical_factor.m())
    throw DomainError("recombine shape mismatch");
  // A zero vertical factor carries no degree information (splitting a
  // 0-form clamps it to degree 0), so only nonzero factors are checked.
  if (!vertical_factor.is_zero() &&
      horizontal.degree() != vertical_factor.degree() + 1)
    throw DomainError("recombine degree mismatch");
  HeisAlgebra alg(horizontal.m());
  const std::uint32_t tau = 1u << alg.bit_tau();
  HeisForm out = horizontal;
  for (const auto& [mask, f] : vertical_factor.comps()) {
    if (mask & tau) throw DomainError("vertical factor must be horizontal");
    out.add_term(mask | tau, f);
  }
  return out;
}

namespace {

std::vector<std::uint32_t> horizontal_basis(std::size_t m, std::size_t k) {
  HeisAlgebra alg(m);
  std::uint32_t full = alg.horizontal_mask();
  std::vector<std::uint32_t> basis;
  for (std::uint32_t mask = 0; mask <= full; ++mask)
    if (static_cast<std::size_t>(std::popcount(mask)) == k && (mask & ~full) == 0)
      basis.push_back(mask);
  return basis;
}

// Matrix of L_k : Lambda^k -> Lambda^{k+2}, both with the ascending-mask
// bases from horizontal_basis.
RatMat lefschetz_matrix(std::size_t m, std::size_t k) {
  HeisAlgebra alg(m);
  std::vector<std::uint32_t> dom = horizontal_basis(m, k);
  std::vector<std::uint32_t> tgt = horizontal_basis(m, k + 2);
  std::map<std::uint32_t, std::size_t> tgt_index;
  for (std::size_t i = 0; i < tgt.size(); ++i) tgt_index[tgt[i]] = i;

  RatMat a(tgt.size(), dom.size());
  for (std::size_t c = 0; c < dom.size(); ++c)
    for (std::size_t i = 0; i + 1 < m; ++i) {
      std::uint32_t pb = (1u << alg.bit_dx(i)) | (1u << alg.bit_dy(i));
      if (dom[c] & pb) continue;
      int s = -wedge_sign(dom[c], pb); // d(tau) carries -1 per pair
      a.at(tgt_index.at(dom[c] | pb), c) += Rat(s);
    }
  return a;
}

void replay(const std::vector<RowOp>& ops, std::vector<Poly>& b) {
  for (const RowOp& op : ops) switch (op.kind) {
    case RowOp::Kind::Swap: std::swap(b[op.i], b[op.j]); break;
    case RowOp::Kind::Scale: b[op.i] = op.c * b[op.i]; break;
    case RowOp::Kind::AddMul: b[op.i] += op.c * b[op.j]; break;
  }
}

} // namespace

LefschetzRank lefschetz_rank(std::size_t m, std::size_t k) {
  HeisAlgebra alg(m);
  if (k > alg.ncoframe() - 1) throw DomainError("Lefschetz degree out of range");
  RatMat a = lefschetz_matrix(m, k);
  LefschetzRank r;
  r.dim_domain = a.cols();
  r.dim_image = rank(a);
  r.dim_kernel = r.dim_domain - r.dim_image;
  return r;
}

HeisForm lefschetz_inverse(const HeisForm& w) {
  std::size_t m = w.m();
  if (!w.is_horizontal()) throw ContractError("Lefschetz inverse needs a horizontal form");
  if (w.degree() != m) throw ContractError("Lefschetz inverse works in degree m");

  std::vector<std::uint32_t> dom = horizontal_basis(m, m - 2);
  std::vector<std::uint32_t> tgt = horizontal_basis(m, m);
  RatMat a = lefschetz_matrix(m, m - 2);
  std::optional<RatMat> inv = inverse(a);
  if (!inv) throw std::logic_error("middle Lefschetz map must be bijective");

  std::size_t nv = HeisAlgebra(m).nvars();
  HeisForm out(m, static_cast<unsigned>(m - 2));
  for (std::size_t j = 0; j < dom.size(); ++j) {
    Poly g(nv);
    for (std::size_t t = 0; t < tgt.size(); ++t) {
      if (inv->at(j, t) == Rat(0)) continue;
      g += inv->at(j, t) * w.coeff(tgt[t]);
    }
    out.add_term(dom[j], g);
  }
  return out;
}

bool nullclass_generic(const HeisForm& theta, std::size_t k) {
  std::size_t m = theta.m();
  if (k < 1 || k >= m) throw DomainError("generic degrees are 1 <= k < m");
  if (theta.degree() + 1 != k) throw DomainError("form degree must be k - 1");

  HeisForm d1 = weight_split(differentiate(theta)).first;
  if (k == 1) return d1.is_zero();

  std::vector<std::uint32_t> tgt = horizontal_basis(m, k);
  std::vector<Poly> rhs;
  rhs.reserve(tgt.size());
  for (std::uint32_t mask : tgt) rhs.push_back(d1.coeff(mask));

  RatMat a = lefschetz_matrix(m, k - 2);
  std::vector<RowOp> ops;
  std::size_t pivots = rref(a, &ops).size();
  replay(ops, rhs);
  for (std::size_t i = pivots; i < rhs.size(); ++i)
    if (!rhs[i].is_zero()) return false;
  return true;
}

HeisForm nullclass_middle(const HeisForm& theta) {
  std::size_t m = theta.m();
  if (theta.degree() + 1 != m) throw DomainError("middle obstruction needs degree m - 1");

  HeisForm d1 = weight_split(differentiate(theta)).first;
  HeisForm phi2 = lefschetz_inverse(d1);
  HeisForm phi2_tau = recombine(HeisForm(m, static_cast<unsigned>(m - 1)), phi2);
  HeisForm corrected = (m % 2 == 0) ? theta - phi2_tau : theta + phi2_tau;
  return differentiate(corrected);
}

HeisForm vertical_construct(const HeisForm& phi1) {
  std::size_t m = phi1.m();
  if (!phi1.is_horizontal()) throw DomainError("vertical completion needs a horizontal form");
  if (phi1.degree() + 1 != m) throw DomainError("vertical completion needs degree m - 1");

  HeisForm d1 = weight_split(differentiate(phi1)).first;
  HeisForm phi2 = lefschetz_inverse(d1);
  if (m % 2 == 0) phi2 = -phi2; // phi_2 = -(-1)^m L^{-1}((d phi_1)_1)
  return recombine(phi1, phi2);
}

DualityCheck duality_orthogonality(std::size_t m, std::size_t k) {
  HeisAlgebra alg(m);
  std::size_t top = 2 * m - 2;
  if (k < 2 || k > top) throw DomainError("pairing degree out of range");
  std::size_t l = 2 * m - k;
  if (l < 2) throw DomainError("complementary degree out of range");

  std::vector<std::uint32_t> bk = horizontal_basis(m, k);
  std::vector<RatVec> kern = kernel_basis(lefschetz_matrix(m, l - 2));
  std::vector<std::uint32_t> bl2 = horizontal_basis(m, l - 2);
  std::uint32_t full = alg.horizontal_mask();

  // b(u, v) = coefficient of the horizontal volume form in u ^ v.
  RatMat pairing(kern.size(), bk.size());
  for (std::size_t row = 0; row < kern.size(); ++row)
    for (std::size_t col = 0; col < bk.size(); ++col) {
      std::uint32_t complement = full & ~bk[col];
      // locate complement in the Lambda^{l-2} basis
      std::size_t pos = std::lower_bound(bl2.begin(), bl2.end(), complement) - bl2.begin();
      if (pos == bl2.size() || bl2[pos] != complement) continue;
      int s = wedge_sign(complement, bk[col]);
      pairing.at(row, col) = Rat(s) * kern[row][pos];
    }

  RatMat lk = lefschetz_matrix(m, k - 2);
  DualityCheck out;
  out.dim_kernel = kern.size();
  out.dim_image = rank(lk);
  out.dim_annihilator = kernel_basis(pairing).size();

  RatMat prod = pairing * lk;
  out.image_in_annihilator = true;
  for (std::size_t i = 0; i < prod.rows(); ++i)
    for (std::size_t j = 0; j < prod.cols(); ++j)
      if (prod.at(i, j) != Rat(0)) out.image_in_annihilator = false;
  out.equal = out.image_in_annihilator && out.dim_annihilator == out.dim_image;
  return out;
}

Sl3Pair sl3_pair_construct(const Poly& u) {
  HeisAlgebra alg(2);
  if (u.nvars() != alg.nvars()) throw DomainError("potential must use variables x1, y1, z");

  Sl3Pair out;
  out.theta = HeisForm(2, 1);
  out.theta.add_term(1u << alg.bit_dx(0), alg.X(0, u));
  out.big_theta = HeisForm(2, 1);
  out.big_theta.add_term(1u << alg.bit_dy(0), -alg.Y(0, u));
  out.certificate = nullclass_middle(out.theta - out.big_theta);
  return out;
}

Poly top_coefficient(const HeisForm& w) {
  HeisAlgebra alg(w.m());
  std::uint32_t full = (1u << alg.ncoframe()) - 1;
  return w.coeff(full);
}

} // namespace lpcoh
