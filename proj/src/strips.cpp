#include "lpcoh/strips.hpp"

#include <algorithm>

#include "lpcoh/error.hpp"
#include "lpcoh/straight.hpp"

namespace lpcoh {

namespace {

bool lt(const XRat& a, const XRat& b) { return a < b; }

} // namespace

StripFlags classify(const EigProfile& profile, std::size_t k, const Rat& p,
                    bool h_abelian) {
  if (k < 1 || k > profile.n()) throw DomainError("degree out of range");
  if (!(p > Rat(1))) throw DomainError("exponent must satisfy p > 1");

  using Side = EigProfile::Side;
  XRat hWk = profile.threshold(Side::UpperSum, k);
  XRat hWk1 = profile.threshold(Side::UpperSum, k - 1);
  XRat hwk = profile.threshold(Side::LowerSum, k);
  XRat hwk1 = profile.threshold(Side::LowerSum, k - 1);
  XRat xp{p};

  StripFlags f;
  if (lt(xp, hWk)) {
    f.vanishes = true;
    f.vanishes_reason = "p < h/W_k";
  } else if (lt(hwk1, xp)) {
    f.vanishes = true;
    f.vanishes_reason = "p > h/w_{k-1}";
  }
  if (lt(hWk, xp) && lt(xp, hWk1)) {
    f.hausdorff_iso_z = true;
    f.hausdorff_reason = "h/W_k < p < h/W_{k-1}";
  }
  if (lt(hwk, xp) && lt(xp, hwk1)) {
    f.boundary_density = true;
    f.density_reason = "h/w_k < p < h/w_{k-1}";
  }
  if (h_abelian && lt(hWk1, xp) && lt(xp, hwk1)) {
    f.torsion_nonzero = true;
    f.torsion_reason = "h/W_{k-1} < p < h/w_{k-1}, abelian nilpotent part";
  }
  f.dual = dual_pair(p, k, profile.n() + 1);
  return f;
}

StripReport strip_report(const EigProfile& profile, std::size_t k, bool h_abelian) {
  if (k < 1 || k > profile.n()) throw DomainError("degree out of range");

  using Side = EigProfile::Side;
  std::vector<Rat> cuts;
  for (XRat t : {profile.threshold(Side::UpperSum, k),
                 profile.threshold(Side::UpperSum, k - 1),
                 profile.threshold(Side::LowerSum, k),
                 profile.threshold(Side::LowerSum, k - 1)})
    if (!t.is_inf() && t.finite() > Rat(1)) cuts.push_back(t.finite());
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  // One sample per cell of (1, inf) \ cuts.
  struct Cell {
    XRat lo, hi;
    StripFlags flags;
  };
  std::vector<Cell> cells;
  XRat lo{Rat(1)};
  for (const Rat& c : cuts) {
    Rat sample = (lo.finite() + c) / Rat(2);
    cells.push_back({lo, XRat(c), classify(profile, k, sample, h_abelian)});
    lo = XRat(c);
  }
  Rat last_sample = lo.is_inf() ? Rat(2) : lo.finite() + Rat(1);
  cells.push_back({lo, XRat::infinity(), classify(profile, k, last_sample, h_abelian)});

  // Maximal runs of equal verdicts; surviving cut points become punctures.
  std::vector<Cell> merged;
  for (Cell& c : cells) {
    if (!merged.empty() && merged.back().flags.same_verdicts(c.flags))
      merged.back().hi = c.hi;
    else
      merged.push_back(std::move(c));
  }

  StripReport rep;
  rep.degree = k;
  for (std::size_t i = 0; i + 1 < merged.size(); ++i)
    rep.regions.add_puncture(merged[i].hi.finite());
  for (Cell& c : merged) {
    Status st = Status::Unknown;
    if (c.flags.vanishes) st = Status::Zero;
    else if (c.flags.hausdorff_iso_z) st = Status::HausdorffOnly;
    rep.regions.add_piece(c.lo, c.hi, st);
    rep.piece_flags.push_back(std::move(c.flags));
  }
  rep.regions.normalize();
  return rep;
}

StripReport real_hyperbolic_table(std::size_t n, std::size_t k) {
  if (n < 2) throw DomainError("real hyperbolic table needs n >= 2");
  if (k < 1 || k > n) throw DomainError("degree out of range");

  Rat lower(static_cast<long>(n), static_cast<long>(k));
  XRat upper = (k == 1) ? XRat::infinity()
                        : XRat(Rat(static_cast<long>(n), static_cast<long>(k - 1)));
  StripReport rep;
  rep.degree = k;
  rep.regions.add_piece(XRat(Rat(1)), XRat(lower), Status::Zero);
  rep.regions.add_piece(XRat(lower), upper, Status::Nonzero);
  rep.regions.add_piece(upper, XRat::infinity(), Status::Zero);
  if (lower > Rat(1)) rep.regions.add_puncture(lower);
  if (!upper.is_inf() && upper.finite() > Rat(1)) rep.regions.add_puncture(upper.finite());
  rep.regions.normalize();
  return rep;
}

StripReport complex_hyperbolic_table(std::size_t m, std::size_t k) {
  if (m < 2) throw DomainError("complex hyperbolic table needs m >= 2");
  if (k < 1 || k > 2 * m - 1) throw DomainError("degree out of range");

  long tm = static_cast<long>(2 * m);
  Rat t1(tm, static_cast<long>(k + 1));
  Rat t2(tm, static_cast<long>(k));
  XRat t3 = (k == 1) ? XRat::infinity() : XRat(Rat(tm, static_cast<long>(k - 1)));

  StripReport rep;
  rep.degree = k;
  rep.regions.add_piece(XRat(Rat(1)), XRat(t1), Status::Zero);
  rep.regions.add_piece(XRat(t1), XRat(t2), k >= m ? Status::Nonzero : Status::Zero);
  rep.regions.add_piece(XRat(t2), t3, k <= m ? Status::Nonzero : Status::Zero);
  rep.regions.add_piece(t3, XRat::infinity(), Status::Zero);
  for (const Rat& t : {t1, t2})
    if (t > Rat(1)) rep.regions.add_puncture(t);
  if (!t3.is_inf() && t3.finite() > Rat(1)) rep.regions.add_puncture(t3.finite());
  rep.regions.normalize();
  return rep;
}

StripReport s_alpha_degree2(const WeightConfig& cfg) {
  Rat pa = p_alpha(cfg);
  StripReport rep;
  rep.degree = 2;
  rep.regions.add_piece(XRat(Rat(1)), XRat(pa), Status::Zero);
  rep.regions.add_piece(XRat(pa), XRat::infinity(), Status::Nonzero);
  rep.regions.add_puncture(Rat(3, 2));
  rep.regions.add_puncture(pa);
  rep.regions.add_puncture(Rat(3));
  rep.regions.normalize();
  return rep;
}

StripReport sl3_degree2() {
  StripReport rep;
  rep.degree = 2;
  rep.regions.add_piece(XRat(Rat(1)), XRat(Rat(2)), Status::Zero);
  rep.regions.add_piece(XRat(Rat(2)), XRat::infinity(), Status::Nonzero);
  rep.regions.add_puncture(Rat(4, 3));
  rep.regions.add_puncture(Rat(2));
  rep.regions.add_puncture(Rat(4));
  rep.regions.normalize();
  return rep;
}

} // namespace lpcoh
