#include "lpcoh/intervals.hpp"

#include <algorithm>

#include "lpcoh/error.hpp"

namespace lpcoh {

std::string status_name(Status s) {
  switch (s) {
    case Status::Zero: return "zero";
    case Status::Nonzero: return "nonzero";
    case Status::HausdorffOnly: return "hausdorff_only";
    case Status::Unknown: return "unknown";
  }
  throw DomainError("bad status");
}

Status status_parse(const std::string& s) {
  if (s == "zero") return Status::Zero;
  if (s == "nonzero") return Status::Nonzero;
  if (s == "hausdorff_only") return Status::HausdorffOnly;
  if (s == "unknown") return Status::Unknown;
  throw ParseError("bad status: '" + s + "'");
}

void PuncturedIntervalSet::add_piece(const XRat& lo, const XRat& hi, Status status) {
  if (lo >= hi) return;
  if (lo < XRat(Rat(1)))
    throw DomainError("interval endpoint below the exponent domain (1, +inf)");
  pieces_.push_back({lo, hi, status});
}

void PuncturedIntervalSet::add_puncture(const Rat& at) {
  if (at <= Rat(1))
    throw DomainError("puncture outside the exponent domain (1, +inf)");
  punctures_.push_back(at);
}

void PuncturedIntervalSet::normalize() {
  std::sort(punctures_.begin(), punctures_.end());
  punctures_.erase(std::unique(punctures_.begin(), punctures_.end()), punctures_.end());

  std::sort(pieces_.begin(), pieces_.end(),
            [](const Piece& a, const Piece& b) { return a.lo < b.lo; });
  for (std::size_t i = 1; i < pieces_.size(); ++i)
    if (pieces_[i].lo < pieces_[i - 1].hi)
      throw DomainError("overlapping interval pieces");

  std::vector<Piece> merged;
  for (const Piece& p : pieces_) {
    bool punctured_join =
        !p.lo.is_inf() && std::binary_search(punctures_.begin(), punctures_.end(),
                                             p.lo.is_inf() ? Rat(0) : p.lo.finite());
    if (!merged.empty() && merged.back().hi == p.lo &&
        merged.back().status == p.status && !punctured_join) {
      merged.back().hi = p.hi;
    } else {
      merged.push_back(p);
    }
  }
  pieces_ = std::move(merged);
}

std::optional<Status> PuncturedIntervalSet::status_at(const Rat& p) const {
  if (std::binary_search(punctures_.begin(), punctures_.end(), p))
    return Status::Unknown;
  XRat x(p);
  for (const Piece& piece : pieces_)
    if (piece.lo < x && x < piece.hi) return piece.status;
  return std::nullopt;
}

bool PuncturedIntervalSet::covers_domain() const {
  XRat edge(Rat(1));
  for (const Piece& p : pieces_) {
    if (p.lo > edge) return false;
    if (p.lo == edge && edge > XRat(Rat(1))) {
      // Interior boundary between pieces must be a puncture.
      if (!std::binary_search(punctures_.begin(), punctures_.end(), edge.finite()))
        return false;
    }
    if (p.hi > edge) edge = p.hi;
  }
  return edge.is_inf();
}

} // namespace lpcoh
