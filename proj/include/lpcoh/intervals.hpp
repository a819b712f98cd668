#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lpcoh/rat.hpp"

namespace lpcoh {

// What is known about a cohomology space on a region of exponents.
// HausdorffOnly: the space is Hausdorff (Banach) there but may or may not
// vanish. Unknown: the sources are silent.
enum class Status { Zero, Nonzero, HausdorffOnly, Unknown };

std::string status_name(Status s);
Status status_parse(const std::string& s);

// Subset of the exponent line (1, +infinity) split into disjoint open
// intervals with a status each, plus isolated punctures where the status
// is unresolved. Punctures may sit inside a piece (the piece then means
// "interval minus that point") or between pieces.
class PuncturedIntervalSet {
public:
  struct Piece {
    XRat lo;
    XRat hi;
    Status status;
    friend bool operator==(const Piece&, const Piece&) = default;
  };

  PuncturedIntervalSet() = default;

  // Empty pieces are dropped; pieces reaching below the domain are an error.
  void add_piece(const XRat& lo, const XRat& hi, Status status);
  void add_puncture(const Rat& at);

  // Sorts, checks disjointness, merges adjacent same-status pieces whose
  // shared endpoint is not punctured, dedupes punctures. Idempotent.
  void normalize();

  // Puncture wins over enclosing piece; open endpoints are not contained.
  std::optional<Status> status_at(const Rat& p) const;

  // True when the pieces plus punctures exhaust (1, +infinity).
  bool covers_domain() const;

  const std::vector<Piece>& pieces() const { return pieces_; }
  const std::vector<Rat>& punctures() const { return punctures_; }

  friend bool operator==(const PuncturedIntervalSet&, const PuncturedIntervalSet&) = default;

private:
  std::vector<Piece> pieces_;
  std::vector<Rat> punctures_;
};

} // namespace lpcoh
