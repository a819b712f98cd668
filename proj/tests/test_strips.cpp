#include <doctest.h>

#include <vector>

#include "lpcoh/error.hpp"
#include "lpcoh/straight.hpp"
#include "lpcoh/strips.hpp"

using namespace lpcoh;

namespace {

using Piece = PuncturedIntervalSet::Piece;

EigProfile prof(std::vector<long> nums) {
  std::vector<Rat> v;
  for (long x : nums) v.push_back(Rat(x));
  return EigProfile(v);
}

Piece piece(const XRat& lo, const XRat& hi, Status s) { return Piece{lo, hi, s}; }
XRat x(long num, long den = 1) { return XRat(Rat(num, den)); }
const XRat inf = XRat::infinity();

} // namespace

TEST_SUITE("strips") {

TEST_CASE("classify probes on profile (0,1,1,2) degree 2") {
  EigProfile pr = prof({0, 1, 1, 2}); // h = 4, thresholds 4/3, 2, 4, inf
  StripFlags a = classify(pr, 2, Rat(5, 4));
  CHECK(a.vanishes);
  CHECK(a.vanishes_reason == "p < h/W_k");
  CHECK_FALSE(a.hausdorff_iso_z);
  CHECK_FALSE(a.boundary_density);
  CHECK_FALSE(a.torsion_nonzero);
  CHECK(a.dual == std::pair<Rat, std::size_t>{Rat(5), 3});

  StripFlags b = classify(pr, 2, Rat(7, 4));
  CHECK_FALSE(b.vanishes);
  CHECK(b.hausdorff_iso_z);
  CHECK(b.hausdorff_reason == "h/W_k < p < h/W_{k-1}");
  CHECK_FALSE(b.boundary_density);

  StripFlags c = classify(pr, 2, Rat(3));
  CHECK_FALSE(c.vanishes);
  CHECK_FALSE(c.hausdorff_iso_z);
  CHECK_FALSE(c.boundary_density);
  CHECK_FALSE(c.torsion_nonzero);

  StripFlags d = classify(pr, 2, Rat(5));
  CHECK_FALSE(d.vanishes);
  CHECK(d.boundary_density);
  CHECK(d.density_reason == "h/w_k < p < h/w_{k-1}");

  // thresholds themselves never fire a strict strip
  StripFlags e = classify(pr, 2, Rat(2));
  CHECK_FALSE(e.vanishes);
  CHECK_FALSE(e.hausdorff_iso_z);
  CHECK_FALSE(e.boundary_density);
  CHECK_FALSE(e.torsion_nonzero);
}

TEST_CASE("torsion strip needs the abelian vouch") {
  EigProfile pr = prof({0, 1, 1, 2});
  CHECK_FALSE(classify(pr, 2, Rat(3), false).torsion_nonzero);
  StripFlags t = classify(pr, 2, Rat(3), true);
  CHECK(t.torsion_nonzero);
  CHECK(t.torsion_reason == "h/W_{k-1} < p < h/w_{k-1}, abelian nilpotent part");
  CHECK_FALSE(classify(pr, 2, Rat(2), true).torsion_nonzero);
}

TEST_CASE("classify argument guards") {
  EigProfile pr = prof({0, 1, 1, 2});
  CHECK_THROWS_AS(classify(pr, 0, Rat(2)), DomainError);
  CHECK_THROWS_AS(classify(pr, 5, Rat(2)), DomainError);
  CHECK_THROWS_AS(classify(pr, 2, Rat(1)), DomainError);
  CHECK_THROWS_AS(classify(pr, 2, Rat(1, 2)), DomainError);
}

TEST_CASE("strip_report on (0,1,1,2) degree 2") {
  StripReport rep = strip_report(prof({0, 1, 1, 2}), 2);
  CHECK(rep.degree == 2);
  std::vector<Piece> expect = {
      piece(x(1), x(4, 3), Status::Zero),
      piece(x(4, 3), x(2), Status::HausdorffOnly),
      piece(x(2), x(4), Status::Unknown),
      piece(x(4), inf, Status::Unknown),
  };
  CHECK(rep.regions.pieces() == expect);
  CHECK(rep.regions.punctures() == std::vector<Rat>{Rat(4, 3), Rat(2), Rat(4)});
  REQUIRE(rep.piece_flags.size() == 4);
  CHECK(rep.piece_flags[0].vanishes);
  CHECK(rep.piece_flags[1].hausdorff_iso_z);
  CHECK_FALSE(rep.piece_flags[2].boundary_density);
  CHECK(rep.piece_flags[3].boundary_density);
  CHECK(rep.regions.covers_domain());
}

TEST_CASE("strip_report on (1,1,1) degree 1") {
  StripReport rep = strip_report(prof({1, 1, 1}), 1);
  std::vector<Piece> expect = {
      piece(x(1), x(3), Status::Zero),
      piece(x(3), inf, Status::HausdorffOnly),
  };
  CHECK(rep.regions.pieces() == expect);
  CHECK(rep.regions.punctures() == std::vector<Rat>{Rat(3)});
  REQUIRE(rep.piece_flags.size() == 2);
  CHECK(rep.piece_flags[1].boundary_density);
  CHECK(rep.regions.covers_domain());
}

TEST_CASE("strip_report on (1,2) degree 2") {
  StripReport rep = strip_report(prof({1, 2}), 2);
  std::vector<Piece> expect = {
      piece(x(1), x(3, 2), Status::HausdorffOnly),
      piece(x(3, 2), x(3), Status::Unknown),
      piece(x(3), inf, Status::Zero),
  };
  CHECK(rep.regions.pieces() == expect);
  CHECK(rep.regions.punctures() == std::vector<Rat>{Rat(3, 2), Rat(3)});
  REQUIRE(rep.piece_flags.size() == 3);
  CHECK(rep.piece_flags[0].boundary_density);
  CHECK(rep.piece_flags[1].boundary_density);
  CHECK_FALSE(rep.piece_flags[2].boundary_density);
  CHECK(rep.regions.covers_domain());
}

TEST_CASE("strip_report statuses agree with pointwise classify") {
  EigProfile pr = prof({0, 1, 1, 2});
  StripReport rep = strip_report(pr, 2);
  for (const Rat& p : {Rat(5, 4), Rat(7, 4), Rat(3), Rat(5)}) {
    StripFlags f = classify(pr, 2, p);
    Status expect = f.vanishes ? Status::Zero
                  : f.hausdorff_iso_z ? Status::HausdorffOnly
                                      : Status::Unknown;
    CHECK(rep.regions.status_at(p) == expect);
  }
  CHECK(rep.regions.status_at(Rat(2)) == Status::Unknown); // puncture
}

TEST_CASE("real hyperbolic table") {
  StripReport r32 = real_hyperbolic_table(3, 2);
  std::vector<Piece> e32 = {
      piece(x(1), x(3, 2), Status::Zero),
      piece(x(3, 2), x(3), Status::Nonzero),
      piece(x(3), inf, Status::Zero),
  };
  CHECK(r32.regions.pieces() == e32);
  CHECK(r32.regions.punctures() == std::vector<Rat>{Rat(3, 2), Rat(3)});
  CHECK(r32.piece_flags.empty());

  StripReport r41 = real_hyperbolic_table(4, 1);
  std::vector<Piece> e41 = {
      piece(x(1), x(4), Status::Zero),
      piece(x(4), inf, Status::Nonzero),
  };
  CHECK(r41.regions.pieces() == e41);
  CHECK(r41.regions.punctures() == std::vector<Rat>{Rat(4)});

  // n = k: the lower threshold n/k = 1 collapses the first piece
  StripReport r22 = real_hyperbolic_table(2, 2);
  std::vector<Piece> e22 = {
      piece(x(1), x(2), Status::Nonzero),
      piece(x(2), inf, Status::Zero),
  };
  CHECK(r22.regions.pieces() == e22);
  CHECK(r22.regions.punctures() == std::vector<Rat>{Rat(2)});

  CHECK_THROWS_AS(real_hyperbolic_table(1, 1), DomainError);
  CHECK_THROWS_AS(real_hyperbolic_table(3, 0), DomainError);
  CHECK_THROWS_AS(real_hyperbolic_table(3, 4), DomainError);
  for (std::size_t n = 2; n <= 8; ++n)
    for (std::size_t k = 1; k <= n; ++k)
      CHECK(real_hyperbolic_table(n, k).regions.covers_domain());
}

TEST_CASE("complex hyperbolic table") {
  StripReport c22 = complex_hyperbolic_table(2, 2);
  std::vector<Piece> e22 = {
      piece(x(1), x(4, 3), Status::Zero),
      piece(x(4, 3), x(2), Status::Nonzero),
      piece(x(2), x(4), Status::Nonzero),
      piece(x(4), inf, Status::Zero),
  };
  CHECK(c22.regions.pieces() == e22);
  CHECK(c22.regions.punctures() == std::vector<Rat>{Rat(4, 3), Rat(2), Rat(4)});

  // below the middle degree the lower band is still zero
  StripReport c32 = complex_hyperbolic_table(3, 2);
  std::vector<Piece> e32 = {
      piece(x(1), x(2), Status::Zero),
      piece(x(2), x(3), Status::Zero),
      piece(x(3), x(6), Status::Nonzero),
      piece(x(6), inf, Status::Zero),
  };
  CHECK(c32.regions.pieces() == e32);
  CHECK(c32.regions.punctures() == std::vector<Rat>{Rat(2), Rat(3), Rat(6)});

  // above the middle degree the upper band is zero instead
  StripReport c23 = complex_hyperbolic_table(2, 3);
  std::vector<Piece> e23 = {
      piece(x(1), x(4, 3), Status::Nonzero),
      piece(x(4, 3), x(2), Status::Zero),
      piece(x(2), inf, Status::Zero),
  };
  CHECK(c23.regions.pieces() == e23);
  CHECK(c23.regions.punctures() == std::vector<Rat>{Rat(4, 3), Rat(2)});

  StripReport c21 = complex_hyperbolic_table(2, 1);
  std::vector<Piece> e21 = {
      piece(x(1), x(2), Status::Zero),
      piece(x(2), x(4), Status::Zero),
      piece(x(4), inf, Status::Nonzero),
  };
  CHECK(c21.regions.pieces() == e21);
  CHECK(c21.regions.punctures() == std::vector<Rat>{Rat(2), Rat(4)});

  CHECK_THROWS_AS(complex_hyperbolic_table(1, 1), DomainError);
  CHECK_THROWS_AS(complex_hyperbolic_table(2, 0), DomainError);
  CHECK_THROWS_AS(complex_hyperbolic_table(2, 4), DomainError);
  for (std::size_t m = 2; m <= 6; ++m)
    for (std::size_t k = 1; k <= 2 * m - 1; ++k)
      CHECK(complex_hyperbolic_table(m, k).regions.covers_domain());
}

TEST_CASE("straight family degree-2 table") {
  StripReport full = s_alpha_degree2(canonical_from_gap(Rat(1)).realize());
  std::vector<Piece> efull = {
      piece(x(1), x(3), Status::Zero),
      piece(x(3), inf, Status::Nonzero),
  };
  CHECK(full.regions.pieces() == efull);
  CHECK(full.regions.punctures() == std::vector<Rat>{Rat(3, 2), Rat(3)});

  StripReport mid = s_alpha_degree2(canonical_from_gap(Rat(1, 2)).realize());
  std::vector<Piece> emid = {
      piece(x(1), x(5, 2), Status::Zero),
      piece(x(5, 2), inf, Status::Nonzero),
  };
  CHECK(mid.regions.pieces() == emid);
  CHECK(mid.regions.punctures() == std::vector<Rat>{Rat(3, 2), Rat(5, 2), Rat(3)});
  CHECK(mid.regions.status_at(Rat(6, 5)) == Status::Zero);
  CHECK(mid.regions.status_at(Rat(3, 2)) == Status::Unknown);
  CHECK(mid.regions.covers_domain());

  CHECK_THROWS_AS(s_alpha_degree2(WeightConfig(2, {{Rat(1), Rat(0)}, {Rat(0), Rat(1)},
                                                   {Rat(1), Rat(1)}})),
                  ContractError);
}

TEST_CASE("rank-one lattice degree-2 table") {
  StripReport rep = sl3_degree2();
  CHECK(rep.degree == 2);
  std::vector<Piece> expect = {
      piece(x(1), x(2), Status::Zero),
      piece(x(2), inf, Status::Nonzero),
  };
  CHECK(rep.regions.pieces() == expect);
  CHECK(rep.regions.punctures() == std::vector<Rat>{Rat(4, 3), Rat(2), Rat(4)});
  CHECK(rep.regions.status_at(Rat(3, 2)) == Status::Zero);
  CHECK(rep.regions.status_at(Rat(4, 3)) == Status::Unknown);
  CHECK(rep.regions.status_at(Rat(3)) == Status::Nonzero);
  CHECK(rep.regions.status_at(Rat(4)) == Status::Unknown);
  CHECK(rep.regions.covers_domain());
}

TEST_CASE("table duality spot check") {
  // dual pair of (p, k) over D = n + 1 lands where the generic report of the
  // reversed profile has the mirrored verdict
  EigProfile pr = prof({0, 1, 1, 2});
  StripFlags f = classify(pr, 2, Rat(5, 4));
  CHECK(f.dual.first == Rat(5));
  CHECK(f.dual.second == 3);
  CHECK(conjugate(f.dual.first) == Rat(5, 4));
}

} // TEST_SUITE
