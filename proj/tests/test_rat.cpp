#include <doctest.h>

#include "lpcoh/rat.hpp"

using namespace lpcoh;

TEST_SUITE("rat") {

TEST_CASE("parse and canonical printing") {
  CHECK(Rat::parse("3/4").str() == "3/4");
  CHECK(Rat::parse("-7/2").str() == "-7/2");
  CHECK(Rat::parse("5").str() == "5");
  CHECK(Rat::parse("0").str() == "0");
  CHECK(Rat::parse("-12/8").str() == "-3/2"); // lowest terms
  CHECK(Rat::parse("4/-6").str() == "-2/3");  // positive denominator
}

TEST_CASE("parse rejects malformed literals") {
  CHECK_THROWS_AS(Rat::parse("1/0"), ParseError);
  CHECK_THROWS_AS(Rat::parse(""), ParseError);
  CHECK_THROWS_AS(Rat::parse("x"), ParseError);
  CHECK_THROWS_AS(Rat::parse("1.5"), ParseError);
  CHECK_THROWS_AS(Rat::parse("1/2/3"), ParseError);
  CHECK_THROWS_AS(Rat::parse("1 /2"), ParseError);
}

TEST_CASE("construction and arithmetic") {
  CHECK_THROWS_AS(Rat(1, 0), DomainError);
  CHECK(Rat(2, 4) == Rat(1, 2));
  CHECK(Rat(1, 2) + Rat(1, 3) == Rat(5, 6));
  CHECK(Rat(2, 3) * Rat(9, 4) == Rat(3, 2));
  CHECK(Rat(1) - Rat(7, 4) == Rat(-3, 4));
  CHECK(Rat(5, 6) / Rat(5, 3) == Rat(1, 2));
  CHECK_THROWS_AS(Rat(1) / Rat(0), DomainError);
  CHECK(-Rat(2, 7) == Rat(-2, 7));
  CHECK(Rat(-3, 5).abs() == Rat(3, 5));
  CHECK(Rat(-3, 5).sgn() == -1);
  CHECK(Rat(0).sgn() == 0);
  CHECK(Rat(1, 3) < Rat(1, 2));
  CHECK(Rat(7, 2) > Rat(3));
  CHECK(Rat(1, 2).to_double() == doctest::Approx(0.5));
}

TEST_CASE("Hoelder conjugate") {
  CHECK(conjugate(Rat(2)) == Rat(2));
  CHECK(conjugate(Rat(4, 3)) == Rat(4));
  CHECK(conjugate(Rat(3, 2)) == Rat(3));
  CHECK(conjugate(Rat(5)) == Rat(5, 4));
  CHECK_THROWS_AS(conjugate(Rat(1)), DomainError);
  CHECK_THROWS_AS(conjugate(Rat(1, 2)), DomainError);
  for (const Rat& p : {Rat(2), Rat(4, 3), Rat(17, 5), Rat(101, 100)})
    CHECK(conjugate(conjugate(p)) == p); // involution

  // 1/p + 1/q = 1 exactly.
  Rat p(9, 4);
  Rat q = conjugate(p);
  CHECK(Rat(1) / p + Rat(1) / q == Rat(1));
}

TEST_CASE("extended rationals") {
  XRat inf = XRat::infinity();
  CHECK(inf.is_inf());
  CHECK(inf.str() == "inf");
  CHECK(XRat::parse("inf") == inf);
  CHECK(XRat::parse("3/2") == XRat(Rat(3, 2)));
  CHECK_THROWS_AS(inf.finite(), DomainError);
  CHECK(XRat(Rat(1000)) < inf);
  CHECK(inf == XRat::infinity());
  CHECK(XRat(Rat(3)) == XRat(Rat(3)));

  // Extended conjugation pairs 1 with +infinity.
  CHECK(conjugate(XRat(Rat(1))) == inf);
  CHECK(conjugate(inf) == XRat(Rat(1)));
  CHECK(conjugate(XRat(Rat(4, 3))) == XRat(Rat(4)));
}

} // TEST_SUITE
