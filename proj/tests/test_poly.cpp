#include <doctest.h>

#include "lpcoh/error.hpp"
#include "lpcoh/poly.hpp"

using namespace lpcoh;

namespace {

const std::vector<std::string> xy = {"x", "y"};

Poly px() { return Poly::variable(2, 0); }
Poly py() { return Poly::variable(2, 1); }

} // namespace

TEST_SUITE("poly") {

TEST_CASE("constants and variables") {
  Poly z(2);
  CHECK(z.is_zero());
  CHECK(z.total_degree() == 0);
  Poly c = Poly::constant(2, Rat(3, 2));
  CHECK_FALSE(c.is_zero());
  CHECK(c.terms().size() == 1);
  CHECK(Poly::constant(2, Rat(0)).is_zero());
  Poly x = px();
  CHECK(x.total_degree() == 1);
  CHECK(x.str(xy) == "x");
}

TEST_CASE("add_term prunes cancelled monomials") {
  Poly p(2);
  p.add_term({1, 0}, Rat(2));
  p.add_term({1, 0}, Rat(-2));
  CHECK(p.is_zero());
  p.add_term({0, 0}, Rat(0));
  CHECK(p.is_zero());
}

TEST_CASE("arithmetic") {
  Poly s = px() + py();
  Poly sq = s * s;
  Poly expect(2);
  expect.add_term({2, 0}, Rat(1));
  expect.add_term({1, 1}, Rat(2));
  expect.add_term({0, 2}, Rat(1));
  CHECK(sq == expect);
  CHECK(sq - expect == Poly(2));
  CHECK(Rat(3) * px() + Rat(-3) * px() == Poly(2));
  CHECK(-(px() - py()) == py() - px());
  CHECK(sq.total_degree() == 2);
}

TEST_CASE("derivative") {
  Poly sq = (px() + py()) * (px() + py());
  Poly dx = sq.derivative(0);
  Poly expect(2);
  expect.add_term({1, 0}, Rat(2));
  expect.add_term({0, 1}, Rat(2));
  CHECK(dx == expect);
  CHECK(Poly::constant(2, Rat(5)).derivative(0).is_zero());
  // d/dx (x^3 y) = 3 x^2 y
  Poly p(2);
  p.add_term({3, 1}, Rat(1));
  Poly q(2);
  q.add_term({2, 1}, Rat(3));
  CHECK(p.derivative(0) == q);
}

TEST_CASE("substitute") {
  // (x + y) with y := x - 1 gives 2x - 1
  Poly s = px() + py();
  Poly val = px() - Poly::constant(2, Rat(1));
  Poly got = s.substitute(1, val);
  Poly expect(2);
  expect.add_term({1, 0}, Rat(2));
  expect.add_term({0, 0}, Rat(-1));
  CHECK(got == expect);
  // substituting a square: (y)^2 with y := x + 1
  Poly ysq(2);
  ysq.add_term({0, 2}, Rat(1));
  Poly xp1 = px() + Poly::constant(2, Rat(1));
  Poly e2(2);
  e2.add_term({2, 0}, Rat(1));
  e2.add_term({1, 0}, Rat(2));
  e2.add_term({0, 0}, Rat(1));
  CHECK(ysq.substitute(1, xp1) == e2);
}

TEST_CASE("str rendering") {
  CHECK(Poly(2).str(xy) == "0");
  Poly p(2);
  p.add_term({2, 1}, Rat(-2));
  p.add_term({0, 0}, Rat(1, 2));
  CHECK(p.str(xy) == "-2*x^2*y + 1/2");
  Poly q(2);
  q.add_term({1, 0}, Rat(1));
  q.add_term({0, 1}, Rat(-1));
  CHECK(q.str(xy) == "x - y");
  Poly r(2);
  r.add_term({1, 1}, Rat(-1));
  CHECK(r.str(xy) == "-x*y");
  CHECK(Poly::constant(2, Rat(-3)).str(xy) == "-3");
}

TEST_CASE("arity mismatch is rejected") {
  Poly a(2);
  Poly b(3);
  CHECK_THROWS_AS(a + b, DomainError);
  CHECK_THROWS_AS(a * b, DomainError);
  Poly p(2);
  CHECK_THROWS_AS(p.add_term({1, 0, 0}, Rat(1)), DomainError);
  CHECK_THROWS_AS(p.derivative(2), DomainError);
  CHECK_THROWS_AS(p.substitute(2, px()), DomainError);
}

} // TEST_SUITE
