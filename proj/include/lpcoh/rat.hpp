#pragma once

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <string>

#include "lpcoh/error.hpp"

namespace lpcoh {

// Exact rational scalar, always in lowest terms with positive denominator.
// Every exponent, threshold and weight in the library is a Rat; floating
// point only enters through the explicitly numeric cross-checks.
class Rat {
public:
  Rat() : v_(0) {}
  Rat(long n) : v_(n) {}
  Rat(long n, long d) {
    if (d == 0) throw DomainError("rational with zero denominator");
    v_ = mpq_class(n, d);
    v_.canonicalize();
  }
  explicit Rat(const mpq_class& v) : v_(v) { v_.canonicalize(); }

  // Accepts "p" or "p/q" with optional leading '-'; rejects everything else.
  static Rat parse(const std::string& s);

  std::string str() const { return v_.get_str(); }
  double to_double() const { return v_.get_d(); }

  const mpq_class& raw() const { return v_; }
  mpz_class num() const { return v_.get_num(); }
  mpz_class den() const { return v_.get_den(); }

  Rat operator-() const { return Rat(mpq_class(-v_)); }
  Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
  Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
  Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
  Rat& operator/=(const Rat& o) {
    if (o.v_ == 0) throw DomainError("rational division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

  friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
         : c > 0 ? std::strong_ordering::greater
                 : std::strong_ordering::equal;
  }

  int sgn() const { return mpq_sgn(v_.get_mpq_t()); }
  Rat abs() const { return sgn() < 0 ? -*this : *this; }

private:
  mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rat& r);

// Rational extended by a single point +infinity. Thresholds h/w_k live
// here (w_0 = 0 gives +infinity); nothing in the domain needs -infinity.
class XRat {
public:
  XRat() : inf_(false), r_(0) {}
  XRat(Rat r) : inf_(false), r_(std::move(r)) {}
  XRat(long n) : inf_(false), r_(n) {}
  static XRat infinity() { XRat x; x.inf_ = true; return x; }

  bool is_inf() const { return inf_; }
  const Rat& finite() const {
    if (inf_) throw DomainError("finite() on +infinity");
    return r_;
  }

  std::string str() const { return inf_ ? "inf" : r_.str(); }
  static XRat parse(const std::string& s) {
    return s == "inf" ? infinity() : XRat(Rat::parse(s));
  }

  friend bool operator==(const XRat& a, const XRat& b) {
    if (a.inf_ || b.inf_) return a.inf_ && b.inf_;
    return a.r_ == b.r_;
  }
  friend std::strong_ordering operator<=>(const XRat& a, const XRat& b) {
    if (a.inf_ && b.inf_) return std::strong_ordering::equal;
    if (a.inf_) return std::strong_ordering::greater;
    if (b.inf_) return std::strong_ordering::less;
    return a.r_ <=> b.r_;
  }

private:
  bool inf_;
  Rat r_;
};

std::ostream& operator<<(std::ostream& os, const XRat& x);

// Hoelder conjugate q with 1/p + 1/q = 1; requires p > 1.
Rat conjugate(const Rat& p);

// Extended conjugate: 1 and +infinity are conjugate to each other,
// so boundary thresholds pair up even when a partial sum is zero.
XRat conjugate(const XRat& p);

} // namespace lpcoh
