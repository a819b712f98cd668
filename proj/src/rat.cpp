#include "lpcoh/rat.hpp"

#include <cctype>
#include <ostream>

namespace lpcoh {

namespace {

bool valid_integer_token(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

} // namespace

Rat Rat::parse(const std::string& s) {
  std::size_t slash = s.find('/');
  std::string num = (slash == std::string::npos) ? s : s.substr(0, slash);
  std::string den = (slash == std::string::npos) ? "1" : s.substr(slash + 1);
  if (!valid_integer_token(num) || !valid_integer_token(den))
    throw ParseError("bad rational literal: '" + s + "'");
  mpz_class n(num), d(den);
  if (d == 0) throw ParseError("zero denominator in rational literal: '" + s + "'");
  Rat r;
  r.v_ = mpq_class(n, d);
  r.v_.canonicalize();
  return r;
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }
std::ostream& operator<<(std::ostream& os, const XRat& x) { return os << x.str(); }

Rat conjugate(const Rat& p) {
  if (p <= Rat(1)) throw DomainError("conjugate exponent requires p > 1");
  return p / (p - Rat(1));
}

XRat conjugate(const XRat& p) {
  if (p.is_inf()) return XRat(Rat(1));
  if (p.finite() == Rat(1)) return XRat::infinity();
  return XRat(conjugate(p.finite()));
}

} // namespace lpcoh
