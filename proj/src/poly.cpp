#include "lpcoh/poly.hpp"

#include <sstream>

#include "lpcoh/error.hpp"

namespace lpcoh {

Poly Poly::constant(std::size_t nvars, const Rat& c) {
  Poly p(nvars);
  p.add_term(Mono(nvars, 0), c);
  return p;
}

Poly Poly::variable(std::size_t nvars, std::size_t i) {
  if (i >= nvars) throw DomainError("variable index out of range");
  Poly p(nvars);
  Mono m(nvars, 0);
  m[i] = 1;
  p.add_term(m, Rat(1));
  return p;
}

void Poly::add_term(const Mono& m, const Rat& c) {
  if (m.size() != nvars_) throw DomainError("monomial arity mismatch");
  if (c == Rat(0)) return;
  auto [it, fresh] = terms_.emplace(m, c);
  if (!fresh) {
    it->second += c;
    if (it->second == Rat(0)) terms_.erase(it);
  }
}

Poly Poly::operator-() const {
  Poly p(nvars_);
  for (const auto& [m, c] : terms_) p.terms_.emplace(m, -c);
  return p;
}

Poly& Poly::operator+=(const Poly& o) {
  if (nvars_ != o.nvars_) throw DomainError("polynomial arity mismatch");
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (nvars_ != o.nvars_) throw DomainError("polynomial arity mismatch");
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.nvars_ != b.nvars_) throw DomainError("polynomial arity mismatch");
  Poly p(a.nvars_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) {
      Poly::Mono m(a.nvars_);
      for (std::size_t i = 0; i < a.nvars_; ++i) m[i] = ma[i] + mb[i];
      p.add_term(m, ca * cb);
    }
  return p;
}

Poly operator*(const Rat& c, Poly p) {
  if (c == Rat(0)) return Poly(p.nvars_);
  for (auto& [m, v] : p.terms_) v *= c;
  return p;
}

Poly Poly::derivative(std::size_t var) const {
  if (var >= nvars_) throw DomainError("variable index out of range");
  Poly p(nvars_);
  for (const auto& [m, c] : terms_) {
    if (m[var] == 0) continue;
    Mono d = m;
    d[var] -= 1;
    p.add_term(d, Rat(static_cast<long>(m[var])) * c);
  }
  return p;
}

Poly Poly::substitute(std::size_t var, const Poly& value) const {
  if (var >= nvars_ || value.nvars_ != nvars_)
    throw DomainError("substitution arity mismatch");
  Poly out(nvars_);
  for (const auto& [m, c] : terms_) {
    Mono base = m;
    unsigned e = base[var];
    base[var] = 0;
    Poly term(nvars_);
    term.add_term(base, c);
    for (unsigned i = 0; i < e; ++i) term = term * value;
    out += term;
  }
  return out;
}

unsigned Poly::total_degree() const {
  unsigned d = 0;
  for (const auto& [m, c] : terms_) {
    unsigned t = 0;
    for (unsigned e : m) t += e;
    if (t > d) d = t;
  }
  return d;
}

std::string Poly::str(const std::vector<std::string>& names) const {
  if (names.size() != nvars_) throw DomainError("name list arity mismatch");
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    Rat a = c.abs();
    os << (first ? (c.sgn() < 0 ? "-" : "") : (c.sgn() < 0 ? " - " : " + "));
    first = false;
    bool has_var = false;
    for (unsigned e : m)
      if (e) { has_var = true; break; }
    if (!has_var || a != Rat(1)) os << a.str() << (has_var ? "*" : "");
    bool star = false;
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (!m[i]) continue;
      if (star) os << "*";
      os << names[i];
      if (m[i] > 1) os << "^" << m[i];
      star = true;
    }
  }
  return os.str();
}

} // namespace lpcoh
