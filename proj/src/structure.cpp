#include "lpcoh/structure.hpp"

#include <algorithm>
#include <stdexcept>

#include "lpcoh/error.hpp"

namespace lpcoh {

AlgebraElement bracket(const WeightConfig& cfg, const AlgebraElement& a,
                       const AlgebraElement& b) {
  if (a.u.size() != cfg.r() || b.u.size() != cfg.r() || a.x.size() != cfg.n() ||
      b.x.size() != cfg.n())
    throw DomainError("bracket operand shape mismatch");
  AlgebraElement out;
  out.u.assign(cfg.r(), Rat(0));
  out.x.resize(cfg.n());
  for (std::size_t i = 0; i < cfg.n(); ++i)
    out.x[i] = cfg.eval(i, a.u) * b.x[i] - cfg.eval(i, b.u) * a.x[i];
  return out;
}

std::vector<RatVec> center(const WeightConfig& cfg) {
  return kernel_basis(cfg.matrix());
}

bool has_abelian_factor(const WeightConfig& cfg) {
  return rank(cfg.matrix()) < cfg.r();
}

std::optional<std::pair<std::vector<std::size_t>, std::vector<std::size_t>>>
reducible(const WeightConfig& cfg) {
  if (has_abelian_factor(cfg))
    throw ContractError(
        "reducibility test requires weights spanning the full dual space "
        "(no abelian factor)");
  std::size_t n = cfg.n();
  if (n > 24) throw DomainError("reducibility search capped at n <= 24");
  if (n < 2) return std::nullopt;
  std::size_t r = cfg.r();

  auto rank_of = [&](unsigned long mask) {
    RatMat m(static_cast<std::size_t>(__builtin_popcountl(mask)), r);
    std::size_t row = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (1ul << i)) {
        for (std::size_t j = 0; j < r; ++j) m.at(row, j) = cfg.weight(i)[j];
        ++row;
      }
    return rank(std::move(m));
  };

  unsigned long full = (n == 64) ? ~0ul : (1ul << n) - 1;
  // Index 0 always goes to I1, so each unordered bipartition appears once.
  for (unsigned long pick = 0; pick < (1ul << (n - 1)); ++pick) {
    unsigned long i1 = 1ul | (pick << 1);
    unsigned long i2 = full & ~i1;
    if (i2 == 0) continue;
    if (rank_of(i1) + rank_of(i2) == r) {
      std::vector<std::size_t> a, b;
      for (std::size_t i = 0; i < n; ++i)
        ((i1 >> i) & 1 ? a : b).push_back(i + 1);
      return std::make_pair(std::move(a), std::move(b));
    }
  }
  return std::nullopt;
}

namespace {

// One linear inequality a . x <= b.
struct Ineq {
  RatVec a;
  Rat b;
};

void normalize_ineq(Ineq& q) {
  for (const Rat& c : q.a) {
    if (c == Rat(0)) continue;
    Rat s = Rat(1) / c.abs();
    for (Rat& x : q.a) x *= s;
    q.b *= s;
    return;
  }
}

std::vector<Ineq> dedup(std::vector<Ineq> v) {
  for (Ineq& q : v) normalize_ineq(q);
  std::sort(v.begin(), v.end(), [](const Ineq& x, const Ineq& y) {
    if (x.a != y.a) return std::lexicographical_compare(
        x.a.begin(), x.a.end(), y.a.begin(), y.a.end());
    return x.b < y.b;
  });
  v.erase(std::unique(v.begin(), v.end(),
                      [](const Ineq& x, const Ineq& y) { return x.a == y.a && x.b == y.b; }),
          v.end());
  return v;
}

// Fourier-Motzkin elimination of the last variable.
std::vector<Ineq> eliminate_last(const std::vector<Ineq>& sys) {
  std::size_t v = sys.front().a.size() - 1;
  std::vector<Ineq> pos, neg, out;
  for (const Ineq& q : sys) {
    if (q.a[v] > Rat(0)) pos.push_back(q);
    else if (q.a[v] < Rat(0)) neg.push_back(q);
    else {
      Ineq z{RatVec(q.a.begin(), q.a.end() - 1), q.b};
      out.push_back(std::move(z));
    }
  }
  for (const Ineq& p : pos)
    for (const Ineq& m : neg) {
      Rat cp = -m.a[v]; // > 0
      Rat cm = p.a[v];  // > 0
      Ineq z;
      z.a.resize(v);
      for (std::size_t j = 0; j < v; ++j) z.a[j] = cp * p.a[j] + cm * m.a[j];
      z.b = cp * p.b + cm * m.b;
      out.push_back(std::move(z));
    }
  return dedup(std::move(out));
}

} // namespace

std::optional<RatVec> npc(const WeightConfig& cfg) {
  std::size_t r = cfg.r();
  if (r > 4) throw DomainError("curvature feasibility search capped at r <= 4");

  // levels[j]: system over the first j variables.
  std::vector<std::vector<Ineq>> levels(r + 1);
  for (std::size_t i = 0; i < cfg.n(); ++i) {
    RatVec a = cfg.weight(i);
    levels[r].push_back({std::move(a), Rat(-1)});
  }
  for (std::size_t j = r; j > 0; --j) {
    if (levels[j].empty()) { levels[j - 1] = {}; continue; }
    levels[j - 1] = eliminate_last(levels[j]);
  }
  for (const Ineq& q : levels[0])
    if (q.b < Rat(0)) return std::nullopt; // 0 <= b violated

  RatVec x(r);
  for (std::size_t j = 0; j < r; ++j) {
    std::optional<Rat> lo, hi;
    for (const Ineq& q : levels[j + 1]) {
      Rat rest = q.b;
      for (std::size_t i = 0; i < j; ++i) rest -= q.a[i] * x[i];
      const Rat& c = q.a[j];
      if (c > Rat(0)) {
        Rat bound = rest / c;
        if (!hi || bound < *hi) hi = bound;
      } else if (c < Rat(0)) {
        Rat bound = rest / c;
        if (!lo || bound > *lo) lo = bound;
      }
    }
    if (lo && hi) x[j] = (*lo + *hi) / Rat(2);
    else if (lo) x[j] = *lo;
    else if (hi) x[j] = *hi;
  }
  for (std::size_t i = 0; i < cfg.n(); ++i)
    if (!(cfg.eval(i, x) <= Rat(-1)))
      throw std::logic_error("elimination produced a bad witness");
  return x;
}

bool zero_in_weight_hull(const WeightConfig& cfg) {
  std::size_t n = cfg.n(), r = cfg.r();
  std::size_t cap = std::min(n, r + 1);
  std::vector<std::size_t> idx;

  // Caratheodory: if 0 is in the hull it is a convex combination of an
  // affinely independent subset, where barycentric coordinates are unique.
  auto check = [&](const std::vector<std::size_t>& s) {
    RatMat m(r + 1, s.size());
    RatVec b(r + 1);
    for (std::size_t c = 0; c < s.size(); ++c) {
      for (std::size_t i = 0; i < r; ++i) m.at(i, c) = cfg.weight(s[c])[i];
      m.at(r, c) = Rat(1);
    }
    b[r] = Rat(1);
    if (rank(m) != s.size()) return false; // not affinely independent
    auto t = solve(m, b);
    if (!t) return false;
    for (const Rat& c : *t)
      if (c < Rat(0)) return false;
    return true;
  };

  // Plain combinations enumeration, sizes 1..r+1.
  for (std::size_t size = 1; size <= cap; ++size) {
    idx.assign(size, 0);
    for (std::size_t i = 0; i < size; ++i) idx[i] = i;
    while (true) {
      if (check(idx)) return true;
      std::size_t i = size;
      while (i > 0 && idx[i - 1] == n - size + i - 1) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < size; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return false;
}

std::optional<RatVec> hyperbolic_direction(const WeightConfig& cfg) {
  RatVec b(cfg.n(), Rat(-1));
  return solve(cfg.matrix(), b);
}

StructureReport analyze_structure(const WeightConfig& cfg) {
  StructureReport rep;
  rep.center_basis = center(cfg);
  rep.derived_is_full_rn = true;
  for (std::size_t i = 0; i < cfg.n(); ++i) {
    bool nonzero = false;
    for (const Rat& c : cfg.weight(i))
      if (c != Rat(0)) { nonzero = true; break; }
    rep.derived_is_full_rn = rep.derived_is_full_rn && nonzero;
  }
  rep.abelian_factor = has_abelian_factor(cfg);
  if (!rep.abelian_factor) rep.reducible_partition = reducible(cfg);
  rep.npc_witness = npc(cfg);
  rep.hyperbolic_witness = hyperbolic_direction(cfg);
  return rep;
}

} // namespace lpcoh
