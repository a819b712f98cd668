#include "lpcoh/verify.hpp"

#include <algorithm>
#include <sstream>

#include "lpcoh/asymptotics.hpp"
#include "lpcoh/error.hpp"
#include "lpcoh/intervals.hpp"
#include "lpcoh/linalg.hpp"
#include "lpcoh/strips.hpp"
#include "lpcoh/structure.hpp"

namespace lpcoh {

bool VerifyReport::passed() const {
  for (const CheckResult& c : checks)
    if (!c.passed()) return false;
  return true;
}

CheckResult run_check(const std::string& name, std::uint64_t suite_seed,
                      std::uint64_t trials, bool use_parallel, const TrialFn& fn) {
  std::vector<std::string> messages(trials);
  std::vector<char> failed(trials, 0);
  const long long total = static_cast<long long>(trials);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 4) if (use_parallel)
#endif
  for (long long i = 0; i < total; ++i) {
    const std::uint64_t t = static_cast<std::uint64_t>(i);
    SplitMix64 rng(trial_seed(suite_seed, name, t));
    std::optional<std::string> res;
    try {
      res = fn(t, rng);
    } catch (const std::exception& e) {
      res = std::string("unexpected exception: ") + e.what();
    }
    if (res) {
      failed[i] = 1;
      messages[i] = std::move(*res);
    }
  }
  (void)use_parallel;
  CheckResult out;
  out.name = name;
  out.trials = trials;
  // Aggregate by trial index, never by completion order.
  for (std::uint64_t i = 0; i < trials; ++i) {
    if (!failed[i]) continue;
    ++out.failures;
    if (out.counterexample.empty())
      out.counterexample = "trial " + std::to_string(i) + ": " + messages[i];
  }
  return out;
}

// ---------------------------------------------------------------- oracles

BigFloat bracket_minimize(const std::function<BigFloat(const BigFloat&)>& f,
                          BigFloat lo, BigFloat hi, int iterations) {
  for (int i = 0; i < iterations; ++i) {
    BigFloat third = (hi - lo) / 3;
    BigFloat m1 = lo + third;
    BigFloat m2 = hi - third;
    if (f(m1) < f(m2))
      hi = m2;
    else
      lo = m1;
  }
  return f((lo + hi) / 2);
}

std::size_t bareiss_rank(const std::vector<RatVec>& rows) {
  if (rows.empty() || rows[0].empty()) return 0;
  const std::size_t nr = rows.size();
  const std::size_t nc = rows[0].size();
  std::vector<std::vector<mpz_class>> a(nr, std::vector<mpz_class>(nc));
  for (std::size_t i = 0; i < nr; ++i) {
    mpz_class common = 1;
    for (const Rat& e : rows[i]) common = lcm(common, e.den());
    for (std::size_t j = 0; j < nc; ++j)
      a[i][j] = rows[i][j].num() * (common / rows[i][j].den());
  }
  mpz_class prev = 1;
  std::size_t rk = 0;
  for (std::size_t col = 0; col < nc && rk < nr; ++col) {
    std::size_t piv = rk;
    while (piv < nr && a[piv][col] == 0) ++piv;
    if (piv == nr) continue;
    std::swap(a[piv], a[rk]);
    for (std::size_t i = rk + 1; i < nr; ++i) {
      for (std::size_t j = col + 1; j < nc; ++j) {
        mpz_class t = a[rk][col] * a[i][j] - a[i][col] * a[rk][j];
        // Exact by the Bareiss identity.
        a[i][j] = t / prev;
      }
      a[i][col] = 0;
    }
    prev = a[rk][col];
    ++rk;
  }
  return rk;
}

// ------------------------------------------------------------- generators

Rat random_rat(SplitMix64& rng, long max_num, long max_den) {
  return Rat(rng.range(-max_num, max_num), rng.range(1, max_den));
}

Rat random_nonneg_rat(SplitMix64& rng, long max_num, long max_den) {
  return Rat(rng.range(0, max_num), rng.range(1, max_den));
}

Rat random_pos_rat(SplitMix64& rng, long max_num, long max_den) {
  return Rat(rng.range(1, max_num), rng.range(1, max_den));
}

EigProfile random_profile(SplitMix64& rng, std::size_t n_max) {
  std::size_t n = static_cast<std::size_t>(rng.range(1, static_cast<long long>(n_max)));
  std::vector<Rat> lambdas;
  bool all_zero = true;
  for (std::size_t i = 0; i < n; ++i) {
    lambdas.push_back(random_nonneg_rat(rng, 6, 4));
    if (lambdas.back().sgn() != 0) all_zero = false;
  }
  if (all_zero) lambdas.back() = Rat(1);
  return EigProfile(std::move(lambdas));
}

RatMat random_invertible(SplitMix64& rng, std::size_t r) {
  // P * L * U with unit lower, nonzero-diagonal upper and a permutation:
  // invertible by construction, no rejection loop.
  RatMat l = RatMat::identity(r);
  RatMat u = RatMat::identity(r);
  for (std::size_t i = 0; i < r; ++i) {
    Rat d = random_pos_rat(rng, 3, 2);
    u.at(i, i) = rng.coin() ? d : -d;
    for (std::size_t j = i + 1; j < r; ++j) {
      u.at(i, j) = random_rat(rng, 2, 2);
      l.at(j, i) = random_rat(rng, 2, 2);
    }
  }
  RatMat p = RatMat::identity(r);
  for (std::size_t i = r; i > 1; --i) {
    std::size_t j = static_cast<std::size_t>(rng.range(0, static_cast<long long>(i) - 1));
    std::swap(p.row(i - 1), p.row(j));
  }
  return p * l * u;
}

CanonicalMu random_canonical_mu(SplitMix64& rng) {
  long d = rng.range(1, 6);
  long a = rng.range(0, d);
  return canonical_from_gap(Rat(a, d));
}

WeightConfig random_straight(SplitMix64& rng) {
  WeightConfig cfg = random_canonical_mu(rng).realize().precompose(random_invertible(rng, 2));
  std::vector<RatVec> rows = cfg.weights();
  for (std::size_t i = rows.size(); i > 1; --i) {
    std::size_t j = static_cast<std::size_t>(rng.range(0, static_cast<long long>(i) - 1));
    std::swap(rows[i - 1], rows[j]);
  }
  return WeightConfig(2, std::move(rows));
}

WeightConfig random_weight_config(SplitMix64& rng, std::size_t r, std::size_t n) {
  std::vector<RatVec> rows;
  for (std::size_t i = 0; i < n; ++i) {
    RatVec row;
    bool all_zero = true;
    for (std::size_t j = 0; j < r; ++j) {
      row.push_back(random_rat(rng, 3, 2));
      if (row.back().sgn() != 0) all_zero = false;
    }
    if (all_zero) {
      std::size_t j = static_cast<std::size_t>(rng.range(0, static_cast<long long>(r) - 1));
      row[j] = rng.coin() ? Rat(1) : Rat(-1);
    }
    rows.push_back(std::move(row));
  }
  return WeightConfig(r, std::move(rows));
}

Poly random_poly(SplitMix64& rng, std::size_t nvars, unsigned max_deg,
                 std::size_t max_terms) {
  Poly p(nvars);
  std::size_t nterms = static_cast<std::size_t>(rng.range(1, static_cast<long long>(max_terms)));
  for (std::size_t t = 0; t < nterms; ++t) {
    Poly::Mono mono(nvars, 0);
    for (unsigned d = 0; d < max_deg; ++d) {
      if (rng.coin())
        ++mono[static_cast<std::size_t>(rng.range(0, static_cast<long long>(nvars) - 1))];
    }
    Rat c = random_rat(rng, 3, 2);
    if (c.sgn() == 0) c = Rat(1);
    p.add_term(mono, c);
  }
  if (p.is_zero()) p.add_term(Poly::Mono(nvars, 0), Rat(1));
  return p;
}

HeisForm random_form(SplitMix64& rng, std::size_t m, unsigned degree,
                     unsigned max_poly_deg) {
  HeisAlgebra alg(m);
  std::vector<std::uint32_t> masks;
  for (std::uint32_t mask = 0; mask < (1u << alg.ncoframe()); ++mask) {
    if (static_cast<unsigned>(__builtin_popcount(mask)) == degree) masks.push_back(mask);
  }
  HeisForm w(m, degree);
  std::size_t picks =
      static_cast<std::size_t>(rng.range(1, std::min<long long>(3, static_cast<long long>(masks.size()))));
  for (std::size_t i = 0; i < picks; ++i) {
    std::uint32_t mask = masks[static_cast<std::size_t>(
        rng.range(0, static_cast<long long>(masks.size()) - 1))];
    w.add_term(mask, random_poly(rng, alg.nvars(), max_poly_deg, 2));
  }
  return w;
}

// ------------------------------------------------------------ suite glue

namespace {

struct CheckSpec {
  std::string name;
  std::uint64_t default_trials;
  bool scalable; // deterministic checks ignore --trials
  TrialFn fn;
};

VerifyReport run_suite(const std::string& suite, const VerifyOptions& opt,
                       const std::vector<CheckSpec>& specs) {
  for (const std::string& want : opt.checks) {
    bool known = std::any_of(specs.begin(), specs.end(),
                             [&](const CheckSpec& s) { return s.name == want; });
    if (!known)
      throw DomainError("unknown check \"" + want + "\" in suite " + suite);
  }
  VerifyReport rep;
  rep.suite = suite;
  rep.seed = opt.seed;
  for (const CheckSpec& spec : specs) {
    if (!opt.checks.empty() &&
        std::find(opt.checks.begin(), opt.checks.end(), spec.name) == opt.checks.end())
      continue;
    std::uint64_t trials =
        (spec.scalable && opt.trials != 0) ? opt.trials : spec.default_trials;
    rep.checks.push_back(run_check(spec.name, opt.seed, trials, opt.parallel, spec.fn));
  }
  return rep;
}

std::string rows_str(const WeightConfig& cfg) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < cfg.n(); ++i) {
    if (i) os << ", ";
    os << "(";
    for (std::size_t j = 0; j < cfg.r(); ++j) {
      if (j) os << ", ";
      os << cfg.weight(i)[j].str();
    }
    os << ")";
  }
  os << "]";
  return os.str();
}

std::string mu_str(const CanonicalMu& c) {
  return "mu=(" + c.mu[0].str() + ", " + c.mu[1].str() + ", " + c.mu[2].str() + ")";
}

std::string big_str(const BigFloat& v) {
  std::ostringstream os;
  os.precision(20);
  os << v;
  return os.str();
}

// Rational in the open interval (3/2, 3).
Rat random_p_in_strip(SplitMix64& rng) {
  long den = rng.range(2, 40);
  long num = rng.range(1, den - 1);
  return Rat(3, 2) + Rat(3, 2) * Rat(num, den);
}

} // namespace

// ------------------------------------------------------------- heis suite

VerifyReport verify_heis(const VerifyOptions& opt) {
  const std::size_t m_small = opt.m_max ? std::min<std::size_t>(opt.m_max, 3) : 3;
  const std::size_t m_rank = opt.m_max ? opt.m_max : 5;
  const std::size_t m_dual = opt.m_max ? std::min<std::size_t>(opt.m_max, 4) : 4;

  std::vector<CheckSpec> specs;

  specs.push_back({"d2_zero", 500, true, [m_small](std::uint64_t trial, SplitMix64& rng) -> std::optional<std::string> {
    std::size_t m = 2 + (m_small > 2 ? trial % (m_small - 1) : 0);
    unsigned degree = static_cast<unsigned>(rng.range(0, static_cast<long long>(2 * m - 2)));
    HeisForm w = random_form(rng, m, degree, 3);
    HeisForm dd = differentiate(differentiate(w));
    if (!dd.is_zero())
      return "d(d(w)) != 0 for m=" + std::to_string(m) + ", w = " + w.str();
    return std::nullopt;
  }});

  specs.push_back({"obstruction_formula", 200, true, [](std::uint64_t, SplitMix64& rng) -> std::optional<std::string> {
    HeisAlgebra alg(2);
    Poly f = random_poly(rng, 3, 3, 3);
    HeisForm theta(2, 1);
    theta.add_term(1u << alg.bit_dx(0), f);
    HeisForm expected(2, 2);
    expected.add_term((1u << alg.bit_dx(0)) | (1u << alg.bit_tau()),
                      -(alg.Z(f) + alg.X(0, alg.Y(0, f))));
    expected.add_term((1u << alg.bit_dy(0)) | (1u << alg.bit_tau()),
                      -alg.Y(0, alg.Y(0, f)));
    HeisForm got = nullclass_middle(theta);
    if (!(got == expected))
      return "obstruction mismatch for f = " + f.str(alg.var_names()) + ": got " +
             got.str() + ", expected " + expected.str();
    return std::nullopt;
  }});

  specs.push_back({"pair_certificate", 200, true, [](std::uint64_t, SplitMix64& rng) -> std::optional<std::string> {
    Poly u = random_poly(rng, 3, 3, 3);
    Sl3Pair pair = sl3_pair_construct(u);
    if (!pair.certificate.is_zero())
      return "nonzero certificate for u = " + u.str(HeisAlgebra(2).var_names()) +
             ": " + pair.certificate.str();
    return std::nullopt;
  }});

  specs.push_back({"vertical_construct", 200, true, [m_small](std::uint64_t trial, SplitMix64& rng) -> std::optional<std::string> {
    std::size_t m = 2 + (m_small > 2 ? trial % (m_small - 1) : 0);
    HeisForm phi1 = random_form(rng, m, static_cast<unsigned>(m - 1), 2);
    auto [h, v] = weight_split(phi1);
    phi1 = h; // keep only the horizontal part of the random form
    (void)v;
    if (phi1.is_zero()) return std::nullopt;
    HeisForm phi = vertical_construct(phi1);
    if (!(weight_split(phi).first == phi1))
      return "horizontal part of phi was changed, phi1 = " + phi1.str();
    HeisForm dphi = differentiate(phi);
    if (!weight_split(dphi).first.is_zero())
      return "d(phi) has a horizontal part for phi1 = " + phi1.str() + ": " + dphi.str();
    return std::nullopt;
  }});

  specs.push_back({"nullclass_image", 200, true, [m_dual](std::uint64_t trial, SplitMix64& rng) -> std::optional<std::string> {
    if (m_dual < 3) return std::nullopt; // tester needs 2 <= k < m
    std::size_t m = 3 + (m_dual > 3 ? trial % (m_dual - 2) : 0);
    std::size_t k = static_cast<std::size_t>(rng.range(2, static_cast<long long>(m) - 1));
    HeisForm psi = weight_split(random_form(rng, m, static_cast<unsigned>(k - 2), 2)).first;
    HeisForm tau(m, 1);
    tau.add_term(1u << HeisAlgebra(m).bit_tau(), Poly::constant(2 * m - 1, Rat(1)));
    HeisForm theta = wedge(psi, tau);
    if (!nullclass_generic(theta, k))
      return "psi ^ tau not recognized as a null class, m=" + std::to_string(m) +
             " k=" + std::to_string(k) + ", psi = " + psi.str();
    return std::nullopt;
  }});

  specs.push_back({"lefschetz_rank_theorem", 1, false, [m_rank](std::uint64_t, SplitMix64&) -> std::optional<std::string> {
    for (std::size_t m = 2; m <= m_rank; ++m) {
      for (std::size_t k = 0; k + 2 <= 2 * m - 2; ++k) {
        LefschetzRank r = lefschetz_rank(m, k);
        bool injective = r.dim_kernel == 0;
        bool surjective = r.dim_image == lefschetz_rank(m, k + 2).dim_domain;
        if (injective != (k + 2 <= m))
          return "injectivity dichotomy fails at m=" + std::to_string(m) +
                 " k=" + std::to_string(k);
        if (surjective != (k + 2 >= m))
          return "surjectivity dichotomy fails at m=" + std::to_string(m) +
                 " k=" + std::to_string(k);
      }
    }
    return std::nullopt;
  }});

  specs.push_back({"lefschetz_inverse", 100, true, [m_small](std::uint64_t trial, SplitMix64& rng) -> std::optional<std::string> {
    std::size_t m = 2 + (m_small > 2 ? trial % (m_small - 1) : 0);
    HeisForm w = weight_split(random_form(rng, m, static_cast<unsigned>(m), 2)).first;
    if (w.is_zero()) return std::nullopt;
    HeisForm eta = lefschetz_inverse(w);
    if (!(wedge(eta, d_tau(m)) == w))
      return "eta ^ d(tau) != w for w = " + w.str();
    if (!eta.is_horizontal()) return "inverse is not horizontal for w = " + w.str();
    return std::nullopt;
  }});

  specs.push_back({"duality", 1, false, [m_dual](std::uint64_t, SplitMix64&) -> std::optional<std::string> {
    for (std::size_t m = 2; m <= m_dual; ++m) {
      for (std::size_t k = 2; k <= 2 * m - 2; ++k) {
        DualityCheck d = duality_orthogonality(m, k);
        if (!d.equal || !d.image_in_annihilator)
          return "annihilator identity fails at m=" + std::to_string(m) +
                 " k=" + std::to_string(k) + " (kernel " + std::to_string(d.dim_kernel) +
                 ", image " + std::to_string(d.dim_image) + ", annihilator " +
                 std::to_string(d.dim_annihilator) + ")";
      }
    }
    return std::nullopt;
  }});

  specs.push_back({"split_recombine", 200, true, [m_small](std::uint64_t trial, SplitMix64& rng) -> std::optional<std::string> {
    std::size_t m = 2 + (m_small > 2 ? trial % (m_small - 1) : 0);
    unsigned degree = static_cast<unsigned>(rng.range(0, static_cast<long long>(2 * m - 1)));
    HeisForm w = random_form(rng, m, degree, 3);
    auto [h, v] = weight_split(w);
    if (!h.is_horizontal() || !v.is_horizontal()) return "split parts not horizontal";
    if (!(recombine(h, v) == w)) return "recombine(split(w)) != w for w = " + w.str();
    return std::nullopt;
  }});

  specs.push_back({"pairing_identity", 200, true, [m_small](std::uint64_t trial, SplitMix64& rng) -> std::optional<std::string> {
    std::size_t m = 2 + (m_small > 2 ? trial % (m_small - 1) : 0);
    unsigned deg_t = static_cast<unsigned>(rng.range(0, static_cast<long long>(2 * m - 1)));
    unsigned deg_u = static_cast<unsigned>(2 * m - 1) - deg_t;
    HeisForm t = random_form(rng, m, deg_t, 2);
    HeisForm u = random_form(rng, m, deg_u, 2);
    HeisForm tau(m, 1);
    tau.add_term(1u << HeisAlgebra(m).bit_tau(), Poly::constant(2 * m - 1, Rat(1)));
    auto [t1, t2] = weight_split(t);
    auto [u1, u2] = weight_split(u);
    Poly lhs = top_coefficient(wedge(t, u));
    Poly rhs = top_coefficient(wedge(t1, wedge(u2, tau))) +
               top_coefficient(wedge(wedge(t2, tau), u1));
    if (!(lhs == rhs))
      return "pairing split identity fails for t = " + t.str() + ", u = " + u.str();
    return std::nullopt;
  }});

  specs.push_back({"dimension_bookkeeping", 1, false, [m_dual](std::uint64_t, SplitMix64&) -> std::optional<std::string> {
    for (std::size_t m = 2; m <= m_dual; ++m) {
      std::size_t total = 0;
      for (std::size_t k = 0; k <= 2 * m - 2; ++k) {
        LefschetzRank r = lefschetz_rank(m, k);
        std::size_t binom = 1;
        for (std::size_t i = 0; i < k; ++i)
          binom = binom * (2 * m - 2 - i) / (i + 1);
        if (r.dim_domain != binom)
          return "dim mismatch at m=" + std::to_string(m) + " k=" + std::to_string(k);
        if (r.dim_kernel + r.dim_image != r.dim_domain)
          return "rank-nullity fails at m=" + std::to_string(m) + " k=" + std::to_string(k);
        total += r.dim_domain;
      }
      if (total != (static_cast<std::size_t>(1) << (2 * m - 2)))
        return "total horizontal dimension wrong at m=" + std::to_string(m);
    }
    return std::nullopt;
  }});

  return run_suite("heis", opt, specs);
}

// ----------------------------------------------------------- budget suite

VerifyReport verify_budget(const VerifyOptions& opt) {
  std::vector<CheckSpec> specs;

  specs.push_back({"p_alpha_range", 200, true, [](std::uint64_t, SplitMix64& rng) -> std::optional<std::string> {
    WeightConfig cfg = random_straight(rng);
    Rat p = p_alpha(cfg);
    if (p < Rat(2) || p > Rat(3))
      return "p_alpha = " + p.str() + " outside [2, 3] for " + rows_str(cfg);
    return std::nullopt;
  }});

  specs.push_back({"invariance", 200, true, [](std::uint64_t, SplitMix64& rng) -> std::optional<std::string> {
    CanonicalMu cm = random_canonical_mu(rng);
    WeightConfig base = cm.realize();
    WeightConfig transformed = base.precompose(random_invertible(rng, 2));
    std::vector<RatVec> rows = transformed.weights();
    for (std::size_t i = rows.size(); i > 1; --i) {
      std::size_t j = static_cast<std::size_t>(rng.range(0, static_cast<long long>(i) - 1));
      std::swap(rows[i - 1], rows[j]);
    }
    transformed = WeightConfig(2, std::move(rows));
    if (p_alpha(base) != cm.p_alpha)
      return "realize changed p_alpha for " + mu_str(cm);
    if (p_alpha(transformed) != cm.p_alpha)
      return "p_alpha not invariant: " + mu_str(cm) + " vs " + rows_str(transformed);
    if (!quasi_isometric(base, transformed))
      return "transformed configuration left its own class: " + rows_str(transformed);
    return std::nullopt;
  }});

  specs.push_back({"idempotent", 200, true, [](std::uint64_t, SplitMix64& rng) -> std::optional<std::string> {
    WeightConfig cfg = random_straight(rng);
    CanonicalMu c1 = canonicalize(cfg);
    CanonicalMu c2 = canonicalize(c1.realize());
    if (!(c1 == c2)) return "canonicalize not idempotent for " + rows_str(cfg);
    return std::nullopt;
  }});

  specs.push_back({"plus_threshold_is_p_alpha", 200, true, [](std::uint64_t, SplitMix64& rng) -> std::optional<std::string> {
    WeightConfig cfg = random_straight(rng);
    CanonicalMu cm = canonicalize(cfg);
    BudgetResult br = budget_nonvanishing(cm);
    if (br.plus.threshold != cm.p_alpha)
      return "plus threshold " + br.plus.threshold.str() + " != p_alpha " +
             cm.p_alpha.str() + " for " + mu_str(cm);
    return std::nullopt;
  }});

  specs.push_back({"minus_implied", 200, true, [](std::uint64_t, SplitMix64& rng) -> std::optional<std::string> {
    CanonicalMu cm = random_canonical_mu(rng);
    BudgetResult br = budget_nonvanishing(cm);
    if (br.minus.threshold > Rat(3, 2))
      return "minus threshold " + br.minus.threshold.str() + " above 3/2 for " + mu_str(cm);
    if (br.plus.threshold < Rat(2))
      return "plus threshold " + br.plus.threshold.str() + " below 2 for " + mu_str(cm);
    return std::nullopt;
  }});

  specs.push_back({"feasible_matches_table", 200, true, [](std::uint64_t, SplitMix64& rng) -> std::optional<std::string> {
    CanonicalMu cm = random_canonical_mu(rng);
    BudgetResult br = budget_nonvanishing(cm);
    StripReport table = s_alpha_degree2(cm.realize());
    Rat p = random_p_in_strip(rng);
    if (p == cm.p_alpha) return std::nullopt; // puncture, nothing to compare
    auto table_status = table.regions.status_at(p);
    auto feasible = br.feasible_p.status_at(p);
    if (p > cm.p_alpha) {
      if (!feasible || *feasible != Status::Nonzero)
        return "budget window misses p = " + p.str() + " for " + mu_str(cm);
      if (!table_status || *table_status != Status::Nonzero)
        return "table not nonzero at p = " + p.str() + " for " + mu_str(cm);
    } else {
      if (feasible)
        return "budget window wrongly contains p = " + p.str() + " for " + mu_str(cm);
      if (!table_status || *table_status != Status::Zero)
        return "table not zero at p = " + p.str() + " for " + mu_str(cm);
    }
    return std::nullopt;
  }});

  specs.push_back({"T1_always", 200, true, [](std::uint64_t, SplitMix64& rng) -> std::optional<std::string> {
    CanonicalMu cm = random_canonical_mu(rng);
    Rat p = random_p_in_strip(rng);
    if (!budget_vanishing(cm, VanishingTest::T1, p))
      return "first-component blow-up not certified at p = " + p.str() + " for " + mu_str(cm);
    return std::nullopt;
  }});

  specs.push_back({"T3_iff", 200, true, [](std::uint64_t, SplitMix64& rng) -> std::optional<std::string> {
    CanonicalMu cm = random_canonical_mu(rng);
    Rat p = random_p_in_strip(rng);
    bool certified = budget_vanishing(cm, VanishingTest::T3, p);
    if (certified != (p < cm.p_alpha))
      return "third-component certificate at p = " + p.str() + " disagrees with p_alpha " +
             cm.p_alpha.str() + " for " + mu_str(cm);
    return std::nullopt;
  }});

  specs.push_back({"qi_iff_equal_p_alpha", 200, true, [](std::uint64_t, SplitMix64& rng) -> std::optional<std::string> {
    CanonicalMu a = random_canonical_mu(rng);
    CanonicalMu b = rng.coin() ? a : random_canonical_mu(rng);
    WeightConfig ca = a.realize().precompose(random_invertible(rng, 2));
    WeightConfig cb = b.realize().precompose(random_invertible(rng, 2));
    bool qi = quasi_isometric(ca, cb);
    bool same_exp = p_alpha(ca) == p_alpha(cb);
    bool iso = same_isomorphism_class(ca, cb);
    if (qi != same_exp || qi != iso || same_exp != (a.p_alpha == b.p_alpha))
      return "classification disagreement for " + mu_str(a) + " vs " + mu_str(b);
    return std::nullopt;
  }});

  specs.push_back({"symbolic_identities", 1, false, [](std::uint64_t, SplitMix64&) -> std::optional<std::string> {
    // Variables (p, mu1, mu2), with mu3 eliminated by mu1+mu2+mu3 = 0.
    Poly p = Poly::variable(3, 0);
    Poly m1 = Poly::variable(3, 1);
    Poly m2 = Poly::variable(3, 2);
    Poly m3 = -m1 - m2;
    auto c = [](long v) { return Poly::constant(3, Rat(v)); };
    Poly lhs1 = (c(2) * p - c(3)) * m2 - (c(3) - p) * m3;
    Poly rhs1 = p * (m2 - m1) + c(3) * m1;
    if (!(lhs1 == rhs1)) return std::string("plus-window simplification fails");
    Poly lhs2 = (c(3) - p) * m1 - (c(2) * p - c(3)) * m2;
    Poly rhs2 = -(p * (m2 - m3)) - c(3) * m3;
    if (!(lhs2 == rhs2)) return std::string("minus-window simplification fails");
    return std::nullopt;
  }});

  return run_suite("budget", opt, specs);
}

// --------------------------------------------------------- numlemma suite

VerifyReport verify_numlemma(const VerifyOptions& opt) {
  std::vector<CheckSpec> specs;

  specs.push_back({"closed_form_vs_bracketing", 1000, true, [](std::uint64_t, SplitMix64& rng) -> std::optional<std::string> {
    Rat a = random_pos_rat(rng, 4, 3);
    Rat b = random_pos_rat(rng, 4, 3);
    Rat ar = random_pos_rat(rng, 8, 8);
    Rat br = random_pos_rat(rng, 8, 8);
    BigFloat A = to_bigfloat(ar);
    BigFloat B = to_bigfloat(br);
    LemmaNumMin lm = lemma_num_min(a, b, A, B);
    BigFloat af = to_bigfloat(a);
    BigFloat bf = to_bigfloat(b);
    auto f = [&](const BigFloat& t) { return A * exp(-af * t) + B * exp(bf * t); };
    // With these generator bounds |t_min| <= 10, so [-16, 16] brackets it.
    BigFloat oracle = bracket_minimize(f, BigFloat(-16), BigFloat(16), 170);
    BigFloat rel = abs(lm.f_min - oracle) / oracle;
    if (rel > BigFloat("1e-9"))
      return "relative error " + big_str(rel) + " for a=" + a.str() + " b=" + b.str() +
             " A=" + ar.str() + " B=" + br.str();
    return std::nullopt;
  }});

  specs.push_back({"slope_matches_rate", 200, true, [](std::uint64_t, SplitMix64& rng) -> std::optional<std::string> {
    Rat a = random_pos_rat(rng, 4, 3);
    Rat b = random_pos_rat(rng, 4, 3);
    Rat alpha = random_rat(rng, 3, 2);
    Rat beta = random_rat(rng, 3, 2);
    auto log_fmin = [&](long s) {
      LemmaNumMin lm = lemma_num_min(a, b, exp(to_bigfloat(alpha) * s),
                                     exp(to_bigfloat(beta) * s));
      return log(lm.f_min);
    };
    BigFloat slope = (log_fmin(40) - log_fmin(10)) / 30;
    Rat expect = rate(a, b, alpha, beta);
    if (abs(slope - to_bigfloat(expect)) > BigFloat("1e-6"))
      return "slope " + big_str(slope) + " != rate " + expect.str() + " for a=" + a.str() +
             " b=" + b.str() + " alpha=" + alpha.str() + " beta=" + beta.str();
    return std::nullopt;
  }});

  specs.push_back({"conjugate_bookkeeping", 200, true, [](std::uint64_t, SplitMix64& rng) -> std::optional<std::string> {
    Rat p = Rat(1) + random_pos_rat(rng, 8, 5);
    Rat q = conjugate(p);
    if (Rat(2) - Rat(3) / q != Rat(3) / p - Rat(1))
      return "2 - 3/q != 3/p - 1 at p = " + p.str();
    if (Rat(3) / q - Rat(1) != Rat(2) - Rat(3) / p)
      return "3/q - 1 != 2 - 3/p at p = " + p.str();
    return std::nullopt;
  }});

  specs.push_back({"monotone_candidates", 200, true, [](std::uint64_t, SplitMix64& rng) -> std::optional<std::string> {
    std::vector<std::pair<Rat, BigFloat>> terms;
    std::size_t nterms = static_cast<std::size_t>(rng.range(1, 4));
    for (std::size_t i = 0; i < nterms; ++i) {
      Rat c = random_rat(rng, 3, 2);
      Rat w = random_pos_rat(rng, 5, 3);
      terms.emplace_back(c, to_bigfloat(w));
    }
    std::vector<BigFloat> small, large;
    std::size_t ncand = static_cast<std::size_t>(rng.range(1, 5));
    for (std::size_t i = 0; i < ncand; ++i) {
      BigFloat t(rng.range(-8, 8));
      small.push_back(t);
      large.push_back(t);
    }
    std::size_t extra = static_cast<std::size_t>(rng.range(1, 4));
    for (std::size_t i = 0; i < extra; ++i) large.push_back(BigFloat(rng.range(-8, 8)));
    if (norm_bound_upper(terms, large) > norm_bound_upper(terms, small))
      return std::string("enlarging the candidate set raised the bound");
    return std::nullopt;
  }});

  specs.push_back({"pinned_examples", 1, false, [](std::uint64_t, SplitMix64&) -> std::optional<std::string> {
    LemmaNumMin sym = lemma_num_min(Rat(1), Rat(1), BigFloat(1), BigFloat(1));
    if (abs(sym.t_min) > BigFloat("1e-40") || abs(sym.f_min - 2) > BigFloat("1e-40"))
      return std::string("symmetric case is not (0, 2)");
    LemmaNumMin ex = lemma_num_min(Rat(1), Rat(2), BigFloat(4), BigFloat(1));
    BigFloat expect_t = log(BigFloat(2)) / 3;
    BigFloat expect_f = 3 * exp(BigFloat(2) * log(BigFloat(2)) / 3);
    if (abs(ex.t_min - expect_t) > BigFloat("1e-40") ||
        abs(ex.f_min - expect_f) / expect_f > BigFloat("1e-40"))
      return std::string("asymmetric pinned example mismatch");
    if (rate(Rat(1, 2), Rat(1, 2), Rat(1), Rat(-1)) != Rat(0))
      return std::string("rate pinned example mismatch");
    return std::nullopt;
  }});

  return run_suite("numlemma", opt, specs);
}

// --------------------------------------------------------- appendix suite

namespace {

AlgebraElement random_element(SplitMix64& rng, const WeightConfig& cfg) {
  AlgebraElement e;
  for (std::size_t j = 0; j < cfg.r(); ++j) e.u.push_back(random_rat(rng, 3, 2));
  for (std::size_t i = 0; i < cfg.n(); ++i) e.x.push_back(random_rat(rng, 3, 2));
  return e;
}

bool is_zero_element(const AlgebraElement& e) {
  for (const Rat& v : e.u)
    if (v.sgn() != 0) return false;
  for (const Rat& v : e.x)
    if (v.sgn() != 0) return false;
  return true;
}

AlgebraElement add_elements(const AlgebraElement& a, const AlgebraElement& b) {
  AlgebraElement s = a;
  for (std::size_t j = 0; j < s.u.size(); ++j) s.u[j] += b.u[j];
  for (std::size_t i = 0; i < s.x.size(); ++i) s.x[i] += b.x[i];
  return s;
}

AlgebraElement negate_element(const AlgebraElement& a) {
  AlgebraElement s = a;
  for (Rat& v : s.u) v = -v;
  for (Rat& v : s.x) v = -v;
  return s;
}

} // namespace

VerifyReport verify_appendix(const VerifyOptions& opt) {
  std::vector<CheckSpec> specs;

  specs.push_back({"partial_sum_duality", 1000, true, [](std::uint64_t, SplitMix64& rng) -> std::optional<std::string> {
    EigProfile profile = random_profile(rng, 8);
    std::size_t n = profile.n();
    for (std::size_t j = 0; j <= n; ++j) {
      if (profile.w(j) + profile.W(n - j) != profile.h())
        return "w_" + std::to_string(j) + " + W_" + std::to_string(n - j) + " != h";
    }
    // Threshold conjugacy: h/W_{k-1} and h/w_{n+1-k} are a conjugate pair.
    for (std::size_t k = 1; k <= n + 1; ++k) {
      XRat x = profile.threshold(EigProfile::Side::UpperSum, k - 1);
      XRat y = profile.threshold(EigProfile::Side::LowerSum, n + 1 - k);
      if (conjugate(x) != y)
        return "thresholds not conjugate at k = " + std::to_string(k);
    }
    return std::nullopt;
  }});

  specs.push_back({"bracket_laws", 300, true, [](std::uint64_t, SplitMix64& rng) -> std::optional<std::string> {
    std::size_t r = static_cast<std::size_t>(rng.range(1, 3));
    std::size_t n = static_cast<std::size_t>(rng.range(1, 5));
    WeightConfig cfg = random_weight_config(rng, r, n);
    AlgebraElement a = random_element(rng, cfg);
    AlgebraElement b = random_element(rng, cfg);
    AlgebraElement c = random_element(rng, cfg);
    if (!is_zero_element(add_elements(bracket(cfg, a, b), bracket(cfg, b, a))))
      return "bracket not antisymmetric for " + rows_str(cfg);
    AlgebraElement jac = add_elements(
        add_elements(bracket(cfg, bracket(cfg, a, b), c), bracket(cfg, bracket(cfg, b, c), a)),
        bracket(cfg, bracket(cfg, c, a), b));
    if (!is_zero_element(jac)) return "Jacobi identity fails for " + rows_str(cfg);
    return std::nullopt;
  }});

  specs.push_back({"center_kills_bracket", 300, true, [](std::uint64_t, SplitMix64& rng) -> std::optional<std::string> {
    std::size_t r = static_cast<std::size_t>(rng.range(1, 3));
    std::size_t n = static_cast<std::size_t>(rng.range(1, 4));
    WeightConfig cfg = random_weight_config(rng, r, n);
    std::vector<RatVec> basis = center(cfg);
    if (basis.empty()) return std::nullopt;
    AlgebraElement z;
    z.u = RatVec(cfg.r(), Rat(0));
    z.x = RatVec(cfg.n(), Rat(0));
    for (const RatVec& v : basis) {
      Rat c = random_rat(rng, 3, 2);
      for (std::size_t j = 0; j < cfg.r(); ++j) z.u[j] += c * v[j];
    }
    AlgebraElement b = random_element(rng, cfg);
    if (!is_zero_element(bracket(cfg, z, b)) ||
        !is_zero_element(bracket(cfg, b, negate_element(z))))
      return "center element fails to commute for " + rows_str(cfg);
    return std::nullopt;
  }});

  specs.push_back({"npc_iff_hull", 300, true, [](std::uint64_t, SplitMix64& rng) -> std::optional<std::string> {
    std::size_t r = static_cast<std::size_t>(rng.range(1, 3));
    std::size_t n = static_cast<std::size_t>(rng.range(1, 5));
    WeightConfig cfg = random_weight_config(rng, r, n);
    std::optional<RatVec> w = npc(cfg);
    bool hull = zero_in_weight_hull(cfg);
    if (w.has_value() == hull)
      return "witness/hull disagreement for " + rows_str(cfg);
    if (w) {
      for (std::size_t i = 0; i < cfg.n(); ++i) {
        if (cfg.eval(i, *w) > Rat(-1))
          return "witness violates its inequality for " + rows_str(cfg);
      }
    }
    return std::nullopt;
  }});

  specs.push_back({"hyperbolic_implies_npc", 300, true, [](std::uint64_t, SplitMix64& rng) -> std::optional<std::string> {
    std::size_t r = static_cast<std::size_t>(rng.range(1, 3));
    std::size_t n = static_cast<std::size_t>(rng.range(1, 5));
    WeightConfig cfg = random_weight_config(rng, r, n);
    std::optional<RatVec> hd = hyperbolic_direction(cfg);
    if (!hd) return std::nullopt;
    for (std::size_t i = 0; i < cfg.n(); ++i) {
      if (cfg.eval(i, *hd) != Rat(-1))
        return "hyperbolic witness off the -1 level set for " + rows_str(cfg);
    }
    if (!npc(cfg))
      return "hyperbolic witness exists but no curvature witness for " + rows_str(cfg);
    return std::nullopt;
  }});

  specs.push_back({"reducible_oracle", 300, true, [](std::uint64_t, SplitMix64& rng) -> std::optional<std::string> {
    std::size_t r = static_cast<std::size_t>(rng.range(2, 3));
    std::size_t n = static_cast<std::size_t>(rng.range(2, 6));
    WeightConfig cfg = random_weight_config(rng, r, n);
    for (int retry = 0; retry < 20 && has_abelian_factor(cfg); ++retry)
      cfg = random_weight_config(rng, r, n);
    if (has_abelian_factor(cfg)) return std::nullopt; // give up quietly, next trial
    auto part = reducible(cfg);
    auto split_rank = [&](const std::vector<std::size_t>& idx) {
      std::vector<RatVec> rows;
      for (std::size_t i : idx) rows.push_back(cfg.weight(i - 1));
      return bareiss_rank(rows);
    };
    if (part) {
      if (part->first.empty() || part->second.empty() ||
          part->first.size() + part->second.size() != n)
        return "partition is not a bipartition for " + rows_str(cfg);
      if (split_rank(part->first) + split_rank(part->second) != r)
        return "partition ranks do not add up for " + rows_str(cfg);
    } else {
      for (std::uint32_t pick = 0; pick < (1u << (n - 1)); ++pick) {
        std::vector<std::size_t> i1{1}, i2;
        for (std::size_t i = 1; i < n; ++i)
          ((pick >> (i - 1)) & 1 ? i1 : i2).push_back(i + 1);
        if (i2.empty()) continue;
        if (split_rank(i1) + split_rank(i2) == r)
          return "missed a splitting bipartition for " + rows_str(cfg);
      }
    }
    return std::nullopt;
  }});

  specs.push_back({"abelian_iff_center", 300, true, [](std::uint64_t, SplitMix64& rng) -> std::optional<std::string> {
    std::size_t r = static_cast<std::size_t>(rng.range(1, 4));
    std::size_t n = static_cast<std::size_t>(rng.range(1, 5));
    WeightConfig cfg = random_weight_config(rng, r, n);
    bool af = has_abelian_factor(cfg);
    bool has_center = !center(cfg).empty();
    bool low_rank = bareiss_rank(cfg.weights()) < r;
    if (af != has_center || af != low_rank)
      return "abelian-factor tests disagree for " + rows_str(cfg);
    return std::nullopt;
  }});

  specs.push_back({"pinned_models", 1, false, [](std::uint64_t, SplitMix64&) -> std::optional<std::string> {
    WeightConfig triple = canonical_from_gap(Rat(1, 2)).realize();
    StructureReport rep = analyze_structure(triple);
    if (rep.abelian_factor || rep.reducible_partition) return std::string("triple not irreducible");
    if (!rep.npc_witness || !rep.hyperbolic_witness)
      return std::string("triple lost a curvature witness");
    if (!(*rep.hyperbolic_witness == RatVec{Rat(1), Rat(0)}))
      return std::string("triple hyperbolic witness moved");
    WeightConfig split(2, {{Rat(-1), Rat(0)}, {Rat(0), Rat(-1)}});
    auto part = reducible(split);
    if (!part || part->first != std::vector<std::size_t>{1} ||
        part->second != std::vector<std::size_t>{2})
      return std::string("coordinate-split model not detected");
    for (long lam : {1L, 2L, 3L, 5L}) {
      WeightConfig sol(1, {{Rat(1)}, {Rat(-lam)}});
      if (npc(sol) || !zero_in_weight_hull(sol))
        return "mixed-sign line model wrongly negatively curved at lambda = " +
               std::to_string(lam);
    }
    return std::nullopt;
  }});

  return run_suite("appendix", opt, specs);
}

std::vector<VerifyReport> verify_all(const VerifyOptions& opt) {
  VerifyOptions each = opt;
  each.checks.clear(); // filters are per-suite concepts
  return {verify_heis(each), verify_budget(each), verify_numlemma(each),
          verify_appendix(each)};
}

} // namespace lpcoh
