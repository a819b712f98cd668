#include "lpcoh/render.hpp"

#include <sstream>

namespace lpcoh {

namespace {

std::string bigfloat_str(const BigFloat& v) {
  std::ostringstream os;
  os.precision(30);
  os << v;
  return os.str();
}

bool inside(const Rat& at, const XRat& lo, const XRat& hi) {
  return XRat(at) > lo && XRat(at) < hi;
}

void append_regions(std::ostringstream& os, const PuncturedIntervalSet& s) {
  os << "| exponents p | status |\n|---|---|\n";
  std::vector<bool> used(s.punctures().size(), false);
  for (const auto& pc : s.pieces()) {
    std::vector<Rat> inner;
    for (std::size_t i = 0; i < s.punctures().size(); ++i) {
      if (inside(s.punctures()[i], pc.lo, pc.hi)) {
        inner.push_back(s.punctures()[i]);
        used[i] = true;
      }
    }
    os << "| " << interval_str(pc.lo, pc.hi, inner) << " | "
       << status_name(pc.status) << " |\n";
  }
  for (std::size_t i = 0; i < s.punctures().size(); ++i) {
    if (!used[i]) os << "| {" << s.punctures()[i].str() << "} | unknown |\n";
  }
}

} // namespace

std::string interval_str(const XRat& lo, const XRat& hi,
                         const std::vector<Rat>& inner_punctures) {
  std::ostringstream os;
  os << "(" << lo.str() << ", " << hi.str() << ")";
  if (!inner_punctures.empty()) {
    os << " \\ {";
    for (std::size_t i = 0; i < inner_punctures.size(); ++i) {
      if (i) os << ", ";
      os << inner_punctures[i].str();
    }
    os << "}";
  }
  return os.str();
}

std::string render_md(const PuncturedIntervalSet& s) {
  std::ostringstream os;
  append_regions(os, s);
  return os.str();
}

std::string render_md(const StripReport& r) {
  std::ostringstream os;
  os << "degree " << r.degree << "\n\n";
  append_regions(os, r.regions);
  if (!r.piece_flags.empty()) {
    os << "\n| piece | flags |\n|---|---|\n";
    for (std::size_t i = 0; i < r.piece_flags.size(); ++i) {
      const StripFlags& f = r.piece_flags[i];
      std::vector<std::string> notes;
      if (f.vanishes) notes.push_back("vanishes: " + f.vanishes_reason);
      if (f.hausdorff_iso_z) notes.push_back("hausdorff: " + f.hausdorff_reason);
      if (f.boundary_density) notes.push_back("density: " + f.density_reason);
      if (f.torsion_nonzero) notes.push_back("torsion: " + f.torsion_reason);
      const auto& pc = r.regions.pieces()[i];
      os << "| (" << pc.lo.str() << ", " << pc.hi.str() << ") | ";
      if (notes.empty()) {
        os << "none";
      } else {
        for (std::size_t k = 0; k < notes.size(); ++k) {
          if (k) os << "; ";
          os << notes[k];
        }
      }
      os << " |\n";
    }
  }
  return os.str();
}

std::string render_md(const StructureReport& r) {
  std::ostringstream os;
  os << "- center dimension: " << r.center_basis.size() << "\n";
  for (const RatVec& v : r.center_basis) {
    os << "  - (";
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) os << ", ";
      os << v[i].str();
    }
    os << ")\n";
  }
  os << "- derived algebra is all of R^n: " << (r.derived_is_full_rn ? "yes" : "no")
     << "\n";
  os << "- abelian factor: " << (r.abelian_factor ? "yes" : "no") << "\n";
  if (!r.abelian_factor) {
    if (r.reducible_partition) {
      os << "- reducible: yes, parts {";
      const auto& [a, b] = *r.reducible_partition;
      for (std::size_t i = 0; i < a.size(); ++i) os << (i ? ", " : "") << a[i];
      os << "} and {";
      for (std::size_t i = 0; i < b.size(); ++i) os << (i ? ", " : "") << b[i];
      os << "}\n";
    } else {
      os << "- reducible: no\n";
    }
  }
  auto witness = [&os](const char* label, const std::optional<RatVec>& w) {
    os << "- " << label << ": ";
    if (!w) {
      os << "none\n";
      return;
    }
    os << "(";
    for (std::size_t i = 0; i < w->size(); ++i) {
      if (i) os << ", ";
      os << (*w)[i].str();
    }
    os << ")\n";
  };
  witness("negative-curvature witness", r.npc_witness);
  witness("hyperbolic witness", r.hyperbolic_witness);
  return os.str();
}

std::string render_md(const CanonicalMu& c) {
  std::ostringstream os;
  os << "mu = (" << c.mu[0].str() << ", " << c.mu[1].str() << ", " << c.mu[2].str()
     << "), p_alpha = " << c.p_alpha.str() << "\n";
  return os.str();
}

std::string render_md(const BudgetResult& b) {
  std::ostringstream os;
  os << "- window s -> +inf: beta = " << b.plus.beta.str()
     << ", alpha = " << b.plus.alpha.str() << ", holds iff p > "
     << b.plus.threshold.str() << "\n";
  os << "- window s -> -inf: beta = " << b.minus.beta.str()
     << ", alpha = " << b.minus.alpha.str() << ", holds iff p > "
     << b.minus.threshold.str() << "\n\n";
  append_regions(os, b.feasible_p);
  return os.str();
}

std::string render_md(const LemmaNumMin& m) {
  std::ostringstream os;
  os << "- t_min = " << m.inv_rate.str() << " * log(" << bigfloat_str(m.log_arg)
     << ") = " << bigfloat_str(m.t_min) << "\n";
  os << "- f_min = " << bigfloat_str(m.f_min) << "\n";
  return os.str();
}

std::string render_md(const VerifyReport& r) {
  std::ostringstream os;
  os << "suite " << r.suite << ", seed " << r.seed << "\n\n";
  os << "| check | trials | failures |\n|---|---|---|\n";
  for (const CheckResult& c : r.checks) {
    os << "| " << c.name << " | " << c.trials << " | " << c.failures << " |\n";
  }
  os << "\n" << (r.passed() ? "PASS" : "FAIL") << "\n";
  for (const CheckResult& c : r.checks) {
    if (!c.passed()) os << "- " << c.name << ": " << c.counterexample << "\n";
  }
  return os.str();
}

} // namespace lpcoh
