#include "mdprod/verify.hpp"

#include <algorithm>
#include <array>
#include <random>

#include "mdprod/error.hpp"
#include "mdprod/io.hpp"

namespace mdprod {

namespace {

bool md_axioms_hold(const MetricProfile& p) {
  const auto n = static_cast<Vertex>(p.order());
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) {
      if ((p.md(u, v) == 0) != (u == v)) return false;
      if (p.md(u, v) != p.md(v, u)) return false;
      for (Vertex w = 0; w < n; ++w) {
        if (p.md(u, w) > p.md(u, v) + p.md(v, w)) return false;
      }
    }
  }
  return true;
}

bool inclusions_hold(const BoundaryProfile& b) {
  return b.periphery.is_subset_of(set_intersection(b.contour, b.eccentricity_set)) &&
         set_union(b.eccentricity_set, b.contour).is_subset_of(b.boundary);
}

VertexSet apply(const SetFormula& override_fn, VertexSet (*fallback)(const FactorPair&),
                const FactorPair& f) {
  return override_fn ? override_fn(f) : fallback(f);
}

VertexSet default_boundary(const FactorPair& f) { return product_boundary_via_factors(f); }

// Everything a check might look at for one factor pair, built lazily enough
// that each check stays cheap on its own.
struct Trial {
  const Digraph& d1;
  const Digraph& d2;
  const FormulaOverrides& overrides;

  bool check(const std::string& name) const {
    if (!is_strong(d1) || !is_strong(d2)) return false;
    const FactorPair f(d1, d2);
    if (name == "md_axioms") return md_axioms_hold(f.p1()) && md_axioms_hold(f.p2());
    if (name == "factor_inclusions") return inclusions_hold(f.b1()) && inclusions_hold(f.b2());
    if (name == "factor_neighborhood_variants") {
      return boundary_profile(f.p1(), d1, Neighborhood::closed) == f.b1() &&
             boundary_profile(f.p2(), d2, Neighborhood::closed) == f.b2();
    }

    const StrongProduct product = strong_product(d1, d2);
    if (name == "product_strong") return is_strong(product.digraph);
    const MetricProfile direct = metric_profile(product.digraph);
    const ProductLabel& label = product.label;
    if (name == "product_distance") {
      for (Vertex a = 0; a < label.size(); ++a) {
        for (Vertex b = 0; b < label.size(); ++b) {
          if (direct.md(a, b) != product_distance(f, label.decode(a), label.decode(b))) {
            return false;
          }
        }
      }
      return true;
    }
    if (name == "product_eccentricity" || name == "product_radius" ||
        name == "product_diameter") {
      const ProductEccentricities pe = product_eccentricities(f);
      if (name == "product_radius") return pe.radius == direct.radius();
      if (name == "product_diameter") return pe.diameter == direct.diameter();
      return std::ranges::equal(pe.ecc, direct.eccentricities());
    }
    if (name == "product_metric_profile") {
      const MetricProfile via = product_metric_profile(f);
      for (Vertex a = 0; a < label.size(); ++a) {
        if (!std::ranges::equal(via.md_row(a), direct.md_row(a))) return false;
      }
      return true;
    }

    const BoundaryProfile oracle = boundary_profile(direct, product.digraph);
    if (name == "boundary_formula") {
      return apply(overrides.boundary, default_boundary, f) == oracle.boundary;
    }
    if (name == "periphery_formula") {
      return apply(overrides.periphery, product_periphery_via_factors, f) == oracle.periphery;
    }
    if (name == "eccentric_formula") {
      return apply(overrides.eccentric, product_eccentric_via_factors, f) ==
             oracle.eccentricity_set;
    }
    if (name == "contour_formula") {
      return apply(overrides.contour, product_contour_via_factors, f) == oracle.contour;
    }
    if (name == "product_inclusions") return inclusions_hold(oracle);
    if (name == "product_neighborhood_variants") {
      return boundary_profile(direct, product.digraph, Neighborhood::closed) == oracle &&
             product_boundary_via_factors(f, Neighborhood::closed) ==
                 product_boundary_via_factors(f, Neighborhood::open);
    }
    throw Error(Errc::invalid_config, "unknown verification check '" + name + "'");
  }
};

}  // namespace

bool VerifySummary::ok() const {
  return std::ranges::all_of(checks, [](const CheckTally& t) { return t.failed == 0; });
}

const CheckTally* VerifySummary::find(const std::string& name) const {
  auto it = std::ranges::find(checks, name, &CheckTally::name);
  return it == checks.end() ? nullptr : &*it;
}

const std::vector<std::string>& verification_checks() {
  static const std::vector<std::string> names = {
      "md_axioms",
      "factor_inclusions",
      "factor_neighborhood_variants",
      "product_strong",
      "product_distance",
      "product_eccentricity",
      "product_radius",
      "product_diameter",
      "product_metric_profile",
      "boundary_formula",
      "periphery_formula",
      "eccentric_formula",
      "contour_formula",
      "product_inclusions",
      "product_neighborhood_variants",
  };
  return names;
}

bool run_check(const std::string& name, const Digraph& d1, const Digraph& d2,
               const FormulaOverrides& overrides) {
  return Trial{d1, d2, overrides}.check(name);
}

std::uint64_t trial_seed(std::uint64_t master, std::size_t trial) {
  // splitmix64 finalizer
  std::uint64_t z = master + 0x9e3779b97f4a7c15ULL * (static_cast<std::uint64_t>(trial) + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::pair<Digraph, Digraph> trial_factors(const VerifyConfig& cfg, std::size_t trial) {
  static constexpr std::array<double, 3> probabilities{0.2, 0.4, 0.7};
  std::mt19937_64 rng(trial_seed(cfg.seed, trial));
  std::uniform_int_distribution<std::size_t> order(cfg.n_min, cfg.n_max);
  const double p = cfg.p.value_or(probabilities[trial % probabilities.size()]);
  GeneratorConfig g1{order(rng), p, rng(), cfg.max_retries, cfg.bidirected};
  GeneratorConfig g2{order(rng), p, rng(), cfg.max_retries, cfg.bidirected};
  return {generate_strong_digraph(g1).digraph, generate_strong_digraph(g2).digraph};
}

VerifySummary run_verification(const VerifyConfig& cfg) {
  if (cfg.trials == 0) throw Error(Errc::invalid_config, "trials must be at least 1");
  if (cfg.n_min == 0 || cfg.n_min > cfg.n_max) {
    throw Error(Errc::invalid_config, "vertex range must satisfy 1 <= n_min <= n_max");
  }
  if (cfg.p && !(*cfg.p >= 0.0 && *cfg.p <= 1.0)) {
    throw Error(Errc::invalid_config, "arc probability must lie in [0, 1]");
  }

  VerifySummary summary;
  summary.trials = cfg.trials;
  for (const auto& name : verification_checks()) summary.checks.push_back({name, 0, 0});

  for (std::size_t t = 0; t < cfg.trials; ++t) {
    auto [d1, d2] = trial_factors(cfg, t);
    const Trial trial{d1, d2, cfg.overrides};
    for (auto& tally : summary.checks) {
      if (trial.check(tally.name)) {
        ++tally.passed;
        continue;
      }
      ++tally.failed;
      if (!summary.counterexample) {
        auto [m1, m2] = minimize_counterexample(tally.name, d1, d2, cfg.overrides);
        summary.counterexample = Counterexample{tally.name, t, std::move(m1), std::move(m2)};
      }
    }
  }
  return summary;
}

std::pair<Digraph, Digraph> minimize_counterexample(const std::string& name, Digraph d1,
                                                    Digraph d2,
                                                    const FormulaOverrides& overrides) {
  auto without = [](const Digraph& d, std::size_t skip) {
    std::vector<Arc> arcs;
    for (std::size_t k = 0; k < d.arc_count(); ++k) {
      if (k != skip) arcs.push_back(d.arcs()[k]);
    }
    return Digraph::from_arcs(d.order(), arcs);
  };
  bool shrunk = true;
  while (shrunk) {
    shrunk = false;
    for (int side = 0; side < 2 && !shrunk; ++side) {
      const Digraph& target = side == 0 ? d1 : d2;
      for (std::size_t k = 0; k < target.arc_count(); ++k) {
        Digraph candidate = without(target, k);
        if (!is_strong(candidate)) continue;
        const bool still_fails = side == 0 ? !run_check(name, candidate, d2, overrides)
                                           : !run_check(name, d1, candidate, overrides);
        if (still_fails) {
          (side == 0 ? d1 : d2) = std::move(candidate);
          shrunk = true;
          break;
        }
      }
    }
  }
  return {std::move(d1), std::move(d2)};
}

}  // namespace mdprod
