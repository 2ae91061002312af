#include "gibbslab/model.hpp"

#include <cmath>

#include "gibbslab/numerics.hpp"

namespace gibbslab {

ModelSpec::ModelSpec(Potential pot, Interaction inter)
    : pot_(std::move(pot)), inter_(std::move(inter)) {
  validate_potential(pot_);
  if (!(inter_.sigma() < pot_.convexity_floor))
    throw input_error("ModelSpec: inadmissible, sigma >= kappa");
}

bool ModelSpec::same_model(const ModelSpec& o) const {
  return pot_.name == o.pot_.name && pot_.growth_exponent == o.pot_.growth_exponent &&
         pot_.convexity_floor == o.pot_.convexity_floor && inter_ == o.inter_;
}

GibbsSpec::GibbsSpec(ModelSpec m, Box b, Configuration omega)
    : model(std::move(m)), box(b), boundary(std::move(omega)) {
  if (box.dim() != model.dim()) throw input_error("GibbsSpec: box/interaction dimension mismatch");
  if (!boundary.satisfies_declared_temperedness())
    throw input_error("GibbsSpec: boundary violates its declared temperedness class");
}

namespace {

double spin_at(const Configuration& config, const Site& s) {
  const double v = config.at(s);
  if (!std::isfinite(v)) throw input_error("hamiltonian: non-finite spin");
  return v;
}

}  // namespace

double hamiltonian(const GibbsSpec& spec, const Configuration& config) {
  const auto& pot = spec.model.potential();
  const auto& inter = spec.model.interaction();
  CompensatedSum acc;
  const auto sites = spec.box.sites();
  for (const auto& i : sites) {
    const double si = spin_at(config, i);
    acc.add(pot(si));
    for (const auto& [v, j] : inter.entries()) {
      const Site nb = i + v;
      if (spec.box.contains(nb)) {
        // unordered pairs counted once
        if (lex_less(i, nb)) acc.add(j * si * spin_at(config, nb));
      } else {
        acc.add(j * si * spec.boundary.at(nb));
      }
    }
  }
  return acc.result();
}

std::vector<double> grad_hamiltonian(const GibbsSpec& spec, const Configuration& config) {
  const auto& pot = spec.model.potential();
  const auto& inter = spec.model.interaction();
  std::vector<double> g(spec.box.size());
  for (std::size_t idx = 0; idx < spec.box.size(); ++idx) {
    const Site i = spec.box.site_at(idx);
    double v = pot.deriv(spin_at(config, i));
    for (const auto& [off, j] : inter.entries()) {
      const Site nb = i + off;
      v += j * (spec.box.contains(nb) ? spin_at(config, nb) : spec.boundary.at(nb));
    }
    g[idx] = v;
  }
  return g;
}

std::vector<double> boundary_field(const GibbsSpec& spec) {
  const auto& inter = spec.model.interaction();
  std::vector<double> h(spec.box.size(), 0.0);
  for (std::size_t idx = 0; idx < spec.box.size(); ++idx) {
    const Site i = spec.box.site_at(idx);
    for (const auto& [off, j] : inter.entries()) {
      const Site nb = i + off;
      if (!spec.box.contains(nb)) h[idx] += j * spec.boundary.at(nb);
    }
  }
  return h;
}

}  // namespace gibbslab
