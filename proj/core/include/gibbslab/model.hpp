#pragma once

#include <string>
#include <unordered_map>
#include <vector>

#include "gibbslab/configuration.hpp"
#include "gibbslab/interaction.hpp"
#include "gibbslab/lattice.hpp"
#include "gibbslab/potential.hpp"

namespace gibbslab {

// Potential + interaction, gated by the admissibility condition
// sigma < kappa (= inf V1'').
class ModelSpec {
 public:
  ModelSpec(Potential pot, Interaction inter);

  const Potential& potential() const { return pot_; }
  const Interaction& interaction() const { return inter_; }
  int dim() const { return inter_.dim(); }

  bool same_model(const ModelSpec& o) const;

 private:
  Potential pot_;
  Interaction inter_;
};

// Finite box + frozen boundary condition; the data of one finite-volume
// Gibbs measure.
struct GibbsSpec {
  ModelSpec model;
  Box box;
  Configuration boundary;

  GibbsSpec(ModelSpec m, Box b, Configuration omega);
};

// U_{L,omega}(sigma) = sum_i V(sigma_i) + sum_{unordered pairs in L} J(i-j) sigma_i sigma_j
//                     + sum_{i in L, j outside} J(i-j) sigma_i omega_j.
double hamiltonian(const GibbsSpec& spec, const Configuration& config);

// Component at i: V'(sigma_i) + sum_{j in L, j != i} J(i-j) sigma_j
//                + sum_{j outside} J(i-j) omega_j.
std::vector<double> grad_hamiltonian(const GibbsSpec& spec, const Configuration& config);

// External field induced on box sites by the frozen boundary:
// h_i = sum_{j not in L} J(i-j) omega_j. Indexed like Box::index_of.
std::vector<double> boundary_field(const GibbsSpec& spec);

// Model specification files (JSON): potential name + parameters + kappa,
// interaction as a list of (offset, J), dimension.
ModelSpec load_model_file(const std::string& path);
ModelSpec parse_model_json(const std::string& text);

}  // namespace gibbslab
