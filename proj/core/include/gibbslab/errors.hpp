#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace gibbslab {

// Error taxonomy shared by all modules. The CLI maps each class to a
// distinct exit code.

// Bad arguments: missing spins, non-finite values, incompatible boxes, ...
struct input_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A parameter is outside the mathematical domain of the operation
// (non-contractive recursion, t below the solvable threshold, ...).
struct domain_error : std::domain_error {
  using std::domain_error::domain_error;
};

// The requested accuracy cannot be met with the given discretization
// (grid too narrow, truncation ball too small, state count over budget).
struct resolution_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A series or iteration does not converge for these parameters.
struct divergence_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Least-squares input is degenerate or too small.
struct fit_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The integrator produced a non-finite state; `step` names the offender.
struct blowup_error : std::runtime_error {
  std::int64_t step;
  explicit blowup_error(std::int64_t step_, const std::string& what_)
      : std::runtime_error(what_), step(step_) {}
};

}  // namespace gibbslab
