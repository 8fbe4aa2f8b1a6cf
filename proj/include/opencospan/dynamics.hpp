#pragma once

#include "opencospan/cospan.hpp"
#include "opencospan/petri.hpp"

namespace ocs {

// Open Petri net with rates; its mass-action semantics below is the
// computational content of the dynamics functor.
using OpenReactionNet = StructuredCospan<PetriRatesCat>;

// Mass-action vector field: v_s(x) = sum over transitions of
// rate * (target_s - source_s) * prod_{s'} x_{s'}^{source_{s'}}.
std::vector<Rational> mass_action_field(const PetriWithRates& net,
                                        const std::vector<Rational>& state);

bool is_steady(const PetriWithRates& net, const std::vector<Rational>& state);

struct EulerStep {
  std::vector<Rational> state;
  bool clamped = false;  // true when a coordinate was cut off at zero
};

EulerStep euler_step(const PetriWithRates& net, const std::vector<Rational>& state,
                     const Rational& step);

// Sum of w over the fibers of p; transports a vector field along a leg of a
// pushout.
std::vector<Rational> pushforward_field(const FinFunction& p,
                                        const std::vector<Rational>& w);

// Basis of the left kernel of the stoichiometry matrix: linear functionals
// conserved by every mass-action trajectory.
std::vector<std::vector<Rational>> conserved_functionals(const PetriNet& net);

}  // namespace ocs
