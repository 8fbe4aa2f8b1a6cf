#pragma once

#include "opencospan/cospan.hpp"
#include "opencospan/graph.hpp"
#include "opencospan/linear_relation.hpp"

namespace ocs {

// A circuit of resistors: an open graph whose edge labels are positive
// resistances. Boundary coordinates of its behavior are ordered
// (input potentials, input currents, output potentials, output currents).
using CircuitCat = LGraphCat<Rational>;
using Circuit = StructuredCospan<CircuitCat>;

// The relation {(phi1, I1, phi2, I2) : I1 = I2, phi2 - phi1 = R I1}.
LinearRelation resistor_relation(const Rational& resistance);

// The special commutative Frobenius monoid on Q^2: potentials equalized,
// currents summed.
struct FrobeniusRelations {
  LinearRelation mult;    // 2 terminals -> 1
  LinearRelation unit;    // 0 -> 1
  LinearRelation comult;  // 1 -> 2
  LinearRelation counit;  // 1 -> 0
};
FrobeniusRelations frobenius_relations();

// Direct sum in circuit boundary order: potentials of both summands first,
// then currents (the interleaving that matches black-boxing a tensor).
LinearRelation circuit_direct_sum(const LinearRelation& r1,
                                  const LinearRelation& r2);

// The behavior of an open circuit: the relation between boundary potentials
// and currents forced by Ohm's law on each edge and current balance at each
// node; internal variables eliminated exactly.
LinearRelation blackbox(const Circuit& circuit);

}  // namespace ocs
