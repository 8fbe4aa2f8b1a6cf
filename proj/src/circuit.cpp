#include "opencospan/circuit.hpp"

#include <numeric>

namespace ocs {

LinearRelation resistor_relation(const Rational& resistance) {
  require(resistance > 0, ErrorKind::nonpositive_resistance,
          "resistance must be positive");
  RatMatrix span = {
      {Rational(1), Rational(0), Rational(1), Rational(0)},
      {Rational(0), Rational(1), resistance, Rational(1)},
  };
  return LinearRelation(2, 2, std::move(span));
}

FrobeniusRelations frobenius_relations() {
  // mult: coordinates (phi1, phi2, I1, I2 | phi3, I3).
  RatMatrix mult_span = {
      {Rational(1), Rational(1), Rational(0), Rational(0), Rational(1),
       Rational(0)},
      {Rational(0), Rational(0), Rational(1), Rational(0), Rational(0),
       Rational(1)},
      {Rational(0), Rational(0), Rational(0), Rational(1), Rational(0),
       Rational(1)},
  };
  LinearRelation mult(4, 2, std::move(mult_span));
  // unit: no terminals on the left; the right terminal carries no current.
  LinearRelation unit(0, 2, {{Rational(1), Rational(0)}});
  return FrobeniusRelations{mult, unit, converse(mult), converse(unit)};
}

LinearRelation circuit_direct_sum(const LinearRelation& r1,
                                  const LinearRelation& r2) {
  require(r1.dim_in() % 2 == 0 && r1.dim_out() % 2 == 0 &&
              r2.dim_in() % 2 == 0 && r2.dim_out() % 2 == 0,
          ErrorKind::mismatched_boundary,
          "circuit relations have (potential, current) pairs per terminal");
  LinearRelation blocks = direct_sum(r1, r2);
  const std::size_t m1 = r1.dim_in() / 2, m2 = r2.dim_in() / 2;
  const std::size_t n1 = r1.dim_out() / 2, n2 = r2.dim_out() / 2;
  // New coordinate i reads old coordinate perm[i]; old order is
  // (phi1, iota1, phi2, iota2), new order (phi1, phi2, iota1, iota2).
  std::vector<std::size_t> in_perm, out_perm;
  for (std::size_t i = 0; i < m1; ++i) in_perm.push_back(i);
  for (std::size_t i = 0; i < m2; ++i) in_perm.push_back(2 * m1 + i);
  for (std::size_t i = 0; i < m1; ++i) in_perm.push_back(m1 + i);
  for (std::size_t i = 0; i < m2; ++i) in_perm.push_back(2 * m1 + m2 + i);
  for (std::size_t i = 0; i < n1; ++i) out_perm.push_back(i);
  for (std::size_t i = 0; i < n2; ++i) out_perm.push_back(2 * n1 + i);
  for (std::size_t i = 0; i < n1; ++i) out_perm.push_back(n1 + i);
  for (std::size_t i = 0; i < n2; ++i) out_perm.push_back(2 * n1 + n2 + i);
  return permute_boundary(blocks, in_perm, out_perm);
}

LinearRelation blackbox(const Circuit& circuit) {
  const Graph& g = circuit.apex.graph;
  const std::vector<Rational>& resistances = circuit.apex.labels;
  for (const Rational& r : resistances) {
    require(r > 0, ErrorKind::nonpositive_resistance,
            "resistance must be positive");
  }
  const std::size_t nodes = g.nodes.size;
  const std::size_t edges = g.edges.size;
  const std::size_t m = circuit.foot_in.size;
  const std::size_t n = circuit.foot_out.size;
  const FinFunction& in_points = circuit.leg_in.node_map();
  const FinFunction& out_points = circuit.leg_out.node_map();

  // Variable layout: node potentials, edge currents, then the boundary
  // (input potentials, input currents, output potentials, output currents).
  const std::size_t v_node = 0;
  const std::size_t v_edge = nodes;
  const std::size_t v_phi_in = nodes + edges;
  const std::size_t v_iota = v_phi_in + m;
  const std::size_t v_phi_out = v_iota + m;
  const std::size_t v_omega = v_phi_out + n;
  const std::size_t total = v_omega + n;

  RatMatrix constraints;
  // Ohm's law per edge: phi_tgt - phi_src - R * I = 0.
  for (std::size_t e = 0; e < edges; ++e) {
    RatVec row(total, Rational(0));
    row[v_node + g.tgt(e)] += 1;
    row[v_node + g.src(e)] -= 1;
    row[v_edge + e] -= resistances[e];
    constraints.push_back(std::move(row));
  }
  // Current balance per node: inflow - outflow + boundary terms = 0.
  for (std::size_t node = 0; node < nodes; ++node) {
    RatVec row(total, Rational(0));
    for (std::size_t e = 0; e < edges; ++e) {
      if (g.tgt(e) == node) row[v_edge + e] += 1;
      if (g.src(e) == node) row[v_edge + e] -= 1;
    }
    for (std::size_t x = 0; x < m; ++x) {
      if (in_points(x) == node) row[v_iota + x] += 1;
    }
    for (std::size_t y = 0; y < n; ++y) {
      if (out_points(y) == node) row[v_omega + y] -= 1;
    }
    constraints.push_back(std::move(row));
  }
  // Boundary potentials read the node they attach to.
  for (std::size_t x = 0; x < m; ++x) {
    RatVec row(total, Rational(0));
    row[v_phi_in + x] = 1;
    row[v_node + in_points(x)] = -1;
    constraints.push_back(std::move(row));
  }
  for (std::size_t y = 0; y < n; ++y) {
    RatVec row(total, Rational(0));
    row[v_phi_out + y] = 1;
    row[v_node + out_points(y)] = -1;
    constraints.push_back(std::move(row));
  }

  std::vector<std::size_t> keep(2 * m + 2 * n);
  std::iota(keep.begin(), keep.end(), v_phi_in);
  return relation_from_constraints(2 * m, 2 * n, constraints, total, keep);
}

}  // namespace ocs
