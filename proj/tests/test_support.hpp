#pragma once

#include <random>
#include <vector>

#include "opencospan/cospan.hpp"
#include "opencospan/graph.hpp"
#include "opencospan/petri.hpp"

namespace ocs::testing {

using Rng = std::mt19937;

inline std::size_t pick(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

inline FinFunction random_function(Rng& rng, FinSet dom, FinSet cod) {
  std::vector<std::size_t> table(dom.size);
  for (auto& v : table) v = pick(rng, 0, cod.size - 1);
  return FinFunction(dom, cod, std::move(table));
}

inline FinFunction random_permutation(Rng& rng, FinSet a) {
  std::vector<std::size_t> table(a.size);
  for (std::size_t i = 0; i < a.size; ++i) table[i] = i;
  std::shuffle(table.begin(), table.end(), rng);
  return FinFunction(a, a, std::move(table));
}

inline Graph random_graph(Rng& rng, std::size_t max_nodes, std::size_t max_edges,
                          std::size_t min_nodes = 1) {
  FinSet nodes{pick(rng, min_nodes, max_nodes)};
  FinSet edges{nodes.size == 0 ? 0 : pick(rng, 0, max_edges)};
  std::vector<std::size_t> src(edges.size), tgt(edges.size);
  for (std::size_t e = 0; e < edges.size; ++e) {
    src[e] = pick(rng, 0, nodes.size - 1);
    tgt[e] = pick(rng, 0, nodes.size - 1);
  }
  return Graph(edges, nodes, FinFunction(edges, nodes, src),
               FinFunction(edges, nodes, tgt));
}

// Open graph with the requested feet.
inline StructuredCospan<GraphCat> random_graph_cell(Rng& rng, FinSet foot_in,
                                                    FinSet foot_out,
                                                    std::size_t max_nodes = 4,
                                                    std::size_t max_edges = 4) {
  Graph apex = random_graph(rng, max_nodes, max_edges);
  std::vector<std::size_t> in_points(foot_in.size), out_points(foot_out.size);
  for (auto& p : in_points) p = pick(rng, 0, apex.nodes.size - 1);
  for (auto& p : out_points) p = pick(rng, 0, apex.nodes.size - 1);
  return make_cospan<GraphCat>(foot_in, foot_out, apex, in_points, out_points);
}

inline Multiset random_multiset(Rng& rng, FinSet base, std::uint64_t max_count) {
  Multiset m = Multiset::zero(base);
  for (auto& c : m.counts) c = pick(rng, 0, max_count);
  return m;
}

inline PetriNet random_petri(Rng& rng, std::size_t max_places,
                             std::size_t max_transitions,
                             std::size_t min_places = 1) {
  FinSet places{pick(rng, min_places, max_places)};
  FinSet transitions{places.size == 0 ? 0 : pick(rng, 0, max_transitions)};
  std::vector<Multiset> sources, targets;
  for (std::size_t t = 0; t < transitions.size; ++t) {
    sources.push_back(random_multiset(rng, places, 2));
    targets.push_back(random_multiset(rng, places, 2));
  }
  return PetriNet(transitions, places, std::move(sources), std::move(targets));
}

inline StructuredCospan<PetriCat> random_petri_cell(Rng& rng, FinSet foot_in,
                                                    FinSet foot_out,
                                                    std::size_t max_places = 4,
                                                    std::size_t max_transitions = 3) {
  PetriNet apex = random_petri(rng, max_places, max_transitions);
  std::vector<std::size_t> in_points(foot_in.size), out_points(foot_out.size);
  for (auto& p : in_points) p = pick(rng, 0, apex.places.size - 1);
  for (auto& p : out_points) p = pick(rng, 0, apex.places.size - 1);
  return make_cospan<PetriCat>(foot_in, foot_out, apex, in_points, out_points);
}

inline PetriWithRates random_rated_petri(Rng& rng, std::size_t max_places,
                                         std::size_t max_transitions) {
  PetriNet net = random_petri(rng, max_places, max_transitions);
  std::vector<Rational> rates;
  for (std::size_t t = 0; t < net.transitions.size; ++t)
    rates.push_back(make_rational(static_cast<long>(pick(rng, 1, 5)),
                                  static_cast<long>(pick(rng, 1, 3))));
  return PetriWithRates(std::move(net), std::move(rates));
}

inline StructuredCospan<PetriRatesCat> random_rated_cell(
    Rng& rng, FinSet foot_in, FinSet foot_out, std::size_t max_places = 4,
    std::size_t max_transitions = 3) {
  PetriWithRates apex = random_rated_petri(rng, max_places, max_transitions);
  std::vector<std::size_t> in_points(foot_in.size), out_points(foot_out.size);
  for (auto& p : in_points) p = pick(rng, 0, apex.net.places.size - 1);
  for (auto& p : out_points) p = pick(rng, 0, apex.net.places.size - 1);
  return make_cospan<PetriRatesCat>(foot_in, foot_out, apex, in_points,
                                    out_points);
}

// Random isomorphic scramble of a graph, as a morphism out of it.
inline GraphMorphism random_graph_iso(Rng& rng, const Graph& x) {
  FinFunction node_perm = random_permutation(rng, x.nodes);
  FinFunction edge_perm = random_permutation(rng, x.edges);
  FinFunction inv_e = edge_perm.inverse();
  std::vector<std::size_t> src(x.edges.size), tgt(x.edges.size);
  for (std::size_t e = 0; e < x.edges.size; ++e) {
    src[e] = node_perm(x.src(inv_e(e)));
    tgt[e] = node_perm(x.tgt(inv_e(e)));
  }
  Graph y(x.edges, x.nodes, FinFunction(x.edges, x.nodes, src),
          FinFunction(x.edges, x.nodes, tgt));
  return GraphMorphism(x, y, edge_perm, node_perm);
}

inline PetriMorphism random_petri_iso(Rng& rng, const PetriNet& x) {
  FinFunction place_perm = random_permutation(rng, x.places);
  FinFunction transition_perm = random_permutation(rng, x.transitions);
  PetriNet y = petridetail::apply_petri_perms(x, place_perm, transition_perm);
  return PetriMorphism(x, y, transition_perm, place_perm);
}

inline PetriRatesMorphism random_rated_iso(Rng& rng, const PetriWithRates& x) {
  PetriMorphism base = random_petri_iso(rng, x.net);
  FinFunction inv_t = base.transition_map().inverse();
  std::vector<Rational> rates(x.rates.size());
  for (std::size_t t = 0; t < rates.size(); ++t) rates[t] = x.rates[inv_t(t)];
  return PetriRatesMorphism(x, PetriWithRates(base.cod(), std::move(rates)),
                            base.transition_map(), base.place_map());
}

// Valid 2-morphism transporting a cell along invertible feet maps and an
// apex isomorphism; the workhorse for randomized coherence grids.
template <Instance I>
TwoMorphism<I> transport_cell_map(const StructuredCospan<I>& cell,
                                  const FinFunction& left,
                                  const FinFunction& right,
                                  const typename I::Morphism& apex_iso) {
  auto left_inv = I::discrete_map(left.inverse());
  auto right_inv = I::discrete_map(right.inverse());
  StructuredCospan<I> target(
      left.cod(), right.cod(), apex_iso.cod(),
      I::compose(apex_iso, I::compose(cell.leg_in, left_inv)),
      I::compose(apex_iso, I::compose(cell.leg_out, right_inv)));
  return TwoMorphism<I>(cell, target, left, right, apex_iso);
}

// The worked example nets: synthesis of water and its dissociation.
inline StructuredCospan<PetriCat> water_cell() {
  PetriNet alpha(FinSet{1}, FinSet{3}, {Multiset(FinSet{3}, {2, 1, 0})},
                 {Multiset(FinSet{3}, {0, 0, 1})});
  return make_cospan<PetriCat>(FinSet{3}, FinSet{1}, alpha, {0, 1, 1}, {2});
}

inline StructuredCospan<PetriCat> dissociation_cell() {
  PetriNet beta(FinSet{1}, FinSet{3}, {Multiset(FinSet{3}, {2, 0, 0})},
                {Multiset(FinSet{3}, {0, 1, 1})});
  return make_cospan<PetriCat>(FinSet{1}, FinSet{3}, beta, {0}, {1, 1, 2});
}

}  // namespace ocs::testing
