#include <doctest.h>

#include "opencospan/cospan.hpp"
#include "opencospan/finset_cat.hpp"
#include "test_support.hpp"

using namespace ocs;
using namespace ocs::testing;

namespace {

StructuredCospan<GraphCat> edge_cell() {
  Graph edge(FinSet{1}, FinSet{2}, FinFunction(FinSet{1}, FinSet{2}, {0}),
             FinFunction(FinSet{1}, FinSet{2}, {1}));
  return make_cospan<GraphCat>(FinSet{1}, FinSet{1}, edge, {0}, {1});
}

// The pair of open graphs from the renamed-edge example: same path diamond,
// the chord stored at a different index.
StructuredCospan<GraphCat> diamond(bool chord_in_middle, std::size_t out_node) {
  FinSet edges{5};
  FinSet nodes{4};
  std::vector<std::size_t> src, tgt;
  if (chord_in_middle) {
    src = {0, 0, 1, 1, 2};
    tgt = {1, 2, 2, 3, 3};
  } else {
    src = {0, 0, 1, 2, 1};
    tgt = {1, 2, 3, 3, 2};
  }
  Graph g(edges, nodes, FinFunction(edges, nodes, src),
          FinFunction(edges, nodes, tgt));
  return make_cospan<GraphCat>(FinSet{1}, FinSet{1}, g, {0}, {out_node});
}

template <Instance I>
StructuredCospan<I> random_cell(Rng& rng, FinSet in, FinSet out);

template <>
StructuredCospan<GraphCat> random_cell<GraphCat>(Rng& rng, FinSet in,
                                                 FinSet out) {
  return random_graph_cell(rng, in, out);
}

template <>
StructuredCospan<PetriCat> random_cell<PetriCat>(Rng& rng, FinSet in,
                                                 FinSet out) {
  return random_petri_cell(rng, in, out, 3, 2);
}

template <Instance I>
std::vector<StructuredCospan<I>> random_chain(Rng& rng, std::size_t length) {
  std::vector<FinSet> feet(length + 1);
  for (auto& f : feet) f = FinSet{pick(rng, 0, 3)};
  std::vector<StructuredCospan<I>> chain;
  for (std::size_t i = 0; i < length; ++i)
    chain.push_back(random_cell<I>(rng, feet[i], feet[i + 1]));
  return chain;
}

template <Instance I>
typename I::Morphism random_apex_iso(Rng& rng, const typename I::Object& x);

template <>
GraphCat::Morphism random_apex_iso<GraphCat>(Rng& rng, const Graph& x) {
  return random_graph_iso(rng, x);
}

template <>
PetriCat::Morphism random_apex_iso<PetriCat>(Rng& rng, const PetriNet& x) {
  return random_petri_iso(rng, x);
}

template <Instance I>
void check_pentagon(Rng& rng) {
  auto chain = random_chain<I>(rng, 4);
  const auto& c1 = chain[0];
  const auto& c2 = chain[1];
  const auto& c3 = chain[2];
  const auto& c4 = chain[3];
  // ((c1 c2) c3) c4  =>  c1 (c2 (c3 c4)), both ways around the pentagon.
  auto route_long = vcompose<I>(
      vcompose<I>(hcompose2<I>(associator<I>(c1, c2, c3),
                               identity_two_morphism<I>(c4)),
                  associator<I>(c1, hcompose<I>(c2, c3), c4)),
      hcompose2<I>(identity_two_morphism<I>(c1), associator<I>(c2, c3, c4)));
  auto route_short = vcompose<I>(associator<I>(hcompose<I>(c1, c2), c3, c4),
                                 associator<I>(c1, c2, hcompose<I>(c3, c4)));
  CHECK(route_long == route_short);
}

template <Instance I>
void check_triangle(Rng& rng) {
  auto chain = random_chain<I>(rng, 2);
  const auto& c1 = chain[0];
  const auto& c2 = chain[1];
  auto via_associator = vcompose<I>(
      associator<I>(c1, identity_cell<I>(c1.foot_out), c2),
      hcompose2<I>(identity_two_morphism<I>(c1), left_unitor<I>(c2)));
  auto direct = hcompose2<I>(right_unitor<I>(c1), identity_two_morphism<I>(c2));
  CHECK(via_associator == direct);
}

template <Instance I>
void check_hexagons(Rng& rng) {
  auto c1 = random_cell<I>(rng, FinSet{pick(rng, 0, 2)}, FinSet{pick(rng, 0, 2)});
  auto c2 = random_cell<I>(rng, FinSet{pick(rng, 0, 2)}, FinSet{pick(rng, 0, 2)});
  auto c3 = random_cell<I>(rng, FinSet{pick(rng, 0, 2)}, FinSet{pick(rng, 0, 2)});
  // Tensor on cells is strictly associative under the skeletal chosen
  // colimits, so the hexagons reduce to two-step factorizations.
  auto lhs1 = braiding_cell<I>(c1, tensor_cells<I>(c2, c3));
  auto rhs1 = vcompose<I>(
      tensor_two_morphisms<I>(braiding_cell<I>(c1, c2),
                              identity_two_morphism<I>(c3)),
      tensor_two_morphisms<I>(identity_two_morphism<I>(c2),
                              braiding_cell<I>(c1, c3)));
  CHECK(lhs1 == rhs1);

  auto lhs2 = braiding_cell<I>(tensor_cells<I>(c1, c2), c3);
  auto rhs2 = vcompose<I>(
      tensor_two_morphisms<I>(identity_two_morphism<I>(c1),
                              braiding_cell<I>(c2, c3)),
      tensor_two_morphisms<I>(braiding_cell<I>(c1, c3),
                              identity_two_morphism<I>(c2)));
  CHECK(lhs2 == rhs2);
}

template <Instance I>
void check_interchange(Rng& rng) {
  auto chain = random_chain<I>(rng, 2);
  const auto& c1 = chain[0];
  const auto& c2 = chain[1];
  FinFunction p = random_permutation(rng, c1.foot_in);
  FinFunction q = random_permutation(rng, c1.foot_out);
  FinFunction r = random_permutation(rng, c2.foot_out);
  auto t1 = transport_cell_map<I>(c1, p, q, random_apex_iso<I>(rng, c1.apex));
  auto t2 = transport_cell_map<I>(c2, q, r, random_apex_iso<I>(rng, c2.apex));
  FinFunction p2 = random_permutation(rng, c1.foot_in);
  FinFunction q2 = random_permutation(rng, c1.foot_out);
  FinFunction r2 = random_permutation(rng, c2.foot_out);
  auto t3 = transport_cell_map<I>(t1.tgt, p2, q2,
                                  random_apex_iso<I>(rng, t1.tgt.apex));
  auto t4 = transport_cell_map<I>(t2.tgt, q2, r2,
                                  random_apex_iso<I>(rng, t2.tgt.apex));
  CHECK(vcompose<I>(hcompose2<I>(t1, t2), hcompose2<I>(t3, t4)) ==
        hcompose2<I>(vcompose<I>(t1, t3), vcompose<I>(t2, t4)));
}

}  // namespace

TEST_CASE("identity cells") {
  auto unit = identity_cell<GraphCat>(FinSet{0});
  CHECK(unit.apex == GraphCat::initial());

  auto two = identity_cell<GraphCat>(FinSet{2});
  CHECK(two.apex.nodes.size == 2);
  CHECK(two.apex.edges.size == 0);

  auto c = edge_cell();
  CHECK(cospans_isomorphic<GraphCat>(
      hcompose<GraphCat>(identity_cell<GraphCat>(FinSet{1}), c), c));
}

TEST_CASE("horizontal composition pushes out over the shared foot") {
  auto c = edge_cell();
  auto path = hcompose<GraphCat>(c, c);
  CHECK(path.apex.nodes.size == 3);
  CHECK(path.apex.edges.size == 2);
  CHECK(cospans_isomorphic<GraphCat>(
      hcompose<GraphCat>(c, identity_cell<GraphCat>(FinSet{1})), c));

  auto water = water_cell();
  auto dissoc = dissociation_cell();
  auto composite = hcompose<PetriCat>(water, dissoc);
  CHECK(composite.apex.places.size == 5);
  CHECK(composite.apex.transitions.size == 2);
  CHECK(composite.foot_in.size == 3);
  CHECK(composite.foot_out.size == 3);

  CHECK_THROWS_AS(hcompose<PetriCat>(water, water), Error);
}

TEST_CASE("unitors are invertible globular cells") {
  Rng rng(9001);
  for (int trial = 0; trial < 30; ++trial) {
    auto c = random_graph_cell(rng, FinSet{pick(rng, 0, 3)},
                               FinSet{pick(rng, 0, 3)});
    auto lambda = left_unitor<GraphCat>(c);
    auto rho = right_unitor<GraphCat>(c);
    CHECK(lambda.globular());
    CHECK(rho.globular());
    CHECK(is_invertible<GraphCat>(lambda));
    CHECK(is_invertible<GraphCat>(rho));
    auto lambda_inv = invert_two_morphism<GraphCat>(lambda);
    CHECK(vcompose<GraphCat>(lambda_inv, lambda) ==
          identity_two_morphism<GraphCat>(c));
  }
}

TEST_CASE("vertical composition is strict") {
  Rng rng(9002);
  for (int trial = 0; trial < 30; ++trial) {
    auto c = random_graph_cell(rng, FinSet{pick(rng, 1, 3)},
                               FinSet{pick(rng, 1, 3)});
    auto t1 = transport_cell_map<GraphCat>(
        c, random_permutation(rng, c.foot_in),
        random_permutation(rng, c.foot_out), random_graph_iso(rng, c.apex));
    auto t2 = transport_cell_map<GraphCat>(
        t1.tgt, random_permutation(rng, c.foot_in),
        random_permutation(rng, c.foot_out),
        random_graph_iso(rng, t1.tgt.apex));
    auto t3 = transport_cell_map<GraphCat>(
        t2.tgt, random_permutation(rng, c.foot_in),
        random_permutation(rng, c.foot_out),
        random_graph_iso(rng, t2.tgt.apex));
    CHECK(vcompose<GraphCat>(vcompose<GraphCat>(t1, t2), t3) ==
          vcompose<GraphCat>(t1, vcompose<GraphCat>(t2, t3)));
    CHECK(vcompose<GraphCat>(identity_two_morphism<GraphCat>(c), t1) == t1);
    CHECK(vcompose<GraphCat>(t1, identity_two_morphism<GraphCat>(t1.tgt)) == t1);
    // Constructors re-verify the commuting squares of every composite.
  }
}

TEST_CASE("horizontal composition of 2-morphisms mediates the pushouts") {
  auto c = edge_cell();
  auto both = hcompose2<GraphCat>(identity_two_morphism<GraphCat>(c),
                                  identity_two_morphism<GraphCat>(c));
  CHECK(both == identity_two_morphism<GraphCat>(hcompose<GraphCat>(c, c)));
}

TEST_CASE("interchange of horizontal and vertical composition") {
  Rng rng(9003);
  for (int trial = 0; trial < 60; ++trial) check_interchange<GraphCat>(rng);
  for (int trial = 0; trial < 40; ++trial) check_interchange<PetriCat>(rng);
}

TEST_CASE("tensor adds feet and apexes") {
  Rng rng(9004);
  auto a = random_graph_cell(rng, FinSet{1}, FinSet{1}, 2, 1);
  auto b = random_graph_cell(rng, FinSet{2}, FinSet{0}, 3, 2);
  auto t = tensor_cells<GraphCat>(a, b);
  CHECK(t.foot_in.size == 3);
  CHECK(t.foot_out.size == 1);
  CHECK(t.apex.nodes.size == a.apex.nodes.size + b.apex.nodes.size);
  CHECK(t.apex.edges.size == a.apex.edges.size + b.apex.edges.size);

  auto unit = identity_cell<GraphCat>(FinSet{0});
  CHECK(tensor_cells<GraphCat>(unit, a) == a);
  CHECK(tensor_cells<GraphCat>(a, unit) == a);

  auto water = water_cell();
  auto dissoc = dissociation_cell();
  auto side_by_side = tensor_cells<PetriCat>(water, dissoc);
  CHECK(side_by_side.foot_in.size == 4);
  CHECK(side_by_side.foot_out.size == 4);
  CHECK(side_by_side.apex.places.size == 6);
  CHECK(side_by_side.apex.transitions.size == 2);
}

TEST_CASE("associator is an invertible globular comparison") {
  auto c = edge_cell();
  auto assoc = associator<GraphCat>(c, c, c);
  CHECK(assoc.globular());
  CHECK(is_invertible<GraphCat>(assoc));
  CHECK(assoc.src.apex.nodes.size == 4);
  CHECK(assoc.src.apex.edges.size == 3);
  auto inverse = invert_two_morphism<GraphCat>(assoc);
  CHECK(vcompose<GraphCat>(assoc, inverse) ==
        identity_two_morphism<GraphCat>(assoc.src));
}

TEST_CASE("pentagon identity on random chains") {
  Rng rng(9005);
  for (int trial = 0; trial < 40; ++trial) check_pentagon<GraphCat>(rng);
  for (int trial = 0; trial < 25; ++trial) check_pentagon<PetriCat>(rng);
}

TEST_CASE("triangle identity on random chains") {
  Rng rng(9006);
  for (int trial = 0; trial < 40; ++trial) check_triangle<GraphCat>(rng);
  for (int trial = 0; trial < 25; ++trial) check_triangle<PetriCat>(rng);
}

TEST_CASE("braiding is a self-inverse block swap") {
  auto swap = block_swap(FinSet{2}, FinSet{3});
  CHECK(swap.map() == std::vector<std::size_t>{3, 4, 0, 1, 2});

  Rng rng(9007);
  for (int trial = 0; trial < 30; ++trial) {
    auto c1 = random_graph_cell(rng, FinSet{pick(rng, 0, 2)},
                                FinSet{pick(rng, 0, 2)});
    auto c2 = random_graph_cell(rng, FinSet{pick(rng, 0, 2)},
                                FinSet{pick(rng, 0, 2)});
    auto braid = braiding_cell<GraphCat>(c1, c2);
    CHECK(is_invertible<GraphCat>(braid));
    CHECK(vcompose<GraphCat>(braid, braiding_cell<GraphCat>(c2, c1)) ==
          identity_two_morphism<GraphCat>(tensor_cells<GraphCat>(c1, c2)));
  }
}

TEST_CASE("object-level braiding witness is a self-inverse block swap") {
  auto witness = braiding_cells<GraphCat>(FinSet{2}, FinSet{3});
  CHECK(witness.left == block_swap(FinSet{2}, FinSet{3}));
  CHECK(is_invertible<GraphCat>(witness));
  CHECK(vcompose<GraphCat>(witness, braiding_cells<GraphCat>(FinSet{3}, FinSet{2})) ==
        identity_two_morphism<GraphCat>(tensor_cells<GraphCat>(
            identity_cell<GraphCat>(FinSet{2}), identity_cell<GraphCat>(FinSet{3}))));
}

TEST_CASE("braiding is natural in both cells") {
  Rng rng(9008);
  for (int trial = 0; trial < 30; ++trial) {
    auto c1 = random_graph_cell(rng, FinSet{pick(rng, 1, 2)},
                                FinSet{pick(rng, 1, 2)});
    auto c2 = random_graph_cell(rng, FinSet{pick(rng, 1, 2)},
                                FinSet{pick(rng, 1, 2)});
    auto t1 = transport_cell_map<GraphCat>(
        c1, random_permutation(rng, c1.foot_in),
        random_permutation(rng, c1.foot_out), random_graph_iso(rng, c1.apex));
    auto t2 = transport_cell_map<GraphCat>(
        c2, random_permutation(rng, c2.foot_in),
        random_permutation(rng, c2.foot_out), random_graph_iso(rng, c2.apex));
    CHECK(vcompose<GraphCat>(tensor_two_morphisms<GraphCat>(t1, t2),
                             braiding_cell<GraphCat>(t1.tgt, t2.tgt)) ==
          vcompose<GraphCat>(braiding_cell<GraphCat>(c1, c2),
                             tensor_two_morphisms<GraphCat>(t2, t1)));
  }
}

TEST_CASE("hexagon identities") {
  Rng rng(9009);
  for (int trial = 0; trial < 30; ++trial) check_hexagons<GraphCat>(rng);
  for (int trial = 0; trial < 20; ++trial) check_hexagons<PetriCat>(rng);
}

TEST_CASE("companions satisfy both companion equations") {
  Rng rng(9010);
  auto check_equations = [](const FinFunction& f) {
    auto comp = companion<GraphCat>(f);
    // Vertical pasting of the two cells is the unit square on f.
    CHECK(vcompose<GraphCat>(comp.from_identity, comp.to_identity) ==
          unit_two_morphism<GraphCat>(f));
    // Horizontal pasting collapses to the unitors.
    CHECK(vcompose<GraphCat>(
              hcompose2<GraphCat>(comp.from_identity, comp.to_identity),
              right_unitor<GraphCat>(comp.cell)) ==
          left_unitor<GraphCat>(comp.cell));
  };
  check_equations(FinFunction::identity(FinSet{3}));
  check_equations(FinFunction(FinSet{2}, FinSet{2}, {1, 0}));
  for (int trial = 0; trial < 20; ++trial)
    check_equations(random_permutation(rng, FinSet{pick(rng, 0, 4)}));

  // Identity companions are the identity cells.
  auto id_comp = companion<GraphCat>(FinFunction::identity(FinSet{2}));
  CHECK(id_comp.cell == identity_cell<GraphCat>(FinSet{2}));

  FinFunction squash(FinSet{2}, FinSet{1}, {0, 0});
  CHECK_THROWS_AS(companion<GraphCat>(squash), Error);
}

TEST_CASE("conjoints mirror companions") {
  FinFunction swap(FinSet{2}, FinSet{2}, {1, 0});
  auto conj = conjoint<GraphCat>(swap);
  auto comp = companion<GraphCat>(swap);
  CHECK(conj.cell.foot_in == comp.cell.foot_out);
  CHECK(conj.cell.foot_out == comp.cell.foot_in);
  CHECK(conj.cell.leg_in == comp.cell.leg_out);
  CHECK(conj.cell.leg_out == comp.cell.leg_in);
  CHECK(vcompose<GraphCat>(conj.from_identity, conj.to_identity) ==
        unit_two_morphism<GraphCat>(swap));
}

TEST_CASE("tensor-compose comparison cell is invertible") {
  Rng rng(9011);
  for (int trial = 0; trial < 30; ++trial) {
    FinSet a1{pick(rng, 0, 2)}, b1{pick(rng, 0, 2)}, c1{pick(rng, 0, 2)};
    FinSet a2{pick(rng, 0, 2)}, b2{pick(rng, 0, 2)}, c2{pick(rng, 0, 2)};
    auto m1 = random_graph_cell(rng, a1, b1);
    auto n1 = random_graph_cell(rng, a2, b2);
    auto m2 = random_graph_cell(rng, b1, c1);
    auto n2 = random_graph_cell(rng, b2, c2);
    auto chi = tensor_interchange_comparison<GraphCat>(m1, n1, m2, n2);
    CHECK(chi.globular());
    CHECK(is_invertible<GraphCat>(chi));
    CHECK(chi.src == hcompose<GraphCat>(tensor_cells<GraphCat>(m1, n1),
                                        tensor_cells<GraphCat>(m2, n2)));
    CHECK(chi.tgt == tensor_cells<GraphCat>(hcompose<GraphCat>(m1, m2),
                                            hcompose<GraphCat>(n1, n2)));
  }
}

TEST_CASE("iso classes identify the renamed-edge open graphs") {
  auto original = diamond(false, 3);
  auto renamed = diamond(true, 3);
  CHECK(original.apex != renamed.apex);  // different edge order on the nose
  CHECK(iso_class<GraphCat>(original) == iso_class<GraphCat>(renamed));

  auto retargeted = diamond(true, 0);
  CHECK(!(iso_class<GraphCat>(original) == iso_class<GraphCat>(retargeted)));

  CHECK(iso_class<GraphCat>(original) == iso_class<GraphCat>(original));
}

TEST_CASE("decategorified composition is strictly associative and unital") {
  Rng rng(9012);
  for (int trial = 0; trial < 25; ++trial) {
    auto chain = random_chain<GraphCat>(rng, 3);
    auto k1 = iso_class<GraphCat>(chain[0]);
    auto k2 = iso_class<GraphCat>(chain[1]);
    auto k3 = iso_class<GraphCat>(chain[2]);
    CHECK(decat_compose<GraphCat>(decat_compose<GraphCat>(k1, k2), k3) ==
          decat_compose<GraphCat>(k1, decat_compose<GraphCat>(k2, k3)));
    auto id_left =
        iso_class<GraphCat>(identity_cell<GraphCat>(chain[0].foot_in));
    CHECK(decat_compose<GraphCat>(id_left, k1) == k1);
  }
}

TEST_CASE("water composite class is independent of presentation") {
  Rng rng(9013);
  auto water = water_cell();
  auto dissoc = dissociation_cell();
  auto reference = iso_class<PetriCat>(hcompose<PetriCat>(water, dissoc));
  for (int trial = 0; trial < 10; ++trial) {
    auto w = transport<PetriCat>(water, random_petri_iso(rng, water.apex));
    auto d = transport<PetriCat>(dissoc, random_petri_iso(rng, dissoc.apex));
    CHECK(iso_class<PetriCat>(hcompose<PetriCat>(w, d)) == reference);
  }
}
