#pragma once

#include <functional>

#include "opencospan/cmc.hpp"
#include "opencospan/cospan.hpp"

namespace ocs {

// A square (F0, F1, alpha) inducing a map between structured-cospan
// categories: F0 on the base, F1 on the instance categories (preserving
// pushouts), and the natural isomorphism alpha_a : L'(F0 a) -> F1(L a).
template <Instance Source, Instance Target>
struct InstanceSquare {
  std::function<FinSet(FinSet)> base_object;
  std::function<FinFunction(const FinFunction&)> base_map;
  std::function<typename Target::Object(const typename Source::Object&)>
      apex_object;
  std::function<typename Target::Morphism(const typename Source::Morphism&)>
      apex_map;
  std::function<typename Target::Morphism(FinSet)> comparison;  // alpha_a
};

template <Instance I>
InstanceSquare<I, I> identity_square() {
  return InstanceSquare<I, I>{
      [](FinSet a) { return a; },
      [](const FinFunction& f) { return f; },
      [](const typename I::Object& x) { return x; },
      [](const typename I::Morphism& m) { return m; },
      [](FinSet a) { return I::identity(I::discrete(a)); },
  };
}

// The free-CMC square over Petri nets: F0 = identity, F1 = petri_to_cmc,
// alpha the identity-on-objects comparison.
inline InstanceSquare<PetriCat, CmcCat> petri_to_cmc_square() {
  return InstanceSquare<PetriCat, CmcCat>{
      [](FinSet a) { return a; },
      [](const FinFunction& f) { return f; },
      [](const PetriNet& p) { return petri_to_cmc(p); },
      [](const PetriMorphism& m) {
        return CmcMorphism(petri_to_cmc(m.dom()), petri_to_cmc(m.cod()),
                           m.transition_map(), m.place_map());
      },
      [](FinSet a) {
        CmcMorphism id = CmcCat::identity(CmcCat::discrete(a));
        return CmcMorphism(CmcCat::discrete(a), petri_to_cmc(PetriNet::discrete(a)),
                           id.generator_map(), id.object_map());
      },
  };
}

template <Instance S, Instance T>
StructuredCospan<T> map_cospan(const InstanceSquare<S, T>& sq,
                               const StructuredCospan<S>& c) {
  FinSet in = sq.base_object(c.foot_in);
  FinSet out = sq.base_object(c.foot_out);
  auto apex = sq.apex_object(c.apex);
  auto leg_in = T::compose(sq.apex_map(c.leg_in), sq.comparison(c.foot_in));
  auto leg_out = T::compose(sq.apex_map(c.leg_out), sq.comparison(c.foot_out));
  return StructuredCospan<T>(in, out, apex, std::move(leg_in),
                             std::move(leg_out));
}

template <Instance S, Instance T>
TwoMorphism<T> map_two_morphism(const InstanceSquare<S, T>& sq,
                                const TwoMorphism<S>& t) {
  return TwoMorphism<T>(map_cospan(sq, t.src), map_cospan(sq, t.tgt),
                        sq.base_map(t.left), sq.base_map(t.right),
                        sq.apex_map(t.apex_map));
}

// The composition comparison cell: a globular invertible 2-morphism
// hcompose(map c1, map c2) => map(hcompose(c1, c2)), built with the
// universal property of the chosen pushout in the target.
template <Instance S, Instance T>
TwoMorphism<T> composition_comparison(const InstanceSquare<S, T>& sq,
                                      const StructuredCospan<S>& c1,
                                      const StructuredCospan<S>& c2) {
  auto source_side = hcompose_with_pushout(c1, c2);
  auto mapped1 = map_cospan(sq, c1);
  auto mapped2 = map_cospan(sq, c2);
  auto target_side = hcompose_with_pushout(mapped1, mapped2);
  auto mapped_composite = map_cospan(sq, source_side.cell);
  auto u = T::pushout_mediator(target_side.pushout,
                               sq.apex_map(source_side.pushout.from_left),
                               sq.apex_map(source_side.pushout.from_right));
  return globular_two_morphism<T>(target_side.cell, mapped_composite,
                                  std::move(u));
}

// The unit comparison cell U'(F0 a) => map(U(a)); its apex map is alpha_a.
template <Instance S, Instance T>
TwoMorphism<T> unit_comparison(const InstanceSquare<S, T>& sq, FinSet a) {
  return globular_two_morphism<T>(identity_cell<T>(sq.base_object(a)),
                                  map_cospan(sq, identity_cell<S>(a)),
                                  sq.comparison(a));
}

}  // namespace ocs
