#pragma once

#include <string>
#include <vector>

#include "opencospan/cospan.hpp"

namespace ocs {

// Frobenius generators carried by every object of a structured-cospan
// category: merge, spawn, split, delete.
template <Instance I>
struct FrobeniusKit {
  FinSet object;
  StructuredCospan<I> mult;    // a+a -> a
  StructuredCospan<I> unit;    // 0 -> a
  StructuredCospan<I> comult;  // a -> a+a
  StructuredCospan<I> counit;  // a -> 0
};

// Lift of a plain cospan in FinSet to a structured cospan (the bijective-on-
// objects functor that transports the Frobenius structure).
template <Instance I>
StructuredCospan<I> from_finset_cospan(const FinFunction& leg_in,
                                       const FinFunction& leg_out) {
  require(leg_in.cod() == leg_out.cod(), ErrorKind::mismatched_boundary,
          "cospan legs must share an apex");
  auto apex = I::discrete(leg_in.cod());
  return StructuredCospan<I>(leg_in.dom(), leg_out.dom(), apex,
                             I::discrete_map(leg_in), I::discrete_map(leg_out));
}

template <Instance I>
FrobeniusKit<I> frobenius_generators(FinSet a) {
  FinFunction nabla = fold(a);
  FinFunction id_a = FinFunction::identity(a);
  FinFunction bang = FinFunction::initial(a);
  return FrobeniusKit<I>{
      a,
      from_finset_cospan<I>(nabla, id_a),  // L(a+a) -L(nabla)-> L(a) <-1- L(a)
      from_finset_cospan<I>(bang, id_a),
      from_finset_cospan<I>(id_a, nabla),
      from_finset_cospan<I>(id_a, bang),
  };
}

struct LawResult {
  std::string law;
  bool holds;
};

// The permutation (a+b)+(a+b) -> (a+a)+(b+b) used to induce the Frobenius
// structure on a tensor product from the factors.
inline FinFunction middle_interchange(FinSet a, FinSet b) {
  FinSet dom = (a + b) + (a + b);
  std::vector<std::size_t> table(dom.size);
  for (std::size_t i = 0; i < a.size; ++i) table[i] = i;
  for (std::size_t i = 0; i < b.size; ++i) table[a.size + i] = 2 * a.size + i;
  for (std::size_t i = 0; i < a.size; ++i)
    table[a.size + b.size + i] = a.size + i;
  for (std::size_t i = 0; i < b.size; ++i)
    table[2 * a.size + b.size + i] = 2 * a.size + b.size + i;
  return FinFunction(dom, dom, std::move(table));
}

// Checks the special commutative Frobenius laws up to leg-preserving
// isomorphism of cospans (equality in the decategorified category).
template <Instance I>
std::vector<LawResult> check_frobenius(FinSet a) {
  FrobeniusKit<I> kit = frobenius_generators<I>(a);
  auto id_cell = identity_cell<I>(a);
  std::vector<LawResult> report;
  auto check = [&](const std::string& law, const StructuredCospan<I>& lhs,
                   const StructuredCospan<I>& rhs) {
    report.push_back(LawResult{law, cospans_isomorphic<I>(lhs, rhs)});
  };

  check("associativity",
        hcompose<I>(tensor_cells<I>(kit.mult, id_cell), kit.mult),
        hcompose<I>(tensor_cells<I>(id_cell, kit.mult), kit.mult));
  check("left-unit", hcompose<I>(tensor_cells<I>(kit.unit, id_cell), kit.mult),
        id_cell);
  check("right-unit", hcompose<I>(tensor_cells<I>(id_cell, kit.unit), kit.mult),
        id_cell);
  check("coassociativity",
        hcompose<I>(kit.comult, tensor_cells<I>(kit.comult, id_cell)),
        hcompose<I>(kit.comult, tensor_cells<I>(id_cell, kit.comult)));
  check("left-counit",
        hcompose<I>(kit.comult, tensor_cells<I>(kit.counit, id_cell)), id_cell);
  check("right-counit",
        hcompose<I>(kit.comult, tensor_cells<I>(id_cell, kit.counit)), id_cell);
  check("commutativity", hcompose<I>(braid_cospan<I>(a, a), kit.mult), kit.mult);
  check("frobenius-left",
        hcompose<I>(tensor_cells<I>(kit.comult, id_cell),
                    tensor_cells<I>(id_cell, kit.mult)),
        hcompose<I>(kit.mult, kit.comult));
  check("frobenius-right",
        hcompose<I>(tensor_cells<I>(id_cell, kit.comult),
                    tensor_cells<I>(kit.mult, id_cell)),
        hcompose<I>(kit.mult, kit.comult));
  check("special", hcompose<I>(kit.comult, kit.mult), id_cell);
  return report;
}

// Frobenius structure on a+b induced from the structures on a and b by
// tensoring; class-equal to the kit built on a+b directly.
template <Instance I>
FrobeniusKit<I> tensor_induced_kit(FinSet a, FinSet b) {
  FrobeniusKit<I> ka = frobenius_generators<I>(a);
  FrobeniusKit<I> kb = frobenius_generators<I>(b);
  auto rearrange = companion<I>(middle_interchange(a, b)).cell;
  auto unrearrange = companion<I>(middle_interchange(a, b).inverse()).cell;
  return FrobeniusKit<I>{
      a + b,
      hcompose<I>(rearrange, tensor_cells<I>(ka.mult, kb.mult)),
      tensor_cells<I>(ka.unit, kb.unit),
      hcompose<I>(tensor_cells<I>(ka.comult, kb.comult), unrearrange),
      tensor_cells<I>(ka.counit, kb.counit),
  };
}

}  // namespace ocs
