#pragma once

#include <concepts>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "opencospan/finset.hpp"

namespace ocs {

// A cocomplete instance category X together with the left adjoint
// L : FinSet -> X (written `discrete`). One kernel below serves every
// instance satisfying this interface.
template <typename I>
concept Instance = requires(const typename I::Object& x,
                            const typename I::Object& y,
                            const typename I::Morphism& m, FinSet a,
                            const FinFunction& fn,
                            const std::vector<typename I::Frame>& frames,
                            const std::vector<std::size_t>& seeds) {
  typename I::Object;
  typename I::Morphism;
  { I::name() } -> std::convertible_to<std::string>;
  { I::discrete(a) } -> std::same_as<typename I::Object>;
  { I::discrete_map(fn) } -> std::same_as<typename I::Morphism>;
  { I::leg(fn, x) } -> std::same_as<typename I::Morphism>;
  { I::underlying(x) } -> std::same_as<FinSet>;
  { I::underlying_map(m) } -> std::same_as<FinFunction>;
  { I::identity(x) } -> std::same_as<typename I::Morphism>;
  { I::compose(m, m) } -> std::same_as<typename I::Morphism>;
  { I::inverse(m) } -> std::same_as<std::optional<typename I::Morphism>>;
  { I::initial() } -> std::same_as<typename I::Object>;
  { I::coproduct(x, y) } -> std::same_as<typename I::Coproduct>;
  { I::pushout(m, m) } -> std::same_as<typename I::Pushout>;
  { I::find_isomorphism(x, y, frames) }
      -> std::same_as<std::optional<typename I::Morphism>>;
  { I::canonical_iso(x, seeds) } -> std::same_as<typename I::Morphism>;
  { m.dom() == m.cod() } -> std::convertible_to<bool>;
};

// f + g on the chosen coproducts.
template <typename I>
typename I::Morphism sum_map(const typename I::Morphism& f,
                             const typename I::Morphism& g) {
  auto dom = I::coproduct(f.dom(), g.dom());
  auto cod = I::coproduct(f.cod(), g.cod());
  return I::copair(dom, I::compose(cod.from_first, f),
                   I::compose(cod.from_second, g));
}

// Block-swap isomorphism x + y -> y + x in the instance category.
template <typename I>
typename I::Morphism swap_map(const typename I::Object& x,
                              const typename I::Object& y) {
  auto dom = I::coproduct(x, y);
  auto cod = I::coproduct(y, x);
  return I::copair(dom, cod.from_second, cod.from_first);
}

// Builds a cell from point images of the feet.
template <typename I>
auto make_cospan(FinSet foot_in, FinSet foot_out,
                 const typename I::Object& apex,
                 const std::vector<std::size_t>& in_points,
                 const std::vector<std::size_t>& out_points);

// Horizontal 1-cell: a diagram L(foot_in) -> apex <- L(foot_out).
template <Instance I>
struct StructuredCospan {
  FinSet foot_in;
  FinSet foot_out;
  typename I::Object apex;
  typename I::Morphism leg_in;
  typename I::Morphism leg_out;

  StructuredCospan(FinSet in, FinSet out, typename I::Object apex_object,
                   typename I::Morphism in_leg, typename I::Morphism out_leg)
      : foot_in(in), foot_out(out), apex(std::move(apex_object)),
        leg_in(std::move(in_leg)), leg_out(std::move(out_leg)) {
    require(leg_in.dom() == I::discrete(foot_in) &&
                leg_out.dom() == I::discrete(foot_out),
            ErrorKind::invalid_structure,
            "cospan legs must start at the discrete feet");
    require(leg_in.cod() == apex && leg_out.cod() == apex,
            ErrorKind::invalid_structure, "cospan legs must end at the apex");
  }

  friend bool operator==(const StructuredCospan&, const StructuredCospan&) = default;
};

// 2-morphism: the commuting rectangle with feet maps left/right and apex map.
template <Instance I>
struct TwoMorphism {
  StructuredCospan<I> src;
  StructuredCospan<I> tgt;
  FinFunction left;   // src.foot_in  -> tgt.foot_in
  FinFunction right;  // src.foot_out -> tgt.foot_out
  typename I::Morphism apex_map;

  TwoMorphism(StructuredCospan<I> source, StructuredCospan<I> target,
              FinFunction left_foot, FinFunction right_foot,
              typename I::Morphism apex)
      : src(std::move(source)), tgt(std::move(target)),
        left(std::move(left_foot)), right(std::move(right_foot)),
        apex_map(std::move(apex)) {
    require(left.dom() == src.foot_in && left.cod() == tgt.foot_in &&
                right.dom() == src.foot_out && right.cod() == tgt.foot_out,
            ErrorKind::invalid_structure,
            "2-morphism feet do not match the cells");
    require(apex_map.dom() == src.apex && apex_map.cod() == tgt.apex,
            ErrorKind::invalid_structure,
            "2-morphism apex map does not match the cells");
    require(I::compose(apex_map, src.leg_in) ==
                I::compose(tgt.leg_in, I::discrete_map(left)),
            ErrorKind::invalid_structure,
            "2-morphism: input square does not commute");
    require(I::compose(apex_map, src.leg_out) ==
                I::compose(tgt.leg_out, I::discrete_map(right)),
            ErrorKind::invalid_structure,
            "2-morphism: output square does not commute");
  }

  bool globular() const {
    return left == FinFunction::identity(src.foot_in) &&
           right == FinFunction::identity(src.foot_out);
  }

  friend bool operator==(const TwoMorphism&, const TwoMorphism&) = default;
};

template <typename I>
auto make_cospan(FinSet foot_in, FinSet foot_out,
                 const typename I::Object& apex,
                 const std::vector<std::size_t>& in_points,
                 const std::vector<std::size_t>& out_points) {
  FinFunction in_map(foot_in, I::underlying(apex), in_points);
  FinFunction out_map(foot_out, I::underlying(apex), out_points);
  return StructuredCospan<I>(foot_in, foot_out, apex, I::leg(in_map, apex),
                             I::leg(out_map, apex));
}

template <Instance I>
StructuredCospan<I> identity_cell(FinSet a) {
  auto la = I::discrete(a);
  return StructuredCospan<I>(a, a, la, I::identity(la), I::identity(la));
}

template <Instance I>
TwoMorphism<I> identity_two_morphism(const StructuredCospan<I>& c) {
  return TwoMorphism<I>(c, c, FinFunction::identity(c.foot_in),
                        FinFunction::identity(c.foot_out), I::identity(c.apex));
}

// The unit 2-morphism U_f on a vertical morphism f.
template <Instance I>
TwoMorphism<I> unit_two_morphism(const FinFunction& f) {
  return TwoMorphism<I>(identity_cell<I>(f.dom()), identity_cell<I>(f.cod()), f,
                        f, I::discrete_map(f));
}

template <Instance I>
TwoMorphism<I> globular_two_morphism(const StructuredCospan<I>& src,
                                     const StructuredCospan<I>& tgt,
                                     typename I::Morphism apex_map) {
  return TwoMorphism<I>(src, tgt, FinFunction::identity(src.foot_in),
                        FinFunction::identity(src.foot_out), std::move(apex_map));
}

// Horizontal composition; the apex is the chosen pushout over the shared foot.
template <Instance I>
struct ComposedCell {
  StructuredCospan<I> cell;
  typename I::Pushout pushout;
};

template <Instance I>
ComposedCell<I> hcompose_with_pushout(const StructuredCospan<I>& c1,
                                      const StructuredCospan<I>& c2) {
  require(c1.foot_out == c2.foot_in, ErrorKind::mismatched_boundary,
          "hcompose: output foot of the first cell differs from the input "
          "foot of the second");
  auto po = I::pushout(c1.leg_out, c2.leg_in);
  StructuredCospan<I> cell(c1.foot_in, c2.foot_out, po.obj,
                           I::compose(po.from_left, c1.leg_in),
                           I::compose(po.from_right, c2.leg_out));
  return ComposedCell<I>{std::move(cell), std::move(po)};
}

template <Instance I>
StructuredCospan<I> hcompose(const StructuredCospan<I>& c1,
                             const StructuredCospan<I>& c2) {
  return hcompose_with_pushout(c1, c2).cell;
}

// Vertical composition of 2-morphisms is componentwise and strict.
template <Instance I>
TwoMorphism<I> vcompose(const TwoMorphism<I>& t1, const TwoMorphism<I>& t2) {
  require(t1.tgt == t2.src, ErrorKind::mismatched_boundary,
          "vcompose: target of the first 2-morphism differs from the source "
          "of the second");
  return TwoMorphism<I>(t1.src, t2.tgt, compose(t2.left, t1.left),
                        compose(t2.right, t1.right),
                        I::compose(t2.apex_map, t1.apex_map));
}

// Horizontal composition of 2-morphisms; the apex map is the mediator
// between the two chosen pushouts.
template <Instance I>
TwoMorphism<I> hcompose2(const TwoMorphism<I>& t1, const TwoMorphism<I>& t2) {
  require(t1.src.foot_out == t2.src.foot_in &&
              t1.tgt.foot_out == t2.tgt.foot_in && t1.right == t2.left,
          ErrorKind::mismatched_boundary,
          "hcompose2: 2-morphisms are not horizontally adjacent");
  auto top = hcompose_with_pushout(t1.src, t2.src);
  auto bottom = hcompose_with_pushout(t1.tgt, t2.tgt);
  auto apex = I::pushout_mediator(
      top.pushout, I::compose(bottom.pushout.from_left, t1.apex_map),
      I::compose(bottom.pushout.from_right, t2.apex_map));
  return TwoMorphism<I>(top.cell, bottom.cell, t1.left, t2.right,
                        std::move(apex));
}

// Tensor on cells: chosen coproducts on feet and apex. Under the skeletal
// chosen colimits the comparison L(a + a') = L(a) + L(a') is an identity;
// this is verified here rather than assumed.
template <Instance I>
StructuredCospan<I> tensor_cells(const StructuredCospan<I>& c1,
                                 const StructuredCospan<I>& c2) {
  FinSet in = c1.foot_in + c2.foot_in;
  FinSet out = c1.foot_out + c2.foot_out;
  auto apex = I::coproduct(c1.apex, c2.apex);
  auto lin = I::coproduct(I::discrete(c1.foot_in), I::discrete(c2.foot_in));
  auto lout = I::coproduct(I::discrete(c1.foot_out), I::discrete(c2.foot_out));
  require(lin.obj == I::discrete(in) && lout.obj == I::discrete(out),
          ErrorKind::invalid_structure,
          "chosen colimits fail L(a + b) = L(a) + L(b)");
  auto leg_in = I::copair(lin, I::compose(apex.from_first, c1.leg_in),
                          I::compose(apex.from_second, c2.leg_in));
  auto leg_out = I::copair(lout, I::compose(apex.from_first, c1.leg_out),
                           I::compose(apex.from_second, c2.leg_out));
  return StructuredCospan<I>(in, out, apex.obj, std::move(leg_in),
                             std::move(leg_out));
}

// Tensor on 2-morphisms (the monoidal structure of the category of arrows).
template <Instance I>
TwoMorphism<I> tensor_two_morphisms(const TwoMorphism<I>& t1,
                                    const TwoMorphism<I>& t2) {
  return TwoMorphism<I>(tensor_cells<I>(t1.src, t2.src),
                        tensor_cells<I>(t1.tgt, t2.tgt), sum(t1.left, t2.left),
                        sum(t1.right, t2.right),
                        sum_map<I>(t1.apex_map, t2.apex_map));
}

template <Instance I>
bool is_invertible(const TwoMorphism<I>& t) {
  if (!t.left.is_bijection() || !t.right.is_bijection()) return false;
  auto inv = I::inverse(t.apex_map);
  return inv.has_value();
}

template <Instance I>
TwoMorphism<I> invert_two_morphism(const TwoMorphism<I>& t) {
  auto inv = I::inverse(t.apex_map);
  require(t.left.is_bijection() && t.right.is_bijection() && inv.has_value(),
          ErrorKind::not_invertible, "2-morphism is not invertible");
  return TwoMorphism<I>(t.tgt, t.src, t.left.inverse(), t.right.inverse(),
                        *inv);
}

// Globular iso (c1 . c2) . c3 => c1 . (c2 . c3) built with the universal
// property of the chosen pushouts.
template <Instance I>
TwoMorphism<I> associator(const StructuredCospan<I>& c1,
                          const StructuredCospan<I>& c2,
                          const StructuredCospan<I>& c3) {
  auto left12 = hcompose_with_pushout(c1, c2);
  auto left = hcompose_with_pushout(left12.cell, c3);
  auto right23 = hcompose_with_pushout(c2, c3);
  auto right = hcompose_with_pushout(c1, right23.cell);

  // Cocone of the left tower into the right apex.
  auto into_w12 = I::pushout_mediator(
      left12.pushout, right.pushout.from_left,
      I::compose(right.pushout.from_right, right23.pushout.from_left));
  auto u = I::pushout_mediator(
      left.pushout, into_w12,
      I::compose(right.pushout.from_right, right23.pushout.from_right));
  return globular_two_morphism<I>(left.cell, right.cell, std::move(u));
}

// Globular iso identity_cell(a) . c => c.
template <Instance I>
TwoMorphism<I> left_unitor(const StructuredCospan<I>& c) {
  auto composite = hcompose_with_pushout(identity_cell<I>(c.foot_in), c);
  auto u = I::pushout_mediator(composite.pushout, c.leg_in, I::identity(c.apex));
  return globular_two_morphism<I>(composite.cell, c, std::move(u));
}

// Globular iso c . identity_cell(b) => c.
template <Instance I>
TwoMorphism<I> right_unitor(const StructuredCospan<I>& c) {
  auto composite = hcompose_with_pushout(c, identity_cell<I>(c.foot_out));
  auto u = I::pushout_mediator(composite.pushout, I::identity(c.apex), c.leg_out);
  return globular_two_morphism<I>(composite.cell, c, std::move(u));
}

// The braiding's arrow component at a pair of cells: the block-swap
// 2-morphism tensor(c1, c2) => tensor(c2, c1). Self-inverse.
template <Instance I>
TwoMorphism<I> braiding_cell(const StructuredCospan<I>& c1,
                             const StructuredCospan<I>& c2) {
  return TwoMorphism<I>(tensor_cells<I>(c1, c2), tensor_cells<I>(c2, c1),
                        block_swap(c1.foot_in, c2.foot_in),
                        block_swap(c1.foot_out, c2.foot_out),
                        swap_map<I>(c1.apex, c2.apex));
}

// The braiding witness at a pair of objects: the block-swap cell on the
// identity 1-cells, tensor(U_a, U_b) => tensor(U_b, U_a). Self-inverse.
template <Instance I>
TwoMorphism<I> braiding_cells(FinSet a, FinSet b) {
  return braiding_cell<I>(identity_cell<I>(a), identity_cell<I>(b));
}

// Companion data for an invertible vertical morphism f : a -> b.
template <Instance I>
struct Companion {
  StructuredCospan<I> cell;    // L(a) -L(f)-> L(b) <-1- L(b)
  TwoMorphism<I> to_identity;  // cell => U_b with feet (f, 1)
  TwoMorphism<I> from_identity;  // U_a => cell with feet (1, f)
};

template <Instance I>
Companion<I> companion(const FinFunction& f) {
  require(f.is_bijection(), ErrorKind::not_invertible,
          "companions are formed on invertible vertical morphisms");
  auto lb = I::discrete(f.cod());
  StructuredCospan<I> cell(f.dom(), f.cod(), lb, I::discrete_map(f),
                           I::identity(lb));
  TwoMorphism<I> alpha(cell, identity_cell<I>(f.cod()), f,
                       FinFunction::identity(f.cod()), I::identity(lb));
  TwoMorphism<I> beta(identity_cell<I>(f.dom()), cell,
                      FinFunction::identity(f.dom()), f, I::discrete_map(f));
  return Companion<I>{std::move(cell), std::move(alpha), std::move(beta)};
}

// Conjoint: the companion in the horizontal opposite, i.e. the mirror cospan
// L(b) -1-> L(b) <-L(f)- L(a).
template <Instance I>
Companion<I> conjoint(const FinFunction& f) {
  require(f.is_bijection(), ErrorKind::not_invertible,
          "conjoints are formed on invertible vertical morphisms");
  auto lb = I::discrete(f.cod());
  StructuredCospan<I> cell(f.cod(), f.dom(), lb, I::identity(lb),
                           I::discrete_map(f));
  TwoMorphism<I> alpha(cell, identity_cell<I>(f.cod()),
                       FinFunction::identity(f.cod()), f, I::identity(lb));
  TwoMorphism<I> beta(identity_cell<I>(f.dom()), cell, f,
                      FinFunction::identity(f.dom()), I::discrete_map(f));
  return Companion<I>{std::move(cell), std::move(alpha), std::move(beta)};
}

// The braiding 1-cell at the decategorified level: companion of the block
// swap.
template <Instance I>
StructuredCospan<I> braid_cospan(FinSet a, FinSet b) {
  return companion<I>(block_swap(a, b)).cell;
}

// Globular comparison chi : tensor(c1,c2) . tensor(c3,c4) =>
// tensor(c1 . c3, c2 . c4); invertible.
template <Instance I>
TwoMorphism<I> tensor_interchange_comparison(const StructuredCospan<I>& c1,
                                             const StructuredCospan<I>& c2,
                                             const StructuredCospan<I>& c3,
                                             const StructuredCospan<I>& c4) {
  auto lhs = hcompose_with_pushout(tensor_cells<I>(c1, c2),
                                   tensor_cells<I>(c3, c4));
  auto p13 = hcompose_with_pushout(c1, c3);
  auto p24 = hcompose_with_pushout(c2, c4);
  auto rhs_cell = tensor_cells<I>(p13.cell, p24.cell);
  auto rhs_apex = I::coproduct(p13.cell.apex, p24.cell.apex);

  auto h_top = I::copair(
      I::coproduct(c1.apex, c2.apex),
      I::compose(rhs_apex.from_first, p13.pushout.from_left),
      I::compose(rhs_apex.from_second, p24.pushout.from_left));
  auto h_bottom = I::copair(
      I::coproduct(c3.apex, c4.apex),
      I::compose(rhs_apex.from_first, p13.pushout.from_right),
      I::compose(rhs_apex.from_second, p24.pushout.from_right));
  auto u = I::pushout_mediator(lhs.pushout, h_top, h_bottom);
  return globular_two_morphism<I>(lhs.cell, rhs_cell, std::move(u));
}

// Leg-preserving isomorphism between two cells with equal feet; this is the
// notion of sameness that defines the decategorified category.
template <Instance I>
std::optional<typename I::Morphism> cospan_isomorphism(
    const StructuredCospan<I>& c1, const StructuredCospan<I>& c2) {
  if (c1.foot_in != c2.foot_in || c1.foot_out != c2.foot_out)
    return std::nullopt;
  std::vector<typename I::Frame> frames;
  frames.emplace_back(c1.leg_in, c2.leg_in);
  frames.emplace_back(c1.leg_out, c2.leg_out);
  return I::find_isomorphism(c1.apex, c2.apex, frames);
}

template <Instance I>
bool cospans_isomorphic(const StructuredCospan<I>& c1,
                        const StructuredCospan<I>& c2) {
  return cospan_isomorphism<I>(c1, c2).has_value();
}

template <Instance I>
StructuredCospan<I> transport(const StructuredCospan<I>& c,
                              const typename I::Morphism& iso) {
  return StructuredCospan<I>(c.foot_in, c.foot_out, iso.cod(),
                             I::compose(iso, c.leg_in),
                             I::compose(iso, c.leg_out));
}

// Canonical representative: apex renumbered legs-first so that classes
// serialize stably. Equality of classes is decided by constrained search,
// not by representative comparison.
template <Instance I>
struct CanonicalCell {
  StructuredCospan<I> cell;
  typename I::Morphism iso;  // original apex -> renumbered apex
};

template <Instance I>
CanonicalCell<I> canonicalize(const StructuredCospan<I>& c) {
  std::vector<std::size_t> seeds;
  FinFunction in_points = I::underlying_map(c.leg_in);
  FinFunction out_points = I::underlying_map(c.leg_out);
  seeds.insert(seeds.end(), in_points.map().begin(), in_points.map().end());
  seeds.insert(seeds.end(), out_points.map().begin(), out_points.map().end());
  auto iso = I::canonical_iso(c.apex, seeds);
  return CanonicalCell<I>{transport<I>(c, iso), iso};
}

template <Instance I>
StructuredCospan<I> canonical_cell(const StructuredCospan<I>& c) {
  return canonicalize<I>(c).cell;
}

template <Instance I>
struct CospanIsoClass {
  StructuredCospan<I> representative;

  explicit CospanIsoClass(const StructuredCospan<I>& cell)
      : representative(canonical_cell<I>(cell)) {}

  friend bool operator==(const CospanIsoClass& a, const CospanIsoClass& b) {
    return cospans_isomorphic<I>(a.representative, b.representative);
  }
};

template <Instance I>
CospanIsoClass<I> iso_class(const StructuredCospan<I>& c) {
  return CospanIsoClass<I>(c);
}

template <Instance I>
CospanIsoClass<I> decat_compose(const CospanIsoClass<I>& k1,
                                const CospanIsoClass<I>& k2) {
  return iso_class<I>(hcompose<I>(k1.representative, k2.representative));
}

template <Instance I>
CospanIsoClass<I> decat_tensor(const CospanIsoClass<I>& k1,
                               const CospanIsoClass<I>& k2) {
  return iso_class<I>(tensor_cells<I>(k1.representative, k2.representative));
}

}  // namespace ocs
