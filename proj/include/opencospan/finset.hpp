#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "opencospan/error.hpp"

namespace ocs {

// Skeletal finite set {0, ..., size-1}. Keeping sets skeletal makes the
// chosen colimits below literal functions and object equality decidable.
struct FinSet {
  std::size_t size = 0;

  friend bool operator==(const FinSet&, const FinSet&) = default;
};

inline FinSet operator+(FinSet a, FinSet b) { return FinSet{a.size + b.size}; }

// Total function between skeletal finite sets.
class FinFunction {
public:
  FinFunction() = default;
  FinFunction(FinSet dom, FinSet cod, std::vector<std::size_t> map);

  static FinFunction identity(FinSet a);
  static FinFunction initial(FinSet cod);  // unique map 0 -> cod
  static FinFunction constant(FinSet dom, FinSet cod, std::size_t value);

  const FinSet& dom() const { return dom_; }
  const FinSet& cod() const { return cod_; }
  const std::vector<std::size_t>& map() const { return map_; }
  std::size_t operator()(std::size_t i) const { return map_[i]; }

  bool is_bijection() const;
  FinFunction inverse() const;  // error: not-invertible

  friend bool operator==(const FinFunction&, const FinFunction&) = default;

private:
  FinSet dom_;
  FinSet cod_;
  std::vector<std::size_t> map_;
};

// g after f; error: mismatched-boundary when f.cod != g.dom.
FinFunction compose(const FinFunction& g, const FinFunction& f);

// Chosen coproduct a + b: the identity-range embedding and the
// offset-by-a.size embedding.
struct FinCoproduct {
  FinSet obj;
  FinFunction from_first;   // a -> a+b
  FinFunction from_second;  // b -> a+b
};
FinCoproduct coproduct(FinSet a, FinSet b);

// Mediating map [f, g] out of the chosen coproduct of the domains.
FinFunction copair(const FinFunction& f, const FinFunction& g);

// f + g acting blockwise on the chosen coproducts.
FinFunction sum(const FinFunction& f, const FinFunction& g);

// Fold map a+a -> a.
FinFunction fold(FinSet a);

// Block swap a+b -> b+a; self-inverse.
FinFunction block_swap(FinSet a, FinSet b);

// Chosen pushout of a span b <-f- a -g-> c: quotient of b + c by the
// equivalence generated by f(x) ~ g(x), classes renumbered in ascending
// order of their least member.
struct FinPushout {
  FinSet obj;
  FinFunction from_left;   // b -> obj
  FinFunction from_right;  // c -> obj
};
FinPushout pushout(const FinFunction& f, const FinFunction& g);

// Unique u with u . p1 = h1 and u . p2 = h2, where (p1, p2) are jointly
// surjective; error: non-commuting-cocone when no such u exists.
FinFunction mediator(const FinFunction& p1, const FinFunction& p2,
                     const FinFunction& h1, const FinFunction& h2);

FinFunction pushout_mediator(const FinPushout& po, const FinFunction& h_left,
                             const FinFunction& h_right);

// Values carried by quotient classes: every member of a class must agree,
// otherwise `conflict` is raised. Used to induce edge labels and rate
// constants along pushouts.
template <typename T>
std::vector<T> induce_along(const FinFunction& from_left,
                            const FinFunction& from_right,
                            const std::vector<T>& left,
                            const std::vector<T>& right, ErrorKind conflict,
                            const char* what) {
  require(left.size() == from_left.dom().size &&
              right.size() == from_right.dom().size,
          ErrorKind::invalid_structure, what);
  std::vector<T> values(from_left.cod().size);
  std::vector<bool> seen(values.size(), false);
  auto assign = [&](std::size_t at, const T& value) {
    if (seen[at] && !(values[at] == value)) raise(conflict, what);
    values[at] = value;
    seen[at] = true;
  };
  for (std::size_t i = 0; i < left.size(); ++i) assign(from_left(i), left[i]);
  for (std::size_t i = 0; i < right.size(); ++i) assign(from_right(i), right[i]);
  return values;
}

}  // namespace ocs
