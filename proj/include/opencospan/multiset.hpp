#pragma once

#include <cstdint>
#include <vector>

#include "opencospan/finset.hpp"

namespace ocs {

// Element of the free commutative monoid on a skeletal finite set, stored as
// a dense count vector. Dense storage gives canonical equality and a cheap
// pushforward.
struct Multiset {
  FinSet base;
  std::vector<std::uint64_t> counts;

  Multiset() = default;
  Multiset(FinSet base_set, std::vector<std::uint64_t> count_vector);

  static Multiset zero(FinSet base_set);
  static Multiset unit(FinSet base_set, std::size_t element);

  std::uint64_t total() const;

  // Sum over fibers of g; the action of the free-commutative-monoid monad on
  // a function.
  Multiset pushforward(const FinFunction& g) const;

  friend bool operator==(const Multiset&, const Multiset&) = default;
};

Multiset operator+(const Multiset& a, const Multiset& b);
// Pointwise order; subtraction requires b <= a.
bool leq(const Multiset& a, const Multiset& b);
Multiset operator-(const Multiset& a, const Multiset& b);

}  // namespace ocs
