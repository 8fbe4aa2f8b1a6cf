#include "opencospan/multiset.hpp"

#include <numeric>

namespace ocs {

Multiset::Multiset(FinSet base_set, std::vector<std::uint64_t> count_vector)
    : base(base_set), counts(std::move(count_vector)) {
  require(counts.size() == base.size, ErrorKind::invalid_structure,
          "multiset counts must cover the base set");
}

Multiset Multiset::zero(FinSet base_set) {
  return Multiset(base_set, std::vector<std::uint64_t>(base_set.size, 0));
}

Multiset Multiset::unit(FinSet base_set, std::size_t element) {
  require(element < base_set.size, ErrorKind::index_out_of_range,
          "multiset generator outside base set");
  Multiset m = zero(base_set);
  m.counts[element] = 1;
  return m;
}

std::uint64_t Multiset::total() const {
  return std::accumulate(counts.begin(), counts.end(), std::uint64_t{0});
}

Multiset Multiset::pushforward(const FinFunction& g) const {
  require(g.dom() == base, ErrorKind::mismatched_boundary,
          "pushforward: function domain differs from multiset base");
  Multiset out = zero(g.cod());
  for (std::size_t i = 0; i < counts.size(); ++i) out.counts[g(i)] += counts[i];
  return out;
}

Multiset operator+(const Multiset& a, const Multiset& b) {
  require(a.base == b.base, ErrorKind::mismatched_boundary,
          "multiset sum: bases differ");
  Multiset out = a;
  for (std::size_t i = 0; i < out.counts.size(); ++i)
    out.counts[i] += b.counts[i];
  return out;
}

bool leq(const Multiset& a, const Multiset& b) {
  require(a.base == b.base, ErrorKind::mismatched_boundary,
          "multiset comparison: bases differ");
  for (std::size_t i = 0; i < a.counts.size(); ++i)
    if (a.counts[i] > b.counts[i]) return false;
  return true;
}

Multiset operator-(const Multiset& a, const Multiset& b) {
  require(leq(b, a), ErrorKind::invalid_structure,
          "multiset difference would be negative");
  Multiset out = a;
  for (std::size_t i = 0; i < out.counts.size(); ++i)
    out.counts[i] -= b.counts[i];
  return out;
}

}  // namespace ocs
