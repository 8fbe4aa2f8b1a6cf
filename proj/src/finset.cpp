#include "opencospan/finset.hpp"

#include <algorithm>
#include <numeric>

namespace ocs {

FinFunction::FinFunction(FinSet dom, FinSet cod, std::vector<std::size_t> map)
    : dom_(dom), cod_(cod), map_(std::move(map)) {
  require(map_.size() == dom_.size, ErrorKind::invalid_structure,
          "function table length differs from domain size");
  for (std::size_t v : map_) {
    require(v < cod_.size, ErrorKind::invalid_structure,
            "function value outside codomain");
  }
}

FinFunction FinFunction::identity(FinSet a) {
  std::vector<std::size_t> table(a.size);
  std::iota(table.begin(), table.end(), 0);
  return FinFunction(a, a, std::move(table));
}

FinFunction FinFunction::initial(FinSet cod) {
  return FinFunction(FinSet{0}, cod, {});
}

FinFunction FinFunction::constant(FinSet dom, FinSet cod, std::size_t value) {
  require(value < cod.size, ErrorKind::invalid_structure,
          "constant value outside codomain");
  return FinFunction(dom, cod, std::vector<std::size_t>(dom.size, value));
}

bool FinFunction::is_bijection() const {
  if (dom_.size != cod_.size) return false;
  std::vector<bool> hit(cod_.size, false);
  for (std::size_t v : map_) {
    if (hit[v]) return false;
    hit[v] = true;
  }
  return true;
}

FinFunction FinFunction::inverse() const {
  require(is_bijection(), ErrorKind::not_invertible,
          "function is not a bijection");
  std::vector<std::size_t> table(dom_.size);
  for (std::size_t i = 0; i < map_.size(); ++i) table[map_[i]] = i;
  return FinFunction(cod_, dom_, std::move(table));
}

FinFunction compose(const FinFunction& g, const FinFunction& f) {
  require(f.cod() == g.dom(), ErrorKind::mismatched_boundary,
          "compose: codomain of the inner function differs from the domain "
          "of the outer one");
  std::vector<std::size_t> table(f.dom().size);
  for (std::size_t i = 0; i < table.size(); ++i) table[i] = g(f(i));
  return FinFunction(f.dom(), g.cod(), std::move(table));
}

FinCoproduct coproduct(FinSet a, FinSet b) {
  FinSet obj{a.size + b.size};
  std::vector<std::size_t> left(a.size), right(b.size);
  std::iota(left.begin(), left.end(), 0);
  std::iota(right.begin(), right.end(), a.size);
  return FinCoproduct{obj, FinFunction(a, obj, std::move(left)),
                      FinFunction(b, obj, std::move(right))};
}

FinFunction copair(const FinFunction& f, const FinFunction& g) {
  require(f.cod() == g.cod(), ErrorKind::mismatched_boundary,
          "copair: functions must share a codomain");
  std::vector<std::size_t> table;
  table.reserve(f.dom().size + g.dom().size);
  table.insert(table.end(), f.map().begin(), f.map().end());
  table.insert(table.end(), g.map().begin(), g.map().end());
  return FinFunction(f.dom() + g.dom(), f.cod(), std::move(table));
}

FinFunction sum(const FinFunction& f, const FinFunction& g) {
  FinCoproduct cod = coproduct(f.cod(), g.cod());
  return copair(compose(cod.from_first, f), compose(cod.from_second, g));
}

FinFunction fold(FinSet a) {
  return copair(FinFunction::identity(a), FinFunction::identity(a));
}

FinFunction block_swap(FinSet a, FinSet b) {
  FinCoproduct cod = coproduct(b, a);
  return copair(cod.from_second, cod.from_first);
}

namespace {

class UnionFind {
public:
  explicit UnionFind(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  std::size_t find(std::size_t i) {
    while (parent_[i] != i) {
      parent_[i] = parent_[parent_[i]];
      i = parent_[i];
    }
    return i;
  }

  void unite(std::size_t i, std::size_t j) {
    i = find(i);
    j = find(j);
    if (i == j) return;
    // Rooting at the smaller index keeps "least member" available per class.
    if (j < i) std::swap(i, j);
    parent_[j] = i;
  }

private:
  std::vector<std::size_t> parent_;
};

}  // namespace

FinPushout pushout(const FinFunction& f, const FinFunction& g) {
  require(f.dom() == g.dom(), ErrorKind::mismatched_boundary,
          "pushout: span legs must share a domain");
  const std::size_t nb = f.cod().size;
  const std::size_t nc = g.cod().size;
  UnionFind classes(nb + nc);
  for (std::size_t x = 0; x < f.dom().size; ++x) classes.unite(f(x), nb + g(x));

  // Renumber classes in ascending order of least member; with roots kept at
  // the least member, scanning 0..nb+nc-1 for roots does exactly that.
  std::vector<std::size_t> index(nb + nc, 0);
  std::size_t next = 0;
  for (std::size_t i = 0; i < nb + nc; ++i) {
    if (classes.find(i) == i) index[i] = next++;
  }
  FinSet obj{next};
  std::vector<std::size_t> left(nb), right(nc);
  for (std::size_t i = 0; i < nb; ++i) left[i] = index[classes.find(i)];
  for (std::size_t k = 0; k < nc; ++k) right[k] = index[classes.find(nb + k)];
  return FinPushout{obj, FinFunction(f.cod(), obj, std::move(left)),
                    FinFunction(g.cod(), obj, std::move(right))};
}

FinFunction mediator(const FinFunction& p1, const FinFunction& p2,
                     const FinFunction& h1, const FinFunction& h2) {
  require(p1.cod() == p2.cod(), ErrorKind::invalid_structure,
          "mediator: projections must share a codomain");
  require(h1.cod() == h2.cod(), ErrorKind::mismatched_boundary,
          "mediator: cocone legs must share a codomain");
  require(p1.dom() == h1.dom() && p2.dom() == h2.dom(),
          ErrorKind::mismatched_boundary,
          "mediator: cocone legs must match the projections' domains");
  const std::size_t n = p1.cod().size;
  std::vector<std::size_t> table(n, 0);
  std::vector<bool> assigned(n, false);
  auto place = [&](std::size_t at, std::size_t value) {
    if (assigned[at] && table[at] != value) {
      raise(ErrorKind::non_commuting_cocone,
            "mediator: cocone is not constant on a quotient class");
    }
    table[at] = value;
    assigned[at] = true;
  };
  for (std::size_t i = 0; i < p1.dom().size; ++i) place(p1(i), h1(i));
  for (std::size_t i = 0; i < p2.dom().size; ++i) place(p2(i), h2(i));
  for (bool seen : assigned) {
    require(seen, ErrorKind::non_commuting_cocone,
            "mediator: projections are not jointly surjective");
  }
  return FinFunction(p1.cod(), h1.cod(), std::move(table));
}

FinFunction pushout_mediator(const FinPushout& po, const FinFunction& h_left,
                             const FinFunction& h_right) {
  return mediator(po.from_left, po.from_right, h_left, h_right);
}

}  // namespace ocs
