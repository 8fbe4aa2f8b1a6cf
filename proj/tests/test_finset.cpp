#include <doctest.h>

#include <numeric>

#include "opencospan/finset.hpp"
#include "test_support.hpp"

using namespace ocs;
using ocs::testing::Rng;
using ocs::testing::random_function;

namespace {

// Independent oracle: the quotient of b+c by the closure of f(x) ~ g(x),
// computed by repeated relational sweeps rather than union-find, classes
// renumbered by ascending least member.
struct QuotientOracle {
  std::size_t classes = 0;
  std::vector<std::size_t> index;  // element of b+c -> class
  std::size_t merges = 0;
};

QuotientOracle quotient_oracle(const FinFunction& f, const FinFunction& g) {
  const std::size_t nb = f.cod().size;
  const std::size_t n = nb + g.cod().size;
  std::vector<std::vector<bool>> related(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) related[i][i] = true;
  for (std::size_t x = 0; x < f.dom().size; ++x) {
    related[f(x)][nb + g(x)] = true;
    related[nb + g(x)][f(x)] = true;
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k)
          if (related[i][j] && related[j][k] && !related[i][k]) {
            related[i][k] = true;
            changed = true;
          }
  }
  QuotientOracle out;
  out.index.assign(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (out.index[i] != n) continue;
    for (std::size_t j = i; j < n; ++j)
      if (related[i][j]) out.index[j] = out.classes;
    out.classes++;
  }
  out.merges = n - out.classes;
  return out;
}

// All functions dom -> cod as tables.
std::vector<std::vector<std::size_t>> all_tables(std::size_t dom,
                                                 std::size_t cod) {
  std::vector<std::vector<std::size_t>> out;
  if (dom == 0) {
    out.push_back({});
    return out;
  }
  if (cod == 0) return out;
  std::vector<std::size_t> table(dom, 0);
  while (true) {
    out.push_back(table);
    std::size_t i = 0;
    while (i < dom && ++table[i] == cod) {
      table[i] = 0;
      ++i;
    }
    if (i == dom) break;
  }
  return out;
}

}  // namespace

TEST_CASE("composition acts pointwise") {
  FinFunction f(FinSet{2}, FinSet{3}, {2, 0});
  CHECK(compose(FinFunction::identity(FinSet{3}), f) == f);

  FinFunction constant(FinSet{2}, FinSet{1}, {0, 0});
  FinFunction pick4(FinSet{1}, FinSet{5}, {4});
  CHECK(compose(pick4, constant) ==
        FinFunction(FinSet{2}, FinSet{5}, {4, 4}));

  CHECK_THROWS_AS(compose(f, pick4), Error);
}

TEST_CASE("composition agrees with the pointwise table oracle") {
  Rng rng(7001);
  for (int trial = 0; trial < 200; ++trial) {
    FinSet a{ocs::testing::pick(rng, 0, 5)};
    FinSet b{ocs::testing::pick(rng, 1, 5)};
    FinSet c{ocs::testing::pick(rng, 1, 5)};
    FinFunction f = random_function(rng, a, b);
    FinFunction g = random_function(rng, b, c);
    FinFunction h = compose(g, f);
    for (std::size_t i = 0; i < a.size; ++i) CHECK(h(i) == g.map()[f.map()[i]]);
  }
}

TEST_CASE("chosen coproduct is disjoint union by offset") {
  auto cop = coproduct(FinSet{2}, FinSet{3});
  CHECK(cop.obj.size == 5);
  CHECK(cop.from_first.map() == std::vector<std::size_t>{0, 1});
  CHECK(cop.from_second.map() == std::vector<std::size_t>{2, 3, 4});

  auto unit = coproduct(FinSet{0}, FinSet{4});
  CHECK(unit.obj.size == 4);
  CHECK(unit.from_second == FinFunction::identity(FinSet{4}));

  FinFunction f(FinSet{2}, FinSet{4}, {3, 1});
  FinFunction g(FinSet{3}, FinSet{4}, {0, 0, 2});
  CHECK(copair(f, g) == FinFunction(FinSet{5}, FinSet{4}, {3, 1, 0, 0, 2}));
}

TEST_CASE("coproduct injections are jointly surjective with disjoint images") {
  Rng rng(7002);
  for (int trial = 0; trial < 100; ++trial) {
    FinSet a{ocs::testing::pick(rng, 0, 6)};
    FinSet b{ocs::testing::pick(rng, 0, 6)};
    auto cop = coproduct(a, b);
    std::vector<int> hits(cop.obj.size, 0);
    for (std::size_t v : cop.from_first.map()) hits[v]++;
    for (std::size_t v : cop.from_second.map()) hits[v]++;
    for (int h : hits) CHECK(h == 1);
  }
}

TEST_CASE("copair gives the fold map and satisfies the triangles") {
  CHECK(fold(FinSet{3}) ==
        FinFunction(FinSet{6}, FinSet{3}, {0, 1, 2, 0, 1, 2}));

  FinFunction g(FinSet{3}, FinSet{2}, {1, 0, 1});
  CHECK(copair(FinFunction::initial(FinSet{2}), g) == g);

  Rng rng(7003);
  for (int trial = 0; trial < 100; ++trial) {
    FinSet a{ocs::testing::pick(rng, 0, 5)};
    FinSet b{ocs::testing::pick(rng, 0, 5)};
    FinSet c{ocs::testing::pick(rng, 1, 5)};
    FinFunction f = random_function(rng, a, c);
    FinFunction h = random_function(rng, b, c);
    auto cop = coproduct(a, b);
    FinFunction both = copair(f, h);
    CHECK(compose(both, cop.from_first) == f);
    CHECK(compose(both, cop.from_second) == h);
  }
}

TEST_CASE("chosen pushout matches the quotient oracle") {
  FinFunction f(FinSet{1}, FinSet{2}, {0});
  FinFunction g(FinSet{1}, FinSet{2}, {0});
  auto po = pushout(f, g);
  CHECK(po.obj.size == 3);
  CHECK(po.from_left.map() == std::vector<std::size_t>{0, 1});
  CHECK(po.from_right.map() == std::vector<std::size_t>{0, 2});

  Rng rng(7004);
  for (int trial = 0; trial < 200; ++trial) {
    FinSet a{ocs::testing::pick(rng, 0, 4)};
    FinSet b{ocs::testing::pick(rng, 1, 4)};
    FinSet c{ocs::testing::pick(rng, 1, 4)};
    FinFunction fa = random_function(rng, a, b);
    FinFunction ga = random_function(rng, a, c);
    auto result = pushout(fa, ga);
    auto oracle = quotient_oracle(fa, ga);
    CHECK(result.obj.size == oracle.classes);
    for (std::size_t i = 0; i < b.size; ++i)
      CHECK(result.from_left(i) == oracle.index[i]);
    for (std::size_t k = 0; k < c.size; ++k)
      CHECK(result.from_right(k) == oracle.index[b.size + k]);
    // Apex size accounting: merges performed by the quotient.
    CHECK(result.obj.size == b.size + c.size - oracle.merges);
  }
}

TEST_CASE("empty span gives the coproduct; identity span collapses") {
  FinFunction none_b = FinFunction::initial(FinSet{3});
  FinFunction none_c = FinFunction::initial(FinSet{2});
  auto po = pushout(none_b, none_c);
  auto cop = coproduct(FinSet{3}, FinSet{2});
  CHECK(po.obj == cop.obj);
  CHECK(po.from_left == cop.from_first);
  CHECK(po.from_right == cop.from_second);

  FinFunction id4 = FinFunction::identity(FinSet{4});
  auto collapsed = pushout(id4, id4);
  CHECK(collapsed.obj.size == 4);
  CHECK(collapsed.from_left == id4);
  CHECK(collapsed.from_right == id4);
}

TEST_CASE("pushout mediator is computed class by class") {
  FinFunction f(FinSet{1}, FinSet{2}, {0});
  FinFunction g(FinSet{1}, FinSet{2}, {0});
  auto po = pushout(f, g);

  CHECK(pushout_mediator(po, po.from_left, po.from_right) ==
        FinFunction::identity(po.obj));

  FinFunction hb(FinSet{2}, FinSet{2}, {0, 1});
  FinFunction hc(FinSet{2}, FinSet{2}, {0, 1});
  CHECK(pushout_mediator(po, hb, hc) ==
        FinFunction(FinSet{3}, FinSet{2}, {0, 1, 1}));

  FinFunction bad(FinSet{2}, FinSet{2}, {1, 0});
  CHECK_THROWS_AS(pushout_mediator(po, hb, bad), Error);
}

TEST_CASE("random commuting cocones factor through the pushout") {
  Rng rng(7005);
  for (int trial = 0; trial < 200; ++trial) {
    FinSet a{ocs::testing::pick(rng, 0, 4)};
    FinSet b{ocs::testing::pick(rng, 1, 4)};
    FinSet c{ocs::testing::pick(rng, 1, 4)};
    FinFunction f = random_function(rng, a, b);
    FinFunction g = random_function(rng, a, c);
    auto po = pushout(f, g);
    // Build a commuting cocone by post-composing the pushout legs.
    FinSet d{ocs::testing::pick(rng, 1, 4)};
    FinFunction squash = random_function(rng, po.obj, d);
    FinFunction hb = compose(squash, po.from_left);
    FinFunction hc = compose(squash, po.from_right);
    FinFunction u = pushout_mediator(po, hb, hc);
    CHECK(compose(u, po.from_left) == hb);
    CHECK(compose(u, po.from_right) == hc);
    CHECK(u == squash);  // uniqueness: legs are jointly surjective
  }
}

TEST_CASE("universal property, exhaustive over small spans") {
  // Smaller twin of the acceptance criterion; sizes <= 2 here.
  for (std::size_t a = 0; a <= 2; ++a)
    for (std::size_t b = 1; b <= 2; ++b)
      for (std::size_t c = 1; c <= 2; ++c)
        for (const auto& ft : all_tables(a, b))
          for (const auto& gt : all_tables(a, c)) {
            FinFunction f(FinSet{a}, FinSet{b}, ft);
            FinFunction g(FinSet{a}, FinSet{c}, gt);
            auto po = pushout(f, g);
            for (std::size_t d = 1; d <= 2; ++d)
              for (const auto& hbt : all_tables(b, d))
                for (const auto& hct : all_tables(c, d)) {
                  FinFunction hb(FinSet{b}, FinSet{d}, hbt);
                  FinFunction hc(FinSet{c}, FinSet{d}, hct);
                  if (compose(hb, f) != compose(hc, g)) continue;
                  std::size_t mediators = 0;
                  for (const auto& ut : all_tables(po.obj.size, d)) {
                    FinFunction u(po.obj, FinSet{d}, ut);
                    if (compose(u, po.from_left) == hb &&
                        compose(u, po.from_right) == hc)
                      ++mediators;
                  }
                  CHECK(mediators == 1);
                }
          }
}

TEST_CASE("block swap is the self-inverse block permutation") {
  FinFunction swap = block_swap(FinSet{2}, FinSet{3});
  CHECK(swap.map() == std::vector<std::size_t>{3, 4, 0, 1, 2});
  CHECK(compose(block_swap(FinSet{3}, FinSet{2}), swap) ==
        FinFunction::identity(FinSet{5}));
}

TEST_CASE("bijection inverse round-trips; non-bijections are rejected") {
  FinFunction perm(FinSet{3}, FinSet{3}, {2, 0, 1});
  CHECK(compose(perm.inverse(), perm) == FinFunction::identity(FinSet{3}));
  FinFunction squash(FinSet{2}, FinSet{1}, {0, 0});
  CHECK_THROWS_AS(squash.inverse(), Error);
}
