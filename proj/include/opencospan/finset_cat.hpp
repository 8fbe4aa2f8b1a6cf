#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "opencospan/finset.hpp"

namespace ocs {

// FinSet viewed as an instance of its own cospan machinery (the left adjoint
// is the identity). Plain cospans of finite sets live here; the hypergraph
// structure of any other instance is transported along this one.
struct FinSetCat {
  using Object = FinSet;
  using Morphism = FinFunction;

  static std::string name() { return "finset"; }

  static FinSet discrete(FinSet a) { return a; }
  static FinFunction discrete_map(const FinFunction& f) { return f; }
  static FinSet underlying(const FinSet& x) { return x; }
  static FinFunction underlying_map(const FinFunction& m) { return m; }
  static FinFunction leg(const FinFunction& points, const FinSet& x) {
    require(points.cod() == x, ErrorKind::index_out_of_range,
            "leg points must land in the set");
    return points;
  }

  static FinFunction identity(const FinSet& x) {
    return FinFunction::identity(x);
  }
  static FinFunction compose(const FinFunction& g, const FinFunction& f) {
    return ocs::compose(g, f);
  }
  static std::optional<FinFunction> inverse(const FinFunction& m) {
    if (!m.is_bijection()) return std::nullopt;
    return m.inverse();
  }

  static FinSet initial() { return FinSet{0}; }

  using Coproduct = FinCoproduct;
  static Coproduct coproduct(const FinSet& x, const FinSet& y) {
    return ocs::coproduct(x, y);
  }
  static FinFunction copair(const Coproduct& cop, const FinFunction& f,
                            const FinFunction& g) {
    require(cop.obj == f.dom() + g.dom(), ErrorKind::mismatched_boundary,
            "copair: legs do not cover the coproduct");
    return ocs::copair(f, g);
  }

  using Pushout = FinPushout;
  static Pushout pushout(const FinFunction& f, const FinFunction& g) {
    return ocs::pushout(f, g);
  }
  static FinFunction pushout_mediator(const Pushout& po, const FinFunction& h_left,
                                      const FinFunction& h_right) {
    return ocs::pushout_mediator(po, h_left, h_right);
  }

  using Frame = std::pair<FinFunction, FinFunction>;

  static std::optional<FinFunction> find_isomorphism(
      const FinSet& x, const FinSet& y, const std::vector<Frame>& frames = {}) {
    if (x != y) return std::nullopt;
    constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
    std::vector<std::size_t> map(x.size, kUnset);
    std::vector<bool> used(y.size, false);
    for (const Frame& fr : frames) {
      for (std::size_t i = 0; i < fr.first.dom().size; ++i) {
        std::size_t u = fr.first(i), v = fr.second(i);
        if (map[u] != kUnset) {
          if (map[u] != v) return std::nullopt;
          continue;
        }
        if (used[v]) return std::nullopt;
        map[u] = v;
        used[v] = true;
      }
    }
    std::size_t cursor = 0;
    for (std::size_t u = 0; u < map.size(); ++u) {
      if (map[u] != kUnset) continue;
      while (cursor < used.size() && used[cursor]) ++cursor;
      map[u] = cursor;
      used[cursor] = true;
    }
    return FinFunction(x, y, std::move(map));
  }

  static FinFunction canonical_iso(const FinSet& x,
                                   const std::vector<std::size_t>& seeds) {
    constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
    std::vector<std::size_t> map(x.size, kUnset);
    std::size_t next = 0;
    for (std::size_t s : seeds) {
      if (map[s] == kUnset) map[s] = next++;
    }
    for (std::size_t i = 0; i < map.size(); ++i) {
      if (map[i] == kUnset) map[i] = next++;
    }
    return FinFunction(x, x, std::move(map));
  }
};

}  // namespace ocs
